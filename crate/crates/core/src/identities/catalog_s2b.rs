//! Sums with weight `c(n,k)` at arguments built from `F_p`, `L_p`, `√α³`,
//! `i` and the golden-ratio powers.

use super::terms::*;
use super::*;
use crate::algebra::{Integer, Rational};
use crate::chebyshev::{cheb_poly_uncapped, Kind, Poly};

fn csum(n: i64, g: impl Fn(i64) -> Rational) -> Rational {
    rsum(0, n, |k| cw(n, k) * g(k))
}

fn gen_lhs(n: i64, sign: i64) -> Poly {
    let plus = Poly::new(vec![r(1), r(1)]);
    let minus = Poly::new(vec![r(1), r(-1)]);
    let mut acc = Poly::zero();
    for k in 0..=n {
        let e = k as u32;
        let inner = &plus.pow(e) + &minus.pow(e).scale(&r(sign));
        acc = &acc + &inner.scale(&(pwi(-2, k) * cw(n, k)));
    }
    acc
}

fn gen_upper_lhs(n: i64) -> Poly {
    gen_lhs(n, -1)
}
fn gen_upper_rhs(n: i64) -> Poly {
    cheb_poly_uncapped(Kind::T, n as usize).scale(&(neg1(n) - r(1)))
}
fn gen_lower_lhs(n: i64) -> Poly {
    gen_lhs(n, 1)
}
fn gen_lower_rhs(n: i64) -> Poly {
    cheb_poly_uncapped(Kind::T, n as usize).scale(&(neg1(n) + r(1)))
}

fn nz_p(p: &Point) -> bool {
    p.p() != 0
}
fn nz_q(p: &Point) -> bool {
    p.q() != 0
}

/// `√5·F_p/L_p`.
fn h51(p: i64) -> Elem {
    rt5() * (f(p) / l(p))
}

/// `L_p/(√5·F_p)`.
fn inv_h51(p: i64) -> Elem {
    rt5() * (l(p) / (r(5) * f(p)))
}

fn rt5_pow(n: i64) -> Elem {
    rt5().pow(n)
}

pub(super) fn entries() -> Vec<IdentityRecord> {
    use TowerKind::{Gauss, Q as QQ, Q5, Q5I};
    let mut v = vec![
        IdentityRecord::new("lem2.alg", "T_n(rt(5) F_p/L_p) = ((rt(5) F_p - 2)^n + (rt(5) F_p + 2)^n)/(2 L_p^n), p odd", Q5, &[P, N0])
            .when("p odd", |p| odd(p.p()))
            .lhs(|p| tn(p.n(), &h51(p.p())))
            .rhs(|p| {
                let (n, pp) = (p.n(), p.p());
                let x = rt5() * f(pp);
                ((&x + &r(-2)).pow(n) + (&x + &r(2)).pow(n)) * (pw(&l(pp), -n) * fr(1, 2))
            }),
        IdentityRecord::new("lem2.wry", "T_n(L_{2p}/(rt(5) F_{2p})) = ((5F_p^2)^n + (L_p^2)^n)/(2 (rt(5) F_{2p})^n), p != 0", Q5, &[P, N0])
            .when("p != 0", nz_p)
            .lhs(|p| tn(p.n(), &inv_h51(2 * p.p())))
            .rhs(|p| {
                let (n, pp) = (p.n(), p.p());
                let top = pw(&(r(5) * f(pp) * f(pp)), n) + pw(&l(pp), 2 * n);
                in5(top * fr(1, 2) / pw(&f(2 * pp), n)) / rt5_pow(n)
            }),
        IdentityRecord::new(
            "note.1",
            "sum_{k=0}^{2n} (4/5)^k C(2n+k,2n-k) (4^k - (-1)^k L_{2p}^(2k))/((2n+k) F_{2p}^(2k)) = 0, p != 0",
            QQ,
            &[N1, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, pp) = (p.n(), p.p());
            let (lp, fp) = (l(2 * pp), f(2 * pp));
            rat(rsum(0, 2 * n, |k| {
                pw(&fr(4, 5), k) * bw(2 * n, k) * (pwi(4, k) - neg1(k) * pw(&lp, 2 * k))
                    / (r(2 * n + k) * pw(&fp, 2 * k))
            }))
        })
        .rhs(|_| rat(r(0))),
        IdentityRecord::new(
            "note.2",
            "sum_{k=0}^{2n} (4/5)^k C(2n+k,2n-k) (4^k + (-1)^k)/(2n+k) (L_{2p}/F_{2p})^(2k) = (625^k F_p^(8n) + L_p^(8n))/(2n 25^n F_{2p}^(4n)), p != 0",
            QQ,
            &[N1, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, pp) = (p.n(), p.p());
            let ratio = l(2 * pp) / f(2 * pp);
            rat(rsum(0, 2 * n, |k| {
                pw(&fr(4, 5), k) * bw(2 * n, k) * (pwi(4, k) + neg1(k)) / r(2 * n + k) * pw(&ratio, 2 * k)
            }))
        })
        .rhs(|p| rat(note2_rhs(p.n(), p.p())))
        .typo(
            "the free k in 625^k is read as n; the sum only closes when the summand is \
             (4^k + (-1)^k L_{2p}^(2k))/F_{2p}^(2k), which is the corrected form",
        )
        .corrected_lhs(|p| {
            let (n, pp) = (p.n(), p.p());
            let (lp, fp) = (l(2 * pp), f(2 * pp));
            rat(rsum(0, 2 * n, |k| {
                pw(&fr(4, 5), k) * bw(2 * n, k) * (pwi(4, k) + neg1(k) * pw(&lp, 2 * k))
                    / (r(2 * n + k) * pw(&fp, 2 * k))
            }))
        })
        .corrected(|p| rat(note2_rhs(p.n(), p.p()))),
        IdentityRecord::new("thm5.1", "sum (16/5)^k c(n,k) F_{2p}^(2(n-k)) = (25^n F_p^(4n) + L_p^(4n))/(2 5^n), p != 0", QQ, &[N1, P])
            .when("p != 0", nz_p)
            .lhs(|p| {
                let (n, pp) = (p.n(), p.p());
                rat(csum(n, |k| pw(&fr(16, 5), k) * pw(&f(2 * pp), 2 * (n - k))))
            })
            .rhs(|p| rat(thm5_top(p.n(), p.p()) / (r(2) * pwi(5, p.n())))),
        IdentityRecord::new(
            "thm5.2",
            "sum (-1)^(n-k) (4/5)^k c(n,k) (F_{2p}/L_{2p})^(2(n-k)) = (25^n F_p^(4n) + L_p^(4n))/(2 5^n L_{2p}^(2n)), p != 0",
            QQ,
            &[N1, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, pp) = (p.n(), p.p());
            let ratio = f(2 * pp) / l(2 * pp);
            rat(csum(n, |k| neg1(n - k) * pw(&fr(4, 5), k) * pw(&ratio, 2 * (n - k))))
        })
        .rhs(|p| {
            let (n, pp) = (p.n(), p.p());
            rat(thm5_top(n, pp) / (r(2) * pwi(5, n) * pw(&l(2 * pp), 2 * n)))
        }),
        IdentityRecord::new("thm5.part1", "sum (16/5)^k c(n,k) = (25^n + 1)/(2 5^n)", QQ, &[N1])
            .lhs(|p| rat(csum(p.n(), |k| pw(&fr(16, 5), k))))
            .rhs(|p| rat((pwi(25, p.n()) + r(1)) / (r(2) * pwi(5, p.n())))),
        IdentityRecord::new("thm5.part2", "sum (-1)^(n-k) (36/5)^k c(n,k) = (25^n + 1)/(2 5^n)", QQ, &[N1])
            .lhs(|p| {
                let n = p.n();
                rat(csum(n, |k| neg1(n - k) * pw(&fr(36, 5), k)))
            })
            .rhs(|p| rat((pwi(25, p.n()) + r(1)) / (r(2) * pwi(5, p.n())))),
        IdentityRecord::new(
            "rem1.1",
            "sum (5/16)^(n-k) c(n,k) F_{2p}^(2(n-k)) = sum C(2n,2k) L_{2p}^(2(n-k))/4^(2n-k)",
            QQ,
            &[N1, P],
        )
        .lhs(|p| {
            let (n, pp) = (p.n(), p.p());
            rat(csum(n, |k| pw(&fr(5, 16), n - k) * pw(&f(2 * pp), 2 * (n - k))))
        })
        .rhs(|p| {
            let (n, pp) = (p.n(), p.p());
            rat(rsum(0, n, |k| ch(2 * n, 2 * k) * pw(&l(2 * pp), 2 * (n - k)) / pwi(4, 2 * n - k)))
        }),
        IdentityRecord::new(
            "rem1.2",
            "sum (-1)^(n-k) (5/4)^(n-k) c(n,k) (F_{2p}/L_{2p})^(2(n-k)) = sum C(2n,2k) 4^(k-n)/L_{2p}^(2k)",
            QQ,
            &[N1, P],
        )
        .lhs(|p| {
            let (n, pp) = (p.n(), p.p());
            let ratio = f(2 * pp) / l(2 * pp);
            rat(csum(n, |k| neg1(n - k) * pw(&fr(5, 4), n - k) * pw(&ratio, 2 * (n - k))))
        })
        .rhs(|p| {
            let (n, pp) = (p.n(), p.p());
            rat(rsum(0, n, |k| ch(2 * n, 2 * k) * pwi(4, k - n) / pw(&l(2 * pp), 2 * k)))
        }),
        IdentityRecord::new(
            "thm6.lucas",
            "sum (-4)^k c(n,k) L_{pk+t}/L_p^k = T_n(rt(5) F_p/L_p) (L_t if n even, -rt(5) F_t if n odd), p odd",
            Q5,
            &[P, N1, T],
        )
        .when("p odd", |p| odd(p.p()))
        .lhs(|p| {
            let (n, pp, t) = (p.n(), p.p(), p.t());
            rat(csum(n, |k| pwi(-4, k) * l(pp * k + t) / pw(&l(pp), k)))
        })
        .rhs(|p| {
            let (n, t) = (p.n(), p.t());
            let c = if even(n) { in5(l(t)) } else { rt5() * (-f(t)) };
            tn(n, &h51(p.p())) * c
        }),
        IdentityRecord::new(
            "thm6.fib",
            "sum (-4)^k c(n,k) F_{pk+t}/L_p^k = T_n(rt(5) F_p/L_p) (F_t if n even, -L_t/rt(5) if n odd), p odd",
            Q5,
            &[P, N1, T],
        )
        .when("p odd", |p| odd(p.p()))
        .lhs(|p| {
            let (n, pp, t) = (p.n(), p.p(), p.t());
            rat(csum(n, |k| pwi(-4, k) * f(pp * k + t) / pw(&l(pp), k)))
        })
        .rhs(|p| {
            let (n, t) = (p.n(), p.t());
            let c = if even(n) { in5(f(t)) } else { rt5() * (-l(t) / r(5)) };
            tn(n, &h51(p.p())) * c
        }),
        IdentityRecord::new("cor1.1", "sum (-4)^k c(n,k) L_{pk}/L_p^k = 0, p odd, n odd", QQ, &[P, N1])
            .when("p odd", |p| odd(p.p()))
            .when("n odd", |p| odd(p.n()))
            .lhs(|p| {
                let (n, pp) = (p.n(), p.p());
                rat(csum(n, |k| pwi(-4, k) * l(pp * k) / pw(&l(pp), k)))
            })
            .rhs(|_| rat(r(0))),
        IdentityRecord::new("cor1.2", "sum (-4)^k c(n,k) F_{pk}/L_p^k = 0, p odd, n even", QQ, &[P, N1])
            .when("p odd", |p| odd(p.p()))
            .when("n even", |p| even(p.n()))
            .lhs(|p| {
                let (n, pp) = (p.n(), p.p());
                rat(csum(n, |k| pwi(-4, k) * f(pp * k) / pw(&l(pp), k)))
            })
            .rhs(|_| rat(r(0))),
        IdentityRecord::new("cor2.1", "sum (-4)^k c(n,k) L_{k+t} = L_t L_{3n}/2 (n even), -5 F_t F_{3n}/2 (n odd)", QQ, &[N1, T])
            .lhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(csum(n, |k| pwi(-4, k) * l(k + t)))
            })
            .rhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(if even(n) { l(t) * l(3 * n) * fr(1, 2) } else { f(t) * f(3 * n) * fr(-5, 2) })
            }),
        IdentityRecord::new("cor2.2", "sum (-4)^k c(n,k) F_{k+t} = F_t L_{3n}/2 (n even), -L_t F_{3n}/2 (n odd)", QQ, &[N1, T])
            .lhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(csum(n, |k| pwi(-4, k) * f(k + t)))
            })
            .rhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(if even(n) { f(t) * l(3 * n) * fr(1, 2) } else { l(t) * f(3 * n) * fr(-1, 2) })
            }),
        IdentityRecord::new(
            "thm7.lucas",
            "sum_{k<=n/2} (16/(5F_p^2))^k (C(n+2k,n-2k) L_{2pk+t}/(n+2k) - 4/F_p C(n+2k+1,n-2k-1) F_{p(2k+1)+t}/(n+2k+1)) \
             = T_n(L_p/(rt(5) F_p))/n (L_t if n even, -rt(5) F_t if n odd), p even, p != 0",
            Q5,
            &[P, N1, T],
        )
        .when("p even", |p| even(p.p()))
        .when("p != 0", nz_p)
        .lhs(|p| rat(thm7_lhs(p, true)))
        .rhs(|p| {
            let (n, t) = (p.n(), p.t());
            let c = if even(n) { in5(l(t)) } else { rt5() * (-f(t)) };
            tn(n, &inv_h51(p.p())) * c * fr(1, n)
        }),
        IdentityRecord::new(
            "thm7.fib",
            "sum_{k<=n/2} (16/(5F_p^2))^k (C(n+2k,n-2k) F_{2pk+t}/(n+2k) - 4/(5F_p) C(n+2k+1,n-2k-1) L_{p(2k+1)+t}/(n+2k+1)) \
             = T_n(L_p/(rt(5) F_p))/(rt(5) n) (rt(5) F_t if n even, -L_t if n odd), p even, p != 0",
            Q5,
            &[P, N1, T],
        )
        .when("p even", |p| even(p.p()))
        .when("p != 0", nz_p)
        .lhs(|p| rat(thm7_lhs(p, false)))
        .rhs(|p| {
            let (n, t) = (p.n(), p.t());
            let c = if even(n) { rt5() * f(t) } else { in5(-l(t)) };
            tn(n, &inv_h51(p.p())) * c / (rt5() * r(n))
        }),
        IdentityRecord::new("ex8.gen.upper", "sum (-2)^k c(n,k) ((1+x)^k - (1-x)^k) = ((-1)^n - 1) T_n(x)", QQ, &[N0, X])
            .lhs(|p| rat(gen_sum(p.n(), r(p.x()), -1)))
            .rhs(|p| rat((neg1(p.n()) - r(1)) * tr(p.n(), r(p.x()))))
            .poly(0, gen_upper_lhs, gen_upper_rhs),
        IdentityRecord::new("ex8.gen.lower", "sum (-2)^k c(n,k) ((1+x)^k + (1-x)^k) = ((-1)^n + 1) T_n(x)", QQ, &[N0, X])
            .lhs(|p| rat(gen_sum(p.n(), r(p.x()), 1)))
            .rhs(|p| rat((neg1(p.n()) + r(1)) * tr(p.n(), r(p.x()))))
            .poly(0, gen_lower_lhs, gen_lower_rhs),
        IdentityRecord::new("ex8.f3k", "sum_{k=1}^n (-1)^(k-1) c(n,k) F_{3k} = (1 - (-1)^n) F_n/2", QQ, &[N0])
            .lhs(|p| {
                let n = p.n();
                rat(rsum(1, n, |k| neg1(k - 1) * cw(n, k) * f(3 * k)))
            })
            .rhs(|p| rat((r(1) - neg1(p.n())) * f(p.n()) * fr(1, 2))),
        IdentityRecord::new("ex8.l3k", "sum (-1)^k c(n,k) L_{3k} = (1 + (-1)^n) L_n/2", QQ, &[N0])
            .lhs(|p| rat(csum(p.n(), |k| neg1(k) * l(3 * k))))
            .rhs(|p| rat((r(1) + neg1(p.n())) * l(p.n()) * fr(1, 2))),
        IdentityRecord::new("ex9.f", "sum_{k=1}^n (-4)^k c(n,k) F_k = ((-1)^n - 1) F_{3n}/2", QQ, &[N0])
            .lhs(|p| {
                let n = p.n();
                rat(rsum(1, n, |k| pwi(-4, k) * cw(n, k) * f(k)))
            })
            .rhs(|p| rat((neg1(p.n()) - r(1)) * f(3 * p.n()) * fr(1, 2))),
        IdentityRecord::new("ex9.l", "sum (-4)^k c(n,k) L_k = (1 + (-1)^n) L_{3n}/2", QQ, &[N0])
            .lhs(|p| rat(csum(p.n(), |k| pwi(-4, k) * l(k))))
            .rhs(|p| rat((r(1) + neg1(p.n())) * l(3 * p.n()) * fr(1, 2))),
    ];
    for (sign, tag) in [(1i64, "upper"), (-1, "lower")] {
        v.push(ex10(sign, tag, false, false));
        v.push(ex10(sign, tag, false, true));
        v.push(ex10(sign, tag, true, false));
        v.push(ex10(sign, tag, true, true));
    }
    v.extend([
        IdentityRecord::new("ex10.3", "sum (-4/3)^k c(n,k) L_{2k} = ((-1)^n + 1) T_n(rt(5)/3)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), |k| pw(&fr(-4, 3), k) * l(2 * k))))
            .rhs(|p| tn(p.n(), &(rt5() * fr(1, 3))) * (neg1(p.n()) + r(1))),
        IdentityRecord::new("ex10.4", "sum (-4/3)^k c(n,k) F_{2k} = ((-1)^n - 1) T_n(rt(5)/3)/rt(5)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), |k| pw(&fr(-4, 3), k) * f(2 * k))))
            .rhs(|p| tn(p.n(), &(rt5() * fr(1, 3))) * (neg1(p.n()) - r(1)) / rt5()),
        IdentityRecord::new("thm8.lucas", "sum (-1)^(n-k) c(n,k) L_{3k+t} = 5 F_t F_n/2 (n odd), L_t L_n/2 (n even)", QQ, &[N1, T])
            .lhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(csum(n, |k| neg1(n - k) * l(3 * k + t)))
            })
            .rhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(if odd(n) { f(t) * f(n) * fr(5, 2) } else { l(t) * l(n) * fr(1, 2) })
            }),
        IdentityRecord::new("thm8.fib", "sum (-1)^(n-k) c(n,k) F_{3k+t} = L_t F_n/2 (n odd), F_t L_n/2 (n even)", QQ, &[N1, T])
            .lhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(csum(n, |k| neg1(n - k) * f(3 * k + t)))
            })
            .rhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(if odd(n) { l(t) * f(n) * fr(1, 2) } else { f(t) * l(n) * fr(1, 2) })
            }),
        IdentityRecord::new("thm8.t2n.alpha", "T_{2n}(rt(alpha^3)/2) = rt(5) F_n/2 (n odd), L_n/2 (n even)", Q5, &[N0])
            .lhs(|p| t2n(p.n(), &(ap(3) * fr(1, 4))))
            .rhs(|p| {
                let n = p.n();
                if odd(n) {
                    rt5() * (f(n) * fr(1, 2))
                } else {
                    in5(l(n) * fr(1, 2))
                }
            }),
        IdentityRecord::new("thm8.t2n.beta", "T_{2n}(rt(beta^3)/2) = -rt(5) F_n/2 (n odd), L_n/2 (n even)", Q5, &[N0])
            .lhs(|p| t2n(p.n(), &(bp(3) * fr(1, 4))))
            .rhs(|p| {
                let n = p.n();
                if odd(n) {
                    rt5() * (f(n) * fr(-1, 2))
                } else {
                    in5(l(n) * fr(1, 2))
                }
            }),
        IdentityRecord::new(
            "thm9",
            "sum (-1)^(n-k) c(n,k) (2L_{2p}/(rt(5) F_{2p}))^(2k) = ((rt(5) F_p/L_p)^(2n) + (L_p/(rt(5) F_p))^(2n))/2, p != 0",
            QQ,
            &[N1, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, pp) = (p.n(), p.p());
            let base = r(4) * pw(&l(2 * pp), 2) / (r(5) * pw(&f(2 * pp), 2));
            rat(csum(n, |k| neg1(n - k) * pw(&base, k)))
        })
        .rhs(|p| {
            let (n, pp) = (p.n(), p.p());
            let u = r(5) * pw(&f(pp), 2) / pw(&l(pp), 2);
            rat((pw(&u, n) + pw(&u, -n)) * fr(1, 2))
        }),
        IdentityRecord::new(
            "thm10",
            "sum (-1)^((p-q)(n-k)) c(n,k) (F_{p+q} F_{p-q}/(F_p F_q))^(2k) = (F_p^(4n) + F_q^(4n))/(2 F_q^(2n) F_p^(2n)), p,q != 0",
            QQ,
            &[N0, P, Q],
        )
        .when("p != 0", nz_p)
        .when("q != 0", nz_q)
        .lhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            let base = f(a + b) * f(a - b) / (f(a) * f(b));
            rat(csum(n, |k| neg1((a - b) * (n - k)) * pw(&base, 2 * k)))
        })
        .rhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            rat((pw(&f(a), 4 * n) + pw(&f(b), 4 * n)) / (r(2) * pw(&f(b), 2 * n) * pw(&f(a), 2 * n)))
        }),
        IdentityRecord::new(
            "thm10.aux",
            "T_n(i^(p-q+1) F_{p+q} F_{p-q}/(2 F_q F_p)) = i^(n(p-q+1)) (F_p^(2n) + (-1)^(n(p-q+1)) F_q^(2n))/(2 F_q^n F_p^n), p,q != 0",
            Gauss,
            &[N0, P, Q],
        )
        .when("p != 0", nz_p)
        .when("q != 0", nz_q)
        .lhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            let x = ip(a - b + 1) * (f(a + b) * f(a - b) / (r(2) * f(b) * f(a)));
            tn(n, &x)
        })
        .rhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            let e = n * (a - b + 1);
            let val = (pw(&f(a), 2 * n) + neg1(e) * pw(&f(b), 2 * n)) / (r(2) * pw(&f(b), n) * pw(&f(a), n));
            ip(e) * val
        }),
        IdentityRecord::new("thm11.1", "sum (-1)^(p(n-k)) c(n,k) (F_{3p}/F_{2p})^(2k) = (L_p^(4n) + 1)/(2 L_p^(2n)), p != 0", QQ, &[N0, P])
            .when("p != 0", nz_p)
            .lhs(|p| {
                let (n, a) = (p.n(), p.p());
                let base = f(3 * a) / f(2 * a);
                rat(csum(n, |k| neg1(a * (n - k)) * pw(&base, 2 * k)))
            })
            .rhs(|p| {
                let (n, a) = (p.n(), p.p());
                rat((pw(&l(a), 4 * n) + r(1)) / (r(2) * pw(&l(a), 2 * n)))
            }),
        IdentityRecord::new(
            "thm11.2",
            "sum (-1)^((p+1)(n-k)) c(n,k) 5^(n-k) (L_{3p}/F_{2p})^(2k) = (5^(2n) F_p^(4n) + 1)/(2 F_p^(2n)), p != 0",
            QQ,
            &[N0, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, a) = (p.n(), p.p());
            let base = l(3 * a) / f(2 * a);
            rat(csum(n, |k| neg1((a + 1) * (n - k)) * pwi(5, n - k) * pw(&base, 2 * k)))
        })
        .rhs(|p| {
            let (n, a) = (p.n(), p.p());
            rat((pwi(5, 2 * n) * pw(&f(a), 4 * n) + r(1)) / (r(2) * pw(&f(a), 2 * n)))
        }),
        IdentityRecord::new(
            "thm11.aux.1",
            "T_n((-i)^(p+1) F_{3p}/(2F_{2p})) = (-i)^(n(p+1)) (L_p^(2n) + (-1)^(n(p+1)))/(2 L_p^n), p != 0",
            Gauss,
            &[N0, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, a) = (p.n(), p.p());
            tn(n, &(ip(-(a + 1)) * (f(3 * a) / (r(2) * f(2 * a)))))
        })
        .rhs(|p| {
            let (n, a) = (p.n(), p.p());
            let e = n * (a + 1);
            ip(-e) * ((pw(&l(a), 2 * n) + neg1(e)) / (r(2) * pw(&l(a), n)))
        }),
        IdentityRecord::new(
            "thm11.aux.2",
            "T_n((-i)^p L_{3p}/(2 rt(5) F_{2p})) = (-i)^(np) (5^n F_p^(2n) + (-1)^(np))/(2 rt(5)^n F_p^n), p != 0",
            Q5I,
            &[N0, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, a) = (p.n(), p.p());
            let mag = rt5() * (l(3 * a) / (r(10) * f(2 * a)));
            tn(n, &(ip5(-a) * in5i(&mag)))
        })
        .rhs(|p| {
            let (n, a) = (p.n(), p.p());
            let e = n * a;
            let top = (pwi(5, n) * pw(&f(a), 2 * n) + neg1(e)) / (r(2) * pw(&f(a), n));
            ip5(-e) * in5i(&(in5(top) / rt5_pow(n)))
        }),
    ]);
    v.extend(lem4_entries());
    v.extend(thm12_entries());
    v.extend([
        ex11("ex11.1", "sum (-2)^(n-k) c(n,k) L_{5k+t} = (L_{t-n} + 4^n L_{n+t})/2", |k, t| l(5 * k + t), |n, t| {
            (l(t - n) + pwi(4, n) * l(n + t)) * fr(1, 2)
        }),
        ex11("ex11.2", "sum (-2)^(n-k) c(n,k) F_{5k+t} = (F_{t-n} + 4^n F_{n+t})/2", |k, t| f(5 * k + t), |n, t| {
            (f(t - n) + pwi(4, n) * f(n + t)) * fr(1, 2)
        }),
        ex11("ex11.3", "sum (-2)^(n-k) c(n,k) 5^k L_{k+t} = (4^n L_{t-n} + L_{n+t})/2", |k, t| pwi(5, k) * l(k + t), |n, t| {
            (pwi(4, n) * l(t - n) + l(n + t)) * fr(1, 2)
        }),
        ex11("ex11.4", "sum (-2)^(n-k) c(n,k) 5^k F_{k+t} = (4^n F_{t-n} + F_{n+t})/2", |k, t| pwi(5, k) * f(k + t), |n, t| {
            (pwi(4, n) * f(t - n) + f(n + t)) * fr(1, 2)
        }),
    ]);
    v
}

fn note2_rhs(n: i64, p: i64) -> Rational {
    (pwi(625, n) * pw(&f(p), 8 * n) + pw(&l(p), 8 * n)) / (r(2 * n) * pwi(25, n) * pw(&f(2 * p), 4 * n))
}

fn thm5_top(n: i64, p: i64) -> Rational {
    pwi(25, n) * pw(&f(p), 4 * n) + pw(&l(p), 4 * n)
}

fn gen_sum(n: i64, x: Rational, sign: i64) -> Rational {
    csum(n, |k| pwi(-2, k) * (pw(&(r(1) + &x), k) + r(sign) * pw(&(r(1) - &x), k)))
}

fn thm7_lhs(p: &Point, lucas_form: bool) -> Rational {
    let (n, pp, t) = (p.n(), p.p(), p.t());
    let fp = f(pp);
    let base = r(16) / (r(5) * &fp * &fp);
    rsum(0, n / 2, |k| {
        let first = bw(n, 2 * k) / r(n + 2 * k);
        let second = bw(n, 2 * k + 1) / r(n + 2 * k + 1);
        let inner = if lucas_form {
            first * l(2 * pp * k + t) - r(4) / &fp * second * f(pp * (2 * k + 1) + t)
        } else {
            first * f(2 * pp * k + t) - r(4) / (r(5) * &fp) * second * l(pp * (2 * k + 1) + t)
        };
        pw(&base, k) * inner
    })
}

fn ex10(sign: i64, tag: &'static str, fib_form: bool, closed_sum: bool) -> IdentityRecord {
    let id: &'static str = match (fib_form, closed_sum, tag) {
        (false, false, "upper") => "ex10.1.upper",
        (false, false, _) => "ex10.1.lower",
        (false, true, "upper") => "ex10.1.upper.sum",
        (false, true, _) => "ex10.1.lower.sum",
        (true, false, "upper") => "ex10.2.upper",
        (true, false, _) => "ex10.2.lower",
        (true, true, "upper") => "ex10.2.upper.sum",
        (true, true, _) => "ex10.2.lower.sum",
    };
    let anchor: &'static str = match (fib_form, closed_sum, sign) {
        (false, false, 1) => "sum (-4)^k c(n,k) (L_{2k} + (-1)^k L_k) = ((-1)^n + 1)(T_n(alpha^3) + T_n(beta^3))",
        (false, false, _) => "sum (-4)^k c(n,k) (L_{2k} - (-1)^k L_k) = ((-1)^n - 1)(T_n(alpha^3) + T_n(beta^3))",
        (false, true, 1) => "sum (-4)^k c(n,k) (L_{2k} + (-1)^k L_k) = ((-1)^n + 1) sum C(n,2k) 4^k L_{3(n-k)}",
        (false, true, _) => "sum (-4)^k c(n,k) (L_{2k} - (-1)^k L_k) = ((-1)^n - 1) sum C(n,2k) 4^k L_{3(n-k)}",
        (true, false, 1) => "sum (-4)^k c(n,k) (F_{2k} + (-1)^k F_k) = ((-1)^n + 1)(T_n(alpha^3) - T_n(beta^3))/rt(5)",
        (true, false, _) => "sum (-4)^k c(n,k) (F_{2k} - (-1)^k F_k) = ((-1)^n - 1)(T_n(alpha^3) - T_n(beta^3))/rt(5)",
        (true, true, 1) => "sum (-4)^k c(n,k) (F_{2k} + (-1)^k F_k) = sum C(n,2k) 4^k F_{3(n-k)}",
        (true, true, _) => "sum (-4)^k c(n,k) (F_{2k} - (-1)^k F_k) = sum C(n,2k) 4^k F_{3(n-k)}",
    };
    let seq = if fib_form { f } else { l };
    let rec = IdentityRecord::new(id, anchor, TowerKind::Q5, &[N0]).lhs(move |p| {
        let n = p.n();
        rat(csum(n, |k| pwi(-4, k) * (seq(2 * k) + r(sign) * neg1(k) * seq(k))))
    });
    let factor = move |n: i64| neg1(n) + r(sign);
    let closed = move |n: i64| rsum(0, n / 2, |k| ch(n, 2 * k) * pwi(4, k) * seq(3 * (n - k)));
    let cheb = move |n: i64| {
        if fib_form {
            (tn(n, &ap(3)) - tn(n, &bp(3))) / rt5()
        } else {
            tn(n, &ap(3)) + tn(n, &bp(3))
        }
    };
    match (fib_form, closed_sum) {
        (_, false) => rec.rhs(move |p| cheb(p.n()) * factor(p.n())),
        (false, true) => rec.rhs(move |p| rat(factor(p.n()) * closed(p.n()))),
        (true, true) => rec
            .rhs(move |p| rat(closed(p.n())))
            .typo("the factor ((-1)^n +/- 1) is missing from the closed sum")
            .corrected(move |p| rat(factor(p.n()) * closed(p.n()))),
    }
}

fn lem4_s(p: &Point, lucas_form: bool, use_alpha: bool) -> Elem {
    let (a, b) = (p.p(), p.q());
    let coef = if lucas_form {
        r(5) * neg1(b + 1) * f(b) * f(b) / (r(4) * l(a) * l(a + b))
    } else {
        neg1(b + 1) * f(b) * f(b) / (r(4) * f(a) * f(a + b))
    };
    let g = if use_alpha { ap(2 * a + b) } else { bp(2 * a + b) };
    g * coef
}

fn lem4_rhs(p: &Point, lucas_form: bool, use_alpha: bool) -> Elem {
    let (n, a, b) = (p.n(), p.p(), p.q());
    let (u, w) = if lucas_form { (l(a + b), l(a)) } else { (f(a + b), f(a)) };
    let ratio = u / w;
    let (first, second) = if use_alpha { (ap(b * n), bp(b * n)) } else { (bp(b * n), ap(b * n)) };
    (first * (neg1(n * b) * pw(&ratio, n)) + second * pw(&ratio, -n)) * (neg1(n) * fr(1, 2))
}

fn lem4_entries() -> Vec<IdentityRecord> {
    let specs: [(&'static str, &'static str, bool, bool); 4] = [
        (
            "lem4.1",
            "T_{2n}(rt((-1)^(q+1) F_q^2 alpha^(2p+q)/(4 F_p F_{p+q}))) = (-1)^n ((-1)^(nq) (F_{p+q}/F_p)^n alpha^(qn) + (F_p/F_{p+q})^n beta^(qn))/2",
            false,
            true,
        ),
        (
            "lem4.2",
            "T_{2n}(rt((-1)^(q+1) F_q^2 beta^(2p+q)/(4 F_p F_{p+q}))) = (-1)^n ((-1)^(nq) (F_{p+q}/F_p)^n beta^(qn) + (F_p/F_{p+q})^n alpha^(qn))/2",
            false,
            false,
        ),
        (
            "lem4.3",
            "T_{2n}(rt(5(-1)^(q+1) F_q^2 alpha^(2p+q)/(4 L_p L_{p+q}))) = (-1)^n ((-1)^(nq) (L_{p+q}/L_p)^n alpha^(qn) + (L_p/L_{p+q})^n beta^(qn))/2",
            true,
            true,
        ),
        (
            "lem4.4",
            "T_{2n}(rt(5(-1)^(q+1) F_q^2 beta^(2p+q)/(4 L_p L_{p+q}))) = (-1)^n ((-1)^(nq) (L_{p+q}/L_p)^n beta^(qn) + (L_p/L_{p+q})^n alpha^(qn))/2",
            true,
            false,
        ),
    ];
    specs
        .into_iter()
        .map(|(id, anchor, lucas_form, use_alpha)| {
            let rec = IdentityRecord::new(id, anchor, TowerKind::Q5, &[N0, P, Q]);
            let rec = if lucas_form {
                rec
            } else {
                rec.when("p != 0", nz_p).when("p != -q", |p| p.p() != -p.q())
            };
            rec.lhs(move |p| t2n(p.n(), &lem4_s(p, lucas_form, use_alpha)))
                .rhs(move |p| lem4_rhs(p, lucas_form, use_alpha))
        })
        .collect()
}

fn thm12_entries() -> Vec<IdentityRecord> {
    let specs: [(&'static str, &'static str, bool, bool); 4] = [
        (
            "thm12.1",
            "sum (-1)^((n-k)q) c(n,k) F_{p+q}^(n-k) F_p^(n-k) F_q^(2k) L_{k(2p+q)+t} = (F_{p+q}^(2n) L_{t+qn} + F_p^(2n) L_{t-qn})/2",
            false,
            false,
        ),
        (
            "thm12.2",
            "sum (-1)^((n-k)q) c(n,k) F_{p+q}^(n-k) F_p^(n-k) F_q^(2k) F_{k(2p+q)+t} = (F_{p+q}^(2n) F_{t+qn} + F_p^(2n) F_{t-qn})/2",
            false,
            true,
        ),
        (
            "thm12.3",
            "sum (-1)^((n-k)q) c(n,k) 5^k L_{p+q}^(n-k) L_p^(n-k) F_q^(2k) L_{k(2p+q)+t} = (L_{p+q}^(2n) L_{t+qn} + L_p^(2n) L_{t-qn})/2",
            true,
            false,
        ),
        (
            "thm12.4",
            "sum (-1)^((n-k)q) c(n,k) 5^k L_{p+q}^(n-k) L_p^(n-k) F_q^(2k) F_{k(2p+q)+t} = (L_{p+q}^(2n) F_{t+qn} + L_p^(2n) F_{t-qn})/2",
            true,
            true,
        ),
    ];
    specs
        .into_iter()
        .map(|(id, anchor, lucas_w, fib_seq)| {
            IdentityRecord::new(id, anchor, TowerKind::Q, &[N1, P, Q, T])
                .lhs(move |p| rat(thm12_lhs(p, lucas_w, fib_seq)))
                .rhs(move |p| {
                    let (n, a, b, t) = (p.n(), p.p(), p.q(), p.t());
                    let (u, w) = if lucas_w { (l(a + b), l(a)) } else { (f(a + b), f(a)) };
                    let seq = if fib_seq { f } else { l };
                    rat((pw(&u, 2 * n) * seq(t + b * n) + pw(&w, 2 * n) * seq(t - b * n)) * fr(1, 2))
                })
        })
        .collect()
}

/// The `c(n,k)` sum shared by the four product-weight identities.
pub(crate) fn thm12_lhs(p: &Point, lucas_w: bool, fib_seq: bool) -> Rational {
    let (n, a, b, t) = (p.n(), p.p(), p.q(), p.t());
    let (u, w) = if lucas_w { (li(a + b), li(a)) } else { (fi(a + b), fi(a)) };
    let uw = u * w;
    let fq = fi(b);
    let g = if lucas_w { Integer::from(5) * &fq * &fq } else { &fq * &fq };
    let y = if fib_seq { fi } else { li };
    let mut acc = Integer::from(0);
    for k in 0..=n {
        acc += c2(n, k) * sgn((n - k) * b) * ipow(&uw, n - k) * ipow(&g, k) * y(k * (2 * a + b) + t);
    }
    zq(acc) * fr(1, 2)
}

fn ex11(
    id: &'static str,
    anchor: &'static str,
    term: fn(i64, i64) -> Rational,
    closed: fn(i64, i64) -> Rational,
) -> IdentityRecord {
    IdentityRecord::new(id, anchor, TowerKind::Q, &[N1, T])
        .lhs(move |p| {
            let (n, t) = (p.n(), p.t());
            rat(csum(n, |k| pwi(-2, n - k) * term(k, t)))
        })
        .rhs(move |p| rat(closed(p.n(), p.t())))
}
