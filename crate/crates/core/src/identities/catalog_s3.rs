//! Sums with weight `d(n,k)`, obtained from the derivative identities and
//! their second-kind Chebyshev values.

use super::terms::*;
use super::*;
use crate::algebra::{Integer, Rational};
use crate::chebyshev::{cheb_poly_uncapped, Kind, Poly};

fn dsum(n: i64, g: impl Fn(i64) -> Rational) -> Rational {
    rsum(1, n, |k| dw(n, k) * g(k))
}

fn upoly(n: i64) -> Poly {
    if n < 0 {
        return Poly::zero();
    }
    cheb_poly_uncapped(Kind::U, n as usize)
}

fn dweighted(n: i64, base: i64, g: impl Fn(i64) -> Poly) -> Poly {
    let mut acc = Poly::zero();
    for k in 1..=n {
        acc = &acc + &g(k).scale(&(pwi(base, k) * dw(n, k)));
    }
    acc
}

fn main5_upper_lhs(n: i64) -> Poly {
    dweighted(n, -2, |k| Poly::new(vec![r(1), r(-1)]).pow((k - 1) as u32))
}
fn main5_upper_rhs(n: i64) -> Poly {
    -&upoly(n - 1)
}
fn main5_lower_lhs(n: i64) -> Poly {
    dweighted(n, -2, |k| Poly::new(vec![r(1), r(1)]).pow((k - 1) as u32))
}
fn main5_lower_rhs(n: i64) -> Poly {
    upoly(n - 1)
}
fn main6_lhs(n: i64) -> Poly {
    dweighted(n, 4, |k| Poly::new(vec![r(-1), r(0), r(1)]).pow((k - 1) as u32))
}
fn main6_rhs(n: i64) -> Poly {
    upoly(2 * n - 1).div_x().expect("odd U has no constant term")
}
fn main7_lhs(n: i64) -> Poly {
    dweighted(n, -4, |k| Poly::monomial(r(1), 2 * k as usize))
}
fn main7_rhs(n: i64) -> Poly {
    (&Poly::x() * &upoly(2 * n - 1)).scale(&neg1(n))
}

fn nz_p(p: &Point) -> bool {
    p.p() != 0
}
fn nz_q(p: &Point) -> bool {
    p.q() != 0
}

/// `F_p² + (-1)^(p-q) F_q²`, the denominator of the `F_{p+q}F_{p-q}` entries.
fn pq_den(a: i64, b: i64) -> Rational {
    pw(&f(a), 2) + neg1(a - b) * pw(&f(b), 2)
}

fn pq_den_nz(p: &Point) -> bool {
    p.p() != 0 && p.q() != 0 && pq_den(p.p(), p.q()) != r(0)
}

fn compose_ok(p: &Point) -> bool {
    ur(p.m() - 1, r(p.x())) != r(0)
}

pub(super) fn entries() -> Vec<IdentityRecord> {
    use TowerKind::{Gauss, Q as QQ, Q5, Q5I};
    let mut v = vec![
        IdentityRecord::new("u.main5.upper", "sum_{k=1}^n (-2)^k d(n,k) (1-x)^(k-1) = -U_{n-1}(x)", QQ, &[N1, X])
            .lhs(|p| {
                let (n, x) = (p.n(), r(p.x()));
                rat(dsum(n, |k| pwi(-2, k) * pw(&(r(1) - &x), k - 1)))
            })
            .rhs(|p| rat(-ur(p.n() - 1, r(p.x()))))
            .poly(1, main5_upper_lhs, main5_upper_rhs),
        IdentityRecord::new("u.main5.lower", "sum_{k=1}^n (-2)^k d(n,k) (1+x)^(k-1) = U_{n-1}(x)", QQ, &[N1, X])
            .lhs(|p| {
                let (n, x) = (p.n(), r(p.x()));
                rat(dsum(n, |k| pwi(-2, k) * pw(&(r(1) + &x), k - 1)))
            })
            .rhs(|p| rat(ur(p.n() - 1, r(p.x()))))
            .typo("the lower sign needs (-1)^n in front of U_{n-1}(x); the printed form holds for even n only")
            .corrected(|p| rat(neg1(p.n()) * ur(p.n() - 1, r(p.x()))))
            .poly(1, main5_lower_lhs, main5_lower_rhs),
        IdentityRecord::new("u.main6", "sum_{k=1}^n 4^k d(n,k) (x^2-1)^(k-1) = U_{2n-1}(x)/x", QQ, &[N1, X])
            .lhs(|p| {
                let (n, x) = (p.n(), r(p.x()));
                rat(dsum(n, |k| pwi(4, k) * pw(&(&x * &x - r(1)), k - 1)))
            })
            .rhs(|p| vn(p.n(), &rat(r(p.x() * p.x()))))
            .poly(1, main6_lhs, main6_rhs),
        IdentityRecord::new("u.main7", "sum_{k=1}^n (-4)^k d(n,k) x^(2k) = (-1)^n x U_{2n-1}(x)", QQ, &[N1, X])
            .lhs(|p| {
                let (n, x) = (p.n(), r(p.x()));
                rat(dsum(n, |k| pwi(-4, k) * pw(&x, 2 * k)))
            })
            .rhs(|p| {
                let (n, x) = (p.n(), r(p.x()));
                rat(neg1(n) * &x * ur(2 * n - 1, x.clone()))
            })
            .poly(1, main7_lhs, main7_rhs),
        IdentityRecord::new("u.f2n.1", "sum_{k=1}^n d(n,k) = F_{2n}/2", QQ, &[N0])
            .lhs(|p| rat(dsum(p.n(), |_| r(1))))
            .rhs(|p| rat(f(2 * p.n()) * fr(1, 2))),
        IdentityRecord::new("u.f2n.2", "sum_{k=1}^n (-5)^(k-1) d(n,k) = (-1)^(n-1) F_{2n}/2", QQ, &[N0])
            .lhs(|p| rat(dsum(p.n(), |k| pwi(-5, k - 1))))
            .rhs(|p| rat(neg1(p.n() - 1) * f(2 * p.n()) * fr(1, 2))),
        IdentityRecord::new("u.l3k", "sum_{k=1}^n (-1)^(k-1) d(n,k) L_{3(k-1)} = (1 - (-1)^n) L_n/2", QQ, &[N0])
            .lhs(|p| rat(dsum(p.n(), |k| neg1(k - 1) * l(3 * (k - 1)))))
            .rhs(|p| rat((r(1) - neg1(p.n())) * l(p.n()) * fr(1, 2))),
        IdentityRecord::new("u.u5half", "U_n(rt(5)/2) = L_{n+1} (n even), rt(5) F_{n+1} (n odd)", Q5, &[N0])
            .lhs(|p| un(p.n(), &(rt5() * fr(1, 2))))
            .rhs(|p| {
                let n = p.n();
                if even(n) {
                    in5(l(n + 1))
                } else {
                    rt5() * f(n + 1)
                }
            }),
        IdentityRecord::new("u.u32", "U_{n-1}(3/2) = F_{2n}", QQ, &[N0])
            .lhs(|p| rat(ur(p.n() - 1, fr(3, 2))))
            .rhs(|p| rat(f(2 * p.n()))),
        IdentityRecord::new(
            "u.compose.upper",
            "sum_{k=1}^n (-2)^(k-1) d(n,k) (1 - T_m(x))^(k-1) = U_{nm-1}(x)/(2 U_{m-1}(x))",
            QQ,
            &[N1, M1, X],
        )
        .when("U_{m-1}(x) != 0", compose_ok)
        .lhs(|p| rat(compose_lhs(p, -1)))
        .rhs(|p| rat(compose_rhs(p))),
        IdentityRecord::new(
            "u.compose.lower",
            "sum_{k=1}^n (-2)^(k-1) d(n,k) (1 + T_m(x))^(k-1) = (-1)^(n-1) U_{nm-1}(x)/(2 U_{m-1}(x))",
            QQ,
            &[N1, M1, X],
        )
        .when("U_{m-1}(x) != 0", compose_ok)
        .lhs(|p| rat(compose_lhs(p, 1)))
        .rhs(|p| rat(neg1(p.n() - 1) * compose_rhs(p))),
        IdentityRecord::new("lem5.1", "U_n(L_p/2) = F_{p(n+1)}/F_p, p even, p != 0", QQ, &[N0, P])
            .when("p even", |p| even(p.p()))
            .when("p != 0", nz_p)
            .lhs(|p| rat(ur(p.n(), l(p.p()) * fr(1, 2))))
            .rhs(|p| rat(f(p.p() * (p.n() + 1)) / f(p.p()))),
        IdentityRecord::new("lem5.2", "U_n(i L_p/2) = i^n F_{p(n+1)}/F_p, p odd", Gauss, &[N0, P])
            .when("p odd", |p| odd(p.p()))
            .lhs(|p| un(p.n(), &(ip(1) * (l(p.p()) * fr(1, 2)))))
            .rhs(|p| ip(p.n()) * (f(p.p() * (p.n() + 1)) / f(p.p()))),
        IdentityRecord::new(
            "lem5.3",
            "U_n(rt(5) F_p/2) = L_{p(n+1)}/L_p (n even), F_p F_{p(n+1)} F_p/L_p (n odd), p odd",
            Q5,
            &[N0, P],
        )
        .when("p odd", |p| odd(p.p()))
        .lhs(|p| un(p.n(), &(rt5() * (f(p.p()) * fr(1, 2)))))
        .rhs(|p| {
            let (n, a) = (p.n(), p.p());
            if even(n) {
                in5(l(a * (n + 1)) / l(a))
            } else {
                in5(f(a) * f(a * (n + 1)) * f(a) / l(a))
            }
        })
        .typo("for odd n the factor F_p F_p should read rt(5); the even-n case is unchanged")
        .corrected(|p| {
            let (n, a) = (p.n(), p.p());
            if even(n) {
                in5(l(a * (n + 1)) / l(a))
            } else {
                rt5() * (f(a * (n + 1)) / l(a))
            }
        }),
        IdentityRecord::new(
            "lem5.4",
            "U_n(i rt(5) F_p/2) = i^n L_{p(n+1)}/L_p (n even), i^n rt(5) F_{p(n+1)}/L_p (n odd), p even",
            Q5I,
            &[N0, P],
        )
        .when("p even", |p| even(p.p()))
        .lhs(|p| un(p.n(), &times_i5(rt5() * (f(p.p()) * fr(1, 2)))))
        .rhs(|p| {
            let (n, a) = (p.n(), p.p());
            let val = if even(n) { in5(l(a * (n + 1)) / l(a)) } else { rt5() * (f(a * (n + 1)) / l(a)) };
            ip5(n) * in5i(&val)
        }),
        IdentityRecord::new(
            "thm13.lucas",
            "sum_{k=1}^n (-1)^((p-1)(n-k)) d(n,k) L_p^(2k-1) = F_{2np}/(2 F_p), p != 0",
            QQ,
            &[N1, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, a) = (p.n(), p.p());
            rat(dsum(n, |k| neg1((a - 1) * (n - k)) * pw(&l(a), 2 * k - 1)))
        })
        .rhs(|p| rat(f(2 * p.n() * p.p()) / (r(2) * f(p.p())))),
        IdentityRecord::new("thm13.fib", "sum_{k=1}^n (-1)^(p(n-k)) d(n,k) 5^(k-1) F_p^(2k-1) = F_{2np}/(2 L_p)", QQ, &[N1, P])
            .lhs(|p| {
                let (n, a) = (p.n(), p.p());
                rat(dsum(n, |k| neg1(a * (n - k)) * pwi(5, k - 1) * pw(&f(a), 2 * k - 1)))
            })
            .rhs(|p| rat(f(2 * p.n() * p.p()) / (r(2) * l(p.p())))),
        IdentityRecord::new(
            "lem6.1",
            "rt(5/(2 alpha)) U_{2n-1}(rt(alpha^5/8)) = 2^n alpha^n - (-1)^n beta^n/2^n",
            Q5,
            &[N1],
        )
        .lhs(|p| vn(p.n(), &(ap(5) * fr(1, 8))) * (rt5() * ap(2) * fr(1, 4)))
        .rhs(|p| {
            let n = p.n();
            ap(n) * pwi(2, n) - bp(n) * (neg1(n) * pwi(2, -n))
        }),
        IdentityRecord::new(
            "lem6.2",
            "rt(5/(2 beta)) U_{2n-1}(rt(beta^5/8)) = 2^n beta^n - (-1)^n alpha^n/2^n",
            Q5,
            &[N1],
        )
        .lhs(|p| vn(p.n(), &(bp(5) * fr(1, 8))) * (rt5() * bp(2) * fr(-1, 4)))
        .rhs(|p| {
            let n = p.n();
            bp(n) * pwi(2, n) - ap(n) * (neg1(n) * pwi(2, -n))
        }),
        IdentityRecord::new("thm14.l", "sum_{k=1}^n (-2)^(n-k) d(n,k) L_{5k+t} = (4^n F_{t+n+3} - F_{t-n+3})/2", QQ, &[N1, T])
            .lhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(dsum(n, |k| pwi(-2, n - k) * l(5 * k + t)))
            })
            .rhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat((pwi(4, n) * f(t + n + 3) - f(t - n + 3)) * fr(1, 2))
            }),
        IdentityRecord::new("thm14.f", "sum_{k=1}^n (-2)^(n-k) d(n,k) F_{5k+t} = (4^n L_{t+n+3} - L_{n-t-3})/10", QQ, &[N1, T])
            .lhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(dsum(n, |k| pwi(-2, n - k) * f(5 * k + t)))
            })
            .rhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat((pwi(4, n) * l(t + n + 3) - l(n - t - 3)) * fr(1, 10))
            })
            .typo("the second Lucas index n-t-3 should read t-n+3")
            .corrected(|p| {
                let (n, t) = (p.n(), p.t());
                rat((pwi(4, n) * l(t + n + 3) - l(t - n + 3)) * fr(1, 10))
            }),
        IdentityRecord::new(
            "thm15.l",
            "sum_{k=1}^n (-1)^(k-1) d(n,k) L_{3k+t} = L_{t+3} L_n/2 (n odd), -5 F_{t+3} F_n/2 (n even)",
            QQ,
            &[N0, T],
        )
        .lhs(|p| {
            let (n, t) = (p.n(), p.t());
            rat(dsum(n, |k| neg1(k - 1) * l(3 * k + t)))
        })
        .rhs(|p| {
            let (n, t) = (p.n(), p.t());
            rat(if odd(n) { l(t + 3) * l(n) * fr(1, 2) } else { f(t + 3) * f(n) * fr(-5, 2) })
        }),
        IdentityRecord::new(
            "thm15.f",
            "sum_{k=1}^n (-1)^(k-1) d(n,k) F_{3k+t} = F_{t+3} L_n/2 (n odd), -L_{t+3} F_n/2 (n even)",
            QQ,
            &[N0, T],
        )
        .lhs(|p| {
            let (n, t) = (p.n(), p.t());
            rat(dsum(n, |k| neg1(k - 1) * f(3 * k + t)))
        })
        .rhs(|p| {
            let (n, t) = (p.n(), p.t());
            rat(if odd(n) { f(t + 3) * l(n) * fr(1, 2) } else { l(t + 3) * f(n) * fr(-1, 2) })
        }),
        IdentityRecord::new(
            "thm15.aux",
            "U_{2n-1}(rt(alpha^3)/2) = rt(alpha^3) L_n (n odd), rt(5 alpha^3) F_n (n even)",
            Q5,
            &[N1],
        )
        .lhs(|p| vn(p.n(), &(ap(3) * fr(1, 4))))
        .rhs(|p| {
            let n = p.n();
            if odd(n) {
                in5(r(2) * l(n))
            } else {
                rt5() * (r(2) * f(n))
            }
        }),
        IdentityRecord::new(
            "thm16.l",
            "sum_{k=1}^n (-4)^(k-1) d(n,k) L_{k+t} = -L_{t+1} L_{3n}/2 (n odd), 5 F_{t+1} F_{3n}/2 (n even)",
            QQ,
            &[N0, T],
        )
        .lhs(|p| {
            let (n, t) = (p.n(), p.t());
            rat(dsum(n, |k| pwi(-4, k - 1) * l(k + t)))
        })
        .rhs(|p| rat(thm16_l(p.n(), p.t())))
        .typo("the weight (-4)^(k-1) should be (-4)^k; as printed the sum is off by a factor -4")
        .corrected_lhs(|p| {
            let (n, t) = (p.n(), p.t());
            rat(dsum(n, |k| pwi(-4, k) * l(k + t)))
        })
        .corrected(|p| rat(thm16_l(p.n(), p.t()))),
        IdentityRecord::new(
            "thm16.f",
            "sum_{k=1}^n (-4)^(k-1) d(n,k) F_{k+t} = -F_{t+1} L_{3n}/2 (n odd), L_{t+1} F_{3n}/2 (n even)",
            QQ,
            &[N0, T],
        )
        .lhs(|p| {
            let (n, t) = (p.n(), p.t());
            rat(dsum(n, |k| pwi(-4, k - 1) * f(k + t)))
        })
        .rhs(|p| rat(thm16_f(p.n(), p.t())))
        .typo("the weight (-4)^(k-1) should be (-4)^k; as printed the sum is off by a factor -4")
        .corrected_lhs(|p| {
            let (n, t) = (p.n(), p.t());
            rat(dsum(n, |k| pwi(-4, k) * f(k + t)))
        })
        .corrected(|p| rat(thm16_f(p.n(), p.t()))),
        IdentityRecord::new(
            "thm16.aux",
            "U_{2n-1}(rt(alpha)) = rt(alpha) L_{3n}/2 (n odd), rt(5 alpha) F_{3n}/2 (n even)",
            Q5,
            &[N1],
        )
        .lhs(|p| vn(p.n(), &ap(1)))
        .rhs(|p| {
            let n = p.n();
            if odd(n) {
                in5(l(3 * n) * fr(1, 2))
            } else {
                rt5() * (f(3 * n) * fr(1, 2))
            }
        }),
        IdentityRecord::new(
            "u.thm17",
            "sum_{k=1}^n (-1)^(n-k) d(n,k) (2 L_{2p}/(rt(5) F_{2p}))^(2k) = (-1)^p L_{2p} (L_p^(4n) - 5^(2n) F_p^(4n))/(4 (rt(5) F_{2p})^(2n)), p != 0",
            QQ,
            &[N0, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let (n, a) = (p.n(), p.p());
            let base = r(4) * pw(&l(2 * a), 2) / (r(5) * pw(&f(2 * a), 2));
            rat(dsum(n, |k| neg1(n - k) * pw(&base, k)))
        })
        .rhs(|p| {
            let (n, a) = (p.n(), p.p());
            let top = pw(&l(a), 4 * n) - pwi(5, 2 * n) * pw(&f(a), 4 * n);
            rat(neg1(a) * l(2 * a) * top / (r(4) * pwi(5, n) * pw(&f(2 * a), 2 * n)))
        }),
        IdentityRecord::new(
            "lem.kc1e6ox",
            "U_{n-1}(L_{2p}/(rt(5) F_{2p})) = (-1)^p (L_p^(2n) - 5^n F_p^(2n))/(4 (rt(5) F_{2p})^(n-1)), p != 0",
            Q5,
            &[N0, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| {
            let a = p.p();
            un(p.n() - 1, &(rt5() * (l(2 * a) / (r(5) * f(2 * a)))))
        })
        .rhs(|p| {
            let (n, a) = (p.n(), p.p());
            let top = neg1(a) * (pw(&l(a), 2 * n) - pwi(5, n) * pw(&f(a), 2 * n)) / (r(4) * pw(&f(2 * a), n - 1));
            in5(top) / rt5().pow(n - 1)
        }),
        IdentityRecord::new(
            "lem.ormac9f",
            "U_{n-1}(i^(p-q+1) F_{p+q} F_{p-q}/(2 F_q F_p)) = (F_p^(2n) + (-1)^(p-q) F_q^(2n))/(F_q^(n-1) F_p^(n-1) (F_p^2 + (-1)^(p-q) F_q^2))",
            Gauss,
            &[N0, P, Q],
        )
        .when("p != 0", nz_p)
        .when("q != 0", nz_q)
        .when("F_p^2 + (-1)^(p-q) F_q^2 != 0", pq_den_nz)
        .lhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            un(n - 1, &(ip(a - b + 1) * (f(a + b) * f(a - b) / (r(2) * f(b) * f(a)))))
        })
        .rhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            let top = pw(&f(a), 2 * n) + neg1(a - b) * pw(&f(b), 2 * n);
            rat(top / (pw(&f(b), n - 1) * pw(&f(a), n - 1) * pq_den(a, b)))
        })
        .typo(
            "the printed value is real and misses the power of i carried by U_{n-1}; the \
             numerator sign also alternates with n; no single-token repair closes it",
        ),
        IdentityRecord::new(
            "u.thm18",
            "sum_{k=1}^n (-1)^((p-q)(n-k)) d(n,k) (F_{p+q} F_{p-q}/(F_p F_q))^(2k) = (F_p^(4n) - F_q^(4n)) F_{p+q} F_{p-q}/(2 (F_p^2 + (-1)^(p-q) F_q^2) F_q^(2n) F_p^(2n))",
            QQ,
            &[N0, P, Q],
        )
        .when("p != 0", nz_p)
        .when("q != 0", nz_q)
        .when("F_p^2 + (-1)^(p-q) F_q^2 != 0", pq_den_nz)
        .lhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            let base = f(a + b) * f(a - b) / (f(a) * f(b));
            rat(dsum(n, |k| neg1((a - b) * (n - k)) * pw(&base, 2 * k)))
        })
        .rhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            let top = (pw(&f(a), 4 * n) - pw(&f(b), 4 * n)) * f(a + b) * f(a - b);
            rat(top / (r(2) * pq_den(a, b) * pw(&f(b), 2 * n) * pw(&f(a), 2 * n)))
        }),
    ];
    v.extend(thm19_entries());
    v
}

fn compose_lhs(p: &Point, sign: i64) -> Rational {
    let (n, m, x) = (p.n(), p.m(), r(p.x()));
    let base = r(1) + r(sign) * tr(m, x);
    dsum(n, |k| pwi(-2, k - 1) * pw(&base, k - 1))
}

fn compose_rhs(p: &Point) -> Rational {
    let (n, m, x) = (p.n(), p.m(), r(p.x()));
    ur(n * m - 1, x.clone()) / (r(2) * ur(m - 1, x))
}

fn thm16_l(n: i64, t: i64) -> Rational {
    if odd(n) {
        l(t + 1) * l(3 * n) * fr(-1, 2)
    } else {
        f(t + 1) * f(3 * n) * fr(5, 2)
    }
}

fn thm16_f(n: i64, t: i64) -> Rational {
    if odd(n) {
        f(t + 1) * l(3 * n) * fr(-1, 2)
    } else {
        l(t + 1) * f(3 * n) * fr(1, 2)
    }
}

fn pair(a: i64, b: i64, lucas_w: bool) -> (Integer, Integer) {
    if lucas_w {
        (li(a + b), li(a))
    } else {
        (fi(a + b), fi(a))
    }
}

/// `u² + u w L_q + (-1)^q w²` for `u = X_{p+q}`, `w = X_p`.
pub(crate) fn thm19_den(a: i64, b: i64, lucas_w: bool) -> Rational {
    let (u, w) = pair(a, b, lucas_w);
    zq(&u * &u + &u * &w * li(b) + sgn(b) * &w * &w)
}

/// The bracket `u^(2n)(u Y_{p+t+qn} + w Y_{q+p+t+qn}) - w^(2n)(u Y_{p+t-qn} + w Y_{q+p+t-qn})`.
pub(crate) fn thm19_bracket(n: i64, a: i64, b: i64, t: i64, lucas_w: bool, fib_seq: bool) -> Rational {
    let (u, w) = pair(a, b, lucas_w);
    let y = if fib_seq { fi } else { li };
    zq(ipow(&u, 2 * n) * (&u * y(a + t + b * n) + &w * y(b + a + t + b * n))
        - ipow(&w, 2 * n) * (&u * y(a + t - b * n) + &w * y(b + a + t - b * n)))
}

/// The `d(n,k)` sum of the product-weight family. `five` is the exponent
/// offset of the `5^k` factor, or `None` when there is no such factor.
pub(crate) fn thm19_lhs(p: &Point, lucas_w: bool, five: Option<i64>, fib_seq: bool) -> Rational {
    let (n, a, b, t) = (p.n(), p.p(), p.q(), p.t());
    let (u, w) = pair(a, b, lucas_w);
    let uw = u * w;
    let fq = fi(b);
    let five_int = Integer::from(5);
    let y = if fib_seq { fi } else { li };
    let mut acc = Integer::from(0);
    for k in 1..=n {
        let fv = five.map_or(Integer::from(1), |off| ipow(&five_int, k + off));
        acc += d2(n, k) * sgn(b * (n - k)) * ipow(&uw, n - k) * ipow(&fq, 2 * k - 1) * fv * y((2 * a + b) * k + t);
    }
    zq(acc) * fr(1, 2)
}

fn thm19_entries() -> Vec<IdentityRecord> {
    type Spec = (&'static str, &'static str, bool, Option<i64>, bool, bool);
    let specs: [Spec; 4] = [
        (
            "thm19.1",
            "sum_{k=1}^n (-1)^(q(n-k)) d(n,k) F_p^(n-k) F_{p+q}^(n-k) F_q^(2k-1) L_{(2p+q)k+t} = [F_{p+q}^(2n)(F_{p+q} L_{p+t+qn} + F_p L_{q+p+t+qn}) - F_p^(2n)(F_{p+q} L_{p+t-qn} + F_p L_{q+p+t-qn})]/(2 D_F)",
            false,
            None,
            false,
            false,
        ),
        (
            "thm19.2",
            "sum_{k=1}^n (-1)^(q(n-k)) d(n,k) F_p^(n-k) F_{p+q}^(n-k) F_q^(2k-1) F_{(2p+q)k+t} = [F_{p+q}^(2n)(F_{p+q} F_{p+t+qn} + F_p F_{q+p+t+qn}) - F_p^(2n)(F_{p+q} F_{p+t-qn} + F_p F_{p+q+t-qn})]/(2 D_F)",
            false,
            None,
            true,
            true,
        ),
        (
            "thm19.3",
            "sum_{k=1}^n (-1)^(q(n-k)) d(n,k) L_p^(n-k) L_{p+q}^(n-k) F_q^(2k-1) 5^k F_{(2p+q)k+t} = [L_{p+q}^(2n)(L_{p+q} L_{p+t+qn} + L_p L_{q+p+t+qn}) - L_p^(2n)(L_{p+q} L_{p+t-qn} + L_p L_{p+q+t-qn})]/(2 D_L)",
            true,
            Some(0),
            true,
            false,
        ),
        (
            "thm19.4",
            "sum_{k=1}^n (-1)^(q(n-k)) d(n,k) L_p^(n-k) L_{p+q}^(n-k) F_q^(2k-1) 5^(k-1) L_{(2p+q)k+t} = [L_{p+q}^(2n)(L_{p+q} F_{qn+p+t} + L_p F_{q+p+t+qn}) - L_p^(2n)(L_{p+q} F_{p+t-qn} + L_p F_{p+q+t-qn})]/(2 D_L)",
            true,
            Some(-1),
            false,
            true,
        ),
    ];
    specs
        .into_iter()
        .map(|(id, anchor, lucas_w, five, fib_seq, fib_bracket)| {
            let rec = IdentityRecord::new(id, anchor, TowerKind::Q, &[N1, P, Q, T]);
            let rec = if lucas_w {
                rec.when("D_L != 0", |p| thm19_den(p.p(), p.q(), true) != r(0))
            } else {
                rec.when("D_F != 0", |p| thm19_den(p.p(), p.q(), false) != r(0))
            };
            rec.lhs(move |p| rat(thm19_lhs(p, lucas_w, five, fib_seq))).rhs(move |p| {
                let (n, a, b, t) = (p.n(), p.p(), p.q(), p.t());
                rat(thm19_bracket(n, a, b, t, lucas_w, fib_bracket) / (r(2) * thm19_den(a, b, lucas_w)))
            })
        })
        .collect()
}
