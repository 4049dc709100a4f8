//! Sums weighted by the plain binomial `C(n+k, n-k)`.

use super::catalog_s3::{thm19_bracket, thm19_den};
use super::terms::*;
use super::*;
use crate::algebra::{Integer, Rational};
use crate::sequences::choose;
use crate::chebyshev::{cheb_poly_uncapped, Kind, Poly};

fn bsum(n: i64, g: impl Fn(i64) -> Rational) -> Rational {
    rsum(0, n, |k| bw(n, k) * g(k))
}

fn lem8_lhs(n: i64) -> Poly {
    let mut acc = Poly::zero();
    for k in 0..=n {
        acc = &acc + &Poly::monomial(pwi(-4, k) * bw(n, k), 2 * k as usize);
    }
    acc
}

fn lem8_rhs(n: i64) -> Poly {
    cheb_poly_uncapped(Kind::U, 2 * n as usize).scale(&neg1(n))
}

fn nz_p(p: &Point) -> bool {
    p.p() != 0
}

fn thm4_ok(p: &Point) -> bool {
    let (a, b) = (p.p(), p.q());
    a != 0 && b != 0 && pw(&f(a), 2) + neg1(a - b) * pw(&f(b), 2) != r(0)
}

fn pair(a: i64, b: i64, lucas_w: bool) -> (Integer, Integer) {
    if lucas_w {
        (li(a + b), li(a))
    } else {
        (fi(a + b), fi(a))
    }
}

/// `Σ (-1)^(q(n-k)) C(n+k,n-k) (u w)^(n-k) F_q^(2k) [5^k] Y_{(2p+q)k+t}`.
fn thm2_lhs(p: &Point, lucas_w: bool, fib_seq: bool) -> Rational {
    let (n, a, b, t) = (p.n(), p.p(), p.q(), p.t());
    let (u, w) = pair(a, b, lucas_w);
    let uw = u * w;
    let fq = fi(b);
    let g = if lucas_w { Integer::from(5) * &fq * &fq } else { &fq * &fq };
    let y = if fib_seq { fi } else { li };
    let mut acc = Integer::from(0);
    for k in 0..=n {
        let c = choose((n + k) as u64, n - k);
        acc += c * sgn(b * (n - k)) * ipow(&uw, n - k) * ipow(&g, k) * y((2 * a + b) * k + t);
    }
    zq(acc)
}

/// `(u^(2n) Y_{t+qn} + sign·w^(2n) Y_{t-qn})/2`.
fn half_pair(p: &Point, lucas_w: bool, fib_seq: bool, sign: i64) -> Rational {
    let (n, a, b, t) = (p.n(), p.p(), p.q(), p.t());
    let (u, w) = pair(a, b, lucas_w);
    let y = if fib_seq { fi } else { li };
    zq(ipow(&u, 2 * n) * y(t + b * n) + Integer::from(sign) * ipow(&w, 2 * n) * y(t - b * n)) * fr(1, 2)
}

fn tail(p: &Point, lucas_w: bool, fib_bracket: bool, scale: i64) -> Rational {
    let (n, a, b, t) = (p.n(), p.p(), p.q(), p.t());
    r(scale) * f(b) * thm19_bracket(n, a, b, t, lucas_w, fib_bracket) / (r(2) * thm19_den(a, b, lucas_w))
}

/// The s4.thm2.4 bracket as printed, with `L_{p+q}^(2n+1)` in the first term.
fn tail_printed_24(p: &Point) -> Rational {
    let (n, a, b, t) = (p.n(), p.p(), p.q(), p.t());
    let (u, w) = (l(a + b), l(a));
    let br = pw(&u, 2 * n + 1) * (&u * f(a + t + b * n) + &w * f(b + a + t + b * n))
        - pw(&w, 2 * n) * (&u * f(a + t - b * n) + &w * f(b + a + t - b * n));
    r(5) * f(b) * br / (r(2) * thm19_den(a, b, true))
}

fn thm3_rhs(n: i64, a: i64) -> Rational {
    let top = pw(&l(a), 4 * n + 2) - pwi(5, 2 * n + 1) * pw(&f(a), 4 * n + 2);
    neg1(n - a) * top / (r(4) * pwi(5, n) * pw(&f(2 * a), 2 * n))
}

fn thm3_sum(n: i64, a: i64, den_index: i64) -> Rational {
    let base = r(4) * pw(&l(2 * a), 2) / (r(5) * pw(&f(den_index), 2));
    bsum(n, |k| neg1(k) * pw(&base, k))
}

pub(super) fn entries() -> Vec<IdentityRecord> {
    use TowerKind::Q as QQ;
    let mut v = vec![
        IdentityRecord::new("s4.thm1.1", "sum (-1)^((p-1)(n-k)) C(n+k,n-k) L_p^(2k) = F_{(2n+1)p}/F_p, p != 0", QQ, &[N1, P])
            .when("p != 0", nz_p)
            .lhs(|p| {
                let (n, a) = (p.n(), p.p());
                rat(bsum(n, |k| neg1((a - 1) * (n - k)) * pw(&l(a), 2 * k)))
            })
            .rhs(|p| rat(f((2 * p.n() + 1) * p.p()) / f(p.p()))),
        IdentityRecord::new("s4.thm1.2", "sum (-1)^(p(n-k)) C(n+k,n-k) 5^k F_p^(2k) = L_{(2n+1)p}/L_p", QQ, &[N1, P])
            .lhs(|p| {
                let (n, a) = (p.n(), p.p());
                rat(bsum(n, |k| neg1(a * (n - k)) * pwi(5, k) * pw(&f(a), 2 * k)))
            })
            .rhs(|p| rat(l((2 * p.n() + 1) * p.p()) / l(p.p()))),
        IdentityRecord::new(
            "s4.thm2.1",
            "sum (-1)^(q(n-k)) C(n+k,n-k) F_p^(n-k) F_{p+q}^(n-k) F_q^(2k) L_{(2p+q)k+t} = (F_{p+q}^(2n) L_{t+qn} + F_p^(2n) L_{t-qn})/2 + F_q [..]/(2 D_F)",
            QQ,
            &[N0, P, Q, T],
        )
        .when("D_F != 0", |p| thm19_den(p.p(), p.q(), false) != r(0))
        .lhs(|p| rat(thm2_lhs(p, false, false)))
        .rhs(|p| rat(half_pair(p, false, false, 1) + tail(p, false, false, 1))),
        IdentityRecord::new(
            "s4.thm2.2",
            "sum (-1)^(q(n-k)) C(n+k,n-k) F_p^(n-k) F_{p+q}^(n-k) F_q^(2k) F_{(2p+q)k+t} = (F_{p+q}^(2n) F_{t+qn} - F_p^(2n) F_{t-qn})/2 + F_q [..]/(2 D_F)",
            QQ,
            &[N0, P, Q, T],
        )
        .when("D_F != 0", |p| thm19_den(p.p(), p.q(), false) != r(0))
        .lhs(|p| rat(thm2_lhs(p, false, true)))
        .rhs(|p| rat(half_pair(p, false, true, -1) + tail(p, false, true, 1)))
        .typo("the minus inside the first half should be a plus, as in the sibling it is added from")
        .corrected(|p| rat(half_pair(p, false, true, 1) + tail(p, false, true, 1))),
        IdentityRecord::new(
            "s4.thm2.3",
            "sum (-1)^(q(n-k)) C(n+k,n-k) L_p^(n-k) L_{p+q}^(n-k) F_q^(2k) 5^k F_{(2p+q)k+t} = (L_{p+q}^(2n) F_{t+qn} + L_p^(2n) F_{t-qn})/2 + F_q [..]/(2 D_L)",
            QQ,
            &[N0, P, Q, T],
        )
        .when("D_L != 0", |p| thm19_den(p.p(), p.q(), true) != r(0))
        .lhs(|p| rat(thm2_lhs(p, true, true)))
        .rhs(|p| rat(half_pair(p, true, true, 1) + tail(p, true, false, 1))),
        IdentityRecord::new(
            "s4.thm2.4",
            "sum (-1)^(q(n-k)) C(n+k,n-k) L_p^(n-k) L_{p+q}^(n-k) F_q^(2k) 5^k L_{(2p+q)k+t} = (L_{p+q}^(2n) L_{t+qn} + L_p^(2n) L_{t-qn})/2 + 5 F_q [L_{p+q}^(2n+1)(..) - ..]/(2 D_L)",
            QQ,
            &[N0, P, Q, T],
        )
        .when("D_L != 0", |p| thm19_den(p.p(), p.q(), true) != r(0))
        .lhs(|p| rat(thm2_lhs(p, true, false)))
        .rhs(|p| rat(half_pair(p, true, false, 1) + tail_printed_24(p)))
        .typo("the exponent 2n+1 on L_{p+q} in the bracket should be 2n")
        .corrected(|p| rat(half_pair(p, true, false, 1) + tail(p, true, true, 5))),
    ];
    type Ex1 = (&'static str, &'static str, fn(i64, i64) -> Rational, fn(i64, i64) -> Rational);
    let ex1: [Ex1; 6] = [
        (
            "s4.ex1.1",
            "sum (-1)^(n-k) C(n+k,n-k) L_{3k+t} = L_{t+n} + L_{t+1} L_n (n odd), L_{t+n} + 5 F_{t+1} F_n (n even)",
            |k, t| l(3 * k + t),
            |n, t| if odd(n) { l(t + n) + l(t + 1) * l(n) } else { l(t + n) + r(5) * f(t + 1) * f(n) },
        ),
        (
            "s4.ex1.2",
            "sum (-1)^(n-k) C(n+k,n-k) F_{3k+t} = F_{t+n} + F_{t+1} L_n (n odd), F_{t+n} + L_{t+1} F_n (n even)",
            |k, t| f(3 * k + t),
            |n, t| if odd(n) { f(t + n) + f(t + 1) * l(n) } else { f(t + n) + l(t + 1) * f(n) },
        ),
        (
            "s4.ex1.3",
            "sum (-1)^(n-k) C(n+k,n-k) L_{3k} = 2 L_n (n odd), 2 L_{n+1} (n even)",
            |k, _| l(3 * k),
            |n, _| if odd(n) { r(2) * l(n) } else { r(2) * l(n + 1) },
        ),
        (
            "s4.ex1.4",
            "sum (-1)^(n-k) C(n+k,n-k) F_{3k} = 2 F_{n+1} (n odd), 2 F_n (n even)",
            |k, _| f(3 * k),
            |n, _| if odd(n) { r(2) * f(n + 1) } else { r(2) * f(n) },
        ),
        (
            "s4.ex1.5",
            "sum (-1)^(n-k) C(n+k,n-k) L_{3k-1} = L_{n+2} (n odd), L_{n-1} (n even)",
            |k, _| l(3 * k - 1),
            |n, _| if odd(n) { l(n + 2) } else { l(n - 1) },
        ),
        (
            "s4.ex1.6",
            "sum (-1)^(n-k) C(n+k,n-k) F_{3k-1} = F_{n-1} (n odd), F_{n+2} (n even)",
            |k, _| f(3 * k - 1),
            |n, _| if odd(n) { f(n - 1) } else { f(n + 2) },
        ),
    ];
    for (id, anchor, term, closed) in ex1 {
        let with_t = id == "s4.ex1.1" || id == "s4.ex1.2";
        let params: &[ParamSpec] = if with_t { &[N0, T] } else { &[N0] };
        v.push(
            IdentityRecord::new(id, anchor, QQ, params)
                .lhs(move |p| {
                    let (n, t) = (p.n(), if with_t { p.t() } else { 0 });
                    rat(bsum(n, |k| neg1(n - k) * term(k, t)))
                })
                .rhs(move |p| rat(closed(p.n(), if with_t { p.t() } else { 0 }))),
        );
    }
    v.extend([
        IdentityRecord::new("s4.ex2.1", "sum (-2)^(n-k) C(n+k,n-k) L_{5k+t} = 2^(2n+1) F_{t+n+1} - F_{t-n}", QQ, &[N0, T])
            .lhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(bsum(n, |k| pwi(-2, n - k) * l(5 * k + t)))
            })
            .rhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(pwi(2, 2 * n + 1) * f(t + n + 1) - f(t - n))
            }),
        IdentityRecord::new("s4.ex2.2", "sum (-2)^(n-k) C(n+k,n-k) F_{5k+t} = (2^(2n+1) L_{t+n+1} - L_{t-n})/5", QQ, &[N0, T])
            .lhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat(bsum(n, |k| pwi(-2, n - k) * f(5 * k + t)))
            })
            .rhs(|p| {
                let (n, t) = (p.n(), p.t());
                rat((pwi(2, 2 * n + 1) * l(t + n + 1) - l(t - n)) * fr(1, 5))
            }),
        IdentityRecord::new("lem8", "sum (-4)^k C(n+k,n-k) x^(2k) = (-1)^n U_{2n}(x)", QQ, &[N0, X])
            .lhs(|p| {
                let (n, x) = (p.n(), r(p.x()));
                rat(bsum(n, |k| pwi(-4, k) * pw(&x, 2 * k)))
            })
            .rhs(|p| rat(neg1(p.n()) * ur(2 * p.n(), r(p.x()))))
            .poly(0, lem8_lhs, lem8_rhs),
        IdentityRecord::new(
            "s4.thm3",
            "sum (-1)^k C(n+k,n-k) (2 L_{2p}/(rt(5) F_p))^(2k) = (-1)^(n-p) (L_p^(4n+2) - 5^(2n+1) F_p^(4n+2))/(4 5^n F_{2p}^(2n)), p != 0",
            QQ,
            &[N0, P],
        )
        .when("p != 0", nz_p)
        .lhs(|p| rat(thm3_sum(p.n(), p.p(), p.p())))
        .rhs(|p| rat(thm3_rhs(p.n(), p.p())))
        .typo("the radicand should carry F_{2p}, not F_p")
        .corrected_lhs(|p| rat(thm3_sum(p.n(), p.p(), 2 * p.p())))
        .corrected(|p| rat(thm3_rhs(p.n(), p.p()))),
        IdentityRecord::new(
            "s4.thm4",
            "sum (-1)^((p-q)(n-k)) C(n+k,n-k) (F_{p+q} F_{p-q}/(F_p F_q))^(2k) = (F_p^(4n+2) + (-1)^(p-q) F_q^(4n+2))/(F_q^(2n) F_p^(2n) (F_p^2 + (-1)^(p-q) F_q^2))",
            QQ,
            &[N0, P, Q],
        )
        .when("p, q != 0", thm4_ok)
        .lhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            let base = f(a + b) * f(a - b) / (f(a) * f(b));
            rat(bsum(n, |k| neg1((a - b) * (n - k)) * pw(&base, 2 * k)))
        })
        .rhs(|p| {
            let (n, a, b) = (p.n(), p.p(), p.q());
            let e = neg1(a - b);
            let top = pw(&f(a), 4 * n + 2) + &e * pw(&f(b), 4 * n + 2);
            let den = pw(&f(b), 2 * n) * pw(&f(a), 2 * n) * (pw(&f(a), 2) + e * pw(&f(b), 2));
            rat(top / den)
        }),
    ]);
    v
}
