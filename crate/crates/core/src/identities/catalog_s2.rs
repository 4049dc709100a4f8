//! Sums with weight `c(n,k)`: the generating identities, Chebyshev values at
//! golden-ratio arguments, and the first Fibonacci/Lucas consequences.

use super::terms::*;
use super::*;
use crate::algebra::Rational;
use crate::chebyshev::{cheb_poly_uncapped, Kind, Poly};
use crate::sequences::a138573;

fn lin(a: i64, b: i64) -> Poly {
    Poly::new(vec![r(a), r(b)])
}

fn tpoly(n: i64) -> Poly {
    cheb_poly_uncapped(Kind::T, n as usize)
}

fn weighted(n: i64, base: i64, g: impl Fn(i64) -> Poly) -> Poly {
    let mut acc = Poly::zero();
    for k in 0..=n {
        acc = &acc + &g(k).scale(&(pwi(base, k) * cw(n, k)));
    }
    acc
}

fn main1_upper_lhs(n: i64) -> Poly {
    weighted(n, -2, |k| lin(1, -1).pow(k as u32))
}
fn main1_upper_rhs(n: i64) -> Poly {
    tpoly(n)
}
fn main1_lower_lhs(n: i64) -> Poly {
    weighted(n, -2, |k| lin(1, 1).pow(k as u32))
}
fn main1_lower_rhs(n: i64) -> Poly {
    tpoly(n).scale(&neg1(n))
}
fn main3_lhs(n: i64) -> Poly {
    weighted(n, 4, |k| Poly::new(vec![r(-1), r(0), r(1)]).pow(k as u32))
}
fn main3_rhs(n: i64) -> Poly {
    tpoly(2 * n)
}
fn main4_lhs(n: i64) -> Poly {
    weighted(n, -4, |k| Poly::monomial(r(1), 2 * k as usize))
}
fn main4_rhs(n: i64) -> Poly {
    tpoly(2 * n).scale(&neg1(n))
}

fn xr(p: &Point) -> Rational {
    r(p.x())
}

/// `Σ_{k=0}^n base^k c(n,k) g(k)` over the rationals.
fn csum(n: i64, base: i64, g: impl Fn(i64) -> Rational) -> Rational {
    rsum(0, n, |k| pwi(base, k) * cw(n, k) * g(k))
}

fn t_pair_sum(n: i64, a: &Elem, b: &Elem) -> Elem {
    tn(n, a) + tn(n, b)
}

fn t_pair_diff(n: i64, a: &Elem, b: &Elem) -> Elem {
    (tn(n, a) - tn(n, b)) / rt5()
}

pub(super) fn entries() -> Vec<IdentityRecord> {
    use TowerKind::{Q as QQ, Q5};
    vec![
        IdentityRecord::new("t.main1.upper", "sum (-2)^k c(n,k) (1-x)^k = T_n(x)", QQ, &[N0, X])
            .lhs(|p| rat(csum(p.n(), -2, |k| pw(&(r(1) - xr(p)), k))))
            .rhs(|p| rat(tr(p.n(), xr(p))))
            .poly(0, main1_upper_lhs, main1_upper_rhs),
        IdentityRecord::new("t.main1.lower", "sum (-2)^k c(n,k) (1+x)^k = (-1)^n T_n(x)", QQ, &[N0, X])
            .lhs(|p| rat(csum(p.n(), -2, |k| pw(&(r(1) + xr(p)), k))))
            .rhs(|p| rat(neg1(p.n()) * tr(p.n(), xr(p))))
            .poly(0, main1_lower_lhs, main1_lower_rhs),
        IdentityRecord::new("t.main2.upper", "sum (-2)^k c(n,k) (1-T_m(x))^k = T_{nm}(x)", QQ, &[N0, M0, X])
            .lhs(|p| {
                let tm = tr(p.m(), xr(p));
                rat(csum(p.n(), -2, |k| pw(&(r(1) - &tm), k)))
            })
            .rhs(|p| rat(tr(p.n() * p.m(), xr(p)))),
        IdentityRecord::new("t.main2.lower", "sum (-2)^k c(n,k) (1+T_m(x))^k = (-1)^n T_{nm}(x)", QQ, &[N0, M0, X])
            .lhs(|p| {
                let tm = tr(p.m(), xr(p));
                rat(csum(p.n(), -2, |k| pw(&(r(1) + &tm), k)))
            })
            .rhs(|p| rat(neg1(p.n()) * tr(p.n() * p.m(), xr(p)))),
        IdentityRecord::new("t.main3", "sum 4^k c(n,k) (x^2-1)^k = T_{2n}(x)", QQ, &[N0, X])
            .lhs(|p| rat(csum(p.n(), 4, |k| pw(&(xr(p) * xr(p) - r(1)), k))))
            .rhs(|p| rat(tr(2 * p.n(), xr(p))))
            .poly(0, main3_lhs, main3_rhs),
        IdentityRecord::new("t.main4", "sum (-4)^k c(n,k) x^(2k) = (-1)^n T_{2n}(x)", QQ, &[N0, X])
            .lhs(|p| rat(csum(p.n(), -4, |k| pw(&xr(p), 2 * k))))
            .rhs(|p| rat(neg1(p.n()) * tr(2 * p.n(), xr(p))))
            .poly(0, main4_lhs, main4_rhs),
        IdentityRecord::new("ex1.x0", "sum (-2)^k c(n,k) = 0 (n odd), (-1)^(n/2) (n even)", QQ, &[N0])
            .lhs(|p| rat(csum(p.n(), -2, |_| r(1))))
            .rhs(|p| rat(if odd(p.n()) { r(0) } else { neg1(p.n() / 2) })),
        IdentityRecord::new("ex1.xm1", "sum (-4)^k c(n,k) = (-1)^n", QQ, &[N0])
            .lhs(|p| rat(csum(p.n(), -4, |_| r(1))))
            .rhs(|p| rat(neg1(p.n()))),
        IdentityRecord::new("ex2.lucas", "sum (-2)^k c(n,k) L_k = T_n(alpha) + T_n(beta)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), -2, l)))
            .rhs(|p| t_pair_sum(p.n(), &ap(1), &bp(1))),
        IdentityRecord::new("ex2.fib", "sum (-2)^k c(n,k) F_k = -(T_n(alpha) - T_n(beta))/rt(5)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), -2, f)))
            .rhs(|p| -t_pair_diff(p.n(), &ap(1), &bp(1))),
        IdentityRecord::new("seq.a138573", "-sum (-2)^k c(n,k) F_k = a(n), a(n) = 2a(n-1)+2a(n-2)+2a(n-3)-a(n-4)", QQ, &[N0])
            .lhs(|p| rat(-csum(p.n(), -2, f)))
            .rhs(|p| {
                let n = p.n() as usize;
                rat(Rational::from_integer(a138573(n + 1)[n].clone()))
            }),
        IdentityRecord::new("ex3.1", "sum (-2)^k c(n,k) L_{2k} = (-1)^n (T_n(alpha) + T_n(beta))", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), -2, |k| l(2 * k))))
            .rhs(|p| t_pair_sum(p.n(), &ap(1), &bp(1)) * neg1(p.n())),
        IdentityRecord::new("ex3.2", "rt(5) sum (-2)^k c(n,k) F_{2k} = (-1)^n (T_n(alpha) - T_n(beta))", Q5, &[N0])
            .lhs(|p| rt5() * csum(p.n(), -2, |k| f(2 * k)))
            .rhs(|p| (tn(p.n(), &ap(1)) - tn(p.n(), &bp(1))) * neg1(p.n())),
        IdentityRecord::new("ex3.3", "sum (-2)^k c(n,k) L_{3k} = (-1)^n (T_n(2 alpha) + T_n(2 beta))", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), -2, |k| l(3 * k))))
            .rhs(|p| t_pair_sum(p.n(), &(ap(1) * r(2)), &(bp(1) * r(2))) * neg1(p.n())),
        IdentityRecord::new("ex3.4", "sum (-2)^k c(n,k) F_{3k} = (-1)^n (T_n(2 alpha) - T_n(2 beta))/rt(5)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), -2, |k| f(3 * k))))
            .rhs(|p| t_pair_diff(p.n(), &(ap(1) * r(2)), &(bp(1) * r(2))) * neg1(p.n())),
        IdentityRecord::new("ex3.5", "sum c(n,k) L_k = T_n(rt(5) alpha/2) + T_n(rt(5) beta/2)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), 1, l)))
            .rhs(|p| t_pair_sum(p.n(), &(rt5() * ap(1) * fr(1, 2)), &(rt5() * bp(1) * fr(1, 2))))
            .typo("second argument should be -rt(5) beta/2; as printed the odd-n values disagree")
            .corrected(|p| t_pair_sum(p.n(), &(rt5() * ap(1) * fr(1, 2)), &(rt5() * bp(1) * fr(-1, 2)))),
        IdentityRecord::new("ex3.6", "sum c(n,k) F_k = (T_n(rt(5) alpha/2) - T_n(rt(5) beta/2))/rt(5)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), 1, f)))
            .rhs(|p| t_pair_diff(p.n(), &(rt5() * ap(1) * fr(1, 2)), &(rt5() * bp(1) * fr(1, 2))))
            .typo("second argument should be -rt(5) beta/2; as printed the odd-n values disagree")
            .corrected(|p| t_pair_diff(p.n(), &(rt5() * ap(1) * fr(1, 2)), &(rt5() * bp(1) * fr(-1, 2)))),
        IdentityRecord::new("ex3.7", "sum 4^k c(n,k) L_k = T_n(2 alpha) + T_n(2 beta)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), 4, l)))
            .rhs(|p| t_pair_sum(p.n(), &(ap(1) * r(2)), &(bp(1) * r(2))))
            .typo("arguments should be alpha^3 and beta^3")
            .corrected(|p| t_pair_sum(p.n(), &ap(3), &bp(3))),
        IdentityRecord::new("ex3.8", "sum 4^k c(n,k) F_k = (T_n(2 alpha) - T_n(2 beta))/rt(5)", Q5, &[N0])
            .lhs(|p| rat(csum(p.n(), 4, f)))
            .rhs(|p| t_pair_diff(p.n(), &(ap(1) * r(2)), &(bp(1) * r(2))))
            .typo("arguments should be alpha^3 and beta^3")
            .corrected(|p| t_pair_diff(p.n(), &ap(3), &bp(3))),
        thm2("thm2.T.sum.odd-s", "T_n(alpha^s) + T_n(beta^s) = sum C(n,2k) L_s^k L_{s(n-k)}, s odd", Kind::T, true, true),
        thm2("thm2.T.diff.odd-s", "(T_n(alpha^s) - T_n(beta^s))/rt(5) = sum C(n,2k) L_s^k F_{s(n-k)}, s odd", Kind::T, false, true),
        thm2(
            "thm2.T.sum.even-s",
            "T_n(alpha^s) + T_n(beta^s) = sum 5^k F_s^(2k) (C(n,4k) L_{s(n-2k)} + 5 C(n,4k+2) F_s F_{s(n-2k-1)}), s even",
            Kind::T,
            true,
            false,
        ),
        thm2(
            "thm2.T.diff.even-s",
            "(T_n(alpha^s) - T_n(beta^s))/rt(5) = sum 5^k F_s^(2k) (C(n,4k) F_{s(n-2k)} + C(n,4k+2) F_s L_{s(n-2k-1)}), s even",
            Kind::T,
            false,
            false,
        ),
        thm2("thm2.U.sum.odd-s", "U_n(alpha^s) + U_n(beta^s) = sum C(n+1,2k+1) L_s^k L_{s(n-k)}, s odd", Kind::U, true, true),
        thm2("thm2.U.diff.odd-s", "(U_n(alpha^s) - U_n(beta^s))/rt(5) = sum C(n+1,2k+1) L_s^k F_{s(n-k)}, s odd", Kind::U, false, true),
        thm2(
            "thm2.U.sum.even-s",
            "U_n(alpha^s) + U_n(beta^s) = sum 5^k F_s^(2k) (C(n+1,4k+1) L_{s(n-2k)} + 5 C(n+1,4k+3) F_s F_{s(n-2k-1)}), s even",
            Kind::U,
            true,
            false,
        ),
        thm2(
            "thm2.U.diff.even-s",
            "(U_n(alpha^s) - U_n(beta^s))/rt(5) = sum 5^k F_s^(2k) (C(n+1,4k+1) F_{s(n-2k)} + C(n+1,4k+3) F_s L_{s(n-2k-1)}), s even",
            Kind::U,
            false,
            false,
        ),
        IdentityRecord::new("lem1.peven", "T_n(L_p/2) = L_{pn}/2, p even", QQ, &[P, N0])
            .when("p even", |p| even(p.p()))
            .lhs(|p| rat(tr(p.n(), l(p.p()) * fr(1, 2))))
            .rhs(|p| rat(l(p.p() * p.n()) * fr(1, 2))),
        IdentityRecord::new("lem1.podd-neven", "T_n(rt(5) F_p/2) = L_{pn}/2, p odd, n even", Q5, &[P, N0])
            .when("p odd", |p| odd(p.p()))
            .when("n even", |p| even(p.n()))
            .lhs(|p| tn(p.n(), &(rt5() * (f(p.p()) * fr(1, 2)))))
            .rhs(|p| rat(l(p.p() * p.n()) * fr(1, 2))),
        IdentityRecord::new("lem1.podd-nodd", "T_n(rt(5) F_p/2) = rt(5) F_{pn}/2, p odd, n odd", Q5, &[P, N0])
            .when("p odd", |p| odd(p.p()))
            .when("n odd", |p| odd(p.n()))
            .lhs(|p| tn(p.n(), &(rt5() * (f(p.p()) * fr(1, 2)))))
            .rhs(|p| rt5() * (f(p.p() * p.n()) * fr(1, 2))),
        IdentityRecord::new("lem1.threehalf", "T_n(3/2) = L_{2n}/2", QQ, &[N0])
            .lhs(|p| rat(tr(p.n(), fr(3, 2))))
            .rhs(|p| rat(l(2 * p.n()) * fr(1, 2))),
        IdentityRecord::new("lem1.sqrt5half", "T_n(rt(5)/2) = L_n/2 (n even), rt(5) F_n/2 (n odd)", Q5, &[N0])
            .lhs(|p| tn(p.n(), &(rt5() * fr(1, 2))))
            .rhs(|p| {
                let n = p.n();
                if even(n) {
                    rat(l(n) * fr(1, 2))
                } else {
                    rt5() * (f(n) * fr(1, 2))
                }
            }),
        IdentityRecord::new("lem1.sqrt5", "T_n(rt(5)) = L_{3n}/2 (n even), rt(5) F_{3n}/2 (n odd)", Q5, &[N0])
            .lhs(|p| tn(p.n(), &rt5()))
            .rhs(|p| {
                let n = p.n();
                if even(n) {
                    rat(l(3 * n) * fr(1, 2))
                } else {
                    rt5() * (f(3 * n) * fr(1, 2))
                }
            }),
        IdentityRecord::new("thm3.lucas", "sum (-1)^((p-1)(n-k)) c(n,k) L_p^(2k) = L_{2pn}/2", QQ, &[N1, P])
            .lhs(|p| {
                let (n, pp) = (p.n(), p.p());
                rat(csum(n, 1, |k| neg1((pp - 1) * (n - k)) * pw(&l(pp), 2 * k)))
            })
            .rhs(|p| rat(l(2 * p.p() * p.n()) * fr(1, 2))),
        IdentityRecord::new("thm3.fib", "sum (-1)^(p(n-k)) c(n,k) 5^k F_p^(2k) = L_{2pn}/2", QQ, &[N1, P])
            .lhs(|p| {
                let (n, pp) = (p.n(), p.p());
                rat(csum(n, 5, |k| neg1(pp * (n - k)) * pw(&f(pp), 2 * k)))
            })
            .rhs(|p| rat(l(2 * p.p() * p.n()) * fr(1, 2))),
        IdentityRecord::new("thm4.1.upper", "sum (-1)^(n-k) c(n,k) (2 + rt(5) F_{pm})^k = rt(5) F_{pmn}/2, p,m,n odd", Q5, &[P, M0, N1])
            .when("p odd", |p| odd(p.p()))
            .when("m odd", |p| odd(p.m()))
            .when("n odd", |p| odd(p.n()))
            .lhs(|p| thm4_lhs(p, rt5() * f(p.p() * p.m()) + r(2)))
            .rhs(|p| rt5() * (f(p.p() * p.m() * p.n()) * fr(1, 2))),
        IdentityRecord::new("thm4.1.lower", "sum (-1)^(n-k) c(n,k) (2 - rt(5) F_{pm})^k = -rt(5) F_{pmn}/2, p,m,n odd", Q5, &[P, M0, N1])
            .when("p odd", |p| odd(p.p()))
            .when("m odd", |p| odd(p.m()))
            .when("n odd", |p| odd(p.n()))
            .lhs(|p| thm4_lhs(p, rt5() * (-f(p.p() * p.m())) + r(2)))
            .rhs(|p| rt5() * (f(p.p() * p.m() * p.n()) * fr(-1, 2))),
        thm4_l("thm4.2.upper", "sum (-1)^(n-k) c(n,k) (2 + L_{pm})^k = L_{pmn}/2, p odd, m even", 1, false),
        thm4_l("thm4.2.lower", "sum (-1)^(n-k) c(n,k) (2 - L_{pm})^k = (-1)^n L_{pmn}/2, p odd, m even", -1, false),
        thm4_l("thm4.3.upper", "sum (-1)^(n-k) c(n,k) (2 + L_{pm})^k = L_{pmn}/2, p even", 1, true),
        thm4_l("thm4.3.lower", "sum (-1)^(n-k) c(n,k) (2 - L_{pm})^k = (-1)^n L_{pmn}/2, p even", -1, true),
        IdentityRecord::new("ex5.1", "sum c(n,k) = L_{2n}/2", QQ, &[N0])
            .lhs(|p| rat(csum(p.n(), 1, |_| r(1))))
            .rhs(|p| rat(l(2 * p.n()) * fr(1, 2))),
        IdentityRecord::new("ex5.2", "sum (-1)^(n-k) c(n,k) 5^k = L_{2n}/2", QQ, &[N0])
            .lhs(|p| rat(csum(p.n(), 5, |k| neg1(p.n() - k))))
            .rhs(|p| rat(l(2 * p.n()) * fr(1, 2))),
        IdentityRecord::new("ex5.3", "sum c(n,k) 5^k = L_{4n}/2", QQ, &[N0])
            .lhs(|p| rat(csum(p.n(), 5, |_| r(1))))
            .rhs(|p| rat(l(4 * p.n()) * fr(1, 2))),
        IdentityRecord::new("ex5.4", "sum (-1)^(n-k) c(n,k) 9^k = L_{4n}/2", QQ, &[N0])
            .lhs(|p| rat(csum(p.n(), 9, |k| neg1(p.n() - k))))
            .rhs(|p| rat(l(4 * p.n()) * fr(1, 2))),
        ex5_odd("ex5.5", "sum c(n,k) alpha^(-3k) = rt(5) F_n/2, n odd", |n, k| ap(-3 * k) * cw(n, k), 1),
        ex5_odd("ex5.6", "sum (-1)^(k+1) c(n,k) alpha^(3k) = rt(5) F_n/2, n odd", |n, k| ap(3 * k) * (neg1(k + 1) * cw(n, k)), 1),
        ex5_odd("ex5.7", "sum c(n,k) 4^k alpha^(-k) = rt(5) F_{3n}/2, n odd", |n, k| ap(-k) * (pwi(4, k) * cw(n, k)), 3),
        ex5_odd("ex5.8", "sum (-1)^(k+1) c(n,k) 4^k alpha^k = rt(5) F_{3n}/2, n odd", |n, k| ap(k) * (neg1(k + 1) * pwi(4, k) * cw(n, k)), 3),
    ]
}

fn thm4_lhs(p: &Point, base: Elem) -> Elem {
    let n = p.n();
    let mut pw_e = in5(r(1));
    let mut acc = z5();
    for k in 0..=n {
        acc = acc + &pw_e * &in5(neg1(n - k) * cw(n, k));
        pw_e = &pw_e * &base;
    }
    acc
}

fn thm4_l(id: &'static str, anchor: &'static str, sign: i64, p_even: bool) -> IdentityRecord {
    let rec = IdentityRecord::new(id, anchor, TowerKind::Q, &[P, M0, N1]);
    let rec = if p_even {
        rec.when("p even", |p| even(p.p()))
    } else {
        rec.when("p odd", |p| odd(p.p())).when("m even", |p| even(p.m()))
    };
    rec.lhs(move |p| {
        let n = p.n();
        let base = r(2) + r(sign) * l(p.p() * p.m());
        rat(csum(n, 1, |k| neg1(n - k) * pw(&base, k)))
    })
    .rhs(move |p| {
        let n = p.n();
        rat(pw(&r(sign), n) * l(p.p() * p.m() * n) * fr(1, 2))
    })
}

fn ex5_odd(id: &'static str, anchor: &'static str, term: fn(i64, i64) -> Elem, mult: i64) -> IdentityRecord {
    IdentityRecord::new(id, anchor, TowerKind::Q5, &[N0])
        .when("n odd", |p| odd(p.n()))
        .lhs(move |p| {
            let n = p.n();
            esum(z5(), 0, n, |k| term(n, k))
        })
        .rhs(move |p| rt5() * (f(mult * p.n()) * fr(1, 2)))
}

/// Both Chebyshev kinds at `α^s`, `β^s` against the closed binomial sums.
fn thm2(id: &'static str, anchor: &'static str, kind: Kind, sum: bool, s_odd: bool) -> IdentityRecord {
    let rec = IdentityRecord::new(id, anchor, TowerKind::Q5, &[S, N0]);
    let rec = if s_odd {
        rec.when("s odd", |p| odd(p.s()))
    } else {
        rec.when("s even", |p| even(p.s()))
    };
    rec.lhs(move |p| {
        let (n, s) = (p.n(), p.s());
        let a = crate::chebyshev::cheb_eval(kind, n, &ap(s));
        let b = crate::chebyshev::cheb_eval(kind, n, &bp(s));
        if sum {
            a + b
        } else {
            (a - b) / rt5()
        }
    })
    .rhs(move |p| rat(thm2_closed(kind, sum, p.s(), p.n())))
}

pub(crate) fn thm2_closed(kind: Kind, sum: bool, s: i64, n: i64) -> Rational {
    let lead = |k: i64| match kind {
        Kind::T => ch(n, 2 * k),
        Kind::U => ch(n + 1, 2 * k + 1),
    };
    if odd(s) {
        return rsum(0, n / 2, |k| {
            let tail = if sum { l(s * (n - k)) } else { f(s * (n - k)) };
            lead(k) * pw(&l(s), k) * tail
        });
    }
    rsum(0, n / 4, |k| {
        let (b0, b2) = match kind {
            Kind::T => (ch(n, 4 * k), ch(n, 4 * k + 2)),
            Kind::U => (ch(n + 1, 4 * k + 1), ch(n + 1, 4 * k + 3)),
        };
        let outer = pwi(5, k) * pw(&f(s), 2 * k);
        let inner = if sum {
            b0 * l(s * (n - 2 * k)) + r(5) * b2 * f(s) * f(s * (n - 2 * k - 1))
        } else {
            b0 * f(s * (n - 2 * k)) + b2 * f(s) * l(s * (n - 2 * k - 1))
        };
        outer * inner
    })
}
