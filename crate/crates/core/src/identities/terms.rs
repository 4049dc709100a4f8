//! Short helpers used by the catalog transcriptions.

use num_traits::{One, Zero};

use crate::algebra::{frac, gaussian_tower, int, q5, rpow, sqrt5_i_tower, sqrt5_tower, Elem, Integer, Rational};
use crate::chebyshev::{cheb_eval, cheb_eval_even, EvenForm, Kind};
use crate::sequences::{choose, coeff_c, coeff_d, fib, lucas};

pub fn r(n: i64) -> Rational {
    int(n)
}

pub fn fr(a: i64, b: i64) -> Rational {
    frac(a, b)
}

pub fn f(n: i64) -> Rational {
    Rational::from_integer(fib(n))
}

pub fn l(n: i64) -> Rational {
    Rational::from_integer(lucas(n))
}

pub fn fi(n: i64) -> Integer {
    fib(n)
}

pub fn li(n: i64) -> Integer {
    lucas(n)
}

pub fn ipow(b: &Integer, e: i64) -> Integer {
    num_traits::pow(b.clone(), usize::try_from(e).expect("non-negative exponent"))
}

pub fn sgn(e: i64) -> Integer {
    if e.rem_euclid(2) == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

fn ibin(n: i64, k: i64) -> Integer {
    if n < 0 {
        return Integer::zero();
    }
    choose(n as u64, k)
}

/// `2·c(n,k) = 2 C(n+k, 2k) - C(n+k-1, 2k-1)`, an integer.
pub fn c2(n: i64, k: i64) -> Integer {
    Integer::from(2) * ibin(n + k, 2 * k) - ibin(n + k - 1, 2 * k - 1)
}

/// `2·d(n,k) = C(n+k-1, 2k-1)`, an integer.
pub fn d2(n: i64, k: i64) -> Integer {
    ibin(n + k - 1, 2 * k - 1)
}

pub fn zq(z: Integer) -> Rational {
    Rational::from_integer(z)
}

/// `c(n,k) = n/(n+k)·C(n+k, n-k)`.
pub fn cw(n: i64, k: i64) -> Rational {
    coeff_c(n, k).expect("weight index in range")
}

/// `d(n,k) = k/(n+k)·C(n+k, n-k)`.
pub fn dw(n: i64, k: i64) -> Rational {
    coeff_d(n, k).expect("weight index in range")
}

/// `C(n+k, n-k)`.
pub fn bw(n: i64, k: i64) -> Rational {
    ch(n + k, n - k)
}

/// Zero-extended binomial coefficient as a rational.
pub fn ch(n: i64, k: i64) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    Rational::from_integer(choose(n as u64, k))
}

pub fn pw(b: &Rational, e: i64) -> Rational {
    rpow(b, e)
}

pub fn pwi(b: i64, e: i64) -> Rational {
    rpow(&int(b), e)
}

/// `(-1)^e` decided by parity.
pub fn neg1(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

pub fn even(n: i64) -> bool {
    n.rem_euclid(2) == 0
}

pub fn rsum(lo: i64, hi: i64, mut g: impl FnMut(i64) -> Rational) -> Rational {
    let mut acc = Rational::zero();
    for k in lo..=hi {
        acc += g(k);
    }
    acc
}

pub fn esum(zero: Elem, lo: i64, hi: i64, mut g: impl FnMut(i64) -> Elem) -> Elem {
    let mut acc = zero;
    for k in lo..=hi {
        acc = acc + g(k);
    }
    acc
}

pub fn rat(q: Rational) -> Elem {
    Elem::Rat(q)
}

pub fn z5() -> Elem {
    sqrt5_tower().zero()
}

pub fn in5(q: Rational) -> Elem {
    sqrt5_tower().lift(&q)
}

pub fn rt5() -> Elem {
    q5(Rational::zero(), Rational::one())
}

/// `α^e = (L_e + F_e√5)/2`.
pub fn ap(e: i64) -> Elem {
    q5(l(e) * fr(1, 2), f(e) * fr(1, 2))
}

/// `β^e = (L_e - F_e√5)/2`.
pub fn bp(e: i64) -> Elem {
    q5(l(e) * fr(1, 2), -f(e) * fr(1, 2))
}

pub fn zi() -> Elem {
    gaussian_tower().zero()
}

pub fn ini(q: Rational) -> Elem {
    gaussian_tower().lift(&q)
}

/// `i^e` in `Q(i)`.
pub fn ip(e: i64) -> Elem {
    let t = gaussian_tower();
    let (a, b) = match e.rem_euclid(4) {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    };
    t.elem(Elem::from(a), Elem::from(b)).unwrap()
}

pub fn z5i() -> Elem {
    sqrt5_i_tower().zero()
}

/// Lifts an element of `Q` or `Q(√5)` into `Q(√5)(i)`.
pub fn in5i(x: &Elem) -> Elem {
    let x = if x.depth() == 0 { in5(x.to_rational().unwrap()) } else { x.clone() };
    sqrt5_i_tower().embed(&x).unwrap()
}

/// `i^e` in `Q(√5)(i)`.
pub fn ip5(e: i64) -> Elem {
    let t = sqrt5_i_tower();
    let one = in5(Rational::one());
    let (a, b) = match e.rem_euclid(4) {
        0 => (one.clone(), z5()),
        1 => (z5(), one.clone()),
        2 => (-one.clone(), z5()),
        _ => (z5(), -one),
    };
    t.elem(a, b).unwrap()
}

/// `a·i` with `a` in `Q(√5)`.
pub fn times_i5(a: Elem) -> Elem {
    sqrt5_i_tower().elem(z5(), a).unwrap()
}

pub fn tn(n: i64, x: &Elem) -> Elem {
    cheb_eval(Kind::T, n, x)
}

pub fn un(n: i64, x: &Elem) -> Elem {
    cheb_eval(Kind::U, n, x)
}

pub fn tr(n: i64, x: Rational) -> Rational {
    tn(n, &rat(x)).to_rational().unwrap()
}

pub fn ur(n: i64, x: Rational) -> Rational {
    un(n, &rat(x)).to_rational().unwrap()
}

/// `T_{2n}(x)` from `s = x²`.
pub fn t2n(n: i64, s: &Elem) -> Elem {
    cheb_eval_even(EvenForm::T2n, n, s)
}

/// `U_{2n-1}(x)/x` from `s = x²`.
pub fn vn(n: i64, s: &Elem) -> Elem {
    cheb_eval_even(EvenForm::U2nm1OverX, n, s)
}

/// `x·U_{2n-1}(x)` from `s = x²`.
pub fn xun(n: i64, s: &Elem) -> Elem {
    cheb_eval_even(EvenForm::XU2nm1, n, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_weights_match_rational_weights() {
        for n in 0..20 {
            for k in 0..=n {
                assert_eq!(zq(c2(n, k)), cw(n, k) * r(2), "c n={n} k={k}");
                if k >= 1 {
                    assert_eq!(zq(d2(n, k)), dw(n, k) * r(2), "d n={n} k={k}");
                }
            }
        }
    }
}
