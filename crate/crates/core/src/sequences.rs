//! Fibonacci and Lucas numbers at any integer index, binomial coefficients and
//! the two binomial weights
//! `c(n,k) = n/(n+k)·C(n+k, n-k)` and `d(n,k) = k/(n+k)·C(n+k, n-k)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("binomial upper index must be non-negative, got {0}")]
    NegativeUpper(i64),
    #[error("weight index k={k} outside 0..={n}")]
    WeightRange { n: i64, k: i64 },
    #[error("d(n,k) requires n >= 1, got n={0}")]
    WeightDegree(i64),
}

/// `(F_n, F_{n+1})` for `n >= 0` by fast doubling.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n / 2);
    // F(2m) = F(m)(2F(m+1) - F(m)),  F(2m+1) = F(m)² + F(m+1)²
    let c = &a * (&b * 2 - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

pub fn fib(n: i64) -> Integer {
    let (f, _) = fib_pair(n.unsigned_abs());
    // F_{-n} = (-1)^{n-1} F_n
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

pub fn lucas(n: i64) -> Integer {
    let (f, g) = fib_pair(n.unsigned_abs());
    // L_n = 2F_{n+1} - F_n; L_{-n} = (-1)^n L_n
    let l: BigInt = g * 2 - f;
    if n < 0 && n % 2 != 0 {
        -l
    } else {
        l
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> Result<Integer, SequenceError> {
    if n < 0 {
        return Err(SequenceError::NegativeUpper(n));
    }
    Ok(choose(n as u64, k))
}

pub(crate) fn choose(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn check_weight(n: i64, k: i64) -> Result<(), SequenceError> {
    if k < 0 || k > n {
        Err(SequenceError::WeightRange { n, k })
    } else {
        Ok(())
    }
}

/// `c(n,k) = n/(n+k)·C(n+k, n-k)` with `c(0,0) = 1`.
pub fn coeff_c(n: i64, k: i64) -> Result<Rational, SequenceError> {
    check_weight(n, k)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let b = choose((n + k) as u64, n - k);
    Ok(Rational::new(b * n, BigInt::from(n + k)))
}

/// `d(n,k) = k/(n+k)·C(n+k, n-k)`.
pub fn coeff_d(n: i64, k: i64) -> Result<Rational, SequenceError> {
    if n < 1 {
        return Err(SequenceError::WeightDegree(n));
    }
    check_weight(n, k)?;
    let b = choose((n + k) as u64, n - k);
    Ok(Rational::new(b * k, BigInt::from(n + k)))
}

/// Terms `a(0), a(1), ...` of OEIS A138573, `(T_n(α) - T_n(β))/√5`, from the
/// integer recurrence `a(n) = 2a(n-1) + 2a(n-2) + 2a(n-3) - a(n-4)` whose
/// characteristic polynomial is `(z² - 2αz + 1)(z² - 2βz + 1)`.
pub fn a138573(count: usize) -> Vec<Integer> {
    let mut out: Vec<Integer> = [0, 1, 2, 5].iter().map(|&v| BigInt::from(v)).collect();
    while out.len() < count {
        let n = out.len();
        let next = (&out[n - 1] + &out[n - 2] + &out[n - 3]) * 2 - &out[n - 4];
        out.push(next);
    }
    out.truncate(count);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;

    fn naive(n: i64, a0: i64, a1: i64) -> BigInt {
        let (mut a, mut b) = (BigInt::from(a0), BigInt::from(a1));
        if n >= 0 {
            for _ in 0..n {
                let c = &a + &b;
                a = std::mem::replace(&mut b, c);
            }
        } else {
            // x_{k-1} = x_{k+1} - x_k
            for _ in 0..(-n) {
                let prev = &b - &a;
                b = std::mem::replace(&mut a, prev);
            }
        }
        a
    }

    #[test]
    fn listed_values() {
        assert_eq!(fib(0), 0.into());
        assert_eq!(fib(10), 55.into());
        assert_eq!(fib(-4), (-3).into());
        assert_eq!(lucas(0), 2.into());
        assert_eq!(lucas(5), 11.into());
        assert_eq!(lucas(-3), (-4).into());
    }

    #[test]
    fn fast_doubling_matches_iteration() {
        for n in -1000..=1000 {
            assert_eq!(fib(n), naive(n, 0, 1), "F_{n}");
            assert_eq!(lucas(n), naive(n, 2, 1), "L_{n}");
        }
    }

    #[test]
    fn addition_law() {
        for m in -60..=60 {
            for n in -60..=60 {
                assert_eq!(fib(m + n), fib(m) * fib(n + 1) + fib(m - 1) * fib(n));
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2).unwrap(), 10.into());
        assert_eq!(binom(3, 5).unwrap(), 0.into());
        assert_eq!(binom(7, 0).unwrap(), 1.into());
        assert_eq!(binom(4, -1).unwrap(), 0.into());
        assert_eq!(binom(-1, 0), Err(SequenceError::NegativeUpper(-1)));
    }

    #[test]
    fn weights() {
        assert_eq!(coeff_c(3, 1).unwrap(), frac(9, 2));
        assert_eq!(coeff_c(0, 0).unwrap(), frac(1, 1));
        for n in 1..20 {
            assert_eq!(coeff_c(n, 0).unwrap(), frac(1, 1));
            assert_eq!(coeff_d(n, 0).unwrap(), frac(0, 1));
        }
        assert_eq!(coeff_d(2, 1).unwrap(), frac(1, 1));
        assert_eq!(coeff_d(2, 2).unwrap(), frac(1, 2));
        assert!(coeff_c(3, 4).is_err());
        assert!(coeff_c(3, -1).is_err());
        assert!(coeff_d(0, 0).is_err());
    }

    #[test]
    fn three_binomial_form() {
        for n in 1..=60i64 {
            for k in 0..=n {
                let three = Rational::new(
                    binom(n + k - 1, k).unwrap() * binom(n, k).unwrap(),
                    binom(2 * k, k).unwrap(),
                );
                assert_eq!(coeff_c(n, k).unwrap(), three);
                assert_eq!(coeff_d(n, k).unwrap(), coeff_c(n, k).unwrap() * frac(k, n));
            }
        }
    }

    #[test]
    fn lucas_shifted_squares() {
        for p in -30..=30i64 {
            let f2 = fib(p) * fib(p);
            let l2 = lucas(p) * lucas(p);
            let minus = lucas(2 * p) - 2;
            let plus = lucas(2 * p) + 2;
            if p % 2 == 0 {
                assert_eq!(minus, &f2 * 5);
                assert_eq!(plus, l2);
            } else {
                assert_eq!(minus, l2);
                assert_eq!(plus, f2 * 5);
            }
        }
    }

    #[test]
    fn a138573_prefix() {
        let expect: Vec<BigInt> = [0, 1, 2, 5, 16, 45, 130, 377, 1088, 3145]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(a138573(10), expect);
        assert_eq!(a138573(2).len(), 2);
    }
}
