//! Chebyshev polynomials `T_n`, `U_n`: dense coefficient form over `Q`, exact
//! evaluation in any tower, and the even/odd reductions in `s = x²`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{format_rational, int, AlgebraError, Elem, Rational};
use crate::sequences::choose;

/// Largest degree built in coefficient form by the default entry points.
pub const MAX_COEFF_DEGREE: i64 = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    T,
    U,
}

impl std::str::FromStr for Kind {
    type Err = ChebError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" | "t" => Ok(Kind::T),
            "U" | "u" => Ok(Kind::U),
            other => Err(ChebError::UnknownKind(other.to_string())),
        }
    }
}

/// Radical-free forms in `s = x²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvenForm {
    /// `T_{2n}(x) = T_n(2s - 1)`.
    T2n,
    /// `x·U_{2n-1}(x)`.
    XU2nm1,
    /// `U_{2n-1}(x)/x`.
    U2nm1OverX,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChebError {
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("degree {0} exceeds the coefficient-form cap {MAX_COEFF_DEGREE}")]
    DegreeCap(i64),
    #[error("unknown polynomial kind `{0}`")]
    UnknownKind(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Dense polynomial with rational coefficients, `coeffs[i]` multiplying `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by `x`; the constant term must vanish.
    pub fn div_x(&self) -> Option<Poly> {
        match self.coeffs.first() {
            None => Some(Poly::zero()),
            Some(c0) if c0.is_zero() => Some(Poly::new(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in the tower of `x`.
    pub fn eval(&self, x: &Elem) -> Elem {
        let tower = x.tower();
        self.coeffs
            .iter()
            .rev()
            .fold(tower.zero(), |acc, c| &acc * x + c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    /// `c_k*x^k + ... + c_1*x + c_0`, descending, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let c = format_rational(c);
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Coefficient form of `T_n` or `U_n` via the three-term recurrence.
pub fn cheb_poly(kind: Kind, n: i64) -> Result<Poly, ChebError> {
    if n < 0 {
        return Err(ChebError::NegativeDegree(n));
    }
    if n > MAX_COEFF_DEGREE {
        return Err(ChebError::DegreeCap(n));
    }
    Ok(cheb_poly_uncapped(kind, n as usize))
}

pub(crate) fn cheb_poly_uncapped(kind: Kind, n: usize) -> Poly {
    let two_x = Poly::monomial(int(2), 1);
    let mut prev = Poly::constant(Rational::one());
    if n == 0 {
        return prev;
    }
    let mut cur = match kind {
        Kind::T => Poly::x(),
        Kind::U => two_x.clone(),
    };
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `T_n(x)` or `U_n(x)` by the recurrence, in the tower of `x`.
///
/// Defined for every integer `n` through `T_{-n} = T_n`, `U_{-1} = 0` and
/// `U_{-n} = -U_{n-2}`.
pub fn cheb_eval(kind: Kind, n: i64, x: &Elem) -> Elem {
    let tower = x.tower();
    if n < 0 {
        return match kind {
            Kind::T => cheb_eval(kind, -n, x),
            Kind::U if n == -1 => tower.zero(),
            Kind::U => -cheb_eval(kind, -n - 2, x),
        };
    }
    let two_x = x.scale(&int(2));
    let mut prev = tower.one();
    if n == 0 {
        return prev;
    }
    let mut cur = match kind {
        Kind::T => x.clone(),
        Kind::U => two_x.clone(),
    };
    for _ in 1..n {
        let next = &two_x * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Evaluates the explicit binomial representations
/// `T_n(x) = Σ C(n,2k)(x²-1)^k x^{n-2k}`, `U_n(x) = Σ C(n+1,2k+1)(x²-1)^k x^{n-2k}`.
pub fn cheb_rep_eval(kind: Kind, n: i64, x: &Elem) -> Elem {
    if n < 0 {
        return cheb_eval(kind, n, x);
    }
    let tower = x.tower();
    let d = x * x + &int(-1);
    let mut acc = tower.zero();
    for k in 0..=n / 2 {
        let c = match kind {
            Kind::T => choose(n as u64, 2 * k),
            Kind::U => choose(n as u64 + 1, 2 * k + 1),
        };
        let term = d.pow(k) * x.pow(n - 2 * k);
        acc = acc + term.scale(&Rational::from_integer(c));
    }
    acc
}

/// Evaluates a Chebyshev quantity of even/odd parity given only `s = x²`.
///
/// `T2n` needs `n >= 0`; the `U` forms use the paired recurrence
/// `A_{n+1} = 2s·B_n - A_n`, `B_n = 2A_n - B_{n-1}` with `A_n = x·U_{2n-1}`,
/// `B_n = U_{2n}`, `A_0 = 0`, `B_0 = 1` (and the analogous one for `U_{2n-1}/x`).
pub fn cheb_eval_even(form: EvenForm, n: i64, s: &Elem) -> Elem {
    let tower = s.tower();
    match form {
        EvenForm::T2n => {
            let y = s.scale(&int(2)) + &int(-1);
            cheb_eval(Kind::T, n, &y)
        }
        EvenForm::XU2nm1 => {
            let mut a = tower.zero();
            let mut b = tower.one();
            for _ in 0..n {
                a = (s * &b).scale(&int(2)) - a;
                b = a.scale(&int(2)) - b;
            }
            a
        }
        EvenForm::U2nm1OverX => {
            // V_{n+1} = 2B_n - V_n, B_{n+1} = 2s·V_{n+1} - B_n
            let mut v = tower.zero();
            let mut b = tower.one();
            for _ in 0..n {
                v = b.scale(&int(2)) - v;
                b = (s * &v).scale(&int(2)) - b;
            }
            v
        }
    }
}

/// `T_n(T_m(x)) == T_{nm}(x)`.
pub fn cheb_compose_check(n: i64, m: i64, x: &Elem) -> bool {
    let inner = cheb_eval(Kind::T, m, x);
    cheb_eval(Kind::T, n, &inner) == cheb_eval(Kind::T, n * m, x)
}

pub fn poly_derivative(p: &Poly) -> Poly {
    Poly::new(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * int(k as i64))
            .collect(),
    )
}

/// Binet-like evaluation in the tower adjoining `√(x²-1)` over the tower of
/// `x`. Fails when `x² - 1` is zero or already a square.
pub fn cheb_binet_eval(kind: Kind, n: i64, x: &Elem) -> Result<Elem, ChebError> {
    if n < 0 {
        return Err(ChebError::NegativeDegree(n));
    }
    let d = x * x + &int(-1);
    let tower = x.tower().adjoin(d)?;
    let root = tower.generator().expect("extension has a generator");
    let xe = tower.embed(x)?;
    let plus = &xe + &root;
    let minus = &xe - &root;
    let half = crate::algebra::frac(1, 2);
    Ok(match kind {
        Kind::T => (plus.pow(n) + minus.pow(n)).scale(&half),
        Kind::U => (plus.pow(n + 1) - minus.pow(n + 1)).scale(&half) / root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{frac, golden, q5, sqrt5_tower};

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn small_polys() {
        assert_eq!(cheb_poly(Kind::T, 3).unwrap(), p(&[0, -3, 0, 4]));
        assert_eq!(cheb_poly(Kind::U, 2).unwrap(), p(&[-1, 0, 4]));
        assert_eq!(cheb_poly(Kind::T, 0).unwrap(), p(&[1]));
        assert_eq!(cheb_poly(Kind::T, 3).unwrap().to_string(), "4*x^3 + -3*x");
        assert!(cheb_poly(Kind::T, -1).is_err());
        assert!(cheb_poly(Kind::T, MAX_COEFF_DEGREE + 1).is_err());
    }

    #[test]
    fn evaluations() {
        assert_eq!(cheb_eval(Kind::T, 4, &frac(3, 2).into()), frac(47, 2).into());
        for n in 0..=50 {
            assert_eq!(cheb_eval(Kind::T, n, &Elem::from(1)), Elem::from(1));
        }
        let (a, _) = golden();
        assert_eq!(cheb_eval(Kind::T, 3, &a), q5(frac(13, 2), frac(5, 2)));
        assert_eq!(cheb_eval(Kind::U, -1, &a), sqrt5_tower().zero());
        assert_eq!(cheb_eval(Kind::U, 0, &a), sqrt5_tower().one());
    }

    #[test]
    fn representation_matches_recurrence() {
        assert_eq!(
            cheb_rep_eval(Kind::T, 5, &Elem::from(2)),
            cheb_eval(Kind::T, 5, &Elem::from(2))
        );
        let h: Elem = frac(1, 2).into();
        assert_eq!(cheb_rep_eval(Kind::U, 3, &h), cheb_eval(Kind::U, 3, &h));
        assert_eq!(cheb_rep_eval(Kind::T, 0, &h), Elem::from(1));
    }

    #[test]
    fn even_forms() {
        assert_eq!(cheb_eval_even(EvenForm::T2n, 5, &Elem::from(1)), Elem::from(1));
        let (a, _) = golden();
        let s = a.pow(3).scale(&frac(1, 4));
        assert_eq!(cheb_eval_even(EvenForm::T2n, 1, &s), q5(int(0), frac(1, 2)));
        let s: Elem = frac(7, 3).into();
        assert_eq!(cheb_eval_even(EvenForm::XU2nm1, 1, &s), s.scale(&int(2)));
        assert_eq!(cheb_eval_even(EvenForm::XU2nm1, 0, &s), Elem::from(0));
        // against direct evaluation at rational x
        for xi in [-3i64, -1, 0, 2, 5] {
            let x: Elem = frac(xi, 2).into();
            let s = &x * &x;
            for n in 0..=20 {
                assert_eq!(cheb_eval_even(EvenForm::T2n, n, &s), cheb_eval(Kind::T, 2 * n, &x));
                assert_eq!(
                    cheb_eval_even(EvenForm::XU2nm1, n, &s),
                    &x * &cheb_eval(Kind::U, 2 * n - 1, &x)
                );
                if xi != 0 {
                    assert_eq!(
                        cheb_eval_even(EvenForm::U2nm1OverX, n, &s),
                        cheb_eval(Kind::U, 2 * n - 1, &x) / &x
                    );
                }
            }
        }
    }

    #[test]
    fn compose_examples() {
        assert!(cheb_compose_check(2, 3, &frac(1, 2).into()));
        for m in 0..6 {
            assert!(cheb_compose_check(1, m, &frac(2, 7).into()));
            assert!(cheb_compose_check(0, m, &frac(-5, 3).into()));
        }
    }

    #[test]
    fn derivatives() {
        let d3 = poly_derivative(&cheb_poly(Kind::T, 3).unwrap());
        assert_eq!(d3, p(&[-3, 0, 12]));
        assert_eq!(d3, cheb_poly(Kind::U, 2).unwrap().scale(&int(3)));
        assert_eq!(poly_derivative(&cheb_poly(Kind::T, 1).unwrap()), p(&[1]));
        assert_eq!(poly_derivative(&cheb_poly(Kind::T, 0).unwrap()), Poly::zero());
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn binet_requires_nonsquare() {
        assert!(cheb_binet_eval(Kind::T, 3, &Elem::from(1)).is_err());
        // 5/4 - 1 = 1/4 is a square
        assert!(cheb_binet_eval(Kind::T, 3, &frac(5, 4).into()).is_err());
        let x: Elem = Elem::from(2);
        let v = cheb_binet_eval(Kind::T, 6, &x).unwrap();
        assert_eq!(v.to_rational(), cheb_eval(Kind::T, 6, &x).to_rational());
    }
}
