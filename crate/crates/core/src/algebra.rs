//! Exact arithmetic: big integers, canonical rationals and towers of quadratic
//! extensions `Q(√r1)(√r2)...`.
//!
//! An [`Elem`] is either a rational or an element `a + b·√r` whose components
//! and radicand live one level down. The radicand chain of an element is its
//! [`Tower`]. Arithmetic between elements of different towers is an error; the
//! only implicit mixing allowed is with a plain [`Rational`] scalar, which lives
//! in every tower.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Integer = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("tower mismatch: {left} vs {right}")]
    TowerMismatch { left: String, right: String },
    #[error("radicand {0} is a square in its base field")]
    SquareRadicand(String),
    #[error("cannot embed an element of {from} into {into}")]
    NotASubtower { from: String, into: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Canonical rational `num/den`.
pub fn rational(num: Integer, den: Integer) -> Result<Rational, AlgebraError> {
    if den.is_zero() {
        return Err(AlgebraError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Integer power of a rational; negative exponents invert.
pub fn rpow(base: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mag = u32::try_from(e.unsigned_abs()).expect("exponent fits in u32");
    let numer = num_traits::Pow::pow(base.numer(), mag);
    let denom = num_traits::Pow::pow(base.denom(), mag);
    if e > 0 {
        Rational::new(numer, denom)
    } else {
        assert!(!numer.is_zero(), "zero to a negative power");
        Rational::new(denom, numer)
    }
}

/// Exact square root of a rational, if it has one.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Element of a quadratic extension tower.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Elem {
    Rat(Rational),
    Quad(Arc<QuadElem>),
}

/// `a + b·√radicand`, with `a`, `b` and `radicand` in the same base tower.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElem {
    pub a: Elem,
    pub b: Elem,
    pub radicand: Elem,
}

/// Ordered radicands from `Q` upward; `radicands[i]` lives in the tower built
/// from `radicands[..i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Tower {
    radicands: Vec<Elem>,
}

impl Tower {
    pub fn rational() -> Self {
        Tower::default()
    }

    /// Adjoins `√radicand`. The radicand must belong to `self` and must not be
    /// a square there.
    pub fn adjoin(&self, radicand: Elem) -> Result<Tower, AlgebraError> {
        let rt = radicand.tower();
        if &rt != self {
            return Err(AlgebraError::TowerMismatch {
                left: self.to_string(),
                right: rt.to_string(),
            });
        }
        if radicand.is_zero() || radicand.sqrt_exact().is_some() {
            return Err(AlgebraError::SquareRadicand(radicand.to_string()));
        }
        let mut radicands = self.radicands.clone();
        radicands.push(radicand);
        Ok(Tower { radicands })
    }

    pub fn adjoin_rational(&self, radicand: &Rational) -> Result<Tower, AlgebraError> {
        self.adjoin(self.lift(radicand))
    }

    pub fn depth(&self) -> usize {
        self.radicands.len()
    }

    pub fn radicands(&self) -> &[Elem] {
        &self.radicands
    }

    /// Tower with the top level removed.
    pub fn base(&self) -> Option<Tower> {
        let (_, rest) = self.radicands.split_last()?;
        Some(Tower {
            radicands: rest.to_vec(),
        })
    }

    pub fn lift(&self, q: &Rational) -> Elem {
        match self.radicands.split_last() {
            None => Elem::Rat(q.clone()),
            Some((r, rest)) => {
                let base = Tower {
                    radicands: rest.to_vec(),
                };
                Elem::quad_unchecked(base.lift(q), base.zero(), r.clone())
            }
        }
    }

    pub fn zero(&self) -> Elem {
        self.lift(&Rational::zero())
    }

    pub fn one(&self) -> Elem {
        self.lift(&Rational::one())
    }

    pub fn int(&self, n: i64) -> Elem {
        self.lift(&int(n))
    }

    /// The adjoined square root of the top level.
    pub fn generator(&self) -> Option<Elem> {
        let base = self.base()?;
        let r = self.radicands.last()?.clone();
        Some(Elem::quad_unchecked(base.zero(), base.one(), r))
    }

    /// `a + b·√r` at the top level of this tower.
    pub fn elem(&self, a: Elem, b: Elem) -> Result<Elem, AlgebraError> {
        let base = self.base().ok_or_else(|| AlgebraError::TowerMismatch {
            left: "Q".into(),
            right: "extension".into(),
        })?;
        for part in [&a, &b] {
            let t = part.tower();
            if t != base {
                return Err(AlgebraError::TowerMismatch {
                    left: base.to_string(),
                    right: t.to_string(),
                });
            }
        }
        Ok(Elem::quad_unchecked(a, b, self.radicands.last().unwrap().clone()))
    }

    pub fn is_prefix_of(&self, other: &Tower) -> bool {
        other.radicands.len() >= self.radicands.len()
            && other.radicands[..self.radicands.len()] == self.radicands[..]
    }

    /// Embeds an element of a subtower (a prefix of `self`) into `self`.
    pub fn embed(&self, x: &Elem) -> Result<Elem, AlgebraError> {
        let from = x.tower();
        if !from.is_prefix_of(self) {
            return Err(AlgebraError::NotASubtower {
                from: from.to_string(),
                into: self.to_string(),
            });
        }
        Ok(self.embed_from(x, from.depth()))
    }

    fn embed_from(&self, x: &Elem, from_depth: usize) -> Elem {
        if self.depth() == from_depth {
            return x.clone();
        }
        let base = self.base().unwrap();
        let inner = base.embed_from(x, from_depth);
        Elem::quad_unchecked(inner, base.zero(), self.radicands.last().unwrap().clone())
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")?;
        for r in &self.radicands {
            write!(f, "(rt({r}))")?;
        }
        Ok(())
    }
}

impl From<Rational> for Elem {
    fn from(q: Rational) -> Self {
        Elem::Rat(q)
    }
}

impl From<i64> for Elem {
    fn from(n: i64) -> Self {
        Elem::Rat(int(n))
    }
}

fn mismatch(x: &Elem, y: &Elem) -> AlgebraError {
    AlgebraError::TowerMismatch {
        left: x.tower().to_string(),
        right: y.tower().to_string(),
    }
}

impl Elem {
    fn quad_unchecked(a: Elem, b: Elem, radicand: Elem) -> Elem {
        Elem::Quad(Arc::new(QuadElem { a, b, radicand }))
    }

    pub fn tower(&self) -> Tower {
        let mut radicands = Vec::new();
        let mut cur = self;
        while let Elem::Quad(q) = cur {
            radicands.push(q.radicand.clone());
            cur = &q.a;
        }
        radicands.reverse();
        Tower { radicands }
    }

    pub fn depth(&self) -> usize {
        match self {
            Elem::Rat(_) => 0,
            Elem::Quad(q) => 1 + q.a.depth(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Rat(q) => q.is_zero(),
            Elem::Quad(q) => q.a.is_zero() && q.b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Elem::Rat(q) => q.is_one(),
            Elem::Quad(q) => q.a.is_one() && q.b.is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Elem::Rat(q) => Some(q),
            Elem::Quad(_) => None,
        }
    }

    /// The rational value when every irrational component vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            Elem::Rat(q) => Some(q.clone()),
            Elem::Quad(q) if q.b.is_zero() => q.a.to_rational(),
            Elem::Quad(_) => None,
        }
    }

    /// `(a, b)` for `a + b·√r`; `None` for a rational.
    pub fn components(&self) -> Option<(&Elem, &Elem)> {
        match self {
            Elem::Rat(_) => None,
            Elem::Quad(q) => Some((&q.a, &q.b)),
        }
    }

    fn same_level(&self, other: &Elem) -> bool {
        match (self, other) {
            (Elem::Rat(_), Elem::Rat(_)) => true,
            (Elem::Quad(x), Elem::Quad(y)) => {
                (Arc::ptr_eq(x, y) || x.radicand == y.radicand) && x.a.same_level(&y.a)
            }
            _ => false,
        }
    }

    pub fn checked_add(&self, other: &Elem) -> Result<Elem, AlgebraError> {
        if !self.same_level(other) {
            return Err(mismatch(self, other));
        }
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Elem) -> Result<Elem, AlgebraError> {
        if !self.same_level(other) {
            return Err(mismatch(self, other));
        }
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn checked_mul(&self, other: &Elem) -> Result<Elem, AlgebraError> {
        if !self.same_level(other) {
            return Err(mismatch(self, other));
        }
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Elem) -> Result<Elem, AlgebraError> {
        if !self.same_level(other) {
            return Err(mismatch(self, other));
        }
        Ok(self.mul_unchecked(&other.inv()?))
    }

    fn add_unchecked(&self, other: &Elem) -> Elem {
        match (self, other) {
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Elem::Quad(x), Elem::Quad(y)) => Elem::quad_unchecked(
                x.a.add_unchecked(&y.a),
                x.b.add_unchecked(&y.b),
                x.radicand.clone(),
            ),
            _ => unreachable!("levels checked by caller"),
        }
    }

    fn mul_unchecked(&self, other: &Elem) -> Elem {
        match (self, other) {
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Elem::Quad(x), Elem::Quad(y)) => {
                // (a1 + b1√r)(a2 + b2√r) = a1a2 + r·b1b2 + (a1b2 + a2b1)√r
                let a = x
                    .a
                    .mul_unchecked(&y.a)
                    .add_unchecked(&x.radicand.mul_unchecked(&x.b.mul_unchecked(&y.b)));
                let b = x
                    .a
                    .mul_unchecked(&y.b)
                    .add_unchecked(&x.b.mul_unchecked(&y.a));
                Elem::quad_unchecked(a, b, x.radicand.clone())
            }
            _ => unreachable!("levels checked by caller"),
        }
    }

    fn neg_ref(&self) -> Elem {
        match self {
            Elem::Rat(x) => Elem::Rat(-x),
            Elem::Quad(q) => Elem::quad_unchecked(q.a.neg_ref(), q.b.neg_ref(), q.radicand.clone()),
        }
    }

    /// Conjugate `a - b·√r` at the top level.
    pub fn conj(&self) -> Elem {
        match self {
            Elem::Rat(_) => self.clone(),
            Elem::Quad(q) => Elem::quad_unchecked(q.a.clone(), q.b.neg_ref(), q.radicand.clone()),
        }
    }

    /// Norm `a² - r·b²` down to the base level.
    pub fn norm(&self) -> Elem {
        match self {
            Elem::Rat(_) => self.mul_unchecked(self),
            Elem::Quad(q) => q
                .a
                .mul_unchecked(&q.a)
                .add_unchecked(&q.radicand.mul_unchecked(&q.b.mul_unchecked(&q.b)).neg_ref()),
        }
    }

    pub fn inv(&self) -> Result<Elem, AlgebraError> {
        match self {
            Elem::Rat(x) => {
                if x.is_zero() {
                    Err(AlgebraError::DivisionByZero)
                } else {
                    Ok(Elem::Rat(x.recip()))
                }
            }
            Elem::Quad(q) => {
                let n_inv = self.norm().inv()?;
                Ok(Elem::quad_unchecked(
                    q.a.mul_unchecked(&n_inv),
                    q.b.neg_ref().mul_unchecked(&n_inv),
                    q.radicand.clone(),
                ))
            }
        }
    }

    /// Exact integer power by binary exponentiation; negative exponents invert.
    pub fn checked_pow(&self, e: i64) -> Result<Elem, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.tower_one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: i64) -> Elem {
        self.checked_pow(e).expect("zero raised to a negative power")
    }

    fn tower_one(&self) -> Elem {
        match self {
            Elem::Rat(_) => Elem::Rat(Rational::one()),
            Elem::Quad(q) => Elem::quad_unchecked(q.a.tower_one(), q.a.tower_zero(), q.radicand.clone()),
        }
    }

    fn tower_zero(&self) -> Elem {
        match self {
            Elem::Rat(_) => Elem::Rat(Rational::zero()),
            Elem::Quad(q) => Elem::quad_unchecked(q.a.tower_zero(), q.a.tower_zero(), q.radicand.clone()),
        }
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, s: &Rational) -> Elem {
        match self {
            Elem::Rat(x) => Elem::Rat(x * s),
            Elem::Quad(q) => Elem::quad_unchecked(q.a.scale(s), q.b.scale(s), q.radicand.clone()),
        }
    }

    /// Addition of a rational scalar.
    pub fn add_rational(&self, s: &Rational) -> Elem {
        match self {
            Elem::Rat(x) => Elem::Rat(x + s),
            Elem::Quad(q) => Elem::quad_unchecked(q.a.add_rational(s), q.b.clone(), q.radicand.clone()),
        }
    }

    /// Square root inside the element's own tower, if one exists.
    pub fn sqrt_exact(&self) -> Option<Elem> {
        match self {
            Elem::Rat(q) => rational_sqrt(q).map(Elem::Rat),
            Elem::Quad(q) => {
                let (a, b, r) = (&q.a, &q.b, &q.radicand);
                if b.is_zero() {
                    if let Some(x) = a.sqrt_exact() {
                        return Some(Elem::quad_unchecked(x, a.tower_zero(), r.clone()));
                    }
                    let y = a.mul_unchecked(&r.inv().ok()?).sqrt_exact()?;
                    return Some(Elem::quad_unchecked(a.tower_zero(), y, r.clone()));
                }
                // (x + y√r)² = a + b√r  ⇒  x² = (a ± √(a² - r b²)) / 2, y = b / 2x
                let m = self.norm().sqrt_exact()?;
                let half = Rational::new(1.into(), 2.into());
                for cand in [a.add_unchecked(&m), a.add_unchecked(&m.neg_ref())] {
                    let x2 = cand.scale(&half);
                    let Some(x) = x2.sqrt_exact() else { continue };
                    if x.is_zero() {
                        continue;
                    }
                    let y = b.mul_unchecked(&x.scale(&int(2)).inv().ok()?);
                    let root = Elem::quad_unchecked(x, y, r.clone());
                    if &root.mul_unchecked(&root) == self {
                        return Some(root);
                    }
                }
                None
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Elem> for &Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{}: {e}", stringify!($method)),
                }
            }
        }
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                (&self).$method(rhs)
            }
        }
        impl $tr<Elem> for &Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Mul<&Rational> for &Elem {
    type Output = Elem;
    fn mul(self, rhs: &Rational) -> Elem {
        self.scale(rhs)
    }
}

impl Mul<Rational> for Elem {
    type Output = Elem;
    fn mul(self, rhs: Rational) -> Elem {
        self.scale(&rhs)
    }
}

impl Mul<&Rational> for Elem {
    type Output = Elem;
    fn mul(self, rhs: &Rational) -> Elem {
        self.scale(rhs)
    }
}

impl Add<Rational> for Elem {
    type Output = Elem;
    fn add(self, rhs: Rational) -> Elem {
        self.add_rational(&rhs)
    }
}

impl Add<&Rational> for Elem {
    type Output = Elem;
    fn add(self, rhs: &Rational) -> Elem {
        self.add_rational(rhs)
    }
}

impl Add<&Rational> for &Elem {
    type Output = Elem;
    fn add(self, rhs: &Rational) -> Elem {
        self.add_rational(rhs)
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}

/// Canonical text of a rational: `-?digits(/digits)?`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_str_radix(10)
    } else {
        format!("{}/{}", q.numer().to_str_radix(10), q.denom().to_str_radix(10))
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, x: &Elem) -> fmt::Result {
    match x {
        Elem::Rat(q) => f.write_str(&format_rational(q)),
        Elem::Quad(_) => write!(f, "({x})"),
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Rat(q) => f.write_str(&format_rational(q)),
            Elem::Quad(q) => {
                write_operand(f, &q.a)?;
                f.write_str(" + ")?;
                write_operand(f, &q.b)?;
                write!(f, "*rt({})", q.radicand)
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), AlgebraError> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{lit}`")))
        }
    }

    fn digits(&mut self) -> Result<BigInt, AlgebraError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn rational(&mut self) -> Result<Rational, AlgebraError> {
        let neg = self.eat("-");
        let mut num = self.digits()?;
        if neg {
            num = -num;
        }
        let had_slash = self.eat("/");
        let den = if had_slash { self.digits()? } else { BigInt::one() };
        let start = self.pos;
        let q = rational(num, den.clone()).map_err(|_| AlgebraError::Parse {
            pos: start,
            msg: "zero denominator".into(),
        })?;
        // Only canonical text is accepted so that printing is a bijection.
        if q.denom() != &den || (had_slash && den.is_one()) {
            return Err(self.err("rational not in lowest terms"));
        }
        Ok(q)
    }

    fn operand(&mut self) -> Result<Elem, AlgebraError> {
        if self.eat("(") {
            let e = self.elem()?;
            self.expect(")")?;
            if e.depth() == 0 {
                return Err(self.err("rational operand must not be parenthesized"));
            }
            Ok(e)
        } else {
            Ok(Elem::Rat(self.rational()?))
        }
    }

    fn elem(&mut self) -> Result<Elem, AlgebraError> {
        let a = self.operand()?;
        if !self.eat(" + ") {
            if a.depth() > 0 {
                return Err(self.err("extension element without `+ b*rt(r)` part"));
            }
            return Ok(a);
        }
        let b = self.operand()?;
        self.expect("*rt(")?;
        let r = self.elem()?;
        self.expect(")")?;
        let tower = r.tower().adjoin(r.clone()).map_err(|e| self.err(e.to_string()))?;
        tower.elem(a, b).map_err(|e| self.err(e.to_string()))
    }
}

/// Parses the canonical text produced by `Display for Elem`.
pub fn parse_elem(text: &str) -> Result<Elem, AlgebraError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.elem()?;
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parses a bare rational in the canonical grammar.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let q = p.rational()?;
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(q)
}

/// `Q(√5)`.
pub fn sqrt5_tower() -> &'static Tower {
    static T: std::sync::OnceLock<Tower> = std::sync::OnceLock::new();
    T.get_or_init(|| Tower::rational().adjoin_rational(&int(5)).unwrap())
}

/// `Q(i)`.
pub fn gaussian_tower() -> &'static Tower {
    static T: std::sync::OnceLock<Tower> = std::sync::OnceLock::new();
    T.get_or_init(|| Tower::rational().adjoin_rational(&int(-1)).unwrap())
}

/// `Q(√5)(i)`.
pub fn sqrt5_i_tower() -> &'static Tower {
    static T: std::sync::OnceLock<Tower> = std::sync::OnceLock::new();
    T.get_or_init(|| sqrt5_tower().adjoin_rational(&int(-1)).unwrap())
}

/// `a + b√5`.
pub fn q5(a: Rational, b: Rational) -> Elem {
    sqrt5_tower().elem(Elem::Rat(a), Elem::Rat(b)).unwrap()
}

pub fn sqrt5() -> Elem {
    q5(Rational::zero(), Rational::one())
}

/// The golden ratio `α = (1+√5)/2` and its conjugate `β = (1-√5)/2`.
pub fn golden() -> (Elem, Elem) {
    let h = frac(1, 2);
    (q5(h.clone(), h.clone()), q5(h.clone(), -h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        assert_eq!(rational(2.into(), 4.into()).unwrap(), frac(1, 2));
        assert_eq!(rational(3.into(), (-6).into()).unwrap(), frac(-1, 2));
        let z = rational(0.into(), 5.into()).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        assert_eq!(rational(1.into(), 0.into()), Err(AlgebraError::ZeroDenominator));
    }

    #[test]
    fn golden_pair() {
        let (a, b) = golden();
        assert_eq!(a.components().unwrap(), (&Elem::Rat(frac(1, 2)), &Elem::Rat(frac(1, 2))));
        assert_eq!(&a * &b, sqrt5_tower().int(-1));
        assert_eq!(&a + &b, sqrt5_tower().one());
        assert_eq!(&a - &b, sqrt5());
    }

    #[test]
    fn division_by_root_five() {
        let x = sqrt5_tower().one() / sqrt5();
        assert_eq!(x, q5(int(0), frac(1, 5)));
        assert_eq!(
            sqrt5().checked_div(&sqrt5_tower().zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn golden_powers() {
        let (a, _) = golden();
        assert_eq!(a.pow(5), q5(frac(11, 2), frac(5, 2)));
        assert_eq!(a.pow(0), sqrt5_tower().one());
        assert_eq!(a.pow(-1), q5(frac(-1, 2), frac(1, 2)));
        assert!(sqrt5_tower().zero().checked_pow(-1).is_err());
    }

    #[test]
    fn cross_tower_is_an_error() {
        let i = gaussian_tower().generator().unwrap();
        assert!(matches!(sqrt5().checked_add(&i), Err(AlgebraError::TowerMismatch { .. })));
        assert!(matches!(
            sqrt5().checked_mul(&Elem::from(2)),
            Err(AlgebraError::TowerMismatch { .. })
        ));
    }

    #[test]
    fn square_radicands_rejected() {
        assert!(Tower::rational().adjoin_rational(&int(4)).is_err());
        assert!(Tower::rational().adjoin_rational(&frac(9, 16)).is_err());
        // 6 + 2√5 = (1 + √5)²
        assert!(sqrt5_tower().adjoin(q5(int(6), int(2))).is_err());
        assert!(sqrt5_tower().adjoin(q5(int(-1), int(0))).is_ok());
        // α³/4 is not a square in Q(√5)
        let (a, _) = golden();
        assert!(sqrt5_tower().adjoin(a.pow(3).scale(&frac(1, 4))).is_ok());
    }

    #[test]
    fn sqrt_exact_in_extension() {
        let x = q5(frac(3, 2), frac(-7, 3));
        let sq = &x * &x;
        let r = sq.sqrt_exact().unwrap();
        assert!(r == x || r == -x.clone());
        assert!(sqrt5().sqrt_exact().is_none());
        assert_eq!(q5(int(5), int(0)).sqrt_exact(), Some(sqrt5()));
    }

    #[test]
    fn embed_and_nested_arith() {
        let t = sqrt5_i_tower();
        let i = t.generator().unwrap();
        assert_eq!(&i * &i, t.int(-1));
        let s = t.embed(&sqrt5()).unwrap();
        let z = &s + &i;
        let w = &z * &z.conj();
        assert_eq!(w, t.int(6));
        assert!(gaussian_tower().embed(&sqrt5()).is_err());
    }

    #[test]
    fn text_grammar() {
        let (a, _) = golden();
        assert_eq!(a.to_string(), "1/2 + 1/2*rt(5)");
        assert_eq!(Elem::from(-3).to_string(), "-3");
        let t = sqrt5_i_tower();
        let z = t.embed(&a).unwrap() + t.generator().unwrap();
        let s = z.to_string();
        assert_eq!(s, "(1/2 + 1/2*rt(5)) + (1 + 0*rt(5))*rt(-1 + 0*rt(5))");
        assert_eq!(parse_elem(&s).unwrap(), z);
        assert!(parse_elem("2/4").is_err());
        assert!(parse_elem("1 + 1*rt(4)").is_err());
        assert!(parse_elem("1/0").is_err());
        assert!(parse_elem("(3)").is_err());
    }
}
