//! Alternating sums of binomial ratios, `Σ (-1)^k C(n+m, 2k+δ)/C(n,k)`, and
//! the relations tying them to the Chebyshev expansions.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{frac, int, rpow, Rational};
use crate::sequences::choose;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error("({n}, {m}) violates {constraint}")]
    Constraint { n: i64, m: i64, constraint: &'static str },
    #[error("no closed form for m = {0}; m must lie in 0..=4")]
    UnsupportedM(i64),
    #[error("closed form for m = {m} needs n >= {min}, got {n}")]
    BelowThreshold { m: i64, n: i64, min: i64 },
    #[error("delta must be 0 or 1, got {0}")]
    Delta(i64),
}

/// Zero-extended binomial; zero for a negative top.
fn bin(n: i64, k: i64) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    Rational::from_integer(choose(n as u64, k))
}

fn m2k(k: i64) -> Rational {
    rpow(&int(-2), k)
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn recip_sum(n: i64) -> Rational {
    (0..=n).map(|k| bin(n, k).recip()).sum()
}

/// `Σ_{k=0}^n (-1)^k C(n+m, 2k+δ)/C(n,k)` by direct summation.
pub fn chu_guo_lhs(n: i64, m: i64, delta: i64) -> Result<Rational, CombError> {
    if delta != 0 && delta != 1 {
        return Err(CombError::Delta(delta));
    }
    if n < 0 || m < 0 {
        return Err(CombError::Constraint { n, m, constraint: "n >= 0 and m >= 0" });
    }
    Ok(ratio_sum(n, m, delta))
}

fn ratio_sum(n: i64, m: i64, delta: i64) -> Rational {
    (0..=n).map(|k| sign(k) * bin(n + m, 2 * k + delta) / bin(n, k)).sum()
}

/// Smallest `n` for which the `m`-th closed form is defined.
pub fn chu_guo_min_n(m: i64) -> Result<i64, CombError> {
    match m {
        0 | 1 => Ok(0),
        2 => Ok(1),
        3 => Ok(2),
        4 => Ok(3),
        _ => Err(CombError::UnsupportedM(m)),
    }
}

/// Closed value of `Σ (-1)^k C(n+m, 2k)/C(n,k)` for `m` in `0..=4`.
///
/// For `m >= 2` the known evaluations are stated for `Σ (-1)^(k+1)`; they are
/// negated here so every case returns the same sum as [`chu_guo_lhs`].
pub fn chu_guo_closed(n: i64, m: i64) -> Result<Rational, CombError> {
    let min = chu_guo_min_n(m)?;
    if n < min {
        return Err(CombError::BelowThreshold { m, n, min });
    }
    let nr = int(n);
    Ok(match m {
        0 => int(n + 1) - &nr / int(2) * recip_sum(n),
        1 => int(2) - recip_sum(n),
        2 => -(int(2) / nr),
        3 => -(int(2) * int(n - 3) / (int(n) * int(n - 1))),
        _ => -(int(2) * int(n * n - 7 * n + 16) / (int(n - 2) * int(n - 1) * nr)),
    })
}

fn check_a(n: i64, m: i64) -> Result<(), CombError> {
    if n >= 0 && 0 < n + m && n + m <= 2 * n + 1 {
        Ok(())
    } else {
        Err(CombError::Constraint { n, m, constraint: "0 < n+m <= 2n+1" })
    }
}

fn check_b(n: i64, m: i64) -> Result<(), CombError> {
    if n >= 0 && m - 1 <= n && n + m >= 1 {
        Ok(())
    } else {
        Err(CombError::Constraint { n, m, constraint: "m-1 <= n and n+m >= 1" })
    }
}

/// The single-sum relation obtained by integrating the first expansion against `x^(n-m+1)`.
pub fn comb_relation_a(n: i64, m: i64) -> Result<(Rational, Rational), CombError> {
    check_a(n, m)?;
    let s = n + m;
    let lhs = (0..=s)
        .map(|k| m2k(k) / (int(s + k) * int(n - m + k + 2)) * bin(s + k, s - k) / bin(n - m + k + 1, k))
        .sum();
    let rhs = ratio_sum(n, m, 0) / (int(2) * int(n + 1) * int(s));
    Ok((lhs, rhs))
}

/// The same relation written with four binomial coefficients.
pub fn comb_relation_a4(n: i64, m: i64) -> Result<(Rational, Rational), CombError> {
    check_a(n, m)?;
    let s = n + m;
    let lhs = (0..=s)
        .map(|k| {
            m2k(k) / int(n - m + k + 2) * bin(s + k - 1, k) / bin(n - m + k + 1, k) * bin(s, k) / bin(2 * k, k)
        })
        .sum();
    let rhs = ratio_sum(n, m, 0) / (int(2) * int(n + 1));
    Ok((lhs, rhs))
}

/// The double-sum relation coming from the second expansion.
pub fn comb_relation_b(n: i64, m: i64) -> Result<(Rational, Rational), CombError> {
    check_b(n, m)?;
    let s = n + m;
    let mut lhs = Rational::zero();
    for j in 0..=s {
        for k in 0..=s - j {
            let e = k + j;
            lhs += m2k(e) / (int(s + e) * int(n - m + j + 2)) * bin(s + e, s - e) * bin(e, j);
        }
    }
    let rhs = sign(s) * ratio_sum(n, m, 0) / (int(2) * int(n + 1) * int(s));
    Ok((lhs, rhs))
}

/// A named special case of the relations, checked at a single `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Display {
    /// Relation A at `m = 0`.
    AZero,
    /// Relation A at `m = n`.
    ADouble,
    /// The `m = 0` case rewritten through the reciprocal-binomial sum.
    AZeroReciprocal,
    E1,
    E2,
    E3,
    E4,
    /// Relation B at `m = 0`.
    BZero,
    /// Relation B at `m = n`.
    BDouble,
}

impl Display {
    pub const ALL: [Display; 9] = [
        Display::AZero,
        Display::ADouble,
        Display::AZeroReciprocal,
        Display::E1,
        Display::E2,
        Display::E3,
        Display::E4,
        Display::BZero,
        Display::BDouble,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Display::AZero => "A.m0",
            Display::ADouble => "A.mn",
            Display::AZeroReciprocal => "A.m0.recip",
            Display::E1 => "E1",
            Display::E2 => "E2",
            Display::E3 => "E3",
            Display::E4 => "E4",
            Display::BZero => "B.m0",
            Display::BDouble => "B.mn",
        }
    }

    pub fn min_n(self) -> i64 {
        match self {
            Display::E1 => 0,
            Display::E3 => 2,
            Display::E4 => 3,
            _ => 1,
        }
    }

    /// Both sides at `n`.
    pub fn eval(self, n: i64) -> Result<(Rational, Rational), CombError> {
        if n < self.min_n() {
            return Err(CombError::Constraint { n, m: 0, constraint: "n below the display's range" });
        }
        let nr = int(n);
        Ok(match self {
            Display::AZero => {
                let lhs = (0..=n)
                    .map(|k| m2k(k) / (int(n + k) * int(n + k + 1) * int(n + k + 2)) * bin(n + k, n - k) / bin(n + k, k))
                    .sum();
                let rhs = ratio_sum(n, 0, 0) / (int(2) * &nr * int((n + 1) * (n + 1)));
                (lhs, rhs)
            }
            Display::ADouble => {
                let lhs = (0..=2 * n)
                    .map(|k| m2k(k) / (int(2 * n + k) * int(k + 1) * int(k + 2)) * bin(2 * n + k, 2 * n - k))
                    .sum();
                let rhs = ratio_sum(n, n, 0) / (int(4) * &nr * int(n + 1));
                (lhs, rhs)
            }
            Display::AZeroReciprocal => {
                let lhs = (0..=n)
                    .map(|k| m2k(k) / (int(n + k) * int(n + k + 1) * int(n + k + 2)) * bin(n, k) / bin(2 * k, k))
                    .sum();
                let rhs = frac(1, 2 * n * (n + 1)) - recip_sum(n) / int(4 * (n + 1) * (n + 1));
                (lhs, rhs)
            }
            Display::E1 => {
                let lhs = (0..=n + 1)
                    .map(|k| m2k(k) / int((n + 1 + k) * (n + 1 + k)) * bin(n + 1 + k, n + 1 - k) / bin(n + k, k))
                    .sum();
                let rhs = (int(2) - recip_sum(n)) / int(2 * (n + 1) * (n + 1));
                (lhs, rhs)
            }
            Display::E2 => {
                let lhs = (0..=n + 2)
                    .map(|k| m2k(k) / (int(n + k) * int(n + 2 + k)) * bin(n + 2 + k, n + 2 - k) / bin(n - 1 + k, k))
                    .sum();
                (lhs, -(Rational::one() / (nr * int(n + 1) * int(n + 2))))
            }
            Display::E3 => {
                let lhs = (0..=n + 3)
                    .map(|k| m2k(k) / (int(n - 1 + k) * int(n + 3 + k)) * bin(n + 3 + k, n + 3 - k) / bin(n - 2 + k, k))
                    .sum();
                let rhs = int(3 - n) / (int(n - 1) * nr * int(n + 1) * int(n + 3));
                (lhs, rhs)
            }
            Display::E4 => {
                let lhs = (0..=n + 4)
                    .map(|k| m2k(k) / (int(n - 2 + k) * int(n + 4 + k)) * bin(n + 4 + k, n + 4 - k) / bin(n - 3 + k, k))
                    .sum();
                let rhs = int(-n * n + 7 * n - 16) / (int(n - 2) * int(n - 1) * nr * int(n + 1) * int(n + 4));
                (lhs, rhs)
            }
            Display::BZero => {
                let mut lhs = Rational::zero();
                for j in 0..=n {
                    for k in 0..=n - j {
                        let e = k + j;
                        lhs += m2k(e) / (int(n + e) * int(n + j + 2)) * bin(n + e, n - e) * bin(e, j);
                    }
                }
                let rhs = sign(n) * ratio_sum(n, 0, 0) / (int(2) * &nr * int(n + 1));
                (lhs, rhs)
            }
            Display::BDouble => {
                let mut lhs = Rational::zero();
                for j in 0..=2 * n {
                    for k in 0..=2 * n - j {
                        let e = k + j;
                        lhs += m2k(e) / (int(2 * n + e) * int(j + 2)) * bin(2 * n + e, 2 * n - e) * bin(e, j);
                    }
                }
                let rhs = ratio_sum(n, n, 0) / (int(4) * &nr * int(n + 1));
                (lhs, rhs)
            }
        })
    }
}

impl fmt::Display for Display {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Upper `n` for the reciprocal-sum closed forms in [`verify_section5`].
pub const CHU_GUO_MAX_N: i64 = 100;

/// One checked point of the section sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section5Check {
    pub family: String,
    pub n: i64,
    pub m: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Section5Check {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCount {
    pub family: String,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section5Summary {
    pub max_total: i64,
    pub checks: Vec<Section5Check>,
}

impl Section5Summary {
    pub fn failures(&self) -> impl Iterator<Item = &Section5Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Per-family totals, in order of first appearance.
    pub fn counts(&self) -> Vec<FamilyCount> {
        let mut out: Vec<FamilyCount> = Vec::new();
        for c in &self.checks {
            let idx = match out.iter().position(|f| f.family == c.family) {
                Some(i) => i,
                None => {
                    out.push(FamilyCount { family: c.family.clone(), checked: 0, failed: 0 });
                    out.len() - 1
                }
            };
            out[idx].checked += 1;
            if !c.passed() {
                out[idx].failed += 1;
            }
        }
        out
    }
}

#[derive(Clone, Copy)]
enum Job {
    A(i64, i64),
    A4(i64, i64),
    B(i64, i64),
    Disp(Display, i64),
    ChuGuo(i64, i64),
}

fn run(job: Job) -> Section5Check {
    let mk = |family: &str, n, m, (lhs, rhs): (Rational, Rational)| Section5Check { family: family.to_string(), n, m, lhs, rhs };
    match job {
        Job::A(n, m) => mk("A", n, m, comb_relation_a(n, m).expect("admissible")),
        Job::A4(n, m) => mk("A4", n, m, comb_relation_a4(n, m).expect("admissible")),
        Job::B(n, m) => mk("B", n, m, comb_relation_b(n, m).expect("admissible")),
        Job::Disp(d, n) => mk(d.name(), n, 0, d.eval(n).expect("admissible")),
        Job::ChuGuo(n, m) => {
            let pair = (ratio_sum(n, m, 0), chu_guo_closed(n, m).expect("in range"));
            mk(&format!("chu-guo.m{m}"), n, m, pair)
        }
    }
}

/// Sweeps the three relations over every admissible `(n, m)` with
/// `n + m <= max_total`, the named special cases for `n <= max_total`, and
/// the reciprocal-sum closed forms for `n <= CHU_GUO_MAX_N`.
pub fn verify_section5(max_total: i64) -> Section5Summary {
    let mut jobs = Vec::new();
    let pairs: Vec<(i64, i64)> = (0..=max_total)
        .flat_map(|n| (1 - n..=n + 1).filter(move |m| n + m <= max_total).map(move |m| (n, m)))
        .collect();
    jobs.extend(pairs.iter().filter(|&&(n, m)| check_a(n, m).is_ok()).map(|&(n, m)| Job::A(n, m)));
    jobs.extend(pairs.iter().filter(|&&(n, m)| check_a(n, m).is_ok()).map(|&(n, m)| Job::A4(n, m)));
    jobs.extend(pairs.iter().filter(|&&(n, m)| check_b(n, m).is_ok()).map(|&(n, m)| Job::B(n, m)));
    for d in Display::ALL {
        jobs.extend((d.min_n()..=max_total).map(|n| Job::Disp(d, n)));
    }
    for m in 0..=4 {
        let lo = chu_guo_min_n(m).expect("m in range").max(1);
        jobs.extend((lo..=CHU_GUO_MAX_N).map(|n| Job::ChuGuo(n, m)));
    }
    let checks = jobs.into_par_iter().map(run).collect();
    Section5Summary { max_total, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chu_guo_lhs_examples() {
        assert_eq!(chu_guo_lhs(1, 0, 0).unwrap(), int(1));
        assert_eq!(chu_guo_lhs(2, 2, 0).unwrap(), int(-1));
        assert_eq!(chu_guo_lhs(0, 0, 0).unwrap(), int(1));
        assert!(chu_guo_lhs(1, 0, 2).is_err());
    }

    #[test]
    fn chu_guo_closed_examples() {
        assert_eq!(chu_guo_closed(2, 2).unwrap(), int(-1));
        assert_eq!(chu_guo_closed(1, 0).unwrap(), int(1));
        // 2 - (1 + 1) = 0, which is also the direct sum 1 - C(2,2)/C(1,1).
        assert_eq!(chu_guo_closed(1, 1).unwrap(), int(0));
        assert_eq!(chu_guo_lhs(1, 1, 0).unwrap(), int(0));
        assert!(matches!(chu_guo_closed(2, 4), Err(CombError::BelowThreshold { .. })));
        assert!(matches!(chu_guo_closed(5, 5), Err(CombError::UnsupportedM(5))));
    }

    #[test]
    fn closed_forms_match_direct_sums() {
        for m in 0..=4 {
            for n in chu_guo_min_n(m).unwrap().max(1)..=60 {
                assert_eq!(chu_guo_lhs(n, m, 0).unwrap(), chu_guo_closed(n, m).unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn relation_a_small() {
        let (l, r) = comb_relation_a(1, 0).unwrap();
        assert_eq!(l, frac(1, 4));
        assert_eq!(r, frac(1, 4));
        for (n, m) in [(1, 1), (2, 0), (3, 2), (4, -3)] {
            let (l, r) = comb_relation_a(n, m).unwrap();
            assert_eq!(l, r, "n={n} m={m}");
        }
        assert!(comb_relation_a(1, 3).is_err());
        assert!(comb_relation_a(2, -2).is_err());
    }

    #[test]
    fn relation_a4_and_b_small() {
        for (n, m) in [(1, 0), (2, 1), (3, 0)] {
            let (l, r) = comb_relation_a4(n, m).unwrap();
            assert_eq!(l, r, "A4 n={n} m={m}");
        }
        for (n, m) in [(1, 0), (1, 1), (2, 2)] {
            let (l, r) = comb_relation_b(n, m).unwrap();
            assert_eq!(l, r, "B n={n} m={m}");
        }
    }

    #[test]
    fn a4_lhs_is_a_lhs_rescaled() {
        for (n, m) in [(1, 0), (3, 1), (5, -2), (6, 7)] {
            let (a, _) = comb_relation_a(n, m).unwrap();
            let (a4, _) = comb_relation_a4(n, m).unwrap();
            assert_eq!(a * int(n + m), a4);
        }
    }

    #[test]
    fn displays_hold() {
        for d in Display::ALL {
            for n in d.min_n()..=12 {
                let (l, r) = d.eval(n).unwrap();
                assert_eq!(l, r, "{d} n={n}");
            }
        }
    }

    #[test]
    fn sweep_twenty_is_clean() {
        let s = verify_section5(20);
        assert_eq!(s.failures().count(), 0);
        let fams: Vec<String> = s.counts().into_iter().map(|c| c.family).collect();
        for f in ["A", "A4", "B", "E4", "chu-guo.m4"] {
            assert!(fams.iter().any(|x| x == f), "{f}");
        }
        assert!(s.checks.iter().filter(|c| c.family == "E4").all(|c| c.n >= 3));
    }
}
