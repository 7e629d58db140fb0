//! The Schur-function series `M, L, A, B, C, D` evaluated at `t = 1`,
//! graded by degree and truncated at a cap.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::lincomb::Coeff;
use crate::partition::{partitions_of, Partition, PartitionClass};
use crate::sym::{self, degree_range, outer_mul, scalar, SymFunc, TensorSymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesId {
    M,
    L,
    A,
    B,
    C,
    D,
}

impl SeriesId {
    pub const ALL: [SeriesId; 6] = [Self::M, Self::L, Self::A, Self::B, Self::C, Self::D];

    /// The series `X` with `self · X = 1`.
    pub fn inverse(self) -> Self {
        match self {
            Self::M => Self::L,
            Self::L => Self::M,
            Self::A => Self::B,
            Self::B => Self::A,
            Self::C => Self::D,
            Self::D => Self::C,
        }
    }

    /// The homogeneous term of degree `d`.
    pub fn term(self, d: u32) -> Arc<SymFunc> {
        type Cache = RwLock<HashMap<(SeriesId, u32), Arc<SymFunc>>>;
        static TERMS: LazyLock<Cache> = LazyLock::new(Default::default);
        if let Some(t) = TERMS.read().get(&(self, d)) {
            return t.clone();
        }
        let t = Arc::new(self.compute_term(d));
        TERMS.write().entry((self, d)).or_insert(t).clone()
    }

    fn compute_term(self, d: u32) -> SymFunc {
        let half_sign: Coeff = if (d / 2).is_multiple_of(2) { 1 } else { -1 };
        let class = |c: PartitionClass, sign: Coeff| -> SymFunc {
            if d % 2 == 1 {
                return SymFunc::zero();
            }
            partitions_of(d)
                .into_iter()
                .filter(|p| p.in_class(c))
                .map(|p| (p, sign))
                .collect()
        };
        match self {
            Self::M => sym::h(d),
            Self::L => sym::e(d).scaled(if d.is_multiple_of(2) { 1 } else { -1 }),
            Self::A => class(PartitionClass::A, half_sign),
            Self::B => class(PartitionClass::B, 1),
            Self::C => class(PartitionClass::C, half_sign),
            Self::D => class(PartitionClass::D, 1),
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for SeriesId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "M" => Self::M,
            "L" => Self::L,
            "A" => Self::A,
            "B" => Self::B,
            "C" => Self::C,
            "D" => Self::D,
            other => return Err(Error::Parse(format!("unknown series `{other}`"))),
        })
    }
}

/// Degree components `0..=cap` of a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: Vec<SymFunc>,
}

impl TruncatedSeries {
    pub fn new(terms: Vec<SymFunc>) -> Self {
        Self { terms }
    }

    pub fn cap(&self) -> u32 {
        self.terms.len() as u32 - 1
    }

    pub fn term(&self, d: u32) -> &SymFunc {
        &self.terms[d as usize]
    }

    pub fn terms(&self) -> &[SymFunc] {
        &self.terms
    }

    /// All components summed.
    pub fn total(&self) -> SymFunc {
        self.terms
            .iter()
            .fold(SymFunc::zero(), |acc, t| acc + t.clone())
    }
}

pub fn series_terms(id: SeriesId, cap: u32) -> TruncatedSeries {
    TruncatedSeries::new((0..=cap).map(|d| (*id.term(d)).clone()).collect())
}

/// `f / X = Σ_d skew(f, X_d)`; finite since skews vanish above `|f|`.
pub fn skew_by_series(f: &SymFunc, id: SeriesId) -> SymFunc {
    let Some((_, top)) = degree_range(f) else {
        return SymFunc::zero();
    };
    (0..=top).fold(SymFunc::zero(), |acc, d| acc + sym::skew(f, &id.term(d)))
}

/// `f · X` keeping only components of total degree at most `cap`.
pub fn mul_by_series(f: &SymFunc, id: SeriesId, cap: u32) -> SymFunc {
    let Some((low, _)) = degree_range(f) else {
        return SymFunc::zero();
    };
    let f = f.filter(|p| p.weight() <= cap);
    (0..=cap.saturating_sub(low))
        .fold(SymFunc::zero(), |acc, d| acc + outer_mul(&f, &id.term(d)))
        .filter(|p| p.weight() <= cap)
}

/// `m(f) = ⟨M(1) | f⟩`.
pub fn linear_form_m(f: &SymFunc) -> Coeff {
    linear_form(f, SeriesId::M)
}

/// `l(f) = ⟨L(1) | f⟩`.
pub fn linear_form_l(f: &SymFunc) -> Coeff {
    linear_form(f, SeriesId::L)
}

/// `⟨X(1) | f⟩`, paired degree by degree.
pub fn linear_form(f: &SymFunc, id: SeriesId) -> Coeff {
    let Some((lo, hi)) = degree_range(f) else {
        return 0;
    };
    (lo..=hi).map(|d| scalar(&id.term(d), f)).sum()
}

/// Degree components of `X · Y` up to `cap`.
pub fn series_product(x: SeriesId, y: SeriesId, cap: u32) -> TruncatedSeries {
    TruncatedSeries::new(
        (0..=cap)
            .map(|d| {
                (0..=d).fold(SymFunc::zero(), |acc, i| {
                    acc + outer_mul(&x.term(i), &y.term(d - i))
                })
            })
            .collect(),
    )
}

/// Whether `X · Y` is `1` through degree `cap`; on failure the first bad degree.
pub fn check_inverse_pair(x: SeriesId, y: SeriesId, cap: u32) -> Result<()> {
    let prod = series_product(x, y, cap);
    for (d, t) in prod.terms().iter().enumerate() {
        let expected = if d == 0 { sym::one() } else { SymFunc::zero() };
        if *t != expected {
            return Err(Error::NotInversePair(format!(
                "({x},{y}) at degree {d}: {t}"
            )));
        }
    }
    Ok(())
}

/// The first degree where `Δ(X_d) ≠ Σ X_i ⊗ X_{d-i}`, with the difference.
pub fn group_like_witness(id: SeriesId, cap: u32) -> Option<(u32, TensorSymFunc)> {
    (0..=cap).find_map(|d| {
        let mut diff = sym::coproduct(&id.term(d));
        for i in 0..=d {
            diff -= &sym::tensor_of(&id.term(i), &id.term(d - i));
        }
        (!diff.is_zero()).then_some((d, diff))
    })
}

pub fn is_group_like(id: SeriesId, cap: u32) -> bool {
    group_like_witness(id, cap).is_none()
}

/// Terms of weight at most `cap` of `f`.
pub fn truncate(f: &SymFunc, cap: u32) -> SymFunc {
    f.filter(|p: &Partition| p.weight() <= cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{one, schur};

    #[test]
    fn term_examples() {
        let d = series_terms(SeriesId::D, 4).total();
        let expected: SymFunc = [
            (Partition::empty(), 1),
            (Partition::from([2]), 1),
            (Partition::from([4]), 1),
            (Partition::from([2, 2]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
        let l = series_terms(SeriesId::L, 2).total();
        assert_eq!(l, &(&one() - &schur([1])) + &schur([1, 1]));
        assert_eq!(series_terms(SeriesId::C, 2).total(), &one() - &schur([2]));
        for id in SeriesId::ALL {
            assert_eq!(*id.term(0), one());
        }
    }

    #[test]
    fn skew_examples() {
        let expected = &(&(&schur([2, 1]) + &schur([2])) + &schur([1, 1])) + &schur([1]);
        assert_eq!(skew_by_series(&schur([2, 1]), SeriesId::M), expected);
        assert_eq!(
            skew_by_series(&schur([2]), SeriesId::D),
            &schur([2]) + &one()
        );
    }

    #[test]
    fn mul_examples() {
        let expected = &(&(&one() + &schur([1])) + &schur([2])) + &schur([3]);
        assert_eq!(mul_by_series(&one(), SeriesId::M, 3), expected);
        let expected = &(&schur([1]) - &schur([2])) - &schur([1, 1]);
        assert_eq!(mul_by_series(&schur([1]), SeriesId::L, 2), expected);
    }

    #[test]
    fn linear_form_examples() {
        assert_eq!(linear_form_m(&schur([4])), 1);
        assert_eq!(linear_form_l(&schur([1, 1])), 1);
        assert_eq!(linear_form_l(&schur([1])), -1);
        assert_eq!(linear_form_l(&SeriesId::M.term(1)), -1);
        // ⟨L | M⟩ paired degree by degree sums to zero at every positive cap.
        let m = series_terms(SeriesId::M, 4).total();
        assert_eq!(linear_form_l(&m), 0);
    }

    #[test]
    fn group_like_examples() {
        assert!(is_group_like(SeriesId::M, 5));
        assert!(is_group_like(SeriesId::L, 5));
        assert!(!is_group_like(SeriesId::D, 4));
        for id in SeriesId::ALL {
            check_inverse_pair(id, id.inverse(), 6).unwrap();
        }
        assert!(check_inverse_pair(SeriesId::M, SeriesId::D, 3).is_err());
    }
}
