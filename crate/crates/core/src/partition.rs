//! Integer partitions, compositions and Frobenius coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest weight accepted by the text parser unless the caller raises it.
pub const DEFAULT_MAX_WEIGHT: u32 = 64;

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so the empty sequence is the unique zero
/// partition and derived `Ord`/`Hash` are canonical. Ordering is
/// lexicographic on the parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a partition, dropping trailing zeros. Rejects increasing input.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Self { parts }
    }

    /// A single row `(n)`; the empty partition when `n == 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// A single column `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Self { parts }
    }

    /// Whether the Young diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Multiplicities `m_i` for `i = 1..=largest part` (index `i - 1`).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.part(0) as usize];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// `(z_λ, n(λ))` with `z_λ = Π i^{m_i} m_i!` and `n(λ) = Σ (i-1) λ_i`.
    pub fn z_and_n(&self) -> (BigUint, u64) {
        let mut z = BigUint::from(1u32);
        for (i, &m) in self.multiplicities().iter().enumerate() {
            for k in 1..=m {
                z *= (i as u32 + 1) * k;
            }
        }
        let n = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum();
        (z, n)
    }

    /// `z_λ` as a machine integer; `None` on overflow.
    pub fn z_value(&self) -> Option<u128> {
        let mut z: u128 = 1;
        for (i, &m) in self.multiplicities().iter().enumerate() {
            for k in 1..=m {
                z = z.checked_mul((i as u128 + 1) * k as u128)?;
            }
        }
        Some(z)
    }

    /// Frobenius rank: the side of the Durfee square.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    pub fn frobenius(&self) -> FrobeniusForm {
        let conj = self.conjugate();
        let r = self.rank();
        let arms = (0..r).map(|k| self.parts[k] - k as u32 - 1).collect();
        let legs = (0..r).map(|k| conj.parts[k] - k as u32 - 1).collect();
        FrobeniusForm { arms, legs }
    }

    pub fn in_class(&self, class: PartitionClass) -> bool {
        match class {
            PartitionClass::P => true,
            PartitionClass::D => self.parts.iter().all(|p| p % 2 == 0),
            PartitionClass::B => self.conjugate().in_class(PartitionClass::D),
            PartitionClass::A => self.frobenius().arm_leg_offset_is(-1),
            PartitionClass::C => self.frobenius().arm_leg_offset_is(1),
            PartitionClass::E => self.frobenius().arm_leg_offset_is(0),
        }
    }

    /// All cells with their content `j - i` and hook length, 1-based.
    pub fn hooks_and_contents(&self) -> Vec<Cell> {
        let conj = self.conjugate();
        let mut cells = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = row as i64 + conj.parts[j] as i64 - i as i64 - j as i64 - 1;
                cells.push(Cell {
                    row: i + 1,
                    col: j + 1,
                    content: j as i64 - i as i64,
                    hook: hook as u32,
                });
            }
        }
        cells
    }

    /// The partition with its first row removed.
    pub fn without_first_row(&self) -> Partition {
        Self {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Partitions `μ ⊆ self`, in no particular order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        sub_rec(&self.parts, 0, u32::MAX, &mut cur, &mut out);
        out
    }
}

fn sub_rec(outer: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == outer.len() {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    // Leaving row i empty ends the partition.
    out.push(Partition::from_sorted(cur.clone()));
    for p in 1..=outer[i].min(cap) {
        cur.push(p);
        sub_rec(outer, i + 1, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    /// Panics if the array is not weakly decreasing.
    fn from(a: [u32; N]) -> Self {
        Self::new(a.to_vec()).expect("array literal is not a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,2,2,1`, `0`, the empty string, and exponent form such as
    /// `[1,2^2,4]` (parts in any order).
    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s, DEFAULT_MAX_WEIGHT)
    }
}

/// Parses a partition, rejecting weights above `max_weight`.
pub fn parse_partition(s: &str, max_weight: u32) -> Result<Partition> {
    let bad = || Error::Parse(format!("invalid partition `{s}`"));
    let body = s.trim();
    let bracketed = body.starts_with('[') || body.starts_with('(');
    let body = body
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')'])
        .trim();
    if body.is_empty() || body == "0" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut exponent_form = false;
    for tok in body.split(',') {
        let tok = tok.trim();
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => {
                exponent_form = true;
                (b.trim(), e.trim().parse::<u32>().map_err(|_| bad())?)
            }
            None => (tok, 1),
        };
        let base: u32 = base.parse().map_err(|_| bad())?;
        if (base as u64) * (exp as u64) > max_weight as u64 {
            return Err(Error::WeightBound {
                weight: base as u64 * exp as u64,
                max: max_weight,
            });
        }
        parts.extend(std::iter::repeat_n(base, exp as usize));
    }
    let weight: u64 = parts.iter().map(|&p| p as u64).sum();
    if weight > max_weight as u64 {
        return Err(Error::WeightBound {
            weight,
            max: max_weight,
        });
    }
    if exponent_form || (bracketed && parts.windows(2).any(|w| w[0] < w[1])) {
        Ok(Partition::from_unsorted(parts))
    } else {
        Partition::new(parts).map_err(|_| bad())
    }
}

/// One box of a Young diagram (1-based row/column).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub content: i64,
    pub hook: u32,
}

/// The partition classes used by the branching series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionClass {
    /// All partitions.
    P,
    /// Frobenius form with `a_k - b_k = -1`.
    A,
    /// Conjugates of partitions with all parts even.
    B,
    /// Frobenius form with `a_k - b_k = 1`.
    C,
    /// All parts even.
    D,
    /// Self-conjugate.
    E,
}

impl FromStr for PartitionClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "P" => Self::P,
            "A" => Self::A,
            "B" => Self::B,
            "C" => Self::C,
            "D" => Self::D,
            "E" => Self::E,
            _ => return Err(Error::Parse(format!("unknown partition class `{s}`"))),
        })
    }
}

/// Frobenius coordinates `(a_1 … a_r | b_1 … b_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusForm {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

impl FrobeniusForm {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self> {
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidFrobenius { arms, legs });
        }
        Ok(Self { arms, legs })
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    fn arm_leg_offset_is(&self, n: i64) -> bool {
        self.arms
            .iter()
            .zip(&self.legs)
            .all(|(&a, &b)| a as i64 - b as i64 == n)
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        if r == 0 {
            return Partition::empty();
        }
        // Rows below the Durfee square are read off the legs.
        let len = (self.legs[0] as usize + 1).max(r);
        let mut parts = vec![0u32; len];
        for (k, (row, &a)) in parts.iter_mut().zip(&self.arms).enumerate() {
            *row = a + k as u32 + 1;
        }
        for (k, &b) in self.legs.iter().enumerate() {
            for row in parts.iter_mut().take(k + 1 + b as usize).skip(r) {
                *row += 1;
            }
        }
        Partition::from_sorted(parts)
    }
}

/// A finite integer sequence, possibly unsorted and with negative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    pub parts: Vec<i64>,
}

impl Composition {
    pub fn new(parts: Vec<i64>) -> Self {
        Self { parts }
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Straightens the composition with raising operators
    /// `R_{i,i+1}[…, θ_i, θ_{i+1}, …] = -[…, θ_{i+1} - 1, θ_i + 1, …]`.
    ///
    /// Returns `(sign, λ)` with `s_θ = sign · s_λ`; sign 0 means the
    /// composition annihilates (a fixed point `R(Θ) = -Θ`, or a negative
    /// part left at the end).
    pub fn standardize(&self) -> (i8, Partition) {
        let mut theta = self.parts.clone();
        let mut sign: i8 = 1;
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 0..theta.len().saturating_sub(1) {
                match theta[i].cmp(&theta[i + 1]) {
                    Ordering::Less if theta[i + 1] == theta[i] + 1 => {
                        return (0, Partition::empty());
                    }
                    Ordering::Less => {
                        let (a, b) = (theta[i], theta[i + 1]);
                        theta[i] = b - 1;
                        theta[i + 1] = a + 1;
                        sign = -sign;
                        swapped = true;
                    }
                    _ => {}
                }
            }
        }
        while theta.last() == Some(&0) {
            theta.pop();
        }
        if theta.iter().any(|&p| p < 0) {
            return (0, Partition::empty());
        }
        (
            sign,
            Partition::from_sorted(theta.into_iter().map(|p| p as u32).collect()),
        )
    }
}

/// Partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    parts_rec(n, n, &mut cur, &mut out);
    out
}

fn parts_rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        parts_rec(rem - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions of weight at most `n`, grouped by increasing weight.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p([4, 2, 2, 1]).conjugate(), p([4, 3, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p([3]).conjugate(), p([1, 1, 1]));
    }

    #[test]
    fn z_and_n_examples() {
        assert_eq!(p([4, 2, 2, 1]).z_and_n(), (BigUint::from(32u32), 9));
        assert_eq!(Partition::empty().z_and_n(), (BigUint::from(1u32), 0));
        assert_eq!(p([1, 1]).z_and_n(), (BigUint::from(2u32), 1));
        assert_eq!(p([4, 2, 2, 1]).z_value(), Some(32));
    }

    #[test]
    fn frobenius_examples() {
        let f = p([4, 2, 2, 1]).frobenius();
        assert_eq!((f.arms(), f.legs()), (&[3, 0][..], &[3, 1][..]));
        let f = Partition::empty().frobenius();
        assert!(f.arms().is_empty() && f.legs().is_empty());
        let f = p([2]).frobenius();
        assert_eq!((f.arms(), f.legs()), (&[1][..], &[0][..]));
        assert!(FrobeniusForm::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(FrobeniusForm::new(vec![1], vec![2, 0]).is_err());
    }

    #[test]
    fn class_examples() {
        assert!(p([2, 2]).in_class(PartitionClass::D));
        assert!(p([2]).in_class(PartitionClass::C));
        assert!(p([2, 1]).in_class(PartitionClass::E));
        assert!(p([1, 1]).in_class(PartitionClass::A));
        assert!(p([1, 1]).in_class(PartitionClass::B));
        assert!(!p([2]).in_class(PartitionClass::A));
        assert!(Partition::empty().in_class(PartitionClass::C));
    }

    #[test]
    fn standardize_examples() {
        let c = |v: &[i64]| Composition::new(v.to_vec()).standardize();
        // Rows 1 and 2 of the Jacobi-Trudi determinant coincide.
        assert_eq!(c(&[1, 2, 1]), (0, Partition::empty()));
        assert_eq!(c(&[1, 3, 1]), (-1, p([2, 2, 1])));
        assert_eq!(c(&[0, 2, 1]), (-1, p([1, 1, 1])));
        assert_eq!(c(&[-1, 2, 1]), (0, Partition::empty()));
        // A leading negative part can straighten to a genuine partition.
        assert_eq!(c(&[-2, 2, 1]), (1, p([1])));
        assert_eq!(c(&[1, 2]), (0, Partition::empty()));
        assert_eq!(c(&[3, 0, 0]), (1, p([3])));
        assert_eq!(c(&[2, -1]), (0, Partition::empty()));
    }

    #[test]
    fn hook_examples() {
        let cells = p([4, 2, 2, 1]).hooks_and_contents();
        let at = |r, c| *cells.iter().find(|x| x.row == r && x.col == c).unwrap();
        assert_eq!((at(1, 1).content, at(1, 1).hook), (0, 7));
        assert_eq!((at(1, 4).content, at(1, 4).hook), (3, 1));
        let one = p([1]).hooks_and_contents();
        assert_eq!((one[0].content, one[0].hook), (0, 1));
    }

    #[test]
    fn parsing() {
        assert_eq!("4,2,2,1".parse::<Partition>().unwrap(), p([4, 2, 2, 1]));
        assert_eq!("[1,2^2,4]".parse::<Partition>().unwrap(), p([4, 2, 2, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert!(matches!(
            parse_partition("30,30", 20),
            Err(Error::WeightBound { .. })
        ));
        assert_eq!(p([4, 2, 2, 1]).to_string(), "4,2,2,1");
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let p4 = partitions_of(4);
        assert_eq!(p4.first().unwrap(), &p([4]));
        assert_eq!(p4.last().unwrap(), &p([1, 1, 1, 1]));
        assert_eq!(p([2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn class_properties_small() {
        for lam in partitions_up_to(12) {
            assert_eq!(lam.frobenius().to_partition(), lam);
            assert_eq!(
                lam.in_class(PartitionClass::B),
                lam.conjugate().in_class(PartitionClass::D)
            );
            let (s, mu) =
                Composition::new(lam.parts().iter().map(|&x| x as i64).collect()).standardize();
            assert_eq!((s, &mu), (1, &lam));
            let cells = lam.hooks_and_contents();
            assert_eq!(cells.len() as u32, lam.weight());
            let f = lam.frobenius();
            for k in 0..f.rank() {
                let c = cells
                    .iter()
                    .find(|c| c.row == k + 1 && c.col == k + 1)
                    .unwrap();
                assert_eq!(c.hook, f.arms()[k] + f.legs()[k] + 1);
            }
        }
    }
}
