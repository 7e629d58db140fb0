//! Finite integer linear combinations over an ordered basis.
//!
//! Every algebra element in this crate is a [`LinComb`]: Schur-basis
//! symmetric functions use partitions as keys, tensors use pairs of
//! partitions. Zero coefficients are never stored, so two combinations are
//! equal exactly when their maps are equal.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Coefficient ring. Arithmetic is checked; overflow aborts with a panic.
pub type Coeff = i128;

#[inline]
pub(crate) fn checked_add(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("coefficient overflow")
}

#[inline]
pub(crate) fn checked_mul(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("coefficient overflow")
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, 1)
    }

    pub fn term(key: K, coeff: Coeff) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: K, coeff: Coeff) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let c = checked_add(*o.get(), coeff);
                if c == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &Self, scale: Coeff) {
        if scale == 0 {
            return;
        }
        for (k, &c) in &other.terms {
            self.add_term(k.clone(), checked_mul(c, scale));
        }
    }

    pub fn scaled(&self, scale: Coeff) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, scale);
        out
    }

    /// Iterates terms in ascending key order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, Coeff)> + ExactSizeIterator {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn coeff_sum(&self) -> Coeff {
        self.terms.values().fold(0, |a, &b| checked_add(a, b))
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coeff)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> Extend<(K, Coeff)> for LinComb<K> {
    fn extend<I: IntoIterator<Item = (K, Coeff)>>(&mut self, iter: I) {
        for (k, c) in iter {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Coeff);
    type IntoIter = btree_map::IntoIter<K, Coeff>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        self.add_scaled(rhs, 1);
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        self.add_scaled(rhs, -1);
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: Self) -> LinComb<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: Self) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scaled(-1)
    }
}

impl<K: Ord + Clone> Mul<Coeff> for &LinComb<K> {
    type Output = LinComb<K>;
    fn mul(self, rhs: Coeff) -> LinComb<K> {
        self.scaled(rhs)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut a: LinComb<u32> = LinComb::term(1, 3);
        a.add_term(1, -3);
        assert!(a.is_zero());
        assert_eq!(a, LinComb::zero());
    }

    #[test]
    fn add_scaled_and_map() {
        let a: LinComb<u32> = [(1, 2), (2, -1)].into_iter().collect();
        let b = a.map_linear(|&k| LinComb::term(k * 10, 1));
        assert_eq!(b.coeff(&10), 2);
        assert_eq!(b.coeff(&20), -1);
        assert_eq!(b.coeff_sum(), 1);
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn overflow_is_fatal() {
        let a: LinComb<u32> = LinComb::term(0, Coeff::MAX);
        let _ = a.scaled(2);
    }
}
