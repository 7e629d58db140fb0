//! Bernstein vertex operators `V(z) = M(z) L^⊥(z̄)`, handled only through
//! their coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::lincomb::Coeff;
use crate::partition::Partition;
use crate::series::{mul_by_series, SeriesId};
use crate::sym::{self, degree_range, outer_mul, scalar, skew, SymFunc};

/// `B_m(f) = Σ_i (-1)^i h_{m+i} · (f / e_i)`, the `z^m` coefficient of `V(z) f`.
pub fn bernstein(m: u32, f: &SymFunc) -> SymFunc {
    let Some((_, top)) = degree_range(f) else {
        return SymFunc::zero();
    };
    let mut out = SymFunc::zero();
    for i in 0..=top {
        let sk = skew(f, &sym::e(i));
        if sk.is_zero() {
            continue;
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out.add_scaled(&outer_mul(&sym::h(m + i), &sk), sign);
    }
    out
}

/// `B_{λ_1} ∘ … ∘ B_{λ_l}(1)`, which should be `s_λ`.
pub fn bernstein_chain(lambda: &Partition) -> SymFunc {
    lambda
        .parts()
        .iter()
        .rev()
        .fold(sym::one(), |acc, &m| bernstein(m, &acc))
}

/// `L^⊥_i f`, the `z^i` coefficient of `L^⊥(z) f`: `(-1)^i f / e_i`.
fn l_perp_coeff(i: u32, f: &SymFunc) -> SymFunc {
    skew(f, &SeriesId::L.term(i))
}

/// `M(1) · L^⊥(1) s_μ` through degree `cap`.
pub fn reduced_embedding(mu: &Partition, cap: u32) -> SymFunc {
    let f = SymFunc::basis(mu.clone());
    let lp = (0..=mu.weight()).fold(SymFunc::zero(), |acc, i| acc + l_perp_coeff(i, &f));
    mul_by_series(&lp, SeriesId::M, cap)
}

/// Polynomials in two parameters `z, w` with symmetric function coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct ParamPolySym {
    terms: BTreeMap<(u32, u32), SymFunc>,
}

impl ParamPolySym {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: u32, w: u32, f: &SymFunc) {
        let slot = self.terms.entry((z, w)).or_default();
        *slot += f;
        if slot.is_zero() {
            self.terms.remove(&(z, w));
        }
    }

    pub fn coeff(&self, z: u32, w: u32) -> SymFunc {
        self.terms.get(&(z, w)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &SymFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Debug for ParamPolySym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, v)| (k, v.to_string())))
            .finish()
    }
}

/// `L^⊥(z) M(w) f` with exponents up to `cap`.
pub fn commutation_lhs(f: &SymFunc, cap: u32) -> ParamPolySym {
    let mut out = ParamPolySym::new();
    for j in 0..=cap {
        let hf = outer_mul(&sym::h(j), f);
        for i in 0..=cap {
            out.add(i, j, &l_perp_coeff(i, &hf));
        }
    }
    out
}

/// `(1 - zw) M(w) L^⊥(z) f` with exponents up to `cap`.
pub fn commutation_rhs(f: &SymFunc, cap: u32) -> ParamPolySym {
    let t = |i: u32, j: u32| outer_mul(&sym::h(j), &l_perp_coeff(i, f));
    let mut out = ParamPolySym::new();
    for i in 0..=cap {
        for j in 0..=cap {
            out.add(i, j, &t(i, j));
            if i > 0 && j > 0 {
                out.add(i, j, &-t(i - 1, j - 1));
            }
        }
    }
    out
}

/// The first basis element of weight `≤ cap` on which the commutation
/// relation `L^⊥(z) M(w) = (1 - zw) M(w) L^⊥(z)` fails.
pub fn commutation_witness(cap: u32) -> Option<Partition> {
    crate::partition::partitions_up_to(cap)
        .into_iter()
        .find(|lam| {
            let f = SymFunc::basis(lam.clone());
            commutation_lhs(&f, cap) != commutation_rhs(&f, cap)
        })
}

pub fn check_commutation(cap: u32) -> bool {
    commutation_witness(cap).is_none()
}

/// `⟨L(z) | M(w)⟩` coefficient by coefficient, up to `cap`.
pub fn pairing_l_m(cap: u32) -> BTreeMap<(u32, u32), Coeff> {
    let mut out = BTreeMap::new();
    for i in 0..=cap {
        for j in 0..=cap {
            let c = scalar(&SeriesId::L.term(i), &SeriesId::M.term(j));
            if c != 0 {
                out.insert((i, j), c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use crate::sym::{one, schur};

    #[test]
    fn bernstein_examples() {
        for m in 0..5 {
            assert_eq!(bernstein(m, &one()), schur([m]));
        }
        assert_eq!(bernstein(2, &bernstein(1, &one())), schur([2, 1]));
        for lam in partitions_up_to(6) {
            assert_eq!(bernstein_chain(&lam), SymFunc::basis(lam.clone()), "{lam}");
        }
    }

    #[test]
    fn embedding_examples() {
        let m3 = &(&(&one() + &schur([1])) + &schur([2])) + &schur([3]);
        assert_eq!(reduced_embedding(&Partition::empty(), 3), m3);
        let got = reduced_embedding(&Partition::from([1]), 3);
        let expected = &(&schur([1, 1]) + &schur([2, 1])) - &one();
        assert_eq!(got, expected);
    }

    #[test]
    fn commutation_examples() {
        assert!(check_commutation(0));
        assert!(check_commutation(4));
        let lhs = commutation_lhs(&one(), 3);
        assert_eq!(lhs.coeff(0, 2), schur([2]));
        assert_eq!(lhs.coeff(1, 2), -schur([1]));
        let expected: BTreeMap<(u32, u32), Coeff> =
            [((0, 0), 1), ((1, 1), -1)].into_iter().collect();
        assert_eq!(pairing_l_m(4), expected);
    }
}
