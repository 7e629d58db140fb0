//! Higher derived hash products
//! `x # y = Σ Π_i φ_i(a_i(x_(i), y_(i))) · φ_{k+1}(x_(k+1) y_(k+1))`
//! and the series-deformed coproduct.

use serde::{Deserialize, Serialize};

use crate::convolution::{
    basis_pairs, check_algebra_hom, check_frobenius, check_laplace, compose, convolve2,
    first_failure, witness, CoMul, Cochain1, Pairing, Witness,
};
use crate::error::{Error, Result};
use crate::lincomb::checked_mul;
use crate::series::{check_inverse_pair, skew_by_series, SeriesId};
use crate::sym::{
    self, degree_range, iterated_coproduct, mul_basis, one, outer_mul, SymFunc, TensorSymFunc,
};

/// Serializable description of a hash product, e.g.
/// `{"stages":[{"pairing":"inner","cocycle":"id"}],"final":"id"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HashSpecDesc {
    pub stages: Vec<StageDesc>,
    #[serde(rename = "final", default = "default_final")]
    pub final_cocycle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageDesc {
    pub pairing: String,
    pub cocycle: String,
}

fn default_final() -> String {
    "id".into()
}

impl HashSpecDesc {
    /// One of `trivial`, `thibon`, `newell-littlewood`, `murnaghan-littlewood`.
    pub fn named(name: &str) -> Result<Self> {
        let stage = |cocycle: &str| StageDesc {
            pairing: "inner".into(),
            cocycle: cocycle.into(),
        };
        let stages = match name {
            "trivial" => vec![],
            "thibon" => vec![stage("id")],
            "newell-littlewood" => vec![stage("m")],
            "murnaghan-littlewood" => vec![stage("m"), stage("id")],
            other => return Err(Error::Parse(format!("unknown hash spec `{other}`"))),
        };
        Ok(Self {
            stages,
            final_cocycle: default_final(),
        })
    }

    pub const NAMES: [&'static str; 4] = [
        "trivial",
        "thibon",
        "newell-littlewood",
        "murnaghan-littlewood",
    ];
}

/// A built hash product. Evaluation is memoized on basis pairs.
#[derive(Clone, Debug)]
pub struct HashProduct {
    name: String,
    stages: Vec<(Pairing, Cochain1)>,
    final_cocycle: Cochain1,
    product: Pairing,
}

impl HashProduct {
    /// Builds the product, checking every cocycle for multiplicativity and
    /// every pairing for the Laplace laws through `check_degree`.
    pub fn build(desc: &HashSpecDesc, check_degree: u32) -> Result<Self> {
        let p = Self::build_unchecked(desc)?;
        let fail = |name: &str, check, w: Witness| Error::CheckFailed {
            name: name.into(),
            check,
            witness: w.to_string(),
        };
        for (a, phi) in &p.stages {
            check_algebra_hom(phi, check_degree)
                .map_err(|w| fail(phi.name(), "algebra morphism", w))?;
            check_laplace(a, check_degree).map_err(|w| fail(a.name(), "Laplace", w))?;
        }
        check_algebra_hom(&p.final_cocycle, check_degree)
            .map_err(|w| fail(p.final_cocycle.name(), "algebra morphism", w))?;
        Ok(p)
    }

    /// Builds without running the checkers.
    pub fn build_unchecked(desc: &HashSpecDesc) -> Result<Self> {
        let stages = desc
            .stages
            .iter()
            .map(|s| {
                Ok((
                    Pairing::by_name(&s.pairing)?,
                    Cochain1::by_name(&s.cocycle)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let final_cocycle = Cochain1::by_name(&desc.final_cocycle)?;
        let mut name = String::from("#[");
        for (i, s) in desc.stages.iter().enumerate() {
            if i > 0 {
                name.push(',');
            }
            name.push_str(&format!("{}:{}", s.pairing, s.cocycle));
        }
        name.push_str(&format!("];{}", desc.final_cocycle));
        let product = {
            let stages = stages.clone();
            let fin = final_cocycle.clone();
            Pairing::new(name.clone(), move |x, y| eval_basis(&stages, &fin, x, y))
        };
        Ok(Self {
            name,
            stages,
            final_cocycle,
            product,
        })
    }

    /// A shipped spec; these are known to pass their checkers.
    pub fn named(name: &str) -> Result<Self> {
        Self::build_unchecked(&HashSpecDesc::named(name)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, x: &SymFunc, y: &SymFunc) -> SymFunc {
        self.product.apply(x, y)
    }

    /// The product as a pairing `(x, y) ↦ x # y`.
    pub fn as_pairing(&self) -> &Pairing {
        &self.product
    }

    /// `a_{1,φ_1} ⋆ … ⋆ a_{k,φ_k}`; `e²` when there are no stages.
    pub fn composite_pairing(&self) -> Pairing {
        self.stages
            .iter()
            .map(|(a, phi)| compose(phi, a))
            .reduce(|acc, p| convolve2(&acc, &p))
            .unwrap_or_else(Pairing::e2)
    }

    /// The same product through nested `convolve2` calls:
    /// `composite ⋆ (φ_{k+1} ∘ m)`.
    pub fn via_convolution(&self) -> Pairing {
        convolve2(
            &self.composite_pairing(),
            &compose(&self.final_cocycle, &Pairing::outer()),
        )
    }
}

fn eval_basis(
    stages: &[(Pairing, Cochain1)],
    fin: &Cochain1,
    x: &crate::Partition,
    y: &crate::Partition,
) -> SymFunc {
    let k = stages.len() + 1;
    let dx = iterated_coproduct(x, k);
    let dy = iterated_coproduct(y, k);
    let mut out = SymFunc::zero();
    for (xs, cx) in &dx {
        for (ys, cy) in &dy {
            let mut acc = one();
            for (i, (a, phi)) in stages.iter().enumerate() {
                let v = phi.apply(&a.apply_basis(&xs[i], &ys[i]));
                if v.is_zero() {
                    acc = SymFunc::zero();
                    break;
                }
                acc = outer_mul(&acc, &v);
            }
            if acc.is_zero() {
                continue;
            }
            let last = fin.apply(&mul_basis(&xs[k - 1], &ys[k - 1]));
            out.add_scaled(&outer_mul(&acc, &last), checked_mul(*cx, *cy));
        }
    }
    out
}

/// `Δ(x # y) = Σ (x_(1) # y_(1)) ⊗ (x_(2) # y_(2))` for `|x| + |y| ≤ max_degree`.
pub fn check_hash_bialgebra(h: &HashProduct, max_degree: u32) -> Result<(), Witness> {
    let p = h.as_pairing();
    first_failure(&basis_pairs(max_degree), |(x, y)| {
        let lhs = sym::coproduct(&p.apply_basis(x, y));
        let dy = sym::coproduct_basis(y);
        let mut rhs = TensorSymFunc::zero();
        for ((x1, x2), cx) in sym::coproduct_basis(x).iter() {
            for ((y1, y2), cy) in dy.iter() {
                let t = sym::tensor_of(&p.apply_basis(x1, y1), &p.apply_basis(x2, y2));
                rhs.add_scaled(&t, checked_mul(cx, cy));
            }
        }
        (lhs != rhs).then(|| witness("Δ(x#y) = Δx #⊗# Δy", &[x, y], &lhs, &rhs))
    })
}

/// Both verdicts of the Hopf test: the Frobenius laws of the composite
/// pairing, and the bialgebra law checked directly.
#[derive(Clone, Debug)]
pub struct HopfVerdict {
    pub frobenius: Result<(), Witness>,
    pub bialgebra: Result<(), Witness>,
}

impl HopfVerdict {
    pub fn is_hopf(&self) -> bool {
        self.frobenius.is_ok() && self.bialgebra.is_ok()
    }

    pub fn paths_agree(&self) -> bool {
        self.frobenius.is_ok() == self.bialgebra.is_ok()
    }
}

pub fn hopf_verdict(h: &HashProduct, max_degree: u32) -> HopfVerdict {
    let c = h.composite_pairing();
    HopfVerdict {
        frobenius: check_frobenius(&c, &CoMul::adjoint(&c), max_degree),
        bialgebra: check_hash_bialgebra(h, max_degree),
    }
}

pub fn hash_is_hopf(h: &HashProduct, max_degree: u32) -> bool {
    hopf_verdict(h, max_degree).is_hopf()
}

/// A pair of series `(M_π, L_π)` with `M_π · L_π = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesPair {
    pub m: SeriesId,
    pub l: SeriesId,
}

impl SeriesPair {
    /// Validates the pair degreewise through `cap`.
    pub fn new(m: SeriesId, l: SeriesId, cap: u32) -> Result<Self> {
        check_inverse_pair(m, l, cap)?;
        Ok(Self { m, l })
    }
}

fn validate_for(pair: SeriesPair, f: &SymFunc) -> Result<()> {
    let top = degree_range(f).map_or(0, |(_, hi)| hi);
    check_inverse_pair(pair.m, pair.l, top)
}

/// `Δ_π(x) = Σ x_(1) ⊗ x_(2) ⟨M_π(1) | x_(3)⟩`.
pub fn deformed_coproduct(f: &SymFunc, pair: SeriesPair) -> Result<TensorSymFunc> {
    validate_for(pair, f)?;
    let mut out = TensorSymFunc::zero();
    for (lam, c) in f.iter() {
        for (legs, d) in iterated_coproduct(lam, 3) {
            let pairing = pair.m.term(legs[2].weight()).coeff(&legs[2]);
            if pairing != 0 {
                out.add_term(
                    (legs[0].clone(), legs[1].clone()),
                    checked_mul(checked_mul(c, d), pairing),
                );
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    ToSubgroup,
    ToGroup,
}

/// `f ↦ f / M_π` towards the subgroup, `f ↦ f / L_π` back.
pub fn basis_change(f: &SymFunc, direction: Direction, pair: SeriesPair) -> Result<SymFunc> {
    validate_for(pair, f)?;
    Ok(match direction {
        Direction::ToSubgroup => skew_by_series(f, pair.m),
        Direction::ToGroup => skew_by_series(f, pair.l),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{schur, tensor};

    #[test]
    fn named_products() {
        let s1 = schur([1]);
        let trivial = HashProduct::named("trivial").unwrap();
        assert_eq!(trivial.apply(&s1, &s1), &schur([2]) + &schur([1, 1]));
        let thibon = HashProduct::named("thibon").unwrap();
        assert_eq!(
            thibon.apply(&s1, &s1),
            &(&schur([2]) + &schur([1, 1])) + &s1
        );
        let nl = HashProduct::named("newell-littlewood").unwrap();
        assert_eq!(nl.apply(&s1, &s1), &(&schur([2]) + &schur([1, 1])) + &one());
        let ml = HashProduct::named("murnaghan-littlewood").unwrap();
        let expected = &(&(&schur([2]) + &schur([1, 1])) + &s1) + &one();
        assert_eq!(ml.apply(&s1, &s1), expected);
        assert!(HashSpecDesc::named("bogus").is_err());
    }

    #[test]
    fn build_validates() {
        let desc = HashSpecDesc::named("thibon").unwrap();
        assert!(HashProduct::build(&desc, 3).is_ok());
        let bad = HashSpecDesc {
            stages: vec![StageDesc {
                pairing: "outer".into(),
                cocycle: "id".into(),
            }],
            final_cocycle: "id".into(),
        };
        let err = HashProduct::build(&bad, 2).unwrap_err();
        assert!(err.to_string().contains("Laplace"), "{err}");
    }

    #[test]
    fn hopf_examples() {
        for (name, expected) in [
            ("trivial", true),
            ("thibon", true),
            ("newell-littlewood", false),
        ] {
            let v = hopf_verdict(&HashProduct::named(name).unwrap(), 3);
            assert_eq!(v.is_hopf(), expected, "{name}: {v:?}");
            assert!(v.paths_agree(), "{name}: {v:?}");
        }
    }

    #[test]
    fn deformed_coproduct_examples() {
        let ml = SeriesPair::new(SeriesId::M, SeriesId::L, 4).unwrap();
        let got = deformed_coproduct(&schur([1]), ml).unwrap();
        assert_eq!(got, &sym::coproduct(&schur([1])) + &tensor([], []));
        let cd = SeriesPair::new(SeriesId::C, SeriesId::D, 4).unwrap();
        let got = deformed_coproduct(&schur([2]), cd).unwrap();
        assert_eq!(got, &sym::coproduct(&schur([2])) - &tensor([], []));
        assert_eq!(deformed_coproduct(&one(), cd).unwrap(), tensor([], []));
        assert!(SeriesPair::new(SeriesId::M, SeriesId::C, 2).is_err());
    }

    #[test]
    fn basis_change_examples() {
        let dc = SeriesPair::new(SeriesId::D, SeriesId::C, 4).unwrap();
        let down = basis_change(&schur([2]), Direction::ToSubgroup, dc).unwrap();
        assert_eq!(down, &schur([2]) + &one());
        assert_eq!(
            basis_change(&down, Direction::ToGroup, dc).unwrap(),
            schur([2])
        );
    }
}
