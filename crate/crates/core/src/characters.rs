//! Character decompositions: GL branchings, Newell–Littlewood products for
//! O and Sp, rational GL characters on Sym ⊗ Sym, Thibon characters and
//! reduced symmetric group characters.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hash::HashProduct;
use crate::inner::inner_mul;
use crate::lincomb::{checked_mul, Coeff, LinComb};
use crate::partition::{partitions_of, Composition, Partition};
use crate::series::{mul_by_series, skew_by_series, SeriesId};
use crate::sym::{
    self, coproduct, coproduct_basis, mul_basis, outer_mul, skew, skew_basis, SymFunc,
    TensorSymFunc,
};

/// How a partition label is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Gl,
    O,
    Sp,
    Thibon,
    Reduced,
    Rational,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Gl => "gl",
            Kind::O => "o",
            Kind::Sp => "sp",
            Kind::Thibon => "thibon",
            Kind::Reduced => "reduced",
            Kind::Rational => "rational",
        }
    }

    fn brackets(self) -> (&'static str, &'static str) {
        match self {
            Kind::Gl | Kind::Rational => ("{", "}"),
            Kind::O => ("[", "]"),
            Kind::Sp | Kind::Reduced => ("<", ">"),
            Kind::Thibon => ("<<", ">>"),
        }
    }

    /// Renders one label, e.g. `[2,1]` for O or `<<1>>` for Thibon.
    pub fn label(self, p: &Partition) -> String {
        let (l, r) = self.brackets();
        format!("{l}{p}{r}")
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Display adapter: a Schur-basis element read in the labels of `kind`,
/// terms in reverse lexicographic order.
pub struct Labeled<'a>(pub &'a SymFunc, pub Kind);

impl fmt::Display for Labeled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        sym::write_terms(f, self.0.iter().rev().map(|(p, c)| (self.1.label(p), c)))
    }
}

/// Display adapter for rational characters `{κ;λ}`; the part after `;` is
/// the contravariant (barred) label.
pub struct RationalLabeled<'a>(pub &'a TensorSymFunc);

impl fmt::Display for RationalLabeled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        sym::write_terms(
            f,
            self.0
                .iter()
                .rev()
                .map(|((a, b), c)| (format!("{{{a};{b}}}"), c)),
        )
    }
}

// ---------------------------------------------------------------------------
// Branchings

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchRule {
    GlToO,
    OToGl,
    GlToSp,
    SpToGl,
    GlToGlm1,
    Glm1ToGl,
}

impl BranchRule {
    pub const ALL: [BranchRule; 6] = [
        Self::GlToO,
        Self::OToGl,
        Self::GlToSp,
        Self::SpToGl,
        Self::GlToGlm1,
        Self::Glm1ToGl,
    ];

    /// The series skewed out by this rule.
    pub fn series(self) -> SeriesId {
        match self {
            Self::GlToO => SeriesId::D,
            Self::OToGl => SeriesId::C,
            Self::GlToSp => SeriesId::B,
            Self::SpToGl => SeriesId::A,
            Self::GlToGlm1 => SeriesId::M,
            Self::Glm1ToGl => SeriesId::L,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Self::GlToO => Self::OToGl,
            Self::OToGl => Self::GlToO,
            Self::GlToSp => Self::SpToGl,
            Self::SpToGl => Self::GlToSp,
            Self::GlToGlm1 => Self::Glm1ToGl,
            Self::Glm1ToGl => Self::GlToGlm1,
        }
    }

    /// Label kind of the output.
    pub fn target(self) -> Kind {
        match self {
            Self::GlToO => Kind::O,
            Self::GlToSp => Kind::Sp,
            _ => Kind::Gl,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::GlToO => "gl-to-o",
            Self::OToGl => "o-to-gl",
            Self::GlToSp => "gl-to-sp",
            Self::SpToGl => "sp-to-gl",
            Self::GlToGlm1 => "gl-to-glm1",
            Self::Glm1ToGl => "glm1-to-gl",
        }
    }
}

impl fmt::Display for BranchRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BranchRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|r| r.as_str() == key)
            .ok_or_else(|| Error::Parse(format!("unknown branching rule `{s}`")))
    }
}

pub fn branch(f: &SymFunc, rule: BranchRule) -> SymFunc {
    skew_by_series(f, rule.series())
}

// ---------------------------------------------------------------------------
// Newell–Littlewood

/// `[μ]·[ν] = Σ_ζ [(μ/ζ)(ν/ζ)]`, the same for O and Sp labels.
pub fn newell_littlewood(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, a) in f.iter() {
        for (nu, b) in g.iter() {
            for zeta in mu.subpartitions() {
                if !nu.contains(&zeta) {
                    continue;
                }
                let prod = outer_mul(&skew_basis(mu, &zeta), &skew_basis(nu, &zeta));
                out.add_scaled(&prod, checked_mul(a, b));
            }
        }
    }
    out
}

/// The same product through the Newell–Littlewood hash `#_{m∘*, 1}`.
pub fn newell_littlewood_hash(f: &SymFunc, g: &SymFunc) -> SymFunc {
    HashProduct::named("newell-littlewood")
        .expect("shipped spec")
        .apply(f, g)
}

// ---------------------------------------------------------------------------
// Rational GL characters

/// Elements of Sym ⊗ Sym read as mixed tensor characters. The second leg is
/// the contravariant one; its bar is only applied when printing.
pub type RationalChar = TensorSymFunc;

/// Reduced symmetric group characters `⟨μ⟩`, stored by their labels.
pub type ReducedChar = SymFunc;

/// Thibon characters `⟨⟨λ⟩⟩`, stored by their labels.
pub type ThibonChar = SymFunc;

/// `{κ;λ̄}·{μ;ν̄} = Σ_{σ,τ} {(κ/σ)(μ/τ); (λ/τ)(ν/σ)}` in the irreducible basis.
pub fn rational_mul(x: &RationalChar, y: &RationalChar) -> RationalChar {
    let mut out = RationalChar::zero();
    for ((kappa, lambda), a) in x.iter() {
        for ((mu, nu), b) in y.iter() {
            let c = checked_mul(a, b);
            for sigma in kappa.subpartitions() {
                if !nu.contains(&sigma) {
                    continue;
                }
                for tau in mu.subpartitions() {
                    if !lambda.contains(&tau) {
                        continue;
                    }
                    let left = outer_mul(&skew_basis(kappa, &sigma), &skew_basis(mu, &tau));
                    let right = outer_mul(&skew_basis(lambda, &tau), &skew_basis(nu, &sigma));
                    out.add_scaled(&sym::tensor_of(&left, &right), c);
                }
            }
        }
    }
    out
}

/// The contraction pairing `m²(κ⊗λ, μ⊗ν) = ⟨κ|ν⟩⟨λ|μ⟩`.
fn contraction(x: &(Partition, Partition), y: &(Partition, Partition)) -> Coeff {
    Coeff::from(x.0 == y.1 && x.1 == y.0)
}

type Bi = (Partition, Partition);

/// The coproduct of Sym ⊗ Sym, `Δ(κ⊗λ) = Σ (κ_(1)⊗λ_(1)) ⊗ (κ_(2)⊗λ_(2))`.
fn coproduct2(x: &Bi) -> Vec<(Bi, Bi, Coeff)> {
    let dl = coproduct_basis(&x.1);
    let mut out = Vec::new();
    for ((k1, k2), a) in coproduct_basis(&x.0).iter() {
        for ((l1, l2), b) in dl.iter() {
            out.push((
                (k1.clone(), l1.clone()),
                (k2.clone(), l2.clone()),
                checked_mul(a, b),
            ));
        }
    }
    out
}

/// The derived hash `x #_{m²,1²} y = Σ m²(x_(1), y_(1)) x_(2) y_(2)` on
/// Sym ⊗ Sym.
pub fn rational_mul_hash(x: &RationalChar, y: &RationalChar) -> RationalChar {
    let mut out = RationalChar::zero();
    for (xk, a) in x.iter() {
        let dx = coproduct2(xk);
        for (yk, b) in y.iter() {
            let dy = coproduct2(yk);
            for (x1, x2, cx) in &dx {
                for (y1, y2, cy) in &dy {
                    let m = contraction(x1, y1);
                    if m == 0 {
                        continue;
                    }
                    let prod = sym::tensor_mul(
                        &sym::tensor(x2.0.clone(), x2.1.clone()),
                        &sym::tensor(y2.0.clone(), y2.1.clone()),
                    );
                    let c = checked_mul(checked_mul(a, b), checked_mul(m, checked_mul(*cx, *cy)));
                    out.add_scaled(&prod, c);
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalDirection {
    /// `{λ}⊗{μ̄} ↦ Σ_ζ {λ/ζ; μ/ζ}`.
    ToIrreducible,
    /// `{λ;μ̄} ↦ Σ_ζ (-1)^{|ζ|} {λ/ζ} ⊗ {μ/ζ'}`.
    ToReducible,
}

pub fn rational_convert(x: &RationalChar, direction: RationalDirection) -> RationalChar {
    let mut out = RationalChar::zero();
    for ((lambda, mu), c) in x.iter() {
        for zeta in lambda.subpartitions() {
            let (other, sign) = match direction {
                RationalDirection::ToIrreducible => (zeta.clone(), 1),
                RationalDirection::ToReducible => (
                    zeta.conjugate(),
                    if zeta.weight() % 2 == 0 { 1 } else { -1 },
                ),
            };
            if !mu.contains(&other) {
                continue;
            }
            let t = sym::tensor_of(&skew_basis(lambda, &zeta), &skew_basis(mu, &other));
            out.add_scaled(&t, checked_mul(c, sign));
        }
    }
    out
}

/// Product through the reducible basis, where it is the componentwise
/// outer product.
pub fn rational_mul_via_reducible(x: &RationalChar, y: &RationalChar) -> RationalChar {
    let rx = rational_convert(x, RationalDirection::ToReducible);
    let ry = rational_convert(y, RationalDirection::ToReducible);
    rational_convert(&sym::tensor_mul(&rx, &ry), RationalDirection::ToIrreducible)
}

// ---------------------------------------------------------------------------
// Thibon characters

/// Schur-function content of Thibon labels, `⟨⟨λ⟩⟩ = {λ M}`, up to degree `cap`.
pub fn thibon_to_schur(f: &SymFunc, cap: u32) -> SymFunc {
    mul_by_series(f, SeriesId::M, cap)
}

/// `{λ} = ⟨⟨λ L⟩⟩`, up to degree `cap`.
pub fn schur_to_thibon(f: &SymFunc, cap: u32) -> SymFunc {
    mul_by_series(f, SeriesId::L, cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThibonDirection {
    /// Thibon labels to Schur functions, `·M`.
    ToSchur,
    /// Schur functions to Thibon labels, `·L`.
    ToThibon,
}

pub fn thibon_convert(f: &SymFunc, direction: ThibonDirection, cap: u32) -> SymFunc {
    match direction {
        ThibonDirection::ToSchur => thibon_to_schur(f, cap),
        ThibonDirection::ToThibon => schur_to_thibon(f, cap),
    }
}

/// `⟨⟨μ⟩⟩ * ⟨⟨ν⟩⟩ = ⟨⟨μ #_{1,1} ν⟩⟩`.
pub fn thibon_inner(f: &SymFunc, g: &SymFunc) -> SymFunc {
    HashProduct::named("thibon")
        .expect("shipped spec")
        .apply(f, g)
}

/// `⟨⟨μ⟩⟩ * ⟨⟨ν⟩⟩ = Σ_{σ,τ} ⟨⟨(σ*τ)(μ/σ)(ν/τ)⟩⟩`.
pub fn thibon_inner_formula(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, a) in f.iter() {
        for (nu, b) in g.iter() {
            let c = checked_mul(a, b);
            for sigma in mu.subpartitions() {
                for tau in nu.subpartitions() {
                    if sigma.weight() != tau.weight() {
                        continue;
                    }
                    let st =
                        inner_mul(&SymFunc::basis(sigma.clone()), &SymFunc::basis(tau.clone()));
                    let prod = outer_mul(
                        &outer_mul(&st, &skew_basis(mu, &sigma)),
                        &skew_basis(nu, &tau),
                    );
                    out.add_scaled(&prod, c);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Reduced characters

/// `⟨μ⟩ * ⟨ν⟩ = ⟨μ #_{m,1,1} ν⟩`.
pub fn murnaghan_littlewood(f: &SymFunc, g: &SymFunc) -> SymFunc {
    HashProduct::named("murnaghan-littlewood")
        .expect("shipped spec")
        .apply(f, g)
}

/// `⟨μ⟩ * ⟨ν⟩ = Σ_{α,β,ζ} ⟨(μ/(αζ)) (ν/(βζ)) (α*β)⟩`.
pub fn murnaghan_littlewood_formula(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, a) in f.iter() {
        for (nu, b) in g.iter() {
            let c = checked_mul(a, b);
            for zeta in mu.subpartitions() {
                if !nu.contains(&zeta) {
                    continue;
                }
                let room = (mu.weight() - zeta.weight()).min(nu.weight() - zeta.weight());
                for k in 0..=room {
                    for alpha in partitions_of(k) {
                        let left = skew(&SymFunc::basis(mu.clone()), &mul_basis(&alpha, &zeta));
                        if left.is_zero() {
                            continue;
                        }
                        for beta in partitions_of(k) {
                            let right = skew(&SymFunc::basis(nu.clone()), &mul_basis(&beta, &zeta));
                            if right.is_zero() {
                                continue;
                            }
                            let ab = inner_mul(
                                &SymFunc::basis(alpha.clone()),
                                &SymFunc::basis(beta.clone()),
                            );
                            out.add_scaled(&outer_mul(&outer_mul(&left, &right), &ab), c);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The default symmetric group degree for [`reduced_oracle`]:
/// `2(|μ| + |ν|) + 2` over the largest labels involved.
pub fn default_oracle_degree(f: &SymFunc, g: &SymFunc) -> u32 {
    let top = |h: &SymFunc| h.keys().map(Partition::weight).max().unwrap_or(0);
    2 * (top(f) + top(g)) + 2
}

/// `{n - |μ|, μ}`, standardized: `(sign, λ)` with sign 0 when it vanishes.
pub fn unreduce(mu: &Partition, n: u32) -> (i8, Partition) {
    let mut parts = vec![n as i64 - mu.weight() as i64];
    parts.extend(mu.parts().iter().map(|&p| p as i64));
    Composition::new(parts).standardize()
}

/// Multiplies reduced labels as genuine `S_n` characters: reconstruct
/// `{n - |μ|, μ}`, take the Kronecker product, delete first rows.
pub fn reduced_oracle(f: &SymFunc, g: &SymFunc, n: u32) -> SymFunc {
    let lift = |h: &SymFunc| -> SymFunc {
        h.iter()
            .filter_map(|(mu, c)| {
                let (sign, lam) = unreduce(mu, n);
                (sign != 0).then(|| (lam, checked_mul(c, sign as Coeff)))
            })
            .collect()
    };
    let prod = inner_mul(&lift(f), &lift(g));
    prod.iter()
        .map(|(lam, c)| (lam.without_first_row(), c))
        .collect()
}

// ---------------------------------------------------------------------------

/// `(A_(1)*C_(1)) (A_(2)*D_(1)) (B_(1)*C_(2)) (B_(2)*D_(2))`, which equals
/// `(A·B) * (C·D)`.
pub fn cummins_expand(a: &SymFunc, b: &SymFunc, c: &SymFunc, d: &SymFunc) -> SymFunc {
    let (da, db, dc, dd) = (coproduct(a), coproduct(b), coproduct(c), coproduct(d));
    let star = |x: &Partition, y: &Partition| {
        inner_mul(&SymFunc::basis(x.clone()), &SymFunc::basis(y.clone()))
    };
    let mut out = SymFunc::zero();
    for ((a1, a2), ca) in da.iter() {
        for ((c1, c2), cc) in dc.iter() {
            let ac = star(a1, c1);
            if ac.is_zero() {
                continue;
            }
            for ((d1, d2), cd) in dd.iter() {
                let ad = star(a2, d1);
                if ad.is_zero() {
                    continue;
                }
                let left = outer_mul(&ac, &ad);
                for ((b1, b2), cb) in db.iter() {
                    let bc = star(b1, c2);
                    let bd = star(b2, d2);
                    if bc.is_zero() || bd.is_zero() {
                        continue;
                    }
                    let term = outer_mul(&left, &outer_mul(&bc, &bd));
                    out.add_scaled(&term, checked_mul(checked_mul(ca, cb), checked_mul(cc, cd)));
                }
            }
        }
    }
    out
}

/// `M^⊥(A * B)`, the left side of the skew identity
/// `M^⊥(A*B) = ⟨A_(1)|B_(1)⟩ (A_(2)*B_(2))`.
pub fn m_perp_inner(a: &SymFunc, b: &SymFunc) -> SymFunc {
    skew_by_series(&inner_mul(a, b), SeriesId::M)
}

/// The right side `Σ ⟨A_(1)|B_(1)⟩ (A_(2)*B_(2))`.
pub fn m_perp_inner_expanded(a: &SymFunc, b: &SymFunc) -> SymFunc {
    let db = coproduct(b);
    let mut out = SymFunc::zero();
    for ((a1, a2), ca) in coproduct(a).iter() {
        for ((b1, b2), cb) in db.iter() {
            if a1 != b1 {
                continue;
            }
            let t = inner_mul(&SymFunc::basis(a2.clone()), &SymFunc::basis(b2.clone()));
            out.add_scaled(&t, checked_mul(ca, cb));
        }
    }
    out
}

/// `L^⊥ f = f / L`.
pub fn l_perp(f: &SymFunc) -> SymFunc {
    skew_by_series(f, SeriesId::L)
}

/// The three forms of `Δ(L^⊥ μ)`: direct, derivation on the left leg,
/// derivation on the right leg.
pub fn l_perp_coproduct_forms(f: &SymFunc) -> [TensorSymFunc; 3] {
    let direct = coproduct(&l_perp(f));
    let d = coproduct(f);
    let left = sym::tensor_map(
        &d,
        |p| l_perp(&SymFunc::basis(p.clone())),
        |p| SymFunc::basis(p.clone()),
    );
    let right = sym::tensor_map(
        &d,
        |p| SymFunc::basis(p.clone()),
        |p| l_perp(&SymFunc::basis(p.clone())),
    );
    [direct, left, right]
}

/// Parses `κ;λ` into a rational basis label.
pub fn parse_rational_label(s: &str, max_weight: u32) -> Result<(Partition, Partition)> {
    let (a, b) = s
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("rational label `{s}` needs the form κ;λ")))?;
    Ok((
        crate::partition::parse_partition(a, max_weight)?,
        crate::partition::parse_partition(b, max_weight)?,
    ))
}

impl LinComb<(Partition, Partition)> {
    /// The component of bi-weight `(p, q)`.
    pub fn biweight_component(&self, p: u32, q: u32) -> Self {
        self.filter(|(a, b)| a.weight() == p && b.weight() == q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{one, schur, tensor};

    #[test]
    fn branch_examples() {
        let f = branch(&schur([2]), BranchRule::GlToO);
        assert_eq!(Labeled(&f, Kind::O).to_string(), "[2] + [0]");
        assert_eq!(branch(&schur([2]), BranchRule::OToGl), &schur([2]) - &one());
        for lam in crate::partition::partitions_up_to(5) {
            let x = SymFunc::basis(lam);
            assert_eq!(
                branch(&branch(&x, BranchRule::GlToSp), BranchRule::SpToGl),
                x
            );
        }
        assert_eq!("gl_to_o".parse::<BranchRule>().unwrap(), BranchRule::GlToO);
    }

    #[test]
    fn newell_littlewood_examples() {
        let s1 = schur([1]);
        let got = newell_littlewood(&s1, &s1);
        assert_eq!(Labeled(&got, Kind::O).to_string(), "[2] + [1,1] + [0]");
        assert_eq!(newell_littlewood_hash(&s1, &s1), got);
        let mu = schur([2, 1]);
        assert_eq!(newell_littlewood(&mu, &one()), mu);
        let got = newell_littlewood(&schur([1, 1]), &s1);
        assert_eq!(Labeled(&got, Kind::Sp).to_string(), "<2,1> + <1,1,1> + <1>");
    }

    #[test]
    fn rational_examples() {
        let got = rational_mul(&tensor([1], []), &tensor([], [1]));
        assert_eq!(got, &tensor([1], [1]) + &tensor([], []));
        let got = rational_mul(&tensor([1], [1]), &tensor([1], []));
        assert_eq!(RationalLabeled(&got).to_string(), "{2;1} + {1,1;1} + {1;0}");
        assert_eq!(rational_mul_hash(&tensor([1], [1]), &tensor([1], [])), got);
        assert_eq!(
            rational_mul_via_reducible(&tensor([1], [1]), &tensor([1], [])),
            got
        );
        let got = rational_mul(&tensor([1], []), &tensor([1], []));
        assert_eq!(got, &tensor([2], []) + &tensor([1, 1], []));
    }

    #[test]
    fn rational_convert_examples() {
        let got = rational_convert(&tensor([1], [1]), RationalDirection::ToIrreducible);
        assert_eq!(got, &tensor([1], [1]) + &tensor([], []));
        let got = rational_convert(&tensor([1], [1]), RationalDirection::ToReducible);
        assert_eq!(got, &tensor([1], [1]) - &tensor([], []));
    }

    #[test]
    fn thibon_examples() {
        let got = thibon_to_schur(&schur([1]), 3);
        let expected: SymFunc = [
            (Partition::from([1]), 1),
            (Partition::from([2]), 1),
            (Partition::from([1, 1]), 1),
            (Partition::from([3]), 1),
            (Partition::from([2, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
        let s1 = schur([1]);
        let got = thibon_inner(&s1, &s1);
        assert_eq!(
            Labeled(&got, Kind::Thibon).to_string(),
            "<<2>> + <<1,1>> + <<1>>"
        );
        assert_eq!(thibon_inner_formula(&s1, &s1), got);
        assert_eq!(thibon_inner(&one(), &schur([2, 1])), schur([2, 1]));
    }

    #[test]
    fn reduced_examples() {
        let s1 = schur([1]);
        let got = murnaghan_littlewood(&s1, &s1);
        assert_eq!(
            Labeled(&got, Kind::Reduced).to_string(),
            "<2> + <1,1> + <1> + <0>"
        );
        assert_eq!(murnaghan_littlewood_formula(&s1, &s1), got);
        assert_eq!(reduced_oracle(&s1, &s1, 6), got);
        let mu = schur([2, 1]);
        assert_eq!(murnaghan_littlewood(&one(), &mu), mu);
        assert_eq!(reduced_oracle(&one(), &mu, 8), mu);
    }

    #[test]
    fn cummins_examples() {
        let s1 = schur([1]);
        let got = cummins_expand(&s1, &s1, &s1, &s1);
        assert_eq!(got, &schur([2]).scaled(2) + &schur([1, 1]).scaled(2));
        let ab = outer_mul(&s1, &s1);
        assert_eq!(got, inner_mul(&ab, &ab));
    }
}
