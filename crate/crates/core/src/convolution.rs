//! Convolution monoids of 1- and 2-cochains over Sym, Milnor–Moore
//! inverses, Sweedler coboundaries and bounded property checkers.
//!
//! Checkers enumerate Schur basis tuples up to a degree bound and report the
//! first failure (in order of increasing total weight) as a [`Witness`].
//! The bound applies to every argument fed to the cochain under test: for
//! the right Laplace law `|x| ≤ d` and `|y| + |z| ≤ d`, for the left law
//! `|x| + |y| ≤ d` and `|z| ≤ d`, for the cocycle identity `|x| + |y| ≤ d`
//! and `|y| + |z| ≤ d`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::inner;
use crate::lincomb::checked_mul;
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::sym::{self, coproduct_basis, mul_basis, one, outer_mul, SymFunc, TensorSymFunc};

type Action1 = dyn Fn(&Partition) -> SymFunc + Send + Sync;
type Action2 = dyn Fn(&Partition, &Partition) -> SymFunc + Send + Sync;
type ActionCo = dyn Fn(&Partition) -> TensorSymFunc + Send + Sync;

/// A linear map Sym → Sym given on the Schur basis, memoized.
#[derive(Clone)]
pub struct Cochain1(Arc<Cochain1Inner>);

struct Cochain1Inner {
    name: String,
    action: Box<Action1>,
    memo: RwLock<HashMap<Partition, Arc<SymFunc>>>,
}

impl Cochain1 {
    pub fn new(
        name: impl Into<String>,
        action: impl Fn(&Partition) -> SymFunc + Send + Sync + 'static,
    ) -> Self {
        Self(Arc::new(Cochain1Inner {
            name: name.into(),
            action: Box::new(action),
            memo: Default::default(),
        }))
    }

    pub fn identity() -> Self {
        Self::new("id", |p| SymFunc::basis(p.clone()))
    }

    pub fn antipode() -> Self {
        Self::new("S", |p| sym::antipode(&SymFunc::basis(p.clone())))
    }

    /// `η ∘ ε`, the convolution unit.
    pub fn unit() -> Self {
        Self::new("e", |p| if p.is_empty() { one() } else { SymFunc::zero() })
    }

    /// `η ∘ ε¹`: `s_λ ↦ 1` on one-row partitions, `0` otherwise.
    pub fn eta_eps1() -> Self {
        Self::new("m", |p| {
            one().scaled(inner::counit_eps1(&SymFunc::basis(p.clone())))
        })
    }

    /// `η ∘ l`, with `l = ⟨L(1) | ·⟩`.
    pub fn eta_l() -> Self {
        Self::new("l", |p| {
            if p.weight() == p.len() as u32 {
                one().scaled(if p.len() % 2 == 0 { 1 } else { -1 })
            } else {
                SymFunc::zero()
            }
        })
    }

    /// Looks up `id`, `S`, `m` (`η∘ε¹`), `l` (`η∘l`) or `e` (`η∘ε`).
    pub fn by_name(name: &str) -> Result<Self> {
        Ok(match name {
            "id" | "Id" => Self::identity(),
            "S" | "s" | "antipode" => Self::antipode(),
            "m" | "eps1" => Self::eta_eps1(),
            "l" => Self::eta_l(),
            "e" => Self::unit(),
            other => return Err(Error::Parse(format!("unknown cochain `{other}`"))),
        })
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn apply_basis(&self, p: &Partition) -> Arc<SymFunc> {
        if let Some(v) = self.0.memo.read().get(p) {
            return v.clone();
        }
        let v = Arc::new((self.0.action)(p));
        self.0.memo.write().entry(p.clone()).or_insert(v).clone()
    }

    pub fn apply(&self, f: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (p, c) in f.iter() {
            out.add_scaled(&self.apply_basis(p), c);
        }
        out
    }

    /// `f ∘ η = η`.
    pub fn is_normalized(&self) -> bool {
        *self.apply_basis(&Partition::empty()) == one()
    }
}

impl fmt::Debug for Cochain1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain1({})", self.name())
    }
}

/// A bilinear map Sym × Sym → Sym given on basis pairs, memoized.
#[derive(Clone)]
pub struct Pairing(Arc<PairingInner>);

struct PairingInner {
    name: String,
    action: Box<Action2>,
    memo: RwLock<HashMap<(Partition, Partition), Arc<SymFunc>>>,
}

impl Pairing {
    pub fn new(
        name: impl Into<String>,
        action: impl Fn(&Partition, &Partition) -> SymFunc + Send + Sync + 'static,
    ) -> Self {
        Self(Arc::new(PairingInner {
            name: name.into(),
            action: Box::new(action),
            memo: Default::default(),
        }))
    }

    /// The Kronecker product `x * y`.
    pub fn inner() -> Self {
        Self::new("inner", |a, b| {
            inner::inner_mul(&SymFunc::basis(a.clone()), &SymFunc::basis(b.clone()))
        })
    }

    /// The outer product `m(x, y) = x · y` viewed as a pairing.
    pub fn outer() -> Self {
        Self::new("outer", |a, b| (*mul_basis(a, b)).clone())
    }

    /// `⟨x | y⟩ · 1`.
    pub fn schur_hall() -> Self {
        Self::new(
            "schur-hall",
            |a, b| if a == b { one() } else { SymFunc::zero() },
        )
    }

    /// The convolution unit `e²(x, y) = ε(x) ε(y) · 1`.
    pub fn e2() -> Self {
        Self::new("e2", |a, b| {
            if a.is_empty() && b.is_empty() {
                one()
            } else {
                SymFunc::zero()
            }
        })
    }

    /// `inner`, `outer`, `schur-hall`, `e2` or `derived:<φ>:<pairing>`.
    /// Derived pairings are not validated here; see [`derived_pairing`].
    pub fn by_name(name: &str) -> Result<Self> {
        if let Some(rest) = name.strip_prefix("derived:") {
            let (phi, base) = rest.split_once(':').ok_or_else(|| {
                Error::Parse(format!(
                    "expected derived:<cochain>:<pairing>, got `{name}`"
                ))
            })?;
            let phi = Cochain1::by_name(phi)?;
            let base = Self::by_name(base)?;
            return Ok(compose(&phi, &base));
        }
        Ok(match name {
            "inner" => Self::inner(),
            "outer" | "m" => Self::outer(),
            "schur-hall" => Self::schur_hall(),
            "e2" => Self::e2(),
            other => return Err(Error::Parse(format!("unknown pairing `{other}`"))),
        })
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn apply_basis(&self, a: &Partition, b: &Partition) -> Arc<SymFunc> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.0.memo.read().get(&key) {
            return v.clone();
        }
        let v = Arc::new((self.0.action)(a, b));
        self.0.memo.write().entry(key).or_insert(v).clone()
    }

    pub fn apply(&self, x: &SymFunc, y: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&self.apply_basis(a, b), checked_mul(ca, cb));
            }
        }
        out
    }

    /// Applies the pairing to an element of Sym ⊗ Sym.
    pub fn apply_tensor(&self, t: &TensorSymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for ((a, b), c) in t.iter() {
            out.add_scaled(&self.apply_basis(a, b), c);
        }
        out
    }

    /// `a(1, 1) = 1`.
    pub fn is_unital(&self) -> bool {
        let e = Partition::empty();
        *self.apply_basis(&e, &e) == one()
    }

    /// `a(x, 1) = a(1, x) = ε(x) · 1` for `|x| ≤ max_degree`.
    pub fn is_normalized(&self, max_degree: u32) -> bool {
        let e = Partition::empty();
        partitions_up_to(max_degree).iter().all(|x| {
            let expected = if x.is_empty() { one() } else { SymFunc::zero() };
            *self.apply_basis(x, &e) == expected && *self.apply_basis(&e, x) == expected
        })
    }
}

impl fmt::Debug for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pairing({})", self.name())
    }
}

/// A comultiplication Sym → Sym ⊗ Sym given on the basis, memoized.
#[derive(Clone)]
pub struct CoMul(Arc<CoMulInner>);

struct CoMulInner {
    name: String,
    action: Box<ActionCo>,
    memo: RwLock<HashMap<Partition, Arc<TensorSymFunc>>>,
}

impl CoMul {
    pub fn new(
        name: impl Into<String>,
        action: impl Fn(&Partition) -> TensorSymFunc + Send + Sync + 'static,
    ) -> Self {
        Self(Arc::new(CoMulInner {
            name: name.into(),
            action: Box::new(action),
            memo: Default::default(),
        }))
    }

    pub fn outer() -> Self {
        Self::new("outer", |p| (*coproduct_basis(p)).clone())
    }

    pub fn inner() -> Self {
        Self::new("inner", |p| {
            inner::inner_coproduct(&SymFunc::basis(p.clone()))
        })
    }

    /// The Schur–Hall adjoint of a grade-preserving pairing:
    /// `δ_a(s_λ) = Σ_{μ,ν ⊢ |λ|} ⟨s_λ | a(s_μ, s_ν)⟩ s_μ ⊗ s_ν`.
    pub fn adjoint(a: &Pairing) -> Self {
        let a = a.clone();
        Self::new(format!("adjoint({})", a.name()), move |lam| {
            let basis = partitions_of(lam.weight());
            let mut out = TensorSymFunc::zero();
            for mu in &basis {
                for nu in &basis {
                    out.add_term((mu.clone(), nu.clone()), a.apply_basis(mu, nu).coeff(lam));
                }
            }
            out
        })
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn apply_basis(&self, p: &Partition) -> Arc<TensorSymFunc> {
        if let Some(v) = self.0.memo.read().get(p) {
            return v.clone();
        }
        let v = Arc::new((self.0.action)(p));
        self.0.memo.write().entry(p.clone()).or_insert(v).clone()
    }

    pub fn apply(&self, f: &SymFunc) -> TensorSymFunc {
        let mut out = TensorSymFunc::zero();
        for (p, c) in f.iter() {
            out.add_scaled(&self.apply_basis(p), c);
        }
        out
    }
}

impl fmt::Debug for CoMul {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoMul({})", self.name())
    }
}

// ---------------------------------------------------------------------------
// Convolution

/// `(f ⋆ g)(x) = Σ f(x_(1)) · g(x_(2))`.
pub fn convolve1(f: &Cochain1, g: &Cochain1) -> Cochain1 {
    let (f, g) = (f.clone(), g.clone());
    Cochain1::new(format!("({}⋆{})", f.name(), g.name()), move |p| {
        let mut out = SymFunc::zero();
        for ((x1, x2), c) in coproduct_basis(p).iter() {
            out.add_scaled(&outer_mul(&f.apply_basis(x1), &g.apply_basis(x2)), c);
        }
        out
    })
}

/// `(a ⋆ b)(x, y) = Σ a(x_(1), y_(1)) · b(x_(2), y_(2))`.
pub fn convolve2(a: &Pairing, b: &Pairing) -> Pairing {
    let (a, b) = (a.clone(), b.clone());
    Pairing::new(format!("({}⋆{})", a.name(), b.name()), move |x, y| {
        let dy = coproduct_basis(y);
        let mut out = SymFunc::zero();
        for ((x1, x2), cx) in coproduct_basis(x).iter() {
            for ((y1, y2), cy) in dy.iter() {
                let l = a.apply_basis(x1, y1);
                if l.is_zero() {
                    continue;
                }
                let r = b.apply_basis(x2, y2);
                if r.is_zero() {
                    continue;
                }
                out.add_scaled(&outer_mul(&l, &r), checked_mul(cx, cy));
            }
        }
        out
    })
}

/// `φ ∘ a`.
pub fn compose(phi: &Cochain1, a: &Pairing) -> Pairing {
    let (phi, a) = (phi.clone(), a.clone());
    let name = if phi.name() == "id" {
        a.name().to_string()
    } else {
        format!("derived:{}:{}", phi.name(), a.name())
    };
    Pairing::new(name, move |x, y| phi.apply(&a.apply_basis(x, y)))
}

/// `a ∘ (φ ⊗ ψ)`.
pub fn precompose(a: &Pairing, phi: &Cochain1, psi: &Cochain1) -> Pairing {
    let (a, phi, psi) = (a.clone(), phi.clone(), psi.clone());
    Pairing::new(
        format!("{}∘({}⊗{})", a.name(), phi.name(), psi.name()),
        move |x, y| a.apply(&phi.apply_basis(x), &psi.apply_basis(y)),
    )
}

/// The derived pairing `a_φ = φ ∘ a`; `φ` must be an algebra morphism
/// through `check_degree`.
pub fn derived_pairing(a: &Pairing, phi: &Cochain1, check_degree: u32) -> Result<Pairing> {
    if let Err(w) = check_algebra_hom(phi, check_degree) {
        return Err(Error::CheckFailed {
            name: phi.name().to_string(),
            check: "algebra morphism",
            witness: w.to_string(),
        });
    }
    Ok(compose(phi, a))
}

/// `f̄` with `f ⋆ f̄ = e`, by `f̄(x) = -f(x) - Σ' f(x_(1)) f̄(x_(2))`.
pub fn milnor_moore_inverse1(f: &Cochain1) -> Result<Cochain1> {
    if !f.is_normalized() {
        return Err(Error::NotNormalized {
            name: f.name().to_string(),
            flag: "normalized",
        });
    }
    let f = f.clone();
    let memo: Arc<RwLock<HashMap<Partition, Arc<SymFunc>>>> = Default::default();
    Ok(Cochain1::new(format!("inv({})", f.name()), move |p| {
        (*inverse1_rec(&f, &memo, p)).clone()
    }))
}

fn inverse1_rec(
    f: &Cochain1,
    memo: &RwLock<HashMap<Partition, Arc<SymFunc>>>,
    p: &Partition,
) -> Arc<SymFunc> {
    if let Some(v) = memo.read().get(p) {
        return v.clone();
    }
    let v = if p.is_empty() {
        one()
    } else {
        let mut out = -(*f.apply_basis(p)).clone();
        for ((x1, x2), c) in sym::cut_coproduct(&SymFunc::basis(p.clone())).iter() {
            let rest = inverse1_rec(f, memo, x2);
            out.add_scaled(&outer_mul(&f.apply_basis(x1), &rest), -c);
        }
        out
    };
    let v = Arc::new(v);
    memo.write().entry(p.clone()).or_insert(v).clone()
}

type PairMemo = RwLock<HashMap<(Partition, Partition), Arc<SymFunc>>>;

/// `ā` with `a ⋆ ā = e²`, by Milnor–Moore recursion over the cut coproduct
/// of Sym ⊗ Sym. Only `a(1, 1) = 1` is needed for the recursion.
pub fn milnor_moore_inverse2(a: &Pairing) -> Result<Pairing> {
    if !a.is_unital() {
        return Err(Error::NotNormalized {
            name: a.name().to_string(),
            flag: "unital",
        });
    }
    let a = a.clone();
    let memo: Arc<PairMemo> = Default::default();
    Ok(Pairing::new(format!("inv({})", a.name()), move |x, y| {
        (*inverse2_rec(&a, &memo, x, y)).clone()
    }))
}

fn inverse2_rec(a: &Pairing, memo: &PairMemo, x: &Partition, y: &Partition) -> Arc<SymFunc> {
    let key = (x.clone(), y.clone());
    if let Some(v) = memo.read().get(&key) {
        return v.clone();
    }
    let v = if x.is_empty() && y.is_empty() {
        one()
    } else {
        let mut out = -(*a.apply_basis(x, y)).clone();
        let dy = coproduct_basis(y);
        for ((x1, x2), cx) in coproduct_basis(x).iter() {
            for ((y1, y2), cy) in dy.iter() {
                let trivial_left = x1.is_empty() && y1.is_empty();
                let trivial_right = x2.is_empty() && y2.is_empty();
                if trivial_left || trivial_right {
                    continue;
                }
                let l = a.apply_basis(x1, y1);
                if l.is_zero() {
                    continue;
                }
                let r = inverse2_rec(a, memo, x2, y2);
                out.add_scaled(&outer_mul(&l, &r), -checked_mul(cx, cy));
            }
        }
        out
    };
    let v = Arc::new(v);
    memo.write().entry(key).or_insert(v).clone()
}

/// `ā = S ∘ a`, the inverse of a Frobenius Laplace pairing, after checking
/// the Frobenius laws through `max_degree`.
pub fn frobenius_inverse(a: &Pairing, max_degree: u32) -> Result<Pairing> {
    if let Err(w) = check_frobenius(a, &CoMul::adjoint(a), max_degree) {
        return Err(Error::CheckFailed {
            name: a.name().to_string(),
            check: "Frobenius",
            witness: w.to_string(),
        });
    }
    let a = a.clone();
    Ok(Pairing::new(
        format!("frobinv({})", a.name()),
        move |x, y| sym::antipode(&a.apply_basis(x, y)),
    ))
}

/// The Sweedler coboundary `∂f = (ε⊗f) ⋆ (f̄∘m) ⋆ (f⊗ε)`, i.e.
/// `∂f(x, y) = Σ f(y_(1)) f̄(x_(1) y_(2)) f(x_(2))`.
pub fn coboundary1(f: &Cochain1) -> Result<Pairing> {
    let fbar = milnor_moore_inverse1(f)?;
    let f = f.clone();
    Ok(Pairing::new(format!("∂{}", f.name()), move |x, y| {
        let dy = coproduct_basis(y);
        let mut out = SymFunc::zero();
        for ((x1, x2), cx) in coproduct_basis(x).iter() {
            let right = f.apply_basis(x2);
            if right.is_zero() {
                continue;
            }
            for ((y1, y2), cy) in dy.iter() {
                let left = f.apply_basis(y1);
                if left.is_zero() {
                    continue;
                }
                let mid = fbar.apply(&mul_basis(x1, y2));
                let term = outer_mul(&outer_mul(&left, &mid), &right);
                out.add_scaled(&term, checked_mul(cx, cy));
            }
        }
        out
    }))
}

// ---------------------------------------------------------------------------
// Checkers

/// A failing basis tuple together with both sides of the violated law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub law: &'static str,
    pub args: Vec<Partition>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|p| format!("s[{p}]")).collect();
        write!(
            f,
            "{} at ({}): {} != {}",
            self.law,
            args.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

pub(crate) fn witness<T: fmt::Display>(
    law: &'static str,
    args: &[&Partition],
    lhs: &T,
    rhs: &T,
) -> Witness {
    Witness {
        law,
        args: args.iter().map(|&p| p.clone()).collect(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

pub(crate) fn first_failure<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Option<Witness> + Sync + Send,
) -> Result<(), Witness> {
    match items.par_iter().find_map_first(f) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// Basis pairs `(x, y)` with `|x| + |y| ≤ d`, by increasing total weight.
pub fn basis_pairs(d: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for total in 0..=d {
        for i in 0..=total {
            for x in partitions_of(i) {
                for y in partitions_of(total - i) {
                    out.push((x.clone(), y));
                }
            }
        }
    }
    out
}

/// Triples with `|x| ≤ d1`, `|y| + |z| ≤ d2`-style bounds, by increasing total weight.
fn triples(accept: impl Fn(u32, u32, u32) -> bool, d: u32) -> Vec<[Partition; 3]> {
    let all = partitions_up_to(d);
    let mut out = Vec::new();
    for x in &all {
        for y in &all {
            for z in &all {
                if accept(x.weight(), y.weight(), z.weight()) {
                    out.push([x.clone(), y.clone(), z.clone()]);
                }
            }
        }
    }
    out.sort_by_key(|[x, y, z]| x.weight() + y.weight() + z.weight());
    out
}

/// `f(xy) = f(x) f(y)` for `|x| + |y| ≤ d`, and `f(1) = 1`.
pub fn check_algebra_hom(f: &Cochain1, max_degree: u32) -> Result<(), Witness> {
    if !f.is_normalized() {
        let e = Partition::empty();
        return Err(witness("unit", &[&e], &*f.apply_basis(&e), &one()));
    }
    first_failure(&basis_pairs(max_degree), |(x, y)| {
        let lhs = f.apply(&mul_basis(x, y));
        let rhs = outer_mul(&f.apply_basis(x), &f.apply_basis(y));
        (lhs != rhs).then(|| witness("f(xy) = f(x)f(y)", &[x, y], &lhs, &rhs))
    })
}

pub fn is_algebra_hom(f: &Cochain1, max_degree: u32) -> bool {
    check_algebra_hom(f, max_degree).is_ok()
}

/// Right law at one triple: `a(x, yz) = Σ a(x_(1), y) a(x_(2), z)`.
pub fn laplace_right_at(
    a: &Pairing,
    x: &Partition,
    y: &Partition,
    z: &Partition,
) -> Result<(), Witness> {
    let lhs = a.apply(&SymFunc::basis(x.clone()), &mul_basis(y, z));
    let mut rhs = SymFunc::zero();
    for ((x1, x2), c) in coproduct_basis(x).iter() {
        let l = a.apply_basis(x1, y);
        if l.is_zero() {
            continue;
        }
        rhs.add_scaled(&outer_mul(&l, &a.apply_basis(x2, z)), c);
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(witness(
            "a(x,yz) = Σ a(x(1),y) a(x(2),z)",
            &[x, y, z],
            &lhs,
            &rhs,
        ))
    }
}

/// Left law at one triple: `a(xy, z) = Σ a(x, z_(1)) a(y, z_(2))`.
pub fn laplace_left_at(
    a: &Pairing,
    x: &Partition,
    y: &Partition,
    z: &Partition,
) -> Result<(), Witness> {
    let lhs = a.apply(&mul_basis(x, y), &SymFunc::basis(z.clone()));
    let mut rhs = SymFunc::zero();
    for ((z1, z2), c) in coproduct_basis(z).iter() {
        let l = a.apply_basis(x, z1);
        if l.is_zero() {
            continue;
        }
        rhs.add_scaled(&outer_mul(&l, &a.apply_basis(y, z2)), c);
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(witness(
            "a(xy,z) = Σ a(x,z(1)) a(y,z(2))",
            &[x, y, z],
            &lhs,
            &rhs,
        ))
    }
}

/// Both straightening laws on all basis triples within the bound.
pub fn check_laplace(a: &Pairing, max_degree: u32) -> Result<(), Witness> {
    let d = max_degree;
    first_failure(&triples(|x, y, z| x <= d && y + z <= d, d), |[x, y, z]| {
        laplace_right_at(a, x, y, z).err()
    })?;
    first_failure(&triples(|x, y, z| x + y <= d && z <= d, d), |[x, y, z]| {
        laplace_left_at(a, x, y, z).err()
    })
}

pub fn is_laplace(a: &Pairing, max_degree: u32) -> bool {
    check_laplace(a, max_degree).is_ok()
}

/// The inverse-free 2-cocycle identity at one triple:
/// `Σ c(x_(1) y_(1), z) c(x_(2), y_(2)) = Σ c(y_(1), z_(1)) c(x, y_(2) z_(2))`.
pub fn cocycle2_at(
    c: &Pairing,
    x: &Partition,
    y: &Partition,
    z: &Partition,
) -> Result<(), Witness> {
    let (dx, dy, dz) = (coproduct_basis(x), coproduct_basis(y), coproduct_basis(z));
    let zb = SymFunc::basis(z.clone());
    let xb = SymFunc::basis(x.clone());
    let mut lhs = SymFunc::zero();
    for ((x1, x2), cx) in dx.iter() {
        for ((y1, y2), cy) in dy.iter() {
            let r = c.apply_basis(x2, y2);
            if r.is_zero() {
                continue;
            }
            let l = c.apply(&mul_basis(x1, y1), &zb);
            lhs.add_scaled(&outer_mul(&l, &r), checked_mul(cx, cy));
        }
    }
    let mut rhs = SymFunc::zero();
    for ((y1, y2), cy) in dy.iter() {
        for ((z1, z2), cz) in dz.iter() {
            let l = c.apply_basis(y1, z1);
            if l.is_zero() {
                continue;
            }
            let r = c.apply(&xb, &mul_basis(y2, z2));
            rhs.add_scaled(&outer_mul(&l, &r), checked_mul(cy, cz));
        }
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(witness("2-cocycle identity", &[x, y, z], &lhs, &rhs))
    }
}

pub fn check_cocycle2(c: &Pairing, max_degree: u32) -> Result<(), Witness> {
    let d = max_degree;
    first_failure(
        &triples(|x, y, z| x + y <= d && y + z <= d, d),
        |[x, y, z]| cocycle2_at(c, x, y, z).err(),
    )
}

pub fn is_cocycle2(c: &Pairing, max_degree: u32) -> bool {
    check_cocycle2(c, max_degree).is_ok()
}

/// Zero across unequal degrees and homogeneous of degree `n` on `n × n`.
pub fn check_grade_preserving(a: &Pairing, max_degree: u32) -> Result<(), Witness> {
    let all = partitions_up_to(max_degree);
    let pairs: Vec<(&Partition, &Partition)> = all
        .iter()
        .flat_map(|x| all.iter().map(move |y| (x, y)))
        .collect();
    first_failure(&pairs, |&(x, y)| {
        let v = a.apply_basis(x, y);
        let ok = if x.weight() == y.weight() {
            sym::is_homogeneous_of(&v, x.weight())
        } else {
            v.is_zero()
        };
        (!ok).then(|| witness("grade preservation", &[x, y], &*v, &SymFunc::zero()))
    })
}

/// Commutativity of `a` and `δ`, the Frobenius law
/// `a(x, y_[1]) ⊗ y_[2] = δ(a(x, y)) = x_[1] ⊗ a(x_[2], y)` in each degree
/// `n ≤ max_degree`, and the mixed bialgebra law
/// `δ(xy) = Σ x_[1] y_[1] ⊗ x_[2] y_[2]` for `|x| + |y| ≤ max_degree`.
/// A pairing that is not grade-preserving fails at once.
pub fn check_frobenius(a: &Pairing, delta: &CoMul, max_degree: u32) -> Result<(), Witness> {
    check_grade_preserving(a, max_degree)?;
    let same_degree: Vec<(Partition, Partition)> = (0..=max_degree)
        .flat_map(|n| {
            let b = partitions_of(n);
            b.iter()
                .flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    first_failure(&same_degree, |(x, y)| {
        let xy = a.apply_basis(x, y);
        let yx = a.apply_basis(y, x);
        (xy != yx).then(|| witness("commutativity", &[x, y], &*xy, &*yx))
    })?;
    let degrees: Vec<Partition> = partitions_up_to(max_degree);
    first_failure(&degrees, |x| {
        let d = delta.apply_basis(x);
        let sw = sym::swap(&d);
        (*d != sw).then(|| witness("cocommutativity", &[x], &*d, &sw))
    })?;
    first_failure(&same_degree, |(x, y)| {
        let mut left = TensorSymFunc::zero();
        for ((y1, y2), c) in delta.apply_basis(y).iter() {
            left.add_scaled(
                &sym::tensor_of(&a.apply_basis(x, y1), &SymFunc::basis(y2.clone())),
                c,
            );
        }
        let mid = delta.apply(&a.apply_basis(x, y));
        let mut right = TensorSymFunc::zero();
        for ((x1, x2), c) in delta.apply_basis(x).iter() {
            right.add_scaled(
                &sym::tensor_of(&SymFunc::basis(x1.clone()), &a.apply_basis(x2, y)),
                c,
            );
        }
        if left != mid {
            return Some(witness("Frobenius law (left)", &[x, y], &left, &mid));
        }
        (mid != right).then(|| witness("Frobenius law (right)", &[x, y], &mid, &right))
    })?;
    first_failure(&basis_pairs(max_degree), |(x, y)| {
        let lhs = delta.apply(&mul_basis(x, y));
        let rhs = sym::tensor_mul(&delta.apply_basis(x), &delta.apply_basis(y));
        (lhs != rhs).then(|| witness("mixed bialgebra law", &[x, y], &lhs, &rhs))
    })
}

pub fn is_frobenius(a: &Pairing, delta: &CoMul, max_degree: u32) -> bool {
    check_frobenius(a, delta, max_degree).is_ok()
}

/// `a = b` on basis pairs with `|x| + |y| ≤ max_degree`.
pub fn check_pairings_equal(a: &Pairing, b: &Pairing, max_degree: u32) -> Result<(), Witness> {
    first_failure(&basis_pairs(max_degree), |(x, y)| {
        let l = a.apply_basis(x, y);
        let r = b.apply_basis(x, y);
        (l != r).then(|| witness("pairing equality", &[x, y], &*l, &*r))
    })
}

/// `f = g` on the basis up to `max_degree`.
pub fn check_cochains_equal(f: &Cochain1, g: &Cochain1, max_degree: u32) -> Result<(), Witness> {
    first_failure(&partitions_up_to(max_degree), |x| {
        let l = f.apply_basis(x);
        let r = g.apply_basis(x);
        (l != r).then(|| witness("cochain equality", &[x], &*l, &*r))
    })
}
