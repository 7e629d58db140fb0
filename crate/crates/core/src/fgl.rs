//! One-dimensional formal group laws over the rationals, truncated by total
//! degree, and the coproducts on Sym they induce.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::inner::inner_coproduct;
use crate::lincomb::checked_mul;
use crate::partition::Partition;
use crate::sym::{self, coproduct, iterated_coproduct, outer_mul, SymFunc, TensorSymFunc};

/// A rational polynomial in up to three variables `X, Y, Z`, with every
/// monomial of total degree above `cap` discarded.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncPoly {
    nvars: usize,
    cap: u32,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

const NAMES: [&str; 3] = ["X", "Y", "Z"];

impl TruncPoly {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        assert!(nvars <= NAMES.len(), "at most three variables");
        Self {
            nvars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, cap: u32, c: BigRational) -> Self {
        let mut p = Self::zero(nvars, cap);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, cap: u32, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars, cap);
        p.add_term(exps, BigRational::one());
        p
    }

    /// A univariate series from its coefficients, index = degree.
    pub fn from_coeffs(cap: u32, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut p = Self::zero(1, cap);
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(vec![k as u32], c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `X^k` in a univariate series.
    pub fn coeff1(&self, k: u32) -> BigRational {
        self.coeff(&[k])
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if exps.iter().sum::<u32>() > self.cap || c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars, self.cap.min(other.cap));
        for (a, x) in &self.terms {
            let da: u32 = a.iter().sum();
            for (b, y) in &other.terms {
                if da + b.iter().sum::<u32>() > out.cap {
                    continue;
                }
                let exps = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(exps, x * y);
            }
        }
        out
    }

    /// `self(args_1, …, args_k)`; every argument must lack a constant term
    /// unless `self` is a polynomial of degree at most `cap`.
    pub fn substitute(&self, args: &[TruncPoly]) -> Self {
        assert_eq!(args.len(), self.nvars, "one argument per variable");
        let (nvars, cap) = (args[0].nvars, args.iter().map(|a| a.cap).min().unwrap());
        let mut powers: Vec<Vec<TruncPoly>> = args
            .iter()
            .map(|a| {
                vec![
                    TruncPoly::constant(nvars, cap, BigRational::one()),
                    a.clone(),
                ]
            })
            .collect();
        let mut out = Self::zero(nvars, cap);
        for (exps, c) in &self.terms {
            let mut t = TruncPoly::constant(nvars, cap, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&args[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// `d/dX_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            out.add_term(e, c * BigRational::from_integer(BigInt::from(exps[i])));
        }
        out
    }

    /// Sets variable `i` to zero.
    pub fn at_zero(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                out.add_term(exps.clone(), c.clone());
            }
        }
        out
    }

    /// The same polynomial viewed in `total` variables, starting at `offset`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        let mut out = Self::zero(total, self.cap);
        for (exps, c) in &self.terms {
            let mut e = vec![0; total];
            e[offset..offset + self.nvars].copy_from_slice(exps);
            out.add_term(e, c.clone());
        }
        out
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigRational, bare_monomial: bool) -> fmt::Result {
    let a = c.abs();
    if a.is_one() && bare_monomial {
        return Ok(());
    }
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "({}/{})", a.numer(), a.denom())
    }
}

/// Graded by total degree, e.g. `3X + 3X^2 + X^3` or `X - (1/2)X^2`.
impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            a.iter()
                .sum::<u32>()
                .cmp(&b.iter().sum())
                .then_with(|| b.cmp(a))
        });
        for (n, exps) in keys.into_iter().enumerate() {
            let c = &self.terms[exps];
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = exps.iter().all(|&e| e == 0);
            write_coeff(f, c, !constant)?;
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => f.write_str(NAMES[i])?,
                    _ => write!(f, "{}^{e}", NAMES[i])?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O({})", self.cap + 1)
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `F(X, Y) = X + Y + Σ c_{ij} X^i Y^j`, kept through total degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fgl1 {
    coeffs: BTreeMap<(u32, u32), BigRational>,
    cap: u32,
}

impl Fgl1 {
    /// Coefficients need `i, j ≥ 1`; those above the cap are dropped.
    pub fn new(
        coeffs: impl IntoIterator<Item = ((u32, u32), BigRational)>,
        cap: u32,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((i, j), c) in coeffs {
            if i == 0 || j == 0 {
                return Err(Error::InvalidArgument(format!(
                    "coefficient c_{{{i},{j}}} needs i, j ≥ 1"
                )));
            }
            if i + j <= cap && !c.is_zero() {
                map.insert((i, j), c);
            }
        }
        Ok(Self { coeffs: map, cap })
    }

    /// The additive law `X + Y`.
    pub fn additive(cap: u32) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            cap,
        }
    }

    /// The multiplicative law `X + Y + bXY`.
    pub fn multiplicative(b: BigRational, cap: u32) -> Self {
        Self::new([((1, 1), b)], cap).expect("valid coefficient")
    }

    /// `ga`, `gm` or `gm:b`.
    pub fn named(name: &str, cap: u32) -> Result<Self> {
        match name.trim().split_once(':') {
            None if name.trim() == "ga" => Ok(Self::additive(cap)),
            None if name.trim() == "gm" => Ok(Self::multiplicative(BigRational::one(), cap)),
            Some(("gm", b)) => {
                let b = BigRational::from_str(b.trim())
                    .map_err(|_| Error::Parse(format!("bad rational `{b}`")))?;
                Ok(Self::multiplicative(b, cap))
            }
            _ => Err(Error::Parse(format!(
                "unknown formal group law `{name}`; expected ga, gm or gm:b"
            ))),
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.coeffs
    }

    /// `F` as a polynomial in `X, Y`.
    pub fn as_poly(&self) -> TruncPoly {
        let mut p = TruncPoly::var(2, self.cap, 0).add(&TruncPoly::var(2, self.cap, 1));
        for (&(i, j), c) in &self.coeffs {
            p.add_term(vec![i, j], c.clone());
        }
        p
    }

    /// `F(a, b)` for series without constant term.
    pub fn apply(&self, a: &TruncPoly, b: &TruncPoly) -> TruncPoly {
        self.as_poly().substitute(&[a.clone(), b.clone()])
    }

    /// The first failing axiom, if any. The inverse axiom always holds
    /// once the others do, since [`antipode_series`] solves it.
    pub fn check_axioms(&self) -> Result<()> {
        let fail = |check: &'static str, witness: String| Error::CheckFailed {
            name: "F".into(),
            check,
            witness,
        };
        for (&(i, j), c) in &self.coeffs {
            if self.coeffs.get(&(j, i)) != Some(c) {
                return Err(fail(
                    "commutativity",
                    format!(
                        "c_{{{i},{j}}} = {c} but c_{{{j},{i}}} = {}",
                        self.coeff(j, i)
                    ),
                ));
            }
        }
        let f = self.as_poly();
        let x = |i| TruncPoly::var(3, self.cap, i);
        let fxy = f.substitute(&[x(0), x(1)]);
        let fyz = f.substitute(&[x(1), x(2)]);
        let left = f.substitute(&[fxy, x(2)]);
        let right = f.substitute(&[x(0), fyz]);
        if left != right {
            return Err(fail(
                "associativity",
                format!("F(F(X,Y),Z) - F(X,F(Y,Z)) = {}", left.sub(&right)),
            ));
        }
        let unit = f.at_zero(1);
        if unit != TruncPoly::var(2, self.cap, 0) {
            return Err(fail("identity", format!("F(X,0) = {unit}")));
        }
        Ok(())
    }

    pub fn is_fgl(&self) -> bool {
        self.check_axioms().is_ok()
    }

    fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

fn x1(cap: u32) -> TruncPoly {
    TruncPoly::var(1, cap, 0)
}

/// The series `λ(X) = -X + …` with `F(X, λ(X)) = 0`, solved degree by degree.
pub fn antipode_series(f: &Fgl1) -> TruncPoly {
    let cap = f.cap;
    let mut lam = x1(cap).scale(&rat(-1));
    for k in 2..=cap {
        let r = f.apply(&x1(cap), &lam).coeff1(k);
        lam.add_term(vec![k], -r);
    }
    lam
}

/// `[n](X)`: `[0] = 0`, `[m] = F([m-1](X), X)`, `[-m] = λ([m](X))`.
pub fn loop_n(f: &Fgl1, n: i64) -> TruncPoly {
    let cap = f.cap;
    let mut acc = TruncPoly::zero(1, cap);
    for _ in 0..n.unsigned_abs() {
        acc = f.apply(&acc, &x1(cap));
    }
    if n < 0 {
        acc = antipode_series(f).substitute(&[acc]);
    }
    acc
}

/// The logarithm `ℓ(X) = ∫ dX / F_Y(X, 0)`, checked against
/// `ℓ(F(X,Y)) = ℓ(X) + ℓ(Y)`.
pub fn fgl_log(f: &Fgl1) -> Result<TruncPoly> {
    let cap = f.cap;
    // F_Y(X, 0) = 1 + Σ_i c_{i1} X^i
    let mut dy = vec![BigRational::one()];
    dy.extend((1..cap).map(|i| f.coeff(i, 1)));
    let mut inv = vec![BigRational::zero(); cap as usize];
    if cap > 0 {
        inv[0] = BigRational::one();
    }
    for k in 1..cap as usize {
        let s: BigRational = (1..=k).map(|i| &dy[i] * &inv[k - i]).sum();
        inv[k] = -s;
    }
    let log = TruncPoly::from_coeffs(
        cap,
        std::iter::once(BigRational::zero())
            .chain(inv.iter().enumerate().map(|(k, c)| c / rat(k as i64 + 1))),
    );
    let x = |i| TruncPoly::var(2, cap, i);
    let lhs = log.substitute(&[f.as_poly()]);
    let rhs = log.substitute(&[x(0)]).add(&log.substitute(&[x(1)]));
    if lhs != rhs {
        return Err(Error::CheckFailed {
            name: "F".into(),
            check: "logarithm",
            witness: format!("ℓ(F(X,Y)) - ℓ(X) - ℓ(Y) = {}", lhs.sub(&rhs)),
        });
    }
    Ok(log)
}

/// Compositional inverse `g` with `g(s(X)) = X`; needs `s = aX + …`, `a ≠ 0`.
pub fn reversion(s: &TruncPoly) -> Result<TruncPoly> {
    let cap = s.cap;
    let a = s.coeff1(1);
    if !s.coeff1(0).is_zero() || a.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "series {s} is not invertible under composition"
        )));
    }
    let mut g = TruncPoly::zero(1, cap);
    g.add_term(vec![1], a.recip());
    let mut ak = a.clone();
    for k in 2..=cap {
        ak *= &a;
        let r = g.substitute(std::slice::from_ref(s)).coeff1(k);
        g.add_term(vec![k], -r / &ak);
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FglKind {
    Additive,
    Multiplicative,
}

impl FromStr for FglKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "additive" => Ok(Self::Additive),
            "multiplicative" => Ok(Self::Multiplicative),
            other => Err(Error::Parse(format!("unknown coproduct `{other}`"))),
        }
    }
}

/// `s_λ(X + Y)` or `s_λ(X + Y + XY)` split into `X` and `Y` legs.
pub fn coproduct_from_fgl(kind: FglKind, f: &SymFunc) -> TensorSymFunc {
    match kind {
        FglKind::Additive => coproduct(f),
        FglKind::Multiplicative => f.map_linear(multiplicative_basis),
    }
}

/// `Σ s_{λ(1)} s_{λ(2)[1]} ⊗ s_{λ(3)} s_{λ(2)[2]}` with `δ` on the middle leg.
fn multiplicative_basis(lambda: &Partition) -> TensorSymFunc {
    let mut out = TensorSymFunc::zero();
    for (legs, c) in iterated_coproduct(lambda, 3) {
        let [a, b, d] = <[Partition; 3]>::try_from(legs).expect("three legs");
        let sa = SymFunc::basis(a);
        let sd = SymFunc::basis(d);
        for ((b1, b2), g) in inner_coproduct(&SymFunc::basis(b)).iter() {
            let left = outer_mul(&sa, &SymFunc::basis(b1.clone()));
            let right = outer_mul(&sd, &SymFunc::basis(b2.clone()));
            out.add_scaled(&sym::tensor_of(&left, &right), checked_mul(c, g));
        }
    }
    out
}
