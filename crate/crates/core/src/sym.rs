//! The outer Hopf algebra of symmetric functions in the Schur basis.
//!
//! Products and skews are computed by counting Littlewood–Richardson
//! tableaux; the coproduct is assembled from skews,
//! `Δ(s_λ) = Σ_η s_{λ/η} ⊗ s_η`. Basis results are memoized in
//! process-wide caches whose inserts are idempotent.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::lincomb::{checked_add, checked_mul, Coeff, LinComb};
use crate::partition::{parse_partition, partitions_of, Partition, DEFAULT_MAX_WEIGHT};
use crate::poly::Poly;

/// An element of Sym in the Schur basis.
pub type SymFunc = LinComb<Partition>;

/// An element of Sym ⊗ Sym in the basis `s_μ ⊗ s_ν`.
pub type TensorSymFunc = LinComb<(Partition, Partition)>;

type PairCache = LazyLock<RwLock<HashMap<(Partition, Partition), Arc<SymFunc>>>>;

static PRODUCTS: PairCache = LazyLock::new(Default::default);
static SKEWS: PairCache = LazyLock::new(Default::default);
static COPRODUCTS: LazyLock<RwLock<HashMap<Partition, Arc<TensorSymFunc>>>> =
    LazyLock::new(Default::default);

pub fn schur(p: impl Into<Partition>) -> SymFunc {
    SymFunc::basis(p.into())
}

/// The unit `s_()`.
pub fn one() -> SymFunc {
    SymFunc::basis(Partition::empty())
}

/// Complete homogeneous `h_n = s_(n)`.
pub fn h(n: u32) -> SymFunc {
    SymFunc::basis(Partition::row(n))
}

/// Elementary `e_n = s_(1^n)`.
pub fn e(n: u32) -> SymFunc {
    SymFunc::basis(Partition::column(n))
}

pub fn tensor(a: impl Into<Partition>, b: impl Into<Partition>) -> TensorSymFunc {
    TensorSymFunc::basis((a.into(), b.into()))
}

/// Counts Littlewood–Richardson fillings of `outer/inner`, grouped by
/// content. With `content = Some(ν)` only fillings of content `ν` count.
fn lr_fillings(outer: &Partition, inner: &Partition, content: Option<&Partition>) -> SymFunc {
    if !outer.contains(inner) {
        return SymFunc::zero();
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| {
            (inner.part(i) as usize..outer.part(i) as usize)
                .rev()
                .map(move |j| (i, j))
        })
        .collect();
    let bound: Vec<u32> = content.map(|c| c.parts().to_vec()).unwrap_or_default();
    let mut filler = Filler {
        outer,
        inner,
        cells: &cells,
        grid: outer
            .parts()
            .iter()
            .map(|&w| vec![0u8; w as usize])
            .collect(),
        counts: vec![0; cells.len() + 2],
        bound: content.map(|_| bound),
        out: HashMap::new(),
    };
    filler.fill(0, 0);
    filler
        .out
        .into_iter()
        .map(|(counts, n)| (Partition::from_sorted(counts), n))
        .collect()
}

struct Filler<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    cells: &'a [(usize, usize)],
    grid: Vec<Vec<u8>>,
    /// counts[v] = occurrences of letter v (1-based) so far.
    counts: Vec<u32>,
    bound: Option<Vec<u32>>,
    out: HashMap<Vec<u32>, Coeff>,
}

impl Filler<'_> {
    fn fill(&mut self, k: usize, distinct: usize) {
        if k == self.cells.len() {
            let content: Vec<u32> = self.counts[1..=distinct].to_vec();
            if let Some(b) = &self.bound {
                if content != *b {
                    return;
                }
            }
            *self.out.entry(content).or_insert(0) += 1;
            return;
        }
        let (i, j) = self.cells[k];
        let mut hi = distinct + 1;
        if j + 1 < self.outer.part(i) as usize {
            hi = hi.min(self.grid[i][j + 1] as usize);
        }
        let mut lo = 1;
        if i > 0 && j >= self.inner.part(i - 1) as usize {
            lo = self.grid[i - 1][j] as usize + 1;
        }
        if let Some(b) = &self.bound {
            hi = hi.min(b.len());
        }
        for v in lo..=hi {
            if v > 1 && self.counts[v - 1] <= self.counts[v] {
                continue;
            }
            if let Some(b) = &self.bound {
                if self.counts[v] >= b[v - 1] {
                    continue;
                }
            }
            self.counts[v] += 1;
            self.grid[i][j] = v as u8;
            self.fill(k + 1, distinct.max(v));
            self.counts[v] -= 1;
        }
        self.grid[i][j] = 0;
    }
}

/// The Littlewood–Richardson coefficient `c^λ_{μν}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Coeff {
    if lambda.weight() != mu.weight() + nu.weight() {
        return 0;
    }
    lr_fillings(lambda, mu, Some(nu)).coeff(nu)
}

fn cached_pair(
    cache: &PairCache,
    key: (Partition, Partition),
    compute: impl FnOnce(&Partition, &Partition) -> SymFunc,
) -> Arc<SymFunc> {
    if let Some(v) = cache.read().get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute(&key.0, &key.1));
    cache.write().entry(key).or_insert(v).clone()
}

/// `s_μ · s_ν`, memoized with the key ordered by commutativity.
pub fn mul_basis(mu: &Partition, nu: &Partition) -> Arc<SymFunc> {
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    cached_pair(&PRODUCTS, key, |a, b| {
        if a.is_empty() {
            return SymFunc::basis(b.clone());
        }
        let n = a.weight() + b.weight();
        let max_len = a.len() + b.len();
        let mut out = SymFunc::zero();
        for lam in partitions_of(n) {
            if lam.len() > max_len
                || lam.part(0) > a.part(0) + b.part(0)
                || !lam.contains(a)
                || !lam.contains(b)
            {
                continue;
            }
            // Fill the larger skew shape: fewer cells to place.
            let c = lr_fillings(&lam, b, Some(a)).coeff(a);
            out.add_term(lam, c);
        }
        out
    })
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`.
pub fn skew_basis(lambda: &Partition, mu: &Partition) -> Arc<SymFunc> {
    cached_pair(&SKEWS, (lambda.clone(), mu.clone()), |l, m| {
        if m.is_empty() {
            return SymFunc::basis(l.clone());
        }
        lr_fillings(l, m, None)
    })
}

pub fn outer_mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            out.add_scaled(&mul_basis(a, b), checked_mul(ca, cb));
        }
    }
    out
}

/// Product of several factors, left to right.
pub fn outer_product<'a>(factors: impl IntoIterator<Item = &'a SymFunc>) -> SymFunc {
    factors.into_iter().fold(one(), |acc, f| outer_mul(&acc, f))
}

/// `g^⊥ f`, the adjoint of multiplication by `g`, bilinear in both slots.
pub fn skew(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            if b.weight() <= a.weight() {
                out.add_scaled(&skew_basis(a, b), checked_mul(ca, cb));
            }
        }
    }
    out
}

pub fn coproduct_basis(lambda: &Partition) -> Arc<TensorSymFunc> {
    if let Some(v) = COPRODUCTS.read().get(lambda) {
        return v.clone();
    }
    let mut out = TensorSymFunc::zero();
    for eta in lambda.subpartitions() {
        for (nu, c) in skew_basis(lambda, &eta).iter() {
            out.add_term((nu.clone(), eta.clone()), c);
        }
    }
    let v = Arc::new(out);
    COPRODUCTS
        .write()
        .entry(lambda.clone())
        .or_insert(v)
        .clone()
}

pub fn coproduct(f: &SymFunc) -> TensorSymFunc {
    f.map_linear(|p| (*coproduct_basis(p)).clone())
}

/// `Δ^{(k-1)}` on a basis element: all `k`-leg tensors with coefficients.
pub fn iterated_coproduct(lambda: &Partition, k: usize) -> Vec<(Vec<Partition>, Coeff)> {
    assert!(k >= 1, "at least one leg");
    if k == 1 {
        return vec![(vec![lambda.clone()], 1)];
    }
    let mut out = Vec::new();
    for ((a, b), c) in coproduct_basis(lambda).iter() {
        for (mut rest, d) in iterated_coproduct(b, k - 1) {
            rest.insert(0, a.clone());
            out.push((rest, checked_mul(c, d)));
        }
    }
    out
}

/// Coproduct with all legs of degree zero removed.
pub fn cut_coproduct(f: &SymFunc) -> TensorSymFunc {
    coproduct(f).filter(|(a, b)| !a.is_empty() && !b.is_empty())
}

/// `S(s_λ) = (-1)^{|λ|} s_{λ'}`.
pub fn antipode(f: &SymFunc) -> SymFunc {
    f.iter()
        .map(|(p, c)| (p.conjugate(), if p.weight() % 2 == 0 { c } else { -c }))
        .collect()
}

/// The counit: the coefficient of `s_()`.
pub fn counit(f: &SymFunc) -> Coeff {
    f.coeff(&Partition::empty())
}

/// The Schur–Hall scalar product.
pub fn scalar(f: &SymFunc, g: &SymFunc) -> Coeff {
    let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    small.iter().fold(0, |acc, (p, c)| {
        checked_add(acc, checked_mul(c, big.coeff(p)))
    })
}

/// `[r] = m^{(r-1)} ∘ Δ^{(r-1)}`; `[1]` is the identity.
pub fn loop_op(r: u32, f: &SymFunc) -> SymFunc {
    assert!(r >= 1, "loop operator index must be positive");
    if r == 1 {
        return f.clone();
    }
    let mut out = SymFunc::zero();
    for ((a, b), c) in coproduct(f).iter() {
        let rest = loop_op(r - 1, &SymFunc::basis(b.clone()));
        out.add_scaled(&outer_mul(&SymFunc::basis(a.clone()), &rest), c);
    }
    out
}

/// The homogeneous component of degree `d`.
pub fn component(f: &SymFunc, d: u32) -> SymFunc {
    f.filter(|p| p.weight() == d)
}

/// `(min, max)` weights of the support, `None` for zero.
pub fn degree_range(f: &SymFunc) -> Option<(u32, u32)> {
    let mut it = f.keys().map(Partition::weight);
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), w| (lo.min(w), hi.max(w))))
}

/// Whether every term has weight exactly `d`.
pub fn is_homogeneous_of(f: &SymFunc, d: u32) -> bool {
    f.keys().all(|p| p.weight() == d)
}

// ---------------------------------------------------------------------------
// Sym ⊗ Sym structure maps

/// `(m ⊗ m) ∘ (1 ⊗ sw ⊗ 1)` on basis tensors.
pub fn tensor_mul(x: &TensorSymFunc, y: &TensorSymFunc) -> TensorSymFunc {
    let mut out = TensorSymFunc::zero();
    for ((a1, a2), ca) in x.iter() {
        for ((b1, b2), cb) in y.iter() {
            let left = mul_basis(a1, b1);
            let right = mul_basis(a2, b2);
            let c = checked_mul(ca, cb);
            for (l, cl) in left.iter() {
                for (r, cr) in right.iter() {
                    out.add_term((l.clone(), r.clone()), checked_mul(c, checked_mul(cl, cr)));
                }
            }
        }
    }
    out
}

pub fn swap(x: &TensorSymFunc) -> TensorSymFunc {
    x.iter()
        .map(|((a, b), c)| ((b.clone(), a.clone()), c))
        .collect()
}

/// Scalar product on Sym ⊗ Sym, `⟨a⊗b | c⊗d⟩ = ⟨a|c⟩⟨b|d⟩`.
pub fn tensor_scalar(x: &TensorSymFunc, y: &TensorSymFunc) -> Coeff {
    x.iter().fold(0, |acc, (k, c)| {
        checked_add(acc, checked_mul(c, y.coeff(k)))
    })
}

/// `f ⊗ g`.
pub fn tensor_of(f: &SymFunc, g: &SymFunc) -> TensorSymFunc {
    let mut out = TensorSymFunc::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            out.add_term((a.clone(), b.clone()), checked_mul(ca, cb));
        }
    }
    out
}

/// Applies a linear map on each leg of a tensor.
pub fn tensor_map(
    x: &TensorSymFunc,
    mut f: impl FnMut(&Partition) -> SymFunc,
    mut g: impl FnMut(&Partition) -> SymFunc,
) -> TensorSymFunc {
    let mut out = TensorSymFunc::zero();
    for ((a, b), c) in x.iter() {
        out.add_scaled(&tensor_of(&f(a), &g(b)), c);
    }
    out
}

/// Multiplies the two legs: `m(a ⊗ b) = a·b`.
pub fn multiply_legs(x: &TensorSymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for ((a, b), c) in x.iter() {
        out.add_scaled(&mul_basis(a, b), c);
    }
    out
}

// ---------------------------------------------------------------------------
// Monomial expansion

/// Expands `s_λ(x_1, …, x_N)` by enumerating semistandard tableaux.
pub fn eval_monomials(lambda: &Partition, nvars: usize) -> Poly {
    let mut out = Poly::zero(nvars);
    if lambda.len() > nvars {
        return out;
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut grid: Vec<Vec<u16>> = shape.iter().map(|&w| vec![0; w]).collect();
    let mut exps = vec![0u16; nvars];
    ssyt_rec(&shape, nvars, 0, 0, &mut grid, &mut exps, &mut out);
    out
}

fn ssyt_rec(
    shape: &[usize],
    nvars: usize,
    i: usize,
    j: usize,
    grid: &mut [Vec<u16>],
    exps: &mut [u16],
    out: &mut Poly,
) {
    if i == shape.len() {
        out.add_term(exps.to_vec(), 1);
        return;
    }
    let (ni, nj) = if j + 1 == shape[i] {
        (i + 1, 0)
    } else {
        (i, j + 1)
    };
    let mut lo = if j > 0 { grid[i][j - 1] } else { 0 };
    if i > 0 {
        lo = lo.max(grid[i - 1][j] + 1);
    }
    // Leave room for the strictly increasing column below.
    let below = shape.iter().skip(i + 1).take_while(|&&w| w > j).count();
    let hi = nvars.saturating_sub(below);
    for v in lo as usize..hi {
        grid[i][j] = v as u16;
        exps[v] += 1;
        ssyt_rec(shape, nvars, ni, nj, grid, exps, out);
        exps[v] -= 1;
    }
}

/// Expands a Schur-basis element into `nvars` variables.
pub fn eval_symfunc(f: &SymFunc, nvars: usize) -> Poly {
    let mut out = Poly::zero(nvars);
    for (p, c) in f.iter() {
        out.add_scaled(&eval_monomials(p, nvars), c);
    }
    out
}

/// `s_λ(1^d)`, the dimension of the GL(d) irreducible, by the hook-content
/// formula `Π (d + c(i,j)) / h(i,j)`.
pub fn dimension_gl(lambda: &Partition, d: u32) -> Coeff {
    if lambda.len() > d as usize {
        return 0;
    }
    let cells = lambda.hooks_and_contents();
    let mut num: Coeff = 1;
    let mut den: Coeff = 1;
    for c in &cells {
        num = checked_mul(num, d as Coeff + c.content as Coeff);
        den = checked_mul(den, c.hook as Coeff);
    }
    num / den
}

// ---------------------------------------------------------------------------
// Text format: `s[2] + s[1,1]`, `3*s[2,1] - s[0]`

impl fmt::Display for LinComb<Partition> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter().rev().map(|(p, c)| (format!("s[{p}]"), c)))
    }
}

impl fmt::Display for LinComb<(Partition, Partition)> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.iter()
                .rev()
                .map(|((a, b), c)| (format!("s[{a}]⊗s[{b}]"), c)),
        )
    }
}

impl FromStr for LinComb<Partition> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_terms(s, |body| parse_partition(body, DEFAULT_MAX_WEIGHT))
    }
}

/// Writes `c1*t1 + c2*t2 - …` with unit coefficients elided; zero is `0`.
pub fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, Coeff)>,
) -> fmt::Result {
    let mut first = true;
    for (label, c) in terms {
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let a = c.unsigned_abs();
        if a == 1 {
            f.write_str(&label)?;
        } else {
            write!(f, "{a}*{label}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Parses `c*s[...] ± …`; each term label is `s[…]` and `body` parses the
/// bracket contents.
pub(crate) fn parse_terms<K: Ord + Clone>(
    s: &str,
    body: impl Fn(&str) -> Result<K>,
) -> Result<LinComb<K>> {
    let bad = || Error::Parse(format!("invalid symmetric function `{s}`"));
    let src = s.trim();
    if src == "0" {
        return Ok(LinComb::zero());
    }
    let mut out = LinComb::zero();
    let mut rest = src;
    let mut sign: Coeff = 1;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    }
    loop {
        let open = rest.find('[').ok_or_else(bad)?;
        let close = rest.find(']').ok_or_else(bad)?;
        let head = rest[..open]
            .trim()
            .trim_end_matches('s')
            .trim()
            .trim_end_matches('*')
            .trim();
        let coeff: Coeff = if head.is_empty() {
            1
        } else {
            head.parse().map_err(|_| bad())?
        };
        out.add_term(body(&rest[open + 1..close])?, sign * coeff);
        rest = rest[close + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        sign = match rest.as_bytes()[0] {
            b'+' => 1,
            b'-' => -1,
            _ => return Err(bad()),
        };
        rest = rest[1..].trim_start();
    }
    Ok(out)
}
