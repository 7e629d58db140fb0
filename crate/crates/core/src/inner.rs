//! The inner (Kronecker) product and coproduct, computed through symmetric
//! group character tables built with the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::Path;
use std::sync::{Arc, LazyLock};

use parking_lot::{Mutex, RwLock};

use crate::error::{Error, Result};
use crate::lincomb::{checked_add, checked_mul, Coeff};
use crate::partition::{partitions_of, Partition};
use crate::sym::{SymFunc, TensorSymFunc};

const TABLE_HEADER: &str = "symchar-character-table v1";

/// Irreducible characters of `S_n`. Rows are `λ ⊢ n` and columns are class
/// types `ρ ⊢ n`, both in reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: u32,
    labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    /// `n! / z_ρ`, the size of each conjugacy class.
    class_sizes: Vec<Coeff>,
    order: Coeff,
}

impl CharacterTable {
    fn build(n: u32, values: Vec<Vec<i64>>) -> Self {
        let labels = partitions_of(n);
        let index = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let order: Coeff = (1..=n as Coeff).product();
        let class_sizes = labels
            .iter()
            .map(|rho| order / rho.z_value().expect("z overflow") as Coeff)
            .collect();
        Self {
            n,
            labels,
            index,
            values,
            class_sizes,
            order,
        }
    }

    pub fn compute(n: u32) -> Self {
        let labels = partitions_of(n);
        let mut memo = HashMap::new();
        let values = labels
            .iter()
            .map(|lam| {
                labels
                    .iter()
                    .map(|rho| mn_character(lam, rho.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self::build(n, values)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Row and column labels (identical lists).
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[rho]]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    pub fn class_size(&self, j: usize) -> Coeff {
        self.class_sizes[j]
    }

    pub fn group_order(&self) -> Coeff {
        self.order
    }

    /// Writes the versioned text form: a header line, `n <n>`, then one
    /// `λ: values…` row per irreducible.
    pub fn write_to(&self, mut w: impl Write) -> Result<()> {
        writeln!(w, "{TABLE_HEADER}")?;
        writeln!(w, "n {}", self.n)?;
        for (lam, row) in self.labels.iter().zip(&self.values) {
            let vals: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(w, "{lam}: {}", vals.join(" "))?;
        }
        Ok(())
    }

    pub fn read_from(r: impl BufRead) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("character table file: {m}"));
        let mut lines = r.lines();
        let mut next = || -> Result<String> {
            lines
                .next()
                .ok_or_else(|| bad("truncated"))?
                .map_err(Error::from)
        };
        if next()?.trim() != TABLE_HEADER {
            return Err(bad("unknown header"));
        }
        let n: u32 = next()?
            .trim()
            .strip_prefix("n ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad("missing size line"))?;
        let labels = partitions_of(n);
        let mut values = Vec::with_capacity(labels.len());
        for lam in &labels {
            let line = next()?;
            let (head, body) = line.split_once(':').ok_or_else(|| bad("malformed row"))?;
            if head.trim() != lam.to_string() {
                return Err(bad("row labels out of order"));
            }
            let row: Vec<i64> = body
                .split_whitespace()
                .map(|v| v.parse().map_err(|_| bad("non-integer entry")))
                .collect::<Result<_>>()?;
            if row.len() != labels.len() {
                return Err(bad("row length"));
            }
            values.push(row);
        }
        Ok(Self::build(n, values))
    }
}

/// `χ^λ(ρ)` by removing border strips of the lengths in `rho`.
fn mn_character(
    lambda: &Partition,
    rho: &[u32],
    memo: &mut HashMap<(Partition, Vec<u32>), i64>,
) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.clone(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // Beta numbers β_i = λ_i + ℓ - 1 - i; a border strip of length r is a
    // bead moved from b to b - r, signed by the beads it jumps over.
    let len = lambda.len();
    let beta: Vec<i64> = (0..len)
        .map(|i| lambda.part(i) as i64 + (len - 1 - i) as i64)
        .collect();
    let mut total = 0;
    for i in 0..len {
        let target = beta[i] - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(k, &b)| (b - (len - 1 - k) as i64) as u32)
            .collect();
        let mu = Partition::from_unsorted(parts);
        let v = mn_character(&mu, rest, memo);
        total += if jumped % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

static TABLES: LazyLock<RwLock<HashMap<u32, Arc<CharacterTable>>>> =
    LazyLock::new(Default::default);
static CACHE_DIR: LazyLock<Mutex<Option<std::path::PathBuf>>> = LazyLock::new(Default::default);

/// Persists character tables under `dir` and reuses any found there.
pub fn set_table_cache_dir(dir: Option<&Path>) {
    *CACHE_DIR.lock() = dir.map(Path::to_path_buf);
}

fn load_or_compute(n: u32) -> CharacterTable {
    let dir = CACHE_DIR.lock().clone();
    let Some(dir) = dir else {
        return CharacterTable::compute(n);
    };
    let path = dir.join(format!("chartable-{n}.txt"));
    if let Ok(file) = std::fs::File::open(&path) {
        if let Ok(t) = CharacterTable::read_from(std::io::BufReader::new(file)) {
            if t.n == n {
                return t;
            }
        }
    }
    let t = CharacterTable::compute(n);
    // A failed write only loses the cache entry.
    let _ = std::fs::create_dir_all(&dir)
        .map_err(Error::from)
        .and_then(|_| std::fs::File::create(&path).map_err(Error::from))
        .and_then(|f| t.write_to(std::io::BufWriter::new(f)));
    t
}

/// The character table of `S_n`, built once per process.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    if let Some(t) = TABLES.read().get(&n) {
        return t.clone();
    }
    let t = Arc::new(load_or_compute(n));
    TABLES.write().entry(n).or_insert(t).clone()
}

/// `χ^λ(ρ)`.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.weight(),
            right: rho.weight(),
        });
    }
    Ok(character_table(lambda.weight()).value(lambda, rho))
}

/// The class function of the degree-`n` part of `f`, indexed like the table.
fn class_function(f: &SymFunc, t: &CharacterTable) -> Vec<Coeff> {
    let mut v = vec![0; t.labels.len()];
    for (p, c) in f.iter().filter(|(p, _)| p.weight() == t.n) {
        for (slot, &x) in v.iter_mut().zip(t.row(t.index[p])) {
            *slot = checked_add(*slot, checked_mul(c, x as Coeff));
        }
    }
    v
}

/// Expands a class function back into Schur functions.
fn from_class_function(v: &[Coeff], t: &CharacterTable) -> SymFunc {
    let weighted: Vec<Coeff> = v
        .iter()
        .zip(&t.class_sizes)
        .map(|(&a, &b)| checked_mul(a, b))
        .collect();
    t.labels
        .iter()
        .enumerate()
        .map(|(i, lam)| {
            let s = t.row(i).iter().zip(&weighted).fold(0, |acc, (&x, &w)| {
                checked_add(acc, checked_mul(x as Coeff, w))
            });
            debug_assert_eq!(s % t.order, 0);
            (lam.clone(), s / t.order)
        })
        .collect()
}

fn degrees(f: &SymFunc) -> Vec<u32> {
    let mut d: Vec<u32> = f.keys().map(Partition::weight).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// `f * g`; components of different degrees multiply to zero.
pub fn inner_mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for n in degrees(f) {
        if !g.keys().any(|p| p.weight() == n) {
            continue;
        }
        let t = character_table(n);
        let a = class_function(f, &t);
        let b = class_function(g, &t);
        let prod: Vec<Coeff> = a.iter().zip(&b).map(|(&x, &y)| checked_mul(x, y)).collect();
        out += &from_class_function(&prod, &t);
    }
    out
}

/// The Kronecker coefficient `g^λ_{μν} = ⟨s_λ | s_μ * s_ν⟩`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Coeff {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return 0;
    }
    let t = character_table(n);
    let (a, b, c) = (t.index[lambda], t.index[mu], t.index[nu]);
    let s = (0..t.labels.len()).fold(0, |acc, j| {
        let x = t.values[a][j] as Coeff * t.values[b][j] as Coeff * t.values[c][j] as Coeff;
        checked_add(acc, checked_mul(x, t.class_sizes[j]))
    });
    s / t.order
}

/// `δ(s_λ) = Σ g^λ_{μν} s_μ ⊗ s_ν`.
pub fn inner_coproduct(f: &SymFunc) -> TensorSymFunc {
    let mut out = TensorSymFunc::zero();
    for (lam, c) in f.iter() {
        let n = lam.weight();
        let basis = SymFunc::basis(lam.clone());
        for mu in partitions_of(n) {
            let row = inner_mul(&basis, &SymFunc::basis(mu.clone()));
            for (nu, g) in row.iter() {
                out.add_term((mu.clone(), nu.clone()), checked_mul(c, g));
            }
        }
    }
    out
}

/// `ε¹`: the sum of the coefficients on one-row partitions, `()` included.
pub fn counit_eps1(f: &SymFunc) -> Coeff {
    f.iter()
        .filter(|(p, _)| p.is_row())
        .fold(0, |a, (_, c)| checked_add(a, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{schur, tensor};

    fn p<const N: usize>(a: [u32; N]) -> Partition {
        Partition::from(a)
    }

    #[test]
    fn character_examples() {
        assert_eq!(character(&p([1, 1]), &p([2])).unwrap(), -1);
        assert_eq!(character(&p([2, 1]), &p([1, 1, 1])).unwrap(), 2);
        for n in 0..=6 {
            for rho in partitions_of(n) {
                assert_eq!(character(&Partition::row(n), &rho).unwrap(), 1);
            }
        }
        assert!(character(&p([2]), &p([1])).is_err());
    }

    #[test]
    fn inner_examples() {
        let mu = &schur([2, 1]) + &schur([1, 1, 1]);
        assert_eq!(inner_mul(&schur([3]), &mu), mu);
        assert_eq!(inner_mul(&schur([1, 1]), &schur([1, 1])), schur([2]));
        let expected = &(&schur([3]) + &schur([2, 1])) + &schur([1, 1, 1]);
        assert_eq!(inner_mul(&schur([2, 1]), &schur([2, 1])), expected);
        assert!(inner_mul(&schur([2]), &schur([1])).is_zero());
    }

    #[test]
    fn inner_coproduct_examples() {
        assert_eq!(inner_coproduct(&schur([1])), tensor([1], [1]));
        assert_eq!(
            inner_coproduct(&schur([1, 1])),
            &tensor([2], [1, 1]) + &tensor([1, 1], [2])
        );
        assert_eq!(
            inner_coproduct(&SymFunc::basis(Partition::empty())),
            tensor([], [])
        );
    }

    #[test]
    fn eps1_examples() {
        assert_eq!(counit_eps1(&schur([3])), 1);
        assert_eq!(counit_eps1(&schur([2, 1])), 0);
        let sq = crate::sym::outer_mul(&schur([1]), &schur([1]));
        assert_eq!(
            counit_eps1(&sq),
            counit_eps1(&schur([1])) * counit_eps1(&schur([1]))
        );
    }

    #[test]
    fn table_file_round_trip() {
        let t = CharacterTable::compute(5);
        let mut buf = Vec::new();
        t.write_to(&mut buf).unwrap();
        let back = CharacterTable::read_from(&buf[..]).unwrap();
        assert_eq!(back, t);
        assert!(CharacterTable::read_from(&b"bogus\n"[..]).is_err());
    }
}
