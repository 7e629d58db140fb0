//! Brute-force oracles written without the library's combinatorial kernels.
#![allow(dead_code)]

use std::collections::HashMap;

use symchar_core::partition::partitions_of;
use symchar_core::poly::Poly;
use symchar_core::sym::{self, outer_mul};
use symchar_core::{Coeff, Partition, SymFunc};

/// `s_λ(x_1, …, x_n)` by peeling horizontal strips off the last variable.
pub fn schur_poly(lambda: &Partition, n: usize) -> Poly {
    let mut memo = HashMap::new();
    schur_poly_rec(lambda.parts(), n, n, &mut memo)
}

fn schur_poly_rec(
    lam: &[u32],
    k: usize,
    total: usize,
    memo: &mut HashMap<(Vec<u32>, usize), Poly>,
) -> Poly {
    if lam.is_empty() {
        return Poly::one(total);
    }
    if lam.len() > k {
        return Poly::zero(total);
    }
    if let Some(p) = memo.get(&(lam.to_vec(), k)) {
        return p.clone();
    }
    let mut out = Poly::zero(total);
    // μ interlaces λ: λ_{i+1} ≤ μ_i ≤ λ_i.
    let mut mu = vec![0u32; lam.len()];
    strips(lam, 0, &mut mu, &mut |mu| {
        let trimmed: Vec<u32> = mu.iter().copied().filter(|&p| p > 0).collect();
        let d = lam.iter().sum::<u32>() - trimmed.iter().sum::<u32>();
        let rest = schur_poly_rec(&trimmed, k - 1, total, memo);
        let mut e = vec![0u16; total];
        e[k - 1] = d as u16;
        out.add_scaled(&rest.mul(&Poly::monomial(e, 1)), 1);
    });
    memo.insert((lam.to_vec(), k), out.clone());
    out
}

fn strips(lam: &[u32], i: usize, mu: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == lam.len() {
        f(mu);
        return;
    }
    let lo = lam.get(i + 1).copied().unwrap_or(0);
    for v in lo..=lam[i] {
        mu[i] = v;
        strips(lam, i + 1, mu, f);
    }
}

pub fn symfunc_poly(f: &SymFunc, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    for (p, c) in f.iter() {
        out.add_scaled(&schur_poly(p, n), c);
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Number of ways to drop the parts of `rho` into bins with the given sums.
fn fillings(rho: &[u32], bins: &mut [i64]) -> i64 {
    let Some((&first, rest)) = rho.split_first() else {
        return bins.iter().all(|&b| b == 0) as i64;
    };
    let mut total = 0;
    for i in 0..bins.len() {
        if bins[i] >= first as i64 {
            bins[i] -= first as i64;
            total += fillings(rest, bins);
            bins[i] += first as i64;
        }
    }
    total
}

/// `χ^λ(ρ)` as the coefficient of `x^{λ+δ}` in `a_δ p_ρ`.
pub fn frobenius_character(lambda: &Partition, rho: &Partition) -> i64 {
    let n = lambda.len().max(1);
    let lam: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64).collect();
    let mut total = 0;
    for (sigma, sign) in permutations(n) {
        let mut bins: Vec<i64> = (0..n)
            .map(|i| lam[i] + (n - 1 - i) as i64 - (n - 1 - sigma[i]) as i64)
            .collect();
        if bins.iter().any(|&b| b < 0) {
            continue;
        }
        total += sign * fillings(rho.parts(), &mut bins);
    }
    total
}

fn factorial(n: u32) -> Coeff {
    (1..=n as Coeff).product()
}

fn z(rho: &Partition) -> Coeff {
    rho.multiplicities()
        .iter()
        .enumerate()
        .map(|(i, &m)| (i as Coeff + 1).pow(m) * factorial(m))
        .product()
}

/// `g_{λμν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ` with characters from
/// [`frobenius_character`].
pub fn kronecker_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Coeff {
    let n = lambda.weight();
    let order = factorial(n);
    let s: Coeff = partitions_of(n)
        .iter()
        .map(|rho| {
            let c = (frobenius_character(lambda, rho)
                * frobenius_character(mu, rho)
                * frobenius_character(nu, rho)) as Coeff;
            c * (order / z(rho))
        })
        .sum();
    assert_eq!(s % order, 0);
    s / order
}

/// `det[h_{θ_i - i + j}]` expanded with outer products.
pub fn jacobi_trudi(theta: &[i64]) -> SymFunc {
    let l = theta.len();
    let mut out = SymFunc::zero();
    for (sigma, sign) in permutations(l) {
        let mut term = sym::one();
        for i in 0..l {
            let k = theta[i] - i as i64 + sigma[i] as i64;
            if k < 0 {
                term = SymFunc::zero();
                break;
            }
            term = outer_mul(&term, &sym::h(k as u32));
        }
        out.add_scaled(&term, sign as Coeff);
    }
    out
}

/// All partitions of weight at most `n`.
pub fn labels(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Pairs of labels with total weight at most `n`.
pub fn label_pairs(n: u32) -> Vec<(Partition, Partition)> {
    let all = labels(n);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.weight() + b.weight() <= n {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
