//! Sparse multivariate integer polynomials.
//!
//! Only used as an independent check on the Schur-basis arithmetic: Schur
//! polynomials are expanded by tableau enumeration and multiplied here.

use std::fmt;

use crate::lincomb::{checked_add, checked_mul, Coeff, LinComb};

/// Exponent vector; its length is the number of variables.
pub type Monomial = Vec<u16>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    nvars: usize,
    terms: LinComb<Monomial>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: LinComb::zero(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exps: Monomial, coeff: Coeff) -> Self {
        Self {
            nvars: exps.len(),
            terms: LinComb::term(exps, coeff),
        }
    }

    /// The variable `x_i` among `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u16]) -> Coeff {
        self.terms.coeff(&exps.to_vec())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Coeff)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Monomial, coeff: Coeff) {
        debug_assert_eq!(exps.len(), self.nvars);
        self.terms.add_term(exps, coeff);
    }

    pub fn add_scaled(&mut self, other: &Poly, scale: Coeff) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        self.terms.add_scaled(&other.terms, scale);
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut acc: std::collections::HashMap<Monomial, Coeff> = std::collections::HashMap::new();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                let e: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let slot = acc.entry(e).or_insert(0);
                *slot = checked_add(*slot, checked_mul(ca, cb));
            }
        }
        Poly {
            nvars: self.nvars,
            terms: acc.into_iter().collect(),
        }
    }

    /// Places this polynomial into `total` variables starting at `offset`.
    pub fn embed(&self, total: usize, offset: usize) -> Poly {
        assert!(offset + self.nvars <= total);
        let mut out = Poly::zero(total);
        for (e, c) in self.terms.iter() {
            let mut f = vec![0; total];
            f[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(f, c);
        }
        out
    }

    /// Substitutes variable `i` by the monomial `images[i]`.
    pub fn substitute_monomials(&self, images: &[Monomial]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, Vec::len);
        let mut out = Poly::zero(target);
        for (e, c) in self.terms.iter() {
            let mut f = vec![0u16; target];
            for (k, &p) in e.iter().enumerate() {
                for (slot, &x) in f.iter_mut().zip(&images[k]) {
                    *slot += p * x;
                }
            }
            out.add_term(f, c);
        }
        out
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.nvars);
        self.terms.iter().fold(0, |acc, (e, c)| {
            let v = e.iter().zip(point).fold(c, |m, (&k, &x)| {
                checked_mul(m, x.checked_pow(k as u32).expect("overflow"))
            });
            checked_add(acc, v)
        })
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{k}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_eval() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let mut s = x.clone();
        s.add_scaled(&y, 1);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[1, 1]), 2);
        assert_eq!(sq.eval(&[2, 3]), 25);
    }

    #[test]
    fn substitution() {
        // x0 -> a*b, x1 -> b
        let p = Poly::var(2, 0).mul(&Poly::var(2, 1));
        let q = p.substitute_monomials(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(q.coeff(&[1, 2]), 1);
        assert_eq!(Poly::var(1, 0).embed(3, 2).coeff(&[0, 0, 1]), 1);
    }
}
