//! Dense univariate polynomials over a finite field.
//!
//! Coefficients are stored ascending; the zero polynomial is the empty
//! vector. Used for modulus searches, characteristic polynomials,
//! squarefree tests and root finding. Everything here is exhaustive or
//! quadratic — fine at desk scale, by design.

use super::field::Field;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: u32) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![0, 1],
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> u32 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = f.add(a, b);
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = f.sub(a, b);
        }
        Poly::new(out)
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: u32, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let d = divisor
            .degree()
            .ok_or_else(|| Error::DegenerateInput("division by zero polynomial".into()))?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - d] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = i - d + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, b));
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Result<Poly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b, f)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        let inv = f.inv(a.leading())?;
        Ok(a.scale(inv, f))
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, &a) in self.coeffs.iter().enumerate().skip(1) {
            // multiply by the integer i, reduced into the prime field
            let mut s = 0u32;
            for _ in 0..(i as u32 % f.p()) {
                s = f.add(s, a);
            }
            out.push(s);
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: u32, f: &Field) -> u32 {
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// `self^e mod m` by square and multiply.
    pub fn powmod(&self, mut e: u64, m: &Poly, f: &Field) -> Result<Poly> {
        let mut base = self.divrem(m, f)?.1;
        let mut acc = Poly::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).divrem(m, f)?.1;
            }
            base = base.mul(&base, f).divrem(m, f)?.1;
            e >>= 1;
        }
        Ok(acc)
    }

    /// All roots in `F_q` with multiplicity, by exhaustive evaluation and
    /// repeated deflation. Returns the roots and whether the polynomial is
    /// squarefree over the algebraic closure.
    pub fn roots(&self, f: &Field) -> Result<(Vec<(u32, usize)>, bool)> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial has no root data".into()));
        }
        let mut roots = Vec::new();
        for x in 0..f.q() {
            if self.eval(x, f) != 0 {
                continue;
            }
            let mut mult = 0usize;
            let linear = Poly::new(vec![f.neg(x), 1]);
            let mut cur = self.clone();
            loop {
                let (quot, rem) = cur.divrem(&linear, f)?;
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                cur = quot;
                if cur.is_zero() {
                    break;
                }
            }
            roots.push((x, mult));
        }
        Ok((roots, self.is_squarefree(f)?))
    }

    /// Squarefree over the closure: `gcd(f, f')` constant, recursing
    /// through `f = g(x^p)` when the derivative vanishes identically.
    pub fn is_squarefree(&self, f: &Field) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        if self.degree() == Some(0) {
            return Ok(true);
        }
        let der = self.derivative(f);
        if der.is_zero() {
            // inseparable: every root is repeated
            return Ok(false);
        }
        let g = self.gcd(&der, f)?;
        Ok(g.degree() == Some(0))
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_roots_in_closure(&self, f: &Field) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        if self.degree() == Some(0) {
            return Ok(0);
        }
        let der = self.derivative(f);
        if der.is_zero() {
            // f = g(x^p); distinct roots match those of g
            let p = f.p() as usize;
            let mut g = Vec::new();
            for (i, &c) in self.coeffs.iter().enumerate() {
                if i % p == 0 {
                    g.push(c);
                } else if c != 0 {
                    return Err(Error::Internal("vanishing derivative with stray term".into()));
                }
            }
            return Poly::new(g).distinct_roots_in_closure(f);
        }
        let g = self.gcd(&der, f)?;
        let (sqfree_part, _) = self.divrem(&g, f)?;
        Ok(sqfree_part.degree().unwrap_or(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn constructed_roots() {
        let f = f7();
        // (x-1)(x-2)(x-3)
        let p = Poly::new(vec![6, 1])
            .mul(&Poly::new(vec![5, 1]), &f)
            .mul(&Poly::new(vec![4, 1]), &f);
        let (roots, squarefree) = p.roots(&f).unwrap();
        assert_eq!(roots, vec![(1, 1), (2, 1), (3, 1)]);
        assert!(squarefree);
    }

    #[test]
    fn double_root() {
        let f = Field::prime(5).unwrap();
        let p = Poly::new(vec![4, 1]).mul(&Poly::new(vec![4, 1]), &f);
        let (roots, squarefree) = p.roots(&f).unwrap();
        assert_eq!(roots, vec![(1, 2)]);
        assert!(!squarefree);
    }

    #[test]
    fn irreducible_quadratic() {
        let f = f7();
        // -1 is a non-residue mod 7: check by exhausting squares
        let squares: Vec<u32> = (0..7).map(|x| f.mul(x, x)).collect();
        assert!(!squares.contains(&f.neg(1)));
        let p = Poly::new(vec![1, 0, 1]);
        let (roots, squarefree) = p.roots(&f).unwrap();
        assert!(roots.is_empty());
        assert!(squarefree);
    }

    #[test]
    fn zero_poly_rejected() {
        let f = f7();
        assert!(Poly::zero().roots(&f).is_err());
    }

    #[test]
    fn divrem_roundtrip() {
        let f = f7();
        let a = Poly::new(vec![3, 0, 2, 5, 1]);
        let b = Poly::new(vec![1, 4, 1]);
        let (q, r) = a.divrem(&b, &f).unwrap();
        let back = q.mul(&b, &f).add(&r, &f);
        assert_eq!(back, a);
    }
}
