//! Exact elements of `Z[zeta_p]`.
//!
//! A sum is a length-`p` integer vector of coefficients of
//! `1, zeta, ..., zeta^{p-1}`. The relation `1 + zeta + ... + zeta^{p-1} = 0`
//! is used to keep the last coefficient at zero, which makes coefficient
//! equality the same as equality of algebraic numbers.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloSum {
    p: u32,
    coeffs: Vec<i64>,
}

impl CycloSum {
    pub fn zero(p: u32) -> Self {
        CycloSum {
            p,
            coeffs: vec![0; p as usize],
        }
    }

    pub fn from_int(p: u32, n: i64) -> Self {
        let mut s = Self::zero(p);
        s.coeffs[0] = n;
        s
    }

    /// `c * zeta_p^k`.
    pub fn zeta_pow(p: u32, k: u32, c: i64) -> Self {
        let mut s = Self::zero(p);
        s.coeffs[(k % p) as usize] = c;
        s.reduce();
        s
    }

    pub fn from_coeffs(p: u32, mut coeffs: Vec<i64>) -> Self {
        coeffs.resize(p as usize, 0);
        let mut s = CycloSum { p, coeffs };
        s.reduce();
        s
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Canonical form: kill the `zeta^{p-1}` coefficient.
    fn reduce(&mut self) {
        let last = self.coeffs[self.p as usize - 1];
        if last != 0 {
            for c in self.coeffs.iter_mut() {
                *c -= last;
            }
        }
    }

    #[inline]
    pub fn add_term(&mut self, exponent: u32, weight: i64) {
        self.coeffs[(exponent % self.p) as usize] += weight;
        self.reduce();
    }

    pub fn add(&self, other: &CycloSum) -> CycloSum {
        assert_eq!(self.p, other.p, "mixed cyclotomic orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloSum { p: self.p, coeffs }
    }

    pub fn sub(&self, other: &CycloSum) -> CycloSum {
        assert_eq!(self.p, other.p, "mixed cyclotomic orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloSum { p: self.p, coeffs }
    }

    pub fn neg(&self) -> CycloSum {
        CycloSum {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> CycloSum {
        CycloSum {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &CycloSum) -> CycloSum {
        assert_eq!(self.p, other.p, "mixed cyclotomic orders");
        let p = self.p as usize;
        let mut coeffs = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[(i + j) % p] += a * b;
            }
        }
        let mut s = CycloSum { p: self.p, coeffs };
        s.reduce();
        s
    }

    /// Complex embedding `zeta_p -> exp(2 pi i / p)`.
    pub fn embed(&self) -> Complex64 {
        let p = self.p as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let theta = TAU * (i as f64) / p;
            acc += Complex64::new(theta.cos(), theta.sin()) * (c as f64);
        }
        acc
    }

    pub fn abs(&self) -> f64 {
        self.embed().norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_character_sum_vanishes() {
        let mut s = CycloSum::zero(5);
        for k in 0..5 {
            s.add_term(k, 1);
        }
        assert!(s.is_zero());
    }

    #[test]
    fn repeated_term() {
        let mut s = CycloSum::zero(3);
        s.add_term(1, 1);
        s.add_term(1, 1);
        assert_eq!(s, CycloSum::zeta_pow(3, 1, 2));
    }

    #[test]
    fn embedding_matches_integers() {
        let s = CycloSum::from_int(7, 42);
        assert!((s.embed().re - 42.0).abs() < 1e-12);
        assert!(s.embed().im.abs() < 1e-12);
    }

    fn arb_sum(p: u32) -> impl Strategy<Value = CycloSum> {
        proptest::collection::vec(-50i64..50, p as usize)
            .prop_map(move |v| CycloSum::from_coeffs(p, v))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_sum(7), b in arb_sum(7), c in arb_sum(7)) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn embedding_is_additive(a in arb_sum(5), b in arb_sum(5)) {
            let lhs = a.add(&b).embed();
            let rhs = a.embed() + b.embed();
            prop_assert!((lhs - rhs).norm() < 1e-9);
        }
    }
}
