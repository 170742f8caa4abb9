//! Additive and multiplicative characters of `F_q`, and the exact /
//! floating split for evaluating them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use super::cyclo::CycloSum;
use super::field::Field;
use crate::{Error, Result};

/// `psi_a(x) = zeta_p^{Tr(a x)}`; nontrivial means `a != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditiveCharacter {
    pub multiplier: u32,
}

impl AdditiveCharacter {
    pub fn new(field: &Field, multiplier: u32) -> Result<Self> {
        if multiplier == 0 || multiplier >= field.q() {
            return Err(Error::DegenerateInput(
                "additive character multiplier must be a unit".into(),
            ));
        }
        Ok(AdditiveCharacter { multiplier })
    }

    /// Exponent of `zeta_p` at `x`.
    #[inline]
    pub fn exponent(&self, field: &Field, x: u32) -> u32 {
        field.trace(field.mul(self.multiplier, x))
    }

    pub fn eval(&self, field: &Field, x: u32) -> CycloSum {
        CycloSum::zeta_pow(field.p(), self.exponent(field, x), 1)
    }
}

/// A character of the `{+-1}` component of the abelianized Levi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignCharacter {
    Trivial,
    Sign,
}

impl SignCharacter {
    pub fn from_exponent(e: u32) -> Result<Self> {
        match e {
            0 => Ok(SignCharacter::Trivial),
            1 => Ok(SignCharacter::Sign),
            _ => Err(Error::InvalidDatum(
                "sign-component character exponent must be 0 or 1 (order <= 2)".into(),
            )),
        }
    }

    /// Value on `-1`.
    pub fn on_minus_one(&self) -> i64 {
        match self {
            SignCharacter::Trivial => 1,
            SignCharacter::Sign => -1,
        }
    }
}

/// `chi_r(x) = zeta_{q-1}^{r dlog x}`. Exact for the trivial and the
/// quadratic character, complex floating otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativeCharacter {
    pub exponent: u32,
}

/// How the values of a multiplicative character are materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiBackend {
    Exact,
    Float,
}

impl MultiplicativeCharacter {
    pub fn new(field: &Field, exponent: u32) -> Self {
        MultiplicativeCharacter {
            exponent: exponent % (field.q() - 1),
        }
    }

    pub fn trivial() -> Self {
        MultiplicativeCharacter { exponent: 0 }
    }

    pub fn quadratic(field: &Field) -> Self {
        MultiplicativeCharacter {
            exponent: (field.q() - 1) / 2,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    pub fn backend(&self, field: &Field) -> ChiBackend {
        if self.exponent == 0 || self.exponent == (field.q() - 1) / 2 {
            ChiBackend::Exact
        } else {
            ChiBackend::Float
        }
    }

    /// Exact value in `{-1, 0, 1}`; only valid on the exact backend.
    pub fn eval_exact(&self, field: &Field, x: u32) -> Result<i64> {
        if x == 0 {
            return Ok(0);
        }
        if self.exponent == 0 {
            return Ok(1);
        }
        if self.exponent != (field.q() - 1) / 2 {
            return Err(Error::BackendMismatch);
        }
        Ok(if field.dlog(x)? % 2 == 0 { 1 } else { -1 })
    }

    pub fn eval_complex(&self, field: &Field, x: u32) -> Complex64 {
        if x == 0 {
            return Complex64::new(0.0, 0.0);
        }
        let order = (field.q() - 1) as f64;
        let theta = TAU * ((self.exponent as u64 * field.dlog(x).unwrap() as u64)
            % (field.q() - 1) as u64) as f64
            / order;
        Complex64::new(theta.cos(), theta.sin())
    }
}

/// Accumulate `sum chi_value * psi(argument)` exactly. The stream carries
/// exact character values (`-1, 0, 1`); mixing with a float backend is a
/// caller error surfaced by `char_sum_accumulate_complex` being a separate
/// entry point.
pub fn char_sum_accumulate_exact<I>(field: &Field, psi: &AdditiveCharacter, terms: I) -> CycloSum
where
    I: IntoIterator<Item = (i64, u32)>,
{
    let p = field.p();
    let mut coeffs = vec![0i64; p as usize];
    for (chi, arg) in terms {
        if chi == 0 {
            continue;
        }
        coeffs[psi.exponent(field, arg) as usize] += chi;
    }
    CycloSum::from_coeffs(p, coeffs)
}

/// Floating accumulation for characters outside the exact backend.
pub fn char_sum_accumulate_complex<I>(
    field: &Field,
    psi: &AdditiveCharacter,
    terms: I,
) -> Complex64
where
    I: IntoIterator<Item = (Complex64, u32)>,
{
    let p = field.p() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for (chi, arg) in terms {
        let theta = TAU * psi.exponent(field, arg) as f64 / p;
        acc += chi * Complex64::new(theta.cos(), theta.sin());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_character_is_multiplicative_in_addition() {
        let f = Field::new(3, 2, 0).unwrap();
        let psi = AdditiveCharacter::new(&f, 1).unwrap();
        for x in 0..f.q() {
            for y in 0..f.q() {
                let lhs = psi.eval(&f, f.add(x, y));
                let rhs = psi.eval(&f, x).mul(&psi.eval(&f, y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn nontrivial_additive_sums_to_zero() {
        for f in [Field::prime(7).unwrap(), Field::new(3, 3, 0).unwrap()] {
            for a in 1..f.q().min(6) {
                let psi = AdditiveCharacter::new(&f, a).unwrap();
                let s = char_sum_accumulate_exact(&f, &psi, (0..f.q()).map(|x| (1i64, x)));
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn quadratic_character_sums_to_zero() {
        let f = Field::prime(11).unwrap();
        let eta = MultiplicativeCharacter::quadratic(&f);
        let total: i64 = f.units().map(|x| eta.eval_exact(&f, x).unwrap()).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn generic_character_sums_small() {
        let f = Field::prime(13).unwrap();
        let chi = MultiplicativeCharacter::new(&f, 3);
        let total: Complex64 = f.units().map(|x| chi.eval_complex(&f, x)).sum();
        assert!(total.norm() < 1e-9);
    }

    #[test]
    fn gauss_sum_square_pairs() {
        // 49 terms psi(x^2 - y^2) collapse exactly to the integer 7,
        // the Gauss sum norm.
        let f = Field::prime(7).unwrap();
        let psi = AdditiveCharacter::new(&f, 1).unwrap();
        let terms = (0..49).map(|i| {
            let (x, y) = (i / 7, i % 7);
            (1i64, f.sub(f.mul(x, x), f.mul(y, y)))
        });
        let s = char_sum_accumulate_exact(&f, &psi, terms);
        assert_eq!(s, CycloSum::from_int(7, 7));
        assert!((s.abs() - 7.0).abs() < 1e-9);
    }

    #[test]
    fn multiplicativity_of_chi() {
        let f = Field::prime(11).unwrap();
        for r in [0u32, 5, 3] {
            let chi = MultiplicativeCharacter::new(&f, r);
            for x in f.units() {
                for y in f.units() {
                    let lhs = chi.eval_complex(&f, f.mul(x, y));
                    let rhs = chi.eval_complex(&f, x) * chi.eval_complex(&f, y);
                    assert!((lhs - rhs).norm() < 1e-9);
                }
            }
        }
    }
}
