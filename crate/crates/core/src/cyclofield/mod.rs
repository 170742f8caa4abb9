//! Finite field arithmetic, characters, and exact cyclotomic sums.
//!
//! Fields are table driven and intended for desk-scale work (`q <= 10^4`,
//! odd characteristic). Elements are encoded as integers `0..q-1` whose
//! base-`p` digits are the coefficients in the power basis of the fixed
//! modulus.

mod chars;
mod cyclo;
mod field;
mod poly;

pub use chars::{
    char_sum_accumulate_complex, char_sum_accumulate_exact, AdditiveCharacter, ChiBackend,
    MultiplicativeCharacter, SignCharacter,
};
pub use cyclo::CycloSum;
pub use field::{ExtendedField, Field, FieldSpec};
pub use poly::Poly;
