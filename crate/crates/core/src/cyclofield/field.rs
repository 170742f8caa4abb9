//! Table-driven finite fields of odd characteristic.
//!
//! An element of `F_{p^e}` is a `u32` in `0..q` whose base-`p` digits are
//! the coefficients of its representative in the power basis of the fixed
//! monic irreducible modulus. Multiplication runs through exp/dlog tables
//! with respect to a fixed primitive root, addition is digit-wise.

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::{Error, Result};

/// Serializable description of a field; enough to rebuild it exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic modulus, coefficients ascending, length `e + 1`.
    pub modulus: Vec<u32>,
    /// Seed that drove the modulus search.
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    seed: u64,
    /// `exp[i] = g^i` for `0 <= i < q-1`.
    exp: Vec<u32>,
    /// `dlog[x]` for `x != 0`; `dlog[0]` is a sentinel and never read.
    dlog: Vec<u32>,
    /// Absolute trace to `F_p`.
    trace: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    generator: u32,
}

impl Field {
    /// The prime field `F_p`, `p` an odd prime.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, 0)
    }

    /// `F_{p^e}` with the modulus found by a deterministic seeded search.
    pub fn new(p: u32, e: u32, seed: u64) -> Result<Self> {
        check_char(p)?;
        if e < 1 {
            return Err(Error::InvalidDatum("extension degree must be >= 1".into()));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= 10_000).ok_or_else(|| {
            Error::InvalidDatum(format!("q = {}^{} exceeds the supported size 10^4", p, e))
        })? as u32;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            search_modulus(p, e, seed)?
        };
        Self::with_modulus(p, e, q, modulus, seed)
    }

    /// Rebuild a field from its serialized description.
    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        check_char(spec.p)?;
        let q = (spec.p as u64).pow(spec.e);
        if q > 10_000 {
            return Err(Error::InvalidDatum("q exceeds the supported size 10^4".into()));
        }
        Self::with_modulus(spec.p, spec.e, q as u32, spec.modulus.clone(), spec.seed)
    }

    fn with_modulus(p: u32, e: u32, q: u32, modulus: Vec<u32>, seed: u64) -> Result<Self> {
        if modulus.len() != e as usize + 1 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidDatum("modulus must be monic of degree e".into()));
        }
        let mut field = Field {
            p,
            e,
            q,
            modulus,
            seed,
            exp: Vec::new(),
            dlog: Vec::new(),
            trace: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
            generator: 0,
        };
        let neg: Vec<u32> = (0..q).map(|x| field.neg_slow(x)).collect();
        field.neg = neg;
        field.build_log_tables()?;
        let mut inv = vec![0u32; q as usize];
        for x in 1..q {
            let l = field.dlog[x as usize];
            inv[x as usize] = field.exp[if l == 0 { 0 } else { (q - 1 - l) as usize }];
        }
        field.inv = inv;
        let trace: Vec<u32> = (0..q).map(|x| field.trace_slow(x)).collect();
        field.trace = trace;
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            e: self.e,
            modulus: self.modulus.clone(),
            seed: self.seed,
        }
    }

    /// Nonzero elements in a fixed order.
    pub fn units(&self) -> std::ops::Range<u32> {
        1..self.q
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        if self.e == 1 {
            let s = x + y;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            let (mut out, mut scale) = (0u32, 1u32);
            let (mut a, mut b) = (x, y);
            for _ in 0..self.e {
                let d = a % self.p + b % self.p;
                let d = if d >= self.p { d - self.p } else { d };
                out += d * scale;
                scale *= self.p;
                a /= self.p;
                b /= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        self.neg[x as usize]
    }

    #[inline]
    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg[y as usize])
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let l = self.dlog[x as usize] + self.dlog[y as usize];
        let l = if l >= self.q - 1 { l - (self.q - 1) } else { l };
        self.exp[l as usize]
    }

    /// Multiplicative inverse; zero is rejected.
    pub fn inv(&self, x: u32) -> Result<u32> {
        if x == 0 {
            return Err(Error::DegenerateInput("inversion of zero".into()));
        }
        Ok(self.inv[x as usize])
    }

    pub fn div(&self, x: u32, y: u32) -> Result<u32> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: u32, mut n: u64) -> u32 {
        if n == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        let mut base = x;
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Absolute trace `Tr_{F_q/F_p}(x)` as an integer in `0..p`.
    #[inline]
    pub fn trace(&self, x: u32) -> u32 {
        self.trace[x as usize]
    }

    /// Discrete log with respect to the fixed primitive root.
    pub fn dlog(&self, x: u32) -> Result<u32> {
        if x == 0 {
            return Err(Error::DegenerateInput("dlog of zero".into()));
        }
        Ok(self.dlog[x as usize])
    }

    /// Reduce an integer (e.g. a small literal) into the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        let p = self.p as i64;
        let r = ((n % p) + p) % p;
        r as u32
    }

    /// `1/2`, which exists since `p` is odd.
    pub fn half(&self) -> u32 {
        self.inv(2).unwrap()
    }

    fn neg_slow(&self, x: u32) -> u32 {
        let (mut out, mut scale, mut a) = (0u32, 1u32, x);
        for _ in 0..self.e {
            let d = a % self.p;
            out += if d == 0 { 0 } else { self.p - d } * scale;
            scale *= self.p;
            a /= self.p;
        }
        out
    }

    /// Polynomial multiply mod the modulus, used only while bootstrapping
    /// the log tables.
    fn mul_slow(&self, x: u32, y: u32) -> u32 {
        let e = self.e as usize;
        let mut prod = vec![0u32; 2 * e];
        let xd = self.digits(x);
        let yd = self.digits(y);
        for (i, &a) in xd.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in yd.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ((a as u64 * b as u64) % self.p as u64) as u32) % self.p;
            }
        }
        // reduce by the monic modulus
        for i in (e..2 * e).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(e) {
                let idx = i - e + j;
                let sub = (c as u64 * m as u64) % self.p as u64;
                prod[idx] = ((prod[idx] as u64 + self.p as u64 - sub) % self.p as u64) as u32;
            }
        }
        self.undigits(&prod[..e])
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.e as usize);
        for _ in 0..self.e {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    fn undigits(&self, digits: &[u32]) -> u32 {
        let mut out = 0u32;
        for &d in digits.iter().rev() {
            out = out * self.p + d;
        }
        out
    }

    fn pow_slow(&self, x: u32, mut n: u64) -> u32 {
        let mut base = x;
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            n >>= 1;
        }
        acc
    }

    fn build_log_tables(&mut self) -> Result<()> {
        let q = self.q;
        let order = (q - 1) as u64;
        let prime_factors = factorize(order);
        let mut generator = 0;
        for cand in 2..q {
            let ok = prime_factors
                .iter()
                .all(|&r| self.pow_slow(cand, order / r) != 1);
            if ok {
                generator = cand;
                break;
            }
        }
        if generator == 0 {
            return Err(Error::Internal("no primitive root found".into()));
        }
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut dlog = vec![0u32; q as usize];
        let mut cur = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur;
            dlog[cur as usize] = i as u32;
            cur = self.mul_slow(cur, generator);
        }
        if cur != 1 {
            return Err(Error::Internal("generator order mismatch".into()));
        }
        self.exp = exp;
        self.dlog = dlog;
        self.generator = generator;
        Ok(())
    }

    fn trace_slow(&self, x: u32) -> u32 {
        // Tr(x) = sum of Frobenius conjugates; the result is a constant digit.
        let mut acc = 0u32;
        let mut conj = x;
        for _ in 0..self.e {
            acc = self.add(acc, conj);
            conj = self.pow(conj, self.p as u64);
        }
        debug_assert!(acc < self.p, "trace landed outside the prime subfield");
        acc
    }
}

fn check_char(p: u32) -> Result<()> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::InvalidDatum(format!(
            "characteristic must be an odd prime, got {}",
            p
        )));
    }
    Ok(())
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Deterministic seeded search for a monic irreducible of degree `e` over
/// `F_p`: candidates are enumerated from an offset derived from the seed,
/// wrapping around, so the result is a pure function of `(p, e, seed)`.
fn search_modulus(p: u32, e: u32, seed: u64) -> Result<Vec<u32>> {
    let fp = Field::prime(p)?;
    let count = (p as u64).pow(e); // lower coefficient patterns
    let start = seed % count;
    for step in 0..count {
        let code = (start + step) % count;
        let mut coeffs = Vec::with_capacity(e as usize + 1);
        let mut c = code;
        for _ in 0..e {
            coeffs.push((c % p as u64) as u32);
            c /= p as u64;
        }
        coeffs.push(1);
        let cand = Poly::new(coeffs);
        if cand.degree() != Some(e as usize) {
            continue;
        }
        if is_irreducible(&cand, &fp)? {
            return Ok(cand.coeffs().to_vec());
        }
    }
    Err(Error::Internal(format!(
        "no irreducible of degree {} over F_{}",
        e, p
    )))
}

fn is_irreducible(f: &Poly, fp: &Field) -> Result<bool> {
    let e = f.degree().unwrap() as u32;
    let p = fp.p() as u64;
    // x^{p^e} == x mod f
    let mut xq = Poly::x();
    for _ in 0..e {
        xq = xq.powmod(p, f, fp)?;
    }
    if xq.sub(&Poly::x(), fp).degree().is_some() {
        return Ok(false);
    }
    // gcd(x^{p^{e/r}} - x, f) = 1 for every prime r | e
    for r in factorize(e as u64) {
        let mut xk = Poly::x();
        for _ in 0..(e as u64 / r) {
            xk = xk.powmod(p, f, fp)?;
        }
        let g = xk.sub(&Poly::x(), fp).gcd(f, fp)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A field extension `F_{q^k} / F_q` together with the embedding of the
/// base field.
#[derive(Debug, Clone)]
pub struct ExtendedField {
    pub field: Field,
    pub degree: u32,
    /// `embed[x]` is the image of the base element `x`.
    pub embed: Vec<u32>,
}

impl ExtendedField {
    /// Build `F_{q^k}` containing `base`, with a deterministic modulus
    /// search seeded by `seed`.
    pub fn new(base: &Field, k: u32, seed: u64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidDatum("extension degree must be >= 1".into()));
        }
        if k == 1 {
            let embed = (0..base.q()).collect();
            return Ok(ExtendedField {
                field: base.clone(),
                degree: 1,
                embed,
            });
        }
        let big = Field::new(base.p(), base.e() * k, seed)?;
        let embed = if base.e() == 1 {
            // prime subfield elements are encoded identically
            (0..base.q()).collect()
        } else {
            let root = find_root_of_modulus(base, &big)?;
            (0..base.q())
                .map(|x| {
                    let digits = basep_digits(x, base.p(), base.e());
                    // Horner in the root, digits are prime-field constants
                    let mut acc = 0u32;
                    for &d in digits.iter().rev() {
                        acc = big.add(big.mul(acc, root), d);
                    }
                    acc
                })
                .collect()
        };
        Ok(ExtendedField {
            field: big,
            degree: k,
            embed,
        })
    }

    /// Relative trace `Tr_{F_{q^k}/F_q}` landing back in the base field.
    pub fn relative_trace(&self, base: &Field, x: u32) -> Result<u32> {
        let q = base.q() as u64;
        let mut acc = 0u32;
        let mut conj = x;
        for _ in 0..self.degree {
            acc = self.field.add(acc, conj);
            conj = self.field.pow(conj, q);
        }
        self.embed
            .iter()
            .position(|&y| y == acc)
            .map(|i| i as u32)
            .ok_or_else(|| Error::Internal("relative trace left the base field".into()))
    }
}

fn basep_digits(mut x: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(x % p);
        x /= p;
    }
    out
}

fn find_root_of_modulus(base: &Field, big: &Field) -> Result<u32> {
    let coeffs = base.modulus();
    for x in 0..big.q() {
        let mut acc = 0u32;
        for &c in coeffs.iter().rev() {
            acc = big.add(big.mul(acc, x), c);
        }
        if acc == 0 {
            return Ok(x);
        }
    }
    Err(Error::Internal("base modulus has no root in the extension".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.inv(2).unwrap(), 3);
        assert!(f.inv(0).is_err());
        assert_eq!(f.pow(2, 4), 1);
    }

    #[test]
    fn f9_modulus_relation() {
        // F_9 = F_3[x]/(x^2+1): seed 0 search order starts at x^2 and the
        // first irreducible it meets is x^2 + 1 (code 1).
        let f = Field::new(3, 2, 0).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        // the class of x is the element encoded 3; x * x = -1 = 2
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn dlog_exp_inverse() {
        for f in [Field::prime(11).unwrap(), Field::new(3, 2, 0).unwrap()] {
            for x in 1..f.q() {
                let l = f.dlog(x).unwrap();
                assert_eq!(f.pow(f.generator(), l as u64), x);
            }
        }
    }

    #[test]
    fn trace_linear_and_surjective() {
        for f in [
            Field::new(3, 4, 0).unwrap(),
            Field::new(11, 2, 0).unwrap(),
            Field::new(5, 2, 0).unwrap(),
        ] {
            let mut hit = vec![false; f.p() as usize];
            for x in 0..f.q() {
                hit[f.trace(x) as usize] = true;
                for y in 0..f.q() {
                    assert_eq!(
                        f.trace(f.add(x, y)),
                        (f.trace(x) + f.trace(y)) % f.p(),
                        "trace not additive at ({}, {})",
                        x,
                        y
                    );
                }
            }
            assert!(hit.iter().all(|&b| b), "trace not surjective");
        }
    }

    #[test]
    fn extension_cardinalities() {
        let f3 = Field::prime(3).unwrap();
        let e = ExtendedField::new(&f3, 2, 0).unwrap();
        assert_eq!(e.field.q(), 9);
        let id = ExtendedField::new(&Field::prime(5).unwrap(), 1, 0).unwrap();
        assert_eq!(id.field.q(), 5);
        assert_eq!(id.embed, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn embedding_is_ring_hom() {
        let base = Field::new(3, 2, 0).unwrap();
        let ext = ExtendedField::new(&base, 2, 0).unwrap();
        assert_eq!(ext.field.q(), 81);
        for x in 0..base.q() {
            for y in 0..base.q() {
                assert_eq!(
                    ext.embed[base.add(x, y) as usize],
                    ext.field.add(ext.embed[x as usize], ext.embed[y as usize])
                );
                assert_eq!(
                    ext.embed[base.mul(x, y) as usize],
                    ext.field.mul(ext.embed[x as usize], ext.embed[y as usize])
                );
            }
        }
    }

    #[test]
    fn trace_transitivity_81_over_3() {
        // Tr_{81/3} = Tr_{9/3} . Tr_{81/9}, checked exhaustively.
        let f3 = Field::prime(3).unwrap();
        let f9 = Field::new(3, 2, 0).unwrap();
        let up = ExtendedField::new(&f9, 2, 0).unwrap();
        let f81 = &up.field;
        assert_eq!(f81.q(), 81);
        for x in 0..f81.q() {
            let rel = up.relative_trace(&f9, x).unwrap();
            let composed = f9.trace(rel);
            assert_eq!(f81.trace(x), composed, "transitivity failed at {}", x);
        }
        let _ = f3;
    }
}
