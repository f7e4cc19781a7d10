//! Commutative coefficient rings for matrix arithmetic.
//!
//! Two rings are used in practice: the exact Laurent ring `Z[q^±1, t^±1]`
//! (see [`crate::laurent`]) and prime residue fields `Z/p` used for modular
//! screening. Matrices are generic over this trait so both share one code
//! path, including fraction-free inversion.

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

/// A commutative ring with exact arithmetic, carried as a runtime object so
/// residue fields can hold their modulus.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Whether `a` has a multiplicative inverse in the ring.
    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Inverse of a unit; `None` when `a` is not a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Exact quotient `a / b`; `None` when `b` does not divide `a`.
    /// Required by fraction-free elimination.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Ring tag used in serialized matrix dumps ("laurent", "mod 7", ...).
    fn name(&self) -> String;

    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
}

/// The residue field `Z/p` for an odd prime `p`, elements canonical in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModRing {
    p: u64,
}

impl ModRing {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        // canonical elements are < p, so sums stay below 2^64
        assert!(p < 1 << 63, "modulus must fit in 63 bits");
        ModRing { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut b = base % self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, b, self.p);
            }
            b = mul_mod(b, b, self.p);
            exp >>= 1;
        }
        acc
    }

    /// `base^exp` for signed exponents; requires `base` invertible when `exp < 0`.
    pub fn pow_signed(&self, base: u64, exp: i64) -> Option<u64> {
        if exp >= 0 {
            Some(self.pow(base, exp as u64))
        } else {
            let inv = self.inv_elem(base)?;
            Some(self.pow(inv, exp.unsigned_abs()))
        }
    }

    pub fn inv_elem(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        // p is prime in all uses; Fermat inverse.
        Some(self.pow(a, self.p - 2))
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Ring for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn is_unit(&self, a: &u64) -> bool {
        !(*a).is_multiple_of(self.p)
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        self.inv_elem(*a)
    }

    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        self.inv_elem(*b).map(|bi| mul_mod(*a, bi, self.p))
    }

    fn name(&self) -> String {
        format!("mod {}", self.p)
    }

    fn elem_to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }

    fn elem_from_json(&self, v: &Value) -> Result<u64> {
        let raw = v
            .as_u64()
            .ok_or_else(|| Error::Parse(format!("expected residue, got {v}")))?;
        Ok(raw % self.p)
    }
}
