//! Exact arithmetic in the two-variable Laurent polynomial ring `Z[q^±1, t^±1]`.
//!
//! A polynomial is a finite map from exponent pairs `(e_q, e_t)` to nonzero
//! integer coefficients. Zero is the empty map, every operation
//! re-canonicalizes, and the term order is lexicographic on `(e_q, e_t)` so
//! serialization is deterministic. Coefficients are arbitrary-precision:
//! entries of word images grow with word length and must never overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{ModRing, Ring};

type Exponents = (i64, i64);

/// An element of `Z[q^±1, t^±1]` in canonical form (no zero coefficients).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 0, 1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, 0, 1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        LaurentPoly::monomial(0, 1, 1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(0, 0, c)
    }

    /// `c * q^eq * t^et`; canonical even when `c == 0`.
    pub fn monomial(eq: i64, et: i64, c: i64) -> Self {
        Self::monomial_big(eq, et, BigInt::from(c))
    }

    pub fn monomial_big(eq: i64, et: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, et), c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.term_count() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic `(e_q, e_t)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, eq: i64, et: i64) -> BigInt {
        self.terms.get(&(eq, et)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True iff the value is a single term with coefficient ±1, which are
    /// exactly the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.term_count() == 1 && self.terms.values().next().unwrap().magnitude().is_one()
    }

    /// Inverse of a unit monomial.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if !self.is_unit() {
            return None;
        }
        let ((eq, et), c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::monomial_big(-eq, -et, c.clone()))
    }

    fn insert_term(terms: &mut BTreeMap<Exponents, BigInt>, key: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Ring homomorphism `Z[q^±1, t^±1] -> Z/p` sending `q -> q0`, `t -> t0`.
    /// `q0` and `t0` must be invertible mod `p` (negative exponents).
    pub fn eval_mod(&self, q0: u64, t0: u64, ring: &ModRing) -> Result<u64> {
        let p = ring.modulus();
        if q0.is_multiple_of(p) || t0.is_multiple_of(p) {
            return Err(Error::Parse(format!(
                "evaluation point must be invertible mod {p}: q0={q0}, t0={t0}"
            )));
        }
        let mut acc = 0u64;
        for (&(eq, et), c) in &self.terms {
            let qe = ring.pow_signed(q0, eq).expect("q0 invertible");
            let te = ring.pow_signed(t0, et).expect("t0 invertible");
            let cm = big_mod(c, p);
            acc = ring.add(&acc, &ring.mul(&cm, &ring.mul(&qe, &te)));
        }
        Ok(acc)
    }

    /// Exact quotient `self / div`, or `None` when `div` does not divide
    /// `self`. Greedy cancellation of lexicographic leading terms; when the
    /// quotient exists each step strips one of its terms, so the step count
    /// equals the quotient size and the cap below is never reached.
    pub fn exact_div(&self, div: &LaurentPoly) -> Option<LaurentPoly> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if div.term_count() == 1 {
            let ((deq, det), dc) = div.terms.iter().next().unwrap();
            let mut out = BTreeMap::new();
            for (&(eq, et), c) in &self.terms {
                let (quot, rem) = num_integer::div_rem(c.clone(), dc.clone());
                if !rem.is_zero() {
                    return None;
                }
                out.insert((eq - deq, et - det), quot);
            }
            return Some(LaurentPoly { terms: out });
        }

        let (&(deq, det), dc) = div.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        let cap = self.term_count() * (div.term_count() + 1) + 64;
        for _ in 0..cap {
            if rem.is_zero() {
                return Some(LaurentPoly { terms: quot });
            }
            let (&(req, ret), rc) = rem.terms.iter().next_back().unwrap();
            let (c, r) = num_integer::div_rem(rc.clone(), dc.clone());
            if !r.is_zero() {
                return None;
            }
            let key = (req - deq, ret - det);
            Self::insert_term(&mut quot, key, c.clone());
            // rem -= c * q^key * div
            for (&(eq, et), dcoef) in &div.terms {
                Self::insert_term(&mut rem.terms, (eq + key.0, et + key.1), -(&c * dcoef));
            }
        }
        None
    }

    /// Canonical serialized form: `[e_q, e_t, coeff]` triples sorted by key,
    /// with the coefficient as a decimal string.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(eq, et), c)| {
                    Value::Array(vec![Value::from(eq), Value::from(et), Value::from(c.to_string())])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse(format!("expected term list, got {v}")))?;
        let mut terms = BTreeMap::new();
        for triple in arr {
            let t = triple
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Parse(format!("expected [e_q, e_t, coeff], got {triple}")))?;
            let eq = t[0]
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("bad exponent {}", t[0])))?;
            let et = t[1]
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("bad exponent {}", t[1])))?;
            let c: BigInt = match &t[2] {
                Value::String(s) => s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?,
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {n}")))?,
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            Self::insert_term(&mut terms, (eq, et), c);
        }
        Ok(LaurentPoly { terms })
    }
}

fn big_mod(c: &BigInt, p: u64) -> u64 {
    let m = c % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    let digits = m.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&k, c) in &rhs.terms {
            LaurentPoly::insert_term(&mut terms, k, c.clone());
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&k, c) in &rhs.terms {
            LaurentPoly::insert_term(&mut terms, k, -c.clone());
        }
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        // iterate the smaller operand outermost; products of long words
        // multiply a large accumulated entry by a small generator entry
        let (small, large) = if self.term_count() <= rhs.term_count() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (&(aq, at), ac) in &small.terms {
            for (&(bq, bt), bc) in &large.terms {
                LaurentPoly::insert_term(&mut terms, (aq + bq, at + bt), ac * bc);
            }
        }
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(eq, et), c) in &self.terms {
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed = false;
            if !mag.is_one() || (eq == 0 && et == 0) {
                write!(f, "{mag}")?;
                printed = true;
            }
            for (sym, e) in [("q", eq), ("t", et)] {
                if e != 0 {
                    if printed {
                        write!(f, "*")?;
                    }
                    if e == 1 {
                        write!(f, "{sym}")?;
                    } else {
                        write!(f, "{sym}^{e}")?;
                    }
                    printed = true;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        LaurentPoly::from_json(&v).map_err(D::Error::custom)
    }
}

/// The ring object for `Z[q^±1, t^±1]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct LaurentRing;

impl Ring for LaurentRing {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }

    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }

    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &LaurentPoly) -> bool {
        a.is_one()
    }

    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        -a
    }

    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a + b
    }

    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a - b
    }

    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a * b
    }

    fn is_unit(&self, a: &LaurentPoly) -> bool {
        a.is_unit()
    }

    fn inv(&self, a: &LaurentPoly) -> Option<LaurentPoly> {
        a.unit_inverse()
    }

    fn exact_div(&self, a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
        a.exact_div(b)
    }

    fn name(&self) -> String {
        "laurent".to_string()
    }

    fn elem_to_json(&self, a: &LaurentPoly) -> Value {
        a.to_json()
    }

    fn elem_from_json(&self, v: &Value) -> Result<LaurentPoly> {
        LaurentPoly::from_json(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    fn t() -> LaurentPoly {
        LaurentPoly::t()
    }

    #[test]
    fn add_examples() {
        // (q) + (-q) = 0
        assert!((&q() + &-&q()).is_zero());
        // (q + t) + t = q + 2t
        let s = &(&q() + &t()) + &t();
        assert_eq!(s, &q() + &LaurentPoly::monomial(0, 1, 2));
        // q^-1 t + 0 = q^-1 t
        let m = LaurentPoly::monomial(-1, 1, 1);
        assert_eq!(&m + &LaurentPoly::zero(), m);
    }

    #[test]
    fn mul_examples() {
        // (q - 1)(q + 1) = q^2 - 1
        let a = &q() - &LaurentPoly::one();
        let b = &q() + &LaurentPoly::one();
        assert_eq!(&a * &b, &LaurentPoly::monomial(2, 0, 1) - &LaurentPoly::one());
        // (2 q t^-1)(3 q^-1 t) = 6
        let a = LaurentPoly::monomial(1, -1, 2);
        let b = LaurentPoly::monomial(-1, 1, 3);
        assert_eq!(&a * &b, LaurentPoly::constant(6));
        // p * 1 = p
        let p = &(&q() + &t()) - &LaurentPoly::constant(4);
        assert_eq!(&p * &LaurentPoly::one(), p);
    }

    #[test]
    fn unit_examples() {
        assert!(LaurentPoly::monomial(3, -2, -1).is_unit()); // -q^3 t^-2
        assert!(!(&q() + &LaurentPoly::one()).is_unit()); // q + 1
        assert!(!LaurentPoly::monomial(1, 0, 2).is_unit()); // 2q
        assert_eq!(
            LaurentPoly::monomial(3, -2, -1).unit_inverse(),
            Some(LaurentPoly::monomial(-3, 2, -1))
        );
    }

    #[test]
    fn eval_mod_examples() {
        let r7 = ModRing::new(7);
        // q^2 - 1 at q0=2 -> 3
        let p = &LaurentPoly::monomial(2, 0, 1) - &LaurentPoly::one();
        assert_eq!(p.eval_mod(2, 1, &r7).unwrap(), 3);
        // 0 at any point -> 0
        assert_eq!(LaurentPoly::zero().eval_mod(3, 5, &r7).unwrap(), 0);
        // qt at q0=3, t0=5 -> 1
        let p = &q() * &t();
        assert_eq!(p.eval_mod(3, 5, &r7).unwrap(), 1);
        // negative exponents need invertible points
        assert!(LaurentPoly::monomial(-1, 0, 1).eval_mod(7, 1, &r7).is_err());
        assert_eq!(LaurentPoly::monomial(-1, 0, 1).eval_mod(2, 1, &r7).unwrap(), 4);
    }

    #[test]
    fn exact_div_cases() {
        let a = &(&q() - &LaurentPoly::one()) * &(&q() + &LaurentPoly::one());
        assert_eq!(
            a.exact_div(&(&q() + &LaurentPoly::one())),
            Some(&q() - &LaurentPoly::one())
        );
        // (q^2 - 1) / (q - 2): not divisible
        assert_eq!(a.exact_div(&(&q() - &LaurentPoly::constant(2))), None);
        // coefficient divisibility: 2q / 2 = q, 3q / 2 fails
        assert_eq!(
            LaurentPoly::monomial(1, 0, 2).exact_div(&LaurentPoly::constant(2)),
            Some(q())
        );
        assert_eq!(LaurentPoly::monomial(1, 0, 3).exact_div(&LaurentPoly::constant(2)), None);
        // monomial divisor with negative exponents
        assert_eq!(
            q().exact_div(&LaurentPoly::monomial(-1, 1, 1)),
            Some(LaurentPoly::monomial(2, -1, 1))
        );
        assert_eq!(q().exact_div(&LaurentPoly::zero()), None);
    }

    #[test]
    fn display_form() {
        let p = &(&LaurentPoly::monomial(2, -1, -3) + &q()) + &LaurentPoly::one();
        assert_eq!(p.to_string(), "1 + q - 3*q^2*t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let p = &(&q() - &t()) * &(&q() + &LaurentPoly::monomial(-2, 3, 5));
        let js = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), js);
    }
}
