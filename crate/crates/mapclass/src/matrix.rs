//! Square matrices over a commutative [`Ring`].
//!
//! These are the carriers of every representation in the crate. Inversion is
//! fraction-free (Bareiss–Jordan): divisions happen only by earlier pivots and
//! are exact in the ring, so no fraction field is needed. The final quotient
//! divides by the determinant, which must be a unit of the ring (over the
//! Laurent ring: a monomial ±q^a t^b).

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, LaurentRing};
use crate::ring::{ModRing, Ring};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R: Ring> {
    ring: R,
    dim: usize,
    entries: Vec<R::Elem>, // row-major
}

impl<R: Ring> Matrix<R> {
    pub fn zero(ring: R, dim: usize) -> Self {
        assert!(dim > 0, "matrices are square of positive dimension");
        let entries = vec![ring.zero(); dim * dim];
        Matrix { ring, dim, entries }
    }

    pub fn identity(ring: R, dim: usize) -> Self {
        let mut m = Matrix::zero(ring, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = m.ring.one();
        }
        m
    }

    pub fn scalar(ring: R, dim: usize, c: R::Elem) -> Self {
        let mut m = Matrix::zero(ring, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn from_fn(ring: R, dim: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Self {
        let mut m = Matrix::zero(ring, dim);
        for r in 0..dim {
            for c in 0..dim {
                m.entries[r * dim + c] = f(r, c);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn get(&self, r: usize, c: usize) -> &R::Elem {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R::Elem) {
        self.entries[r * self.dim + c] = v;
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.name(),
                right: other.ring.name(),
            });
        }
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    /// Ring matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let d = self.dim;
        let rg = &self.ring;
        let mut out = Matrix::zero(self.ring.clone(), d);
        for r in 0..d {
            for c in 0..d {
                let mut acc = rg.zero();
                for k in 0..d {
                    let a = self.get(r, k);
                    if rg.is_zero(a) {
                        continue;
                    }
                    let b = other.get(k, c);
                    if rg.is_zero(b) {
                        continue;
                    }
                    acc = rg.add(&acc, &rg.mul(a, b));
                }
                out.entries[r * d + c] = acc;
            }
        }
        Ok(out)
    }

    /// Kronecker product; block `(i, j)` of the result is `self[i,j] * other`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.name(),
                right: other.ring.name(),
            });
        }
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        let rg = self.ring.clone();
        let mut out = Matrix::zero(rg, d);
        for i in 0..da {
            for j in 0..da {
                let a = self.get(i, j);
                if self.ring.is_zero(a) {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        let b = other.get(k, l);
                        if self.ring.is_zero(b) {
                            continue;
                        }
                        out.entries[(i * db + k) * d + (j * db + l)] = self.ring.mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        Matrix::from_fn(self.ring.clone(), d, |r, c| self.get(c, r).clone())
    }

    /// `Some(c)` iff the matrix equals `c * I`.
    pub fn is_scalar(&self) -> Option<R::Elem> {
        let c = self.get(0, 0).clone();
        for r in 0..self.dim {
            for col in 0..self.dim {
                if r == col {
                    if *self.get(r, col) != c {
                        return None;
                    }
                } else if !self.ring.is_zero(self.get(r, col)) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_identity(&self) -> bool {
        match self.is_scalar() {
            Some(c) => self.ring.is_one(&c),
            None => false,
        }
    }

    /// Determinant by fraction-free triangularization (Bareiss). Exact over
    /// any ring whose `exact_div` honors divisibility of minors.
    pub fn det(&self) -> R::Elem {
        let d = self.dim;
        let rg = &self.ring;
        if d == 1 {
            return self.get(0, 0).clone();
        }
        let mut a: Vec<Vec<R::Elem>> = (0..d)
            .map(|r| self.entries[r * d..(r + 1) * d].to_vec())
            .collect();
        let mut negate = false;
        let mut prev = rg.one();
        for k in 0..d - 1 {
            let pivot_row = match (k..d).find(|&r| !rg.is_zero(&a[r][k])) {
                Some(r) => r,
                None => return rg.zero(),
            };
            if pivot_row != k {
                a.swap(k, pivot_row);
                negate = !negate;
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = rg.sub(&rg.mul(&a[k][k], &a[i][j]), &rg.mul(&a[i][k], &a[k][j]));
                    a[i][j] = rg
                        .exact_div(&num, &prev)
                        .expect("fraction-free elimination divides exactly");
                }
                a[i][k] = rg.zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[d - 1][d - 1].clone();
        if negate {
            rg.neg(&det)
        } else {
            det
        }
    }

    /// Inverse over the ring, defined when the determinant is a unit.
    /// Fraction-free Gauss–Jordan on `[A | I]` ends with `[det*I | det*A^-1]`;
    /// the result is verified by multiplication on both sides before return.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.dim;
        let rg = &self.ring;
        let mut a: Vec<Vec<R::Elem>> = (0..d)
            .map(|r| {
                let mut row = self.entries[r * d..(r + 1) * d].to_vec();
                row.extend((0..d).map(|c| if c == r { rg.one() } else { rg.zero() }));
                row
            })
            .collect();
        let mut prev = rg.one();
        for k in 0..d {
            let pivot_row = (k..d)
                .find(|&r| !rg.is_zero(&a[r][k]))
                .ok_or_else(|| Error::NotInvertible("zero pivot column".into()))?;
            a.swap(k, pivot_row);
            let pivot_row_vals = a[k].clone();
            let pivot = pivot_row_vals[k].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let lead = row[k].clone();
                for (aij, akj) in row.iter_mut().zip(pivot_row_vals.iter()) {
                    let num = rg.sub(&rg.mul(&pivot, aij), &rg.mul(&lead, akj));
                    *aij = rg.exact_div(&num, &prev).ok_or_else(|| {
                        Error::Inconsistency("fraction-free elimination division failed".into())
                    })?;
                }
            }
            prev = pivot;
        }
        let det = a[0][0].clone();
        let det_inv = rg.inv(&det).ok_or_else(|| {
            Error::NotInvertible(format!("determinant is not a unit of {}", rg.name()))
        })?;
        let inv = Matrix::from_fn(self.ring.clone(), d, |r, c| rg.mul(&a[r][d + c], &det_inv));
        if !self.mul(&inv)?.is_identity() || !inv.mul(self)?.is_identity() {
            return Err(Error::Inconsistency("inverse verification failed".into()));
        }
        Ok(inv)
    }

    /// Sparse dump: zero entries omitted, rows then columns ascending.
    pub fn to_json(&self) -> Value {
        let mut entries = Vec::new();
        for r in 0..self.dim {
            for c in 0..self.dim {
                let e = self.get(r, c);
                if !self.ring.is_zero(e) {
                    entries.push(json!({"r": r, "c": c, "poly": self.ring.elem_to_json(e)}));
                }
            }
        }
        json!({"dim": self.dim, "ring": self.ring.name(), "entries": entries})
    }

    pub fn from_json(ring: R, v: &Value) -> Result<Self> {
        let dim = v["dim"]
            .as_u64()
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::Parse("missing or invalid \"dim\"".into()))? as usize;
        let tag = v["ring"]
            .as_str()
            .ok_or_else(|| Error::Parse("missing \"ring\" tag".into()))?;
        if tag != ring.name() {
            return Err(Error::RingMismatch {
                left: ring.name(),
                right: tag.to_string(),
            });
        }
        let mut m = Matrix::zero(ring, dim);
        let entries = v["entries"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing \"entries\"".into()))?;
        for e in entries {
            let r = e["r"].as_u64().ok_or_else(|| Error::Parse("bad row".into()))? as usize;
            let c = e["c"].as_u64().ok_or_else(|| Error::Parse("bad col".into()))? as usize;
            if r >= dim || c >= dim {
                return Err(Error::Parse(format!("entry ({r},{c}) outside dim {dim}")));
            }
            m.set(r, c, m.ring.elem_from_json(&e["poly"])?);
        }
        Ok(m)
    }
}

impl Matrix<LaurentRing> {
    /// Entry-wise specialization `q -> q0, t -> t0` into `Z/p`.
    pub fn specialize(&self, ring: &ModRing, q0: u64, t0: u64) -> Result<Matrix<ModRing>> {
        let d = self.dim;
        let mut out = Matrix::zero(*ring, d);
        for r in 0..d {
            for c in 0..d {
                out.set(r, c, self.get(r, c).eval_mod(q0, t0, ring)?);
            }
        }
        Ok(out)
    }
}

/// Diagonal matrix helper used throughout the tests.
pub fn diag(ring: LaurentRing, entries: &[LaurentPoly]) -> Matrix<LaurentRing> {
    let mut m = Matrix::zero(ring, entries.len());
    for (i, e) in entries.iter().enumerate() {
        m.set(i, i, e.clone());
    }
    m
}
