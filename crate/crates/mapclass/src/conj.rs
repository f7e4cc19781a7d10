//! The center-killing conjugation representation.
//!
//! From a faithful `d`-dimensional representation `ρ` this builds the
//! `d²`-dimensional representation `g ↦ (A ↦ ρ(g) A ρ(g)^-1)` on the matrix
//! space, whose kernel is exactly the set of elements with scalar image. With
//! row-major vectorization `vec(A)` the matrix of `A ↦ m A m^-1` is
//! `m ⊗ (m^-1)^T`, so `conj(g) vec(A) = vec(m A m^-1)` holds entry for entry
//! (the `vec_audit` test checks this identity directly).
//!
//! Elements are kept lazily as the base pair `(m, m^-1)`; the identity test
//! needs only a scalar check on `m`, and the `d²` matrix is materialized on
//! demand. Induced representations of the sphere groups depend on this: the
//! 600-dimensional representation of the six-punctured sphere is handled as
//! six 10×10 pairs.

use crate::braid::Representation;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::words::Word;

/// Matrix of `A ↦ m A m^-1` on `vec`-coordinates: `kron(m, transpose(m_inv))`.
/// The pair is checked to be mutually inverse.
pub fn conj_image<R: Ring>(m: &Matrix<R>, m_inv: &Matrix<R>) -> Result<Matrix<R>> {
    if !m.mul(m_inv)?.is_identity() {
        return Err(Error::NotInvertible(
            "conj_image requires a mutually inverse pair".into(),
        ));
    }
    m.kron(&m_inv.transpose())
}

/// A conjugation-representation element, stored as the base pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjPair<R: Ring> {
    fwd: Matrix<R>,
    inv: Matrix<R>,
}

impl<R: Ring> ConjPair<R> {
    pub fn identity(ring: R, base_dim: usize) -> Self {
        ConjPair {
            fwd: Matrix::identity(ring.clone(), base_dim),
            inv: Matrix::identity(ring, base_dim),
        }
    }

    /// Wraps a pair without re-verification; callers are expected to hold a
    /// pair produced by a representation.
    pub fn from_pair_unchecked(fwd: Matrix<R>, inv: Matrix<R>) -> Self {
        ConjPair { fwd, inv }
    }

    pub fn base_dim(&self) -> usize {
        self.fwd.dim()
    }

    pub fn fwd(&self) -> &Matrix<R> {
        &self.fwd
    }

    pub fn inv(&self) -> &Matrix<R> {
        &self.inv
    }

    /// `(m1, i1) · (m2, i2) = (m1 m2, i2 i1)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(ConjPair {
            fwd: self.fwd.mul(&other.fwd)?,
            inv: other.inv.mul(&self.inv)?,
        })
    }

    pub fn inverse(&self) -> Self {
        ConjPair {
            fwd: self.inv.clone(),
            inv: self.fwd.clone(),
        }
    }

    /// Kernel law: the conjugation image is the identity iff the base matrix
    /// is scalar.
    pub fn is_identity(&self) -> bool {
        self.fwd.is_scalar().is_some()
    }

    /// Whether two pairs represent the same conjugation map (base matrices
    /// agree up to a scalar).
    pub fn same_conj(&self, other: &Self) -> Result<bool> {
        Ok(self.fwd.mul(&other.inv)?.is_scalar().is_some())
    }

    /// The `d² × d²` matrix of the conjugation action.
    pub fn materialize(&self) -> Result<Matrix<R>> {
        conj_image(&self.fwd, &self.inv)
    }
}

/// The conjugation representation of a base representation; evaluation yields
/// lazy [`ConjPair`] elements of semantic dimension `dim(base)²`.
#[derive(Clone, Debug)]
pub struct ConjRep<R: Ring> {
    base: Representation<R>,
}

impl<R: Ring> ConjRep<R> {
    pub fn new(base: Representation<R>) -> Self {
        ConjRep { base }
    }

    pub fn base(&self) -> &Representation<R> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim() * self.base.dim()
    }

    pub fn identity(&self) -> ConjPair<R> {
        ConjPair::identity(self.base.ring().clone(), self.base.dim())
    }

    pub fn generator(&self, index: usize, inverse: bool) -> ConjPair<R> {
        ConjPair {
            fwd: self.base.generator_image(index, inverse).clone(),
            inv: self.base.generator_image(index, !inverse).clone(),
        }
    }

    pub fn eval(&self, w: &Word) -> Result<ConjPair<R>> {
        let (fwd, inv) = self.base.eval_pair(w)?;
        Ok(ConjPair { fwd, inv })
    }

    /// Materialized image of a word, `dim()` square.
    pub fn image(&self, w: &Word) -> Result<Matrix<R>> {
        self.eval(w)?.materialize()
    }
}
