//! The braid group `B_n`: presentation relations, the central full twist, and
//! the Lawrence–Krammer representation with exact generator images.
//!
//! The representation acts on the free `Z[q^±1, t^±1]`-module with basis
//! `v_{i,j}`, `1 <= i < j <= n`, ordered lexicographically. The generator
//! action on basis vectors is
//!
//! ```text
//! σ_k v_{i,j} = v_{i,j}                                      k ∉ {i-1, i, j-1, j}
//!             = q v_{k,j} + (q²-q) v_{k,i} + (1-q) v_{i,j}   k = i-1
//!             = v_{k+1,j}                                    k = i ≠ j-1
//!             = q v_{i,k} + (1-q) v_{i,j} - (q²-q) t v_{k,j} k = j-1 ≠ i
//!             = v_{i,j+1}                                    k = j
//!             = -t q² v_{i,j}                                k = i = j-1
//! ```
//!
//! Transcription is not trusted: construction verifies every braid relation
//! exactly and checks each generator pair multiplies to the identity, and
//! fails loudly otherwise.

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, LaurentRing};
use crate::matrix::Matrix;
use crate::ring::{ModRing, Ring};
use crate::words::{Context, Word};

/// Defining relation words of `B_n`, each equal to the identity: commutations
/// `σ_i σ_j σ_i^-1 σ_j^-1` for `|i-j| >= 2` and braid relations
/// `σ_i σ_{i+1} σ_i σ_{i+1}^-1 σ_i^-1 σ_{i+1}^-1`.
pub fn braid_relation_words(n: usize) -> Vec<Word> {
    assert!(n >= 2);
    let ctx = Context::Braid { strings: n };
    let mut words = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            let (i, j) = (i as i64, j as i64);
            words.push(Word::from_signed(ctx, &[i, j, -i, -j]).unwrap());
        }
    }
    for i in 1..n - 1 {
        let (a, b) = (i as i64, i as i64 + 1);
        words.push(Word::from_signed(ctx, &[a, b, a, -b, -a, -b]).unwrap());
    }
    words
}

/// The central full twist `(σ_1 ⋯ σ_{n-1})^n`; for `n = 2` this degenerates
/// to `σ_1²`, the generator of the center of `B_2`.
pub fn full_twist_word(n: usize) -> Word {
    assert!(n >= 2);
    let ctx = Context::Braid { strings: n };
    let run: Vec<i64> = (1..n as i64).collect();
    Word::from_signed(ctx, &run).unwrap().pow(n)
}

/// A representation as data: per-generator image and inverse-image matrices.
#[derive(Clone, Debug)]
pub struct Representation<R: Ring> {
    context: Context,
    ring: R,
    dim: usize,
    images: Vec<(Matrix<R>, Matrix<R>)>,
}

impl<R: Ring> Representation<R> {
    /// Builds from forward generator images, inverting and verifying each.
    pub fn from_generator_images(
        context: Context,
        ring: R,
        images: Vec<Matrix<R>>,
    ) -> Result<Self> {
        assert_eq!(context.generator_count(), images.len());
        let dim = images.first().map_or(1, Matrix::dim);
        let mut pairs = Vec::with_capacity(images.len());
        for m in images {
            if m.dim() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: m.dim(),
                });
            }
            let inv = m.inverse()?;
            pairs.push((m, inv));
        }
        Ok(Representation {
            context,
            ring,
            dim,
            images: pairs,
        })
    }

    pub fn context(&self) -> Context {
        self.context
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_image(&self, index: usize, inverse: bool) -> &Matrix<R> {
        let pair = &self.images[index - 1];
        if inverse {
            &pair.1
        } else {
            &pair.0
        }
    }

    fn check_context(&self, w: &Word) -> Result<()> {
        if w.context() != self.context {
            return Err(Error::ContextMismatch {
                expected: self.context.to_string(),
                found: w.context().to_string(),
            });
        }
        Ok(())
    }

    /// Ordered product of generator images; rightmost letter applied first
    /// means the matrices multiply left to right.
    pub fn eval(&self, w: &Word) -> Result<Matrix<R>> {
        self.check_context(w)?;
        let mut acc = Matrix::identity(self.ring.clone(), self.dim);
        for l in w.letters() {
            acc = acc.mul(self.generator_image(l.index, l.inverse))?;
        }
        Ok(acc)
    }

    /// Evaluates the word and its inverse in one pass, sharing the letters.
    pub fn eval_pair(&self, w: &Word) -> Result<(Matrix<R>, Matrix<R>)> {
        self.check_context(w)?;
        let mut fwd = Matrix::identity(self.ring.clone(), self.dim);
        let mut inv = Matrix::identity(self.ring.clone(), self.dim);
        for l in w.letters() {
            fwd = fwd.mul(self.generator_image(l.index, l.inverse))?;
            inv = self.generator_image(l.index, !l.inverse).mul(&inv)?;
        }
        Ok((fwd, inv))
    }

    /// Verifies that each relation word maps to the identity.
    pub fn check_relations<'a>(&self, relations: impl IntoIterator<Item = &'a Word>) -> Result<()> {
        for w in relations {
            if !self.eval(w)?.is_identity() {
                return Err(Error::RelationFailed {
                    name: w.to_string(),
                    detail: format!("image is not the identity over {}", self.ring.name()),
                });
            }
        }
        Ok(())
    }
}

impl Representation<LaurentRing> {
    /// Entry-wise specialization of the whole representation to `Z/p`.
    pub fn specialize(&self, ring: &ModRing, q0: u64, t0: u64) -> Result<Representation<ModRing>> {
        let images = self
            .images
            .iter()
            .map(|(m, mi)| Ok((m.specialize(ring, q0, t0)?, mi.specialize(ring, q0, t0)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            context: self.context,
            ring: *ring,
            dim: self.dim,
            images,
        })
    }
}

/// Lexicographically ordered basis pairs `(i, j)`, `1 <= i < j <= n`.
pub fn basis_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

fn lk_generator_matrix(n: usize, k: usize) -> Matrix<LaurentRing> {
    let basis = basis_pairs(n);
    let index_of = |i: usize, j: usize| basis.iter().position(|&p| p == (i, j)).unwrap();
    let dim = basis.len();
    let q = LaurentPoly::q();
    let q2_minus_q = &(&q * &q) - &q;
    let one_minus_q = &LaurentPoly::one() - &q;
    let minus_t_q2 = -&(&LaurentPoly::t() * &(&q * &q));
    let minus_q2q_t = -&(&q2_minus_q * &LaurentPoly::t());

    let mut m = Matrix::zero(LaurentRing, dim);
    for (col, &(i, j)) in basis.iter().enumerate() {
        let mut add = |row: usize, val: &LaurentPoly| {
            let cur = m.get(row, col).clone();
            m.set(row, col, &cur + val);
        };
        if k == i && k == j - 1 {
            add(col, &minus_t_q2);
        } else if k == i - 1 {
            add(index_of(k, j), &q);
            add(index_of(k, i), &q2_minus_q);
            add(col, &one_minus_q);
        } else if k == i {
            add(index_of(i + 1, j), &LaurentPoly::one());
        } else if k == j - 1 {
            add(index_of(i, k), &q);
            add(col, &one_minus_q);
            add(index_of(k, j), &minus_q2q_t);
        } else if k == j {
            add(index_of(i, j + 1), &LaurentPoly::one());
        } else {
            add(col, &LaurentPoly::one());
        }
    }
    m
}

/// The Lawrence–Krammer representation of `B_n`: dimension `n(n-1)/2` over
/// `Z[q^±1, t^±1]`. Construction aborts unless every braid relation maps
/// exactly to the identity.
pub fn lk_representation(n: usize) -> Result<Representation<LaurentRing>> {
    assert!(n >= 2, "braid groups need at least 2 strings");
    let images = (1..n).map(|k| lk_generator_matrix(n, k)).collect();
    let rep = Representation::from_generator_images(Context::Braid { strings: n }, LaurentRing, images)?;
    rep.check_relations(&braid_relation_words(n))?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_word_inventory() {
        assert!(braid_relation_words(2).is_empty());
        let r3 = braid_relation_words(3);
        assert_eq!(r3.len(), 1);
        assert_eq!(r3[0].signed_letters(), vec![1, 2, 1, -2, -1, -2]);
        // n=4: one commutation (|1-3| >= 2) plus two braid relations
        assert_eq!(braid_relation_words(4).len(), 3);
    }

    #[test]
    fn full_twist_shapes() {
        assert_eq!(full_twist_word(2).signed_letters(), vec![1, 1]);
        let w = full_twist_word(3);
        assert_eq!(w.len(), 6);
        assert_eq!(w.signed_letters(), vec![1, 2, 1, 2, 1, 2]);
    }

    #[test]
    fn lk_dimensions() {
        for n in 2..=6 {
            let rep = lk_representation(n).unwrap();
            assert_eq!(rep.dim(), n * (n - 1) / 2);
        }
        assert_eq!(lk_representation(4).unwrap().dim(), 6);
    }

    #[test]
    fn lk_n2_is_the_scalar_minus_t_q2() {
        let rep = lk_representation(2).unwrap();
        let m = rep.generator_image(1, false);
        assert_eq!(m.is_scalar(), Some(LaurentPoly::monomial(2, 1, -1)));
    }

    #[test]
    fn relation_battery_small_n() {
        for n in 3..=5 {
            let rep = lk_representation(n).unwrap();
            rep.check_relations(&braid_relation_words(n)).unwrap();
        }
    }

    #[test]
    fn braid_relation_as_equality() {
        let rep = lk_representation(3).unwrap();
        let ctx = Context::Braid { strings: 3 };
        let a = rep.eval(&Word::from_signed(ctx, &[1, 2, 1]).unwrap()).unwrap();
        let b = rep.eval(&Word::from_signed(ctx, &[2, 1, 2]).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn generator_determinants_are_units() {
        // frozen values: det σ_k = (-1)^n q^n t for the n-string group
        let rep3 = lk_representation(3).unwrap();
        for k in 1..=2 {
            assert_eq!(rep3.generator_image(k, false).det(), LaurentPoly::monomial(3, 1, 1));
        }
        let rep4 = lk_representation(4).unwrap();
        for k in 1..=3 {
            assert_eq!(rep4.generator_image(k, false).det(), LaurentPoly::monomial(4, 1, -1));
        }
        let rep6 = lk_representation(6).unwrap();
        for k in 1..=5 {
            assert!(rep6.generator_image(k, false).det().is_unit());
        }
    }

    #[test]
    fn full_twist_is_scalar() {
        // frozen: q^6 t^2 at n=3, q^8 t^2 at n=4
        let rep3 = lk_representation(3).unwrap();
        let s3 = rep3.eval(&full_twist_word(3)).unwrap().is_scalar();
        assert_eq!(s3, Some(LaurentPoly::monomial(6, 2, 1)));

        let rep4 = lk_representation(4).unwrap();
        let s4 = rep4.eval(&full_twist_word(4)).unwrap().is_scalar();
        assert_eq!(s4, Some(LaurentPoly::monomial(8, 2, 1)));
    }

    #[test]
    fn commutator_is_nontrivial() {
        let rep = lk_representation(3).unwrap();
        let w = Word::from_signed(Context::Braid { strings: 3 }, &[1, 2, -1, -2]).unwrap();
        assert_eq!(w.exponent_sum(), 0);
        let m = rep.eval(&w).unwrap();
        assert!(!m.is_identity());
        assert!(m.is_scalar().is_none());
    }

    #[test]
    fn empty_word_maps_to_identity() {
        let rep = lk_representation(3).unwrap();
        let m = rep.eval(&Word::empty(Context::Braid { strings: 3 })).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn eval_pair_matches_separate_evaluations() {
        let rep = lk_representation(4).unwrap();
        let w = Word::from_signed(Context::Braid { strings: 4 }, &[1, -3, 2, 2, -1]).unwrap();
        let (fwd, inv) = rep.eval_pair(&w).unwrap();
        assert_eq!(fwd, rep.eval(&w).unwrap());
        assert_eq!(inv, rep.eval(&w.inverse()).unwrap());
        assert!(fwd.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn context_mismatch_rejected() {
        let rep = lk_representation(3).unwrap();
        let w = Word::from_signed(Context::Braid { strings: 4 }, &[1]).unwrap();
        assert!(rep.eval(&w).is_err());
    }

    #[test]
    fn specialization_preserves_relations() {
        let rep = lk_representation(4).unwrap();
        let r = ModRing::new(998244353);
        let spec = rep.specialize(&r, 12345, 67890).unwrap();
        spec.check_relations(&braid_relation_words(4)).unwrap();
    }

    // faithfulness spot-suite: nonzero exponent sum forces a non-identity
    // image (the generator determinant is a non-torsion unit, so the word's
    // determinant q^{kn} t^k with k != 0 cannot be 1)
    #[test]
    fn faithfulness_spot_suite() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let reps: Vec<_> = (3..=5).map(|n| lk_representation(n).unwrap()).collect();
        let mut checked = 0;
        while checked < 100 {
            let n = rng.gen_range(3..=5usize);
            let rep = &reps[n - 3];
            let len = rng.gen_range(1..=12);
            let letters: Vec<i64> = (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..n as i64);
                    if rng.gen_bool(0.5) {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            let w = Word::from_signed(Context::Braid { strings: n }, &letters).unwrap();
            if w.exponent_sum() == 0 {
                continue;
            }
            assert!(!rep.eval(&w).unwrap().is_identity(), "{w} at n={n}");
            checked += 1;
        }
    }
}
