//! Induced representations over a finite coset system.
//!
//! Given an index-`n` subgroup `H` of `G`, a `k`-dimensional representation of
//! `H`, a transversal `c_1..c_n`, and a rewriting table sending each factor
//! `c_{g(i)}^-1 g c_i` to a subgroup word, the induced representation of `G`
//! has dimension `kn` and its elements are block-monomial: a permutation of
//! the cosets with one base-representation block per coset. Elements stay in
//! that form; a dense matrix is materialized only for audits.

use crate::conj::ConjPair;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::words::{Perm, Word};

/// An element of the base representation, as the induced machinery needs it.
pub trait RepElement: Clone {
    fn compose(&self, other: &Self) -> Result<Self>;
    fn invert(&self) -> Self;
    fn is_identity(&self) -> bool;
}

impl<R: Ring> RepElement for ConjPair<R> {
    fn compose(&self, other: &Self) -> Result<Self> {
        self.mul(other)
    }

    fn invert(&self) -> Self {
        self.inverse()
    }

    fn is_identity(&self) -> bool {
        self.is_identity()
    }
}

/// A base representation that can evaluate subgroup words into elements.
pub trait BaseRep {
    type Elem: RepElement;
    fn identity_elem(&self) -> Self::Elem;
    fn eval_word(&self, w: &Word) -> Result<Self::Elem>;
}

/// Coset bookkeeping for an index-`n` subgroup: transversal words, the coset
/// permutation of each generator, and the rewriting table of Schreier factors
/// (forward and inverse letters kept separately).
#[derive(Clone, Debug)]
pub struct CosetSystem {
    count: usize,
    transversal: Vec<Word>,
    gen_perms: Vec<Perm>,
    block_words: Vec<Vec<Word>>,
    block_words_inv: Vec<Vec<Word>>,
}

impl CosetSystem {
    pub fn new(
        transversal: Vec<Word>,
        gen_perms: Vec<Perm>,
        block_words: Vec<Vec<Word>>,
        block_words_inv: Vec<Vec<Word>>,
    ) -> Self {
        let count = transversal.len();
        assert!(gen_perms.iter().all(|p| p.degree() == count));
        assert!(block_words.iter().all(|row| row.len() == count));
        assert!(block_words_inv.iter().all(|row| row.len() == count));
        CosetSystem {
            count,
            transversal,
            gen_perms,
            block_words,
            block_words_inv,
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn generator_count(&self) -> usize {
        self.gen_perms.len()
    }

    /// Transversal word of the 1-based coset `i`.
    pub fn transversal_word(&self, i: usize) -> &Word {
        &self.transversal[i - 1]
    }

    /// Coset permutation of the 1-based generator `g` (same for `g^-1`'s
    /// underlying transposition; the inverse permutation is derived).
    pub fn generator_perm(&self, g: usize) -> &Perm {
        &self.gen_perms[g - 1]
    }

    /// Subgroup word for `c_{g^e(i)}^-1 g^e c_i`, 1-based `g` and `i`.
    pub fn block_word(&self, g: usize, inverse: bool, i: usize) -> &Word {
        if inverse {
            &self.block_words_inv[g - 1][i - 1]
        } else {
            &self.block_words[g - 1][i - 1]
        }
    }

    /// Replaces one rewriting-table entry. Exists so tests can demonstrate
    /// that the build gate catches a corrupted table.
    pub fn set_block_word(&mut self, g: usize, inverse: bool, i: usize, w: Word) {
        if inverse {
            self.block_words_inv[g - 1][i - 1] = w;
        } else {
            self.block_words[g - 1][i - 1] = w;
        }
    }

    /// Dump of the whole system (transversal, coset permutations, rewriting
    /// table) in the signed-integer word syntax.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "cosets": self.count,
            "transversal": self.transversal.iter().map(Word::to_string).collect::<Vec<_>>(),
            "generator_coset_perms": self
                .gen_perms
                .iter()
                .map(Perm::one_based_images)
                .collect::<Vec<_>>(),
            "block_words": self
                .block_words
                .iter()
                .map(|row| row.iter().map(Word::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "block_words_inverse": self
                .block_words_inv
                .iter()
                .map(|row| row.iter().map(Word::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Induced-representation element: coset permutation plus one block per coset.
/// The dense semantics places `blocks[i]` at block position `(perm(i), i)`.
#[derive(Clone, Debug)]
pub struct BlockMonomial<E> {
    perm: Perm,
    blocks: Vec<E>,
}

impl<E: RepElement> BlockMonomial<E> {
    pub fn identity(count: usize, id: E) -> Self {
        BlockMonomial {
            perm: Perm::identity(count),
            blocks: vec![id; count],
        }
    }

    pub fn new(perm: Perm, blocks: Vec<E>) -> Self {
        assert_eq!(perm.degree(), blocks.len());
        BlockMonomial { perm, blocks }
    }

    pub fn coset_perm(&self) -> &Perm {
        &self.perm
    }

    /// Block attached to the 1-based coset column `i`.
    pub fn block(&self, i: usize) -> &E {
        &self.blocks[i - 1]
    }

    /// Product law: `(P, B)·(P', B')` has permutation `P ∘ P'` and
    /// `blocks[i] = B[P'(i)] · B'[i]`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let n = self.blocks.len();
        if n != other.blocks.len() {
            return Err(Error::DimMismatch {
                left: n,
                right: other.blocks.len(),
            });
        }
        let perm = self.perm.compose(&other.perm);
        let mut blocks = Vec::with_capacity(n);
        for i in 1..=n {
            let via = other.perm.apply(i);
            blocks.push(self.block(via).compose(other.block(i))?);
        }
        Ok(BlockMonomial { perm, blocks })
    }

    pub fn invert(&self) -> Self {
        let n = self.blocks.len();
        let perm = self.perm.inverse();
        let mut blocks = Vec::with_capacity(n);
        for i in 1..=n {
            blocks.push(self.block(perm.apply(i)).invert());
        }
        BlockMonomial { perm, blocks }
    }

    /// True iff the coset permutation is trivial and every diagonal block is
    /// the base representation's identity.
    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.blocks.iter().all(RepElement::is_identity)
    }

    /// 1-based cosets whose block fails the identity test (diagnostic).
    pub fn non_identity_blocks(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_identity())
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Image of the generator `g^e` under the induced representation.
pub fn induce_generator<B: BaseRep>(
    sys: &CosetSystem,
    base: &B,
    g: usize,
    inverse: bool,
) -> Result<BlockMonomial<B::Elem>> {
    let perm = if inverse {
        sys.generator_perm(g).inverse()
    } else {
        sys.generator_perm(g).clone()
    };
    let blocks = (1..=sys.count())
        .map(|i| base.eval_word(sys.block_word(g, inverse, i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockMonomial::new(perm, blocks))
}

/// Image of a word: the ordered product of generator images.
pub fn induce_eval<B: BaseRep>(
    sys: &CosetSystem,
    base: &B,
    w: &Word,
) -> Result<BlockMonomial<B::Elem>> {
    let mut acc = BlockMonomial::identity(sys.count(), base.identity_elem());
    for l in w.letters() {
        acc = acc.compose(&induce_generator(sys, base, l.index, l.inverse)?)?;
    }
    Ok(acc)
}

/// Dense `kn × kn` audit form of a block-monomial element over [`ConjPair`]
/// blocks. Refused above `ceiling` to keep accidental materialization of the
/// large representations impossible.
pub fn materialize_dense<R: Ring>(
    m: &BlockMonomial<ConjPair<R>>,
    ring: R,
    ceiling: usize,
) -> Result<Matrix<R>> {
    let n = m.coset_perm().degree();
    let k = m.block(1).base_dim() * m.block(1).base_dim();
    let dim = k * n;
    if dim > ceiling {
        return Err(Error::Refused(format!(
            "dense dimension {dim} exceeds the audit ceiling {ceiling}"
        )));
    }
    let mut out = Matrix::zero(ring, dim);
    for i in 1..=n {
        let target = m.coset_perm().apply(i);
        let block = m.block(i).materialize()?;
        for r in 0..k {
            for c in 0..k {
                out.set((target - 1) * k + r, (i - 1) * k + c, block.get(r, c).clone());
            }
        }
    }
    Ok(out)
}
