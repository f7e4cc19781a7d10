//! Group words over indexed generators and their permutation actions.
//!
//! One word type serves three generator families: braid generators σ_i,
//! half-twists τ_i of the punctured sphere, and chain Dehn twists t_i. The
//! composition convention is fixed globally: in a product `u·v`, `v` acts
//! first, and the rightmost letter of a word is applied first.

use std::fmt;

use crate::error::{Error, Result};

/// Which group the generators of a word belong to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Context {
    /// Braid group on `n` strings, generators σ_1..σ_{n-1}.
    Braid { strings: usize },
    /// Mapping class group of a sphere with `n` punctures, half-twists τ_1..τ_{n-1}.
    Sphere { punctures: usize },
    /// Hyperelliptic chain twists t_1..t_{2g+1} for genus `g`.
    Chain { genus: usize },
}

impl Context {
    pub fn generator_count(&self) -> usize {
        match *self {
            Context::Braid { strings } => strings - 1,
            Context::Sphere { punctures } => punctures - 1,
            Context::Chain { genus } => 2 * genus + 1,
        }
    }

    /// Number of points the permutation action lives on, when defined.
    pub fn point_count(&self) -> Option<usize> {
        match *self {
            Context::Braid { strings } => Some(strings),
            Context::Sphere { punctures } => Some(punctures),
            Context::Chain { .. } => None,
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Context::Braid { strings } => write!(f, "braid({strings})"),
            Context::Sphere { punctures } => write!(f, "sphere({punctures})"),
            Context::Chain { genus } => write!(f, "chain({genus})"),
        }
    }
}

/// One generator occurrence with exponent ±1. `index` is 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn signed(&self) -> i64 {
        if self.inverse {
            -(self.index as i64)
        } else {
            self.index as i64
        }
    }
}

/// A word in the generators of `context`; not necessarily freely reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    context: Context,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(context: Context) -> Self {
        Word {
            context,
            letters: Vec::new(),
        }
    }

    /// Build from signed 1-based generator indices; "1 2 -1" is g1 g2 g1^-1.
    pub fn from_signed(context: Context, letters: &[i64]) -> Result<Self> {
        let max = context.generator_count();
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 {
                return Err(Error::Parse("generator index 0 is invalid".into()));
            }
            let index = l.unsigned_abs() as usize;
            if index > max {
                return Err(Error::GeneratorRange { index, max });
            }
            out.push(Letter {
                index,
                inverse: l < 0,
            });
        }
        Ok(Word {
            context,
            letters: out,
        })
    }

    /// Parse the CLI syntax: whitespace-separated signed integers.
    pub fn parse(context: Context, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator token {tok:?}")))?;
            letters.push(v);
        }
        Word::from_signed(context, &letters)
    }

    pub fn context(&self) -> Context {
        self.context
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed_letters(&self) -> Vec<i64> {
        self.letters.iter().map(Letter::signed).collect()
    }

    /// Free reduction: repeatedly drop adjacent cancelling pairs. Idempotent.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(top) if top.index == l.index && top.inverse != l.inverse => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word {
            context: self.context,
            letters: out,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| {
            !(w[0].index == w[1].index && w[0].inverse != w[1].inverse)
        })
    }

    /// Reversed sequence with negated exponents.
    pub fn inverse(&self) -> Word {
        Word {
            context: self.context,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    index: l.index,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    /// Concatenation `self · other` (other acts first).
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.context != other.context {
            return Err(Error::ContextMismatch {
                expected: self.context.to_string(),
                found: other.context.to_string(),
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            context: self.context,
            letters,
        })
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word {
            context: self.context,
            letters,
        }
    }

    /// Sum of exponents (the abelianization class before torsion).
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.inverse { -1 } else { 1 })
            .sum()
    }

    /// Induced permutation of the marked points: each letter acts as the
    /// transposition `(i, i+1)`, rightmost letter first. Defined for braid
    /// and sphere contexts.
    pub fn perm(&self) -> Result<Perm> {
        let n = self
            .context
            .point_count()
            .ok_or_else(|| Error::ContextMismatch {
                expected: "braid(n) or sphere(n)".into(),
                found: self.context.to_string(),
            })?;
        let mut p = Perm::identity(n);
        for l in &self.letters {
            p = p.compose(&Perm::adjacent_transposition(n, l.index));
        }
        Ok(p)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.letters.iter().map(|l| l.signed().to_string()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// A permutation of `{1..n}`, stored 0-based: `images[x]` is the image of `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images; validates bijectivity.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[im - 1] = true;
            out.push(im - 1);
        }
        Ok(Perm { images: out })
    }

    /// The transposition `(i, i+1)` with 1-based `i`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "transposition index out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }
}
