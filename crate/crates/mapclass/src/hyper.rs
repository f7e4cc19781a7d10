//! Hyperelliptic mapping class group bookkeeping.
//!
//! The centralizer of the hyperelliptic involution surjects onto the mapping
//! class group of the `(2g+2)`-punctured sphere with kernel of order two
//! generated by the involution itself, while the involution acts as `-I` on
//! mod-3 homology. The word problem therefore splits into two channels: the
//! sphere channel decides everything except the involution ambiguity, and the
//! homology channel separates the identity from the involution. For genus 2
//! the centralizer is the whole mapping class group, so this is a word-problem
//! oracle for the genus-2 mapping class group.
//!
//! The chain palindrome `t_1 ⋯ t_{2g+1} t_{2g+1} ⋯ t_1` plays the involution:
//! its sphere image is the relation `R3` (hence trivial) and its homology
//! image is `-I`; both facts are machine-checked at construction.

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::screen::ScreenConfig;
use crate::sphere::{sphere_dense_dim, SphereRep, TrivialReport, Witness};
use crate::symplectic::{sp_eval, sp_order_formula, SpMatrix};
use crate::words::{Context, Word};

/// The chain palindrome representing the hyperelliptic involution.
pub fn j_word(g: usize) -> Word {
    let ctx = Context::Chain { genus: g };
    let up: Vec<i64> = (1..=2 * g as i64 + 1).collect();
    let letters: Vec<i64> = up.iter().chain(up.iter().rev()).copied().collect();
    Word::from_signed(ctx, &letters).unwrap()
}

/// Projection to the punctured-sphere group: `t_i ↦ τ_i` letter-wise,
/// `chain(g) → sphere(2g+2)`.
pub fn p_image(w: &Word) -> Result<Word> {
    match w.context() {
        Context::Chain { genus } => Word::from_signed(
            Context::Sphere {
                punctures: 2 * genus + 2,
            },
            &w.signed_letters(),
        ),
        other => Err(Error::ContextMismatch {
            expected: "chain(g)".into(),
            found: other.to_string(),
        }),
    }
}

/// Verdict of the two-channel oracle.
#[derive(Clone, Debug, PartialEq)]
pub enum HyperVerdict {
    Identity,
    /// Equal to the hyperelliptic involution.
    EqualsJ,
    Nontrivial(Witness),
}

#[derive(Clone, Debug, PartialEq)]
pub struct HyperReport {
    pub verdict: HyperVerdict,
    pub exact: bool,
}

impl HyperReport {
    pub fn to_json(&self) -> Value {
        let (verdict, witness) = match &self.verdict {
            HyperVerdict::Identity => ("identity", None),
            HyperVerdict::EqualsJ => ("equals_j", None),
            HyperVerdict::Nontrivial(w) => ("nontrivial", Some(w.to_json())),
        };
        json!({"verdict": verdict, "witness": witness, "exact": self.exact})
    }
}

/// The two-channel word-problem oracle for the genus-`g` hyperelliptic
/// mapping class group. Genus 2 is the exact tier; higher genus works under
/// modular screening with exact confirmation opt-in.
pub struct HyperOracle {
    g: usize,
    sphere: SphereRep,
}

impl HyperOracle {
    /// Builds the sphere channel for `n = 2g + 2` and machine-checks the two
    /// defining facts about the involution word.
    pub fn build(g: usize, screen: &ScreenConfig) -> Result<HyperOracle> {
        if g < 2 {
            return Err(Error::Refused(
                "the oracle starts at genus 2; the torus case is classical".into(),
            ));
        }
        let sphere = SphereRep::build(2 * g + 2, screen)?;
        let oracle = HyperOracle { g, sphere };
        oracle.check_involution_word()?;
        Ok(oracle)
    }

    fn check_involution_word(&self) -> Result<()> {
        let j = j_word(self.g);
        if !sp_eval(self.g, &j)?.is_minus_identity() {
            return Err(Error::Inconsistency(
                "involution word does not act as -I on homology".into(),
            ));
        }
        let image = p_image(&j)?;
        let relations = crate::sphere::sphere_relation_words(2 * self.g + 2);
        let r3 = &relations.iter().find(|(n, _)| n == "R3").unwrap().1;
        if image != *r3 {
            return Err(Error::Inconsistency(
                "involution word does not project to the R3 relation".into(),
            ));
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn sphere(&self) -> &SphereRep {
        &self.sphere
    }

    /// Two-channel verdict. The sphere channel decides nontriviality; when it
    /// reports trivial, the homology channel must give `I` (identity) or `-I`
    /// (the involution); anything else is an internal inconsistency, since a
    /// sphere-trivial word lies in the order-two kernel.
    pub fn trivial(&self, w: &Word, confirm_exact: bool) -> Result<HyperReport> {
        if w.context() != (Context::Chain { genus: self.g }) {
            return Err(Error::ContextMismatch {
                expected: format!("chain({})", self.g),
                found: w.context().to_string(),
            });
        }
        let homology: SpMatrix = sp_eval(self.g, w)?;
        let sphere_report: TrivialReport = self.sphere.trivial(&p_image(w)?, confirm_exact)?;
        if !sphere_report.trivial {
            return Ok(HyperReport {
                verdict: HyperVerdict::Nontrivial(
                    sphere_report.witness.expect("nontrivial verdicts carry a witness"),
                ),
                exact: sphere_report.exact,
            });
        }
        if homology.is_identity() {
            Ok(HyperReport {
                verdict: HyperVerdict::Identity,
                exact: sphere_report.exact,
            })
        } else if homology.is_minus_identity() {
            Ok(HyperReport {
                verdict: HyperVerdict::EqualsJ,
                exact: sphere_report.exact,
            })
        } else {
            Err(Error::Inconsistency(
                "sphere channel reports trivial but the homology image is neither I nor -I".into(),
            ))
        }
    }
}

/// Dimension report for the embedding sizes printed by the dimension audit.
#[derive(Clone, Debug, PartialEq)]
pub struct DimReport {
    pub genus: usize,
    /// `n (n-1)² (n-2)² / 4` at `n = 2g+2`, equal to `2 (g+1) g² (2g+1)²`.
    pub m0n_dim: u64,
    pub sp_order: BigUint,
    pub hyper_dim: BigUint,
    /// Prime factorization of `hyper_dim`, ascending primes.
    pub factorization: Vec<(u64, u32)>,
}

/// `2 (g+1) g² (2g+1)²`, the genus form of the sphere dimension formula.
pub fn m0n_dim_from_genus(g: usize) -> u64 {
    let g = g as u64;
    2 * (g + 1) * g * g * (2 * g + 1) * (2 * g + 1)
}

/// Evaluates the dimension arithmetic: sphere dimension at `n = 2g+2`, the
/// symplectic group order, and their product with its exact factorization.
pub fn dims(g: usize) -> DimReport {
    assert!(g >= 1);
    let n = 2 * g + 2;
    let m0n_dim = m0n_dim_from_genus(g);
    assert_eq!(m0n_dim, sphere_dense_dim(n) as u64, "the two dimension formulas must agree");
    let sp_order = sp_order_formula(g);
    let hyper_dim = BigUint::from(m0n_dim) * &sp_order;

    // factor from the factored pieces: the small polynomial part, 3^{g²},
    // and each 3^{2i} - 1 (all comfortably within trial-division range)
    let mut factors = std::collections::BTreeMap::<u64, u32>::new();
    let mut pieces = vec![m0n_dim];
    pieces.extend((1..=g).map(|i| 3u64.pow(2 * i as u32) - 1));
    for piece in pieces {
        for (p, e) in trial_factor(piece) {
            *factors.entry(p).or_insert(0) += e;
        }
    }
    *factors.entry(3).or_insert(0) += (g * g) as u32;

    let mut check = BigUint::one();
    for (&p, &e) in &factors {
        check *= BigUint::from(p).pow(e);
    }
    assert_eq!(check, hyper_dim, "factorization must reproduce the product");

    DimReport {
        genus: g,
        m0n_dim,
        sp_order,
        hyper_dim,
        factorization: factors.into_iter().collect(),
    }
}

fn trial_factor(mut v: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= v {
        if v.is_multiple_of(p) {
            let mut e = 0;
            while v.is_multiple_of(p) {
                v /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if v > 1 {
        out.push((v, 1));
    }
    out
}

impl DimReport {
    pub fn to_json(&self) -> Value {
        json!({
            "genus": self.genus,
            "m0n_dim": self.m0n_dim,
            "sp_order": self.sp_order.to_string(),
            "hyper_dim": self.hyper_dim.to_string(),
            "factorization": self.factorization,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2(letters: &[i64]) -> Word {
        Word::from_signed(Context::Chain { genus: 2 }, letters).unwrap()
    }

    #[test]
    fn p_image_examples() {
        let w = chain2(&[1, -2]);
        let s = p_image(&w).unwrap();
        assert_eq!(s.context(), Context::Sphere { punctures: 6 });
        assert_eq!(s.signed_letters(), vec![1, -2]);
        assert!(p_image(&chain2(&[])).unwrap().is_empty());
        let j = p_image(&j_word(2)).unwrap();
        assert_eq!(j.signed_letters(), vec![1, 2, 3, 4, 5, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn j_word_shape() {
        assert_eq!(j_word(2).len(), 10);
        assert_eq!(j_word(3).len(), 14);
        assert_eq!(j_word(2).exponent_sum(), 10);
    }

    #[test]
    fn dims_genus_two_matches_the_printed_values() {
        let report = dims(2);
        assert_eq!(report.m0n_dim, 600);
        assert_eq!(report.sp_order, BigUint::from(51840u32));
        assert_eq!(report.hyper_dim, BigUint::from(31_104_000u64));
        assert_eq!(report.factorization, vec![(2, 10), (3, 5), (5, 3)]);
    }

    #[test]
    fn dims_genus_one() {
        let report = dims(1);
        assert_eq!(report.m0n_dim, 36);
        assert_eq!(report.sp_order, BigUint::from(24u32));
        assert_eq!(report.hyper_dim, BigUint::from(864u32));
    }

    #[test]
    fn dimension_formulas_agree_up_to_genus_six() {
        for g in 1..=6 {
            assert_eq!(
                m0n_dim_from_genus(g),
                sphere_dense_dim(2 * g + 2) as u64,
                "g={g}"
            );
        }
    }

    #[test]
    fn genus_one_oracle_refused() {
        assert!(matches!(
            HyperOracle::build(1, &ScreenConfig::default()),
            Err(Error::Refused(_))
        ));
    }
}
