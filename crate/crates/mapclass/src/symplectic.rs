//! The symplectic group `Sp(2g, 3)`: the mod-3 homology action.
//!
//! Dehn twists act on first homology as transvections `x ↦ x + ⟨x, v⟩ v`.
//! Basis order is `a_1, b_1, …, a_g, b_g` with `⟨a_i, b_i⟩ = 1`; the chain
//! twist classes are fixed as `v_{2i} = a_i`, `v_1 = b_1`,
//! `v_{2i+1} = b_{i+1} - b_i`, `v_{2g+1} = -b_g`, which realizes the chain
//! adjacency pattern (consecutive classes pair non-trivially, distant ones
//! pair to zero). Any assignment satisfying that pattern gives a conjugate
//! representation, so nothing downstream depends on the particular choice.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::words::{Context, Word};

const P: u8 = 3;

fn add3(a: u8, b: u8) -> u8 {
    (a + b) % P
}

fn mul3(a: u8, b: u8) -> u8 {
    (a * b) % P
}

fn neg3(a: u8) -> u8 {
    (P - a) % P
}

/// A vector over `F_3` of length `2g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpVector {
    coords: Vec<u8>,
}

impl SpVector {
    pub fn new(coords: Vec<u8>) -> Self {
        assert!(coords.iter().all(|&c| c < P));
        assert!(coords.len().is_multiple_of(2));
        SpVector { coords }
    }

    pub fn zero(g: usize) -> Self {
        SpVector {
            coords: vec![0; 2 * g],
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn negate(&self) -> SpVector {
        SpVector {
            coords: self.coords.iter().map(|&c| neg3(c)).collect(),
        }
    }
}

/// The symplectic pairing `⟨x, y⟩ = Σ_i (x_{a_i} y_{b_i} - x_{b_i} y_{a_i})`.
pub fn pairing(x: &SpVector, y: &SpVector) -> u8 {
    assert_eq!(x.len(), y.len());
    let mut acc = 0u8;
    for i in (0..x.len()).step_by(2) {
        acc = add3(acc, mul3(x.coords[i], y.coords[i + 1]));
        acc = add3(acc, neg3(mul3(x.coords[i + 1], y.coords[i])));
    }
    acc
}

/// A `2g × 2g` matrix over `F_3` satisfying `MᵀJM = J` (checked on
/// construction by every public constructor).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpMatrix {
    g: usize,
    entries: Vec<u8>, // row-major, dimension 2g
}

impl SpMatrix {
    fn dim(&self) -> usize {
        2 * self.g
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.entries[r * self.dim() + c]
    }

    pub fn identity(g: usize) -> Self {
        let d = 2 * g;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            entries[i * d + i] = 1;
        }
        SpMatrix { g, entries }
    }

    pub fn minus_identity(g: usize) -> Self {
        let d = 2 * g;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            entries[i * d + i] = neg3(1);
        }
        SpMatrix { g, entries }
    }

    pub fn mul(&self, other: &SpMatrix) -> SpMatrix {
        assert_eq!(self.g, other.g);
        let d = self.dim();
        let mut entries = vec![0u8; d * d];
        for r in 0..d {
            for c in 0..d {
                let mut acc = 0u8;
                for k in 0..d {
                    acc = add3(acc, mul3(self.get(r, k), other.get(k, c)));
                }
                entries[r * d + c] = acc;
            }
        }
        SpMatrix {
            g: self.g,
            entries,
        }
    }

    pub fn apply(&self, v: &SpVector) -> SpVector {
        let d = self.dim();
        assert_eq!(v.len(), d);
        let coords = (0..d)
            .map(|r| {
                let mut acc = 0u8;
                for c in 0..d {
                    acc = add3(acc, mul3(self.get(r, c), v.coords[c]));
                }
                acc
            })
            .collect();
        SpVector { coords }
    }

    pub fn is_identity(&self) -> bool {
        *self == SpMatrix::identity(self.g)
    }

    pub fn is_minus_identity(&self) -> bool {
        *self == SpMatrix::minus_identity(self.g)
    }

    /// `MᵀJM = J` in the fixed basis.
    pub fn is_symplectic(&self) -> bool {
        let d = self.dim();
        // JM
        let mut jm = vec![0u8; d * d];
        for r in (0..d).step_by(2) {
            for c in 0..d {
                jm[r * d + c] = self.get(r + 1, c);
                jm[(r + 1) * d + c] = neg3(self.get(r, c));
            }
        }
        // MᵀJM == J
        for r in 0..d {
            for c in 0..d {
                let mut acc = 0u8;
                for k in 0..d {
                    acc = add3(acc, mul3(self.get(k, r), jm[k * d + c]));
                }
                let j = if r.is_multiple_of(2) && c == r + 1 {
                    1
                } else if r % 2 == 1 && c == r - 1 {
                    neg3(1)
                } else {
                    0
                };
                if acc != j {
                    return false;
                }
            }
        }
        true
    }

    /// Canonical byte key for visited sets (entries are < 3, row-major).
    fn key(&self) -> Vec<u8> {
        self.entries.clone()
    }

    pub fn to_json(&self) -> Value {
        let d = self.dim();
        let rows: Vec<Vec<u8>> = (0..d)
            .map(|r| (0..d).map(|c| self.get(r, c)).collect())
            .collect();
        json!({"genus": self.g, "modulus": 3, "rows": rows})
    }
}

/// Transvection `x ↦ x + ⟨x, v⟩ v`, as a symplectic matrix; `v` must be
/// nonzero. Insensitive to the sign of `v`.
pub fn transvection(v: &SpVector) -> Result<SpMatrix> {
    if v.is_zero() {
        return Err(Error::Parse("transvection needs a nonzero vector".into()));
    }
    Ok(transvection_power(v, 1))
}

/// `x ↦ x + e·⟨x, v⟩ v`; `e = 1` is the twist, `e = -1 ≡ 2` its inverse.
fn transvection_power(v: &SpVector, e: u8) -> SpMatrix {
    let d = v.len();
    let g = d / 2;
    let mut m = SpMatrix::identity(g);
    // column c of the result: image of the c-th basis vector
    for c in 0..d {
        let mut basis = SpVector::zero(g);
        basis.coords[c] = 1;
        let coef = mul3(e, pairing(&basis, v));
        for r in 0..d {
            let idx = r * d + c;
            m.entries[idx] = add3(m.entries[idx], mul3(coef, v.coords[r]));
        }
    }
    debug_assert!(m.is_symplectic());
    m
}

/// The fixed homology classes of the chain twists `t_1..t_{2g+1}`.
pub fn chain_classes(g: usize) -> Vec<SpVector> {
    assert!(g >= 1);
    let a = |i: usize| {
        let mut v = SpVector::zero(g);
        v.coords[2 * (i - 1)] = 1;
        v
    };
    let b = |i: usize| {
        let mut v = SpVector::zero(g);
        v.coords[2 * (i - 1) + 1] = 1;
        v
    };
    let mut out = Vec::with_capacity(2 * g + 1);
    for k in 1..=(2 * g + 1) {
        let v = if k.is_multiple_of(2) {
            a(k / 2)
        } else if k == 1 {
            b(1)
        } else if k == 2 * g + 1 {
            b(g).negate()
        } else {
            // k = 2i + 1: b_{i+1} - b_i
            let i = (k - 1) / 2;
            let mut v = b(i + 1);
            let bi = b(i);
            for (x, y) in v.coords.iter_mut().zip(bi.coords.iter()) {
                *x = add3(*x, neg3(*y));
            }
            v
        };
        out.push(v);
    }
    // chain adjacency: consecutive classes pair non-trivially, others to zero
    for i in 0..out.len() {
        for j in 0..out.len() {
            let p = pairing(&out[i], &out[j]);
            if i.abs_diff(j) == 1 {
                assert!(p != 0, "chain classes {i},{j} must pair non-trivially");
            } else {
                assert!(p == 0, "chain classes {i},{j} must pair to zero");
            }
        }
    }
    out
}

/// Mod-3 homology image of a chain word: the product of transvection powers.
pub fn sp_eval(g: usize, w: &Word) -> Result<SpMatrix> {
    if w.context() != (Context::Chain { genus: g }) {
        return Err(Error::ContextMismatch {
            expected: format!("chain({g})"),
            found: w.context().to_string(),
        });
    }
    let classes = chain_classes(g);
    let mut acc = SpMatrix::identity(g);
    for l in w.letters() {
        let e = if l.inverse { neg3(1) } else { 1 };
        acc = acc.mul(&transvection_power(&classes[l.index - 1], e));
    }
    Ok(acc)
}

/// `|Sp(2g, 3)| = 3^{g²} ∏_{i=1}^{g} (3^{2i} - 1)`.
pub fn sp_order_formula(g: usize) -> BigUint {
    assert!(g >= 1);
    let three = BigUint::from(3u32);
    let mut order = three.pow((g * g) as u32);
    for i in 1..=g {
        order *= three.pow(2 * i as u32) - BigUint::from(1u32);
    }
    order
}

/// Breadth-first closure of all transvections under multiplication; returns
/// the group order and whether `-I` was reached. Refused above genus 2.
pub fn sp_order_bfs(g: usize) -> Result<(u64, bool)> {
    let gens = all_transvections_checked(g)?;
    Ok(bfs_closure(g, &gens))
}

/// Order of the subgroup generated by the chain transvections only
/// (diagnostic; nothing downstream relies on this value).
pub fn chain_subgroup_order(g: usize) -> Result<(u64, bool)> {
    if g > 2 {
        return Err(Error::Refused(format!(
            "breadth-first closure is limited to genus <= 2, got {g}"
        )));
    }
    let gens: Vec<SpMatrix> = chain_classes(g)
        .iter()
        .map(transvection)
        .collect::<Result<_>>()?;
    Ok(bfs_closure(g, &gens))
}

fn all_transvections_checked(g: usize) -> Result<Vec<SpMatrix>> {
    if g > 2 {
        return Err(Error::Refused(format!(
            "breadth-first closure is limited to genus <= 2, got {g}"
        )));
    }
    let d = 2 * g;
    let mut gens = Vec::new();
    let mut seen = HashSet::new();
    let total = 3usize.pow(d as u32);
    for code in 1..total {
        let mut coords = Vec::with_capacity(d);
        let mut c = code;
        for _ in 0..d {
            coords.push((c % 3) as u8);
            c /= 3;
        }
        let v = SpVector::new(coords);
        // T_v = T_{-v}: keep one representative per antipodal pair
        if seen.contains(&v.negate().coords) {
            continue;
        }
        seen.insert(v.coords().to_vec());
        gens.push(transvection(&v)?);
    }
    Ok(gens)
}

fn bfs_closure(g: usize, gens: &[SpMatrix]) -> (u64, bool) {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let id = SpMatrix::identity(g);
    seen.insert(id.key());
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for gen in gens {
            let next = m.mul(gen);
            if seen.insert(next.key()) {
                frontier.push(next);
            }
        }
    }
    let minus = SpMatrix::minus_identity(g).key();
    let has_minus = seen.contains(&minus);
    (seen.len() as u64, has_minus)
}
