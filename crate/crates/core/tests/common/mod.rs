//! Brute-force oracles used to cross-check the library. They work on plain
//! coordinate lists and never touch the reduced-basis machinery.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use mincode_core::gf::{field_of_order, FieldElement, FieldSpec};
use mincode_core::linalg::{all_vectors, GFVector, VectorMultiset};
use rand::Rng;

pub fn field(q: u64) -> FieldSpec {
    field_of_order(q).unwrap()
}

pub fn inner(f: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter()
        .zip(b)
        .fold(FieldElement::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Every codeword `(<v, g_i>)_i`, one per message `v` in GF(q)^k.
pub fn all_codewords(d: &VectorMultiset) -> Vec<Vec<FieldElement>> {
    let f = d.field();
    let cols: Vec<&GFVector> = d.iter().collect();
    all_vectors(f, d.ambient_dim())
        .map(|v| {
            cols.iter()
                .map(|g| inner(f, v.coords(), g.coords()))
                .collect()
        })
        .collect()
}

fn wt(c: &[FieldElement]) -> usize {
    c.iter().filter(|x| !x.is_zero()).count()
}

/// `A_w` over the distinct nonzero codewords.
pub fn naive_weight_distribution(d: &VectorMultiset) -> BTreeMap<usize, u64> {
    let words: BTreeSet<Vec<FieldElement>> = all_codewords(d).into_iter().collect();
    let mut counts = BTreeMap::new();
    for c in &words {
        let w = wt(c);
        if w > 0 {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
}

pub fn naive_dim(d: &VectorMultiset) -> usize {
    let words: BTreeSet<Vec<FieldElement>> = all_codewords(d).into_iter().collect();
    let q = d.field().order() as usize;
    let mut size = words.len();
    let mut dim = 0;
    while size > 1 {
        size /= q;
        dim += 1;
    }
    dim
}

/// Minimal iff no nonzero codeword has its support inside another's without
/// being a scalar multiple of it.
pub fn naive_is_minimal(d: &VectorMultiset) -> bool {
    let f = d.field();
    let words: Vec<Vec<FieldElement>> = all_codewords(d)
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|c| wt(c) > 0)
        .collect();
    for c in &words {
        for c2 in &words {
            let inside = c2.iter().zip(c).all(|(y, x)| y.is_zero() || !x.is_zero());
            if !inside {
                continue;
            }
            let multiple = f
                .units()
                .any(|a| c2.iter().zip(c).all(|(&y, &x)| f.mul(a, y) == x));
            if !multiple {
                return false;
            }
        }
    }
    true
}

/// Hyperplanes of GF(q)^k as dual vectors, one per projective point, found
/// by scanning every nonzero vector with leading coefficient one.
pub fn naive_hyperplanes(f: &FieldSpec, k: usize) -> Vec<GFVector> {
    all_vectors(f, k)
        .filter(|v| v.coords().iter().find(|x| !x.is_zero()) == Some(&FieldElement::ONE))
        .collect()
}

fn section(d: &VectorMultiset, a: &GFVector) -> BTreeSet<GFVector> {
    let f = d.field();
    d.points()
        .filter(|x| inner(f, a.coords(), x.coords()).is_zero())
        .cloned()
        .collect()
}

/// No hyperplane section of `D` is contained in a different one.
pub fn naive_is_cutting(d: &VectorMultiset) -> bool {
    let hs = naive_hyperplanes(d.field(), d.ambient_dim());
    let sections: Vec<BTreeSet<GFVector>> = hs.iter().map(|a| section(d, a)).collect();
    for (i, s) in sections.iter().enumerate() {
        for (j, t) in sections.iter().enumerate() {
            if i != j && s.is_subset(t) {
                return false;
            }
        }
    }
    true
}

/// Rank by counting the distinct linear combinations: `q^rank` of them.
pub fn naive_rank(f: &FieldSpec, k: usize, vs: &[GFVector]) -> usize {
    let mut span: BTreeSet<GFVector> = BTreeSet::from([GFVector::zero(k)]);
    for v in vs {
        let mut next = BTreeSet::new();
        for s in &span {
            for a in f.elements() {
                next.insert(s.add(f, &v.scale(f, a)));
            }
        }
        span = next;
    }
    let q = f.order() as usize;
    let mut size = span.len();
    let mut r = 0;
    while size > 1 {
        size /= q;
        r += 1;
    }
    r
}

/// Every hyperplane section spans a `(k-1)`-dimensional space.
pub fn naive_sections_span(d: &VectorMultiset) -> bool {
    let k = d.ambient_dim();
    naive_hyperplanes(d.field(), k).iter().all(|a| {
        let s: Vec<GFVector> = section(d, a).into_iter().collect();
        naive_rank(d.field(), k, &s) == k - 1
    })
}

/// Least number of elements of `D`, with multiplicity, in a hyperplane.
pub fn naive_hyperplane_fold(d: &VectorMultiset) -> usize {
    let f = d.field();
    naive_hyperplanes(f, d.ambient_dim())
        .iter()
        .map(|a| {
            d.iter()
                .filter(|x| inner(f, a.coords(), x.coords()).is_zero())
                .count()
        })
        .min()
        .unwrap()
}

/// Least count over codimension-2 subspaces, each given by a pair of
/// independent hyperplanes (every such subspace is visited several times).
pub fn naive_codim2_fold(d: &VectorMultiset) -> usize {
    let f = d.field();
    let k = d.ambient_dim();
    let hs = naive_hyperplanes(f, k);
    let mut best = usize::MAX;
    for (i, a) in hs.iter().enumerate() {
        for b in &hs[i + 1..] {
            let c = d
                .iter()
                .filter(|x| {
                    inner(f, a.coords(), x.coords()).is_zero()
                        && inner(f, b.coords(), x.coords()).is_zero()
                })
                .count();
            best = best.min(c);
        }
    }
    best
}

pub fn random_nonzero(f: &FieldSpec, k: usize, rng: &mut impl Rng) -> GFVector {
    loop {
        let v: Vec<u32> = (0..k).map(|_| rng.gen_range(0..f.order())).collect();
        if v.iter().any(|&x| x != 0) {
            return GFVector::from_values(f, &v).unwrap();
        }
    }
}

/// A random multiset of `1..=max_len` nonzero vectors.
pub fn random_multiset(
    f: &FieldSpec,
    k: usize,
    max_len: usize,
    rng: &mut impl Rng,
) -> VectorMultiset {
    let n = rng.gen_range(1..=max_len);
    VectorMultiset::new(f, k, (0..n).map(|_| random_nonzero(f, k, rng))).unwrap()
}

/// A random subset of the projective points, each kept with probability `p`.
pub fn random_projective(f: &FieldSpec, k: usize, p: f64, rng: &mut impl Rng) -> VectorMultiset {
    loop {
        let pts: Vec<GFVector> = mincode_core::linalg::projective_points(f, k)
            .into_iter()
            .filter(|_| rng.gen_bool(p))
            .collect();
        if !pts.is_empty() {
            return VectorMultiset::new(f, k, pts).unwrap();
        }
    }
}
