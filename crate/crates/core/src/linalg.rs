//! Vectors over GF(q), row reduction, projective normalization and
//! vector multisets.
//!
//! The bilinear form is the standard dot product `sum v_i w_i`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// A vector of GF(q) coordinates. Ordering is lexicographic on encoded values.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GFVector(Vec<FieldElement>);

impl GFVector {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        GFVector(coords)
    }

    /// Builds a vector from encoded values, checking each against the field.
    pub fn from_values(field: &FieldSpec, values: &[u32]) -> Result<Self> {
        values
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>>>()
            .map(GFVector)
    }

    pub fn zero(k: usize) -> Self {
        GFVector(vec![FieldElement::ZERO; k])
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn unit(k: usize, i: usize) -> Self {
        let mut v = Self::zero(k);
        v.0[i] = FieldElement::ONE;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().map(|x| x.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn get(&self, i: usize) -> FieldElement {
        self.0[i]
    }

    pub fn scale(&self, field: &FieldSpec, a: FieldElement) -> GFVector {
        GFVector(self.0.iter().map(|&x| field.mul(a, x)).collect())
    }

    pub fn add(&self, field: &FieldSpec, other: &GFVector) -> GFVector {
        GFVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&x, &y)| field.add(x, y))
                .collect(),
        )
    }

    /// `self` with one more coordinate appended.
    pub fn extended(&self, last: FieldElement) -> GFVector {
        let mut coords = self.0.clone();
        coords.push(last);
        GFVector(coords)
    }

    fn check(&self, field: &FieldSpec) -> Result<()> {
        match self.0.iter().find(|x| x.0 >= field.order()) {
            Some(bad) => Err(Error::InvalidElement {
                value: bad.0,
                q: field.order(),
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for GFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[inline]
pub(crate) fn dot_slices(
    field: &FieldSpec,
    a: &[FieldElement],
    b: &[FieldElement],
) -> FieldElement {
    a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| {
        field.add(acc, field.mul(x, y))
    })
}

pub fn dot(field: &FieldSpec, v: &GFVector, w: &GFVector) -> Result<FieldElement> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    Ok(dot_slices(field, &v.0, &w.0))
}

/// Hamming weight and 0-based support.
pub fn weight_support(v: &GFVector) -> (usize, Vec<usize>) {
    let support: Vec<usize> =
        v.0.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect();
    (support.len(), support)
}

pub fn weight(v: &GFVector) -> usize {
    v.0.iter().filter(|x| !x.is_zero()).count()
}

/// A basis in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    k: usize,
    rows: Vec<GFVector>,
    pivots: Vec<usize>,
}

impl Echelon {
    /// Row-reduces `vectors` (all of length `k`).
    pub fn new<'a>(
        field: &FieldSpec,
        k: usize,
        vectors: impl IntoIterator<Item = &'a GFVector>,
    ) -> Self {
        let mut ech = Echelon {
            k,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for v in vectors {
            if ech.rows.len() == k {
                break;
            }
            ech.insert(field, v);
        }
        ech
    }

    /// Adds `v` to the basis if it is independent; returns whether the rank grew.
    pub fn insert(&mut self, field: &FieldSpec, v: &GFVector) -> bool {
        let mut r = self.reduce(field, v);
        let Some(pivot) = r.0.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = field.inv(r.0[pivot]).expect("pivot is nonzero");
        r = r.scale(field, inv);
        for row in &mut self.rows {
            let c = row.0[pivot];
            if !c.is_zero() {
                let neg = field.neg(c);
                for (x, &y) in row.0.iter_mut().zip(&r.0) {
                    *x = field.add(*x, field.mul(neg, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, r);
        true
    }

    /// `v` minus its projection on the basis along pivot columns.
    pub fn reduce(&self, field: &FieldSpec, v: &GFVector) -> GFVector {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r.0[p];
            if !c.is_zero() {
                let neg = field.neg(c);
                for (x, &y) in r.0.iter_mut().zip(&row.0) {
                    *x = field.add(*x, field.mul(neg, y));
                }
            }
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[GFVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` with respect to the rows, if `v` lies in their span.
    pub fn coordinates(&self, field: &FieldSpec, v: &GFVector) -> Option<Vec<FieldElement>> {
        if self.reduce(field, v).is_zero() {
            Some(self.pivots.iter().map(|&p| v.0[p]).collect())
        } else {
            None
        }
    }

    /// A basis of `{x : <row, x> = 0 for every row}`.
    pub fn null_space(&self, field: &FieldSpec) -> Vec<GFVector> {
        let mut basis = Vec::new();
        for free in (0..self.k).filter(|c| !self.pivots.contains(c)) {
            let mut x = GFVector::zero(self.k);
            x.0[free] = FieldElement::ONE;
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x.0[p] = field.neg(row.0[free]);
            }
            basis.push(x);
        }
        basis
    }
}

/// Dimension of the span of `vectors` in GF(q)^k; 0 for no input.
pub fn span_dim<'a>(
    field: &FieldSpec,
    k: usize,
    vectors: impl IntoIterator<Item = &'a GFVector>,
) -> usize {
    Echelon::new(field, k, vectors).rank()
}

/// Scales `v` so its first nonzero coordinate is 1.
pub fn proj_normalize(field: &FieldSpec, v: &GFVector) -> Result<GFVector> {
    let lead = v.0.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    Ok(v.scale(field, field.inv(*lead)?))
}

/// Whether the first nonzero coordinate of `v` is 1.
pub fn is_normalized(v: &GFVector) -> bool {
    v.0.iter().find(|x| !x.is_zero()) == Some(&FieldElement::ONE)
}

/// `q^k`, or `None` on overflow.
pub fn space_size(q: u32, k: usize) -> Option<u64> {
    u64::from(q).checked_pow(u32::try_from(k).ok()?)
}

/// Iterates GF(q)^k in lexicographic order, starting at the zero vector.
#[derive(Clone, Debug)]
pub struct SpaceIter {
    q: u32,
    next: Option<Vec<FieldElement>>,
}

impl Iterator for SpaceIter {
    type Item = GFVector;

    fn next(&mut self) -> Option<GFVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for x in succ.iter_mut().rev() {
            if x.0 + 1 < self.q {
                x.0 += 1;
                carried = false;
                break;
            }
            x.0 = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(GFVector(current))
    }
}

pub fn all_vectors(field: &FieldSpec, k: usize) -> SpaceIter {
    SpaceIter {
        q: field.order(),
        next: Some(vec![FieldElement::ZERO; k]),
    }
}

/// One leading-one representative per 1-dimensional subspace of GF(q)^k,
/// in lexicographic order.
pub fn projective_points(field: &FieldSpec, k: usize) -> Vec<GFVector> {
    all_vectors(field, k).filter(is_normalized).collect()
}

/// An ordered multiset of nonzero vectors in GF(q)^k.
///
/// Entries are kept sorted lexicographically with multiplicities merged,
/// so iteration order is canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorMultiset {
    field: FieldSpec,
    k: usize,
    entries: Vec<(GFVector, usize)>,
}

impl VectorMultiset {
    pub fn new(
        field: &FieldSpec,
        k: usize,
        vectors: impl IntoIterator<Item = GFVector>,
    ) -> Result<Self> {
        let mut all: Vec<GFVector> = Vec::new();
        for v in vectors {
            if v.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    got: v.len(),
                });
            }
            v.check(field)?;
            if v.is_zero() {
                return Err(Error::ZeroVector);
            }
            all.push(v);
        }
        all.sort_unstable();
        let mut entries: Vec<(GFVector, usize)> = Vec::new();
        for v in all {
            match entries.last_mut() {
                Some((last, m)) if *last == v => *m += 1,
                _ => entries.push((v, 1)),
            }
        }
        Ok(VectorMultiset {
            field: field.clone(),
            k,
            entries,
        })
    }

    pub fn from_values(field: &FieldSpec, k: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let vectors = rows
            .iter()
            .map(|r| GFVector::from_values(field, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, k, vectors)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Ambient dimension k.
    pub fn ambient_dim(&self) -> usize {
        self.k
    }

    /// Size counted with multiplicity.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(GFVector, usize)] {
        &self.entries
    }

    /// Distinct vectors in canonical order.
    pub fn points(&self) -> impl Iterator<Item = &GFVector> + Clone {
        self.entries.iter().map(|(v, _)| v)
    }

    /// Every element, repeated by multiplicity, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &GFVector> + Clone {
        self.entries
            .iter()
            .flat_map(|(v, m)| core::iter::repeat_n(v, *m))
    }

    pub fn multiplicity(&self, v: &GFVector) -> usize {
        self.entries
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn span_dim(&self) -> usize {
        span_dim(&self.field, self.k, self.points())
    }

    /// No repeated entry and no two proportional entries.
    pub fn is_projective(&self) -> bool {
        self.entries.iter().all(|(_, m)| *m == 1) && project_multiset(self).len() == self.len()
    }

    /// Whether `a * D = D` for every nonzero scalar `a`, multiplicities included.
    pub fn is_scale_closed(&self) -> bool {
        self.entries.iter().all(|(v, m)| {
            self.field
                .units()
                .all(|a| self.multiplicity(&v.scale(&self.field, a)) == *m)
        })
    }

    /// `{a x : a in GF(q)*, x in D}` as a set.
    pub fn scale_closure(&self) -> VectorMultiset {
        let mut all = Vec::new();
        for v in self.points() {
            for a in self.field.units() {
                all.push(v.scale(&self.field, a));
            }
        }
        all.sort_unstable();
        all.dedup();
        VectorMultiset::new(&self.field, self.k, all).expect("scaling keeps vectors nonzero")
    }

    pub fn is_subset_of(&self, other: &VectorMultiset) -> bool {
        self.entries
            .iter()
            .all(|(v, m)| other.multiplicity(v) >= *m)
    }
}

/// The set of leading-one representatives of the points of `D`.
pub fn project_multiset(d: &VectorMultiset) -> VectorMultiset {
    let mut reps: Vec<GFVector> = d
        .points()
        .map(|v| proj_normalize(&d.field, v).expect("multiset has no zero vector"))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    VectorMultiset::new(&d.field, d.k, reps).expect("representatives are valid")
}
