//! The code `C_D = {(<v, g_0>, ..., <v, g_{n-1}>) : v in GF(q)^k}` of a
//! defining multiset, its weight distribution, and the exhaustive
//! minimality test.
//!
//! Messages are enumerated in the coordinates of `Span(D)`, so every
//! nonzero message of the reduced space gives a distinct nonzero codeword
//! and proportional codewords come from proportional messages. One
//! leading-one message per projective point suffices for both the weight
//! distribution and the support comparison.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::linalg::{dot_slices, projective_points, space_size, Echelon, GFVector, VectorMultiset};
use crate::support::SupportTable;

pub const DEFAULT_MAX_SPACE: u64 = 1 << 24;

/// Upper bound on `q^k` for anything that enumerates the message space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationGuard {
    pub max_space: u64,
}

impl Default for EnumerationGuard {
    fn default() -> Self {
        EnumerationGuard {
            max_space: DEFAULT_MAX_SPACE,
        }
    }
}

impl EnumerationGuard {
    pub fn new(max_space: u64) -> Self {
        EnumerationGuard { max_space }
    }

    pub fn check(&self, q: u32, k: usize) -> Result<()> {
        let size = space_size(q, k).unwrap_or(u64::MAX);
        if size > self.max_space {
            Err(Error::TooLarge(size))
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    defining: VectorMultiset,
    columns: Vec<GFVector>,
    basis: Echelon,
    /// Column `i` in coordinates of `basis`, row-major `n x dim`.
    reduced: Vec<FieldElement>,
}

/// Builds `C_D`. Columns follow the canonical order of `D`.
pub fn build_code(d: &VectorMultiset) -> Result<LinearCode> {
    if d.is_empty() {
        return Err(Error::EmptyDefiningSet);
    }
    let field = d.field();
    let basis = Echelon::new(field, d.ambient_dim(), d.points());
    let columns: Vec<GFVector> = d.iter().cloned().collect();
    let mut reduced = Vec::with_capacity(columns.len() * basis.rank());
    for g in &columns {
        let coords = basis
            .coordinates(field, g)
            .expect("every column lies in the span of D");
        reduced.extend(coords);
    }
    Ok(LinearCode {
        defining: d.clone(),
        columns,
        basis,
        reduced,
    })
}

impl LinearCode {
    pub fn field(&self) -> &FieldSpec {
        self.defining.field()
    }

    pub fn defining_set(&self) -> &VectorMultiset {
        &self.defining
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.defining.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn columns(&self) -> &[GFVector] {
        &self.columns
    }

    pub fn span_basis(&self) -> &Echelon {
        &self.basis
    }

    #[inline]
    pub fn reduced_column(&self, i: usize) -> &[FieldElement] {
        let dim = self.dim();
        &self.reduced[i * dim..(i + 1) * dim]
    }

    /// The defining multiset rewritten in coordinates of `Span(D)`.
    pub fn reduced_defining_set(&self) -> VectorMultiset {
        let cols = (0..self.n()).map(|i| GFVector::new(self.reduced_column(i).to_vec()));
        VectorMultiset::new(self.field(), self.dim(), cols).expect("reduced columns are nonzero")
    }

    /// An ambient message whose codeword equals that of the reduced message `u`.
    pub fn lift_message(&self, u: &GFVector) -> GFVector {
        let mut coords = GFVector::zero(self.ambient_dim()).coords().to_vec();
        for (&p, &x) in self.basis.pivots().iter().zip(u.coords()) {
            coords[p] = x;
        }
        GFVector::new(coords)
    }

    /// Weight of the codeword of reduced message `u`.
    pub fn reduced_weight(&self, u: &[FieldElement]) -> usize {
        let field = self.field();
        (0..self.n())
            .filter(|&i| !dot_slices(field, u, self.reduced_column(i)).is_zero())
            .count()
    }

    fn reduced_support(&self, u: &[FieldElement]) -> impl Iterator<Item = bool> + '_ {
        let field = self.field().clone();
        let u = u.to_vec();
        (0..self.n()).map(move |i| !dot_slices(&field, &u, self.reduced_column(i)).is_zero())
    }
}

/// `c_v = (<v, g_0>, ..., <v, g_{n-1}>)`.
pub fn codeword_of(v: &GFVector, code: &LinearCode) -> Result<GFVector> {
    if v.len() != code.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: code.ambient_dim(),
            got: v.len(),
        });
    }
    let field = code.field();
    Ok(GFVector::new(
        code.columns
            .iter()
            .map(|g| dot_slices(field, v.coords(), g.coords()))
            .collect(),
    ))
}

/// Leading-one messages of the reduced space, one per codeword line.
pub fn message_representatives(code: &LinearCode) -> Vec<GFVector> {
    projective_points(code.field(), code.dim())
}

/// Nonzero weight counts contributed by `reps` and their nonzero multiples.
pub fn weight_counts(code: &LinearCode, reps: &[GFVector]) -> BTreeMap<usize, u64> {
    let units = u64::from(code.field().order() - 1);
    let mut counts = BTreeMap::new();
    for u in reps {
        *counts.entry(code.reduced_weight(u.coords())).or_insert(0) += units;
    }
    counts
}

pub fn weight_distribution(
    code: &LinearCode,
    guard: EnumerationGuard,
) -> Result<WeightDistribution> {
    guard.check(code.field().order(), code.ambient_dim())?;
    let reps = message_representatives(code);
    Ok(WeightDistribution::from_counts(weight_counts(code, &reps)))
}

/// Support bit rows of the codewords of `reps`, in order.
pub fn support_table(code: &LinearCode, reps: &[GFVector]) -> SupportTable {
    let mut table = SupportTable::with_capacity(code.n(), reps.len());
    for u in reps {
        table.push(code.reduced_support(u.coords()));
    }
    table
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    Cutting,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::Cutting => "cutting",
        }
    }
}

/// Two messages `(v, v')` with `Supp(c_{v'}) ⊆ Supp(c_v)` and the codewords
/// linearly independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityWitness {
    pub outer: GFVector,
    pub inner: GFVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub is_minimal: bool,
    pub witness: Option<MinimalityWitness>,
    pub method: Method,
}

impl MinimalityReport {
    pub fn minimal(method: Method) -> Self {
        MinimalityReport {
            is_minimal: true,
            witness: None,
            method,
        }
    }

    pub fn not_minimal(method: Method, outer: GFVector, inner: GFVector) -> Self {
        MinimalityReport {
            is_minimal: false,
            witness: Some(MinimalityWitness { outer, inner }),
            method,
        }
    }
}

/// Turns the result of a containment scan over `reps` into a report.
pub fn exhaustive_report(
    code: &LinearCode,
    reps: &[GFVector],
    containment: Option<(usize, usize)>,
) -> MinimalityReport {
    match containment {
        None => MinimalityReport::minimal(Method::Exhaustive),
        Some((outer, inner)) => MinimalityReport::not_minimal(
            Method::Exhaustive,
            code.lift_message(&reps[outer]),
            code.lift_message(&reps[inner]),
        ),
    }
}

/// Compares the supports of every ordered pair of non-proportional
/// codewords. The first containment in canonical order is the witness.
pub fn is_minimal_exhaustive(
    code: &LinearCode,
    guard: EnumerationGuard,
) -> Result<MinimalityReport> {
    guard.check(code.field().order(), code.ambient_dim())?;
    let reps = message_representatives(code);
    let table = support_table(code, &reps);
    let hit = table.first_containment(0..table.len());
    Ok(exhaustive_report(code, &reps, hit))
}

/// Recomputes a witness: both codewords nonzero, not proportional, and the
/// support of `inner` inside that of `outer`.
pub fn verify_witness(code: &LinearCode, witness: &MinimalityWitness) -> Result<bool> {
    let field = code.field();
    let c = codeword_of(&witness.outer, code)?;
    let c2 = codeword_of(&witness.inner, code)?;
    if c.is_zero() || c2.is_zero() {
        return Ok(false);
    }
    let contained = c2
        .coords()
        .iter()
        .zip(c.coords())
        .all(|(y, x)| y.is_zero() || !x.is_zero());
    let proportional = field.units().any(|a| c2.scale(field, a) == c);
    Ok(contained && !proportional)
}

/// `w_min / w_max > (q-1)/q`, compared as integers.
pub fn ab_condition(wd: &WeightDistribution, q: u32) -> bool {
    match (wd.w_min(), wd.w_max()) {
        (Some(lo), Some(hi)) => u64::from(q) * lo as u64 > u64::from(q - 1) * hi as u64,
        _ => true,
    }
}

pub fn is_projective(code: &LinearCode) -> bool {
    code.defining.is_projective()
}

/// `A_w` for the nonzero weights; `A_0 = 1` is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    /// Merges `(w, A_w)` pairs, summing repeated weights. Zero counts and
    /// weight 0 are dropped.
    pub fn from_counts(pairs: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut counts = BTreeMap::new();
        for (w, c) in pairs {
            if w > 0 && c > 0 {
                *counts.entry(w).or_insert(0) += c;
            }
        }
        WeightDistribution { counts }
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn get(&self, w: usize) -> u64 {
        if w == 0 {
            1
        } else {
            self.counts.get(&w).copied().unwrap_or(0)
        }
    }

    /// Number of codewords, `A_0` included.
    pub fn total(&self) -> u64 {
        1 + self.counts.values().sum::<u64>()
    }

    pub fn w_min(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn w_max(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// `1+6z^30+8z^36+...`
    pub fn enumerator(&self) -> String {
        let mut s = String::from("1");
        for (w, c) in &self.counts {
            s.push_str(&format!("+{c}z^{w}"));
        }
        s
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.enumerator())
    }
}

impl FromIterator<(usize, u64)> for WeightDistribution {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        Self::from_counts(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;
    use crate::linalg::all_vectors;
    use alloc::vec;

    fn e(field: &FieldSpec, k: usize, i: usize, a: u32) -> GFVector {
        GFVector::unit(k, i).scale(field, FieldElement(a))
    }

    #[test]
    fn tiny_code() {
        let f3 = field_of_order(3).unwrap();
        let d = VectorMultiset::new(&f3, 2, [e(&f3, 2, 0, 1), e(&f3, 2, 0, 2)]).unwrap();
        let code = build_code(&d).unwrap();
        assert_eq!((code.n(), code.dim()), (2, 1));
        let wd = weight_distribution(&code, EnumerationGuard::default()).unwrap();
        assert_eq!(wd.counts().iter().collect::<Vec<_>>(), [(&2, &2)]);
        assert_eq!(wd.total(), 3);
        assert!(ab_condition(&wd, 3));
        assert!(!is_projective(&code));
        assert!(
            is_minimal_exhaustive(&code, EnumerationGuard::default())
                .unwrap()
                .is_minimal
        );
    }

    #[test]
    fn empty_defining_set() {
        let f2 = field_of_order(2).unwrap();
        let d = VectorMultiset::new(&f2, 3, vec![]).unwrap();
        assert!(matches!(build_code(&d), Err(Error::EmptyDefiningSet)));
    }

    #[test]
    fn codeword_linearity_and_zero() {
        let f4 = field_of_order(4).unwrap();
        let d = VectorMultiset::new(&f4, 3, all_vectors(&f4, 3).skip(1).take(20)).unwrap();
        let code = build_code(&d).unwrap();
        assert!(codeword_of(&GFVector::zero(3), &code).unwrap().is_zero());
        let v = GFVector::from_values(&f4, &[1, 2, 3]).unwrap();
        let c = codeword_of(&v, &code).unwrap();
        for a in f4.units() {
            assert_eq!(
                codeword_of(&v.scale(&f4, a), &code).unwrap(),
                c.scale(&f4, a)
            );
        }
        assert!(matches!(
            codeword_of(&GFVector::zero(2), &code),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn guard_rejects_large_space() {
        let f2 = field_of_order(2).unwrap();
        let d = VectorMultiset::new(&f2, 10, [GFVector::unit(10, 0)]).unwrap();
        let code = build_code(&d).unwrap();
        assert_eq!(
            weight_distribution(&code, EnumerationGuard::new(512)),
            Err(Error::TooLarge(1024))
        );
    }

    #[test]
    fn simplex_is_minimal() {
        let f3 = field_of_order(3).unwrap();
        let d = VectorMultiset::new(&f3, 3, projective_points(&f3, 3)).unwrap();
        let code = build_code(&d).unwrap();
        let wd = weight_distribution(&code, EnumerationGuard::default()).unwrap();
        assert_eq!(wd.counts().iter().collect::<Vec<_>>(), [(&9, &26)]);
        assert!(
            is_minimal_exhaustive(&code, EnumerationGuard::default())
                .unwrap()
                .is_minimal
        );
    }

    #[test]
    fn non_spanning_set_is_reduced() {
        // Span is the plane x_3 = 0 inside GF(2)^3.
        let f2 = field_of_order(2).unwrap();
        let d = VectorMultiset::from_values(&f2, 3, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]])
            .unwrap();
        let code = build_code(&d).unwrap();
        assert_eq!(code.dim(), 2);
        let wd = weight_distribution(&code, EnumerationGuard::default()).unwrap();
        assert_eq!(wd.total(), 4);
        assert_eq!(wd.counts().iter().collect::<Vec<_>>(), [(&2, &3)]);
    }

    #[test]
    fn witness_found_and_verified() {
        // Columns e1, e2 only: c_{e1} and c_{e1+e2} have nested supports.
        let f2 = field_of_order(2).unwrap();
        let d = VectorMultiset::from_values(&f2, 2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let code = build_code(&d).unwrap();
        let report = is_minimal_exhaustive(&code, EnumerationGuard::default()).unwrap();
        assert!(!report.is_minimal);
        let w = report.witness.unwrap();
        assert!(verify_witness(&code, &w).unwrap());
    }

    #[test]
    fn enumerator_format() {
        let wd = WeightDistribution::from_counts([(30, 6), (36, 8), (30, 0), (0, 5)]);
        assert_eq!(wd.enumerator(), "1+6z^30+8z^36");
        assert_eq!(wd.get(0), 1);
        assert_eq!((wd.w_min(), wd.w_max()), (Some(30), Some(36)));
    }
}
