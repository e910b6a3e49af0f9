//! Blocking, t-fold and cutting properties of vector multisets, and the
//! minimality decision through cutting blocking sets.

use alloc::vec::Vec;

use crate::code::{EnumerationGuard, LinearCode, Method, MinimalityReport};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::linalg::{
    dot_slices, proj_normalize, project_multiset, projective_points, span_dim, Echelon, GFVector,
    VectorMultiset,
};
use crate::support::SupportTable;

pub const DEFAULT_MAX_SUBSPACES: u64 = 1_000_000;

/// Upper bound on the number of subspaces a scan may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceGuard {
    pub max_subspaces: u64,
}

impl Default for SubspaceGuard {
    fn default() -> Self {
        SubspaceGuard {
            max_subspaces: DEFAULT_MAX_SUBSPACES,
        }
    }
}

impl SubspaceGuard {
    pub fn new(max_subspaces: u64) -> Self {
        SubspaceGuard { max_subspaces }
    }

    fn check(&self, count: Option<u64>) -> Result<u64> {
        match count {
            Some(c) if c <= self.max_subspaces => Ok(c),
            other => Err(Error::TooManySubspaces(other.unwrap_or(u64::MAX))),
        }
    }
}

/// `theta_s = (q^{s+1} - 1)/(q - 1)`, the number of points of PG(s, q).
pub fn theta(s: u32, q: u64) -> u64 {
    (0..=s).map(|i| q.pow(i)).sum()
}

/// Number of `s`-dimensional subspaces of GF(q)^k.
pub fn gaussian_binomial(k: usize, s: usize, q: u64) -> Option<u64> {
    if s > k {
        return Some(0);
    }
    let q = u128::from(q);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..s {
        num = num.checked_mul(q.checked_pow((k - i) as u32)? - 1)?;
        den = den.checked_mul(q.checked_pow((i + 1) as u32)? - 1)?;
    }
    u64::try_from(num / den).ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingReport {
    pub s: usize,
    pub is_blocking: bool,
    /// Minimum of `|D* ∩ W|` over codimension-`s` subspaces `W`, with multiplicity.
    pub fold: usize,
    /// `s` independent dual vectors cutting out a subspace that attains `fold`.
    pub witness_subspace: Vec<GFVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CuttingWitness {
    /// `H_a ∩ D ⊆ H_{a'}` with `<a> != <a'>`.
    Pair { a: GFVector, a_prime: GFVector },
    /// `dim Span(H_a ∩ D) < k - 1`.
    Hyperplane(GFVector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuttingReport {
    pub is_cutting: bool,
    pub witness: Option<CuttingWitness>,
}

impl CuttingReport {
    fn cutting() -> Self {
        CuttingReport {
            is_cutting: true,
            witness: None,
        }
    }

    fn failed(witness: CuttingWitness) -> Self {
        CuttingReport {
            is_cutting: false,
            witness: Some(witness),
        }
    }
}

/// Number of elements of `D` (with multiplicity) on which every dual vector vanishes.
fn count_in_subspace(d: &VectorMultiset, duals: &[GFVector]) -> usize {
    let field = d.field();
    d.entries()
        .iter()
        .filter(|(v, _)| {
            duals
                .iter()
                .all(|a| dot_slices(field, a.coords(), v.coords()).is_zero())
        })
        .map(|(_, m)| m)
        .sum()
}

/// Calls `visit` with the rows of every `s x k` reduced row-echelon matrix
/// over GF(q): pivot sets in lexicographic order, then free entries.
fn for_each_echelon_form(
    field: &FieldSpec,
    k: usize,
    s: usize,
    mut visit: impl FnMut(&[GFVector]),
) {
    let q = field.order();
    let mut pivots: Vec<usize> = (0..s).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..s)
            .flat_map(|r| {
                let pivots = &pivots;
                (pivots[r] + 1..k)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut rows: Vec<GFVector> = pivots.iter().map(|&p| GFVector::unit(k, p)).collect();
        let mut digits = alloc::vec![0u32; free.len()];
        loop {
            for (&(r, c), &d) in free.iter().zip(&digits) {
                let mut coords = rows[r].coords().to_vec();
                coords[c] = FieldElement(d);
                rows[r] = GFVector::new(coords);
            }
            visit(&rows);
            let mut pos = digits.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
        // next combination
        let mut i = s;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < k - s + i {
                pivots[i] += 1;
                for j in i + 1..s {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The exact fold `t`: the least number of elements of `D*` (with
/// multiplicity) in a codimension-`s` subspace, plus a subspace attaining it.
pub fn fold_multiplicity(
    d: &VectorMultiset,
    s: usize,
    guard: SubspaceGuard,
) -> Result<BlockingReport> {
    let k = d.ambient_dim();
    if s == 0 || s > k {
        return Err(Error::BadRange("codimension s must satisfy 1 <= s <= k"));
    }
    let field = d.field();
    let q = u64::from(field.order());
    guard.check(gaussian_binomial(k, s, q))?;
    let mut best: Option<(usize, Vec<GFVector>)> = None;
    let mut consider = |duals: &[GFVector]| {
        let c = count_in_subspace(d, duals);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, duals.to_vec()));
        }
    };
    if s == 1 {
        for a in projective_points(field, k) {
            consider(core::slice::from_ref(&a));
        }
    } else {
        for_each_echelon_form(field, k, s, consider);
    }
    let (fold, witness_subspace) = best.expect("at least one subspace exists");
    Ok(BlockingReport {
        s,
        is_blocking: fold >= 1,
        fold,
        witness_subspace,
    })
}

/// Recounts the witness subspace of a blocking report.
pub fn verify_blocking_report(d: &VectorMultiset, report: &BlockingReport) -> bool {
    let field = d.field();
    span_dim(field, d.ambient_dim(), &report.witness_subspace) == report.s
        && count_in_subspace(d, &report.witness_subspace) == report.fold
        && report.is_blocking == (report.fold >= 1)
}

/// Zero-set rows `{i : <a, x_i> = 0}` over the distinct points of `D`, one
/// row per hyperplane in canonical order.
fn hyperplane_zero_sets(d: &VectorMultiset, hyperplanes: &[GFVector]) -> SupportTable {
    let field = d.field();
    let points: Vec<&GFVector> = d.points().collect();
    let mut table = SupportTable::with_capacity(points.len(), hyperplanes.len());
    for a in hyperplanes {
        table.push(
            points
                .iter()
                .map(|x| dot_slices(field, a.coords(), x.coords()).is_zero()),
        );
    }
    table
}

fn hyperplanes_checked(field: &FieldSpec, k: usize, guard: SubspaceGuard) -> Result<Vec<GFVector>> {
    guard.check(gaussian_binomial(k, 1, u64::from(field.order())))?;
    Ok(projective_points(field, k))
}

/// Cutting test straight from the definition: no hyperplane section of `D`
/// lies inside a different hyperplane, and `D` meets every hyperplane.
pub fn is_cutting_definition(d: &VectorMultiset, guard: SubspaceGuard) -> Result<CuttingReport> {
    let hyperplanes = hyperplanes_checked(d.field(), d.ambient_dim(), guard)?;
    let zeros = hyperplane_zero_sets(d, &hyperplanes);
    if let Some((outer, inner)) = zeros.first_containment(0..zeros.len()) {
        return Ok(CuttingReport::failed(CuttingWitness::Pair {
            a: hyperplanes[inner].clone(),
            a_prime: hyperplanes[outer].clone(),
        }));
    }
    if let Some(i) = (0..zeros.len()).find(|&i| zeros.weight(i) == 0) {
        return Ok(CuttingReport::failed(CuttingWitness::Hyperplane(
            hyperplanes[i].clone(),
        )));
    }
    Ok(CuttingReport::cutting())
}

fn section_rank(d: &VectorMultiset, a: &GFVector) -> usize {
    let field = d.field();
    let k = d.ambient_dim();
    let mut ech = Echelon::new(field, k, core::iter::empty());
    for x in d.points() {
        if dot_slices(field, a.coords(), x.coords()).is_zero()
            && ech.insert(field, x)
            && ech.rank() + 1 == k
        {
            break;
        }
    }
    ech.rank()
}

/// Cutting test for projective sets: every hyperplane section spans the
/// hyperplane.
pub fn is_cutting_span(d: &VectorMultiset, guard: SubspaceGuard) -> Result<CuttingReport> {
    if !d.is_projective() {
        return Err(Error::NotProjective);
    }
    let k = d.ambient_dim();
    for a in hyperplanes_checked(d.field(), k, guard)? {
        if section_rank(d, &a) + 1 < k {
            return Ok(CuttingReport::failed(CuttingWitness::Hyperplane(a)));
        }
    }
    Ok(CuttingReport::cutting())
}

/// Recomputes a cutting witness against `D`.
pub fn verify_cutting_witness(d: &VectorMultiset, witness: &CuttingWitness) -> bool {
    let field = d.field();
    let k = d.ambient_dim();
    match witness {
        CuttingWitness::Pair { a, a_prime } => {
            let (Ok(na), Ok(nb)) = (proj_normalize(field, a), proj_normalize(field, a_prime))
            else {
                return false;
            };
            na != nb
                && d.points().all(|x| {
                    !dot_slices(field, a.coords(), x.coords()).is_zero()
                        || dot_slices(field, a_prime.coords(), x.coords()).is_zero()
                })
        }
        CuttingWitness::Hyperplane(a) => !a.is_zero() && section_rank(d, a) + 1 < k,
    }
}

/// Minimality through cutting blocking sets: `C` is minimal exactly when
/// the projection of its defining set, taken inside `Span(D)`, is cutting.
/// A failing hyperplane `a` yields a second dual vector `a'` vanishing on
/// the whole section, so `Supp(c_{a'}) ⊆ Supp(c_a)`.
pub fn is_minimal_cutting(
    code: &LinearCode,
    space: EnumerationGuard,
    guard: SubspaceGuard,
) -> Result<MinimalityReport> {
    space.check(code.field().order(), code.ambient_dim())?;
    if code.dim() == 1 {
        return Ok(MinimalityReport::minimal(Method::Cutting));
    }
    let field = code.field();
    let reduced = project_multiset(&code.reduced_defining_set());
    let report = is_cutting_span(&reduced, guard)?;
    let Some(CuttingWitness::Hyperplane(a)) = report.witness else {
        return Ok(MinimalityReport::minimal(Method::Cutting));
    };
    let section: Vec<&GFVector> = reduced
        .points()
        .filter(|x| dot_slices(field, a.coords(), x.coords()).is_zero())
        .collect();
    let ech = Echelon::new(field, code.dim(), section.iter().copied());
    let a_prime = ech
        .null_space(field)
        .into_iter()
        .map(|b| proj_normalize(field, &b).expect("null space basis vectors are nonzero"))
        .find(|b| *b != a)
        .expect("annihilator of a small section has dimension at least 2");
    Ok(MinimalityReport::not_minimal(
        Method::Cutting,
        code.lift_message(&a),
        code.lift_message(&a_prime),
    ))
}

/// An affine hyperplane `{x : <a, x> = b}` of GF(q)^m missed by `points`,
/// if any. `None` means the points form an affine blocking set.
pub fn affine_blocking_gap(
    field: &FieldSpec,
    m: usize,
    points: &[GFVector],
) -> Option<(GFVector, FieldElement)> {
    for a in projective_points(field, m) {
        let mut hit = alloc::vec![false; field.order() as usize];
        for x in points {
            hit[dot_slices(field, a.coords(), x.coords()).0 as usize] = true;
        }
        if let Some(b) = hit.iter().position(|h| !h) {
            return Some((a, FieldElement(b as u32)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;
    use crate::linalg::all_vectors;

    #[test]
    fn theta_values() {
        assert_eq!(theta(0, 7), 1);
        assert_eq!(theta(2, 2), 7);
        assert_eq!(theta(1, 4), 5);
    }

    #[test]
    fn gaussian_binomial_counts_echelon_forms() {
        for (q, k, s) in [
            (2u64, 4usize, 2usize),
            (3, 4, 2),
            (2, 5, 3),
            (4, 3, 2),
            (3, 3, 3),
        ] {
            let field = field_of_order(q).unwrap();
            let mut count = 0u64;
            let mut seen = alloc::collections::BTreeSet::new();
            for_each_echelon_form(&field, k, s, |rows| {
                count += 1;
                assert_eq!(span_dim(&field, k, rows), s);
                seen.insert(rows.to_vec());
            });
            assert_eq!(Some(count), gaussian_binomial(k, s, q));
            assert_eq!(seen.len() as u64, count);
        }
    }

    #[test]
    fn line_in_plane_has_fold_one() {
        let f3 = field_of_order(3).unwrap();
        // The points of the line x_3 = 0 in PG(2,3).
        let line: Vec<_> = projective_points(&f3, 3)
            .into_iter()
            .filter(|v| v.get(2).is_zero())
            .collect();
        let d = VectorMultiset::new(&f3, 3, line).unwrap();
        let r = fold_multiplicity(&d, 1, SubspaceGuard::default()).unwrap();
        assert_eq!(r.fold, 1);
        assert!(r.is_blocking);
        assert!(verify_blocking_report(&d, &r));
    }

    #[test]
    fn whole_plane_fold() {
        let f2 = field_of_order(2).unwrap();
        let d = VectorMultiset::new(&f2, 3, projective_points(&f2, 3)).unwrap();
        let r = fold_multiplicity(&d, 1, SubspaceGuard::default()).unwrap();
        assert_eq!(r.fold as u64, theta(1, 2));
        let r2 = fold_multiplicity(&d, 2, SubspaceGuard::default()).unwrap();
        assert_eq!(r2.fold, 1);
        assert!(verify_blocking_report(&d, &r2));
        let r3 = fold_multiplicity(&d, 3, SubspaceGuard::default()).unwrap();
        assert_eq!(r3.fold, 0);
        assert!(fold_multiplicity(&d, 4, SubspaceGuard::default()).is_err());
        assert_eq!(
            fold_multiplicity(&d, 1, SubspaceGuard::new(3)),
            Err(Error::TooManySubspaces(7))
        );
    }

    #[test]
    fn whole_space_is_cutting() {
        let f2 = field_of_order(2).unwrap();
        let d = VectorMultiset::new(&f2, 3, all_vectors(&f2, 3).skip(1)).unwrap();
        assert!(
            is_cutting_definition(&d, SubspaceGuard::default())
                .unwrap()
                .is_cutting
        );
        assert!(
            is_cutting_span(&d, SubspaceGuard::default())
                .unwrap()
                .is_cutting
        );
    }

    #[test]
    fn single_hyperplane_is_not_cutting() {
        let f3 = field_of_order(3).unwrap();
        let a = GFVector::unit(3, 0);
        let hyper: Vec<_> = all_vectors(&f3, 3)
            .skip(1)
            .filter(|x| dot_slices(&f3, a.coords(), x.coords()).is_zero())
            .collect();
        let d = VectorMultiset::new(&f3, 3, hyper).unwrap();
        let r = is_cutting_definition(&d, SubspaceGuard::default()).unwrap();
        assert!(!r.is_cutting);
        assert!(verify_cutting_witness(&d, r.witness.as_ref().unwrap()));
        assert_eq!(
            is_cutting_span(&d, SubspaceGuard::default()),
            Err(Error::NotProjective)
        );
        let p = project_multiset(&d);
        let r = is_cutting_span(&p, SubspaceGuard::default()).unwrap();
        assert!(!r.is_cutting);
        assert!(verify_cutting_witness(&p, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn affine_gap() {
        let f2 = field_of_order(2).unwrap();
        let pts = [
            GFVector::zero(2),
            GFVector::unit(2, 0),
            GFVector::unit(2, 1),
        ];
        assert_eq!(affine_blocking_gap(&f2, 2, &pts), None);
        let gap = affine_blocking_gap(&f2, 2, &pts[..2]);
        assert!(gap.is_some());
    }
}
