//! Defining sets built from unions of hyperplanes, weight ranges and lifts,
//! together with closed-form weight distributions and the counting lemmas
//! behind them.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::blocking::{affine_blocking_gap, is_cutting_span, SubspaceGuard};
use crate::code::WeightDistribution;
use crate::error::{Error, Result};
use crate::gf::{field_of_order, FieldElement, FieldSpec};
use crate::linalg::{
    all_vectors, dot, dot_slices, project_multiset, span_dim, weight, GFVector, VectorMultiset,
};

/// `{x : <a, x> = b}`; linear when `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub a: GFVector,
    pub b: FieldElement,
}

impl LinearForm {
    pub fn new(a: GFVector, b: FieldElement) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(LinearForm { a, b })
    }

    pub fn linear(a: GFVector) -> Result<Self> {
        Self::new(a, FieldElement::ZERO)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneUnion {
    pub set: VectorMultiset,
    /// `dim Span(S)`.
    pub span_dim: usize,
    /// The union is cutting exactly when `dim Span(S) >= 3`.
    pub predicted_cutting: bool,
}

/// `D_S = (∪_{a in S} H_a) \ {0}`.
pub fn hyperplane_union(field: &FieldSpec, k: usize, s: &[GFVector]) -> Result<HyperplaneUnion> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    for a in s {
        if a.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: a.len(),
            });
        }
        GFVector::from_values(field, &a.values())?;
        if a.is_zero() {
            return Err(Error::ZeroVector);
        }
    }
    let points: Vec<GFVector> = all_vectors(field, k)
        .skip(1)
        .filter(|x| {
            s.iter()
                .any(|a| dot_slices(field, a.coords(), x.coords()).is_zero())
        })
        .collect();
    let total = crate::linalg::space_size(field.order(), k).unwrap_or(u64::MAX);
    if points.len() as u64 + 1 == total {
        return Err(Error::CoversWholeSpace);
    }
    let span = span_dim(field, k, s);
    Ok(HyperplaneUnion {
        set: VectorMultiset::new(field, k, points)?,
        span_dim: span,
        predicted_cutting: span >= 3,
    })
}

/// `{x != 0 : prod_i <a_i, x> = 0}` for linear forms; the same set as the
/// hyperplane union of the `a_i`.
pub fn forms_product_set(
    field: &FieldSpec,
    k: usize,
    forms: &[LinearForm],
) -> Result<VectorMultiset> {
    if forms.iter().any(|f| !f.b.is_zero()) {
        return Err(Error::AffineForm);
    }
    let duals: Vec<GFVector> = forms.iter().map(|f| f.a.clone()).collect();
    Ok(hyperplane_union(field, k, &duals)?.set)
}

fn zero_set_of(
    field: &FieldSpec,
    k: usize,
    keep: impl Fn(&GFVector) -> bool,
) -> Result<VectorMultiset> {
    VectorMultiset::new(field, k, all_vectors(field, k).skip(1).filter(|x| keep(x)))
}

/// `{x != 0 : x_1 ... x_h = 0}`, `3 <= h <= k`.
pub fn monomial_zero_set(field: &FieldSpec, k: usize, h: usize) -> Result<VectorMultiset> {
    if h < 3 || h > k {
        return Err(Error::BadRange("monomial set needs 3 <= h <= k"));
    }
    zero_set_of(field, k, |x| x.coords()[..h].iter().any(|c| c.is_zero()))
}

/// `{x != 0 : x_1 ... x_h (x_1 + ... + x_h) = 0}`, `2 <= h <= k`.
pub fn monomial_plus_sum_set(field: &FieldSpec, k: usize, h: usize) -> Result<VectorMultiset> {
    if h < 2 || h > k {
        return Err(Error::BadRange("sum-augmented set needs 2 <= h <= k"));
    }
    zero_set_of(field, k, |x| {
        let head = &x.coords()[..h];
        head.iter().any(|c| c.is_zero())
            || head
                .iter()
                .fold(FieldElement::ZERO, |acc, &c| field.add(acc, c))
                .is_zero()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightBound {
    AtMost,
    AtLeast,
}

/// `{x : 1 <= wt(x) <= h}` or `{x : wt(x) >= h}`.
pub fn weight_range_set(
    field: &FieldSpec,
    k: usize,
    mode: WeightBound,
    h: usize,
) -> Result<VectorMultiset> {
    match mode {
        WeightBound::AtMost if !(2..=k).contains(&h) => {
            return Err(Error::BadRange("weight_le needs 2 <= h <= k"))
        }
        WeightBound::AtLeast if h < 1 || h + 1 > k => {
            return Err(Error::BadRange("weight_ge needs 1 <= h <= k-1"))
        }
        _ => {}
    }
    zero_set_of(field, k, |x| match mode {
        WeightBound::AtMost => weight(x) <= h,
        WeightBound::AtLeast => weight(x) >= h,
    })
}

/// A set of points of the affine space GF(q)^m; may contain the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSet {
    field: FieldSpec,
    m: usize,
    points: Vec<GFVector>,
}

impl AffineSet {
    pub fn new(
        field: &FieldSpec,
        m: usize,
        points: impl IntoIterator<Item = GFVector>,
    ) -> Result<Self> {
        let mut pts = Vec::new();
        for v in points {
            if v.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    got: v.len(),
                });
            }
            pts.push(GFVector::from_values(field, &v.values())?);
        }
        pts.sort_unstable();
        pts.dedup();
        Ok(AffineSet {
            field: field.clone(),
            m,
            points: pts,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn points(&self) -> &[GFVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Meets every affine hyperplane `<a, x> = b`.
    pub fn is_affine_blocking(&self) -> bool {
        affine_blocking_gap(&self.field, self.m, &self.points).is_none()
    }

    /// The set with one point removed.
    pub fn without(&self, point: &GFVector) -> AffineSet {
        AffineSet {
            field: self.field.clone(),
            m: self.m,
            points: self
                .points
                .iter()
                .filter(|p| *p != point)
                .cloned()
                .collect(),
        }
    }
}

/// `{a e_i : a in GF(q), 1 <= i <= k-1}` in GF(q)^{k-1}, origin included once.
pub fn scaled_basis_set(field: &FieldSpec, k: usize) -> Result<AffineSet> {
    if k < 3 {
        return Err(Error::BadRange("scaled basis set needs k >= 3"));
    }
    let m = k - 1;
    let pts = (0..m).flat_map(|i| field.elements().map(move |a| (i, a)));
    AffineSet::new(
        field,
        m,
        pts.map(|(i, a)| GFVector::unit(m, i).scale(field, a)),
    )
}

/// Which theorem, if any, certifies that a lifted set is cutting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftGuarantee {
    /// Both sets cutting and the upper set closed under nonzero scaling.
    ScaleClosedCutting,
    /// Lower set cutting and upper set an affine blocking set.
    AffineBlocking,
    None,
}

impl LiftGuarantee {
    pub fn as_str(self) -> &'static str {
        match self {
            LiftGuarantee::ScaleClosedCutting => "scale_closed_cutting",
            LiftGuarantee::AffineBlocking => "affine_blocking",
            LiftGuarantee::None => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub set: VectorMultiset,
    pub guarantee: LiftGuarantee,
}

/// `{(x, 1) : x in upper} ∪ {(x, 0) : x in lower}` in GF(q)^{k+1}.
pub fn embed_lift<'a>(
    upper: impl IntoIterator<Item = &'a GFVector>,
    lower: &VectorMultiset,
) -> Result<VectorMultiset> {
    let top = upper.into_iter().map(|x| x.extended(FieldElement::ONE));
    let bottom = lower.iter().map(|x| x.extended(FieldElement::ZERO));
    VectorMultiset::new(
        lower.field(),
        lower.ambient_dim() + 1,
        top.chain(bottom).collect::<Vec<_>>(),
    )
}

/// Cutting test for an arbitrary multiset via its projection.
pub fn is_cutting(d: &VectorMultiset, guard: SubspaceGuard) -> Result<bool> {
    if d.is_empty() {
        return Ok(false);
    }
    Ok(is_cutting_span(&project_multiset(d), guard)?.is_cutting)
}

fn affine_guarantee(
    points: &[GFVector],
    lower: &VectorMultiset,
    lower_cutting: bool,
) -> LiftGuarantee {
    let m = lower.ambient_dim();
    if m >= 2 && lower_cutting && affine_blocking_gap(lower.field(), m, points).is_none() {
        LiftGuarantee::AffineBlocking
    } else {
        LiftGuarantee::None
    }
}

pub fn lift(upper: &VectorMultiset, lower: &VectorMultiset, guard: SubspaceGuard) -> Result<Lift> {
    if upper.field() != lower.field() || upper.ambient_dim() != lower.ambient_dim() {
        return Err(Error::AmbientMismatch);
    }
    let set = embed_lift(upper.iter(), lower)?;
    let lower_cutting = is_cutting(lower, guard)?;
    let guarantee = if lower_cutting && upper.is_scale_closed() && is_cutting(upper, guard)? {
        LiftGuarantee::ScaleClosedCutting
    } else {
        let pts: Vec<GFVector> = upper.points().cloned().collect();
        affine_guarantee(&pts, lower, lower_cutting)
    };
    Ok(Lift { set, guarantee })
}

pub fn lift_affine(
    upper: &AffineSet,
    lower: &VectorMultiset,
    guard: SubspaceGuard,
) -> Result<Lift> {
    if upper.field() != lower.field() || upper.dim() != lower.ambient_dim() {
        return Err(Error::AmbientMismatch);
    }
    let set = embed_lift(upper.points(), lower)?;
    let lower_cutting = is_cutting(lower, guard)?;
    Ok(Lift {
        set,
        guarantee: affine_guarantee(upper.points(), lower, lower_cutting),
    })
}

fn ipow(q: u64, e: usize) -> i128 {
    i128::from(q).pow(e as u32)
}

fn binom(n: usize, r: usize) -> i128 {
    (0..r).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn sign(s: usize) -> i128 {
    if s.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Families with a closed-form weight distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictedFamily {
    /// `x_1...x_h = 0`.
    Monomial,
    /// Projection of the monomial set.
    MonomialProjective,
    /// `x_1 x_2 x_3 (x_1+x_2+x_3) = 0`.
    MonomialPlusSumH3,
}

/// Exact `num / den` as a weight, or an error if it is not a nonnegative integer.
fn exact_weight(num: i128, den: i128) -> Result<usize> {
    if num < 0 || num % den != 0 {
        return Err(Error::BadRange("closed form gave a non-integral weight"));
    }
    Ok((num / den) as usize)
}

pub fn predicted_weight_distribution(
    family: PredictedFamily,
    q: u64,
    k: usize,
    h: usize,
) -> Result<WeightDistribution> {
    if q < 2 {
        return Err(Error::BadRange("q >= 2"));
    }
    let mut rows: Vec<(i128, i128, i128)> = Vec::new(); // (numerator, denominator, count)
    let qi = i128::from(q);
    match family {
        PredictedFamily::Monomial | PredictedFamily::MonomialProjective => {
            if h < 3 || h > k {
                return Err(Error::BadRange("monomial family needs 3 <= h <= k"));
            }
            let extra = if family == PredictedFamily::Monomial {
                1
            } else {
                0
            };
            let scale = ipow(q, k - h);
            let base = (qi - 1).pow(extra) * scale * (ipow(q, h) - (qi - 1).pow(h as u32));
            rows.push((base, qi, ipow(q, k) - ipow(q, h)));
            for s in 1..=h {
                let off = sign(s) * scale * (qi - 1).pow((h - s + extra as usize) as u32);
                rows.push((base + off, qi, (qi - 1).pow(s as u32) * binom(h, s)));
            }
        }
        PredictedFamily::MonomialPlusSumH3 => {
            if h != 3 {
                return Err(Error::UnsupportedFamily);
            }
            if k < 3 {
                return Err(Error::BadRange("sum-augmented family needs k >= 3"));
            }
            // Weights scaled by q^4 so every term is an integer.
            let t = |j: usize| ipow(q, k + 4 - j);
            rows.push((3 * t(1) - 6 * t(2) + 3 * t(3), ipow(q, 4), 4 * (qi - 1)));
            rows.push((
                4 * t(1) - 10 * t(2) + 6 * t(3),
                ipow(q, 4),
                (qi - 1) * (qi - 2) * (qi - 3),
            ));
            rows.push((
                4 * t(1) - 10 * t(2) + 9 * t(3) - 3 * t(4),
                ipow(q, 4),
                ipow(q, k) - ipow(q, 3),
            ));
            rows.push((
                4 * t(1) - 9 * t(2) + 5 * t(3),
                ipow(q, 4),
                6 * (qi - 1) * (qi - 2),
            ));
            rows.push((4 * t(1) - 8 * t(2) + 4 * t(3), ipow(q, 4), 3 * (qi - 1)));
        }
    }
    let mut pairs = Vec::new();
    for (num, den, count) in rows {
        if count > 0 {
            pairs.push((exact_weight(num, den)?, count as u64));
        }
    }
    Ok(WeightDistribution::from_counts(pairs))
}

/// Number of `x in GF(q)^k` with `x_j = 0` for `j in T` and `<a, x> = 0`.
///
/// For `T = ∅` this is the plain count `q^{k-1}` (or `q^k` for `a = 0`); the
/// inclusion-exclusion in [`monomial_codeword_weight`] skips the empty set
/// instead.
pub fn count_n_a_t(a: &GFVector, t: &[usize], q: u64, k: usize) -> Result<u64> {
    if a.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: a.len(),
        });
    }
    if let Some(&bad) = t.iter().find(|&&j| j >= k) {
        return Err(Error::BadIndex(bad));
    }
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    let inside = a
        .coords()
        .iter()
        .enumerate()
        .all(|(i, x)| x.is_zero() || t.contains(&i));
    let free = k - t.len();
    Ok(if inside {
        q.pow(free as u32)
    } else {
        q.pow(free as u32 - 1)
    })
}

/// Number of `(x_1..x_h)` with all `x_i != 0` and `x_1 + ... + x_h = b`.
pub fn count_toric(h: usize, b: FieldElement, q: u64) -> Result<u64> {
    if h < 2 {
        return Err(Error::BadRange("count_toric needs h >= 2"));
    }
    let qi = i128::from(q);
    let units = (qi - 1).pow(h as u32);
    let num = if b.is_zero() {
        units + sign(h) * (qi - 1)
    } else {
        units - sign(h)
    };
    Ok((num / qi) as u64)
}

/// `|{x != 0 : x_1...x_h = 0}| = (q^h - (q-1)^h) q^{k-h} - 1`.
pub fn monomial_size(q: u64, k: usize, h: usize) -> u64 {
    ((ipow(q, h) - (i128::from(q) - 1).pow(h as u32)) * ipow(q, k - h) - 1) as u64
}

/// `|{x != 0 : x_1...x_h (x_1+...+x_h) = 0}|`, valid for `2 <= h <= k`.
pub fn sum_augmented_size(q: u64, k: usize, h: usize) -> u64 {
    let qi = i128::from(q);
    let inner = ipow(q, h + 1) - (qi - 1).pow(h as u32 + 1) + sign(h) * (qi - 1);
    // q^{k-h-1} * inner, where inner is divisible by q when k = h
    ((inner * ipow(q, k - h)) / qi - 1) as u64
}

/// Weight of the codeword of `a != 0` in the monomial code, by
/// inclusion-exclusion over nonempty `T ⊆ {0..h-1}` of `N(a, T)`.
pub fn monomial_codeword_weight(a: &GFVector, q: u64, k: usize, h: usize) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ZeroVector);
    }
    if h == 0 || h > k {
        return Err(Error::BadRange("need 1 <= h <= k"));
    }
    let mut zeros: i128 = 0;
    for mask in 1u32..(1 << h) {
        let t: Vec<usize> = (0..h).filter(|i| mask >> i & 1 == 1).collect();
        zeros += sign(t.len() - 1) * i128::from(count_n_a_t(a, &t, q, k)?);
    }
    // zeros counts the origin, which is not in D
    Ok((i128::from(monomial_size(q, k, h)) - (zeros - 1)) as u64)
}

/// Whether the monomial code has `w_min / w_max <= (q-1)/q`, i.e.
/// `h <= 1 + 1/log2(q/(q-1))`, decided as `q^{h-1} <= 2 (q-1)^{h-1}`.
pub fn monomial_ratio_at_most_threshold(q: u64, h: usize) -> bool {
    ipow(q, h - 1) <= 2 * (i128::from(q) - 1).pow(h as u32 - 1)
}

/// `2(q-1)^h - q^h + (-1)^h (q-2)`, whose sign governs the sum-augmented
/// family's ratio.
pub fn sum_augmented_threshold(q: u64, h: usize) -> i128 {
    let qi = i128::from(q);
    2 * (qi - 1).pow(h as u32) - ipow(q, h) + sign(h) * (qi - 2)
}

/// Closed-form minimum weight `q^{k-h-1}((q-1)q^h - (q-1)^{h+1} + (-1)^h (q-1))`
/// of the sum-augmented code.
pub fn sum_augmented_min_weight(q: u64, k: usize, h: usize) -> Result<usize> {
    let qi = i128::from(q);
    let inner = (qi - 1) * ipow(q, h) - (qi - 1).pow(h as u32 + 1) + sign(h) * (qi - 1);
    exact_weight(inner * ipow(q, k - h), qi)
}

/// Uniform description of every family, as read from construction specs.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "family", rename_all = "snake_case"))]
pub enum Family {
    HyperplaneUnion {
        q: u64,
        k: usize,
        #[cfg_attr(feature = "serde", serde(rename = "S"))]
        s: Vec<Vec<u32>>,
    },
    FormsProduct {
        q: u64,
        k: usize,
        forms: Vec<Vec<u32>>,
    },
    Monomial {
        q: u64,
        k: usize,
        h: usize,
    },
    MonomialPlusSum {
        q: u64,
        k: usize,
        h: usize,
    },
    WeightLe {
        q: u64,
        k: usize,
        h: usize,
    },
    WeightGe {
        q: u64,
        k: usize,
        h: usize,
    },
    Lift {
        inner: Box<[ConstructionSpec; 2]>,
    },
    /// The set lives in GF(q)^{k-1}; `k` is the dimension after lifting.
    ScaledBasis {
        q: u64,
        k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstructionSpec {
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub family: Family,
    #[cfg_attr(feature = "serde", serde(default))]
    pub projective: bool,
}

/// A generated set: a multiset of nonzero vectors, or an affine point set
/// that still has to be lifted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generated {
    Multiset(VectorMultiset),
    Affine(AffineSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Built {
    pub set: VectorMultiset,
    /// Present for lifts.
    pub guarantee: Option<LiftGuarantee>,
}

impl ConstructionSpec {
    pub fn new(family: Family) -> Self {
        ConstructionSpec {
            family,
            projective: false,
        }
    }

    pub fn projected(mut self) -> Self {
        self.projective = true;
        self
    }

    pub fn lift(upper: ConstructionSpec, lower: ConstructionSpec) -> Self {
        Self::new(Family::Lift {
            inner: Box::new([upper, lower]),
        })
    }

    fn generate(&self, guard: SubspaceGuard) -> Result<(Generated, Option<LiftGuarantee>)> {
        let rows = |field: &FieldSpec, rows: &[Vec<u32>]| -> Result<Vec<GFVector>> {
            rows.iter()
                .map(|r| GFVector::from_values(field, r))
                .collect()
        };
        let (set, guarantee) = match &self.family {
            Family::HyperplaneUnion { q, k, s } => {
                let field = field_of_order(*q)?;
                let s = rows(&field, s)?;
                (hyperplane_union(&field, *k, &s)?.set, None)
            }
            Family::FormsProduct { q, k, forms } => {
                let field = field_of_order(*q)?;
                let forms = rows(&field, forms)?
                    .into_iter()
                    .map(LinearForm::linear)
                    .collect::<Result<Vec<_>>>()?;
                (forms_product_set(&field, *k, &forms)?, None)
            }
            Family::Monomial { q, k, h } => {
                (monomial_zero_set(&field_of_order(*q)?, *k, *h)?, None)
            }
            Family::MonomialPlusSum { q, k, h } => {
                (monomial_plus_sum_set(&field_of_order(*q)?, *k, *h)?, None)
            }
            Family::WeightLe { q, k, h } => (
                weight_range_set(&field_of_order(*q)?, *k, WeightBound::AtMost, *h)?,
                None,
            ),
            Family::WeightGe { q, k, h } => (
                weight_range_set(&field_of_order(*q)?, *k, WeightBound::AtLeast, *h)?,
                None,
            ),
            Family::ScaledBasis { q, k } => {
                let set = scaled_basis_set(&field_of_order(*q)?, *k)?;
                if self.projective {
                    return Err(Error::NeedsLift);
                }
                return Ok((Generated::Affine(set), None));
            }
            Family::Lift { inner } => {
                let (upper, _) = inner[0].generate(guard)?;
                let (Generated::Multiset(lower), _) = inner[1].generate(guard)? else {
                    return Err(Error::NeedsLift);
                };
                let lifted = match upper {
                    Generated::Multiset(upper) => lift(&upper, &lower, guard)?,
                    Generated::Affine(upper) => lift_affine(&upper, &lower, guard)?,
                };
                (lifted.set, Some(lifted.guarantee))
            }
        };
        let set = if self.projective {
            project_multiset(&set)
        } else {
            set
        };
        Ok((Generated::Multiset(set), guarantee))
    }

    /// Generates the defining set; sets containing the origin must be lifted.
    pub fn build(&self, guard: SubspaceGuard) -> Result<Built> {
        match self.generate(guard)? {
            (Generated::Multiset(set), guarantee) => Ok(Built { set, guarantee }),
            (Generated::Affine(_), _) => Err(Error::NeedsLift),
        }
    }

    /// The closed-form family this spec belongs to, if any.
    pub fn predicted_family(&self) -> Option<(PredictedFamily, u64, usize, usize)> {
        match self.family {
            Family::Monomial { q, k, h } => Some((
                if self.projective {
                    PredictedFamily::MonomialProjective
                } else {
                    PredictedFamily::Monomial
                },
                q,
                k,
                h,
            )),
            Family::MonomialPlusSum { q, k, h: 3 } if !self.projective => {
                Some((PredictedFamily::MonomialPlusSumH3, q, k, 3))
            }
            _ => None,
        }
    }
}

/// `<a, x>` for every form, used to evaluate products of forms pointwise.
pub fn forms_vanish(field: &FieldSpec, forms: &[LinearForm], x: &GFVector) -> Result<bool> {
    for f in forms {
        if dot(field, &f.a, x)? == f.b {
            return Ok(true);
        }
    }
    Ok(false)
}
