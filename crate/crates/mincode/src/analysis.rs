//! The analysis report: every measured quantity for one code, plus the
//! cross-checks between them.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use mincode_core::blocking::{
    fold_multiplicity, is_cutting_span, is_minimal_cutting, verify_blocking_report,
    verify_cutting_witness, BlockingReport, CuttingReport, CuttingWitness, SubspaceGuard,
};
use mincode_core::bounds::{audit, BoundAudit};
use mincode_core::code::{
    ab_condition, build_code, verify_witness, EnumerationGuard, LinearCode, MinimalityReport,
    WeightDistribution,
};
use mincode_core::constructions::{
    predicted_weight_distribution, ConstructionSpec, LiftGuarantee, PredictedFamily,
};
use mincode_core::linalg::{project_multiset, GFVector, VectorMultiset};
use serde::{Deserialize, Serialize};

use crate::error::{AppError, Result};
use crate::formats::FieldJson;
use crate::parallel::{self, Threads};

pub const SCHEMA: &str = "mincode/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Weights,
    Minimality,
    Blocking,
    Bounds,
    Predicted,
}

impl FromStr for Check {
    type Err = AppError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "weights" => Check::Weights,
            "minimality" => Check::Minimality,
            "blocking" => Check::Blocking,
            "bounds" => Check::Bounds,
            "predicted" => Check::Predicted,
            other => return Err(AppError::Usage(format!("unknown check `{other}`"))),
        })
    }
}

/// A set of checks; `bounds` and `predicted` pull in the weights they need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checks(Vec<Check>);

impl Checks {
    pub fn all() -> Self {
        Checks(vec![
            Check::Weights,
            Check::Minimality,
            Check::Blocking,
            Check::Bounds,
            Check::Predicted,
        ])
    }

    pub fn parse(csv: &str) -> Result<Self> {
        let mut v = csv
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(Check::from_str)
            .collect::<Result<Vec<_>>>()?;
        v.sort();
        v.dedup();
        Ok(Checks(v))
    }

    pub fn has(&self, c: Check) -> bool {
        self.0.contains(&c)
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub checks: Checks,
    pub space: EnumerationGuard,
    pub subspaces: SubspaceGuard,
    pub threads: Threads,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            checks: Checks::all(),
            space: EnumerationGuard::default(),
            subspaces: SubspaceGuard::default(),
            threads: Threads::default(),
        }
    }
}

/// A defining set with whatever is known about where it came from.
#[derive(Clone, Debug)]
pub struct Source {
    pub set: VectorMultiset,
    pub spec: Option<ConstructionSpec>,
    pub guarantee: Option<LiftGuarantee>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub outer: Vec<u32>,
    pub inner: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub is_minimal: bool,
    pub witness: Option<WitnessJson>,
    pub witness_verified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityJson {
    pub exhaustive: VerdictJson,
    pub cutting: VerdictJson,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingJson {
    pub s: usize,
    pub is_blocking: bool,
    pub fold: usize,
    pub witness_subspace: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CuttingWitnessJson {
    Pair { a: Vec<u32>, a_prime: Vec<u32> },
    Hyperplane { a: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuttingJson {
    pub is_cutting: bool,
    pub witness: Option<CuttingWitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedJson {
    pub family: String,
    pub weight_distribution: BTreeMap<usize, u64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub spec: Option<ConstructionSpec>,
    pub field: FieldJson,
    pub k: usize,
    pub n: usize,
    pub dim: usize,
    pub projective: bool,
    pub weight_distribution: Option<BTreeMap<usize, u64>>,
    pub enumerator: Option<String>,
    pub w_min: Option<usize>,
    pub w_max: Option<usize>,
    pub minimal: Option<bool>,
    pub method: Option<String>,
    pub ab_condition: Option<bool>,
    pub minimality: Option<MinimalityJson>,
    pub blocking: Option<BlockingJson>,
    pub cutting: Option<CuttingJson>,
    pub bounds: Option<BoundAudit>,
    pub predicted: Option<PredictedJson>,
    pub lift_guarantee: Option<String>,
    pub contradictions: Vec<String>,
}

fn verdict(code: &LinearCode, r: &MinimalityReport) -> Result<VerdictJson> {
    let witness_verified = match &r.witness {
        Some(w) => Some(verify_witness(code, w)?),
        None => None,
    };
    Ok(VerdictJson {
        is_minimal: r.is_minimal,
        witness: r.witness.as_ref().map(|w| WitnessJson {
            outer: w.outer.values(),
            inner: w.inner.values(),
        }),
        witness_verified,
    })
}

fn blocking_json(r: &BlockingReport) -> BlockingJson {
    BlockingJson {
        s: r.s,
        is_blocking: r.is_blocking,
        fold: r.fold,
        witness_subspace: r.witness_subspace.iter().map(GFVector::values).collect(),
    }
}

fn cutting_json(r: &CuttingReport) -> CuttingJson {
    CuttingJson {
        is_cutting: r.is_cutting,
        witness: r.witness.as_ref().map(|w| match w {
            CuttingWitness::Pair { a, a_prime } => CuttingWitnessJson::Pair {
                a: a.values(),
                a_prime: a_prime.values(),
            },
            CuttingWitness::Hyperplane(a) => CuttingWitnessJson::Hyperplane { a: a.values() },
        }),
    }
}

fn family_name(f: PredictedFamily) -> &'static str {
    match f {
        PredictedFamily::Monomial => "monomial",
        PredictedFamily::MonomialProjective => "monomial_projective",
        PredictedFamily::MonomialPlusSumH3 => "monomial_plus_sum_h3",
    }
}

pub type Predictor =
    fn(PredictedFamily, u64, usize, usize) -> mincode_core::Result<WeightDistribution>;

pub fn analyze(source: &Source, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    analyze_with(source, opts, predicted_weight_distribution)
}

/// As [`analyze`], with the closed-form predictor supplied by the caller.
pub fn analyze_with(
    source: &Source,
    opts: &AnalysisOptions,
    predictor: Predictor,
) -> Result<AnalysisReport> {
    let d = &source.set;
    let code = build_code(d)?;
    let q = code.field().order();
    let checks = &opts.checks;
    let mut contradictions = Vec::new();
    let mut report = AnalysisReport {
        schema: SCHEMA.to_owned(),
        spec: source.spec.clone(),
        field: FieldJson::from_field(d.field()),
        k: d.ambient_dim(),
        n: code.n(),
        dim: code.dim(),
        projective: d.is_projective(),
        weight_distribution: None,
        enumerator: None,
        w_min: None,
        w_max: None,
        minimal: None,
        method: None,
        ab_condition: None,
        minimality: None,
        blocking: None,
        cutting: None,
        bounds: None,
        predicted: None,
        lift_guarantee: source.guarantee.map(|g| g.as_str().to_owned()),
        contradictions: Vec::new(),
    };

    let needs_weights =
        checks.has(Check::Weights) || checks.has(Check::Bounds) || checks.has(Check::Predicted);
    let wd = if needs_weights {
        let wd = parallel::weight_distribution(&code, opts.space, opts.threads)?;
        report.weight_distribution = Some(wd.counts().clone());
        report.enumerator = Some(wd.enumerator());
        report.w_min = wd.w_min();
        report.w_max = wd.w_max();
        report.ab_condition = Some(ab_condition(&wd, q));
        Some(wd)
    } else {
        None
    };

    let needs_minimality = checks.has(Check::Minimality) || checks.has(Check::Bounds);
    if needs_minimality {
        let ex = parallel::minimal_exhaustive(&code, opts.space, opts.threads)?;
        let cut = is_minimal_cutting(&code, opts.space, opts.subspaces)?;
        let m = MinimalityJson {
            exhaustive: verdict(&code, &ex)?,
            cutting: verdict(&code, &cut)?,
            agree: ex.is_minimal == cut.is_minimal,
        };
        if !m.agree {
            contradictions.push("exhaustive and cutting minimality verdicts differ".to_owned());
        }
        for (name, v) in [("exhaustive", &m.exhaustive), ("cutting", &m.cutting)] {
            if v.witness_verified == Some(false) {
                contradictions.push(format!("{name} witness does not verify"));
            }
        }
        report.minimal = Some(ex.is_minimal);
        report.method = Some(ex.method.as_str().to_owned());
        report.minimality = Some(m);
    }

    let projected = project_multiset(d);
    let full_rank = code.dim() == d.ambient_dim();
    let mut fold = None;
    if checks.has(Check::Blocking) || checks.has(Check::Bounds) {
        let b = fold_multiplicity(&projected, 1, opts.subspaces)?;
        if !verify_blocking_report(&projected, &b) {
            contradictions.push("blocking witness does not recount".to_owned());
        }
        let c = is_cutting_span(&projected, opts.subspaces)?;
        if let Some(w) = &c.witness {
            if !verify_cutting_witness(&projected, w) {
                contradictions.push("cutting witness does not verify".to_owned());
            }
        }
        if let Some(minimal) = report.minimal {
            if full_rank && minimal != c.is_cutting {
                contradictions.push("minimality differs from the cutting property".to_owned());
            }
            if full_rank && code.dim() == 3 && minimal != (b.fold >= 2) {
                contradictions
                    .push("dimension-3 code: minimality differs from 2-fold blocking".to_owned());
            }
        }
        if source.guarantee.is_some_and(|g| g != LiftGuarantee::None) && !c.is_cutting {
            contradictions
                .push("lift guarantee holds but the lifted set is not cutting".to_owned());
        }
        if full_rank {
            fold = Some(b.fold as u64);
        }
        if checks.has(Check::Blocking) {
            report.blocking = Some(blocking_json(&b));
            report.cutting = Some(cutting_json(&c));
        }
    }

    if checks.has(Check::Bounds) {
        if let (Some(wd), Some(minimal)) = (&wd, report.minimal) {
            let a = audit(&code, wd, minimal, fold);
            if a.contradiction() {
                contradictions.push("a bound fails for this code".to_owned());
            }
            report.bounds = Some(a);
        }
    }

    if checks.has(Check::Predicted) {
        if let (Some(wd), Some((family, pq, pk, ph))) = (
            &wd,
            source
                .spec
                .as_ref()
                .and_then(ConstructionSpec::predicted_family),
        ) {
            let predicted = predictor(family, pq, pk, ph)?;
            let matches = &predicted == wd;
            if !matches {
                contradictions.push(format!(
                    "{} closed form differs from enumeration",
                    family_name(family)
                ));
            }
            report.predicted = Some(PredictedJson {
                family: family_name(family).to_owned(),
                weight_distribution: predicted.counts().clone(),
                matches,
            });
        }
    }

    if !checks.has(Check::Weights) {
        report.weight_distribution = None;
        report.enumerator = None;
    }
    if !checks.has(Check::Minimality) {
        report.minimality = None;
    }
    report.contradictions = contradictions;
    Ok(report)
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn params(&self) -> String {
        match self.w_min {
            Some(d) => format!("[{},{},{}]", self.n, self.dim, d),
            None => format!("[{},{}]", self.n, self.dim),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let q = self.field.p.pow(self.field.e);
        let _ = writeln!(
            out,
            "code {} over GF({q}), ambient k = {}",
            self.params(),
            self.k
        );
        let _ = writeln!(out, "projective defining set: {}", self.projective);
        if let Some(e) = &self.enumerator {
            let _ = writeln!(out, "weight enumerator: {e}");
        }
        if let (Some(lo), Some(hi)) = (self.w_min, self.w_max) {
            let _ = writeln!(out, "w_min = {lo}, w_max = {hi}");
        }
        if let Some(ab) = self.ab_condition {
            let _ = writeln!(out, "w_min/w_max > (q-1)/q: {ab}");
        }
        if let Some(m) = &self.minimality {
            let _ = writeln!(
                out,
                "minimal: exhaustive {} / cutting {} ({})",
                m.exhaustive.is_minimal,
                m.cutting.is_minimal,
                if m.agree { "agree" } else { "DISAGREE" }
            );
            if let Some(w) = &m.exhaustive.witness {
                let _ = writeln!(
                    out,
                    "  witness: supp(c{:?}) inside supp(c{:?})",
                    w.inner, w.outer
                );
            }
        }
        if let Some(b) = &self.blocking {
            let _ = writeln!(out, "hyperplane fold: {}", b.fold);
        }
        if let Some(c) = &self.cutting {
            let _ = writeln!(out, "cutting: {}", c.is_cutting);
        }
        if let Some(b) = &self.bounds {
            let _ = writeln!(
                out,
                "bounds (minimal-code bounds {}): d >= {} {}, n >= {} {}, w_max <= {} {}, dim <= {} {}, griesmer n >= {} {}",
                if b.applies { "apply" } else { "not applicable" },
                b.distance_lb.bound,
                ok(b.distance_lb.ok),
                b.length_lb.bound,
                ok(b.length_lb.ok),
                b.wmax_ub.bound,
                ok(b.wmax_ub.ok),
                b.dim_cap.bound,
                ok(b.dim_cap.ok),
                b.griesmer.bound,
                ok(b.griesmer.ok),
            );
            if let Some(f) = b.fold_lb {
                let _ = writeln!(out, "  fold {} >= {} {}", f.value, f.bound, ok(f.ok));
            }
            let _ = writeln!(out, "  w_min/w_max = {} vs {}", b.ab_ratio, b.ab_threshold);
        }
        if let Some(p) = &self.predicted {
            let _ = writeln!(
                out,
                "closed form ({}): {}",
                p.family,
                if p.matches { "matches" } else { "MISMATCH" }
            );
        }
        if let Some(g) = &self.lift_guarantee {
            let _ = writeln!(out, "lift guarantee: {g}");
        }
        for c in &self.contradictions {
            let _ = writeln!(out, "CONTRADICTION: {c}");
        }
        out
    }
}

fn ok(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mincode_core::constructions::Family;

    fn source(spec: ConstructionSpec) -> Source {
        let built = spec.build(SubspaceGuard::default()).unwrap();
        Source {
            set: built.set,
            spec: Some(spec),
            guarantee: built.guarantee,
        }
    }

    #[test]
    fn monomial_report() {
        let src = source(ConstructionSpec::new(Family::Monomial { q: 3, k: 4, h: 3 }));
        let r = analyze(&src, &AnalysisOptions::default()).unwrap();
        assert_eq!(r.params(), "[56,4,30]");
        assert_eq!(r.w_max, Some(42));
        assert_eq!(r.minimal, Some(true));
        assert!(r.minimality.as_ref().unwrap().agree);
        assert!(r.predicted.as_ref().unwrap().matches);
        assert!(r.contradictions.is_empty());
        let back: AnalysisReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn checks_parse() {
        let c = Checks::parse("bounds,weights,bounds").unwrap();
        assert!(c.has(Check::Bounds) && c.has(Check::Weights) && !c.has(Check::Predicted));
        assert!(Checks::parse("weights,nope").is_err());
    }

    #[test]
    fn mutated_predictor_is_a_contradiction() {
        fn off_by_one(
            f: PredictedFamily,
            q: u64,
            k: usize,
            h: usize,
        ) -> mincode_core::Result<WeightDistribution> {
            let wd = predicted_weight_distribution(f, q, k, h)?;
            Ok(wd.counts().iter().map(|(&w, &c)| (w + 1, c)).collect())
        }
        let src = source(ConstructionSpec::new(Family::Monomial { q: 3, k: 4, h: 3 }));
        let r = analyze_with(&src, &AnalysisOptions::default(), off_by_one).unwrap();
        assert_eq!(r.contradictions.len(), 1);
    }
}
