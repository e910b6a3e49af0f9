//! The six worked examples, rebuilt and compared against their published
//! parameters.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use mincode_core::blocking::SubspaceGuard;
use mincode_core::constructions::{ConstructionSpec, Family};
use serde::{Deserialize, Serialize};

use crate::analysis::{analyze_with, AnalysisOptions, Check, Checks, Predictor, Source};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub n: usize,
    pub dim: usize,
    pub d: usize,
    pub w_max: Option<usize>,
    pub enumerator: Option<&'static str>,
    pub minimal: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Example {
    pub name: &'static str,
    pub spec: ConstructionSpec,
    pub expected: Expected,
}

fn spec(family: Family) -> ConstructionSpec {
    ConstructionSpec::new(family)
}

pub fn examples() -> Vec<Example> {
    let monomial = |q, k| spec(Family::Monomial { q, k, h: 3 });
    let plus_sum = |q| spec(Family::MonomialPlusSum { q, k: 4, h: 3 });
    let weight_le = spec(Family::WeightLe { q: 3, k: 6, h: 2 });
    vec![
        Example {
            name: "monomial q=3 k=4 h=3",
            spec: monomial(3, 4),
            expected: Expected {
                n: 56,
                dim: 4,
                d: 30,
                w_max: Some(42),
                enumerator: Some("1+6z^30+8z^36+54z^38+12z^42"),
                minimal: Some(true),
            },
        },
        Example {
            name: "monomial q=4 k=4 h=3",
            spec: monomial(4, 4),
            expected: Expected {
                n: 147,
                dim: 4,
                d: 84,
                w_max: Some(120),
                enumerator: Some("1+9z^84+27z^108+192z^111+27z^120"),
                minimal: Some(true),
            },
        },
        Example {
            name: "sum-augmented q=3 k=4",
            spec: plus_sum(3),
            expected: Expected {
                n: 62,
                dim: 4,
                d: 36,
                w_max: Some(48),
                enumerator: Some("1+8z^36+66z^42+6z^48"),
                minimal: Some(true),
            },
        },
        Example {
            name: "sum-augmented q=4 k=4",
            spec: plus_sum(4),
            expected: Expected {
                n: 171,
                dim: 4,
                d: 108,
                w_max: Some(144),
                enumerator: Some("1+12z^108+6z^120+192z^129+36z^132+9z^144"),
                minimal: Some(true),
            },
        },
        Example {
            name: "lift of monomial q=4 k=5 h=3",
            spec: ConstructionSpec::lift(monomial(4, 5), monomial(4, 5)),
            expected: Expected {
                n: 1182,
                dim: 6,
                d: 591,
                w_max: Some(960),
                enumerator: None,
                minimal: Some(true),
            },
        },
        Example {
            name: "lift of weight<=2 q=3 k=6",
            spec: ConstructionSpec::lift(weight_le.clone(), weight_le),
            expected: Expected {
                n: 144,
                dim: 7,
                d: 44,
                w_max: Some(104),
                enumerator: None,
                minimal: Some(true),
            },
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowResult {
    pub name: String,
    pub expected: String,
    pub measured: String,
    pub pass: bool,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn describe(
    n: usize,
    dim: usize,
    d: Option<usize>,
    w_max: Option<usize>,
    minimal: Option<bool>,
) -> String {
    let mut s = format!(
        "[{n},{dim},{}]",
        d.map_or("?".to_owned(), |d| d.to_string())
    );
    if let Some(w) = w_max {
        let _ = write!(s, " w_max={w}");
    }
    if let Some(m) = minimal {
        let _ = write!(s, " minimal={m}");
    }
    s
}

pub fn run_example(
    ex: &Example,
    opts: &AnalysisOptions,
    predictor: Predictor,
) -> Result<RowResult> {
    let start = Instant::now();
    let built = ex.spec.build(opts.subspaces)?;
    let source = Source {
        set: built.set,
        spec: Some(ex.spec.clone()),
        guarantee: built.guarantee,
    };
    let r = analyze_with(&source, opts, predictor)?;
    let e = &ex.expected;
    let mut failures = Vec::new();
    if (r.n, r.dim, r.w_min) != (e.n, e.dim, Some(e.d)) {
        failures.push(format!("parameters {}", r.params()));
    }
    if e.w_max.is_some() && r.w_max != e.w_max {
        failures.push(format!("w_max {:?}", r.w_max));
    }
    if let Some(want) = e.enumerator {
        if r.enumerator.as_deref() != Some(want) {
            failures.push(format!(
                "enumerator {}",
                r.enumerator.clone().unwrap_or_default()
            ));
        }
    }
    if let Some(m) = e.minimal {
        let both = r
            .minimality
            .as_ref()
            .map(|x| (x.exhaustive.is_minimal, x.cutting.is_minimal));
        if both != Some((m, m)) {
            failures.push(format!("minimality {both:?}"));
        }
    }
    failures.extend(r.contradictions.iter().cloned());
    Ok(RowResult {
        name: ex.name.to_owned(),
        expected: describe(e.n, e.dim, Some(e.d), e.w_max, e.minimal),
        measured: describe(r.n, r.dim, r.w_min, r.w_max, r.minimal),
        pass: failures.is_empty(),
        failures,
        elapsed: start.elapsed(),
    })
}

/// Options used by `reproduce`: weights, both minimality methods, the
/// closed forms and the bound audit.
pub fn reproduce_options(threads: crate::parallel::Threads) -> AnalysisOptions {
    AnalysisOptions {
        checks: Checks::parse("weights,minimality,predicted,bounds").expect("valid checks"),
        threads,
        subspaces: SubspaceGuard::default(),
        ..AnalysisOptions::default()
    }
}

pub fn reproduce(opts: &AnalysisOptions, predictor: Predictor) -> Result<Vec<RowResult>> {
    debug_assert!(opts.checks.has(Check::Weights));
    examples()
        .iter()
        .map(|ex| run_example(ex, opts, predictor))
        .collect()
}

pub fn table(rows: &[RowResult]) -> String {
    let mut out = String::new();
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in rows {
        let _ = writeln!(
            out,
            "{} {:width$}  {}  ({:.2}s)",
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.measured,
            r.elapsed.as_secs_f64(),
        );
        for f in &r.failures {
            let _ = writeln!(out, "     - {f}");
        }
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    let _ = writeln!(out, "{passed}/{} examples reproduced", rows.len());
    out
}
