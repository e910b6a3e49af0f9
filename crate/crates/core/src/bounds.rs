//! Bounds for linear and minimal codes, evaluated against measured parameters.

use core::fmt;

use crate::code::{LinearCode, WeightDistribution};

/// `sum_{i<k} ceil(d / q^i)`.
pub fn griesmer_lb(q: u64, k: usize, d: u64) -> u64 {
    let mut total = 0;
    let mut power = 1u64;
    for _ in 0..k {
        total += d.div_ceil(power);
        power = power.saturating_mul(q);
    }
    total
}

/// `(d_lb, n_lb)` for a minimal `[n, k]_q` code: `d >= (q-1)(k-1)+1` and
/// `n >= d_lb + sum_{1<=i<k} ceil(d_lb / q^i)`.
pub fn minimal_code_bounds(q: u64, k: usize) -> (u64, u64) {
    let d = (q - 1) * (k as u64).saturating_sub(1) + 1;
    (d, griesmer_lb(q, k, d))
}

/// A reduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    /// `self > other`, by cross multiplication.
    pub fn gt(&self, other: &Ratio) -> bool {
        u128::from(self.num) * u128::from(other.den) > u128::from(other.num) * u128::from(self.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One bound: the bound value, the measured value, and whether it holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundCheck {
    pub bound: u64,
    pub value: u64,
    pub ok: bool,
}

impl BoundCheck {
    fn at_least(value: u64, bound: u64) -> Self {
        BoundCheck {
            bound,
            value,
            ok: value >= bound,
        }
    }

    fn at_most(value: u64, bound: u64) -> Self {
        BoundCheck {
            bound,
            value,
            ok: value <= bound,
        }
    }
}

/// Measured parameters consumed by [`BoundAudit::from_measured`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Measured {
    pub q: u64,
    pub n: u64,
    pub dim: usize,
    pub w_min: u64,
    pub w_max: u64,
    /// Hyperplane fold of the reduced defining set, when computed.
    pub fold: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundAudit {
    /// Minimal-code bounds apply (the code was certified minimal).
    pub applies: bool,
    /// `n >= griesmer_lb(q, dim, w_min)`; holds for every linear code.
    pub griesmer: BoundCheck,
    /// `w_min >= (q-1)(dim-1)+1`.
    pub distance_lb: BoundCheck,
    pub distance_tight: bool,
    pub length_lb: BoundCheck,
    /// `w_max <= n - dim + 1`.
    pub wmax_ub: BoundCheck,
    /// `fold >= dim - 1`.
    pub fold_lb: Option<BoundCheck>,
    /// `dim <= n/q + 1`, stored with `bound = floor(n/q) + 1`.
    pub dim_cap: BoundCheck,
    pub ab_ratio: Ratio,
    pub ab_threshold: Ratio,
    /// `w_min / w_max > (q-1)/q`.
    pub ab_condition: bool,
}

impl BoundAudit {
    pub fn from_measured(m: Measured, minimal: bool) -> Self {
        let (d_lb, n_lb) = minimal_code_bounds(m.q, m.dim);
        let dim = m.dim as u64;
        let ab_ratio = Ratio::new(m.w_min, m.w_max.max(1));
        let ab_threshold = Ratio::new(m.q - 1, m.q);
        BoundAudit {
            applies: minimal,
            griesmer: BoundCheck::at_least(m.n, griesmer_lb(m.q, m.dim, m.w_min)),
            distance_lb: BoundCheck::at_least(m.w_min, d_lb),
            distance_tight: m.w_min == d_lb,
            length_lb: BoundCheck::at_least(m.n, n_lb),
            wmax_ub: BoundCheck::at_most(m.w_max, (m.n + 1).saturating_sub(dim)),
            fold_lb: m
                .fold
                .map(|f| BoundCheck::at_least(f, dim.saturating_sub(1))),
            dim_cap: BoundCheck {
                bound: m.n / m.q + 1,
                value: dim,
                ok: m.q * dim <= m.n + m.q,
            },
            ab_condition: ab_ratio.gt(&ab_threshold),
            ab_ratio,
            ab_threshold,
        }
    }

    /// Whether the measured values contradict a bound that applies to them.
    pub fn contradiction(&self) -> bool {
        let minimal_flags = [
            self.distance_lb.ok,
            self.length_lb.ok,
            self.wmax_ub.ok,
            self.dim_cap.ok,
            self.fold_lb.is_none_or(|f| f.ok),
        ];
        !self.griesmer.ok || (self.applies && minimal_flags.contains(&false))
    }
}

/// Audits a code from its weight distribution; `fold` is the fold of the
/// reduced defining set, if known.
pub fn audit(
    code: &LinearCode,
    wd: &WeightDistribution,
    minimal: bool,
    fold: Option<u64>,
) -> BoundAudit {
    BoundAudit::from_measured(
        Measured {
            q: u64::from(code.field().order()),
            n: code.n() as u64,
            dim: code.dim(),
            w_min: wd.w_min().unwrap_or(0) as u64,
            w_max: wd.w_max().unwrap_or(0) as u64,
            fold,
        },
        minimal,
    )
}
