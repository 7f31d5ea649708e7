//! Contraction hypotheses evaluated on explicit pair samples or along orbits.
//!
//! Every inequality is strict and compared exactly; a tie is a violation.
//! The one exception is the consequent of the shift condition, which is a
//! non-strict `≤ ε`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fclass::AlteringDistance;
use crate::solver::orbit;
use crate::space::{apply_in, Map, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleSource {
    Grid,
    Random { seed: u64 },
    Orbit,
    AllPairs,
    Explicit,
}

/// Pairs of distinct points on which a universally quantified condition is
/// checked.
#[derive(Debug, Clone, PartialEq)]
pub struct PairSample<P> {
    pairs: Vec<(P, P)>,
    pub source: SampleSource,
}

impl<P: Clone + PartialEq> PairSample<P> {
    /// Drops any pair with equal components.
    pub fn new(pairs: impl IntoIterator<Item = (P, P)>, source: SampleSource) -> Self {
        PairSample {
            pairs: pairs.into_iter().filter(|(x, y)| x != y).collect(),
            source,
        }
    }

    /// All unordered pairs `(points[i], points[j])`, `i < j`.
    pub fn all_pairs(points: &[P]) -> Self {
        let mut pairs = Vec::new();
        for (i, x) in points.iter().enumerate() {
            for y in &points[i + 1..] {
                pairs.push((x.clone(), y.clone()));
            }
        }
        Self::new(pairs, SampleSource::AllPairs)
    }

    /// `count` seeded draws of index pairs from `points`, distinct components.
    pub fn random_from(points: &[P], count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs = Vec::with_capacity(count);
        if points.len() >= 2 {
            while pairs.len() < count {
                let i = rng.gen_range(0..points.len());
                let j = rng.gen_range(0..points.len());
                if points[i] != points[j] {
                    pairs.push((points[i].clone(), points[j].clone()));
                }
            }
        }
        Self::new(pairs, SampleSource::Random { seed })
    }

    pub fn pairs(&self) -> &[(P, P)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Prepends pairs (e.g. among limit points) ahead of the existing ones.
    pub fn with_leading(mut self, leading: impl IntoIterator<Item = (P, P)>) -> Self {
        let mut pairs: Vec<(P, P)> = leading.into_iter().filter(|(x, y)| x != y).collect();
        pairs.append(&mut self.pairs);
        self.pairs = pairs;
        self
    }
}

impl PairSample<f64> {
    /// Uniform seeded pairs in `[lo, hi]`.
    pub fn random_interval(lo: f64, hi: f64, count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs = Vec::with_capacity(count);
        while pairs.len() < count {
            let x = rng.gen_range(lo..=hi);
            let y = rng.gen_range(lo..=hi);
            if x != y {
                pairs.push((x, y));
            }
        }
        Self::new(pairs, SampleSource::Random { seed })
    }

    /// All pairs of the uniform grid with `n` points on `[lo, hi]`.
    pub fn grid(lo: f64, hi: f64, n: usize) -> Self {
        let points: Vec<f64> = (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n.max(2) - 1) as f64)
            .collect();
        let mut sample = Self::all_pairs(&points);
        sample.source = SampleSource::Grid;
        sample
    }
}

/// `(i, j, ε)` for a shift-condition violation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftIndex {
    pub i: usize,
    pub j: usize,
    pub eps: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionViolation {
    /// Position in the sample (or orbit) of the offending pair.
    pub index: usize,
    pub pair: (String, String),
    pub lhs: f64,
    pub rhs: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<ShiftIndex>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub condition: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub violations: Vec<ConditionViolation>,
    /// Smallest `rhs − lhs` over checked pairs; `None` when nothing was checked.
    pub margin_min: Option<f64>,
    pub source: SampleSource,
}

impl ConditionReport {
    pub(crate) fn new(condition: &'static str, source: SampleSource) -> Self {
        ConditionReport {
            condition,
            passed: true,
            checked: 0,
            violations: Vec::new(),
            margin_min: None,
            source,
        }
    }

    /// Records one comparison; `ok` decides pass/fail, the margin is `rhs − lhs`.
    pub(crate) fn record(
        &mut self,
        index: usize,
        pair: impl FnOnce() -> (String, String),
        lhs: f64,
        rhs: f64,
        ok: bool,
        shift: Option<ShiftIndex>,
    ) {
        self.checked += 1;
        let margin = rhs - lhs;
        self.margin_min = Some(self.margin_min.map_or(margin, |m| m.min(margin)));
        if !ok {
            self.passed = false;
            self.violations.push(ConditionViolation {
                index,
                pair: pair(),
                lhs,
                rhs,
                shift,
            });
        }
    }
}

fn pair_labels<S: Space>(space: &S, x: &S::Point, y: &S::Point) -> (String, String) {
    (space.label(x), space.label(y))
}

/// `φ(d(Tx, Ty)) < φ(d(x, y))` on every sampled pair.
pub fn edelstein_check<S: Space>(
    space: &S,
    map: &Map<S::Point>,
    phi: &AlteringDistance,
    sample: &PairSample<S::Point>,
) -> Result<ConditionReport>
where
    S::Point: 'static,
{
    let mut report = ConditionReport::new("edelstein", sample.source);
    for (k, (x, y)) in sample.pairs().iter().enumerate() {
        let tx = apply_in(space, map, x, k)?;
        let ty = apply_in(space, map, y, k)?;
        let lhs = phi.apply(space.distance(&tx, &ty));
        let rhs = phi.apply(space.distance(x, y));
        report.record(k, || pair_labels(space, x, y), lhs, rhs, lhs < rhs, None);
    }
    Ok(report)
}

fn kannan_sides<S: Space>(
    space: &S,
    phi: &AlteringDistance,
    x: &S::Point,
    y: &S::Point,
    tx: &S::Point,
    ty: &S::Point,
) -> (f64, f64) {
    let lhs = phi.apply(space.distance(tx, ty));
    let rhs = 0.5 * (phi.apply(space.distance(x, tx)) + phi.apply(space.distance(y, ty)));
    (lhs, rhs)
}

/// `φ(d(Tx, Ty)) < ½[φ(d(x, Tx)) + φ(d(y, Ty))]` on every sampled pair.
pub fn kannan_check<S: Space>(
    space: &S,
    map: &Map<S::Point>,
    phi: &AlteringDistance,
    sample: &PairSample<S::Point>,
) -> Result<ConditionReport>
where
    S::Point: 'static,
{
    let mut report = ConditionReport::new("kannan", sample.source);
    for (k, (x, y)) in sample.pairs().iter().enumerate() {
        let tx = apply_in(space, map, x, k)?;
        let ty = apply_in(space, map, y, k)?;
        let (lhs, rhs) = kannan_sides(space, phi, x, y, &tx, &ty);
        report.record(k, || pair_labels(space, x, y), lhs, rhs, lhs < rhs, None);
    }
    Ok(report)
}

/// The Kannan inequality on consecutive orbit pairs `(xₖ, xₖ₊₁)`, `k < count`.
/// Pairs with `d(xₖ, xₖ₊₁) = 0` are skipped.
pub fn orbital_kannan_check<S: Space>(
    space: &S,
    map: &Map<S::Point>,
    phi: &AlteringDistance,
    x0: &S::Point,
    count: usize,
) -> Result<ConditionReport>
where
    S::Point: 'static,
{
    let trace = orbit(space, map, x0, count + 1)?;
    let pts = &trace.points;
    let mut report = ConditionReport::new("orbital_kannan", SampleSource::Orbit);
    for k in 0..count {
        if trace.step_dist[k] == 0.0 {
            continue;
        }
        let (x, y) = (&pts[k], &pts[k + 1]);
        let (lhs, rhs) = kannan_sides(space, phi, x, y, y, &pts[k + 2]);
        report.record(k, || pair_labels(space, x, y), lhs, rhs, lhs < rhs, None);
    }
    Ok(report)
}

/// For every `ε` in `eps_grid` with `δ = delta_rule(ε)` and all
/// `0 ≤ i < j ≤ horizon`: `φ(d(Tⁱx₀, Tʲx₀)) < ε + δ ⇒ φ(d(Tⁱ⁺¹x₀, Tʲ⁺¹x₀)) ≤ ε`.
///
/// Only pairs whose antecedent holds count as checked; the recorded margin is
/// `ε − φ(d(Tⁱ⁺¹x₀, Tʲ⁺¹x₀))`.
pub fn shift_condition_check<S: Space>(
    space: &S,
    map: &Map<S::Point>,
    phi: &AlteringDistance,
    x0: &S::Point,
    delta_rule: impl Fn(f64) -> f64,
    eps_grid: &[f64],
    horizon: usize,
) -> Result<ConditionReport>
where
    S::Point: 'static,
{
    let trace = orbit(space, map, x0, horizon + 1)?;
    let pts = &trace.points;
    let mut report = ConditionReport::new("shift", SampleSource::Orbit);
    for &eps in eps_grid {
        if !(eps > 0.0) {
            return Err(Error::InvalidParameter(format!("epsilon must be positive, got {eps}")));
        }
        let delta = delta_rule(eps);
        if !(delta > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "delta({eps}) = {delta} is not positive"
            )));
        }
        for i in 0..horizon {
            for j in i + 1..=horizon {
                let before = phi.apply(space.distance(&pts[i], &pts[j]));
                if !(before < eps + delta) {
                    continue;
                }
                let after = phi.apply(space.distance(&pts[i + 1], &pts[j + 1]));
                report.record(
                    i,
                    || pair_labels(space, &pts[i + 1], &pts[j + 1]),
                    after,
                    eps,
                    after <= eps,
                    Some(ShiftIndex { i, j, eps }),
                );
            }
        }
    }
    Ok(report)
}
