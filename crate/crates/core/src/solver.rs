//! Picard iteration and orbit diagnostics.

use serde::Serialize;

use crate::conditions::{ConditionReport, SampleSource};
use crate::error::{Error, Result};
use crate::fclass::AlteringDistance;
use crate::space::{apply_in, Map, Space};

/// Number of past iterates compared against each new one for cycle detection.
pub const CYCLE_WINDOW: usize = 64;

/// The orbit `x₀, Tx₀, …, x_N` with step distances `sₙ = d(xₙ, xₙ₊₁)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationTrace<P> {
    pub points: Vec<P>,
    pub step_dist: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_step: Option<Vec<f64>>,
}

impl<P> IterationTrace<P> {
    fn start(x0: P) -> Self {
        IterationTrace {
            points: vec![x0],
            step_dist: Vec::new(),
            phi_step: None,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Fills `phi_step` with `φ(sₙ)`.
    pub fn with_phi(mut self, phi: &AlteringDistance) -> Self {
        self.phi_step = Some(self.step_dist.iter().map(|&s| phi.apply(s)).collect());
        self
    }
}

/// `n` applications of `map` starting from `x0`.
pub fn orbit<S: Space>(space: &S, map: &Map<S::Point>, x0: &S::Point, n: usize) -> Result<IterationTrace<S::Point>>
where
    S::Point: 'static,
{
    if !space.contains(x0) {
        return Err(Error::NotInCarrier(space.label(x0)));
    }
    let mut trace = IterationTrace::start(x0.clone());
    for k in 0..n {
        let x = &trace.points[k];
        let next = apply_in(space, map, x, k)?;
        trace.step_dist.push(space.distance(x, &next));
        trace.points.push(next);
    }
    Ok(trace)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Converged,
    CycleDetected,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport<P> {
    pub status: SolveStatus,
    pub fixed_point: Option<P>,
    /// `d(z, Tz)` re-evaluated at the returned fixed point.
    pub residual: Option<f64>,
    pub iterations: usize,
    /// Iterates `x_k, …, x_n` of a detected cycle, with `T(x_n) ≈ x_k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<P>>,
    #[serde(skip)]
    pub trace: IterationTrace<P>,
}

/// Picard iteration `xₙ₊₁ = T(xₙ)`.
///
/// Stops when a step `sₙ ≤ tol` is certified by an independent residual
/// `d(xₙ₊₁, T xₙ₊₁) ≤ 2·tol` (converged), when a cycle is confirmed, or after
/// `max_iter` steps. `iterations` is the index `n` of the last step taken.
///
/// A cycle candidate is an iterate `xₙ₊₁` within `tol` of one of the previous
/// [`CYCLE_WINDOW`] iterates `x_k` with every step in between larger than
/// `tol`. With period `p = n + 1 − k`, it is confirmed once whole periods
/// covering at least [`CYCLE_WINDOW`] further steps repeat it, each iterate
/// within `tol` of the one `p` steps back and each step length within `tol`
/// of the step `p` back. An orbit alternating around its limit fails this
/// because its steps keep shrinking.
pub fn picard<S: Space>(
    space: &S,
    map: &Map<S::Point>,
    x0: &S::Point,
    tol: f64,
    max_iter: usize,
) -> Result<SolveReport<S::Point>>
where
    S::Point: 'static,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    if !space.contains(x0) {
        return Err(Error::NotInCarrier(space.label(x0)));
    }
    let mut trace = IterationTrace::start(x0.clone());
    // (k, n) of an unconfirmed cycle x_k .. x_n
    let mut candidate: Option<(usize, usize)> = None;
    for n in 0..max_iter {
        let x = &trace.points[n];
        let next = apply_in(space, map, x, n)?;
        let step = space.distance(x, &next);
        trace.step_dist.push(step);
        trace.points.push(next);

        let latest = &trace.points[n + 1];
        if step <= tol {
            candidate = None;
            let image = apply_in(space, map, latest, n + 1)?;
            let residual = space.distance(latest, &image);
            if residual <= 2.0 * tol {
                return Ok(SolveReport {
                    status: SolveStatus::Converged,
                    fixed_point: Some(latest.clone()),
                    residual: Some(residual),
                    iterations: n,
                    cycle: None,
                    trace,
                });
            }
            continue;
        }

        if let Some((k, end)) = candidate {
            let p = end + 1 - k;
            let confirm = p * CYCLE_WINDOW.div_ceil(p);
            let repeats = space.distance(&trace.points[n + 1 - p], latest) <= tol
                && (trace.step_dist[n - p] - step).abs() <= tol;
            if repeats && n == end + confirm {
                return Ok(SolveReport {
                    status: SolveStatus::CycleDetected,
                    fixed_point: None,
                    residual: None,
                    iterations: n,
                    cycle: Some(trace.points[k..=end].to_vec()),
                    trace,
                });
            } else if repeats {
                continue;
            }
        }

        // Steps k..=n all exceed tol iff k > last small step index.
        let first = (n + 1).saturating_sub(CYCLE_WINDOW);
        let last_small = trace.step_dist[..n].iter().rposition(|&s| s <= tol);
        let lowest = last_small.map_or(first, |i| first.max(i + 1));
        candidate = (lowest..n)
            .rev()
            .find(|&k| space.distance(&trace.points[k], latest) <= tol)
            .map(|k| (k, n));
    }
    Ok(SolveReport {
        status: SolveStatus::BudgetExhausted,
        fixed_point: None,
        residual: None,
        iterations: max_iter,
        cycle: None,
        trace,
    })
}

/// Cluster representatives visited at least `min_hits` times.
///
/// The first half of the trace is treated as transient and ignored. The
/// remaining points are clustered greedily in order: a point joins the first
/// representative within `eps`, otherwise it becomes a new representative.
/// Representatives are therefore genuine trace points, the earliest of their
/// cluster in the retained part.
pub fn accumulation_points<S: Space>(
    space: &S,
    trace: &IterationTrace<S::Point>,
    eps: f64,
    min_hits: usize,
) -> Result<Vec<S::Point>> {
    if min_hits < 2 {
        return Err(Error::InvalidParameter("min_hits must be at least 2".into()));
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let tail = &trace.points[trace.points.len() / 2..];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for (idx, x) in tail.iter().enumerate() {
        match reps
            .iter_mut()
            .find(|(r, _)| space.distance(&tail[*r], x) < eps)
        {
            Some((_, hits)) => *hits += 1,
            None => reps.push((idx, 1)),
        }
    }
    Ok(reps
        .into_iter()
        .filter(|&(_, hits)| hits >= min_hits)
        .map(|(r, _)| tail[r].clone())
        .collect())
}

/// Diameters of `windows` consecutive blocks of the trace tail.
///
/// Blocks have `⌊len / windows⌋` points each; the leading remainder is dropped.
pub fn cauchy_tail_check<S: Space>(
    trace: &IterationTrace<S::Point>,
    space: &S,
    windows: usize,
) -> Result<Vec<f64>> {
    if windows == 0 || trace.len() < 2 * windows {
        return Err(Error::InvalidParameter(format!(
            "trace of length {} cannot be split into {windows} windows of at least 2 points",
            trace.len()
        )));
    }
    let block = trace.len() / windows;
    let start = trace.len() - block * windows;
    Ok(trace.points[start..]
        .chunks(block)
        .map(|chunk| {
            let mut diam = 0.0f64;
            for (i, a) in chunk.iter().enumerate() {
                for b in &chunk[i + 1..] {
                    diam = diam.max(space.distance(a, b));
                }
            }
            diam
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Uniqueness {
    None,
    /// Exactly one fixed point among the scanned points; says nothing about
    /// points outside the truncation.
    UniqueInScannedCarrier,
    Multiple,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedPointScan<P> {
    pub fixed_points: Vec<P>,
    pub scanned: usize,
    /// Points where the map is undefined or leaves the carrier.
    pub undefined: usize,
}

impl<P> FixedPointScan<P> {
    pub fn uniqueness(&self) -> Uniqueness {
        match self.fixed_points.len() {
            0 => Uniqueness::None,
            1 => Uniqueness::UniqueInScannedCarrier,
            _ => Uniqueness::Multiple,
        }
    }
}

/// Every carrier point `z` with `d(z, Tz) = 0`.
pub fn fixed_point_scan<S: Space>(space: &S, map: &Map<S::Point>) -> Result<FixedPointScan<S::Point>>
where
    S::Point: 'static,
{
    let points = space
        .points()
        .ok_or_else(|| Error::Precondition("fixed_point_scan needs an enumerable carrier".into()))?;
    let mut scan = FixedPointScan {
        fixed_points: Vec::new(),
        scanned: points.len(),
        undefined: 0,
    };
    for (k, z) in points.into_iter().enumerate() {
        match apply_in(space, map, &z, k) {
            Ok(tz) if space.distance(&z, &tz) == 0.0 => scan.fixed_points.push(z),
            Ok(_) => {}
            Err(_) => scan.undefined += 1,
        }
    }
    Ok(scan)
}

/// `φ(sₙ₊₁) < φ(sₙ)` for consecutive steps, stopping at the first zero step.
pub fn monotone_step_check<P>(trace: &IterationTrace<P>, phi: &AlteringDistance) -> Result<ConditionReport> {
    if trace.step_dist.len() < 2 {
        return Err(Error::InvalidParameter("monotone_step_check needs at least 2 steps".into()));
    }
    let mut report = ConditionReport::new("monotone_step", SampleSource::Orbit);
    for (n, w) in trace.step_dist.windows(2).enumerate() {
        if w[0] == 0.0 || w[1] == 0.0 {
            break;
        }
        let lhs = phi.apply(w[1]);
        let rhs = phi.apply(w[0]);
        report.record(
            n,
            || (format!("s{}", n + 1), format!("s{n}")),
            lhs,
            rhs,
            lhs < rhs,
            None,
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{AnalyticSpace, FiniteSpace};

    fn halving() -> (AnalyticSpace<f64>, Map<f64>) {
        (AnalyticSpace::interval(0.0, 1.0), Map::affine(-0.5, 1.0))
    }

    #[test]
    fn orbit_of_affine_map() {
        let (s, t) = halving();
        let tr = orbit(&s, &t, &0.0, 4).unwrap();
        assert_eq!(tr.points, vec![0.0, 1.0, 0.5, 0.75, 0.625]);
        assert_eq!(tr.step_dist, vec![1.0, 0.5, 0.25, 0.125]);
    }

    #[test]
    fn orbit_of_identity() {
        let (s, _) = halving();
        let tr = orbit(&s, &Map::identity(), &0.3, 3).unwrap();
        assert_eq!(tr.points, vec![0.3; 4]);
        assert_eq!(tr.step_dist, vec![0.0; 3]);
        assert!(orbit(&s, &Map::identity(), &2.0, 3).is_err());
    }

    #[test]
    fn orbit_reports_failing_index() {
        let (s, _) = halving();
        let err = orbit(&s, &Map::affine(2.0, 0.0), &0.2, 5).unwrap_err();
        assert_eq!(err, Error::LeavesCarrier { point: "0.8".into(), index: 2 });
    }

    #[test]
    fn picard_converges_on_halving_map() {
        let (s, t) = halving();
        let r = picard(&s, &t, &0.0, 1e-9, 200).unwrap();
        assert_eq!(r.status, SolveStatus::Converged);
        assert!((r.fixed_point.unwrap() - 2.0 / 3.0).abs() < 1e-8);
        assert!(r.residual.unwrap() <= 2e-9);
        assert_eq!(r.trace.step_dist.len(), r.trace.points.len() - 1);
    }

    #[test]
    fn picard_identity_converges_immediately() {
        let (s, _) = halving();
        let r = picard(&s, &Map::identity(), &0.4, 1e-9, 10).unwrap();
        assert_eq!(r.status, SolveStatus::Converged);
        assert_eq!(r.iterations, 0);
        assert_eq!(r.residual, Some(0.0));
    }

    #[test]
    fn picard_detects_two_cycle() {
        let s = FiniteSpace::from_matrix(vec![vec![0.0, 4.0], vec![4.0, 0.0]]).unwrap();
        let t = Map::total("swap", |x: &usize| 1 - *x);
        let r = picard(&s, &t, &0, 1e-6, 100).unwrap();
        assert_eq!(r.status, SolveStatus::CycleDetected);
        assert_eq!(r.cycle, Some(vec![0, 1]));
        assert_eq!(r.iterations, 1 + CYCLE_WINDOW);
    }

    #[test]
    fn picard_alternating_contraction_is_not_a_cycle() {
        let s = AnalyticSpace::interval(-10.0, 10.0);
        let r = picard(&s, &Map::affine(-0.6338245029267445, 0.0), &-2.352893564655163, 1e-9, 1000).unwrap();
        assert_eq!(r.status, SolveStatus::Converged);
        assert!(r.fixed_point.unwrap().abs() < 1e-9);
    }

    #[test]
    fn picard_budget() {
        let s = AnalyticSpace::new(
            "reals",
            crate::space::PointKind::Real,
            |x: &f64, y: &f64| (x - y).abs(),
            |_| true,
        );
        let r = picard(&s, &Map::affine(1.0, 1.0), &0.0, 1e-9, 7).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExhausted);
        assert_eq!(r.iterations, 7);
        assert!(picard(&s, &Map::identity(), &0.0, 0.0, 7).is_err());
    }

    #[test]
    fn accumulation_of_constant_trace() {
        let (s, _) = halving();
        let tr = orbit(&s, &Map::identity(), &0.5, 9).unwrap();
        assert_eq!(accumulation_points(&s, &tr, 0.1, 2).unwrap(), vec![0.5]);
        assert!(accumulation_points(&s, &tr, 0.1, 1).is_err());
    }

    #[test]
    fn accumulation_of_convergent_orbit() {
        let (s, t) = halving();
        let tr = orbit(&s, &t, &0.0, 99).unwrap();
        let reps = accumulation_points(&s, &tr, 1e-3, 10).unwrap();
        assert_eq!(reps.len(), 1);
        assert!((reps[0] - 2.0 / 3.0).abs() < 1e-3);
    }

    #[test]
    fn cauchy_windows_shrink_on_contraction() {
        let (s, t) = halving();
        let tr = orbit(&s, &t, &0.0, 99).unwrap();
        let d = cauchy_tail_check(&tr, &s, 4).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
        let still = orbit(&s, &Map::identity(), &0.1, 9).unwrap();
        assert_eq!(cauchy_tail_check(&still, &s, 3).unwrap(), vec![0.0; 3]);
        assert!(cauchy_tail_check(&still, &s, 6).is_err());
    }

    #[test]
    fn scan_identity_and_halving() {
        let s = FiniteSpace::from_matrix(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let scan = fixed_point_scan(&s, &Map::identity()).unwrap();
        assert_eq!(scan.fixed_points, vec![0, 1]);
        assert_eq!(scan.uniqueness(), Uniqueness::Multiple);
        let (interval, t) = halving();
        assert!(fixed_point_scan(&interval, &t).is_err());
    }

    #[test]
    fn monotone_steps() {
        let (s, t) = halving();
        let tr = orbit(&s, &t, &0.0, 40).unwrap();
        let r = monotone_step_check(&tr, &AlteringDistance::square()).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked, 39);

        let still = orbit(&s, &Map::identity(), &0.1, 5).unwrap();
        let r = monotone_step_check(&still, &AlteringDistance::identity()).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked, 0);

        let drift = orbit(&s, &Map::affine(1.0, 0.1), &0.0, 3).unwrap();
        assert!(!monotone_step_check(&drift, &AlteringDistance::identity()).unwrap().passed);
    }

    #[test]
    fn with_phi_fills_series() {
        let (s, t) = halving();
        let tr = orbit(&s, &t, &0.0, 3).unwrap().with_phi(&AlteringDistance::square());
        assert_eq!(tr.phi_step, Some(vec![1.0, 0.25, 0.0625]));
    }
}
