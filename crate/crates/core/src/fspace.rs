//! F-metric axiom verification on finite spaces, minimal slack `α`, open balls
//! and the constructive topology witnesses (disjoint balls, local ball bases).
//!
//! Axiom (D3) quantifies over every finite chain joining `x` to `y`. Because the
//! generator is non-decreasing, the tightest constraint comes from the chain
//! with the smallest summed length, so it suffices to compare `f(d(x, y))`
//! against `f(sp(x, y)) + α` where `sp` is the minimal chain sum.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fclass::{self, FGenerator};
use crate::space::{FiniteSpace, Space};

/// Upper bound on the `n` searched by [`hausdorff_witness`].
pub const HAUSDORFF_MAX_N: u64 = 1_000_000;

/// A generator paired with its slack constant.
#[derive(Debug, Clone)]
pub struct Witness {
    pub f: FGenerator,
    pub alpha: f64,
}

impl Witness {
    pub fn new(f: FGenerator, alpha: f64) -> Result<Self> {
        if !(alpha >= 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "witness alpha must be a finite non-negative number, got {alpha}"
            )));
        }
        Ok(Witness { f, alpha })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    D1,
    D2,
    D3,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub pair: (usize, usize),
    pub labels: (String, String),
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "axiom")]
    pub axioms: Vec<Axiom>,
    pub passed: bool,
    pub violations: Vec<AxiomViolation>,
}

impl VerificationReport {
    fn new(axioms: Vec<Axiom>, violations: Vec<AxiomViolation>) -> Self {
        VerificationReport {
            axioms,
            passed: violations.is_empty(),
            violations,
        }
    }
}

fn violation(space: &FiniteSpace, axiom: Axiom, i: usize, j: usize, lhs: f64, rhs: f64) -> AxiomViolation {
    AxiomViolation {
        axiom,
        pair: (i, j),
        labels: (space.label(&i), space.label(&j)),
        lhs,
        rhs,
    }
}

/// Checks (D1) and (D2).
///
/// (D1) violations: a non-zero diagonal entry (`lhs` = entry, `rhs` = 0) or a
/// non-positive off-diagonal entry. (D2) violations list `d(i, j)` against
/// `d(j, i)` once per unordered pair.
pub fn check_identity_symmetry(space: &FiniteSpace) -> VerificationReport {
    let n = space.len();
    let mut violations = Vec::new();
    for i in 0..n {
        let dii = space.d(i, i);
        if dii != 0.0 {
            violations.push(violation(space, Axiom::D1, i, i, dii, 0.0));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let dij = space.d(i, j);
            if !(dij > 0.0) {
                violations.push(violation(space, Axiom::D1, i, j, dij, 0.0));
            }
            if i < j && dij != space.d(j, i) {
                violations.push(violation(space, Axiom::D2, i, j, dij, space.d(j, i)));
            }
        }
    }
    VerificationReport::new(vec![Axiom::D1, Axiom::D2], violations)
}

fn require_identity_symmetry(space: &FiniteSpace) -> Result<()> {
    let report = check_identity_symmetry(space);
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!(
            "{:?} fails at ({}, {})",
            v.axiom, v.labels.0, v.labels.1
        ))),
    }
}

fn require_f1(f: &FGenerator) -> Result<()> {
    let (lo, hi, n) = fclass::F1_DEFAULTS;
    let report = fclass::check_f1(f, lo, hi, n)?;
    if report.passed {
        Ok(())
    } else {
        Err(Error::Precondition(format!("generator `{}` is not non-decreasing", f.name())))
    }
}

/// Minimal chain sums between all pairs.
///
/// `sp[i][j]` is the least value of `d(u₁,u₂) + … + d(u_{N-1},u_N)` over chains
/// from `i` to `j`. Sums are accumulated left to right from the lower-indexed
/// endpoint, so `sp` is exactly symmetric and each entry is the floating-point
/// value of one concrete chain. Rows are computed by a label-setting
/// relaxation (dense Dijkstra) from each source; since rounded addition of a
/// non-negative term is monotone, this is the exact minimum over all chains of
/// those rounded sums.
pub fn min_chain_sums(space: &FiniteSpace) -> Result<Vec<Vec<f64>>> {
    require_identity_symmetry(space)?;
    let n = space.len();
    let mut sp = vec![vec![0.0; n]; n];
    let mut best = vec![f64::INFINITY; n];
    let mut settled = vec![false; n];
    for source in 0..n {
        best.iter_mut().for_each(|b| *b = f64::INFINITY);
        settled.iter_mut().for_each(|s| *s = false);
        best[source] = 0.0;
        for _ in 0..n {
            let mut u = usize::MAX;
            let mut du = f64::INFINITY;
            for (v, (&b, &done)) in best.iter().zip(&settled).enumerate() {
                if !done && (u == usize::MAX || b < du) {
                    u = v;
                    du = b;
                }
            }
            settled[u] = true;
            for v in 0..n {
                if !settled[v] {
                    let cand = du + space.d(u, v);
                    if cand < best[v] {
                        best[v] = cand;
                    }
                }
            }
        }
        for j in source + 1..n {
            sp[source][j] = best[j];
            sp[j][source] = best[j];
        }
    }
    Ok(sp)
}

/// Checks (D3) for the witness, exactly (no tolerance).
pub fn verify_d3(space: &FiniteSpace, w: &Witness) -> Result<VerificationReport> {
    verify_d3_with_margin(space, w, 0.0)
}

/// Checks `f(d(i, j)) ≤ f(sp(i, j)) + α + margin` for every pair `i < j`.
pub fn verify_d3_with_margin(space: &FiniteSpace, w: &Witness, margin: f64) -> Result<VerificationReport> {
    if !(margin >= 0.0) {
        return Err(Error::InvalidParameter(format!("margin must be >= 0, got {margin}")));
    }
    require_f1(&w.f)?;
    let sp = min_chain_sums(space)?;
    let n = space.len();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = w.f.eval(space.d(i, j))?;
            let rhs = w.f.eval(sp[i][j])? + w.alpha + margin;
            if !(lhs <= rhs) {
                violations.push(violation(space, Axiom::D3, i, j, lhs, rhs));
            }
        }
    }
    Ok(VerificationReport::new(vec![Axiom::D3], violations))
}

/// Smallest `α ≥ 0` for which [`verify_d3`] passes with generator `f`.
///
/// Per pair the slack `f(d) − f(sp)` is rounded up to the least float that
/// makes `f(sp) + α ≥ f(d)` hold in floating point.
pub fn min_alpha(space: &FiniteSpace, f: &FGenerator) -> Result<f64> {
    require_f1(f)?;
    let sp = min_chain_sums(space)?;
    let n = space.len();
    let mut alpha = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f.eval(space.d(i, j))?;
            let base = f.eval(sp[i][j])?;
            if base + alpha >= lhs {
                continue;
            }
            let mut gap = (lhs - base).max(alpha);
            while base + gap < lhs {
                gap = gap.next_up();
            }
            alpha = alpha.max(gap);
        }
    }
    Ok(alpha)
}

/// `min_alpha` along a family of truncations.
pub fn alpha_divergence_profile(
    family: impl Fn(usize) -> Result<FiniteSpace>,
    f: &FGenerator,
    range: RangeInclusive<usize>,
) -> Result<Vec<(usize, f64)>> {
    if range.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "empty range {}..={}",
            range.start(),
            range.end()
        )));
    }
    range.map(|n| Ok((n, min_alpha(&family(n)?, f)?))).collect()
}

/// The strict open ball `{y : d(x, y) < r}` over an enumerable carrier.
pub fn open_ball<S: Space>(space: &S, x: &S::Point, r: f64) -> Result<Vec<S::Point>> {
    if !(r > 0.0) {
        return Err(Error::InvalidParameter(format!("ball radius must be positive, got {r}")));
    }
    if !space.contains(x) {
        return Err(Error::NotInCarrier(space.label(x)));
    }
    let points = space
        .points()
        .ok_or_else(|| Error::Precondition("carrier is not enumerable".into()))?;
    Ok(points
        .into_iter()
        .filter(|y| space.distance(x, y) < r)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HausdorffWitness {
    /// Index `n` of `aₙ = d(x, y)/n`.
    pub n: u64,
    /// `aₙ / 2`.
    pub radius: f64,
    pub ball_x: Vec<usize>,
    pub ball_y: Vec<usize>,
}

/// Smallest `n ≥ 1` such that the open balls of radius `d(x, y)/(2n)` around
/// `x` and `y` are disjoint.
///
/// The balls meet iff some `z` has `max(d(x, z), d(y, z)) < r`, so each
/// candidate `n` costs one comparison; the final balls are recomputed with
/// [`open_ball`] and checked disjoint before returning.
pub fn hausdorff_witness(space: &FiniteSpace, x: usize, y: usize) -> Result<HausdorffWitness> {
    for p in [x, y] {
        if !space.contains(&p) {
            return Err(Error::NotInCarrier(space.label(&p)));
        }
    }
    if x == y {
        return Err(Error::Precondition("hausdorff_witness needs x != y".into()));
    }
    require_identity_symmetry(space)?;
    let dxy = space.d(x, y);
    let closest_shared = (0..space.len())
        .map(|z| space.d(x, z).max(space.d(y, z)))
        .fold(f64::INFINITY, f64::min);
    for n in 1..=HAUSDORFF_MAX_N {
        let radius = (dxy / n as f64) / 2.0;
        if closest_shared < radius {
            continue;
        }
        let ball_x = open_ball(space, &x, radius)?;
        let ball_y = open_ball(space, &y, radius)?;
        if ball_x.iter().any(|p| ball_y.contains(p)) {
            return Err(Error::Precondition(format!(
                "balls of radius {radius} around {} and {} intersect",
                space.label(&x),
                space.label(&y)
            )));
        }
        return Ok(HausdorffWitness {
            n,
            radius,
            ball_x,
            ball_y,
        });
    }
    Err(Error::Precondition(format!(
        "no disjoint balls found for n <= {HAUSDORFF_MAX_N}"
    )))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseBall {
    /// First `n` at which `B(x, 1/n)` equals `members`.
    pub n: u64,
    pub members: Vec<usize>,
}

/// The distinct balls `B(x, 1/n)`, `n = 1, 2, …`, up to and including `{x}`.
///
/// Only the values of `n` where the ball shrinks are visited.
pub fn ball_base(space: &FiniteSpace, x: usize) -> Result<Vec<BaseBall>> {
    if !space.contains(&x) {
        return Err(Error::NotInCarrier(space.label(&x)));
    }
    require_identity_symmetry(space)?;
    let mut base: Vec<BaseBall> = Vec::new();
    let mut n: u64 = 1;
    loop {
        let members = open_ball(space, &x, 1.0 / n as f64)?;
        let far = members
            .iter()
            .filter(|&&y| y != x)
            .map(|&y| space.d(x, y))
            .fold(0.0f64, f64::max);
        if base.last().is_none_or(|b| b.members != members) {
            base.push(BaseBall { n, members });
        }
        if far == 0.0 {
            return Ok(base);
        }
        // smallest n' > n with 1/n' <= far
        let guess = (1.0 / far).ceil();
        if guess > 1e15 {
            return Err(Error::InvalidParameter(format!(
                "distance {far} from {} too small to enumerate 1/n balls",
                space.label(&x)
            )));
        }
        let mut next = (guess as u64).max(n + 1);
        while 1.0 / (next as f64) > far {
            next += 1;
        }
        while next - 1 > n && 1.0 / ((next - 1) as f64) <= far {
            next -= 1;
        }
        n = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line3() -> FiniteSpace {
        FiniteSpace::from_fn(
            (0..3).map(|i| i.to_string()).collect(),
            |i, j| (i as f64 - j as f64).abs(),
        )
    }

    fn gap_triangle() -> FiniteSpace {
        FiniteSpace::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                vec![0.0, 1.0, 5.0],
                vec![1.0, 0.0, 1.0],
                vec![5.0, 1.0, 0.0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn identity_symmetry_on_metric() {
        let r = check_identity_symmetry(&line3());
        assert!(r.passed);
        assert_eq!(r.axioms, vec![Axiom::D1, Axiom::D2]);
    }

    #[test]
    fn asymmetric_matrix_is_d2_violation() {
        let s = FiniteSpace::from_matrix(vec![vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
        let r = check_identity_symmetry(&s);
        assert!(!r.passed);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].axiom, Axiom::D2);
        assert_eq!(r.violations[0].pair, (0, 1));
    }

    #[test]
    fn zero_distance_between_distinct_points_is_d1_violation() {
        let s = FiniteSpace::from_matrix(vec![vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let r = check_identity_symmetry(&s);
        assert!(r.violations.iter().all(|v| v.axiom == Axiom::D1));
        assert_eq!(r.violations.len(), 2);
        let diag = FiniteSpace::from_matrix(vec![vec![1.0]]).unwrap();
        assert!(!check_identity_symmetry(&diag).passed);
    }

    #[test]
    fn chain_sums_shortcut_long_edge() {
        let sp = min_chain_sums(&gap_triangle()).unwrap();
        assert_eq!(sp[0][2], 2.0);
        assert_eq!(sp[2][0], 2.0);
        assert_eq!(sp[0][1], 1.0);
        assert_eq!(sp[1][1], 0.0);
    }

    #[test]
    fn chain_sums_equal_metric() {
        let s = line3();
        assert_eq!(min_chain_sums(&s).unwrap(), s.matrix().to_vec());
    }

    #[test]
    fn chain_sums_refuse_invalid_space() {
        let s = FiniteSpace::from_matrix(vec![vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
        assert!(matches!(min_chain_sums(&s), Err(Error::Precondition(_))));
    }

    #[test]
    fn d3_on_metric_with_zero_alpha() {
        let w = Witness::new(FGenerator::ln(), 0.0).unwrap();
        assert!(verify_d3(&line3(), &w).unwrap().passed);
    }

    #[test]
    fn d3_violation_and_exact_alpha() {
        let s = gap_triangle();
        let r = verify_d3(&s, &Witness::new(FGenerator::ln(), 0.0).unwrap()).unwrap();
        assert!(!r.passed);
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!(v.labels, ("a".to_string(), "c".to_string()));
        assert_eq!(v.lhs, 5f64.ln());
        assert_eq!(v.rhs, 2f64.ln());

        let alpha = min_alpha(&s, &FGenerator::ln()).unwrap();
        assert!((alpha - (2.5f64).ln()).abs() < 1e-15);
        assert!((alpha - 0.9163).abs() < 1e-4);
        let w = Witness::new(FGenerator::ln(), alpha).unwrap();
        assert!(verify_d3(&s, &w).unwrap().passed);
        let w = Witness::new(FGenerator::ln(), alpha - 1e-12).unwrap();
        assert!(!verify_d3(&s, &w).unwrap().passed);
    }

    #[test]
    fn margin_absorbs_small_excess() {
        let s = gap_triangle();
        let alpha = 2.5f64.ln() - 1e-9;
        let w = Witness::new(FGenerator::ln(), alpha).unwrap();
        assert!(!verify_d3(&s, &w).unwrap().passed);
        assert!(verify_d3_with_margin(&s, &w, 1e-6).unwrap().passed);
        assert!(verify_d3_with_margin(&s, &w, -1.0).is_err());
    }

    #[test]
    fn min_alpha_zero_on_metrics() {
        assert_eq!(min_alpha(&line3(), &FGenerator::ln()).unwrap(), 0.0);
        let two = FiniteSpace::from_matrix(vec![vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap();
        assert_eq!(min_alpha(&two, &FGenerator::neg_inv()).unwrap(), 0.0);
    }

    #[test]
    fn witness_rejects_negative_alpha() {
        assert!(Witness::new(FGenerator::ln(), -0.1).is_err());
        assert!(Witness::new(FGenerator::ln(), f64::INFINITY).is_err());
    }

    #[test]
    fn divergence_profile_constant_for_metric_family() {
        let profile =
            alpha_divergence_profile(|_| Ok(line3()), &FGenerator::ln(), 2..=5).unwrap();
        assert_eq!(profile, vec![(2, 0.0), (3, 0.0), (4, 0.0), (5, 0.0)]);
        #[allow(clippy::reversed_empty_ranges)]
        let empty = alpha_divergence_profile(|_| Ok(line3()), &FGenerator::ln(), 5..=2);
        assert!(empty.is_err());
    }

    #[test]
    fn open_balls_are_strict() {
        let s = line3();
        assert_eq!(open_ball(&s, &0, 1.0).unwrap(), vec![0]);
        assert_eq!(open_ball(&s, &0, 1.5).unwrap(), vec![0, 1]);
        assert_eq!(open_ball(&s, &1, 10.0).unwrap(), vec![0, 1, 2]);
        assert!(matches!(open_ball(&s, &7, 1.0), Err(Error::NotInCarrier(_))));
        assert!(open_ball(&s, &0, 0.0).is_err());
    }

    #[test]
    fn hausdorff_on_line() {
        let w = hausdorff_witness(&line3(), 0, 2).unwrap();
        assert_eq!(w.n, 1);
        assert_eq!(w.radius, 1.0);
        assert_eq!(w.ball_x, vec![0]);
        assert_eq!(w.ball_y, vec![2]);
    }

    #[test]
    fn hausdorff_needs_second_step_when_midpoint_is_close() {
        let s = FiniteSpace::from_matrix(vec![
            vec![0.0, 0.4, 1.0],
            vec![0.4, 0.0, 0.4],
            vec![1.0, 0.4, 0.0],
        ])
        .unwrap();
        let w = hausdorff_witness(&s, 0, 2).unwrap();
        assert_eq!(w.n, 2);
        assert_eq!(w.radius, 0.25);
        // n = 1 balls both contain point 1
        assert!(open_ball(&s, &0, 0.5).unwrap().contains(&1));
        assert!(open_ball(&s, &2, 0.5).unwrap().contains(&1));
    }

    #[test]
    fn hausdorff_two_points_and_errors() {
        let s = FiniteSpace::from_matrix(vec![vec![0.0, 7.0], vec![7.0, 0.0]]).unwrap();
        assert_eq!(hausdorff_witness(&s, 1, 0).unwrap().n, 1);
        assert!(matches!(hausdorff_witness(&s, 1, 1), Err(Error::Precondition(_))));
        assert!(hausdorff_witness(&s, 0, 5).is_err());
    }

    #[test]
    fn ball_base_cases() {
        let base = ball_base(&line3(), 0).unwrap();
        assert_eq!(base, vec![BaseBall { n: 1, members: vec![0] }]);

        let scaled = FiniteSpace::from_fn(
            (0..3).map(|i| i.to_string()).collect(),
            |i, j| 0.1 * (i as f64 - j as f64).abs(),
        );
        let base = ball_base(&scaled, 0).unwrap();
        let sets: Vec<_> = base.iter().map(|b| b.members.clone()).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![0, 1], vec![0]]);
        // strict balls: 1/5 = d(0, 2) and 1/10 = d(0, 1) already exclude
        assert_eq!(base.iter().map(|b| b.n).collect::<Vec<_>>(), vec![1, 5, 10]);

        let single = FiniteSpace::from_matrix(vec![vec![0.0]]).unwrap();
        assert_eq!(ball_base(&single, 0).unwrap(), vec![BaseBall { n: 1, members: vec![0] }]);
    }
}
