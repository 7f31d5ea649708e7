//! Canned expectations for each worked example.

use serde::Serialize;

use crate::conditions::{edelstein_check, kannan_check, orbital_kannan_check, PairSample};
use crate::corpus::{
    interval_halving, oscillating_orbit_space, rect_b_alpha_ln, rect_b_family, sequence_domain,
    sequence_space, OSC_DEFAULT_DEPTH,
};
use crate::error::{Error, Result};
use crate::fclass::{AlteringDistance, FGenerator};
use crate::fspace::alpha_divergence_profile;
use crate::solver::{
    accumulation_points, cauchy_tail_check, fixed_point_scan, monotone_step_check, orbit, picard,
    SolveStatus,
};
use crate::space::{Basis, Space};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expectation {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn expect(name: &str, passed: bool, detail: String) -> Expectation {
    Expectation {
        name: name.to_string(),
        passed,
        detail,
    }
}

/// Runs every expectation attached to the example `id`.
pub fn reproduce(id: &str) -> Result<Vec<Expectation>> {
    match id {
        "interval-halving" => interval_halving_expectations(),
        "oscillating-orbit" => oscillating_expectations(),
        "sequence-space" => sequence_expectations(),
        "rect-b" => rect_b_expectations(),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

fn interval_halving_expectations() -> Result<Vec<Expectation>> {
    let ex = interval_halving();
    let (space, map) = (&ex.space, ex.map());
    let mut out = Vec::new();

    let third = 2.0 / 3.0;
    let t = map.apply(&third).unwrap_or(f64::NAN);
    out.push(expect(
        "T(2/3) = 2/3",
        (t - third).abs() <= f64::EPSILON,
        format!("T(2/3) = {t}"),
    ));

    let report = picard(space, map, &0.0, 1e-9, 10_000)?;
    let err = report.fixed_point.map_or(f64::INFINITY, |z| (z - third).abs());
    out.push(expect(
        "picard from 0 reaches 2/3",
        report.status == SolveStatus::Converged && report.iterations <= 200 && err <= 1e-8,
        format!("{:?} after {} iterations, |z - 2/3| = {err:e}", report.status, report.iterations),
    ));

    let sample = PairSample::random_interval(0.0, 1.0, 10_000, 1);
    let ed = edelstein_check(space, map, &AlteringDistance::square(), &sample)?;
    let margin = ed.margin_min.unwrap_or(f64::NAN);
    out.push(expect(
        "edelstein with phi = square on 10000 random pairs",
        ed.passed && margin > 0.0,
        format!("{} pairs, {} violations, margin_min = {margin:e}", ed.checked, ed.violations.len()),
    ));

    let outside = (0..=1000)
        .map(|k| k as f64 / 1000.0)
        .filter(|x| !(0.5..=1.0).contains(&map.apply(x).unwrap_or(f64::NAN)))
        .count();
    out.push(expect(
        "T maps [0, 1] into [1/2, 1]",
        outside == 0,
        format!("{outside} of 1001 grid points map outside [1/2, 1]"),
    ));

    let trace = orbit(space, map, &0.0, 30)?;
    let steps = monotone_step_check(&trace, &AlteringDistance::square())?;
    out.push(expect(
        "orbit steps strictly decrease under phi = square",
        steps.passed,
        format!("{} consecutive step pairs, {} violations", steps.checked, steps.violations.len()),
    ));
    Ok(out)
}

fn oscillating_expectations() -> Result<Vec<Expectation>> {
    let ex = oscillating_orbit_space(OSC_DEFAULT_DEPTH)?;
    let (space, map) = (&ex.space, ex.map());
    let id = AlteringDistance::identity();
    let mut out = Vec::new();

    let x0 = 7.0 / 3.0;
    let head = orbit(space, map, &x0, 4)?;
    let want = [7.0 / 3.0, -9.0 / 4.0, 13.0 / 6.0, -15.0 / 7.0, 19.0 / 9.0];
    let close = head
        .points
        .iter()
        .zip(want)
        .all(|(x, w)| (x - w).abs() <= 1e-12);
    out.push(expect(
        "orbit from 7/3 starts 7/3, -9/4, 13/6, -15/7, 19/9",
        close,
        format!("{:?}", head.points),
    ));

    let ok = orbital_kannan_check(space, map, &id, &x0, 200)?;
    out.push(expect(
        "orbital kannan with phi = id on 200 orbit pairs",
        ok.passed,
        format!("{} pairs, {} violations", ok.checked, ok.violations.len()),
    ));

    let trace = orbit(space, map, &x0, 399)?;
    let reps = accumulation_points(space, &trace, 1e-2, 5)?;
    let near = |z: f64| reps.iter().any(|r| (r - z).abs() <= 1e-2);
    out.push(expect(
        "accumulation points near 2 and -2",
        reps.len() == 2 && near(2.0) && near(-2.0),
        format!("representatives {reps:?}"),
    ));

    let d = space.distance(&2.0, &map.apply(&2.0).unwrap_or(f64::NAN));
    out.push(expect("d(2, T(2)) = 4", d == 4.0, format!("d(2, T(2)) = {d}")));

    let report = picard(space, map, &2.0, 1e-9, 10_000)?;
    out.push(expect(
        "picard from 2 detects a cycle",
        report.status == SolveStatus::CycleDetected,
        format!("{:?} after {} iterations", report.status, report.iterations),
    ));

    let scan = fixed_point_scan(space, map)?;
    out.push(expect(
        "no fixed point in the carrier",
        scan.fixed_points.is_empty(),
        format!("{} points scanned, fixed points {:?}", scan.scanned, scan.fixed_points),
    ));

    let sample = PairSample::new([(2.0, -2.0)], crate::conditions::SampleSource::Explicit);
    let ed = edelstein_check(space, map, &id, &sample)?;
    out.push(expect(
        "edelstein with phi = id fails at (2, -2)",
        !ed.passed,
        format!("{} violations", ed.violations.len()),
    ));
    Ok(out)
}

fn sequence_expectations() -> Result<Vec<Expectation>> {
    let n = 1000;
    let ex = sequence_space(n)?;
    let (space, map) = (&ex.space, ex.map());
    let id = AlteringDistance::identity();
    let mut out = Vec::new();

    let sample = PairSample::all_pairs(&sequence_domain(n));
    let k = kannan_check(space, map, &id, &sample)?;
    out.push(expect(
        "kannan with phi = id on all pairs with 3i, 3j <= 1000",
        k.passed,
        format!(
            "{} pairs, {} violations, margin_min = {:e}",
            k.checked,
            k.violations.len(),
            k.margin_min.unwrap_or(f64::NAN)
        ),
    ));

    let scan = fixed_point_scan(space, map)?;
    out.push(expect(
        "no fixed point",
        scan.fixed_points.is_empty(),
        format!(
            "{} points scanned ({} outside the domain of T)",
            scan.scanned, scan.undefined
        ),
    ));

    // Ten steps from e1 reach e_{3^10}, beyond N = 1000; the distances do not
    // depend on N, so a larger truncation is used for the orbit.
    let long = sequence_space(3u64.pow(10))?;
    let trace = orbit(&long.space, long.map(), &Basis(1), 10)?;
    let diam = cauchy_tail_check(&trace, &long.space, 5)?;
    out.push(expect(
        "orbit windows never shrink below 1",
        diam.iter().all(|&d| d >= 1.0),
        format!("window diameters {diam:?}"),
    ));

    let report = picard(space, map, &Basis(1), 1e-9, 5)?;
    out.push(expect(
        "picard from e1 exhausts a budget of 5",
        report.status == SolveStatus::BudgetExhausted,
        format!("{:?}", report.status),
    ));
    Ok(out)
}

fn rect_b_expectations() -> Result<Vec<Expectation>> {
    let profile = alpha_divergence_profile(rect_b_family, &FGenerator::ln(), 2..=50)?;
    let worst = profile
        .iter()
        .map(|&(n, a)| (a - rect_b_alpha_ln(n)).abs())
        .fold(0.0f64, f64::max);
    let increasing = profile.windows(2).all(|w| w[1].1 > w[0].1);
    let spread = profile[profile.len() - 1].1 - profile[0].1;
    Ok(vec![
        expect(
            "min_alpha(n) = ln(15 n^2 / 6) for n = 2..50",
            worst <= 1e-9,
            format!("largest deviation {worst:e}"),
        ),
        expect(
            "min_alpha strictly increasing in n",
            increasing,
            format!("{} values", profile.len()),
        ),
        expect(
            "min_alpha(50) - min_alpha(2) > 5",
            spread > 5.0,
            format!("difference {spread}"),
        ),
    ])
}
