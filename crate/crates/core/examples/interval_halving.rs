//! `T(x) = 1 − x/2` on `[0, 1]`: Picard iteration, the Edelstein condition
//! with `φ(t) = t²`, and shrinking orbit windows.
//!
//! ```text
//! cargo run --example interval_halving
//! ```

use fmetric::conditions::{edelstein_check, PairSample};
use fmetric::corpus::interval_halving;
use fmetric::solver::{cauchy_tail_check, monotone_step_check, orbit, picard};
use fmetric::AlteringDistance;

fn main() -> fmetric::Result<()> {
    let ex = interval_halving();
    let (space, map) = (&ex.space, ex.map());

    let report = picard(space, map, &0.0, 1e-9, 10_000)?;
    println!(
        "picard: {:?} after {} iterations at {:?} (residual {:?})",
        report.status, report.iterations, report.fixed_point, report.residual
    );

    let phi = AlteringDistance::square();
    let sample = PairSample::random_interval(0.0, 1.0, 10_000, 1);
    let ed = edelstein_check(space, map, &phi, &sample)?;
    println!(
        "edelstein (square): passed {} on {} pairs, margin_min {:?}",
        ed.passed, ed.checked, ed.margin_min
    );

    let trace = orbit(space, map, &0.0, 99)?;
    println!("window diameters: {:?}", cauchy_tail_check(&trace, space, 4)?);
    let steps = monotone_step_check(&orbit(space, map, &0.0, 30)?, &phi)?;
    println!("steps strictly decreasing: {}", steps.passed);
    Ok(())
}
