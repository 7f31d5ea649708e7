//! `T(eᵢ) = e₃ᵢ` with `d(eᵢ, eⱼ) = 1 + |1/i − 1/j|`: the Kannan inequality
//! holds on every pair, but orbits never become Cauchy and there is no
//! fixed point.
//!
//! ```text
//! cargo run --example sequence_space
//! ```

use fmetric::conditions::{kannan_check, PairSample};
use fmetric::corpus::{sequence_domain, sequence_space};
use fmetric::solver::{cauchy_tail_check, fixed_point_scan, orbit, picard};
use fmetric::{AlteringDistance, Basis};

fn main() -> fmetric::Result<()> {
    let n = 1000;
    let ex = sequence_space(n)?;
    let (space, map) = (&ex.space, ex.map());

    let sample = PairSample::all_pairs(&sequence_domain(n));
    let k = kannan_check(space, map, &AlteringDistance::identity(), &sample)?;
    println!(
        "kannan on {} pairs: {} (margin_min {:?})",
        k.checked, k.passed, k.margin_min
    );

    let scan = fixed_point_scan(space, map)?;
    println!(
        "fixed points among {} points: {:?} ({} outside the domain of T)",
        scan.scanned, scan.fixed_points, scan.undefined
    );

    let long = sequence_space(3u64.pow(10))?;
    let trace = orbit(&long.space, long.map(), &Basis(1), 10)?;
    println!("orbit steps: {:?}", trace.step_dist);
    println!("window diameters: {:?}", cauchy_tail_check(&trace, &long.space, 5)?);

    let r = picard(space, map, &Basis(1), 1e-9, 5)?;
    println!("picard from e1: {:?} after {} steps", r.status, r.iterations);
    Ok(())
}
