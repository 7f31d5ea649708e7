//! An orbit that alternates between neighbourhoods of `2` and `−2`: the
//! orbital Kannan condition holds, yet neither limit point is fixed.
//!
//! ```text
//! cargo run --example oscillating_orbit
//! ```

use fmetric::conditions::{edelstein_check, orbital_kannan_check, PairSample};
use fmetric::corpus::{oscillating_orbit_space, OSC_DEFAULT_DEPTH};
use fmetric::solver::{accumulation_points, fixed_point_scan, orbit, picard};
use fmetric::{AlteringDistance, Space};

fn main() -> fmetric::Result<()> {
    let ex = oscillating_orbit_space(OSC_DEFAULT_DEPTH)?;
    let (space, map) = (&ex.space, ex.map());
    let phi = AlteringDistance::identity();
    let x0 = 7.0 / 3.0;

    let head = orbit(space, map, &x0, 5)?;
    println!("orbit from 7/3: {:?}", head.points);

    let ok = orbital_kannan_check(space, map, &phi, &x0, 200)?;
    println!("orbital kannan on 200 pairs: {} (margin_min {:?})", ok.passed, ok.margin_min);

    let trace = orbit(space, map, &x0, 399)?;
    let reps = accumulation_points(space, &trace, 1e-2, 5)?;
    println!("accumulation representatives: {reps:?}");

    let t2 = map.apply(&2.0).expect("2 is in the carrier");
    println!("T(2) = {t2}, d(2, T(2)) = {}", space.distance(&2.0, &t2));
    let cyc = picard(space, map, &2.0, 1e-9, 100)?;
    println!("picard from 2: {:?}, cycle {:?}", cyc.status, cyc.cycle);
    println!("fixed points: {:?}", fixed_point_scan(space, map)?.fixed_points);

    let points = space.points().expect("finite truncation");
    let sample = PairSample::random_from(&points, 100, 0).with_leading([(2.0, -2.0)]);
    let ed = edelstein_check(space, map, &phi, &sample)?;
    println!("global edelstein: {} with {} violations", ed.passed, ed.violations.len());
    Ok(())
}
