//! Disjoint balls separating two points, and the shrinking balls `B(x, 1/n)`
//! that form a local base.
//!
//! ```text
//! cargo run --example topology_witnesses
//! ```

use fmetric::corpus::random_fspace;
use fmetric::fspace::{ball_base, hausdorff_witness};
use fmetric::{FGenerator, FiniteSpace};

fn main() -> fmetric::Result<()> {
    let chain = FiniteSpace::from_fn(vec!["a".into(), "b".into(), "c".into()], |i, j| {
        match (i.min(j), i.max(j)) {
            (0, 2) => 1.0,
            _ => 0.4,
        }
    });
    let w = hausdorff_witness(&chain, 0, 2)?;
    println!(
        "a, c: n = {}, radius {}, balls {:?} and {:?}",
        w.n, w.radius, w.ball_x, w.ball_y
    );

    let line = FiniteSpace::from_fn((0..11).map(|i| i.to_string()).collect(), |i, j| {
        0.1 * (i as f64 - j as f64).abs()
    });
    for b in ball_base(&line, 0)? {
        println!("B(0, 1/{}) = {:?}", b.n, b.members);
    }

    let (space, witness) = random_fspace(3, 8, &FGenerator::ln())?;
    println!("random space with alpha = {:.4}:", witness.alpha);
    for y in 1..space.len() {
        let w = hausdorff_witness(&space, 0, y)?;
        println!("  p0, p{y}: n = {}, radius {:.4}", w.n, w.radius);
    }
    Ok(())
}
