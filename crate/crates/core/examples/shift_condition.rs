//! The shift condition `φ(d(xᵢ, xⱼ)) < ε + δ ⇒ φ(d(xᵢ₊₁, xⱼ₊₁)) ≤ ε` along
//! orbits, with `δ(ε)` a multiple of `ε`.
//!
//! ```text
//! cargo run --example shift_condition
//! ```

use fmetric::conditions::shift_condition_check;
use fmetric::corpus::{interval_halving, sequence_space};
use fmetric::{AlteringDistance, Basis};

fn main() -> fmetric::Result<()> {
    let id = AlteringDistance::identity();

    let ex = interval_halving();
    let r = shift_condition_check(&ex.space, ex.map(), &id, &0.0, |e| e, &[0.5, 0.1, 0.01], 50)?;
    println!(
        "interval-halving, delta = eps: passed {} on {} pairs",
        r.passed, r.checked
    );

    // Orbit distances are all above 1, so the antecedent needs eps + delta > 1.
    let seq = sequence_space(3u64.pow(22))?;
    for scale in [1.0, 2.0] {
        let r = shift_condition_check(&seq.space, seq.map(), &id, &Basis(1), |e| scale * e, &[0.5], 20)?;
        println!(
            "sequence-space, delta = {scale} * eps: {} pairs checked, {} violations",
            r.checked,
            r.violations.len()
        );
        if let Some(v) = r.violations.first() {
            println!("  first: {:?} d = {} > eps", v.shift, v.lhs);
        }
    }
    Ok(())
}
