//! The rectangular b-metric family: the least `α` for `f = ln` grows like
//! `ln(15n²/6)`, so no single witness `(ln, α)` covers every `n`.
//!
//! ```text
//! cargo run --example rect_b_divergence
//! ```

use fmetric::corpus::{rect_b_alpha_ln, rect_b_family};
use fmetric::fspace::{alpha_divergence_profile, min_chain_sums};
use fmetric::FGenerator;

fn main() -> fmetric::Result<()> {
    let space = rect_b_family(10)?;
    let sp = min_chain_sums(&space)?;
    println!("n = 10: d(1, 20) = {}, sp(1, 20) = {}", space.d(0, 1), sp[0][1]);

    println!("{:>4} {:>12} {:>12}", "n", "min_alpha", "ln(15n²/6)");
    for (n, alpha) in alpha_divergence_profile(rect_b_family, &FGenerator::ln(), 2..=50)? {
        if n <= 5 || n % 10 == 0 {
            println!("{n:>4} {alpha:>12.6} {:>12.6}", rect_b_alpha_ln(n));
        }
    }
    Ok(())
}
