//! Load space files and check the axioms, then compute the least slack.
//!
//! ```text
//! cargo run --example verify_space
//! cargo run --example verify_space -- path/to/space.json
//! ```

use std::path::{Path, PathBuf};

use fmetric::fspace::{check_identity_symmetry, min_alpha, min_chain_sums, verify_d3};
use fmetric::io::load_space;
use fmetric::{FGenerator, Witness};

fn report(path: &Path) -> fmetric::Result<()> {
    let file = load_space(path)?;
    let space = &file.space;
    println!("== {} ({} points)", path.display(), space.len());

    let basic = check_identity_symmetry(space);
    println!("D1/D2 passed: {}", basic.passed);
    for v in &basic.violations {
        println!("  {:?} at {:?}: {} vs {}", v.axiom, v.labels, v.lhs, v.rhs);
    }
    if !basic.passed {
        return Ok(());
    }

    let sp = min_chain_sums(space)?;
    println!("minimal chain sums: {sp:?}");
    let witness = match &file.witness {
        Some(w) => w.resolve()?,
        None => Witness::new(FGenerator::ln(), 0.0)?,
    };
    let d3 = verify_d3(space, &witness)?;
    println!("D3 with ({}, {}): {}", witness.f.name(), witness.alpha, d3.passed);
    for v in &d3.violations {
        println!("  {:?}: f(d) = {:.6} > {:.6}", v.labels, v.lhs, v.rhs);
    }
    let alpha = min_alpha(space, &witness.f)?;
    println!("least alpha for {}: {alpha}", witness.f.name());
    Ok(())
}

fn main() -> fmetric::Result<()> {
    let given: Vec<PathBuf> = std::env::args_os().skip(1).map(PathBuf::from).collect();
    let paths = if given.is_empty() {
        let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
        ["metric3.json", "gap_triangle.csv", "asymmetric.json"]
            .iter()
            .map(|f| data.join(f))
            .collect()
    } else {
        given
    };
    for p in &paths {
        report(p)?;
    }
    Ok(())
}
