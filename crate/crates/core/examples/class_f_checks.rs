//! Sampled class-F and altering-distance checks for the built-in functions,
//! plus two functions that should be rejected.
//!
//! ```text
//! cargo run --example class_f_checks
//! ```

use fmetric::fclass::{
    altering, check_altering, check_f1, check_f2, generator, ALTERING_DEFAULTS, ALTERING_NAMES,
    F1_DEFAULTS, F2_DEFAULT_DEPTH, GENERATOR_NAMES,
};
use fmetric::AlteringDistance;

fn main() -> fmetric::Result<()> {
    let (lo, hi, n) = F1_DEFAULTS;
    for name in GENERATOR_NAMES {
        let f = generator(name)?;
        let f1 = check_f1(&f, lo, hi, n)?;
        let f2 = check_f2(&f, F2_DEFAULT_DEPTH)?;
        println!("{name:8} F1 {:5} F2 {:5}", f1.passed, f2.passed);
        if let Some(v) = &f2.violation {
            println!("         {} at {:?}", v.reason, v.at);
        }
        if name == "ln" {
            println!("         thresholds t_M for M = 1..5: {:?}", &f2.thresholds[..5]);
        }
    }

    let (hi, n, tol) = ALTERING_DEFAULTS;
    let shifted = AlteringDistance::new("1+t", |t| 1.0 + t);
    let builtins = ALTERING_NAMES.iter().map(|name| altering(name));
    for phi in builtins.chain([Ok(shifted)]) {
        let phi = phi?;
        let r = check_altering(&phi, hi, n, tol)?;
        print!("{:8} altering {:5}", phi.name(), r.passed);
        match r.violation {
            Some(v) => println!(" ({})", v.reason),
            None => println!(),
        }
    }
    Ok(())
}
