//! Class-F generators and altering distance functions.
//!
//! A generator `f` is the first half of an F-metric witness `(f, α)`: it must be
//! non-decreasing on `(0, ∞)` and send sequences tending to `0⁺` to `-∞` (and
//! only those). An altering distance `φ` is continuous, non-decreasing, and
//! vanishes exactly at `0`. Neither property is decidable for an arbitrary
//! function, so the checks here sample geometric (generators) or uniform
//! (altering distances) grids with explicit parameters.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Names of the built-in generators, in registry order.
pub const GENERATOR_NAMES: [&str; 3] = ["ln", "neg_inv", "id"];
/// Names of the built-in altering distances, in registry order.
pub const ALTERING_NAMES: [&str; 3] = ["id", "square", "sqrt"];

/// A scalar function `f` on `(0, ∞)` proposed as a class-F generator.
#[derive(Clone)]
pub struct FGenerator {
    name: String,
    eval: ScalarFn,
    class_f: bool,
}

impl FGenerator {
    /// Wraps an arbitrary function. `class_f` records whether the function is
    /// meant to belong to class F; the property checks decide independently.
    pub fn new(
        name: impl Into<String>,
        class_f: bool,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        FGenerator {
            name: name.into(),
            eval: Arc::new(eval),
            class_f,
        }
    }

    pub fn ln() -> Self {
        Self::new("ln", true, f64::ln)
    }

    pub fn neg_inv() -> Self {
        Self::new("neg_inv", true, |t| -1.0 / t)
    }

    /// `t ↦ t`. Bounded below on `(0, ∞)`, so it fails (F2); kept as a
    /// negative control.
    pub fn identity() -> Self {
        Self::new("id", false, |t| t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_class_f(&self) -> bool {
        self.class_f
    }

    /// Evaluates `f(t)`. Only strictly positive finite arguments are accepted.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain {
                function: self.name.clone(),
                t,
            });
        }
        Ok((self.eval)(t))
    }
}

impl fmt::Debug for FGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FGenerator")
            .field("name", &self.name)
            .field("class_f", &self.class_f)
            .finish()
    }
}

/// A function `φ: [0, ∞) → [0, ∞)` proposed as an altering distance.
#[derive(Clone)]
pub struct AlteringDistance {
    name: String,
    eval: ScalarFn,
}

impl AlteringDistance {
    pub fn new(name: impl Into<String>, eval: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        AlteringDistance {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn identity() -> Self {
        Self::new("id", |t| t)
    }

    pub fn square() -> Self {
        Self::new("square", |t| t * t)
    }

    pub fn sqrt() -> Self {
        Self::new("sqrt", f64::sqrt)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::Domain {
                function: self.name.clone(),
                t,
            });
        }
        Ok((self.eval)(t))
    }

    /// Evaluation for arguments already known to be distances.
    pub(crate) fn apply(&self, t: f64) -> f64 {
        (self.eval)(t)
    }
}

impl fmt::Debug for AlteringDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlteringDistance")
            .field("name", &self.name)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionKind {
    Generator,
    Altering,
}

/// Result of a registry lookup.
#[derive(Debug, Clone)]
pub enum Function {
    Generator(FGenerator),
    Altering(AlteringDistance),
}

pub fn lookup_function(name: &str, kind: FunctionKind) -> Result<Function> {
    match kind {
        FunctionKind::Generator => generator(name).map(Function::Generator),
        FunctionKind::Altering => altering(name).map(Function::Altering),
    }
}

/// Looks up a built-in generator by its stable name.
pub fn generator(name: &str) -> Result<FGenerator> {
    match name {
        "ln" => Ok(FGenerator::ln()),
        "neg_inv" => Ok(FGenerator::neg_inv()),
        "id" => Ok(FGenerator::identity()),
        _ => Err(Error::UnknownFunction {
            kind: "generator",
            name: name.to_string(),
        }),
    }
}

/// Looks up a built-in altering distance by its stable name.
pub fn altering(name: &str) -> Result<AlteringDistance> {
    match name {
        "id" => Ok(AlteringDistance::identity()),
        "square" => Ok(AlteringDistance::square()),
        "sqrt" => Ok(AlteringDistance::sqrt()),
        _ => Err(Error::UnknownFunction {
            kind: "altering distance",
            name: name.to_string(),
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Property {
    /// (F1): non-decreasing on `(0, ∞)`.
    F1,
    /// (F2): `tₙ → 0⁺ ⟺ f(tₙ) → -∞`.
    F2,
    /// Continuous, non-decreasing, `φ(t) = 0 ⟺ t = 0`.
    Altering,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyViolation {
    /// Sample points involved in the violation.
    pub at: Vec<f64>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub property: Property,
    pub function: String,
    pub passed: bool,
    /// Number of function evaluations compared.
    pub checked: usize,
    pub violation: Option<PropertyViolation>,
    /// (F2) only: grid point `t_M` found for each level `M = 1, 2, …`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub thresholds: Vec<f64>,
}

impl PropertyReport {
    fn new(property: Property, function: &str) -> Self {
        PropertyReport {
            property,
            function: function.to_string(),
            passed: true,
            checked: 0,
            violation: None,
            thresholds: Vec::new(),
        }
    }

    fn fail(mut self, at: Vec<f64>, reason: String) -> Self {
        self.passed = false;
        self.violation = Some(PropertyViolation { at, reason });
        self
    }
}

/// `n` points `lo · (hi/lo)^(k/(n-1))`, endpoints exact.
pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let ratio = (hi / lo).ln();
    (0..n)
        .map(|k| match k {
            0 => lo,
            k if k == n - 1 => hi,
            k => lo * (ratio * k as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

/// Checks (F1) on a geometric grid of `n` points in `[lo, hi]`.
pub fn check_f1(f: &FGenerator, lo: f64, hi: f64, n: usize) -> Result<PropertyReport> {
    if !(lo > 0.0 && lo < hi && hi.is_finite()) || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "check_f1 needs 0 < lo < hi and n >= 2 (lo={lo}, hi={hi}, n={n})"
        )));
    }
    let mut report = PropertyReport::new(Property::F1, f.name());
    let grid = geometric_grid(lo, hi, n);
    let mut prev = f.eval(grid[0])?;
    for w in grid.windows(2) {
        let next = f.eval(w[1])?;
        report.checked += 1;
        if next < prev {
            return Ok(report.fail(
                vec![w[0], w[1]],
                format!("f({}) = {} > f({}) = {}", w[0], prev, w[1], next),
            ));
        }
        prev = next;
    }
    Ok(report)
}

const F2_MIN_EXP: i32 = -200;
const F2_MAX_EXP: i32 = 20;

/// Sampled check of (F2) for levels `M = 1..=depth`.
///
/// For each level the threshold `t_M` is the first point of `1, 1/2, 1/4, …,
/// 2⁻²⁰⁰` with `f(t_M) ≤ -M`. Thresholds must exist and be non-increasing in
/// `M`. The converse direction is sampled by requiring `f(t) > -M` at every
/// grid point `t ≥ 2·t_M` of the extended grid `2⁻²⁰⁰ … 2²⁰`.
pub fn check_f2(f: &FGenerator, depth: usize) -> Result<PropertyReport> {
    if depth < 1 {
        return Err(Error::InvalidParameter("check_f2 needs depth >= 1".into()));
    }
    let mut report = PropertyReport::new(Property::F2, f.name());
    let descending: Vec<f64> = (0..=-F2_MIN_EXP).map(|k| 2f64.powi(-k)).collect();
    let mut values = Vec::with_capacity(descending.len());
    for &t in &descending {
        values.push(f.eval(t)?);
    }
    let upper: Vec<(f64, f64)> = (1..=F2_MAX_EXP)
        .map(|k| {
            let t = 2f64.powi(k);
            f.eval(t).map(|v| (t, v))
        })
        .collect::<Result<_>>()?;

    for level in 1..=depth {
        let bound = -(level as f64);
        let Some(idx) = values.iter().position(|&v| v <= bound) else {
            report.checked += values.len();
            return Ok(report.fail(
                vec![],
                format!("no grid point t >= 2^{F2_MIN_EXP} with f(t) <= -{level}"),
            ));
        };
        report.checked += idx + 1;
        let threshold = descending[idx];
        if let Some(&prev) = report.thresholds.last() {
            if threshold > prev {
                return Ok(report.fail(
                    vec![prev, threshold],
                    format!("threshold for M = {level} increased from {prev} to {threshold}"),
                ));
            }
        }
        report.thresholds.push(threshold);

        let above = descending[..idx]
            .iter()
            .zip(&values[..idx])
            .filter(|(t, _)| **t >= 2.0 * threshold)
            .map(|(t, v)| (*t, *v))
            .chain(upper.iter().copied());
        for (t, v) in above {
            report.checked += 1;
            if v <= bound {
                return Ok(report.fail(
                    vec![t, threshold],
                    format!("f({t}) = {v} <= -{level} although t >= 2·t_M = {}", 2.0 * threshold),
                ));
            }
        }
    }
    Ok(report)
}

/// Checks the altering-distance axioms on the uniform grid `hi·k/(n-1)`.
///
/// Continuity is sampled as `|φ(t+h) − φ(t)| ≤ cont_tol` with `h = hi/n²`.
pub fn check_altering(
    phi: &AlteringDistance,
    hi: f64,
    n: usize,
    cont_tol: f64,
) -> Result<PropertyReport> {
    if !(hi > 0.0 && hi.is_finite()) || n < 3 || !(cont_tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "check_altering needs hi > 0, n >= 3, cont_tol > 0 (hi={hi}, n={n}, cont_tol={cont_tol})"
        )));
    }
    let mut report = PropertyReport::new(Property::Altering, phi.name());
    let at_zero = phi.eval(0.0)?;
    report.checked += 1;
    if at_zero != 0.0 {
        return Ok(report.fail(vec![0.0], format!("φ(0) = {at_zero} ≠ 0")));
    }
    let h = hi / (n as f64 * n as f64);
    let mut prev = at_zero;
    for k in 0..n {
        let t = hi * k as f64 / (n - 1) as f64;
        let v = phi.eval(t)?;
        report.checked += 1;
        if t > 0.0 && !(v > 0.0) {
            return Ok(report.fail(vec![t], format!("φ({t}) = {v} is not positive")));
        }
        if v < prev {
            return Ok(report.fail(vec![t], format!("φ decreases to {v} at t = {t}")));
        }
        let jump = (phi.eval(t + h)? - v).abs();
        if !(jump <= cont_tol) {
            return Ok(report.fail(
                vec![t, t + h],
                format!("|φ({}) − φ({t})| = {jump} exceeds {cont_tol}", t + h),
            ));
        }
        prev = v;
    }
    Ok(report)
}

/// Default parameters used by [`check_generator_defaults`].
pub const F1_DEFAULTS: (f64, f64, usize) = (1e-9, 1e3, 1000);
pub const F2_DEFAULT_DEPTH: usize = 30;
pub const ALTERING_DEFAULTS: (f64, usize, f64) = (10.0, 1000, 1e-1);

/// Runs (F1) and (F2) at the default grid parameters.
pub fn check_generator_defaults(f: &FGenerator) -> Result<(PropertyReport, PropertyReport)> {
    let (lo, hi, n) = F1_DEFAULTS;
    Ok((check_f1(f, lo, hi, n)?, check_f2(f, F2_DEFAULT_DEPTH)?))
}

pub fn check_altering_defaults(phi: &AlteringDistance) -> Result<PropertyReport> {
    let (hi, n, tol) = ALTERING_DEFAULTS;
    check_altering(phi, hi, n, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_builtins() {
        match lookup_function("ln", FunctionKind::Generator).unwrap() {
            Function::Generator(f) => assert_eq!(f.eval(1.0).unwrap(), 0.0),
            other => panic!("unexpected {other:?}"),
        }
        match lookup_function("square", FunctionKind::Altering).unwrap() {
            Function::Altering(phi) => assert_eq!(phi.eval(2.0).unwrap(), 4.0),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            lookup_function("nope", FunctionKind::Generator),
            Err(Error::UnknownFunction { .. })
        ));
        assert!(altering("ln").is_err());
    }

    #[test]
    fn generator_domain_is_positive_reals() {
        let f = FGenerator::ln();
        assert!(matches!(f.eval(0.0), Err(Error::Domain { .. })));
        assert!(f.eval(-1.0).is_err());
        assert!(f.eval(f64::NAN).is_err());
        assert!(AlteringDistance::identity().eval(-0.5).is_err());
    }

    #[test]
    fn f1_accepts_increasing_generators() {
        for f in [FGenerator::ln(), FGenerator::neg_inv()] {
            let r = check_f1(&f, 1e-9, 1e3, 1000).unwrap();
            assert!(r.passed, "{r:?}");
            assert_eq!(r.checked, 999);
        }
    }

    #[test]
    fn f1_rejects_decreasing_function_at_first_pair() {
        let f = FGenerator::new("neg", false, |t| -t);
        let r = check_f1(&f, 0.1, 10.0, 100).unwrap();
        assert!(!r.passed);
        let v = r.violation.unwrap();
        assert_eq!(v.at[0], 0.1);
        assert_eq!(r.checked, 1);
    }

    #[test]
    fn f1_rejects_bad_parameters() {
        let f = FGenerator::ln();
        assert!(check_f1(&f, 0.0, 1.0, 10).is_err());
        assert!(check_f1(&f, 2.0, 1.0, 10).is_err());
        assert!(check_f1(&f, 1.0, 2.0, 1).is_err());
    }

    #[test]
    fn f2_thresholds_for_ln_bracket_exp_minus_m() {
        let r = check_f2(&FGenerator::ln(), 30).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.thresholds.len(), 30);
        for (m, t) in r.thresholds.iter().enumerate() {
            let m = (m + 1) as f64;
            // first dyadic point at or below e^{-M}
            assert!(*t <= (-m).exp() && 2.0 * t > (-m).exp(), "M={m} t={t}");
        }
    }

    #[test]
    fn f2_thresholds_for_neg_inv_bracket_one_over_m() {
        let r = check_f2(&FGenerator::neg_inv(), 30).unwrap();
        assert!(r.passed);
        for (m, t) in r.thresholds.iter().enumerate() {
            let m = (m + 1) as f64;
            assert!(*t <= 1.0 / m && 2.0 * t > 1.0 / m);
        }
    }

    #[test]
    fn f2_rejects_identity_at_first_level() {
        let r = check_f2(&FGenerator::identity(), 30).unwrap();
        assert!(!r.passed);
        assert!(r.thresholds.is_empty());
        assert!(r.violation.unwrap().reason.contains("-1"));
    }

    #[test]
    fn f2_rejects_function_unbounded_below_away_from_zero() {
        // Hits -M near zero, but also plunges for large t.
        let f = FGenerator::new("bad", false, |t| if t > 1000.0 { -1e9 } else { t.ln() });
        let r = check_f2(&f, 3).unwrap();
        assert!(!r.passed);
        assert!(r.violation.unwrap().at[0] > 1000.0);
    }

    #[test]
    fn altering_builtins_pass() {
        for phi in [AlteringDistance::square(), AlteringDistance::identity(), AlteringDistance::sqrt()] {
            let r = check_altering(&phi, 10.0, 1000, 1e-1).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn altering_rejects_nonzero_origin() {
        let phi = AlteringDistance::new("one_plus", |t| 1.0 + t);
        let r = check_altering(&phi, 10.0, 1000, 1e-1).unwrap();
        assert!(!r.passed);
        assert_eq!(r.violation.unwrap().at, vec![0.0]);
    }

    #[test]
    fn altering_rejects_jump() {
        let phi = AlteringDistance::new("step", |t| if t > 0.0 { t + 1.0 } else { 0.0 });
        let r = check_altering(&phi, 10.0, 1000, 1e-1).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn altering_rejects_flat_positive_part() {
        let phi = AlteringDistance::new("clamp", |t| (t - 1.0).max(0.0));
        let r = check_altering(&phi, 10.0, 100, 1e-1).unwrap();
        assert!(!r.passed);
        assert!(r.violation.unwrap().reason.contains("not positive"));
    }

    #[test]
    fn geometric_grid_endpoints() {
        let g = geometric_grid(1e-3, 1e3, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], 1e-3);
        assert_eq!(g[6], 1e3);
        assert!((g[3] - 1.0).abs() < 1e-12);
    }
}
