//! Concrete spaces and maps: the rectangular b-metric family, the interval
//! halving map, the oscillating orbit, the sequence space, and seeded random
//! spaces for property tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fclass::{AlteringDistance, FGenerator};
use crate::fspace::{min_alpha, Witness};
use crate::space::{AnalyticSpace, Basis, FiniteSpace, Map, PointKind, Space};

/// Identifiers accepted by the `reproduce` command.
pub const EXAMPLE_IDS: [&str; 4] = ["rect-b", "interval-halving", "oscillating-orbit", "sequence-space"];

/// Number of generic points in [`rect_b_family`].
pub const RECT_B_GENERIC: usize = 8;

/// What a worked example is expected to exhibit.
#[derive(Debug, Clone, PartialEq)]
pub struct Expected<P> {
    pub fixed_points: Vec<P>,
    pub cycle: Vec<P>,
    /// The map has no fixed point at all.
    pub no_fixed_point: bool,
}

impl<P> Default for Expected<P> {
    fn default() -> Self {
        Expected {
            fixed_points: Vec::new(),
            cycle: Vec::new(),
            no_fixed_point: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct NamedExample<S: Space> {
    pub id: &'static str,
    pub space: S,
    pub map: Option<Map<S::Point>>,
    pub suggested_phi: Option<AlteringDistance>,
    pub suggested_witness: Option<Witness>,
    /// Points worth including in every pair sample (limit points).
    pub landmarks: Vec<S::Point>,
    pub expected: Expected<S::Point>,
}

impl<S: Space> NamedExample<S> {
    /// The example's map; every constructor in this module sets one.
    pub fn map(&self) -> &Map<S::Point> {
        self.map.as_ref().expect("example without a map")
    }
}

fn ln_witness() -> Witness {
    Witness {
        f: FGenerator::ln(),
        alpha: 0.0,
    }
}

/// Rectangular b-metric truncated to `{1, 20, 25, 30, g₁, …, g₈}`.
///
/// Special pairs keep their fixed distances (`d(1,20) = 15`, `d(·,25) = 1`,
/// `d(·,30) = 2`); every pair involving a generic point is `3/n²`. The chain
/// `1 → gᵢ → 20` has length `6/n²`, so with `f = ln` the least admissible slack
/// is `ln(15n²/6)`, which grows without bound in `n`.
pub fn rect_b_family(n: usize) -> Result<FiniteSpace> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("rect_b_family needs n >= 2, got {n}")));
    }
    let mut labels: Vec<String> = ["1", "20", "25", "30"].iter().map(|s| s.to_string()).collect();
    labels.extend((1..=RECT_B_GENERIC).map(|i| format!("g{i}")));
    let generic = 3.0 / (n as f64 * n as f64);
    Ok(FiniteSpace::from_fn(labels, move |i, j| {
        let (a, b) = (i.min(j), i.max(j));
        match (a, b) {
            _ if b >= 4 => generic,
            (0, 1) => 15.0,
            (_, 2) => 1.0,
            (_, 3) => 2.0,
            _ => unreachable!(),
        }
    }))
}

/// Closed form of `min_alpha(rect_b_family(n), ln)`.
pub fn rect_b_alpha_ln(n: usize) -> f64 {
    (15.0 * (n * n) as f64 / 6.0).ln()
}

/// `X = [0, 1]`, `d = |x − y|`, `T(x) = 1 − x/2`, fixed point `2/3`.
pub fn interval_halving() -> NamedExample<AnalyticSpace<f64>> {
    NamedExample {
        id: "interval-halving",
        space: AnalyticSpace::interval(0.0, 1.0),
        map: Some(Map::total("1-x/2", |x: &f64| 1.0 - x / 2.0)),
        suggested_phi: Some(AlteringDistance::square()),
        suggested_witness: Some(ln_witness()),
        landmarks: Vec::new(),
        expected: Expected {
            fixed_points: vec![2.0 / 3.0],
            ..Expected::default()
        },
    }
}

/// `2 + 1/(3n)`.
pub fn osc_upper(n: u64) -> f64 {
    2.0 + 1.0 / (3 * n) as f64
}

/// `−2 − 1/(3n+1)`.
pub fn osc_lower(n: u64) -> f64 {
    -2.0 - 1.0 / (3 * n + 1) as f64
}

/// Default truncation depth: orbits of up to `2 · depth` points never wrap.
pub const OSC_DEFAULT_DEPTH: usize = 256;

const OSC_SNAP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OscPoint {
    Plus,
    Minus,
    Upper(u64),
    Lower(u64),
}

fn classify(x: f64, depth: u64) -> Option<OscPoint> {
    let near = |a: f64, b: f64| (a - b).abs() <= OSC_SNAP;
    if near(x, 2.0) {
        return Some(OscPoint::Plus);
    }
    if near(x, -2.0) {
        return Some(OscPoint::Minus);
    }
    if x > 2.0 {
        let n = (1.0 / (3.0 * (x - 2.0))).round();
        if n >= 1.0 && n <= depth as f64 && near(x, osc_upper(n as u64)) {
            return Some(OscPoint::Upper(n as u64));
        }
    } else if x < -2.0 {
        let m = (1.0 / (-2.0 - x)).round() as u64;
        if m >= 4 && m % 3 == 1 {
            let n = (m - 1) / 3;
            if n <= depth && near(x, osc_lower(n)) {
                return Some(OscPoint::Lower(n));
            }
        }
    }
    None
}

/// Finite truncation of `{2, −2} ∪ {2 + 1/(3n)} ∪ {−2 − 1/(3n+1)}`, `n ≤ depth`.
///
/// `T` swaps `±2`, sends `2 + 1/(3n)` to `−2 − 1/(3n+1)` and that to
/// `2 + 1/(3(n+1))`; at `n = depth` the last point wraps to `2`. Arguments are
/// matched to carrier points within `1e-12`, so `7/3` is accepted as `2 + 1/3`.
pub fn oscillating_orbit_space(depth: usize) -> Result<NamedExample<AnalyticSpace<f64>>> {
    if depth < 1 {
        return Err(Error::InvalidParameter("oscillating_orbit_space needs depth >= 1".into()));
    }
    let depth = depth as u64;
    let mut points = vec![2.0, -2.0];
    for n in 1..=depth {
        points.push(osc_upper(n));
        points.push(osc_lower(n));
    }
    let space = AnalyticSpace::new(
        format!("oscillating(depth={depth})"),
        PointKind::Real,
        |x: &f64, y: &f64| (x - y).abs(),
        move |x: &f64| classify(*x, depth).is_some(),
    )
    .with_points(points);
    let map = Map::new("oscillating", move |x: &f64| {
        Some(match classify(*x, depth)? {
            OscPoint::Plus => -2.0,
            OscPoint::Minus => 2.0,
            OscPoint::Upper(n) => osc_lower(n),
            OscPoint::Lower(n) if n < depth => osc_upper(n + 1),
            OscPoint::Lower(_) => 2.0,
        })
    });
    Ok(NamedExample {
        id: "oscillating-orbit",
        space,
        map: Some(map),
        suggested_phi: Some(AlteringDistance::identity()),
        suggested_witness: Some(ln_witness()),
        landmarks: vec![2.0, -2.0],
        expected: Expected {
            cycle: vec![2.0, -2.0],
            no_fixed_point: true,
            ..Expected::default()
        },
    })
}

/// Carriers up to this size are enumerated for scans and random sampling.
pub const SEQUENCE_ENUMERATION_LIMIT: u64 = 1_000_000;

/// `{e₁, …, e_N}` with `d(eᵢ, eⱼ) = 1 + |1/i − 1/j|` and `T(eᵢ) = e₃ᵢ`.
///
/// `T` is undefined where `3i > N`; orbit-based checks must keep their horizon
/// below `log₃ N`.
pub fn sequence_space(n: u64) -> Result<NamedExample<AnalyticSpace<Basis>>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("sequence_space needs N >= 3, got {n}")));
    }
    let mut space = AnalyticSpace::new(
        format!("sequence(N={n})"),
        PointKind::BasisIndex,
        |x: &Basis, y: &Basis| {
            if x == y {
                0.0
            } else {
                1.0 + (1.0 / x.0 as f64 - 1.0 / y.0 as f64).abs()
            }
        },
        move |x: &Basis| (1..=n).contains(&x.0),
    );
    if n <= SEQUENCE_ENUMERATION_LIMIT {
        space = space.with_points((1..=n).map(Basis).collect());
    }
    let map = Map::new("e_i -> e_3i", move |x: &Basis| {
        x.0.checked_mul(3).filter(|&k| k <= n).map(Basis)
    });
    Ok(NamedExample {
        id: "sequence-space",
        space,
        map: Some(map),
        suggested_phi: Some(AlteringDistance::identity()),
        suggested_witness: Some(ln_witness()),
        landmarks: Vec::new(),
        expected: Expected {
            no_fixed_point: true,
            ..Expected::default()
        },
    })
}

/// Basis vectors `e_i` with `3i ≤ N`, i.e. where the map is defined.
pub fn sequence_domain(n: u64) -> Vec<Basis> {
    (1..=n / 3).map(Basis).collect()
}

/// `size` uniform points in the unit square under Euclidean distance.
pub fn random_metric(seed: u64, size: usize) -> Result<FiniteSpace> {
    if size < 2 {
        return Err(Error::InvalidParameter(format!("random_metric needs size >= 2, got {size}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<(f64, f64)> = (0..size).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
    Ok(FiniteSpace::from_fn(
        (0..size).map(|i| format!("p{i}")).collect(),
        |i, j| {
            let (dx, dy) = (pts[i].0 - pts[j].0, pts[i].1 - pts[j].1);
            (dx * dx + dy * dy).sqrt()
        },
    ))
}

/// Symmetric matrix with off-diagonal entries uniform in `[0.1, 10]`.
pub fn random_symmetric(seed: u64, size: usize) -> Result<FiniteSpace> {
    if size < 2 {
        return Err(Error::InvalidParameter(format!("random space needs size >= 2, got {size}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dist = vec![vec![0.0; size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let v = rng.gen_range(0.1..=10.0);
            dist[i][j] = v;
            dist[j][i] = v;
        }
    }
    FiniteSpace::new((0..size).map(|i| format!("p{i}")).collect(), dist)
}

/// A random symmetric space together with its tightest witness for `f`.
pub fn random_fspace(seed: u64, size: usize, f: &FGenerator) -> Result<(FiniteSpace, Witness)> {
    let space = random_symmetric(seed, size)?;
    let alpha = min_alpha(&space, f)?;
    Ok((space, Witness::new(f.clone(), alpha)?))
}
