//! Carriers, distances and self-maps.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set with a symmetric non-negative distance.
pub trait Space {
    type Point: Clone + PartialEq + fmt::Debug;

    fn distance(&self, x: &Self::Point, y: &Self::Point) -> f64;

    fn contains(&self, x: &Self::Point) -> bool;

    fn label(&self, x: &Self::Point) -> String;

    /// Every carrier point, when the carrier is finite and enumerable.
    fn points(&self) -> Option<Vec<Self::Point>> {
        None
    }
}

/// A finite labelled set with an explicit distance matrix.
///
/// Points are indices into `labels`. The constructor only checks the shape
/// and rejects NaN; the axioms themselves are checked by
/// [`crate::fspace::check_identity_symmetry`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiniteSpace {
    labels: Vec<String>,
    dist: Vec<Vec<f64>>,
}

impl FiniteSpace {
    pub fn new(labels: Vec<String>, dist: Vec<Vec<f64>>) -> Result<Self> {
        let n = labels.len();
        if dist.len() != n {
            return Err(Error::Shape(format!(
                "{} labels but {} matrix rows",
                n,
                dist.len()
            )));
        }
        for (i, row) in dist.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|v| v.is_nan()) {
                return Err(Error::Shape(format!("entry ({i}, {j}) is NaN")));
            }
        }
        Ok(FiniteSpace { labels, dist })
    }

    /// Labels `0, 1, …, n-1`.
    pub fn from_matrix(dist: Vec<Vec<f64>>) -> Result<Self> {
        let labels = (0..dist.len()).map(|i| i.to_string()).collect();
        Self::new(labels, dist)
    }

    /// Builds the matrix from a symmetric rule on indices.
    pub fn from_fn(labels: Vec<String>, d: impl Fn(usize, usize) -> f64) -> Self {
        let n = labels.len();
        let dist = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 0.0 } else { d(i, j) }).collect())
            .collect();
        FiniteSpace { labels, dist }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.dist
    }

    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.dist[i][j]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl Space for FiniteSpace {
    type Point = usize;

    fn distance(&self, x: &usize, y: &usize) -> f64 {
        self.dist[*x][*y]
    }

    fn contains(&self, x: &usize) -> bool {
        *x < self.labels.len()
    }

    fn label(&self, x: &usize) -> String {
        self.labels
            .get(*x)
            .cloned()
            .unwrap_or_else(|| format!("#{x}"))
    }

    fn points(&self) -> Option<Vec<usize>> {
        Some((0..self.labels.len()).collect())
    }
}

/// Basis vector `e_i` of the sequence space, `i ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Basis(pub u64);

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    Real,
    BasisIndex,
    Labeled,
}

type DistFn<P> = Arc<dyn Fn(&P, &P) -> f64 + Send + Sync>;
type CarrierFn<P> = Arc<dyn Fn(&P) -> bool + Send + Sync>;

/// A carrier given by rules rather than a matrix.
#[derive(Clone)]
pub struct AnalyticSpace<P> {
    pub name: String,
    pub kind: PointKind,
    dist: DistFn<P>,
    carrier: CarrierFn<P>,
    enumeration: Option<Arc<Vec<P>>>,
}

impl<P> AnalyticSpace<P> {
    pub fn new(
        name: impl Into<String>,
        kind: PointKind,
        dist: impl Fn(&P, &P) -> f64 + Send + Sync + 'static,
        carrier: impl Fn(&P) -> bool + Send + Sync + 'static,
    ) -> Self {
        AnalyticSpace {
            name: name.into(),
            kind,
            dist: Arc::new(dist),
            carrier: Arc::new(carrier),
            enumeration: None,
        }
    }

    /// Attaches an explicit enumeration of the (finite) carrier.
    pub fn with_points(mut self, points: Vec<P>) -> Self {
        self.enumeration = Some(Arc::new(points));
        self
    }
}

impl AnalyticSpace<f64> {
    /// The closed interval `[lo, hi]` with `d(x, y) = |x − y|`.
    pub fn interval(lo: f64, hi: f64) -> Self {
        Self::new(
            format!("[{lo}, {hi}]"),
            PointKind::Real,
            |x: &f64, y: &f64| (x - y).abs(),
            move |x: &f64| (lo..=hi).contains(x),
        )
    }
}

impl<P> fmt::Debug for AnalyticSpace<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AnalyticSpace")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("enumerable", &self.enumeration.is_some())
            .finish()
    }
}

impl<P> Space for AnalyticSpace<P>
where
    P: Clone + PartialEq + fmt::Debug + fmt::Display,
{
    type Point = P;

    fn distance(&self, x: &P, y: &P) -> f64 {
        (self.dist)(x, y)
    }

    fn contains(&self, x: &P) -> bool {
        (self.carrier)(x)
    }

    fn label(&self, x: &P) -> String {
        x.to_string()
    }

    fn points(&self) -> Option<Vec<P>> {
        self.enumeration.as_ref().map(|p| p.as_ref().clone())
    }
}

type MapFn<P> = Arc<dyn Fn(&P) -> Option<P> + Send + Sync>;

/// A (possibly partial) self-map. `None` means the map is undefined at the
/// argument; callers report that as leaving the carrier.
#[derive(Clone)]
pub struct Map<P> {
    name: String,
    f: MapFn<P>,
}

impl<P: Clone + 'static> Map<P> {
    pub fn new(name: impl Into<String>, f: impl Fn(&P) -> Option<P> + Send + Sync + 'static) -> Self {
        Map {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    /// Wraps a total map.
    pub fn total(name: impl Into<String>, f: impl Fn(&P) -> P + Send + Sync + 'static) -> Self {
        Self::new(name, move |x| Some(f(x)))
    }

    pub fn identity() -> Self {
        Self::total("identity", P::clone)
    }

    pub fn constant(c: P) -> Self
    where
        P: Send + Sync,
    {
        Self::total("constant", move |_| c.clone())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, x: &P) -> Option<P> {
        (self.f)(x)
    }
}

impl Map<f64> {
    /// `x ↦ a·x + b`.
    pub fn affine(a: f64, b: f64) -> Self {
        Self::total(format!("{a}*x+{b}"), move |x| a * x + b)
    }
}

impl<P> fmt::Debug for Map<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Map").field("name", &self.name).finish()
    }
}

/// Applies `map` and checks that the image lies in the carrier.
pub fn apply_in<S: Space>(
    space: &S,
    map: &Map<S::Point>,
    x: &S::Point,
    index: usize,
) -> Result<S::Point>
where
    S::Point: 'static,
{
    match map.apply(x) {
        Some(y) if space.contains(&y) => Ok(y),
        _ => Err(Error::LeavesCarrier {
            point: space.label(x),
            index,
        }),
    }
}
