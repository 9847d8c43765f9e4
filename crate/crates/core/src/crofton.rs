//! Length by integral geometry.
//!
//! A curve of length `L` is met by lines `x cos θ + y sin θ + b = 0`, with
//! `θ ∈ [0, 2π)` and measure `db dθ`, a total of `4L` times counted with
//! multiplicity. Sampling that measure gives a length estimate independent
//! of the derivative quadrature, and the per-line counts give a direct view
//! of the `2n` crossing bound for images of degree-`n` rational maps.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Analytic;
use crate::C64;

/// Consecutive vertices closer than this are treated as equal.
pub const VERTEX_TOLERANCE: f64 = 1e-14;

#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    vertices: Vec<C64>,
    closed: bool,
    /// Set when the whole polyline collapses to a point.
    degenerate: bool,
}

impl Polyline {
    pub fn new(vertices: Vec<C64>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidParameter("a polyline needs at least 2 vertices".into()));
        }
        let degenerate = vertices.iter().all(|v| (v - vertices[0]).norm() <= VERTEX_TOLERANCE);
        if !degenerate && vertices.windows(2).any(|w| (w[1] - w[0]).norm() <= VERTEX_TOLERANCE) {
            return Err(Error::InvalidParameter("consecutive polyline vertices coincide".into()));
        }
        Ok(Self {
            vertices,
            closed,
            degenerate,
        })
    }

    pub fn vertices(&self) -> &[C64] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn segments(&self) -> impl Iterator<Item = (C64, C64)> + '_ {
        let n = self.vertices.len();
        let count = if self.closed { n } else { n - 1 };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Euclidean length.
    pub fn length(&self) -> f64 {
        self.segments().map(|(a, b)| (b - a).norm()).sum()
    }

    pub fn max_modulus(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        Self::new(self.vertices.iter().map(|v| v * s).collect(), self.closed)
    }
}

/// Disjoint half-open angular intervals `[start, end)` on the circle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcSet {
    arcs: Vec<(f64, f64)>,
}

impl ArcSet {
    pub fn full() -> Self {
        Self { arcs: vec![(0.0, TAU)] }
    }

    /// Starts are reduced mod 2π; intervals must have positive length and
    /// must not overlap on the circle.
    pub fn new(intervals: Vec<(f64, f64)>) -> Result<Self> {
        let mut arcs = Vec::with_capacity(intervals.len());
        for (s, e) in intervals {
            let len = e - s;
            if !(len > 0.0 && len <= TAU) {
                return Err(Error::InvalidParameter(format!("arc [{s}, {e}) has invalid length")));
            }
            let s = s.rem_euclid(TAU);
            arcs.push((s, s + len));
        }
        if arcs.is_empty() {
            return Err(Error::InvalidParameter("arc set is empty".into()));
        }
        arcs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let overlapping =
            arcs.windows(2).any(|w| w[1].0 < w[0].1) || arcs.last().map(|l| l.1 - TAU > arcs[0].0).unwrap_or(false);
        if overlapping {
            return Err(Error::InvalidParameter("arcs overlap".into()));
        }
        Ok(Self { arcs })
    }

    pub fn arcs(&self) -> &[(f64, f64)] {
        &self.arcs
    }

    pub fn measure(&self) -> f64 {
        self.arcs.iter().map(|(s, e)| e - s).sum()
    }

    pub fn is_full(&self) -> bool {
        self.arcs.len() == 1 && self.arcs[0].1 - self.arcs[0].0 >= TAU
    }
}

fn dedup(points: Vec<C64>) -> Vec<C64> {
    let mut out: Vec<C64> = Vec::with_capacity(points.len());
    for p in points {
        if out.last().map(|q| (p - q).norm() > VERTEX_TOLERANCE).unwrap_or(true) {
            out.push(p);
        }
    }
    out
}

fn sample<F: Analytic + ?Sized>(f: &F, theta: f64) -> Result<C64> {
    let z = C64::from_polar(1.0, theta);
    f.value(z).map_err(|_| Error::SingularityOnContour(z))
}

/// `f` sampled at `m` points per arc of `arcs`: one closed polyline for the
/// full circle, otherwise one open polyline per arc. Repeated consecutive
/// values are merged.
pub fn image_polyline<F: Analytic + ?Sized>(f: &F, arcs: &ArcSet, m: usize) -> Result<Vec<Polyline>> {
    if m < 2 {
        return Err(Error::InvalidParameter("at least 2 points per arc".into()));
    }
    if arcs.is_full() {
        let pts = (0..m)
            .map(|j| sample(f, TAU * j as f64 / m as f64))
            .collect::<Result<Vec<_>>>()?;
        let mut pts = dedup(pts);
        if pts.len() > 1 && (pts[0] - pts[pts.len() - 1]).norm() <= VERTEX_TOLERANCE {
            pts.pop();
        }
        return Ok(vec![closed_or_point(pts, true)?]);
    }
    arcs.arcs()
        .iter()
        .map(|&(s, e)| {
            let pts = (0..m)
                .map(|j| sample(f, s + (e - s) * j as f64 / (m - 1) as f64))
                .collect::<Result<Vec<_>>>()?;
            closed_or_point(dedup(pts), false)
        })
        .collect()
}

fn closed_or_point(pts: Vec<C64>, closed: bool) -> Result<Polyline> {
    if pts.len() < 2 {
        let p = pts.first().copied().unwrap_or_default();
        return Polyline::new(vec![p, p], closed);
    }
    Polyline::new(pts, closed)
}

/// Whether the segment with line values `s0`, `s1` meets the line `s = t`;
/// the half-open rule counts a vertex lying on the line exactly once.
fn crosses(s0: f64, s1: f64, t: f64) -> bool {
    s0.min(s1) <= t && t < s0.max(s1)
}

/// Number of segments crossed by `x cos θ + y sin θ + b = 0`.
pub fn line_crossings(p: &Polyline, theta: f64, b: f64) -> usize {
    if p.degenerate {
        return 0;
    }
    let (sin, cos) = theta.sin_cos();
    let proj = |v: C64| v.re * cos + v.im * sin;
    p.segments().filter(|&(u, v)| crosses(proj(u), proj(v), -b)).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplingMode {
    /// Midpoint rule on `[0, 2π) × [−b_max, b_max]`.
    Grid,
    /// `theta_count · b_count` uniform lines from a seeded generator.
    MonteCarlo,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CroftonSampler {
    pub theta_count: usize,
    pub b_count: usize,
    pub b_max: f64,
    pub mode: SamplingMode,
    pub seed: u64,
}

impl CroftonSampler {
    pub fn grid(theta_count: usize, b_count: usize, b_max: f64) -> Result<Self> {
        Self {
            theta_count,
            b_count,
            b_max,
            mode: SamplingMode::Grid,
            seed: 0,
        }
        .validated()
    }

    pub fn monte_carlo(theta_count: usize, b_count: usize, b_max: f64, seed: u64) -> Result<Self> {
        Self {
            theta_count,
            b_count,
            b_max,
            mode: SamplingMode::MonteCarlo,
            seed,
        }
        .validated()
    }

    fn validated(self) -> Result<Self> {
        if self.theta_count < 8 || self.b_count < 8 {
            return Err(Error::InvalidParameter(
                "sampler needs at least 8 angles and 8 offsets".into(),
            ));
        }
        if !(self.b_max > 0.0 && self.b_max.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "offset range {} must be positive",
                self.b_max
            )));
        }
        Ok(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CroftonEstimate {
    /// Unnormalized arc length of the image.
    pub length: f64,
    /// Largest crossing count over the sampled lines.
    pub max_crossings: usize,
    pub lines: usize,
}

/// Arc length `(1/4) ∬ n(θ, b) db dθ` of the union of `polylines`.
pub fn crofton_length(polylines: &[Polyline], sampler: &CroftonSampler) -> Result<f64> {
    crofton_estimate(polylines, sampler).map(|e| e.length)
}

pub fn crofton_estimate(polylines: &[Polyline], sampler: &CroftonSampler) -> Result<CroftonEstimate> {
    let sampler = sampler.validated()?;
    let radius = polylines.iter().map(Polyline::max_modulus).fold(0.0, f64::max);
    if sampler.b_max < radius {
        return Err(Error::InsufficientCoverage {
            b_max: sampler.b_max,
            radius,
        });
    }
    let live: Vec<&Polyline> = polylines.iter().filter(|p| !p.degenerate).collect();
    let area = TAU * 2.0 * sampler.b_max;
    match sampler.mode {
        SamplingMode::Grid => Ok(grid_estimate(&live, &sampler, area)),
        SamplingMode::MonteCarlo => {
            let lines = sampler.theta_count * sampler.b_count;
            let mut rng = ChaCha8Rng::seed_from_u64(sampler.seed);
            let mut total = 0usize;
            let mut max_crossings = 0;
            for _ in 0..lines {
                let theta = rng.gen_range(0.0..TAU);
                let b = rng.gen_range(-sampler.b_max..sampler.b_max);
                let n: usize = live.iter().map(|p| line_crossings(p, theta, b)).sum();
                total += n;
                max_crossings = max_crossings.max(n);
            }
            Ok(CroftonEstimate {
                length: 0.25 * area * total as f64 / lines as f64,
                max_crossings,
                lines,
            })
        }
    }
}

/// For each angle, every segment adds one crossing to a contiguous run of
/// offsets; a difference array accumulates all runs in `O(segments + b_count)`.
fn grid_estimate(polylines: &[&Polyline], s: &CroftonSampler, area: f64) -> CroftonEstimate {
    let nb = s.b_count;
    let db = 2.0 * s.b_max / nb as f64;
    let offset = |k: usize| -s.b_max + (k as f64 + 0.5) * db;
    let mut diff = vec![0i64; nb + 1];
    let mut total = 0i64;
    let mut max_crossings = 0;
    for i in 0..s.theta_count {
        let theta = TAU * (i as f64 + 0.5) / s.theta_count as f64;
        let (sin, cos) = theta.sin_cos();
        diff.iter_mut().for_each(|d| *d = 0);
        for p in polylines {
            for (u, v) in p.segments() {
                let (s0, s1) = (u.re * cos + u.im * sin, v.re * cos + v.im * sin);
                let (lo, hi) = (s0.min(s1), s0.max(s1));
                // Offsets with lo ≤ −b < hi, i.e. −hi < b ≤ −lo.
                let hit = |k: usize| crosses(s0, s1, -offset(k));
                let guess = |x: f64| ((x + s.b_max) / db - 0.5).floor();
                let mut first = (guess(-hi) + 1.0).clamp(0.0, nb as f64) as usize;
                let mut last = (guess(-lo) + 1.0).clamp(0.0, nb as f64) as usize;
                // Correct the floating guesses against the exact predicate.
                while first > 0 && hit(first - 1) {
                    first -= 1;
                }
                while first < last && !hit(first) {
                    first += 1;
                }
                while last < nb && hit(last) {
                    last += 1;
                }
                while last > first && !hit(last - 1) {
                    last -= 1;
                }
                if first < last {
                    diff[first] += 1;
                    diff[last] -= 1;
                }
            }
        }
        let mut running = 0i64;
        for d in &diff[..nb] {
            running += d;
            total += running;
            max_crossings = max_crossings.max(running as usize);
        }
    }
    let lines = s.theta_count * nb;
    CroftonEstimate {
        length: 0.25 * area * total as f64 / lines as f64,
        max_crossings,
        lines,
    }
}

/// Largest crossing count over `lines` seeded random lines with offsets in
/// `[−b_max, b_max)`. For the image of a degree-`n` rational map it is at
/// most `2n`.
pub fn max_crossings_sampled(p: &Polyline, lines: usize, b_max: f64, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..lines)
        .map(|_| line_crossings(p, rng.gen_range(0.0..TAU), rng.gen_range(-b_max..b_max)))
        .max()
        .unwrap_or(0)
}
