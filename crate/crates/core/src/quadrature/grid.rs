use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{pairwise_sum, pairwise_sum_real};
use crate::C64;

/// Uniform angular sampling of a circle with adaptive doubling.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircleGrid {
    node_count: usize,
    radius: f64,
    max_doublings: u32,
    rel_tol: f64,
}

impl Default for CircleGrid {
    /// 64 starting nodes, unit radius, relative tolerance 1e-10, capped at 2²⁰ nodes.
    fn default() -> Self {
        Self {
            node_count: 64,
            radius: 1.0,
            max_doublings: 14,
            rel_tol: 1e-10,
        }
    }
}

impl CircleGrid {
    pub const MIN_NODES: usize = 16;

    pub fn new(node_count: usize, radius: f64, max_doublings: u32, rel_tol: f64) -> Result<Self> {
        if node_count < Self::MIN_NODES || !node_count.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "node count {node_count} must be a power of two >= {}",
                Self::MIN_NODES
            )));
        }
        if !(radius > 0.0 && radius <= 1.0) {
            return Err(Error::InvalidParameter(format!("grid radius {radius} outside (0, 1]")));
        }
        if !(rel_tol > 0.0) {
            return Err(Error::InvalidParameter(format!("tolerance {rel_tol} must be positive")));
        }
        Ok(Self {
            node_count,
            radius,
            max_doublings,
            rel_tol,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn max_doublings(&self) -> u32 {
        self.max_doublings
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_nodes(&self) -> usize {
        self.node_count << self.max_doublings
    }

    /// Same refinement policy on another circle. Radii are clamped to `(0, 1]`
    /// only by [`CircleGrid::new`]; this accessor is for internal sweeps.
    pub(crate) fn with_radius(mut self, radius: f64) -> Self {
        self.radius = radius;
        self
    }

    pub fn with_tolerance(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_nodes(mut self, node_count: usize) -> Self {
        self.node_count = node_count.next_power_of_two().max(Self::MIN_NODES);
        self
    }

    /// `r·exp(2πi j/M)`, `j = 0..M`.
    pub fn nodes(&self) -> Vec<C64> {
        (0..self.node_count)
            .map(|j| node(self.radius, j, self.node_count))
            .collect()
    }
}

fn node(radius: f64, j: usize, m: usize) -> C64 {
    C64::from_polar(radius, 2.0 * PI * j as f64 / m as f64)
}

/// Outcome of an adaptive circle average.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleMean {
    pub value: C64,
    pub nodes: usize,
}

/// Adaptive trapezoid average `(1/2π)∫ f(r e^{iθ}) dθ`.
///
/// The node count doubles (reusing earlier nodes) until two successive
/// estimates agree to the grid's relative tolerance, measured against the
/// mean of `|f|` so sign-changing integrands are handled.
pub fn circle_mean<F>(mut f: F, grid: &CircleGrid) -> Result<CircleMean>
where
    F: FnMut(C64) -> Result<C64>,
{
    let r = grid.radius;
    let mut m = grid.node_count;
    let mut eval = |z: C64| {
        f(z).map_err(|e| match e {
            Error::PoleProximity { .. } | Error::DegenerateDenominator(_) => Error::SingularityOnContour(z),
            other => other,
        })
    };

    let mut values = Vec::with_capacity(m);
    for j in 0..m {
        values.push(eval(node(r, j, m))?);
    }
    let mut sum = pairwise_sum(&values);
    let mut abs_sum = pairwise_sum_real(&values.iter().map(|v| v.norm()).collect::<Vec<_>>());
    let mut mean = sum / m as f64;
    let mut change = f64::INFINITY;

    for _ in 0..grid.max_doublings {
        let fine = 2 * m;
        values.clear();
        for j in (1..fine).step_by(2) {
            values.push(eval(node(r, j, fine))?);
        }
        sum += pairwise_sum(&values);
        abs_sum += pairwise_sum_real(&values.iter().map(|v| v.norm()).collect::<Vec<_>>());
        m = fine;
        let next = sum / m as f64;
        let scale = next.norm().max(abs_sum / m as f64);
        change = (next - mean).norm();
        mean = next;
        if change <= grid.rel_tol * scale {
            return Ok(CircleMean { value: mean, nodes: m });
        }
        change /= scale;
    }
    Err(Error::NoConvergence { nodes: m, change })
}

/// Real-valued convenience wrapper of [`circle_mean`].
pub(crate) fn circle_mean_real<F>(mut f: F, grid: &CircleGrid) -> Result<f64>
where
    F: FnMut(C64) -> Result<f64>,
{
    circle_mean(|z| f(z).map(|v| C64::new(v, 0.0)), grid).map(|m| m.value.re)
}
