use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;
use crate::rational::{Analytic, PoleTerm, RationalFunction};
use crate::C64;

/// Relative change allowed when the per-arc node count is doubled.
pub const MOMENT_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RungeConfig {
    pub delta: f64,
    pub order: usize,
    pub arcs: usize,
    /// Used only by [`auto_arcs`].
    pub epsilon: f64,
    pub arc_quadrature_nodes: usize,
}

impl RungeConfig {
    pub fn new(delta: f64, order: usize, arcs: usize) -> Result<Self> {
        let cfg = Self {
            delta,
            order,
            arcs,
            epsilon: 0.1,
            arc_quadrature_nodes: 16,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Arc count from [`auto_arcs`].
    pub fn auto(delta: f64, order: usize, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0) {
            return Err(Error::InvalidParameter(format!("epsilon {epsilon} must be positive")));
        }
        let mut cfg = Self::new(delta, order, 1)?;
        cfg.epsilon = epsilon;
        cfg.arcs = auto_arcs(delta, order, epsilon);
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "delta {} must be positive",
                self.delta
            )));
        }
        if self.arcs == 0 {
            return Err(Error::InvalidParameter("at least one arc is required".into()));
        }
        if self.arc_quadrature_nodes < 8 {
            return Err(Error::InvalidParameter("at least 8 quadrature nodes per arc".into()));
        }
        Ok(())
    }

    pub fn contour_radius(&self) -> f64 {
        1.0 + 2.0 * self.delta
    }
}

/// `N = ⌊δ^{−(m+4)/(m+1) − ε}⌋ + 1`.
pub fn auto_arcs(delta: f64, order: usize, epsilon: f64) -> usize {
    let m = order as f64;
    delta.powf(-(m + 4.0) / (m + 1.0) - epsilon).floor() as usize + 1
}

/// `f(rz)` with `1 + 4δ = 1/r`, so that a map analytic on the closed disk is
/// analytic on the disk of radius `1 + 4δ` after dilation.
#[derive(Clone, Copy, Debug)]
pub struct Dilated<F> {
    pub inner: F,
    pub r: f64,
}

impl<F: Analytic> Dilated<F> {
    pub fn for_delta(inner: F, delta: f64) -> Self {
        Self {
            inner,
            r: 1.0 / (1.0 + 4.0 * delta),
        }
    }
}

impl<F: Analytic> Analytic for Dilated<F> {
    fn value_and_derivative(&self, z: C64) -> Result<(C64, C64)> {
        let (v, d) = self.inner.value_and_derivative(z * self.r)?;
        Ok((v, d * self.r))
    }
}

/// Moments `∫_I (ζ_0 − ζ)^l f(ζ) dζ` for `l = 0..=m` over the arc `[t0, t1]`,
/// plus the matching absolute scales.
fn arc_moments<F: Analytic + ?Sized>(
    f: &F,
    radius: f64,
    t0: f64,
    t1: f64,
    anchor: C64,
    order: usize,
    nodes: usize,
) -> Result<(Vec<C64>, Vec<f64>)> {
    let (x, w) = gauss_legendre(nodes);
    let half = 0.5 * (t1 - t0);
    let mid = 0.5 * (t1 + t0);
    let mut moments = vec![C64::new(0.0, 0.0); order + 1];
    let mut scales = vec![0.0; order + 1];
    for (xi, wi) in x.iter().zip(&w) {
        let theta = mid + half * xi;
        let zeta = C64::from_polar(radius, theta);
        let value = f
            .value(zeta)
            .map_err(|e| Error::ContourEvaluationFailure(Box::new(e)))?;
        if !value.is_finite() {
            return Err(Error::ContourEvaluationFailure(Box::new(Error::SingularityOnContour(
                zeta,
            ))));
        }
        let dzeta = C64::new(0.0, 1.0) * zeta * (wi * half);
        let mut power = C64::new(1.0, 0.0);
        for l in 0..=order {
            moments[l] += power * value * dzeta;
            scales[l] += power.norm() * value.norm() * dzeta.norm();
            power *= anchor - zeta;
        }
    }
    Ok((moments, scales))
}

/// Cauchy integral over `|ζ| = 1 + 2δ` split into `N` equal arcs, with the
/// kernel on each arc replaced by its Taylor polynomial of order `m` about
/// the arc's starting point `ζ_j`:
///
/// `R(z) = (1/2πi) Σ_j Σ_l (ζ_j − z)^{−(l+1)} ∫_{I_j} (ζ_j − ζ)^l f(ζ) dζ`.
///
/// Returns partial fractions with a pole of order `m + 1` at each `ζ_j`.
pub fn runge_approximate<F: Analytic + ?Sized>(f: &F, cfg: &RungeConfig) -> Result<RationalFunction> {
    cfg.validate()?;
    let radius = cfg.contour_radius();
    let n = cfg.arcs;
    let q = cfg.arc_quadrature_nodes;
    let two_pi_i = C64::new(0.0, 2.0 * PI);
    let mut terms = Vec::with_capacity(n);
    for j in 0..n {
        let t0 = 2.0 * PI * j as f64 / n as f64;
        let t1 = 2.0 * PI * (j + 1) as f64 / n as f64;
        let anchor = C64::from_polar(radius, t0);
        let (coarse, _) = arc_moments(f, radius, t0, t1, anchor, cfg.order, q)?;
        let (fine, scales) = arc_moments(f, radius, t0, t1, anchor, cfg.order, 2 * q)?;
        for l in 0..=cfg.order {
            let change = (fine[l] - coarse[l]).norm() / scales[l].max(f64::MIN_POSITIVE);
            if change > MOMENT_TOLERANCE {
                return Err(Error::QuadratureUnderResolved {
                    arc: j,
                    order: l,
                    change,
                });
            }
        }
        terms.push(PoleTerm {
            pole: anchor,
            coefficients: fine.iter().map(|m| m / two_pi_i).collect(),
        });
    }
    Ok(RationalFunction::PartialFractions(
        crate::rational::PartialFractions::new(C64::new(0.0, 0.0), terms)?,
    ))
}
