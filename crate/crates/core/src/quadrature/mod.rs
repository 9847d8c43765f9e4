//! Circle and disk integrals of rational functions and the bound report.

mod bounds;
mod grid;
mod radial;

pub use bounds::{verify_bounds, BoundReport};
pub(crate) use grid::circle_mean_real;
pub use grid::{circle_mean, CircleGrid, CircleMean};
pub use radial::gauss_legendre;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{golden_max, horner};
use crate::rational::{Analytic, BlaschkeProduct, RationalFunction};
use crate::C64;

/// Radius at which the Dyn'kin integrand is replaced by its radial limit.
pub const DYNKIN_CUTOFF: f64 = 1.0 - 1e-6;

/// Relative tolerance floor for the Dyn'kin area integral.
pub const DYNKIN_TOLERANCE: f64 = 1e-6;

/// Integral means `M_t[f'](r)` along an increasing radius schedule.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeansProfile {
    pub t: f64,
    pub samples: Vec<(f64, f64)>,
}

/// `M_t[f'](r) = (1/2π)∫|f'(r e^{iθ})|^t dθ`.
pub fn circle_integral_means<F: Analytic + ?Sized>(f: &F, t: f64, r: f64, grid: &CircleGrid) -> Result<f64> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidParameter(format!("radius {r} outside (0, 1]")));
    }
    circle_mean_real(|z| f.derivative(z).map(|d| d.norm().powf(t)), &grid.with_radius(r))
}

/// Sampled [`circle_integral_means`] over a schedule of radii.
pub fn means_profile<F: Analytic + ?Sized>(f: &F, t: f64, radii: &[f64], grid: &CircleGrid) -> Result<MeansProfile> {
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "radius schedule must be strictly increasing".into(),
        ));
    }
    let samples = radii
        .iter()
        .map(|&r| circle_integral_means(f, t, r, grid).map(|m| (r, m)))
        .collect::<Result<_>>()?;
    Ok(MeansProfile { t, samples })
}

/// Normalized boundary length `ℓ(R) = ∫_T |R'| dm`.
pub fn boundary_length<F: Analytic + ?Sized>(f: &F, grid: &CircleGrid) -> Result<f64> {
    circle_mean_real(|z| f.derivative(z).map(|d| d.norm()), &grid.with_radius(1.0))
}

/// `∫_D |R'|² dm₂` with `dm₂ = du dv/π`, as `2∫₀¹ M₂[R'](r) r dr`.
pub fn disk_energy(f: &RationalFunction, grid: &CircleGrid) -> Result<f64> {
    let poles = f.poles_in_closed_disk()?;
    if poles > 0 {
        return Err(Error::PoleInDisk(poles));
    }
    if f.degree() == 0 {
        return Ok(0.0);
    }
    let breakpoints = [0.0, 0.5, 0.75, 0.875, 1.0];
    radial::integrate_panels(
        |r| {
            if r == 0.0 {
                return Ok(0.0);
            }
            Ok(2.0 * r * circle_mean_real(|z| f.derivative(z).map(|d| d.norm_sqr()), &grid.with_radius(r))?)
        },
        &breakpoints,
        grid.rel_tol(),
    )
}

/// `L(r) = ∫_{|w|<r} ((1 − |B(w)|)/(1 − |w|))² dm₂(w)`.
///
/// Beyond [`DYNKIN_CUTOFF`] the integrand is replaced by its boundary limit
/// `|B'(ζ)|²`, which contributes `(1 − c²)·M₂[B'](1)`.
pub fn dynkin_l(b: &BlaschkeProduct, r: f64, grid: &CircleGrid) -> Result<f64> {
    dynkin_l_with_cutoff(b, r, DYNKIN_CUTOFF, grid)
}

pub fn dynkin_l_with_cutoff(b: &BlaschkeProduct, r: f64, cutoff: f64, grid: &CircleGrid) -> Result<f64> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidParameter(format!("radius {r} outside (0, 1]")));
    }
    let end = r.min(cutoff);
    // |B| has a conical point at each zero, so panels break at the zero radii
    // and the tolerance is relaxed to what a kinked integrand can deliver.
    let grid = grid.with_tolerance(grid.rel_tol().max(DYNKIN_TOLERANCE));
    let mut breakpoints = radial::geometric_breakpoints(end);
    breakpoints.extend(b.zeros().iter().map(|z| z.norm()).filter(|&m| m > 0.0 && m < end));
    breakpoints.sort_by(f64::total_cmp);
    breakpoints.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    let integrand = |rho: f64| -> Result<f64> {
        let mean = circle_mean_real(
            |w| {
                let (modulus, defect) = b.boundary_defect(w, rho);
                Ok((defect / (1.0 + modulus)).powi(2))
            },
            &grid.with_radius(rho.max(f64::MIN_POSITIVE)),
        )?;
        Ok(2.0 * rho * mean)
    };
    let body = radial::integrate_panels(integrand, &breakpoints, grid.rel_tol())?;
    if r <= cutoff {
        return Ok(body);
    }
    let edge = circle_mean_real(|z| Ok(b.eval_with_derivative(z).1.norm_sqr()), &grid.with_radius(1.0))?;
    Ok(body + (r * r - end * end) * edge)
}

/// `‖f‖_{∞,T}`: grid maximum polished by golden-section search around the
/// largest local maxima.
pub fn sup_norm_circle<F: Analytic + ?Sized>(f: &F, grid: &CircleGrid) -> Result<f64> {
    let m = grid.node_count().max(1024);
    let step = 2.0 * PI / m as f64;
    let modulus = |theta: f64| -> Result<f64> {
        let z = C64::from_polar(1.0, theta);
        f.value(z).map(|v| v.norm()).map_err(|_| Error::SingularityOnContour(z))
    };
    let samples: Vec<f64> = (0..m).map(|j| modulus(j as f64 * step)).collect::<Result<_>>()?;
    let mut peaks: Vec<usize> = (0..m)
        .filter(|&j| samples[j] >= samples[(j + m - 1) % m] && samples[j] >= samples[(j + 1) % m])
        .collect();
    peaks.sort_by(|&a, &b| samples[b].total_cmp(&samples[a]).then(a.cmp(&b)));
    peaks.truncate(8);
    let mut best = samples.iter().cloned().fold(0.0, f64::max);
    for j in peaks {
        let centre = j as f64 * step;
        let (_, value) = golden_max(|t| modulus(t).unwrap_or(f64::NAN), centre - step, centre + step, 1e-13);
        if value.is_finite() {
            best = best.max(value);
        }
    }
    Ok(best)
}

/// Number of zeros of a polynomial inside the unit disk by the argument
/// principle; the polynomial must not vanish on the circle.
pub(crate) fn zero_count_in_disk(coeffs: &[C64], grid: &CircleGrid) -> Result<usize> {
    let mean = circle_mean(
        |z| {
            let (q, dq) = horner(coeffs, z);
            Ok(z * dq / q)
        },
        &grid.with_radius(1.0),
    )?
    .value;
    let rounded = mean.re.round();
    if (mean - C64::new(rounded, 0.0)).norm() > 0.1 || rounded < 0.0 {
        return Err(Error::NonIntegerWinding(mean));
    }
    Ok(rounded as usize)
}

#[cfg(test)]
mod tests;
