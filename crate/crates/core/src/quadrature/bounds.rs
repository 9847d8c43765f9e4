use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{boundary_length, disk_energy, sup_norm_circle, CircleGrid};
use crate::error::Result;
use crate::rational::RationalFunction;

/// Boundary length of one function measured against every applicable bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub degree: usize,
    pub boundary_length: f64,
    pub sup_norm: f64,
    /// `∫_D |R'|² dm₂`; only defined without poles in the closed disk.
    pub disk_energy: Option<f64>,
    /// `ℓ/(n‖R‖_{∞,T})`, at most 1 for any rational without poles on T.
    pub dolzhenko_ratio: f64,
    /// `ℓ/(6√n·√E₂)`, at most 1 without poles in the closed disk.
    pub prop1_ratio: Option<f64>,
    /// `ℓ/(6π√n‖R‖_{∞,T})`, filled only for certified univalent maps.
    pub univalent_upper_ratio: Option<f64>,
    pub univalence_certified: bool,
    /// `E₂/‖R‖²_{∞,T}`; the area identity gives at most 1 for univalent maps.
    pub energy_sup_ratio: Option<f64>,
}

fn ratio(numerator: f64, denominator: f64) -> f64 {
    if numerator == 0.0 {
        0.0
    } else {
        numerator / denominator
    }
}

/// Measures ℓ, the circle sup norm and (when defined) the disk energy, and
/// forms every bound ratio from the independently converged integrals.
///
/// `univalence_certificate` is the outcome of a prior certification; the
/// `6π√n` ratio is normalized by the measured sup norm.
pub fn verify_bounds(
    f: &RationalFunction,
    univalence_certificate: Option<bool>,
    grid: &CircleGrid,
) -> Result<BoundReport> {
    let degree = f.degree();
    let n = degree as f64;
    let length = boundary_length(f, grid)?;
    let sup = sup_norm_circle(f, grid)?;
    let pole_free = f.poles_in_closed_disk()? == 0;
    let energy = if pole_free { Some(disk_energy(f, grid)?) } else { None };
    let certified = univalence_certificate.unwrap_or(false);

    Ok(BoundReport {
        degree,
        boundary_length: length,
        sup_norm: sup,
        disk_energy: energy,
        dolzhenko_ratio: ratio(length, n * sup),
        prop1_ratio: energy.map(|e| ratio(length, 6.0 * n.sqrt() * e.sqrt())),
        univalent_upper_ratio: (certified && pole_free).then(|| ratio(length, 6.0 * PI * n.sqrt() * sup)),
        univalence_certified: certified,
        energy_sup_ratio: energy.map(|e| ratio(e, sup * sup)),
    })
}

impl BoundReport {
    pub const CSV_HEADER: &'static str =
        "degree,length,sup_norm,energy,dolzhenko_ratio,prop1_ratio,upper_ratio,univalent";

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.degree,
            self.boundary_length,
            self.sup_norm,
            opt(self.disk_energy),
            self.dolzhenko_ratio,
            opt(self.prop1_ratio),
            opt(self.univalent_upper_ratio),
            self.univalence_certified
        )
    }
}
