use serde::{Deserialize, Serialize};

use super::GrowthRecord;
use crate::error::{Error, Result};
use crate::numeric::least_squares;
use crate::quadrature::{means_profile, CircleGrid, MeansProfile};
use crate::rational::Analytic;

/// Least-squares fit of `log(ℓ/‖R‖)` against `log n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaFit {
    pub slope: f64,
    pub intercept: f64,
    pub rms: f64,
    pub min_degree: usize,
    pub max_degree: usize,
    pub count: usize,
}

impl GammaFit {
    pub const CSV_HEADER: &'static str = "slope,intercept,rms,count";

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.slope, self.intercept, self.rms, self.count)
    }
}

/// Fit over `(degree, normalized length)` pairs; needs three distinct degrees
/// and positive lengths.
pub fn fit_power_law(points: &[(usize, f64)]) -> Result<GammaFit> {
    let mut degrees: Vec<usize> = points.iter().map(|p| p.0).collect();
    degrees.sort_unstable();
    degrees.dedup();
    if degrees.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "{} distinct degrees, need 3",
            degrees.len()
        )));
    }
    if let Some(p) = points.iter().find(|p| !(p.1 > 0.0) || p.0 == 0) {
        return Err(Error::InsufficientData(format!(
            "cannot take logarithms of ({}, {})",
            p.0, p.1
        )));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, l)| ((n as f64).ln(), l.ln())).collect();
    let (slope, intercept, rms) = least_squares(&logs);
    Ok(GammaFit {
        slope,
        intercept,
        rms,
        min_degree: degrees[0],
        max_degree: degrees[degrees.len() - 1],
        count: points.len(),
    })
}

/// Fit over the certified records only.
pub fn fit_gamma(records: &[GrowthRecord]) -> Result<GammaFit> {
    let points: Vec<(usize, f64)> = records
        .iter()
        .filter(|r| r.certified)
        .map(|r| (r.degree, r.normalized_length))
        .collect();
    fit_power_law(&points)
}

/// Literature values the fitted exponents are compared with.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReferenceConstants {
    /// Lower end of the known range of the integral means spectrum at 1.
    pub bb1_lower: f64,
    pub bb1_upper: f64,
    /// Theorem-backed upper bound on the growth exponent.
    pub gamma0_upper: f64,
    /// Conjectured value of the spectrum at 1.
    pub carleson_jones_conjecture: f64,
}

impl ReferenceConstants {
    pub const VALUES: ReferenceConstants = ReferenceConstants {
        bb1_lower: 0.23,
        bb1_upper: 0.46,
        gamma0_upper: 0.5,
        carleson_jones_conjecture: 0.25,
    };
}

impl Default for ReferenceConstants {
    fn default() -> Self {
        Self::VALUES
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WindowPlacement {
    BelowWindow,
    InsideWindow,
    /// Above the window but within the upper bound.
    AboveWindow,
    ExceedsUpperBound,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WindowReport {
    pub gamma: f64,
    pub placement: WindowPlacement,
    /// Set when the slope exceeds the upper bound.
    pub flagged: bool,
    pub message: String,
}

impl WindowReport {
    pub const CSV_HEADER: &'static str = "gamma,placement,flagged";

    pub fn csv_row(&self) -> String {
        let placement = serde_json::to_value(self.placement)
            .ok()
            .and_then(|v| v.as_str().map(String::from));
        format!("{},{},{}", self.gamma, placement.unwrap_or_default(), self.flagged)
    }
}

pub fn compare_window(fit: &GammaFit, k: &ReferenceConstants) -> WindowReport {
    let g = fit.slope;
    let (placement, message) = if g > k.gamma0_upper {
        (
            WindowPlacement::ExceedsUpperBound,
            format!(
                "family exponent {g} exceeds the upper bound {}; bound violation",
                k.gamma0_upper
            ),
        )
    } else if g < k.bb1_lower {
        (
            WindowPlacement::BelowWindow,
            format!(
                "family exponent {g} below the window [{}, {}]; consistent (no family is claimed extremal)",
                k.bb1_lower, k.bb1_upper
            ),
        )
    } else if g <= k.bb1_upper {
        (
            WindowPlacement::InsideWindow,
            format!(
                "family exponent {g} inside the window [{}, {}]",
                k.bb1_lower, k.bb1_upper
            ),
        )
    } else {
        (
            WindowPlacement::AboveWindow,
            format!(
                "family exponent {g} above the window, within the upper bound {}",
                k.gamma0_upper
            ),
        )
    };
    WindowReport {
        gamma: g,
        placement,
        flagged: placement == WindowPlacement::ExceedsUpperBound,
        message,
    }
}

/// `r = 1 − 2^{−k}` for `k = 3..=13`.
pub fn default_schedule() -> Vec<f64> {
    (3..=13).map(|k| 1.0 - 0.5f64.powi(k)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumEstimate {
    pub t: f64,
    /// Slope of `log M_t[f'](r)` against `|log(1 − r)|`.
    pub beta: f64,
    pub intercept: f64,
    pub rms: f64,
    pub profile: MeansProfile,
}

/// Finite-schedule estimate of the integral means exponent `β_f(t)`.
pub fn estimate_beta<F: Analytic + ?Sized>(
    f: &F,
    t: f64,
    schedule: &[f64],
    grid: &CircleGrid,
) -> Result<SpectrumEstimate> {
    if schedule.len() < 3 {
        return Err(Error::InsufficientData(format!("{} radii, need 3", schedule.len())));
    }
    if schedule.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
        return Err(Error::InvalidParameter("schedule radii must lie in (0, 1)".into()));
    }
    let profile = means_profile(f, t, schedule, grid)?;
    if let Some(&(r, m)) = profile.samples.iter().find(|s| !(s.1 > 0.0)) {
        return Err(Error::InsufficientData(format!(
            "integral mean {m} at r = {r} has no logarithm"
        )));
    }
    let points: Vec<(f64, f64)> = profile
        .samples
        .iter()
        .map(|&(r, m)| ((1.0 - r).ln().abs(), m.ln()))
        .collect();
    let (beta, intercept, rms) = least_squares(&points);
    Ok(SpectrumEstimate {
        t,
        beta,
        intercept,
        rms,
        profile,
    })
}
