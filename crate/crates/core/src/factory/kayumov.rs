use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{sup_norm_circle, CircleGrid};
use crate::rational::RationalFunction;
use crate::C64;

/// Truncation degree `n` and dilation `r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KayumovConfig {
    pub n: usize,
    pub r: f64,
}

impl KayumovConfig {
    /// `r = 1 − 5 ln(n)/n`.
    pub fn new(n: usize) -> Result<Self> {
        let r = 1.0 - 5.0 * (n as f64).ln() / n as f64;
        if !(r > 0.0) {
            return Err(Error::SubcriticalDegree { n, r });
        }
        Ok(Self { n, r })
    }

    pub fn with_r(n: usize, r: f64) -> Result<Self> {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::InvalidParameter(format!("dilation {r} outside (0, 1)")));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("truncation degree must be positive".into()));
        }
        Ok(Self { n, r })
    }
}

/// `P(z) = Σ_{j=1}^n a_j r^j z^j` where `taylor[0] = a_1`.
pub fn kayumov_truncate(taylor: &[C64], cfg: &KayumovConfig) -> Result<RationalFunction> {
    if taylor.len() < cfg.n {
        return Err(Error::TooFewCoefficients {
            needed: cfg.n,
            got: taylor.len(),
        });
    }
    let mut coeffs = Vec::with_capacity(cfg.n + 1);
    coeffs.push(C64::new(0.0, 0.0));
    for (j, a) in taylor[..cfg.n].iter().enumerate() {
        coeffs.push(a * cfg.r.powi(j as i32 + 1));
    }
    Ok(RationalFunction::polynomial(coeffs))
}

/// `f/‖f‖_{∞,T}` together with the measured norm.
pub fn normalize_sup(f: &RationalFunction, grid: &CircleGrid) -> Result<(RationalFunction, f64)> {
    let sup = sup_norm_circle(f, grid)?;
    if !(sup > 0.0) {
        return Err(Error::DegenerateImage(sup));
    }
    Ok((f.scaled(C64::new(1.0 / sup, 0.0)), sup))
}
