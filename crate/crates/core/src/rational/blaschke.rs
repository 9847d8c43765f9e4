use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::C64;

/// One unimodular factor `(ā/|a|)·(z − a)/(āz − 1)` and its derivative.
///
/// A zero at the origin contributes the factor `z`.
pub(crate) fn blaschke_factor(a: C64, z: C64) -> (C64, C64) {
    let modulus = a.norm();
    if modulus == 0.0 {
        return (z, C64::new(1.0, 0.0));
    }
    let unit = a.conj() / modulus;
    let den = a.conj() * z - 1.0;
    let value = unit * (z - a) / den;
    let deriv = unit * (modulus * modulus - 1.0) / (den * den);
    (value, deriv)
}

/// Finite Blaschke product with zeros strictly inside the unit disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlaschkeProduct {
    zeros: Vec<C64>,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<C64>) -> Result<Self> {
        if let Some(z) = zeros.iter().find(|z| !(z.norm() < 1.0) || !z.is_finite()) {
            return Err(Error::MalformedFunction(format!(
                "Blaschke zero {z} is not inside the unit disk"
            )));
        }
        Ok(Self { zeros })
    }

    pub fn zeros(&self) -> &[C64] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.zeros
            .iter()
            .fold(C64::new(1.0, 0.0), |acc, &a| acc * blaschke_factor(a, z).0)
    }

    pub fn eval_with_derivative(&self, z: C64) -> (C64, C64) {
        let mut value = C64::new(1.0, 0.0);
        let mut deriv = C64::new(0.0, 0.0);
        for &a in &self.zeros {
            let (f, df) = blaschke_factor(a, z);
            deriv = deriv * f + value * df;
            value *= f;
        }
        (value, deriv)
    }

    /// Returns `|B(w)|` and `(1 − |B(w)|²)/(1 − ρ)` for `|w| = ρ < 1`.
    ///
    /// The quotient is assembled from the factor identity
    /// `1 − |b_a(w)|² = (1 − |a|²)(1 − |w|²)/|1 − āw|²`, so the `(1 − ρ)` cancels
    /// analytically and the result stays accurate as `ρ → 1`.
    pub fn boundary_defect(&self, w: C64, rho: f64) -> (f64, f64) {
        let mut prefix = 1.0;
        let mut defect = 0.0;
        for &a in &self.zeros {
            let a2 = a.norm_sqr();
            let q = (1.0 - a2) * (1.0 + rho) / (1.0 - a.conj() * w).norm_sqr();
            let factor_sq = blaschke_factor(a, w).0.norm_sqr();
            defect += q * prefix;
            prefix *= factor_sq;
        }
        (prefix.sqrt(), defect)
    }
}
