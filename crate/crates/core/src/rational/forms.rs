use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::blaschke::blaschke_factor;
use super::POLE_TOLERANCE;
use crate::error::{Error, Result};
use crate::numeric::{golden_max, horner, trim_trailing_zeros};
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

fn pole_check(z: C64, pole: C64) -> Result<()> {
    if (z - pole).norm() < POLE_TOLERANCE {
        return Err(Error::PoleProximity {
            z,
            tolerance: POLE_TOLERANCE,
        });
    }
    Ok(())
}

/// `a + Σ c_k e_k(z)` in the Malmquist–Takenaka basis of the points `a_k`.
///
/// The poles are `1/ā_k`; basis points must be sorted by modulus.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoleBasis {
    pub(crate) constant: C64,
    pub(crate) points: Vec<C64>,
    pub(crate) coeffs: Vec<C64>,
}

impl PoleBasis {
    pub fn new(constant: C64, points: Vec<C64>, coeffs: Vec<C64>) -> Result<Self> {
        if points.len() != coeffs.len() {
            return Err(Error::MalformedFunction(format!(
                "{} basis points but {} coefficients",
                points.len(),
                coeffs.len()
            )));
        }
        if let Some(a) = points.iter().find(|a| !(a.norm() < 1.0)) {
            return Err(Error::MalformedFunction(format!(
                "basis point {a} is not inside the unit disk"
            )));
        }
        if points.windows(2).any(|w| w[0].norm() > w[1].norm()) {
            return Err(Error::MalformedFunction(
                "basis points must be sorted by increasing modulus".into(),
            ));
        }
        Ok(Self {
            constant,
            points,
            coeffs,
        })
    }

    pub fn constant(&self) -> C64 {
        self.constant
    }

    pub fn points(&self) -> &[C64] {
        &self.points
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn poles(&self) -> Vec<C64> {
        self.points
            .iter()
            .filter(|a| a.norm() > 0.0)
            .map(|a| 1.0 / a.conj())
            .collect()
    }

    pub fn eval(&self, z: C64) -> Result<(C64, C64)> {
        let mut blaschke = ONE;
        let mut blaschke_d = ZERO;
        let mut value = self.constant;
        let mut deriv = ZERO;
        for (&a, &c) in self.points.iter().zip(&self.coeffs) {
            if a.norm() > 0.0 {
                pole_check(z, 1.0 / a.conj())?;
            }
            let scale = (1.0 - a.norm_sqr()).sqrt();
            let den = 1.0 - a.conj() * z;
            value += c * scale * blaschke / den;
            deriv += c * scale * (blaschke_d / den + blaschke * a.conj() / (den * den));
            let (f, df) = blaschke_factor(a, z);
            blaschke_d = blaschke_d * f + blaschke * df;
            blaschke *= f;
        }
        Ok((value, deriv))
    }
}

/// `P(z)/Q(z)` with coefficient lists in ascending powers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyRatio {
    pub(crate) numerator: Vec<C64>,
    pub(crate) denominator: Vec<C64>,
}

impl PolyRatio {
    /// Validates the denominator: not identically zero and bounded away from
    /// zero on the unit circle (dense sampling polished by golden-section).
    pub fn new(numerator: Vec<C64>, denominator: Vec<C64>) -> Result<Self> {
        let numerator = trim_trailing_zeros(if numerator.is_empty() { vec![ZERO] } else { numerator });
        let denominator = trim_trailing_zeros(denominator);
        if denominator.iter().all(|c| *c == ZERO) {
            return Err(Error::MalformedFunction("denominator is identically zero".into()));
        }
        if numerator.iter().chain(&denominator).any(|c| !c.is_finite()) {
            return Err(Error::MalformedFunction("non-finite coefficient".into()));
        }
        if denominator.len() > 1 {
            let scale: f64 = denominator.iter().map(|c| c.norm()).sum();
            let min = min_modulus_on_circle(&denominator);
            if min <= 1e-12 * scale {
                return Err(Error::MalformedFunction(format!(
                    "denominator vanishes on the unit circle (min |Q| = {min:e})"
                )));
            }
        }
        Ok(Self { numerator, denominator })
    }

    pub fn numerator(&self) -> &[C64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[C64] {
        &self.denominator
    }

    pub fn degree(&self) -> usize {
        (self.numerator.len().max(self.denominator.len())).saturating_sub(1)
    }

    pub fn eval(&self, z: C64) -> Result<(C64, C64)> {
        let (p, dp) = horner(&self.numerator, z);
        let (q, dq) = horner(&self.denominator, z);
        // Newton step |Q/Q'| estimates the distance to the nearest root of Q.
        if q == ZERO || q.norm() < POLE_TOLERANCE * dq.norm() {
            return Err(Error::PoleProximity {
                z,
                tolerance: POLE_TOLERANCE,
            });
        }
        Ok((p / q, (dp * q - p * dq) / (q * q)))
    }
}

fn min_modulus_on_circle(coeffs: &[C64]) -> f64 {
    let samples = (64 * coeffs.len()).clamp(256, 8192);
    let step = 2.0 * PI / samples as f64;
    let modulus = |theta: f64| horner(coeffs, C64::from_polar(1.0, theta)).0.norm();
    let (best, _) = (0..samples)
        .map(|j| (j, modulus(j as f64 * step)))
        .fold((0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
    let centre = best as f64 * step;
    let (_, neg) = golden_max(|t| -modulus(t), centre - step, centre + step, 1e-14);
    -neg
}

/// One pole of a partial-fraction expansion: `Σ_l c_l/(p − z)^{l+1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoleTerm {
    pub pole: C64,
    pub coefficients: Vec<C64>,
}

/// `c + Σ_j Σ_l c_{j,l}/(p_j − z)^{l+1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartialFractions {
    pub(crate) constant: C64,
    pub(crate) terms: Vec<PoleTerm>,
}

impl PartialFractions {
    pub fn new(constant: C64, terms: Vec<PoleTerm>) -> Result<Self> {
        if let Some(t) = terms.iter().find(|t| (t.pole.norm() - 1.0).abs() < 1e-12) {
            return Err(Error::MalformedFunction(format!(
                "pole {} lies on the unit circle",
                t.pole
            )));
        }
        Ok(Self { constant, terms })
    }

    pub fn constant(&self) -> C64 {
        self.constant
    }

    pub fn terms(&self) -> &[PoleTerm] {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.coefficients.len()).sum()
    }

    pub fn eval(&self, z: C64) -> Result<(C64, C64)> {
        let mut value = self.constant;
        let mut deriv = ZERO;
        for term in &self.terms {
            pole_check(z, term.pole)?;
            let inv = 1.0 / (term.pole - z);
            let mut power = inv;
            for (l, c) in term.coefficients.iter().enumerate() {
                value += c * power;
                power *= inv;
                deriv += c * (l as f64 + 1.0) * power;
            }
        }
        Ok((value, deriv))
    }
}
