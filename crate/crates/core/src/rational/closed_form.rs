use super::Analytic;
use crate::error::{Error, Result};
use crate::C64;

/// The Koebe function `z/(1 − z)²`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Koebe;

impl Analytic for Koebe {
    fn value_and_derivative(&self, z: C64) -> Result<(C64, C64)> {
        let d = 1.0 - z;
        if d.norm() < super::POLE_TOLERANCE {
            return Err(Error::PoleProximity {
                z,
                tolerance: super::POLE_TOLERANCE,
            });
        }
        Ok((z / (d * d), (1.0 + z) / (d * d * d)))
    }
}

/// The linear fractional map `(a z + b)/(c z + d)`.
#[derive(Clone, Copy, Debug)]
pub struct Mobius {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl Mobius {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        if a * d - b * c == C64::new(0.0, 0.0) {
            return Err(Error::MalformedFunction("degenerate Möbius map (ad − bc = 0)".into()));
        }
        Ok(Self { a, b, c, d })
    }
}

impl Analytic for Mobius {
    fn value_and_derivative(&self, z: C64) -> Result<(C64, C64)> {
        let den = self.c * z + self.d;
        if den.norm() < super::POLE_TOLERANCE * self.c.norm().max(f64::MIN_POSITIVE) {
            return Err(Error::PoleProximity {
                z,
                tolerance: super::POLE_TOLERANCE,
            });
        }
        let det = self.a * self.d - self.b * self.c;
        Ok(((self.a * z + self.b) / den, det / (den * den)))
    }
}
