use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Analytic;
use crate::C64;

/// Taylor coefficients `a_1..a_n` of the Koebe function, `a_j = j`.
pub fn koebe_coefficients(n: usize) -> Vec<C64> {
    (1..=n).map(|j| C64::new(j as f64, 0.0)).collect()
}

/// `g(z) = k_u(φ_a(z))` with the rotated Koebe map `k_u(w) = w/(1 − u w)²`
/// and `φ_a(z) = (z + a)/(1 + āz)`, normalized to `(g − g(0))/g'(0)`.
///
/// Univalent on `D` for every `|a| < 1`, `|u| = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComposedKoebe {
    pub a: C64,
    pub u: C64,
}

impl ComposedKoebe {
    pub fn new(a: C64, rotation: f64) -> Result<Self> {
        if !(a.norm() < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "automorphism point {a} not in the disk"
            )));
        }
        Ok(Self {
            a,
            u: C64::from_polar(1.0, rotation),
        })
    }

    /// Numerator and denominator of `g` as quadratics:
    /// `g = (z + a)(1 + āz) / ((1 − u a) + (ā − u) z)²`.
    fn quadratics(&self) -> ([C64; 3], [C64; 3]) {
        let (a, u) = (self.a, self.u);
        let one = C64::new(1.0, 0.0);
        let num = [a, one + a.norm_sqr(), a.conj()];
        let (p, q) = (one - u * a, a.conj() - u);
        (num, [p * p, 2.0 * p * q, q * q])
    }

    fn raw(&self, z: C64) -> (C64, C64) {
        let (n, d) = self.quadratics();
        let nv = n[0] + z * (n[1] + z * n[2]);
        let nd = n[1] + 2.0 * z * n[2];
        let dv = d[0] + z * (d[1] + z * d[2]);
        let dd = d[1] + 2.0 * z * d[2];
        (nv / dv, (nd * dv - nv * dd) / (dv * dv))
    }

    /// Normalized Taylor coefficients `a_1 = 1, a_2, …, a_n` by series
    /// division of the two quadratics.
    pub fn coefficients(&self, n: usize) -> Vec<C64> {
        let (num, den) = self.quadratics();
        let mut g = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = if k < 3 { num[k] } else { C64::new(0.0, 0.0) };
            for i in 1..=k.min(2) {
                acc -= den[i] * g[k - i];
            }
            g.push(acc / den[0]);
        }
        let lead = g[1];
        g[1..].iter().map(|c| c / lead).collect()
    }
}

impl Analytic for ComposedKoebe {
    fn value_and_derivative(&self, z: C64) -> Result<(C64, C64)> {
        let (g0, d0) = self.raw(C64::new(0.0, 0.0));
        let (g, d) = self.raw(z);
        Ok(((g - g0) / d0, d / d0))
    }
}

/// Random composed Koebe map with `|a| ≤ max_modulus`.
pub fn rotated_koebe_composed<R: rand::Rng + ?Sized>(rng: &mut R, max_modulus: f64) -> ComposedKoebe {
    let a = crate::samples::point_in_disk(rng, max_modulus);
    let rotation = rng.gen_range(0.0..std::f64::consts::TAU);
    ComposedKoebe::new(a, rotation).expect("point inside the disk")
}
