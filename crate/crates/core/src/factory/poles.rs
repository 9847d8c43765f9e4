use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::RationalFunction;
use crate::C64;

/// How the coefficient budget is shared among `c_2, …, c_m`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientPolicy {
    /// Every term receives the same share of the budget.
    #[default]
    EqualSplit,
    /// Shares halve from one term to the next.
    GeometricDecay,
}

fn default_fraction() -> f64 {
    0.9
}

/// Poles `b_j` outside the closed disk and how to weight their terms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolePrescription {
    pub poles: Vec<C64>,
    #[serde(default)]
    pub policy: CoefficientPolicy,
    #[serde(default = "default_fraction")]
    pub budget_fraction: f64,
}

impl PolePrescription {
    pub fn new(poles: Vec<C64>) -> Result<Self> {
        Self::with_policy(poles, CoefficientPolicy::EqualSplit, default_fraction())
    }

    pub fn with_policy(poles: Vec<C64>, policy: CoefficientPolicy, budget_fraction: f64) -> Result<Self> {
        let p = Self {
            poles,
            policy,
            budget_fraction,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.poles.is_empty() {
            return Err(Error::InvalidParameter("at least one pole is required".into()));
        }
        if let Some(b) = self.poles.iter().find(|b| !(b.norm() > 1.0) || !b.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "pole {b} is not outside the closed disk"
            )));
        }
        if !(self.budget_fraction > 0.0 && self.budget_fraction <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "budget fraction {} outside (0, 1]",
                self.budget_fraction
            )));
        }
        Ok(())
    }

    /// Reflected basis points `a_j = 1/b̄_j`, sorted by modulus.
    pub fn basis_points(&self) -> Vec<C64> {
        let mut a: Vec<C64> = self.poles.iter().map(|b| 1.0 / b.conj()).collect();
        a.sort_by(|x, y| x.norm().total_cmp(&y.norm()));
        a
    }
}

/// `a√(1−a²)(1−2a²)/(1+a)⁴`: the lower bound of `Re e_1'` on the disk when
/// `e_1` is built on the real point `a`.
pub fn budget_rhs(a: f64) -> f64 {
    a * (1.0 - a * a).sqrt() * (1.0 - 2.0 * a * a) / (1.0 + a).powi(4)
}

/// Bound on `sup_D |e_k'|` in terms of the moduli of the first `k` points.
fn derivative_weight(moduli: &[f64], k: usize) -> f64 {
    let ratio = |s: f64| (1.0 + s) / (1.0 - s);
    ratio(moduli[k]).sqrt() * moduli[..=k].iter().map(|&s| ratio(s)).sum::<f64>()
}

#[derive(Clone, Debug, PartialEq)]
pub struct PoleConstruction {
    pub function: RationalFunction,
    /// Argument of `a_1`; the construction is done with `a_1` rotated onto
    /// the positive axis.
    pub rotation: f64,
    pub budget_rhs: f64,
    /// `Σ_{k≥2} |c_k| w_k`, equal to `budget_fraction · budget_rhs`.
    pub budget_used: f64,
}

/// Builds `R = Σ c_k e_k` with `c_1 = 1` (up to the rotation) and `c_k` for
/// `k ≥ 2` small enough that `Re R' > 0` on the disk.
pub fn construct_from_poles(p: &PolePrescription) -> Result<PoleConstruction> {
    p.validate()?;
    let points = p.basis_points();
    let moduli: Vec<f64> = points.iter().map(|a| a.norm()).collect();
    let a1 = moduli[0];
    if a1 >= std::f64::consts::FRAC_1_SQRT_2 {
        return Err(Error::CriterionInapplicable(a1));
    }
    let rotation = points[0].arg();
    let rhs = budget_rhs(a1);
    let budget = p.budget_fraction * rhs;
    let m = points.len();

    let shares: Vec<f64> = match p.policy {
        CoefficientPolicy::EqualSplit => vec![budget / (m.max(2) - 1) as f64; m.saturating_sub(1)],
        CoefficientPolicy::GeometricDecay => {
            let total: f64 = (0..m.saturating_sub(1)).map(|i| 0.5f64.powi(i as i32)).sum();
            (0..m.saturating_sub(1))
                .map(|i| budget * 0.5f64.powi(i as i32) / total)
                .collect()
        }
    };
    let mut moduli_c = vec![1.0];
    for (i, share) in shares.iter().enumerate() {
        let k = i + 1;
        let c = share / derivative_weight(&moduli, k);
        if !(c >= 1e-15) {
            return Err(Error::BudgetUnderflow { index: k + 1, value: c });
        }
        moduli_c.push(c);
    }
    let budget_used = (1..m).map(|k| moduli_c[k] * derivative_weight(&moduli, k)).sum();

    // R(z) = e^{iφ} R̃(e^{-iφ} z) where R̃ uses the rotated points; the basis
    // functions are rotation-covariant, so only the coefficients pick up e^{iφ}.
    let phase = C64::from_polar(1.0, rotation);
    let coeffs = moduli_c.iter().map(|&c| phase * c).collect();
    let function = RationalFunction::pole_basis(C64::new(0.0, 0.0), points, coeffs)?;
    Ok(PoleConstruction {
        function,
        rotation,
        budget_rhs: rhs,
        budget_used,
    })
}
