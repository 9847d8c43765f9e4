//! Structured rational functions and the objects built from them.

mod blaschke;
mod closed_form;
mod descriptor;
mod forms;
mod kernel;

pub use blaschke::BlaschkeProduct;
pub use closed_form::{Koebe, Mobius};
pub use descriptor::Descriptor;
pub use forms::{PartialFractions, PoleBasis, PoleTerm, PolyRatio};
pub use kernel::{mt_basis_eval, reproducing_kernel_eval};

use crate::error::Result;
use crate::numeric::{poly_add, poly_mul, trim_trailing_zeros};
use crate::quadrature::{self, CircleGrid};
use crate::C64;

/// Evaluations closer than this to a pole are rejected.
pub const POLE_TOLERANCE: f64 = 1e-13;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// A function with pointwise access to its value and analytic derivative.
pub trait Analytic {
    fn value_and_derivative(&self, z: C64) -> Result<(C64, C64)>;

    fn value(&self, z: C64) -> Result<C64> {
        self.value_and_derivative(z).map(|v| v.0)
    }

    fn derivative(&self, z: C64) -> Result<C64> {
        self.value_and_derivative(z).map(|v| v.1)
    }
}

impl<T: Analytic + ?Sized> Analytic for &T {
    fn value_and_derivative(&self, z: C64) -> Result<(C64, C64)> {
        (**self).value_and_derivative(z)
    }
}

impl Analytic for BlaschkeProduct {
    fn value_and_derivative(&self, z: C64) -> Result<(C64, C64)> {
        Ok(self.eval_with_derivative(z))
    }

    fn value(&self, z: C64) -> Result<C64> {
        Ok(self.eval(z))
    }
}

/// A rational map in one of its exact structured forms.
#[derive(Clone, Debug, PartialEq)]
pub enum RationalFunction {
    PoleBasis(PoleBasis),
    PolyRatio(PolyRatio),
    /// Polynomial with ascending coefficients.
    Taylor(Vec<C64>),
    Blaschke(BlaschkeProduct),
    PartialFractions(PartialFractions),
}

impl RationalFunction {
    pub fn polynomial(coeffs: Vec<C64>) -> Self {
        let coeffs = trim_trailing_zeros(if coeffs.is_empty() { vec![ZERO] } else { coeffs });
        RationalFunction::Taylor(coeffs)
    }

    /// `z ↦ zⁿ`.
    pub fn power(n: usize) -> Self {
        let mut c = vec![ZERO; n + 1];
        c[n] = ONE;
        Self::polynomial(c)
    }

    pub fn constant(c: C64) -> Self {
        Self::polynomial(vec![c])
    }

    pub fn poly_ratio(numerator: Vec<C64>, denominator: Vec<C64>) -> Result<Self> {
        PolyRatio::new(numerator, denominator).map(RationalFunction::PolyRatio)
    }

    pub fn pole_basis(constant: C64, points: Vec<C64>, coeffs: Vec<C64>) -> Result<Self> {
        PoleBasis::new(constant, points, coeffs).map(RationalFunction::PoleBasis)
    }

    pub fn blaschke(zeros: Vec<C64>) -> Result<Self> {
        BlaschkeProduct::new(zeros).map(RationalFunction::Blaschke)
    }

    pub fn degree(&self) -> usize {
        match self {
            RationalFunction::PoleBasis(p) => p.points.len(),
            RationalFunction::PolyRatio(p) => p.degree(),
            RationalFunction::Taylor(c) => c.len().saturating_sub(1),
            RationalFunction::Blaschke(b) => b.degree(),
            RationalFunction::PartialFractions(p) => p.degree(),
        }
    }

    pub fn eval(&self, z: C64) -> Result<C64> {
        self.value(z)
    }

    pub fn eval_derivative(&self, z: C64) -> Result<C64> {
        self.derivative(z)
    }

    /// Number of poles (with multiplicity) in the closed unit disk.
    ///
    /// Poles are known explicitly for every form except `PolyRatio`, where the
    /// zeros of the denominator inside the disk are counted with the argument
    /// principle.
    pub fn poles_in_closed_disk(&self) -> Result<usize> {
        match self {
            RationalFunction::PoleBasis(_) | RationalFunction::Taylor(_) | RationalFunction::Blaschke(_) => Ok(0),
            RationalFunction::PartialFractions(p) => Ok(p
                .terms
                .iter()
                .filter(|t| t.pole.norm() <= 1.0)
                .map(|t| t.coefficients.len())
                .sum()),
            RationalFunction::PolyRatio(p) => {
                if p.denominator.len() <= 1 {
                    return Ok(0);
                }
                quadrature::zero_count_in_disk(&p.denominator, &CircleGrid::default())
            }
        }
    }

    /// Multiplies the function by `lambda`.
    pub fn scaled(&self, lambda: C64) -> Self {
        match self {
            RationalFunction::PoleBasis(p) => RationalFunction::PoleBasis(PoleBasis {
                constant: p.constant * lambda,
                points: p.points.clone(),
                coeffs: p.coeffs.iter().map(|c| c * lambda).collect(),
            }),
            RationalFunction::PolyRatio(p) => RationalFunction::PolyRatio(PolyRatio {
                numerator: p.numerator.iter().map(|c| c * lambda).collect(),
                denominator: p.denominator.clone(),
            }),
            RationalFunction::Taylor(c) => RationalFunction::Taylor(c.iter().map(|c| c * lambda).collect()),
            RationalFunction::Blaschke(_) => {
                let RationalFunction::PolyRatio(p) = self.to_poly_ratio() else {
                    unreachable!()
                };
                RationalFunction::PolyRatio(PolyRatio {
                    numerator: p.numerator.iter().map(|c| c * lambda).collect(),
                    denominator: p.denominator,
                })
            }
            RationalFunction::PartialFractions(p) => RationalFunction::PartialFractions(PartialFractions {
                constant: p.constant * lambda,
                terms: p
                    .terms
                    .iter()
                    .map(|t| PoleTerm {
                        pole: t.pole,
                        coefficients: t.coefficients.iter().map(|c| c * lambda).collect(),
                    })
                    .collect(),
            }),
        }
    }

    /// Expands the structured form into a numerator/denominator pair by
    /// multiplying out its factors.
    pub fn to_poly_ratio(&self) -> RationalFunction {
        let (num, den) = match self {
            RationalFunction::PolyRatio(p) => (p.numerator.clone(), p.denominator.clone()),
            RationalFunction::Taylor(c) => (c.clone(), vec![ONE]),
            RationalFunction::Blaschke(b) => {
                let num = b
                    .zeros()
                    .iter()
                    .fold(vec![ONE], |acc, &a| poly_mul(&acc, &zero_factor(a)));
                let den = b
                    .zeros()
                    .iter()
                    .fold(vec![ONE], |acc, &a| poly_mul(&acc, &pole_factor(a)));
                (num, den)
            }
            RationalFunction::PoleBasis(p) => {
                let m = p.points.len();
                let den = p
                    .points
                    .iter()
                    .fold(vec![ONE], |acc, &a| poly_mul(&acc, &pole_factor(a)));
                let mut num: Vec<C64> = den.iter().map(|c| c * p.constant).collect();
                for k in 0..m {
                    let a = p.points[k];
                    let scale = (1.0 - a.norm_sqr()).sqrt();
                    let mut term = vec![p.coeffs[k] * scale];
                    for &b in &p.points[..k] {
                        term = poly_mul(&term, &zero_factor(b));
                    }
                    for &b in &p.points[k + 1..] {
                        term = poly_mul(&term, &pole_factor(b));
                    }
                    num = poly_add(&num, &term);
                }
                (num, den)
            }
            RationalFunction::PartialFractions(p) => {
                let linear = |pole: C64| vec![pole, -ONE];
                let power = |pole: C64, k: usize| (0..k).fold(vec![ONE], |acc, _| poly_mul(&acc, &linear(pole)));
                let den = p
                    .terms
                    .iter()
                    .fold(vec![ONE], |acc, t| poly_mul(&acc, &power(t.pole, t.coefficients.len())));
                let mut num: Vec<C64> = den.iter().map(|c| c * p.constant).collect();
                for (j, t) in p.terms.iter().enumerate() {
                    let others = p
                        .terms
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != j)
                        .fold(vec![ONE], |acc, (_, s)| {
                            poly_mul(&acc, &power(s.pole, s.coefficients.len()))
                        });
                    let order = t.coefficients.len();
                    for (l, c) in t.coefficients.iter().enumerate() {
                        let piece = poly_mul(&others, &power(t.pole, order - l - 1));
                        num = poly_add(&num, &piece.iter().map(|x| x * c).collect::<Vec<_>>());
                    }
                }
                (num, den)
            }
        };
        RationalFunction::PolyRatio(PolyRatio {
            numerator: trim_trailing_zeros(num),
            denominator: trim_trailing_zeros(den),
        })
    }
}

/// Numerator factor of one Blaschke term over the common denominator
/// `Π(1 − ā z)`: `−(ā/|a|)(z − a)`, or `z` for `a = 0`.
fn zero_factor(a: C64) -> Vec<C64> {
    let modulus = a.norm();
    if modulus == 0.0 {
        return vec![ZERO, ONE];
    }
    let unit = a.conj() / modulus;
    vec![unit * a, -unit]
}

fn pole_factor(a: C64) -> Vec<C64> {
    vec![ONE, -a.conj()]
}

impl Analytic for RationalFunction {
    fn value_and_derivative(&self, z: C64) -> Result<(C64, C64)> {
        match self {
            RationalFunction::PoleBasis(p) => p.eval(z),
            RationalFunction::PolyRatio(p) => p.eval(z),
            RationalFunction::Taylor(c) => Ok(crate::numeric::horner(c, z)),
            RationalFunction::Blaschke(b) => Ok(b.eval_with_derivative(z)),
            RationalFunction::PartialFractions(p) => p.eval(z),
        }
    }
}

impl From<BlaschkeProduct> for RationalFunction {
    fn from(b: BlaschkeProduct) -> Self {
        RationalFunction::Blaschke(b)
    }
}
