use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factory::{
    construct_from_poles, kayumov_truncate, koebe_coefficients, runge_approximate, CoefficientPolicy, ComposedKoebe,
    KayumovConfig, PolePrescription, RungeConfig,
};
use crate::quadrature::{verify_bounds, BoundReport, CircleGrid};
use crate::rational::{Descriptor, RationalFunction};
use crate::univalence::{boundary_simple, default_resolution, UnivalenceCertificate};
use crate::C64;

/// Taylor series fed to the truncation generator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SeriesSpec {
    /// `a_j = j`.
    Koebe,
    /// Rotated Koebe map after a disk automorphism, normalized to `a_1 = 1`.
    Composed { a: C64, rotation: f64 },
    /// `a_1, a_2, …` given explicitly.
    Explicit { coefficients: Vec<C64> },
}

impl SeriesSpec {
    pub fn coefficients(&self, n: usize) -> Result<Vec<C64>> {
        match self {
            SeriesSpec::Koebe => Ok(koebe_coefficients(n)),
            SeriesSpec::Composed { a, rotation } => Ok(ComposedKoebe::new(*a, *rotation)?.coefficients(n)),
            SeriesSpec::Explicit { coefficients } => Ok(coefficients.clone()),
        }
    }
}

fn default_radius() -> f64 {
    2.0
}

fn default_fraction() -> f64 {
    0.9
}

fn default_delta() -> f64 {
    0.1
}

/// How a family member of a given degree is built.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "kebab-case")]
pub enum Generator {
    /// `n` poles at angles `2πj/n`, with moduli spread evenly over
    /// `[radius, radius + spread]`.
    Poles {
        #[serde(default = "default_radius")]
        radius: f64,
        #[serde(default)]
        spread: f64,
        #[serde(default)]
        policy: CoefficientPolicy,
        #[serde(default = "default_fraction")]
        budget_fraction: f64,
    },
    /// Dilated degree-`n` section of a univalent series.
    Kayumov { series: SeriesSpec },
    /// Runge approximant with `degree/(order+1)` arcs.
    Runge {
        target: Descriptor,
        #[serde(default = "default_delta")]
        delta: f64,
        #[serde(default)]
        order: usize,
    },
    /// `z^n`; equality case of the Dolzhenko bound, not univalent for `n ≥ 2`.
    Power,
    /// A fixed list of functions; the degree schedule is ignored.
    Explicit { functions: Vec<Descriptor> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub generator: Generator,
    #[serde(default)]
    pub degrees: Vec<usize>,
}

impl FamilySpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Members as `(nominal degree, function)`.
    pub fn members(&self) -> Result<Vec<(usize, RationalFunction)>> {
        let wrap = |degree: usize| {
            move |e: Error| Error::GeneratorFailure {
                degree,
                source: Box::new(e),
            }
        };
        match &self.generator {
            Generator::Explicit { functions } => {
                if functions.is_empty() {
                    return Err(Error::EmptyFamily);
                }
                functions
                    .iter()
                    .map(|d| {
                        let f = RationalFunction::try_from(d.clone()).map_err(wrap(0))?;
                        Ok((f.degree(), f))
                    })
                    .collect()
            }
            g => {
                if self.degrees.is_empty() {
                    return Err(Error::EmptyFamily);
                }
                self.degrees
                    .iter()
                    .map(|&n| Ok((n, build(g, n).map_err(wrap(n))?)))
                    .collect()
            }
        }
    }
}

fn build(g: &Generator, n: usize) -> Result<RationalFunction> {
    match g {
        Generator::Poles {
            radius,
            spread,
            policy,
            budget_fraction,
        } => {
            let poles = (0..n)
                .map(|j| {
                    let modulus = radius + spread * j as f64 / n.max(2).saturating_sub(1) as f64;
                    C64::from_polar(modulus, std::f64::consts::TAU * j as f64 / n as f64)
                })
                .collect();
            let p = PolePrescription::with_policy(poles, *policy, *budget_fraction)?;
            Ok(construct_from_poles(&p)?.function)
        }
        Generator::Kayumov { series } => {
            let cfg = KayumovConfig::new(n)?;
            kayumov_truncate(&series.coefficients(n)?, &cfg)
        }
        Generator::Runge { target, delta, order } => {
            let f = RationalFunction::try_from(target.clone())?;
            let cfg = RungeConfig::new(*delta, *order, (n / (order + 1)).max(1))?;
            runge_approximate(&f, &cfg)
        }
        Generator::Power => Ok(RationalFunction::power(n)),
        Generator::Explicit { .. } => unreachable!("explicit families are expanded directly"),
    }
}

/// One measured family member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRecord {
    pub degree: usize,
    pub length: f64,
    pub sup_norm: f64,
    /// `ℓ/‖R‖_{∞,T}`, the length after scaling to unit sup norm.
    pub normalized_length: f64,
    pub certified: bool,
    pub certificate: Option<UnivalenceCertificate>,
    pub bounds: BoundReport,
}

/// Certification with the boundary test; maps with poles in the closed disk
/// or a constant image are simply not certified.
fn certify(f: &RationalFunction) -> Result<Option<UnivalenceCertificate>> {
    if f.poles_in_closed_disk()? > 0 {
        return Ok(None);
    }
    match boundary_simple(f, default_resolution(f.degree())) {
        Ok(c) => Ok(Some(c)),
        Err(Error::DegenerateImage(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn measure_member(f: &RationalFunction, grid: &CircleGrid) -> Result<GrowthRecord> {
    let certificate = certify(f)?;
    let certified = certificate.as_ref().map(UnivalenceCertificate::passed).unwrap_or(false);
    let bounds = verify_bounds(f, Some(certified), grid)?;
    let normalized_length = if bounds.boundary_length == 0.0 {
        0.0
    } else {
        bounds.boundary_length / bounds.sup_norm
    };
    Ok(GrowthRecord {
        degree: bounds.degree,
        length: bounds.boundary_length,
        sup_norm: bounds.sup_norm,
        normalized_length,
        certified,
        certificate,
        bounds,
    })
}

/// Builds, certifies and measures every member; records are ordered by degree.
pub fn run_growth_family(spec: &FamilySpec, grid: &CircleGrid) -> Result<Vec<GrowthRecord>> {
    let mut records = Vec::new();
    for (n, f) in spec.members()? {
        let record = measure_member(&f, grid).map_err(|e| Error::GeneratorFailure {
            degree: n,
            source: Box::new(e),
        })?;
        records.push(record);
    }
    records.sort_by_key(|r| r.degree);
    Ok(records)
}
