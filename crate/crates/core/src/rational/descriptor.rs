//! JSON function descriptors.
//!
//! Complex numbers are two-element arrays `[re, im]`; coefficient lists run
//! in ascending powers. The `kind` field selects the form.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{BlaschkeProduct, PartialFractions, PoleBasis, PoleTerm, PolyRatio, RationalFunction};
use crate::error::Result;
use crate::C64;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Descriptor {
    PoleBasis {
        #[serde(default)]
        constant: C64,
        points: Vec<C64>,
        coefficients: Vec<C64>,
    },
    PolyRatio {
        numerator: Vec<C64>,
        denominator: Vec<C64>,
    },
    Taylor {
        coefficients: Vec<C64>,
    },
    Blaschke {
        zeros: Vec<C64>,
    },
    PartialFractions {
        #[serde(default)]
        constant: C64,
        poles: Vec<PoleTerm>,
    },
}

impl TryFrom<Descriptor> for RationalFunction {
    type Error = crate::Error;

    fn try_from(d: Descriptor) -> Result<Self> {
        Ok(match d {
            Descriptor::PoleBasis {
                constant,
                points,
                coefficients,
            } => RationalFunction::PoleBasis(PoleBasis::new(constant, points, coefficients)?),
            Descriptor::PolyRatio { numerator, denominator } => {
                RationalFunction::PolyRatio(PolyRatio::new(numerator, denominator)?)
            }
            Descriptor::Taylor { coefficients } => RationalFunction::polynomial(coefficients),
            Descriptor::Blaschke { zeros } => RationalFunction::Blaschke(BlaschkeProduct::new(zeros)?),
            Descriptor::PartialFractions { constant, poles } => {
                RationalFunction::PartialFractions(PartialFractions::new(constant, poles)?)
            }
        })
    }
}

impl From<&RationalFunction> for Descriptor {
    fn from(f: &RationalFunction) -> Self {
        match f {
            RationalFunction::PoleBasis(p) => Descriptor::PoleBasis {
                constant: p.constant,
                points: p.points.clone(),
                coefficients: p.coeffs.clone(),
            },
            RationalFunction::PolyRatio(p) => Descriptor::PolyRatio {
                numerator: p.numerator.clone(),
                denominator: p.denominator.clone(),
            },
            RationalFunction::Taylor(c) => Descriptor::Taylor {
                coefficients: c.clone(),
            },
            RationalFunction::Blaschke(b) => Descriptor::Blaschke {
                zeros: b.zeros().to_vec(),
            },
            RationalFunction::PartialFractions(p) => Descriptor::PartialFractions {
                constant: p.constant,
                poles: p.terms.clone(),
            },
        }
    }
}

impl RationalFunction {
    pub fn from_json(text: &str) -> Result<Self> {
        let d: Descriptor = serde_json::from_str(text)?;
        d.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Descriptor::from(self)).expect("descriptor serialization")
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pole_basis() {
        let f = RationalFunction::from_json(
            r#"{"kind":"pole_basis","constant":[0,0],"points":[[0.5,0]],"coefficients":[[1,0]]}"#,
        )
        .unwrap();
        assert_eq!(f.degree(), 1);
        assert!((f.eval(C64::new(0.0, 0.0)).unwrap().re - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn round_trips_every_kind() {
        let fns = [
            RationalFunction::power(3),
            RationalFunction::poly_ratio(vec![C64::new(1.0, 0.0)], vec![C64::new(-2.0, 0.0), C64::new(1.0, 0.0)])
                .unwrap(),
            RationalFunction::blaschke(vec![C64::new(0.2, 0.3)]).unwrap(),
            RationalFunction::pole_basis(C64::new(0.1, 0.0), vec![C64::new(0.2, 0.1)], vec![C64::new(1.0, -1.0)])
                .unwrap(),
            RationalFunction::PartialFractions(
                PartialFractions::new(
                    C64::new(0.0, 0.0),
                    vec![PoleTerm {
                        pole: C64::new(1.5, 0.0),
                        coefficients: vec![C64::new(1.0, 0.0); 2],
                    }],
                )
                .unwrap(),
            ),
        ];
        for f in fns {
            assert_eq!(RationalFunction::from_json(&f.to_json()).unwrap(), f);
        }
    }

    #[test]
    fn rejects_unknown_kind() {
        assert!(RationalFunction::from_json(r#"{"kind":"spline","knots":[]}"#).is_err());
    }
}
