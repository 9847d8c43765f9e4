//! Constructions of univalent rational maps.
//!
//! Three pipelines: pole prescription with an explicit `Re R' > 0` budget,
//! dilated polynomial sections of univalent Taylor series, and arc-wise
//! Cauchy-integral (Runge) approximants.

mod kayumov;
mod poles;
mod runge;
mod series;

pub use kayumov::{kayumov_truncate, normalize_sup, KayumovConfig};
pub use poles::{budget_rhs, construct_from_poles, CoefficientPolicy, PoleConstruction, PolePrescription};
pub use runge::{auto_arcs, runge_approximate, Dilated, RungeConfig};
pub use series::{koebe_coefficients, rotated_koebe_composed, ComposedKoebe};

#[cfg(test)]
mod tests;
