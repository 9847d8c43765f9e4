//! Growth experiments: families of univalent maps of increasing degree,
//! the fitted exponent of `ℓ/‖R‖_{∞,T}` against `n`, and the integral means
//! spectrum estimator.
//!
//! Fitted slopes describe the family that produced them ("family exponent");
//! they say nothing about the extremal growth over all univalent rationals.

mod family;
mod fit;
mod records;

pub use family::{measure_member, run_growth_family, FamilySpec, Generator, GrowthRecord, SeriesSpec};
pub use fit::{
    compare_window, default_schedule, estimate_beta, fit_gamma, fit_power_law, GammaFit, ReferenceConstants,
    SpectrumEstimate, WindowPlacement, WindowReport,
};
pub use records::{read_records, write_records, GrowthRow, GROWTH_HEADER};
