//! Numerical toolkit for bounded univalent rational maps of the unit disk.
//!
//! The crate measures the boundary length functional
//! `ℓ(R) = (1/2π) ∫_T |R'(ζ)| |dζ|` of rational functions, checks it against
//! the classical Bernstein-type inequalities (Dolzhenko–Spijker, the
//! `6√n` Bergman-energy estimate, Dyn'kin's lemma and the `6π√n` bound for
//! univalent maps), and builds families of univalent rational maps whose
//! length growth can be fitted against the degree.
//!
//! Modules:
//!
//! * [`rational`] structured rational functions, Blaschke products, the
//!   Malmquist–Takenaka basis and the model-space reproducing kernel;
//! * [`quadrature`] circle and disk integrals and the bound report;
//! * [`crofton`] integral-geometry length estimates from line crossings;
//! * [`factory`] pole-prescribed, truncated-series and Runge constructions;
//! * [`univalence`] numerical univalence certificates;
//! * [`experiments`] growth families, exponent fits and the integral means
//!   spectrum estimator.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod crofton;
pub mod error;
pub mod experiments;
pub mod factory;
pub mod quadrature;
pub mod rational;
pub mod samples;
pub mod univalence;

mod numeric;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use quadrature::CircleGrid;
pub use rational::{Analytic, BlaschkeProduct, RationalFunction};
