//! Seeded random test functions for regression corpora.

use std::f64::consts::PI;

use rand::Rng;

use crate::numeric::poly_mul;
use crate::rational::{BlaschkeProduct, RationalFunction};
use crate::C64;

/// Uniform point in the disk `|z| ≤ radius` (area measure).
pub fn point_in_disk<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> C64 {
    C64::from_polar(radius * rng.gen::<f64>().sqrt(), 2.0 * PI * rng.gen::<f64>())
}

/// Point with modulus uniform in `[lo, hi]` and uniform argument.
pub fn point_in_annulus<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> C64 {
    C64::from_polar(rng.gen_range(lo..=hi), 2.0 * PI * rng.gen::<f64>())
}

pub fn random_blaschke<R: Rng + ?Sized>(rng: &mut R, degree: usize, max_modulus: f64) -> BlaschkeProduct {
    let zeros = (0..degree).map(|_| point_in_disk(rng, max_modulus)).collect();
    BlaschkeProduct::new(zeros).expect("zeros inside the disk")
}

fn from_roots(roots: &[C64]) -> Vec<C64> {
    roots.iter().fold(vec![C64::new(1.0, 0.0)], |acc, &r| {
        poly_mul(&acc, &[-r, C64::new(1.0, 0.0)])
    })
}

/// Random `P/Q` of exact degree `degree` (the larger of the two polynomial
/// degrees) whose poles keep distance at least `gap` from the unit circle.
///
/// With `pole_free_disk` all poles lie in `1 + gap ≤ |p| ≤ 2.5`; otherwise each
/// pole is placed inside (`|p| ≤ 1 − gap`) or outside with equal odds.
pub fn random_poly_ratio<R: Rng + ?Sized>(
    rng: &mut R,
    degree: usize,
    gap: f64,
    pole_free_disk: bool,
) -> RationalFunction {
    let (num_degree, den_degree) = if rng.gen_bool(0.5) {
        (degree, rng.gen_range(0..=degree))
    } else {
        (rng.gen_range(0..=degree), degree)
    };
    let zeros: Vec<C64> = (0..num_degree).map(|_| point_in_disk(rng, 1.5)).collect();
    let poles: Vec<C64> = (0..den_degree)
        .map(|_| {
            if pole_free_disk || rng.gen_bool(0.5) {
                point_in_annulus(rng, 1.0 + gap, 2.5)
            } else {
                point_in_disk(rng, 1.0 - gap)
            }
        })
        .collect();
    let lead = point_in_annulus(rng, 0.5, 2.0);
    let numerator: Vec<C64> = from_roots(&zeros).into_iter().map(|c| c * lead).collect();
    RationalFunction::poly_ratio(numerator, from_roots(&poles)).expect("poles away from the circle")
}
