use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::rational::{Koebe, PartialFractions, PoleTerm};
use crate::samples::{random_blaschke, random_poly_ratio};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn grid() -> CircleGrid {
    CircleGrid::default()
}

#[test]
fn grid_validation() {
    assert!(CircleGrid::new(8, 1.0, 4, 1e-10).is_err());
    assert!(CircleGrid::new(48, 1.0, 4, 1e-10).is_err());
    assert!(CircleGrid::new(64, 1.5, 4, 1e-10).is_err());
    let g = CircleGrid::new(16, 0.5, 4, 1e-10).unwrap();
    let nodes = g.nodes();
    assert_eq!(nodes.len(), 16);
    assert_eq!(nodes[0], c(0.5, 0.0));
    assert!((nodes[4] - c(0.0, 0.5)).norm() < 1e-16);
}

#[test]
fn integral_means_closed_forms() {
    let id = RationalFunction::power(1);
    for t in [0.5, 1.0, 3.0] {
        assert!((circle_integral_means(&id, t, 0.7, &grid()).unwrap() - 1.0).abs() < 1e-14);
    }
    let sq = RationalFunction::power(2);
    assert!((circle_integral_means(&sq, 1.0, 0.5, &grid()).unwrap() - 1.0).abs() < 1e-14);
}

#[test]
fn koebe_means_grow_like_inverse_square() {
    for r in [0.9, 0.99, 0.999] {
        let m = circle_integral_means(&Koebe, 1.0, r, &grid()).unwrap();
        // Fine fixed trapezoid as an independent oracle.
        let n = 1 << 20;
        let oracle: f64 = (0..n)
            .map(|j| {
                let z = C64::from_polar(r, 2.0 * PI * j as f64 / n as f64);
                ((1.0 + z) / (1.0 - z).powi(3)).norm()
            })
            .sum::<f64>()
            / n as f64;
        assert!((m - oracle).abs() < 1e-8 * oracle, "r={r}: {m} vs {oracle}");
        let scaled = m * (1.0 - r).powi(2);
        assert!((0.1..=10.0).contains(&scaled), "r={r}: {scaled}");
    }
}

#[test]
fn length_of_powers_is_degree() {
    for n in 0..=64 {
        let l = boundary_length(&RationalFunction::power(n), &grid()).unwrap();
        assert!((l - n as f64).abs() <= 1e-9 * (n as f64).max(1.0), "n={n}: {l}");
    }
    assert_eq!(
        boundary_length(&RationalFunction::constant(c(2.0, 1.0)), &grid()).unwrap(),
        0.0
    );
}

#[test]
fn length_of_blaschke_products_is_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [1, 3, 8, 17, 32] {
        let b = random_blaschke(&mut rng, n, 0.9);
        let l = boundary_length(&b, &grid()).unwrap();
        assert!((l - n as f64).abs() < 1e-8 * n as f64, "n={n}: {l}");
    }
}

#[test]
fn refinement_does_not_move_converged_lengths() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let f = random_poly_ratio(&mut rng, 8, 0.1, false);
        let coarse = boundary_length(&f, &grid()).unwrap();
        let fine = boundary_length(&f, &grid().with_nodes(256)).unwrap();
        assert!((coarse - fine).abs() <= 1e-9 * fine, "{coarse} vs {fine}");
    }
}

#[test]
fn disk_energy_closed_forms() {
    for n in [1, 2, 5, 13, 40] {
        let e = disk_energy(&RationalFunction::power(n), &grid()).unwrap();
        assert!((e - n as f64).abs() < 1e-10 * n as f64, "n={n}: {e}");
    }
    assert_eq!(
        disk_energy(&RationalFunction::constant(c(1.0, 0.0)), &grid()).unwrap(),
        0.0
    );
    // Σ k|a_k|² for a polynomial.
    let coeffs = vec![c(0.3, 0.0), c(1.0, -1.0), c(0.0, 0.5), c(-0.25, 0.0), c(0.1, 0.1)];
    let expected: f64 = coeffs.iter().enumerate().map(|(k, a)| k as f64 * a.norm_sqr()).sum();
    let e = disk_energy(&RationalFunction::polynomial(coeffs), &grid()).unwrap();
    assert!((e - expected).abs() < 1e-10 * expected);
}

#[test]
fn disk_energy_rejects_interior_poles() {
    let f = RationalFunction::poly_ratio(vec![c(1.0, 0.0)], vec![c(-0.5, 0.0), c(1.0, 0.0)]).unwrap();
    assert!(matches!(disk_energy(&f, &grid()), Err(Error::PoleInDisk(1))));
    let g = RationalFunction::PartialFractions(
        PartialFractions::new(
            c(0.0, 0.0),
            vec![PoleTerm {
                pole: c(0.2, 0.0),
                coefficients: vec![c(1.0, 0.0); 3],
            }],
        )
        .unwrap(),
    );
    assert!(matches!(disk_energy(&g, &grid()), Err(Error::PoleInDisk(3))));
}

#[test]
fn dynkin_identity_map() {
    let b = BlaschkeProduct::new(vec![c(0.0, 0.0)]).unwrap();
    assert!((dynkin_l(&b, 1.0, &grid()).unwrap() - 1.0).abs() < 1e-9);
    assert!((dynkin_l(&b, 0.5, &grid()).unwrap() - 0.25).abs() < 1e-12);
}

#[test]
fn dynkin_bounds_and_cutoff_stability() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in [1, 4, 9, 20] {
        let b = random_blaschke(&mut rng, n, 0.9);
        let full = dynkin_l(&b, 1.0, &grid()).unwrap();
        let half = dynkin_l(&b, 0.5, &grid()).unwrap();
        assert!(full <= 8.0 * n as f64 + 1.0, "n={n}: L(1)={full}");
        assert!(half <= 1.0, "n={n}: L(1/2)={half}");
        let coarser = dynkin_l_with_cutoff(&b, 1.0, 1.0 - 1e-5, &grid()).unwrap();
        assert!(
            (coarser - full).abs() < 1e-4 * full,
            "cutoff sensitivity {coarser} vs {full}"
        );
    }
}

#[test]
fn sup_norm_examples() {
    for n in [1, 5, 30] {
        assert!((sup_norm_circle(&RationalFunction::power(n), &grid()).unwrap() - 1.0).abs() < 1e-14);
    }
    let two_z = RationalFunction::polynomial(vec![c(0.0, 0.0), c(2.0, 0.0)]);
    assert!((sup_norm_circle(&two_z, &grid()).unwrap() - 2.0).abs() < 1e-15);
    let f = RationalFunction::poly_ratio(vec![c(1.0, 0.0)], vec![c(-2.0, 0.0), c(1.0, 0.0)]).unwrap();
    assert!((sup_norm_circle(&f, &grid()).unwrap() - 1.0).abs() < 1e-14);
}

#[test]
fn sup_norm_polishes_between_nodes() {
    // Peak of 1/(z − 1.05 e^{iφ}) sits off-grid.
    let p = C64::from_polar(1.05, 0.123456);
    let f = RationalFunction::poly_ratio(vec![c(1.0, 0.0)], vec![-p, c(1.0, 0.0)]).unwrap();
    let s = sup_norm_circle(&f, &grid()).unwrap();
    assert!((s - 1.0 / 0.05).abs() < 1e-9 * 20.0, "{s}");
}

#[test]
fn bound_report_for_powers_and_constants() {
    for n in [1, 4, 16, 64] {
        let r = verify_bounds(&RationalFunction::power(n), None, &grid()).unwrap();
        assert!((r.dolzhenko_ratio - 1.0).abs() < 1e-9);
        assert!((r.prop1_ratio.unwrap() - 1.0 / 6.0).abs() < 1e-9);
        assert!(r.univalent_upper_ratio.is_none());
    }
    let r = verify_bounds(&RationalFunction::constant(c(0.5, 0.5)), None, &grid()).unwrap();
    assert_eq!((r.dolzhenko_ratio, r.prop1_ratio), (0.0, Some(0.0)));
    let r = verify_bounds(&RationalFunction::power(1), Some(true), &grid()).unwrap();
    assert!((r.univalent_upper_ratio.unwrap() - 1.0 / (6.0 * PI)).abs() < 1e-12);
    assert_eq!(
        r.csv_row().split(',').count(),
        BoundReport::CSV_HEADER.split(',').count()
    );
}

#[test]
fn dolzhenko_and_energy_bounds_hold_on_random_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for k in 0..30 {
        let f = random_poly_ratio(&mut rng, 1 + k % 12, 0.1, k % 2 == 0);
        let r = verify_bounds(&f, None, &grid()).unwrap();
        assert!(r.dolzhenko_ratio <= 1.0 + 1e-9, "{r:?}");
        if let Some(p) = r.prop1_ratio {
            assert!(p <= 1.0 + 1e-9, "{r:?}");
        }
    }
}

#[test]
fn preimage_style_counts() {
    let q = vec![c(1.5, 0.0), c(-3.5, 0.0), c(1.0, 0.0)];
    assert_eq!(zero_count_in_disk(&q, &grid()).unwrap(), 1);
}

#[test]
fn means_profile_requires_increasing_radii() {
    assert!(means_profile(&Koebe, 1.0, &[0.5, 0.4], &grid()).is_err());
    let p = means_profile(&Koebe, 1.0, &[0.2, 0.4, 0.6], &grid()).unwrap();
    assert!(p.samples.iter().all(|s| s.1 > 0.0));
}
