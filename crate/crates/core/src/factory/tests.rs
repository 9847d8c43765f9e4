use std::f64::consts::PI;

use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::quadrature::CircleGrid;
use crate::rational::{Analytic, Koebe, RationalFunction};
use crate::univalence::{boundary_simple, min_re_derivative};
use crate::C64;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[test]
fn budget_for_half() {
    let expected = 0.5 * 0.75f64.sqrt() * 0.5 / 1.5f64.powi(4);
    assert!((budget_rhs(0.5) - expected).abs() < 1e-16);
    assert!((budget_rhs(0.5) - 0.042766).abs() < 1e-6);
}

#[test]
fn budget_is_lower_bound_of_first_term() {
    // min over the closed disk of Re a√(1−a²)/(1−az)², attained on the circle.
    for &a in &[0.1f64, 0.3, 0.5, 0.7] {
        let min = (0..20000)
            .map(|j| {
                let z = C64::from_polar(1.0, 2.0 * PI * j as f64 / 20000.0);
                (a * (1.0 - a * a).sqrt() / ((1.0 - a * z) * (1.0 - a * z))).re
            })
            .fold(f64::INFINITY, f64::min);
        assert!(budget_rhs(a) <= min + 1e-15, "a = {a}");
    }
}

#[test]
fn single_pole_is_univalent() {
    let out = construct_from_poles(&PolePrescription::new(vec![c(2.0, 0.0)]).unwrap()).unwrap();
    let (v, _) = min_re_derivative(&out.function, 0.99, 64).unwrap();
    assert!(v > 0.0);
    assert_eq!(out.function.degree(), 1);
}

#[test]
fn near_pole_is_rejected() {
    let p = PolePrescription::new(vec![c(1.2, 0.0)]).unwrap();
    assert!(matches!(construct_from_poles(&p), Err(Error::CriterionInapplicable(a)) if (a - 1.0 / 1.2).abs() < 1e-15));
}

#[test]
fn invalid_prescriptions() {
    assert!(PolePrescription::new(vec![]).is_err());
    assert!(PolePrescription::new(vec![c(0.5, 0.0)]).is_err());
    assert!(PolePrescription::with_policy(vec![c(2.0, 0.0)], CoefficientPolicy::EqualSplit, 0.0).is_err());
    assert!(PolePrescription::with_policy(vec![c(2.0, 0.0)], CoefficientPolicy::EqualSplit, 1.5).is_err());
}

#[test]
fn underflow_reported() {
    // Points close to the circle make the weights enormous.
    let poles: Vec<C64> = (0..30)
        .map(|k| C64::from_polar(1.0 + 1e-9, k as f64))
        .chain([c(2.0, 0.0)])
        .collect();
    let p = PolePrescription::with_policy(poles, CoefficientPolicy::GeometricDecay, 0.9).unwrap();
    assert!(matches!(construct_from_poles(&p), Err(Error::BudgetUnderflow { .. })));
}

#[test]
fn prescription_json() {
    let p: PolePrescription =
        serde_json::from_str(r#"{"poles": [[2.0, 0.0], [0.0, -3.0]], "policy": "geometric-decay"}"#).unwrap();
    assert_eq!(p.policy, CoefficientPolicy::GeometricDecay);
    assert_eq!(p.budget_fraction, 0.9);
}

#[test]
fn kayumov_radius() {
    assert!((KayumovConfig::new(100).unwrap().r - 0.769741).abs() < 1e-6);
    assert!(matches!(
        KayumovConfig::new(12),
        Err(Error::SubcriticalDegree { n: 12, .. })
    ));
    assert!(KayumovConfig::new(13).unwrap().r > 0.0);
}

#[test]
fn kayumov_identity_and_coefficients() {
    let cfg = KayumovConfig::new(20).unwrap();
    let mut id = vec![c(0.0, 0.0); 20];
    id[0] = c(1.0, 0.0);
    let p = kayumov_truncate(&id, &cfg).unwrap();
    assert_eq!(p, RationalFunction::polynomial(vec![c(0.0, 0.0), c(cfg.r, 0.0)]));

    let coeffs = koebe_coefficients(20);
    let RationalFunction::Taylor(t) = kayumov_truncate(&coeffs, &cfg).unwrap() else {
        panic!()
    };
    assert_eq!(t.len(), 21);
    for j in 1..=20 {
        assert_eq!(t[j], coeffs[j - 1] * cfg.r.powi(j as i32));
    }
    assert!(matches!(
        kayumov_truncate(&coeffs[..5], &cfg),
        Err(Error::TooFewCoefficients { needed: 20, got: 5 })
    ));
}

#[test]
fn koebe_truncation_is_univalent() {
    let cfg = KayumovConfig::new(50).unwrap();
    let p = kayumov_truncate(&koebe_coefficients(50), &cfg).unwrap();
    assert!(boundary_simple(&p, 4096).unwrap().passed());
    let (q, sup) = normalize_sup(&p, &CircleGrid::default()).unwrap();
    assert!((crate::quadrature::sup_norm_circle(&q, &CircleGrid::default()).unwrap() - 1.0).abs() < 1e-12);
    assert!(sup > 1.0);
}

#[test]
fn composed_koebe_series_matches_closed_form() {
    let g = ComposedKoebe::new(c(0.3, -0.4), 1.1).unwrap();
    let coeffs = g.coefficients(200);
    assert!((coeffs[0] - c(1.0, 0.0)).norm() < 1e-14);
    let z = c(0.2, 0.35);
    let series: C64 = coeffs.iter().enumerate().map(|(k, a)| a * z.powu(k as u32 + 1)).sum();
    assert!((series - g.value(z).unwrap()).norm() < 1e-12);
    // Without the automorphism the series is a rotated Koebe function.
    let k = ComposedKoebe::new(c(0.0, 0.0), 0.0).unwrap().coefficients(10);
    for (j, a) in k.iter().enumerate() {
        assert!((a - c(j as f64 + 1.0, 0.0)).norm() < 1e-12);
    }
}

#[test]
fn auto_arcs_rule() {
    assert_eq!(auto_arcs(0.05, 1, 0.1), 0.05f64.powf(-2.6).floor() as usize + 1);
    assert_eq!(RungeConfig::auto(0.05, 1, 0.1).unwrap().arcs, auto_arcs(0.05, 1, 0.1));
}

#[test]
fn dilation_geometry() {
    let d = Dilated::for_delta(Koebe, 0.1);
    assert!(((1.0 + 4.0 * 0.1) * d.r - 1.0).abs() < 1e-15);
    // Evaluable on the radius-(1 + 4δ) circle, just short of the Koebe pole.
    let z = C64::from_polar(1.0 + 4.0 * 0.1 - 1e-9, 0.0);
    assert!(d.value(z).unwrap().is_finite());
    let (v, dv) = d.value_and_derivative(c(0.3, 0.1)).unwrap();
    let (kv, kd) = Koebe.value_and_derivative(c(0.3, 0.1) * d.r).unwrap();
    assert_eq!(v, kv);
    assert_eq!(dv, kd * d.r);
}

fn runge_error(m: usize, n: usize) -> (f64, f64) {
    let f = RationalFunction::poly_ratio(vec![c(1.0, 0.0)], vec![c(1.0, 0.0), c(-0.5, 0.0)]).unwrap();
    let cfg = RungeConfig::new(0.1, m, n).unwrap();
    let r = runge_approximate(&f, &cfg).unwrap();
    let mut err = (0.0f64, 0.0f64);
    for j in 0..2048 {
        let z = C64::from_polar(1.0, 2.0 * PI * j as f64 / 2048.0);
        let (a, da) = r.value_and_derivative(z).unwrap();
        let (b, db) = f.value_and_derivative(z).unwrap();
        err = (err.0.max((a - b).norm()), err.1.max((da - db).norm()));
    }
    err
}

#[test]
fn runge_structure_and_convergence() {
    let f = RationalFunction::power(1);
    let cfg = RungeConfig::new(0.1, 1, 64).unwrap();
    let r = runge_approximate(&f, &cfg).unwrap();
    assert_eq!(r.degree(), 128);
    let RationalFunction::PartialFractions(pf) = &r else {
        panic!()
    };
    assert!(pf.terms().iter().all(|t| (t.pole.norm() - 1.2).abs() < 1e-14));
    let (e1, _) = runge_error(1, 64);
    let (e2, _) = runge_error(1, 128);
    assert!(e2 < e1 / 3.0);
}

#[test]
fn runge_slope_first_order() {
    let (a, da) = runge_error(0, 128);
    let (b, db) = runge_error(0, 256);
    assert!(((b / a).log2() + 1.0).abs() < 0.3);
    assert!(((db / da).log2() + 1.0).abs() < 0.3);
}

struct UnitDiskOnly;

impl Analytic for UnitDiskOnly {
    fn value_and_derivative(&self, z: C64) -> crate::Result<(C64, C64)> {
        if z.norm() > 1.0 {
            return Err(Error::PoleProximity { z, tolerance: 0.0 });
        }
        Ok((z, c(1.0, 0.0)))
    }
}

#[test]
fn runge_contour_failure() {
    let f = UnitDiskOnly;
    let cfg = RungeConfig::new(0.1, 0, 8).unwrap();
    assert!(matches!(
        runge_approximate(&f, &cfg),
        Err(Error::ContourEvaluationFailure(_))
    ));
}

#[test]
fn runge_under_resolved() {
    let f = RationalFunction::poly_ratio(vec![c(1.0, 0.0)], vec![c(1.25, 0.0), c(-1.0, 0.0)]).unwrap();
    let cfg = RungeConfig::new(0.1, 2, 2).unwrap();
    assert!(matches!(
        runge_approximate(&f, &cfg),
        Err(Error::QuadratureUnderResolved { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factory_output_has_positive_real_derivative(
        poles in proptest::collection::vec((1.5f64..4.0, 0.0f64..std::f64::consts::TAU), 1..6),
        geometric in any::<bool>(),
    ) {
        let poles: Vec<C64> = poles.into_iter().map(|(r, t)| C64::from_polar(r, t)).collect();
        let policy = if geometric { CoefficientPolicy::GeometricDecay } else { CoefficientPolicy::EqualSplit };
        let p = PolePrescription::with_policy(poles.clone(), policy, 0.9).unwrap();
        let out = construct_from_poles(&p).unwrap();
        let (v, _) = min_re_derivative(&out.function, 0.999, 48).unwrap();
        prop_assert!(v > 0.0);
        prop_assert!((out.budget_used - 0.9 * out.budget_rhs).abs() <= 1e-12 * out.budget_rhs || poles.len() == 1);

        // Every prescribed pole is a pole of the output.
        let RationalFunction::PoleBasis(pb) = &out.function else { panic!() };
        for b in &poles {
            prop_assert!(pb.poles().iter().any(|q| (q - b).norm() < 1e-12));
        }
    }
}
