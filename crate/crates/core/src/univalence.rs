//! Numerical univalence certificates.
//!
//! Two independent routes: the sufficient condition `Re R' > 0` on a disk,
//! and simplicity of the boundary curve `R(T)` together with winding number 1,
//! which for analytic `R` gives injectivity on `D` by the argument principle.
//! Certificates record the resolution they were computed at; they are
//! numerical evidence, not proofs.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{circle_mean, CircleGrid};
use crate::rational::{Analytic, RationalFunction};
use crate::C64;

/// Relative orientation tolerance below which three points count as collinear.
pub const COLLINEAR_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ReDerivative,
    BoundarySimple,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ReDerivative => "re-derivative",
            Method::BoundarySimple => "boundary-simple",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Passed,
    Failed,
    /// A near-tangency prevented a decision at this resolution.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Witness {
    ReDerivative {
        min_re: f64,
        location: C64,
    },
    BoundarySimple {
        winding: i64,
        /// Parameter angles of the first offending segment pair.
        self_intersection: Option<(f64, f64)>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnivalenceCertificate {
    pub method: Method,
    pub verdict: Verdict,
    pub witness: Witness,
    /// Grid density (re-derivative) or polyline vertex count (boundary-simple).
    pub resolution: usize,
}

impl UnivalenceCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Passed
    }

    pub fn winding(&self) -> Option<i64> {
        match self.witness {
            Witness::BoundarySimple { winding, .. } => Some(winding),
            _ => None,
        }
    }

    pub fn min_re(&self) -> Option<f64> {
        match self.witness {
            Witness::ReDerivative { min_re, .. } => Some(min_re),
            _ => None,
        }
    }

    pub const CSV_HEADER: &'static str = "method,passed,winding,min_re,resolution";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.method.as_str(),
            self.passed(),
            self.winding().map(|w| w.to_string()).unwrap_or_default(),
            self.min_re().map(|v| v.to_string()).unwrap_or_default(),
            self.resolution
        )
    }
}

/// Polyline size used for boundary certificates of a given degree.
pub fn default_resolution(degree: usize) -> usize {
    if degree <= 64 {
        4096
    } else {
        64 * degree
    }
}

/// Minimum of `Re R'` over a polar grid of the disk `|z| ≤ rho`, polished by
/// a pattern search in `(r, θ)`.
pub fn min_re_derivative(f: &RationalFunction, rho: f64, density: usize) -> Result<(f64, C64)> {
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::InvalidParameter(format!("radius {rho} outside (0, 1)")));
    }
    if density < 2 {
        return Err(Error::InvalidParameter("grid density must be at least 2".into()));
    }
    let poles = f.poles_in_closed_disk()?;
    if poles > 0 {
        return Err(Error::PoleInDisk(poles));
    }
    let re_at = |r: f64, theta: f64| f.derivative(C64::from_polar(r, theta)).map(|d| d.re);

    let mut best = (re_at(0.0, 0.0)?, 0.0, 0.0);
    for i in 1..=density {
        let r = rho * i as f64 / density as f64;
        for j in 0..density {
            let theta = 2.0 * PI * j as f64 / density as f64;
            let v = re_at(r, theta)?;
            if v < best.0 {
                best = (v, r, theta);
            }
        }
    }

    let (mut value, mut r, mut theta) = best;
    let mut dr = rho / density as f64;
    let mut dt = 2.0 * PI / density as f64;
    for _ in 0..200 {
        let mut moved = false;
        for (sr, st) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let nr = (r + sr * dr).clamp(0.0, rho);
            let nt = theta + st * dt;
            let v = re_at(nr, nt)?;
            if v < value {
                (value, r, theta) = (v, nr, nt);
                moved = true;
            }
        }
        if !moved {
            dr *= 0.5;
            dt *= 0.5;
            if dr < 1e-14 && dt < 1e-14 {
                break;
            }
        }
    }
    Ok((value, C64::from_polar(r, theta)))
}

/// Certificate from the `Re R' > 0` criterion on `|z| ≤ rho`.
pub fn certify_re_derivative(f: &RationalFunction, rho: f64, density: usize) -> Result<UnivalenceCertificate> {
    let (min_re, location) = min_re_derivative(f, rho, density)?;
    Ok(UnivalenceCertificate {
        method: Method::ReDerivative,
        verdict: if min_re > 0.0 { Verdict::Passed } else { Verdict::Failed },
        witness: Witness::ReDerivative { min_re, location },
        resolution: density,
    })
}

fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Sign of the orientation of `c` relative to the segment `a → b`, with
/// near-collinear configurations reported as 0.
fn orientation(a: C64, b: C64, c: C64) -> i8 {
    let o = cross(b - a, c - a);
    let scale = (b - a).norm() * (c - a).norm();
    if o.abs() <= COLLINEAR_TOLERANCE * scale {
        0
    } else if o > 0.0 {
        1
    } else {
        -1
    }
}

fn on_segment(a: C64, b: C64, p: C64) -> bool {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm() == 0.0;
    }
    let t = ((p - a) * ab.conj()).re / len2;
    (-1e-12..=1.0 + 1e-12).contains(&t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Contact {
    None,
    Proper,
    Touching,
}

fn segment_contact(p1: C64, p2: C64, q1: C64, q2: C64) -> Contact {
    let o1 = orientation(p1, p2, q1);
    let o2 = orientation(p1, p2, q2);
    let o3 = orientation(q1, q2, p1);
    let o4 = orientation(q1, q2, p2);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return Contact::Proper;
    }
    let touching = (o1 == 0 && on_segment(p1, p2, q1))
        || (o2 == 0 && on_segment(p1, p2, q2))
        || (o3 == 0 && on_segment(q1, q2, p1))
        || (o4 == 0 && on_segment(q1, q2, p2));
    if touching {
        Contact::Touching
    } else {
        Contact::None
    }
}

/// Result of a self-intersection sweep over a closed polyline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    /// First segment pair (by sweep order) that crosses properly.
    pub crossing: Option<(usize, usize)>,
    /// First pair that touches within tolerance.
    pub touching: Option<(usize, usize)>,
}

/// Sweep-and-prune over x-extents for self-intersections of the closed
/// polyline through `vertices`; segment `i` joins vertex `i` to `i + 1 (mod n)`.
pub fn self_intersections(vertices: &[C64]) -> SweepOutcome {
    let n = vertices.len();
    let seg = |i: usize| (vertices[i], vertices[(i + 1) % n]);
    let mut order: Vec<usize> = (0..n).collect();
    let xmin = |i: usize| seg(i).0.re.min(seg(i).1.re);
    let xmax = |i: usize| seg(i).0.re.max(seg(i).1.re);
    order.sort_by(|&a, &b| xmin(a).total_cmp(&xmin(b)).then(a.cmp(&b)));

    let mut outcome = SweepOutcome {
        crossing: None,
        touching: None,
    };
    let mut active: Vec<usize> = Vec::new();
    for &i in &order {
        let x = xmin(i);
        active.retain(|&j| xmax(j) >= x);
        let (p1, p2) = seg(i);
        let (ylo, yhi) = (p1.im.min(p2.im), p1.im.max(p2.im));
        for &j in &active {
            let (q1, q2) = seg(j);
            if q1.im.max(q2.im) < ylo || q1.im.min(q2.im) > yhi {
                continue;
            }
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            if adjacent {
                // Shared vertex; only a fold back along the same line counts.
                let (shared, a, b) = if (i + 1) % n == j { (p2, p1, q2) } else { (p1, p2, q1) };
                let (u, v) = (a - shared, b - shared);
                if orientation(shared, a, b) == 0 && (u * v.conj()).re > 0.0 && outcome.touching.is_none() {
                    outcome.touching = Some((i.min(j), i.max(j)));
                }
                continue;
            }
            match segment_contact(p1, p2, q1, q2) {
                Contact::Proper => {
                    outcome.crossing = Some((i.min(j), i.max(j)));
                    return outcome;
                }
                Contact::Touching if outcome.touching.is_none() => outcome.touching = Some((i.min(j), i.max(j))),
                _ => {}
            }
        }
        active.push(i);
    }
    outcome
}

/// Winding number of a closed polyline around `p`.
pub fn winding_number(vertices: &[C64], p: C64) -> i64 {
    let n = vertices.len();
    let mut wn = 0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let side = cross(b - a, p - a);
        if a.im <= p.im {
            if b.im > p.im && side > 0.0 {
                wn += 1;
            }
        } else if b.im <= p.im && side < 0.0 {
            wn -= 1;
        }
    }
    wn
}

/// Samples `R(T)` as an `m`-vertex closed polyline, sweeps it for
/// self-intersections and computes its winding number around `R(0)`.
pub fn boundary_simple(f: &RationalFunction, m: usize) -> Result<UnivalenceCertificate> {
    if m < 64 {
        return Err(Error::InvalidParameter(format!("boundary resolution {m} below 64")));
    }
    let vertices: Vec<C64> = (0..m)
        .map(|j| {
            let z = C64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64);
            f.value(z).map_err(|_| Error::SingularityOnContour(z))
        })
        .collect::<Result<_>>()?;
    let (lo, hi) = vertices.iter().fold(
        (
            C64::new(f64::INFINITY, f64::INFINITY),
            C64::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        ),
        |(lo, hi), v| {
            (
                C64::new(lo.re.min(v.re), lo.im.min(v.im)),
                C64::new(hi.re.max(v.re), hi.im.max(v.im)),
            )
        },
    );
    let diameter = (hi - lo).norm();
    if !(diameter >= 1e-12) {
        return Err(Error::DegenerateImage(diameter));
    }
    let centre = f.value(C64::new(0.0, 0.0))?;
    let winding = winding_number(&vertices, centre);
    let sweep = self_intersections(&vertices);
    let angle = |i: usize| 2.0 * PI * i as f64 / m as f64;
    let pair = sweep.crossing.or(sweep.touching).map(|(i, j)| (angle(i), angle(j)));
    let verdict = if sweep.crossing.is_some() || winding != 1 {
        Verdict::Failed
    } else if sweep.touching.is_some() {
        Verdict::Indeterminate
    } else {
        Verdict::Passed
    };
    Ok(UnivalenceCertificate {
        method: Method::BoundarySimple,
        verdict,
        witness: Witness::BoundarySimple {
            winding,
            self_intersection: pair,
        },
        resolution: m,
    })
}

/// Number of solutions of `R(z) = w` in `D`, from
/// `(1/2πi)∮_T R'(z)/(R(z) − w) dz`.
pub fn count_preimages(f: &RationalFunction, w: C64, grid: &CircleGrid) -> Result<usize> {
    let poles = f.poles_in_closed_disk()?;
    if poles > 0 {
        return Err(Error::PoleInDisk(poles));
    }
    let probe = 4096.max(grid.node_count());
    let mut gap = f64::INFINITY;
    for j in 0..probe {
        let z = C64::from_polar(1.0, 2.0 * PI * j as f64 / probe as f64);
        gap = gap.min((f.value(z)? - w).norm());
    }
    if gap < 1e-6 {
        return Err(Error::ValueOnBoundary(gap));
    }
    let integral = circle_mean(
        |z| {
            let (v, d) = f.value_and_derivative(z)?;
            Ok(z * d / (v - w))
        },
        &grid.with_tolerance(grid.rel_tol().max(1e-8)),
    )?
    .value;
    let rounded = integral.re.round();
    if (integral - C64::new(rounded, 0.0)).norm() > 0.1 || rounded < 0.0 {
        return Err(Error::NonIntegerWinding(integral));
    }
    Ok(rounded as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::{construct_from_poles, PolePrescription};
    use crate::quadrature::{disk_energy, sup_norm_circle};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn identity_has_unit_derivative() {
        let (v, _) = min_re_derivative(&RationalFunction::power(1), 0.9, 16).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn square_minimum_on_negative_axis() {
        let (v, at) = min_re_derivative(&RationalFunction::power(2), 0.9, 32).unwrap();
        assert!((v + 1.8).abs() < 1e-9, "{v}");
        assert!((at - c(-0.9, 0.0)).norm() < 1e-6, "{at}");
    }

    #[test]
    fn re_derivative_rejects_interior_poles() {
        let f = RationalFunction::poly_ratio(vec![c(1.0, 0.0)], vec![c(-0.5, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(matches!(min_re_derivative(&f, 0.9, 8), Err(Error::PoleInDisk(1))));
    }

    #[test]
    fn identity_boundary_is_simple() {
        let cert = boundary_simple(&RationalFunction::power(1), 256).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.winding(), Some(1));
    }

    #[test]
    fn square_boundary_fails() {
        let cert = boundary_simple(&RationalFunction::power(2), 256).unwrap();
        assert!(!cert.passed());
        assert_eq!(cert.winding(), Some(2));
    }

    #[test]
    fn constant_image_is_degenerate() {
        assert!(matches!(
            boundary_simple(&RationalFunction::constant(c(1.0, 2.0)), 128),
            Err(Error::DegenerateImage(_))
        ));
    }

    #[test]
    fn figure_eight_crossing_is_found() {
        // z + z²·0.9 has a critical point inside D and a looped boundary.
        let f = RationalFunction::polynomial(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.9, 0.0)]);
        let cert = boundary_simple(&f, 1024).unwrap();
        assert!(!cert.passed());
        let Witness::BoundarySimple { self_intersection, .. } = cert.witness else {
            panic!()
        };
        assert!(self_intersection.is_some());
    }

    #[test]
    fn sweep_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let n = rng.gen_range(4..14);
            let pts: Vec<C64> = (0..n).map(|_| c(rng.gen(), rng.gen())).collect();
            let mut brute = false;
            for i in 0..n {
                for j in i + 1..n {
                    if (i + 1) % n == j || (j + 1) % n == i {
                        continue;
                    }
                    if segment_contact(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]) == Contact::Proper {
                        brute = true;
                    }
                }
            }
            assert_eq!(self_intersections(&pts).crossing.is_some(), brute);
        }
    }

    #[test]
    fn preimage_counts() {
        let g = CircleGrid::default();
        assert_eq!(
            count_preimages(&RationalFunction::power(2), c(0.25, 0.0), &g).unwrap(),
            2
        );
        assert_eq!(
            count_preimages(&RationalFunction::power(1), c(0.3, 0.0), &g).unwrap(),
            1
        );
        let f = RationalFunction::power(3);
        let outside = c(sup_norm_circle(&f, &g).unwrap() * 1.5, 0.0);
        assert_eq!(count_preimages(&f, outside, &g).unwrap(), 0);
        assert!(matches!(
            count_preimages(&RationalFunction::power(1), c(1.0, 0.0), &g),
            Err(Error::ValueOnBoundary(_))
        ));
    }

    #[test]
    fn factory_output_univalent_by_both_routes() {
        let p = PolePrescription::new(vec![c(2.0, 0.0), c(0.0, 1.8), c(-1.5, -1.0)]).unwrap();
        let f = construct_from_poles(&p).unwrap().function;
        let (v, _) = min_re_derivative(&f, 0.999, 64).unwrap();
        assert!(v > 0.0);
        let cert = boundary_simple(&f, 4096).unwrap();
        assert!(cert.passed());
        assert!(boundary_simple(&f, 8192).unwrap().passed());

        // Energy equals area/π for a univalent map; shoelace area of R(T).
        let m = 1 << 14;
        let pts: Vec<C64> = (0..m)
            .map(|j| f.eval(C64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64)).unwrap())
            .collect();
        let area = 0.5 * (0..m).map(|j| cross(pts[j], pts[(j + 1) % m])).sum::<f64>();
        let e = disk_energy(&f, &CircleGrid::default()).unwrap();
        assert!((e - area / PI).abs() < 1e-6 * e, "{e} vs {}", area / PI);
    }
}
