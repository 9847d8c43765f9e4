//! Adaptive Gauss–Legendre panels on radial intervals.

use std::sync::OnceLock;

use gauss_quad::GaussLegendre;

use crate::error::{Error, Result};

const PANEL_ORDER: usize = 10;
const MAX_DEPTH: u32 = 40;

fn rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let gl = GaussLegendre::new(PANEL_ORDER.try_into().expect("nonzero order"));
        gl.iter().map(|(x, w)| (*x, *w)).collect()
    })
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let gl = GaussLegendre::new(n.try_into().expect("nonzero order"));
    gl.iter().map(|(x, w)| (*x, *w)).unzip()
}

fn panel<F: FnMut(f64) -> Result<f64>>(g: &mut F, a: f64, b: f64) -> Result<f64> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut s = 0.0;
    for &(x, w) in rule() {
        s += w * g(mid + half * x)?;
    }
    Ok(s * half)
}

fn adapt<F: FnMut(f64) -> Result<f64>>(g: &mut F, a: f64, b: f64, whole: f64, abs_tol: f64, depth: u32) -> Result<f64> {
    let mid = 0.5 * (a + b);
    let left = panel(g, a, mid)?;
    let right = panel(g, mid, b)?;
    let refined = left + right;
    if (refined - whole).abs() <= abs_tol || depth >= MAX_DEPTH {
        if depth >= MAX_DEPTH && (refined - whole).abs() > abs_tol {
            return Err(Error::NoConvergence {
                nodes: PANEL_ORDER << depth,
                change: (refined - whole).abs(),
            });
        }
        return Ok(refined);
    }
    Ok(adapt(g, a, mid, left, 0.5 * abs_tol, depth + 1)? + adapt(g, mid, b, right, 0.5 * abs_tol, depth + 1)?)
}

/// Breakpoints `0, 1/2, 3/4, …` refined geometrically toward 1, stopping at `end`.
pub(crate) fn geometric_breakpoints(end: f64) -> Vec<f64> {
    let mut points = vec![0.0];
    let mut gap = 0.5;
    while 1.0 - gap < end && gap > 1e-7 {
        points.push(1.0 - gap);
        gap *= 0.5;
    }
    points.push(end);
    points
}

/// `∫ g` over consecutive breakpoint panels, each refined by bisection until
/// the two-level estimates agree to `rel_tol` of a coarse total.
pub(crate) fn integrate_panels<F: FnMut(f64) -> Result<f64>>(
    mut g: F,
    breakpoints: &[f64],
    rel_tol: f64,
) -> Result<f64> {
    let coarse: Vec<f64> = breakpoints
        .windows(2)
        .map(|w| panel(&mut g, w[0], w[1]))
        .collect::<Result<_>>()?;
    let total: f64 = coarse.iter().map(|v| v.abs()).sum();
    let abs_tol = rel_tol * total / coarse.len().max(1) as f64;
    let mut sum = 0.0;
    for (w, whole) in breakpoints.windows(2).zip(coarse) {
        sum += adapt(&mut g, w[0], w[1], whole, abs_tol, 0)?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v = integrate_panels(|r| Ok(2.0 * 7.0 * 7.0 * r.powi(13)), &geometric_breakpoints(1.0), 1e-12).unwrap();
        assert!((v - 7.0).abs() < 1e-12);
    }

    #[test]
    fn breakpoints_stop_at_end() {
        let b = geometric_breakpoints(0.5);
        assert_eq!(b, vec![0.0, 0.5]);
        let b = geometric_breakpoints(1.0 - 1e-6);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(*b.last().unwrap(), 1.0 - 1e-6);
    }

    #[test]
    fn log_singularity_converges() {
        let v = integrate_panels(|r| Ok(-(1.0 - r).ln()), &geometric_breakpoints(1.0 - 1e-12), 1e-10).unwrap();
        assert!((v - 1.0).abs() < 1e-9);
    }
}
