use super::blaschke::blaschke_factor;
use super::BlaschkeProduct;
use crate::error::{Error, Result};
use crate::C64;

/// `e_k(z) = √(1 − |a_k|²)·B_{k−1}(z)/(1 − ā_k z)` for `1 ≤ k ≤ m`.
pub fn mt_basis_eval(points: &[C64], k: usize, z: C64) -> Result<C64> {
    if k == 0 || k > points.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: points.len(),
        });
    }
    if let Some(a) = points.iter().find(|a| !(a.norm() < 1.0)) {
        return Err(Error::MalformedFunction(format!(
            "basis point {a} is not inside the unit disk"
        )));
    }
    let a = points[k - 1];
    let prefix = points[..k - 1]
        .iter()
        .fold(C64::new(1.0, 0.0), |acc, &b| acc * blaschke_factor(b, z).0);
    Ok((1.0 - a.norm_sqr()).sqrt() * prefix / (1.0 - a.conj() * z))
}

/// Reproducing kernel of the model space `K_B`:
/// `k_w(z) = (1 − conj(B(w)) B(z))/(1 − w̄ z)`.
///
/// With the normalized measure on the circle, `⟨f, k_w⟩ = f(w)` for `f ∈ K_B`.
pub fn reproducing_kernel_eval(b: &BlaschkeProduct, w: C64, z: C64) -> Result<C64> {
    let den = 1.0 - w.conj() * z;
    if den.norm() < 1e-14 {
        return Err(Error::DegenerateDenominator(den.norm()));
    }
    Ok((1.0 - b.eval(w).conj() * b.eval(z)) / den)
}
