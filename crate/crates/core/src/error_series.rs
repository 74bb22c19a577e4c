//! Explicit series expansions of the transformation error.
//!
//! Applied to the digamma partial sums with shifts q_κ = z/κ, the order-k
//! transform started at offset n differs from the full series value by
//!
//! E = (−1)^{n+1} · z^{n+k+1}/(z+1)_k ·
//!     Σ_{m≥0} (m+1)_k / [(k+m+1)^{n+k+2} (k+m+z+1)],
//!
//! so the approximant satisfies T = 𝒵(z) − E. Having an explicitly summable
//! error is the unusual property of this approximant: both the direct form
//! above and a rearrangement in terms of Hurwitz zeta values are evaluated
//! here and cross-validate each other.

use crate::accel::elementary_symmetric;
use crate::series::hurwitz_zeta_unchecked;
use crate::{Error, Result, Scalar, is_negative_integer};

/// Which expansion produced an [`ErrorSeriesResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorForm {
    Direct,
    Hurwitz,
}

/// A summed transformation error with its truncation metadata.
#[derive(Debug, Clone, Copy)]
pub struct ErrorSeriesResult {
    /// The signed error E with T = 𝒵(z) − E.
    pub value: Scalar,
    /// Explicitly summed terms.
    pub terms_used: usize,
    /// Magnitude of the first term not summed explicitly.
    pub truncation_estimate: f64,
    /// Set when the explicit phase hit its term cap before meeting the
    /// tolerance; the analytic tail still closes the sum.
    pub truncated: bool,
    pub form: ErrorForm,
}

/// Rising factorial x(x+1)…(x+k−1); the empty product at k = 0 is 1.
pub fn pochhammer(x: Scalar, k: usize) -> Scalar {
    let mut product = Scalar::new(1.0, 0.0);
    for i in 0..k {
        product *= x + i as f64;
    }
    product
}

/// Coefficients expanding a shifted Pochhammer symbol in powers of its
/// shifted argument: (m+1)_k = Σ_κ ê_{k−κ} (k+m+1)^κ.
///
/// These are the elementary symmetric polynomials in the k negative integers
/// κ − k − 1 (κ = 1..=k), so their signs alternate with the index.
pub fn pochhammer_shift_coeffs(k: usize) -> Vec<Scalar> {
    let variables: Vec<Scalar> = (1..=k)
        .map(|kappa| Scalar::new(kappa as f64 - k as f64 - 1.0, 0.0))
        .collect();
    elementary_symmetric(&variables)
}

fn transform_sign(n: usize) -> f64 {
    if n.is_multiple_of(2) { -1.0 } else { 1.0 }
}

/// (−1)^{n+1} z^{n+k+1}/(z+1)_k, the prefactor shared by both error forms.
fn error_prefactor(z: Scalar, n: usize, k: usize) -> Scalar {
    transform_sign(n) * z.powi((n + k + 1) as i32) / pochhammer(z + 1.0, k)
}

/// Hard order cap for the direct error form: the prefactor Pochhammer
/// symbol (z+1)_k overflows doubles somewhat past this.
pub const DIRECT_ORDER_CAP: usize = 150;

/// Order cap for the Hurwitz error form, matching the explicit-transform
/// stability guard: the ê coefficients alternate at scale k!, so the inner
/// sums shed roughly 2k bits of precision and carry none at all past ~30.
pub const HURWITZ_ORDER_CAP: usize = crate::accel::EXPLICIT_ORDER_GUARD;

/// Analytic tail Σ_{m≥M} (m+1)_k/[(k+m+1)^{n+k+2}(k+m+z+1)].
///
/// Expanding the Pochhammer symbol through [`pochhammer_shift_coeffs`] and
/// the last denominator geometrically in z/(k+m+1) reduces the tail to
/// Hurwitz zeta values at offset k+M+1, each accurate to working precision.
/// Requires k+M+1 > 2|z| so the geometric part contracts at ratio ≤ 1/2,
/// and M ≳ k²/6 so the alternating ê sum stays well conditioned.
fn direct_tail(z: Scalar, n: usize, k: usize, terms_summed: usize) -> Scalar {
    let offset = (k + terms_summed + 1) as u64;
    let coeffs = pochhammer_shift_coeffs(k);
    let mut tail = Scalar::new(0.0, 0.0);
    let mut z_pow = Scalar::new(1.0, 0.0);
    for j in 0..200u32 {
        let mut inner = 0.0;
        for (kappa, coeff) in coeffs.iter().enumerate() {
            let s = (n + kappa + 3) as u32 + j;
            inner += coeff.re * hurwitz_zeta_unchecked(s, offset);
        }
        let term = z_pow * inner;
        tail += term;
        if term.norm() < 1e-20 * tail.norm().max(f64::MIN_POSITIVE) {
            break;
        }
        z_pow *= -z;
    }
    tail
}

/// The transformation error in its direct Pochhammer form.
///
/// Terms are summed explicitly until one drops below `tol` × |partial sum|
/// or `max_terms` is reached; the remaining tail is closed analytically so
/// the result is accurate at working precision even for n = 0 where the
/// summands decay only algebraically. Converges for every z off the real
/// negative integers (the first k of which are poles of the prefactor, the
/// rest poles of the series).
pub fn transform_error_direct(
    z: Scalar,
    n: usize,
    k: usize,
    tol: f64,
    max_terms: usize,
) -> Result<ErrorSeriesResult> {
    if is_negative_integer(z) {
        return Err(Error::Pole { z });
    }
    if tol <= 0.0 || tol.is_nan() {
        return Err(Error::Domain(format!(
            "transform_error_direct requires tol > 0, got {tol}"
        )));
    }
    if k > DIRECT_ORDER_CAP {
        return Err(Error::Domain(format!(
            "transform order {k} exceeds the supported cap {DIRECT_ORDER_CAP}"
        )));
    }
    if z.norm() == 0.0 {
        return Ok(ErrorSeriesResult {
            value: Scalar::new(0.0, 0.0),
            terms_used: 1,
            truncation_estimate: 0.0,
            truncated: false,
            form: ErrorForm::Direct,
        });
    }

    let k1 = (k + 1) as f64;
    let power = (n + k + 2) as i32;
    // coefficient (m+1)_k/(k+m+1)^{n+k+2}, seeded at m = 0 as
    // Π_{i=1..k} i/(k+1) · (k+1)^{-(n+2)} to stay clear of overflow.
    let mut coeff: f64 = (1..=k).map(|i| i as f64 / k1).product::<f64>() * k1.powi(-(n as i32 + 2));
    let mut sum = crate::CompensatedSum::default();
    let mut truncated = true;
    let mut m = 0usize;
    let m_floor = ((2.0 * z.norm()).ceil() as usize + 4).max(k * (k + 1) / 6);
    while m < max_terms.max(m_floor) {
        let term = coeff / (z + (k + m + 1) as f64);
        sum.add(term);
        let ratio_base = (k + m + 1) as f64 / (k + m + 2) as f64;
        coeff *= (m + k + 1) as f64 / (m + 1) as f64 * ratio_base.powi(power);
        m += 1;
        if m >= m_floor && term.norm() < tol * sum.value().norm() {
            truncated = false;
            break;
        }
    }
    let sum = sum.value();

    let prefactor = error_prefactor(z, n, k);
    let tail = direct_tail(z, n, k, m);
    let first_neglected = (coeff / (z + (k + m + 1) as f64)).norm();
    Ok(ErrorSeriesResult {
        value: prefactor * (sum + tail),
        terms_used: m,
        truncation_estimate: prefactor.norm() * first_neglected,
        truncated,
        form: ErrorForm::Direct,
    })
}

/// The transformation error rearranged into Hurwitz zeta values:
/// prefactor · Σ_m (−z)^m Σ_κ ê_κ ζ(n+m+κ+3, k+1), truncated after `m_max`
/// outer terms.
///
/// The rearrangement rests on a geometric expansion that only converges for
/// |z| < 1; larger arguments are refused and belong to
/// [`transform_error_direct`].
pub fn transform_error_hurwitz(
    z: Scalar,
    n: usize,
    k: usize,
    m_max: usize,
) -> Result<ErrorSeriesResult> {
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "hurwitz error form diverges for |z| >= 1, got |z| = {}",
            z.norm()
        )));
    }
    if m_max < 1 {
        return Err(Error::Domain("m_max must be at least 1".into()));
    }
    if k > HURWITZ_ORDER_CAP {
        return Err(Error::Domain(format!(
            "hurwitz error form carries no precision past order {HURWITZ_ORDER_CAP}, got k = {k}"
        )));
    }
    if z.norm() == 0.0 {
        return Ok(ErrorSeriesResult {
            value: Scalar::new(0.0, 0.0),
            terms_used: 1,
            truncation_estimate: 0.0,
            truncated: false,
            form: ErrorForm::Hurwitz,
        });
    }

    let coeffs = pochhammer_shift_coeffs(k);
    let offset = (k + 1) as u64;
    // zeta(s, k+1) for every s this sum can touch, m_max included so the
    // truncation estimate sees the first neglected term.
    let s_lo = n + 3;
    let s_hi = n + m_max + k + 3;
    let zetas: Vec<f64> = (s_lo..=s_hi)
        .map(|s| hurwitz_zeta_unchecked(s as u32, offset))
        .collect();
    let inner = |m: usize| -> f64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(kappa, coeff)| coeff.re * zetas[m + kappa])
            .sum()
    };

    let mut sum = Scalar::new(0.0, 0.0);
    let mut z_pow = Scalar::new(1.0, 0.0);
    for m in 0..m_max {
        sum += z_pow * inner(m);
        z_pow *= -z;
    }

    let prefactor = error_prefactor(z, n, k);
    Ok(ErrorSeriesResult {
        value: prefactor * sum,
        terms_used: m_max,
        truncation_estimate: (prefactor * z_pow * inner(m_max)).norm(),
        truncated: false,
        form: ErrorForm::Hurwitz,
    })
}
