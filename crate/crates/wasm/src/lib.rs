//! Browser bindings for the digamma rational-approximant toolkit.
//!
//! Three entry points back the demo page: single-point evaluation,
//! per-order convergence data for the three accelerators, and the explicit
//! transformation-error series. Everything returns JSON strings so the page
//! stays framework-free.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use digamma_accel::Scalar;
use digamma_accel::digamma::{DigammaConfig, Method, convergence_rows, digamma};
use digamma_accel::error_series::{transform_error_direct, transform_error_hurwitz};

#[derive(Serialize)]
struct ComplexOut {
    re: f64,
    im: f64,
}

impl From<Scalar> for ComplexOut {
    fn from(z: Scalar) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct EvalOut {
    value: ComplexOut,
    order_used: usize,
    reduction_steps: usize,
    converged: bool,
}

#[derive(Serialize)]
struct RowOut {
    n: usize,
    raw: ComplexOut,
    transform: ComplexOut,
    epsilon: Option<ComplexOut>,
    raw_error: f64,
    transform_error: f64,
    epsilon_error: Option<f64>,
}

#[derive(Serialize)]
struct TableOut {
    reference: ComplexOut,
    reference_converged: bool,
    rows: Vec<RowOut>,
}

#[derive(Serialize)]
struct ErrorSeriesOut {
    direct: ComplexOut,
    direct_terms: usize,
    truncation_estimate: f64,
    /// Absent for |z| >= 1 where the rearranged form diverges.
    hurwitz: Option<ComplexOut>,
    /// |T_k^(n) + E − 𝒵(z)| with 𝒵 from a deep reference evaluation; the
    /// defining identity of the explicit error.
    identity_residual: f64,
}

fn fail(message: impl std::fmt::Display) -> String {
    format!(
        "{{\"error\":{}}}",
        serde_json::to_string(&message.to_string()).unwrap()
    )
}

fn parse_method(method: &str) -> Option<Method> {
    match method {
        "t" => Some(Method::KnownRatio),
        "epsilon" => Some(Method::Epsilon),
        "raw" => Some(Method::RawSeries),
        _ => None,
    }
}

/// Evaluate psi(1+z) adaptively. `method` is "t", "epsilon" or "raw".
#[wasm_bindgen]
pub fn evaluate(z_re: f64, z_im: f64, method: &str, max_order: usize, tol: f64) -> String {
    let Some(method) = parse_method(method) else {
        return fail(format!("unknown method '{method}'"));
    };
    let config = DigammaConfig {
        max_order,
        tol,
        method,
    };
    match digamma(Scalar::new(z_re, z_im), &config) {
        Ok(r) => serde_json::to_string(&EvalOut {
            value: r.value.into(),
            order_used: r.order_used,
            reduction_steps: r.reduction_steps,
            converged: r.converged,
        })
        .unwrap_or_else(fail),
        Err(e) => fail(e),
    }
}

/// Convergence data at z itself (no argument reduction): per order the three
/// approximants of psi(1+z) and their distances to a converged reference.
#[wasm_bindgen]
pub fn convergence_table(z_re: f64, z_im: f64, n_max: usize) -> String {
    let z = Scalar::new(z_re, z_im);
    let n_max = n_max.min(60);
    let rows = match convergence_rows(z, n_max) {
        Ok(rows) => rows,
        Err(e) => return fail(e),
    };
    let config = DigammaConfig {
        max_order: (n_max + 10).max(24),
        tol: 1e-15,
        method: Method::KnownRatio,
    };
    let reference = match digamma(z, &config) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let table = TableOut {
        reference: reference.value.into(),
        reference_converged: reference.converged,
        rows: rows
            .iter()
            .map(|row| RowOut {
                n: row.n,
                raw: row.raw.into(),
                transform: row.t_value.into(),
                epsilon: row.eps_value.map(Into::into),
                raw_error: (row.raw - reference.value).norm(),
                transform_error: (row.t_value - reference.value).norm(),
                epsilon_error: row.eps_value.map(|e| (e - reference.value).norm()),
            })
            .collect(),
    };
    serde_json::to_string(&table).unwrap_or_else(fail)
}

/// The explicit transformation-error series at offset n and order k, in the
/// direct Pochhammer form and (inside the unit disk) the Hurwitz form.
#[wasm_bindgen]
pub fn transform_error(z_re: f64, z_im: f64, n: usize, k: usize) -> String {
    let z = Scalar::new(z_re, z_im);
    let (n, k) = (n.min(30), k.min(30));
    let direct = match transform_error_direct(z, n, k, 1e-17, 2_000_000) {
        Ok(e) => e,
        Err(e) => return fail(e),
    };
    let hurwitz = transform_error_hurwitz(z, n, k, 120).ok();

    // Identity residual: T_k^(n) + E against a deep adaptive reference of
    // the full series value Z(z) = (psi(1+z) + gamma)/z.
    let identity_residual = (|| -> Option<f64> {
        if z.norm() == 0.0 {
            return Some(0.0);
        }
        let config = DigammaConfig {
            max_order: (n + k + 14).max(30),
            tol: 1e-15,
            method: Method::KnownRatio,
        };
        let reference = digamma(z, &config).ok()?;
        let series_value = (reference.value + digamma_accel::series::EULER_GAMMA) / z;

        use digamma_accel::accel::RatioTransform;
        use digamma_accel::series::{ZetaCache, partial_sums};
        let cache = ZetaCache::new(n + k);
        let sums = partial_sums(z, n + k, &cache).ok()?;
        let mut state = RatioTransform::new();
        for m in 0..=k {
            let q = if m == 0 {
                Scalar::new(0.0, 0.0)
            } else {
                z / m as f64
            };
            state = state.push(sums[n + m], q).ok()?;
        }
        let transform = state.value()?;
        Some((transform + direct.value - series_value).norm())
    })();

    serde_json::to_string(&ErrorSeriesOut {
        direct: direct.value.into(),
        direct_terms: direct.terms_used,
        truncation_estimate: direct.truncation_estimate,
        hurwitz: hurwitz.map(|h| h.value.into()),
        identity_residual: identity_residual.unwrap_or(f64::NAN),
    })
    .unwrap_or_else(fail)
}
