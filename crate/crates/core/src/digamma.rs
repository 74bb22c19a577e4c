//! The digamma evaluator: argument reduction onto the series domain, then
//! −γ + z·T over the accelerated partial sums.
//!
//! ψ(1+z) is evaluated from the power series only for arguments on or inside
//! the unit disk, where the transform converges fastest; everything else is
//! first mapped there with the reflection formula ψ(1−w) = ψ(w) + π·cot(πw)
//! and the recurrence ψ(w+1) = ψ(w) + 1/w.

use std::f64::consts::PI;

use crate::accel::{RatioTransform, wynn_epsilon};
use crate::series::{EULER_GAMMA, ZetaCache, partial_sums};
use crate::{Error, Result, Scalar, is_negative_integer};

/// Accelerator choice for the adaptive evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// The known-ratio transformation with shifts z/m (default).
    #[default]
    KnownRatio,
    /// Wynn's epsilon algorithm along the staircase diagonal.
    Epsilon,
    /// Raw partial sums, no acceleration; diverges on the disk boundary and
    /// exists for comparison output.
    RawSeries,
}

/// Evaluator configuration.
#[derive(Debug, Clone, Copy)]
pub struct DigammaConfig {
    /// Cap on the transform order (sequence elements consumed minus one).
    pub max_order: usize,
    /// Successive-approximant agreement threshold.
    pub tol: f64,
    pub method: Method,
}

impl Default for DigammaConfig {
    fn default() -> Self {
        Self {
            max_order: 40,
            tol: 1e-15,
            method: Method::KnownRatio,
        }
    }
}

/// An evaluated ψ(1+z) with the order bookkeeping.
#[derive(Debug, Clone, Copy)]
pub struct DigammaResult {
    pub value: Scalar,
    /// Order at which successive approximants first agreed (or the cap).
    pub order_used: usize,
    /// Reflection/recurrence steps taken during argument reduction.
    pub reduction_steps: usize,
    /// True when the last two approximants differed by less than
    /// tol·(1 + |value|).
    pub converged: bool,
}

/// Outcome of [`reduce_argument`]: ψ(1+z) = ψ(1+base) + correction, with
/// `base` on or inside the unit disk (real part in [0,1), except that the
/// disk boundary itself is admitted directly — the transform is built for
/// exactly that regime).
#[derive(Debug, Clone, Copy)]
pub struct Reduction {
    pub base: Scalar,
    pub correction: Scalar,
    pub used_reflection: bool,
    pub steps: usize,
}

/// Cotangent stable in both half-planes; the exponential is always taken of
/// a decaying argument so large imaginary parts never overflow.
fn cot(w: Scalar) -> Scalar {
    let i = Scalar::new(0.0, 1.0);
    if w.im >= 0.0 {
        let v = (2.0 * i * w).exp();
        i * (v + 1.0) / (v - 1.0)
    } else {
        let u = (-2.0 * i * w).exp();
        i * (u + 1.0) / (1.0 - u)
    }
}

/// Map z so that ψ(1+z) = ψ(1+base) + correction with base in the series
/// acceptance region.
///
/// Arguments with Re z < −1/2 go through the reflection
/// ψ(1+z) = ψ(−z) − π·cot(πz) first; the remaining distance is covered by
/// the recurrence one unit at a time, downward only while the argument sits
/// strictly outside the unit disk. Real negative integers are poles of
/// ψ(1+z) and are refused, as are real parts beyond 1e6 (the asymptotic
/// regime is deliberately out of scope).
pub fn reduce_argument(z: Scalar) -> Result<Reduction> {
    if is_negative_integer(z) {
        return Err(Error::Pole { z });
    }
    if z.re.abs() > 1e6 {
        return Err(Error::ArgumentTooLarge { re: z.re });
    }

    let mut base = z;
    let mut correction = Scalar::new(0.0, 0.0);
    let mut used_reflection = false;
    let mut steps = 0usize;

    if base.re < -0.5 {
        // psi(1+z) = psi(1 + (−1−z)) − π·cot(πz)
        correction -= PI * cot(PI * z);
        base = -base - 1.0;
        used_reflection = true;
        steps += 1;
    }
    while base.re < 0.0 {
        // psi(1+b) = psi(1 + (b+1)) − 1/(b+1)
        correction -= (base + 1.0).inv();
        base += 1.0;
        steps += 1;
    }
    while base.norm() > 1.0 && base.re >= 1.0 {
        // psi(1+b) = psi(1 + (b−1)) + 1/b
        correction += base.inv();
        base -= 1.0;
        steps += 1;
    }

    Ok(Reduction {
        base,
        correction,
        used_reflection,
        steps,
    })
}

fn shift_for(base: Scalar, m: usize) -> Scalar {
    if m == 0 {
        Scalar::new(0.0, 0.0)
    } else {
        base / m as f64
    }
}

/// Evaluate ψ(1+z) adaptively: reduce the argument, build partial sums on
/// the base, and raise the order of the configured accelerator until two
/// successive approximants agree within `config.tol` (relative to 1 + the
/// magnitude) or `config.max_order` is reached.
///
/// ```
/// use digamma_accel::digamma::{digamma, DigammaConfig};
/// use digamma_accel::Scalar;
///
/// // psi(1) = −γ
/// let r = digamma(Scalar::new(0.0, 0.0), &DigammaConfig::default()).unwrap();
/// assert!((r.value.re + 0.5772156649015329).abs() < 1e-15);
/// ```
pub fn digamma(z: Scalar, config: &DigammaConfig) -> Result<DigammaResult> {
    if config.max_order < 2 {
        return Err(Error::Domain(format!(
            "max_order must be at least 2, got {}",
            config.max_order
        )));
    }
    if config.tol <= 0.0 || config.tol.is_nan() {
        return Err(Error::Domain(format!(
            "tol must be positive, got {}",
            config.tol
        )));
    }

    let reduction = reduce_argument(z)?;
    let base = reduction.base;
    let cache = ZetaCache::new(config.max_order);
    let sums = partial_sums(base, config.max_order, &cache)?;

    let accelerated: Vec<Scalar> = match config.method {
        Method::KnownRatio => {
            let mut state = RatioTransform::new();
            let mut out = Vec::with_capacity(sums.len());
            for (m, &s) in sums.iter().enumerate() {
                state = state.push(s, shift_for(base, m))?;
                out.push(state.value().expect("state is non-empty after a push"));
            }
            out
        }
        Method::Epsilon => {
            let table = wynn_epsilon(&sums);
            let mut out = Vec::with_capacity(sums.len());
            let mut last_valid = sums[0];
            for m in 0..sums.len() {
                if let Some(v) = table.staircase(m) {
                    last_valid = v;
                }
                out.push(last_valid);
            }
            out
        }
        Method::RawSeries => sums,
    };

    let approximant = |t: Scalar| -> Scalar { base * t + reduction.correction - EULER_GAMMA };

    let mut previous = approximant(accelerated[0]);
    for (m, &t) in accelerated.iter().enumerate().skip(1) {
        let current = approximant(t);
        if (current - previous).norm() < config.tol * (1.0 + current.norm()) {
            return Ok(DigammaResult {
                value: current,
                order_used: m,
                reduction_steps: reduction.steps,
                converged: true,
            });
        }
        previous = current;
    }

    Ok(DigammaResult {
        value: previous,
        order_used: config.max_order,
        reduction_steps: reduction.steps,
        converged: false,
    })
}

/// One order of the side-by-side convergence data underlying the table and
/// compare commands: −γ + z·(approximant) for the raw partial sum, the
/// known-ratio transform diagonal, and the epsilon staircase.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceRow {
    pub n: usize,
    pub raw: Scalar,
    pub t_value: Scalar,
    /// `None` when the staircase entry degenerated.
    pub eps_value: Option<Scalar>,
}

/// Convergence data at the argument itself (no reduction): rows n = 0..=n_max.
pub fn convergence_rows(z: Scalar, n_max: usize) -> Result<Vec<ConvergenceRow>> {
    let cache = ZetaCache::new(n_max);
    let sums = partial_sums(z, n_max, &cache)?;
    let table = wynn_epsilon(&sums);
    let mut state = RatioTransform::new();
    let mut rows = Vec::with_capacity(n_max + 1);
    for (n, &s) in sums.iter().enumerate() {
        state = state.push(s, shift_for(z, n))?;
        let lift = |t: Scalar| z * t - EULER_GAMMA;
        rows.push(ConvergenceRow {
            n,
            raw: lift(s),
            t_value: lift(state.value().expect("non-empty state")),
            eps_value: table.staircase(n).map(lift),
        });
    }
    Ok(rows)
}
