//! Sequence transformations for accelerating slowly convergent sequences.
//!
//! Two accelerators live here. [`RatioTransform`] eliminates geometric
//! remainder components c_j·q_j^{n+1} whose ratios q_j are known in advance;
//! it is the workhorse behind the digamma evaluator, where q_j = z/j. Wynn's
//! epsilon algorithm ([`wynn_epsilon`]) needs no such knowledge and serves
//! as the reference accelerator. [`ModelSequence`] synthesizes sequences
//! with prescribed limit and geometric tail, for which the transformed
//! remainder is known in closed form — the testing oracle for both.

use crate::{Error, Result, Scalar};

/// Orders beyond this make the explicit symmetric-polynomial form
/// cancellation-prone (alternating coefficient signs); results carry a
/// warning flag past it. Tunable, deliberately conservative.
pub const EXPLICIT_ORDER_GUARD: usize = 30;

/// Differences below this magnitude in the epsilon recursion mark the
/// dependent entry (and its descendants) invalid instead of producing
/// infinities.
pub const EPSILON_UNDERFLOW_GUARD: f64 = 1e-300;

/// Elementary symmetric polynomials e₀..e_n of the given values, defined by
/// Π (1 + x_j t) = Σ e_ν t^ν.
///
/// Uses the stable one-variable-at-a-time recurrence e_ν ← e_ν + x·e_{ν−1}
/// in descending ν. The empty product gives `[1]`.
pub fn elementary_symmetric(xs: &[Scalar]) -> Vec<Scalar> {
    let mut e = Vec::with_capacity(xs.len() + 1);
    e.push(Scalar::new(1.0, 0.0));
    for &x in xs {
        e.push(Scalar::new(0.0, 0.0));
        for nu in (1..e.len()).rev() {
            let lower = e[nu - 1];
            e[nu] += x * lower;
        }
    }
    e
}

/// Running state of the known-ratio transformation, the two-array scheme:
/// one rolling array of transforms plus the consumed shift parameters.
///
/// After feeding s₀, …, s_m (one [`push`](Self::push) each), `value()` holds
/// the order-m transform of the sequence head: every known geometric
/// component with ratio q₁, …, q_m eliminated. States are values; `push`
/// returns the successor and leaves `self` untouched.
#[derive(Debug, Clone, Default)]
pub struct RatioTransform {
    t: Vec<Scalar>,
    q: Vec<Scalar>,
}

impl RatioTransform {
    pub fn new() -> Self {
        Self::default()
    }

    /// Consume the next sequence element together with its shift q.
    ///
    /// The first push seeds the array and ignores `q_new` (order zero has no
    /// shift). Each later push runs the inner update
    /// t[m−j] ← (t[m−j+1] + q_j·t[m−j]) / (1 + q_j) for j = 1..=m,
    /// evaluated in the equivalent increment form
    /// t[m−j] + (t[m−j+1] − t[m−j]) / (1 + q_j) so rounding acts on the
    /// shrinking difference instead of the full magnitude.
    pub fn push(&self, s_new: Scalar, q_new: Scalar) -> Result<Self> {
        let mut next = self.clone();
        if next.t.is_empty() {
            next.t.push(s_new);
            return Ok(next);
        }
        if (q_new + 1.0).norm() == 0.0 {
            return Err(Error::SingularTransform { q: q_new });
        }
        next.t.push(s_new);
        next.q.push(q_new);
        let m = next.q.len();
        for j in 1..=m {
            let q = next.q[j - 1];
            let lower = next.t[m - j];
            next.t[m - j] = lower + (next.t[m - j + 1] - lower) / (q + 1.0);
        }
        Ok(next)
    }

    /// The current highest-order transform, `None` before the first push.
    pub fn value(&self) -> Option<Scalar> {
        self.t.first().copied()
    }

    /// Transform order reached so far (elements consumed minus one).
    pub fn order(&self) -> usize {
        self.t.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

/// Result of the explicit (symmetric-polynomial) form of the transform.
#[derive(Debug, Clone, Copy)]
pub struct ExplicitTransform {
    pub value: Scalar,
    /// Transform order k (number of shifts consumed).
    pub order: usize,
    /// Set when the order exceeds [`EXPLICIT_ORDER_GUARD`]; the alternating
    /// symmetric-polynomial sums shed digits at large order.
    pub stability_warning: bool,
}

/// Order-k transform of the window [s_n, …, s_{n+k}] in one shot:
/// Σ_κ e_{k−κ} s_{n+κ} / Σ_κ e_κ with the elementary symmetric polynomials
/// taken over the shifts.
///
/// This form exists for cross-validation and pole inspection; the rolling
/// [`RatioTransform`] is the production path.
pub fn ratio_transform_explicit(window: &[Scalar], shifts: &[Scalar]) -> Result<ExplicitTransform> {
    if window.len() != shifts.len() + 1 {
        return Err(Error::LengthMismatch {
            window: window.len(),
            shifts: shifts.len(),
        });
    }
    for &q in shifts {
        if (q + 1.0).norm() == 0.0 {
            return Err(Error::SingularTransform { q });
        }
    }
    let k = shifts.len();
    let e = elementary_symmetric(shifts);
    let mut numerator = Scalar::new(0.0, 0.0);
    let mut denominator = Scalar::new(0.0, 0.0);
    for kappa in 0..=k {
        numerator += e[k - kappa] * window[kappa];
        denominator += e[kappa];
    }
    if denominator.norm() == 0.0 {
        // Can only happen through rounding; Π(1+q) is nonzero when no q = −1.
        return Err(Error::SingularTransform {
            q: Scalar::new(-1.0, 0.0),
        });
    }
    Ok(ExplicitTransform {
        value: numerator / denominator,
        order: k,
        stability_warning: k > EXPLICIT_ORDER_GUARD,
    })
}

/// A sequence s_n = s + (−1)^{n+1} Σ_j c_j q_j^{n+1} with finitely many
/// geometric tail components — the model on which the transform's
/// elimination property is exact and explicitly computable.
#[derive(Debug, Clone)]
pub struct ModelSequence {
    limit: Scalar,
    terms: Vec<(Scalar, Scalar)>,
}

impl ModelSequence {
    /// Validates the ratio ordering |q₁| > |q₂| > … (strict) and, when every
    /// ratio is real, a common sign.
    pub fn new(limit: Scalar, terms: Vec<(Scalar, Scalar)>) -> Result<Self> {
        for pair in terms.windows(2) {
            if pair[0].1.norm() <= pair[1].1.norm() {
                return Err(Error::Domain(format!(
                    "model ratios must strictly decrease in magnitude: |{}| <= |{}|",
                    pair[0].1, pair[1].1
                )));
            }
        }
        if terms.iter().all(|(_, q)| q.im == 0.0) {
            let mixed =
                terms.iter().any(|(_, q)| q.re > 0.0) && terms.iter().any(|(_, q)| q.re < 0.0);
            if mixed {
                return Err(Error::Domain(
                    "real model ratios must share a common sign".into(),
                ));
            }
        }
        Ok(Self { limit, terms })
    }

    pub fn limit(&self) -> Scalar {
        self.limit
    }

    pub fn ratios(&self) -> impl Iterator<Item = Scalar> + '_ {
        self.terms.iter().map(|&(_, q)| q)
    }

    /// Element n of the sequence.
    pub fn element(&self, n: usize) -> Scalar {
        let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
        let power = (n + 1) as i32;
        let tail: Scalar = self.terms.iter().map(|&(c, q)| c * q.powi(power)).sum();
        self.limit + tail * sign
    }

    /// Exact value the order-k transform started at offset n must produce on
    /// this sequence: the limit plus the surviving components j > k, each
    /// damped by Π_κ (q_κ − q_j)/(q_κ + 1).
    ///
    /// This is the closed-form elimination result and serves as the oracle
    /// for [`RatioTransform`] and [`ratio_transform_explicit`].
    pub fn transformed_tail(&self, n: usize, k: usize) -> Result<Scalar> {
        for &(_, q) in self.terms.iter().take(k) {
            if (q + 1.0).norm() == 0.0 {
                return Err(Error::SingularTransform { q });
            }
        }
        let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
        let power = (n + 1) as i32;
        let mut tail = Scalar::new(0.0, 0.0);
        for &(c_j, q_j) in self.terms.iter().skip(k) {
            let mut damping = Scalar::new(1.0, 0.0);
            for &(_, q_kappa) in self.terms.iter().take(k) {
                damping *= (q_kappa - q_j) / (q_kappa + 1.0);
            }
            tail += c_j * damping * q_j.powi(power);
        }
        Ok(self.limit + tail * sign)
    }
}

/// The epsilon table: ε_k^{(n)} for all indices reachable from the input,
/// with degenerate entries flagged invalid rather than stored as infinities.
#[derive(Debug, Clone)]
pub struct EpsilonTable {
    /// columns[k][n] = ε_k^{(n)}; column k holds len − k entries.
    columns: Vec<Vec<Option<Scalar>>>,
}

impl EpsilonTable {
    /// ε_k^{(n)}, `None` when out of range or degenerate.
    pub fn epsilon(&self, k: usize, n: usize) -> Option<Scalar> {
        self.columns.get(k)?.get(n).copied().flatten()
    }

    /// The staircase element ε_{2⌊n/2⌋}^{(n−2⌊n/2⌋)}: the highest even
    /// column reachable after consuming s₀..s_n, the natural per-input
    /// approximant sequence.
    pub fn staircase(&self, n: usize) -> Option<Scalar> {
        self.epsilon(2 * (n / 2), n % 2)
    }

    /// Number of input elements the table was built from.
    pub fn len(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Run Wynn's epsilon algorithm over a sequence:
/// ε_{−1}^{(n)} = 0, ε_0^{(n)} = s_n,
/// ε_{k+1}^{(n)} = ε_{k−1}^{(n+1)} + 1/(ε_k^{(n+1)} − ε_k^{(n)}).
///
/// Even columns hold the accelerated approximants. A difference smaller in
/// magnitude than [`EPSILON_UNDERFLOW_GUARD`] marks the dependent entry and
/// every entry computed from it invalid.
pub fn wynn_epsilon(seq: &[Scalar]) -> EpsilonTable {
    let len = seq.len();
    let mut columns: Vec<Vec<Option<Scalar>>> = Vec::with_capacity(len);
    columns.push(seq.iter().map(|&s| Some(s)).collect());
    for k in 1..len {
        let mut column = Vec::with_capacity(len - k);
        for n in 0..len - k {
            let prev = if k >= 2 {
                columns[k - 2][n + 1]
            } else {
                Some(Scalar::new(0.0, 0.0))
            };
            let entry = match (prev, columns[k - 1][n + 1], columns[k - 1][n]) {
                (Some(base), Some(upper), Some(lower)) => {
                    let difference = upper - lower;
                    if difference.norm() < EPSILON_UNDERFLOW_GUARD {
                        None
                    } else {
                        Some(base + 1.0 / difference)
                    }
                }
                _ => None,
            };
            column.push(entry);
        }
        columns.push(column);
    }
    EpsilonTable { columns }
}
