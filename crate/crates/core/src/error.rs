use thiserror::Error;

use crate::Scalar;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument sits on a pole of the function being evaluated.
    #[error("pole at z = {z}")]
    Pole { z: Scalar },

    /// A transformation shift parameter q = −1 makes the divisor 1 + q vanish.
    #[error("singular transform: shift parameter q = {q} has 1 + q = 0")]
    SingularTransform { q: Scalar },

    /// A zeta cache shallower than the requested partial-sum order.
    #[error("zeta cache holds orders 0..={available}, need {needed}")]
    InsufficientCache { needed: usize, available: usize },

    /// Mismatched window/shift lengths in the explicit transform.
    #[error("window of {window} elements needs exactly {window} - 1 = {} shifts, got {shifts}", window.saturating_sub(1))]
    LengthMismatch { window: usize, shifts: usize },

    /// Real part too large for the series path; the asymptotic regime is not
    /// implemented.
    #[error("|Re z| = {re} exceeds the supported range (limit 1e6)")]
    ArgumentTooLarge { re: f64 },
}
