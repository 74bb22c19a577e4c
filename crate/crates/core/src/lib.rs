//! Digamma function evaluation through rational approximants.
//!
//! The digamma function ψ(1+z) has the power series −γ + z·Σ ζ(ν+2)(−z)^ν,
//! which converges only for |z| < 1 and becomes useless on the boundary of
//! the unit disk. The partial sums of that series, however, have remainders
//! that are superpositions of geometric terms with *known* ratios q_j = z/j.
//! This crate implements a sequence transformation that eliminates those
//! known geometric components order by order, turning the partial sums into
//! a rational approximant whose truncation error is itself an explicitly
//! summable series. Wynn's epsilon algorithm is provided alongside as an
//! accelerator that needs no knowledge of the ratios, for comparison.
//!
//! # Modules
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`series`] | Integer-argument zeta functions, partial sums of the digamma series, closed-form remainders |
//! | [`accel`] | The known-ratio transformation (recursive and explicit forms), Wynn's epsilon algorithm, model sequences |
//! | [`error_series`] | Explicit series expansions of the transformation error |
//! | [`digamma`] | Argument reduction and the adaptive digamma evaluator |
//!
//! # Example
//!
//! ```
//! use digamma_accel::digamma::{digamma, DigammaConfig};
//! use digamma_accel::Scalar;
//!
//! // psi(2) = 1 - gamma
//! let r = digamma(Scalar::new(1.0, 0.0), &DigammaConfig::default()).unwrap();
//! assert!((r.value.re - 0.422784335098467).abs() < 1e-15);
//! assert!(r.converged);
//! ```

pub mod accel;
pub mod digamma;
mod error;
pub mod error_series;
pub mod series;

pub use error::Error;

/// Complex working scalar. Purely real inputs are represented with a zero
/// imaginary part; all post-conditions guarantee finite components unless an
/// error is signaled.
pub type Scalar = num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// True when `z` is a real negative integer (−1, −2, …), the pole set shared
/// by the digamma series and its remainder expansions.
pub(crate) fn is_negative_integer(z: Scalar) -> bool {
    z.im == 0.0 && z.re < 0.0 && z.re.fract() == 0.0
}

/// Kahan-compensated complex accumulator. The slowly decaying remainder
/// series run to ~10⁵ terms; plain accumulation swallows the sub-ulp tail
/// and drifts by ~1e−12 there.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: Scalar,
    carry: Scalar,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, term: Scalar) {
        let adjusted = term - self.carry;
        let next = self.sum + adjusted;
        self.carry = (next - self.sum) - adjusted;
        self.sum = next;
    }

    pub(crate) fn value(&self) -> Scalar {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_integer_detection() {
        assert!(is_negative_integer(Scalar::new(-1.0, 0.0)));
        assert!(is_negative_integer(Scalar::new(-37.0, 0.0)));
        assert!(!is_negative_integer(Scalar::new(0.0, 0.0)));
        assert!(!is_negative_integer(Scalar::new(-1.5, 0.0)));
        assert!(!is_negative_integer(Scalar::new(-1.0, 1e-12)));
        assert!(!is_negative_integer(Scalar::new(2.0, 0.0)));
    }
}
