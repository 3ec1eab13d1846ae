use crate::error::{Error, Result};

/// Relative zero threshold used by every "is this numerically zero" test.
///
/// Each operation turns it into an absolute threshold by multiplying with
/// its own scale (largest entry, largest singular value, a norm).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT_RELATIVE: f64 = 1e-10;

    pub fn new(relative: f64) -> Result<Self> {
        if relative.is_finite() && relative > 0.0 && relative < 1.0 {
            Ok(Tolerance(relative))
        } else {
            Err(Error::InvalidTolerance(relative))
        }
    }

    #[inline]
    pub fn relative(self) -> f64 {
        self.0
    }

    /// `relative × scale`.
    #[inline]
    pub fn absolute(self, scale: f64) -> f64 {
        self.0 * scale
    }

    /// Acceptance band for identities that accumulate rounding over several
    /// products: `100 × relative × scale`.
    #[inline]
    pub fn band(self, scale: f64) -> f64 {
        100.0 * self.0 * scale
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(Self::DEFAULT_RELATIVE)
    }
}
