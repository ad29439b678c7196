use std::fmt;

/// A weight in the tropical semiring: `plus` is `min`, `times` is `+`,
/// the semiring zero is `+inf` and the semiring one is `0.0`.
///
/// Comparisons are exact; grammar weights are sums of a handful of
/// hand-picked constants so no tolerance is needed.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct TropicalWeight(f64);

impl TropicalWeight {
    pub const ZERO: TropicalWeight = TropicalWeight(f64::INFINITY);
    pub const ONE: TropicalWeight = TropicalWeight(0.0);

    pub fn new(value: f64) -> Self {
        debug_assert!(!value.is_nan(), "tropical weight must not be NaN");
        TropicalWeight(value)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == f64::INFINITY
    }

    #[inline]
    pub fn plus(self, other: Self) -> Self {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn times(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            Self::ZERO
        } else {
            TropicalWeight(self.0 + other.0)
        }
    }
}

impl Default for TropicalWeight {
    fn default() -> Self {
        Self::ONE
    }
}

impl From<f64> for TropicalWeight {
    fn from(value: f64) -> Self {
        TropicalWeight::new(value)
    }
}

impl fmt::Display for TropicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("Infinity")
        } else {
            write!(f, "{}", self.0)
        }
    }
}
