//! Exact dyadic rationals `n / 2^p`.
//!
//! Level densities and cylinder measures over `2^{<N}` are always dyadic, so
//! they are kept exactly. Comparisons against non-dyadic thresholds such as
//! `9/10` go through [`Dyadic::cmp_ratio`], which multiplies out in arbitrary
//! precision. Nothing here ever touches floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// A nonnegative dyadic rational `numerator / 2^log2_denominator` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dyadic {
    numerator: u128,
    log2_denominator: u32,
}

impl Dyadic {
    /// Largest supported exponent of the denominator.
    pub const MAX_LOG2_DENOMINATOR: u32 = 126;

    /// Builds `numerator / 2^log2_denominator` and reduces it.
    ///
    /// # Panics
    /// Panics if `log2_denominator` exceeds [`Dyadic::MAX_LOG2_DENOMINATOR`].
    pub fn new(numerator: u128, log2_denominator: u32) -> Self {
        assert!(
            log2_denominator <= Self::MAX_LOG2_DENOMINATOR,
            "dyadic denominator 2^{log2_denominator} is out of range"
        );
        let mut d = Dyadic { numerator, log2_denominator };
        d.reduce();
        d
    }

    /// The value 0.
    pub fn zero() -> Self {
        Dyadic { numerator: 0, log2_denominator: 0 }
    }

    /// The value 1.
    pub fn one() -> Self {
        Dyadic { numerator: 1, log2_denominator: 0 }
    }

    /// The value `2^{-k}`.
    pub fn pow2_neg(k: u32) -> Self {
        Dyadic::new(1, k)
    }

    /// `count / 2^s`, the density of `count` strings among all binary strings of length `s`.
    pub fn from_count(count: u128, s: u32) -> Self {
        Dyadic::new(count, s)
    }

    /// Numerator in lowest terms.
    pub fn numerator(&self) -> u128 {
        self.numerator
    }

    /// Base-2 logarithm of the denominator in lowest terms.
    pub fn log2_denominator(&self) -> u32 {
        self.log2_denominator
    }

    fn reduce(&mut self) {
        if self.numerator == 0 {
            self.log2_denominator = 0;
            return;
        }
        let tz = self.numerator.trailing_zeros().min(self.log2_denominator);
        self.numerator >>= tz;
        self.log2_denominator -= tz;
    }

    fn big_numerator(&self) -> BigUint {
        BigUint::from(self.numerator)
    }

    /// Compares `self` against the rational `num / den` exactly.
    ///
    /// # Panics
    /// Panics if `den` is zero.
    pub fn cmp_ratio(&self, num: u64, den: u64) -> Ordering {
        assert!(den != 0, "zero denominator");
        let lhs = self.big_numerator() * BigUint::from(den);
        let rhs = BigUint::from(num) << self.log2_denominator as usize;
        lhs.cmp(&rhs)
    }

    /// True iff `self > num / den`.
    pub fn gt_ratio(&self, num: u64, den: u64) -> bool {
        self.cmp_ratio(num, den) == Ordering::Greater
    }

    /// Exact sum.
    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let p = self.log2_denominator.max(other.log2_denominator);
        let a = self.numerator << (p - self.log2_denominator);
        let b = other.numerator << (p - other.log2_denominator);
        Dyadic::new(a + b, p)
    }

    /// Renders the value as a reduced fraction `a/b` (or `a` when integral).
    pub fn to_fraction_string(&self) -> String {
        self.to_string()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.big_numerator() << other.log2_denominator as usize;
        let rhs = other.big_numerator() << self.log2_denominator as usize;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_denominator == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u128 << self.log2_denominator)
        }
    }
}
