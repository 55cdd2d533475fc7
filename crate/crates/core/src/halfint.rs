//! Half-integers stored exactly as twice their value.
//!
//! Bessel orders in this crate all live in (1/2)Z; keeping them as `2x`
//! avoids any float in the exact coefficient tables.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    /// The half-integer t/2.
    pub const fn from_twice(t: i64) -> Self {
        Self { twice: t }
    }

    pub const fn from_int(n: i64) -> Self {
        Self { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    /// True when the value is a proper half-odd-integer (1/2, -3/2, ...).
    pub const fn is_half_odd(self) -> bool {
        self.twice % 2 != 0
    }

    pub const fn add_int(self, n: i64) -> Self {
        Self {
            twice: self.twice + 2 * n,
        }
    }

    pub const fn neg(self) -> Self {
        Self { twice: -self.twice }
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let x = HalfInt::from_twice(-5); // -5/2
        assert!(x.is_half_odd());
        assert_eq!(x.add_int(2).twice(), -1);
        assert_eq!(x.neg().twice(), 5);
        assert_eq!(x.to_f64(), -2.5);
        assert_eq!(x.to_string(), "-5/2");
        assert_eq!(HalfInt::from_int(3).to_string(), "3");
        assert!(!HalfInt::from_int(3).is_half_odd());
    }
}
