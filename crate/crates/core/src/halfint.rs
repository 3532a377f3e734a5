//! Exact half-integers, used for virtual dimensions and dimension bounds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// A number of the form `k / 2`, stored as `k`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A dimension or lower bound, where the empty set has dimension `-inf`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum DimBound {
    NegInfinity,
    Finite(HalfInt),
}

impl DimBound {
    pub fn finite(self) -> Option<HalfInt> {
        match self {
            DimBound::NegInfinity => None,
            DimBound::Finite(v) => Some(v),
        }
    }
}

impl PartialOrd for DimBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DimBound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DimBound::NegInfinity, DimBound::NegInfinity) => Ordering::Equal,
            (DimBound::NegInfinity, _) => Ordering::Less,
            (_, DimBound::NegInfinity) => Ordering::Greater,
            (DimBound::Finite(a), DimBound::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for DimBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimBound::NegInfinity => write!(f, "-inf"),
            DimBound::Finite(v) => write!(f, "{v}"),
        }
    }
}
