//! Points of N^k with arbitrary-precision coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rational;

/// An element of N^k: a length-k tuple of arbitrary-precision naturals.
///
/// Ordering is graded-lexicographic (by coordinate sum, then
/// lexicographically), the canonical order used for minimal generating sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<BigUint>,
}

impl Element {
    pub fn new(coords: Vec<BigUint>) -> Self {
        Self { coords }
    }

    /// The element with the given machine-word coordinates.
    pub fn from_u64s(coords: &[u64]) -> Self {
        Self {
            coords: coords.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// The identity 0_k.
    pub fn zeros(k: usize) -> Self {
        Self {
            coords: vec![BigUint::zero(); k],
        }
    }

    /// Ambient dimension k.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BigUint {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Sum of all coordinates (the grading used across the crate).
    pub fn coord_sum(&self) -> BigUint {
        self.coords.iter().sum()
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Coordinatewise difference, defined only when `other <= self`
    /// coordinatewise.
    pub fn checked_sub(&self, other: &Element) -> Option<Element> {
        if self.len() != other.len() {
            return None;
        }
        let mut coords = Vec::with_capacity(self.len());
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if b > a {
                return None;
            }
            coords.push(a - b);
        }
        Some(Element { coords })
    }

    pub fn scale(&self, c: &BigUint) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// gcd of all coordinates, with gcd(0, n) = n; zero for the zero element.
    pub fn content(&self) -> BigUint {
        self.coords
            .iter()
            .fold(BigUint::zero(), |acc, c| acc.gcd(c))
    }

    /// Coordinatewise exact division; `None` if any coordinate is not
    /// divisible or `d` is zero.
    pub fn checked_div(&self, d: &BigUint) -> Option<Element> {
        if d.is_zero() {
            return None;
        }
        let mut coords = Vec::with_capacity(self.len());
        for c in &self.coords {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            coords.push(q);
        }
        Some(Element { coords })
    }

    /// Restriction h|X: keeps the 1-based coordinates listed in `indices`
    /// (assumed sorted ascending), producing an element of N^|X|.
    pub fn restrict(&self, indices: &[usize]) -> Result<Element> {
        let mut coords = Vec::with_capacity(indices.len());
        for &i in indices {
            if i == 0 || i > self.len() {
                return Err(Error::CoordOutOfRange {
                    index: i,
                    k: self.len(),
                });
            }
            coords.push(self.coords[i - 1].clone());
        }
        Ok(Element { coords })
    }

    /// Prepends `extra` zero coordinates, embedding N^k into N^(k+extra).
    pub fn left_pad(&self, extra: usize) -> Element {
        let mut coords = vec![BigUint::zero(); extra];
        coords.extend(self.coords.iter().cloned());
        Element { coords }
    }

    /// The coordinates as exact rationals, for building generator matrices.
    pub fn to_rationals(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .map(|c| Rational::from(BigInt::from(c.clone())))
            .collect()
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coord_sum()
            .cmp(&other.coord_sum())
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Element {
    type Err = Error;

    /// Parses comma-separated decimal naturals, e.g. `"2,4"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut coords = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let c = BigUint::from_str(part)
                .map_err(|_| Error::Magnitude(format!("invalid natural number {part:?}")))?;
            coords.push(c);
        }
        Ok(Element { coords })
    }
}
