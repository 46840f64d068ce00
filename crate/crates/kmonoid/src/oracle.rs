//! Naive reference implementations for cross-checking the main algorithms.
//!
//! Nothing here shares an algorithm with the rest of the crate: enumeration
//! is a plain breadth-first closure, minimal generators come from a window
//! sieve over actual monoid elements, and rank is found by enumerating
//! square minors with a cofactor-expansion determinant. Agreement between
//! these and the main path is what the test suite and the `verify` command
//! check. Performance is explicitly not a goal.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::monoid::{CoordSet, FgMonoid};
use crate::{Rational, RationalMatrix};

/// Largest matrix side accepted by [`rank_by_minors`]; minor enumeration is
/// factorial in the size.
pub const MINOR_LIMIT: usize = 6;

/// All elements of a monoid with coordinate sum at most `bound`, computed
/// by breadth-first closure under generator addition. Exact and complete:
/// every partial sum of a window element stays inside the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumWindow {
    bound: u64,
    elements: BTreeSet<Element>,
}

impl EnumWindow {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn elements(&self) -> &BTreeSet<Element> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.contains(e)
    }
}

/// Enumerates `{h in H : coordinate sum of h <= bound}`.
pub fn enumerate(h: &FgMonoid, bound: u64) -> EnumWindow {
    let bound_big = BigUint::from(bound);
    let zero = Element::zeros(h.k());
    let mut elements = BTreeSet::new();
    let mut frontier = vec![zero.clone()];
    elements.insert(zero);
    while let Some(e) = frontier.pop() {
        for g in h.generators() {
            let next = e.add(g).expect("generators share the ambient dimension");
            if next.coord_sum() <= bound_big && elements.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    EnumWindow { bound, elements }
}

/// Window sieve for the minimal generating set: the nonzero window elements
/// that are not a sum of two nonzero window elements. Within the window the
/// result is exactly the minimal generating set, because both summands of
/// any split have strictly smaller coordinate sums.
pub fn beta_sieve(h: &FgMonoid, bound: u64) -> BTreeSet<Element> {
    let window = enumerate(h, bound);
    let nonzero: Vec<Element> = window
        .elements()
        .iter()
        .filter(|e| !e.is_zero())
        .cloned()
        .collect();
    let mut beta = BTreeSet::new();
    for m in &nonzero {
        let mut splits = false;
        for a in &nonzero {
            if a >= m {
                break; // graded order: larger summands cannot fit
            }
            if let Some(rest) = m.checked_sub(a) {
                if !rest.is_zero() && window.contains(&rest) {
                    splits = true;
                    break;
                }
            }
        }
        if !splits {
            beta.insert(m.clone());
        }
    }
    beta
}

/// Rank as the largest s with a nonzero s x s minor, using a cofactor
/// determinant. Guarded to small matrices; larger inputs are a usage error.
pub fn rank_by_minors(m: &RationalMatrix) -> Result<usize> {
    if m.rows() > MINOR_LIMIT || m.cols() > MINOR_LIMIT {
        return Err(Error::MinorGuard {
            rows: m.rows(),
            cols: m.cols(),
            limit: MINOR_LIMIT,
        });
    }
    for s in (1..=m.rows().min(m.cols())).rev() {
        for rows in combinations(m.rows(), s) {
            for cols in combinations(m.cols(), s) {
                let minor: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| m.get(r, c).clone()).collect())
                    .collect();
                if !cofactor_determinant(&minor).is_zero() {
                    return Ok(s);
                }
            }
        }
    }
    Ok(0)
}

/// Whether restriction to the coordinates in `x` is injective on the
/// enumerated window of the monoid.
pub fn injectivity_check(h: &FgMonoid, x: &CoordSet, bound: u64) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::EmptyCoordSet);
    }
    if x.k() != h.k() {
        return Err(Error::DimensionMismatch {
            expected: h.k(),
            got: x.k(),
        });
    }
    let indices: Vec<usize> = x.to_vec();
    let window = enumerate(h, bound);
    let mut seen: HashMap<Vec<BigUint>, &Element> = HashMap::new();
    for e in window.elements() {
        let image: Vec<BigUint> = indices.iter().map(|&i| e.coord(i - 1).clone()).collect();
        if let Some(other) = seen.insert(image, e) {
            if other != e {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Determinant by cofactor expansion along the first row; shares no code
/// with the elimination-based linear algebra.
fn cofactor_determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].clone() * cofactor_determinant(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// All k-subsets of {0, ..., n-1} in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn recur(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            recur(i + 1, n, k, current, out);
            current.pop();
        }
    }
    recur(0, n, k, &mut current, &mut out);
    out
}
