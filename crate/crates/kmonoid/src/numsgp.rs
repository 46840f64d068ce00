//! Numerical semigroups: submonoids of N with finite complement.
//!
//! A numerical semigroup is stored exactly: sorted minimal generators, the
//! conductor m (least bound with every n >= m a member), and a membership
//! table below the conductor. Isomorphic numerical semigroups are equal and
//! admit only the identity isomorphism, so equality of minimal generating
//! sets decides isomorphism outright; combined with the canonical reduction
//! of index-1 monoids this decides isomorphism for all of them.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::index_one::canonical_numerical_semigroup;
use crate::monoid::FgMonoid;

/// Hard cap on the sieve table size. The conductor of any semigroup this
/// crate can represent must fit below it.
const TABLE_CAP: usize = 1 << 22;

/// A numerical semigroup: gcd-1 submonoid of N, stored as minimal
/// generators plus a conductor-bounded membership table.
#[derive(Debug, Clone, Eq)]
pub struct NumericalSemigroup {
    beta: Vec<u64>,
    conductor: u64,
    table: Vec<bool>,
}

/// The only additive bijection that can exist between two numerical
/// semigroups. The underlying map is infinite, so it is returned as a
/// descriptor rather than materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Isomorphism {
    Identity,
}

impl PartialEq for NumericalSemigroup {
    /// Two values are equal iff their minimal generating sets are equal;
    /// conductor and table are derived data.
    fn eq(&self, other: &Self) -> bool {
        self.beta == other.beta
    }
}

impl NumericalSemigroup {
    /// Builds the numerical semigroup generated by `gens` after dividing out
    /// their gcd (so any nontrivial 1-monoid is accepted). Returns the
    /// semigroup together with the normalization factor that was divided
    /// out.
    pub fn from_generators(gens: &[u64]) -> Result<(Self, u64)> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let factor = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        let normalized: Vec<u64> = gens.iter().map(|&g| g / factor).collect();
        Ok((Self::from_coprime_generators(&normalized)?, factor))
    }

    fn from_coprime_generators(gens: &[u64]) -> Result<Self> {
        let mult = *gens.iter().min().expect("nonempty");
        if mult == 1 {
            // All of N.
            return Ok(Self {
                beta: vec![1],
                conductor: 1,
                table: vec![true],
            });
        }
        let max = *gens.iter().max().expect("nonempty");
        // The sieve must reach past the largest minimal generator; a
        // generator beyond the table cap can never fit.
        if max as u128 * 2 > TABLE_CAP as u128 {
            return Err(Error::Magnitude(format!(
                "generator {max} exceeds the supported table size {TABLE_CAP}"
            )));
        }
        let mut bound = (2 * max as usize).max(64);
        loop {
            if bound > TABLE_CAP {
                return Err(Error::Magnitude(format!(
                    "conductor exceeds the supported table size {TABLE_CAP}"
                )));
            }
            let member = sieve(gens, bound);
            if let Some(c) = first_full_run(&member, mult as usize) {
                if c + mult as usize <= bound {
                    return Ok(Self::from_member_table(&member, c as u64));
                }
            }
            bound *= 2;
        }
    }

    /// Assembles the semigroup from an exact membership table and its
    /// conductor. The table must extend at least to conductor +
    /// multiplicity so that all minimal generators are visible.
    fn from_member_table(member: &[bool], conductor: u64) -> Self {
        let c = conductor as usize;
        let mult = (1..member.len())
            .find(|&n| member[n])
            .expect("a nontrivial semigroup has a least positive element");
        debug_assert!(member.len() >= c + mult);

        // Minimal generators are members below conductor + multiplicity not
        // expressible as a sum of two nonzero members.
        let mut beta = Vec::new();
        for m in 1..(c + mult) {
            if !member[m] {
                continue;
            }
            let has_split = (mult..=m / 2).any(|a| member[a] && member[m - a]);
            if !has_split {
                beta.push(m as u64);
            }
        }
        Self {
            beta,
            conductor,
            table: member[..c].to_vec(),
        }
    }

    /// Rebuilds a semigroup from its gap set (the finitely many naturals
    /// outside it). The caller must pass a genuine gap set: the complement
    /// has to be closed under addition.
    fn from_gaps(gaps: &BTreeSet<u64>) -> Self {
        let Some(&max_gap) = gaps.iter().next_back() else {
            return Self {
                beta: vec![1],
                conductor: 1,
                table: vec![true],
            };
        };
        let conductor = max_gap + 1;
        let mult = (1..).find(|n| !gaps.contains(n)).expect("gap set is finite");
        let bound = (conductor + mult) as usize;
        let member: Vec<bool> = (0..bound as u64)
            .map(|n| !gaps.contains(&n))
            .collect();
        debug_assert!(closed_under_addition(&member));
        Self::from_member_table(&member, conductor)
    }

    /// The sorted minimal generating set.
    pub fn minimal_generators(&self) -> &[u64] {
        &self.beta
    }

    /// The conductor m: least bound such that every n >= m is a member.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Whether this semigroup is all of N.
    pub fn is_all_of_n(&self) -> bool {
        self.conductor == 1
    }

    /// The Frobenius number, conductor - 1: the largest natural outside the
    /// semigroup — except for N itself, where every natural is a member and
    /// the value degenerates to 0 (the conductor of N is defined as 1; this
    /// crate does not adopt the external convention of returning -1).
    pub fn frobenius(&self) -> u64 {
        self.conductor - 1
    }

    /// The least nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.beta[0]
    }

    /// Exact membership: table lookup below the conductor, true beyond.
    pub fn contains(&self, n: u64) -> bool {
        if n >= self.conductor {
            true
        } else {
            self.table[n as usize]
        }
    }

    /// The finitely many naturals outside the semigroup, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&n| !self.table[n as usize]).collect()
    }

    /// Removes the multiplicity (the least nonzero element). The result is
    /// again a numerical semigroup, since the multiplicity can never be a
    /// sum of two nonzero members.
    pub fn remove_multiplicity(&self) -> Self {
        let mut gaps: BTreeSet<u64> = self.gaps().into_iter().collect();
        gaps.insert(self.multiplicity());
        Self::from_gaps(&gaps)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.beta.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// The unique isomorphism between two numerical semigroups, when one
/// exists. Isomorphic numerical semigroups are equal and the identity is
/// their only isomorphism, so this returns the identity descriptor exactly
/// when the two are equal.
pub fn isomorphism(a: &NumericalSemigroup, b: &NumericalSemigroup) -> Option<Isomorphism> {
    (a == b).then_some(Isomorphism::Identity)
}

/// Decides isomorphism of two index-1 monoids by comparing canonical
/// numerical semigroups. Monoids of index 2 or more are rejected with an
/// error, which is distinct from a `false` verdict.
pub fn monoids_isomorphic_index1(f1: &FgMonoid, f2: &FgMonoid) -> Result<bool> {
    let a = canonical_numerical_semigroup(f1)?;
    let b = canonical_numerical_semigroup(f2)?;
    Ok(a == b)
}

/// Dynamic membership sieve: n is a member iff n = 0 or n - g is a member
/// for some generator g.
fn sieve(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut member = vec![false; bound];
    if bound > 0 {
        member[0] = true;
    }
    for n in 1..bound {
        for &g in gens {
            let g = g as usize;
            if g <= n && member[n - g] {
                member[n] = true;
                break;
            }
        }
    }
    member
}

/// The start of the first run of `len` consecutive members; every natural
/// from that point on is a member.
fn first_full_run(member: &[bool], len: usize) -> Option<usize> {
    let mut run = 0usize;
    for (n, &m) in member.iter().enumerate() {
        if m {
            run += 1;
            if run == len {
                return Some(n + 1 - len);
            }
        } else {
            run = 0;
        }
    }
    None
}

#[cfg(test)]
fn closed_under_addition(member: &[bool]) -> bool {
    let n = member.len();
    for a in 1..n {
        if !member[a] {
            continue;
        }
        for b in a..n {
            if member[b] && a + b < n && !member[a + b] {
                return false;
            }
        }
    }
    true
}

#[cfg(not(test))]
fn closed_under_addition(_member: &[bool]) -> bool {
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap().0
    }

    #[test]
    fn two_three_semigroup() {
        let h = ns(&[2, 3]);
        assert_eq!(h.minimal_generators(), &[2, 3]);
        assert_eq!(h.conductor(), 2);
        assert_eq!(h.frobenius(), 1);
        assert_eq!(h.gaps(), vec![1]);
        assert_eq!(h.multiplicity(), 2);
    }

    #[test]
    fn generators_are_normalized_by_gcd() {
        let (h, factor) = NumericalSemigroup::from_generators(&[4, 6]).unwrap();
        assert_eq!(factor, 2);
        assert_eq!(h.minimal_generators(), &[2, 3]);
    }

    #[test]
    fn all_of_n() {
        let h = ns(&[1]);
        assert!(h.is_all_of_n());
        assert_eq!(h.minimal_generators(), &[1]);
        assert_eq!(h.conductor(), 1);
        // m - 1 = 0 for N; this crate documents 0 rather than -1.
        assert_eq!(h.frobenius(), 0);
        assert!(h.gaps().is_empty());
        assert_eq!(h.multiplicity(), 1);
    }

    #[test]
    fn three_five_semigroup() {
        let h = ns(&[3, 5]);
        assert_eq!(h.minimal_generators(), &[3, 5]);
        assert_eq!(h.gaps(), vec![1, 2, 4, 7]);
        assert_eq!(h.frobenius(), 7);
        assert_eq!(h.conductor(), 8);
    }

    #[test]
    fn membership_examples() {
        let h = ns(&[2, 3]);
        assert!(!h.contains(1));
        assert!(h.contains(100));
        assert!(h.contains(0));
        let g = ns(&[3, 5]);
        assert!(!g.contains(7));
        assert!(g.contains(8));
    }

    #[test]
    fn redundant_generators_are_dropped() {
        assert_eq!(ns(&[2, 3, 5]), ns(&[2, 3]));
        assert_ne!(ns(&[2, 3]), ns(&[3, 5]));
        let h = ns(&[6, 9, 20]);
        assert_eq!(h, h.clone());
    }

    #[test]
    fn remove_multiplicity_examples() {
        assert_eq!(ns(&[1]).remove_multiplicity(), ns(&[2, 3]));
        assert_eq!(ns(&[2, 3]).remove_multiplicity(), ns(&[3, 4, 5]));
        // <3,5> minus {3} has members {0,5,6,8,9,10,...}.
        assert_eq!(
            ns(&[3, 5]).remove_multiplicity().minimal_generators(),
            &[5, 6, 8, 9]
        );
    }

    #[test]
    fn isomorphism_is_identity_or_nothing() {
        assert_eq!(
            isomorphism(&ns(&[2, 3]), &ns(&[2, 3, 5])),
            Some(Isomorphism::Identity)
        );
        assert_eq!(isomorphism(&ns(&[2, 3]), &ns(&[2, 5])), None);
        assert_eq!(
            isomorphism(&ns(&[1]), &ns(&[1])),
            Some(Isomorphism::Identity)
        );
    }

    #[test]
    fn index1_monoid_isomorphism() {
        use crate::element::Element;
        let m = |k, gens: &[&[u64]]| {
            FgMonoid::new(
                k,
                gens.iter().map(|g| Element::from_u64s(g)).collect(),
            )
            .unwrap()
        };
        let a = m(2, &[&[2, 4], &[3, 6]]);
        let b = m(1, &[&[4], &[6]]);
        let c = m(1, &[&[2], &[5]]);
        assert!(monoids_isomorphic_index1(&a, &b).unwrap());
        assert!(!monoids_isomorphic_index1(&a, &c).unwrap());

        let n2 = m(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            monoids_isomorphic_index1(&n2, &a),
            Err(Error::NotIndexOne)
        );
    }

    #[test]
    fn closure_under_addition_holds_to_twice_the_conductor() {
        for gens in [vec![2, 3], vec![3, 5], vec![4, 7, 9], vec![6, 9, 20], vec![1]] {
            let h = ns(&gens);
            let bound = 2 * h.conductor() + 2;
            for a in 0..bound {
                if !h.contains(a) {
                    continue;
                }
                for b in a..bound {
                    if h.contains(b) && a + b <= bound {
                        assert!(h.contains(a + b), "{a} + {b} missing in {h}");
                    }
                }
            }
        }
    }

    #[test]
    fn conductor_marks_the_last_gap() {
        for gens in [vec![2, 3], vec![3, 5], vec![5, 7, 11], vec![4, 6, 9]] {
            let h = ns(&gens);
            assert!(!h.contains(h.conductor() - 1));
            for n in h.conductor()..h.conductor() + 100 {
                assert!(h.contains(n));
            }
        }
    }

    #[test]
    fn minimal_generators_have_no_splits() {
        for gens in [vec![2, 3], vec![3, 5], vec![6, 9, 20], vec![5, 8, 11, 12]] {
            let h = ns(&gens);
            let window = h.conductor() + h.multiplicity();
            for &g in h.minimal_generators() {
                for a in 1..g {
                    assert!(
                        !(h.contains(a) && h.contains(g - a)),
                        "{g} splits as {a} + {} in {h}",
                        g - a
                    );
                }
            }
            // And everything below the window that is not minimal splits.
            for m in 1..window {
                if !h.contains(m) || h.minimal_generators().contains(&m) {
                    continue;
                }
                assert!(
                    (1..m).any(|a| h.contains(a) && h.contains(m - a)),
                    "{m} should split in {h}"
                );
            }
        }
    }
}
