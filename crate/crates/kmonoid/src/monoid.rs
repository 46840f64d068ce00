//! Finitely generated submonoids of N^k.
//!
//! A monoid is presented by a finite generating set. Construction strips
//! zeros and duplicates, computes the minimal generating set (the elements
//! that are not sums of two nonzero monoid elements), and caches the
//! generator matrix whose columns are the minimal generators in
//! graded-lexicographic order. The rank of that matrix is the monoid's
//! index: the least r such that the monoid embeds in N^r.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::RationalMatrix;

/// A subset of the coordinate index set {1, ..., k}. Indices are 1-based,
/// matching the way coordinates are named in input and output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordSet {
    k: usize,
    members: BTreeSet<usize>,
}

impl CoordSet {
    pub fn new(k: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&index) = members.iter().find(|&&i| i == 0 || i > k) {
            return Err(Error::CoordOutOfRange { index, k });
        }
        Ok(Self { k, members })
    }

    /// The full set {1, ..., k}.
    pub fn full(k: usize) -> Self {
        Self {
            k,
            members: (1..=k).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.members.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Witness that a minimal generator h is rationally dependent on the free
/// base B: `lhs . B + multiplier * h = rhs . B`, an exact identity in N^k
/// with `multiplier >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Index into the minimal generating set of the witnessed element h.
    pub member: usize,
    /// The positive multiplier applied to h.
    pub multiplier: BigUint,
    /// Coefficients over the base for the left-hand combination.
    pub lhs: Vec<BigUint>,
    /// Coefficients over the base for the right-hand combination.
    pub rhs: Vec<BigUint>,
}

/// A certificate that the index of a monoid equals `base.len()`: the base
/// columns are linearly independent (so they generate a free submonoid) and
/// every other minimal generator carries a dependence witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCertificate {
    /// Indices into the minimal generating set, ascending.
    pub base: Vec<usize>,
    /// One witness per minimal generator outside the base.
    pub witnesses: Vec<Witness>,
}

/// A finitely generated submonoid of N^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgMonoid {
    k: usize,
    generators: Vec<Element>,
    beta: Vec<Element>,
    matrix: RationalMatrix,
}

impl FgMonoid {
    /// Builds the monoid generated by `generators` inside N^k. Zero
    /// generators and duplicates are stripped; the empty result is the
    /// trivial monoid {0_k}.
    pub fn new(k: usize, generators: Vec<Element>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroAmbientDimension);
        }
        for g in &generators {
            if g.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    got: g.len(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        let generators: Vec<Element> = generators
            .into_iter()
            .filter(|g| !g.is_zero() && seen.insert(g.clone()))
            .collect();
        let beta = minimal_generators(&generators)?;
        let columns: Vec<_> = beta.iter().map(Element::to_rationals).collect();
        let matrix = RationalMatrix::from_columns(k, &columns)?;
        Ok(Self {
            k,
            generators,
            beta,
            matrix,
        })
    }

    /// Ambient dimension k.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The generating set as stored (zeros and duplicates stripped).
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// The minimal generating set, sorted graded-lexicographically.
    pub fn minimal_generators(&self) -> &[Element] {
        &self.beta
    }

    /// Number of minimal generators.
    pub fn dimension(&self) -> usize {
        self.beta.len()
    }

    /// The k x dimension matrix whose column j is the j-th minimal generator.
    pub fn generator_matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// Whether this is the trivial monoid {0_k}.
    pub fn is_trivial(&self) -> bool {
        self.beta.is_empty()
    }

    /// Decides membership of `v` and returns witnessing coefficients over
    /// `generators()` when it belongs. The search is exhaustive within the
    /// per-generator bounds, so the answer is exact.
    pub fn membership(&self, v: &Element) -> Result<Option<Vec<BigUint>>> {
        if v.len() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                got: v.len(),
            });
        }
        Ok(combination(&self.generators, v))
    }

    /// The least r such that this monoid is isomorphic to a submonoid of
    /// N^r; equal to the rank of the generator matrix. The trivial monoid
    /// has index 1 (it embeds in N^1 as {0}).
    pub fn index(&self) -> usize {
        if self.is_trivial() {
            1
        } else {
            self.matrix.rank()
        }
    }

    /// The lexicographically-first maximal coordinate set whose coordinate
    /// functionals are linearly independent on the monoid. Its size equals
    /// the index.
    pub fn maximal_independent_coords(&self) -> Result<CoordSet> {
        if self.is_trivial() {
            return Err(Error::TrivialMonoid);
        }
        let rows = self.matrix.greedy_independent_rows();
        CoordSet::new(self.k, rows.into_iter().map(|r| r + 1))
    }

    /// Whether the coordinates in `x` span all coordinate functionals, i.e.
    /// whether restriction to `x` is injective on the monoid. Holds in
    /// particular when `x` contains a maximal independent coordinate set.
    pub fn coords_span(&self, x: &CoordSet) -> Result<bool> {
        if x.k() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                got: x.k(),
            });
        }
        let rows: Vec<usize> = x.iter().map(|i| i - 1).collect();
        Ok(self.matrix.select_rows(&rows).rank() == self.matrix.rank())
    }

    /// The restriction of the monoid to the coordinates in `x`, as a monoid
    /// in N^|x|. An isomorphism onto the image whenever `coords_span(x)`.
    pub fn project(&self, x: &CoordSet) -> Result<FgMonoid> {
        if x.k() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                got: x.k(),
            });
        }
        if x.is_empty() {
            return Err(Error::EmptyCoordSet);
        }
        let indices = x.to_vec();
        let generators = self
            .generators
            .iter()
            .map(|g| g.restrict(&indices))
            .collect::<Result<Vec<_>>>()?;
        FgMonoid::new(x.len(), generators)
    }

    /// An isomorphic copy of this monoid inside N^r: project to a maximal
    /// independent coordinate set, then pad with leading zero coordinates.
    /// Fails when `r` is below the index, where no such copy exists.
    pub fn embed(&self, r: usize) -> Result<FgMonoid> {
        let index = self.index();
        if r < index {
            return Err(Error::EmbedDimensionTooSmall {
                requested: r,
                minimum: index,
            });
        }
        if self.is_trivial() {
            return FgMonoid::new(r, Vec::new());
        }
        let x = self.maximal_independent_coords()?;
        let projected = self.project(&x)?;
        let pad = r - x.len();
        let generators = projected
            .generators
            .iter()
            .map(|g| g.left_pad(pad))
            .collect();
        FgMonoid::new(r, generators)
    }

    /// Indices (into the minimal generating set) of the lexicographically
    /// first maximal linearly independent column family.
    pub fn free_basis_indices(&self) -> Result<Vec<usize>> {
        if self.is_trivial() {
            return Err(Error::TrivialMonoid);
        }
        self.matrix.independent_columns(self.index())
    }

    /// A maximal family of linearly independent minimal generators. They
    /// generate a free submonoid of dimension equal to the index, the
    /// largest free submonoid dimension possible.
    pub fn free_basis(&self) -> Result<Vec<Element>> {
        Ok(self
            .free_basis_indices()?
            .into_iter()
            .map(|j| self.beta[j].clone())
            .collect())
    }

    /// Builds an index certificate: a free base plus, for every minimal
    /// generator h outside it, an exact relation `f . B + c h = g . B`. The
    /// certificate is verified before being returned.
    pub fn index_certificate(&self) -> Result<IndexCertificate> {
        let base = self.free_basis_indices()?;
        let base_matrix = self.matrix.select_columns(&base);
        let base_set: BTreeSet<usize> = base.iter().copied().collect();

        let mut witnesses = Vec::new();
        for (j, h) in self.beta.iter().enumerate() {
            if base_set.contains(&j) {
                continue;
            }
            let x = base_matrix
                .solve(&h.to_rationals())
                .expect("base matrix row count matches ambient dimension")
                .expect("every minimal generator lies in the span of the base");

            // Smallest positive multiplier clearing all denominators.
            let mut c = BigUint::one();
            for q in &x {
                c = c.lcm(q.denom().magnitude());
            }
            let mut scaled: Vec<BigInt> = x
                .iter()
                .map(|q| (q * BigInt::from(c.clone())).to_integer())
                .collect();
            let mut common = c.clone();
            for s in &scaled {
                common = common.gcd(s.magnitude());
            }
            if common > BigUint::one() {
                c /= &common;
                let div = BigInt::from(common);
                for s in &mut scaled {
                    *s /= &div;
                }
            }

            // c h = (pos - neg) . B, so neg . B + c h = pos . B.
            let mut lhs = Vec::with_capacity(base.len());
            let mut rhs = Vec::with_capacity(base.len());
            for s in &scaled {
                if s.is_negative() {
                    lhs.push(s.magnitude().clone());
                    rhs.push(BigUint::zero());
                } else {
                    lhs.push(BigUint::zero());
                    rhs.push(s.magnitude().clone());
                }
            }
            witnesses.push(Witness {
                member: j,
                multiplier: c,
                lhs,
                rhs,
            });
        }

        let cert = IndexCertificate { base, witnesses };
        assert!(
            self.verify_certificate(&cert),
            "constructed certificate failed verification"
        );
        Ok(cert)
    }

    /// Checks a certificate: the base columns must be linearly independent,
    /// every minimal generator outside the base must carry a witness, and
    /// every witness identity must hold exactly with a positive multiplier.
    /// Structurally invalid certificates (bad indices, wrong coefficient
    /// lengths) are reported as false.
    pub fn verify_certificate(&self, cert: &IndexCertificate) -> bool {
        let r = self.beta.len();
        let base_set: BTreeSet<usize> = cert.base.iter().copied().collect();
        if base_set.len() != cert.base.len() || cert.base.iter().any(|&j| j >= r) {
            return false;
        }
        if self.matrix.select_columns(&cert.base).rank() != cert.base.len() {
            return false;
        }

        let need: BTreeSet<usize> = (0..r).filter(|j| !base_set.contains(j)).collect();
        let have: BTreeSet<usize> = cert.witnesses.iter().map(|w| w.member).collect();
        if need != have {
            return false;
        }

        for w in &cert.witnesses {
            if w.member >= r || base_set.contains(&w.member) {
                return false;
            }
            if w.multiplier.is_zero() {
                return false;
            }
            if w.lhs.len() != cert.base.len() || w.rhs.len() != cert.base.len() {
                return false;
            }
            let h = &self.beta[w.member];
            let mut left = h.scale(&w.multiplier);
            let mut right = Element::zeros(self.k);
            for ((fc, gc), &bj) in w.lhs.iter().zip(&w.rhs).zip(&cert.base) {
                let b = &self.beta[bj];
                left = left.add(&b.scale(fc)).expect("equal ambient dimension");
                right = right.add(&b.scale(gc)).expect("equal ambient dimension");
            }
            if left != right {
                return false;
            }
        }
        true
    }
}

/// The minimal generating set of the monoid generated by `gens`: strips
/// zeros and duplicates, then removes every element expressible as a
/// combination of the others, iterating to a fixpoint. Sorted
/// graded-lexicographically. Empty (or all-zero) input yields the empty
/// sequence, presenting the trivial monoid.
pub fn minimal_generators(gens: &[Element]) -> Result<Vec<Element>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let k = gens[0].len();
    for g in gens {
        if g.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: g.len(),
            });
        }
    }
    let mut set: BTreeSet<Element> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    loop {
        let mut removed = false;
        for g in set.clone() {
            let others: Vec<Element> = set.iter().filter(|h| **h != g).cloned().collect();
            if combination(&others, &g).is_some() {
                set.remove(&g);
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    Ok(set.into_iter().collect())
}

/// Exhaustive bounded search for nonnegative integers a with
/// `sum a_i gens_i = target`. All generators must be nonzero. Generators
/// are tried in decreasing coordinate-sum order, largest coefficient first,
/// which both prunes early and makes the returned witness deterministic.
fn combination(gens: &[Element], target: &Element) -> Option<Vec<BigUint>> {
    if target.is_zero() {
        return Some(vec![BigUint::zero(); gens.len()]);
    }
    if gens.is_empty() {
        return None;
    }
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|&a, &b| {
        gens[b]
            .coord_sum()
            .cmp(&gens[a].coord_sum())
            .then(a.cmp(&b))
    });
    let mut coeffs = vec![BigUint::zero(); gens.len()];
    if search(gens, &order, 0, target.clone(), &mut coeffs) {
        Some(coeffs)
    } else {
        None
    }
}

fn search(
    gens: &[Element],
    order: &[usize],
    pos: usize,
    remaining: Element,
    coeffs: &mut [BigUint],
) -> bool {
    if remaining.is_zero() {
        for &i in &order[pos..] {
            coeffs[i] = BigUint::zero();
        }
        return true;
    }
    if pos == order.len() {
        return false;
    }
    // Every coordinate still owed must be reachable by a remaining generator.
    for j in 0..remaining.len() {
        if !remaining.coord(j).is_zero()
            && !order[pos..].iter().any(|&i| !gens[i].coord(j).is_zero())
        {
            return false;
        }
    }

    let g = &gens[order[pos]];
    let mut bound: Option<BigUint> = None;
    for j in 0..g.len() {
        if g.coord(j).is_zero() {
            continue;
        }
        let q = remaining.coord(j) / g.coord(j);
        bound = Some(match bound {
            Some(b) => b.min(q),
            None => q,
        });
    }
    let bound = bound.expect("generators are nonzero");

    let mut c = bound;
    loop {
        if let Some(rest) = remaining.checked_sub(&g.scale(&c)) {
            coeffs[order[pos]] = c.clone();
            if search(gens, order, pos + 1, rest, coeffs) {
                return true;
            }
        }
        if c.is_zero() {
            break;
        }
        c -= 1u32;
    }
    coeffs[order[pos]] = BigUint::zero();
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(coords: &[u64]) -> Element {
        Element::from_u64s(coords)
    }

    fn monoid(k: usize, gens: &[&[u64]]) -> FgMonoid {
        FgMonoid::new(k, gens.iter().map(|g| el(g)).collect()).unwrap()
    }

    #[test]
    fn membership_returns_witness_coefficients() {
        let h = monoid(2, &[&[1, 1], &[1, 2]]);
        let coeffs = h.membership(&el(&[3, 4])).unwrap().unwrap();
        assert_eq!(coeffs, vec![2u32.into(), 1u32.into()]);
    }

    #[test]
    fn membership_parity_obstruction() {
        let h = monoid(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(h.membership(&el(&[1, 1])).unwrap(), None);
    }

    #[test]
    fn membership_of_zero_is_trivial() {
        let h = monoid(2, &[&[1, 1], &[1, 2]]);
        assert_eq!(
            h.membership(&el(&[0, 0])).unwrap(),
            Some(vec![0u32.into(), 0u32.into()])
        );
        let trivial = FgMonoid::new(2, vec![]).unwrap();
        assert_eq!(trivial.membership(&el(&[0, 0])).unwrap(), Some(vec![]));
        assert_eq!(trivial.membership(&el(&[1, 0])).unwrap(), None);
    }

    #[test]
    fn minimal_generators_drop_sums() {
        let beta = minimal_generators(&[el(&[2]), el(&[3]), el(&[5])]).unwrap();
        assert_eq!(beta, vec![el(&[2]), el(&[3])]);

        let beta = minimal_generators(&[el(&[1, 0]), el(&[0, 1]), el(&[1, 1])]).unwrap();
        assert_eq!(beta, vec![el(&[0, 1]), el(&[1, 0])]);
    }

    #[test]
    fn minimal_generators_keep_independent_family() {
        let gens = vec![
            el(&[1, 1, 1, 1]),
            el(&[1, 2, 2, 2]),
            el(&[1, 2, 3, 3]),
            el(&[1, 2, 3, 4]),
        ];
        let beta = minimal_generators(&gens).unwrap();
        assert_eq!(beta, gens); // already sorted by coordinate sum
    }

    #[test]
    fn minimal_generators_of_nothing() {
        assert!(minimal_generators(&[]).unwrap().is_empty());
        assert!(minimal_generators(&[el(&[0, 0])]).unwrap().is_empty());
    }

    #[test]
    fn index_of_full_lattice_is_k() {
        let h = monoid(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(h.index(), 3);
    }

    #[test]
    fn index_of_collinear_generators_is_one() {
        let h = monoid(2, &[&[2, 4], &[3, 6], &[5, 10]]);
        assert_eq!(h.index(), 1);
        let single = monoid(3, &[&[4, 0, 2]]);
        assert_eq!(single.index(), 1);
    }

    #[test]
    fn index_of_trivial_monoid_is_one() {
        let trivial = FgMonoid::new(3, vec![]).unwrap();
        assert!(trivial.is_trivial());
        assert_eq!(trivial.index(), 1);
    }

    #[test]
    fn maximal_independent_coords_examples() {
        let h = monoid(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            h.maximal_independent_coords().unwrap(),
            CoordSet::full(3)
        );

        let h = monoid(2, &[&[2, 4], &[3, 6]]);
        assert_eq!(
            h.maximal_independent_coords().unwrap(),
            CoordSet::new(2, [1]).unwrap()
        );

        let h = monoid(2, &[&[0, 1], &[0, 2]]);
        assert_eq!(
            h.maximal_independent_coords().unwrap(),
            CoordSet::new(2, [2]).unwrap()
        );

        let trivial = FgMonoid::new(2, vec![]).unwrap();
        assert_eq!(
            trivial.maximal_independent_coords(),
            Err(Error::TrivialMonoid)
        );
    }

    #[test]
    fn project_examples() {
        let h = monoid(2, &[&[2, 4], &[3, 6]]);
        let p = h.project(&CoordSet::new(2, [1]).unwrap()).unwrap();
        assert_eq!(p.minimal_generators(), &[el(&[2]), el(&[3])]);

        let n2 = monoid(2, &[&[1, 0], &[0, 1]]);
        let p = n2.project(&CoordSet::full(2)).unwrap();
        assert_eq!(p, n2);

        let h = monoid(3, &[&[1, 1, 2]]);
        let p = h.project(&CoordSet::new(3, [2, 3]).unwrap()).unwrap();
        assert_eq!(p.minimal_generators(), &[el(&[1, 2])]);

        assert_eq!(
            h.project(&CoordSet::new(3, []).unwrap()),
            Err(Error::EmptyCoordSet)
        );
    }

    #[test]
    fn embed_examples() {
        let h = monoid(2, &[&[2, 4], &[3, 6]]);
        let e = h.embed(1).unwrap();
        assert_eq!(e.minimal_generators(), &[el(&[2]), el(&[3])]);

        let n2 = monoid(2, &[&[1, 0], &[0, 1]]);
        let e = n2.embed(3).unwrap();
        assert_eq!(
            e.minimal_generators(),
            &[el(&[0, 0, 1]), el(&[0, 1, 0])]
        );

        assert_eq!(
            n2.embed(1),
            Err(Error::EmbedDimensionTooSmall {
                requested: 1,
                minimum: 2
            })
        );
    }

    #[test]
    fn embed_trivial_monoid() {
        let trivial = FgMonoid::new(5, vec![]).unwrap();
        let e = trivial.embed(2).unwrap();
        assert!(e.is_trivial());
        assert_eq!(e.k(), 2);
    }

    #[test]
    fn free_basis_examples() {
        let n2 = monoid(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            n2.free_basis().unwrap(),
            vec![el(&[0, 1]), el(&[1, 0])]
        );

        let h = monoid(2, &[&[2, 4], &[3, 6], &[1, 1]]);
        assert_eq!(
            h.free_basis().unwrap(),
            vec![el(&[1, 1]), el(&[2, 4])]
        );

        let h4 = monoid(
            4,
            &[&[1, 1, 1, 1], &[1, 2, 2, 2], &[1, 2, 3, 3], &[1, 2, 3, 4]],
        );
        assert_eq!(h4.free_basis().unwrap().len(), 4);
    }

    #[test]
    fn certificate_for_two_collinear_generators() {
        let h = monoid(1, &[&[2], &[3]]);
        let cert = h.index_certificate().unwrap();
        assert_eq!(cert.base, vec![0]);
        assert_eq!(cert.witnesses.len(), 1);
        let w = &cert.witnesses[0];
        assert_eq!(w.member, 1);
        assert_eq!(w.multiplier, 2u32.into());
        assert_eq!(w.lhs, vec![BigUint::from(0u32)]);
        assert_eq!(w.rhs, vec![BigUint::from(3u32)]);
        assert!(h.verify_certificate(&cert));
    }

    #[test]
    fn certificate_of_scaled_ray_has_no_witnesses_after_reduction() {
        // (2,2) and (3,3) are sums of copies of (1,1), so the minimal
        // generating set collapses to {(1,1)} and nothing needs a witness.
        let h = monoid(2, &[&[1, 1], &[2, 2], &[3, 3]]);
        assert_eq!(h.minimal_generators(), &[el(&[1, 1])]);
        let cert = h.index_certificate().unwrap();
        assert_eq!(cert.base, vec![0]);
        assert!(cert.witnesses.is_empty());
        assert!(h.verify_certificate(&cert));
    }

    #[test]
    fn certificate_of_free_monoid_has_no_witnesses() {
        let n3 = monoid(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let cert = n3.index_certificate().unwrap();
        assert_eq!(cert.base.len(), 3);
        assert!(cert.witnesses.is_empty());
        assert!(n3.verify_certificate(&cert));
    }

    #[test]
    fn verify_rejects_zero_multiplier() {
        let h = monoid(1, &[&[2], &[3]]);
        let mut cert = h.index_certificate().unwrap();
        cert.witnesses[0].multiplier = BigUint::zero();
        assert!(!h.verify_certificate(&cert));
    }

    #[test]
    fn verify_rejects_dependent_base() {
        let h = monoid(2, &[&[1, 2], &[2, 4], &[1, 0]]);
        // beta is {(1,0),(1,2),(2,4)}; columns 1 and 2 are dependent.
        let cert = IndexCertificate {
            base: vec![1, 2],
            witnesses: vec![Witness {
                member: 0,
                multiplier: BigUint::one(),
                lhs: vec![BigUint::zero(), BigUint::zero()],
                rhs: vec![BigUint::zero(), BigUint::zero()],
            }],
        };
        assert!(!h.verify_certificate(&cert));
    }

    #[test]
    fn verify_rejects_missing_witness() {
        let h = monoid(1, &[&[2], &[3]]);
        let mut cert = h.index_certificate().unwrap();
        cert.witnesses.clear();
        assert!(!h.verify_certificate(&cert));
    }

    #[test]
    fn verify_rejects_false_identity() {
        let h = monoid(1, &[&[2], &[3]]);
        let mut cert = h.index_certificate().unwrap();
        cert.witnesses[0].rhs = vec![BigUint::from(4u32)];
        assert!(!h.verify_certificate(&cert));
    }

    #[test]
    fn construction_strips_zeros_and_duplicates() {
        let h = FgMonoid::new(
            2,
            vec![el(&[0, 0]), el(&[1, 2]), el(&[1, 2]), el(&[2, 4])],
        )
        .unwrap();
        assert_eq!(h.generators(), &[el(&[1, 2]), el(&[2, 4])]);
        assert_eq!(h.minimal_generators(), &[el(&[1, 2])]);
    }

    #[test]
    fn construction_rejects_mixed_dimensions() {
        assert!(FgMonoid::new(2, vec![el(&[1, 2]), el(&[1])]).is_err());
        assert!(FgMonoid::new(0, vec![]).is_err());
    }
}
