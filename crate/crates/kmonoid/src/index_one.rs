//! Monoids of index 1: primitive parts, enclosing rays, and the canonical
//! reduction to a numerical semigroup.
//!
//! A nonzero element factors uniquely as content times primitive part
//! (primitive: the coordinates have gcd 1). A monoid has index 1 exactly
//! when all its minimal generators share one primitive part f; dividing them
//! by f yields multipliers d_1 < ... < d_r, and the monoid is isomorphic to
//! the numerical semigroup generated by the d_j divided by their gcd. That
//! semigroup is the same for every isomorphic monoid, which makes it a
//! canonical form.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::monoid::FgMonoid;
use crate::numsgp::NumericalSemigroup;

/// The unique factorization h = content * primitive of a nonzero element,
/// where the primitive part has coordinate gcd 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    pub content: BigUint,
    pub primitive: Element,
}

/// The shape of an index-1 monoid: every minimal generator is a multiple of
/// one primitive ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexOneForm {
    /// The unique primitive element f with the monoid contained in <f>.
    pub ray: Element,
    /// Contents of the minimal generators, ascending: beta = {d_j * ray}.
    pub multipliers: Vec<BigUint>,
    /// gcd of the multipliers.
    pub content_gcd: BigUint,
}

/// Factors a nonzero element as content times primitive part.
pub fn primitive_part(h: &Element) -> Result<PrimitiveDecomposition> {
    let content = h.content();
    if content.is_zero() {
        return Err(Error::ZeroElement);
    }
    let primitive = h
        .checked_div(&content)
        .expect("content divides every coordinate");
    Ok(PrimitiveDecomposition { content, primitive })
}

/// Returns the common primitive part of the minimal generators when they
/// share one — equivalently, when the monoid has index 1 — and `None`
/// otherwise. The returned f is the unique primitive element with
/// H contained in <f>.
pub fn is_index_one(h: &FgMonoid) -> Result<Option<Element>> {
    if h.is_trivial() {
        return Err(Error::TrivialMonoid);
    }
    let mut common: Option<Element> = None;
    for g in h.minimal_generators() {
        let part = primitive_part(g)?.primitive;
        match &common {
            None => common = Some(part),
            Some(f) if *f == part => {}
            Some(_) => return Ok(None),
        }
    }
    Ok(common)
}

/// Decomposes an index-1 monoid as multipliers along its primitive ray.
/// Fails with [`Error::NotIndexOne`] when the index is 2 or more.
pub fn index_one_form(h: &FgMonoid) -> Result<IndexOneForm> {
    let Some(ray) = is_index_one(h)? else {
        return Err(Error::NotIndexOne);
    };
    // Minimal generators are sorted by coordinate sum, which on a common ray
    // is proportional to the content, so the multipliers come out ascending.
    let multipliers: Vec<BigUint> = h
        .minimal_generators()
        .iter()
        .map(|g| g.content())
        .collect();
    debug_assert!(multipliers.windows(2).all(|w| w[0] < w[1]));
    let content_gcd = multipliers
        .iter()
        .fold(BigUint::zero(), |acc, d| acc.gcd(d));
    Ok(IndexOneForm {
        ray,
        multipliers,
        content_gcd,
    })
}

/// The canonical numerical semigroup isomorphic to an index-1 monoid:
/// generated by the generator contents divided by their gcd. Two index-1
/// monoids are isomorphic exactly when their canonical forms are equal.
pub fn canonical_numerical_semigroup(h: &FgMonoid) -> Result<NumericalSemigroup> {
    let form = index_one_form(h)?;
    let gens = form
        .multipliers
        .iter()
        .map(|d| {
            d.to_u64().ok_or_else(|| {
                Error::Magnitude(format!(
                    "generator content {d} exceeds the supported semigroup magnitude"
                ))
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    let (ns, _factor) = NumericalSemigroup::from_generators(&gens)?;
    Ok(ns)
}

/// All elements g with H contained in <g>, for an index-1 monoid H: exactly
/// the multiples c*f of the primitive ray f where c divides the multiplier
/// gcd. Sorted by ascending c.
pub fn enclosing_rays(h: &FgMonoid) -> Result<Vec<Element>> {
    let form = index_one_form(h)?;
    let d = form.content_gcd.to_u64().ok_or_else(|| {
        Error::Magnitude(format!(
            "multiplier gcd {} exceeds the supported divisor-enumeration magnitude",
            form.content_gcd
        ))
    })?;
    Ok(divisors(d)
        .into_iter()
        .map(|c| form.ray.scale(&BigUint::from(c)))
        .collect())
}

/// Lifts a numerical semigroup along a nonzero ray f: the monoid generated
/// by h*f for each minimal generator h. The result has index 1 and its
/// canonical numerical semigroup is the input again.
pub fn lift(ns: &NumericalSemigroup, ray: &Element) -> Result<FgMonoid> {
    if ray.is_zero() {
        return Err(Error::ZeroElement);
    }
    let generators = ns
        .minimal_generators()
        .iter()
        .map(|&d| ray.scale(&BigUint::from(d)))
        .collect();
    FgMonoid::new(ray.len(), generators)
}

/// Ascending divisors of n (n >= 1).
fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisor enumeration needs a positive argument");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u64 = 1;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn el(coords: &[u64]) -> Element {
        Element::from_u64s(coords)
    }

    fn monoid(k: usize, gens: &[&[u64]]) -> FgMonoid {
        FgMonoid::new(k, gens.iter().map(|g| el(g)).collect()).unwrap()
    }

    #[test]
    fn primitive_part_examples() {
        let d = primitive_part(&el(&[4, 6, 10])).unwrap();
        assert_eq!(d.content, 2u32.into());
        assert_eq!(d.primitive, el(&[2, 3, 5]));

        let d = primitive_part(&el(&[1, 0, 7])).unwrap();
        assert_eq!(d.content, BigUint::one());
        assert_eq!(d.primitive, el(&[1, 0, 7]));

        let d = primitive_part(&el(&[6])).unwrap();
        assert_eq!(d.content, 6u32.into());
        assert_eq!(d.primitive, el(&[1]));

        assert_eq!(primitive_part(&el(&[0, 0])), Err(Error::ZeroElement));
    }

    #[test]
    fn index_one_detection() {
        let h = monoid(2, &[&[2, 4], &[3, 6], &[5, 10]]);
        assert_eq!(is_index_one(&h).unwrap(), Some(el(&[1, 2])));

        let n2 = monoid(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(is_index_one(&n2).unwrap(), None);

        let single = monoid(1, &[&[6]]);
        assert_eq!(is_index_one(&single).unwrap(), Some(el(&[1])));

        let trivial = FgMonoid::new(2, vec![]).unwrap();
        assert_eq!(is_index_one(&trivial), Err(Error::TrivialMonoid));
    }

    #[test]
    fn index_one_form_examples() {
        // (5,10) = (2,4) + (3,6) drops out of the minimal generating set.
        let h = monoid(2, &[&[2, 4], &[3, 6], &[5, 10]]);
        let form = index_one_form(&h).unwrap();
        assert_eq!(form.ray, el(&[1, 2]));
        assert_eq!(form.multipliers, vec![2u32.into(), 3u32.into()]);
        assert_eq!(form.content_gcd, BigUint::one());

        let h = monoid(2, &[&[4, 4], &[6, 6]]);
        let form = index_one_form(&h).unwrap();
        assert_eq!(form.ray, el(&[1, 1]));
        assert_eq!(form.multipliers, vec![4u32.into(), 6u32.into()]);
        assert_eq!(form.content_gcd, 2u32.into());

        let h = monoid(1, &[&[7]]);
        let form = index_one_form(&h).unwrap();
        assert_eq!(form.ray, el(&[1]));
        assert_eq!(form.multipliers, vec![7u32.into()]);
        assert_eq!(form.content_gcd, 7u32.into());

        let n2 = monoid(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(index_one_form(&n2), Err(Error::NotIndexOne));
    }

    #[test]
    fn canonical_form_examples() {
        let h = monoid(2, &[&[2, 4], &[3, 6], &[5, 10]]);
        let ns = canonical_numerical_semigroup(&h).unwrap();
        assert_eq!(ns.minimal_generators(), &[2, 3]);

        let h = monoid(2, &[&[4, 4], &[6, 6]]);
        let ns = canonical_numerical_semigroup(&h).unwrap();
        assert_eq!(ns.minimal_generators(), &[2, 3]);

        let h = monoid(1, &[&[5]]);
        let ns = canonical_numerical_semigroup(&h).unwrap();
        assert_eq!(ns.minimal_generators(), &[1]);
    }

    #[test]
    fn enclosing_rays_examples() {
        let h = monoid(2, &[&[4, 4], &[6, 6]]);
        assert_eq!(
            enclosing_rays(&h).unwrap(),
            vec![el(&[1, 1]), el(&[2, 2])]
        );

        let h = monoid(2, &[&[2, 4], &[3, 6]]);
        assert_eq!(enclosing_rays(&h).unwrap(), vec![el(&[1, 2])]);

        let h = monoid(1, &[&[12]]);
        assert_eq!(
            enclosing_rays(&h).unwrap(),
            vec![el(&[1]), el(&[2]), el(&[3]), el(&[4]), el(&[6]), el(&[12])]
        );
    }

    #[test]
    fn lift_examples() {
        let (ns, _) = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        let f = lift(&ns, &el(&[1, 2])).unwrap();
        assert_eq!(f.minimal_generators(), &[el(&[2, 4]), el(&[3, 6])]);

        let f = lift(&ns, &el(&[3])).unwrap();
        assert_eq!(f.minimal_generators(), &[el(&[6]), el(&[9])]);

        let (n, _) = NumericalSemigroup::from_generators(&[1]).unwrap();
        let f = lift(&n, &el(&[1, 1])).unwrap();
        assert_eq!(f.minimal_generators(), &[el(&[1, 1])]);

        assert_eq!(lift(&ns, &el(&[0, 0])), Err(Error::ZeroElement));
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
