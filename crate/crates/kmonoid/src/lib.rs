//! Exact-arithmetic analysis of finitely generated submonoids of N^k.
//!
//! The central quantity is the *index* of a monoid H: the least r such that
//! H is isomorphic to a submonoid of N^r. The index equals the rank of the
//! matrix whose columns are H's minimal generators, equals the size of a
//! maximal coordinate set with independent coordinate functionals, and
//! equals the largest dimension of a free submonoid of H. All three
//! witnesses are computable, and [`monoid::IndexCertificate`] packages exact
//! integer relations certifying the value.
//!
//! Monoids of index 1 reduce canonically to numerical semigroups (submonoids
//! of N with finite complement): dividing each minimal generator by the
//! shared primitive ray gives a multiplier set, and the multipliers divided
//! by their gcd generate the canonical form. Because isomorphic numerical
//! semigroups are equal — isomorphism classes of index-1 monoids are rigid —
//! comparing canonical forms decides isomorphism.
//!
//! Everything is computed in exact arithmetic: arbitrary-precision naturals
//! for monoid elements and arbitrary-precision rationals for linear algebra.
//! Floating point is never used, so ranks, memberships, and certificates are
//! exact statements, not approximations.
//!
//! The [`oracle`] module holds deliberately naive reference implementations
//! (window enumeration, sieve-based minimal generators, rank by minor
//! enumeration) that share no algorithms with the main path; the test suite
//! and the `verify` CLI command check agreement against them.

pub mod element;
pub mod error;
pub mod index_one;
pub mod linalg;
pub mod monoid;
pub mod numsgp;
pub mod oracle;

pub use element::Element;
pub use error::{Error, Result};
pub use index_one::{IndexOneForm, PrimitiveDecomposition};
pub use monoid::{CoordSet, FgMonoid, IndexCertificate, Witness};
pub use numsgp::{Isomorphism, NumericalSemigroup};

/// Arbitrary-precision natural number (element coordinates).
pub type Natural = num_bigint::BigUint;

/// Arbitrary-precision rational scalar used for all linear algebra.
pub type Rational = num_rational::BigRational;

/// Matrix of exact rationals; the concrete instantiation of the generic
/// [`linalg::Matrix`] used throughout the crate.
pub type RationalMatrix = linalg::Matrix<Rational>;
