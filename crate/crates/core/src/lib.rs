//! Exact computation of two-variable Poisson–de Rham–Poincaré polynomials
//! P_X(x, y) for three families of conic symplectic singularities:
//!
//! * unimodular hypertoric cones, from the Tutte polynomials of a matroid's
//!   flats ([`hypertoric`]);
//! * type-A nilpotent slices ("S3-varieties"), from Kostka–Foulkes
//!   polynomials ([`s3`]);
//! * nilpotent cones of the rank-≤2 and type-A Weyl groups, from graded
//!   coinvariant-algebra characters and Springer data ([`nilcone`]).
//!
//! All arithmetic is exact: sparse Laurent polynomials over `BigInt`
//! ([`laurent`]), rational linear algebra ([`linalg`]), and exact
//! rational-function Molien sums ([`coxeter`]). The [`suites`] module packages
//! the identity checks the crate is built around; the `poisson-poincare`
//! binary exposes everything on the command line ([`cli`]).

pub mod cli;
pub mod corpus;
pub mod coxeter;
pub mod hall_littlewood;
pub mod hypertoric;
pub mod laurent;
pub mod linalg;
pub mod matroid;
pub mod nilcone;
pub mod partitions;
pub mod s3;
pub mod suites;

pub use laurent::{LaurentPolynomial, RationalFunction};
pub use matroid::Matroid;
pub use partitions::Partition;
