//! Exact symbolic calculator for closed oriented manifolds built from a
//! fixed atom set.
//!
//! The crate has two halves. The algebra kernel ([`matrix`], [`group`],
//! [`poly`]) does exact integer linear algebra — Smith normal forms,
//! kernels, cokernels — generically over any signed integer scalar
//! implementing [`scalar::IntScalar`]. The geometric half works with formal
//! connected sums ([`manifold`]): suspension rewrite rules ([`suspension`]),
//! circle-bundle total spaces and the 5/6-manifold classification
//! ([`bundle`]), and torus-bundle total spaces with an independent
//! spectral-sequence cross-check ([`torus`]).
//!
//! The concrete scalar for user-facing types is fixed by the aliases below:
//! arbitrary precision, since Smith normal forms of modest matrices already
//! overflow machine words. The torus oracle instantiates the same kernel
//! with `i64`, where its ±1-entry differentials are safe and much faster.
//!
//! Everything is an immutable value and every operation a pure function;
//! the crate is thread-safe without any synchronization contract.

pub mod bundle;
pub mod error;
pub mod group;
pub mod manifold;
pub mod matrix;
pub mod parser;
pub mod poly;
pub mod scalar;
pub mod selftest;
pub mod suspension;
pub mod torus;

/// Default exact scalar.
pub type Int = num_bigint::BigInt;

/// Exact integer matrix over the default scalar.
pub type IntMatrix = matrix::DenseMatrix<Int>;

/// Finitely generated abelian group over the default scalar.
pub type FgAb = group::FgAbGroup<Int>;

/// Graded group over the default scalar.
pub type Graded = group::GradedGroup<Int>;

pub use error::{Error, ParseError, Result};
pub use group::{cokernel, kernel_rank};
pub use manifold::{Atom, ManifoldExpr};
pub use matrix::{smith_normal_form, SmithDecomposition};
pub use poly::IntPolynomial;
pub use suspension::FramingIndex;
