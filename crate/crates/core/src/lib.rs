//! Exact computational algebra for the parallel structures carried by
//! Hilbert schemes of points on surfaces and by wreath products.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals and cyclotomic numbers, the only scalars used.
//! * [`groups`]: finite groups, conjugacy classes, character tables,
//!   class-function convolution, and the finite subgroups of `SL_2(C)`.
//! * [`wreath`]: partitions, types, wreath products `Γ_n`, induction and
//!   restriction, and the Heisenberg operators `p_n(γ)` on `⊕ R(Γ_n)`.
//! * [`fock`]: Fock spaces over graded Frobenius algebras with Heisenberg,
//!   vertex-operator and Virasoro operators.
//! * [`charmap`]: the characteristic map joining the two sides, plus the
//!   convolution operators and the filtered product on `S_n`.
//! * [`mckay`]: McKay quivers, affine Cartan matrices and ADE detection.
//! * [`series`]: truncated power series and generating functions.
//! * [`report`]: verification reports shared by all checks.
//!
//! No floating point is used in any computation.

pub mod charmap;
pub mod error;
pub mod exact;
pub mod fock;
pub mod groups;
pub mod mckay;
pub mod report;
pub mod series;
pub mod wreath;

pub use error::{Budget, Error, Result};
pub use exact::{CycNum, Rational};
pub use groups::{ClassFunction, FiniteGroup, Group};
pub use report::VerificationReport;
