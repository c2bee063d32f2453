//! Exact-arithmetic computation of degenerate special-Hermitian ranks.
//!
//! This crate computes the Kähler rank, the Hermitian locally-conformally-Kähler
//! rank, and the pluri-closed (SKT) rank of invariant complex structures on
//! low-dimensional nilpotent Lie algebras, entirely over ℚ(i):
//!
//! * [`scalar`], [`vars`], [`poly`] — Gaussian rationals and sparse multivariate
//!   polynomials with a conjugation involution;
//! * [`form`], [`diff`] — the bigraded exterior algebra of invariant forms with
//!   the operators d, ∂, ∂̄, ∂∂̄ and the twisted differential d_ϑ = d − ϑ∧;
//! * [`salamon`], [`family`] — structure-equation input: Salamon-notation real
//!   Lie algebras and the four classified complex-structure families on
//!   six-dimensional nilpotent algebras;
//! * [`hermitian`], [`slice`] — exact PSD tests, exact rank, facial reduction
//!   and maximum-rank certification over a linear slice of the PSD cone;
//! * [`engine`], [`table`], [`formulas`] — the rank engine, the reference rank
//!   table, and coefficient-level verification of the reference formulas;
//! * [`suspension`] — algebraic verification of a torus-suspension example;
//! * [`cli`] — the command-line surface (one thin binary).
//!
//! Everything is deterministic: randomized searches use a seeded generator and
//! reports are byte-stable for a fixed seed.

pub mod diff;
pub mod form;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod vars;

pub use poly::Polynomial;
pub use scalar::GaussianRational;
