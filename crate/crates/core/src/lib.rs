//! Exact λ-ring computations for motivic zeta functions.
//!
//! The crate models the Grothendieck ring of Chow motives as a special
//! λ-ring, computes zeta functions `Z_X(T) = Σ [Sym^i h(X)] T^i` as rational
//! functions and checks their functional equations as exact Laurent
//! polynomial identities.
//!
//! Layers, bottom up:
//!
//! - [`poly`] and [`series`]: sparse Laurent polynomials over ℤ and truncated
//!   power series over them.
//! - [`partition`], [`characters`], [`symfunc`]: partitions, symmetric group
//!   characters and the ring of symmetric functions (the free special
//!   λ-ring on one generator).
//! - [`symmetric`] and [`universal`]: reduction of symmetric polynomials to
//!   elementary ones and the universal polynomials `P_n`, `P_{n,r}`, `q^g_n`.
//! - [`lambda`]: motive classes over declared atoms with `Sym`, `Alt` and
//!   Schur operations.
//! - [`zeta`]: zeta functions, rational forms and functional-equation checks.
//! - [`document`] and [`cli`]: the text front end.

pub mod cache;
pub mod characters;
pub mod cli;
pub mod document;
pub mod error;
pub mod identities;
pub mod lambda;
pub mod partition;
pub mod poly;
pub mod series;
pub mod symfunc;
pub mod symmetric;
pub mod universal;
pub mod zeta;

pub use error::{Error, Result};
