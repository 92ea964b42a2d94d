//! Exact symbolic calculus for metaplectic Demazure-Lusztig operators and
//! Gelfand-Tsetlin crystal sums.
//!
//! Everything here is exact arithmetic: Laurent polynomials in `x_1..x_{r+1}`
//! over the ring `Z[v, v^-1][g_1..g_{n-1}] / (g_a g_{n-a} - v)`, where the
//! `g_a` stand for normalized `n`-th order Gauss sums and `v = q^-1`.  The
//! crate is organized bottom-up:
//!
//! - [`scalars`]: the coefficient ring and the Gauss-sum evaluation rules.
//! - [`laurent`]: sparse Laurent polynomials and rational elements with
//!   tracked binomial denominators.
//! - [`weyl`]: the symmetric group `S_{r+1}` as a Weyl group, reduced words,
//!   Bruhat order.
//! - [`action`]: the Chinta-Gunnells Weyl-group action on rational functions.
//! - [`operators`]: metaplectic Demazure and Demazure-Lusztig operators and
//!   the long-word formulas.
//! - [`crystal`]: Gelfand-Tsetlin patterns as crystal vertices, decorated
//!   Gamma arrays, Demazure subsets.
//! - [`coefficients`]: the Gauss-sum coefficient attached to a vertex, row
//!   coefficients, and the auxiliary annihilated sums.
//! - [`verify`]: the identity checkers that compare the operator side with
//!   the crystal side.
//!
//! The crate is `no_std` (with `alloc`); all IO, numeric Gauss sums and the
//! command line live in the companion CLI crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod action;
pub mod coefficients;
pub mod crystal;
pub mod laurent;
pub mod operators;
pub mod scalars;
pub mod verify;
pub mod weyl;
