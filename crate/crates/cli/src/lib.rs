//! Command line front end and numeric Gauss sums for the exact metaplectic
//! operator and crystal calculus.
//!
//! The heavy lifting lives in `metaplectic-core`; this crate adds the
//! pieces that need `std`: the `metaplectic` binary with its `crystal`,
//! `whittaker`, `verify`, and `gauss` subcommands, floating-point Gauss
//! sums over a prime field, sweep configuration files, and the text/JSON
//! renderers.  All output is deterministic: identical inputs produce
//! byte-identical bytes regardless of parallelism.

pub mod app;
pub mod config;
pub mod formats;
pub mod gauss;
pub mod sweep;
