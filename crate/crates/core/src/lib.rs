//! Exact computation of truncated traces of unramified Hecke operators on
//! representations of GL_n over a p-adic field.
//!
//! Everything happens at the Satake level: Hecke operators are symmetric Laurent
//! polynomials in X_1..X_n with exact rational q-exponents, representations are
//! tagged descriptors built from twisted Steinberg/trivial blocks, and traces are
//! Laurent polynomials in q and opaque character symbols. The two independent
//! trace paths (the general engine via Jacquet modules and the closed-form
//! evaluations) cross-validate each other in the `verify` suites.

pub mod error;
pub mod polyring;
pub mod symcomb;
pub mod heckeops;
pub mod repmodel;
pub mod traceengine;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
