//! Classical bounded symmetric domains (Cartan types I-IV), the explicit
//! holomorphic maps from the complex unit ball into them, and a numerical
//! harness that verifies the identities these maps satisfy: isometry
//! functional equations, metric pullbacks, properness probes, minimality
//! certificates, degree bounds and determinant/Pfaffian expansions.
//!
//! The crate is `no_std` + `alloc`; all operations are pure functions over
//! immutable values and are safe to drive from parallel sweeps. IO, file
//! formats and the command-line front end live in the companion `cartan-cli`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod domains;
pub mod error;
pub mod linalg;
pub mod mapzoo;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
