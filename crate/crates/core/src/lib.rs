//! Maps on surfaces as permutation triples, the surface Tutte polynomial
//! and its specializations, and counts of local flows and tensions with
//! values in a finite group.
//!
//! ```
//! use surftutte::premap::Premap;
//! use surftutte::tutte::surface_tutte;
//!
//! let t = surface_tutte(&Premap::twisted_loop()).unwrap();
//! assert_eq!(t.to_string(), "x*xg(-1)*y0 + y*x0*yg(-1)");
//! ```

pub mod build;
pub mod cli;
pub mod error;
pub mod flows;
pub mod groups;
pub mod io;
pub mod ops;
pub mod poly;
pub mod premap;
pub mod tutte;

pub use error::{ComputeError, Limits};
pub use poly::{MultiPoly, Rational, Var};
pub use premap::{MapParams, Premap};
