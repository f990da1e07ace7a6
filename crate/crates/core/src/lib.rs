//! Polynomial parametrizations of two-bridge knots through Chebyshev diagrams.
//!
//! Every two-bridge knot `S(α/β)` with crossing number `N` is the closure of
//! a curve `x = T_3(t)`, `y = T_b(t)`, `z = C(t)` with `N < b < 3N/2` and
//! `b + deg C = 3N`. This crate computes such curves exactly where it can
//! (1-regular continued fractions, Conway forms, crossing parameters) and
//! checks them with an independent crossing-by-crossing measurement.
//!
//! ```
//! use chebknot::contfrac::{regular_expansion, Fraction};
//! use chebknot::heights::parametrization;
//!
//! let r: Fraction = "9/7".parse().unwrap();
//! assert_eq!(regular_expansion(&r).unwrap().terms(), &[1, 1, 1, -1, -1, -1, -1]);
//! let p = parametrization(&r).unwrap();
//! assert_eq!(p.b + p.z.degree() as i64, 3 * 6);
//! ```

pub mod bridge;
pub mod chebyshev;
pub mod cli;
pub mod contfrac;
pub mod diagram;
mod error;
pub mod harmonic;
pub mod heights;
pub mod oracle;
mod serde_int;

pub use error::Error;
