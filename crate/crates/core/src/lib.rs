//! Exact truncated power series, the plethystic exponential and averages of
//! characteristic polynomials over the symmetric group.
//!
//! ```
//! use plethy::plethystic::pe;
//! use plethy::series::{Series, SeriesRing};
//!
//! let ring = SeriesRing::of(&[("x", 6)]).unwrap();
//! let x = Series::variable(&ring, "x").unwrap();
//! let geometric = (&Series::one(&ring) - &x).inverse().unwrap();
//! let partitions = pe(&(&x * &geometric)).unwrap();
//! assert_eq!(partitions.to_string(), "1 + x + 2*x^2 + 3*x^3 + 5*x^4 + 7*x^5 + 11*x^6");
//! ```

pub mod cli;
pub mod cycle_index;
pub mod expr;
pub mod identities;
pub mod partitions;
pub mod permutations;
pub mod plethystic;
pub mod series;
