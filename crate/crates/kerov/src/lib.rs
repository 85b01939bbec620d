//! Kerov polynomials and free cumulants of Young diagrams, computed exactly.
//!
//! The normalized character of a symmetric group on a k-cycle, scaled by the
//! falling factorial (n)_k, is a universal polynomial Sigma_k in the free
//! cumulants R_2, R_3, ... of the Young diagram -- independent of n. This
//! crate computes those polynomials three independent ways, computes the
//! cumulants of concrete diagrams, and cross-validates everything against a
//! direct Murnaghan-Nakayama character oracle. All arithmetic is exact
//! rational; there is no floating point anywhere.
//!
//! The first few polynomials:
//!
//! ```text
//! Sigma_1 = R_2
//! Sigma_2 = R_3
//! Sigma_3 = R_4 + R_2
//! Sigma_4 = R_5 + 5 R_3
//! Sigma_5 = R_6 + 15 R_4 + 5 R_2^2 + 8 R_2
//! ```
//!
//! # Modules
//!
//! - [`poly`]: the sparse graded ring Q[R_2, R_3, ...] the polynomials live in
//! - [`laurent`]: truncated Laurent series at infinity and at zero, with
//!   composition, inversion, Taylor shifts and residue extraction
//! - [`sigma`]: the three formulas for Sigma_k and the cumulant recovery
//!   identity
//! - [`young`]: concrete diagrams -- interlacing corner coordinates, the
//!   series G of a diagram, numeric free cumulants
//! - [`characters`]: the Murnaghan-Nakayama oracle and hook-length dimensions
//! - [`render`], [`cli`]: text/LaTeX/JSON output and the subcommand
//!   implementations behind the `kerov` binary
//!
//! # Example
//!
//! ```
//! use kerov::{characters, sigma, young};
//! use kerov::young::Partition;
//!
//! let sigma3 = sigma::formula1(3);
//! let diagram: Partition = "4,3,1".parse().unwrap();
//!
//! // Sigma_3 evaluated at the diagram's cumulants equals the normalized
//! // character value from the Murnaghan-Nakayama rule.
//! let predicted = young::character_via_kerov(&diagram, &sigma3).unwrap();
//! let oracle = characters::normalized_on_cycle(&diagram, 3).unwrap();
//! assert_eq!(predicted, oracle);
//! ```
//!
//! The runnable examples under `examples/` walk through each capability;
//! the `kerov` binary exposes the same operations as subcommands.

pub mod characters;
pub mod cli;
pub mod laurent;
pub mod poly;
pub mod rat;
pub mod render;
pub mod sigma;
pub mod young;

pub use laurent::{AscendingSeries, DescendingSeries, SeriesError};
pub use poly::{GradedPoly, Monomial, PolyError};
pub use rat::Rat;
pub use sigma::{Formula, KerovPolynomial};
pub use young::{Interlacing, Partition, PartitionError};
