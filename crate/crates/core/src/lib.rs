//! Exact computation with the six scaled Stirling, tanh and Lah number
//! triangles and everything that connects them.
//!
//! The crate is organized around a handful of small, exact building blocks:
//!
//! * [`rational`] — arbitrary-precision integers and rationals (the universal
//!   scalar; nothing here is ever rounded).
//! * [`series`] — truncated formal power series over the rationals. Each
//!   triangle column has a closed-form exponential generating function, so
//!   the series kernel doubles as an independent oracle for every triangle
//!   entry, and as the source of Bernoulli and tangent numbers.
//! * [`triangles`] — the six triangles themselves, grown row by row from
//!   their recurrences and cached.
//! * [`conversions`] — orthogonality of the three inverse pairs, the eight
//!   triangle-to-triangle conversion rules, the binomial-weighted diagonal
//!   sums, and the classical m = 1 identity family.
//! * [`polynomials`] — the Stirling, tanh and Lah polynomial families
//!   obtained by exact interpolation and exact division, with their
//!   recurrences, generating functions and special values.
//! * [`cumulants`] — shifted-gamma and negative-binomial cumulant vectors,
//!   three-cumulant matching, and the reciprocal linear relations between
//!   the matched pairs' cumulant sequences.
//!
//! All values are exact (`BigInt` / `BigRational`); equality in every check
//! is literal equality, never a tolerance.
//!
//! ```
//! use stl_core::{FamilyId, Int, TriangleSet};
//! use stl_core::conversions::{convert_entry, ConversionRule};
//!
//! let tri = TriangleSet::new();
//! assert_eq!(tri.entry(FamilyId::ArcTanh, 3, 1), Int::from(2));
//! // the tanh triangle through the subset triangle and the Lah kernel
//! let via_rule = convert_entry(&tri, ConversionRule::TanhFromStirling2, 3, 1).unwrap();
//! assert_eq!(via_rule, tri.entry(FamilyId::Tanh, 3, 1));
//! ```

pub mod conversions;
pub mod cumulants;
pub mod polynomials;
pub mod rational;
pub mod report;
pub mod series;
pub mod suites;
pub mod triangles;

pub use rational::{Int, Rational};
pub use report::IdentityReport;
pub use series::{FamilyId, PowerSeries};
pub use triangles::TriangleSet;
