//! Caterpillars in trees, and alternating paths among disjoint segments in
//! convex position.
//!
//! - [`tree`]: trees, parsing, diameters, contraction, canonical codes.
//! - [`contraction`]: κ(T), contraction plans, spiders, `p(m)`.
//! - [`induced`]: largest induced caterpillars, beautiful trees, `f`, `g`, `q(m)`.
//! - [`duality`]: chord families versus trees, path construction and validation.
//! - [`oracle`]: free-tree enumeration and brute-force verification.

pub mod cli;
pub mod contraction;
pub mod duality;
pub mod induced;
pub mod oracle;
pub mod svg;
pub mod table;
pub mod tree;
