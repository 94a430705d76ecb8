//! Exact left-invariant almost pseudo-Kähler geometry on six-dimensional
//! nilpotent Lie algebras.
//!
//! The crate computes associated metrics, Levi-Civita connections and
//! curvature from structure constants over exact rationals, ships a catalog
//! of the twelve symplectic six-dimensional nilpotent algebras without
//! compatible complex structures together with their canonical almost
//! complex structures, and runs a verification suite over that catalog.
//! A small float Gauss–Newton solver explores families of compatible almost
//! complex structures numerically.

pub mod acs;
pub mod catalog;
pub mod curvature;
pub mod exact;
pub mod forms;
pub mod io;
pub mod liealg;
pub mod solver;
pub mod verify;

mod error;

pub use error::{Error, Result};

/// Version stamped into every JSON document this crate writes.
pub const FORMAT_VERSION: u32 = 1;
