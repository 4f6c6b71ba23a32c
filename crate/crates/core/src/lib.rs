//! Orlik–Solomon ideals of simple matroids in the exterior algebra over the
//! rationals: annihilators, their canonical generators, Gröbner and relation
//! checks, and the combinatorial criteria that govern quadraticity.

pub mod casestudies;
pub mod criteria;
pub mod error;
pub mod exterior;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod partitions;
pub mod presentation;
pub mod report;
pub mod zelements;

pub use error::{OsxError, Result};
pub use exterior::{ExtElement, LinearForm, Monomial};
pub use linalg::Subspace;
pub use matroid::{Flag, GroundSubset, Matroid, OrderedBase, Partition};
