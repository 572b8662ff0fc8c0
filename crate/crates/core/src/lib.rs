//! Finite heaps, trusses, paragons, modules over trusses, truss extensions
//! and braces, stored as operation tables and checked by brute force.

pub mod brace;
pub mod catalog;
pub mod check;
pub mod error;
pub mod extension;
pub mod groupid;
pub mod heap;
pub mod json;
pub mod report;
pub mod subset;
pub mod suite;
pub mod tmodule;
pub mod truss;

pub use error::{AlgebraError, Law, LawViolation, Result};
pub use heap::{AbGroup, Heap};
pub use subset::{Partition, Subset};
pub use truss::{Sided, Truss};
