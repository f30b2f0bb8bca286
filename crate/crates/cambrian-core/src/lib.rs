//! Exact Cambrian frameworks and doubled Cambrian fans for acyclic
//! skew-symmetrizable exchange matrices, together with an independent
//! principal-coefficient cluster mutation engine to check them against.
//!
//! Everything is exact: integer root and weight coordinates, rational
//! linear algebra over `i128`, and Laurent polynomials with integer
//! coefficients.

#![no_std]

extern crate alloc;

pub mod coxeter;
pub mod exchange;
pub mod fan;
pub mod laurent;
pub mod linalg;
pub mod lp;
pub mod rootsys;
pub mod sortable;
pub mod verify;

mod error;

pub use coxeter::{CoxeterGroup, GroupElement};
pub use error::{Error, Result};
pub use exchange::{ExchangeGraphSlice, ExchangeMatrix, ExtendedExchangeMatrix, Seed};
pub use fan::{FrameworkGraph, Provenance, SimplicialCone};
pub use laurent::Laurent;
pub use linalg::Q;
pub use rootsys::{AffineData, Classification, Phi0Split, RootSpace, RootSystem};
pub use sortable::{CoxeterWord, SortableVertex};

/// Integer coordinate vector: a root in the simple-root basis, a coroot in
/// the simple-coroot basis, or a weight in the fundamental-weight basis.
pub type Vector = alloc::vec::Vec<i64>;

/// Default cap on the number of nodes any enumeration may create.
pub const DEFAULT_NODE_CAP: usize = 100_000;
