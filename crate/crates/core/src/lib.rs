//! GF(2) rank machinery for strongly regular graphs built from graphical
//! Hadamard matrices of order `4^m`.
//!
//! The crate is `no_std` and needs only `alloc`. It provides:
//!
//! - [`f2linalg`]: packed GF(2) matrices with rank, column-space tests,
//!   solving and Kronecker products.
//! - [`graphs`]: the [`Graph`] type, `Sp(2m,2)` and the other small named
//!   graphs, exact SRG certification and the `P0`/`P±` parameter families.
//! - [`hadamard`]: ±1 matrices and the graph `(J − H)/2` of a graphical one.
//! - [`switching`]: Seidel and Godsil-McKay switching.
//! - [`product`]: the `⊗H` graph product, its 2-rank rule, and the
//!   recursive construction of large SRGs with prescribed 2-rank.
//! - [`search`]: greedy GM-switching search and transcript replay.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod f2linalg;
pub mod graphs;
pub mod hadamard;
pub mod product;
pub mod search;
pub mod switching;

pub use error::{Error, Result};
pub use f2linalg::{F2Matrix, F2Vector};
pub use graphs::{check_srg, srg_params, Family, Graph, SrgParams};
pub use hadamard::SignMatrix;
pub use product::{NamedGraph, ProductPlan};
pub use search::{SearchConfig, SearchReport, Transcript};
pub use switching::VertexSet;
