//! File formats, a parallel GM-set scanner and the `srgswitch` command-line
//! tool on top of [`srgswitch_core`].
//!
//! - [`graph6`]: the graph6 interchange format.
//! - [`signs`]: ±1 matrices as `+`/`-` text.
//! - [`transcript`]: switching transcripts as JSON.
//! - [`tables`]: the bundled switching tables.
//! - [`parallel`]: a rayon [`Scanner`](srgswitch_core::search::Scanner).

pub mod error;
pub mod graph6;
pub mod parallel;
pub mod signs;
pub mod tables;
pub mod transcript;

pub use error::{IoError, IoResult};
