//! Command-line front end for `ncdet-core`: matrix files, deterministic
//! random matrices, verification suites and the `ncdet` commands.

pub mod app;
pub mod format;
pub mod random;
pub mod verify;

pub use app::{main_from, Cli, Outcome};
