//! File formats, generators and the command implementations behind the
//! `starcolor` binary.

pub mod app;
pub mod bench;
pub mod error;
pub mod format;
pub mod generate;
pub mod selftest;

pub use error::{CliError, Result};
