//! Command-line front end: file formats, report rendering and subcommands.

pub mod commands;
pub mod fixtures;
pub mod format;
pub mod report;

pub use commands::{run, Outcome};
