//! Command-line front end and file formats for `cambrian-core`.

pub mod cli;
pub mod dot;
pub mod io;
pub mod project;
