//! File formats and command-line front end for `jjalg`.

pub mod cli;
pub mod doc;
pub mod render;
