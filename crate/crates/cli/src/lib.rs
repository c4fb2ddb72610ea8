//! Front-end for minimal rational motion synthesis: file formats, decimal
//! rendering and the subcommands of the `minmotion` binary.

pub mod commands;
pub mod decimal;
pub mod files;
