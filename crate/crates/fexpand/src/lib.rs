//! File formats, reproduction scenarios and the `fexpand` command line,
//! on top of [`fexpand_core`].

pub mod cli;
pub mod formats;
pub mod repro;
