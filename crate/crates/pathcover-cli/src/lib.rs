//! Support library for the `pathcover` binary.
//!
//! The binary itself only parses command line arguments and dispatches into
//! [`run`] and [`bench`]. Everything that is worth testing directly lives
//! here: graph document parsing ([`formats`]), run statistics ([`stats`]),
//! and the drivers behind each subcommand.

pub mod bench;
pub mod formats;
pub mod run;
pub mod stats;
