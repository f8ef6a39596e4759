//! Files, threads and the command line around `forge-core`.

pub mod cert;
pub mod cli;
pub mod format;
pub mod search;
