//! Library side of the `cicy-gg` command: verification checks and report rendering.

pub mod render;
pub mod verify;

pub use verify::{run_checks, CheckLine, MODULES};
