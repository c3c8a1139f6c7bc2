//! Rendering and self-check support for the `spiked` command.

pub mod format;
pub mod verify;
