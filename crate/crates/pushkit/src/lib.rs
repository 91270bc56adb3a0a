//! Std companion to `pushcore`: text formats, DOT export, and the CLI.

pub mod cli;
pub mod dot;
pub mod format;
