//! Document formats and subcommand bodies behind the `framekit` binary.

pub mod commands;
pub mod document;
pub mod fusion_doc;
