//! File-system and command-line side of guj2hin: configuration, resource
//! loading, corpus directories, lexicon snapshots and the subcommands.

pub mod commands;
pub mod config;
pub mod corpus;
pub mod resources;
pub mod snapshot;
