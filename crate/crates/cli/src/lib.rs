//! File formats, JSON artifacts and the command-line driver for
//! [`hconvex_core`].

pub mod app;
pub mod error;
pub mod format;
pub mod genspec;
pub mod json;
pub mod report;

pub use error::{CliError, FormatError, ParseError};
pub use format::{parse_graph, serialize_graph, GraphFile, Names};
