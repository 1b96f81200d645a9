//! Workspace files, command dispatch and verdict reports for the `trivext`
//! binary.

pub mod corpus;
pub mod report;
pub mod workspace;

pub use report::{run, Command, Flags, Report, REPORT_SCHEMA_VERSION};
pub use workspace::{Workspace, WorkspaceFile, SCHEMA_VERSION};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported schema_version {0} (expected 1)")]
    Schema(u32),
    #[error("validation error: {0}")]
    Invalid(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("`{0}`: {1}")]
    Unqualified(String, String),
}
