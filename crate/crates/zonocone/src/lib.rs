//! Input formats, JSON exports, parallel censuses and the command
//! implementations of the `zonocone` tool, on top of [`zonocone_core`].

pub mod census;
pub mod commands;
pub mod error;
pub mod input;
pub mod json;

pub use error::{AppError, AppResult};
pub use zonocone_core;
