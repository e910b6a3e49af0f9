//! File formats, parallel drivers, analysis reports and the command-line
//! front end for [`mincode_core`].

pub mod analysis;
pub mod cli;
pub mod error;
pub mod formats;
pub mod parallel;
pub mod reproduce;

pub use error::{AppError, Result};
