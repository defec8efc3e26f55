//! Command-line front end for the `z2z4` library: the generator-matrix file
//! format and the commands of the `z2z4` binary.

pub mod app;
pub mod codefile;

pub use app::{run, CliError, Outcome, CAP_ENV};
pub use codefile::{format_row, parse_code_file, print_code_file, ParseError};
