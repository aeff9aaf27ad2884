//! Text formats: ideal and Rees input files, table rendering, JSON and CSV.

pub mod ideal_file;
pub mod json;
pub mod rees_file;
pub mod render;

pub use ideal_file::{parse_ideal, write_ideal, ParsedIdeal};
pub use rees_file::{parse_rees, write_rees};
pub use render::{parse_rendered_table, render_table, Layout};
