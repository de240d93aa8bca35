//! Standard-library companion to `gridmatch-core`: file formats, OEIS
//! fixtures, table rendering, and the `gridmatch` command-line front end.

pub mod app;
pub mod oeis;
pub mod render;
pub mod tables;
