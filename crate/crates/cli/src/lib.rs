//! Report documents of the `homdim` command-line tool, shared with its tests.

pub mod report;
