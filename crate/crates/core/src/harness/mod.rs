//! File formats, corpus runner and verification reports.

pub mod corpus;
pub mod parse;
pub mod report;
pub mod run;
