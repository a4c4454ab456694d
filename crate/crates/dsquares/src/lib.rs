//! Command-line companion to `dsquares-core`: word input, JSON and text
//! reports, figure renderings, and parallel resumable exhaustive runs.

pub mod cursor;
pub mod figures;
pub mod input;
pub mod report;
pub mod run;
