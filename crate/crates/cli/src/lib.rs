//! Report construction, table rendering, and JSON validation backing the
//! `skewpbw` binary. Split from the binary so the test suites can build
//! reports and validate command output through the same code paths.

pub mod report;
pub mod schema;
pub mod table;
