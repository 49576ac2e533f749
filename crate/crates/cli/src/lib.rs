//! Command-line surface, seeded corpus and theorem-verification harness for
//! `mcg-core`.

pub mod app;
pub mod corpus;
pub mod report;
pub mod verify;
