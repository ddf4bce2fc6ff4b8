//! Task-file front-end for the verification engine: a line-oriented DSL
//! for spaces, bundles, maps, and tasks, an exporter that writes the
//! built-in catalog back out in the same format, and TSV/JSON report
//! emitters.

pub mod dsl;
pub mod export;
pub mod report;
