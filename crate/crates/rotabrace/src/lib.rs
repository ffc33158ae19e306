//! Catalog, file formats and the report pipeline on top of `rotabrace-core`.

pub mod catalog;
pub mod formats;
pub mod pipeline;
pub mod random;

pub use catalog::{
    builtins, load_carrier, Catalog, CatalogEntry, CatalogError, EntryKind, Provenance,
};
pub use pipeline::{
    enumerate_parallel, run_catalog, run_pipeline, CatalogReport, ClassificationReport, Options,
    PipelineError, Stage,
};
