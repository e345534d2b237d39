//! Software component identification from class dependency graphs.
//!
//! The crate is organised as a pipeline:
//!
//! * [`depgraph`] extracts a weighted class dependency graph from Java sources
//!   and reads/writes it as a tab-separated edge list.
//! * [`communities`] partitions the symmetrized graph with Leiden (modularity)
//!   and Infomap (two-level map equation), and exposes both quality functions.
//! * [`lexsem`] turns each class into a document (names, identifiers) and then
//!   into vectors: TF-IDF, averaged word vectors, or imported dense embeddings.
//! * [`semmetrics`] scores a partition against an embedding: cohesion,
//!   separation, silhouette and the dependency/similarity correlation.
//! * [`pipeline`] runs projects end to end and aggregates Leiden vs Infomap
//!   win counts across a corpus.

pub mod communities;
pub mod depgraph;
pub mod error;
mod javalex;
pub mod lexsem;
pub mod pipeline;
pub mod semmetrics;

pub use communities::{infomap, leiden, map_equation, modularity, Algorithm, CdParams, Partition};
pub use depgraph::{extract_dependencies, symmetrize, DependencyGraph, LanguageProfile, UndirectedGraph};
pub use error::{Error, Result};
pub use lexsem::{EmbeddingMatrix, Scheme, TokenDocument, WordVectorTable};
pub use pipeline::{aggregate, analyze_project, emit_outputs, run_corpus, AggregateReport, Project, RunConfig};
pub use semmetrics::{filter_small, CommunitySet, MetricsReport};
