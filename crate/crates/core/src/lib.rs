//! Invariants, constructions and exhaustive enumeration for almost
//! self-centered (ASC) and almost peripheral (AP) graphs.

pub mod canon;
pub mod classify;
pub mod constructors;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod metrics;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_graph};
pub use enumeration::{count_classes, enumerate, scan, GenSpec, ScanResult};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use metrics::EccProfile;
