//! Exact first Zagreb index computations over graphs and their orientations,
//! with the machinery needed to certify extremal values over whole graph
//! classes: graph and orientation types, exact index routines, maximum
//! matching, canonical labeling, isomorphism-free enumeration of small
//! unicyclic and bicyclic classes, and a verification engine that scans
//! every orientation of every class member against closed-form bounds.

pub mod canon;
pub mod construct;
pub mod enumerate;
pub mod graph;
pub mod indices;
pub mod io;
pub mod matching;
pub mod sample;
pub mod verify;

pub use canon::{CanonError, CanonicalLabel};
pub use enumerate::{ClassQuery, Family};
pub use graph::{DegreeVector, Graph, GraphError, Orientation};
pub use indices::ZValue;
pub use matching::MatchingCertificate;
pub use verify::{ExtremalReport, Verdict};
