//! Finite lattices, monotone Galois connections, and the structure theory
//! built on top of them: essential and closed elements, uniform dimension,
//! closed-element correspondences, exhaustive search over small lattices and
//! connections, and subgroup lattices of finite abelian groups together with
//! the hom-set connections they induce.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`] — the core [`lattice::Lattice`] type (dense order/meet/join
//!   tables), construction from cover relations, duals, intervals, structural
//!   predicates (modular, distributive, …) and canonical forms.
//! * [`essentiality`] — essential elements, closures, uniform/UC lattices,
//!   cyclic elements, supplements, and uniform dimension.
//! * [`galois`] — monotone maps, verified Galois connections, the property
//!   classifier, and the theorem checkers (dimension comparison, closed-element
//!   correspondence, extending transfer, dual correspondence).
//! * [`search`] — exhaustive enumeration of small lattices and of all
//!   connections between two lattices, a property query language, witness
//!   search, and a whole-theory test suite runner.
//! * [`abelian`] — finite abelian groups, their subgroup lattices, hom-sets,
//!   and the two canonical connections a bimodule of homomorphisms induces.
//! * [`textio`] — plain-text formats for lattices and maps.
//! * [`report`] — JSON-serialisable report types shared with the CLI.
//! * [`fixtures`] — the named example lattices and connections used throughout
//!   the test-suite and shipped with the CLI.

pub mod abelian;
pub mod essentiality;
pub mod fixtures;
pub mod galois;
pub mod lattice;
pub mod report;
pub mod search;
pub mod textio;

pub use galois::{
    ClauseStatus, CorrespondenceMode, CorrespondenceResult, DualCorrespondenceReport,
    ExtendingReport, Flag, GaloisConnection, GaloisError, MonotoneMap, PairFlag, PropertyReport,
    UdimReport,
};
pub use lattice::{Elem, Lattice, LatticeError};
pub use report::{ConnectionReport, LatticeReport};
pub use search::{
    PropertyQuery, QueryTarget, SearchError, SuiteReport, WitnessInstance, WitnessSearch,
};
pub use textio::TextIoError;
