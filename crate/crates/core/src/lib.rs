//! Finite oriented singquandles and the coloring invariant of oriented
//! singular link diagrams.
//!
//! A carrier of size `n` is the index set `0..n`; every operation is a dense
//! table (see [`table`]). The modules split as follows:
//!
//! * [`axioms`], [`quandle`], [`singquandle`]: tables, axiom checker with
//!   witnesses, validated structures and homomorphisms.
//! * [`group`], [`constructions`]: small groups and the structure builders.
//! * [`enumerate`], [`iso`]: exhaustive structure search and isomorphism.
//! * [`diagram`], [`fixtures`], [`coloring`]: diagrams, built-in examples and
//!   coloring enumeration.
//! * [`io`]: text formats.

pub mod axioms;
pub mod coloring;
pub mod constructions;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod io;
pub mod iso;
pub mod quandle;
pub mod singquandle;
pub mod table;

pub use axioms::{check_oriented_singquandle, check_quandle, Axiom, AxiomReport, AxiomStatus, Witness};
pub use coloring::{count_colorings, counts_distinguish, enumerate_colorings, ColoringLimits, ColoringSet};
pub use diagram::{parse_diagram, serialize_diagram, validate_diagram, Crossing, CrossingKind, SingularDiagram};
pub use enumerate::{count_singquandles, enumerate_singquandles};
pub use error::{Error, Result};
pub use fixtures::fixture;
pub use group::{named_group, FiniteGroup};
pub use iso::find_isomorphism;
pub use quandle::Quandle;
pub use singquandle::{is_singquandle_homomorphism, OrientedSingquandle, StructureMap};
pub use table::{Element, OpTable};
