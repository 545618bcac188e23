//! Queer crystals of words: operators, explicit odd rules, component graphs
//! and axiom checkers.

pub mod axioms;
pub mod component;
pub mod crosscheck;
pub mod crystal;
pub mod error;
pub mod graph;
pub mod index;
pub mod io;
pub mod odd;
pub mod operators;
pub mod sweep;
pub mod word;

pub use axioms::{verify_component, verify_graph, AxiomReport, Family, Violation};
pub use component::{generate_component, QueerComponent, TypeAClass};
pub use crystal::{AbstractCrystalGraph, LabelKind};
pub use error::{Error, Result};
pub use graph::{build_g, build_gbar, build_gtilde, ComponentGraph, EdgeLabel, GraphKind};
pub use index::CrystalIndex;
pub use operators::OpResult;
pub use word::{Letter, Weight, Word};
