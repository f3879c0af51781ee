//! Path algebras of Hecke-algebra representation graphs.

pub mod coxeter;
pub mod error;
pub mod examples;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod laurent;
pub mod maps;
pub mod pathalg;
pub mod reps;
pub mod rho;
pub mod universal;

pub use coxeter::{alternating_word, CoxeterDatum, CoxeterOrder, GenWord, HeckeDatum};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, SpecializationMap};
pub use graph::{import_kl_wgraph, DGraph, PreDGraph, Quiver};
pub use pathalg::{Path, PathElem};
pub use rho::{GeneratorEntry, GeneratorSet};
pub use universal::{Psi, UniversalGraph};
pub use maps::MatrixElem;
pub use reps::{FreeModuleElement, RepMatrix};
pub use io::{GraphInput, Report};
