pub mod classical;
pub mod config;
pub mod error;
pub mod fm;
pub mod free;
pub mod generators;
pub mod matrix;
pub mod params;
pub mod pbw;
pub mod relations;
pub mod reps;
pub mod roots;
pub mod runner;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod span;

pub use error::{Error, Result};
pub use free::{Gen, Mono, NCPoly};
pub use params::FMParams;
pub use relations::{defining_relations, derived_relations, Relation, RelationSet};
pub use scalar::{elementary_symmetric, qbracket, LaurentQ, RatFuncQ};
