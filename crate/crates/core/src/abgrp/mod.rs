mod colimit;
mod group;
mod lattice;

pub use colimit::{colimit_structure, Colimit, ColimitSummary, ColimitTower, MAX_LEVEL};
pub use group::{in_localization, CokernelReport, FracGroup, GenKind, GroupHom, DEFAULT_CAP, DEFAULT_WINDOW};
pub use lattice::{Lattice, QuotientInvariants};
