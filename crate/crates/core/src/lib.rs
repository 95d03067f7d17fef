//! Exact counting of lozenge tilings on the triangular lattice, closed forms
//! for the families of regions that carry them, and grid verification of the
//! identities tying the two together.

pub mod builders;
pub mod cli;
pub mod corpus;
pub mod count;
pub mod formulas;
pub mod identities;
pub mod lattice;
pub mod number;
pub mod svg;

pub use builders::{DParams, RgFamily};
pub use count::{count_weighted, CountResult};
pub use lattice::{Region, UnitTriangle};
pub use number::ExactNumber;
