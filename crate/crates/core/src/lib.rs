//! Maximally writhed real algebraic links: invariants, chord diagrams and
//! rigid-isotopy classes.

pub mod algebra;
pub mod chord;
pub mod curve;
pub mod degree;
pub mod link;
pub mod moves;
pub mod par;
pub mod pl;

pub use par::Exec;
