//! Thickness of Kronecker products with K₂: graph model, planarity testing,
//! closed-form bounds, explicit planar decompositions and their verification.

pub mod bounds;
pub mod constructions;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod planarity;
pub mod products;
pub mod verification;
