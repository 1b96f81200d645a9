pub mod algebra;
pub mod error;
pub mod linalg;
pub mod structure;
pub mod catalog;
pub mod homology;
pub mod trivext;
pub mod sample;
pub mod gorenstein;
pub mod morita;
