//! Exact diagram categories for the hyperoctahedral group.

pub mod category;
pub mod diagrams;
pub mod matrix_rep;
pub mod omega;
pub mod poly;
pub mod presentations;
pub mod rank;
pub mod report;
pub mod suites;
