//! Symmetric functions in two variables and the combinatorial numbers that
//! show up in the closed formulas.

mod kostka;
mod numbers;
mod partition;
mod schur;

pub use kostka::kostka;
pub use numbers::{binomial, catalan, factorial, riordan, stirling_first};
pub use partition::Partition;
pub use schur::{
    chern_to_roots, chern_to_schur, complete_h_expand, complete_h_in, divided_difference,
    divided_difference_in, schur_expand, schur_expand_in, schur_polynomial, schur_polynomial_in,
    schur_to_chern, schur_to_roots, schur_to_roots_in, SchurExpansion, SchurIndex,
};
