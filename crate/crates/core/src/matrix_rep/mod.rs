//! Exact matrices over Q, the hyperoctahedral group and the functors from
//! diagram categories to its representations.

mod functors;
mod group;
mod interp;
mod matrix;

pub use functors::{
    functor_g, functor_g_karoubi, functor_g_object, functor_h, functor_h_karoubi, functor_h_object,
    is_idempotent, split_idempotent, MatrixDatum, Splitting,
};
pub use group::{perm_basis_index, GroupElement, Monomial, RepKind, RepSpec};
pub use interp::{
    averaging_projector, equivariance_check, hom_dim, span_rank, t_colored, t_even, t_partition,
    MatrixRepError, HOM_DIM_LIMIT,
};
pub use matrix::{axpy, rank_of, EchelonSpan, MatrixJson, MatrixQ, SparseVec};
