//! Free graded modules, homogeneous matrices over the polynomial ring,
//! chain complexes, tensor products with Koszul signs, Gaussian
//! simplification and exact per-degree-slice homology.
//!
//! All complexes are finite complexes of free left modules over
//! `Q[x_1..x_n]`; the right action of each `x'_i` is stored as an explicit
//! matrix per homological slot, so matrix entries only ever involve the left
//! variables. Slice computations are independent per tri-degree and run in
//! parallel; complexes are immutable after construction.

mod complex;
mod echelon;
mod simplify;
mod slice;
mod table;

pub use complex::{ChainComplex, GradedFreeModule, Operator, SparseMat, TensorIndex};
pub use echelon::{
    kernel_of_columns, rank_of_columns, sv_axpy, ColEchelon, SparseVec, Subquotient,
};
pub use simplify::{elim_step, gaussian_simplify, identity_between, Simplification};
pub use slice::{homology_dims, slice_basis, slice_matrix, x_monomials, SliceBasis};
pub use table::{TableMeta, TriGradedTable, Window};
