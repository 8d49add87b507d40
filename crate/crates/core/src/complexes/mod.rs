//! Graded chain complex N ⊗_{A^pe} C_* (N = A or ω_A), the dual cochain complex computing
//! HP^*(A), exact per-weight dimensions, and the duality report.
//!
//! A homogeneous bracket of degree d shifts every weight by d − 2, so both complexes split
//! into finite-dimensional cells (n, w). Chain weight is deg(coefficient) plus the weights of
//! the wedge variables; cochain weight is deg(value) minus the weights of the arguments.

mod basis;
mod chain;
mod cochain;
mod dims;
mod duality;
mod linalg;

use thiserror::Error;

pub use basis::{chain_basis, cochain_basis, CellKind, ChainBasis, MultiIndex};
pub use chain::{boundary, boundary_matrix, Chain, Coefficients, GradedComplexCell};
pub use cochain::{coboundary, coboundary_matrix, Cochain};
pub use dims::{
    cohomology_dims, cohomology_dims_with, homology_dims, homology_dims_with, homology_window,
    DimTable,
};
pub use duality::{duality_report, duality_report_with, DualityFailure, DualityReport, DualityRow};
pub use linalg::{exact_rank, SparseMatrix};

use crate::structure::StructureError;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("bracket is not weighted-homogeneous; graded complexes are unavailable")]
    NonHomogeneous,
}

impl From<StructureError> for ComplexError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::NonHomogeneous => ComplexError::NonHomogeneous,
            other => unreachable!("unexpected structure error in graded computation: {other}"),
        }
    }
}
