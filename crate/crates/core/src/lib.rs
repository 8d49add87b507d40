//! Exact computation of Poisson homology and cohomology for polynomial Poisson algebras
//! k[x₁,…,x_ℓ] over ℚ, together with the enveloping algebra A^pe in PBW normal form and a
//! cell-by-cell check of the duality HP_n(A, ω_A) ≅ HP^{ℓ−n}(A).
//!
//! Modules, bottom-up:
//!
//! - [`poly`]: exact polynomials, weights, parser and printer.
//! - [`structure`]: Poisson brackets, the Lie–Rinehart algebra (A, Ω_A), traces and ω_A.
//! - [`complexes`]: graded chain/cochain complexes, exact ranks, dimension tables, duality.
//! - [`envelope`]: PBW rewriting in A^pe, filtration and quotient checks.
//! - [`document`] and [`catalog`]: JSON structure files and the built-in examples.
//!
//! ```
//! use poisson_core::complexes::{duality_report, homology_dims, Coefficients};
//! use poisson_core::{PoissonStructure, VarTable};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let vars = VarTable::new(&["x", "y"])?;
//! let s = PoissonStructure::from_text(vars, &[("x", "y", "1")])?;
//! let h = homology_dims(&s, Coefficients::Canonical, 8)?;
//! assert_eq!(h.get(2, 2), Some(1));
//! assert!(duality_report(&s, 8)?.passed());
//! # Ok(())
//! # }
//! ```

pub mod catalog;
pub mod complexes;
pub mod document;
pub mod envelope;
pub mod exec;
pub mod poly;
pub mod structure;

pub use exec::Execution;
pub use poly::{parse_poly, rat, Monomial, Polynomial, Rational, VarTable};
pub use structure::{Homogeneity, ModularData, OneForm, PoissonStructure, StructureError};
