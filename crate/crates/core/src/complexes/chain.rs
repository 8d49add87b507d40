use std::collections::BTreeMap;

use num_traits::Zero;

use super::basis::{chain_basis, ChainBasis, MultiIndex};
use super::linalg::SparseMatrix;
use super::ComplexError;
use crate::poly::Polynomial;
use crate::structure::PoissonStructure;

/// Right A^pe-module tensored against the resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    /// A itself: m·h_{x_i} = −{x_i, m}.
    Canonical,
    /// ω_A ≅ A with m·h_{x_i} = −{x_i, m} + m·tr(dx_i).
    Omega,
}

impl std::str::FromStr for Coefficients {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "canonical" => Ok(Coefficients::Canonical),
            "omega" => Ok(Coefficients::Omega),
            other => Err(format!(
                "unknown coefficient system `{other}` (expected canonical|omega)"
            )),
        }
    }
}

/// Element Σ_I m_I ⊗ dx_I of N ⊗_{A^pe} C_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub terms: BTreeMap<MultiIndex, Polynomial>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(m: Polynomial, idx: MultiIndex) -> Self {
        let mut c = Chain::zero(idx.len());
        c.add(idx, m);
        c
    }

    pub fn add(&mut self, idx: MultiIndex, m: Polynomial) {
        if m.is_zero() {
            return;
        }
        debug_assert_eq!(idx.len(), self.degree);
        let slot = self
            .terms
            .entry(idx)
            .or_insert_with(|| Polynomial::zero(m.nvars()));
        *slot += m;
        self.terms.retain(|_, p| !p.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Polynomial::is_zero)
    }
}

/// Per-structure data for applying the boundary.
pub(crate) struct RightAction<'a> {
    s: &'a PoissonStructure,
    traces: Option<Vec<Polynomial>>,
}

impl<'a> RightAction<'a> {
    pub(crate) fn new(s: &'a PoissonStructure, coeff: Coefficients) -> Self {
        let traces = match coeff {
            Coefficients::Canonical => None,
            Coefficients::Omega => Some(s.modular_data().traces),
        };
        RightAction { s, traces }
    }

    fn act(&self, m: &Polynomial, i: usize) -> Polynomial {
        match &self.traces {
            None => -self.s.ham(i, m),
            Some(t) => self.s.omega_act(m, i, &t[i]),
        }
    }
}

pub(crate) fn boundary_with(action: &RightAction<'_>, chain: &Chain) -> Chain {
    let s = action.s;
    let n = s.nvars();
    let mut out = Chain::zero(chain.degree.saturating_sub(1));
    if chain.degree == 0 {
        return out;
    }
    for (idx, m) in &chain.terms {
        let ii = idx.indices();
        for r in 0..ii.len() {
            let t = action.act(m, ii[r]);
            out.add(idx.without(r), if r % 2 == 0 { t } else { -t });
        }
        for r in 0..ii.len() {
            for q in r + 1..ii.len() {
                let p = s.entry(ii[r], ii[q]);
                if p.is_zero() {
                    continue;
                }
                let rest = idx.without_two(r, q);
                let positive = (r + q) % 2 == 0;
                for k in 0..n {
                    let dp = p.diff(k);
                    if dp.is_zero() {
                        continue;
                    }
                    if let Some((neg, target)) = rest.wedge_front(k) {
                        let t = m * &dp;
                        out.add(target, if positive != neg { t } else { -t });
                    }
                }
            }
        }
    }
    out
}

/// The differential of N ⊗_{A^pe} C_*:
/// ∂(m ⊗ dx_I) = Σ_r (−1)^{r+1} (m·h_{i_r}) ⊗ dx_{I∖i_r}
///             + Σ_{r<s} (−1)^{r+s} m ⊗ d(P_{i_r i_s}) ∧ dx_{I∖{i_r,i_s}}.
pub fn boundary(chain: &Chain, coeff: Coefficients, s: &PoissonStructure) -> Chain {
    boundary_with(&RightAction::new(s, coeff), chain)
}

/// Matrix of a differential restricted to one graded cell. Columns index the source basis,
/// rows the target basis.
#[derive(Clone, Debug)]
pub struct GradedComplexCell {
    pub source: (usize, i64),
    pub target: (usize, i64),
    pub matrix: SparseMatrix,
}

/// Expands `poly ⊗ dx_idx` in `basis`, accumulating column `col`.
pub(crate) fn scatter(
    matrix: &mut SparseMatrix,
    basis: &ChainBasis,
    col: usize,
    idx: &MultiIndex,
    poly: &Polynomial,
) {
    for (m, c) in poly.terms() {
        let row = basis.index_of(m, idx).unwrap_or_else(|| {
            panic!(
                "term outside target cell (n={}, w={}): weight bookkeeping violated",
                basis.degree, basis.weight
            )
        });
        if !c.is_zero() {
            matrix.add_entry(row, col, c.clone());
        }
    }
}

/// Boundary matrix from cell (n, w) to (n − 1, w + d − 2).
pub fn boundary_matrix(
    n: usize,
    w: i64,
    coeff: Coefficients,
    s: &PoissonStructure,
) -> Result<GradedComplexCell, ComplexError> {
    let shift = s.weight_shift()?;
    let source = chain_basis(n, w, s.vars());
    let tn = n.saturating_sub(1);
    let tw = w + shift;
    if n == 0 {
        return Ok(GradedComplexCell {
            source: (0, w),
            target: (0, tw),
            matrix: SparseMatrix::zeros(0, source.len()),
        });
    }
    let target = chain_basis(tn, tw, s.vars());
    let mut matrix = SparseMatrix::zeros(target.len(), source.len());
    let action = RightAction::new(s, coeff);
    let nv = s.nvars();
    for (col, (m, idx)) in source.elements().iter().enumerate() {
        let c = Chain::single(
            Polynomial::term(m.clone(), num_traits::One::one()),
            idx.clone(),
        );
        debug_assert_eq!(m.nvars(), nv);
        let b = boundary_with(&action, &c);
        for (tidx, poly) in &b.terms {
            scatter(&mut matrix, &target, col, tidx, poly);
        }
    }
    Ok(GradedComplexCell {
        source: (n, w),
        target: (tn, tw),
        matrix,
    })
}
