use std::collections::BTreeMap;

use super::basis::{cochain_basis, MultiIndex};
use super::chain::{scatter, GradedComplexCell};
use super::linalg::SparseMatrix;
use super::ComplexError;
use crate::poly::Polynomial;
use crate::structure::PoissonStructure;

/// An alternating n-multiderivation, stored by its values F(dx_I) on every increasing I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub order: usize,
    pub values: BTreeMap<MultiIndex, Polynomial>,
}

impl Cochain {
    pub fn zero(order: usize, nvars: usize) -> Self {
        Cochain {
            order,
            values: MultiIndex::all(nvars, order)
                .into_iter()
                .map(|i| (i, Polynomial::zero(nvars)))
                .collect(),
        }
    }

    /// The basis cochain sending dx_idx to `m` and every other dx_J to 0.
    pub fn single(nvars: usize, idx: MultiIndex, m: Polynomial) -> Self {
        let mut c = Cochain::zero(idx.len(), nvars);
        c.values.insert(idx, m);
        c
    }

    pub fn value(&self, idx: &MultiIndex) -> &Polynomial {
        &self.values[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Polynomial::is_zero)
    }
}

/// (δF)(dx_{i₀}⋯dx_{iₙ}) = Σ_r (−1)^r {x_{i_r}, F(⋯ŷ_r⋯)}
///                       + Σ_{r<s} (−1)^{r+s} F(d(P_{i_r i_s}) ∧ ⋯ŷ_r⋯ŷ_s⋯).
pub fn coboundary(f: &Cochain, s: &PoissonStructure) -> Cochain {
    let n = s.nvars();
    let mut out = Cochain::zero(f.order + 1, n);
    for (idx, slot) in out.values.iter_mut() {
        let ii = idx.indices();
        let mut acc = Polynomial::zero(n);
        for r in 0..ii.len() {
            let t = s.ham(ii[r], f.value(&idx.without(r)));
            if r % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
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
                    let Some((neg, arg)) = rest.wedge_front(k) else {
                        continue;
                    };
                    let val = f.value(&arg);
                    if val.is_zero() {
                        continue;
                    }
                    let dp = p.diff(k);
                    if dp.is_zero() {
                        continue;
                    }
                    let t = &dp * val;
                    if positive != neg {
                        acc += t;
                    } else {
                        acc -= t;
                    }
                }
            }
        }
        *slot = acc;
    }
    out
}

/// Coboundary matrix from cochain cell (n, w) to (n + 1, w + d − 2).
pub fn coboundary_matrix(
    n: usize,
    w: i64,
    s: &PoissonStructure,
) -> Result<GradedComplexCell, ComplexError> {
    let shift = s.weight_shift()?;
    let nv = s.nvars();
    let source = cochain_basis(n, w, s.vars());
    let target = cochain_basis(n + 1, w + shift, s.vars());
    let mut matrix = SparseMatrix::zeros(target.len(), source.len());
    if n < nv {
        for (col, (m, idx)) in source.elements().iter().enumerate() {
            let f = Cochain::single(
                nv,
                idx.clone(),
                Polynomial::term(m.clone(), num_traits::One::one()),
            );
            let d = coboundary(&f, s);
            for (tidx, val) in &d.values {
                scatter(&mut matrix, &target, col, tidx, val);
            }
        }
    }
    Ok(GradedComplexCell {
        source: (n, w),
        target: (n + 1, w + shift),
        matrix,
    })
}
