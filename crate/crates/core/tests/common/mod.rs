//! Independent oracles shared by the integration tests. Nothing here calls into the
//! complexes module: ranks use plain dense elimination over ℚ.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::Zero;
use poisson_core::poly::monomials_of_weight;
use poisson_core::{catalog, Monomial, PoissonStructure, Polynomial, Rational};

pub fn catalog_structures() -> Vec<(&'static str, PoissonStructure)> {
    catalog::entries()
        .into_iter()
        .map(|e| (e.id, e.structure()))
        .collect()
}

/// Rank of a dense rational matrix by textbook Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for k in c..ncols {
                    let sub = &f * &rows[rank][k];
                    rows[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the span of a family of polynomials.
pub fn span_rank(polys: &[Polynomial]) -> usize {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let k = index.len();
            index.entry(m.clone()).or_insert(k);
        }
    }
    let rows = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    dense_rank(rows)
}

fn weight_of(s: &PoissonStructure, m: &Monomial) -> u64 {
    m.weighted_degree(s.vars().weights())
}

/// dim of the Casimirs of weight w: kernel of f ↦ ({x_1, f}, …, {x_ℓ, f}) on A_w.
pub fn casimir_dim(s: &PoissonStructure, w: u64) -> usize {
    let n = s.nvars();
    let basis = monomials_of_weight(s.vars().weights(), w);
    // Stack the ℓ Hamiltonian images of each monomial into one long polynomial in 2ℓ
    // variables: the image in slot i is multiplied by the marker variable y_i.
    let images: Vec<Polynomial> = basis
        .iter()
        .map(|m| {
            let f = Polynomial::term(m.clone(), Rational::from_integer(1.into()));
            let mut stacked = Polynomial::zero(2 * n);
            for i in 0..n {
                for (mm, c) in s.ham(i, &f).terms() {
                    let mut e = mm.0.clone();
                    e.extend(std::iter::repeat_n(0, n));
                    e[n + i] = 1;
                    stacked.add_term(Monomial(e), c.clone());
                }
            }
            stacked
        })
        .collect();
    basis.len() - span_rank(&images)
}

/// dim (A / {A, A})_w, enumerating brackets of monomial pairs landing in weight w.
pub fn hp0_dim(s: &PoissonStructure, w: u64) -> usize {
    let weights = s.vars().weights();
    let target = monomials_of_weight(weights, w).len();
    let Some(d) = s.homogeneity_degree() else {
        return target;
    };
    let shift = d - 2;
    let total = w as i64 - shift;
    if total < 0 {
        return target;
    }
    let mut brackets = Vec::new();
    for a in 0..=total as u64 {
        for m1 in monomials_of_weight(weights, a) {
            for m2 in monomials_of_weight(weights, total as u64 - a) {
                if m1 >= m2 {
                    continue;
                }
                let one = Rational::from_integer(1.into());
                let f = Polynomial::term(m1.clone(), one.clone());
                let g = Polynomial::term(m2, one);
                let b = s.bracket(&f, &g).unwrap();
                debug_assert!(b.terms().all(|(m, _)| weight_of(s, m) == w));
                brackets.push(b);
            }
        }
    }
    target - span_rank(&brackets)
}
