mod common;

use common::{casimir_dim, catalog_structures, dense_rank, hp0_dim};
use poisson_core::complexes::{
    boundary_matrix, chain_basis, coboundary_matrix, cochain_basis, cohomology_dims, exact_rank,
    homology_dims, Coefficients, SparseMatrix,
};
use poisson_core::rat;
use proptest::prelude::*;

const W: i64 = 6;

#[test]
fn boundary_squares_to_zero() {
    for (id, s) in catalog_structures() {
        let shift = s.weight_shift().unwrap();
        for coeff in [Coefficients::Canonical, Coefficients::Omega] {
            for n in 2..=s.nvars() {
                for w in 0..=W {
                    let first = boundary_matrix(n, w, coeff, &s).unwrap();
                    let second = boundary_matrix(n - 1, w + shift, coeff, &s).unwrap();
                    assert_eq!(first.target, second.source);
                    assert!(
                        second.matrix.mul(&first.matrix).is_zero(),
                        "{id} {coeff:?} ({n}, {w})"
                    );
                }
            }
        }
    }
}

#[test]
fn coboundary_squares_to_zero() {
    for (id, s) in catalog_structures() {
        let shift = s.weight_shift().unwrap();
        let total = s.vars().total_weight();
        for n in 0..s.nvars().saturating_sub(1) {
            for w in -total..=W {
                let first = coboundary_matrix(n, w, &s).unwrap();
                let second = coboundary_matrix(n + 1, w + shift, &s).unwrap();
                assert!(
                    second.matrix.mul(&first.matrix).is_zero(),
                    "{id} ({n}, {w})"
                );
            }
        }
    }
}

/// Along each orbit (n, w₀ − n·shift) of the differential, Σ(−1)^n dim C = Σ(−1)^n dim H.
#[test]
fn euler_characteristic() {
    for (id, s) in catalog_structures() {
        let shift = s.weight_shift().unwrap();
        let l = s.nvars() as i64;
        let reach = W + l * shift.abs();
        let h = homology_dims(&s, Coefficients::Omega, reach).unwrap();
        for w0 in 0..=W {
            let (mut chi_c, mut chi_h) = (0i64, 0i64);
            for n in 0..=l {
                let w = w0 - n * shift;
                if !(0..=reach).contains(&w) {
                    continue;
                }
                let sign = if n % 2 == 0 { 1 } else { -1 };
                chi_c += sign * chain_basis(n as usize, w, s.vars()).len() as i64;
                chi_h += sign * h.get(n as usize, w).unwrap() as i64;
            }
            assert_eq!(chi_c, chi_h, "{id} w0={w0}");
        }
    }
}

#[test]
fn unimodular_twist_is_invisible() {
    for (id, s) in catalog_structures() {
        if !s.modular_data().unimodular {
            continue;
        }
        for n in 0..=s.nvars() {
            for w in 0..=W {
                let a = boundary_matrix(n, w, Coefficients::Canonical, &s).unwrap();
                let b = boundary_matrix(n, w, Coefficients::Omega, &s).unwrap();
                assert_eq!(a.matrix, b.matrix, "{id} ({n}, {w})");
            }
        }
    }
}

#[test]
fn degree_zero_matches_oracles() {
    for (id, s) in catalog_structures() {
        let coh = cohomology_dims(&s, 0, W).unwrap();
        let hom = homology_dims(&s, Coefficients::Canonical, W).unwrap();
        for w in 0..=W {
            assert_eq!(
                coh.get(0, w),
                Some(casimir_dim(&s, w as u64)),
                "{id} HP^0 w={w}"
            );
            assert_eq!(
                hom.get(0, w),
                Some(hp0_dim(&s, w as u64)),
                "{id} HP_0 w={w}"
            );
        }
    }
}

#[test]
fn top_cochain_cells_match_chain_cells() {
    for (_, s) in catalog_structures() {
        let l = s.nvars();
        let total = s.vars().total_weight();
        for n in 0..=l {
            for w in 0..=W {
                // F ↦ its values on the complement wedge identifies the two bases
                assert_eq!(
                    chain_basis(n, w, s.vars()).len(),
                    cochain_basis(l - n, w - total, s.vars()).len()
                );
            }
        }
    }
}

/// Without the twist the comparison must break for a non-unimodular bracket.
#[test]
fn untwisted_homology_breaks_duality() {
    for id in ["logcan2", "logcan3"] {
        let s = poisson_core::catalog::get(id).unwrap().structure();
        let l = s.nvars();
        let total = s.vars().total_weight();
        let hom = homology_dims(&s, Coefficients::Canonical, W).unwrap();
        let coh = cohomology_dims(&s, -total, W).unwrap();
        let mismatches = (0..=l)
            .flat_map(|n| (0..=W).map(move |w| (n, w)))
            .filter(|&(n, w)| hom.get(n, w) != coh.get(l - n, w - total))
            .count();
        assert!(mismatches > 0, "{id}");
    }
}

proptest! {
    #[test]
    fn sparse_rank_matches_dense(
        rows in 1usize..7,
        cols in 1usize..7,
        entries in proptest::collection::vec((-3i64..=3, 1i64..=3), 49),
        zero_mask in proptest::collection::vec(any::<bool>(), 49),
    ) {
        let mut dense = vec![vec![rat(0, 1); cols]; rows];
        for r in 0..rows {
            for c in 0..cols {
                let k = r * 7 + c;
                if !zero_mask[k] {
                    dense[r][c] = rat(entries[k].0, entries[k].1);
                }
            }
        }
        let (rank, kernel) = exact_rank(&SparseMatrix::from_dense(&dense));
        prop_assert_eq!(rank, dense_rank(dense));
        prop_assert_eq!(rank + kernel, cols);
    }
}
