use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::basis::{chain_basis, cochain_basis};
use super::chain::{boundary_matrix, Coefficients};
use super::cochain::coboundary_matrix;
use super::linalg::exact_rank;
use super::ComplexError;
use crate::exec::Execution;
use crate::structure::PoissonStructure;

/// Dimensions per graded cell (n, w).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DimTable {
    cells: BTreeMap<(usize, i64), usize>,
}

impl DimTable {
    pub fn insert(&mut self, n: usize, w: i64, dim: usize) {
        self.cells.insert((n, w), dim);
    }

    /// Dimension at (n, w); `None` if the cell is outside the computed window.
    pub fn get(&self, n: usize, w: i64) -> Option<usize> {
        self.cells.get(&(n, w)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, usize)> + '_ {
        self.cells.iter().map(|(&(n, w), &d)| (n, w, d))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Tab-separated `n, w, dim` rows with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tw\tdim\n");
        for (n, w, d) in self.iter() {
            let _ = writeln!(out, "{n}\t{w}\t{d}");
        }
        out
    }

    /// Aligned text grid: one row per degree n, one column per weight w.
    pub fn to_text(&self) -> String {
        let weights: BTreeSet<i64> = self.cells.keys().map(|&(_, w)| w).collect();
        let degrees: BTreeSet<usize> = self.cells.keys().map(|&(n, _)| n).collect();
        let mut out = String::from("n\\w");
        for w in &weights {
            let _ = write!(out, "{w:>5}");
        }
        out.push('\n');
        for n in degrees {
            let _ = write!(out, "{n:>3}");
            for &w in &weights {
                match self.get(n, w) {
                    Some(d) => {
                        let _ = write!(out, "{d:>5}");
                    }
                    None => out.push_str("    ."),
                }
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Map {
    Boundary(usize, i64),
    Coboundary(usize, i64),
}

fn ranks(
    maps: BTreeSet<Map>,
    coeff: Coefficients,
    s: &PoissonStructure,
    exec: Execution,
) -> Result<BTreeMap<Map, usize>, ComplexError> {
    let keys: Vec<Map> = maps.into_iter().collect();
    let results = exec.map(keys.clone(), |m| -> Result<usize, ComplexError> {
        let cell = match m {
            Map::Boundary(n, w) => boundary_matrix(n, w, coeff, s)?,
            Map::Coboundary(n, w) => coboundary_matrix(n, w, s)?,
        };
        Ok(exact_rank(&cell.matrix).0)
    });
    keys.into_iter()
        .zip(results)
        .map(|(k, r)| r.map(|r| (k, r)))
        .collect()
}

/// dim HP_n(A, N)_w for 0 ≤ n ≤ ℓ and 0 ≤ w ≤ `max_weight`.
pub fn homology_dims(
    s: &PoissonStructure,
    coeff: Coefficients,
    max_weight: i64,
) -> Result<DimTable, ComplexError> {
    homology_dims_with(Execution::default(), s, coeff, max_weight)
}

pub fn homology_dims_with(
    exec: Execution,
    s: &PoissonStructure,
    coeff: Coefficients,
    max_weight: i64,
) -> Result<DimTable, ComplexError> {
    homology_window(exec, s, coeff, 0, max_weight)
}

/// Homology over an arbitrary weight window `lo..=hi`.
pub fn homology_window(
    exec: Execution,
    s: &PoissonStructure,
    coeff: Coefficients,
    lo: i64,
    hi: i64,
) -> Result<DimTable, ComplexError> {
    let shift = s.weight_shift()?;
    let l = s.nvars();
    let mut maps = BTreeSet::new();
    for n in 0..=l {
        for w in lo..=hi {
            if n > 0 {
                maps.insert(Map::Boundary(n, w));
            }
            if n < l {
                maps.insert(Map::Boundary(n + 1, w - shift));
            }
        }
    }
    let r = ranks(maps, coeff, s, exec)?;
    let mut table = DimTable::default();
    for n in 0..=l {
        for w in lo..=hi {
            let size = chain_basis(n, w, s.vars()).len();
            let out_rank = if n > 0 { r[&Map::Boundary(n, w)] } else { 0 };
            let in_rank = if n < l {
                r[&Map::Boundary(n + 1, w - shift)]
            } else {
                0
            };
            table.insert(n, w, size - out_rank - in_rank);
        }
    }
    Ok(table)
}

/// dim HP^n(A)_w for 0 ≤ n ≤ ℓ and `lo` ≤ w ≤ `hi` (cochain weights may be negative).
pub fn cohomology_dims(s: &PoissonStructure, lo: i64, hi: i64) -> Result<DimTable, ComplexError> {
    cohomology_dims_with(Execution::default(), s, lo, hi)
}

pub fn cohomology_dims_with(
    exec: Execution,
    s: &PoissonStructure,
    lo: i64,
    hi: i64,
) -> Result<DimTable, ComplexError> {
    let shift = s.weight_shift()?;
    let l = s.nvars();
    let mut maps = BTreeSet::new();
    for n in 0..=l {
        for w in lo..=hi {
            if n < l {
                maps.insert(Map::Coboundary(n, w));
            }
            if n > 0 {
                maps.insert(Map::Coboundary(n - 1, w - shift));
            }
        }
    }
    let r = ranks(maps, Coefficients::Canonical, s, exec)?;
    let mut table = DimTable::default();
    for n in 0..=l {
        for w in lo..=hi {
            let size = cochain_basis(n, w, s.vars()).len();
            let out_rank = if n < l { r[&Map::Coboundary(n, w)] } else { 0 };
            let in_rank = if n > 0 {
                r[&Map::Coboundary(n - 1, w - shift)]
            } else {
                0
            };
            table.insert(n, w, size - out_rank - in_rank);
        }
    }
    Ok(table)
}
