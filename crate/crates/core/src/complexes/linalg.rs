//! Sparse exact matrices and fraction-free rank computation.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Sparse rational matrix stored column-wise; each column maps row index → nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: vec![BTreeMap::new(); ncols],
        }
    }

    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (r, c, v) in triplets {
            m.add_entry(r, c, v);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone()))),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: Rational) {
        assert!(
            r < self.nrows && c < self.cols.len(),
            "entry ({r}, {c}) out of bounds"
        );
        if v.is_zero() {
            return;
        }
        match self.cols[c].entry(r) {
            Entry::Vacant(e) => {
                e.insert(v);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.cols[c].get(&r).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, Rational> {
        &self.cols[c]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    /// Nonzero entries as (row, column, value), column-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v)))
    }

    /// The product `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "dimension mismatch in product");
        let mut out = SparseMatrix::zeros(self.nrows, rhs.ncols());
        for (c, col) in rhs.cols.iter().enumerate() {
            for (k, b) in col {
                for (r, a) in &self.cols[*k] {
                    out.add_entry(*r, c, a * b);
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut d = vec![vec![Rational::zero(); self.ncols()]; self.nrows];
        for (r, c, v) in self.triplets() {
            d[r][c] = v.clone();
        }
        d
    }
}

type IntVec = BTreeMap<usize, BigInt>;

/// Clears denominators and removes the content so the leading entry is positive.
fn primitive(col: &BTreeMap<usize, Rational>) -> IntVec {
    let lcm = col
        .values()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut out: IntVec = col
        .iter()
        .map(|(&r, v)| (r, (v * Rational::from_integer(lcm.clone())).to_integer()))
        .collect();
    normalize(&mut out);
    out
}

fn normalize(v: &mut IntVec) {
    let mut g = BigInt::zero();
    for x in v.values() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    let negate = v.values().next().is_some_and(|x| x.is_negative());
    if !g.is_zero() && (!g.is_one() || negate) {
        let g = if negate { -g } else { g };
        for x in v.values_mut() {
            *x = &*x / &g;
        }
    }
}

/// v ← a·v − b·p where a = lead(p)/g, b = lead(v)/g; clears the leading entry of v.
fn eliminate(v: &mut IntVec, pivot: &IntVec, lead: usize) {
    let pv = &pivot[&lead];
    let vv = v[&lead].clone();
    let g = pv.gcd(&vv);
    let a = pv / &g;
    let b = &vv / &g;
    if !a.is_one() {
        for x in v.values_mut() {
            *x *= &a;
        }
    }
    for (r, p) in pivot {
        let t = &b * p;
        match v.entry(*r) {
            Entry::Vacant(e) => {
                e.insert(-t);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() -= t;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
    debug_assert!(!v.contains_key(&lead));
    normalize(v);
}

/// Rank and kernel dimension of a rational matrix, by fraction-free elimination on primitive
/// integer columns.
pub fn exact_rank(m: &SparseMatrix) -> (usize, usize) {
    let mut pivots: BTreeMap<usize, IntVec> = BTreeMap::new();
    for col in &m.cols {
        if col.is_empty() {
            continue;
        }
        let mut v = primitive(col);
        while let Some((&lead, _)) = v.iter().next() {
            match pivots.get(&lead) {
                Some(p) => eliminate(&mut v, p, lead),
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    let rank = pivots.len();
    (rank, m.ncols() - rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            exact_rank(&dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
            (3, 0)
        );
        assert_eq!(exact_rank(&SparseMatrix::zeros(2, 5)), (0, 5));
        assert_eq!(exact_rank(&dense(&[&[1, 2, 3], &[2, 4, 6]])), (1, 2));
        assert_eq!(exact_rank(&SparseMatrix::zeros(0, 0)), (0, 0));
    }

    #[test]
    fn rank_with_fractions() {
        let m = SparseMatrix::from_dense(&[
            vec![rat(1, 2), rat(1, 3), rat(5, 6)],
            vec![rat(-1, 4), rat(2, 7), rat(1, 28)],
        ]);
        // third column = first + second
        assert_eq!(exact_rank(&m), (2, 1));
    }

    #[test]
    fn product_and_cancellation() {
        let a = dense(&[&[1, -1], &[2, -2]]);
        let b = dense(&[&[1], &[1]]);
        assert!(a.mul(&b).is_zero());
        let mut c = SparseMatrix::zeros(1, 1);
        c.add_entry(0, 0, rat(3, 2));
        c.add_entry(0, 0, rat(-3, 2));
        assert_eq!(c.nnz(), 0);
    }
}
