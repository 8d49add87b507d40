use std::collections::HashMap;
use std::fmt;

use crate::poly::{monomials_of_weight, Monomial, VarTable};

/// Strictly increasing tuple of variable indices: the exterior monomial dx_{i₁}∧⋯∧dx_{iₙ}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    /// Panics unless `indices` is strictly increasing.
    pub fn new(indices: Vec<usize>) -> Self {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "multi-index must be strictly increasing: {indices:?}"
        );
        MultiIndex(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self, vars: &VarTable) -> i64 {
        self.0.iter().map(|&i| i64::from(vars.weight(i))).sum()
    }

    /// The index with position `r` removed.
    pub fn without(&self, r: usize) -> MultiIndex {
        let mut v = self.0.clone();
        v.remove(r);
        MultiIndex(v)
    }

    /// The index with positions `r < s` removed.
    pub fn without_two(&self, r: usize, s: usize) -> MultiIndex {
        debug_assert!(r < s);
        let mut v = self.0.clone();
        v.remove(s);
        v.remove(r);
        MultiIndex(v)
    }

    /// dx_k ∧ dx_self, resorted: `None` if k already occurs, otherwise the sign of the
    /// reordering and the sorted index.
    pub fn wedge_front(&self, k: usize) -> Option<(bool, MultiIndex)> {
        match self.0.binary_search(&k) {
            Ok(_) => None,
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, k);
                Some((pos % 2 == 1, MultiIndex(v)))
            }
        }
    }

    /// Indices not in `self`, increasing.
    pub fn complement(&self, nvars: usize) -> MultiIndex {
        MultiIndex((0..nvars).filter(|i| !self.0.contains(i)).collect())
    }

    /// All strictly increasing `n`-tuples from `0..nvars`, lexicographic.
    pub fn all(nvars: usize, n: usize) -> Vec<MultiIndex> {
        fn rec(
            start: usize,
            nvars: usize,
            n: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<MultiIndex>,
        ) {
            if cur.len() == n {
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for i in start..nvars {
                cur.push(i);
                rec(i + 1, nvars, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n <= nvars {
            rec(0, nvars, n, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }

    pub fn display<'a>(&'a self, vars: &'a VarTable) -> impl fmt::Display + 'a {
        MultiIndexDisplay { idx: self, vars }
    }
}

struct MultiIndexDisplay<'a> {
    idx: &'a MultiIndex,
    vars: &'a VarTable,
}

impl fmt::Display for MultiIndexDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.idx.is_empty() {
            return f.write_str("1");
        }
        for (k, &i) in self.idx.indices().iter().enumerate() {
            if k > 0 {
                f.write_str("∧")?;
            }
            write!(f, "d{}", self.vars.name(i))?;
        }
        Ok(())
    }
}

/// Which weight convention a basis uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    /// weight = deg(coefficient) + weight of the wedge variables.
    Chain,
    /// weight = deg(value) − weight of the argument variables.
    Cochain,
}

/// Ordered basis of one graded cell (n, w): pairs (monomial, multi-index).
#[derive(Clone, Debug)]
pub struct ChainBasis {
    pub kind: CellKind,
    pub degree: usize,
    pub weight: i64,
    elements: Vec<(Monomial, MultiIndex)>,
    lookup: HashMap<(Monomial, MultiIndex), usize>,
}

impl ChainBasis {
    fn build(kind: CellKind, n: usize, w: i64, vars: &VarTable) -> Self {
        let mut elements = Vec::new();
        for idx in MultiIndex::all(vars.len(), n) {
            let mono_weight = match kind {
                CellKind::Chain => w - idx.weight(vars),
                CellKind::Cochain => w + idx.weight(vars),
            };
            if mono_weight < 0 {
                continue;
            }
            for m in monomials_of_weight(vars.weights(), mono_weight as u64) {
                elements.push((m, idx.clone()));
            }
        }
        elements.sort();
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.clone(), k))
            .collect();
        ChainBasis {
            kind,
            degree: n,
            weight: w,
            elements,
            lookup,
        }
    }

    pub fn elements(&self) -> &[(Monomial, MultiIndex)] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, m: &Monomial, idx: &MultiIndex) -> Option<usize> {
        self.lookup.get(&(m.clone(), idx.clone())).copied()
    }
}

/// Basis of the weight-w slice of A ⊗_A Ω^n: all (m, I) with |I| = n and
/// deg(m) + weight(I) = w. Empty for n > ℓ.
pub fn chain_basis(n: usize, w: i64, vars: &VarTable) -> ChainBasis {
    ChainBasis::build(CellKind::Chain, n, w, vars)
}

/// Basis of the weight-w slice of Hom_A(Ω^n, A): all (m, I) with deg(m) − weight(I) = w,
/// where (m, I) is the cochain sending dx_I to m and every other basis form to 0.
pub fn cochain_basis(n: usize, w: i64, vars: &VarTable) -> ChainBasis {
    ChainBasis::build(CellKind::Cochain, n, w, vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_basis_examples() {
        let v3 = VarTable::new(&["x", "y", "z"]).unwrap();
        let top = chain_basis(3, 3, &v3);
        assert_eq!(top.len(), 1);
        assert_eq!(
            top.elements()[0],
            (Monomial::one(3), MultiIndex::new(vec![0, 1, 2]))
        );
        let v2 = VarTable::new(&["x", "y"]).unwrap();
        let b = chain_basis(0, 2, &v2);
        assert_eq!(b.len(), 3);
        assert!(chain_basis(3, 5, &v2).is_empty());
        assert!(chain_basis(1, -1, &v2).is_empty());
    }

    #[test]
    fn cochain_cells_allow_negative_weight() {
        let v2 = VarTable::new(&["x", "y"]).unwrap();
        assert_eq!(cochain_basis(2, -2, &v2).len(), 1);
        assert_eq!(cochain_basis(1, -1, &v2).len(), 2);
        assert!(cochain_basis(2, -3, &v2).is_empty());
        // duality of cell sizes under complement, shift = total weight
        let w = VarTable::with_weights(&["a", "b", "c"], &[1, 2, 3]).unwrap();
        for n in 0..=3 {
            for wt in 0..10 {
                assert_eq!(
                    chain_basis(n, wt, &w).len(),
                    cochain_basis(3 - n, wt - 6, &w).len()
                );
            }
        }
    }

    #[test]
    fn wedge_signs() {
        let i = MultiIndex::new(vec![0, 2]);
        assert_eq!(
            i.wedge_front(1),
            Some((true, MultiIndex::new(vec![0, 1, 2])))
        );
        assert_eq!(
            i.wedge_front(3),
            Some((false, MultiIndex::new(vec![0, 2, 3])))
        );
        assert_eq!(i.wedge_front(2), None);
        assert_eq!(MultiIndex::all(4, 2).len(), 6);
        assert_eq!(MultiIndex::all(2, 3).len(), 0);
        assert_eq!(i.complement(4), MultiIndex::new(vec![1, 3]));
    }
}
