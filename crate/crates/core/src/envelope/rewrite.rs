//! Letter-level rewriting of words in A^pe, used as an independent route to normal forms.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::element::{Atom, EnvelopeElement, PbwMonomial, Word};
use crate::poly::{Monomial, Rational};
use crate::structure::PoissonStructure;

/// Which redex is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Letter {
    X(Monomial),
    H(usize),
}

type Letters = Vec<Letter>;

fn push_letter(out: &mut Letters, l: Letter) {
    if let Letter::X(m) = &l {
        if m.is_one() {
            return;
        }
    }
    out.push(l);
}

fn expand(word: &Word) -> Vec<(Letters, Rational)> {
    let mut acc: Vec<(Letters, Rational)> = vec![(Vec::new(), Rational::one())];
    for atom in word.atoms() {
        match atom {
            Atom::H(i) => {
                for (w, _) in acc.iter_mut() {
                    w.push(Letter::H(*i));
                }
            }
            Atom::Poly(p) => {
                let mut next = Vec::new();
                for (w, c) in &acc {
                    for (m, k) in p.terms() {
                        let mut w2 = w.clone();
                        push_letter(&mut w2, Letter::X(m.clone()));
                        next.push((w2, c * k));
                    }
                }
                acc = next;
            }
        }
    }
    acc
}

fn is_redex(a: &Letter, b: &Letter) -> bool {
    match (a, b) {
        (Letter::X(_), Letter::X(_)) => true,
        (Letter::H(_), Letter::X(_)) => true,
        (Letter::H(j), Letter::H(i)) => j > i,
        (Letter::X(_), Letter::H(_)) => false,
    }
}

fn rewrite_at(
    s: &PoissonStructure,
    word: &Letters,
    p: usize,
    coeff: &Rational,
    out: &mut Vec<(Letters, Rational)>,
) {
    let n = s.nvars();
    let (prefix, suffix) = (&word[..p], &word[p + 2..]);
    let build = |middle: Vec<Letter>| -> Letters {
        let mut w = prefix.to_vec();
        for l in middle {
            push_letter(&mut w, l);
        }
        w.extend_from_slice(suffix);
        w
    };
    match (&word[p], &word[p + 1]) {
        (Letter::X(a), Letter::X(b)) => out.push((build(vec![Letter::X(a.mul(b))]), coeff.clone())),
        (Letter::H(i), Letter::X(m)) => {
            out.push((
                build(vec![Letter::X(m.clone()), Letter::H(*i)]),
                coeff.clone(),
            ));
            let f = crate::poly::Polynomial::term(m.clone(), Rational::one());
            for (bm, bc) in s.ham(*i, &f).terms() {
                out.push((build(vec![Letter::X(bm.clone())]), coeff * bc));
            }
        }
        (Letter::H(j), Letter::H(i)) => {
            out.push((build(vec![Letter::H(*i), Letter::H(*j)]), coeff.clone()));
            let p_ji = s.entry(*j, *i);
            for k in 0..n {
                for (dm, dc) in p_ji.diff(k).terms() {
                    out.push((build(vec![Letter::X(dm.clone()), Letter::H(k)]), coeff * dc));
                }
            }
        }
        (Letter::X(_), Letter::H(_)) => unreachable!("not a redex"),
    }
}

fn to_monomial(word: &Letters, nvars: usize) -> PbwMonomial {
    let mut xexp = vec![0; nvars];
    let mut hexp = vec![0; nvars];
    for l in word {
        match l {
            Letter::X(m) => {
                for (e, d) in xexp.iter_mut().zip(m.exponents()) {
                    *e += d;
                }
            }
            Letter::H(i) => hexp[*i] += 1,
        }
    }
    PbwMonomial { xexp, hexp }
}

/// Normal form of `word` by applying single relations until none applies.
pub fn rewrite(s: &PoissonStructure, word: &Word, strategy: Strategy) -> EnvelopeElement {
    let n = s.nvars();
    let mut pending: BTreeMap<Letters, Rational> = BTreeMap::new();
    for (w, c) in expand(word) {
        *pending.entry(w).or_insert_with(Rational::zero) += c;
    }
    let mut result: BTreeMap<PbwMonomial, Rational> = BTreeMap::new();
    let mut scratch = Vec::new();
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let mut redexes = (0..w.len().saturating_sub(1)).filter(|&p| is_redex(&w[p], &w[p + 1]));
        let pos = match strategy {
            Strategy::LeftmostFirst => redexes.next(),
            Strategy::RightmostFirst => redexes.next_back(),
        };
        match pos {
            None => {
                *result
                    .entry(to_monomial(&w, n))
                    .or_insert_with(Rational::zero) += c;
            }
            Some(p) => {
                scratch.clear();
                rewrite_at(s, &w, p, &c, &mut scratch);
                for (w2, c2) in scratch.drain(..) {
                    *pending.entry(w2).or_insert_with(Rational::zero) += c2;
                }
            }
        }
    }
    EnvelopeElement::from_terms(n, result)
}
