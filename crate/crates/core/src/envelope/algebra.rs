use std::collections::HashMap;

use super::element::{Atom, EnvelopeElement, Word};
use crate::poly::Polynomial;
use crate::structure::PoissonStructure;

/// A^pe for a fixed Poisson structure, with normal-form multiplication.
///
/// Defining relations, in normal-form orientation:
/// h_i·f = f·h_i + {x_i, f} and, for j > i, h_j·h_i = h_i·h_j + Σ_k ∂P_ji/∂x_k·h_k.
pub struct Envelope<'a> {
    s: &'a PoissonStructure,
    /// comm[a][b] = nonzero (k, ∂P_ab/∂x_k), i.e. h_{P_ab} = [h_a, h_b].
    comm: Vec<Vec<Vec<(usize, Polynomial)>>>,
}

type Cache = HashMap<(usize, Vec<u32>), EnvelopeElement>;

impl<'a> Envelope<'a> {
    pub fn new(s: &'a PoissonStructure) -> Self {
        let n = s.nvars();
        let comm = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        (0..n)
                            .filter_map(|k| {
                                let d = s.entry(a, b).diff(k);
                                (!d.is_zero()).then_some((k, d))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Envelope { s, comm }
    }

    pub fn structure(&self) -> &PoissonStructure {
        self.s
    }

    pub fn nvars(&self) -> usize {
        self.s.nvars()
    }

    /// [h_a, h_b] = Σ_k ∂P_ab/∂x_k h_k.
    pub fn h_commutator(&self, a: usize, b: usize) -> EnvelopeElement {
        let n = self.nvars();
        let mut out = EnvelopeElement::zero(n);
        for (k, d) in &self.comm[a][b] {
            out.add_assign(&EnvelopeElement::h(n, *k).left_mul_poly(d));
        }
        out
    }

    /// Normal form of h_a·h^γ.
    fn h_times_monomial(&self, a: usize, gamma: &[u32], cache: &mut Cache) -> EnvelopeElement {
        let key = (a, gamma.to_vec());
        if let Some(hit) = cache.get(&key) {
            return hit.clone();
        }
        let n = self.nvars();
        let result = match gamma.iter().position(|&e| e > 0) {
            Some(b) if b < a => {
                // h_a h_b X = h_b (h_a X) + [h_a, h_b] X
                let mut rest = gamma.to_vec();
                rest[b] -= 1;
                let inner = self.h_times_monomial(a, &rest, cache);
                let mut out = self.left_mul_h_cached(b, &inner, cache);
                for (k, d) in &self.comm[a][b] {
                    out.add_assign(&self.h_times_monomial(*k, &rest, cache).left_mul_poly(d));
                }
                out
            }
            _ => {
                let mut e = gamma.to_vec();
                e[a] += 1;
                EnvelopeElement::from_part(Polynomial::one(n), e)
            }
        };
        cache.insert(key, result.clone());
        result
    }

    fn left_mul_h_cached(
        &self,
        a: usize,
        elem: &EnvelopeElement,
        cache: &mut Cache,
    ) -> EnvelopeElement {
        let n = self.nvars();
        let mut out = EnvelopeElement::zero(n);
        for (gamma, f) in elem.parts() {
            // h_a f h^γ = f (h_a h^γ) + {x_a, f} h^γ
            out.add_assign(&self.h_times_monomial(a, gamma, cache).left_mul_poly(f));
            let br = self.s.ham(a, f);
            out.add_part(gamma.clone(), br);
        }
        out
    }

    /// h_a·elem in normal form.
    pub fn left_mul_h(&self, a: usize, elem: &EnvelopeElement) -> EnvelopeElement {
        self.left_mul_h_cached(a, elem, &mut Cache::new())
    }

    /// Normal form of a word, multiplying generators in from the right.
    pub fn reduce(&self, word: &Word) -> EnvelopeElement {
        let mut cache = Cache::new();
        let mut acc = EnvelopeElement::one(self.nvars());
        for atom in word.atoms().iter().rev() {
            acc = match atom {
                Atom::Poly(g) => acc.left_mul_poly(g),
                Atom::H(i) => self.left_mul_h_cached(*i, &acc, &mut cache),
            };
        }
        acc
    }

    /// Product of two normal-form elements.
    pub fn mul(&self, u: &EnvelopeElement, v: &EnvelopeElement) -> EnvelopeElement {
        let mut cache = Cache::new();
        let mut out = EnvelopeElement::zero(self.nvars());
        for (beta, f) in u.parts() {
            let mut acc = v.clone();
            for (i, &e) in beta.iter().enumerate().rev() {
                for _ in 0..e {
                    acc = self.left_mul_h_cached(i, &acc, &mut cache);
                }
            }
            out.add_assign(&acc.left_mul_poly(f));
        }
        out
    }

    /// Residue in A of `elem` modulo the right ideal generated by h_k − shifts[k].
    ///
    /// A term f·h_j·Y (j the smallest h-index present) is rewritten as
    /// h_j·f·Y − [h_j, f]·Y ≡ (shifts[j]·f − [h_j, f])·Y; the commutator comes from the
    /// normal form of the word h_j·f. Every step lowers the filtration degree.
    pub fn project(&self, elem: &EnvelopeElement, shifts: &[Polynomial]) -> Polynomial {
        let n = self.nvars();
        assert_eq!(shifts.len(), n);
        let mut residue = Polynomial::zero(n);
        let mut work = elem.clone();
        while !work.is_zero() {
            let mut next = EnvelopeElement::zero(n);
            for (beta, f) in work.parts() {
                let Some(j) = beta.iter().position(|&e| e > 0) else {
                    residue += f;
                    continue;
                };
                let mut rest = beta.clone();
                rest[j] -= 1;
                let hj_f = self.reduce(&Word(vec![Atom::H(j), Atom::Poly(f.clone())]));
                let mut fj = vec![0; n];
                fj[j] = 1;
                let comm = hj_f.sub(&EnvelopeElement::from_part(f.clone(), fj));
                let head = EnvelopeElement::from_poly(&shifts[j] * f).sub(&comm);
                let tail = EnvelopeElement::from_part(Polynomial::one(n), rest);
                next.add_assign(&self.mul(&head, &tail));
            }
            work = next;
        }
        residue
    }
}
