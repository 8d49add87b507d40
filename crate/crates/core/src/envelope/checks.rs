use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::Envelope;
use super::element::{Atom, EnvelopeElement, PbwMonomial, Word};
use super::rewrite::{rewrite, Strategy};
use super::EnvelopeError;
use crate::complexes::{exact_rank, MultiIndex, SparseMatrix};
use crate::exec::Execution;
use crate::poly::{monomials_of_weight, rat, Monomial, Polynomial, Rational};
use crate::structure::PoissonStructure;

/// Random polynomial with up to `terms` terms of total degree ≤ `max_deg`.
pub fn random_poly(rng: &mut impl Rng, nvars: usize, terms: usize, max_deg: u32) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..rng.gen_range(1..=terms) {
        let mut e = vec![0u32; nvars];
        for _ in 0..rng.gen_range(0..=max_deg) {
            e[rng.gen_range(0..nvars)] += 1;
        }
        let num = rng.gen_range(-4i64..=4);
        let den = rng.gen_range(1i64..=3);
        p.add_term(Monomial(e), rat(num, den));
    }
    p
}

/// Random word with at most `max_h` generators h_i and a few polynomial atoms.
pub fn random_word(rng: &mut impl Rng, nvars: usize, max_atoms: usize, max_h: usize) -> Word {
    let len = rng.gen_range(1..=max_atoms);
    let mut atoms = Vec::with_capacity(len);
    let mut hs = 0;
    for _ in 0..len {
        if hs < max_h && rng.gen_bool(0.5) {
            atoms.push(Atom::H(rng.gen_range(0..nvars)));
            hs += 1;
        } else {
            atoms.push(Atom::Poly(random_poly(rng, nvars, 2, 2)));
        }
    }
    Word(atoms)
}

fn sample_words(nvars: usize, samples: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| random_word(&mut rng, nvars, 5, 3))
        .collect()
}

/// Outcome of comparing reduction strategies.
#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub checked: usize,
    /// Words whose normal forms disagree across strategies.
    pub failures: Vec<Word>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Normal forms of one word via leftmost-first rewriting, rightmost-first rewriting and
/// right-to-left multiplication; `true` if all three agree.
pub fn word_is_confluent(s: &PoissonStructure, word: &Word) -> bool {
    let env = Envelope::new(s);
    let a = rewrite(s, word, Strategy::LeftmostFirst);
    let b = rewrite(s, word, Strategy::RightmostFirst);
    let c = env.reduce(word);
    a == b && b == c
}

pub fn confluence_check_words(
    s: &PoissonStructure,
    words: Vec<Word>,
    exec: Execution,
) -> ConfluenceReport {
    let checked = words.len();
    let results = exec.map(words, |w| (word_is_confluent(s, &w), w));
    ConfluenceReport {
        checked,
        failures: results
            .into_iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, w)| w)
            .collect(),
    }
}

/// Compares reduction strategies on `samples` seeded random words.
pub fn confluence_check(s: &PoissonStructure, samples: usize, seed: u64) -> ConfluenceReport {
    confluence_check_words(
        s,
        sample_words(s.nvars(), samples, seed),
        Execution::default(),
    )
}

/// One bigraded cell (p, t): rank of degree-p leading parts against the symmetric algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrRow {
    pub p: u32,
    pub weight: u64,
    pub envelope: usize,
    pub symmetric: usize,
}

#[derive(Clone, Debug)]
pub struct GrReport {
    pub rows: Vec<GrRow>,
    /// Words whose leading part left its bigraded cell.
    pub misplaced: usize,
}

impl GrReport {
    pub fn passed(&self) -> bool {
        self.misplaced == 0 && self.rows.iter().all(|r| r.envelope == r.symmetric)
    }
}

/// Number of monomials x^α y^β with |β| = p and Σ α_i w_i + Σ β_i w_i = t, by expanding
/// Π_i 1/((1 − q^{w_i})(1 − u q^{w_i})) up to u^p q^t.
pub fn symmetric_algebra_count(weights: &[u32], p: u32, t: u64) -> usize {
    let (p, t) = (p as usize, t as usize);
    // table[u][q]
    let mut table = vec![vec![0usize; t + 1]; p + 1];
    table[0][0] = 1;
    for &w in weights {
        let w = w as usize;
        // multiply by 1/(1 − q^w)
        for row in table.iter_mut() {
            for q in w..=t {
                row[q] += row[q - w];
            }
        }
        // multiply by 1/(1 − u q^w)
        for u in 1..=p {
            for q in w..=t {
                let add = table[u - 1][q - w];
                table[u][q] += add;
            }
        }
    }
    table[p][t]
}

fn multisets(nvars: usize, p: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, p, &mut vec![0; nvars], &mut out);
    out
}

/// Filtered piece F_p/F_{p−1} of A^pe against S_A(Ω_A) = A[y₁,…,y_ℓ], per weight t ≤ `max_weight`
/// (x_i and y_i both weighted by weight(x_i)). Each word x^α·h_{i_p}⋯h_{i_1} with h-indices in
/// descending order is reduced; the ranks of the degree-p leading parts are compared with the
/// monomial counts of the symmetric algebra.
pub fn gr_dimension_check(s: &PoissonStructure, p: u32, max_weight: u64) -> GrReport {
    gr_dimension_check_with(Execution::default(), s, p, max_weight)
}

pub fn gr_dimension_check_with(
    exec: Execution,
    s: &PoissonStructure,
    p: u32,
    max_weight: u64,
) -> GrReport {
    let n = s.nvars();
    let weights = s.vars().weights().to_vec();
    let betas = multisets(n, p);
    let results = exec.map((0..=max_weight).collect(), |t| {
        let env = Envelope::new(s);
        let mut leads: Vec<EnvelopeElement> = Vec::new();
        for beta in &betas {
            let bw: u64 = beta
                .iter()
                .zip(&weights)
                .map(|(&b, &w)| u64::from(b * w))
                .sum();
            if bw > t {
                continue;
            }
            for alpha in monomials_of_weight(&weights, t - bw) {
                let mut atoms = vec![Atom::Poly(Polynomial::term(alpha, Rational::one()))];
                for i in (0..n).rev() {
                    atoms.extend(std::iter::repeat_n(Atom::H(i), beta[i] as usize));
                }
                leads.push(env.reduce(&Word(atoms)).graded_part(p));
            }
        }
        let mut keys: HashMap<PbwMonomial, usize> = HashMap::new();
        let mut misplaced = 0;
        let mut triplets = Vec::new();
        for (col, lead) in leads.iter().enumerate() {
            for (m, c) in lead.terms() {
                let wt = Monomial(m.xexp.clone()).weighted_degree(&weights)
                    + Monomial(m.hexp.clone()).weighted_degree(&weights);
                if wt != t {
                    misplaced += 1;
                }
                let k = keys.len();
                let row = *keys.entry(m).or_insert(k);
                triplets.push((row, col, c));
            }
        }
        let matrix = SparseMatrix::from_triplets(keys.len(), leads.len(), triplets);
        let row = GrRow {
            p,
            weight: t,
            envelope: exact_rank(&matrix).0,
            symmetric: symmetric_algebra_count(&weights, p, t),
        };
        (row, misplaced)
    });
    GrReport {
        misplaced: results.iter().map(|(_, m)| m).sum(),
        rows: results.into_iter().map(|(r, _)| r).collect(),
    }
}

/// Residue of a·h_{x_i} in A^pe/J, J the right ideal generated by h_{x_k} − tr(dx_k).
pub fn j_quotient_action(s: &PoissonStructure, a: &Polynomial, i: usize) -> Polynomial {
    let env = Envelope::new(s);
    let traces = s.modular_data().traces;
    let elem = env.reduce(&Word(vec![Atom::Poly(a.clone()), Atom::H(i)]));
    env.project(&elem, &traces)
}

/// Generators of the image of Hom(C_{ℓ−1}, A^pe) → Hom(C_ℓ, A^pe) ≅ A^pe, obtained by reading
/// off the coefficient of each dx_{[ℓ]∖t} in the resolution differential of 1 ⊗ dx₁⋯dx_ℓ.
pub fn top_boundary_generators(s: &PoissonStructure) -> Vec<EnvelopeElement> {
    let n = s.nvars();
    let top = MultiIndex::new((0..n).collect());
    let mut gens: BTreeMap<MultiIndex, EnvelopeElement> = (0..n)
        .map(|t| (top.without(t), EnvelopeElement::zero(n)))
        .collect();
    for r in 0..n {
        let h = EnvelopeElement::h(n, r);
        let h = if r % 2 == 0 { h } else { h.scale(&rat(-1, 1)) };
        gens.get_mut(&top.without(r)).unwrap().add_assign(&h);
    }
    for r in 0..n {
        for q in r + 1..n {
            let p = s.entry(r, q);
            let rest = top.without_two(r, q);
            let positive = (r + q) % 2 == 0;
            for k in 0..n {
                let Some((neg, target)) = rest.wedge_front(k) else {
                    continue;
                };
                let d = p.diff(k);
                let d = if positive != neg { d } else { -d };
                gens.get_mut(&target)
                    .unwrap()
                    .add_assign(&EnvelopeElement::from_poly(d));
            }
        }
    }
    (0..n).map(|t| gens[&top.without(t)].clone()).collect()
}

/// Checks that the t-th generator equals ±(h_{x_t} − tr(dx_t)).
pub fn j_generators_match_traces(s: &PoissonStructure) -> bool {
    let n = s.nvars();
    let traces = s.modular_data().traces;
    top_boundary_generators(s).iter().enumerate().all(|(t, g)| {
        let expected = EnvelopeElement::h(n, t).sub(&EnvelopeElement::from_poly(traces[t].clone()));
        *g == expected || *g == expected.scale(&rat(-1, 1))
    })
}

/// Outcome of the J-quotient comparison with the ω_A action.
#[derive(Clone, Debug)]
pub struct JReport {
    pub checked: usize,
    pub generators_match: bool,
    /// (a, i) where the quotient residue differs from −{x_i, a} + a·tr(dx_i).
    pub failures: Vec<(Polynomial, usize)>,
}

impl JReport {
    pub fn passed(&self) -> bool {
        self.generators_match && self.failures.is_empty()
    }
}

pub fn j_quotient_check(s: &PoissonStructure, samples: usize, seed: u64) -> JReport {
    let n = s.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Polynomial, usize)> = (0..samples)
        .map(|_| (random_poly(&mut rng, n, 4, 4), rng.gen_range(0..n)))
        .collect();
    let results = Execution::default().map(pairs, |(a, i)| {
        let ok = j_quotient_action(s, &a, i) == s.omega_h_action(&a, i).expect("indices in range");
        (ok, a, i)
    });
    JReport {
        checked: samples,
        generators_match: j_generators_match_traces(s),
        failures: results
            .into_iter()
            .filter(|(ok, _, _)| !ok)
            .map(|(_, a, i)| (a, i))
            .collect(),
    }
}

/// The automorphism ν(x_i) = x_i, ν(h_{x_i}) = h_{x_i} + c_i·x_i applied to a word.
fn twist_word(word: &Word, c: &[Rational]) -> Vec<Word> {
    let n = c.len();
    let mut acc: Vec<Vec<Atom>> = vec![Vec::new()];
    for atom in word.atoms() {
        match atom {
            Atom::Poly(_) => acc.iter_mut().for_each(|w| w.push(atom.clone())),
            Atom::H(i) => {
                let mut next = Vec::with_capacity(acc.len() * 2);
                for w in acc {
                    let mut a = w.clone();
                    a.push(Atom::H(*i));
                    next.push(a);
                    if !c[*i].is_zero() {
                        let mut b = w;
                        b.push(Atom::Poly(Polynomial::var(n, *i).scale(&c[*i])));
                        next.push(b);
                    }
                }
                acc = next;
            }
        }
    }
    acc.into_iter().map(Word).collect()
}

fn reduce_sum(env: &Envelope<'_>, words: &[Word]) -> EnvelopeElement {
    let mut out = EnvelopeElement::zero(env.nvars());
    for w in words {
        out.add_assign(&env.reduce(w));
    }
    out
}

#[derive(Clone, Debug)]
pub struct NuReport {
    /// c_i = Σ_j a_ij.
    pub shifts: Vec<Rational>,
    pub relations_checked: usize,
    /// Relations L → R with reduce(ν(L)) ≠ reduce(ν(R)), as (left word, right side).
    pub relation_failures: Vec<(Word, EnvelopeElement)>,
    pub module_checked: usize,
    /// (a, u) with a·ν(u) mod (h) ≠ a·u mod J.
    pub module_failures: Vec<(Polynomial, Word)>,
}

impl NuReport {
    pub fn passed(&self) -> bool {
        self.relation_failures.is_empty() && self.module_failures.is_empty()
    }
}

/// For a log-canonical structure {X_i, X_j} = a_ij X_i X_j: checks that
/// ν(h_{X_i}) = h_{X_i} + (Σ_j a_ij) X_i respects every defining relation and that the twisted
/// module A^ν (A = A^pe/(h) on the right, acted on through ν) reproduces ω_A = A^pe/J.
pub fn nu_check(
    s: &PoissonStructure,
    samples: usize,
    seed: u64,
) -> Result<NuReport, EnvelopeError> {
    let a = s
        .log_canonical_matrix()
        .ok_or(EnvelopeError::NotLogCanonical)?;
    let n = s.nvars();
    let shifts: Vec<Rational> = a
        .iter()
        .map(|row| row.iter().fold(Rational::zero(), |acc, x| acc + x))
        .collect();
    let env = Envelope::new(s);

    let mut relations: Vec<(Word, EnvelopeElement)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = Polynomial::var(n, j);
            let lhs = Word(vec![Atom::H(i), Atom::Poly(x.clone())]);
            let mut rhs = EnvelopeElement::h(n, i).left_mul_poly(&x);
            rhs.add_assign(&EnvelopeElement::from_poly(s.ham(i, &x)));
            relations.push((lhs, rhs));
            if j > i {
                let lhs = Word(vec![Atom::H(j), Atom::H(i)]);
                let mut hij = vec![0; n];
                hij[i] += 1;
                hij[j] += 1;
                let mut rhs = EnvelopeElement::from_part(Polynomial::one(n), hij);
                rhs.add_assign(&env.h_commutator(j, i));
                relations.push((lhs, rhs));
            }
        }
    }
    let relations_checked = relations.len();
    let relation_failures = relations
        .into_iter()
        .filter(|(lhs, rhs)| {
            let left = reduce_sum(&env, &twist_word(lhs, &shifts));
            let rhs_words: Vec<Word> = rhs
                .to_words()
                .iter()
                .flat_map(|w| twist_word(w, &shifts))
                .collect();
            left != reduce_sum(&env, &rhs_words)
        })
        .collect();

    let traces = s.modular_data().traces;
    let zero = vec![Polynomial::zero(n); n];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases: Vec<(Polynomial, Word)> = Vec::new();
    for i in 0..n {
        cases.push((Polynomial::one(n), Word(vec![Atom::H(i)])));
    }
    for _ in 0..samples {
        let m = random_poly(&mut rng, n, 3, 3);
        let u = random_word(&mut rng, n, 3, 2);
        cases.push((m, u));
    }
    let module_checked = cases.len();
    let module_failures = Execution::default()
        .map(cases, |(m, u)| {
            let env = Envelope::new(s);
            let head = Word(vec![Atom::Poly(m.clone())]);
            let twisted: Vec<Word> = twist_word(&u, &shifts)
                .iter()
                .map(|w| head.concat(w))
                .collect();
            let via_nu = env.project(&reduce_sum(&env, &twisted), &zero);
            let via_j = env.project(&env.reduce(&head.concat(&u)), &traces);
            (via_nu == via_j, m, u)
        })
        .into_iter()
        .filter(|(ok, _, _)| !ok)
        .map(|(_, m, u)| (m, u))
        .collect();

    Ok(NuReport {
        shifts,
        relations_checked,
        relation_failures,
        module_checked,
        module_failures,
    })
}
