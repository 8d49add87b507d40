use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::poly::{Monomial, Polynomial, Rational, VarTable};

/// PBW monomial x^α h^β, written with the x-block first and h-indices ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub xexp: Vec<u32>,
    pub hexp: Vec<u32>,
}

impl PbwMonomial {
    /// Filtration degree |β|.
    pub fn filtration(&self) -> u32 {
        self.hexp.iter().sum()
    }
}

/// An element of A^pe in normal form: Σ_β f_β h^β with f_β ∈ A written on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeElement {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Polynomial>,
}

impl EnvelopeElement {
    pub fn zero(nvars: usize) -> Self {
        EnvelopeElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Polynomial::one(nvars))
    }

    pub fn from_poly(f: Polynomial) -> Self {
        Self::from_part(f, vec![0; 0])
    }

    /// f·h^β.
    pub fn from_part(f: Polynomial, hexp: Vec<u32>) -> Self {
        let nvars = f.nvars();
        let hexp = if hexp.is_empty() {
            vec![0; nvars]
        } else {
            hexp
        };
        assert_eq!(hexp.len(), nvars);
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(hexp, f);
        }
        EnvelopeElement { nvars, terms }
    }

    /// The generator h_{x_i}.
    pub fn h(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_part(Polynomial::one(nvars), e)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_part(&mut self, hexp: Vec<u32>, f: Polynomial) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&hexp) {
            Some(slot) => {
                *slot += f;
                if slot.is_zero() {
                    self.terms.remove(&hexp);
                }
            }
            None => {
                self.terms.insert(hexp, f);
            }
        }
    }

    pub fn add_assign(&mut self, other: &EnvelopeElement) {
        for (h, f) in &other.terms {
            self.add_part(h.clone(), f.clone());
        }
    }

    pub fn add(&self, other: &EnvelopeElement) -> EnvelopeElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &EnvelopeElement) -> EnvelopeElement {
        let mut out = self.clone();
        for (h, f) in &other.terms {
            out.add_part(h.clone(), -f);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> EnvelopeElement {
        let mut out = EnvelopeElement::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (h, f) in &self.terms {
            out.add_part(h.clone(), f.scale(c));
        }
        out
    }

    /// g·self; A sits on the left of the normal form so this is coefficient-wise.
    pub fn left_mul_poly(&self, g: &Polynomial) -> EnvelopeElement {
        let mut out = EnvelopeElement::zero(self.nvars);
        for (h, f) in &self.terms {
            out.add_part(h.clone(), g * f);
        }
        out
    }

    /// The h-free component, an element of A.
    pub fn a_part(&self) -> Polynomial {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    /// Terms of filtration degree exactly p.
    pub fn graded_part(&self, p: u32) -> EnvelopeElement {
        EnvelopeElement {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(h, _)| h.iter().sum::<u32>() == p)
                .map(|(h, f)| (h.clone(), f.clone()))
                .collect(),
        }
    }

    /// max |β| over terms; 0 for the zero element.
    pub fn filtration_degree(&self) -> u32 {
        self.terms.keys().map(|h| h.iter().sum()).max().unwrap_or(0)
    }

    /// Pairs (h^β, f_β).
    pub fn parts(&self) -> impl Iterator<Item = (&Vec<u32>, &Polynomial)> {
        self.terms.iter()
    }

    /// Every PBW monomial with its rational coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (PbwMonomial, Rational)> + '_ {
        self.terms.iter().flat_map(|(h, f)| {
            f.terms().map(move |(m, c)| {
                (
                    PbwMonomial {
                        xexp: m.0.clone(),
                        hexp: h.clone(),
                    },
                    c.clone(),
                )
            })
        })
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (PbwMonomial, Rational)>,
    ) -> Self {
        let mut out = EnvelopeElement::zero(nvars);
        for (m, c) in terms {
            out.add_part(m.hexp, Polynomial::term(Monomial(m.xexp), c));
        }
        out
    }

    /// The element written as a sum of words f·h_{i₁}⋯h_{iₖ}.
    pub fn to_words(&self) -> Vec<Word> {
        self.terms
            .iter()
            .map(|(h, f)| {
                let mut atoms = vec![Atom::Poly(f.clone())];
                for (i, &e) in h.iter().enumerate() {
                    atoms.extend(std::iter::repeat_n(Atom::H(i), e as usize));
                }
                Word(atoms)
            })
            .collect()
    }

    pub fn display<'a>(&'a self, vars: &'a VarTable) -> impl fmt::Display + 'a {
        ElementDisplay { e: self, vars }
    }
}

struct ElementDisplay<'a> {
    e: &'a EnvelopeElement,
    vars: &'a VarTable,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (h, c) in self.e.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})", self.vars.fmt_poly(c))?;
            for (i, &e) in h.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*h_{}", self.vars.name(i))?,
                    _ => write!(f, "*h_{}^{e}", self.vars.name(i))?,
                }
            }
        }
        Ok(())
    }
}

/// A generator of A^pe: an element of A or h_{x_i}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Poly(Polynomial),
    H(usize),
}

/// A product of generators, read left to right, before normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<Atom>);

impl Word {
    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn h_count(&self) -> u32 {
        self.0.iter().filter(|a| matches!(a, Atom::H(_))).count() as u32
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn display<'a>(&'a self, vars: &'a VarTable) -> impl fmt::Display + 'a {
        WordDisplay { w: self, vars }
    }
}

struct WordDisplay<'a> {
    w: &'a Word,
    vars: &'a VarTable,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.w.0.iter().enumerate() {
            if k > 0 {
                f.write_str("·")?;
            }
            match a {
                Atom::Poly(p) => write!(f, "({})", self.vars.fmt_poly(p))?,
                Atom::H(i) => write!(f, "h_{}", self.vars.name(*i))?,
            }
        }
        Ok(())
    }
}
