//! Poisson structures on k[x₁,…,x_ℓ], the Lie–Rinehart algebra (A, Ω_A), traces and the
//! right action of A^pe on the dualizing module ω_A ≅ A.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{parse_poly, Monomial, PolyError, Polynomial, Rational, VarTable};

/// A failing generator triple together with its jacobiator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiWitness {
    pub triple: (usize, usize, usize),
    pub jacobiator: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("bracket entry for the pair ({0}, {1}) given twice")]
    DuplicatePair(usize, usize),
    #[error("nonzero diagonal bracket entry for variable {0}")]
    DiagonalEntry(usize),
    #[error("Jacobi identity fails on {} generator triple(s)", .witnesses.len())]
    JacobiViolation { witnesses: Vec<JacobiWitness> },
    #[error("bracket is not weighted-homogeneous; graded computations are unavailable")]
    NonHomogeneous,
    #[error("generator indices must satisfy i < j < k < {nvars}, got ({i}, {j}, {k})")]
    BadTriple {
        i: usize,
        j: usize,
        k: usize,
        nvars: usize,
    },
    #[error("matrix must be square antisymmetric of size {0}")]
    BadMatrix(usize),
    #[error("structure is not log-canonical")]
    NotLogCanonical,
}

/// Weighted homogeneity of the bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The bracket vanishes identically; every grading is compatible.
    Zero,
    /// weight(P_ij) = weight(x_i) + weight(x_j) + d − 2 for every nonzero entry.
    /// With unit weights `d` is the common polynomial degree of the entries.
    Degree(i64),
    Inhomogeneous,
}

/// A validated Poisson bracket, stored as the full antisymmetric matrix P_ij = {x_i, x_j}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    vars: VarTable,
    matrix: Vec<Vec<Polynomial>>,
    homogeneity: Homogeneity,
}

/// A Kähler 1-form Σ coeffs[i]·dx_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    pub coeffs: Vec<Polynomial>,
}

impl OneForm {
    pub fn zero(nvars: usize) -> Self {
        OneForm {
            coeffs: vec![Polynomial::zero(nvars); nvars],
        }
    }

    /// The coordinate form dx_i.
    pub fn basis(nvars: usize, i: usize) -> Self {
        let mut f = Self::zero(nvars);
        f.coeffs[i] = Polynomial::one(nvars);
        f
    }

    /// The exact form df = Σ ∂f/∂x_i dx_i.
    pub fn exact(f: &Polynomial) -> Self {
        OneForm {
            coeffs: (0..f.nvars()).map(|i| f.diff(i)).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn scale_poly(&self, f: &Polynomial) -> OneForm {
        OneForm {
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        }
    }

    pub fn add(&self, other: &OneForm) -> OneForm {
        OneForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &OneForm) -> OneForm {
        OneForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, vars: &'a VarTable) -> impl fmt::Display + 'a {
        OneFormDisplay { form: self, vars }
    }
}

struct OneFormDisplay<'a> {
    form: &'a OneForm,
    vars: &'a VarTable,
}

impl fmt::Display for OneFormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.form.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*d{}", self.vars.fmt_poly(c), self.vars.name(i))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Traces tr(dx_i) of the adjoint action on the coordinate basis of Ω_A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularData {
    pub traces: Vec<Polynomial>,
    pub unimodular: bool,
}

fn detect_homogeneity(vars: &VarTable, matrix: &[Vec<Polynomial>]) -> Homogeneity {
    let mut shift: Option<i64> = None;
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            let p = &matrix[i][j];
            if p.is_zero() {
                continue;
            }
            let Some(q) = p.homogeneous_weight(vars) else {
                return Homogeneity::Inhomogeneous;
            };
            let c = q as i64 - i64::from(vars.weight(i)) - i64::from(vars.weight(j));
            match shift {
                None => shift = Some(c),
                Some(s) if s != c => return Homogeneity::Inhomogeneous,
                _ => {}
            }
        }
    }
    match shift {
        None => Homogeneity::Zero,
        Some(c) => Homogeneity::Degree(c + 2),
    }
}

/// {x_i, f} = Σ_j P_ij ∂f/∂x_j.
fn hamiltonian_of(matrix: &[Vec<Polynomial>], i: usize, f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(f.nvars());
    for (j, p) in matrix[i].iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let d = f.diff(j);
        if !d.is_zero() {
            out += p * &d;
        }
    }
    out
}

fn jacobiator_of(matrix: &[Vec<Polynomial>], i: usize, j: usize, k: usize) -> Polynomial {
    hamiltonian_of(matrix, i, &matrix[j][k])
        + hamiltonian_of(matrix, j, &matrix[k][i])
        + hamiltonian_of(matrix, k, &matrix[i][j])
}

impl PoissonStructure {
    /// Builds and validates a structure from entries P_ij (either orientation; the opposite
    /// entry is filled in by antisymmetry, unlisted pairs are zero).
    pub fn validate(
        vars: VarTable,
        entries: impl IntoIterator<Item = (usize, usize, Polynomial)>,
    ) -> Result<Self, StructureError> {
        let n = vars.len();
        let mut matrix = vec![vec![Polynomial::zero(n); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for (i, j, p) in entries {
            for idx in [i, j] {
                if idx >= n {
                    return Err(PolyError::IndexOutOfRange {
                        index: idx,
                        nvars: n,
                    }
                    .into());
                }
            }
            if p.nvars() != n {
                return Err(PolyError::ArityMismatch {
                    left: n,
                    right: p.nvars(),
                }
                .into());
            }
            if i == j {
                if p.is_zero() {
                    continue;
                }
                return Err(StructureError::DiagonalEntry(i));
            }
            if seen[i][j] {
                return Err(StructureError::DuplicatePair(i.min(j), i.max(j)));
            }
            seen[i][j] = true;
            seen[j][i] = true;
            matrix[j][i] = -&p;
            matrix[i][j] = p;
        }
        let mut witnesses = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let jac = jacobiator_of(&matrix, i, j, k);
                    if !jac.is_zero() {
                        witnesses.push(JacobiWitness {
                            triple: (i, j, k),
                            jacobiator: jac,
                        });
                    }
                }
            }
        }
        if !witnesses.is_empty() {
            return Err(StructureError::JacobiViolation { witnesses });
        }
        let homogeneity = detect_homogeneity(&vars, &matrix);
        Ok(PoissonStructure {
            vars,
            matrix,
            homogeneity,
        })
    }

    /// Entries given as `(name, name, expression)` text triples.
    pub fn from_text(
        vars: VarTable,
        entries: &[(&str, &str, &str)],
    ) -> Result<Self, StructureError> {
        let mut parsed = Vec::with_capacity(entries.len());
        for &(a, b, src) in entries {
            let i = vars.index_of(a).ok_or_else(|| {
                PolyError::Parse(crate::poly::ParseError {
                    kind: crate::poly::ParseErrorKind::UnknownVariable(a.to_string()),
                    position: 0,
                })
            })?;
            let j = vars.index_of(b).ok_or_else(|| {
                PolyError::Parse(crate::poly::ParseError {
                    kind: crate::poly::ParseErrorKind::UnknownVariable(b.to_string()),
                    position: 0,
                })
            })?;
            parsed.push((i, j, parse_poly(src, &vars)?));
        }
        Self::validate(vars, parsed)
    }

    /// The log-canonical structure {X_i, X_j} = a_ij X_i X_j.
    pub fn log_canonical(vars: VarTable, a: &[Vec<Rational>]) -> Result<Self, StructureError> {
        let n = vars.len();
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(StructureError::BadMatrix(n));
        }
        for i in 0..n {
            for j in 0..n {
                if a[i][j] != -a[j][i].clone() {
                    return Err(StructureError::BadMatrix(n));
                }
            }
        }
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = Monomial::var(n, i).mul(&Monomial::var(n, j));
                entries.push((i, j, Polynomial::term(m, a[i][j].clone())));
            }
        }
        Self::validate(vars, entries)
    }

    /// The zero bracket.
    pub fn trivial(vars: VarTable) -> Self {
        Self::validate(vars, std::iter::empty()).expect("zero bracket is Poisson")
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// P_ij = {x_i, x_j}.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.matrix[i][j]
    }

    pub fn homogeneity(&self) -> Homogeneity {
        self.homogeneity
    }

    /// The degree d for homogeneous brackets.
    pub fn homogeneity_degree(&self) -> Option<i64> {
        match self.homogeneity {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }

    /// Weight shift d − 2 of the bracket and of every differential built from it.
    pub fn weight_shift(&self) -> Result<i64, StructureError> {
        match self.homogeneity {
            Homogeneity::Zero => Ok(0),
            Homogeneity::Degree(d) => Ok(d - 2),
            Homogeneity::Inhomogeneous => Err(StructureError::NonHomogeneous),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.homogeneity == Homogeneity::Zero
    }

    fn check(&self, f: &Polynomial) -> Result<(), StructureError> {
        if f.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(PolyError::ArityMismatch {
                left: self.nvars(),
                right: f.nvars(),
            }
            .into())
        }
    }

    fn check_index(&self, i: usize) -> Result<(), StructureError> {
        if i < self.nvars() {
            Ok(())
        } else {
            Err(PolyError::IndexOutOfRange {
                index: i,
                nvars: self.nvars(),
            }
            .into())
        }
    }

    fn check_form(&self, a: &OneForm) -> Result<(), StructureError> {
        if a.nvars() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                left: self.nvars(),
                right: a.nvars(),
            }
            .into());
        }
        a.coeffs.iter().try_for_each(|c| self.check(c))
    }

    /// {x_i, f}, the Hamiltonian derivation of x_i applied to f.
    pub fn ham(&self, i: usize, f: &Polynomial) -> Polynomial {
        hamiltonian_of(&self.matrix, i, f)
    }

    /// {f, g} = Σ_ij ∂f/∂x_i ∂g/∂x_j P_ij.
    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial, StructureError> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.br(f, g))
    }

    pub(crate) fn br(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars());
        for i in 0..self.nvars() {
            let fi = f.diff(i);
            if fi.is_zero() {
                continue;
            }
            let h = self.ham(i, g);
            if !h.is_zero() {
                out += &fi * &h;
            }
        }
        out
    }

    /// {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}} for i < j < k.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Result<Polynomial, StructureError> {
        let n = self.nvars();
        if !(i < j && j < k && k < n) {
            return Err(StructureError::BadTriple { i, j, k, nvars: n });
        }
        Ok(jacobiator_of(&self.matrix, i, j, k))
    }

    /// The bracket on Ω_A: [a df, b dg] = ab d{f,g} + a{f,b} dg − b{g,a} df, expanded on the
    /// coordinate basis.
    pub fn lr_bracket(&self, alpha: &OneForm, beta: &OneForm) -> Result<OneForm, StructureError> {
        self.check_form(alpha)?;
        self.check_form(beta)?;
        let n = self.nvars();
        let mut out = OneForm::zero(n);
        for (i, a) in alpha.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in beta.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = &self.matrix[i][j];
                if !p.is_zero() {
                    let ab = a * b;
                    for k in 0..n {
                        let dp = p.diff(k);
                        if !dp.is_zero() {
                            out.coeffs[k] += &ab * &dp;
                        }
                    }
                }
                out.coeffs[j] += a * &self.ham(i, b);
                out.coeffs[i] -= b * &self.ham(j, a);
            }
        }
        Ok(out)
    }

    /// ρ(Σ a_i dx_i)(f) = Σ a_i {x_i, f}.
    pub fn anchor_apply(
        &self,
        alpha: &OneForm,
        f: &Polynomial,
    ) -> Result<Polynomial, StructureError> {
        self.check_form(alpha)?;
        self.check(f)?;
        let mut out = Polynomial::zero(self.nvars());
        for (i, a) in alpha.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out += a * &self.ham(i, f);
            }
        }
        Ok(out)
    }

    /// tr(dy) = Σ_i ∂{y, x_i}/∂x_i.
    pub fn trace(&self, y: &Polynomial) -> Result<Polynomial, StructureError> {
        self.check(y)?;
        let mut out = Polynomial::zero(self.nvars());
        for i in 0..self.nvars() {
            // {y, x_i} = -{x_i, y}
            out -= self.ham(i, y).diff(i);
        }
        Ok(out)
    }

    /// tr(dx_i) for the generator x_i.
    pub fn generator_trace(&self, i: usize) -> Polynomial {
        let n = self.nvars();
        let mut out = Polynomial::zero(n);
        for (j, p) in self.matrix[i].iter().enumerate() {
            out += p.diff(j);
        }
        out
    }

    pub fn modular_data(&self) -> ModularData {
        let traces: Vec<Polynomial> = (0..self.nvars()).map(|i| self.generator_trace(i)).collect();
        let unimodular = traces.iter().all(Polynomial::is_zero);
        ModularData { traces, unimodular }
    }

    /// The right action m·h_{x_i} on ω_A ≅ A: −{x_i, m} + m·tr(dx_i).
    pub fn omega_h_action(&self, m: &Polynomial, i: usize) -> Result<Polynomial, StructureError> {
        self.check(m)?;
        self.check_index(i)?;
        Ok(self.omega_act(m, i, &self.generator_trace(i)))
    }

    pub(crate) fn omega_act(&self, m: &Polynomial, i: usize, trace_i: &Polynomial) -> Polynomial {
        let mut out = -self.ham(i, m);
        if !trace_i.is_zero() {
            out += m * trace_i;
        }
        out
    }

    /// The right action m·h_{x_i} = −{x_i, m} on A itself.
    pub fn canonical_h_action(
        &self,
        m: &Polynomial,
        i: usize,
    ) -> Result<Polynomial, StructureError> {
        self.check(m)?;
        self.check_index(i)?;
        Ok(-self.ham(i, m))
    }

    /// The matrix (a_ij) if every entry is a scalar multiple of x_i x_j.
    pub fn log_canonical_matrix(&self) -> Option<Vec<Vec<Rational>>> {
        let n = self.nvars();
        let mut a = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let p = &self.matrix[i][j];
                if p.is_zero() {
                    continue;
                }
                let m = Monomial::var(n, i).mul(&Monomial::var(n, j));
                if p.len() != 1 {
                    return None;
                }
                let c = p.coeff(&m);
                if c.is_zero() {
                    return None;
                }
                a[i][j] = c;
            }
        }
        Some(a)
    }
}
