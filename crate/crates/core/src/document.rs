//! JSON structure files.
//!
//! ```json
//! {
//!   "vars": [{"name": "x"}, {"name": "y"}, {"name": "z", "weight": 1}],
//!   "bracket": {"z,y": "2*x*z", "z,x": "0", "y,x": "x^2"},
//!   "metadata": "example"
//! }
//! ```
//!
//! A variable may also be a bare string. Log-canonical structures can instead carry
//! `"antisymmetric_matrix"`, nested or flat row-major, with integer or `"p/q"` entries.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{parse_poly, PolyError, Rational, VarTable};
use crate::structure::{PoissonStructure, StructureError};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VarDecl {
    Name(String),
    Full {
        name: String,
        #[serde(default = "unit_weight")]
        weight: u32,
    },
}

fn unit_weight() -> u32 {
    1
}

impl VarDecl {
    pub fn name(&self) -> &str {
        match self {
            VarDecl::Name(n) | VarDecl::Full { name: n, .. } => n,
        }
    }

    pub fn weight(&self) -> u32 {
        match self {
            VarDecl::Name(_) => 1,
            VarDecl::Full { weight, .. } => *weight,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
    Float(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixField {
    Nested(Vec<Vec<Scalar>>),
    Flat(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecDocument {
    pub vars: Vec<VarDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bracket: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antisymmetric_matrix: Option<MatrixField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bracket key {0:?} must have the form \"a,b\"")]
    BadKey(String),
    #[error("bracket key {key:?} names an undeclared variable {name:?}")]
    UnknownVariable { key: String, name: String },
    #[error("bracket keys {0:?} and {1:?} describe the same pair")]
    DuplicatePair(String, String),
    #[error("bracket entry {key:?}: {source}")]
    Expression { key: String, source: PolyError },
    #[error("antisymmetric_matrix: {0}")]
    Matrix(String),
    #[error("give either \"bracket\" or \"antisymmetric_matrix\", not both")]
    BothForms,
    #[error(transparent)]
    Vars(PolyError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

fn parse_scalar(s: &Scalar) -> Result<Rational, DocumentError> {
    match s {
        Scalar::Int(k) => Ok(Rational::from_integer(BigInt::from(*k))),
        Scalar::Text(t) => {
            let t = t.trim();
            let (num, den) = t.split_once('/').unwrap_or((t, "1"));
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| DocumentError::Matrix(format!("bad entry {t:?}")))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| DocumentError::Matrix(format!("bad entry {t:?}")))?;
            if den.is_zero() {
                return Err(DocumentError::Matrix(format!("zero denominator in {t:?}")));
            }
            Ok(Rational::new(num, den))
        }
        Scalar::Float(f) => Err(DocumentError::Matrix(format!(
            "floating-point entry {f}; write it as an integer or \"p/q\""
        ))),
    }
}

fn matrix_rows(m: &MatrixField, n: usize) -> Result<Vec<Vec<Rational>>, DocumentError> {
    let flat: Vec<&Scalar> = match m {
        MatrixField::Nested(rows) => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(DocumentError::Matrix(format!("expected {n}×{n} entries")));
            }
            rows.iter().flatten().collect()
        }
        MatrixField::Flat(v) => {
            if v.len() != n * n {
                return Err(DocumentError::Matrix(format!("expected {} entries", n * n)));
            }
            v.iter().collect()
        }
    };
    let values = flat
        .into_iter()
        .map(parse_scalar)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(values.chunks(n).map(<[Rational]>::to_vec).collect())
}

impl SpecDocument {
    pub fn from_json(src: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(src)?)
    }

    pub fn read(path: &Path) -> Result<Self, DocumentError> {
        let src = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&src)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn var_table(&self) -> Result<VarTable, DocumentError> {
        let names: Vec<&str> = self.vars.iter().map(VarDecl::name).collect();
        let weights: Vec<u32> = self.vars.iter().map(VarDecl::weight).collect();
        VarTable::with_weights(&names, &weights).map_err(DocumentError::Vars)
    }

    /// Parses and validates the bracket.
    pub fn to_structure(&self) -> Result<PoissonStructure, DocumentError> {
        let vars = self.var_table()?;
        if let Some(m) = &self.antisymmetric_matrix {
            if !self.bracket.is_empty() {
                return Err(DocumentError::BothForms);
            }
            let a = matrix_rows(m, vars.len())?;
            return Ok(PoissonStructure::log_canonical(vars, &a)?);
        }
        let mut seen: BTreeMap<(usize, usize), &str> = BTreeMap::new();
        let mut entries = Vec::with_capacity(self.bracket.len());
        for (key, expr) in &self.bracket {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| DocumentError::BadKey(key.clone()))?;
            let lookup = |name: &str| {
                vars.index_of(name.trim())
                    .ok_or_else(|| DocumentError::UnknownVariable {
                        key: key.clone(),
                        name: name.trim().to_string(),
                    })
            };
            let (i, j) = (lookup(a)?, lookup(b)?);
            if let Some(prev) = seen.insert((i.min(j), i.max(j)), key) {
                return Err(DocumentError::DuplicatePair(prev.to_string(), key.clone()));
            }
            let p = parse_poly(expr, &vars).map_err(|source| DocumentError::Expression {
                key: key.clone(),
                source,
            })?;
            entries.push((i, j, p));
        }
        Ok(PoissonStructure::validate(vars, entries)?)
    }

    /// Writes every nonzero upper-triangular entry as `"x_i,x_j"`.
    pub fn from_structure(s: &PoissonStructure, metadata: Option<serde_json::Value>) -> Self {
        let v = s.vars();
        let vars = (0..v.len())
            .map(|i| VarDecl::Full {
                name: v.name(i).to_string(),
                weight: v.weight(i),
            })
            .collect();
        let mut bracket = BTreeMap::new();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let p = s.entry(i, j);
                if !p.is_zero() {
                    bracket.insert(format!("{},{}", v.name(i), v.name(j)), v.fmt_poly(p));
                }
            }
        }
        SpecDocument {
            vars,
            bracket,
            antisymmetric_matrix: None,
            metadata,
        }
    }

    /// Short label from `metadata` (a string, or the `"label"`/`"name"` field of an object).
    pub fn label(&self) -> Option<String> {
        match self.metadata.as_ref()? {
            serde_json::Value::String(s) => Some(s.clone()),
            serde_json::Value::Object(o) => o
                .get("label")
                .or_else(|| o.get("name"))
                .and_then(|v| v.as_str())
                .map(str::to_string),
            _ => None,
        }
    }
}
