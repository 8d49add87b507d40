use std::fmt;

use super::PolyError;

/// Ordered variables x₁,…,x_ℓ of the polynomial ring, each with a positive weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarTable {
    /// Variables with unit weights.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        let weights = vec![1; names.len()];
        Self::with_weights(names, &weights)
    }

    pub fn with_weights<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Self, PolyError> {
        if names.is_empty() {
            return Err(PolyError::EmptyVarTable);
        }
        if names.len() != weights.len() {
            return Err(PolyError::ArityMismatch {
                left: names.len(),
                right: weights.len(),
            });
        }
        let mut owned: Vec<String> = Vec::with_capacity(names.len());
        for (name, &weight) in names.iter().zip(weights) {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(PolyError::InvalidName(name.to_string()));
            }
            if owned.iter().any(|n| n == name) {
                return Err(PolyError::DuplicateName(name.to_string()));
            }
            if weight == 0 {
                return Err(PolyError::ZeroWeight(name.to_string()));
            }
            owned.push(name.to_string());
        }
        Ok(VarTable {
            names: owned,
            weights: weights.to_vec(),
        })
    }

    /// Number of variables ℓ.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    /// Sum of all variable weights; the weight of the top exterior form.
    pub fn total_weight(&self) -> i64 {
        self.weights.iter().map(|&w| i64::from(w)).sum()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (name, w)) in self.names.iter().zip(&self.weights).enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *w == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}:{w}")?;
            }
        }
        Ok(())
    }
}
