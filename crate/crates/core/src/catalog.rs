//! Built-in example structures.

use crate::document::SpecDocument;
use crate::structure::{Homogeneity, PoissonStructure};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub document: SpecDocument,
    pub unimodular: bool,
    pub homogeneity: Homogeneity,
}

impl CatalogEntry {
    pub fn structure(&self) -> PoissonStructure {
        self.document
            .to_structure()
            .unwrap_or_else(|e| panic!("catalog entry {} is invalid: {e}", self.id))
    }
}

const ENTRIES: &[(&str, &str, &str, bool, Option<i64>)] = &[
    (
        "trivial1",
        "zero bracket on k[x]",
        r#"{"vars": ["x"]}"#,
        true,
        None,
    ),
    (
        "trivial2",
        "zero bracket on k[x,y]",
        r#"{"vars": ["x", "y"]}"#,
        true,
        None,
    ),
    (
        "trivial3",
        "zero bracket on k[x,y,z]",
        r#"{"vars": ["x", "y", "z"]}"#,
        true,
        None,
    ),
    (
        "plane",
        "symplectic plane {x,y} = 1",
        r#"{"vars": ["x", "y"], "bracket": {"x,y": "1"}}"#,
        true,
        Some(0),
    ),
    (
        "so3",
        "linear so(3)-type bracket {x,y} = z, {y,z} = x, {z,x} = y",
        r#"{"vars": ["x", "y", "z"], "bracket": {"x,y": "z", "y,z": "x", "z,x": "y"}}"#,
        true,
        Some(1),
    ),
    (
        "quad3",
        "quadratic bracket {z,y} = 2xz, {y,x} = x^2",
        r#"{"vars": ["x", "y", "z"], "bracket": {"z,y": "2*x*z", "z,x": "0", "y,x": "x^2"}}"#,
        true,
        Some(2),
    ),
    (
        "logcan2",
        "log-canonical {X1,X2} = X1*X2",
        r#"{"vars": ["X1", "X2"], "antisymmetric_matrix": [[0, 1], [-1, 0]]}"#,
        false,
        Some(2),
    ),
    (
        "logcan3",
        "log-canonical with a12 = 1, a13 = 2, a23 = 3",
        r#"{"vars": ["X1", "X2", "X3"], "antisymmetric_matrix": [[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]}"#,
        false,
        Some(2),
    ),
    (
        "logcan3u",
        "unimodular log-canonical with a12 = 1, a13 = -1, a23 = 1",
        r#"{"vars": ["X1", "X2", "X3"], "antisymmetric_matrix": [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]}"#,
        true,
        Some(2),
    ),
    (
        "jacobian",
        "Jacobian bracket of x^4 + y^4 + z^2 with weight(z) = 2",
        r#"{"vars": ["x", "y", {"name": "z", "weight": 2}],
            "bracket": {"x,y": "2*z", "y,z": "4*x^3", "z,x": "4*y^3"}}"#,
        true,
        Some(2),
    ),
];

/// Every built-in entry, in a fixed order.
pub fn entries() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(
            |&(id, description, json, unimodular, degree)| CatalogEntry {
                id,
                description,
                document: SpecDocument::from_json(json).expect("catalog JSON parses"),
                unimodular,
                homogeneity: degree.map_or(Homogeneity::Zero, Homogeneity::Degree),
            },
        )
        .collect()
}

pub fn get(id: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.id == id)
}
