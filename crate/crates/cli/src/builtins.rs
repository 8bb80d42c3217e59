//! Bundled scenarios.

use serde::Serialize;

use crate::scenario::{Scenario, ScenarioError};

pub const BUILTINS: [(&str, &str); 6] = [
    ("e1", include_str!("../scenarios/e1.json")),
    ("e1-gf2", include_str!("../scenarios/e1-gf2.json")),
    ("e2", include_str!("../scenarios/e2.json")),
    ("e3", include_str!("../scenarios/e3.json")),
    ("e4", include_str!("../scenarios/e4.json")),
    ("e5", include_str!("../scenarios/e5.json")),
];

pub fn source(name: &str) -> Option<&'static str> {
    BUILTINS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn scenario(name: &str) -> Option<Result<Scenario, ScenarioError>> {
    source(name).map(Scenario::parse)
}

/// Catalog line for a builtin.
#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub name: String,
    pub description: String,
    pub field: String,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_r: usize,
    /// Dimension of the Casimir elements `(A ⊗_B A)^A`.
    pub casimir_dim: usize,
    pub tasks: Vec<String>,
}

pub fn catalog() -> Vec<Entry> {
    BUILTINS
        .iter()
        .map(|(name, text)| {
            let sc = Scenario::parse(text).expect("bundled scenario parses");
            let b = sc.build(None, None).expect("bundled scenario builds");
            Entry {
                name: name.to_string(),
                description: sc.description.clone().unwrap_or_default(),
                field: b.field.to_string(),
                dim_a: b.ext.algebra().dim(),
                dim_b: b.ext.base().dim(),
                dim_r: b.ext.centralizer().dim(),
                casimir_dim: b.ext.tensor_square().casimir_elements().len(),
                tasks: b.tasks.iter().map(|t| t.to_string()).collect(),
            }
        })
        .collect()
}
