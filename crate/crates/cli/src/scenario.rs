//! Scenario files: JSON input describing an extension, optional Hopf
//! coaction and intermediate subalgebras, and the tasks to run.

use std::sync::Arc;

use algebroid::algebra::{FinDimAlgebra, Group, Subalgebra};
use algebroid::extension::{RingExtension, SweepConfig};
use algebroid::hopf::{ComoduleAlgebra, HopfAlgebra};
use algebroid::linalg::{Field, Matrix, Scalar, Vector};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid field `{path}`: {message}")]
    Invalid { path: String, message: String },
    #[error("unknown task `{0}`")]
    UnknownTask(String),
    #[error("task dependency violation: {0}")]
    Dependency(String),
}

fn invalid(path: &str, message: impl ToString) -> ScenarioError {
    ScenarioError::Invalid { path: path.to_string(), message: message.to_string() }
}

/// Pipeline order; a task may only use results of earlier ones.
pub const TASKS: [&str; 7] = ["d2", "bialgebroids", "hopf-galois", "lu-antipode", "coring-correspondence", "hsep", "sugano"];

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    fn build(&self) -> Result<Field, ScenarioError> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => Field::prime(*p).map_err(|e| invalid("field.p", e)),
        }
    }
}

/// An entry of a vector or matrix: an integer, or a string such as `"3/2"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Table { table: Vec<Vec<usize>>, names: Option<Vec<String>> },
}

impl GroupSpec {
    fn build(&self, path: &str) -> Result<Group, ScenarioError> {
        match self {
            GroupSpec::Cyclic(n) if *n >= 1 => Ok(Group::cyclic(*n)),
            GroupSpec::Symmetric(n) if (1..=5).contains(n) => Ok(Group::symmetric(*n)),
            GroupSpec::Table { table, names } => Group::from_table(table.clone(), names.clone()).map_err(|e| invalid(path, e)),
            _ => Err(invalid(path, "group order out of range")),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    Group(GroupSpec),
    /// `constants[i][j]` is the product `e_i e_j`.
    StructureConstants { constants: Vec<Vec<Vec<Entry>>>, unit: Vec<Entry> },
    Matrix(usize),
    Tensor(Vec<AlgebraSpec>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SubalgebraSpec {
    Unit,
    Full,
    Basis(Vec<Vec<Entry>>),
    Generators(Vec<Vec<Entry>>),
    /// Generated by the named elements of a group algebra.
    GroupElements(Vec<String>),
    /// `1 ⊗ … ⊗ A_i ⊗ … ⊗ 1` in a tensor product algebra.
    TensorFactor(usize),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum HopfSpec {
    Group(GroupSpec),
    Explicit { algebra: AlgebraSpec, coproduct: Vec<Vec<Entry>>, counit: Vec<Entry>, antipode: Vec<Vec<Entry>> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum CoactionSpec {
    /// `A = H` coacting on itself through its coproduct; `A` must be a group algebra.
    Regular,
    /// `ρ(a) = a ⊗ 1`; needs `hopf`.
    Trivial,
    /// `g ↦ g ⊗ gN` on a group algebra, `N` generated by the named elements.
    GroupQuotient { generators: Vec<String> },
    /// Rows `a·dim H + h`, columns `dim A`; needs `hopf`.
    Matrix(Vec<Vec<Entry>>),
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub sweep_bound: Option<i64>,
    pub seed: Option<u64>,
    /// Independent intermediate subalgebras processed at once.
    pub parallelism: Option<usize>,
    /// Largest total dimension for which full bialgebroid axiom checks run.
    pub verify_limit: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub description: Option<String>,
    pub field: FieldSpec,
    pub algebra: AlgebraSpec,
    pub subalgebra: SubalgebraSpec,
    #[serde(default)]
    pub hopf: Option<HopfSpec>,
    #[serde(default)]
    pub coaction: Option<CoactionSpec>,
    #[serde(default)]
    pub intermediate: Vec<SubalgebraSpec>,
    pub tasks: Vec<String>,
    #[serde(default)]
    pub options: Options,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, ScenarioError> {
        serde_json::from_str(text).map_err(|e| {
            let (line, column) = (e.line(), e.column());
            let full = e.to_string();
            let message = full.strip_suffix(&format!(" at line {line} column {column}")).unwrap_or(&full).to_string();
            ScenarioError::Parse { line, column, message }
        })
    }
}

/// Everything a run needs, validated.
pub struct Built {
    pub name: String,
    pub field: Field,
    pub ext: RingExtension,
    pub comodule: Option<ComoduleAlgebra>,
    pub intermediates: Vec<Subalgebra>,
    pub tasks: Vec<&'static str>,
    pub sweep: SweepConfig,
    pub parallelism: usize,
    pub verify_limit: usize,
}

fn scalar(field: Field, e: &Entry, path: &str) -> Result<Scalar, ScenarioError> {
    match e {
        Entry::Int(n) => Ok(field.from_i64(*n)),
        Entry::Text(t) => field.parse_scalar(t).map_err(|err| invalid(path, err)),
    }
}

fn vector(field: Field, v: &[Entry], len: usize, path: &str) -> Result<Vector, ScenarioError> {
    if v.len() != len {
        return Err(invalid(path, format!("expected {len} entries, got {}", v.len())));
    }
    v.iter().enumerate().map(|(i, e)| scalar(field, e, &format!("{path}[{i}]"))).collect()
}

fn matrix(field: Field, rows: &[Vec<Entry>], shape: (usize, usize), path: &str) -> Result<Matrix, ScenarioError> {
    if rows.len() != shape.0 {
        return Err(invalid(path, format!("expected {} rows, got {}", shape.0, rows.len())));
    }
    let rows: Vec<Vector> =
        rows.iter().enumerate().map(|(i, r)| vector(field, r, shape.1, &format!("{path}[{i}]"))).collect::<Result<_, _>>()?;
    Matrix::from_rows(field, rows).map_err(|e| invalid(path, e))
}

/// The algebra, with its group when it is a group algebra and its tensor
/// factors when it is a tensor product.
struct AlgebraBuild {
    algebra: FinDimAlgebra,
    group: Option<Group>,
    factors: Vec<FinDimAlgebra>,
}

fn build_algebra(field: Field, spec: &AlgebraSpec, path: &str) -> Result<AlgebraBuild, ScenarioError> {
    match spec {
        AlgebraSpec::Group(g) => {
            let group = g.build(&format!("{path}.group"))?;
            Ok(AlgebraBuild { algebra: FinDimAlgebra::group_algebra(field, &group), group: Some(group), factors: vec![] })
        }
        AlgebraSpec::Matrix(n) if (1..=4).contains(n) => {
            Ok(AlgebraBuild { algebra: FinDimAlgebra::matrix_algebra(field, *n), group: None, factors: vec![] })
        }
        AlgebraSpec::Matrix(_) => Err(invalid(&format!("{path}.matrix"), "size must be between 1 and 4")),
        AlgebraSpec::StructureConstants { constants, unit } => {
            let p = format!("{path}.structure_constants");
            let n = unit.len();
            if constants.len() != n {
                return Err(invalid(&format!("{p}.constants"), format!("expected {n} rows, got {}", constants.len())));
            }
            let mut table = Vec::with_capacity(n);
            for (i, row) in constants.iter().enumerate() {
                if row.len() != n {
                    return Err(invalid(&format!("{p}.constants[{i}]"), format!("expected {n} products, got {}", row.len())));
                }
                table.push(
                    row.iter()
                        .enumerate()
                        .map(|(j, v)| vector(field, v, n, &format!("{p}.constants[{i}][{j}]")))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            let unit = vector(field, unit, n, &format!("{p}.unit"))?;
            let algebra = FinDimAlgebra::make_algebra(field, &table, unit).map_err(|e| invalid(&p, e))?;
            Ok(AlgebraBuild { algebra, group: None, factors: vec![] })
        }
        AlgebraSpec::Tensor(parts) => {
            if parts.len() < 2 {
                return Err(invalid(&format!("{path}.tensor"), "needs at least two factors"));
            }
            let factors: Vec<FinDimAlgebra> = parts
                .iter()
                .enumerate()
                .map(|(i, s)| build_algebra(field, s, &format!("{path}.tensor[{i}]")).map(|b| b.algebra))
                .collect::<Result<_, _>>()?;
            let mut algebra = factors[0].clone();
            for f in &factors[1..] {
                algebra = algebra.tensor(f).map_err(|e| invalid(path, e))?;
            }
            Ok(AlgebraBuild { algebra, group: None, factors })
        }
    }
}

fn build_subalgebra(
    field: Field,
    a: &Arc<FinDimAlgebra>,
    built: &AlgebraBuild,
    spec: &SubalgebraSpec,
    path: &str,
) -> Result<Subalgebra, ScenarioError> {
    let n = a.dim();
    let vectors = |vs: &[Vec<Entry>], p: &str| -> Result<Vec<Vector>, ScenarioError> {
        vs.iter().enumerate().map(|(i, v)| vector(field, v, n, &format!("{p}[{i}]"))).collect()
    };
    match spec {
        SubalgebraSpec::Unit => Ok(Subalgebra::unit_subalgebra(a.clone())),
        SubalgebraSpec::Full => Ok(Subalgebra::full(a.clone())),
        SubalgebraSpec::Basis(vs) => {
            let p = format!("{path}.basis");
            Subalgebra::new(a.clone(), vectors(vs, &p)?).map_err(|e| invalid(&p, e))
        }
        SubalgebraSpec::Generators(vs) => {
            let p = format!("{path}.generators");
            Subalgebra::generated_by(a.clone(), &vectors(vs, &p)?).map_err(|e| invalid(&p, e))
        }
        SubalgebraSpec::GroupElements(names) => {
            let p = format!("{path}.group_elements");
            let g = built.group.as_ref().ok_or_else(|| invalid(&p, "the algebra is not a group algebra"))?;
            let gens = names
                .iter()
                .map(|s| g.index_of(s).map(|i| a.basis_vector(i)).ok_or_else(|| invalid(&p, format!("no element named {s}"))))
                .collect::<Result<Vec<_>, _>>()?;
            Subalgebra::generated_by(a.clone(), &gens).map_err(|e| invalid(&p, e))
        }
        SubalgebraSpec::TensorFactor(k) => {
            let p = format!("{path}.tensor_factor");
            let factor = built.factors.get(*k).ok_or_else(|| invalid(&p, "no such tensor factor"))?;
            let basis = (0..factor.dim())
                .map(|i| {
                    built.factors.iter().enumerate().fold(vec![field.one()], |acc, (j, f)| {
                        let leg = if j == *k { f.basis_vector(i) } else { f.unit().clone() };
                        algebroid::linalg::vector::tensor(&acc, &leg)
                    })
                })
                .collect();
            Subalgebra::new(a.clone(), basis).map_err(|e| invalid(&p, e))
        }
    }
}

fn build_hopf(field: Field, spec: &HopfSpec) -> Result<HopfAlgebra, ScenarioError> {
    match spec {
        HopfSpec::Group(g) => Ok(HopfAlgebra::group(field, &g.build("hopf.group")?)),
        HopfSpec::Explicit { algebra, coproduct, counit, antipode } => {
            let h = Arc::new(build_algebra(field, algebra, "hopf.explicit.algebra")?.algebra);
            let n = h.dim();
            let coproduct = matrix(field, coproduct, (n * n, n), "hopf.explicit.coproduct")?;
            let counit = vector(field, counit, n, "hopf.explicit.counit")?;
            let antipode = matrix(field, antipode, (n, n), "hopf.explicit.antipode")?;
            HopfAlgebra::new(h, coproduct, counit, antipode).map_err(|e| invalid("hopf.explicit", e))
        }
    }
}

impl Scenario {
    /// Validates and builds the scenario, with `field` overriding the file's.
    pub fn build(&self, field: Option<Field>, only: Option<&[String]>) -> Result<Built, ScenarioError> {
        let field = match field {
            Some(f) => f,
            None => self.field.build()?,
        };
        let built = build_algebra(field, &self.algebra, "algebra")?;
        let a = Arc::new(built.algebra.clone());
        let base = build_subalgebra(field, &a, &built, &self.subalgebra, "subalgebra")?;
        let mut ext = RingExtension::new(base);

        let hopf = self.hopf.as_ref().map(|h| build_hopf(field, h)).transpose()?;
        let comodule = match &self.coaction {
            None => None,
            Some(spec) => Some(match spec {
                CoactionSpec::Regular => {
                    let g = built.group.as_ref().ok_or_else(|| invalid("coaction", "regular coaction needs a group algebra"))?;
                    ComoduleAlgebra::regular(&HopfAlgebra::group(field, g))
                }
                CoactionSpec::GroupQuotient { generators } => {
                    let g = built.group.as_ref().ok_or_else(|| invalid("coaction", "group quotient needs a group algebra"))?;
                    let gens = generators
                        .iter()
                        .map(|s| g.index_of(s).ok_or_else(|| invalid("coaction.group_quotient", format!("no element named {s}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    let normal = g.subgroup_generated(&gens);
                    ComoduleAlgebra::group_quotient(field, g, &normal).map_err(|e| invalid("coaction.group_quotient", e))?
                }
                CoactionSpec::Trivial => {
                    let h = hopf.as_ref().ok_or_else(|| invalid("coaction", "trivial coaction needs `hopf`"))?;
                    ComoduleAlgebra::trivial(a.clone(), h)
                }
                CoactionSpec::Matrix(rows) => {
                    let h = hopf.clone().ok_or_else(|| invalid("coaction", "a coaction matrix needs `hopf`"))?;
                    let m = matrix(field, rows, (a.dim() * h.dim(), a.dim()), "coaction.matrix")?;
                    ComoduleAlgebra::new(a.clone(), h, m).map_err(|e| invalid("coaction.matrix", e))?
                }
            }),
        };
        if let Some(ca) = &comodule {
            if let Some(f) = ca.verify().failures().next() {
                return Err(invalid("coaction", format!("{}: {}", f.name, f.witness)));
            }
            if !ca.coinvariants().same_as(ext.base()) {
                return Err(invalid("coaction", "the coinvariants differ from the subalgebra"));
            }
            // same subalgebra; use the coinvariant basis so Galois data and S, T agree
            ext = ca.extension();
        }

        let intermediates = self
            .intermediate
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let p = format!("intermediate[{i}]");
                let d = build_subalgebra(field, &a, &built, s, &p)?;
                if !ext.base().is_contained_in(&d) {
                    return Err(invalid(&p, "does not contain the subalgebra"));
                }
                Ok(d)
            })
            .collect::<Result<Vec<_>, _>>()?;

        let requested: Vec<String> = match only {
            Some(t) => t.to_vec(),
            None => self.tasks.clone(),
        };
        let tasks = select_tasks(&requested)?;
        let all = requested.iter().any(|t| t == "all");
        if !all && comodule.is_none() {
            for t in ["hopf-galois", "lu-antipode"] {
                if tasks.contains(&t) {
                    return Err(ScenarioError::Dependency(format!("{t} needs a coaction")));
                }
            }
        }

        let mut sweep = SweepConfig::default();
        if let Some(b) = self.options.sweep_bound {
            sweep.bound = b;
        }
        if let Some(s) = self.options.seed {
            sweep.seed = s;
        }
        Ok(Built {
            name: self.name.clone().unwrap_or_else(|| "scenario".into()),
            field,
            ext,
            comodule,
            intermediates,
            tasks,
            sweep,
            parallelism: self.options.parallelism.unwrap_or(1).max(1),
            verify_limit: self.options.verify_limit.unwrap_or(64),
        })
    }
}

/// Requested task names in pipeline order; `all` selects every task.
pub fn select_tasks(requested: &[String]) -> Result<Vec<&'static str>, ScenarioError> {
    for t in requested {
        if t != "all" && !TASKS.contains(&t.as_str()) {
            return Err(ScenarioError::UnknownTask(t.clone()));
        }
    }
    Ok(TASKS.iter().copied().filter(|t| requested.iter().any(|r| r == "all" || r == t)).collect())
}
