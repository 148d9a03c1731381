//! Manifold spec files and knot registration files.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use swfold_core::alexander::KnotRegistration;
use swfold_core::{fiber_sum_with_knot, surface_times_circle, three_torus, KnotTable, ThreeManifold};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub base: Base,
    #[serde(default)]
    pub sums: Vec<KnotSum>,
    /// Knots registered before the sums are resolved.
    #[serde(default)]
    pub knots: Vec<KnotRegistration>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Base {
    Named(BaseName),
    Surface { surface_x_s1: i64 },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseName {
    T3,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotSum {
    pub knot: String,
    pub meridian: String,
}

/// A registration file holds either one registration object or an array of them.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Registrations {
    One(KnotRegistration),
    Many(Vec<KnotRegistration>),
}

impl Registrations {
    pub fn into_vec(self) -> Vec<KnotRegistration> {
        match self {
            Registrations::One(r) => vec![r],
            Registrations::Many(v) => v,
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        CliError::Schema {
            path: path.display().to_string(),
            field: if field == "." { "<root>".into() } else { field },
            msg: e.into_inner().to_string(),
        }
    })
}

/// Validates and adds every knot in a registration file to `table`.
pub fn register_file(path: &Path, table: &mut KnotTable) -> Result<Vec<String>, CliError> {
    let regs: Registrations = read_json(path)?;
    let mut names = Vec::new();
    for reg in regs.into_vec() {
        let record = reg.into_record()?;
        names.push(record.name.clone());
        table.register(record);
    }
    Ok(names)
}

pub fn build_manifold(spec: ManifoldSpec, table: &mut KnotTable) -> Result<ThreeManifold, CliError> {
    for reg in spec.knots {
        table.register(reg.into_record()?);
    }
    let mut m = match spec.base {
        Base::Named(BaseName::T3) => three_torus(),
        Base::Surface { surface_x_s1 } => surface_times_circle(surface_x_s1)?,
    };
    for sum in &spec.sums {
        let knot = table.lookup(&sum.knot)?;
        m = fiber_sum_with_knot(&m, knot, &sum.meridian)?;
    }
    if let Some(name) = spec.name {
        m.name = name;
    }
    Ok(m)
}

/// Reads a manifold spec file and constructs the manifold it describes.
pub fn load_spec(path: &Path, table: &mut KnotTable) -> Result<ThreeManifold, CliError> {
    build_manifold(read_json(path)?, table)
}
