//! Builtin carriers and file loading.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use rotabrace_core::carriers;
use rotabrace_core::clifford::{
    build_strong_semilattice, CliffordError, CliffordSemigroup, SemilatticeError,
    StrongSemilatticeSpec,
};
use rotabrace_core::rota_baxter::{RbViolation, RotaBaxterOperator};
use rotabrace_core::weak_brace::{BraceError, DualWeakBrace};
use rotabrace_core::ybe::{SolutionMap, SolutionShapeError};
use serde::de::DeserializeOwned;

use crate::formats::{flatten, BraceFile, CarrierFile, OperatorFile, SolutionFile, SpecFile};

/// Environment variable holding extra catalog directories, separated like `PATH`.
pub const CATALOG_ENV: &str = "ROTABRACE_CATALOG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Group,
    Clifford,
    Spec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    File(PathBuf),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Builtin => f.write_str("builtin"),
            Provenance::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// A verified carrier with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub carrier: CliffordSemigroup,
    /// Present for entries given as a strong semilattice of groups.
    pub spec: Option<StrongSemilatticeSpec>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationFailure {
    Shape(String),
    Clifford(CliffordError),
    Semilattice(SemilatticeError),
    Brace(BraceError),
    Operator(RbViolation),
    Solution(SolutionShapeError),
}

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationFailure::Shape(s) => f.write_str(s),
            VerificationFailure::Clifford(e) => e.fmt(f),
            VerificationFailure::Semilattice(e) => e.fmt(f),
            VerificationFailure::Brace(e) => e.fmt(f),
            VerificationFailure::Operator(e) => e.fmt(f),
            VerificationFailure::Solution(e) => e.fmt(f),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("{source_name}:{line}:{column}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{source_name}: verification failed: {failure}")]
    Verification {
        source_name: String,
        failure: VerificationFailure,
    },
    #[error("no builtin, file or catalog entry named {0:?}")]
    NotFound(String),
    #[error("{path}: {err}")]
    Io { path: PathBuf, err: std::io::Error },
}

impl CatalogError {
    /// Line of a parse error, if this is one.
    pub fn parse_line(&self) -> Option<usize> {
        match self {
            CatalogError::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

fn builtin_entry(name: &str) -> Option<CatalogEntry> {
    let key: String = name
        .chars()
        .filter(|c| *c != '/')
        .collect::<String>()
        .to_ascii_uppercase();
    let (name, carrier) = carriers::all().into_iter().find(|(n, _)| *n == key)?;
    let (kind, spec) = match name {
        "CHAIN-Z2" => (EntryKind::Spec, Some(carriers::chain_z2_spec())),
        "CS3" | "SL2" => (EntryKind::Clifford, None),
        _ => (EntryKind::Group, None),
    };
    Some(CatalogEntry {
        name: name.to_owned(),
        kind,
        carrier,
        spec,
        provenance: Provenance::Builtin,
    })
}

/// Every builtin carrier, in canonical order.
pub fn builtins() -> Vec<CatalogEntry> {
    carriers::all()
        .into_iter()
        .map(|(n, _)| builtin_entry(n).unwrap())
        .collect()
}

/// Resolves names against builtins, file paths and extra directories.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub dirs: Vec<PathBuf>,
}

impl Catalog {
    /// Directories from [`CATALOG_ENV`].
    pub fn from_env() -> Self {
        let dirs = std::env::var_os(CATALOG_ENV)
            .map(|v| {
                std::env::split_paths(&v)
                    .filter(|p| !p.as_os_str().is_empty())
                    .collect()
            })
            .unwrap_or_default();
        Self { dirs }
    }

    /// `builtin:NAME`, an existing path, a builtin name, or `NAME.json` in a catalog directory.
    pub fn load(&self, source: &str) -> Result<CatalogEntry, CatalogError> {
        if let Some(name) = source.strip_prefix("builtin:") {
            return builtin_entry(name).ok_or_else(|| CatalogError::NotFound(source.to_owned()));
        }
        let path = Path::new(source);
        if path.is_file() {
            return load_carrier_file(path);
        }
        if let Some(e) = builtin_entry(source) {
            return Ok(e);
        }
        for dir in &self.dirs {
            let candidate = dir.join(format!("{source}.json"));
            if candidate.is_file() {
                return load_carrier_file(&candidate);
            }
        }
        Err(CatalogError::NotFound(source.to_owned()))
    }
}

/// [`Catalog::load`] with directories from the environment.
pub fn load_carrier(source: &str) -> Result<CatalogEntry, CatalogError> {
    Catalog::from_env().load(source)
}

fn read(path: &Path) -> Result<String, CatalogError> {
    fs::read_to_string(path).map_err(|err| CatalogError::Io {
        path: path.to_owned(),
        err,
    })
}

fn parse<T: DeserializeOwned>(source_name: &str, text: &str) -> Result<T, CatalogError> {
    serde_json::from_str(text).map_err(|e| CatalogError::Parse {
        source_name: source_name.to_owned(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn verification(source_name: &str, failure: VerificationFailure) -> CatalogError {
    CatalogError::Verification {
        source_name: source_name.to_owned(),
        failure,
    }
}

fn table(source_name: &str, order: usize, rows: &[Vec<usize>]) -> Result<Vec<usize>, CatalogError> {
    flatten(order, rows).ok_or_else(|| {
        verification(
            source_name,
            VerificationFailure::Shape(format!("table is not {order}×{order}")),
        )
    })
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

pub fn load_carrier_file(path: &Path) -> Result<CatalogEntry, CatalogError> {
    let text = read(path)?;
    parse_carrier(
        &path.display().to_string(),
        &text,
        Provenance::File(path.to_owned()),
        stem(path),
    )
}

/// Parses carrier or spec JSON; spec files are recognised by their `meet` key.
pub fn parse_carrier(
    source_name: &str,
    text: &str,
    provenance: Provenance,
    default_name: String,
) -> Result<CatalogEntry, CatalogError> {
    let value: serde_json::Value = parse(source_name, text)?;
    if value.get("meet").is_some() {
        let file: SpecFile = parse(source_name, text)?;
        let mut groups = Vec::with_capacity(file.groups.len());
        for g in &file.groups {
            let t = table(source_name, g.table.len(), &g.table)?;
            groups.push(
                CliffordSemigroup::verify(g.table.len(), t)
                    .map_err(|e| verification(source_name, VerificationFailure::Clifford(e)))?,
            );
        }
        let spec = StrongSemilatticeSpec::new(file.meet.clone(), groups, file.links())
            .map_err(|e| verification(source_name, VerificationFailure::Semilattice(e)))?;
        let carrier = build_strong_semilattice(&spec)
            .map_err(|e| verification(source_name, VerificationFailure::Semilattice(e)))?;
        Ok(CatalogEntry {
            name: file.name.unwrap_or(default_name),
            kind: EntryKind::Spec,
            carrier,
            spec: Some(spec),
            provenance,
        })
    } else {
        let file: CarrierFile = parse(source_name, text)?;
        let t = table(source_name, file.order, &file.table)?;
        let carrier = CliffordSemigroup::verify(file.order, t)
            .map_err(|e| verification(source_name, VerificationFailure::Clifford(e)))?;
        let kind = if carrier.is_group() {
            EntryKind::Group
        } else {
            EntryKind::Clifford
        };
        Ok(CatalogEntry {
            name: file.name.unwrap_or(default_name),
            kind,
            carrier,
            spec: None,
            provenance,
        })
    }
}

/// A verified brace and its name (the file stem when unnamed).
pub fn load_brace(path: &Path) -> Result<(String, DualWeakBrace), CatalogError> {
    let source_name = path.display().to_string();
    let file: BraceFile = parse(&source_name, &read(path)?)?;
    let add = table(&source_name, file.order, &file.add_table)?;
    let circ = table(&source_name, file.order, &file.circ_table)?;
    let b = DualWeakBrace::verify(file.order, add, circ)
        .map_err(|e| verification(&source_name, VerificationFailure::Brace(e)))?;
    Ok((file.name.unwrap_or_else(|| stem(path)), b))
}

/// An operator file, verified on `carrier`.
pub fn load_operator(
    path: &Path,
    carrier: &CliffordSemigroup,
) -> Result<RotaBaxterOperator, CatalogError> {
    let source_name = path.display().to_string();
    let file: OperatorFile = parse(&source_name, &read(path)?)?;
    RotaBaxterOperator::new(carrier, file.images)
        .map_err(|e| verification(&source_name, VerificationFailure::Operator(e)))
}

pub fn load_solution(path: &Path) -> Result<SolutionMap, CatalogError> {
    let source_name = path.display().to_string();
    let file: SolutionFile = parse(&source_name, &read(path)?)?;
    let pairs = file.pairs().ok_or_else(|| {
        verification(
            &source_name,
            VerificationFailure::Shape(format!("r is not {0}×{0}", file.order)),
        )
    })?;
    SolutionMap::from_table(file.order, pairs)
        .map_err(|e| verification(&source_name, VerificationFailure::Solution(e)))
}
