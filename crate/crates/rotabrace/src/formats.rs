//! JSON file formats.
//!
//! ```text
//! carrier   {"name": s, "order": n, "table": [[int; n]; n]}
//! spec      {"name": s, "meet": [[int]], "groups": [{"table": [[int]]}],
//!            "links": [{"from": a, "to": b, "images": [int]}]}
//! operator  {"carrier": s, "images": [int]}
//! brace     {"name": s, "order": n, "add_table": [[int]], "circ_table": [[int]]}
//! solution  {"order": n, "r": [[[int, int]; n]; n]}
//! ```
//!
//! `name` is optional everywhere it appears.

use rotabrace_core::clifford::{CliffordSemigroup, Link, StrongSemilatticeSpec};
use rotabrace_core::rota_baxter::RotaBaxterOperator;
use rotabrace_core::weak_brace::DualWeakBrace;
use rotabrace_core::ybe::SolutionMap;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarrierFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl CarrierFile {
    pub fn from_semigroup(name: Option<String>, s: &CliffordSemigroup) -> Self {
        Self {
            name,
            order: s.order(),
            table: s.rows(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkFile {
    pub from: usize,
    pub to: usize,
    pub images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub meet: Vec<Vec<usize>>,
    pub groups: Vec<GroupFile>,
    #[serde(default)]
    pub links: Vec<LinkFile>,
}

impl SpecFile {
    pub fn from_spec(name: Option<String>, spec: &StrongSemilatticeSpec) -> Self {
        Self {
            name,
            meet: spec.meet_rows(),
            groups: spec
                .groups()
                .iter()
                .map(|g| GroupFile { table: g.rows() })
                .collect(),
            links: spec
                .links()
                .into_iter()
                .map(|l| LinkFile {
                    from: l.from,
                    to: l.to,
                    images: l.images,
                })
                .collect(),
        }
    }

    pub fn links(&self) -> Vec<Link> {
        self.links
            .iter()
            .map(|l| Link {
                from: l.from,
                to: l.to,
                images: l.images.clone(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorFile {
    pub carrier: String,
    pub images: Vec<usize>,
}

impl OperatorFile {
    pub fn from_operator(carrier: &str, r: &RotaBaxterOperator) -> Self {
        Self {
            carrier: carrier.to_owned(),
            images: r.images().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub add_table: Vec<Vec<usize>>,
    pub circ_table: Vec<Vec<usize>>,
}

impl BraceFile {
    pub fn from_brace(name: Option<String>, b: &DualWeakBrace) -> Self {
        Self {
            name,
            order: b.order(),
            add_table: b.additive().rows(),
            circ_table: b.multiplicative().rows(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub order: usize,
    pub r: Vec<Vec<[usize; 2]>>,
}

impl SolutionFile {
    pub fn from_solution(r: &SolutionMap) -> Self {
        Self {
            order: r.order(),
            r: r.rows()
                .into_iter()
                .map(|row| row.into_iter().map(|(x, y)| [x, y]).collect())
                .collect(),
        }
    }

    /// Flattened pair table, or `None` when the nesting does not match `order`.
    pub fn pairs(&self) -> Option<Vec<(usize, usize)>> {
        if self.r.len() != self.order || self.r.iter().any(|row| row.len() != self.order) {
            return None;
        }
        Some(self.r.iter().flatten().map(|&[x, y]| (x, y)).collect())
    }
}

/// Flattens a square table; `None` when the rows are not `order` long each.
pub fn flatten(order: usize, rows: &[Vec<usize>]) -> Option<Vec<usize>> {
    (rows.len() == order && rows.iter().all(|r| r.len() == order)).then(|| rows.concat())
}
