//! The report pipeline: enumerate → classify → braces → ybe → ideals.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use rotabrace_core::clifford::CliffordSemigroup;
use rotabrace_core::rota_baxter::{
    is_rota_baxter, operator_orbits, opposite_operator, RbError, RbSearch, RotaBaxterOperator,
};
use rotabrace_core::weak_brace::{
    brace_from_operator, congruence_classes, enumerate_ideals, ideal_sum_and_product,
    is_bi_weak_brace, opposite_brace, quotient_brace, socle, CongruenceRoute, DualWeakBrace,
};
use rotabrace_core::ybe::{
    check_operator_rho, is_equivalence_witness, regularity_report, solution_from_brace,
    solutions_equivalent,
};
use rotabrace_core::Elem;
use serde::Serialize;

use crate::catalog::{CatalogEntry, EntryKind};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Enumerate,
    Classify,
    Braces,
    Ybe,
    Ideals,
}

impl Stage {
    pub const ALL: [Stage; 5] = [
        Stage::Enumerate,
        Stage::Classify,
        Stage::Braces,
        Stage::Ybe,
        Stage::Ideals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Enumerate => "enumerate",
            Stage::Classify => "classify",
            Stage::Braces => "braces",
            Stage::Ybe => "ybe",
            Stage::Ideals => "ideals",
        }
    }

    fn needs(self) -> Option<Stage> {
        match self {
            Stage::Enumerate => None,
            Stage::Classify | Stage::Braces => Some(Stage::Enumerate),
            Stage::Ybe | Stage::Ideals => Some(Stage::Braces),
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stage {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Stage::ALL
            .into_iter()
            .find(|st| st.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| format!("unknown stage {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub max_order: usize,
    pub max_ideal_order: usize,
    pub max_equiv_order: usize,
    pub workers: usize,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            max_order: 8,
            max_ideal_order: 10,
            max_equiv_order: 8,
            workers: 1,
            timing: false,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("{stage}: carrier of order {order} exceeds the cap {cap}")]
    CarrierTooLarge {
        stage: Stage,
        order: usize,
        cap: usize,
    },
    #[error("stage {stage} needs stage {needs}")]
    StageDependencyMissing { stage: Stage, needs: Stage },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CarrierSummary {
    pub name: String,
    pub kind: EntryKind,
    pub provenance: String,
    pub order: usize,
    pub idempotents: usize,
    pub group: bool,
    pub commutative: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OperatorSection {
    pub count: usize,
    pub images: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    pub representative: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSection {
    pub count: usize,
    pub classes: Vec<OrbitEntry>,
}

/// Indices in these sections refer to `operators.images`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraceSummary {
    pub operator: usize,
    pub trivial: bool,
    pub almost_trivial: bool,
    pub bi_weak: bool,
    pub skew: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YbeSummary {
    pub operator: usize,
    pub braid: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub bijective: bool,
    pub completely_regular: bool,
    pub actions_regular: bool,
    pub inverse_is_opposite: bool,
    /// `a ↦ −a` carries `r^op` to the solution of the opposite operator.
    pub opposite_equivalent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub operator: usize,
    pub count: usize,
    pub sizes: Vec<usize>,
    pub ideals: Vec<Vec<Elem>>,
    pub socle: Vec<Elem>,
    pub socle_size: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub performed: usize,
    pub failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.performed += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, other: Checks) {
        self.performed += other.performed;
        self.failures.extend(other.failures);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub carrier: CarrierSummary,
    pub stages: Vec<Stage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operators: Option<OperatorSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braces: Option<Vec<BraceSummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ybe: Option<Vec<YbeSummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals: Option<Vec<IdealSummary>>,
    pub checks: Checks,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.checks.failures.is_empty()
    }
}

/// Reports for several carriers under one schema version.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub schema_version: u32,
    pub passed: bool,
    pub reports: Vec<ClassificationReport>,
}

impl CatalogReport {
    pub fn new(reports: Vec<ClassificationReport>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            passed: reports.iter().all(|r| r.passed()),
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            render_text(r, &mut out);
        }
        let _ = writeln!(
            out,
            "overall: {}",
            if self.passed { "PASS" } else { "FAIL" }
        );
        out
    }
}

fn line(out: &mut String, key: &str, value: String) {
    let _ = writeln!(out, "  {key:<22} {value}");
}

fn render_text(r: &ClassificationReport, out: &mut String) {
    let c = &r.carrier;
    let _ = writeln!(
        out,
        "{} ({:?}, order {}, {})",
        c.name, c.kind, c.order, c.provenance
    );
    line(out, "idempotents", c.idempotents.to_string());
    line(
        out,
        "stages",
        r.stages
            .iter()
            .map(|s| s.name())
            .collect::<Vec<_>>()
            .join(","),
    );
    if let Some(ops) = &r.operators {
        line(out, "operators", ops.count.to_string());
    }
    if let Some(cl) = &r.classes {
        line(out, "classes", cl.count.to_string());
    }
    if let Some(bs) = &r.braces {
        let count = |f: fn(&BraceSummary) -> bool| bs.iter().filter(|b| f(b)).count().to_string();
        line(out, "trivial braces", count(|b| b.trivial));
        line(out, "almost-trivial braces", count(|b| b.almost_trivial));
        line(out, "bi-weak braces", count(|b| b.bi_weak));
        line(out, "skew braces", count(|b| b.skew));
    }
    if let Some(ys) = &r.ybe {
        let count = |f: fn(&YbeSummary) -> bool| {
            format!("{}/{}", ys.iter().filter(|y| f(y)).count(), ys.len())
        };
        line(out, "braid", count(|y| y.braid));
        line(out, "completely regular", count(|y| y.completely_regular));
        line(
            out,
            "non-degenerate",
            count(|y| y.left_nondegenerate && y.right_nondegenerate),
        );
        line(out, "bijective", count(|y| y.bijective));
    }
    if let Some(is) = &r.ideals {
        let sizes: Vec<String> = is.iter().map(|i| format!("{:?}", i.sizes)).collect();
        line(out, "ideal sizes", sizes.join(" "));
        let socles: Vec<String> = is.iter().map(|i| i.socle_size.to_string()).collect();
        line(out, "socle sizes", socles.join(" "));
    }
    line(
        out,
        "checks",
        format!(
            "{} performed, {} failed",
            r.checks.performed,
            r.checks.failures.len()
        ),
    );
    for f in &r.checks.failures {
        let _ = writeln!(out, "    FAIL {f}");
    }
    if let Some(t) = r.timing_ms {
        line(out, "time", format!("{t} ms"));
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, PipelineError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| PipelineError::Pool(e.to_string()))
}

/// Rota–Baxter enumeration spread over `workers` threads; the result is sorted.
pub fn enumerate_parallel(
    s: &CliffordSemigroup,
    cap: usize,
    workers: usize,
) -> Result<Vec<RotaBaxterOperator>, PipelineError> {
    let search = RbSearch::new(s, cap).map_err(|e| match e {
        RbError::CarrierTooLarge { order, cap } => PipelineError::CarrierTooLarge {
            stage: Stage::Enumerate,
            order,
            cap,
        },
        other => unreachable!("enumeration only fails on size: {other}"),
    })?;
    let branches = search.branches();
    let parts: Vec<Vec<RotaBaxterOperator>> =
        pool(workers)?.install(|| branches.par_iter().map(|&b| search.run_branch(b)).collect());
    let mut out: Vec<_> = parts.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

/// Checks the stage set is closed under dependencies and returns it sorted.
pub fn normalize_stages(stages: &[Stage]) -> Result<Vec<Stage>, PipelineError> {
    let mut v = stages.to_vec();
    v.sort();
    v.dedup();
    for &st in &v {
        if let Some(needs) = st.needs() {
            if !v.contains(&needs) {
                return Err(PipelineError::StageDependencyMissing { stage: st, needs });
            }
        }
    }
    Ok(v)
}

fn operator_checks(s: &CliffordSemigroup, i: usize, r: &RotaBaxterOperator) -> Checks {
    let mut c = Checks::default();
    let n = s.order();
    c.check(is_rota_baxter(s, r.images()).holds(), || {
        format!("operator {i}: not Rota–Baxter")
    });
    let identities = (0..n).all(|a| {
        let (ra, a0) = (r.apply(a), s.idem(a));
        let inner = s.product(&[s.inv(ra), s.inv(a), ra]);
        ra == s.op(ra, r.apply(a0))
            && a == s.op(a, r.apply(a0))
            && s.inv(ra) == r.apply(inner)
            && r.apply(a0) == s.idem(ra)
    });
    c.check(identities, || {
        format!("operator {i}: basic identities fail")
    });
    c.check(
        s.is_clifford_subsemigroup(&r.image_set()).unwrap_or(false),
        || format!("operator {i}: image is not a Clifford subsemigroup"),
    );
    if let Some(zero) = s.identity() {
        c.check(r.apply(zero) == zero, || format!("operator {i}: R(0) ≠ 0"));
    }
    c
}

struct BraceOutcome {
    summary: BraceSummary,
    brace: DualWeakBrace,
    checks: Checks,
}

fn brace_stage(
    s: &CliffordSemigroup,
    i: usize,
    r: &RotaBaxterOperator,
) -> Result<BraceOutcome, String> {
    let b = brace_from_operator(s, r)
        .map_err(|e| format!("operator {i}: brace construction failed: {e}"))?;
    let mut c = Checks::default();
    let inverse_formula = (0..s.order())
        .all(|a| b.circ_inv(a) == s.product(&[s.inv(r.apply(a)), s.inv(a), r.apply(a)]));
    c.check(inverse_formula, || {
        format!("operator {i}: a⁻ ≠ −R(a) − a + R(a)")
    });
    c.check(check_operator_rho(s, r, &b).holds(), || {
        format!("operator {i}: ρ formula disagrees")
    });
    let summary = BraceSummary {
        operator: i,
        trivial: b.is_trivial(),
        almost_trivial: b.is_almost_trivial(),
        bi_weak: is_bi_weak_brace(&b).holds(),
        skew: b.is_skew_brace(),
    };
    Ok(BraceOutcome {
        summary,
        brace: b,
        checks: c,
    })
}

fn ybe_stage(
    s: &CliffordSemigroup,
    i: usize,
    r: &RotaBaxterOperator,
    b: &DualWeakBrace,
    opts: &Options,
) -> (YbeSummary, Checks) {
    let mut c = Checks::default();
    let sol = solution_from_brace(b);
    let rep = regularity_report(b);
    c.check(sol.is_solution(), || {
        format!("operator {i}: braid relation fails")
    });
    c.check(rep.completely_regular(), || {
        format!("operator {i}: r is not completely regular")
    });
    c.check(rep.actions_regular(), || {
        format!("operator {i}: λ/ρ not completely regular")
    });
    if rep.single_idempotent {
        c.check(rep.inverse_is_opposite, || {
            format!("operator {i}: r⁻¹ ≠ r^op")
        });
    }
    let rop = solution_from_brace(&opposite_brace(b).expect("opposite of a verified brace"));
    let other = opposite_operator(s, r)
        .ok()
        .and_then(|o| brace_from_operator(s, &o).ok())
        .map(|ob| solution_from_brace(&ob));
    let neg: Vec<Elem> = (0..s.order()).map(|a| s.inv(a)).collect();
    let opposite_equivalent = other
        .as_ref()
        .is_some_and(|o| is_equivalence_witness(&rop, o, &neg));
    c.check(opposite_equivalent, || {
        format!("operator {i}: a ↦ −a is not an equivalence for r^op")
    });
    if s.order() <= opts.max_equiv_order {
        let found = other.as_ref().and_then(|o| solutions_equivalent(&rop, o));
        c.check(found.is_some(), || {
            format!("operator {i}: no equivalence found for r^op")
        });
    }
    let summary = YbeSummary {
        operator: i,
        braid: sol.is_solution(),
        left_nondegenerate: rep.left_nondegenerate,
        right_nondegenerate: rep.right_nondegenerate,
        bijective: rep.bijective,
        completely_regular: rep.completely_regular(),
        actions_regular: rep.actions_regular(),
        inverse_is_opposite: rep.inverse_is_opposite,
        opposite_equivalent,
    };
    (summary, c)
}

fn ideal_stage(
    i: usize,
    b: &DualWeakBrace,
    cap: usize,
) -> Result<(IdealSummary, Checks), PipelineError> {
    let ideals = enumerate_ideals(b, cap).map_err(|_| PipelineError::CarrierTooLarge {
        stage: Stage::Ideals,
        order: b.order(),
        cap,
    })?;
    let mut c = Checks::default();
    let soc = socle(b);
    c.check(soc.is_ideal(), || {
        format!("operator {i}: socle is not an ideal")
    });
    c.check(
        b.idempotents().iter().all(|e| soc.members.contains(e)),
        || format!("operator {i}: E(S) ⊄ Soc(S)"),
    );
    for ideal in &ideals {
        let m = &ideal.members;
        let q = quotient_brace(b, m);
        c.check(
            q.as_ref().is_ok_and(|q| q.idempotents_isomorphic(b)),
            || format!("operator {i}: quotient by {m:?} fails"),
        );
        let add = congruence_classes(b, m, CongruenceRoute::Additive);
        let mul = congruence_classes(b, m, CongruenceRoute::Multiplicative);
        c.check(add.is_ok() && add == mul, || {
            format!("operator {i}: congruence routes differ on {m:?}")
        });
        for other in &ideals {
            let ok = ideal_sum_and_product(b, m, &other.members)
                .is_ok_and(|(sum, prod)| sum.is_ideal() && prod.is_ideal());
            c.check(ok, || {
                format!(
                    "operator {i}: sum/product of {m:?} and {:?} not ideals",
                    other.members
                )
            });
        }
    }
    let summary = IdealSummary {
        operator: i,
        count: ideals.len(),
        sizes: ideals.iter().map(|x| x.len()).collect(),
        ideals: ideals.into_iter().map(|x| x.members).collect(),
        socle_size: soc.len(),
        socle: soc.members,
    };
    Ok((summary, c))
}

/// Runs `stages` on one carrier.
pub fn run_pipeline(
    entry: &CatalogEntry,
    stages: &[Stage],
    opts: &Options,
) -> Result<ClassificationReport, PipelineError> {
    let start = Instant::now();
    let stages = normalize_stages(stages)?;
    let has = |st| stages.contains(&st);
    let s = &entry.carrier;
    let mut checks = Checks::default();
    let mut report = ClassificationReport {
        carrier: CarrierSummary {
            name: entry.name.clone(),
            kind: entry.kind,
            provenance: entry.provenance.to_string(),
            order: s.order(),
            idempotents: s.idempotents().len(),
            group: s.is_group(),
            commutative: s.is_commutative(),
        },
        stages: stages.clone(),
        operators: None,
        classes: None,
        braces: None,
        ybe: None,
        ideals: None,
        checks: Checks::default(),
        timing_ms: None,
    };
    if has(Stage::Classify) && s.order() > opts.max_equiv_order {
        return Err(PipelineError::CarrierTooLarge {
            stage: Stage::Classify,
            order: s.order(),
            cap: opts.max_equiv_order,
        });
    }
    if has(Stage::Ideals) && s.order() > opts.max_ideal_order {
        return Err(PipelineError::CarrierTooLarge {
            stage: Stage::Ideals,
            order: s.order(),
            cap: opts.max_ideal_order,
        });
    }
    let pool = pool(opts.workers)?;
    let ops = if has(Stage::Enumerate) {
        let ops = enumerate_parallel(s, opts.max_order, opts.workers)?;
        let per: Vec<Checks> = pool.install(|| {
            ops.par_iter()
                .enumerate()
                .map(|(i, r)| operator_checks(s, i, r))
                .collect()
        });
        per.into_iter().for_each(|c| checks.absorb(c));
        let mut sorted = ops.clone();
        sorted.dedup();
        checks.check(sorted.len() == ops.len(), || {
            "enumeration returned duplicates".into()
        });
        report.operators = Some(OperatorSection {
            count: ops.len(),
            images: ops.iter().map(|r| r.images().to_vec()).collect(),
        });
        ops
    } else {
        Vec::new()
    };
    if has(Stage::Classify) {
        let orbits = operator_orbits(s, &ops);
        let covered: usize = orbits.iter().map(Vec::len).sum();
        checks.check(covered == ops.len(), || {
            "orbits do not partition the operators".into()
        });
        report.classes = Some(ClassSection {
            count: orbits.len(),
            classes: orbits
                .into_iter()
                .map(|m| OrbitEntry {
                    representative: m[0],
                    members: m,
                })
                .collect(),
        });
    }
    if has(Stage::Braces) {
        let outcomes: Vec<Result<BraceOutcome, String>> = pool.install(|| {
            ops.par_iter()
                .enumerate()
                .map(|(i, r)| brace_stage(s, i, r))
                .collect()
        });
        let mut summaries = Vec::new();
        let mut braces = Vec::new();
        for (i, o) in outcomes.into_iter().enumerate() {
            match o {
                Ok(o) => {
                    checks.absorb(o.checks);
                    summaries.push(o.summary);
                    braces.push((i, o.brace));
                }
                Err(msg) => checks.check(false, || msg),
            }
        }
        if has(Stage::Ybe) {
            let ys: Vec<(YbeSummary, Checks)> = pool.install(|| {
                braces
                    .par_iter()
                    .map(|(i, b)| ybe_stage(s, *i, &ops[*i], b, opts))
                    .collect()
            });
            let mut out = Vec::new();
            for (y, c) in ys {
                checks.absorb(c);
                out.push(y);
            }
            report.ybe = Some(out);
        }
        if has(Stage::Ideals) {
            let is: Vec<Result<(IdealSummary, Checks), PipelineError>> = pool.install(|| {
                braces
                    .par_iter()
                    .map(|(i, b)| ideal_stage(*i, b, opts.max_ideal_order))
                    .collect()
            });
            let mut out = Vec::new();
            for x in is {
                let (y, c) = x?;
                checks.absorb(c);
                out.push(y);
            }
            report.ideals = Some(out);
        }
        report.braces = Some(summaries);
    }
    report.checks = checks;
    if opts.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

/// Runs every entry, one after another, and wraps the results.
pub fn run_catalog(
    entries: &[CatalogEntry],
    stages: &[Stage],
    opts: &Options,
) -> Result<CatalogReport, PipelineError> {
    let reports = entries
        .iter()
        .map(|e| run_pipeline(e, stages, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CatalogReport::new(reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;

    fn entry(name: &str) -> CatalogEntry {
        Catalog::default().load(name).unwrap()
    }

    #[test]
    fn cs3_all_stages() {
        let r = run_pipeline(&entry("builtin:CS3"), &Stage::ALL, &Options::default()).unwrap();
        assert_eq!(r.operators.as_ref().unwrap().count, 3);
        assert!(r.ybe.as_ref().unwrap().iter().all(|y| y.braid));
        assert!(r.passed(), "{:?}", r.checks.failures);
    }

    #[test]
    fn z2_enumerate_only() {
        let r = run_pipeline(
            &entry("builtin:Z2"),
            &[Stage::Enumerate],
            &Options::default(),
        )
        .unwrap();
        assert_eq!(r.operators.unwrap().count, 2);
        assert!(r.braces.is_none() && r.classes.is_none());
    }

    #[test]
    fn s3_classes() {
        let r = run_pipeline(
            &entry("builtin:S3"),
            &[Stage::Enumerate, Stage::Classify],
            &Options::default(),
        )
        .unwrap();
        let classes = r.classes.unwrap();
        assert_eq!(
            classes
                .classes
                .iter()
                .map(|c| c.members.len())
                .sum::<usize>(),
            r.operators.unwrap().count
        );
        assert!(classes.count >= 2);
    }

    #[test]
    fn missing_dependency() {
        let err =
            run_pipeline(&entry("builtin:Z2"), &[Stage::Ybe], &Options::default()).unwrap_err();
        assert!(matches!(
            err,
            PipelineError::StageDependencyMissing {
                stage: Stage::Ybe,
                needs: Stage::Braces
            }
        ));
        let err = run_pipeline(
            &entry("builtin:Z2"),
            &[Stage::Enumerate, Stage::Ybe],
            &Options::default(),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            PipelineError::StageDependencyMissing {
                stage: Stage::Ybe,
                needs: Stage::Braces
            }
        ));
    }

    #[test]
    fn caps_are_enforced() {
        let opts = Options {
            max_order: 3,
            ..Options::default()
        };
        let err = run_pipeline(&entry("builtin:Z4"), &[Stage::Enumerate], &opts).unwrap_err();
        assert!(matches!(
            err,
            PipelineError::CarrierTooLarge {
                stage: Stage::Enumerate,
                order: 4,
                cap: 3
            }
        ));
    }

    #[test]
    fn parallel_enumeration_matches_sequential() {
        let s3 = entry("builtin:S3").carrier;
        let seq = rotabrace_core::rota_baxter::enumerate_rota_baxter(&s3, 8).unwrap();
        assert_eq!(enumerate_parallel(&s3, 8, 4).unwrap(), seq);
    }

    #[test]
    fn stage_names_parse() {
        assert_eq!("YBE".parse::<Stage>().unwrap(), Stage::Ybe);
        assert!("nope".parse::<Stage>().is_err());
    }
}
