//! End-to-end acceptance checks. Runs without the test harness so every
//! criterion prints a PASS/FAIL line; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rotabrace::builtins;
use rotabrace_core::carriers;
use rotabrace_core::clifford::{
    enumerate_homomorphisms, CliffordSemigroup, HomKind, StrongSemilatticeSpec,
};
use rotabrace_core::rota_baxter::{
    commutative_rb_endomorphisms, enumerate_rota_baxter, glue_components,
    idempotent_rb_endomorphisms, is_rota_baxter, opposite_operator,
    strong_operator_from_components, RotaBaxterOperator,
};
use rotabrace_core::weak_brace::{
    brace_from_operator, congruence_classes, enumerate_ideals, ideal_sum_and_product, is_ideal,
    opposite_brace, quotient_brace, socle, CongruenceRoute, DualWeakBrace,
};
use rotabrace_core::ybe::{
    check_braid, is_equivalence_witness, solution_from_brace, solutions_equivalent,
};
use rotabrace_core::Elem;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn catalog() -> Vec<(String, CliffordSemigroup)> {
    builtins()
        .into_iter()
        .map(|e| (e.name, e.carrier))
        .collect()
}

fn operators(s: &CliffordSemigroup) -> Vec<RotaBaxterOperator> {
    enumerate_rota_baxter(s, 8).expect("builtin carriers are within the cap")
}

/// Every map `S → S`, in lexicographic order of images.
fn all_maps(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    (0..n.pow(n as u32)).map(move |mut k| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        v
    })
}

/// RB1 and RB2 straight from the definition.
fn oracle_is_rb(s: &CliffordSemigroup, r: &[Elem]) -> bool {
    let n = s.order();
    (0..n).all(|a| s.op(a, s.idem(r[a])) == a)
        && (0..n)
            .all(|a| (0..n).all(|b| s.op(r[a], r[b]) == r[s.product(&[a, r[a], b, s.inv(r[a])])]))
}

fn oracle_rb(s: &CliffordSemigroup) -> Vec<Vec<Elem>> {
    all_maps(s.order()).filter(|r| oracle_is_rb(s, r)).collect()
}

fn oracle_is_endo(s: &CliffordSemigroup, f: &[Elem]) -> bool {
    let n = s.order();
    (0..n).all(|a| (0..n).all(|b| f[s.op(a, b)] == s.op(f[a], f[b])))
}

fn images(ops: &[RotaBaxterOperator]) -> Vec<Vec<Elem>> {
    ops.iter().map(|r| r.images().to_vec()).collect()
}

fn compose_pairs(n: usize, outer: &[(Elem, Elem)], inner: &[(Elem, Elem)]) -> Vec<(Elem, Elem)> {
    inner.iter().map(|&(x, y)| outer[x * n + y]).collect()
}

fn criterion_1() -> Outcome {
    let expected = [
        ("Z2", 2),
        ("Z3", 3),
        ("Z4", 4),
        ("V4", 16),
        ("CS3", 3),
        ("SL2", 2),
    ];
    let start = Instant::now();
    let mut summary = Vec::new();
    for (name, s) in catalog().into_iter().filter(|(_, s)| s.order() <= 4) {
        let pruned = images(&operators(&s));
        let oracle = oracle_rb(&s);
        ensure!(
            pruned == oracle,
            "{name}: pruned {pruned:?} vs oracle {oracle:?}"
        );
        if let Some(&(_, count)) = expected.iter().find(|(n, _)| *n == name) {
            ensure!(
                pruned.len() == count,
                "{name}: {} operators, expected {count}",
                pruned.len()
            );
        }
        summary.push(format!("{name}={}", pruned.len()));
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(5), "took {t:?}");
    Ok(format!("{} in {t:.2?}", summary.join(" ")))
}

fn criterion_2() -> Outcome {
    let mut checked = Vec::new();
    for (name, s) in catalog()
        .into_iter()
        .filter(|(_, s)| s.is_group() && s.is_commutative())
    {
        let rb: BTreeSet<Vec<Elem>> = images(&operators(&s)).into_iter().collect();
        let endo: BTreeSet<Vec<Elem>> = enumerate_homomorphisms(&s, &s, HomKind::All)
            .into_iter()
            .map(|f| f.images)
            .collect();
        ensure!(
            rb == endo,
            "{name}: operators {rb:?} vs endomorphisms {endo:?}"
        );
        checked.push(name);
    }
    Ok(format!("equal on {}", checked.join(", ")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for (name, s) in catalog() {
        let ops = operators(&s);
        if s.order() == 6 {
            let oracle = oracle_rb(&s);
            ensure!(
                images(&ops) == oracle,
                "{name}: enumeration differs from the 6^6 oracle"
            );
        }
        for r in &ops {
            let b =
                brace_from_operator(&s, r).map_err(|e| format!("{name} {:?}: {e}", r.images()))?;
            let again = DualWeakBrace::verify(
                s.order(),
                b.additive().table().to_vec(),
                b.multiplicative().table().to_vec(),
            );
            ensure!(
                again.is_ok(),
                "{name} {:?}: re-verification failed",
                r.images()
            );
            for a in 0..s.order() {
                let ra = r.apply(a);
                ensure!(
                    b.circ_inv(a) == s.product(&[s.inv(ra), s.inv(a), ra]),
                    "{name} {:?}: a⁻ formula fails at {a}",
                    r.images()
                );
            }
            total += 1;
        }
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(60), "took {t:?}");
    Ok(format!("{total} braces in {t:.2?}"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for (name, s) in catalog() {
        for r in operators(&s) {
            let b = brace_from_operator(&s, &r).unwrap();
            let sol = solution_from_brace(&b);
            ensure!(
                check_braid(&sol).holds(),
                "{name} {:?}: braid fails",
                r.images()
            );
            let op = solution_from_brace(&opposite_brace(&b).unwrap());
            let n = s.order();
            let (rt, ot) = (sol.table(), op.table());
            let r_op = compose_pairs(n, rt, ot);
            let op_r = compose_pairs(n, ot, rt);
            ensure!(
                compose_pairs(n, &r_op, rt) == rt,
                "{name} {:?}: r r^op r ≠ r",
                r.images()
            );
            ensure!(
                compose_pairs(n, &op_r, ot) == ot,
                "{name} {:?}: r^op r r^op ≠ r^op",
                r.images()
            );
            ensure!(r_op == op_r, "{name} {:?}: r r^op ≠ r^op r", r.images());
            total += 1;
        }
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(30), "took {t:?}");
    Ok(format!("{total} solutions in {t:.2?}"))
}

fn criterion_5() -> Outcome {
    let mut pairs = 0;
    for (name, s) in catalog() {
        for r in operators(&s) {
            let b = brace_from_operator(&s, &r).unwrap();
            for a in 0..s.order() {
                for c in 0..s.order() {
                    let l = b.lambda(a, c);
                    let rl = r.apply(l);
                    let special = s.product(&[s.inv(rl), s.inv(l), a, l, rl]);
                    let generic = b.circ(b.circ(b.circ_inv(l), a), c);
                    ensure!(
                        special == generic && generic == b.rho(c, a),
                        "{name} {:?}: ρ_{c}({a})",
                        r.images()
                    );
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs agree"))
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    for (name, s) in catalog() {
        let neg: Vec<Elem> = (0..s.order()).map(|a| s.inv(a)).collect();
        for r in operators(&s) {
            let b = brace_from_operator(&s, &r).unwrap();
            let rop = solution_from_brace(&opposite_brace(&b).unwrap());
            let ro =
                opposite_operator(&s, &r).map_err(|e| format!("{name}: opposite not RB: {e}"))?;
            let other = solution_from_brace(&brace_from_operator(&s, &ro).unwrap());
            let found = solutions_equivalent(&rop, &other);
            ensure!(
                found.is_some_and(|f| is_equivalence_witness(&rop, &other, &f)),
                "{name} {:?}: no witness",
                r.images()
            );
            ensure!(
                is_equivalence_witness(&rop, &other, &neg),
                "{name} {:?}: a ↦ −a fails",
                r.images()
            );
            total += 1;
        }
    }
    Ok(format!("{total} operators"))
}

fn component_choices(spec: &StrongSemilatticeSpec) -> Vec<Vec<Vec<Elem>>> {
    let per: Vec<Vec<Vec<Elem>>> = (0..spec.vertex_count())
        .map(|v| images(&operators(spec.group(v))))
        .collect();
    let mut out = vec![Vec::new()];
    for options in per {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Vec<Elem>>| {
                options.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect();
    }
    out
}

fn criterion_7() -> Outcome {
    // (a)
    let mut combos = 0;
    for (name, spec) in [
        ("CS3", carriers::cs3_spec()),
        ("CHAIN-Z2", carriers::chain_z2_spec()),
    ] {
        let s = rotabrace_core::clifford::build_strong_semilattice(&spec).unwrap();
        for comps in component_choices(&spec) {
            let built = strong_operator_from_components(&spec, &comps).is_ok();
            let glued = is_rota_baxter(&s, &glue_components(&spec, &comps)).holds();
            ensure!(
                built == glued,
                "{name} {comps:?}: construction {built}, glued map RB {glued}"
            );
            combos += 1;
        }
    }
    // (b)
    let mut specs = vec![("CS3".to_string(), carriers::cs3_spec())];
    for (name, s) in catalog()
        .into_iter()
        .filter(|(_, s)| s.is_group() && s.is_commutative())
    {
        specs.push((
            name,
            StrongSemilatticeSpec::new(vec![vec![0]], vec![s], vec![]).unwrap(),
        ));
    }
    for (name, spec) in &specs {
        let s = rotabrace_core::clifford::build_strong_semilattice(spec).unwrap();
        let got: BTreeSet<Vec<Elem>> = images(&commutative_rb_endomorphisms(spec))
            .into_iter()
            .collect();
        let want: BTreeSet<Vec<Elem>> = all_maps(s.order())
            .filter(|f| {
                oracle_is_endo(&s, f)
                    && f.iter()
                        .all(|&x| f.iter().all(|&y| s.op(x, y) == s.op(y, x)))
                    && oracle_is_rb(&s, f)
            })
            .collect();
        ensure!(got == want, "{name}: {got:?} vs {want:?}");
    }
    // (c)
    let s3 = carriers::symmetric3();
    let got: BTreeSet<Vec<Elem>> = images(&idempotent_rb_endomorphisms(&s3).unwrap())
        .into_iter()
        .collect();
    let want: BTreeSet<Vec<Elem>> = all_maps(6)
        .filter(|f| f.iter().all(|&x| f[x] == x) && oracle_is_endo(&s3, f) && oracle_is_rb(&s3, f))
        .collect();
    ensure!(
        got == want,
        "S3 idempotent endomorphisms {got:?} vs {want:?}"
    );
    ensure!(
        got.len() == 4,
        "S3: {} idempotent RB endomorphisms",
        got.len()
    );
    Ok(format!(
        "(a) {combos} component choices, (b) {} specs, (c) S3 count 4",
        specs.len()
    ))
}

fn normal_subgroups(s: &CliffordSemigroup) -> Vec<Vec<Elem>> {
    let n = s.order();
    let mut out: Vec<Vec<Elem>> = (1u32..1 << n)
        .map(|bits| (0..n).filter(|&i| bits >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|h| {
            let inside = |x: Elem| h.contains(&x);
            h.iter()
                .all(|&a| inside(s.inv(a)) && h.iter().all(|&b| inside(s.op(a, b))))
                && (0..n).all(|g| h.iter().all(|&x| inside(s.product(&[g, x, s.inv(g)]))))
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn criterion_8() -> Outcome {
    for name in ["Z4", "Z6", "S3"] {
        let s = catalog().into_iter().find(|(n, _)| n == name).unwrap().1;
        let b = DualWeakBrace::from_semigroups(s.clone(), s.clone()).unwrap();
        let got: Vec<Vec<Elem>> = enumerate_ideals(&b, 10)
            .unwrap()
            .into_iter()
            .map(|i| i.members)
            .collect();
        let want = normal_subgroups(&s);
        ensure!(
            got == want,
            "{name}: ideals {got:?} vs normal subgroups {want:?}"
        );
    }
    let s3 = carriers::symmetric3();
    let t = DualWeakBrace::from_semigroups(s3.clone(), s3).unwrap();
    ensure!(
        socle(&t).members == vec![0],
        "socle of S3 is {:?}",
        socle(&t).members
    );
    for (name, s) in catalog().into_iter().filter(|(_, s)| s.is_commutative()) {
        let b = DualWeakBrace::from_semigroups(s.clone(), s.clone()).unwrap();
        ensure!(
            socle(&b).len() == s.order(),
            "{name}: socle is not the whole carrier"
        );
    }
    let mut pairs = 0;
    let mut quotients = 0;
    for (name, s) in catalog() {
        for r in operators(&s) {
            let b = brace_from_operator(&s, &r).unwrap();
            let ideals = enumerate_ideals(&b, 10).unwrap();
            for i in &ideals {
                for j in &ideals {
                    let (sum, prod) = ideal_sum_and_product(&b, &i.members, &j.members)
                        .map_err(|e| format!("{name}: {e}"))?;
                    ensure!(
                        is_ideal(&b, &sum.members).unwrap().holds()
                            && is_ideal(&b, &prod.members).unwrap().holds(),
                        "{name} {:?}: I+J or I∘J not an ideal for {:?}, {:?}",
                        r.images(),
                        i.members,
                        j.members
                    );
                    pairs += 1;
                }
                let q = quotient_brace(&b, &i.members).map_err(|e| format!("{name}: {e}"))?;
                let again = DualWeakBrace::verify(
                    q.brace.order(),
                    q.brace.additive().table().to_vec(),
                    q.brace.multiplicative().table().to_vec(),
                );
                ensure!(
                    again.is_ok() && q.idempotents_isomorphic(&b),
                    "{name}: quotient by {:?}",
                    i.members
                );
                let add = congruence_classes(&b, &i.members, CongruenceRoute::Additive).unwrap();
                let mul =
                    congruence_classes(&b, &i.members, CongruenceRoute::Multiplicative).unwrap();
                ensure!(add == mul, "{name}: partitions differ for {:?}", i.members);
                quotients += 1;
            }
        }
    }
    Ok(format!("{pairs} ideal pairs, {quotients} quotients"))
}

fn criterion_9() -> Outcome {
    let mut total = 0;
    for (name, s) in catalog() {
        for r in operators(&s) {
            let im = r.image_set();
            for a in 0..s.order() {
                let (ra, a0) = (r.apply(a), s.idem(a));
                let w = r.images();
                ensure!(
                    ra == s.op(ra, r.apply(a0)),
                    "{name} {w:?}: R(a) ≠ R(a) + R(a⁰) at {a}"
                );
                ensure!(
                    a == s.op(a, r.apply(a0)),
                    "{name} {w:?}: a ≠ a + R(a⁰) at {a}"
                );
                let inner = s.product(&[s.inv(ra), s.inv(a), ra]);
                ensure!(
                    s.inv(ra) == r.apply(inner),
                    "{name} {w:?}: −R(a) identity fails at {a}"
                );
                ensure!(
                    r.apply(a0) == s.idem(ra),
                    "{name} {w:?}: R(a⁰) ≠ R(a)⁰ at {a}"
                );
            }
            let closed = im
                .iter()
                .all(|&x| im.contains(&s.inv(x)) && im.iter().all(|&y| im.contains(&s.op(x, y))));
            ensure!(closed, "{name} {:?}: image not closed", r.images());
            total += 1;
        }
    }
    Ok(format!("{total} operators"))
}

fn criterion_10() -> Outcome {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_rotabrace"))
            .args(["report", "--json", "--workers", workers])
            .output()
            .map_err(|e| format!("could not run the binary: {e}"))
    };
    let one = run("1")?;
    let eight = run("8")?;
    ensure!(
        one.status.success() && eight.status.success(),
        "report exited with failure"
    );
    ensure!(
        one.stdout == eight.stdout,
        "reports differ between 1 and 8 workers"
    );
    let again = run("8")?;
    ensure!(
        again.stdout == eight.stdout,
        "reports differ between two 8-worker runs"
    );
    Ok(format!("{} bytes identical", one.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("enumeration matches the brute-force oracle", criterion_1),
        (
            "abelian groups: operators are the endomorphisms",
            criterion_2,
        ),
        (
            "every operator gives a verified dual weak brace",
            criterion_3,
        ),
        ("braid relation and r/r^op regularity", criterion_4),
        ("operator form of ρ agrees with the generic ρ", criterion_5),
        (
            "r^op is equivalent to the opposite operator's solution",
            criterion_6,
        ),
        ("construction round-trips", criterion_7),
        ("ideals, socle, sums, products and quotients", criterion_8),
        ("basic operator identities", criterion_9),
        ("report is identical across worker counts", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2}: PASS  {title} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
