//! Acceptance suite: seven criteria, one PASS/FAIL line each.
//!
//! Criterion 3 cannot pass as stated (see `fig8_encodings.rs` for the
//! exhaustive argument); it is evaluated faithfully and reported as FAIL.
//! The process exits nonzero if the set of failing criteria differs from
//! `KNOWN_UNATTAINABLE`, or if any criterion fails while
//! `ACCEPTANCE_STRICT` is set.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use singq::coloring::{count_colorings, counts_distinguish, enumerate_colorings};
use singq::constructions::{conj_solution_singquandle, dihedral_quandle, prop_family_singquandle, trivial_quandle};
use singq::diagram::{parse_diagram, serialize_diagram, validate_diagram, Crossing, CrossingKind, SingularDiagram};
use singq::enumerate::enumerate_singquandles;
use singq::fixtures::{fixture, EQUIVALENCE_PAIRS, FIXTURES};
use singq::iso::find_isomorphism;
use singq::{OpTable, OrientedSingquandle};

const KNOWN_UNATTAINABLE: &[u32] = &[3];

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn axiom_regression() -> Outcome {
    let start = Instant::now();
    let all = battery();
    let mut failures = Vec::new();
    for (name, s) in &all {
        let (op, r1, r2) = tables(s);
        let oracle = naive_violation(&op, &r1, &r2);
        if !s.check().all_pass() || oracle.is_some() {
            failures.push(format!("{name} ({})", oracle.unwrap_or("checker")));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        failures.is_empty() && secs < 60.0,
        format!("{} structures, {} failing, {secs:.1}s {}", all.len(), failures.len(), failures.join(", ")),
    )
}

fn closed_form_reproduction() -> Outcome {
    let hopf = fixture("fig7-hopf").unwrap();
    let mut mismatches = Vec::new();
    let mut s3_counts = Vec::new();
    for g in oracle_groups() {
        let lib = library_group(g.name);
        for family in 1..=3 {
            for n in 1..=3 {
                let s = prop_family_singquandle(&lib, family, n).unwrap();
                let count = count_colorings(&hopf, &s).unwrap() as usize;
                let predicted = predicate_count(&g, |x, y| hopf_predicate(&g, family, n, x, y));
                if count != predicted {
                    mismatches.push(format!("{} family {family} n={n}: {count} vs {predicted}", g.name));
                }
                if g.name == "S3" && n == 1 {
                    s3_counts.push(count);
                }
            }
        }
    }
    let stated = s3_counts == [24, 18, 6];
    outcome(
        stated && mismatches.is_empty(),
        format!("S3 n=1 families 1/2/3 = {s3_counts:?}, 27 predicate comparisons, mismatches: {mismatches:?}"),
    )
}

fn orientation_distinction() -> Outcome {
    let s3 = oracle_s3();
    let s = prop_family_singquandle(&library_group("S3"), 1, 1).unwrap();
    let left = fixture("fig8-left").unwrap();
    let right = fixture("fig8-right").unwrap();
    let l = count_colorings(&left, &s).unwrap();
    let r = count_colorings(&right, &s).unwrap();
    let predicted = predicate_count(&s3, |x, y| braid_relation(&s3, x, y)) as u64;
    let distinct = counts_distinguish(&left, &right, &s).unwrap();
    outcome(
        l == 6 && r == predicted && distinct,
        format!("family 1 n=1 over S3: left {l} (want 6), right {r} (want {predicted}), distinguish {distinct}"),
    )
}

/// The same pair of fixtures under the conjugation solution 5 with n = 1.
/// Colorings are determined by semiarcs 1 and 2, and that projection must
/// be the diagonal (left) or the braid-relation set (right).
fn orientation_distinction_solution5() -> Outcome {
    let left = fixture("fig8-left").unwrap();
    let right = fixture("fig8-right").unwrap();
    let mut bad = Vec::new();
    for g in oracle_groups() {
        let lib = library_group(g.name);
        let s = conj_solution_singquandle(&lib, 5, 1).unwrap();
        let n = g.order();
        let braid = |x, y| lib.product(&[x, y, lib.inv(x)]) == lib.product(&[y, x, lib.inv(y)]);
        for (d, tag) in [(&left, "left"), (&right, "right")] {
            let set = enumerate_colorings(d, &s, None).unwrap();
            let proj: HashSet<(usize, usize)> = set.colorings.iter().map(|c| (c[0], c[1])).collect();
            let want: HashSet<(usize, usize)> = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| if tag == "left" { x == y } else { braid(x, y) })
                .collect();
            let oracle_count = if tag == "left" { n } else { predicate_count(&g, |x, y| braid_relation(&g, x, y)) };
            if proj.len() != set.count() || proj != want || want.len() != oracle_count {
                bad.push(format!("{} {tag}", g.name));
            }
        }
    }
    outcome(bad.is_empty(), format!("fig8 sets under conj solution 5, n=1 on S3/D4/Q8; mismatches: {bad:?}"))
}

fn move_invariance() -> Outcome {
    let structures = distinct_battery();
    let mut mismatches = Vec::new();
    for (base, moved) in EQUIVALENCE_PAIRS {
        let (a, b) = (fixture(base).unwrap(), fixture(moved).unwrap());
        for (name, s) in &structures {
            let (x, y) = (count_colorings(&a, s).unwrap(), count_colorings(&b, s).unwrap());
            if x != y {
                mismatches.push(format!("{base} vs {moved} on {name}: {x} vs {y}"));
            }
        }
    }
    outcome(
        mismatches.is_empty(),
        format!(
            "{} pairs x {} structures, {} mismatches {}",
            EQUIVALENCE_PAIRS.len(),
            structures.len(),
            mismatches.len(),
            mismatches.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
        ),
    )
}

fn all_tables(n: usize) -> impl Iterator<Item = Table> {
    let cells = n * n;
    (0..n.pow(cells as u32)).map(move |mut code| {
        let mut flat = vec![0; cells];
        for slot in flat.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        flat.chunks(n).map(|r| r.to_vec()).collect()
    })
}

fn to_table(t: &Table) -> OpTable {
    OpTable::from_rows(t.clone()).unwrap()
}

fn enumeration_oracle() -> Outcome {
    let start = Instant::now();
    // n = 2: every (R1, R2) pair
    let q2 = trivial_quandle(2).unwrap();
    let op2: Table = vec![vec![0, 0], vec![1, 1]];
    let found2: HashSet<(OpTable, OpTable)> = enumerate_singquandles(&q2, None)
        .unwrap()
        .into_iter()
        .map(|s| (s.r1().clone(), s.r2().clone()))
        .collect();
    let mut brute2 = HashSet::new();
    for r1 in all_tables(2) {
        for r2 in all_tables(2) {
            if naive_violation(&op2, &r1, &r2).is_none() {
                brute2.insert((to_table(&r1), to_table(&r2)));
            }
        }
    }
    let n2_ok = found2.len() == 16 && found2 == brute2;

    // n = 3: 1000 sampled R1 tables, every R2 for each. On the trivial
    // quandle every R1 extends, so the dihedral quandle is run as well, with
    // the R1 tables of its solutions added to the sample.
    let r2_all: Vec<Table> = all_tables(3).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut report = Vec::new();
    let mut disagreements = 0;
    for (name, q) in [("trivial", trivial_quandle(3).unwrap()), ("dihedral", dihedral_quandle(3).unwrap())] {
        let op: Table = q.op().rows().map(|r| r.to_vec()).collect();
        let found: HashSet<(OpTable, OpTable)> = enumerate_singquandles(&q, None)
            .unwrap()
            .into_iter()
            .map(|s| (s.r1().clone(), s.r2().clone()))
            .collect();
        let mut candidates: Vec<Table> = sample(&mut rng, r2_all.len(), 1000)
            .into_iter()
            .map(|i| r2_all[i].clone())
            .collect();
        if name == "dihedral" {
            candidates.extend(found.iter().map(|(r1, _)| r1.rows().map(|r| r.to_vec()).collect::<Table>()));
        }
        let mut solutions = 0;
        for r1 in &candidates {
            let r1t = to_table(r1);
            let oracle: HashSet<OpTable> = r2_all
                .iter()
                .filter(|r2| naive_violation(&op, r1, r2).is_none())
                .map(to_table)
                .collect();
            let shortcut: HashSet<OpTable> =
                found.iter().filter(|(a, _)| *a == r1t).map(|(_, b)| b.clone()).collect();
            solutions += oracle.len();
            if oracle != shortcut {
                disagreements += 1;
            }
        }
        report.push(format!(
            "{name}: {} structures, {} R1 checked, {solutions} solutions",
            found.len(),
            candidates.len()
        ));
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        n2_ok && disagreements == 0 && secs < 120.0,
        format!(
            "n=2: {} found, {} by double brute force; n=3 {}; {disagreements} disagreements; {secs:.1}s",
            found2.len(),
            brute2.len(),
            report.join("; ")
        ),
    )
}

/// Whether `f` preserves all three tables, checked by the test itself.
fn preserves(f: &[usize], s: &OrientedSingquandle, t: &OrientedSingquandle) -> bool {
    let (a, b) = (tables(s), tables(t));
    let n = f.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            [(&a.0, &b.0), (&a.1, &b.1), (&a.2, &b.2)]
                .iter()
                .all(|(u, v)| f[u[x][y]] == v[f[x]][f[y]])
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn non_isomorphism() -> Outcome {
    let s3 = library_group("S3");
    let fam = |k, n| prop_family_singquandle(&s3, k, n).unwrap();
    let pairs = [
        ("f1/f2", fam(1, 1), fam(2, 1)),
        ("f1/f3", fam(1, 1), fam(3, 1)),
        ("f2/f3", fam(2, 1), fam(3, 1)),
        ("f1 n=1/n=2", fam(1, 1), fam(1, 2)),
    ];
    let perms = permutations(6);
    let mut problems = Vec::new();
    for (tag, s, t) in &pairs {
        if find_isomorphism(s, t).unwrap().is_some() {
            problems.push(format!("{tag}: isomorphism reported"));
        }
        if perms.iter().any(|p| preserves(p, s, t)) {
            problems.push(format!("{tag}: oracle found an isomorphism"));
        }
    }
    let mut selfs = 0;
    for (name, s) in distinct_battery() {
        if s.size() > 12 {
            continue;
        }
        match find_isomorphism(&s, &s).unwrap() {
            Some(f) if f.is_bijective() && preserves(f.images(), &s, &s) => selfs += 1,
            _ => problems.push(format!("{name}: no valid self-isomorphism")),
        }
    }
    outcome(
        problems.is_empty(),
        format!("4 non-isomorphic pairs, {selfs} self-isomorphisms verified; problems: {problems:?}"),
    )
}

fn random_diagram_text(rng: &mut ChaCha8Rng) -> (String, Vec<Crossing>) {
    let k = rng.gen_range(1..=10);
    let s = 2 * k;
    // arbitrary distinct positive labels
    let mut labels: Vec<usize> = sample(rng, 1000, s).into_iter().map(|v| v + 1).collect();
    labels.sort_unstable();
    let ins = sample(rng, s, s).into_vec();
    let outs = sample(rng, s, s).into_vec();
    let kinds = [CrossingKind::Positive, CrossingKind::Negative, CrossingKind::Singular];
    let crossings: Vec<Crossing> = (0..k)
        .map(|i| {
            let kind = kinds[rng.gen_range(0..3)];
            let p = [ins[2 * i], ins[2 * i + 1], outs[2 * i], outs[2 * i + 1]].map(|j| labels[j]);
            Crossing::new(kind, p)
        })
        .collect();
    let text = crossings.iter().map(|c| format!("{c}\n")).collect();
    (text, crossings)
}

fn parser_round_trip() -> Outcome {
    let mut problems = Vec::new();
    for f in FIXTURES {
        let d = fixture(f.name).unwrap();
        let text = serialize_diagram(&d);
        if text != f.text || parse_diagram(&text).unwrap() != d || !validate_diagram(&d).is_valid() {
            problems.push(f.name.to_string());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for i in 0..100 {
        let (text, raw) = random_diagram_text(&mut rng);
        let d = parse_diagram(&text).unwrap();
        let expected = SingularDiagram::from_crossings(raw).unwrap();
        let canonical = serialize_diagram(&d);
        let ok = d == expected
            && d.semiarc_count() <= 20
            && parse_diagram(&canonical).unwrap() == d
            && serialize_diagram(&parse_diagram(&canonical).unwrap()) == canonical;
        if !ok {
            problems.push(format!("random diagram {i}"));
        }
    }
    outcome(
        problems.is_empty(),
        format!("{} fixtures and 100 random diagrams; failures: {problems:?}", FIXTURES.len()),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (1, "axiom regression", axiom_regression),
        (2, "closed-form coloring reproduction", closed_form_reproduction),
        (3, "orientation distinction", orientation_distinction),
        (4, "move invariance", move_invariance),
        (5, "enumeration oracle", enumeration_oracle),
        (6, "non-isomorphism", non_isomorphism),
        (7, "parser round-trip", parser_round_trip),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let o = run();
        println!("criterion {id} {name}: {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(id);
        }
        if id == 3 {
            let s = orientation_distinction_solution5();
            println!(
                "criterion 3 supplement, conjugation solution 5: {} ({})",
                if s.pass { "PASS" } else { "FAIL" },
                s.detail
            );
            if !s.pass {
                failed.push(30);
            }
        }
    }
    let strict = std::env::var_os("ACCEPTANCE_STRICT").is_some();
    println!("failing criteria: {failed:?}; known unattainable: {KNOWN_UNATTAINABLE:?}");
    if failed != KNOWN_UNATTAINABLE || (strict && !failed.is_empty()) {
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
