//! Exhaustive axiom verification with counterexample witnesses.
//!
//! Every universally quantified axiom is checked over the whole carrier.
//! For each failed axiom the report carries the lexicographically first
//! violating assignment of its variables.

use std::fmt;

use crate::error::{Error, Result};
use crate::table::{Element, OpTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `x * x = x`
    Idempotence,
    /// every right translation `a -> a * b` is a bijection
    RightInvertibility,
    /// `(x * y) * z = (x * z) * (y * z)`
    SelfDistributivity,
    /// `R1(x /y, z) * y = R1(x, z * y)`
    Eq1,
    /// `R2(x /y, z) = R2(x, z * y) /y`
    Eq2,
    /// `(y /R1(x, z)) * x = (y * R2(x, z)) /z`
    Eq3,
    /// `R2(x, y) = R1(y, x * y)`
    Eq4,
    /// `R1(x, y) * R2(x, y) = R2(y, x * y)`
    Eq5,
}

impl Axiom {
    pub const QUANDLE: [Axiom; 3] = [
        Axiom::Idempotence,
        Axiom::RightInvertibility,
        Axiom::SelfDistributivity,
    ];
    pub const SINGQUANDLE: [Axiom; 5] = [Axiom::Eq1, Axiom::Eq2, Axiom::Eq3, Axiom::Eq4, Axiom::Eq5];
    pub const ALL: [Axiom; 8] = [
        Axiom::Idempotence,
        Axiom::RightInvertibility,
        Axiom::SelfDistributivity,
        Axiom::Eq1,
        Axiom::Eq2,
        Axiom::Eq3,
        Axiom::Eq4,
        Axiom::Eq5,
    ];

    /// Stable short label used in reports and CLI output.
    pub fn label(self) -> &'static str {
        match self {
            Axiom::Idempotence => "Q1 idempotence",
            Axiom::RightInvertibility => "Q2 right-invertibility",
            Axiom::SelfDistributivity => "Q3 self-distributivity",
            Axiom::Eq1 => "S1 omega4a (R1)",
            Axiom::Eq2 => "S2 omega4a (R2)",
            Axiom::Eq3 => "S3 omega4e",
            Axiom::Eq4 => "S4 omega5a (R2 = R1(y, x*y))",
            Axiom::Eq5 => "S5 omega5a (R1*R2)",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Values of the quantified variables `x, y, z, ...` at a violation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness(pub Vec<Element>);

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(NAMES)
            .map(|(v, name)| format!("{name}={v}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomStatus {
    Pass,
    Fail(Witness),
    /// Not evaluated because a prerequisite axiom failed.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure<'a> {
    pub axiom: Axiom,
    pub witness: &'a Witness,
}

impl fmt::Display for AxiomFailure<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.axiom, self.witness)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    entries: Vec<(Axiom, AxiomStatus)>,
}

impl AxiomReport {
    pub fn entries(&self) -> &[(Axiom, AxiomStatus)] {
        &self.entries
    }

    pub fn status(&self, axiom: Axiom) -> Option<&AxiomStatus> {
        self.entries.iter().find(|(a, _)| *a == axiom).map(|(_, s)| s)
    }

    /// True iff every checked axiom passed (skipped axioms count as not passed).
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, s)| *s == AxiomStatus::Pass)
    }

    pub fn passes(&self, axiom: Axiom) -> bool {
        self.status(axiom) == Some(&AxiomStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = AxiomFailure<'_>> {
        self.entries.iter().filter_map(|(a, s)| match s {
            AxiomStatus::Fail(w) => Some(AxiomFailure {
                axiom: *a,
                witness: w,
            }),
            _ => None,
        })
    }

    pub fn first_failure(&self) -> Option<AxiomFailure<'_>> {
        self.failures().next()
    }
}

impl fmt::Display for AxiomReport {
    /// One `PASS` / `FAIL <witness>` / `SKIP` line per axiom.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (axiom, status) in &self.entries {
            match status {
                AxiomStatus::Pass => writeln!(f, "{axiom}: PASS")?,
                AxiomStatus::Fail(w) => writeln!(f, "{axiom}: FAIL {w}")?,
                AxiomStatus::Skipped => writeln!(f, "{axiom}: SKIP")?,
            }
        }
        Ok(())
    }
}

fn status(w: Option<Vec<Element>>) -> AxiomStatus {
    match w {
        Some(w) => AxiomStatus::Fail(Witness(w)),
        None => AxiomStatus::Pass,
    }
}

/// Checks quandle axioms (1)-(3) on `op`.
///
/// Self-distributivity is only evaluated when the first two axioms hold.
pub fn check_quandle(op: &OpTable) -> AxiomReport {
    let n = op.size();
    let idem = (0..n).find(|&x| op.get(x, x) != x).map(|x| vec![x]);

    // (x, y, z) with x < y and x*z = y*z
    let mut inv_witness = None;
    'outer: for x in 0..n {
        for y in x + 1..n {
            for z in 0..n {
                if op.get(x, z) == op.get(y, z) {
                    inv_witness = Some(vec![x, y, z]);
                    break 'outer;
                }
            }
        }
    }

    let distributivity = if idem.is_none() && inv_witness.is_none() {
        status(first_triple(n, |x, y, z| {
            op.get(op.get(x, y), z) == op.get(op.get(x, z), op.get(y, z))
        }))
    } else {
        AxiomStatus::Skipped
    };

    AxiomReport {
        entries: vec![
            (Axiom::Idempotence, status(idem)),
            (Axiom::RightInvertibility, status(inv_witness)),
            (Axiom::SelfDistributivity, distributivity),
        ],
    }
}

fn first_triple(n: usize, holds: impl Fn(Element, Element, Element) -> bool) -> Option<Vec<Element>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

fn first_pair(n: usize, holds: impl Fn(Element, Element) -> bool) -> Option<Vec<Element>> {
    for x in 0..n {
        for y in 0..n {
            if !holds(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// Table of the dual operation: `inv[a * b][b] = a`. Requires bijective columns.
pub(crate) fn dual_table(op: &OpTable) -> OpTable {
    let n = op.size();
    let mut entries = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            entries[op.get(a, b) * n + b] = a;
        }
    }
    OpTable::from_entries(n, entries).expect("dual of a valid table is valid")
}

/// Checks the five oriented-singquandle axioms given a valid quandle
/// operation `op` with dual `inv`.
pub(crate) fn singquandle_statuses(
    op: &OpTable,
    inv: &OpTable,
    r1: &OpTable,
    r2: &OpTable,
) -> Vec<(Axiom, AxiomStatus)> {
    let n = op.size();
    let eq1 = first_triple(n, |x, y, z| {
        op.get(r1.get(inv.get(x, y), z), y) == r1.get(x, op.get(z, y))
    });
    let eq2 = first_triple(n, |x, y, z| {
        r2.get(inv.get(x, y), z) == inv.get(r2.get(x, op.get(z, y)), y)
    });
    let eq3 = first_triple(n, |x, y, z| {
        op.get(inv.get(y, r1.get(x, z)), x) == inv.get(op.get(y, r2.get(x, z)), z)
    });
    let eq4 = first_pair(n, |x, y| r2.get(x, y) == r1.get(y, op.get(x, y)));
    let eq5 = first_pair(n, |x, y| {
        op.get(r1.get(x, y), r2.get(x, y)) == r2.get(y, op.get(x, y))
    });
    vec![
        (Axiom::Eq1, status(eq1)),
        (Axiom::Eq2, status(eq2)),
        (Axiom::Eq3, status(eq3)),
        (Axiom::Eq4, status(eq4)),
        (Axiom::Eq5, status(eq5)),
    ]
}

/// Checks all eight axioms of an oriented singquandle candidate `(op, r1, r2)`.
///
/// Quandle axioms are checked first; if any fails the singquandle axioms are
/// reported as skipped, since the dual operation they use need not exist.
pub fn check_oriented_singquandle(op: &OpTable, r1: &OpTable, r2: &OpTable) -> Result<AxiomReport> {
    let n = op.size();
    if r1.size() != n || r2.size() != n {
        return Err(Error::domain(format!(
            "table sizes differ: op={n}, r1={}, r2={}",
            r1.size(),
            r2.size()
        )));
    }
    let mut report = check_quandle(op);
    if report.all_pass() {
        let inv = dual_table(op);
        report.entries.extend(singquandle_statuses(op, &inv, r1, r2));
    } else {
        report
            .entries
            .extend(Axiom::SINGQUANDLE.iter().map(|&a| (a, AxiomStatus::Skipped)));
    }
    Ok(report)
}

pub(crate) fn report_from(entries: Vec<(Axiom, AxiomStatus)>) -> AxiomReport {
    AxiomReport { entries }
}
