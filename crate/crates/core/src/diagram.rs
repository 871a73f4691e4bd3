//! Oriented singular link diagrams as crossing lists over labeled semiarcs.
//!
//! Text format, one crossing per line:
//!
//! ```text
//! P u o u' o'    positive: under_in over_in under_out over_out
//! N u o u' o'    negative, same roles
//! S l r l' r'    singular: in_left in_right out_left out_right
//! ```
//!
//! `#` starts a comment; blank lines are ignored. A diagram is closed when
//! every semiarc is consumed by exactly one crossing input and produced by
//! exactly one crossing output. A semiarc may leave and re-enter the same
//! crossing (a kink), so the four ports of one crossing need not be distinct.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Positive semiarc label, `1..=S` in a normalized diagram.
pub type SemiarcId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingKind {
    Positive,
    Negative,
    Singular,
}

impl CrossingKind {
    pub fn code(self) -> char {
        match self {
            CrossingKind::Positive => 'P',
            CrossingKind::Negative => 'N',
            CrossingKind::Singular => 'S',
        }
    }

    fn from_code(s: &str) -> Option<Self> {
        match s {
            "P" => Some(CrossingKind::Positive),
            "N" => Some(CrossingKind::Negative),
            "S" => Some(CrossingKind::Singular),
            _ => None,
        }
    }
}

/// One crossing. Ports 0 and 1 are inputs, ports 2 and 3 outputs, in the
/// role order of the text format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub ports: [SemiarcId; 4],
}

impl Crossing {
    pub fn new(kind: CrossingKind, ports: [SemiarcId; 4]) -> Self {
        Crossing { kind, ports }
    }

    pub fn inputs(&self) -> [SemiarcId; 2] {
        [self.ports[0], self.ports[1]]
    }

    pub fn outputs(&self) -> [SemiarcId; 2] {
        [self.ports[2], self.ports[3]]
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.ports;
        write!(f, "{} {a} {b} {c} {d}", self.kind.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SingularDiagram {
    crossings: Vec<Crossing>,
    semiarc_count: usize,
}

impl SingularDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Relabels semiarcs to `1..=S` by first appearance and validates closure.
    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self> {
        let d = normalize(crossings);
        let report = validate_diagram(&d);
        if !report.is_valid() {
            return Err(Error::InvalidDiagram(report.violations));
        }
        Ok(d)
    }

    /// Stores the crossings as given, without validation.
    pub fn new_unchecked(crossings: Vec<Crossing>, semiarc_count: usize) -> Self {
        SingularDiagram {
            crossings,
            semiarc_count,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn semiarc_count(&self) -> usize {
        self.semiarc_count
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn count_kind(&self, kind: CrossingKind) -> usize {
        self.crossings.iter().filter(|c| c.kind == kind).count()
    }
}

impl fmt::Display for SingularDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_diagram(self))
    }
}

fn normalize(crossings: Vec<Crossing>) -> SingularDiagram {
    let mut map: HashMap<SemiarcId, SemiarcId> = HashMap::new();
    let crossings: Vec<Crossing> = crossings
        .into_iter()
        .map(|c| {
            let ports = c.ports.map(|p| {
                let next = map.len() + 1;
                *map.entry(p).or_insert(next)
            });
            Crossing::new(c.kind, ports)
        })
        .collect();
    SingularDiagram {
        crossings,
        semiarc_count: map.len(),
    }
}

/// Outcome of [`validate_diagram`]; empty `violations` means valid.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiagramReport {
    pub violations: Vec<String>,
}

impl DiagramReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for DiagramReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks label range and closure, reporting every violation.
pub fn validate_diagram(d: &SingularDiagram) -> DiagramReport {
    let s = d.semiarc_count;
    let mut violations = Vec::new();
    let mut as_input = vec![0usize; s + 1];
    let mut as_output = vec![0usize; s + 1];
    for (i, c) in d.crossings.iter().enumerate() {
        for (k, &p) in c.ports.iter().enumerate() {
            if p == 0 || p > s {
                violations.push(format!("crossing {}: label {p} outside 1..={s}", i + 1));
            } else if k < 2 {
                as_input[p] += 1;
            } else {
                as_output[p] += 1;
            }
        }
    }
    for label in 1..=s {
        match as_input[label] {
            1 => {}
            0 => violations.push(format!("semiarc {label} is never consumed as an input")),
            k => violations.push(format!("semiarc {label} is used {k} times as an input")),
        }
        match as_output[label] {
            1 => {}
            0 => violations.push(format!("semiarc {label} is never produced as an output")),
            k => violations.push(format!("semiarc {label} is used {k} times as an output")),
        }
    }
    DiagramReport { violations }
}

/// Parses the text format, checks closure and normalizes labels to `1..=S`
/// in order of first appearance. Errors name the offending line.
pub fn parse_diagram(text: &str) -> Result<SingularDiagram> {
    let mut crossings = Vec::new();
    // label -> line of its input / output use
    let mut input_line: HashMap<SemiarcId, usize> = HashMap::new();
    let mut output_line: HashMap<SemiarcId, usize> = HashMap::new();
    let mut first_seen: Vec<SemiarcId> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let kind = CrossingKind::from_code(fields[0])
            .ok_or_else(|| Error::parse(line_no, format!("unknown crossing kind `{}`", fields[0])))?;
        if fields.len() != 5 {
            return Err(Error::parse(
                line_no,
                format!("expected a kind and 4 labels, got {} fields", fields.len()),
            ));
        }
        let mut ports = [0; 4];
        for (k, f) in fields[1..].iter().enumerate() {
            let label: SemiarcId = f
                .parse()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| Error::parse(line_no, format!("label `{f}` is not a positive integer")))?;
            let (seen, role) = if k < 2 {
                (&mut input_line, "input")
            } else {
                (&mut output_line, "output")
            };
            if let Some(prev) = seen.insert(label, line_no) {
                return Err(Error::parse(
                    line_no,
                    format!("semiarc {label} used twice as an {role} (also on line {prev})"),
                ));
            }
            if !first_seen.contains(&label) {
                first_seen.push(label);
            }
            ports[k] = label;
        }
        crossings.push(Crossing::new(kind, ports));
    }

    for &label in &first_seen {
        if let Some(&line) = input_line.get(&label).filter(|_| !output_line.contains_key(&label)) {
            return Err(Error::parse(line, format!("semiarc {label} is consumed but never produced")));
        }
        if let Some(&line) = output_line.get(&label).filter(|_| !input_line.contains_key(&label)) {
            return Err(Error::parse(line, format!("semiarc {label} is produced but never consumed")));
        }
    }
    SingularDiagram::from_crossings(crossings)
}

/// Canonical text: one crossing per line, each line newline-terminated.
pub fn serialize_diagram(d: &SingularDiagram) -> String {
    d.crossings.iter().map(|c| format!("{c}\n")).collect()
}
