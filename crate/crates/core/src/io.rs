//! Text formats for structures and groups.
//!
//! ```text
//! singquandle n=3      quandle n=3      group n=2
//! op:                  op:              mul:
//! 0 2 1                0 2 1            0 1
//! ...                  ...              1 0
//! r1:
//! ...
//! r2:
//! ...
//! ```
//!
//! Each block holds `n` rows of `n` entries, row = left operand. Blank lines
//! and `#` comments are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::quandle::Quandle;
use crate::singquandle::OrientedSingquandle;
use crate::table::OpTable;

/// Which header a structure file carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Singquandle,
    Quandle,
    Group,
}

impl FileKind {
    fn header(self) -> &'static str {
        match self {
            FileKind::Singquandle => "singquandle",
            FileKind::Quandle => "quandle",
            FileKind::Group => "group",
        }
    }

    fn blocks(self) -> &'static [&'static str] {
        match self {
            FileKind::Singquandle => &["op", "r1", "r2"],
            FileKind::Quandle => &["op"],
            FileKind::Group => &["mul"],
        }
    }
}

/// Unvalidated tables read from a file, in block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFile {
    pub kind: FileKind,
    pub tables: Vec<OpTable>,
}

/// Parses any of the three formats without checking algebraic axioms.
pub fn parse_table_file(text: &str) -> Result<TableFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let mut words = header.split_whitespace();
    let kind = match words.next() {
        Some("singquandle") => FileKind::Singquandle,
        Some("quandle") => FileKind::Quandle,
        Some("group") => FileKind::Group,
        other => {
            return Err(Error::parse(
                line,
                format!("expected header `singquandle`, `quandle` or `group`, got `{}`", other.unwrap_or("")),
            ))
        }
    };
    let n: usize = words
        .next()
        .and_then(|w| w.strip_prefix("n="))
        .and_then(|v| v.parse().ok())
        .filter(|&v| v > 0)
        .ok_or_else(|| Error::parse(line, "header must be followed by `n=<positive size>`"))?;
    if words.next().is_some() {
        return Err(Error::parse(line, "unexpected text after header"));
    }

    let mut tables = Vec::new();
    for &block in kind.blocks() {
        let (line, label) = lines
            .next()
            .ok_or_else(|| Error::parse(line, format!("missing `{block}:` block")))?;
        if label != format!("{block}:") {
            return Err(Error::parse(line, format!("expected `{block}:`, got `{label}`")));
        }
        let mut entries = Vec::with_capacity(n * n);
        let mut last = line;
        for row in 0..n {
            let (line, text) = lines
                .next()
                .ok_or_else(|| Error::parse(last, format!("`{block}:` block ends after {row} of {n} rows")))?;
            last = line;
            let values: Vec<usize> = text
                .split_whitespace()
                .map(|w| w.parse::<usize>().map_err(|_| Error::parse(line, format!("`{w}` is not an element index"))))
                .collect::<Result<_>>()?;
            if values.len() != n {
                return Err(Error::parse(line, format!("row has {} entries, expected {n}", values.len())));
            }
            if let Some(bad) = values.iter().find(|&&v| v >= n) {
                return Err(Error::parse(line, format!("entry {bad} out of range 0..{n}")));
            }
            entries.extend(values);
        }
        tables.push(OpTable::from_entries(n, entries)?);
    }
    if let Some((line, extra)) = lines.next() {
        return Err(Error::parse(line, format!("unexpected trailing content `{extra}`")));
    }
    Ok(TableFile { kind, tables })
}

fn expect_kind(f: &TableFile, kinds: &[FileKind]) -> Result<()> {
    if kinds.contains(&f.kind) {
        return Ok(());
    }
    let wanted: Vec<&str> = kinds.iter().map(|k| k.header()).collect();
    Err(Error::parse(1, format!("expected a {} file, got `{}`", wanted.join(" or "), f.kind.header())))
}

/// Reads and validates a singquandle file.
pub fn read_singquandle(text: &str) -> Result<OrientedSingquandle> {
    let f = parse_table_file(text)?;
    expect_kind(&f, &[FileKind::Singquandle])?;
    let [op, r1, r2]: [OpTable; 3] = f.tables.try_into().expect("three blocks");
    OrientedSingquandle::from_tables(op, r1, r2)
}

/// Reads a quandle file, or the quandle underlying a singquandle file.
pub fn read_quandle(text: &str) -> Result<Quandle> {
    let f = parse_table_file(text)?;
    expect_kind(&f, &[FileKind::Quandle, FileKind::Singquandle])?;
    Quandle::new(f.tables.into_iter().next().expect("op block"))
}

pub fn read_group(text: &str) -> Result<FiniteGroup> {
    let f = parse_table_file(text)?;
    expect_kind(&f, &[FileKind::Group])?;
    FiniteGroup::from_table(f.tables.into_iter().next().expect("mul block"))
}

fn write_file(kind: FileKind, tables: &[&OpTable]) -> String {
    let mut out = format!("{} n={}\n", kind.header(), tables[0].size());
    for (block, t) in kind.blocks().iter().zip(tables) {
        let _ = write!(out, "{block}:\n{t}");
    }
    out
}

pub fn write_singquandle(s: &OrientedSingquandle) -> String {
    write_file(FileKind::Singquandle, &[s.op(), s.r1(), s.r2()])
}

pub fn write_quandle(q: &Quandle) -> String {
    write_file(FileKind::Quandle, &[q.op()])
}

pub fn write_group(g: &FiniteGroup) -> String {
    write_file(FileKind::Group, &[g.table()])
}
