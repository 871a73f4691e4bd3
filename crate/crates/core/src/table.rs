//! Finite binary operation tables.
//!
//! Elements of a carrier of size `n` are the indices `0..n`. Every binary
//! operation in this crate (quandle operation, its dual, `R1`, `R2`, group
//! multiplication) is stored as a dense row-major `n x n` table where the row
//! is the left operand.

use std::fmt;

use crate::error::{Error, Result};

/// Index of an element in a finite carrier.
pub type Element = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OpTable {
    n: usize,
    entries: Vec<Element>,
}

impl OpTable {
    /// Builds a table from rows. Fails if the table is empty, not square, or
    /// holds an entry outside `0..n`.
    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::domain("operation table must have at least one element"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::domain(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Self::from_entries(n, entries)
    }

    /// Builds a table from a flat row-major vector.
    pub fn from_entries(n: usize, entries: Vec<Element>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("operation table must have at least one element"));
        }
        if entries.len() != n * n {
            return Err(Error::domain(format!(
                "expected {} entries for n={n}, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&e| e >= n) {
            return Err(Error::domain(format!("entry {bad} out of range for n={n}")));
        }
        Ok(OpTable { n, entries })
    }

    /// Tabulates `f` over all pairs. `f` must return values in `0..n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(Element, Element) -> Element) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(f(x, y));
            }
        }
        Self::from_entries(n, entries)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Unchecked lookup; panics on out-of-range indices.
    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        debug_assert!(x < self.n && y < self.n);
        self.entries[x * self.n + y]
    }

    /// Checked lookup.
    pub fn apply(&self, x: Element, y: Element) -> Result<Element> {
        if x >= self.n || y >= self.n {
            return Err(Error::domain(format!(
                "index ({x}, {y}) out of range for n={}",
                self.n
            )));
        }
        Ok(self.get(x, y))
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.entries[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    /// Whether `a -> a * b` is a permutation of the carrier.
    pub fn column_is_bijective(&self, b: Element) -> bool {
        let mut seen = vec![false; self.n];
        for a in 0..self.n {
            let v = self.get(a, b);
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// The table of `(x, y) -> f(x, y)` relabelled through a bijection:
    /// `result[p(x)][p(y)] = p(self[x][y])`.
    pub fn permuted(&self, p: &[Element]) -> OpTable {
        let mut entries = vec![0; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                entries[p[x] * self.n + p[y]] = p[self.get(x, y)];
            }
        }
        OpTable { n: self.n, entries }
    }
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for OpTable {
    /// Space-separated rows, one per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
