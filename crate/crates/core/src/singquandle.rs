use crate::axioms::{check_oriented_singquandle, report_from, singquandle_statuses, Axiom, AxiomReport};
use crate::error::{Error, Result};
use crate::quandle::Quandle;
use crate::table::{Element, OpTable};

/// A quandle with two extra binary maps `R1`, `R2` satisfying the five
/// singular Reidemeister axioms. `R1` and `R2` need not be invertible.
///
/// Equality compares the three tables only; `notes` is free-form metadata
/// attached by constructors.
#[derive(Clone, Debug)]
pub struct OrientedSingquandle {
    quandle: Quandle,
    r1: OpTable,
    r2: OpTable,
    notes: Vec<String>,
}

impl PartialEq for OrientedSingquandle {
    fn eq(&self, other: &Self) -> bool {
        self.quandle == other.quandle && self.r1 == other.r1 && self.r2 == other.r2
    }
}

impl Eq for OrientedSingquandle {}

impl OrientedSingquandle {
    /// Validates all five singquandle axioms over the given quandle.
    pub fn new(quandle: Quandle, r1: OpTable, r2: OpTable) -> Result<Self> {
        let s = Self::new_unchecked(quandle, r1, r2)?;
        let report = s.check();
        if !report.all_pass() {
            return Err(Error::NotSingquandle(Box::new(report)));
        }
        Ok(s)
    }

    /// Builds from raw tables, validating everything.
    pub fn from_tables(op: OpTable, r1: OpTable, r2: OpTable) -> Result<Self> {
        let report = check_oriented_singquandle(&op, &r1, &r2)?;
        if !report.all_pass() {
            if Axiom::QUANDLE.iter().all(|&a| report.passes(a)) {
                return Err(Error::NotSingquandle(Box::new(report)));
            }
            return Err(Error::NotQuandle(Box::new(report)));
        }
        Ok(OrientedSingquandle {
            quandle: Quandle::new(op)?,
            r1,
            r2,
            notes: Vec::new(),
        })
    }

    /// Skips the singquandle axioms; only carrier sizes are checked. Colorings
    /// by such a structure are not guaranteed to be invariants.
    pub fn new_unchecked(quandle: Quandle, r1: OpTable, r2: OpTable) -> Result<Self> {
        let n = quandle.size();
        if r1.size() != n || r2.size() != n {
            return Err(Error::domain(format!(
                "table sizes differ: op={n}, r1={}, r2={}",
                r1.size(),
                r2.size()
            )));
        }
        Ok(OrientedSingquandle {
            quandle,
            r1,
            r2,
            notes: Vec::new(),
        })
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Full eight-axiom report (quandle axioms always pass here).
    pub fn check(&self) -> AxiomReport {
        let mut entries = crate::axioms::check_quandle(self.quandle.op()).entries().to_vec();
        entries.extend(singquandle_statuses(
            self.quandle.op(),
            self.quandle.dual(),
            &self.r1,
            &self.r2,
        ));
        report_from(entries)
    }

    pub fn size(&self) -> usize {
        self.quandle.size()
    }

    pub fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    pub fn op(&self) -> &OpTable {
        self.quandle.op()
    }

    pub fn r1(&self) -> &OpTable {
        &self.r1
    }

    pub fn r2(&self) -> &OpTable {
        &self.r2
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Transports the structure along a bijection `p` of the carrier.
    pub fn relabel(&self, p: &[Element]) -> Result<Self> {
        if p.len() != self.size() || !is_bijection(p, self.size()) {
            return Err(Error::domain("relabelling must be a bijection of the carrier"));
        }
        Ok(OrientedSingquandle {
            quandle: Quandle::new(self.op().permuted(p))?,
            r1: self.r1.permuted(p),
            r2: self.r2.permuted(p),
            notes: self.notes.clone(),
        })
    }
}

pub(crate) fn is_bijection(images: &[Element], m: usize) -> bool {
    if images.len() != m {
        return false;
    }
    let mut seen = vec![false; m];
    for &v in images {
        if v >= m || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// A total map from a carrier of size `images.len()` into one of size `target_size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureMap {
    target_size: usize,
    images: Vec<Element>,
}

impl StructureMap {
    pub fn new(images: Vec<Element>, target_size: usize) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&v| v >= target_size) {
            return Err(Error::domain(format!(
                "image {bad} out of range for target size {target_size}"
            )));
        }
        Ok(StructureMap {
            target_size,
            images,
        })
    }

    pub fn identity(n: usize) -> Self {
        StructureMap {
            target_size: n,
            images: (0..n).collect(),
        }
    }

    pub fn source_size(&self) -> usize {
        self.images.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.images[x]
    }

    pub fn is_bijective(&self) -> bool {
        self.source_size() == self.target_size && is_bijection(&self.images, self.target_size)
    }
}

/// Whether `f` commutes with `*`, `R1` and `R2`.
pub fn is_singquandle_homomorphism(
    f: &StructureMap,
    s: &OrientedSingquandle,
    t: &OrientedSingquandle,
) -> Result<bool> {
    if f.source_size() != s.size() || f.target_size() != t.size() {
        return Err(Error::domain(format!(
            "map {}->{} does not match structures of sizes {} and {}",
            f.source_size(),
            f.target_size(),
            s.size(),
            t.size()
        )));
    }
    let pairs = [(s.op(), t.op()), (s.r1(), t.r1()), (s.r2(), t.r2())];
    let n = s.size();
    for x in 0..n {
        for y in 0..n {
            for (src, dst) in pairs {
                if f.apply(src.get(x, y)) != dst.get(f.apply(x), f.apply(y)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
