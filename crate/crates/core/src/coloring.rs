//! Colorings of singular diagrams by oriented singquandles.
//!
//! Crossing rules, with `c` the coloring:
//!
//! * positive: `c(over_out) = c(over_in)`, `c(under_out) = c(under_in) * c(over_in)`
//! * negative: `c(over_out) = c(over_in)`, `c(under_out) = c(under_in) /c(over_in)`
//! * singular: `c(out_left) = R1(c(in_left), c(in_right))`,
//!   `c(out_right) = R2(c(in_left), c(in_right))`
//!
//! The search assigns the lowest unassigned semiarc, trying values in
//! ascending order, then propagates every port that the other ports of a
//! crossing determine. Since all assigned semiarcs below the branch point are
//! shared by sibling branches, colorings are produced in lexicographic order.

use crate::diagram::{CrossingKind, SingularDiagram};
use crate::error::{Error, Result};
use crate::singquandle::OrientedSingquandle;
use crate::table::Element;

/// Colors of semiarcs `1..=S`, stored at indices `0..S`.
pub type Coloring = Vec<Element>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSet {
    /// Sorted and duplicate-free.
    pub colorings: Vec<Coloring>,
}

impl ColoringSet {
    pub fn count(&self) -> usize {
        self.colorings.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoringLimits {
    pub max_semiarcs: usize,
    pub max_carrier: usize,
}

impl Default for ColoringLimits {
    fn default() -> Self {
        ColoringLimits {
            max_semiarcs: 64,
            max_carrier: 64,
        }
    }
}

impl ColoringLimits {
    fn check(&self, d: &SingularDiagram, s: &OrientedSingquandle) -> Result<()> {
        if d.semiarc_count() > self.max_semiarcs {
            return Err(Error::TooLarge {
                what: "semiarc count",
                actual: d.semiarc_count(),
                limit: self.max_semiarcs,
            });
        }
        if s.size() > self.max_carrier {
            return Err(Error::TooLarge {
                what: "carrier size for coloring",
                actual: s.size(),
                limit: self.max_carrier,
            });
        }
        Ok(())
    }
}

/// Crossing with 0-based ports.
#[derive(Clone, Copy)]
struct Rule {
    kind: CrossingKind,
    ports: [usize; 4],
}

struct Solver<'a> {
    s: &'a OrientedSingquandle,
    rules: Vec<Rule>,
    /// rules touching each semiarc
    watch: Vec<Vec<usize>>,
}

const UNSET: Element = Element::MAX;

impl<'a> Solver<'a> {
    fn new(d: &SingularDiagram, s: &'a OrientedSingquandle) -> Self {
        let rules: Vec<Rule> = d
            .crossings()
            .iter()
            .map(|c| Rule {
                kind: c.kind,
                ports: c.ports.map(|p| p - 1),
            })
            .collect();
        let mut watch = vec![Vec::new(); d.semiarc_count()];
        for (i, r) in rules.iter().enumerate() {
            for &p in &r.ports {
                if !watch[p].contains(&i) {
                    watch[p].push(i);
                }
            }
        }
        Solver { s, rules, watch }
    }

    /// Sets `c[p] = v`, queueing `p`; `false` on conflict.
    fn set(c: &mut [Element], queue: &mut Vec<usize>, p: usize, v: Element) -> bool {
        if c[p] == UNSET {
            c[p] = v;
            queue.push(p);
            true
        } else {
            c[p] == v
        }
    }

    /// Infers forced ports of one rule; `false` on contradiction.
    fn apply(&self, r: Rule, c: &mut [Element], queue: &mut Vec<usize>) -> bool {
        let q = self.s.quandle();
        let [a, b, a2, b2] = r.ports;
        match r.kind {
            CrossingKind::Positive | CrossingKind::Negative => {
                // over strand: b2 = b
                if c[b] != UNSET && !Self::set(c, queue, b2, c[b]) {
                    return false;
                }
                if c[b2] != UNSET && !Self::set(c, queue, b, c[b2]) {
                    return false;
                }
                if c[b] == UNSET {
                    return true;
                }
                let o = c[b];
                let positive = r.kind == CrossingKind::Positive;
                if c[a] != UNSET {
                    let u2 = if positive { q.mul(c[a], o) } else { q.div(c[a], o) };
                    return Self::set(c, queue, a2, u2);
                }
                if c[a2] != UNSET {
                    let u = if positive { q.div(c[a2], o) } else { q.mul(c[a2], o) };
                    return Self::set(c, queue, a, u);
                }
                true
            }
            CrossingKind::Singular => {
                if c[a] == UNSET || c[b] == UNSET {
                    return true;
                }
                let (x, y) = (c[a], c[b]);
                Self::set(c, queue, a2, self.s.r1().get(x, y)) && Self::set(c, queue, b2, self.s.r2().get(x, y))
            }
        }
    }

    fn propagate(&self, c: &mut [Element], mut queue: Vec<usize>) -> bool {
        while let Some(p) = queue.pop() {
            for &ri in &self.watch[p] {
                if !self.apply(self.rules[ri], c, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    /// Depth-first search; `visit` returns `false` to stop. Returns `false`
    /// once stopped.
    fn search(&self, c: &[Element], from: usize, visit: &mut dyn FnMut(&[Element]) -> bool) -> bool {
        let Some(p) = (from..c.len()).find(|&i| c[i] == UNSET) else {
            return visit(c);
        };
        for v in 0..self.s.size() {
            let mut next = c.to_vec();
            next[p] = v;
            if self.propagate(&mut next, vec![p]) && !self.search(&next, p + 1, visit) {
                return false;
            }
        }
        true
    }
}

fn run(
    d: &SingularDiagram,
    s: &OrientedSingquandle,
    limits: ColoringLimits,
    visit: &mut dyn FnMut(&[Element]) -> bool,
) -> Result<()> {
    limits.check(d, s)?;
    let solver = Solver::new(d, s);
    solver.search(&vec![UNSET; d.semiarc_count()], 0, visit);
    Ok(())
}

/// All colorings in lexicographic order, at most `limit` of them.
pub fn enumerate_colorings_with(
    d: &SingularDiagram,
    s: &OrientedSingquandle,
    limit: Option<usize>,
    limits: ColoringLimits,
) -> Result<ColoringSet> {
    let mut colorings = Vec::new();
    if limit != Some(0) {
        run(d, s, limits, &mut |c| {
            colorings.push(c.to_vec());
            limit.is_none_or(|l| colorings.len() < l)
        })?;
    }
    Ok(ColoringSet { colorings })
}

pub fn enumerate_colorings(d: &SingularDiagram, s: &OrientedSingquandle, limit: Option<usize>) -> Result<ColoringSet> {
    enumerate_colorings_with(d, s, limit, ColoringLimits::default())
}

pub fn count_colorings_with(d: &SingularDiagram, s: &OrientedSingquandle, limits: ColoringLimits) -> Result<u64> {
    let mut count = 0u64;
    run(d, s, limits, &mut |_| {
        count += 1;
        true
    })?;
    Ok(count)
}

/// Number of colorings, without storing them.
pub fn count_colorings(d: &SingularDiagram, s: &OrientedSingquandle) -> Result<u64> {
    count_colorings_with(d, s, ColoringLimits::default())
}

/// Whether the coloring counts of `d1` and `d2` differ.
pub fn counts_distinguish(d1: &SingularDiagram, d2: &SingularDiagram, s: &OrientedSingquandle) -> Result<bool> {
    Ok(count_colorings(d1, s)? != count_colorings(d2, s)?)
}

/// Warnings for structures whose colorings are not invariants.
pub fn coloring_diagnostics(s: &OrientedSingquandle) -> Vec<String> {
    s.check()
        .failures()
        .map(|f| format!("warning: structure fails {f}; coloring counts are not invariants"))
        .collect()
}
