//! Exhaustive search for all `(R1, R2)` making a quandle an oriented
//! singquandle.
//!
//! `R2` is forced by `R2(x, y) = R1(y, x * y)`, so only `R1` is searched.
//! After substituting `R2`, every instance of the remaining four axioms reads
//! at most three entries of `R1`, at positions fixed by the quandle alone.
//! Each instance is therefore a small constraint over `R1` entries; entries
//! are assigned in row-major order with ascending values, and a constraint is
//! evaluated as soon as its last entry is assigned. Solutions come out in
//! lexicographic order of the row-major `R1` table.

use crate::error::{Error, Result};
use crate::quandle::Quandle;
use crate::singquandle::OrientedSingquandle;
use crate::table::{Element, OpTable};

pub const DEFAULT_ENUM_LIMIT: usize = 4;

#[derive(Clone, Copy, Debug)]
enum Kind {
    /// `R1(a) * y = R1(b)`
    Eq1 { y: Element },
    /// `R1(a) = R1(b) /y`
    Eq2 { y: Element },
    /// `(y /R1(a)) * x = (y * R1(b)) /z`
    Eq3 { x: Element, y: Element, z: Element },
    /// `R1(a) * R1(b) = R1(c)`
    Eq5,
}

#[derive(Clone, Copy, Debug)]
struct Constraint {
    kind: Kind,
    /// flat `R1` positions read by the constraint
    cells: [usize; 3],
}

impl Constraint {
    fn holds(&self, q: &Quandle, r1: &[Element]) -> bool {
        let [a, b, c] = self.cells.map(|i| r1[i]);
        match self.kind {
            Kind::Eq1 { y } => q.mul(a, y) == b,
            Kind::Eq2 { y } => a == q.div(b, y),
            Kind::Eq3 { x, y, z } => q.mul(q.div(y, a), x) == q.div(q.mul(y, b), z),
            Kind::Eq5 => q.mul(a, b) == c,
        }
    }

    fn last_cell(&self) -> usize {
        *self.cells.iter().max().expect("nonempty")
    }
}

fn constraints(q: &Quandle) -> Vec<Constraint> {
    let n = q.size();
    let cell = |x: Element, y: Element| x * n + y;
    // position of R2(x, y) = R1(y, x * y)
    let r2 = |x: Element, y: Element| cell(y, q.mul(x, y));
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let a = cell(q.div(x, y), z);
                let b = cell(x, q.mul(z, y));
                out.push(Constraint {
                    kind: Kind::Eq1 { y },
                    cells: [a, b, b],
                });
                let a = r2(q.div(x, y), z);
                let b = r2(x, q.mul(z, y));
                out.push(Constraint {
                    kind: Kind::Eq2 { y },
                    cells: [a, b, b],
                });
                out.push(Constraint {
                    kind: Kind::Eq3 { x, y, z },
                    cells: [cell(x, z), r2(x, z), r2(x, z)],
                });
            }
            out.push(Constraint {
                kind: Kind::Eq5,
                cells: [cell(x, y), r2(x, y), r2(y, q.mul(x, y))],
            });
        }
    }
    out
}

/// Tabulates `R2(x, y) = R1(y, x * y)`.
pub fn derived_r2(q: &Quandle, r1: &OpTable) -> OpTable {
    let n = q.size();
    OpTable::from_fn(n, |x, y| r1.get(y, q.mul(x, y))).expect("entries come from a valid table")
}

struct Enumerator<'a> {
    q: &'a Quandle,
    by_last: Vec<Vec<Constraint>>,
    r1: Vec<Element>,
}

impl Enumerator<'_> {
    fn new(q: &Quandle) -> Enumerator<'_> {
        let n = q.size();
        let mut by_last = vec![Vec::new(); n * n];
        for c in constraints(q) {
            by_last[c.last_cell()].push(c);
        }
        Enumerator {
            q,
            by_last,
            r1: vec![0; n * n],
        }
    }

    /// Depth-first search; `visit` returns `false` to stop.
    fn run(&mut self, pos: usize, visit: &mut dyn FnMut(&[Element]) -> bool) -> bool {
        if pos == self.r1.len() {
            return visit(&self.r1);
        }
        for v in 0..self.q.size() {
            self.r1[pos] = v;
            if self.by_last[pos].iter().all(|c| c.holds(self.q, &self.r1)) && !self.run(pos + 1, visit) {
                return false;
            }
        }
        true
    }
}

fn guard(q: &Quandle, limit: usize) -> Result<()> {
    if q.size() > limit {
        return Err(Error::TooLarge {
            what: "carrier size for singquandle enumeration",
            actual: q.size(),
            limit,
        });
    }
    Ok(())
}

fn build(q: &Quandle, r1: &[Element]) -> OrientedSingquandle {
    let n = q.size();
    let r1 = OpTable::from_entries(n, r1.to_vec()).expect("valid entries");
    let r2 = derived_r2(q, &r1);
    OrientedSingquandle::new(q.clone(), r1, r2).expect("search only yields solutions")
}

/// All oriented singquandle structures on `q`, in lexicographic order of
/// `R1`, stopping after `max_results` if given. Carriers above `size_limit`
/// are refused.
pub fn enumerate_singquandles_bounded(
    q: &Quandle,
    max_results: Option<usize>,
    size_limit: usize,
) -> Result<Vec<OrientedSingquandle>> {
    guard(q, size_limit)?;
    let mut out = Vec::new();
    if max_results == Some(0) {
        return Ok(out);
    }
    let mut e = Enumerator::new(q);
    e.run(0, &mut |r1| {
        out.push(build(q, r1));
        max_results.is_none_or(|m| out.len() < m)
    });
    Ok(out)
}

/// [`enumerate_singquandles_bounded`] with the default carrier bound.
pub fn enumerate_singquandles(q: &Quandle, max_results: Option<usize>) -> Result<Vec<OrientedSingquandle>> {
    enumerate_singquandles_bounded(q, max_results, DEFAULT_ENUM_LIMIT)
}

/// Number of oriented singquandle structures on `q`.
///
/// `R1` entries linked by some constraint form connected components that can
/// be solved independently; the total is the product of per-component
/// counts. Entries touched by no constraint contribute a factor `n` each.
pub fn count_singquandles(q: &Quandle, size_limit: usize) -> Result<u128> {
    guard(q, size_limit)?;
    let n = q.size();
    let cells = n * n;
    let all = constraints(q);

    let mut parent: Vec<usize> = (0..cells).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in &all {
        let r = find(&mut parent, c.cells[0]);
        for &other in &c.cells[1..] {
            let o = find(&mut parent, other);
            parent[o] = r;
        }
    }

    let mut total: u128 = 1;
    let mut done = vec![false; cells];
    for start in 0..cells {
        let root = find(&mut parent, start);
        if done[root] {
            continue;
        }
        done[root] = true;
        let members: Vec<usize> = (0..cells).filter(|&c| find(&mut parent, c) == root).collect();
        let local: Vec<Constraint> = all
            .iter()
            .copied()
            .filter(|c| find(&mut parent, c.cells[0]) == root)
            .collect();
        total = total
            .checked_mul(count_component(q, &members, &local))
            .ok_or_else(|| Error::domain("structure count overflows u128"))?;
        if total == 0 {
            break;
        }
    }
    Ok(total)
}

fn count_component(q: &Quandle, members: &[usize], constraints: &[Constraint]) -> u128 {
    let n = q.size();
    let order: std::collections::HashMap<usize, usize> =
        members.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut by_last = vec![Vec::new(); members.len()];
    for c in constraints {
        let last = c.cells.iter().map(|cell| order[cell]).max().expect("nonempty");
        by_last[last].push(*c);
    }
    let mut r1 = vec![0; n * n];
    fn rec(
        q: &Quandle,
        members: &[usize],
        by_last: &[Vec<Constraint>],
        r1: &mut [Element],
        i: usize,
    ) -> u128 {
        if i == members.len() {
            return 1;
        }
        let mut count = 0;
        for v in 0..q.size() {
            r1[members[i]] = v;
            if by_last[i].iter().all(|c| c.holds(q, r1)) {
                count += rec(q, members, by_last, r1, i + 1);
            }
        }
        count
    }
    rec(q, members, &by_last, &mut r1, 0)
}
