//! Isomorphism search between finite oriented singquandles.
//!
//! Elements are first bucketed by an invariant profile; the search then
//! assigns images to `0, 1, ...` in order, trying candidate images in
//! ascending order, and checks every fully assigned instance of the three
//! operations as soon as it becomes decidable. The first complete assignment
//! found is therefore the lexicographically first isomorphism.

use crate::error::{Error, Result};
use crate::singquandle::{OrientedSingquandle, StructureMap};
use crate::table::{Element, OpTable};

pub const DEFAULT_ISO_LIMIT: usize = 12;

/// Isomorphism-invariant data attached to one element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Profile {
    r1_diag_fixed: bool,
    r2_diag_fixed: bool,
    /// number of `y` with `y * x = y`
    op_stabilised: usize,
    /// number of `y` with `R1(x, y) = x`, resp. `R2(x, y) = x`
    r1_row_fixed: usize,
    r2_row_fixed: usize,
}

fn profiles(s: &OrientedSingquandle) -> Vec<Profile> {
    let n = s.size();
    let count = |t: &OpTable, x: Element| (0..n).filter(|&y| t.get(x, y) == x).count();
    (0..n)
        .map(|x| Profile {
            r1_diag_fixed: s.r1().get(x, x) == x,
            r2_diag_fixed: s.r2().get(x, x) == x,
            op_stabilised: (0..n).filter(|&y| s.op().get(y, x) == y).count(),
            r1_row_fixed: count(s.r1(), x),
            r2_row_fixed: count(s.r2(), x),
        })
        .collect()
}

/// Finds the lexicographically first isomorphism `s -> t`, with the default
/// carrier bound.
pub fn find_isomorphism(s: &OrientedSingquandle, t: &OrientedSingquandle) -> Result<Option<StructureMap>> {
    find_isomorphism_bounded(s, t, DEFAULT_ISO_LIMIT)
}

/// As [`find_isomorphism`], refusing carriers larger than `limit`.
pub fn find_isomorphism_bounded(
    s: &OrientedSingquandle,
    t: &OrientedSingquandle,
    limit: usize,
) -> Result<Option<StructureMap>> {
    if s.size() != t.size() {
        return Ok(None);
    }
    let n = s.size();
    if n > limit {
        return Err(Error::TooLarge {
            what: "carrier size for isomorphism search",
            actual: n,
            limit,
        });
    }
    let ps = profiles(s);
    let pt = profiles(t);
    let mut sorted_s = ps.clone();
    let mut sorted_t = pt.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return Ok(None);
    }

    let candidates: Vec<Vec<Element>> = (0..n)
        .map(|x| (0..n).filter(|&y| ps[x] == pt[y]).collect())
        .collect();
    let mut search = Search {
        src: [s.op(), s.r1(), s.r2()],
        dst: [t.op(), t.r1(), t.r2()],
        candidates,
        image: vec![None; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        let images = search.image.iter().map(|v| v.expect("complete")).collect();
        return Ok(Some(StructureMap::new(images, n)?));
    }
    Ok(None)
}

struct Search<'a> {
    src: [&'a OpTable; 3],
    dst: [&'a OpTable; 3],
    candidates: Vec<Vec<Element>>,
    image: Vec<Option<Element>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, x: Element) -> bool {
        let n = self.image.len();
        if x == n {
            return true;
        }
        for i in 0..self.candidates[x].len() {
            let v = self.candidates[x][i];
            if self.used[v] {
                continue;
            }
            self.image[x] = Some(v);
            self.used[v] = true;
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.used[v] = false;
            self.image[x] = None;
        }
        false
    }

    /// Checks every instance `op(a, b)` with `max(a, b) = x` whose result is
    /// already mapped. Instances with an unmapped result are revisited when
    /// the result gets its image, because `op(a, b)` then has all three
    /// elements assigned and `x` is the largest of them at that time.
    fn consistent(&self, x: Element) -> bool {
        let assigned = x + 1;
        for (src, dst) in self.src.iter().zip(&self.dst) {
            for a in 0..assigned {
                for b in 0..assigned {
                    if a != x && b != x {
                        // pairs of earlier elements: only recheck when the result is x
                        if src.get(a, b) != x {
                            continue;
                        }
                    }
                    let r = src.get(a, b);
                    if let (Some(fa), Some(fb), Some(fr)) = (self.image[a], self.image[b], self.image[r]) {
                        if dst.get(fa, fb) != fr {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}
