//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's checker, group builders or colorer; the
//! groups are generated from concrete permutations and matrices, the axioms
//! are evaluated formula by formula, and colorings are found by trying every
//! assignment.

#![allow(dead_code)]

use std::collections::HashMap;

use singq::constructions::{
    abelian_fg_singquandle, affine_singquandle, alexander_singquandle, conj_solution_singquandle, mod_inverse,
    power_map, prop_family_singquandle,
};
use singq::diagram::{CrossingKind, SingularDiagram};
use singq::group::{cyclic_group, dihedral_group, direct_product, quaternion_group, symmetric_group, FiniteGroup};
use singq::OrientedSingquandle;

/// A group as a plain multiplication table, built by closing generators.
pub struct OracleGroup {
    pub name: &'static str,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub e: usize,
}

impl OracleGroup {
    fn generate<T: Clone + Eq + std::hash::Hash>(
        name: &'static str,
        identity: T,
        gens: &[T],
        op: impl Fn(&T, &T) -> T,
    ) -> Self {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = op(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| index[&op(&elems[a], &elems[b])]).collect())
            .collect();
        let inv = (0..n).map(|a| (0..n).find(|&b| mul[a][b] == 0).unwrap()).collect();
        OracleGroup { name, mul, inv, e: 0 }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn m(&self, word: &[usize]) -> usize {
        word.iter().fold(self.e, |acc, &w| self.mul[acc][w])
    }

    pub fn pow(&self, x: usize, k: u32) -> usize {
        (0..k).fold(self.e, |acc, _| self.mul[acc][x])
    }
}

#[allow(clippy::ptr_arg)] // matches the generator signature
fn compose(p: &Vec<usize>, q: &Vec<usize>) -> Vec<usize> {
    (0..p.len()).map(|i| p[q[i]]).collect()
}

pub fn oracle_s3() -> OracleGroup {
    OracleGroup::generate("S3", vec![0, 1, 2], &[vec![1, 0, 2], vec![1, 2, 0]], compose)
}

pub fn oracle_d4() -> OracleGroup {
    OracleGroup::generate("D4", vec![0, 1, 2, 3], &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]], compose)
}

/// 2x2 matrices over the Gaussian integers; entries are (re, im).
type GMat = [[(i32, i32); 2]; 2];

fn gmul(a: &GMat, b: &GMat) -> GMat {
    let mut c = [[(0, 0); 2]; 2];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..2 {
                let (p, q) = (a[i][k], b[k][j]);
                cell.0 += p.0 * q.0 - p.1 * q.1;
                cell.1 += p.0 * q.1 + p.1 * q.0;
            }
        }
    }
    c
}

pub fn oracle_q8() -> OracleGroup {
    let one: GMat = [[(1, 0), (0, 0)], [(0, 0), (1, 0)]];
    let i: GMat = [[(0, 1), (0, 0)], [(0, 0), (0, -1)]];
    let j: GMat = [[(0, 0), (1, 0)], [(-1, 0), (0, 0)]];
    OracleGroup::generate("Q8", one, &[i, j], gmul)
}

pub fn oracle_groups() -> Vec<OracleGroup> {
    vec![oracle_s3(), oracle_d4(), oracle_q8()]
}

/// The library group with the same name as an oracle group.
pub fn library_group(name: &str) -> FiniteGroup {
    match name {
        "S3" => symmetric_group(3).unwrap(),
        "D4" => dihedral_group(4).unwrap(),
        "Q8" => quaternion_group().unwrap(),
        other => panic!("no library group {other}"),
    }
}

pub type Table = Vec<Vec<usize>>;

pub fn tables(s: &OrientedSingquandle) -> (Table, Table, Table) {
    let rows = |t: &singq::OpTable| t.rows().map(|r| r.to_vec()).collect::<Vec<_>>();
    (rows(s.op()), rows(s.r1()), rows(s.r2()))
}

/// Evaluates the three quandle axioms and five singquandle axioms directly.
/// Returns the name of the first violated axiom.
#[allow(clippy::needless_range_loop)]
pub fn naive_violation(op: &Table, r1: &Table, r2: &Table) -> Option<&'static str> {
    let n = op.len();
    if (0..n).any(|x| op[x][x] != x) {
        return Some("idempotence");
    }
    let mut dual = vec![vec![usize::MAX; n]; n];
    for x in 0..n {
        for y in 0..n {
            let z = op[x][y];
            if dual[z][y] != usize::MAX {
                return Some("right invertibility");
            }
            dual[z][y] = x;
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op[op[x][y]][z] != op[op[x][z]][op[y][z]] {
                    return Some("self-distributivity");
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op[r1[dual[x][y]][z]][y] != r1[x][op[z][y]] {
                    return Some("eq1");
                }
                if r2[dual[x][y]][z] != dual[r2[x][op[z][y]]][y] {
                    return Some("eq2");
                }
                if op[dual[y][r1[x][z]]][x] != dual[op[y][r2[x][z]]][z] {
                    return Some("eq3");
                }
            }
            if r2[x][y] != r1[y][op[x][y]] {
                return Some("eq4");
            }
            if op[r1[x][y]][r2[x][y]] != r2[y][op[x][y]] {
                return Some("eq5");
            }
        }
    }
    None
}

/// Every coloring of `d` by `(op, r1, r2)`, by trying all `n^S` assignments
/// in lexicographic order.
pub fn exhaustive_colorings(d: &SingularDiagram, op: &Table, r1: &Table, r2: &Table) -> Vec<Vec<usize>> {
    let n = op.len();
    let s = d.semiarc_count();
    let mut out = Vec::new();
    let mut c = vec![0usize; s];
    'outer: loop {
        let ok = d.crossings().iter().all(|x| {
            let [a, b, a2, b2] = x.ports.map(|p| c[p - 1]);
            match x.kind {
                CrossingKind::Positive => b2 == b && a2 == op[a][b],
                CrossingKind::Negative => b2 == b && op[a2][b] == a,
                CrossingKind::Singular => a2 == r1[a][b] && b2 == r2[a][b],
            }
        });
        if ok {
            out.push(c.clone());
        }
        for i in (0..s).rev() {
            c[i] += 1;
            if c[i] < n {
                continue 'outer;
            }
            c[i] = 0;
        }
        return out;
    }
}

/// Closed-form coloring predicate of the Hopf fixture for each family.
pub fn hopf_predicate(g: &OracleGroup, family: u32, n: u32, x: usize, y: usize) -> bool {
    let (xi, yi) = (g.inv[x], g.inv[y]);
    match family {
        // (x^-1 y)^(n+1) = 1
        1 => g.pow(g.m(&[xi, y]), n + 1) == g.e,
        // x^-1 (x^-1 y)^n y = 1
        2 => g.m(&[xi, g.pow(g.m(&[xi, y]), n), y]) == g.e,
        // (y^-1 x)^n = 1
        3 => g.pow(g.m(&[yi, x]), n) == g.e,
        _ => unreachable!(),
    }
}

pub fn predicate_count(g: &OracleGroup, pred: impl Fn(usize, usize) -> bool) -> usize {
    let n = g.order();
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| pred(x, y)).count()
}

/// `x y x^-1 = y x y^-1`
pub fn braid_relation(g: &OracleGroup, x: usize, y: usize) -> bool {
    g.m(&[x, y, g.inv[x]]) == g.m(&[y, x, g.inv[y]])
}

/// Every constructor output named by the axiom regression criterion.
pub fn battery() -> Vec<(String, OrientedSingquandle)> {
    let mut out = Vec::new();
    for n in 1..=9i64 {
        for a in 0..n {
            if mod_inverse(a, n).is_none() {
                continue;
            }
            for b in 0..n {
                out.push((format!("affine Z{n} a={a} b={b}"), affine_singquandle(n, a, b).unwrap()));
            }
        }
    }
    for n in [5i64, 7] {
        for t in 1..n {
            for v in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            let s = alexander_singquandle(n, t, v, a, b, c).unwrap();
                            out.push((format!("alexander Z{n} t={t} v={v} a={a} b={b} c={c}"), s));
                        }
                    }
                }
            }
        }
    }
    for n in 1..=9usize {
        let g = cyclic_group(n).unwrap();
        for f in 0..n as i64 {
            if mod_inverse(f, n as i64).is_none() {
                continue;
            }
            for h in 0..n as i64 {
                let s = abelian_fg_singquandle(&g, &power_map(&g, f), &power_map(&g, h)).unwrap();
                out.push((format!("abelian-fg Z{n} f={f} h={h}"), s));
            }
        }
    }
    let z2 = cyclic_group(2).unwrap();
    let k4 = direct_product(&z2, &z2).unwrap();
    let maps: Vec<Vec<usize>> = (0..256usize)
        .map(|code| (0..4).map(|i| (code >> (2 * i)) & 3).collect())
        .filter(|m: &Vec<usize>| k4.is_endomorphism(m))
        .collect();
    for f in maps.iter().filter(|m| {
        let mut s = m.to_vec();
        s.sort();
        s == [0, 1, 2, 3]
    }) {
        for h in &maps {
            if (0..4).all(|x| f[h[x]] == h[f[x]]) {
                let s = abelian_fg_singquandle(&k4, f, h).unwrap();
                out.push((format!("abelian-fg Z2xZ2 f={f:?} h={h:?}"), s));
            }
        }
    }
    for name in ["S3", "D4", "Q8"] {
        let g = library_group(name);
        for k in 1..=4 {
            out.push((format!("conj-sol {name} k={k}"), conj_solution_singquandle(&g, k, 1).unwrap()));
        }
        for n in 1..=3 {
            out.push((format!("conj-sol {name} k=5 n={n}"), conj_solution_singquandle(&g, 5, n).unwrap()));
        }
        for family in 1..=3 {
            for n in 1..=3 {
                let s = prop_family_singquandle(&g, family, n).unwrap();
                out.push((format!("prop-family {name} family={family} n={n}"), s));
            }
        }
    }
    out
}

/// The battery with structurally identical entries removed, first name kept.
pub fn distinct_battery() -> Vec<(String, OrientedSingquandle)> {
    let mut seen = std::collections::HashSet::new();
    battery()
        .into_iter()
        .filter(|(_, s)| seen.insert((s.op().clone(), s.r1().clone(), s.r2().clone())))
        .collect()
}

/// Strand continuation: for each semiarc, the semiarc that continues it.
pub fn successor(d: &SingularDiagram) -> Vec<usize> {
    let mut next = vec![0; d.semiarc_count() + 1];
    for c in d.crossings() {
        let [a, b, a2, b2] = c.ports;
        match c.kind {
            CrossingKind::Positive | CrossingKind::Negative => {
                next[a] = a2;
                next[b] = b2;
            }
            CrossingKind::Singular => {
                next[a] = b2;
                next[b] = a2;
            }
        }
    }
    next
}

/// Components as cycles of semiarcs, each listed from its smallest label.
pub fn components(d: &SingularDiagram) -> Vec<Vec<usize>> {
    let next = successor(d);
    let mut seen = vec![false; d.semiarc_count() + 1];
    let mut out = Vec::new();
    for start in 1..=d.semiarc_count() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            cycle.push(s);
            s = next[s];
        }
        out.push(cycle);
    }
    out
}
