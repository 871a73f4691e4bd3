//! Finite groups given by multiplication tables, plus builders for the
//! small groups used as carriers of conjugation-based singquandles.
//!
//! Element numbering of the built-in groups:
//!
//! * `cyclic_group(n)`: `k` is the residue `k mod n`.
//! * `dihedral_group(n)` (order `2n`): `k < n` is the rotation `r^k`,
//!   `n + k` is the reflection `s r^k`, with `r^n = s^2 = e`, `r s = s r^-1`.
//! * `symmetric_group(n)`: permutations of `{1..n}` in lexicographic order of
//!   one-line notation; composition `(p q)(i) = p(q(i))` applies `q` first.
//!   For `S3` the indices are `0: 123 (e)`, `1: 132 = (23)`, `2: 213 = (12)`,
//!   `3: 231`, `4: 312`, `5: 321 = (13)`.
//! * `quaternion_group()`: `0: 1`, `1: i`, `2: j`, `3: k`, `4: -1`, `5: -i`,
//!   `6: -j`, `7: -k`.
//! * `direct_product(g, h)`: `(a, b)` is `a * |h| + b`.

use crate::error::{Error, Result};
use crate::table::{Element, OpTable};

pub const MAX_SYMMETRIC_DEGREE: usize = 5;
pub const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    mul: OpTable,
    identity: Element,
    inverses: Vec<Element>,
}

impl FiniteGroup {
    /// Validates associativity and derives identity and inverses.
    pub fn from_table(mul: OpTable) -> Result<Self> {
        let n = mul.size();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul.get(e, x) == x && mul.get(x, e) == x))
            .ok_or_else(|| Error::domain("multiplication table has no identity"))?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| mul.get(x, y) == identity && mul.get(y, x) == identity)
                .ok_or_else(|| Error::domain(format!("element {x} has no inverse")))?;
            inverses.push(inv);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mul.get(mul.get(x, y), z) != mul.get(x, mul.get(y, z)) {
                        return Err(Error::domain(format!(
                            "multiplication is not associative at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            mul,
            identity,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.mul.size()
    }

    pub fn table(&self) -> &OpTable {
        &self.mul
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.mul.get(x, y)
    }

    #[inline]
    pub fn inv(&self, x: Element) -> Element {
        self.inverses[x]
    }

    /// Product of a word, left to right; the empty word is the identity.
    pub fn product(&self, word: &[Element]) -> Element {
        word.iter().fold(self.identity, |acc, &w| self.mul(acc, w))
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: Element, k: i64) -> Element {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Least `m >= 1` with `x^m = e` for every `x`.
    pub fn exponent(&self) -> usize {
        let n = self.order();
        (1..=n)
            .find(|&m| (0..n).all(|x| self.pow(x, m as i64) == self.identity))
            .expect("exponent divides the order")
    }

    /// Whether `f` is a homomorphism `self -> self`.
    pub fn is_endomorphism(&self, f: &[Element]) -> bool {
        let n = self.order();
        f.len() == n
            && f.iter().all(|&v| v < n)
            && (0..n).all(|x| (0..n).all(|y| f[self.mul(x, y)] == self.mul(f[x], f[y])))
    }
}

pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::domain("cyclic group order must be positive"));
    }
    FiniteGroup::from_table(OpTable::from_fn(n, |x, y| (x + y) % n)?)
}

/// Dihedral group of order `2n` (symmetries of the regular `n`-gon).
pub fn dihedral_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::domain("dihedral group parameter must be positive"));
    }
    // (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
    let table = OpTable::from_fn(2 * n, |x, y| {
        let (a, i) = (x / n, x % n);
        let (b, j) = (y / n, y % n);
        let i = if b == 1 { (n - i) % n } else { i };
        ((a + b) % 2) * n + (i + j) % n
    })?;
    FiniteGroup::from_table(table)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

pub fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::domain(format!(
            "symmetric group degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {n}"
        )));
    }
    let perms = permutations(n);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation");
    let table = OpTable::from_fn(perms.len(), |x, y| {
        let composed: Vec<usize> = (0..n).map(|i| perms[x][perms[y][i]]).collect();
        index(&composed)
    })?;
    FiniteGroup::from_table(table)
}

pub fn quaternion_group() -> Result<FiniteGroup> {
    // unit u in {1, i, j, k} times sign; element = sign_bit * 4 + u
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let table = OpTable::from_fn(8, |x, y| {
        let (neg, u) = UNIT[x % 4][y % 4];
        let sign = (x / 4 == 1) ^ (y / 4 == 1) ^ neg;
        usize::from(sign) * 4 + u
    })?;
    FiniteGroup::from_table(table)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let m = h.order();
    let table = OpTable::from_fn(g.order() * m, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })?;
    FiniteGroup::from_table(table)
}

/// Resolves names `z<n>`, `d<n>` (order `2n`), `s<n>`, `q8`, and products
/// joined by `x` such as `z2xz2`.
pub fn named_group(name: &str) -> Result<FiniteGroup> {
    let name = name.trim().to_ascii_lowercase();
    let factors: Vec<&str> = name.split('x').collect();
    if factors.len() > 1 {
        let mut acc = named_group(factors[0])?;
        for f in &factors[1..] {
            acc = direct_product(&acc, &named_group(f)?)?;
        }
        return Ok(acc);
    }
    if name == "q8" {
        return quaternion_group();
    }
    let unknown = || Error::domain(format!("unknown group name `{name}`"));
    let (kind, digits) = name.split_at(name.chars().next().map(|c| c.len_utf8()).unwrap_or(0));
    let k: usize = digits.parse().map_err(|_| unknown())?;
    match kind {
        "z" => cyclic_group(k),
        "d" => dihedral_group(k),
        "s" => symmetric_group(k),
        _ => Err(unknown()),
    }
}
