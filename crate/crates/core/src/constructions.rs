//! Builders for quandles and oriented singquandles.
//!
//! Every builder compiles its defining formulas into tables and validates the
//! result, so a returned structure always satisfies its axioms.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, MAX_EXPONENT};
use crate::quandle::Quandle;
use crate::singquandle::{is_bijection, OrientedSingquandle};
use crate::table::{Element, OpTable};

fn modulus(n: i64) -> Result<usize> {
    if n < 1 {
        return Err(Error::domain(format!("modulus must be positive, got {n}")));
    }
    Ok(n as usize)
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) = 1`.
pub fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    let e = a.rem_euclid(n).extended_gcd(&n);
    (e.gcd == 1).then(|| e.x.rem_euclid(n))
}

/// Table of `(x, y) -> c x + d y (mod n)`.
fn linear_table(n: usize, c: i64, d: i64) -> Result<OpTable> {
    let m = n as i64;
    OpTable::from_fn(n, |x, y| (c * x as i64 + d * y as i64).rem_euclid(m) as usize)
}

pub fn trivial_quandle(n: usize) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::domain("trivial quandle needs n >= 1"));
    }
    Quandle::new(OpTable::from_fn(n, |x, _| x)?)
}

/// `x * y = 2y - x (mod n)`.
pub fn dihedral_quandle(n: usize) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::domain("dihedral quandle needs n >= 1"));
    }
    Quandle::new(linear_table(n, -1, 2)?)
}

/// `x * y = a x + (1 - a) y (mod n)` with `a` a unit mod `n`.
pub fn affine_quandle(n: i64, a: i64) -> Result<Quandle> {
    let size = modulus(n)?;
    if mod_inverse(a, n).is_none() {
        return Err(Error::domain(format!("a = {a} is not invertible mod {n}")));
    }
    Quandle::new(linear_table(size, a, 1 - a)?)
}

/// `x * y = y^-m x y^m` in `g`.
pub fn conjugation_quandle(g: &FiniteGroup, m: i64) -> Result<Quandle> {
    if m < 1 {
        return Err(Error::domain(format!("conjugation exponent must be >= 1, got {m}")));
    }
    Quandle::new(OpTable::from_fn(g.order(), |x, y| {
        let ym = g.pow(y, m);
        g.product(&[g.inv(ym), x, ym])
    })?)
}

/// Generalized affine singquandle on `Z_n`:
/// `x * y = a x + (1 - a) y`, `R1 = b x + (1 - b) y`,
/// `R2 = a(1 - b) x + (1 - a(1 - b)) y`.
pub fn affine_singquandle(n: i64, a: i64, b: i64) -> Result<OrientedSingquandle> {
    let size = modulus(n)?;
    let q = affine_quandle(n, a)?;
    let c = (a * (1 - b)).rem_euclid(n);
    OrientedSingquandle::new(q, linear_table(size, b, 1 - b)?, linear_table(size, c, 1 - c)?)
}

/// Parameter `alpha = a t + b v + c t v (mod n)` of the Alexander singquandle.
pub fn alexander_alpha(n: i64, t: i64, v: i64, a: i64, b: i64, c: i64) -> i64 {
    (a * t + b * v + c * t * v).rem_euclid(n)
}

/// Alexander oriented singquandle over `Z_n` with `t` a unit:
/// `x * y = t x + (1 - t) y`, `R1 = alpha x + (1 - alpha) y`, and `R2`
/// obtained from [`affine_singquandle`] with `(a, b) = (t, alpha)`.
///
/// The alternative `R2 = t(1 - alpha) x + (1 - t)(1 - alpha) y` agrees with
/// this one only when `alpha = 0`; when it differs a note is attached.
pub fn alexander_singquandle(n: i64, t: i64, v: i64, a: i64, b: i64, c: i64) -> Result<OrientedSingquandle> {
    modulus(n)?;
    if mod_inverse(t, n).is_none() {
        return Err(Error::domain(format!("t = {t} is not invertible mod {n}")));
    }
    let alpha = alexander_alpha(n, t, v, a, b, c);
    let s = affine_singquandle(n, t, alpha)?;
    if alexander_r2_variant(n, t, alpha)? != *s.r2() {
        return Ok(s.with_note(format!(
            "R2 = t(1-alpha)x + (1-t)(1-alpha)y differs from the R2 used here (alpha = {alpha}); \
             that variant violates R2(x,y) = R1(y,x*y)"
        )));
    }
    Ok(s)
}

/// The table `R2(x, y) = t(1 - alpha) x + (1 - t)(1 - alpha) y (mod n)`.
pub fn alexander_r2_variant(n: i64, t: i64, alpha: i64) -> Result<OpTable> {
    let size = modulus(n)?;
    linear_table(size, t * (1 - alpha), (1 - t) * (1 - alpha))
}

/// Oriented singquandle on an abelian group `g` from an automorphism `f` and
/// an endomorphism `h` commuting with it (maps given as image vectors):
/// `x * y = f(x) + y - f(y)`, `R1 = h(y) + x - h(x)`,
/// `R2 = h(f(x)) + y - h(f(y))`.
pub fn abelian_fg_singquandle(g: &FiniteGroup, f: &[Element], h: &[Element]) -> Result<OrientedSingquandle> {
    let n = g.order();
    if !g.is_abelian() {
        return Err(Error::domain("group is not abelian"));
    }
    if !g.is_endomorphism(f) || !is_bijection(f, n) {
        return Err(Error::domain("f is not a group automorphism"));
    }
    if !g.is_endomorphism(h) {
        return Err(Error::domain("h is not a group endomorphism"));
    }
    if let Some(x) = (0..n).find(|&x| f[h[x]] != h[f[x]]) {
        return Err(Error::domain(format!("f and h do not commute at x = {x}")));
    }
    // a + b - c written multiplicatively
    let combine = |a: Element, b: Element, c: Element| g.product(&[a, b, g.inv(c)]);
    let op = OpTable::from_fn(n, |x, y| combine(f[x], y, f[y]))?;
    let r1 = OpTable::from_fn(n, |x, y| combine(h[y], x, h[x]))?;
    let r2 = OpTable::from_fn(n, |x, y| combine(h[f[x]], y, h[f[y]]))?;
    OrientedSingquandle::new(Quandle::new(op)?, r1, r2)
}

/// Image vector of `x -> x^k` on an abelian group.
pub fn power_map(g: &FiniteGroup, k: i64) -> Vec<Element> {
    (0..g.order()).map(|x| g.pow(x, k)).collect()
}

fn check_exponent(n: u32) -> Result<()> {
    if n > MAX_EXPONENT {
        return Err(Error::domain(format!("exponent {n} exceeds the limit {MAX_EXPONENT}")));
    }
    Ok(())
}

fn group_singquandle(
    g: &FiniteGroup,
    r1: impl Fn(Element, Element) -> Element,
    r2: impl Fn(Element, Element) -> Element,
) -> Result<OrientedSingquandle> {
    let n = g.order();
    OrientedSingquandle::new(
        conjugation_quandle(g, 1)?,
        OpTable::from_fn(n, r1)?,
        OpTable::from_fn(n, r2)?,
    )
}

/// The five `(R1, R2)` solutions over the conjugation quandle `y^-1 x y`:
///
/// 1. `R1 = x`, `R2 = y`
/// 2. `R1 = x y x y^-1 x^-1`, `R2 = x y x^-1`
/// 3. `R1 = y^-1 x y`, `R2 = y^-1 x^-1 y x y`
/// 4. `R1 = x y^-1 x^-1 y x`, `R2 = x^-1 y^-1 x y^2`
/// 5. `R1 = y (x^-1 y)^n`, `R2 = (y^-1 x)^(n+1) y`, `n >= 1`
///
/// `n` is only read for solution 5.
pub fn conj_solution_singquandle(g: &FiniteGroup, k: u32, n: u32) -> Result<OrientedSingquandle> {
    let i = |x| g.inv(x);
    let p = |w: &[Element]| g.product(w);
    match k {
        1 => group_singquandle(g, |x, _| x, |_, y| y),
        2 => group_singquandle(g, |x, y| p(&[x, y, x, i(y), i(x)]), |x, y| p(&[x, y, i(x)])),
        3 => group_singquandle(g, |x, y| p(&[i(y), x, y]), |x, y| p(&[i(y), i(x), y, x, y])),
        4 => group_singquandle(
            g,
            |x, y| p(&[x, i(y), i(x), y, x]),
            |x, y| p(&[i(x), i(y), x, y, y]),
        ),
        5 => {
            if n < 1 {
                return Err(Error::domain("solution 5 requires n >= 1"));
            }
            check_exponent(n)?;
            let n = i64::from(n);
            group_singquandle(
                g,
                |x, y| g.mul(y, g.pow(g.mul(i(x), y), n)),
                |x, y| g.mul(g.pow(g.mul(i(y), x), n + 1), y),
            )
        }
        _ => Err(Error::domain(format!("solution index must be in 1..=5, got {k}"))),
    }
}

/// The three families over the conjugation quandle `y^-1 x y`, `n >= 1`:
///
/// 1. `R1 = x (x y^-1)^n`, `R2 = y (x^-1 y)^n`
/// 2. `R1 = (x y^-1)^n x`, `R2 = (x^-1 y)^n y`
/// 3. `R1 = x (y x^-1)^(n+1)`, `R2 = x (y^-1 x)^n`
///
/// `n = 0` is excluded: families 1 and 2 coincide there.
pub fn prop_family_singquandle(g: &FiniteGroup, family: u32, n: u32) -> Result<OrientedSingquandle> {
    if n == 0 {
        return Err(Error::domain("n = 0 excluded: families 1 and 2 coincide at n = 0"));
    }
    check_exponent(n)?;
    let n = i64::from(n);
    let i = |x| g.inv(x);
    let pw = |a, b, k| g.pow(g.mul(a, b), k);
    match family {
        1 => group_singquandle(g, |x, y| g.mul(x, pw(x, i(y), n)), |x, y| g.mul(y, pw(i(x), y, n))),
        2 => group_singquandle(g, |x, y| g.mul(pw(x, i(y), n), x), |x, y| g.mul(pw(i(x), y, n), y)),
        3 => group_singquandle(
            g,
            |x, y| g.mul(x, pw(y, i(x), n + 1)),
            |x, y| g.mul(x, pw(i(y), x, n)),
        ),
        _ => Err(Error::domain(format!("family must be 1, 2 or 3, got {family}"))),
    }
}
