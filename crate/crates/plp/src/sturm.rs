//! Real root counting and certified root-free intervals via Sturm sequences.

use crate::poly::{rat_int, Poly, Rat};
use crate::{Error, Result};
use num_traits::{Signed, Zero};

/// The canonical Sturm sequence of the square-free part of `p`.
fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let p = p.square_free();
    let mut seq = vec![p.clone()];
    if p.degree().map_or(true, |d| d == 0) {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].divrem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last: Option<i8> = None;
    for s in signs {
        if s == 0 {
            continue;
        }
        if let Some(l) = last {
            if l != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

fn variations_at(seq: &[Poly], x: &Rat) -> usize {
    variations(seq.iter().map(|p| sign(&p.eval(x))))
}

fn variations_at_pos_inf(seq: &[Poly]) -> usize {
    variations(seq.iter().map(|p| p.leading_coeff().map_or(0, sign)))
}

/// Number of distinct real roots of `p` in the open interval (a, b).
/// Requires a < b with p(a) ≠ 0 and p(b) ≠ 0.
pub fn sturm_count(p: &Poly, a: &Rat, b: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::InvalidInput(format!(
            "empty interval: need a < b, got a = {a}, b = {b}"
        )));
    }
    if p.eval(a).is_zero() || p.eval(b).is_zero() {
        return Err(Error::InvalidInput(
            "sturm_count endpoint is a root; nudge the endpoint".into(),
        ));
    }
    let seq = sturm_sequence(p);
    Ok(variations_at(&seq, a) - variations_at(&seq, b))
}

/// Number of distinct real roots of `p` in (a, +inf), where p(a) ≠ 0.
pub fn sturm_count_above(p: &Poly, a: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.eval(a).is_zero() {
        return Err(Error::InvalidInput(
            "sturm_count endpoint is a root; nudge the endpoint".into(),
        ));
    }
    let seq = sturm_sequence(p);
    Ok(variations_at(&seq, a) - variations_at_pos_inf(&seq))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessKind {
    /// No certifying polynomial has any positive real root: positivity
    /// extends to all of (0, ∞).
    NoPositiveRoot,
    /// `value` is strictly below every positive root of every certifying
    /// polynomial, and within a factor two of the smallest such root.
    IsolatedBelowRoot,
}

/// A certified radius: every certifying polynomial is strictly positive on
/// (0, value].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootBound {
    pub value: Rat,
    pub witness_kind: WitnessKind,
    pub certifying_polys: Vec<Poly>,
}

/// True when `p` has no root in (0, r]; `p` must not vanish at 0
/// (callers strip the power of the parameter dividing `p` first).
fn root_free_on(p: &Poly, r: &Rat) -> bool {
    if p.eval(r).is_zero() {
        return false;
    }
    sturm_count(p, &Rat::zero(), r).expect("endpoints checked") == 0
}

/// Certified radius of positivity for a family of polynomials.
///
/// Each member must be nonnegative immediately to the right of zero;
/// identically zero members are skipped, and a member whose lowest nonzero
/// coefficient is negative is rejected with "not positive near zero". The
/// returned bound satisfies: every nonzero member is strictly positive on
/// (0, value], and when some member has a positive root, value exceeds half
/// the smallest such root.
pub fn smallest_positive_root_bound(ps: &[Poly]) -> Result<RootBound> {
    let mut stripped = Vec::new();
    for p in ps {
        if p.is_zero() {
            continue;
        }
        let v = p.valuation().unwrap();
        let q = p.shift_down(v);
        // sign just right of 0 is the sign of the lowest nonzero coefficient
        if q.coeff(0).is_negative() {
            return Err(Error::NotPositiveNearZero);
        }
        stripped.push(q);
    }
    let certifying_polys: Vec<Poly> = ps.iter().filter(|p| !p.is_zero()).cloned().collect();
    let zero = Rat::zero();
    if stripped
        .iter()
        .all(|p| sturm_count_above(p, &zero).expect("nonzero, no root at 0") == 0)
    {
        return Ok(RootBound {
            value: rat_int(1),
            witness_kind: WitnessKind::NoPositiveRoot,
            certifying_polys,
        });
    }
    let family_root_free = |r: &Rat| stripped.iter().all(|p| root_free_on(p, r));
    let two = rat_int(2);
    let mut r = rat_int(1);
    while !family_root_free(&r) {
        r = r / &two;
    }
    // Double back up while still root-free, so the result is within a
    // factor two of the smallest positive root of the family.
    loop {
        let r2 = &r * &two;
        if !family_root_free(&r2) {
            return Ok(RootBound {
                value: r,
                witness_kind: WitnessKind::IsolatedBelowRoot,
                certifying_polys,
            });
        }
        r = r2;
    }
}
