//! Gelfand elements: the predicate, the shift `a + b*t`, and the
//! factorization `d = r*s` against a concrete context `(a, c)`.
//!
//! An element `a` is Gelfand when `R/aR` is a PM ring, i.e. every prime
//! containing `a` lies in a unique maximal ideal. In ℤ and ℚ[x] every
//! nonzero prime is maximal, so exactly the nonzero elements qualify; in the
//! Henriksen ring the answer is "nonzero constant term".

use crate::error::{Error, Result};
use crate::henriksen::{chain_bound, is_gelfand_henriksen};
use crate::ring::{
    are_associates, coprime, exact_div, gcd_many, is_unit, same_ring, xgcd, RingElement,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftResult {
    pub t: RingElement,
    pub d: RingElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GelfandFactorization {
    pub d: RingElement,
    pub a_ctx: RingElement,
    pub c_ctx: RingElement,
    pub r: RingElement,
    pub s: RingElement,
    pub iterations: usize,
}

pub fn is_gelfand(a: &RingElement) -> bool {
    match a {
        RingElement::Integer(_) | RingElement::RatPoly(_) => !a.is_zero(),
        RingElement::Henriksen(h) => is_gelfand_henriksen(h),
    }
}

/// Finds `t ∈ {0, 1}` with `a + b*t` Gelfand.
///
/// For a local Gelfand ring one of `a`, `a + b` is always Gelfand when
/// `aR + bR = R` (apply the defining property to the coprime pair
/// `(a, a + b)`), and in ℤ and ℚ[x] `a + b*t` is nonzero for some such `t`.
/// Running out of candidates therefore means a ring assumption broke, and it
/// is reported as [`Error::ShiftNotFound`].
pub fn gelfand_shift(a: &RingElement, b: &RingElement) -> Result<ShiftResult> {
    let ring = same_ring(a, b)?;
    if !coprime(a, b)? {
        return Err(Error::NotCoprime);
    }
    for t in [0, 1] {
        let t = RingElement::from_i64(ring, t);
        let d = a + &(b * &t);
        if is_gelfand(&d) {
            return Ok(ShiftResult { t, d });
        }
    }
    Err(Error::ShiftNotFound {
        a: a.to_string(),
        b: b.to_string(),
    })
}

/// Upper bound on the length of a strict divisor chain ending at `d`.
pub fn chain_length_bound(d: &RingElement) -> usize {
    match d {
        RingElement::Integer(n) => n.bits() as usize + 2,
        RingElement::RatPoly(p) => p.degree().unwrap_or(0) + 2,
        RingElement::Henriksen(h) => chain_bound(h),
    }
}

/// Factors a Gelfand `d` as `r*s` with `rR + aR = R` and `sR + cR = R`.
///
/// `s` is the stable value of `gcd(d, a^k)`; it is computed as
/// `s_{k+1} = gcd(d, s_k * a)`, which equals `gcd(d, a^{k+1})` without
/// letting the powers grow. Then `r = d / s` shares no factor with `a`, and
/// any maximal ideal containing `s` and `c` would contain `d`, `a` and `c`.
pub fn gelfand_factor(
    d: &RingElement,
    a: &RingElement,
    c: &RingElement,
) -> Result<GelfandFactorization> {
    same_ring(d, a)?;
    same_ring(d, c)?;
    if d.is_zero() {
        return Err(Error::Precondition("d must be nonzero".into()));
    }
    if !is_gelfand(d) {
        return Err(Error::Precondition(format!("{d} is not a Gelfand element")));
    }
    let (g, _) = gcd_many(&[a.clone(), d.clone(), c.clone()])?;
    if !is_unit(&g) {
        return Err(Error::Precondition(format!(
            "a, d, c generate {g}, not the unit ideal"
        )));
    }
    factor_by_stabilization(d, a, c, chain_length_bound(d))
}

/// The stabilization loop of [`gelfand_factor`] without its preconditions.
///
/// Fails with [`Error::StabilizationFailure`] when `gcd(d, a^k)` keeps
/// growing past `bound` steps, and with [`Error::Certification`] when the
/// result does not satisfy both coprimality conditions.
pub fn factor_by_stabilization(
    d: &RingElement,
    a: &RingElement,
    c: &RingElement,
    bound: usize,
) -> Result<GelfandFactorization> {
    let mut s = xgcd(d, a)?.g;
    let mut iterations = 1;
    loop {
        let next = xgcd(d, &(&s * a))?.g;
        if are_associates(&next, &s)? {
            break;
        }
        if iterations >= bound {
            return Err(Error::StabilizationFailure(bound));
        }
        s = next;
        iterations += 1;
    }
    let r = exact_div(d, &s)?;
    if &r * &s != *d {
        return Err(Error::Certification(format!("r*s != d for d = {d}")));
    }
    if !coprime(&r, a)? {
        return Err(Error::Certification(format!(
            "r = {r} is not coprime to a = {a}"
        )));
    }
    if !coprime(&s, c)? {
        return Err(Error::Certification(format!(
            "s = {s} is not coprime to c = {c}"
        )));
    }
    Ok(GelfandFactorization {
        d: d.clone(),
        a_ctx: a.clone(),
        c_ctx: c.clone(),
        r,
        s,
        iterations,
    })
}
