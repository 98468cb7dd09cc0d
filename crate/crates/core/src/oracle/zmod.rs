//! Brute force over the finite rings ℤ/n.
//!
//! The ideals of ℤ/n are `dℤ/nℤ` for the divisors `d` of `n`, and
//! `dℤ/nℤ ⊇ eℤ/nℤ` exactly when `d | e`. The quotient by `dℤ/nℤ` is ℤ/d, so
//! the ideal is prime iff ℤ/d is a domain and maximal iff ℤ/d is a field;
//! both are decided by exhausting ℤ/d.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_integer::gcd;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::json;

use super::WitnessReport;
use crate::error::{Error, Result};
use crate::numeric::Integer;

/// Largest modulus the enumerations accept.
pub const ZMOD_CAP: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZmodStructure {
    pub n: u64,
    /// Generators `d | n` of the ideals `dℤ/nℤ`, ascending.
    pub ideals: Vec<u64>,
    pub primes: Vec<u64>,
    pub maximals: Vec<u64>,
}

pub(crate) fn modulus(n: &Integer) -> Result<u64> {
    if *n < Integer::from(2) {
        return Err(Error::ModulusTooSmall(n.to_string()));
    }
    match n.to_u64() {
        Some(m) if m <= ZMOD_CAP => Ok(m),
        _ => Err(Error::ModulusTooLarge(n.to_string())),
    }
}

fn is_domain(d: u64) -> bool {
    d >= 2 && (1..d).all(|x| (1..d).all(|y| x * y % d != 0))
}

fn is_field(d: u64) -> bool {
    d >= 2 && (1..d).all(|x| (1..d).any(|y| x * y % d == 1))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn zmod_structure(n: &Integer) -> Result<ZmodStructure> {
    let n = modulus(n)?;
    let ideals: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let primes: Vec<u64> = ideals.iter().copied().filter(|&d| is_domain(d)).collect();
    let maximals: Vec<u64> = ideals.iter().copied().filter(|&d| is_field(d)).collect();
    if primes != prime_factors(n) {
        return Err(Error::Certification(format!(
            "prime ideals of Z/{n} disagree with trial division"
        )));
    }
    if primes != maximals {
        return Err(Error::Certification(format!(
            "Z/{n} has a non-maximal prime ideal"
        )));
    }
    Ok(ZmodStructure {
        n,
        ideals,
        primes,
        maximals,
    })
}

/// Every prime ideal of ℤ/n lies in exactly one maximal ideal.
pub fn is_pm_zmod(n: &Integer) -> Result<WitnessReport> {
    let s = zmod_structure(n)?;
    let report = WitnessReport::new("pm", json!({ "n": s.n }));
    for &p in &s.primes {
        let above: Vec<u64> = s.maximals.iter().copied().filter(|m| p % m == 0).collect();
        if above.len() != 1 {
            return Ok(report.fail(json!({ "n": s.n, "prime": p, "maximals": above })));
        }
    }
    Ok(report.pass())
}

fn unit_table(n: u64) -> Vec<bool> {
    (0..n).map(|x| gcd(x, n) == 1).collect()
}

/// Stable range 1: every unimodular pair `(a, b)` has a unit `a + bt`.
pub fn is_sr1_zmod(n: &Integer) -> Result<WitnessReport> {
    let n = modulus(n)?;
    let unit = unit_table(n);
    let report = WitnessReport::new("sr1", json!({ "n": n }));
    for a in 0..n {
        for b in 0..n {
            if gcd(gcd(a, b), n) != 1 {
                continue;
            }
            if !(0..n).any(|t| unit[((a + b * t) % n) as usize]) {
                return Ok(report.fail(json!({ "n": n, "a": a, "b": b })));
            }
        }
    }
    Ok(report.pass())
}

/// Every element is an idempotent plus a unit.
pub fn is_clean_zmod(n: &Integer) -> Result<WitnessReport> {
    let n = modulus(n)?;
    let unit = unit_table(n);
    let idempotents: Vec<u64> = (0..n).filter(|&e| e * e % n == e).collect();
    let report = WitnessReport::new("clean", json!({ "n": n }));
    for a in 0..n {
        if !idempotents
            .iter()
            .any(|&e| unit[((a + n - e) % n) as usize])
        {
            return Ok(report.fail(json!({ "n": n, "a": a })));
        }
    }
    Ok(report.pass())
}

/// Membership in `S(ℤ)`: `ℤ/aℤ` has stable range 1. Results per `|a|` are
/// cached.
#[derive(Debug, Default)]
pub struct SMembership {
    cache: HashMap<u64, WitnessReport>,
}

impl SMembership {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, a: &Integer) -> Result<WitnessReport> {
        let params = json!({ "a": a.to_string() });
        if a.is_zero() {
            // ℤ itself: 2ℤ + 5ℤ = ℤ but 2 + 5t is never ±1.
            return Ok(WitnessReport::new("s_member", params).fail(json!({ "a": 2, "b": 5 })));
        }
        let abs = a.abs();
        if abs == Integer::from(1) {
            return Ok(WitnessReport::new("s_member", params).pass());
        }
        let n = modulus(&abs)?;
        if let Entry::Vacant(slot) = self.cache.entry(n) {
            slot.insert(is_sr1_zmod(&abs)?);
        }
        let sr1 = &self.cache[&n];
        let report = WitnessReport::new("s_member", params);
        Ok(match &sr1.witness {
            None => report.pass(),
            Some(w) => report.fail(w.clone()),
        })
    }
}

pub fn s_member_int(a: &Integer) -> Result<WitnessReport> {
    SMembership::new().check(a)
}

/// `S(ℤ)` is multiplicatively closed and saturated on `0 < |a|, |b| <= bound`.
pub fn s_closure_check(bound: i64) -> Result<WitnessReport> {
    if bound < 2 {
        return Err(Error::Precondition("bound must be at least 2".into()));
    }
    let mut s = SMembership::new();
    let report = WitnessReport::new("s_closure", json!({ "bound": bound }));
    let values: Vec<i64> = (-bound..=bound).filter(|&v| v != 0).collect();
    for &a in &values {
        for &b in &values {
            let ma = s.check(&Integer::from(a))?.verdict;
            let mb = s.check(&Integer::from(b))?.verdict;
            let mab = s.check(&Integer::from(a * b))?.verdict;
            if ma && mb && !mab {
                return Ok(report.fail(json!({ "a": a, "b": b, "property": "closure" })));
            }
            if mab && !(ma && mb) {
                return Ok(report.fail(json!({ "a": a, "b": b, "property": "saturation" })));
            }
        }
    }
    Ok(report.pass())
}
