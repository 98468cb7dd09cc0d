//! Bounded searches for the factorization properties of a single element.
//!
//! `a` is Gelfand when every context `(b, c)` with `aR + bR + cR = R` admits
//! `a = rs` with `rR + bR = R` and `sR + cR = R`; it is avoidable when in
//! addition `rR + sR = R`. Over ℤ the contexts are exhausted in a box; over
//! the polynomial rings they are probed (fixed contexts first, then seeded
//! random ones).

use num_integer::gcd;
use num_traits::ToPrimitive;
use serde_json::json;

use super::WitnessReport;
use crate::error::{Error, Result};
use crate::gelfand::{chain_length_bound, factor_by_stabilization};
use crate::henriksen::HenriksenElement;
use crate::numeric::{rat, Integer, RatPoly};
use crate::ring::{coprime, divides, exact_div, gcd_many, RingElement, RingId};
use crate::sample::{Bounds, Sampler};

pub const DEFAULT_BOUND: i64 = 20;
pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_SAMPLES: usize = 64;

/// How the contexts `(b, c)` are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefSearch {
    /// Every `(b, c)` with `|b|, |c| <= bound` (integers only).
    Bound(i64),
    /// Fixed probes plus `count` random contexts from `seed`.
    Samples { count: usize, seed: u64 },
}

fn small_int(a: &Integer) -> Result<i64> {
    a.to_i64()
        .filter(|v| v.unsigned_abs() <= 1 << 20)
        .ok_or_else(|| Error::Precondition(format!("{a} is too large for exhaustive search")))
}

/// Signed divisors `r` of `a`, so that `s = a / r` ranges over all splittings.
pub(crate) fn signed_divisors(a: i64) -> Vec<i64> {
    let m = a.unsigned_abs() as i64;
    (1..=m)
        .filter(|d| m % d == 0)
        .flat_map(|d| [d, -d])
        .collect()
}

fn int_split(a: i64, b: i64, c: i64, avoidable: bool) -> Option<(i64, i64)> {
    signed_divisors(a)
        .into_iter()
        .map(|r| (r, a / r))
        .find(|&(r, s)| gcd(r, b) == 1 && gcd(s, c) == 1 && (!avoidable || gcd(r, s) == 1))
}

fn int_contexts(search: DefSearch) -> Vec<(i64, i64)> {
    match search {
        DefSearch::Bound(bound) => (-bound..=bound)
            .flat_map(|b| (-bound..=bound).map(move |c| (b, c)))
            .collect(),
        DefSearch::Samples { count, seed } => {
            let mut s = Sampler::new(seed);
            let mut out = vec![(2, 3), (3, 2)];
            out.extend((0..count).map(|_| (s.int(DEFAULT_BOUND), s.int(DEFAULT_BOUND))));
            out
        }
    }
}

fn int_check(name: &str, a: &Integer, search: DefSearch, avoidable: bool) -> Result<WitnessReport> {
    let av = small_int(a)?;
    if av == 0 {
        return Err(Error::Precondition("a must be nonzero".into()));
    }
    let report = WitnessReport::new(
        name,
        search_params(RingId::Integers, &a.to_string(), search),
    );
    for (b, c) in int_contexts(search) {
        if gcd(gcd(av, b), c) != 1 {
            continue;
        }
        if int_split(av, b, c, avoidable).is_none() {
            return Ok(report.fail(json!({
                "ring": RingId::Integers.name(),
                "a": av.to_string(),
                "b": b.to_string(),
                "c": c.to_string(),
            })));
        }
    }
    Ok(report.pass())
}

fn search_params(ring: RingId, a: &str, search: DefSearch) -> serde_json::Value {
    match search {
        DefSearch::Bound(bound) => json!({ "ring": ring.name(), "a": a, "bound": bound }),
        DefSearch::Samples { count, seed } => {
            json!({ "ring": ring.name(), "a": a, "samples": count, "seed": seed })
        }
    }
}

/// Gelfand check of `a` against the contexts selected by `search`.
///
/// A `false` verdict carries the context `(b, c)` for which no splitting was
/// found. Over the polynomial rings a failed stabilization is followed by a
/// search through the divisor family `{±m} ∪ {q·x^j·h}` (with `h` built from
/// gcds of the x-free parts) before a context is declared a counterexample.
pub fn check_gelfand_def(
    ring: RingId,
    a: &RingElement,
    search: DefSearch,
) -> Result<WitnessReport> {
    if a.ring() != ring {
        return Err(Error::RingMismatch(ring, a.ring()));
    }
    if a.is_zero() {
        return Err(Error::Precondition("a must be nonzero".into()));
    }
    if let RingElement::Integer(n) = a {
        return int_check("gelfand_def", n, search, false);
    }
    let DefSearch::Samples { count, seed } = search else {
        return Err(Error::Precondition(format!(
            "exhaustive bounds apply to integers only; use samples for {ring}"
        )));
    };
    let report = WitnessReport::new("gelfand_def", search_params(ring, &a.to_string(), search));
    for (b, c) in poly_contexts(ring, a, count, seed)? {
        let found = match factor_by_stabilization(a, &b, &c, chain_length_bound(a)) {
            Ok(_) => true,
            Err(Error::StabilizationFailure(_) | Error::Certification(_)) => {
                family_split(a, &b, &c)?.is_some()
            }
            Err(e) => return Err(e),
        };
        if !found {
            return Ok(report.fail(json!({
                "ring": ring.name(),
                "a": a.to_string(),
                "b": b.to_string(),
                "c": c.to_string(),
            })));
        }
    }
    Ok(report.pass())
}

/// Avoidability check over ℤ: the splitting must also have coprime factors.
pub fn check_avoidable_def(a: &Integer, bound: i64) -> Result<WitnessReport> {
    int_check("avoidable", a, DefSearch::Bound(bound), true)
}

fn poly_contexts(
    ring: RingId,
    a: &RingElement,
    count: usize,
    seed: u64,
) -> Result<Vec<(RingElement, RingElement)>> {
    let n = |k| RingElement::from_i64(ring, k);
    let mut out = Vec::new();
    let mut push = |b: RingElement, c: RingElement| -> Result<()> {
        if gcd_many(&[a.clone(), b.clone(), c.clone()])?.0.is_one() {
            out.push((b, c));
        }
        Ok(())
    };
    for (b, c) in [(2, 3), (3, 2), (2, 5)] {
        push(n(b), n(c))?;
    }
    let mut s = Sampler::new(seed);
    let bounds = Bounds::small(2);
    for _ in 0..count {
        push(s.element(ring, &bounds), s.element(ring, &bounds))?;
    }
    Ok(out)
}

fn x_free(p: &RatPoly) -> RatPoly {
    match p.valuation() {
        Some(v) => p.shift_down(v),
        None => RatPoly::one(),
    }
}

fn normalized(p: &RatPoly) -> RatPoly {
    p.scale(&p.constant_term().recip())
}

fn wrap(ring: RingId, p: RatPoly) -> Option<RingElement> {
    match ring {
        RingId::Ratpoly => Some(RingElement::RatPoly(p)),
        RingId::Henriksen => HenriksenElement::new(p).ok().map(RingElement::Henriksen),
        RingId::Integers => None,
    }
}

/// Searches `r` in the structured divisor family of `a` with
/// `rR + bR = R` and `(a/r)R + cR = R`.
fn family_split(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
) -> Result<Option<(RingElement, RingElement)>> {
    let ring = a.ring();
    let (ap, bp, cp) = match (a.as_poly(), b.as_poly(), c.as_poly()) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return Ok(None),
    };
    let v = ap.valuation().expect("a is nonzero");
    let core = x_free(ap);
    let mut parts = vec![RatPoly::one(), core.clone()];
    for other in [bp, cp] {
        if other.is_zero() {
            continue;
        }
        let (g, _, _) = RatPoly::xgcd(&core, &x_free(other));
        parts.push(core.div_exact(&g).expect("gcd divides"));
        parts.push(g);
    }
    let parts: Vec<RatPoly> = parts.iter().map(normalized).collect();

    let mut scalars = Vec::new();
    for num in 1..=6 {
        for den in 1..=6 {
            scalars.push(rat(num, den));
            scalars.push(rat(-num, den));
        }
    }
    scalars.extend((7..=30).flat_map(|m| [rat(m, 1), rat(-m, 1)]));
    scalars.sort();
    scalars.dedup();

    for h in &parts {
        for j in 0..=v {
            for q in &scalars {
                let Some(r) = wrap(ring, h.shift_up(j).scale(q)) else {
                    continue;
                };
                if !divides(&r, a)? {
                    continue;
                }
                let s = exact_div(a, &r)?;
                if coprime(&r, b)? && coprime(&s, c)? {
                    return Ok(Some((r, s)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> RingElement {
        RingElement::parse(RingId::Henriksen, s).unwrap()
    }

    #[test]
    fn integer_examples() {
        let six = Integer::from(6);
        let z = |k| RingElement::from_i64(RingId::Integers, k);
        assert!(
            check_gelfand_def(RingId::Integers, &z(6), DefSearch::Bound(20))
                .unwrap()
                .verdict
        );
        assert!(
            check_gelfand_def(RingId::Integers, &z(1), DefSearch::Bound(20))
                .unwrap()
                .verdict
        );
        assert!(check_avoidable_def(&six, 20).unwrap().verdict);
        assert!(check_avoidable_def(&Integer::from(12), 20).unwrap().verdict);
        assert!(matches!(
            check_gelfand_def(RingId::Integers, &z(0), DefSearch::Bound(5)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn henriksen_x_fails_at_two_three() {
        let search = DefSearch::Samples {
            count: 8,
            seed: DEFAULT_SEED,
        };
        let r = check_gelfand_def(RingId::Henriksen, &h("x"), search).unwrap();
        assert!(!r.verdict);
        let w = r.witness.unwrap();
        assert_eq!((w["b"].as_str(), w["c"].as_str()), (Some("2"), Some("3")));

        let r = check_gelfand_def(RingId::Henriksen, &h("2 + x"), search).unwrap();
        assert!(r.verdict);
    }

    #[test]
    fn family_finds_splittings() {
        // 2x = 2 · x, with 2 prime to 3 and x prime to 1 + x.
        let (r, s) = family_split(&h("2*x"), &h("3"), &h("1 + x"))
            .unwrap()
            .unwrap();
        assert!(coprime(&r, &h("3")).unwrap() && coprime(&s, &h("1 + x")).unwrap());
        assert!(family_split(&h("x"), &h("2"), &h("3")).unwrap().is_none());
    }
}
