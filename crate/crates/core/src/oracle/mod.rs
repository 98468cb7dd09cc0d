//! Brute-force ground truth: finite quotients ℤ/n, bounded searches for the
//! element-wise factorization properties, and an independent integer SNF.
//!
//! Every negative verdict carries a witness, and [`revalidate`] re-checks a
//! witness with code that shares nothing with the search that produced it.

mod definitions;
mod euclid;
mod zmod;

pub use definitions::{
    check_avoidable_def, check_gelfand_def, DefSearch, DEFAULT_BOUND, DEFAULT_SAMPLES, DEFAULT_SEED,
};
pub use euclid::euclidean_snf;
pub use zmod::{
    is_clean_zmod, is_pm_zmod, is_sr1_zmod, s_closure_check, s_member_int, zmod_structure,
    SMembership, ZmodStructure, ZMOD_CAP,
};

use num_integer::gcd;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::numeric::{rat, Integer};
use crate::ring::{gcd_many, RingElement, RingId};

/// Verdict of an oracle check. `witness` is present whenever the verdict is
/// false.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub check: String,
    pub params: Value,
    pub verdict: bool,
    pub witness: Option<Value>,
}

impl WitnessReport {
    pub(crate) fn new(check: &str, params: Value) -> Self {
        WitnessReport {
            check: check.to_string(),
            params,
            verdict: true,
            witness: None,
        }
    }

    pub(crate) fn pass(self) -> Self {
        WitnessReport {
            verdict: true,
            witness: None,
            ..self
        }
    }

    pub(crate) fn fail(self, witness: Value) -> Self {
        WitnessReport {
            verdict: false,
            witness: Some(witness),
            ..self
        }
    }
}

fn field_i64(w: &Value, key: &str) -> Result<i64> {
    match &w[key] {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
    .ok_or_else(|| {
        Error::Precondition(format!(
            "witness field {key:?} is missing or not an integer"
        ))
    })
}

fn field_str<'a>(w: &'a Value, key: &str) -> Result<&'a str> {
    w[key]
        .as_str()
        .ok_or_else(|| Error::Precondition(format!("witness field {key:?} is missing")))
}

/// No `t` in ℤ/n makes `a + bt` a unit although `(a, b, n)` is coprime.
fn sr1_fails(n: i64, a: i64, b: i64) -> bool {
    n >= 2 && gcd(gcd(a, b), n) == 1 && (0..n).all(|t| gcd((a + b * t).rem_euclid(n), n) != 1)
}

/// `a = rs` has no splitting with `gcd(r, b) = gcd(s, c) = 1` (and
/// `gcd(r, s) = 1` when `avoidable`).
fn int_context_fails(a: i64, b: i64, c: i64, avoidable: bool) -> bool {
    if a == 0 || gcd(gcd(a, b), c) != 1 {
        return false;
    }
    let m = a.abs();
    (1..=m).filter(|d| m % d == 0).all(|d| {
        [d, -d].iter().all(|&r| {
            let s = a / r;
            gcd(r, b) != 1 || gcd(s, c) != 1 || (avoidable && gcd(r, s) != 1)
        })
    })
}

/// Counterexample check for `a` in the Henriksen ring: if `a(0) = 0` and
/// `b`, `c` are non-unit integers, any `a = rs` has `r(0) = 0` or
/// `s(0) = 0`; an element vanishing at 0 is divisible by every integer, so
/// either `b | r` or `c | s`, and neither coprimality can hold.
fn henriksen_context_fails(w: &Value) -> Result<bool> {
    let parse = |k| RingElement::parse(RingId::Henriksen, field_str(w, k)?);
    let (a, b, c) = (parse("a")?, parse("b")?, parse("c")?);
    let RingElement::Henriksen(ah) = &a else {
        unreachable!()
    };
    let non_unit_integer = |e: &RingElement| {
        e.as_poly()
            .is_some_and(|p| p.is_constant() && p.constant_term().abs() > rat(1, 1))
    };
    Ok(!a.is_zero()
        && ah.constant() == Integer::from(0)
        && non_unit_integer(&b)
        && non_unit_integer(&c)
        && gcd_many(&[a, b, c])?.0.is_one())
}

/// Re-checks a report independently. Passing reports are accepted when they
/// carry no witness; failing ones when the witness confirms the failure.
pub fn revalidate(report: &WitnessReport) -> Result<bool> {
    let Some(w) = &report.witness else {
        return Ok(report.verdict);
    };
    if report.verdict {
        return Ok(false);
    }
    Ok(match report.check.as_str() {
        "pm" => {
            let (n, p) = (field_i64(w, "n")?, field_i64(w, "prime")?);
            let is_field = |d: i64| d >= 2 && (1..d).all(|x| (1..d).any(|y| x * y % d == 1));
            let above = (1..=n)
                .filter(|&m| n % m == 0 && p % m == 0 && is_field(m))
                .count();
            above != 1
        }
        "sr1" => sr1_fails(field_i64(w, "n")?, field_i64(w, "a")?, field_i64(w, "b")?),
        "clean" => {
            let (n, a) = (field_i64(w, "n")?, field_i64(w, "a")?);
            (0..n).all(|e| e * e % n != e || gcd((a - e).rem_euclid(n), n) != 1)
        }
        "s_member" => {
            let a: Integer = field_str(&report.params, "a")?
                .parse()
                .map_err(|_| Error::Precondition("bad parameter a".into()))?;
            if a == Integer::from(0) {
                // 2 + 5t = ±1 would need 5 | (±1 - 2).
                let (x, y) = (field_i64(w, "a")?, field_i64(w, "b")?);
                gcd(x, y) == 1 && (1 - x) % y != 0 && (-1 - x) % y != 0
            } else {
                sr1_fails(field_i64(w, "n")?, field_i64(w, "a")?, field_i64(w, "b")?)
            }
        }
        "s_closure" => {
            let (a, b) = (field_i64(w, "a")?, field_i64(w, "b")?);
            let member = |k: i64| s_member_int(&Integer::from(k)).map(|r| r.verdict);
            let (ma, mb, mab) = (member(a)?, member(b)?, member(a * b)?);
            match field_str(w, "property")? {
                "closure" => ma && mb && !mab,
                "saturation" => mab && !(ma && mb),
                _ => false,
            }
        }
        "gelfand_def" | "avoidable" => match field_str(w, "ring")? {
            "integers" => int_context_fails(
                field_i64(w, "a")?,
                field_i64(w, "b")?,
                field_i64(w, "c")?,
                report.check == "avoidable",
            ),
            "henriksen" => henriksen_context_fails(w)?,
            _ => false,
        },
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn witnesses_revalidate() {
        let r = s_member_int(&Integer::from(0)).unwrap();
        assert!(revalidate(&r).unwrap());

        let x = RingElement::parse(RingId::Henriksen, "x").unwrap();
        let search = DefSearch::Samples {
            count: 4,
            seed: DEFAULT_SEED,
        };
        let r = check_gelfand_def(RingId::Henriksen, &x, search).unwrap();
        assert!(revalidate(&r).unwrap());
    }

    #[test]
    fn forged_witnesses_are_rejected() {
        let forged =
            WitnessReport::new("sr1", json!({ "n": 6 })).fail(json!({ "n": 6, "a": 1, "b": 0 }));
        assert!(!revalidate(&forged).unwrap());
        let forged = WitnessReport::new("gelfand_def", json!({}))
            .fail(json!({ "ring": "integers", "a": "6", "b": "2", "c": "3" }));
        assert!(!revalidate(&forged).unwrap());
        let forged = WitnessReport::new("gelfand_def", json!({}))
            .fail(json!({ "ring": "henriksen", "a": "2 + x", "b": "2", "c": "3" }));
        assert!(!revalidate(&forged).unwrap());
        let forged = WitnessReport::new("pm", json!({})).fail(json!({ "n": 12, "prime": 2 }));
        assert!(!revalidate(&forged).unwrap());
    }
}
