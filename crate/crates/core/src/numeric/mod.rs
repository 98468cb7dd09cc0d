//! Exact integers, rationals and univariate polynomials over the rationals.
//!
//! Integers and rationals are `num-bigint`/`num-rational` values; the
//! rational type keeps itself in lowest terms with a positive denominator,
//! so every value here is already canonical.

mod grammar;
mod poly;

pub use grammar::{format_poly, parse_integer, parse_poly};
pub use poly::RatPoly;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(op: RatOp, a: &Rational, b: &Rational) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_int(n: Integer) -> Rational {
    Rational::from_integer(n)
}

/// Extended Euclid over the integers.
///
/// Returns `(g, u, v)` with `u*a + v*b = g` and `g >= 0`. Terminates because
/// the remainders strictly decrease in absolute value. `(0, 0)` gives
/// `(0, 0, 0)`.
pub fn int_xgcd(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Integer::one(), Integer::zero());
    let (mut old_t, mut t) = (Integer::zero(), Integer::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else if old_r.is_zero() {
        (old_r, Integer::zero(), Integer::zero())
    } else {
        (old_r, old_s, old_t)
    }
}

/// Generator of the fractional ideal `rℤ + sℤ` of ℚ.
///
/// Returns `(q, u, v)` with `u*r + v*s = q`, `q > 0`, and `r/q`, `s/q`
/// integers. Any `t` for which `r/t` and `s/t` are integers also has
/// `q/t` integral, because `q` is an integer combination of `r` and `s`.
pub fn rational_pair_gcd(r: &Rational, s: &Rational) -> Result<(Rational, Integer, Integer)> {
    if r.is_zero() && s.is_zero() {
        return Err(Error::BothZero);
    }
    let common = r.denom().lcm(s.denom());
    let rn = r.numer() * (&common / r.denom());
    let sn = s.numer() * (&common / s.denom());
    let (g, u, v) = int_xgcd(&rn, &sn);
    Ok((Rational::new(g, common), u, v))
}

/// Whether a rational is an integer.
pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn rat_arith_examples() {
        assert_eq!(
            rat_arith(RatOp::Add, &rat(1, 2), &rat(1, 3)).unwrap(),
            rat(5, 6)
        );
        let prod = rat_arith(RatOp::Mul, &rat(2, 4), &rat(2, 1)).unwrap();
        assert_eq!(prod, Rational::one());
        assert_eq!(prod.denom(), &int(1));
        assert_eq!(
            rat_arith(RatOp::Div, &Rational::one(), &Rational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn zero_is_canonical() {
        let z = rat(0, 7);
        assert_eq!(z.numer(), &int(0));
        assert_eq!(z.denom(), &int(1));
    }

    #[test]
    fn int_xgcd_examples() {
        assert_eq!(int_xgcd(&int(12), &int(18)), (int(6), int(-1), int(1)));
        assert_eq!(int_xgcd(&int(2), &int(3)), (int(1), int(-1), int(1)));
        assert_eq!(int_xgcd(&int(0), &int(0)), (int(0), int(0), int(0)));
        assert_eq!(int_xgcd(&int(-4), &int(0)), (int(4), int(-1), int(0)));
    }

    #[test]
    fn rational_pair_gcd_examples() {
        assert_eq!(
            rational_pair_gcd(&rat(1, 2), &rat(3, 4)).unwrap(),
            (rat(1, 4), int(-1), int(1))
        );
        assert_eq!(
            rational_pair_gcd(&rat(1, 1), &rat(1, 2)).unwrap(),
            (rat(1, 2), int(0), int(1))
        );
        assert_eq!(
            rational_pair_gcd(&rat(5, 1), &Rational::zero()).unwrap(),
            (rat(5, 1), int(1), int(0))
        );
        assert_eq!(
            rational_pair_gcd(&Rational::zero(), &Rational::zero()),
            Err(Error::BothZero)
        );
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-100i64..=100, 1i64..=100).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn rational_results_are_canonical(a in small_rat(), b in small_rat(), k in 0usize..4) {
            let op = [RatOp::Add, RatOp::Sub, RatOp::Mul, RatOp::Div][k];
            if let Ok(c) = rat_arith(op, &a, &b) {
                prop_assert!(c.denom().is_positive());
                prop_assert!(c.numer().gcd(c.denom()).is_one());
            } else {
                prop_assert!(b.is_zero() && op == RatOp::Div);
            }
        }

        #[test]
        fn rational_pair_gcd_identity(r in small_rat(), s in small_rat()) {
            prop_assume!(!(r.is_zero() && s.is_zero()));
            let (q, u, v) = rational_pair_gcd(&r, &s).unwrap();
            prop_assert_eq!(rat_int(u) * &r + rat_int(v) * &s, q.clone());
            prop_assert!(q.is_positive());
            prop_assert!(is_integral(&(&r / &q)));
            prop_assert!(is_integral(&(&s / &q)));
        }
    }
}
