//! The three Bezout domains behind one tagged element type, and the
//! self-certifying extended gcd.
//!
//! Arithmetic operators on [`RingElement`] panic when the operands belong to
//! different rings. Every public entry point that takes several elements
//! checks the tags first and reports [`Error::RingMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::henriksen::{div_henriksen, xgcd_henriksen, HenriksenElement};
use crate::numeric::{int_xgcd, parse_integer, parse_poly, Integer, RatPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingId {
    /// ℤ
    Integers,
    /// ℚ[x]
    Ratpoly,
    /// ℤ + xℚ[x]
    Henriksen,
}

impl RingId {
    pub const ALL: [RingId; 3] = [RingId::Integers, RingId::Ratpoly, RingId::Henriksen];

    pub fn name(self) -> &'static str {
        match self {
            RingId::Integers => "integers",
            RingId::Ratpoly => "ratpoly",
            RingId::Henriksen => "henriksen",
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "integers" => Ok(RingId::Integers),
            "ratpoly" => Ok(RingId::Ratpoly),
            "henriksen" => Ok(RingId::Henriksen),
            other => Err(format!(
                "unknown ring {other:?} (expected integers, ratpoly or henriksen)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Integer(Integer),
    RatPoly(RatPoly),
    Henriksen(HenriksenElement),
}

use RingElement as E;

impl RingElement {
    pub fn ring(&self) -> RingId {
        match self {
            E::Integer(_) => RingId::Integers,
            E::RatPoly(_) => RingId::Ratpoly,
            E::Henriksen(_) => RingId::Henriksen,
        }
    }

    pub fn zero(ring: RingId) -> Self {
        Self::from_i64(ring, 0)
    }

    pub fn one(ring: RingId) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn from_i64(ring: RingId, n: i64) -> Self {
        Self::from_integer(ring, Integer::from(n))
    }

    pub fn from_integer(ring: RingId, n: Integer) -> Self {
        match ring {
            RingId::Integers => E::Integer(n),
            RingId::Ratpoly => E::RatPoly(RatPoly::from_integer(n)),
            RingId::Henriksen => E::Henriksen(HenriksenElement::from_integer(n)),
        }
    }

    /// Reads the shared element grammar; Henriksen elements must have an
    /// integer constant term.
    pub fn parse(ring: RingId, text: &str) -> Result<Self> {
        Ok(match ring {
            RingId::Integers => E::Integer(parse_integer(text)?),
            RingId::Ratpoly => E::RatPoly(parse_poly(text)?),
            RingId::Henriksen => E::Henriksen(HenriksenElement::new(parse_poly(text)?)?),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            E::Integer(n) => n.is_zero(),
            E::RatPoly(p) => p.is_zero(),
            E::Henriksen(h) => h.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.ring())
    }

    pub fn as_poly(&self) -> Option<&RatPoly> {
        match self {
            E::Integer(_) => None,
            E::RatPoly(p) => Some(p),
            E::Henriksen(h) => Some(h.poly()),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.ring()), |acc, _| &acc * self)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            E::Integer(n) => n.fmt(f),
            E::RatPoly(p) => p.fmt(f),
            E::Henriksen(h) => h.fmt(f),
        }
    }
}

fn mismatch(a: &RingElement, b: &RingElement) -> ! {
    panic!("ring mismatch: {} vs {}", a.ring(), b.ring())
}

macro_rules! ring_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                match (self, rhs) {
                    (E::Integer(a), E::Integer(b)) => E::Integer(a.$method(b)),
                    (E::RatPoly(a), E::RatPoly(b)) => E::RatPoly(a.$method(b)),
                    // H is closed under ring operations
                    (E::Henriksen(a), E::Henriksen(b)) => E::Henriksen(
                        HenriksenElement::from_poly_unchecked(a.poly().$method(b.poly())),
                    ),
                    _ => mismatch(self, rhs),
                }
            }
        }

        impl $tr for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

ring_binop!(Add, add);
ring_binop!(Sub, sub);
ring_binop!(Mul, mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        match self {
            E::Integer(a) => E::Integer(-a),
            E::RatPoly(a) => E::RatPoly(-a),
            E::Henriksen(a) => E::Henriksen(HenriksenElement::from_poly_unchecked(-a.poly())),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

pub fn same_ring(a: &RingElement, b: &RingElement) -> Result<RingId> {
    if a.ring() == b.ring() {
        Ok(a.ring())
    } else {
        Err(Error::RingMismatch(a.ring(), b.ring()))
    }
}

/// Bezout identity `a*u + b*v = g` together with the cofactors
/// `a = g*a1`, `b = g*b1`. `g` is canonical, and zero only for `a = b = 0`
/// (in which case every field is zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdCertificate {
    pub ring: RingId,
    pub a: RingElement,
    pub b: RingElement,
    pub g: RingElement,
    pub u: RingElement,
    pub v: RingElement,
    pub a1: RingElement,
    pub b1: RingElement,
}

impl GcdCertificate {
    /// Re-checks every invariant from scratch; returns the first failure.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let parts = [
            &self.a, &self.b, &self.g, &self.u, &self.v, &self.a1, &self.b1,
        ];
        if parts.iter().any(|e| e.ring() != self.ring) {
            return Err("mixed ring tags".into());
        }
        if &(&self.a * &self.u) + &(&self.b * &self.v) != self.g {
            return Err(format!("a*u + b*v != g for g = {}", self.g));
        }
        if &self.g * &self.a1 != self.a {
            return Err("a != g*a1".into());
        }
        if &self.g * &self.b1 != self.b {
            return Err("b != g*b1".into());
        }
        if canonical(&self.g) != self.g {
            return Err(format!("g = {} is not canonical", self.g));
        }
        if self.g.is_zero() != (self.a.is_zero() && self.b.is_zero()) {
            return Err("g = 0 must hold exactly when a = b = 0".into());
        }
        Ok(())
    }
}

/// Extended gcd with cofactors.
///
/// ℤ and ℚ[x] use classical extended Euclid (terminating by descent of
/// absolute value and degree respectively); H uses [`xgcd_henriksen`].
pub fn xgcd(a: &RingElement, b: &RingElement) -> Result<GcdCertificate> {
    let ring = same_ring(a, b)?;
    let (g, u, v) = match (a, b) {
        (E::Integer(x), E::Integer(y)) => {
            let (g, u, v) = int_xgcd(x, y);
            (E::Integer(g), E::Integer(u), E::Integer(v))
        }
        (E::RatPoly(x), E::RatPoly(y)) => {
            let (g, u, v) = RatPoly::xgcd(x, y);
            (E::RatPoly(g), E::RatPoly(u), E::RatPoly(v))
        }
        (E::Henriksen(x), E::Henriksen(y)) => {
            let c = xgcd_henriksen(x, y);
            (E::Henriksen(c.gcd), E::Henriksen(c.u), E::Henriksen(c.v))
        }
        _ => unreachable!("tags checked"),
    };
    let (a1, b1) = if g.is_zero() {
        (RingElement::zero(ring), RingElement::zero(ring))
    } else {
        (exact_div(a, &g)?, exact_div(b, &g)?)
    };
    Ok(GcdCertificate {
        ring,
        a: a.clone(),
        b: b.clone(),
        g,
        u,
        v,
        a1,
        b1,
    })
}

/// gcd of a nonempty list with coefficients: `Σ coeffs[i]*v[i] = g`.
pub fn gcd_many(v: &[RingElement]) -> Result<(RingElement, Vec<RingElement>)> {
    let (first, rest) = v.split_first().ok_or(Error::EmptyInput)?;
    for e in rest {
        same_ring(first, e)?;
    }
    let ring = first.ring();
    let c = xgcd(first, &RingElement::zero(ring))?;
    let mut g = c.g;
    let mut coeffs = vec![c.u];
    for e in rest {
        let c = xgcd(&g, e)?;
        for k in coeffs.iter_mut() {
            *k = &*k * &c.u;
        }
        coeffs.push(c.v);
        g = c.g;
    }
    Ok((g, coeffs))
}

fn quotient(a: &RingElement, d: &RingElement) -> Option<RingElement> {
    match (a, d) {
        (E::Integer(x), E::Integer(y)) => {
            if y.is_zero() {
                return x.is_zero().then(Integer::zero).map(E::Integer);
            }
            let (q, r) = x.div_rem(y);
            r.is_zero().then_some(E::Integer(q))
        }
        (E::RatPoly(x), E::RatPoly(y)) => {
            if y.is_zero() {
                return x.is_zero().then(RatPoly::zero).map(E::RatPoly);
            }
            x.div_exact(y).map(E::RatPoly)
        }
        (E::Henriksen(x), E::Henriksen(y)) => div_henriksen(x, y).map(E::Henriksen),
        _ => unreachable!("tags checked"),
    }
}

/// Whether `a ∈ dR`. For `d = 0` this holds only for `a = 0`.
pub fn divides(d: &RingElement, a: &RingElement) -> Result<bool> {
    same_ring(d, a)?;
    Ok(quotient(a, d).is_some())
}

/// The `q` with `q*d = a`.
pub fn exact_div(a: &RingElement, d: &RingElement) -> Result<RingElement> {
    same_ring(a, d)?;
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    quotient(a, d).ok_or_else(|| Error::NotDivisible {
        dividend: a.to_string(),
        divisor: d.to_string(),
    })
}

pub fn is_unit(a: &RingElement) -> bool {
    match a {
        E::Integer(n) => n.abs().is_one(),
        E::RatPoly(p) => p.degree() == Some(0),
        E::Henriksen(h) => h.is_unit(),
    }
}

/// Inverse of a unit, `None` otherwise.
pub fn unit_inverse(a: &RingElement) -> Option<RingElement> {
    if !is_unit(a) {
        return None;
    }
    Some(match a {
        // ±1 are self-inverse
        E::Integer(_) | E::Henriksen(_) => a.clone(),
        E::RatPoly(p) => E::RatPoly(RatPoly::constant(p.constant_term().recip())),
    })
}

/// Unit `w` with `w*a = canonical(a)`.
pub fn normalizing_unit(a: &RingElement) -> RingElement {
    let ring = a.ring();
    match a {
        E::Integer(n) if n.is_negative() => RingElement::from_i64(ring, -1),
        E::RatPoly(p) if !p.is_zero() => {
            E::RatPoly(RatPoly::constant(p.leading().expect("nonzero").recip()))
        }
        E::Henriksen(h) if *h != h.canonical() => RingElement::from_i64(ring, -1),
        _ => RingElement::one(ring),
    }
}

/// Representative of the associate class: nonnegative in ℤ, monic in ℚ[x],
/// lowest nonzero coefficient positive in H.
pub fn canonical(a: &RingElement) -> RingElement {
    match a {
        E::Integer(n) => E::Integer(n.abs()),
        E::RatPoly(p) => E::RatPoly(p.monic()),
        E::Henriksen(h) => E::Henriksen(h.canonical()),
    }
}

pub fn are_associates(a: &RingElement, b: &RingElement) -> Result<bool> {
    same_ring(a, b)?;
    Ok(canonical(a) == canonical(b))
}

pub fn coprime(a: &RingElement, b: &RingElement) -> Result<bool> {
    Ok(is_unit(&xgcd(a, b)?.g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    fn el(ring: RingId, s: &str) -> RingElement {
        RingElement::parse(ring, s).unwrap()
    }
    fn z(n: i64) -> RingElement {
        RingElement::from_i64(RingId::Integers, n)
    }
    fn q(s: &str) -> RingElement {
        el(RingId::Ratpoly, s)
    }
    fn h(s: &str) -> RingElement {
        el(RingId::Henriksen, s)
    }

    #[test]
    fn xgcd_examples() {
        let c = xgcd(&z(12), &z(18)).unwrap();
        assert_eq!((c.g.clone(), c.u.clone(), c.v.clone()), (z(6), z(-1), z(1)));
        assert_eq!((c.a1.clone(), c.b1.clone()), (z(2), z(3)));
        c.verify().unwrap();

        let c = xgcd(&q("x^2 - 1"), &q("x^2 + 2*x + 1")).unwrap();
        assert_eq!(c.g, q("x + 1"));
        c.verify().unwrap();

        let c = xgcd(&z(0), &z(0)).unwrap();
        for e in [&c.g, &c.u, &c.v, &c.a1, &c.b1] {
            assert!(e.is_zero());
        }
        c.verify().unwrap();

        assert_eq!(
            xgcd(&z(1), &q("1")),
            Err(Error::RingMismatch(RingId::Integers, RingId::Ratpoly))
        );
    }

    #[test]
    fn gcd_many_examples() {
        let (g, cs) = gcd_many(&[z(6), z(10), z(15)]).unwrap();
        assert_eq!(g, z(1));
        assert_eq!(
            &(&(&cs[0] * &z(6)) + &(&cs[1] * &z(10))) + &(&cs[2] * &z(15)),
            z(1)
        );

        let v = [h("x"), h("3"), h("1 + x")];
        let (g, cs) = gcd_many(&v).unwrap();
        assert_eq!(g, h("1"));
        let sum = v
            .iter()
            .zip(&cs)
            .fold(h("0"), |acc, (e, k)| &acc + &(e * k));
        assert_eq!(sum, g);
        // Bezout coefficients are not unique; (-1, 0, 1) is another witness.
        assert_eq!(&(&h("-1") * &v[0]) + &v[2], h("1"));

        assert_eq!(gcd_many(&[z(4), z(6)]).unwrap().0, z(2));
        assert_eq!(gcd_many(&[]), Err(Error::EmptyInput));
        assert!(matches!(
            gcd_many(&[z(1), h("1")]),
            Err(Error::RingMismatch(..))
        ));
    }

    #[test]
    fn divisibility_examples() {
        assert!(divides(&h("2"), &h("x")).unwrap());
        assert!(!divides(&h("x"), &h("1/2*x")).unwrap());
        assert!(divides(&z(5), &z(0)).unwrap());
        assert_eq!(exact_div(&h("6 + 3*x"), &h("3")).unwrap(), h("2 + x"));
        assert_eq!(exact_div(&q("x^2 - 1"), &q("x - 1")).unwrap(), q("x + 1"));
        assert!(matches!(
            exact_div(&z(7), &z(2)),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(exact_div(&z(7), &z(0)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn units_and_canonical_forms() {
        assert!(is_unit(&q("2/3")));
        assert!(!is_unit(&q("0")));
        assert!(!is_unit(&h("1 + 1/2*x")));
        assert!(is_unit(&z(-1)));
        assert_eq!(canonical(&z(-6)), z(6));
        assert_eq!(canonical(&q("2*x + 2")), q("x + 1"));
        assert_eq!(canonical(&h("-2 - x")), h("2 + x"));
        for a in [z(-6), q("-3*x + 1/2"), h("-x + x^2")] {
            assert_eq!(&normalizing_unit(&a) * &a, canonical(&a));
        }
    }

    #[test]
    fn coprimality_examples() {
        assert!(coprime(&h("x"), &h("1 + x")).unwrap());
        assert!(!coprime(&h("x"), &h("2")).unwrap());
        assert!(coprime(&z(4), &z(9)).unwrap());
    }

    fn arb_int() -> impl Strategy<Value = RingElement> {
        (-1_000_000_000i64..=1_000_000_000).prop_map(z)
    }

    fn arb_ratpoly() -> impl Strategy<Value = RingElement> {
        prop::collection::vec((-20i64..=20, 1i64..=20), 0..=7).prop_map(|cs| {
            E::RatPoly(RatPoly::new(
                cs.into_iter().map(|(n, d)| rat(n, d)).collect(),
            ))
        })
    }

    fn arb_henriksen() -> impl Strategy<Value = RingElement> {
        crate::henriksen::tests::arb_h(4).prop_map(E::Henriksen)
    }

    fn arb_any() -> impl Strategy<Value = (RingElement, RingElement)> {
        prop_oneof![
            (arb_int(), arb_int()),
            (arb_ratpoly(), arb_ratpoly()),
            (arb_henriksen(), arb_henriksen()),
        ]
    }

    fn arb_quad() -> impl Strategy<Value = Vec<RingElement>> {
        prop_oneof![
            prop::collection::vec(arb_int(), 4),
            prop::collection::vec(arb_ratpoly(), 4),
            prop::collection::vec(arb_henriksen(), 4),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(3000))]

        #[test]
        fn certificates_verify((a, b) in arb_any()) {
            let c = xgcd(&a, &b).unwrap();
            prop_assert_eq!(c.verify(), Ok(()));
        }

        #[test]
        fn canonical_is_idempotent_and_unit_invariant((a, _) in arb_any(), num in 1i64..9, den in 1i64..9) {
            let c = canonical(&a);
            prop_assert_eq!(canonical(&c), c.clone());
            let ring = a.ring();
            prop_assert_eq!(canonical(&-&a), c.clone());
            if ring == RingId::Ratpoly {
                let w = E::RatPoly(RatPoly::constant(rat(num, den)));
                prop_assert_eq!(canonical(&(&w * &a)), c.clone());
            }
            prop_assert!(divides(&a, &c).unwrap() && divides(&c, &a).unwrap());
        }

        #[test]
        fn gcd_many_identity(v in arb_quad()) {
            for len in [3, 4] {
                let (g, cs) = gcd_many(&v[..len]).unwrap();
                let sum = v[..len].iter().zip(&cs).fold(RingElement::zero(g.ring()), |acc, (e, k)| &acc + &(e * k));
                prop_assert_eq!(&sum, &g);
                for e in &v[..len] {
                    prop_assert!(divides(&g, e).unwrap());
                }
            }
        }
    }
}
