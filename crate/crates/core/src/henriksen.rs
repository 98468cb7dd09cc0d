//! The ring H = ℤ + xℚ[x]: rational polynomials with an integer constant term.
//!
//! H is a Bezout domain whose units are ±1. Its prime spectrum is
//! `{0} ∪ {xℚ[x]} ∪ {maximals}`, and the prime `xℚ[x]` lies inside every
//! maximal ideal `pℤ + xℚ[x]`. Hence an element is Gelfand exactly when its
//! constant term is nonzero, and H is a local Gelfand ring that is not PM*.
//!
//! Every integer divides every element of `xℚ[x]`, which makes the divisor
//! lattice of `x` infinite; most surprises in this ring trace back to that.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{is_integral, rat_int, rational_pair_gcd, Integer, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HenriksenElement(RatPoly);

impl HenriksenElement {
    /// Accepts `p` iff its constant term is an integer.
    pub fn new(p: RatPoly) -> Result<Self> {
        let c = p.constant_term();
        if !is_integral(&c) {
            return Err(Error::NonIntegerConstant(c.to_string()));
        }
        Ok(HenriksenElement(p))
    }

    /// Wraps a polynomial already known to lie in H.
    pub(crate) fn from_poly_unchecked(p: RatPoly) -> Self {
        debug_assert!(is_integral(&p.constant_term()), "{p} is not in Z + xQ[x]");
        HenriksenElement(p)
    }

    pub fn from_integer(n: Integer) -> Self {
        HenriksenElement(RatPoly::from_integer(n))
    }

    pub fn zero() -> Self {
        HenriksenElement(RatPoly::zero())
    }

    pub fn one() -> Self {
        HenriksenElement(RatPoly::one())
    }

    pub fn poly(&self) -> &RatPoly {
        &self.0
    }

    pub fn into_poly(self) -> RatPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The constant term, as an integer.
    pub fn constant(&self) -> Integer {
        self.0.constant_term().to_integer()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_constant() && self.constant().abs().is_one()
    }

    /// Associate whose lowest-degree nonzero coefficient is positive.
    pub fn canonical(&self) -> Self {
        match self.0.lowest() {
            Some(c) if c.is_negative() => HenriksenElement(-&self.0),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for HenriksenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn validate_henriksen(p: RatPoly) -> Result<HenriksenElement> {
    HenriksenElement::new(p)
}

/// Quotient `f / d` when it exists in H.
pub fn div_henriksen(f: &HenriksenElement, d: &HenriksenElement) -> Option<HenriksenElement> {
    if d.is_zero() {
        return f.is_zero().then(HenriksenElement::zero);
    }
    let q = f.poly().div_exact(d.poly())?;
    is_integral(&q.constant_term()).then_some(HenriksenElement(q))
}

pub fn divides_henriksen(d: &HenriksenElement, f: &HenriksenElement) -> bool {
    div_henriksen(f, d).is_some()
}

/// Gelfand elements of H are the elements with nonzero constant term.
pub fn is_gelfand_henriksen(a: &HenriksenElement) -> bool {
    !a.constant().is_zero()
}

/// Output of [`xgcd_henriksen`]: `u*f + v*g = g_` with `g_` canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HenriksenGcd {
    pub gcd: HenriksenElement,
    pub u: HenriksenElement,
    pub v: HenriksenElement,
}

/// Extended gcd in H.
///
/// With `m` the smaller x-adic valuation and `h` the ℚ[x]-gcd of the
/// x-free parts (scaled so `h(0) = 1`), write `f = x^m h F`, `g = x^m h G`.
/// Then `F` and `G` are coprime in ℚ[x] and the gcd in H is `q x^m h`,
/// where `q` generates the fractional ideal `F(0)ℤ + G(0)ℤ`. When some
/// input has a nonzero constant term, `m = 0` and `q` is the integer gcd of
/// the constant terms.
///
/// The Bezout coefficients start from a ℚ[x] identity `αF + βG = 1` and are
/// moved along `(G, -F)` by a rational `τ` so that their constant terms
/// become the integer pair `(u₀, v₀)` with `u₀F(0) + v₀G(0) = q`.
pub fn xgcd_henriksen(f: &HenriksenElement, g: &HenriksenElement) -> HenriksenGcd {
    if g.is_zero() || f.is_zero() {
        let (other, f_is_other) = if g.is_zero() { (f, true) } else { (g, false) };
        let gcd = other.canonical();
        let sign = if gcd == *other {
            HenriksenElement::one()
        } else {
            HenriksenElement::from_integer(-Integer::one())
        };
        let (u, v) = if other.is_zero() {
            (HenriksenElement::zero(), HenriksenElement::zero())
        } else if f_is_other {
            (sign, HenriksenElement::zero())
        } else {
            (HenriksenElement::zero(), sign)
        };
        return HenriksenGcd { gcd, u, v };
    }

    let (fp, gp) = (f.poly(), g.poly());
    let m = fp.valuation().min(gp.valuation()).expect("nonzero inputs");
    let f_free = fp.shift_down(fp.valuation().unwrap());
    let g_free = gp.shift_down(gp.valuation().unwrap());
    let (h_monic, _, _) = RatPoly::xgcd(&f_free, &g_free);
    let h0 = h_monic.constant_term();
    assert!(!h0.is_zero(), "gcd of x-free parts vanishes at 0");
    let h = h_monic.scale(&h0.recip());

    let base = h.shift_up(m);
    let big_f = fp.div_exact(&base).expect("base divides f");
    let big_g = gp.div_exact(&base).expect("base divides g");
    let (r, s) = (big_f.constant_term(), big_g.constant_term());
    let (q, u0, v0) = rational_pair_gcd(&r, &s).expect("one constant term is nonzero");

    let (one, alpha, beta) = RatPoly::xgcd(&big_f, &big_g);
    debug_assert!(one == RatPoly::one(), "F and G are coprime in Q[x]");

    // (q*alpha(0), q*beta(0)) and (u0, v0) both solve X r + Y s = q, so they
    // differ by a multiple of (s, -r).
    let (qa0, qb0) = (&q * alpha.constant_term(), &q * beta.constant_term());
    let (u0, v0) = (rat_int(u0), rat_int(v0));
    let tau = if !s.is_zero() {
        (&u0 - &qa0) / &s
    } else {
        (&qb0 - &v0) / &r
    };
    let u = &alpha.scale(&q) + &big_g.scale(&tau);
    let v = &beta.scale(&q) - &big_f.scale(&tau);
    debug_assert_eq!(u.constant_term(), u0);
    debug_assert_eq!(v.constant_term(), v0);

    HenriksenGcd {
        gcd: HenriksenElement::from_poly_unchecked(base.scale(&q)),
        u: HenriksenElement::from_poly_unchecked(u),
        v: HenriksenElement::from_poly_unchecked(v),
    }
}

/// Bit-length style bound on strict divisor chains below a Gelfand element:
/// bits of the constant term plus the degree plus two.
pub(crate) fn chain_bound(a: &HenriksenElement) -> usize {
    let bits = a.constant().abs().bits() as usize;
    bits + a.poly().degree().unwrap_or(0) + 2
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::numeric::{parse_poly, rat};
    use proptest::prelude::*;

    fn h(s: &str) -> HenriksenElement {
        HenriksenElement::new(parse_poly(s).unwrap()).unwrap()
    }

    fn check_cert(f: &HenriksenElement, g: &HenriksenElement, c: &HenriksenGcd) {
        let lhs = &(c.u.poly() * f.poly()) + &(c.v.poly() * g.poly());
        assert_eq!(&lhs, c.gcd.poly(), "identity for {f}, {g}");
        assert!(divides_henriksen(&c.gcd, f));
        assert!(divides_henriksen(&c.gcd, g));
        assert_eq!(c.gcd, c.gcd.canonical());
        HenriksenElement::new(c.u.poly().clone()).unwrap();
        HenriksenElement::new(c.v.poly().clone()).unwrap();
    }

    #[test]
    fn validation() {
        assert!(validate_henriksen(parse_poly("1 + 1/2*x").unwrap()).is_ok());
        assert_eq!(
            validate_henriksen(parse_poly("1/2").unwrap()),
            Err(Error::NonIntegerConstant("1/2".into()))
        );
        assert!(validate_henriksen(RatPoly::zero()).is_ok());
    }

    #[test]
    fn xgcd_examples() {
        let c = xgcd_henriksen(&h("x"), &h("1/2*x"));
        assert_eq!(c.gcd, h("1/2*x"));
        assert_eq!((c.u.clone(), c.v.clone()), (h("0"), h("1")));
        check_cert(&h("x"), &h("1/2*x"), &c);

        let c = xgcd_henriksen(&h("4 + x"), &h("6 + x"));
        assert_eq!(c.gcd, h("2"));
        assert_eq!((c.u.clone(), c.v.clone()), (h("-1"), h("1")));

        let c = xgcd_henriksen(&h("x"), &h("2"));
        assert_eq!(c.gcd, h("2"));
        assert_eq!((c.u.clone(), c.v.clone()), (h("0"), h("1")));

        let c = xgcd_henriksen(&h("2 + x"), &h("2"));
        assert_eq!(c.gcd, h("2"));
        check_cert(&h("2 + x"), &h("2"), &c);
    }

    #[test]
    fn xgcd_with_zero() {
        let c = xgcd_henriksen(&h("-2 - x"), &h("0"));
        assert_eq!(c.gcd, h("2 + x"));
        assert_eq!(c.u, h("-1"));
        let c = xgcd_henriksen(&h("0"), &h("0"));
        assert!(c.gcd.is_zero() && c.u.is_zero() && c.v.is_zero());
    }

    #[test]
    fn divisibility_examples() {
        assert!(divides_henriksen(&h("2"), &h("x")));
        assert!(!divides_henriksen(&h("x"), &h("2")));
        assert!(divides_henriksen(&h("1/3*x"), &h("x")));
        assert!(!divides_henriksen(&h("x"), &h("1/2*x")));
        assert!(divides_henriksen(&h("0"), &h("0")));
        assert!(!divides_henriksen(&h("0"), &h("1")));
        for m in (-50i64..=50).filter(|&m| m != 0) {
            assert!(divides_henriksen(
                &HenriksenElement::from_integer(m.into()),
                &h("x")
            ));
        }
    }

    #[test]
    fn gelfand_predicate() {
        assert!(is_gelfand_henriksen(&h("2 + x")));
        assert!(!is_gelfand_henriksen(&h("x")));
        assert!(is_gelfand_henriksen(&h("1")));
        assert!(!is_gelfand_henriksen(&h("0")));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(h("-2 - x").canonical(), h("2 + x"));
        assert_eq!(h("-1/2*x + x^2").canonical(), h("1/2*x - x^2"));
        assert!(!h("1 + 1/2*x").is_unit());
        assert!(h("-1").is_unit());
    }

    pub(crate) fn arb_h(max_deg: usize) -> impl Strategy<Value = HenriksenElement> {
        (
            -20i64..=20,
            prop::collection::vec((-20i64..=20, 1i64..=20), 0..=max_deg),
        )
            .prop_map(|(c0, rest)| {
                let mut cs = vec![rat(c0, 1)];
                cs.extend(rest.into_iter().map(|(n, d)| rat(n, d)));
                HenriksenElement::new(RatPoly::new(cs)).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn closure_under_ring_operations(a in arb_h(4), b in arb_h(4)) {
            prop_assert!(HenriksenElement::new(a.poly() + b.poly()).is_ok());
            prop_assert!(HenriksenElement::new(a.poly() * b.poly()).is_ok());
            prop_assert!(HenriksenElement::new(a.poly() - b.poly()).is_ok());
        }

        #[test]
        fn xgcd_certificates(f in arb_h(4), g in arb_h(4)) {
            let c = xgcd_henriksen(&f, &g);
            check_cert(&f, &g, &c);
            prop_assert_eq!(c.gcd.is_zero(), f.is_zero() && g.is_zero());
        }

        #[test]
        fn gcd_absorbs_common_probes(f in arb_h(3), g in arb_h(3), k in 1i64..12, j in 0usize..3) {
            let c = xgcd_henriksen(&f, &g);
            // integer probes and rational multiples of powers of x
            let probes = [
                HenriksenElement::from_integer(k.into()),
                HenriksenElement::new(RatPoly::monomial(rat(1, k), j.max(1))).unwrap(),
                HenriksenElement::new(RatPoly::monomial(rat(k, 1), j)).unwrap(),
            ];
            for d in probes {
                if divides_henriksen(&d, &f) && divides_henriksen(&d, &g) {
                    prop_assert!(divides_henriksen(&d, &c.gcd), "{} | {}, {} but not {}", d, f, g, c.gcd);
                }
            }
        }
    }
}
