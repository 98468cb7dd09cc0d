//! Diagonal reduction of `[[a, 0], [b, c]]` with `aR + bR + cR = R` over a
//! Bezout domain of Gelfand range 1.
//!
//! 1. `ax + by + cz = 1`, so `b` and `ax + cz` are coprime.
//! 2. Shift: `d = b + (ax + cz)t` is Gelfand, and
//!    `[[1,0],[xt,1]] · A · [[1,0],[zt,1]] = [[a,0],[d,c]]`.
//! 3. Factor `d = rs` with `rR + aR = R`, `sR + cR = R`.
//! 4. `sp + ck = 1`, `q = rk`, `δ = gcd(p, q)`, `p = p1 δ`, `q = q1 δ`. Then
//!    `dp + cq = r`, and `a p1` is coprime to `d p1 + c q1`.
//! 5. Kaplansky: a unimodular column `(p1, q1)` and a Bezout row `(u, v)` for
//!    `(a p1, d p1 + c q1)` put a 1 in the corner; one column operation
//!    finishes the diagonal.

use crate::error::{Error, Result};
use crate::gelfand::{gelfand_factor, gelfand_shift};
use crate::matrix::{block_det, block_to_matrix, Block, MatrixR, SnfCertificate};
use crate::ring::{coprime, gcd_many, is_unit, normalizing_unit, same_ring, xgcd, RingElement};

/// Every intermediate value of the 2×2 reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub a: RingElement,
    pub b: RingElement,
    pub c: RingElement,
    pub x: RingElement,
    pub y: RingElement,
    pub z: RingElement,
    pub t: RingElement,
    pub d: RingElement,
    pub r: RingElement,
    pub s: RingElement,
    pub p: RingElement,
    pub k: RingElement,
    pub q: RingElement,
    pub delta: RingElement,
    pub p1: RingElement,
    pub q1: RingElement,
    pub u: RingElement,
    pub v: RingElement,
}

impl ReductionTrace {
    /// Checks the seven defining identities; returns the names of the ones
    /// that fail.
    pub fn failed_identities(&self) -> Vec<&'static str> {
        let one = RingElement::one(self.a.ring());
        let mut failed = Vec::new();
        let mut check = |ok: bool, name| {
            if !ok {
                failed.push(name)
            }
        };
        let axcz = &(&self.a * &self.x) + &(&self.c * &self.z);
        check(&axcz + &(&self.b * &self.y) == one, "ax + by + cz = 1");
        check(self.d == &self.b + &(&axcz * &self.t), "d = b + (ax + cz)t");
        check(self.d == &self.r * &self.s, "d = rs");
        check(
            &(&self.s * &self.p) + &(&self.c * &self.k) == one,
            "sp + ck = 1",
        );
        check(self.q == &self.r * &self.k, "q = rk");
        let delta_ok = xgcd(&self.p, &self.q).is_ok_and(|g| g.g == self.delta)
            && self.p == &self.p1 * &self.delta
            && self.q == &self.q1 * &self.delta;
        check(delta_ok, "delta = gcd(p, q), p = p1 delta, q = q1 delta");
        let e = &self.a * &self.p1;
        let f = &(&self.d * &self.p1) + &(&self.c * &self.q1);
        check(
            &(&e * &self.u) + &(&f * &self.v) == one,
            "(a p1)u + (d p1 + c q1)v = 1",
        );
        failed
    }

    pub fn verify(&self) -> bool {
        self.failed_identities().is_empty()
    }
}

/// 2×2 matrix with first row `(p, q)` and determinant 1.
pub fn complete_unimodular(p: &RingElement, q: &RingElement) -> Result<MatrixR> {
    let ring = same_ring(p, q)?;
    let cert = xgcd(p, q)?;
    if !cert.g.is_one() {
        return Err(Error::NotCoprime);
    }
    let block: Block = [[p.clone(), q.clone()], [-&cert.v, cert.u]];
    debug_assert!(block_det(&block).is_one());
    Ok(block_to_matrix(ring, &block))
}

/// Intermediates of the Kaplansky row construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaplanskyRow {
    pub p: RingElement,
    pub k: RingElement,
    pub q: RingElement,
    pub delta: RingElement,
    pub p1: RingElement,
    pub q1: RingElement,
    pub u: RingElement,
    pub v: RingElement,
}

/// Finds coprime `(p1, q1)` with `a p1` coprime to `d p1 + c q1`, and the
/// Bezout pair `(u, v)` witnessing it.
pub fn kaplansky_pq(
    a: &RingElement,
    d: &RingElement,
    c: &RingElement,
    r: &RingElement,
    s: &RingElement,
) -> Result<KaplanskyRow> {
    for e in [d, c, r, s] {
        same_ring(a, e)?;
    }
    let pre = |msg: &str| Err(Error::Precondition(msg.into()));
    if *d != r * s {
        return pre("d != r*s");
    }
    if !coprime(r, a)? {
        return pre("r and a are not coprime");
    }
    if !coprime(s, c)? {
        return pre("s and c are not coprime");
    }
    if !is_unit(&gcd_many(&[a.clone(), d.clone(), c.clone()])?.0) {
        return pre("a, d, c do not generate the unit ideal");
    }

    let sc = xgcd(s, c)?;
    debug_assert!(sc.g.is_one());
    let (p, k) = (sc.u, sc.v);
    let q = r * &k;
    let pq = xgcd(&p, &q)?;
    let (delta, p1, q1) = (pq.g, pq.a1, pq.b1);

    let e = a * &p1;
    let f = &(d * &p1) + &(c * &q1);
    let row = xgcd(&e, &f)?;
    if !row.g.is_one() {
        return Err(Error::Certification(format!(
            "a*p1 = {e} and d*p1 + c*q1 = {f} generate {}, not 1",
            row.g
        )));
    }
    Ok(KaplanskyRow {
        p,
        k,
        q,
        delta,
        p1,
        q1,
        u: row.u,
        v: row.v,
    })
}

/// Diagonal reduction of `[[a, 0], [b, c]]` when `gcd(a, b, c)` is a unit.
///
/// The result is `diag(1, e)` with `e` canonical and associate to `ac`.
pub fn reduce_triangular_2x2(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
) -> Result<(SnfCertificate, ReductionTrace)> {
    let ring = same_ring(a, b)?;
    same_ring(a, c)?;
    let zero = RingElement::zero(ring);
    let one = RingElement::one(ring);
    let input = MatrixR::from_rows(
        ring,
        vec![vec![a.clone(), zero.clone()], vec![b.clone(), c.clone()]],
    )?;

    let (g, coeffs) = gcd_many(&[a.clone(), b.clone(), c.clone()]).map_err(Error::at("bezout"))?;
    if !g.is_one() {
        return Err(Error::Precondition(format!(
            "a, b, c generate {g}, not the unit ideal"
        )));
    }
    let [x, y, z]: [RingElement; 3] = coeffs.try_into().expect("three coefficients");

    let axcz = &(a * &x) + &(c * &z);
    let shift = gelfand_shift(b, &axcz).map_err(Error::at("gelfand shift"))?;
    let (t, d) = (shift.t, shift.d);
    let fac = gelfand_factor(&d, a, c).map_err(Error::at("gelfand factorization"))?;
    let row = kaplansky_pq(a, &d, c, &fac.r, &fac.s).map_err(Error::at("kaplansky row"))?;

    let left_shift: Block = [[one.clone(), zero.clone()], [&x * &t, one.clone()]];
    let right_shift: Block = [[one.clone(), zero.clone()], [&z * &t, one.clone()]];

    // Q0 has first column (p1, q1).
    let completion = complete_unimodular(&row.p1, &row.q1).map_err(Error::at("completion"))?;
    let q0 = completion.transpose();
    let e = a * &row.p1;
    let f = &(&d * &row.p1) + &(c * &row.q1);
    let p0: Block = [[row.u.clone(), row.v.clone()], [-&f, e.clone()]];
    if !block_det(&p0).is_one() {
        return Err(Error::Certification(
            "Kaplansky row block is not unimodular".into(),
        ));
    }

    let mut p = block_to_matrix(ring, &p0).mul(&block_to_matrix(ring, &left_shift))?;
    let mut q = block_to_matrix(ring, &right_shift).mul(&q0)?;
    let mut w = p.mul(&input)?.mul(&q)?;
    if !w.get(0, 0).is_one() || !w.get(1, 0).is_zero() {
        return Err(Error::Certification(format!(
            "unexpected corner after Kaplansky step:\n{w}"
        )));
    }
    let clear: Block = [[one.clone(), -w.get(0, 1)], [zero.clone(), one.clone()]];
    q.apply_cols(0, 1, &clear);
    w.apply_cols(0, 1, &clear);
    let unit = normalizing_unit(w.get(1, 1));
    p.scale_row(1, &unit);
    w.scale_row(1, &unit);

    let trace = ReductionTrace {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        x,
        y,
        z,
        t,
        d,
        r: fac.r,
        s: fac.s,
        p: row.p,
        k: row.k,
        q: row.q,
        delta: row.delta,
        p1: row.p1,
        q1: row.q1,
        u: row.u,
        v: row.v,
    };
    let failed = trace.failed_identities();
    if !failed.is_empty() {
        return Err(Error::Certification(format!(
            "trace identities failed: {failed:?}"
        )));
    }
    let cert = SnfCertificate::checked(&input, p, w, q, vec![trace.clone()])?;
    Ok((cert, trace))
}
