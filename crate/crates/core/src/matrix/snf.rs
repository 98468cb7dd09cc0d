//! Smith normal form with unimodular transforms.
//!
//! Elimination brings the matrix to diagonal form using 2×2 Bezout blocks.
//! Adjacent diagonal entries that violate the divisibility chain are then
//! repaired one pair at a time: `diag(gα, gβ)` with `α, β` coprime is
//! rewritten as `g·[[α, 0], [β, β]]` and handed to the Gelfand-range-1
//! reduction, which returns `diag(g, g·αβ)` up to units.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gelfand::chain_length_bound;
use crate::matrix::{det, reduce_triangular_2x2, Block, MatrixR, ReductionTrace};
use crate::ring::{
    canonical, divides, exact_div, is_unit, normalizing_unit, xgcd, RingElement, RingId,
};

/// Outcome of the five checks on an SNF certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfChecks {
    pub product_ok: bool,
    pub diagonal_ok: bool,
    pub chain_ok: bool,
    #[serde(rename = "detP_unit")]
    pub det_p_unit: bool,
    #[serde(rename = "detQ_unit")]
    pub det_q_unit: bool,
}

impl SnfChecks {
    pub fn all(&self) -> bool {
        self.product_ok && self.diagonal_ok && self.chain_ok && self.det_p_unit && self.det_q_unit
    }
}

/// `P·A·Q = D` with `P`, `Q` invertible and `D` canonical diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfCertificate {
    pub ring: RingId,
    pub p: MatrixR,
    pub d: MatrixR,
    pub q: MatrixR,
    pub input_hash: String,
    pub checks: SnfChecks,
    pub traces: Vec<ReductionTrace>,
}

impl SnfCertificate {
    /// Builds a certificate for `a` and fails unless every check passes.
    pub(crate) fn checked(
        a: &MatrixR,
        p: MatrixR,
        d: MatrixR,
        q: MatrixR,
        traces: Vec<ReductionTrace>,
    ) -> Result<Self> {
        let mut cert = SnfCertificate {
            ring: a.ring(),
            p,
            d,
            q,
            input_hash: a.digest(),
            checks: SnfChecks {
                product_ok: false,
                diagonal_ok: false,
                chain_ok: false,
                det_p_unit: false,
                det_q_unit: false,
            },
            traces,
        };
        cert.checks = verify_snf(a, &cert)?;
        if !cert.checks.all() {
            return Err(Error::Certification(format!(
                "SNF certificate failed its checks: {:?}",
                cert.checks
            )));
        }
        Ok(cert)
    }
}

/// Re-checks a certificate against `a` from scratch.
///
/// Ring disagreements are errors; wrong shapes simply make the affected
/// checks false.
pub fn verify_snf(a: &MatrixR, cert: &SnfCertificate) -> Result<SnfChecks> {
    for m in [&cert.p, &cert.d, &cert.q] {
        if m.ring() != a.ring() {
            return Err(Error::RingMismatch(a.ring(), m.ring()));
        }
    }
    if cert.ring != a.ring() {
        return Err(Error::RingMismatch(a.ring(), cert.ring));
    }
    let (m, n) = a.shape();
    let shapes_ok =
        cert.p.shape() == (m, m) && cert.q.shape() == (n, n) && cert.d.shape() == (m, n);

    let product_ok = shapes_ok && cert.p.mul(a)?.mul(&cert.q)? == cert.d;
    let diag = cert.d.diagonal();
    let diagonal_ok = cert.d.is_diagonal() && diag.iter().all(|e| canonical(e) == *e);
    let mut chain_ok = true;
    for w in diag.windows(2) {
        chain_ok &= divides(&w[0], &w[1])?;
    }
    let unit_det = |p: &MatrixR| p.is_square() && det(p).is_ok_and(|d| is_unit(&d));
    Ok(SnfChecks {
        product_ok,
        diagonal_ok,
        chain_ok,
        det_p_unit: unit_det(&cert.p),
        det_q_unit: unit_det(&cert.q),
    })
}

/// Working state: `p · input · q = w` holds throughout.
struct Reducer {
    w: MatrixR,
    p: MatrixR,
    q: MatrixR,
    traces: Vec<ReductionTrace>,
}

impl Reducer {
    fn rows(&mut self, i: usize, j: usize, b: &Block) {
        self.w.apply_rows(i, j, b);
        self.p.apply_rows(i, j, b);
    }

    fn cols(&mut self, i: usize, j: usize, b: &Block) {
        self.w.apply_cols(i, j, b);
        self.q.apply_cols(i, j, b);
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            let s = swap_block(self.w.ring());
            self.rows(i, j, &s);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            let s = swap_block(self.w.ring());
            self.cols(i, j, &s);
        }
    }

    /// Nonzero entry of the trailing submatrix from `k` with the smallest size.
    fn pick_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let (m, n) = self.w.shape();
        (k..m)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.w.get(i, j).is_zero())
            .min_by_key(|&(i, j)| size(self.w.get(i, j)))
    }

    /// Zeroes `w[i][k]` against the pivot `w[k][k]`.
    fn clear_below(&mut self, k: usize, i: usize) -> Result<()> {
        let ring = self.w.ring();
        let (a, b) = (self.w.get(k, k).clone(), self.w.get(i, k).clone());
        let block = if divides(&a, &b)? {
            let one = RingElement::one(ring);
            [
                [one.clone(), RingElement::zero(ring)],
                [-exact_div(&b, &a)?, one],
            ]
        } else {
            let c = xgcd(&a, &b)?;
            [[c.u, c.v], [-c.b1, c.a1]]
        };
        check_unimodular(&block)?;
        self.rows(k, i, &block);
        Ok(())
    }

    /// Zeroes `w[k][j]` against the pivot `w[k][k]`.
    fn clear_right(&mut self, k: usize, j: usize) -> Result<()> {
        let ring = self.w.ring();
        let (a, b) = (self.w.get(k, k).clone(), self.w.get(k, j).clone());
        let block = if divides(&a, &b)? {
            let one = RingElement::one(ring);
            [
                [one.clone(), -exact_div(&b, &a)?],
                [RingElement::zero(ring), one],
            ]
        } else {
            let c = xgcd(&a, &b)?;
            [[c.u, -c.b1], [c.v, c.a1]]
        };
        check_unimodular(&block)?;
        self.cols(k, j, &block);
        Ok(())
    }

    fn eliminate(&mut self) -> Result<()> {
        let (m, n) = self.w.shape();
        for k in 0..m.min(n) {
            let Some((pi, pj)) = self.pick_pivot(k) else {
                return Ok(());
            };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);
            let bound = m * n + chain_length_bound(self.w.get(k, k)) * (m + n);
            let mut sweeps = 0;
            loop {
                for i in k + 1..m {
                    if !self.w.get(i, k).is_zero() {
                        self.clear_below(k, i)?;
                    }
                }
                for j in k + 1..n {
                    if !self.w.get(k, j).is_zero() {
                        self.clear_right(k, j)?;
                    }
                }
                if (k + 1..m).all(|i| self.w.get(i, k).is_zero()) {
                    break;
                }
                sweeps += 1;
                if sweeps > bound {
                    return Err(Error::SweepBoundExceeded(bound));
                }
            }
        }
        Ok(())
    }

    /// Restores `d_i | d_j` for `i < j`. One pass suffices: once `d_i`
    /// divides `d_j`, later steps only replace `d_i` by a divisor of itself.
    fn repair_chain(&mut self) -> Result<()> {
        let ring = self.w.ring();
        let len = self.w.rows().min(self.w.cols());
        let one = RingElement::one(ring);
        let zero = RingElement::zero(ring);
        for i in 0..len {
            for j in i + 1..len {
                let (di, dj) = (self.w.get(i, i).clone(), self.w.get(j, j).clone());
                if divides(&di, &dj)? {
                    continue;
                }
                let g = xgcd(&di, &dj)?;
                let (a, b) = (g.a1, g.b1);
                let (cert, trace) =
                    reduce_triangular_2x2(&a, &b, &b).map_err(Error::at("diagonal repair"))?;
                // diag(a, b) · [[1, 0], [1, 1]] = [[a, 0], [b, b]]
                let lower: Block = [[one.clone(), zero.clone()], [one.clone(), one.clone()]];
                let right = super::block_to_matrix(ring, &lower).mul(&cert.q)?;
                self.rows(i, j, &to_block(&cert.p));
                self.cols(i, j, &to_block(&right));
                self.traces.push(trace);
                if !self.w.get(i, j).is_zero() || !self.w.get(j, i).is_zero() {
                    return Err(Error::Certification(
                        "diagonal repair left off-diagonal entries".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn canonicalize(&mut self) {
        for i in 0..self.w.rows().min(self.w.cols()) {
            let u = normalizing_unit(self.w.get(i, i));
            if !u.is_one() {
                self.w.scale_row(i, &u);
                self.p.scale_row(i, &u);
            }
        }
    }
}

fn swap_block(ring: RingId) -> Block {
    let (zero, one) = (RingElement::zero(ring), RingElement::one(ring));
    [[zero.clone(), one.clone()], [one, zero]]
}

fn to_block(m: &MatrixR) -> Block {
    [
        [m.get(0, 0).clone(), m.get(0, 1).clone()],
        [m.get(1, 0).clone(), m.get(1, 1).clone()],
    ]
}

fn check_unimodular(b: &Block) -> Result<()> {
    if super::block_det(b).is_one() {
        Ok(())
    } else {
        Err(Error::Certification(
            "elimination block is not unimodular".into(),
        ))
    }
}

/// Pivot preference: smaller is better.
fn size(e: &RingElement) -> (usize, u64) {
    match e {
        RingElement::Integer(n) => (0, n.bits()),
        RingElement::RatPoly(p) => (p.degree().unwrap_or(0), 0),
        RingElement::Henriksen(h) => (
            h.poly().degree().unwrap_or(0),
            if h.constant().is_zero() {
                u64::MAX
            } else {
                h.constant().bits()
            },
        ),
    }
}

/// Computes `D = P·A·Q` in Smith normal form with certified transforms.
pub fn smith_normal_form(a: &MatrixR) -> Result<SnfCertificate> {
    let ring = a.ring();
    let mut st = Reducer {
        w: a.clone(),
        p: MatrixR::identity(ring, a.rows()),
        q: MatrixR::identity(ring, a.cols()),
        traces: Vec::new(),
    };
    st.eliminate()?;
    st.repair_chain()?;
    st.canonicalize();
    SnfCertificate::checked(a, st.p, st.w, st.q, st.traces)
}
