//! Textbook Smith normal form over ℤ by Euclidean division, kept separate from
//! the certified driver so the two can be compared.

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::numeric::Integer;

/// Invariant factors of an integer matrix, nonnegative, padded with zeros to
/// `min(rows, cols)`.
pub fn euclidean_snf(rows: &[Vec<Integer>]) -> Vec<Integer> {
    let mut a: Vec<Vec<Integer>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        loop {
            let pivot = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let Some((pi, pj)) = pivot else {
                diag.resize(m.min(n), Integer::zero());
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t].clone();
            let pivot_row = a[t].clone();
            let mut clean = true;
            for row in a.iter_mut().skip(t + 1) {
                let q = row[t].div_floor(&p);
                for (x, y) in row[t..].iter_mut().zip(&pivot_row[t..]) {
                    *x -= y * &q;
                }
                clean &= row[t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    let src = a[i].clone();
                    for (x, y) in a[t][t..].iter_mut().zip(&src[t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}
