//! Smith normal form with both column transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `U A V = D` with `D` diagonal, `d_1 | d_2 | ...`, all `d_i >= 0`. Only `V` and its
/// inverse are kept: they are what element transport between bases needs.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<BigInt>,
    /// `cols x cols`.
    pub v: Vec<Vec<BigInt>>,
    /// `cols x cols`, the inverse of `v`.
    pub v_inv: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

struct Work {
    a: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    /// row_i -= k row_j
    fn row_axpy(&mut self, i: usize, j: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        let (ri, rj) = pair_mut(&mut self.a, i, j);
        for (x, y) in ri.iter_mut().zip(rj.iter()) {
            *x -= k * y;
        }
    }

    /// col_i -= k col_j (so V <- V E, V^-1 <- E^-1 V^-1 with row_j += k row_i)
    fn col_axpy(&mut self, i: usize, j: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let y = row[j].clone();
            row[i] -= k * y;
        }
        let (rj, ri) = pair_mut(&mut self.v_inv, j, i);
        for (x, y) in rj.iter_mut().zip(ri.iter()) {
            *x += k * y;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -x.clone();
        }
    }
}

fn pair_mut<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &mut T) {
    assert_ne!(i, j);
    if i < j {
        let (a, b) = v.split_at_mut(j);
        (&mut a[i], &mut b[0])
    } else {
        let (a, b) = v.split_at_mut(i);
        (&mut b[0], &mut a[j])
    }
}

pub fn smith(a: &[Vec<BigInt>], cols: usize) -> Smith {
    let rows = a.len();
    let mut w = Work { a: a.to_vec(), v: identity(cols), v_inv: identity(cols) };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !w.a[i][j].is_zero() && best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        if pi != t {
            w.swap_rows(pi, t);
        }
        if pj != t {
            w.swap_cols(pj, t);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if !w.a[i][t].is_zero() {
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.row_axpy(i, t, &q);
                clean &= w.a[i][t].is_zero();
            }
        }
        for j in t + 1..cols {
            if !w.a[t][j].is_zero() {
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.col_axpy(j, t, &q);
                clean &= w.a[t][j].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // Enforce divisibility into the remaining block.
        let p = w.a[t][t].clone();
        let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&p)));
        if let Some(i) = offender {
            w.row_axpy(t, i, &BigInt::from(-1));
            continue;
        }
        if p.is_negative() {
            w.negate_row(t);
        }
        diag.push(w.a[t][t].clone());
        t += 1;
    }
    while diag.len() < cols {
        diag.push(BigInt::zero());
    }
    Smith { diag, v: w.v, v_inv: w.v_inv }
}
