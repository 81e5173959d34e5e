//! Incremental echelon forms for integer lattices with optional column moduli.
//!
//! A [`Lattice`] represents `L = span(rows) + sum_j m_j Z e_j`, where `m_j` is the
//! modulus of column `j` (zero for none). With all moduli zero the canonical form is
//! the Hermite normal form over Z; with every modulus equal to `m` it is the Howell
//! form over Z/m; mixed moduli describe subgroups of a finitely generated abelian
//! group in invariant-factor coordinates.
//!
//! Row operations are unimodular, and every new pivot row `r` at a modular column `c`
//! is followed by inserting `(m_c / r_c) r` (which vanishes at `c`). That saturation
//! step keeps the explicit rows together with the modulus vectors of unpivoted columns
//! an echelon basis of `L`, which is what makes reduction-based membership exact and the
//! reduced form unique.

use crate::coeff::Coeff;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice<T> {
    moduli: Vec<T>,
    /// `rows[c]` has its first nonzero entry at column `c`.
    rows: Vec<Option<Vec<T>>>,
    reduced: bool,
}

impl<T: Coeff> Lattice<T> {
    pub fn new(moduli: Vec<T>) -> Self {
        let n = moduli.len();
        Lattice { moduli, rows: vec![None; n], reduced: true }
    }

    pub fn free(ncols: usize) -> Self {
        Self::new(vec![T::zero(); ncols])
    }

    pub fn ncols(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[T] {
        &self.moduli
    }

    fn reduce_entry(&self, v: &mut [T], c: usize) {
        if !self.moduli[c].is_zero() {
            v[c] = v[c].rem_euclid(&self.moduli[c]);
        }
    }

    fn reduce_all(&self, v: &mut [T]) {
        for c in 0..v.len() {
            self.reduce_entry(v, c);
        }
    }

    /// `v -= q * row`, touching columns from `start` on.
    fn axpy(&self, v: &mut [T], q: &T, row: &[T], start: usize) -> Option<()> {
        for c in start..v.len() {
            if !row[c].is_zero() {
                v[c] = v[c].sub(&q.mul(&row[c])?)?;
                self.reduce_entry(v, c);
            }
        }
        Some(())
    }

    /// Adds a vector to the generating set. Returns `None` on coefficient overflow, in
    /// which case the lattice is left in an unspecified state.
    pub fn insert(&mut self, v: Vec<T>) -> Option<()> {
        debug_assert_eq!(v.len(), self.ncols());
        let mut stack = vec![v];
        while let Some(mut v) = stack.pop() {
            self.reduce_all(&mut v);
            let mut c = 0;
            while c < v.len() {
                if v[c].is_zero() {
                    c += 1;
                    continue;
                }
                self.reduced = false;
                match self.rows[c].take() {
                    Some(mut r) => {
                        let q = v[c].div_floor(&r[c])?;
                        if !q.is_zero() {
                            self.axpy(&mut v, &q, &r, c)?;
                        }
                        if v[c].is_zero() {
                            self.rows[c] = Some(r);
                            c += 1;
                            continue;
                        }
                        // Unimodular combination: r' = s r + t v has pivot gcd, and
                        // v' = (r_c/g) v - (v_c/g) r vanishes at c.
                        let (g, s, t) = T::ext_gcd(&r[c], &v[c])?;
                        let rc = r[c].clone();
                        let vc = v[c].clone();
                        let a = rc.div_floor(&g)?;
                        let b = vc.div_floor(&g)?;
                        let mut new_r = Vec::with_capacity(v.len());
                        let mut new_v = Vec::with_capacity(v.len());
                        for j in 0..v.len() {
                            if j < c {
                                new_r.push(T::zero());
                                new_v.push(T::zero());
                                continue;
                            }
                            new_r.push(s.mul(&r[j])?.add(&t.mul(&v[j])?)?);
                            new_v.push(a.mul(&v[j])?.sub(&b.mul(&r[j])?)?);
                        }
                        self.reduce_all(&mut new_r);
                        self.reduce_all(&mut new_v);
                        debug_assert!(new_v[c].is_zero());
                        if !self.moduli[c].is_zero() {
                            stack.push(self.saturation(&new_r, c)?);
                        }
                        r = new_r;
                        v = new_v;
                        self.rows[c] = Some(r);
                        c += 1;
                    }
                    None => {
                        let m = self.moduli[c].clone();
                        if m.is_zero() {
                            if v[c].is_negative() {
                                for x in v.iter_mut().skip(c) {
                                    *x = x.neg()?;
                                }
                            }
                        } else {
                            // Replace v by s v + t m e_c so the pivot divides m.
                            let (g, s, _t) = T::ext_gcd(&v[c], &m)?;
                            let mut r = Vec::with_capacity(v.len());
                            for (j, x) in v.iter().enumerate() {
                                r.push(if j == c { g.clone() } else { s.mul(x)? });
                            }
                            self.reduce_all(&mut r);
                            r[c] = g;
                            stack.push(self.saturation(&v, c)?);
                            v = r;
                        }
                        self.rows[c] = Some(v);
                        break;
                    }
                }
            }
        }
        Some(())
    }

    /// `(m_c / gcd(v_c, m_c)) v` with the now-zero column `c` cleared.
    fn saturation(&self, v: &[T], c: usize) -> Option<Vec<T>> {
        let m = &self.moduli[c];
        let (g, _, _) = T::ext_gcd(&v[c], m)?;
        let k = m.div_floor(&g)?;
        let mut out = Vec::with_capacity(v.len());
        for (j, x) in v.iter().enumerate() {
            out.push(if j <= c { T::zero() } else { k.mul(x)? });
        }
        self.reduce_all(&mut out);
        Some(out)
    }

    pub fn extend<I: IntoIterator<Item = Vec<T>>>(&mut self, it: I) -> Option<()> {
        for v in it {
            self.insert(v)?;
        }
        Some(())
    }

    /// Brings the explicit rows into the unique reduced form.
    pub fn canonicalize(&mut self) -> Option<()> {
        if self.reduced {
            return Some(());
        }
        let n = self.ncols();
        for c in 0..n {
            let Some(pivot_row) = self.rows[c].clone() else { continue };
            let p = pivot_row[c].clone();
            for i in 0..c {
                let Some(row) = self.rows[i].as_mut() else { continue };
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&p)?;
                if !q.is_zero() {
                    for j in c..n {
                        if !pivot_row[j].is_zero() {
                            row[j] = row[j].sub(&q.mul(&pivot_row[j])?)?;
                            if !self.moduli[j].is_zero() {
                                row[j] = row[j].rem_euclid(&self.moduli[j]);
                            }
                        }
                    }
                }
            }
        }
        self.reduced = true;
        Some(())
    }

    pub fn is_canonical(&self) -> bool {
        self.reduced
    }

    /// Reduces `v` against the rows; the result is zero iff `v` lies in the lattice.
    pub fn reduce(&self, v: &mut [T]) -> Option<()> {
        self.reduce_all(v);
        for c in 0..v.len() {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = &self.rows[c] {
                let q = v[c].div_floor(&r[c])?;
                if !q.is_zero() {
                    self.axpy(v, &q, r, c)?;
                }
            }
        }
        Some(())
    }

    pub fn contains(&self, v: &[T]) -> Option<bool> {
        let mut w = v.to_vec();
        self.reduce(&mut w)?;
        Some(w.iter().all(T::is_zero))
    }

    /// Explicit rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &Vec<T>> {
        self.rows.iter().flatten()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols()).filter(|&c| self.rows[c].is_some()).collect()
    }

    pub fn row_at(&self, c: usize) -> Option<&Vec<T>> {
        self.rows[c].as_ref()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.iter().flatten().count()
    }

    /// A Z-basis of the lattice in echelon order: explicit rows plus `m_c e_c` for
    /// modular columns without an explicit pivot.
    pub fn basis(&self) -> Vec<Vec<T>> {
        let n = self.ncols();
        let mut out = Vec::new();
        for c in 0..n {
            if let Some(r) = &self.rows[c] {
                out.push(r.clone());
            } else if !self.moduli[c].is_zero() {
                let mut e = vec![T::zero(); n];
                e[c] = self.moduli[c].clone();
                out.push(e);
            }
        }
        out
    }

    /// Integer coordinates of `w` in [`Self::basis`], or `Some(None)` if `w` is not in
    /// the lattice. The entries of `w` are taken literally (not reduced).
    pub fn coordinates(&self, w: &[T]) -> Option<Option<Vec<T>>> {
        let n = self.ncols();
        let mut w = w.to_vec();
        let mut coords = Vec::new();
        for c in 0..n {
            let (pivot, row) = match &self.rows[c] {
                Some(r) => (r[c].clone(), Some(r)),
                None if !self.moduli[c].is_zero() => (self.moduli[c].clone(), None),
                None => {
                    if !w[c].is_zero() {
                        return Some(None);
                    }
                    continue;
                }
            };
            if !w[c].rem_euclid(&pivot).is_zero() {
                return Some(None);
            }
            let q = w[c].div_floor(&pivot)?;
            match row {
                Some(r) => {
                    for j in c..n {
                        if !r[j].is_zero() {
                            w[j] = w[j].sub(&q.mul(&r[j])?)?;
                        }
                    }
                }
                None => w[c] = T::zero(),
            }
            coords.push(q);
        }
        Some(Some(coords))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Option::is_none)
    }

    pub fn contains_lattice(&self, other: &Lattice<T>) -> Option<bool> {
        for r in other.basis() {
            if !self.contains(&r)? {
                return Some(false);
            }
        }
        Some(true)
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Lattice<U> {
        Lattice {
            moduli: self.moduli.iter().map(&f).collect(),
            rows: self.rows.iter().map(|r| r.as_ref().map(|r| r.iter().map(&f).collect())).collect(),
            reduced: self.reduced,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn lat(moduli: Vec<i64>, rows: Vec<Vec<i64>>) -> Lattice<i64> {
        let mut l = Lattice::new(moduli);
        l.extend(rows).unwrap();
        l.canonicalize().unwrap();
        l
    }

    #[test]
    fn howell_saturation() {
        let l = lat(vec![4, 4], vec![vec![2, 1]]);
        assert_eq!(l.rows().cloned().collect::<Vec<_>>(), vec![vec![2, 1], vec![0, 2]]);
        let l = lat(vec![4, 4], vec![vec![2, 0], vec![0, 0]]);
        assert_eq!(l.rows().cloned().collect::<Vec<_>>(), vec![vec![2, 0]]);
        let id = lat(vec![0, 0], vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(id.rows().cloned().collect::<Vec<_>>(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn hermite_form_over_z() {
        let l = lat(vec![0, 0, 0], vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        assert_eq!(l.rows().cloned().collect::<Vec<_>>(), vec![vec![2, 0, 120], vec![0, 2, 20], vec![0, 0, 156]]);
        assert!(l.contains(&[0, 0, 312]).unwrap());
        assert!(!l.contains(&[0, 0, 78]).unwrap());
    }

    /// Exhaustive Z/m membership over the full residue space.
    fn brute_span(m: i64, n: usize, rows: &[Vec<i64>]) -> std::collections::BTreeSet<Vec<i64>> {
        let mut set = std::collections::BTreeSet::from([vec![0; n]]);
        loop {
            let mut grew = false;
            let current: Vec<_> = set.iter().cloned().collect();
            for v in &current {
                for r in rows {
                    let w: Vec<i64> = v.iter().zip(r).map(|(a, b)| (a + b).rem_euclid(m)).collect();
                    grew |= set.insert(w);
                }
            }
            if !grew {
                return set;
            }
        }
    }

    proptest! {
        #[test]
        fn modular_membership_matches_enumeration(
            m in 2i64..9,
            rows in proptest::collection::vec(proptest::collection::vec(0i64..9, 3), 0..4),
        ) {
            let l = lat(vec![m; 3], rows.clone());
            let span = brute_span(m, 3, &rows);
            for a in 0..m { for b in 0..m { for c in 0..m {
                let v = [a, b, c];
                prop_assert_eq!(l.contains(&v).unwrap(), span.contains(v.as_slice()));
            }}}
        }

        #[test]
        fn canonical_form_is_order_independent(
            rows in proptest::collection::vec(proptest::collection::vec(-6i64..7, 4), 1..5),
            m in prop_oneof![Just(0i64), 2i64..13],
        ) {
            let a = lat(vec![m; 4], rows.clone());
            let mut rev = rows.clone();
            rev.reverse();
            // add a redundant combination as well
            let combo: Vec<i64> = rows[0].iter().zip(rows.last().unwrap()).map(|(x, y)| 3 * x - y).collect();
            rev.push(combo);
            let b = lat(vec![m; 4], rev);
            prop_assert_eq!(a.rows().collect::<Vec<_>>(), b.rows().collect::<Vec<_>>());
        }

        #[test]
        fn coordinates_reconstruct(
            rows in proptest::collection::vec(proptest::collection::vec(-5i64..6, 3), 1..4),
            coeffs in proptest::collection::vec(-3i64..4, 4),
        ) {
            let l = lat(vec![0, 5, 0], rows.clone());
            let mut w = vec![0i64; 3];
            for (r, k) in rows.iter().zip(&coeffs) {
                for j in 0..3 { w[j] += k * r[j]; }
            }
            let coords = l.coordinates(&w).unwrap().expect("combination is a member");
            let basis = l.basis();
            let mut back = vec![0i64; 3];
            for (b, k) in basis.iter().zip(&coords) {
                for j in 0..3 { back[j] += k * b[j]; }
            }
            prop_assert_eq!(back, w);
        }
    }

    #[test]
    fn bigint_matches_small() {
        let rows = vec![vec![3, 5, 7], vec![2, -4, 6], vec![9, 9, 1]];
        let small = lat(vec![0; 3], rows.clone());
        let mut big = Lattice::<BigInt>::free(3);
        big.extend(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect())).unwrap();
        big.canonicalize().unwrap();
        assert_eq!(small.map_coeffs(|x| BigInt::from(*x)), big);
    }
}
