//! Finitely generated abelian groups in invariant-factor form, their subgroups and
//! homomorphisms, and the functors built on them.

mod functors;
mod identities;

pub use functors::{
    connecting_tau, exterior_square, symmetric_square, tau3, tensor, tensor_hom, tor1, ExteriorSquare, SymmetricSquare,
    Tau, Tau3, Tensor, Tor,
};
pub use identities::{
    check_six_term, check_tau3_kernel, check_wedge_kernel, tau3_kernel_formula, IdentityReport, SixTermReport,
    DEFAULT_ENUMERATION_CAP,
};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::coeff::Coeff;
use crate::echelon::Lattice;
use crate::error::{Error, Result};
use crate::smith::smith;

pub(crate) fn ovf<T>(o: Option<T>) -> Result<T> {
    o.ok_or_else(|| Error::Unsupported("integer overflow in abelian group arithmetic".into()))
}

/// `Z/d_1 ⊕ ... ⊕ Z/d_r` with `d_1 | d_2 | ... | d_r`; a factor 0 is a copy of Z.
/// Trivial factors are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAb {
    factors: Vec<i64>,
}

/// An abelian group presented as `Z^t / rows` together with the change of basis to
/// its invariant-factor form.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: FgAb,
    /// `t x r`: old generator `i` has new coordinates `to_new[i]`.
    to_new: Vec<Vec<i64>>,
    /// `r x t`: new basis element `k` in old coordinates.
    from_new: Vec<Vec<i64>>,
}

impl Presentation {
    pub fn old_rank(&self) -> usize {
        self.to_new.len()
    }

    /// Maps old coordinates to reduced new coordinates.
    pub fn to_new(&self, old: &[i64]) -> Vec<i64> {
        let r = self.group.rank();
        let mut out = vec![0i128; r];
        for (x, row) in old.iter().zip(&self.to_new) {
            if *x == 0 {
                continue;
            }
            for k in 0..r {
                out[k] += *x as i128 * row[k] as i128;
                let d = self.group.factors[k] as i128;
                if d > 0 {
                    out[k] = out[k].rem_euclid(d);
                }
            }
        }
        out.into_iter().map(|v| i64::try_from(v).expect("coordinate fits in 64 bits")).collect()
    }

    /// Old coordinates of the `k`-th invariant-factor basis element.
    pub fn from_new_row(&self, k: usize) -> &[i64] {
        &self.from_new[k]
    }

    /// Old coordinates of an element given in new coordinates.
    pub fn lift(&self, new: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.old_rank()];
        for (k, &c) in new.iter().enumerate() {
            for (o, &f) in out.iter_mut().zip(&self.from_new[k]) {
                *o += c * f;
            }
        }
        out
    }
}

fn to_i64(x: &BigInt) -> i64 {
    ToPrimitive::to_i64(x).expect("invariant factor fits in 64 bits")
}

/// Builds a lattice from rows, retrying with big integers on overflow.
fn relation_basis(relations: &[Vec<i64>], rank: usize) -> Vec<Vec<BigInt>> {
    let mut small = Lattice::<i64>::free(rank);
    let ok = small.extend(relations.iter().cloned()).and_then(|_| small.canonicalize());
    if ok.is_some() {
        return small.basis().iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    }
    let mut big = Lattice::<BigInt>::free(rank);
    big.extend(relations.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()))
        .expect("big integers do not overflow");
    big.canonicalize().expect("big integers do not overflow");
    big.basis()
}

impl FgAb {
    /// Accepts an invariant-factor list; ones are dropped.
    pub fn new(factors: Vec<i64>) -> Result<Self> {
        let f: Vec<i64> = factors.into_iter().filter(|&d| d != 1).collect();
        if f.iter().any(|&d| d < 0) {
            return Err(Error::Parse("invariant factors must be non-negative".into()));
        }
        for w in f.windows(2) {
            if w[1] != 0 && (w[0] == 0 || w[1] % w[0] != 0) {
                return Err(Error::Parse(format!("{} does not divide {}", w[0], w[1])));
            }
        }
        Ok(FgAb { factors: f })
    }

    pub fn trivial() -> Self {
        FgAb { factors: Vec::new() }
    }

    pub fn cyclic(n: i64) -> Self {
        Self::new(vec![n]).expect("one factor is a chain")
    }

    /// `⊕ Z/n_i` for an arbitrary list of cyclic orders.
    pub fn from_cyclic_orders(orders: &[i64]) -> Self {
        let rels: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let mut r = vec![0; orders.len()];
                r[i] = n;
                r
            })
            .collect();
        Self::from_presentation(&rels, orders.len()).group
    }

    /// `Z^rank / span(relations)` in invariant-factor form.
    pub fn from_presentation(relations: &[Vec<i64>], rank: usize) -> Presentation {
        let basis = relation_basis(relations, rank);
        let s = smith(&basis, rank);
        let keep: Vec<usize> = (0..rank).filter(|&k| !s.diag[k].is_one()).collect();
        let factors: Vec<i64> = keep.iter().map(|&k| to_i64(&s.diag[k])).collect();
        let group = FgAb { factors: factors.clone() };
        let to_new = (0..rank)
            .map(|i| {
                keep.iter()
                    .zip(&factors)
                    .map(|(&k, &d)| {
                        let x = &s.v[i][k];
                        to_i64(&if d > 0 { x.mod_floor_big(d) } else { x.clone() })
                    })
                    .collect()
            })
            .collect();
        // Shorten lifts by reducing them against the relation lattice.
        let mut rel = Lattice::<BigInt>::free(rank);
        rel.extend(basis.iter().cloned()).expect("big integers do not overflow");
        rel.canonicalize().expect("big integers do not overflow");
        let from_new = keep
            .iter()
            .map(|&k| {
                let mut row = s.v_inv[k].clone();
                rel.reduce(&mut row).expect("big integers do not overflow");
                row.iter().map(to_i64).collect()
            })
            .collect();
        Presentation { group, to_new, from_new }
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|&d| d > 0)
    }

    pub fn order(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &d| if d > 0 { acc.checked_mul(d as u64) } else { None })
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }

    pub fn unit(&self, i: usize) -> Vec<i64> {
        let mut v = self.zero();
        v[i] = 1;
        self.reduce(&mut v);
        v
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (x, &d) in v.iter_mut().zip(&self.factors) {
            if d > 0 {
                *x = x.rem_euclid(d);
            }
        }
    }

    pub fn is_zero(&self, v: &[i64]) -> bool {
        v.iter().zip(&self.factors).all(|(&x, &d)| if d > 0 { x.rem_euclid(d) == 0 } else { x == 0 })
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x.checked_add(*y).expect("overflow")).collect();
        self.reduce(&mut v);
        v
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().map(|x| -x).collect();
        self.reduce(&mut v);
        v
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: i64, a: &[i64]) -> Vec<i64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| {
                let p = k as i128 * x as i128;
                let p = if d > 0 { p.rem_euclid(d as i128) } else { p };
                i64::try_from(p).expect("overflow")
            })
            .collect()
    }

    /// Order of an element; `None` for elements of infinite order.
    pub fn element_order(&self, a: &[i64]) -> Option<u64> {
        let mut o = 1u64;
        for (&x, &d) in a.iter().zip(&self.factors) {
            if d == 0 {
                if x != 0 {
                    return None;
                }
                continue;
            }
            let x = x.rem_euclid(d);
            let oi = (d / num_integer::gcd(x, d)) as u64;
            o = num_integer::lcm(o, oi);
        }
        Some(o)
    }

    /// All elements in mixed-radix order (first coordinate fastest).
    pub fn elements(&self, cap: usize) -> Result<Vec<Vec<i64>>> {
        let order = self.order().ok_or_else(|| Error::Infinite(format!("group with factors {:?}", self.factors)))?;
        if order > cap as u64 {
            return Err(Error::Cap(format!("group of order {order} exceeds enumeration cap {cap}")));
        }
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = self.zero();
        for _ in 0..order {
            out.push(cur.clone());
            for (x, &d) in cur.iter_mut().zip(&self.factors) {
                *x += 1;
                if *x < d {
                    break;
                }
                *x = 0;
            }
        }
        Ok(out)
    }

    /// Mixed-radix index of a reduced element of a finite group.
    pub fn index_of(&self, a: &[i64]) -> usize {
        let mut idx = 0usize;
        for (&x, &d) in a.iter().zip(&self.factors).rev() {
            idx = idx * d as usize + x.rem_euclid(d) as usize;
        }
        idx
    }

    pub(crate) fn lattice(&self) -> Lattice<i64> {
        Lattice::new(self.factors.clone())
    }

    pub fn whole(&self) -> AbSubgroup {
        let gens: Vec<Vec<i64>> = (0..self.rank()).map(|i| self.unit(i)).collect();
        AbSubgroup::from_gens(self, &gens).expect("unit vectors do not overflow")
    }

    pub fn zero_subgroup(&self) -> AbSubgroup {
        AbSubgroup { lattice: self.lattice(), ambient: self.clone() }
    }

    /// `A_(m) = {a : m a = 0}`; all of `A` for `m = 0`.
    pub fn torsion_of(&self, m: i64) -> AbSubgroup {
        if m == 0 {
            return self.whole();
        }
        let gens: Vec<Vec<i64>> = self
            .factors
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, &d)| {
                let mut v = self.zero();
                v[i] = d / num_integer::gcd(d, m);
                v
            })
            .collect();
        AbSubgroup::from_gens(self, &gens).expect("small generators")
    }

    /// `kA`.
    pub fn multiples(&self, k: i64) -> AbSubgroup {
        let gens: Vec<Vec<i64>> = (0..self.rank()).map(|i| self.scale(k, &self.unit(i))).collect();
        AbSubgroup::from_gens(self, &gens).expect("small generators")
    }
}

trait ModFloorBig {
    fn mod_floor_big(&self, d: i64) -> BigInt;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, d: i64) -> BigInt {
        num_integer::Integer::mod_floor(self, &BigInt::from(d))
    }
}

impl std::fmt::Display for FgAb {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.factors.iter().map(|&d| if d == 0 { "Z".to_string() } else { format!("Z/{d}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A subgroup of an [`FgAb`], stored as a canonical lattice in its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbSubgroup {
    ambient: FgAb,
    lattice: Lattice<i64>,
}

impl AbSubgroup {
    pub fn from_gens(ambient: &FgAb, gens: &[Vec<i64>]) -> Result<Self> {
        let mut lattice = ambient.lattice();
        for g in gens {
            if g.len() != ambient.rank() {
                return Err(Error::Mismatch("generator length differs from the ambient rank".into()));
            }
            ovf(lattice.insert(g.clone()))?;
        }
        ovf(lattice.canonicalize())?;
        Ok(AbSubgroup { ambient: ambient.clone(), lattice })
    }

    pub fn ambient(&self) -> &FgAb {
        &self.ambient
    }

    /// Generators of the subgroup (canonical rows).
    pub fn gens(&self) -> Vec<Vec<i64>> {
        self.lattice.rows().cloned().collect()
    }

    pub fn contains(&self, a: &[i64]) -> bool {
        self.lattice.contains(a).expect("reduction of reduced coordinates")
    }

    pub fn is_subgroup_of(&self, other: &AbSubgroup) -> bool {
        self.gens().iter().all(|g| other.contains(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.lattice.is_zero()
    }

    pub fn join(&self, other: &AbSubgroup) -> AbSubgroup {
        let mut gens = self.gens();
        gens.extend(other.gens());
        AbSubgroup::from_gens(&self.ambient, &gens).expect("small generators")
    }

    pub fn intersect(&self, other: &AbSubgroup) -> Result<AbSubgroup> {
        let n = self.ambient.rank();
        let mut moduli = self.ambient.factors.clone();
        moduli.extend(self.ambient.factors.iter().copied());
        let mut lat = Lattice::new(moduli);
        for g in self.gens() {
            let mut row = g.clone();
            row.extend(g);
            ovf(lat.insert(row))?;
        }
        for g in other.gens() {
            let mut row = g;
            row.extend(vec![0; n]);
            ovf(lat.insert(row))?;
        }
        let gens: Vec<Vec<i64>> =
            lat.rows().filter(|r| r[..n].iter().all(|&x| x == 0)).map(|r| r[n..].to_vec()).collect();
        AbSubgroup::from_gens(&self.ambient, &gens)
    }

    /// `|A / B|`, or `None` when infinite.
    pub fn index(&self) -> Option<u64> {
        let mut idx = 1u64;
        for c in 0..self.ambient.rank() {
            let p = match self.lattice.row_at(c) {
                Some(r) => r[c],
                None => self.ambient.factors[c],
            };
            if p == 0 {
                return None;
            }
            idx = idx.checked_mul(p as u64)?;
        }
        Some(idx)
    }

    /// `|B|` for a finite ambient group.
    pub fn order(&self) -> Option<u64> {
        Some(self.ambient.order()? / self.index()?)
    }

    /// `A / B` with the projection from ambient coordinates.
    pub fn quotient(&self) -> Presentation {
        let rows: Vec<Vec<i64>> = self.lattice.basis();
        FgAb::from_presentation(&rows, self.ambient.rank())
    }

    /// The subgroup as an abelian group in its own invariant-factor basis.
    pub fn as_group(&self) -> Result<Embedded> {
        let n = self.ambient.rank();
        let gens = self.gens();
        let s = gens.len();
        let mut moduli = self.ambient.factors.clone();
        moduli.extend(vec![0; s]);
        let mut solver = Lattice::new(moduli);
        for (i, g) in gens.iter().enumerate() {
            let mut row = g.clone();
            row.extend((0..s).map(|j| i64::from(i == j)));
            ovf(solver.insert(row))?;
        }
        ovf(solver.canonicalize())?;
        let relations: Vec<Vec<i64>> =
            solver.rows().filter(|r| r[..n].iter().all(|&x| x == 0)).map(|r| r[n..].to_vec()).collect();
        let pres = FgAb::from_presentation(&relations, s);
        let images: Vec<Vec<i64>> = (0..pres.group.rank())
            .map(|k| {
                let old = pres.from_new_row(k);
                let mut v = self.ambient.zero();
                for (c, g) in old.iter().zip(&gens) {
                    for j in 0..n {
                        v[j] += c * g[j];
                    }
                }
                self.ambient.reduce(&mut v);
                v
            })
            .collect();
        let inclusion = AbHom::new(pres.group.clone(), self.ambient.clone(), images)?;
        Ok(Embedded { subgroup: self.clone(), pres, solver, inclusion, n })
    }
}

/// A subgroup `B ⊆ A` viewed as a group, with its inclusion and coordinate solver.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub subgroup: AbSubgroup,
    pub pres: Presentation,
    solver: Lattice<i64>,
    pub inclusion: AbHom,
    n: usize,
}

impl Embedded {
    pub fn group(&self) -> &FgAb {
        &self.pres.group
    }

    /// Coordinates in the subgroup's own basis of an ambient element, if it lies in `B`.
    pub fn coords_of(&self, a: &[i64]) -> Option<Vec<i64>> {
        let mut v = a.to_vec();
        v.extend(vec![0; self.solver.ncols() - self.n]);
        self.solver.reduce(&mut v)?;
        if v[..self.n].iter().any(|&x| x != 0) {
            return None;
        }
        let x: Vec<i64> = v[self.n..].iter().map(|t| -t).collect();
        Some(self.pres.to_new(&x))
    }
}

/// A homomorphism given by the images of the invariant-factor basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    pub domain: FgAb,
    pub codomain: FgAb,
    matrix: Vec<Vec<i64>>,
}

impl AbHom {
    /// Checks that every basis relation `d_i e_i = 0` maps to zero.
    pub fn new(domain: FgAb, codomain: FgAb, images: Vec<Vec<i64>>) -> Result<Self> {
        if images.len() != domain.rank() || images.iter().any(|r| r.len() != codomain.rank()) {
            return Err(Error::Mismatch("image matrix has the wrong shape".into()));
        }
        let mut matrix = images;
        for (i, row) in matrix.iter_mut().enumerate() {
            codomain.reduce(row);
            let d = domain.factors[i];
            if !codomain.is_zero(&codomain.scale(d, row)) {
                return Err(Error::IllDefined(format!(
                    "basis element of order {d} maps to an element of order {:?}",
                    codomain.element_order(row)
                )));
            }
        }
        Ok(AbHom { domain, codomain, matrix })
    }

    pub fn zero(domain: FgAb, codomain: FgAb) -> Self {
        let matrix = vec![codomain.zero(); domain.rank()];
        AbHom { domain, codomain, matrix }
    }

    pub fn identity(a: &FgAb) -> Self {
        let matrix = (0..a.rank()).map(|i| a.unit(i)).collect();
        AbHom { domain: a.clone(), codomain: a.clone(), matrix }
    }

    /// The projection `A -> A/B` from a quotient presentation whose old coordinates are
    /// those of `A`.
    pub fn projection(a: &FgAb, pres: &Presentation) -> Self {
        let matrix = (0..a.rank()).map(|i| pres.to_new(&a.unit(i))).collect();
        AbHom { domain: a.clone(), codomain: pres.group.clone(), matrix }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let r = self.codomain.rank();
        let mut out = vec![0i128; r];
        for (c, row) in x.iter().zip(&self.matrix) {
            if *c == 0 {
                continue;
            }
            for k in 0..r {
                out[k] += *c as i128 * row[k] as i128;
                let d = self.codomain.factors[k] as i128;
                if d > 0 {
                    out[k] = out[k].rem_euclid(d);
                }
            }
        }
        out.into_iter().map(|v| i64::try_from(v).expect("overflow")).collect()
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &AbHom) -> Result<AbHom> {
        if self.codomain != then.domain {
            return Err(Error::Mismatch("composition of incompatible maps".into()));
        }
        let matrix = self.matrix.iter().map(|r| then.apply(r)).collect();
        Ok(AbHom { domain: self.domain.clone(), codomain: then.codomain.clone(), matrix })
    }

    pub fn kernel(&self) -> Result<AbSubgroup> {
        self.preimage(&self.codomain.zero_subgroup())
    }

    pub fn image(&self) -> AbSubgroup {
        AbSubgroup::from_gens(&self.codomain, &self.matrix).expect("reduced images")
    }

    /// `f^-1(S)` for a subgroup `S` of the codomain.
    pub fn preimage(&self, s: &AbSubgroup) -> Result<AbSubgroup> {
        let nc = self.codomain.rank();
        let nd = self.domain.rank();
        let mut moduli = self.codomain.factors.clone();
        moduli.extend(self.domain.factors.iter().copied());
        let mut lat = Lattice::new(moduli);
        for (i, row) in self.matrix.iter().enumerate() {
            let mut v = row.clone();
            v.extend((0..nd).map(|j| i64::from(i == j)));
            ovf(lat.insert(v))?;
        }
        for g in s.gens() {
            let mut v = g;
            v.extend(vec![0; nd]);
            ovf(lat.insert(v))?;
        }
        let gens: Vec<Vec<i64>> =
            lat.rows().filter(|r| r[..nc].iter().all(|&x| x == 0)).map(|r| r[nc..].to_vec()).collect();
        AbSubgroup::from_gens(&self.domain, &gens)
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.is_trivial())
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.codomain.whole()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|r| self.codomain.is_zero(r))
    }

    /// Image of a subgroup.
    pub fn image_of(&self, s: &AbSubgroup) -> AbSubgroup {
        let gens: Vec<Vec<i64>> = s.gens().iter().map(|g| self.apply(g)).collect();
        AbSubgroup::from_gens(&self.codomain, &gens).expect("reduced images")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn presentations() {
        let p = FgAb::from_presentation(&[], 2);
        assert_eq!(p.group.factors(), &[0, 0]);
        let p = FgAb::from_presentation(&[vec![2, 0], vec![0, 4]], 2);
        assert_eq!(p.group.factors(), &[2, 4]);
        let p = FgAb::from_presentation(&[vec![2, 2], vec![0, 4]], 2);
        assert_eq!(p.group.factors(), &[2, 4]);
        assert_eq!(FgAb::from_cyclic_orders(&[4, 6]).factors(), &[2, 12]);
        assert_eq!(FgAb::from_cyclic_orders(&[2, 3]).factors(), &[6]);
        assert!(FgAb::new(vec![4, 2]).is_err());
        assert_eq!(FgAb::new(vec![1, 2, 0]).unwrap().factors(), &[2, 0]);
    }

    #[test]
    fn snf_is_idempotent() {
        for orders in [vec![2, 4, 8], vec![3, 9], vec![6, 10, 15], vec![0, 4]] {
            let a = FgAb::from_cyclic_orders(&orders);
            let again = FgAb::from_cyclic_orders(a.factors());
            assert_eq!(a, again);
        }
    }

    #[test]
    fn subgroup_embedding_coordinates() {
        let a = FgAb::new(vec![2, 4]).unwrap();
        let b = AbSubgroup::from_gens(&a, &[vec![1, 2]]).unwrap();
        assert_eq!(b.order(), Some(2));
        let e = b.as_group().unwrap();
        assert_eq!(e.group().factors(), &[2]);
        let c = e.coords_of(&[1, 2]).unwrap();
        assert_eq!(e.inclusion.apply(&c), vec![1, 2]);
        assert!(e.coords_of(&[1, 0]).is_none());
    }

    #[test]
    fn hom_well_definedness() {
        let z4 = FgAb::cyclic(4);
        let z2 = FgAb::cyclic(2);
        assert!(AbHom::new(z4.clone(), z2.clone(), vec![vec![1]]).is_ok());
        assert!(matches!(AbHom::new(z2, z4, vec![vec![1]]), Err(Error::IllDefined(_))));
    }

    fn arb_group() -> impl Strategy<Value = FgAb> {
        proptest::collection::vec(1i64..7, 1..4).prop_map(|o| FgAb::from_cyclic_orders(&o))
    }

    proptest! {
        #[test]
        fn kernel_and_image_by_enumeration(a in arb_group(), b in arb_group(), seed in proptest::collection::vec(0i64..100, 16)) {
            // A random homomorphism: images scaled so relations map to zero.
            let images: Vec<Vec<i64>> = (0..a.rank()).map(|i| {
                let d = a.factors()[i];
                (0..b.rank()).map(|k| {
                    let e = b.factors()[k];
                    let step = e / num_integer::gcd(d, e);
                    step * seed[(i * 4 + k) % 16]
                }).collect()
            }).collect();
            let f = AbHom::new(a.clone(), b.clone(), images).unwrap();
            let ker = f.kernel().unwrap();
            let im = f.image();
            let elems = a.elements(10_000).unwrap();
            let mut image_set = std::collections::BTreeSet::new();
            let mut kernel_count = 0u64;
            for x in &elems {
                let y = f.apply(x);
                prop_assert!(im.contains(&y));
                prop_assert_eq!(ker.contains(x), b.is_zero(&y));
                kernel_count += u64::from(b.is_zero(&y));
                image_set.insert(y);
            }
            prop_assert_eq!(ker.order(), Some(kernel_count));
            prop_assert_eq!(im.order(), Some(image_set.len() as u64));
        }

        #[test]
        fn intersection_by_enumeration(a in arb_group(), g1 in proptest::collection::vec(0i64..12, 3), g2 in proptest::collection::vec(0i64..12, 3)) {
            let r = a.rank();
            let mut x = g1[..r].to_vec(); a.reduce(&mut x);
            let mut y = g2[..r].to_vec(); a.reduce(&mut y);
            let s1 = AbSubgroup::from_gens(&a, &[x]).unwrap();
            let s2 = AbSubgroup::from_gens(&a, &[y]).unwrap();
            let both = s1.intersect(&s2).unwrap();
            for e in a.elements(10_000).unwrap() {
                prop_assert_eq!(both.contains(&e), s1.contains(&e) && s2.contains(&e));
            }
        }

        #[test]
        fn quotient_order(a in arb_group(), g in proptest::collection::vec(0i64..12, 3)) {
            let mut x = g[..a.rank()].to_vec();
            a.reduce(&mut x);
            let s = AbSubgroup::from_gens(&a, &[x.clone()]).unwrap();
            let q = s.quotient();
            prop_assert_eq!(q.group.order().unwrap() * s.order().unwrap(), a.order().unwrap());
            prop_assert!(q.group.is_zero(&q.to_new(&x)));
            let pi = AbHom::projection(&a, &q);
            prop_assert_eq!(pi.kernel().unwrap(), s);
        }
    }
}
