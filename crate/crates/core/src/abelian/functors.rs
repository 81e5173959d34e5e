//! Tensor products, Tor, exterior and symmetric squares, and the connecting maps.

use super::{AbHom, AbSubgroup, Embedded, FgAb, Presentation};
use crate::error::{Error, Result};

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("coordinate fits in 64 bits")
}

/// `A ⊗ B`, presented on the symbols `e_i ⊗ f_j` with relations `gcd(α_i, β_j)`.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub group: FgAb,
    left: FgAb,
    right: FgAb,
    pres: Presentation,
}

pub fn tensor(a: &FgAb, b: &FgAb) -> Tensor {
    let (ra, rb) = (a.rank(), b.rank());
    let mut rels = Vec::new();
    for i in 0..ra {
        for j in 0..rb {
            let g = gcd(a.factors()[i], b.factors()[j]);
            if g != 0 {
                let mut r = vec![0; ra * rb];
                r[i * rb + j] = g;
                rels.push(r);
            }
        }
    }
    let pres = FgAb::from_presentation(&rels, ra * rb);
    Tensor { group: pres.group.clone(), left: a.clone(), right: b.clone(), pres }
}

impl Tensor {
    pub fn left(&self) -> &FgAb {
        &self.left
    }

    pub fn right(&self) -> &FgAb {
        &self.right
    }

    /// `a ⊗ b`.
    pub fn eval(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let rb = self.right.rank();
        let mut raw = vec![0i64; self.left.rank() * rb];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                let g = gcd(self.left.factors()[i], self.right.factors()[j]);
                let p = x as i128 * y as i128;
                raw[i * rb + j] = narrow(if g > 0 { p.rem_euclid(g as i128) } else { p });
            }
        }
        self.pres.to_new(&raw)
    }

    /// Coefficients of basis element `k` on the symbols `e_i ⊗ f_j`.
    pub fn basis_lift(&self, k: usize) -> Vec<(usize, usize, i64)> {
        let rb = self.right.rank();
        self.pres
            .from_new_row(k)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, &c)| (idx / rb.max(1), idx % rb.max(1), c))
            .collect()
    }
}

/// `f ⊗ g` between two tensor products.
pub fn tensor_hom(f: &AbHom, g: &AbHom, src: &Tensor, dst: &Tensor) -> Result<AbHom> {
    if f.domain != src.left || g.domain != src.right || f.codomain != dst.left || g.codomain != dst.right {
        return Err(Error::Mismatch("tensor product of maps with incompatible ends".into()));
    }
    let images = (0..src.group.rank())
        .map(|k| {
            let mut acc = dst.group.zero();
            for (i, j, c) in src.basis_lift(k) {
                let v = dst.eval(&f.matrix()[i], &g.matrix()[j]);
                acc = dst.group.add(&acc, &dst.group.scale(c, &v));
            }
            acc
        })
        .collect();
    AbHom::new(src.group.clone(), dst.group.clone(), images)
}

/// The swap `a ⊗ b ↦ b ⊗ a` on `A ⊗ A`.
fn swap(t: &Tensor) -> Result<AbHom> {
    let images = (0..t.group.rank())
        .map(|k| {
            let mut acc = t.group.zero();
            for (i, j, c) in t.basis_lift(k) {
                let v = t.eval(&t.left.unit(j), &t.left.unit(i));
                acc = t.group.add(&acc, &t.group.scale(c, &v));
            }
            acc
        })
        .collect();
    AbHom::new(t.group.clone(), t.group.clone(), images)
}

/// `Tor_1(A, B)`, one cyclic summand `Z/gcd(α_i, β_j)` per pair of finite factors.
#[derive(Clone, Debug)]
pub struct Tor {
    pub group: FgAb,
    left: FgAb,
    right: FgAb,
    pairs: Vec<(usize, usize, i64)>,
    pres: Presentation,
}

pub fn tor1(a: &FgAb, b: &FgAb) -> Tor {
    let mut pairs = Vec::new();
    for (i, &x) in a.factors().iter().enumerate() {
        for (j, &y) in b.factors().iter().enumerate() {
            if x > 0 && y > 0 {
                pairs.push((i, j, gcd(x, y)));
            }
        }
    }
    let orders: Vec<i64> = pairs.iter().map(|p| p.2).collect();
    let rels: Vec<Vec<i64>> = orders
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let mut r = vec![0; orders.len()];
            r[i] = n;
            r
        })
        .collect();
    let pres = FgAb::from_presentation(&rels, orders.len());
    Tor { group: pres.group.clone(), left: a.clone(), right: b.clone(), pairs, pres }
}

impl Tor {
    /// One triple `⟨a, k, b⟩` per cyclic summand; together they generate.
    pub fn generator_triples(&self) -> Vec<(Vec<i64>, i64, Vec<i64>)> {
        self.pairs
            .iter()
            .map(|&(i, j, g)| {
                let mut a = self.left.zero();
                a[i] = self.left.factors()[i] / g;
                let mut b = self.right.zero();
                b[j] = self.right.factors()[j] / g;
                (a, g, b)
            })
            .collect()
    }

    /// Coefficients of basis element `k` on the generator triples.
    pub fn basis_lift(&self, k: usize) -> &[i64] {
        self.pres.from_new_row(k)
    }

    /// Class of `⟨a, k, b⟩`; rejects triples with `k a ≠ 0` or `k b ≠ 0`.
    pub fn class(&self, a: &[i64], k: i64, b: &[i64]) -> Result<Vec<i64>> {
        if k <= 0 || !self.left.is_zero(&self.left.scale(k, a)) || !self.right.is_zero(&self.right.scale(k, b)) {
            return Err(Error::InvalidTriple(format!("⟨{a:?}, {k}, {b:?}⟩")));
        }
        // Summand (i, j) is identified with B_j[α_i] via ⟨x, k, y⟩ ↦ (k x / α_i) y.
        let raw: Vec<i64> = self
            .pairs
            .iter()
            .map(|&(i, j, g)| {
                let (alpha, beta) = (self.left.factors()[i] as i128, self.right.factors()[j] as i128);
                let x = (a[i] as i128).rem_euclid(alpha);
                let y = (b[j] as i128).rem_euclid(beta);
                let s = k as i128 * x / alpha;
                let z = (s * y).rem_euclid(beta);
                narrow(z / (beta / g as i128))
            })
            .collect();
        Ok(self.pres.to_new(&raw))
    }
}

/// `A ∧ A` with `ν: A ⊗ A → A ∧ A` and `ℓ: A ∧ A → A ⊗ A`.
#[derive(Clone, Debug)]
pub struct ExteriorSquare {
    pub group: FgAb,
    pub tensor: Tensor,
    pub nu: AbHom,
    pub ell: AbHom,
}

pub fn exterior_square(a: &FgAb) -> Result<ExteriorSquare> {
    let t = tensor(a, a);
    let r = a.rank();
    let mut gens = Vec::new();
    for i in 0..r {
        gens.push(t.eval(&a.unit(i), &a.unit(i)));
        for j in i + 1..r {
            let s = t.group.add(&t.eval(&a.unit(i), &a.unit(j)), &t.eval(&a.unit(j), &a.unit(i)));
            gens.push(s);
        }
    }
    let squares = AbSubgroup::from_gens(&t.group, &gens)?;
    let quot = squares.quotient();
    let nu = AbHom::projection(&t.group, &quot);
    let sw = swap(&t)?;
    let images = (0..quot.group.rank())
        .map(|k| {
            let mut x = quot.lift(&quot.group.unit(k));
            t.group.reduce(&mut x);
            t.group.sub(&x, &sw.apply(&x))
        })
        .collect();
    let ell = AbHom::new(quot.group.clone(), t.group.clone(), images)?;
    Ok(ExteriorSquare { group: quot.group.clone(), tensor: t, nu, ell })
}

impl ExteriorSquare {
    pub fn wedge(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.nu.apply(&self.tensor.eval(a, b))
    }
}

/// `SP²(A) = A ⊗ A / (a ⊗ b − b ⊗ a)`.
#[derive(Clone, Debug)]
pub struct SymmetricSquare {
    pub group: FgAb,
    pub tensor: Tensor,
    pub proj: AbHom,
}

pub fn symmetric_square(a: &FgAb) -> Result<SymmetricSquare> {
    let t = tensor(a, a);
    let sw = swap(&t)?;
    let gens: Vec<Vec<i64>> =
        (0..t.group.rank()).map(|k| t.group.sub(&t.group.unit(k), &sw.apply(&t.group.unit(k)))).collect();
    let quot = AbSubgroup::from_gens(&t.group, &gens)?.quotient();
    let proj = AbHom::projection(&t.group, &quot);
    Ok(SymmetricSquare { group: quot.group, tensor: t, proj })
}

impl SymmetricSquare {
    /// `a ⊗̂ b`.
    pub fn sym(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.proj.apply(&self.tensor.eval(a, b))
    }
}

/// Connecting map `τ: Tor_1(A/B, A/B) → (A/B) ⊗ B` of `0 → B → A → A/B → 0`.
#[derive(Clone, Debug)]
pub struct Tau {
    pub ambient: FgAb,
    pub quotient: Presentation,
    pub sub: Embedded,
    pub tor: Tor,
    pub tensor: Tensor,
    pub hom: AbHom,
}

pub fn connecting_tau(a: &FgAb, b: &AbSubgroup) -> Result<Tau> {
    if b.ambient() != a {
        return Err(Error::NotSubgroup("generators live in a different group".into()));
    }
    let quotient = b.quotient();
    let sub = b.as_group()?;
    let q = &quotient.group;
    let tor = tor1(q, q);
    let tensor = tensor(q, sub.group());
    let mut tau = Tau {
        ambient: a.clone(),
        quotient: quotient.clone(),
        sub,
        tor,
        tensor: tensor.clone(),
        hom: AbHom::zero(FgAb::trivial(), FgAb::trivial()),
    };
    let gens = tau.tor.generator_triples();
    let mut images = Vec::new();
    for k in 0..tau.tor.group.rank() {
        let mut acc = tensor.group.zero();
        for (c, (x, n, y)) in tau.tor.basis_lift(k).iter().zip(&gens) {
            if *c != 0 {
                let v = tau.eval_triple(x, *n, y)?;
                acc = tensor.group.add(&acc, &tensor.group.scale(*c, &v));
            }
        }
        images.push(acc);
    }
    tau.hom = AbHom::new(tau.tor.group.clone(), tensor.group.clone(), images)?;
    Ok(tau)
}

impl Tau {
    /// `⟨ā, k, b̄⟩ ↦ ā ⊗ k b̃` for any lift `b̃` of `b̄`.
    pub fn eval_triple(&self, abar: &[i64], k: i64, bbar: &[i64]) -> Result<Vec<i64>> {
        self.tor.class(abar, k, bbar)?;
        let mut lift = self.quotient.lift(bbar);
        self.ambient.reduce(&mut lift);
        let kb = self.ambient.scale(k, &lift);
        let c = self
            .sub
            .coords_of(&kb)
            .ok_or_else(|| Error::Containment("k times a lift does not land in the subgroup".into()))?;
        Ok(self.tensor.eval(abar, &c))
    }
}

/// `τ₃: A_(m) → Z/m ⊗ SP²(A)`, `a ↦ C(m, 2) (a ⊗̂ a)`, evaluated pointwise.
#[derive(Clone, Debug)]
pub struct Tau3 {
    pub ambient: FgAb,
    pub m: i64,
    pub sym: SymmetricSquare,
    pub target: Presentation,
    pub domain: AbSubgroup,
}

pub fn tau3(a: &FgAb, m: i64) -> Result<Tau3> {
    if m < 0 {
        return Err(Error::Parse("m must be non-negative".into()));
    }
    if m == 0 && !a.is_finite() {
        return Err(Error::Infinite("A_(0) = A is infinite".into()));
    }
    let sym = symmetric_square(a)?;
    let target = sym.group.multiples(m).quotient();
    Ok(Tau3 { ambient: a.clone(), m, target, domain: a.torsion_of(m), sym })
}

impl Tau3 {
    pub fn eval(&self, a: &[i64]) -> Result<Vec<i64>> {
        if !self.ambient.is_zero(&self.ambient.scale(self.m, a)) {
            return Err(Error::Containment(format!("{a:?} is not killed by {}", self.m)));
        }
        let c = self.m * (self.m - 1) / 2;
        let s = self.sym.group.scale(c, &self.sym.sym(a, a));
        Ok(self.target.to_new(&s))
    }

    /// Kernel by enumerating `A_(m)`.
    pub fn kernel(&self, cap: usize) -> Result<AbSubgroup> {
        let emb = self.domain.as_group()?;
        let mut kernel = Vec::new();
        for x in emb.group().elements(cap)? {
            let a = emb.inclusion.apply(&x);
            if self.target.group.is_zero(&self.eval(&a)?) {
                kernel.push(a);
            }
        }
        let sub = AbSubgroup::from_gens(&self.ambient, &kernel)?;
        if sub.order() != Some(kernel.len() as u64) && self.ambient.is_finite() {
            return Err(Error::NotClosed("kernel of τ₃ is not a subgroup".into()));
        }
        Ok(sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(orders: &[i64]) -> FgAb {
        FgAb::from_cyclic_orders(orders)
    }

    #[test]
    fn tensor_examples() {
        assert!(tensor(&z(&[2]), &z(&[3])).group.is_trivial());
        assert_eq!(tensor(&z(&[4]), &z(&[6])).group.factors(), &[2]);
        let a = z(&[2, 12]);
        assert_eq!(tensor(&a, &FgAb::new(vec![0]).unwrap()).group, a);
    }

    #[test]
    fn tor_examples() {
        assert!(tor1(&FgAb::new(vec![0]).unwrap(), &z(&[4, 6])).group.is_trivial());
        assert_eq!(tor1(&z(&[4]), &z(&[6])).group.factors(), &[2]);
    }

    #[test]
    fn tor_rejects_invalid_triples() {
        let t = tor1(&z(&[4]), &z(&[6]));
        assert!(matches!(t.class(&[1], 2, &[3]), Err(Error::InvalidTriple(_))));
        assert_eq!(t.class(&[2], 2, &[3]).unwrap(), vec![1]);
    }

    #[test]
    fn exterior_examples() {
        assert!(exterior_square(&z(&[5])).unwrap().group.is_trivial());
        let e = exterior_square(&z(&[2, 2])).unwrap();
        assert_eq!(e.group.factors(), &[2]);
        assert!(e.ell.is_injective().unwrap());
    }

    #[test]
    fn symmetric_examples() {
        assert_eq!(symmetric_square(&z(&[2])).unwrap().group.factors(), &[2]);
        assert!(symmetric_square(&FgAb::trivial()).unwrap().group.is_trivial());
        assert_eq!(symmetric_square(&z(&[2, 3])).unwrap().group.factors(), &[6]);
    }

    #[test]
    fn tau_examples() {
        let a = z(&[4]);
        assert!(connecting_tau(&a, &a.zero_subgroup()).unwrap().hom.is_zero());
        assert!(connecting_tau(&a, &a.whole()).unwrap().hom.domain.is_trivial());
        let t = connecting_tau(&a, &a.multiples(2)).unwrap();
        assert_eq!(t.hom.domain.factors(), &[2]);
        assert_eq!(t.hom.codomain.factors(), &[2]);
        assert!(!t.hom.is_zero());
    }

    #[test]
    fn tau3_examples() {
        for m in [1, 3, 5, 9] {
            let t = tau3(&z(&[3, 9]), m).unwrap();
            assert_eq!(t.kernel(4096).unwrap(), t.domain);
        }
        let t = tau3(&z(&[2]), 2).unwrap();
        assert!(t.kernel(4096).unwrap().is_trivial());
        let t = tau3(&z(&[2, 4]), 0).unwrap();
        assert_eq!(t.kernel(4096).unwrap(), z(&[2, 4]).whole());
        let t = tau3(&z(&[4]), 2).unwrap();
        assert_eq!(t.kernel(4096).unwrap().gens(), vec![vec![2]]);
    }

    fn arb_finite() -> impl Strategy<Value = FgAb> {
        proptest::collection::vec(1i64..9, 0..3).prop_map(|o| FgAb::from_cyclic_orders(&o))
    }

    fn gcd_product(a: &FgAb, b: &FgAb) -> u64 {
        let mut p = 1u64;
        for &x in a.factors() {
            for &y in b.factors() {
                p *= gcd(x, y) as u64;
            }
        }
        p
    }

    /// Tor(A, B) from the resolution `0 → Z^r → Z^r → A → 0` tensored with `B`:
    /// the kernel of `diag(α) ⊗ id` on `B^r`, counted directly.
    fn tor_order_by_resolution(a: &FgAb, b: &FgAb) -> u64 {
        let elems = b.elements(100_000).unwrap();
        a.factors().iter().map(|&alpha| elems.iter().filter(|y| b.is_zero(&b.scale(alpha, y))).count() as u64).product()
    }

    proptest! {
        #[test]
        fn orders_follow_gcd_rule(a in arb_finite(), b in arb_finite()) {
            prop_assert_eq!(tensor(&a, &b).group.order(), Some(gcd_product(&a, &b)));
            prop_assert_eq!(tor1(&a, &b).group.order(), Some(tor_order_by_resolution(&a, &b)));
            prop_assert_eq!(tor1(&a, &b).group.clone(), tor1(&b, &a).group);
        }

        #[test]
        fn tensor_is_bilinear(a in arb_finite(), x in proptest::collection::vec(0i64..50, 3), y in proptest::collection::vec(0i64..50, 3), w in proptest::collection::vec(0i64..50, 3)) {
            let t = tensor(&a, &a);
            let r = a.rank();
            let (x, y, w) = (x[..r].to_vec(), y[..r].to_vec(), w[..r].to_vec());
            let lhs = t.eval(&a.add(&x, &y), &w);
            let rhs = t.group.add(&t.eval(&x, &w), &t.eval(&y, &w));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ell_nu_identity(a in arb_finite(), x in proptest::collection::vec(0i64..50, 3), y in proptest::collection::vec(0i64..50, 3)) {
            let e = exterior_square(&a).unwrap();
            let r = a.rank();
            let (x, y) = (x[..r].to_vec(), y[..r].to_vec());
            let t = &e.tensor;
            let lhs = e.ell.apply(&e.wedge(&x, &y));
            let rhs = t.group.sub(&t.eval(&x, &y), &t.eval(&y, &x));
            prop_assert_eq!(lhs, rhs);
            prop_assert!(e.ell.is_injective().unwrap());
        }

        #[test]
        fn tau_agrees_on_all_triples(orders in proptest::collection::vec(1i64..9, 1..3), g in proptest::collection::vec(0i64..8, 2), k in 1i64..9) {
            let a = FgAb::from_cyclic_orders(&orders);
            let mut gen = g[..a.rank()].to_vec();
            a.reduce(&mut gen);
            let b = AbSubgroup::from_gens(&a, &[gen]).unwrap();
            let tau = connecting_tau(&a, &b).unwrap();
            let q = &tau.quotient.group;
            let elems = q.elements(4096).unwrap();
            for x in &elems {
                for y in &elems {
                    if let Ok(c) = tau.tor.class(x, k, y) {
                        prop_assert_eq!(tau.hom.apply(&c), tau.eval_triple(x, k, y).unwrap());
                    }
                }
            }
        }
    }
}
