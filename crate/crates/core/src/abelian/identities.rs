//! Checkers for the two abelian-group identities used by the third-term formulas, and
//! for exactness of the tensored short exact sequence.

use serde::Serialize;

use super::functors::{connecting_tau, exterior_square, tau3, tensor, tensor_hom};
use super::{AbHom, AbSubgroup, FgAb};
use crate::error::{Error, Result};

/// Default bound on `|A|` for the enumeration-based checks.
pub const DEFAULT_ENUMERATION_CAP: usize = 4096;

/// Outcome of comparing two subgroups computed in different ways.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub holds: bool,
    pub lhs_order: Option<u64>,
    pub rhs_order: Option<u64>,
    /// Generators of one side missing from the other.
    pub witnesses: Vec<String>,
}

impl IdentityReport {
    fn compare(lhs: &AbSubgroup, rhs: &AbSubgroup) -> Self {
        let mut witnesses = Vec::new();
        for g in lhs.gens().into_iter().filter(|g| !rhs.contains(g)) {
            witnesses.push(format!("{g:?} only on the left"));
        }
        for g in rhs.gens().into_iter().filter(|g| !lhs.contains(g)) {
            witnesses.push(format!("{g:?} only on the right"));
        }
        IdentityReport { holds: lhs == rhs, lhs_order: lhs.order(), rhs_order: rhs.order(), witnesses }
    }
}

fn feasible(a: &FgAb, cap: usize) -> Result<()> {
    let order = a.order().ok_or_else(|| Error::Infinite(format!("{a}")))?;
    if order > cap as u64 {
        return Err(Error::Cap(format!("|A| = {order} exceeds {cap}")));
    }
    Ok(())
}

/// Compares `Ker((q ⊗ id) ℓ)` with `ν (q ⊗ id)^{-1} Im(τ)` inside `A ∧ A`.
pub fn check_wedge_kernel(a: &FgAb, b: &AbSubgroup, cap: usize) -> Result<IdentityReport> {
    feasible(a, cap)?;
    let tau = connecting_tau(a, b)?;
    let q = AbHom::projection(a, &tau.quotient);
    let id_a = AbHom::identity(a);
    let ext = exterior_square(a)?;

    let t_qa = tensor(&q.codomain, a);
    let q_aa = tensor_hom(&q, &id_a, &ext.tensor, &t_qa)?;
    let lhs = ext.ell.then(&q_aa)?.kernel()?;

    let bg = tau.sub.group().clone();
    let t_ab = tensor(a, &bg);
    let q_ab = tensor_hom(&q, &AbHom::identity(&bg), &t_ab, &tau.tensor)?;
    let nu_ab = tensor_hom(&id_a, &tau.sub.inclusion, &t_ab, &ext.tensor)?.then(&ext.nu)?;
    let rhs = nu_ab.image_of(&q_ab.preimage(&tau.hom.image())?);

    let mut report = IdentityReport::compare(&lhs, &rhs);
    if !ext.ell.is_injective()? {
        report.holds = false;
        report.witnesses.push("ℓ is not injective".into());
    }
    Ok(report)
}

/// Compares the kernel of `τ₃`, found by enumeration, with `A_(m)` for odd `m` and
/// `(A_(m) ∩ 2A) + A_(m/2)` for even `m`.
pub fn check_tau3_kernel(a: &FgAb, m: i64, cap: usize) -> Result<IdentityReport> {
    feasible(a, cap)?;
    let kernel = tau3(a, m)?.kernel(cap)?;
    let formula = tau3_kernel_formula(a, m)?;
    Ok(IdentityReport::compare(&kernel, &formula))
}

/// The closed-form side of the `τ₃` kernel identity.
pub fn tau3_kernel_formula(a: &FgAb, m: i64) -> Result<AbSubgroup> {
    if m % 2 == 1 {
        Ok(a.torsion_of(m))
    } else {
        Ok(a.torsion_of(m).intersect(&a.multiples(2))?.join(&a.torsion_of(m / 2)))
    }
}

/// Exactness of `Tor(A/B, A/B) → (A/B) ⊗ B → (A/B) ⊗ A → (A/B) ⊗ (A/B) → 0`.
#[derive(Clone, Debug, Serialize)]
pub struct SixTermReport {
    pub at_quotient_tensor_sub: bool,
    pub at_quotient_tensor_ambient: bool,
    pub surjective: bool,
}

impl SixTermReport {
    pub fn holds(&self) -> bool {
        self.at_quotient_tensor_sub && self.at_quotient_tensor_ambient && self.surjective
    }
}

pub fn check_six_term(a: &FgAb, b: &AbSubgroup) -> Result<SixTermReport> {
    let tau = connecting_tau(a, b)?;
    let qg = tau.quotient.group.clone();
    let q = AbHom::projection(a, &tau.quotient);
    let id_q = AbHom::identity(&qg);
    let t_qa = tensor(&qg, a);
    let t_qq = tensor(&qg, &qg);
    let id_j = tensor_hom(&id_q, &tau.sub.inclusion, &tau.tensor, &t_qa)?;
    let id_q2 = tensor_hom(&id_q, &q, &t_qa, &t_qq)?;
    Ok(SixTermReport {
        at_quotient_tensor_sub: tau.hom.image() == id_j.kernel()?,
        at_quotient_tensor_ambient: id_j.image() == id_q2.kernel()?,
        surjective: id_q2.is_surjective(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(orders: &[i64]) -> FgAb {
        FgAb::from_cyclic_orders(orders)
    }

    #[test]
    fn wedge_kernel_examples() {
        let a = z(&[2, 4]);
        let full = check_wedge_kernel(&a, &a.whole(), DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(full.holds);
        let zero = check_wedge_kernel(&a, &a.zero_subgroup(), DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(zero.holds);
        assert_eq!(zero.lhs_order, Some(1));
        let c4 = z(&[4]);
        assert!(check_wedge_kernel(&c4, &c4.multiples(2), DEFAULT_ENUMERATION_CAP).unwrap().holds);
    }

    #[test]
    fn tau3_kernel_examples() {
        let r = check_tau3_kernel(&z(&[3]), 3, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(r.holds && r.lhs_order == Some(3));
        let r = check_tau3_kernel(&z(&[2]), 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(r.holds && r.lhs_order == Some(1));
        let r = check_tau3_kernel(&z(&[4]), 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(r.holds && r.lhs_order == Some(2));
    }

    #[test]
    fn caps_and_infinite_groups_are_rejected() {
        let big = z(&[64, 128]);
        assert!(matches!(check_tau3_kernel(&big, 2, 4096), Err(Error::Cap(_))));
        let inf = FgAb::new(vec![2, 0]).unwrap();
        assert!(matches!(check_tau3_kernel(&inf, 2, 4096), Err(Error::Infinite(_))));
    }

    /// All finite abelian groups of order at most 64, as invariant-factor chains.
    fn small_groups() -> Vec<FgAb> {
        fn extend(chain: &mut Vec<i64>, order: i64, out: &mut Vec<FgAb>) {
            out.push(FgAb::new(chain.clone()).unwrap());
            let last = chain.last().copied().unwrap_or(1);
            let mut d = if chain.is_empty() { 2 } else { last };
            while order * d <= 64 {
                chain.push(d);
                extend(chain, order * d, out);
                chain.pop();
                d += last;
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::new(), 1, &mut out);
        out
    }

    #[test]
    fn tau3_kernel_exhaustive() {
        for a in small_groups() {
            for m in 0..=12 {
                let r = check_tau3_kernel(&a, m, DEFAULT_ENUMERATION_CAP).unwrap();
                assert!(r.holds, "{a} m={m}: {:?}", r.witnesses);
            }
        }
    }

    proptest! {
        #[test]
        fn wedge_kernel_and_exactness(orders in proptest::collection::vec(1i64..9, 1..3), g in proptest::collection::vec(0i64..8, 4)) {
            let a = z(&orders);
            let r = a.rank();
            let mut x = g[..r].to_vec();
            let mut y = g[2..2 + r].to_vec();
            a.reduce(&mut x);
            a.reduce(&mut y);
            let b = AbSubgroup::from_gens(&a, &[x, y]).unwrap();
            let rep = check_wedge_kernel(&a, &b, DEFAULT_ENUMERATION_CAP).unwrap();
            prop_assert!(rep.holds, "{:?}", rep.witnesses);
            prop_assert!(check_six_term(&a, &b).unwrap().holds());
        }
    }
}
