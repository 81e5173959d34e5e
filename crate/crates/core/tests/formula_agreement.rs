//! Closed formulas against group-ring brute force on a handful of small groups, over
//! every subgroup `K` (and `H` for Fox subgroups).

use dimfox_core::formulas::FormulaContext;
use dimfox_core::groupring::{dim_subgroup_brute, fox_subgroup_brute};
use dimfox_core::subgroup::{all_subgroups, commutator_subgroup, join, lower_central_series};
use dimfox_core::{build_group, CoeffRing, FiniteGroup, Subgroup};

const GROUPS: &[&str] = &["dihedral:4", "quaternion:8", "cyclic:2xcyclic:4", "symmetric:3", "cyclic:6"];

fn group(spec: &str) -> FiniteGroup {
    build_group(&spec.parse().unwrap()).unwrap()
}

fn ring(m: u64) -> CoeffRing {
    CoeffRing::from_modulus(m).unwrap()
}

#[test]
fn dim3_matches_brute_force_for_every_subgroup() {
    for spec in GROUPS {
        let g = group(spec);
        let gamma = lower_central_series(&g);
        for k in all_subgroups(&g, 64).unwrap() {
            let k2n3 = join(&g, &[&commutator_subgroup(&g, &k, &k), gamma.term(3)]);
            for m in [0, 2, 3, 4, 6] {
                let ctx = FormulaContext::gamma(&g, k.clone(), ring(m));
                let formula = ctx.dim3().unwrap();
                let brute = dim_subgroup_brute(&g, &k, &gamma, 3, &ring(m)).unwrap();
                let rhs = formula.by_modulus.unwrap();
                assert_eq!(rhs, brute, "{spec} K={:?} m={m}", k.names(&g));
                assert_eq!(formula.by_sigma, brute, "{spec} K={:?} m={m}", k.names(&g));
                assert!(k2n3.is_subgroup_of(&rhs));
                if m == 0 {
                    // No counterexamples below order 64.
                    assert_eq!(brute, k2n3);
                }
            }
        }
    }
}

#[test]
fn fox_subgroups_match_brute_force() {
    for spec in GROUPS {
        let g = group(spec);
        let subs = all_subgroups(&g, 64).unwrap();
        for h in &subs {
            for m in [0, 2, 3, 4] {
                let r = ring(m);
                let ctx =
                    FormulaContext::new(&g, Subgroup::trivial(&g), h.clone(), lower_central_series(&g), r.clone());
                assert_eq!(ctx.fox0(), fox_subgroup_brute(&g, h, &ctx.k, 0, &r, false).unwrap());
                assert_eq!(ctx.fox1().unwrap(), fox_subgroup_brute(&g, h, &ctx.k, 1, &r, false).unwrap());
                for k in &subs {
                    let ctx = FormulaContext { k: k.clone(), ..ctx.clone() };
                    let brute = fox_subgroup_brute(&g, h, k, 2, &r, false).unwrap();
                    let with_prefix = fox_subgroup_brute(&g, h, k, 2, &r, true).unwrap();
                    assert_eq!(brute, with_prefix);
                    let why = format!("{spec} H={:?} K={:?} m={m}", h.names(&g), k.names(&g));
                    assert_eq!(ctx.fox2().unwrap(), brute, "{why}");
                    assert_eq!(ctx.fox2_enumerate(8, false).unwrap(), brute, "{why}");
                    assert!(ctx.fox2_lower_bound().unwrap().is_subgroup_of(&brute), "{why}");
                }
            }
        }
    }
}

#[test]
fn counterexample_of_order_64() {
    let (g, k, z) = dimfox_core::class2_counterexample(2, 1, 1, 1024).unwrap();
    let gamma = lower_central_series(&g);
    let brute = dim_subgroup_brute(&g, &k, &gamma, 3, &ring(0)).unwrap();
    assert!(brute.contains(z));
    assert!(join(&g, &[&commutator_subgroup(&g, &k, &k), gamma.term(3)]).is_trivial());
    let ctx = FormulaContext::gamma(&g, k, ring(0));
    assert_eq!(ctx.dim3().unwrap().by_modulus.unwrap(), brute);
}
