//! The odd-prime counterexample, of order 729. Run with `cargo test -- --ignored`.

use dimfox_core::formulas::FormulaContext;
use dimfox_core::groupring::dim_subgroup_brute_capped;
use dimfox_core::subgroup::{commutator_subgroup, join, lower_central_series};
use dimfox_core::{class2_counterexample, CoeffRing};

#[test]
#[ignore = "order 729; slow"]
fn counterexample_at_p_3() {
    let (g, k, z) = class2_counterexample(3, 1, 1, 1024).unwrap();
    assert_eq!(g.order(), 729);
    assert_eq!(g.element_order(z), 3);
    let gamma = lower_central_series(&g);
    assert!(join(&g, &[&commutator_subgroup(&g, &k, &k), gamma.term(3)]).is_trivial());
    let formula = FormulaContext::gamma(&g, k.clone(), CoeffRing::Integers).dim3().unwrap().by_modulus.unwrap();
    assert!(formula.contains(z));
    let brute = dim_subgroup_brute_capped(&g, &k, &gamma, 3, &CoeffRing::Integers, 729).unwrap();
    assert_eq!(brute, formula);
}
