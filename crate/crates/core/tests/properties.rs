use dimfox_core::formulas::FormulaContext;
use dimfox_core::groupring::{dim_subgroup_brute, fox_subgroup_brute, RModuleSpan, RingElem};
use dimfox_core::subgroup::{
    commutator_subgroup, cyclic_subgroups, jennings_series, join, lower_central_series, stretched_series,
};
use dimfox_core::{build_group, CoeffRing, FiniteGroup, NSeries, Subgroup};
use proptest::prelude::*;

const GROUPS: &[&str] = &[
    "cyclic:4",
    "cyclic:6",
    "cyclic:2xcyclic:2",
    "cyclic:2xcyclic:4",
    "symmetric:3",
    "dihedral:4",
    "dihedral:6",
    "quaternion:8",
    "alternating:4",
    "dihedral:4xcyclic:2",
];

fn group(spec: &str) -> FiniteGroup {
    build_group(&spec.parse().unwrap()).unwrap()
}

fn series(g: &FiniteGroup, which: u8) -> NSeries {
    match which {
        0 => lower_central_series(g),
        1 => stretched_series(&lower_central_series(g)),
        _ if g.order().is_multiple_of(2) => jennings_series(g, 2),
        _ => lower_central_series(g),
    }
}

fn ring(m: u64) -> CoeffRing {
    CoeffRing::from_modulus(m).unwrap()
}

fn pick(subs: &[Subgroup], i: usize) -> Subgroup {
    subs[i % subs.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn filtration_is_decreasing(
        spec in prop::sample::select(GROUPS),
        which in 0u8..3,
        n in 1usize..4,
        m in prop::sample::select(vec![0u64, 2, 3, 4]),
    ) {
        let g = group(spec);
        let s = series(&g, which);
        let r = ring(m);
        let hi = RModuleSpan::nseries_ideal_power(&g, &s, n + 1, &r).unwrap();
        let lo = RModuleSpan::nseries_ideal_power(&g, &s, n, &r).unwrap();
        prop_assert!(hi.is_subspan_of(&lo));
        // N_n - 1 lies in the n-th power.
        for a in s.term(n).elements() {
            prop_assert!(lo.contains(&RingElem::minus_one(&g, a)));
        }
    }

    #[test]
    fn slices_of_left_ideals_are_subgroups(
        spec in prop::sample::select(GROUPS),
        seeds in prop::collection::vec((0usize..64, 0usize..64, -3i64..4), 1..4),
        m in prop::sample::select(vec![0u64, 2, 4, 6]),
    ) {
        let g = group(spec);
        let n = g.order();
        let elems: Vec<RingElem> = seeds
            .iter()
            .map(|&(a, b, c)| {
                let mut v = vec![0i64; n];
                v[a % n] += c;
                v[b % n] -= c;
                RingElem::from_i64(&v)
            })
            .collect();
        let ideal = RModuleSpan::from_elems(&g, &ring(m), &elems).unwrap().left_translates(&g);
        prop_assert!(ideal.group_slice(&g).is_ok());
    }

    #[test]
    fn dim3_sits_between_k2n3_and_brute(
        spec in prop::sample::select(GROUPS),
        ki in 0usize..32,
        which in 0u8..3,
        m in prop::sample::select(vec![0u64, 2, 3, 4, 6]),
    ) {
        let g = group(spec);
        let k = pick(&cyclic_subgroups(&g), ki);
        let s = series(&g, which);
        let k2n3 = join(&g, &[&commutator_subgroup(&g, &k, &k), s.term(3)]);
        let ctx = FormulaContext::new(&g, k.clone(), Subgroup::whole(&g), s.clone(), ring(m));
        let formula = ctx.dim3().unwrap().by_modulus.unwrap();
        let brute = dim_subgroup_brute(&g, &k, &s, 3, &ring(m)).unwrap();
        prop_assert!(k2n3.is_subgroup_of(&formula));
        prop_assert!(formula.is_subgroup_of(&brute));
    }

    #[test]
    fn fox2_with_h_whole_is_dim3(
        spec in prop::sample::select(GROUPS),
        ki in 0usize..32,
        m in prop::sample::select(vec![0u64, 2, 3, 4]),
    ) {
        let g = group(spec);
        let normal: Vec<Subgroup> = cyclic_subgroups(&g).into_iter().filter(|k| k.is_normal(&g)).collect();
        let k = pick(&normal, ki);
        let ctx = FormulaContext::gamma(&g, k, ring(m));
        prop_assert_eq!(ctx.fox2().unwrap(), ctx.dim3().unwrap().by_modulus.unwrap());
    }

    #[test]
    fn fox2_is_independent_of_the_generators_of_h(
        spec in prop::sample::select(GROUPS),
        hi in 0usize..32,
        ki in 0usize..32,
        m in prop::sample::select(vec![0u64, 2, 4]),
    ) {
        let g = group(spec);
        let subs = cyclic_subgroups(&g);
        let h = pick(&subs, hi);
        let k = pick(&subs, ki);
        // Same subgroup, generated by every element in reverse order.
        let mut all = h.elements();
        all.reverse();
        let h2 = Subgroup::generated(&g, &all);
        let ctx = FormulaContext::new(&g, k.clone(), h, lower_central_series(&g), ring(m));
        let ctx2 = FormulaContext { h: h2, ..ctx.clone() };
        prop_assert_eq!(ctx.fox2().unwrap(), ctx2.fox2().unwrap());
        prop_assert_eq!(ctx.fox2().unwrap(), fox_subgroup_brute(&g, &ctx.h, &k, 2, &ring(m), false).unwrap());
    }

    #[test]
    fn u_is_monotone_in_the_modulus(
        spec in prop::sample::select(GROUPS),
        ki in 0usize..32,
        m in prop::sample::select(vec![2u64, 3]),
        t in 1u64..4,
    ) {
        let g = group(spec);
        let k = pick(&cyclic_subgroups(&g), ki);
        let ctx = FormulaContext::gamma(&g, k, ring(0));
        let small = ctx.u_subgroup(m * t);
        let big = ctx.u_subgroup(m);
        prop_assert!(small.is_subgroup_of(&big));
        prop_assert!(small.is_normal(&g));
        prop_assert!(ctx.u_subgroup(0).is_subgroup_of(&small));
    }
}
