//! Property-based invariants over randomly chosen small groups, plus
//! randomized spot checks of relation axioms.

use proptest::prelude::*;

use centra::catalog::{parse_construct_spec, read_grp, write_grp};
use centra::centralizer::{centralizer, profile};
use centra::zclass::{z_equivalent, z_partition};
use centra::Group;

fn small_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        (1usize..=12).prop_map(|n| parse_construct_spec(&format!("cyclic:n={n}")).unwrap()),
        (2usize..=8).prop_map(|m| parse_construct_spec(&format!("dihedral:n={}", 2 * m)).unwrap()),
        Just(parse_construct_spec("quaternion8").unwrap()),
        (2usize..=4).prop_map(|k| parse_construct_spec(&format!("symmetric:k={k}")).unwrap()),
        Just(parse_construct_spec("alternating4").unwrap()),
        Just(parse_construct_spec("heisenberg:p=3").unwrap()),
        Just(parse_construct_spec("extraspecial:p=2,a=2,variant=-").unwrap()),
        Just(parse_construct_spec("product:cyclic:n=2*dihedral:n=8").unwrap()),
        Just(parse_construct_spec("product:cyclic:n=3*symmetric:k=3").unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_subgroup_idempotent_and_monotone(g in small_group(), seed in proptest::collection::vec(0usize..24, 0..4)) {
        let seeds: Vec<usize> = seed.into_iter().map(|s| s % g.order()).collect();
        let h = g.generated_subgroup(&seeds);
        prop_assert_eq!(g.generated_subgroup(&h.to_vec()), h.clone());
        let mut extended = seeds.clone();
        extended.push(0);
        prop_assert!(h.is_subset_of(&g.generated_subgroup(&extended)));
    }

    #[test]
    fn normalizer_contains_subgroup(g in small_group(), x in 0usize..24) {
        let h = g.generated_subgroup(&[x % g.order()]);
        let n = g.normalizer(&h);
        prop_assert!(h.is_subset_of(&n));
        prop_assert_eq!(g.is_normal(&h), n.size() == g.order());
    }

    #[test]
    fn commuting_symmetry(g in small_group(), x in 0usize..24, y in 0usize..24) {
        let (x, y) = (x % g.order(), y % g.order());
        prop_assert_eq!(centralizer(&g, x).contains(y), centralizer(&g, y).contains(x));
    }

    #[test]
    fn count_chain(g in small_group()) {
        let p = profile(&g);
        let zp = z_partition(&g, &p);
        let index = g.order() / p.center().size();
        prop_assert!(zp.count() <= p.cent_count);
        prop_assert!(p.cent_count <= index);
    }

    #[test]
    fn conjugacy_refines_zclasses(g in small_group(), x in 0usize..24) {
        let x = x % g.order();
        let p = profile(&g);
        let zp = z_partition(&g, &p);
        let holder = zp.classes.iter().position(|c| c.members.contains(&x)).unwrap();
        for y in g.conjugacy_class_of(x).to_vec() {
            prop_assert!(zp.classes[holder].members.contains(&y));
        }
    }

    #[test]
    fn z_equivalence_is_an_equivalence(g in small_group(), x in 0usize..24, y in 0usize..24, z in 0usize..24) {
        let (x, y, z) = (x % g.order(), y % g.order(), z % g.order());
        prop_assert!(z_equivalent(&g, x, x));
        prop_assert_eq!(z_equivalent(&g, x, y), z_equivalent(&g, y, x));
        if z_equivalent(&g, x, y) && z_equivalent(&g, y, z) {
            prop_assert!(z_equivalent(&g, x, z));
        }
    }

    #[test]
    fn grp_round_trip(g in small_group()) {
        let back = read_grp(&write_grp(&g)).unwrap();
        prop_assert!(g.same_table(&back));
    }

    #[test]
    fn central_coset_stability(g in small_group(), x in 0usize..24) {
        let x = x % g.order();
        for z in g.center().to_vec() {
            prop_assert_eq!(centralizer(&g, g.mul(x, z)), centralizer(&g, x));
        }
    }
}
