//! Randomized invariants: every codec is a bijection, orders agree across
//! representations, and transported operations match their direct forms.

use hfskit::*;
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_nat() -> impl Strategy<Value = Nat> {
    prop::collection::vec(any::<u8>(), 0..32).prop_map(|bytes| BigUint::from_bytes_le(&bytes))
}

fn arb_small_ulimit() -> impl Strategy<Value = Ulimit> {
    (0u64..16).prop_map(Ulimit::from)
}

proptest! {
    #[test]
    fn nat_to_set_roundtrips(n in arb_nat()) {
        prop_assert_eq!(set_to_nat(&nat_to_set(&n)).unwrap(), n);
    }

    #[test]
    fn set_to_nat_roundtrips(elements in prop::collection::btree_set(0u64..128, 0..64)) {
        let set = NatSet::new(elements.iter().copied().map(Nat::from).collect()).unwrap();
        let decoded = nat_to_set(&set_to_nat(&set).unwrap());
        prop_assert_eq!(decoded, set);
    }

    #[test]
    fn set_to_nat_is_monotone_in_inclusion(
        elements in prop::collection::btree_set(0u64..512, 1..32),
        mask in any::<u32>(),
    ) {
        let all: Vec<Nat> = elements.iter().copied().map(Nat::from).collect();
        let subset: Vec<Nat> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 32) & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect();
        prop_assume!(subset.len() < all.len());
        let t = NatSet::new(all).unwrap();
        let s = NatSet::new(subset).unwrap();
        prop_assert!(set_to_nat(&s).unwrap() < set_to_nat(&t).unwrap());
    }

    #[test]
    fn hfs_roundtrips_at_any_small_ulimit(n in any::<u64>(), u in arb_small_ulimit()) {
        let n = Nat::from(n);
        prop_assert_eq!(hfs_to_nat(&nat_to_hfs(&n, &u), &u).unwrap(), n);
    }

    #[test]
    fn printed_form_parses_back(n in any::<u32>(), u in arb_small_ulimit()) {
        let h = nat_to_hfs(&Nat::from(n), &u);
        prop_assert_eq!(parse_hfs(&print_hfs(&h), &u).unwrap(), h);
    }

    #[test]
    fn structural_order_matches_code_order(a in any::<u32>(), b in any::<u32>(), u in arb_small_ulimit()) {
        let ha = nat_to_hfs(&Nat::from(a), &u);
        let hb = nat_to_hfs(&Nat::from(b), &u);
        prop_assert_eq!(ha.cmp(&hb), a.cmp(&b));
    }

    #[test]
    fn hypergraph_roundtrips(n in arb_nat()) {
        prop_assert_eq!(hypergraph_to_nat(&nat_to_hypergraph(&n)).unwrap(), n);
    }

    #[test]
    fn hypergraph_notation_roundtrips(n in any::<u64>()) {
        let hg = nat_to_hypergraph(&Nat::from(n));
        prop_assert_eq!(parse_hypergraph(&hg.to_string()).unwrap(), hg);
    }

    #[test]
    fn cantor_pairs_invert(a in arb_nat(), b in arb_nat()) {
        let z = cantor_pair(&a, &b);
        let p = cantor_unpair(&z);
        prop_assert_eq!((p.first, p.second), (a, b));
    }

    #[test]
    fn cantor_unpairs_invert(z in arb_nat()) {
        let p = cantor_unpair(&z);
        prop_assert_eq!(cantor_pair(&p.first, &p.second), z);
    }

    #[test]
    fn bitmerge_pairs_invert(a in arb_nat(), b in arb_nat()) {
        let z = bitmerge_pair(&a, &b);
        let p = bitmerge_unpair(&z);
        prop_assert_eq!((p.first, p.second), (a, b));
    }

    #[test]
    fn bitmerge_unpairs_invert(z in arb_nat()) {
        let p = bitmerge_unpair(&z);
        prop_assert_eq!(bitmerge_pair(&p.first, &p.second), z);
    }

    #[test]
    fn kuratowski_inverts_where_defined(a in 0u64..18, b in 0u64..18) {
        let z = kuratowski_pair(&Nat::from(a), &Nat::from(b)).unwrap();
        let p = kuratowski_unpair(&z).unwrap();
        prop_assert_eq!((p.first, p.second), (Nat::from(a), Nat::from(b)));
    }

    #[test]
    fn transported_set_ops_match_bitwise(a in any::<u64>(), b in any::<u64>()) {
        let (na, nb) = (Nat::from(a), Nat::from(b));
        prop_assert_eq!(nat_union(&na, &nb).unwrap(), Nat::from(a | b));
        prop_assert_eq!(nat_intersection(&na, &nb).unwrap(), Nat::from(a & b));
        prop_assert_eq!(nat_difference(&na, &nb).unwrap(), Nat::from(a & !b));
    }

    #[test]
    fn adduction_matches_bit_setting(a in 0u64..64, s in any::<u64>()) {
        let expected = Nat::from(s | (1u64 << a) as u64);
        prop_assert_eq!(nat_adduction(&Nat::from(a), &Nat::from(s)).unwrap(), expected);
    }

    #[test]
    fn folds_deforest(n in any::<u32>(), u in arb_small_ulimit()) {
        let n = Nat::from(n);
        let tree = nat_to_hfs(&n, &u);
        prop_assert_eq!(
            nat_fold(&SizeAlgebra, &u, &n).unwrap(),
            hfold(&SizeAlgebra, &tree).unwrap()
        );
        prop_assert_eq!(
            nat_fold(&DepthAlgebra, &u, &n).unwrap(),
            hfold(&DepthAlgebra, &tree).unwrap()
        );
    }

    #[test]
    fn choice_functions_choose_members(n in any::<u64>()) {
        let even = Nat::from(n & !1);
        let choice = nat_choice_fun(&even).unwrap();
        // exactly one pair per member, each pairing a member with one of its elements
        let selections: std::collections::BTreeMap<Nat, Nat> = bit_elements(&choice)
            .map(|code| {
                let pair = bitmerge_unpair(&code);
                (pair.first, pair.second)
            })
            .collect();
        let members: Vec<Nat> = bit_elements(&even).collect();
        prop_assert_eq!(selections.len(), members.len());
        for member in &members {
            match selections.get(member) {
                Some(chosen) => prop_assert!(nat_to_set(member).contains(chosen)),
                None => prop_assert!(false, "no selection for member {}", member),
            }
        }
        if n % 2 == 1 {
            prop_assert!(nat_choice_fun(&Nat::from(n)).is_err());
        }
    }

    #[test]
    fn decoration_inverts_compression(n in any::<u64>()) {
        let n = Nat::from(n);
        prop_assert_eq!(decorate(&compress_dag(&n)).unwrap(), n);
    }

    #[test]
    fn digraph_roundtrips(n in arb_nat()) {
        prop_assert_eq!(digraph_to_nat(&nat_to_digraph(&n)).unwrap(), n);
    }

    #[test]
    fn digraph_json_roundtrips(n in any::<u64>()) {
        let g = nat_to_digraph(&Nat::from(n));
        prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn transpose_is_an_involution(n in arb_nat()) {
        prop_assert_eq!(transpose_nat(&transpose_nat(&n).unwrap()).unwrap(), n);
    }
}
