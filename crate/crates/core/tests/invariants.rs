use std::collections::HashSet;

use proptest::prelude::*;
use tiemonoid::verify::{
    self, enumerate_partitions, froidure_pin, literal_join, Carrier, DEFAULT_MAX_ELEMENTS as CAP,
};
use tiemonoid::{Family, FamilyKind, Ground, GroupElement, GroupFamily, SetPartition};

fn labels(size: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..size, size)
}

fn arb(ground: Ground) -> impl Strategy<Value = SetPartition> {
    labels(ground.size()).prop_map(move |l| SetPartition::from_labels(ground, &l))
}

fn arb_in(carrier: Carrier, n: usize) -> impl Strategy<Value = SetPartition> {
    let all = enumerate_partitions(carrier, n, CAP).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

#[test]
fn carrier_ladder() {
    for n in 2..=3 {
        let set = |c| {
            enumerate_partitions(c, n, CAP)
                .unwrap()
                .into_iter()
                .collect::<HashSet<_>>()
        };
        let (sp, rsp, b, d) = (
            set(Carrier::SPn),
            set(Carrier::RSPn),
            set(Carrier::PnB),
            set(Carrier::PnD),
        );
        let all: HashSet<_> = verify::all_set_partitions(Ground::signed(n).unwrap(), CAP)
            .unwrap()
            .into_iter()
            .collect();
        assert!(
            d.is_subset(&b) && b.is_subset(&sp) && sp.is_subset(&all),
            "n={n}"
        );
        assert!(d.is_subset(&rsp) && rsp.is_subset(&sp), "n={n}");
        assert!(d.len() < b.len() && rsp.len() < sp.len());
    }
}

#[test]
fn closures_are_closed() {
    for c in Carrier::ALL {
        let g = c.ground(2).unwrap();
        let m = froidure_pin(
            SetPartition::identity(g),
            &c.generators(2).unwrap(),
            |a, b| c.product(a, b),
            CAP,
        )
        .unwrap();
        let set: HashSet<_> = m.elements.iter().collect();
        for a in &m.elements {
            for b in &m.elements {
                assert!(set.contains(&c.product(a, b).unwrap()), "{c}: {a} * {b}");
            }
        }
        for (e, row) in m.cayley.iter().enumerate() {
            for (k, &t) in row.iter().enumerate() {
                let gen = &c.generators(2).unwrap()[k].1;
                assert_eq!(m.elements[t], c.product(&m.elements[e], gen).unwrap());
            }
        }
    }
}

#[test]
fn tied_quotient_sizes_factor() {
    for (kind, n) in [(FamilyKind::VirtualSingularA, 3), (FamilyKind::BraidD, 3)] {
        let f = Family::new(kind, n).unwrap();
        let m = verify::enumerate_tied_quotient(f, CAP).unwrap();
        let p = enumerate_partitions(verify::idempotent_carrier(kind), n, CAP)
            .unwrap()
            .len();
        assert_eq!(m.len(), p * f.group_family().order(n));
    }
}

proptest! {
    #[test]
    fn union_find_join_matches_literal_iteration(a in arb(Ground::Plain(6)), b in arb(Ground::Plain(6))) {
        prop_assert_eq!(a.join(&b).unwrap(), literal_join(&a, &b).unwrap());
    }

    #[test]
    fn signed_join_matches_literal_iteration(a in arb(Ground::Signed(3)), b in arb(Ground::Signed(3))) {
        prop_assert_eq!(a.join(&b).unwrap(), literal_join(&a, &b).unwrap());
    }

    #[test]
    fn b_product_is_least_upper_bound(a in arb_in(Carrier::PnB, 3), b in arb_in(Carrier::PnB, 3)) {
        let all = enumerate_partitions(Carrier::PnB, 3, CAP).unwrap();
        let lub = verify::least_upper_bound(&a, &b, &all).unwrap().cloned();
        prop_assert_eq!(Some(a.b_product(&b).unwrap()), lub);
    }

    #[test]
    fn carriers_are_closed_under_products(a in arb_in(Carrier::PnD, 3), b in arb_in(Carrier::PnD, 3)) {
        prop_assert!(Carrier::PnD.contains(&a.b_product(&b).unwrap()));
        prop_assert!(Carrier::RSPn.contains(&a.join(&b).unwrap()));
    }

    #[test]
    fn action_preserves_carriers(word in prop::collection::vec(-1i32..4, 0..8), p in arb_in(Carrier::PnD, 4)) {
        let word: Vec<i32> = word.into_iter().map(|k| if k == 0 { 1 } else { k }).collect();
        let g = GroupElement::from_generators(GroupFamily::EvenSignedD, 4, &word).unwrap();
        let q = g.act(&p).unwrap();
        prop_assert!(Carrier::PnD.contains(&q));
        prop_assert_eq!(g.inverse().act(&q).unwrap(), p);
    }
}
