//! Property-based invariants over randomly sampled groups, subsets,
//! exponents and specification strings.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use powersub::power::{power_subgroup, reduced_exponent};
use powersub::spec::{parse_group_spec, FamilyTerm, GroupSpec};
use powersub::subgroup::{all_subgroups, closure, conjugate, is_subgroup, quotient};
use powersub::{ElementSet, GroupTable};

fn pool() -> &'static Vec<GroupTable> {
    static POOL: OnceLock<Vec<GroupTable>> = OnceLock::new();
    POOL.get_or_init(|| {
        vec![
            GroupTable::cyclic(1).unwrap(),
            GroupTable::cyclic(8).unwrap(),
            GroupTable::cyclic(12).unwrap(),
            GroupTable::dihedral(4).unwrap(),
            GroupTable::dihedral(6).unwrap(),
            GroupTable::generalized_quaternion(8).unwrap(),
            GroupTable::generalized_quaternion(12).unwrap(),
            GroupTable::symmetric(3).unwrap(),
            GroupTable::alternating(4).unwrap(),
            GroupTable::elementary_abelian(2, 3).unwrap(),
            GroupTable::elementary_abelian(3, 2).unwrap(),
            GroupTable::cyclic(2)
                .unwrap()
                .direct_product(&GroupTable::cyclic(6).unwrap())
                .unwrap(),
        ]
    })
}

// a group from the pool plus a random small subset of its elements
fn group_and_seed() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..pool().len()).prop_flat_map(|gi| {
        let order = pool()[gi].order();
        (Just(gi), proptest::collection::vec(0..order, 0..4))
    })
}

fn term_pool() -> Vec<FamilyTerm> {
    vec![
        FamilyTerm::Cyclic(1),
        FamilyTerm::Cyclic(2),
        FamilyTerm::Cyclic(7),
        FamilyTerm::Cyclic(12),
        FamilyTerm::Dihedral(1),
        FamilyTerm::Dihedral(5),
        FamilyTerm::GeneralizedQuaternion(8),
        FamilyTerm::GeneralizedQuaternion(16),
        FamilyTerm::Symmetric(3),
        FamilyTerm::Symmetric(4),
        FamilyTerm::Alternating(4),
        FamilyTerm::ElementaryAbelian(2, 3),
        FamilyTerm::ElementaryAbelian(3, 2),
        FamilyTerm::ElementaryAbelian(5, 1),
    ]
}

fn arb_spec() -> impl Strategy<Value = GroupSpec> {
    proptest::collection::vec(0..term_pool().len(), 1..=3)
        .prop_map(|picks| GroupSpec {
            terms: picks.into_iter().map(|i| term_pool()[i]).collect(),
        })
        .prop_filter("stay under the order cap", |spec| spec.order() <= 256)
}

proptest! {
    #[test]
    fn closure_is_extensive_idempotent_monotone((gi, seed) in group_and_seed()) {
        let g = &pool()[gi];
        let s = ElementSet::from_indices(g.order(), seed.iter().copied());
        let c = closure(g, &s).unwrap();
        // extensive
        prop_assert!(s.is_subset_of(&c));
        // idempotent
        prop_assert_eq!(closure(g, &c).unwrap(), c.clone());
        // monotone: dropping a generator can only shrink the closure
        if let Some((_, rest)) = seed.split_last() {
            let smaller = ElementSet::from_indices(g.order(), rest.iter().copied());
            prop_assert!(closure(g, &smaller).unwrap().is_subset_of(&c));
        }
    }

    #[test]
    fn closure_lands_in_the_enumerated_lattice((gi, seed) in group_and_seed()) {
        let g = &pool()[gi];
        let c = closure(g, &ElementSet::from_indices(g.order(), seed)).unwrap();
        prop_assert!(is_subgroup(g, &c).unwrap());
        prop_assert_eq!(g.order() % c.len(), 0);
        prop_assert!(all_subgroups(g).unwrap().contains(&c));
    }

    #[test]
    fn conjugation_is_invertible_and_preserves_size(
        (gi, seed) in group_and_seed(),
        xi in any::<prop::sample::Index>(),
    ) {
        let g = &pool()[gi];
        let h = closure(g, &ElementSet::from_indices(g.order(), seed)).unwrap();
        let x = xi.index(g.order());
        let moved = conjugate(g, &h, x).unwrap();
        prop_assert_eq!(moved.len(), h.len());
        prop_assert!(is_subgroup(g, &moved).unwrap());
        prop_assert_eq!(conjugate(g, &moved, g.inverse(x)).unwrap(), h);
    }

    #[test]
    fn power_subgroups_collapse_along_gcd(gi in 0..pool().len(), m in 0usize..64) {
        let g = &pool()[gi];
        let direct = power_subgroup(g, m).unwrap();
        let reduced = power_subgroup(g, reduced_exponent(g, m)).unwrap();
        prop_assert_eq!(&direct, &reduced);
        // and both match the definition-only oracle
        prop_assert_eq!(&direct, &common::naive_power_subgroup(g, m));
    }

    #[test]
    fn quotients_obey_lagrange_and_the_homomorphism_law(
        (gi, seed) in group_and_seed(),
    ) {
        let g = &pool()[gi];
        let h = closure(g, &ElementSet::from_indices(g.order(), seed)).unwrap();
        if powersub::subgroup::is_normal(g, &h).unwrap() {
            let q = quotient(g, &h).unwrap();
            prop_assert_eq!(q.table.order(), g.order() / h.len());
            for a in 0..g.order() {
                for b in 0..g.order() {
                    prop_assert_eq!(
                        q.coset_of[g.mul(a, b)],
                        q.table.mul(q.coset_of[a], q.coset_of[b])
                    );
                }
            }
        }
    }

    #[test]
    fn spec_text_round_trips(spec in arb_spec()) {
        let text = spec.canonical_text();
        let reparsed = parse_group_spec(&text).unwrap();
        prop_assert_eq!(&reparsed, &spec);
        // case and inter-token whitespace do not matter
        let lower = text.to_lowercase();
        prop_assert_eq!(&parse_group_spec(&lower).unwrap(), &spec);
        let spaced = format!("  {}  ", text.replace('x', "  x  "));
        prop_assert_eq!(&parse_group_spec(&spaced).unwrap(), &spec);
    }

    #[test]
    fn built_groups_match_declared_orders(spec in arb_spec()) {
        let g = spec.build().unwrap();
        prop_assert_eq!(g.order() as u128, spec.order());
        prop_assert_eq!(g.exponent(), common::scan_exponent(&g));
    }

    #[test]
    fn direct_product_laws(
        ai in 0..pool().len(),
        bi in 0..pool().len(),
    ) {
        let (a, b) = (&pool()[ai], &pool()[bi]);
        prop_assume!(a.order() * b.order() <= 256);
        let p = a.direct_product(b).unwrap();
        prop_assert_eq!(p.order(), a.order() * b.order());
        let lcm = |x: usize, y: usize| x / gcd(x, y) * y;
        prop_assert_eq!(p.exponent(), lcm(a.exponent(), b.exponent()));
    }
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
