//! Structural properties of the group layer, checked against independent
//! oracles: the partition-count recurrence for isomorphism-class counts,
//! and exhaustive axiom checks on small orders.

use proptest::prelude::*;

use cayley_extremal::group::{enumerate_abelian_groups, AbelianGroup, GroupSpec};

/// Partition numbers p(0..=n) by Euler's pentagonal-number recurrence —
/// independent of the library's partition enumeration.
fn partition_counts(up_to: usize) -> Vec<i64> {
    let mut p = vec![0i64; up_to + 1];
    p[0] = 1;
    for n in 1..=up_to {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            total += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                total += sign * p[n - g2];
            }
            k += 1;
        }
        p[n] = total;
    }
    p
}

fn prime_exponents(mut m: u64) -> Vec<u32> {
    let mut exps = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            exps.push(e);
        }
        p += 1;
    }
    if m > 1 {
        exps.push(1);
    }
    exps
}

#[test]
fn isomorphism_class_counts_match_the_partition_recurrence() {
    let p = partition_counts(10);
    assert_eq!(&p[..8], &[1, 1, 2, 3, 5, 7, 11, 15]);

    for m in 1..=200u64 {
        let expected: i64 = prime_exponents(m).iter().map(|&e| p[e as usize]).product();
        let groups = enumerate_abelian_groups(m).unwrap();
        assert_eq!(
            groups.len() as i64,
            expected,
            "class count mismatch at order {m}"
        );
        for g in &groups {
            assert_eq!(g.order(), m);
            let moduli = g.moduli();
            assert!(moduli.iter().all(|&f| f >= 2));
            assert!(
                moduli.windows(2).all(|w| w[1] % w[0] == 0),
                "broken divisibility chain at order {m}: {moduli:?}"
            );
        }
        // Deterministic emission order, and therefore distinctness.
        assert!(groups.windows(2).all(|w| w[0].moduli() > w[1].moduli()));
    }
}

#[test]
fn group_axioms_hold_exhaustively_up_to_order_24() {
    for m in 1..=24u64 {
        for g in enumerate_abelian_groups(m).unwrap() {
            let elements: Vec<_> = g.elements().collect();
            for u in &elements {
                // Inverses: u + (-u) = 0.
                let neg = g.negate(u).unwrap();
                assert_eq!(g.add(u, &neg).unwrap(), g.identity());
                for v in &elements {
                    // Commutativity.
                    let uv = g.add(u, v).unwrap();
                    assert_eq!(uv, g.add(v, u).unwrap());
                    // Associativity.
                    for w in &elements {
                        assert_eq!(
                            g.add(&uv, w).unwrap(),
                            g.add(u, &g.add(v, w).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn product_presentation_ranks() {
    assert_eq!(GroupSpec::new(vec![3, 1]).unwrap().canonicalize().rank(), 1);
    for x in 2..=6u64 {
        let canon = GroupSpec::new(vec![3 * x, x]).unwrap().canonicalize();
        assert_eq!(canon.rank(), 2, "rank mismatch at x={x}");
        assert_eq!(canon.order(), 3 * x * x);
    }
}

proptest! {
    #[test]
    fn canonicalize_preserves_order_and_is_idempotent(
        factors in prop::collection::vec(1u64..=12, 1..=5)
    ) {
        let canon = GroupSpec::new(factors.clone()).unwrap().canonicalize();
        let expected_order: u64 = factors.iter().product();
        prop_assert_eq!(canon.order(), expected_order);
        prop_assert!(canon.moduli().iter().all(|&f| f >= 2));
        prop_assert!(canon.moduli().windows(2).all(|w| w[1] % w[0] == 0));

        let again = GroupSpec::new(canon.moduli().to_vec()).unwrap().canonicalize();
        prop_assert_eq!(again, canon);
    }

    #[test]
    fn canonicalization_maps_are_additive_isomorphisms(
        factors in prop::collection::vec(1u64..=9, 2..=3),
        seeds in prop::collection::vec((0i64..=100, 0i64..=100), 1..=8)
    ) {
        let map = GroupSpec::new(factors.clone()).unwrap().canonical_map();
        let canon = map.group().clone();
        // Addition commutes with the map, computed in source coordinates
        // modulo the source factors versus canonical coordinates.
        for &(a, b) in &seeds {
            let pairs: Vec<(i64, i64)> = factors
                .iter()
                .map(|&f| (a.rem_euclid(f as i64), b.rem_euclid(f as i64)))
                .collect();
            let lhs_coords: Vec<i64> = pairs.iter().map(|&(x, y)| x + y).collect();
            let lhs = map.map_coords(&lhs_coords).unwrap();
            let ac: Vec<i64> = pairs.iter().map(|&(x, _)| x).collect();
            let bc: Vec<i64> = pairs.iter().map(|&(_, y)| y).collect();
            let rhs = canon
                .add(&map.map_coords(&ac).unwrap(), &map.map_coords(&bc).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn canonical_maps_are_bijections_on_small_products() {
    use std::collections::HashSet;
    for factors in [vec![6u64, 2], vec![9, 3], vec![4, 6], vec![2, 2, 3], vec![12, 4]] {
        let map = GroupSpec::new(factors.clone()).unwrap().canonical_map();
        let order: u64 = factors.iter().product();
        assert_eq!(map.group().order(), order);

        // Walk every source coordinate vector in mixed-radix order.
        let mut seen = HashSet::new();
        let mut odo = vec![0i64; factors.len()];
        'walk: loop {
            seen.insert(map.map_coords(&odo).unwrap());
            let mut i = 0;
            loop {
                if i == factors.len() {
                    break 'walk;
                }
                odo[i] += 1;
                if (odo[i] as u64) < factors[i] {
                    break;
                }
                odo[i] = 0;
                i += 1;
            }
        }
        assert_eq!(seen.len() as u64, order, "not injective for {factors:?}");
    }
}

#[test]
fn enumeration_examples() {
    let moduli_of = |m: u64| -> Vec<Vec<u64>> {
        enumerate_abelian_groups(m)
            .unwrap()
            .iter()
            .map(|g| g.moduli().to_vec())
            .collect()
    };
    assert_eq!(moduli_of(12), vec![vec![12], vec![2, 6]]);
    assert_eq!(moduli_of(8), vec![vec![8], vec![2, 4], vec![2, 2, 2]]);
    assert_eq!(moduli_of(1), vec![Vec::<u64>::new()]);

    let z1 = AbelianGroup::trivial();
    assert_eq!(z1.order(), 1);
    assert!(z1.is_cyclic());
}
