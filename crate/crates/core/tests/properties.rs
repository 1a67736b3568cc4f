mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hivecomb::hive::{count_lattice_hives, decompose_tensor_product, enumerate_lattice_hives, BoundaryTriple};
use hivecomb::honeycomb::{diagram, overlay, reconstruct, Honeycomb};
use hivecomb::lift::largest_lift_seeded;
use hivecomb::oracles::weyl_dim;
use hivecomb::plane::PlanePoint;
use hivecomb::rational::q;

fn triple(seed: u64, n: usize, max: i64) -> BoundaryTriple {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = common::dominant_weight(&mut rng, n, max);
    let m = common::dominant_weight(&mut rng, n, max);
    let nu = common::compatible_nu(&mut rng, &l, &m);
    BoundaryTriple::from_ints(&l, &m, &nu).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn count_is_rotation_and_twist_invariant(seed in any::<u64>(), n in 1usize..=4, k in -3i64..=3) {
        let t = triple(seed, n, 4);
        let c = count_lattice_hives(&t).unwrap();
        prop_assert_eq!(count_lattice_hives(&t.rotated()).unwrap(), c);
        let [l, m, nu] = t.to_ints().unwrap();
        let l2: Vec<i64> = l.iter().map(|x| x + k).collect();
        let nu2: Vec<i64> = nu.iter().map(|x| x - k).collect();
        prop_assert_eq!(count_lattice_hives(&BoundaryTriple::from_ints(&l2, &m, &nu2).unwrap()).unwrap(), c);
    }

    #[test]
    fn tensor_dimensions_add_up(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = common::dominant_weight(&mut rng, n, 3);
        let m = common::dominant_weight(&mut rng, n, 3);
        let total: u64 = decompose_tensor_product(&l, &m).unwrap().iter().map(|(s, c)| c * weyl_dim(s)).sum();
        prop_assert_eq!(total, weyl_dim(&l) * weyl_dim(&m));
    }

    #[test]
    fn diagrams_roundtrip(seed in any::<u64>(), n in 2usize..=4, pick in any::<prop::sample::Index>()) {
        let t = triple(seed, n, 5);
        let hives = enumerate_lattice_hives(&t).unwrap();
        prop_assume!(!hives.is_empty());
        let h = Honeycomb::from_hive(pick.get(&hives)).unwrap();
        let m = diagram(&h);
        let back = reconstruct(&m).unwrap();
        prop_assert_eq!(diagram(&back), m);
    }

    #[test]
    fn overlay_adds_diagrams(s1 in any::<u64>(), s2 in any::<u64>(), dx in -4i64..=4, dy in -4i64..=4) {
        let pick = |s: u64| {
            let t = triple(s, 2 + (s % 2) as usize, 4);
            enumerate_lattice_hives(&t).unwrap().first().map(|h| Honeycomb::from_hive(h).unwrap())
        };
        let (Some(a), Some(b)) = (pick(s1), pick(s2)) else { return Ok(()) };
        let b = b.translated(&PlanePoint::from_xy(q(dx), q(dy)));
        let sum = overlay(&a, &b).unwrap();
        prop_assert_eq!(diagram(&sum), diagram(&a).sum(&diagram(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Scaling a regular boundary scales the largest lift.
    #[test]
    fn lift_is_homogeneous(seed in any::<u64>(), n in 2usize..=4, k in 2i64..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = common::random_regular_triple(&mut rng, n, 6);
        let a = largest_lift_seeded(&t, 1).unwrap();
        let b = largest_lift_seeded(&t.scaled(k), 1).unwrap();
        prop_assert_eq!(b.hive, a.hive.scale(&q(k)));
    }
}
