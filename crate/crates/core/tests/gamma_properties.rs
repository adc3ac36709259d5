use coxeter_core::gamma::{
    are_adjacent, classify_decomposition, classify_pair, diameter_closed, distance_ambient,
    distance_bfs, distance_closed, geodesic, neighbors,
};
use coxeter_core::gf2::{
    decompose_symmetric_randomized, is_alternate, random_invertible, random_vertex,
};
use coxeter_core::{GraphConfig, Vertex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pair(n: usize, seed: u64) -> (Vertex, Vertex, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_vertex(n, &mut rng);
    let b = random_vertex(n, &mut rng);
    (a, b, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symmetric_and_above_ambient(n in 1usize..=8, seed in any::<u64>()) {
        let (a, b, _) = pair(n, seed);
        let d = distance_closed(&a, &b).unwrap();
        prop_assert_eq!(d, distance_closed(&b, &a).unwrap());
        prop_assert!(d >= distance_ambient(a.mat(), b.mat()).unwrap());
        prop_assert_eq!(d == 0, a == b);
        prop_assert_eq!(d == 1, are_adjacent(&a, &b));
    }

    #[test]
    fn congruence_and_inversion_preserve_distance(n in 1usize..=8, seed in any::<u64>()) {
        let (a, b, mut rng) = pair(n, seed);
        let d = distance_closed(&a, &b).unwrap();
        let p = random_invertible(n, &mut rng);
        let pa = Vertex::new(a.mat().congruent(&p).unwrap()).unwrap();
        let pb = Vertex::new(b.mat().congruent(&p).unwrap()).unwrap();
        prop_assert_eq!(distance_closed(&pa, &pb).unwrap(), d);
        prop_assert_eq!(distance_closed(&a.inverted(), &b.inverted()).unwrap(), d);
    }

    #[test]
    fn agrees_with_bfs_at_n4(seed in any::<u64>()) {
        let (a, b, _) = pair(4, seed);
        prop_assert_eq!(distance_closed(&a, &b).unwrap(), distance_bfs(&a, &b, &GraphConfig::new()).unwrap());
    }

    #[test]
    fn neighbor_count_by_kind(n in 1usize..=8, seed in any::<u64>()) {
        let (a, _, _) = pair(n, seed);
        let expected = if is_alternate(a.mat()) { (1u64 << n) - 1 } else { (1u64 << (n - 1)) - 1 };
        let nbrs: Vec<Vertex> = neighbors(&a).collect();
        prop_assert_eq!(nbrs.len() as u64, expected);
        prop_assert!(nbrs.iter().all(|b| are_adjacent(&a, b)));
    }

    #[test]
    fn geodesics_are_shortest_edge_chains(n in 1usize..=7, seed in any::<u64>()) {
        let (a, b, _) = pair(n, seed);
        let path = geodesic(&a, &b).unwrap();
        prop_assert_eq!(path.len() as u32, distance_closed(&a, &b).unwrap() + 1);
        prop_assert_eq!(path.first(), Some(&a));
        prop_assert_eq!(path.last(), Some(&b));
        prop_assert!(path.windows(2).all(|w| are_adjacent(&w[0], &w[1])));
    }

    #[test]
    fn within_diameter(n in 2usize..=8, seed in any::<u64>()) {
        let (a, b, _) = pair(n, seed);
        prop_assert!(distance_closed(&a, &b).unwrap() <= diameter_closed(n).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn distance_ignores_the_decomposition(n in 2usize..=8, seed in any::<u64>()) {
        let (a, b, mut rng) = pair(n, seed);
        prop_assume!(a != b);
        let d = classify_pair(&a, &b).unwrap().distance();
        let diff = a.mat() + b.mat();
        for _ in 0..100 {
            let dec = decompose_symmetric_randomized(&diff, &mut rng).unwrap();
            prop_assert_eq!(classify_decomposition(&a, &dec).distance(), d);
        }
    }
}
