use std::collections::BTreeSet;
use std::sync::OnceLock;

use coxeter_core::codes::{
    all_bases, bar, code_from_matrix, enumerate_selfdual_codes, extend_by_one, family_from_code,
    family_inverse_closed, format_codes, orthogonal_witness, parse_codes, sd_membership,
};
use coxeter_core::gamma::enumerate_vertices;
use coxeter_core::gf2::{decompose_symmetric, random_orthogonal, rank_of};
use coxeter_core::{BitMatrix, BitVector, GraphConfig, SelfDualCode, SymMatrix, Vertex};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn codes(length: usize) -> &'static [SelfDualCode] {
    static CACHE: OnceLock<Vec<Vec<SelfDualCode>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        [4, 6, 8]
            .iter()
            .map(|&l| enumerate_selfdual_codes(l).unwrap())
            .collect()
    });
    &all[length / 2 - 2]
}

fn sd5() -> &'static [Vertex] {
    static CACHE: OnceLock<Vec<Vertex>> = OnceLock::new();
    CACHE.get_or_init(|| {
        enumerate_vertices(5, &GraphConfig::new())
            .unwrap()
            .into_iter()
            .filter(|a| sd_membership(a).unwrap())
            .collect()
    })
}

fn keys(members: impl IntoIterator<Item = SymMatrix>) -> BTreeSet<u64> {
    members.into_iter().map(|m| m.upper_bits()).collect()
}

#[test]
fn basis_matrices_by_parity_class() {
    for length in [4, 6] {
        let k = length / 2;
        for c in codes(length) {
            for b in all_bases(c).unwrap() {
                let parity_two = b.vectors.iter().filter(|v| v.get(length - 1)).count() == 2;
                assert_eq!(b.a_prime().det(), parity_two);
                let a2 = b.a_double_prime();
                assert!(a2.det());
                if k % 2 == 1 {
                    assert!(!sd_membership(&Vertex::new(a2).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn every_sd5_member_lies_in_its_family() {
    for a in sd5() {
        let c = code_from_matrix(a).unwrap();
        assert!(c.contains(&BitVector::ones(6)));
        assert!(family_from_code(&c)
            .unwrap()
            .keys()
            .contains(&a.mat().upper_bits()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn members_decompose_into_self_dual_bars(half in 2usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let length = 2 * half;
        let n = length - 1;
        let c = codes(length).choose(&mut rng).unwrap();
        let family = family_from_code(c).unwrap();
        let a = family.members.choose(&mut rng).unwrap();
        let d = decompose_symmetric(&(a.mat() + &SymMatrix::identity(n))).unwrap();
        let xs = d.gram_vectors();
        let g = BitMatrix::from_rows(n, &xs).unwrap();
        prop_assert!((&g * &g.transpose()).rank() <= 1);
        let bars: Vec<BitVector> = xs.iter().map(bar).collect();
        prop_assert!(bars.iter().all(|u| bars.iter().all(|v| !u.dot(v).unwrap())));
        prop_assert_eq!(rank_of(&bars), half);
        prop_assert!(bars.iter().all(|v| c.contains(v)));
    }

    #[test]
    fn family_members_round_trip(half in 2usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = codes(2 * half).choose(&mut rng).unwrap();
        for a in family_from_code(c).unwrap().members {
            prop_assert!(sd_membership(&a).unwrap());
            prop_assert_eq!(&code_from_matrix(&a).unwrap(), c);
        }
        prop_assert!(family_inverse_closed(c).unwrap());
    }

    #[test]
    fn families_follow_orthogonal_maps(half in 2usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let length = 2 * half;
        let n = length - 1;
        let c = codes(length).choose(&mut rng).unwrap();
        let p = random_orthogonal(n, &mut rng);
        let image = SelfDualCode::new(c.code().map(&extend_by_one(&p)).unwrap()).unwrap();
        let moved = keys(family_from_code(c).unwrap().members.iter().map(|a| a.mat().congruent(&p).unwrap()));
        prop_assert_eq!(moved, family_from_code(&image).unwrap().keys());
    }

    #[test]
    fn witnesses_are_valid(half in 2usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let length = 2 * half;
        let c = codes(length).choose(&mut rng).unwrap();
        let ct = codes(length).choose(&mut rng).unwrap();
        let p = orthogonal_witness(c, ct).unwrap();
        prop_assert_eq!(&p.transpose() * &p, BitMatrix::identity(length - 1));
        let mapped = c.code().map(&extend_by_one(&p)).unwrap();
        prop_assert_eq!(&mapped, ct.code());
    }

    #[test]
    fn text_round_trip(half in 2usize..=4, seed in any::<u64>(), count in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let picked: Vec<SelfDualCode> =
            (0..count).map(|_| codes(2 * half).choose(&mut rng).unwrap().clone()).collect();
        prop_assert_eq!(parse_codes(&format_codes(&picked)).unwrap(), picked.clone());
        for c in &picked {
            prop_assert_eq!(&c.to_string().parse::<SelfDualCode>().unwrap(), c);
        }
    }
}
