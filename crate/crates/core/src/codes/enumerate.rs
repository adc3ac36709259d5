use std::collections::BTreeSet;

use super::{CodesError, LinearCode, SelfDualCode};
use crate::gf2::BitVector;

pub const MAX_ENUMERATION_LENGTH: usize = 10;

/// Every self-dual code of the given even length, sorted by canonical form.
///
/// Grows self-orthogonal codes from `⟨j⟩` one vector of `C^⊥ \ C` at a time;
/// every self-dual code contains `j`, so each is reached.
pub fn enumerate_selfdual_codes(length: usize) -> Result<Vec<SelfDualCode>, CodesError> {
    if length % 2 == 1 || length == 0 {
        return Err(CodesError::OddLength { length });
    }
    if length > MAX_ENUMERATION_LENGTH {
        return Err(CodesError::TooLarge {
            what: "code length",
            value: length,
            max: MAX_ENUMERATION_LENGTH,
        });
    }
    let mut level: BTreeSet<LinearCode> =
        BTreeSet::from([LinearCode::span(length, &[BitVector::ones(length)])?]);
    for _ in 1..length / 2 {
        let mut next = BTreeSet::new();
        for code in &level {
            for v in code.dual().codewords() {
                // Vectors orthogonal to j have even weight, hence are self-orthogonal.
                if code.contains(&v) {
                    continue;
                }
                let mut gens = code.rows().to_vec();
                gens.push(v);
                next.insert(LinearCode::span(length, &gens)?);
            }
        }
        level = next;
    }
    level.into_iter().map(SelfDualCode::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::are_independent;

    /// Independent oracle: all `k`-subsets of even-weight vectors that are
    /// pairwise orthogonal and independent, deduplicated by canonical form.
    fn brute_force(length: usize) -> BTreeSet<LinearCode> {
        let k = length / 2;
        let even: Vec<BitVector> = (1u64..1 << length)
            .map(|b| BitVector::from_bits(length, b))
            .filter(|v| v.weight() % 2 == 0)
            .collect();
        let mut out = BTreeSet::new();
        let mut pick = Vec::new();
        fn rec(
            even: &[BitVector],
            start: usize,
            k: usize,
            pick: &mut Vec<BitVector>,
            out: &mut BTreeSet<LinearCode>,
        ) {
            if pick.len() == k {
                out.insert(LinearCode::span(pick[0].len(), pick).unwrap());
                return;
            }
            for i in start..even.len() {
                let v = even[i];
                if pick.iter().all(|u| !u.dot(&v).unwrap()) {
                    pick.push(v);
                    if are_independent(pick) {
                        rec(even, i + 1, k, pick, out);
                    }
                    pick.pop();
                }
            }
        }
        rec(&even, 0, k, &mut pick, &mut out);
        out
    }

    #[test]
    fn length_four_gives_the_three_listed_codes() {
        let codes = enumerate_selfdual_codes(4).unwrap();
        let listed: BTreeSet<SelfDualCode> = ["1100", "1010", "1001"]
            .iter()
            .map(|g| {
                SelfDualCode::from_generators(4, &[g.parse().unwrap(), BitVector::ones(4)]).unwrap()
            })
            .collect();
        assert_eq!(codes.into_iter().collect::<BTreeSet<_>>(), listed);
    }

    #[test]
    fn counts_match_brute_force() {
        for (length, expected) in [(2, 1), (4, 3), (6, 15), (8, 135)] {
            let codes = enumerate_selfdual_codes(length).unwrap();
            assert_eq!(codes.len(), expected, "length {length}");
            let oracle = brute_force(length);
            assert_eq!(
                codes
                    .iter()
                    .map(|c| c.code().clone())
                    .collect::<BTreeSet<_>>(),
                oracle
            );
        }
    }

    #[test]
    fn length_ten_and_bounds() {
        assert_eq!(enumerate_selfdual_codes(10).unwrap().len(), 2295);
        assert!(matches!(
            enumerate_selfdual_codes(12),
            Err(CodesError::TooLarge { .. })
        ));
        assert!(matches!(
            enumerate_selfdual_codes(5),
            Err(CodesError::OddLength { length: 5 })
        ));
    }
}
