//! Explicit pairs `(Iₙ, B)` realizing each case of the distance formulas.
//!
//! Vector indices below follow the usual one-based `e₁, …, eₙ` naming.

use std::fmt;

use super::{classify_decomposition, classify_pair, is_vertex, PairClass, Vertex};
use crate::gf2::{alternate_from_pairs, BitVector, DecompKind, Decomposition, SymMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessCase {
    /// Nonalternate, every `xᵢᵀxⱼ = 1`; even `r ≤ ⌊(n+1)/2⌋`.
    AllOnes,
    /// Nonalternate, all `xᵢᵀxᵢ = 1` and some `xᵢᵀxⱼ = 0`; even `r ≥ 4`.
    Mixed,
    /// Nonalternate, Gram of rank one and trace zero; `2 ≤ r ≤ ⌊(n+1)/2⌋`.
    RankOneTraceZero,
    /// Nonalternate, none of the above; any `1 ≤ r ≤ n`.
    Generic,
    /// Alternate, Gram not of rank one; even `r`, except `(r, n) ∈ {(2,2), (2,3)}`.
    AltHigher,
    /// Alternate, Gram of rank one; even `r ≤ ⌊(n+1)/2⌋`.
    AltRankOne,
}

impl WitnessCase {
    pub const ALL: [WitnessCase; 6] = [
        WitnessCase::AllOnes,
        WitnessCase::Mixed,
        WitnessCase::RankOneTraceZero,
        WitnessCase::Generic,
        WitnessCase::AltHigher,
        WitnessCase::AltRankOne,
    ];

    /// Whether a witness exists for rank `r` in dimension `n ≥ 2`.
    pub fn admits(&self, r: usize, n: usize) -> bool {
        let half = (n + 1) / 2;
        let even = r % 2 == 0;
        match self {
            WitnessCase::AllOnes => even && (2..=half).contains(&r),
            WitnessCase::Mixed => even && (4..=n).contains(&r),
            WitnessCase::RankOneTraceZero => (2..=half).contains(&r),
            WitnessCase::Generic => (1..=n).contains(&r),
            WitnessCase::AltHigher => even && (2..=n).contains(&r) && !(r == 2 && n <= 3),
            WitnessCase::AltRankOne => even && (2..=half).contains(&r),
        }
    }

    /// The class the pair must fall into; the all-ones Gram `J₂` of the
    /// rank-one trace-zero construction at `r = 2` is reported as all-ones.
    pub fn predicted(&self, r: usize) -> PairClass {
        match self {
            WitnessCase::AllOnes => PairClass::NonAltIAllOnes(r),
            WitnessCase::Mixed => PairClass::NonAltIMixed(r),
            WitnessCase::RankOneTraceZero if r == 2 => PairClass::NonAltIAllOnes(r),
            WitnessCase::RankOneTraceZero => PairClass::NonAltII(r),
            WitnessCase::Generic => PairClass::NonAltIII(r),
            WitnessCase::AltHigher => PairClass::AltHigher(r),
            WitnessCase::AltRankOne => PairClass::AltRank1(r),
        }
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WitnessCase::AllOnes => "all-ones",
            WitnessCase::Mixed => "mixed",
            WitnessCase::RankOneTraceZero => "rank-one-trace-zero",
            WitnessCase::Generic => "generic",
            WitnessCase::AltHigher => "alternate-higher",
            WitnessCase::AltRankOne => "alternate-rank-one",
        };
        f.write_str(s)
    }
}

/// The pair `(Iₙ, Iₙ + D)` with `D` given by its decomposition.
#[derive(Debug, Clone)]
pub struct Witness {
    pub case: WitnessCase,
    pub n: usize,
    pub r: usize,
    pub decomposition: Decomposition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub is_vertex: bool,
    pub expected: PairClass,
    /// Class computed from the construction's own vectors.
    pub from_construction: Option<PairClass>,
    /// Class computed by [`classify_pair`] from scratch.
    pub from_scratch: Option<PairClass>,
}

impl WitnessCheck {
    pub fn passed(&self) -> bool {
        self.is_vertex
            && self.from_construction == Some(self.expected)
            && self.from_scratch == Some(self.expected)
    }
}

impl Witness {
    pub fn b(&self) -> SymMatrix {
        &SymMatrix::identity(self.n) + &self.decomposition.reconstruct()
    }

    pub fn check(&self) -> WitnessCheck {
        let a = Vertex::identity(self.n);
        let b = self.b();
        let expected = self.case.predicted(self.r);
        let vertex = is_vertex(&b).then(|| Vertex::new(b).expect("determinant checked"));
        WitnessCheck {
            is_vertex: vertex.is_some(),
            expected,
            from_construction: vertex
                .as_ref()
                .map(|_| classify_decomposition(&a, &self.decomposition)),
            from_scratch: vertex.as_ref().and_then(|v| classify_pair(&a, v).ok()),
        }
    }
}

/// `e_lo + ⋯ + e_hi` in `𝔽₂ⁿ`, one-based and inclusive.
fn e_range(n: usize, lo: usize, hi: usize) -> BitVector {
    BitVector::from_support(n, &(lo - 1..hi).collect::<Vec<_>>())
}

fn e(n: usize, k: usize) -> BitVector {
    BitVector::unit(n, k - 1)
}

fn nonalternate(xs: Vec<BitVector>, n: usize) -> Decomposition {
    Decomposition {
        kind: DecompKind::NonAlternate,
        xs,
        n,
    }
}

/// Builds the construction for `(case, r)` in dimension `n`, if admissible.
pub fn construct(case: WitnessCase, r: usize, n: usize) -> Option<Witness> {
    if n < 2 || !case.admits(r, n) {
        return None;
    }
    let decomposition = match case {
        WitnessCase::AllOnes => {
            nonalternate((1..=r).map(|i| e_range(n, 1, 2 * i - 1)).collect(), n)
        }
        WitnessCase::Mixed if r % 4 == 0 => {
            let k = r / 4;
            let xs = (1..=r)
                .map(|i| {
                    if i <= 2 * k {
                        e(n, i)
                    } else {
                        e_range(n, i - 2 * k, i)
                    }
                })
                .collect();
            nonalternate(xs, n)
        }
        WitnessCase::Mixed => {
            let k = (r + 2) / 4;
            let xs = (1..=r)
                .map(|i| {
                    if i < 2 * k {
                        e(n, i)
                    } else if i == 2 * k {
                        e_range(n, 1, 2 * k + 1)
                    } else if i < r {
                        e_range(n, i + 1 - 2 * k, i + 1)
                    } else {
                        e(n, 1) + e(n, 2 * k - 1) + e(n, 2 * k)
                    }
                })
                .collect();
            nonalternate(xs, n)
        }
        WitnessCase::RankOneTraceZero => {
            let xs = (1..=r)
                .map(|i| match i {
                    1 => e(n, 1),
                    2 => e_range(n, 1, 3),
                    _ => e(n, 2 * i - 2) + e(n, 2 * i - 1),
                })
                .collect();
            nonalternate(xs, n)
        }
        WitnessCase::Generic => {
            let xs = (1..=r)
                .map(|i| {
                    if i % 2 == 0 {
                        e(n, i)
                    } else if i == r && r == n {
                        e(n, n - 2) + e(n, n)
                    } else {
                        e(n, i) + e(n, i + 1)
                    }
                })
                .collect();
            nonalternate(xs, n)
        }
        WitnessCase::AltHigher if r == 2 => Decomposition {
            kind: DecompKind::Alternate,
            xs: vec![e_range(n, 1, 2), e_range(n, 3, 4)],
            n,
        },
        WitnessCase::AltHigher => {
            // Path-graph blocks: C = e₁∘e₂ + e₃∘(e₂+e₄) on four coordinates, D
            // adds e₅∘(e₄+e₆) on six; r = 4k uses k copies of C, r = 4k+2 uses
            // k−1 copies of C followed by D.
            let (c_blocks, d_block) = if r % 4 == 0 {
                (r / 4, false)
            } else {
                (r / 4 - 1, true)
            };
            let mut ys = Vec::new();
            let mut push_path = |offset: usize, len: usize| {
                ys.push(e(n, offset + 1));
                ys.push(e(n, offset + 2));
                for t in (3..len).step_by(2) {
                    ys.push(e(n, offset + t));
                    ys.push(e(n, offset + t - 1) + e(n, offset + t + 1));
                }
            };
            for b in 0..c_blocks {
                push_path(4 * b, 4);
            }
            if d_block {
                push_path(4 * c_blocks, 6);
            }
            Decomposition {
                kind: DecompKind::Alternate,
                xs: alternate_from_pairs(&ys),
                n,
            }
        }
        WitnessCase::AltRankOne => {
            let xs = (1..=r)
                .map(|i| {
                    if i == 1 {
                        e(n, 1)
                    } else {
                        e(n, 2 * i - 2) + e(n, 2 * i - 1)
                    }
                })
                .collect();
            Decomposition {
                kind: DecompKind::Alternate,
                xs,
                n,
            }
        }
    };
    Some(Witness {
        case,
        n,
        r,
        decomposition,
    })
}

/// Every admissible construction in dimension `n`, ordered by case then rank.
pub fn all_witnesses(n: usize) -> Vec<Witness> {
    WitnessCase::ALL
        .iter()
        .flat_map(|&case| (1..=n).filter_map(move |r| construct(case, r, n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::are_independent;

    #[test]
    fn every_construction_up_to_six_checks_out() {
        for n in 2..=6 {
            for w in all_witnesses(n) {
                assert!(
                    are_independent(&w.decomposition.xs),
                    "{} r={} n={n}",
                    w.case,
                    w.r
                );
                assert_eq!(w.decomposition.rank(), w.r);
                let c = w.check();
                assert!(c.passed(), "{} r={} n={n}: {c:?}", w.case, w.r);
            }
        }
    }

    #[test]
    fn path_blocks_match_their_matrices() {
        // C and D are adjacency matrices of paths on 4 and 6 vertices.
        let path = |len: usize, n: usize| {
            let mut m = SymMatrix::zeros(n);
            for i in 0..len - 1 {
                m = &m + &SymMatrix::circ(&BitVector::unit(n, i), &BitVector::unit(n, i + 1));
            }
            m
        };
        let w = construct(WitnessCase::AltHigher, 4, 5).unwrap();
        assert_eq!(w.decomposition.reconstruct(), path(4, 5));
        let w = construct(WitnessCase::AltHigher, 6, 6).unwrap();
        assert_eq!(w.decomposition.reconstruct(), path(6, 6));
    }

    #[test]
    fn inadmissible_ranks_are_refused() {
        assert!(construct(WitnessCase::AltHigher, 2, 3).is_none());
        assert!(construct(WitnessCase::Mixed, 2, 6).is_none());
        assert!(construct(WitnessCase::AllOnes, 4, 6).is_none());
        assert!(construct(WitnessCase::Generic, 1, 1).is_none());
    }
}
