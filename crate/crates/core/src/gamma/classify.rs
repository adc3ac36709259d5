use std::fmt;

use super::{check_same_n, GammaError, Vertex};
use crate::gf2::{
    decompose_symmetric, is_alternate, is_r1tr0, BitMatrix, BitVector, DecompKind, Decomposition,
    SymMatrix,
};

/// Which distance formula a pair of vertices falls under; `r` is `rank(A + B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    Equal,
    /// Nonalternate difference, every Gram entry is 1.
    NonAltIAllOnes(usize),
    /// Nonalternate difference, Gram diagonal all 1, some entry 0.
    NonAltIMixed(usize),
    /// Nonalternate difference, Gram of rank one and trace zero.
    NonAltII(usize),
    /// Any other nonalternate difference.
    NonAltIII(usize),
    /// Alternate difference, the `(r+1)×(r+1)` Gram has rank one.
    AltRank1(usize),
    /// Any other alternate difference.
    AltHigher(usize),
}

impl PairClass {
    pub fn rank(&self) -> usize {
        match *self {
            PairClass::Equal => 0,
            PairClass::NonAltIAllOnes(r)
            | PairClass::NonAltIMixed(r)
            | PairClass::NonAltII(r)
            | PairClass::NonAltIII(r)
            | PairClass::AltRank1(r)
            | PairClass::AltHigher(r) => r,
        }
    }

    pub fn distance(&self) -> u32 {
        let r = self.rank() as u32;
        match self {
            PairClass::Equal => 0,
            PairClass::NonAltIAllOnes(_) | PairClass::NonAltII(_) | PairClass::AltRank1(_) => r + 2,
            PairClass::NonAltIMixed(_) | PairClass::AltHigher(_) => r + 1,
            PairClass::NonAltIII(_) => r,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            PairClass::Equal => "Equal",
            PairClass::NonAltIAllOnes(_) => "NonAltI_AllOnes",
            PairClass::NonAltIMixed(_) => "NonAltI_Mixed",
            PairClass::NonAltII(_) => "NonAltII",
            PairClass::NonAltIII(_) => "NonAltIII",
            PairClass::AltRank1(_) => "AltRank1",
            PairClass::AltHigher(_) => "AltHigher",
        }
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairClass::Equal => f.write_str("Equal"),
            other => write!(f, "{}({})", other.label(), other.rank()),
        }
    }
}

/// `[vᵢᵀ M vⱼ]`.
pub fn gram_matrix(m: &SymMatrix, vs: &[BitVector]) -> SymMatrix {
    let k = vs.len();
    let mvs: Vec<BitVector> = vs
        .iter()
        .map(|v| m.as_matrix().mul_vec(v).expect("matching lengths"))
        .collect();
    let mut g = BitMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g.set(i, j, vs[i].dot_unchecked(&mvs[j]));
        }
    }
    SymMatrix::new_unchecked(g)
}

/// Classifies `(A, A + D)` from a decomposition of `D`.
pub fn classify_decomposition(a: &Vertex, d: &Decomposition) -> PairClass {
    let r = d.rank();
    let g = gram_matrix(a.inv(), &d.gram_vectors());
    match d.kind {
        DecompKind::NonAlternate => {
            if g.as_matrix().diagonal() == BitVector::ones(r) {
                if g == SymMatrix::ones(r) {
                    PairClass::NonAltIAllOnes(r)
                } else {
                    PairClass::NonAltIMixed(r)
                }
            } else if is_r1tr0(&g).is_some() {
                PairClass::NonAltII(r)
            } else {
                PairClass::NonAltIII(r)
            }
        }
        DecompKind::Alternate => {
            if g.rank() == 1 {
                PairClass::AltRank1(r)
            } else {
                PairClass::AltHigher(r)
            }
        }
    }
}

pub fn classify_pair(a: &Vertex, b: &Vertex) -> Result<PairClass, GammaError> {
    check_same_n(a, b)?;
    let d = a.mat() + b.mat();
    if d.is_zero() {
        return Ok(PairClass::Equal);
    }
    Ok(classify_decomposition(a, &decompose_symmetric(&d)?))
}

/// Exact graph distance from the closed-form case analysis.
pub fn distance_closed(a: &Vertex, b: &Vertex) -> Result<u32, GammaError> {
    Ok(classify_pair(a, b)?.distance())
}

/// Distance in the graph on all symmetric matrices, a lower bound for [`distance_closed`].
pub fn distance_ambient(a: &SymMatrix, b: &SymMatrix) -> Result<u32, GammaError> {
    if a.n() != b.n() {
        return Err(GammaError::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let d = a + b;
    let r = d.rank() as u32;
    Ok(if !d.is_zero() && is_alternate(&d) {
        r + 1
    } else {
        r
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(rows: &[&str]) -> Vertex {
        Vertex::from_strs(rows).unwrap()
    }

    #[test]
    fn equal_pair() {
        let a = v(&["011", "101", "111"]);
        assert_eq!(classify_pair(&a, &a).unwrap(), PairClass::Equal);
        assert_eq!(distance_closed(&a, &a).unwrap(), 0);
        assert_eq!(distance_ambient(a.mat(), a.mat()).unwrap(), 0);
    }

    #[test]
    fn self_dual_member_at_n3() {
        let i3 = Vertex::identity(3);
        let a = v(&["011", "101", "111"]);
        // The Gram is J₂: rank one, trace zero and all ones, reported as all-ones.
        let d = decompose_symmetric(&(i3.mat() + a.mat())).unwrap();
        let g = gram_matrix(i3.inv(), &d.gram_vectors());
        assert_eq!(g, SymMatrix::ones(2));
        assert!(is_r1tr0(&g).is_some());
        assert_eq!(
            classify_pair(&i3, &a).unwrap(),
            PairClass::NonAltIAllOnes(2)
        );
        assert_eq!(distance_closed(&i3, &a).unwrap(), 4);
        assert_eq!(distance_ambient(i3.mat(), a.mat()).unwrap(), 2);
    }

    #[test]
    fn all_ones_gram_at_n7() {
        let n = 7;
        let xs: Vec<BitVector> = (1..=4)
            .map(|i| BitVector::from_bits(n, (1 << (2 * i - 1)) - 1))
            .collect();
        let b = Vertex::new(&SymMatrix::identity(n) + &SymMatrix::sum_of_squares(n, &xs)).unwrap();
        assert_eq!(
            classify_pair(&Vertex::identity(n), &b).unwrap(),
            PairClass::NonAltIAllOnes(4)
        );
    }

    #[test]
    fn ambient_alternate() {
        let h = SymMatrix::from_strs(&["01", "10"]).unwrap();
        let i2 = SymMatrix::identity(2);
        assert_eq!(distance_ambient(&i2, &(&i2 + &h)).unwrap(), 3);
    }

    #[test]
    fn gram_examples() {
        let xs = [
            BitVector::unit(3, 0),
            BitVector::from_support(3, &[0, 1, 2]),
        ];
        assert_eq!(
            gram_matrix(&SymMatrix::identity(3), &xs),
            SymMatrix::ones(2)
        );
    }
}
