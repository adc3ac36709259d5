//! The graph Γₙ on invertible symmetric matrices, adjacent at rank-one difference.

mod bfs;
mod classify;
mod config;
mod diameter;
mod enumerate;
mod geodesic;
pub mod packed;
pub mod witnesses;

pub use bfs::{all_distances_from, distance_bfs, eccentricity_bfs, DistanceMap};
pub use classify::{
    classify_decomposition, classify_pair, distance_ambient, distance_closed, gram_matrix,
    PairClass,
};
pub use config::{GraphConfig, DEFAULT_MAX_ENUMERATION_N, HARD_MAX_ENUMERATION_N};
pub use diameter::diameter_closed;
pub use enumerate::{
    count_vertices, enumerate_packed, enumerate_vertices, export_graph, ExportSummary,
};
pub use geodesic::geodesic;

pub use crate::gf2::Vertex;

use thiserror::Error;

use crate::gf2::{BitVector, Gf2Error, SymMatrix};

#[derive(Debug, Error)]
pub enum GammaError {
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error("n = {n} exceeds the enumeration cap {max}")]
    TooLarge { n: usize, max: usize },
    #[error("matrix is not an invertible symmetric matrix")]
    NotVertex,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("the diameter formula needs n ≥ 2, got {n}")]
    DimensionTooSmall { n: usize },
    #[error("no neighbor of the vertex at step {step} is closer to the target (closed-form distance {distance})")]
    NoDescent { step: usize, distance: u32 },
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

/// Symmetric with determinant one.
pub fn is_vertex(m: &SymMatrix) -> bool {
    m.det()
}

/// `rank(A + B) = 1`.
pub fn are_adjacent(a: &Vertex, b: &Vertex) -> bool {
    a.n() == b.n() && (a.mat() + b.mat()).rank() == 1
}

/// All `A + xxᵀ` with `x ≠ 0` and `xᵀA⁻¹x = 0`, in ascending order of `x` read as an integer.
pub fn neighbors(a: &Vertex) -> impl Iterator<Item = Vertex> + '_ {
    let n = a.n();
    assert!(n < 64, "neighbor enumeration needs n < 64");
    (1u64..1 << n).filter_map(move |bits| a.rank_one_step(&BitVector::from_bits(n, bits)))
}

/// Expected neighbor count: `2ⁿ − 1` for alternate `A`, `2ⁿ⁻¹ − 1` otherwise.
pub fn degree(a: &Vertex) -> u64 {
    let n = a.n() as u32;
    if crate::gf2::is_alternate(a.mat()) {
        (1 << n) - 1
    } else {
        (1 << (n - 1)) - 1
    }
}

pub(crate) fn check_same_n(a: &Vertex, b: &Vertex) -> Result<(), GammaError> {
    if a.n() != b.n() {
        return Err(GammaError::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_examples() {
        assert!(is_vertex(&SymMatrix::identity(4)));
        assert!(!is_vertex(&SymMatrix::ones(2)));
        assert!(is_vertex(
            &SymMatrix::from_strs(&["011", "101", "111"]).unwrap()
        ));
    }

    #[test]
    fn adjacency_examples() {
        let i3 = Vertex::identity(3);
        assert!(!are_adjacent(&i3, &i3));
        let x = BitVector::from_support(3, &[0, 1]);
        let b = i3.rank_one_step(&x).unwrap();
        assert!(are_adjacent(&i3, &b));
        let f1 = Vertex::from_strs(&["011", "101", "111"]).unwrap();
        let f2 = Vertex::from_strs(&["101", "011", "111"]).unwrap();
        // The two members of one family differ by a rank-one matrix.
        assert_eq!((f1.mat() + f2.mat()).rank(), 1);
        assert!(are_adjacent(&f1, &f2));
        let g = Vertex::from_strs(&["011", "111", "110"]).unwrap();
        assert_eq!((f1.mat() + g.mat()).rank(), 2);
        assert!(!are_adjacent(&f1, &g));
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(&Vertex::identity(3)).count(), 3);
        let h = Vertex::from_strs(&["01", "10"]).unwrap();
        assert_eq!(neighbors(&h).count(), 3);
        assert_eq!(neighbors(&Vertex::identity(4)).count(), 7);
    }

    #[test]
    fn neighbor_counts_exhaustive_up_to_4() {
        for n in 1..=4 {
            for v in enumerate_vertices(n, &GraphConfig::new()).unwrap() {
                let nbrs: Vec<Vertex> = neighbors(&v).collect();
                assert_eq!(nbrs.len() as u64, degree(&v), "{v:?}");
                for b in &nbrs {
                    assert!(is_vertex(b.mat()));
                    assert!(are_adjacent(&v, b));
                }
            }
        }
    }
}
