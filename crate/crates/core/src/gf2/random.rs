//! Random generators for seeded property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{BitMatrix, BitVector, SymMatrix, Vertex};

pub fn random_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitVector {
    BitVector::from_bits(n, rng.gen())
}

pub fn random_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> BitMatrix {
    BitMatrix::from_row_words(
        cols,
        (0..rows).map(|_| rng.gen::<u64>()).collect::<Vec<_>>(),
    )
}

pub fn random_symmetric<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SymMatrix {
    let mut m = BitMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if rng.gen() {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    SymMatrix::new(m).expect("filled symmetrically")
}

/// Uniform over SGLₙ(𝔽₂) by rejection.
pub fn random_vertex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vertex {
    loop {
        if let Ok(v) = Vertex::new(random_symmetric(n, rng)) {
            return v;
        }
    }
}

/// A permutation matrix followed by `n` transvections `x ↦ x + (xᵀv)v` with `vᵀv = 0`.
pub fn random_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut p = BitMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, true);
    }
    for _ in 0..n {
        let v = random_vector(n, rng);
        if v.self_dot() {
            continue;
        }
        p = &(&BitMatrix::identity(n) + &BitMatrix::outer(&v)) * &p;
    }
    p
}
