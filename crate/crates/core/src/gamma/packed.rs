//! Vertices of Γₙ for `n ≤ 8` packed into one `u64`: row `r` is byte `r`.

use std::sync::OnceLock;

use crate::gf2::{BitMatrix, SymMatrix, Vertex};

pub const PACKED_MAX_N: usize = 8;

struct Tables {
    /// `outer[x]` is `xxᵀ` packed.
    outer: [u64; 256],
    /// `diag[x]` has bit `9r` set for each `r` in the support of `x`.
    diag: [u64; 256],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut outer = [0u64; 256];
        let mut diag = [0u64; 256];
        for x in 0..256usize {
            for r in 0..8 {
                if (x >> r) & 1 == 1 {
                    outer[x] |= (x as u64) << (8 * r);
                    diag[x] |= 1 << (9 * r);
                }
            }
        }
        Tables { outer, diag }
    })
}

#[inline]
pub fn outer(x: u8) -> u64 {
    tables().outer[x as usize]
}

/// `xᵀMx` for packed symmetric `M`: the parity of the diagonal entries picked out by `x`.
#[inline]
pub fn quad(m: u64, x: u8) -> bool {
    (m & tables().diag[x as usize]).count_ones() & 1 == 1
}

/// `Mx` for packed symmetric `M`, as the sum of the rows selected by `x`.
#[inline]
pub fn mul_vec(m: u64, x: u8) -> u8 {
    let mut acc = 0u8;
    let mut bits = x;
    while bits != 0 {
        let r = bits.trailing_zeros();
        acc ^= (m >> (8 * r)) as u8;
        bits &= bits - 1;
    }
    acc
}

#[inline]
pub fn row(m: u64, r: usize) -> u8 {
    (m >> (8 * r)) as u8
}

pub fn pack(m: &SymMatrix) -> u64 {
    assert!(
        m.n() <= PACKED_MAX_N,
        "packed form needs n ≤ {PACKED_MAX_N}"
    );
    m.as_matrix()
        .row_words()
        .iter()
        .enumerate()
        .fold(0, |acc, (r, &w)| acc | (w << (8 * r)))
}

pub fn unpack(n: usize, m: u64) -> SymMatrix {
    SymMatrix::new(BitMatrix::from_row_words(
        n,
        (0..n).map(|r| row(m, r) as u64),
    ))
    .expect("packed matrices are symmetric")
}

pub fn unpack_vertex(n: usize, mat: u64, inv: u64) -> Vertex {
    Vertex::from_parts(unpack(n, mat), unpack(n, inv))
}

/// Packs the symmetric matrix whose upper triangle, row-major, is `bits`.
pub fn from_upper_bits(n: usize, bits: u64) -> u64 {
    let mut m = 0u64;
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            if (bits >> k) & 1 == 1 {
                m |= 1 << (8 * i + j);
                m |= 1 << (8 * j + i);
            }
            k += 1;
        }
    }
    m
}

/// Inverse of an `n×n` packed matrix, or `None` when singular.
pub fn inverse(n: usize, m: u64) -> Option<u64> {
    let mut rows = [0u8; 8];
    let mut inv = [0u8; 8];
    for r in 0..n {
        rows[r] = row(m, r);
        inv[r] = 1 << r;
    }
    for c in 0..n {
        let p = (c..n).find(|&r| (rows[r] >> c) & 1 == 1)?;
        rows.swap(c, p);
        inv.swap(c, p);
        for r in 0..n {
            if r != c && (rows[r] >> c) & 1 == 1 {
                rows[r] ^= rows[c];
                inv[r] ^= inv[c];
            }
        }
    }
    Some(
        inv[..n]
            .iter()
            .enumerate()
            .fold(0, |acc, (r, &w)| acc | (w as u64) << (8 * r)),
    )
}

/// The packed neighbors of `(mat, inv)` in ascending order of the update vector `x`.
pub fn neighbors(n: usize, mat: u64, inv: u64) -> impl Iterator<Item = (u64, u64)> {
    (1u16..1 << n).filter_map(move |x| {
        let x = x as u8;
        if quad(inv, x) {
            return None;
        }
        let y = mul_vec(inv, x);
        Some((mat ^ outer(x), inv ^ outer(y)))
    })
}
