use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use super::vector::mask;
use super::{BitVector, Gf2Error, MAX_DIM};

/// Dense matrix over GF(2); each row is one packed 64-bit word.
///
/// Entry `(r, c)` is bit `c` of `data[r]`. Bits at column positions `>= cols`
/// are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= MAX_DIM, "column count {cols} exceeds {MAX_DIM}");
        Self {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.data.iter_mut().enumerate() {
            *row = 1 << i;
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.data.fill(mask(cols));
        m
    }

    /// Builds a matrix from packed row words, masking stray high bits.
    pub fn from_row_words(cols: usize, rows: impl IntoIterator<Item = u64>) -> Self {
        assert!(cols <= MAX_DIM, "column count {cols} exceeds {MAX_DIM}");
        let data: Vec<u64> = rows.into_iter().map(|w| w & mask(cols)).collect();
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_rows(cols: usize, rows: &[BitVector]) -> Result<Self, Gf2Error> {
        for r in rows {
            if r.len() != cols {
                return Err(Gf2Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(Self::from_row_words(cols, rows.iter().map(|r| r.bits())))
    }

    /// The matrix whose `i`-th column is `columns[i]`.
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            if v.len() != rows {
                return Err(Gf2Error::DimensionMismatch {
                    expected: rows,
                    found: v.len(),
                });
            }
            for r in v.support() {
                m.data[r] |= 1 << c;
            }
        }
        Ok(m)
    }

    /// Parses rows of `'0'`/`'1'` characters, e.g. `&["011", "101", "111"]`.
    pub fn from_strs(rows: &[&str]) -> Result<Self, Gf2Error> {
        rows.join("\n").parse()
    }

    /// The rank-one symmetric matrix `xxᵀ`.
    pub fn outer(x: &BitVector) -> Self {
        Self::outer_pair(x, x)
    }

    /// `xyᵀ`.
    pub fn outer_pair(x: &BitVector, y: &BitVector) -> Self {
        let mut m = Self::zeros(x.len(), y.len());
        for r in x.support() {
            m.data[r] = y.bits();
        }
        m
    }

    /// `x∘y = xyᵀ + yxᵀ`.
    pub fn circ(x: &BitVector, y: &BitVector) -> Self {
        &Self::outer_pair(x, y) + &Self::outer_pair(y, x)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn row_words(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector::from_bits(self.cols, self.data[r])
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut bits = 0u64;
        for (r, w) in self.data.iter().enumerate() {
            bits |= ((w >> c) & 1) << r;
        }
        BitVector::from_bits(self.rows, bits)
    }

    pub fn columns(&self) -> Vec<BitVector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        (self.data[r] >> c) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        if value {
            self.data[r] |= 1 << c;
        } else {
            self.data[r] &= !(1 << c);
        }
    }

    /// `row r += bits`.
    pub(crate) fn xor_row(&mut self, r: usize, bits: u64) {
        self.data[r] ^= bits & mask(self.cols);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, &w) in self.data.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let c = bits.trailing_zeros() as usize;
                t.data[c] |= 1 << r;
                bits &= bits - 1;
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn trace(&self) -> bool {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(false, |acc, i| acc ^ self.get(i, i))
    }

    /// The diagonal as a vector.
    pub fn diagonal(&self) -> BitVector {
        assert!(self.is_square(), "diagonal of a non-square matrix");
        let mut bits = 0;
        for (i, w) in self.data.iter().enumerate() {
            bits |= ((w >> i) & 1) << i;
        }
        BitVector::from_bits(self.rows, bits)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, Gf2Error> {
        if self.cols != rhs.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for (r, &w) in self.data.iter().enumerate() {
            let mut bits = w;
            let mut acc = 0u64;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                acc ^= rhs.data[k];
                bits &= bits - 1;
            }
            out.data[r] = acc;
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, Gf2Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows * MAX_DIM + self.cols,
                found: rhs.rows * MAX_DIM + rhs.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    /// Matrix-vector product `Mx`.
    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector, Gf2Error> {
        if x.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut bits = 0u64;
        for (r, &w) in self.data.iter().enumerate() {
            bits |= (((w & x.bits()).count_ones() & 1) as u64) << r;
        }
        Ok(BitVector::from_bits(self.rows, bits))
    }

    /// Row rank via Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        row_reduce(&mut rows, self.cols, None).len()
    }

    pub fn det(&self) -> Result<bool, Gf2Error> {
        if !self.is_square() {
            return Err(Gf2Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rank() == self.rows)
    }

    pub fn inverse(&self) -> Result<Self, Gf2Error> {
        if !self.is_square() {
            return Err(Gf2Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut rows = self.data.clone();
        let mut inv = Self::identity(n).data;
        let pivots = row_reduce(&mut rows, n, Some(&mut inv));
        if pivots.len() < n {
            return Err(Gf2Error::Singular);
        }
        // Fully reduced with pivot columns 0..n in order, so `rows` is I.
        Ok(Self {
            rows: n,
            cols: n,
            data: inv,
        })
    }

    /// Reduced row echelon form; zero rows are dropped.
    pub fn rref(&self) -> Self {
        let mut rows = self.data.clone();
        let pivots = row_reduce(&mut rows, self.cols, None);
        rows.truncate(pivots.len());
        Self {
            rows: rows.len(),
            cols: self.cols,
            data: rows,
        }
    }

    /// A basis of the right null space `{x : Mx = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<BitVector> {
        let r = self.rref();
        let pivots: Vec<usize> = r.data.iter().map(|w| w.trailing_zeros() as usize).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = BitVector::unit(self.cols, free);
            for (row, &p) in r.data.iter().zip(&pivots) {
                if (row >> free) & 1 == 1 {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `Mx = b`, returning one solution if the system is consistent.
    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>, Gf2Error> {
        if b.len() != self.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        // Augment with b in column `cols`.
        assert!(self.cols < MAX_DIM, "augmented system too wide");
        let mut rows: Vec<u64> = self
            .data
            .iter()
            .enumerate()
            .map(|(r, &w)| w | ((b.get(r) as u64) << self.cols))
            .collect();
        let pivots = row_reduce(&mut rows, self.cols + 1, None);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVector::zeros(self.cols);
        for (row, &p) in rows.iter().zip(&pivots) {
            if (row >> self.cols) & 1 == 1 {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        out.data[..self.rows].copy_from_slice(&self.data);
        for (r, &w) in other.data.iter().enumerate() {
            out.data[self.rows + r] = w << self.cols;
        }
        out
    }

    /// Sub-matrix of the given row range and column range.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let width = cols.end - cols.start;
        Self::from_row_words(width, self.data[rows].iter().map(|w| w >> cols.start))
    }

    /// Assembles `[[a11, a12], [a21, a22]]`.
    pub fn from_blocks(a11: &Self, a12: &Self, a21: &Self, a22: &Self) -> Result<Self, Gf2Error> {
        if a11.rows != a12.rows || a21.rows != a22.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: a11.rows,
                found: a12.rows,
            });
        }
        if a11.cols != a21.cols || a12.cols != a22.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: a11.cols,
                found: a21.cols,
            });
        }
        let cols = a11.cols + a12.cols;
        let top = a11
            .data
            .iter()
            .zip(&a12.data)
            .map(|(l, r)| l | (r << a11.cols));
        let bottom = a21
            .data
            .iter()
            .zip(&a22.data)
            .map(|(l, r)| l | (r << a21.cols));
        Ok(Self::from_row_words(
            cols,
            top.chain(bottom).collect::<Vec<_>>(),
        ))
    }

    /// Writes the row-text format: one line per row, `'0'`/`'1'` characters.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            s.push_str(&self.row(r).to_string());
            s.push('\n');
        }
        s
    }

    /// Rows joined by `/`, as used on single-line records.
    pub fn to_compact(&self) -> String {
        (0..self.rows)
            .map(|r| self.row(r).to_string())
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows).map(|r| self.row(r).to_string()).collect()
    }
}

/// In-place Gauss-Jordan elimination on packed rows, always choosing the
/// lowest-index available row as pivot. Pivot rows end up first and in column
/// order. `companion` receives the same row operations. Returns the pivot
/// columns.
pub(crate) fn row_reduce(
    rows: &mut [u64],
    cols: usize,
    mut companion: Option<&mut Vec<u64>>,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        let bit = 1u64 << c;
        let Some(p) = (next..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(next, p);
        if let Some(comp) = companion.as_deref_mut() {
            comp.swap(next, p);
        }
        let pivot_row = rows[next];
        let pivot_comp = companion.as_deref().map(|c| c[next]);
        for r in 0..rows.len() {
            if r != next && rows[r] & bit != 0 {
                rows[r] ^= pivot_row;
                if let (Some(comp), Some(pc)) = (companion.as_deref_mut(), pivot_comp) {
                    comp[r] ^= pc;
                }
            }
        }
        pivots.push(c);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a list of vectors of equal length.
pub fn rank_of(vectors: &[BitVector]) -> usize {
    let cols = vectors.first().map_or(0, |v| v.len());
    let mut rows: Vec<u64> = vectors.iter().map(|v| v.bits()).collect();
    row_reduce(&mut rows, cols, None).len()
}

pub fn are_independent(vectors: &[BitVector]) -> bool {
    rank_of(vectors) == vectors.len()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[BitVector], v: &BitVector) -> bool {
    let mut all: Vec<BitVector> = basis.to_vec();
    let before = rank_of(&all);
    all.push(*v);
    rank_of(&all) == before
}

impl Add for &BitMatrix {
    type Output = BitMatrix;

    fn add(self, rhs: &BitMatrix) -> BitMatrix {
        self.try_add(rhs).expect("matrix dimensions must agree")
    }
}

impl Mul for &BitMatrix {
    type Output = BitMatrix;

    fn mul(self, rhs: &BitMatrix) -> BitMatrix {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BitMatrix[{}x{}]({})",
            self.rows,
            self.cols,
            self.to_compact()
        )
    }
}

impl FromStr for BitMatrix {
    type Err = Gf2Error;

    /// Parses the row-text format. Blank lines are skipped; ragged rows are an error.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Vec<BitVector> = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        let Some(first) = rows.first() else {
            return Err(Gf2Error::Parse("empty matrix".into()));
        };
        let cols = first.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Gf2Error::Parse(format!(
                "ragged rows: row 1 has {cols} entries but row {} has {}",
                i + 1,
                r.len()
            )));
        }
        Self::from_rows(cols, &rows)
    }
}
