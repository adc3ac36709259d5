use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use super::{Gf2Error, MAX_DIM};

/// A column vector over GF(2) of length at most 64, packed into one word.
///
/// Coordinate `i` (zero-based) lives in bit `i`. Bits at positions `>= len`
/// are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: u8,
    bits: u64,
}

#[inline]
pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_DIM, "vector length {len} exceeds {MAX_DIM}");
        Self {
            len: len as u8,
            bits: 0,
        }
    }

    /// The all-ones vector `j`.
    pub fn ones(len: usize) -> Self {
        Self::from_bits(len, u64::MAX)
    }

    /// Unit vector with a one at zero-based position `i`.
    pub fn unit(len: usize, i: usize) -> Self {
        assert!(i < len, "unit index {i} out of range for length {len}");
        Self::from_bits(len, 1 << i)
    }

    /// Builds a vector from a packed word; bits beyond `len` are discarded.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= MAX_DIM, "vector length {len} exceeds {MAX_DIM}");
        Self {
            len: len as u8,
            bits: bits & mask(len),
        }
    }

    /// Vector with ones exactly at the listed zero-based positions.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, !v.get(i));
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len(),
            "index {i} out of range for length {}",
            self.len
        );
        (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len(),
            "index {i} out of range for length {}",
            self.len
        );
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// The standard dot product `uᵀv` over GF(2).
    pub fn dot(&self, other: &Self) -> Result<bool, Gf2Error> {
        if self.len != other.len {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.dot_unchecked(other))
    }

    #[inline]
    pub(crate) fn dot_unchecked(&self, other: &Self) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// `xᵀx`, which over GF(2) is the parity of the weight.
    #[inline]
    pub fn self_dot(&self) -> bool {
        self.weight() & 1 == 1
    }

    /// Appends one coordinate at the end.
    pub fn push(&self, bit: bool) -> Self {
        let mut out = Self::zeros(self.len() + 1);
        out.bits = self.bits | ((bit as u64) << self.len);
        out
    }

    /// Drops the last coordinate.
    pub fn truncate_last(&self) -> Self {
        assert!(self.len > 0, "cannot drop a coordinate of an empty vector");
        Self::from_bits(self.len() - 1, self.bits)
    }

    /// Concatenation `(self; other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let len = self.len() + other.len();
        Self::from_bits(len, self.bits | (other.bits << self.len))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Positions holding a one, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.get(i)).collect()
    }

    /// Sum of a non-empty family of vectors of equal length.
    pub fn sum<'a>(len: usize, vs: impl IntoIterator<Item = &'a BitVector>) -> Self {
        vs.into_iter().fold(Self::zeros(len), |acc, v| acc + *v)
    }
}

impl Add for BitVector {
    type Output = BitVector;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.len, rhs.len, "vector length mismatch");
        Self {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl AddAssign for BitVector {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Gf2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.len() > MAX_DIM {
            return Err(Gf2Error::TooLarge {
                n: s.len(),
                max: MAX_DIM,
            });
        }
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Gf2Error::Parse(format!(
                        "unexpected character {other:?} in bit string"
                    )))
                }
            }
        }
        Ok(v)
    }
}
