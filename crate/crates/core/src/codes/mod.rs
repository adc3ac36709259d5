//! Binary self-dual codes of length `n + 1` (`n` odd) and the matching
//! families of vertices of Γₙ.

mod enumerate;
mod family;
mod witness;

pub use enumerate::{enumerate_selfdual_codes, MAX_ENUMERATION_LENGTH};
pub use family::{
    all_bases, code_from_matrix, code_from_matrix_randomized, family_from_code,
    family_inverse_closed, sd_membership, sd_membership_distances, verify_partition, CodeBasis,
    CodeFamily, PartitionReport, MAX_FAMILY_DIM,
};
pub use witness::{orthogonal_witness, sum_j_basis};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gamma::GammaError;
use crate::gf2::{in_span, rank_of, BitMatrix, BitVector, Gf2Error};

#[derive(Debug, Error)]
pub enum CodesError {
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error("{what} = {value} exceeds the cap {max}")]
    TooLarge {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("self-dual codes need even length, got {length}")]
    OddLength { length: usize },
    #[error("n must be odd and at least 3, got {n}")]
    EvenDimension { n: usize },
    #[error("code is not self-dual")]
    NotSelfDual,
    #[error("matrix is not in SD_n")]
    NotInSD,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("orthogonal witness failed its post-check")]
    WitnessPostCheckFailed,
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// `(x; xᵀx)`.
pub fn bar(x: &BitVector) -> BitVector {
    x.push(x.self_dot())
}

/// Drops the last entry.
pub fn underline(y: &BitVector) -> BitVector {
    y.truncate_last()
}

/// `n` such that self-dual codes of this length correspond to Γₙ.
pub(crate) fn graph_dim(length: usize) -> usize {
    length - 1
}

/// A binary linear code, stored by its reduced row echelon generator matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearCode {
    length: usize,
    rows: Vec<BitVector>,
}

impl LinearCode {
    /// The span of `generators`, which may be dependent.
    pub fn span(length: usize, generators: &[BitVector]) -> Result<Self, CodesError> {
        let g = BitMatrix::from_rows(length, generators)?;
        let rref = g.rref();
        Ok(Self {
            length,
            rows: (0..rref.rows()).map(|r| rref.row(r)).collect(),
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical generator rows (reduced row echelon form).
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.length && in_span(&self.rows, v)
    }

    pub fn dual(&self) -> Self {
        let basis = if self.rows.is_empty() {
            (0..self.length)
                .map(|i| BitVector::unit(self.length, i))
                .collect()
        } else {
            BitMatrix::from_rows(self.length, &self.rows)
                .expect("rows have the code length")
                .null_space()
        };
        Self::span(self.length, &basis).expect("null space vectors have the code length")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, u)| self.rows[i..].iter().all(|v| !u.dot_unchecked(v)))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.length && self.is_self_orthogonal()
    }

    /// Every codeword, in the order of the binary counter over the canonical rows.
    pub fn codewords(&self) -> Vec<BitVector> {
        let k = self.dim();
        assert!(k < 32, "too many codewords to list");
        (0u64..1 << k)
            .map(|c| {
                BitVector::sum(
                    self.length,
                    self.rows
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| (c >> i) & 1 == 1)
                        .map(|(_, r)| r),
                )
            })
            .collect()
    }

    /// `{Mc : c ∈ C}` for a square `M`.
    pub fn map(&self, m: &BitMatrix) -> Result<Self, CodesError> {
        let images = self
            .rows
            .iter()
            .map(|r| m.mul_vec(r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::span(self.length, &images)
    }

    pub fn to_text(&self) -> String {
        self.rows.iter().map(|r| format!("{r}\n")).collect()
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "LinearCode[{}]", rows.join(","))
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&rows.join("\n"))
    }
}

/// One generator row per line; the rows need not be independent.
impl FromStr for LinearCode {
    type Err = CodesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.parse::<BitVector>()
                    .map_err(|e| CodesError::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let length = rows
            .first()
            .ok_or_else(|| CodesError::Parse("empty code".into()))?
            .len();
        if let Some(bad) = rows.iter().find(|r| r.len() != length) {
            return Err(CodesError::Parse(format!(
                "row of length {} in a code of length {length}",
                bad.len()
            )));
        }
        Self::span(length, &rows)
    }
}

/// A self-dual code; always contains the all-ones vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SelfDualCode {
    inner: LinearCode,
}

impl SelfDualCode {
    pub fn new(code: LinearCode) -> Result<Self, CodesError> {
        if code.length % 2 == 1 {
            return Err(CodesError::OddLength {
                length: code.length,
            });
        }
        if !code.is_self_dual() {
            return Err(CodesError::NotSelfDual);
        }
        if !code.contains(&BitVector::ones(code.length)) {
            return Err(CodesError::InvariantViolated(
                "self-dual code without the all-ones vector".into(),
            ));
        }
        Ok(Self { inner: code })
    }

    pub fn from_generators(length: usize, generators: &[BitVector]) -> Result<Self, CodesError> {
        Self::new(LinearCode::span(length, generators)?)
    }

    pub fn code(&self) -> &LinearCode {
        &self.inner
    }

    pub fn length(&self) -> usize {
        self.inner.length
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// `n = length − 1`, the size of the matching vertices.
    pub fn n(&self) -> usize {
        graph_dim(self.inner.length)
    }

    pub fn rows(&self) -> &[BitVector] {
        self.inner.rows()
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.inner.contains(v)
    }
}

impl fmt::Display for SelfDualCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl FromStr for SelfDualCode {
    type Err = CodesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(s.parse()?)
    }
}

/// Parses blank-line-separated codes.
pub fn parse_codes(text: &str) -> Result<Vec<SelfDualCode>, CodesError> {
    let mut codes = Vec::new();
    let mut block = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.trim().is_empty() {
            if !block.is_empty() {
                codes.push(block.parse()?);
                block.clear();
            }
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    Ok(codes)
}

/// Writes codes in the blank-line-separated text format.
pub fn format_codes<'a>(codes: impl IntoIterator<Item = &'a SelfDualCode>) -> String {
    codes
        .into_iter()
        .map(|c| c.code().to_text())
        .collect::<Vec<_>>()
        .join("\n")
}

/// `P ⊕ 1`.
pub fn extend_by_one(p: &BitMatrix) -> BitMatrix {
    p.direct_sum(&BitMatrix::identity(1))
}

pub(crate) fn check_rank(vectors: &[BitVector], k: usize) -> bool {
    rank_of(vectors) == k
}
