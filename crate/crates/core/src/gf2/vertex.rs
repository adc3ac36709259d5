use std::fmt;

use super::{BitMatrix, BitVector, Gf2Error, SymMatrix};

/// An invertible symmetric matrix together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    mat: SymMatrix,
    inv: SymMatrix,
}

impl Vertex {
    pub fn new(mat: SymMatrix) -> Result<Self, Gf2Error> {
        let inv = mat.inverse()?;
        Ok(Self { mat, inv })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mat: SymMatrix::identity(n),
            inv: SymMatrix::identity(n),
        }
    }

    /// Trusts the caller that `inv` is the inverse of `mat`.
    pub(crate) fn from_parts(mat: SymMatrix, inv: SymMatrix) -> Self {
        debug_assert_eq!(
            mat.as_matrix() * inv.as_matrix(),
            BitMatrix::identity(mat.n())
        );
        Self { mat, inv }
    }

    pub fn from_strs(rows: &[&str]) -> Result<Self, Gf2Error> {
        Self::new(SymMatrix::from_strs(rows)?)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.mat.n()
    }

    #[inline]
    pub fn mat(&self) -> &SymMatrix {
        &self.mat
    }

    #[inline]
    pub fn inv(&self) -> &SymMatrix {
        &self.inv
    }

    /// `A + xxᵀ`, if it is invertible, with its inverse `A⁻¹ + (A⁻¹x)(A⁻¹x)ᵀ`.
    pub fn rank_one_step(&self, x: &BitVector) -> Option<Vertex> {
        if self.inv.quad(x) {
            return None;
        }
        let y = self.inv.as_matrix().mul_vec(x).ok()?;
        let mut mat = self.mat.clone();
        mat.add_square(x);
        let mut inv = self.inv.clone();
        inv.add_square(&y);
        Some(Self::from_parts(mat, inv))
    }

    /// The inverse matrix as a vertex.
    pub fn inverted(&self) -> Vertex {
        Self {
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({})", self.mat.to_compact())
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.mat, f)
    }
}

impl TryFrom<SymMatrix> for Vertex {
    type Error = Gf2Error;

    fn try_from(m: SymMatrix) -> Result<Self, Self::Error> {
        Self::new(m)
    }
}
