use super::{BitMatrix, Gf2Error, Vertex};

fn check_update_shapes(a: &Vertex, x: &BitMatrix, y: &BitMatrix) -> Result<(), Gf2Error> {
    for m in [x, y] {
        if m.rows() != a.n() {
            return Err(Gf2Error::DimensionMismatch {
                expected: a.n(),
                found: m.rows(),
            });
        }
    }
    if x.cols() != y.cols() {
        return Err(Gf2Error::DimensionMismatch {
            expected: x.cols(),
            found: y.cols(),
        });
    }
    Ok(())
}

/// `I_r + YᵀA⁻¹X`.
fn capacitance(a: &Vertex, x: &BitMatrix, y: &BitMatrix) -> BitMatrix {
    let ainv_x = a.inv().as_matrix() * x;
    &BitMatrix::identity(x.cols()) + &(&y.transpose() * &ainv_x)
}

/// `det(A + XYᵀ) = det(A) · det(I_r + YᵀA⁻¹X)` for `n×r` blocks `X`, `Y`.
pub fn det_update(a: &Vertex, x: &BitMatrix, y: &BitMatrix) -> Result<bool, Gf2Error> {
    check_update_shapes(a, x, y)?;
    capacitance(a, x, y).det()
}

/// `(A + XYᵀ)⁻¹ = A⁻¹ + A⁻¹X (I_r + YᵀA⁻¹X)⁻¹ YᵀA⁻¹`.
pub fn inverse_update(a: &Vertex, x: &BitMatrix, y: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
    check_update_shapes(a, x, y)?;
    let small_inv = capacitance(a, x, y).inverse()?;
    let ainv = a.inv().as_matrix();
    let left = ainv * x;
    let right = &y.transpose() * ainv;
    Ok(ainv + &(&(&left * &small_inv) * &right))
}

/// `det [[A11, A12], [A21, A22]] = det(A22) · det(A11 + A12 A22⁻¹ A21)`.
pub fn schur_det(
    a11: &BitMatrix,
    a12: &BitMatrix,
    a21: &BitMatrix,
    a22: &BitMatrix,
) -> Result<bool, Gf2Error> {
    if !a11.is_square() || !a22.is_square() {
        return Err(Gf2Error::NotSquare {
            rows: a11.rows(),
            cols: a11.cols(),
        });
    }
    if a12.rows() != a11.rows() || a12.cols() != a22.cols() {
        return Err(Gf2Error::DimensionMismatch {
            expected: a11.rows(),
            found: a12.rows(),
        });
    }
    if a21.rows() != a22.rows() || a21.cols() != a11.cols() {
        return Err(Gf2Error::DimensionMismatch {
            expected: a22.rows(),
            found: a21.rows(),
        });
    }
    let a22_inv = a22.inverse()?;
    let schur = a11 + &(&(a12 * &a22_inv) * a21);
    schur.det()
}
