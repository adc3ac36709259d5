use super::{extend_by_one, underline, CodeBasis, CodesError, SelfDualCode};
use crate::gf2::{extend_isometry, BitMatrix, BitVector, IsometrySpec};

/// A basis of `code` summing to the all-ones vector.
///
/// Starts from the canonical rows with `j = Σ_{i∈S} zᵢ`; while some `t ∉ S`
/// remains, replaces `z_s` by `z_s + z_t` for a fixed `s ∈ S` and adds `t` to `S`.
pub fn sum_j_basis(code: &SelfDualCode) -> CodeBasis {
    let len = code.length();
    let mut z = code.rows().to_vec();
    let g = BitMatrix::from_columns(len, &z).expect("rows have the code length");
    let coeffs = g
        .solve(&BitVector::ones(len))
        .expect("matching lengths")
        .expect("self-dual codes contain j");
    let mut in_s: Vec<bool> = (0..z.len()).map(|i| coeffs.get(i)).collect();
    let s = in_s.iter().position(|&b| b).expect("j is nonzero");
    while let Some(t) = in_s.iter().position(|&b| !b) {
        z[s] = z[s] + z[t];
        in_s[t] = true;
    }
    let basis = CodeBasis::new(code.clone(), z).expect("elementary operations keep a basis");
    debug_assert_eq!(basis.sum(), BitVector::ones(len));
    basis
}

/// A sum-`j` basis whose only vector ending in 1 is the last one.
///
/// The count ending in 1 is odd; pairs `a, b` of the others get the fixed
/// `y_t` added to both, which keeps the sum. Since `yᵢᵀyⱼ = 0` in the code,
/// `underline(yᵢ)ᵀunderline(yⱼ)` is the product of the last entries, so every
/// basis produced here has the same underlined Gram matrix.
fn normalized_basis(code: &SelfDualCode) -> CodeBasis {
    let mut y = sum_j_basis(code).vectors;
    let last = code.length() - 1;
    let ones: Vec<usize> = (0..y.len()).filter(|&i| y[i].get(last)).collect();
    let t = ones[0];
    for pair in ones[1..].chunks(2) {
        for &i in pair {
            y[i] = y[i] + y[t];
        }
    }
    let k = y.len();
    y.swap(t, k - 1);
    CodeBasis::new(code.clone(), y).expect("elementary operations keep a basis")
}

fn permutation_matrices(n: usize) -> Vec<BitMatrix> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<BitMatrix>) {
        if k == perm.len() {
            let mut p = BitMatrix::zeros(perm.len(), perm.len());
            for (c, &r) in perm.iter().enumerate() {
                p.set(r, c, true);
            }
            out.push(p);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, &mut out);
    out
}

fn maps_onto(p: &BitMatrix, from: &SelfDualCode, to: &SelfDualCode) -> Result<bool, CodesError> {
    let n = p.rows();
    Ok(&p.transpose() * p == BitMatrix::identity(n)
        && from.code().map(&extend_by_one(p))? == *to.code())
}

/// An orthogonal `P` with `(P ⊕ 1)C = C̃`.
///
/// For `n = 3` the orthogonal group consists of the permutation matrices, which
/// are searched directly. Otherwise both codes get normalized bases with equal
/// underlined Gram matrices and underlined sum `jₙ`, and the map between the
/// underlined bases is extended to an orthogonal matrix.
pub fn orthogonal_witness(c: &SelfDualCode, ct: &SelfDualCode) -> Result<BitMatrix, CodesError> {
    if c.length() != ct.length() {
        return Err(CodesError::LengthMismatch {
            left: c.length(),
            right: ct.length(),
        });
    }
    let n = c.n();
    if n < 3 || n % 2 == 0 {
        return Err(CodesError::EvenDimension { n });
    }
    if n == 3 {
        for p in permutation_matrices(3) {
            if maps_onto(&p, c, ct)? {
                return Ok(p);
            }
        }
    }
    let b = normalized_basis(c);
    let bt = normalized_basis(ct);
    let spec = IsometrySpec::new(
        n,
        b.vectors.iter().map(underline).collect(),
        bt.vectors.iter().map(underline).collect(),
    )?;
    let p = extend_isometry(&spec)?;
    if !maps_onto(&p, c, ct)? {
        return Err(CodesError::WitnessPostCheckFailed);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::enumerate_selfdual_codes;
    use crate::gf2::are_independent;

    #[test]
    fn sum_j_basis_examples() {
        for length in [4, 6, 8, 10] {
            for c in enumerate_selfdual_codes(length).unwrap() {
                let b = sum_j_basis(&c);
                assert_eq!(b.sum(), BitVector::ones(length));
                assert!(are_independent(&b.vectors));
                assert!(b.vectors.iter().all(|v| c.contains(v)));
            }
        }
        let c1 = SelfDualCode::from_generators(4, &["1100".parse().unwrap(), BitVector::ones(4)])
            .unwrap();
        let b = sum_j_basis(&c1);
        let mut vs = b.vectors.clone();
        vs.sort();
        assert_eq!(vs, vec!["1100".parse().unwrap(), "0011".parse().unwrap()]);
    }

    #[test]
    fn normalized_bases_share_gram_and_sum() {
        for length in [4, 6, 8] {
            let k = length / 2;
            for c in enumerate_selfdual_codes(length).unwrap() {
                let b = normalized_basis(&c);
                let u = b.underlined();
                for i in 0..k {
                    for j in 0..k {
                        assert_eq!(u[i].dot(&u[j]).unwrap(), i == k - 1 && j == k - 1);
                    }
                }
                assert_eq!(BitVector::sum(length - 1, &u), BitVector::ones(length - 1));
            }
        }
    }

    #[test]
    fn witnesses_for_all_pairs_up_to_n5() {
        for length in [4, 6] {
            let codes = enumerate_selfdual_codes(length).unwrap();
            for c in &codes {
                for ct in &codes {
                    let p = orthogonal_witness(c, ct).unwrap();
                    assert_eq!(&p.transpose() * &p, BitMatrix::identity(length - 1));
                    assert_eq!(c.code().map(&extend_by_one(&p)).unwrap(), *ct.code());
                }
            }
        }
    }

    #[test]
    fn witnesses_at_n7_and_n9_sample() {
        for length in [8, 10] {
            let codes = enumerate_selfdual_codes(length).unwrap();
            let first = &codes[0];
            for ct in codes.iter().step_by(7) {
                let p = orthogonal_witness(first, ct).unwrap();
                assert!(maps_onto(&p, first, ct).unwrap());
            }
        }
    }

    #[test]
    fn mismatched_lengths() {
        let a = &enumerate_selfdual_codes(4).unwrap()[0];
        let b = &enumerate_selfdual_codes(6).unwrap()[0];
        assert!(matches!(
            orthogonal_witness(a, b),
            Err(CodesError::LengthMismatch { left: 4, right: 6 })
        ));
    }
}
