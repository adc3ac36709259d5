use super::{are_independent, in_span, BitMatrix, BitVector, Gf2Error};

/// Largest solution coset searched exhaustively when the cheap candidates fail.
const MAX_COSET_DIM: usize = 24;

/// A linear map on `U = span(domain)` given by `domain[i] ↦ images[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometrySpec {
    pub n: usize,
    pub domain: Vec<BitVector>,
    pub images: Vec<BitVector>,
}

impl IsometrySpec {
    /// Validates lengths, independence and preservation of dot products.
    pub fn new(n: usize, domain: Vec<BitVector>, images: Vec<BitVector>) -> Result<Self, Gf2Error> {
        let spec = Self { n, domain, images };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), Gf2Error> {
        if self.domain.len() != self.images.len() {
            return Err(Gf2Error::InvalidIsometry(format!(
                "{} domain vectors but {} images",
                self.domain.len(),
                self.images.len()
            )));
        }
        for v in self.domain.iter().chain(&self.images) {
            if v.len() != self.n {
                return Err(Gf2Error::DimensionMismatch {
                    expected: self.n,
                    found: v.len(),
                });
            }
        }
        if !are_independent(&self.domain) {
            return Err(Gf2Error::InvalidIsometry(
                "domain vectors are dependent".into(),
            ));
        }
        if !are_independent(&self.images) {
            return Err(Gf2Error::InvalidIsometry(
                "image vectors are dependent".into(),
            ));
        }
        for (i, (u, su)) in self.domain.iter().zip(&self.images).enumerate() {
            for (v, sv) in self.domain[i..].iter().zip(&self.images[i..]) {
                if u.dot_unchecked(v) != su.dot_unchecked(sv) {
                    return Err(Gf2Error::InvalidIsometry(
                        "dot products are not preserved".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Image of a vector of `U` under the linear map.
    fn apply(&self, u: &BitVector) -> Option<BitVector> {
        let d = BitMatrix::from_columns(self.n, &self.domain).ok()?;
        let coeffs = d.solve(u).ok()??;
        Some(BitVector::sum(
            self.n,
            coeffs.support().iter().map(|&i| &self.images[i]),
        ))
    }
}

/// Extends a dot-product-preserving injective map on a subspace to an orthogonal matrix.
///
/// The map extends exactly when `j ∈ U ⇔ j ∈ σ(U)` and `σ(j) = j` whenever
/// `j ∈ U`. Once `j ↦ j` is part of the map, the constraint `w′ᵀw′ = wᵀw`
/// on a new image equals `w′ᵀj = wᵀj`, so every step is a linear system.
pub fn extend_isometry(spec: &IsometrySpec) -> Result<BitMatrix, Gf2Error> {
    spec.validate()?;
    let n = spec.n;
    let j = BitVector::ones(n);
    let j_in_u = in_span(&spec.domain, &j);
    if j_in_u != in_span(&spec.images, &j) {
        return Err(Gf2Error::JConditionViolated);
    }
    let mut domain = spec.domain.clone();
    let mut images = spec.images.clone();
    if j_in_u {
        if spec.apply(&j) != Some(j) {
            return Err(Gf2Error::JConditionViolated);
        }
    } else {
        domain.push(j);
        images.push(j);
    }

    for i in 0..n {
        if domain.len() == n {
            break;
        }
        let w = BitVector::unit(n, i);
        if in_span(&domain, &w) {
            continue;
        }
        let image = next_image(&domain, &images, &w).ok_or(Gf2Error::NoExtension)?;
        domain.push(w);
        images.push(image);
    }

    let d = BitMatrix::from_columns(n, &domain)?;
    let e = BitMatrix::from_columns(n, &images)?;
    let p = &e * &d.inverse().map_err(|_| Gf2Error::NoExtension)?;
    let orthogonal = &p.transpose() * &p == BitMatrix::identity(n);
    let maps = spec
        .domain
        .iter()
        .zip(&spec.images)
        .all(|(u, v)| p.mul_vec(u).ok() == Some(*v));
    if !orthogonal || !maps {
        return Err(Gf2Error::NoExtension);
    }
    Ok(p)
}

/// Some `w′ ∉ span(images)` with `w′ᵀσ(u) = wᵀu` for every `u` in `domain`.
fn next_image(domain: &[BitVector], images: &[BitVector], w: &BitVector) -> Option<BitVector> {
    let n = w.len();
    let system = BitMatrix::from_rows(n, images).ok()?;
    let rhs = BitVector::from_bits(
        domain.len(),
        domain
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, u)| acc | (w.dot_unchecked(u) as u64) << k),
    );
    let w0 = system.solve(&rhs).ok()??;
    let kernel = system.null_space();
    let admissible = |c: &BitVector| !in_span(images, c);

    if admissible(&w0) {
        return Some(w0);
    }
    for (a, ka) in kernel.iter().enumerate() {
        let c = w0 + *ka;
        if admissible(&c) {
            return Some(c);
        }
        for kb in &kernel[a + 1..] {
            let c = c + *kb;
            if admissible(&c) {
                return Some(c);
            }
        }
    }
    if kernel.len() > MAX_COSET_DIM {
        return None;
    }
    // Gray-code walk over the whole coset.
    let mut c = w0;
    for step in 1u64..1 << kernel.len() {
        c += kernel[step.trailing_zeros() as usize];
        if admissible(&c) {
            return Some(c);
        }
    }
    None
}
