use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use rand::Rng;

use super::{BitMatrix, BitVector, Gf2Error};

/// A symmetric square matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    inner: BitMatrix,
}

impl SymMatrix {
    pub fn new(inner: BitMatrix) -> Result<Self, Gf2Error> {
        if !inner.is_square() {
            return Err(Gf2Error::NotSquare {
                rows: inner.rows(),
                cols: inner.cols(),
            });
        }
        if !inner.is_symmetric() {
            return Err(Gf2Error::NotSymmetric);
        }
        Ok(Self { inner })
    }

    /// Wraps a matrix the caller knows to be symmetric.
    pub(crate) fn new_unchecked(inner: BitMatrix) -> Self {
        debug_assert!(inner.is_symmetric());
        Self { inner }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            inner: BitMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: BitMatrix::identity(n),
        }
    }

    pub fn ones(n: usize) -> Self {
        Self {
            inner: BitMatrix::ones(n, n),
        }
    }

    /// `xxᵀ`, written `x²`.
    pub fn square(x: &BitVector) -> Self {
        Self {
            inner: BitMatrix::outer(x),
        }
    }

    /// `x∘y = xyᵀ + yxᵀ`.
    pub fn circ(x: &BitVector, y: &BitVector) -> Self {
        Self {
            inner: BitMatrix::circ(x, y),
        }
    }

    /// `Σ xᵢ²`.
    pub fn sum_of_squares<'a>(n: usize, xs: impl IntoIterator<Item = &'a BitVector>) -> Self {
        let mut m = Self::zeros(n);
        for x in xs {
            m.add_square(x);
        }
        m
    }

    pub fn from_strs(rows: &[&str]) -> Result<Self, Gf2Error> {
        Self::new(BitMatrix::from_strs(rows)?)
    }

    /// Builds from upper-triangle bits in row-major `(i, j), i ≤ j` order.
    pub fn from_upper_bits(n: usize, bits: u64) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                if (bits >> k) & 1 == 1 {
                    m.set(i, j, true);
                    m.set(j, i, true);
                }
                k += 1;
            }
        }
        Self { inner: m }
    }

    /// Inverse of [`SymMatrix::from_upper_bits`].
    pub fn upper_bits(&self) -> u64 {
        let n = self.n();
        let mut bits = 0u64;
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                bits |= (self.get(i, j) as u64) << k;
                k += 1;
            }
        }
        bits
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.inner.rows()
    }

    #[inline]
    pub fn as_matrix(&self) -> &BitMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> BitMatrix {
        self.inner
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.inner.get(r, c)
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.inner.rank()
    }

    pub fn det(&self) -> bool {
        self.rank() == self.n()
    }

    pub fn trace(&self) -> bool {
        self.inner.trace()
    }

    pub fn inverse(&self) -> Result<Self, Gf2Error> {
        Ok(Self {
            inner: self.inner.inverse()?,
        })
    }

    /// The quadratic value `xᵀMx`, which equals `Σ mᵢᵢxᵢ` in characteristic two.
    pub fn quad(&self, x: &BitVector) -> bool {
        self.inner.diagonal().dot_unchecked(x)
    }

    /// The bilinear value `xᵀMy`.
    pub fn bilinear(&self, x: &BitVector, y: &BitVector) -> Result<bool, Gf2Error> {
        x.dot(&self.inner.mul_vec(y)?)
    }

    /// `PMPᵀ`.
    pub fn congruent(&self, p: &BitMatrix) -> Result<Self, Gf2Error> {
        let pm = p.try_mul(&self.inner)?;
        Ok(Self {
            inner: pm.try_mul(&p.transpose())?,
        })
    }

    /// In-place `M += xxᵀ`.
    pub fn add_square(&mut self, x: &BitVector) {
        assert_eq!(x.len(), self.n(), "vector length mismatch");
        for r in x.support() {
            self.inner.xor_row(r, x.bits());
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, Gf2Error> {
        if self.n() != rhs.n() {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.n(),
                found: rhs.n(),
            });
        }
        Ok(Self {
            inner: &self.inner + &rhs.inner,
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.direct_sum(&other.inner),
        }
    }

    pub fn to_text(&self) -> String {
        self.inner.to_text()
    }

    pub fn to_compact(&self) -> String {
        self.inner.to_compact()
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.inner.row_strings()
    }
}

impl Add for &SymMatrix {
    type Output = SymMatrix;

    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        self.try_add(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.inner, f)
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix({})", self.inner.to_compact())
    }
}

impl FromStr for SymMatrix {
    type Err = Gf2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(s.parse()?)
    }
}

impl TryFrom<BitMatrix> for SymMatrix {
    type Error = Gf2Error;

    fn try_from(m: BitMatrix) -> Result<Self, Self::Error> {
        Self::new(m)
    }
}

/// Every diagonal entry is zero.
pub fn is_alternate(m: &SymMatrix) -> bool {
    m.inner.diagonal().is_zero()
}

/// Witness that `M = Q (J_k ⊕ 0) Qᵀ` for a permutation matrix `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R1Tr0Form {
    /// `Q eₜ = e_{perm[t]}`: the support of `M` first, then the rest, both ascending.
    pub perm: Vec<usize>,
    pub k: usize,
}

impl R1Tr0Form {
    pub fn permutation_matrix(&self) -> BitMatrix {
        let n = self.perm.len();
        let mut q = BitMatrix::zeros(n, n);
        for (t, &p) in self.perm.iter().enumerate() {
            q.set(p, t, true);
        }
        q
    }
}

/// Recognizes rank-one, trace-zero symmetric matrices.
pub fn is_r1tr0(m: &SymMatrix) -> Option<R1Tr0Form> {
    if m.rank() != 1 || m.trace() {
        return None;
    }
    // A rank-one symmetric matrix over GF(2) is x² where x is any nonzero row.
    let x = (0..m.n()).map(|r| m.inner.row(r)).find(|r| !r.is_zero())?;
    let support = x.support();
    let k = support.len();
    let perm = support
        .iter()
        .copied()
        .chain((0..m.n()).filter(|i| !x.get(*i)))
        .collect();
    Some(R1Tr0Form { perm, k })
}

/// Shape of `PMPᵀ` produced by [`congruence_canonical`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalForm {
    Zero,
    /// `I_rank ⊕ 0`.
    Identity {
        rank: usize,
    },
    /// `H ⊕ … ⊕ H ⊕ 0` with `pairs` copies of `H = [[0,1],[1,0]]`.
    Hyperbolic {
        pairs: usize,
    },
}

impl CanonicalForm {
    pub fn rank(&self) -> usize {
        match *self {
            CanonicalForm::Zero => 0,
            CanonicalForm::Identity { rank } => rank,
            CanonicalForm::Hyperbolic { pairs } => 2 * pairs,
        }
    }

    pub fn matrix(&self, n: usize) -> SymMatrix {
        let mut m = BitMatrix::zeros(n, n);
        match *self {
            CanonicalForm::Zero => {}
            CanonicalForm::Identity { rank } => {
                for i in 0..rank {
                    m.set(i, i, true);
                }
            }
            CanonicalForm::Hyperbolic { pairs } => {
                for k in 0..pairs {
                    m.set(2 * k, 2 * k + 1, true);
                    m.set(2 * k + 1, 2 * k, true);
                }
            }
        }
        SymMatrix { inner: m }
    }
}

/// Change of basis with `T · diag(1, H) · Tᵀ = I₃`.
pub(crate) const H_REPAIR: [u64; 3] = [0b011, 0b101, 0b111];

/// Working state for symmetric elimination: `m` always equals `P · M₀ · Pᵀ`.
struct Congruence {
    m: Vec<u64>,
    p: Vec<u64>,
}

impl Congruence {
    fn get(&self, r: usize, c: usize) -> bool {
        (self.m[r] >> c) & 1 == 1
    }

    /// Row and column `dst += src`.
    fn add(&mut self, src: usize, dst: usize) {
        self.m[dst] ^= self.m[src];
        for row in self.m.iter_mut() {
            *row ^= ((*row >> src) & 1) << dst;
        }
        self.p[dst] ^= self.p[src];
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap(a, b);
        for row in self.m.iter_mut() {
            let (x, y) = ((*row >> a) & 1, (*row >> b) & 1);
            if x != y {
                *row ^= (1 << a) | (1 << b);
            }
        }
        self.p.swap(a, b);
    }
}

/// Finds invertible `P` with `PMPᵀ` in canonical form.
///
/// Diagonal pivots are taken first; once the remaining block is alternate,
/// hyperbolic blocks are split off. Any `[1] ⊕ H` left over in a
/// nonalternate input is folded into `I₃` with [`H_REPAIR`].
pub fn congruence_canonical(m: &SymMatrix) -> (BitMatrix, CanonicalForm) {
    let n = m.n();
    let mut st = Congruence {
        m: m.inner.row_words().to_vec(),
        p: BitMatrix::identity(n).row_words().to_vec(),
    };
    let mut k = 0;
    let mut ones = 0;
    let mut pairs = 0;
    while k < n {
        if let Some(i) = (k..n).find(|&i| st.get(i, i)) {
            st.swap(i, k);
            for j in k + 1..n {
                if st.get(j, k) {
                    st.add(k, j);
                }
            }
            ones += 1;
            k += 1;
            continue;
        }
        let Some((i, j)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| st.get(i, j))
        else {
            break;
        };
        st.swap(i, k);
        // `j > i ≥ k`, so the swap above left column `j` in place.
        st.swap(j, k + 1);
        for l in k + 2..n {
            if st.get(l, k) {
                st.add(k + 1, l);
            }
        }
        for l in k + 2..n {
            if st.get(l, k + 1) {
                st.add(k, l);
            }
        }
        pairs += 1;
        k += 2;
    }
    let form = if ones == 0 && pairs == 0 {
        CanonicalForm::Zero
    } else if ones == 0 {
        CanonicalForm::Hyperbolic { pairs }
    } else {
        // Layout is I_ones ⊕ H^pairs ⊕ 0; fold each H into the block before it.
        let mut last_one = ones - 1;
        for _ in 0..pairs {
            let idx = [last_one, last_one + 1, last_one + 2];
            let old = idx.map(|i| st.p[i]);
            for (t, &row) in H_REPAIR.iter().enumerate() {
                st.p[idx[t]] = (0..3)
                    .filter(|s| (row >> s) & 1 == 1)
                    .fold(0, |acc, s| acc ^ old[s]);
            }
            last_one += 2;
        }
        CanonicalForm::Identity {
            rank: ones + 2 * pairs,
        }
    };
    let p = BitMatrix::from_row_words(n, st.p);
    debug_assert_eq!(m.congruent(&p).unwrap(), form.matrix(n));
    (p, form)
}

/// Vectors `y₁, …, y_r` with `M = y₁∘y₂ + ⋯ + y_{r−1}∘y_r`.
pub fn symplectic_pairs(m: &SymMatrix) -> Result<Vec<BitVector>, Gf2Error> {
    if !is_alternate(m) {
        return Err(Gf2Error::NotAlternate);
    }
    if m.is_zero() {
        return Err(Gf2Error::ZeroMatrix);
    }
    let (p, form) = congruence_canonical(m);
    Ok(pairs_from_canonical(&p, form))
}

fn pairs_from_canonical(p: &BitMatrix, form: CanonicalForm) -> Vec<BitVector> {
    let q = p.inverse().expect("congruence matrix is invertible");
    (0..form.rank()).map(|i| q.column(i)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompKind {
    /// `M = Σ xᵢ²`.
    NonAlternate,
    /// `M = Σ xᵢ² + (Σ xᵢ)²`.
    Alternate,
}

/// A nonzero symmetric matrix written as a sum of squares of independent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: DecompKind,
    pub xs: Vec<BitVector>,
    pub n: usize,
}

impl Decomposition {
    pub fn rank(&self) -> usize {
        self.xs.len()
    }

    pub fn sum(&self) -> BitVector {
        BitVector::sum(self.n, &self.xs)
    }

    /// The vectors whose Gram matrix classifies a pair: `xs`, plus `Σxᵢ` when alternate.
    pub fn gram_vectors(&self) -> Vec<BitVector> {
        let mut vs = self.xs.clone();
        if self.kind == DecompKind::Alternate {
            vs.push(self.sum());
        }
        vs
    }

    pub fn reconstruct(&self) -> SymMatrix {
        SymMatrix::sum_of_squares(self.n, &self.gram_vectors())
    }
}

/// Writes a nonzero symmetric matrix as `Σxᵢ²` or, when alternate, `Σxᵢ² + (Σxᵢ)²`.
pub fn decompose_symmetric(m: &SymMatrix) -> Result<Decomposition, Gf2Error> {
    if m.is_zero() {
        return Err(Gf2Error::ZeroMatrix);
    }
    let (p, form) = congruence_canonical(m);
    Ok(decomposition_from_canonical(m.n(), &p, form))
}

/// As [`decompose_symmetric`], but starting from a random congruent copy so
/// that repeated calls produce different valid decompositions.
pub fn decompose_symmetric_randomized<R: Rng + ?Sized>(
    m: &SymMatrix,
    rng: &mut R,
) -> Result<Decomposition, Gf2Error> {
    if m.is_zero() {
        return Err(Gf2Error::ZeroMatrix);
    }
    let q = random_invertible(m.n(), rng);
    let (p, form) = congruence_canonical(&m.congruent(&q)?);
    Ok(decomposition_from_canonical(m.n(), &(&p * &q), form))
}

fn decomposition_from_canonical(n: usize, p: &BitMatrix, form: CanonicalForm) -> Decomposition {
    let ys = pairs_from_canonical(p, form);
    let d = match form {
        CanonicalForm::Identity { .. } => Decomposition {
            kind: DecompKind::NonAlternate,
            xs: ys,
            n,
        },
        CanonicalForm::Hyperbolic { .. } => Decomposition {
            kind: DecompKind::Alternate,
            xs: alternate_from_pairs(&ys),
            n,
        },
        CanonicalForm::Zero => unreachable!("zero matrix rejected by callers"),
    };
    debug_assert!(super::are_independent(&d.xs));
    d
}

/// `x₁ = y₁`, `x₂ = y₂`, and for `k ≥ 2`
/// `x_{2k−1} = y₁ + ⋯ + y_{2k−2} + y_{2k−1}`, `x_{2k} = y₁ + ⋯ + y_{2k−2} + y_{2k}`.
pub fn alternate_from_pairs(ys: &[BitVector]) -> Vec<BitVector> {
    let n = ys[0].len();
    let mut xs = Vec::with_capacity(ys.len());
    let mut prefix = BitVector::zeros(n);
    for pair in ys.chunks(2) {
        xs.push(prefix + pair[0]);
        xs.push(prefix + pair[1]);
        prefix = prefix + pair[0] + pair[1];
    }
    xs
}

/// Uniform random element of GLₙ(𝔽₂) by rejection sampling.
pub fn random_invertible<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitMatrix {
    loop {
        let m = BitMatrix::from_row_words(n, (0..n).map(|_| rng.gen::<u64>()).collect::<Vec<_>>());
        if m.rank() == n {
            return m;
        }
    }
}
