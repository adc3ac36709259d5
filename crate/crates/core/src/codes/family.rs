use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::Rng;
use rayon::prelude::*;

use super::{bar, check_rank, enumerate_selfdual_codes, underline, CodesError, SelfDualCode};
use crate::gamma::{
    distance_ambient, distance_closed, enumerate_packed, packed, GraphConfig, Vertex,
};
use crate::gf2::{
    decompose_symmetric, decompose_symmetric_randomized, BitVector, Decomposition, SymMatrix,
};

/// Largest code dimension whose bases are enumerated.
pub const MAX_FAMILY_DIM: usize = 4;

fn check_odd_n(n: usize) -> Result<(), CodesError> {
    if n < 3 || n % 2 == 0 {
        return Err(CodesError::EvenDimension { n });
    }
    Ok(())
}

/// A basis of a self-dual code with its parity class: 1 when an odd number of
/// vectors end in 1, 2 otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeBasis {
    pub code: SelfDualCode,
    pub vectors: Vec<BitVector>,
    pub parity_class: u8,
}

impl CodeBasis {
    pub fn new(code: SelfDualCode, vectors: Vec<BitVector>) -> Result<Self, CodesError> {
        let k = code.dim();
        if vectors.len() != k
            || !check_rank(&vectors, k)
            || !vectors.iter().all(|v| code.contains(v))
        {
            return Err(CodesError::InvariantViolated(
                "vectors do not form a basis of the code".into(),
            ));
        }
        let ending_in_one = vectors.iter().filter(|v| v.get(v.len() - 1)).count();
        let parity_class = if ending_in_one % 2 == 1 { 1 } else { 2 };
        Ok(Self {
            code,
            vectors,
            parity_class,
        })
    }

    pub fn underlined(&self) -> Vec<BitVector> {
        self.vectors.iter().map(underline).collect()
    }

    pub fn sum(&self) -> BitVector {
        BitVector::sum(self.code.length(), &self.vectors)
    }

    /// `Iₙ + Σ underline(yᵢ)²`.
    pub fn a_prime(&self) -> SymMatrix {
        let n = self.code.n();
        &SymMatrix::identity(n) + &SymMatrix::sum_of_squares(n, &self.underlined())
    }

    /// `A′ + (Σ underline(yᵢ))²`.
    pub fn a_double_prime(&self) -> SymMatrix {
        let mut a = self.a_prime();
        a.add_square(&underline(&self.sum()));
        a
    }
}

/// Every unordered basis of `code`, as sorted subsets of its nonzero codewords.
pub fn all_bases(code: &SelfDualCode) -> Result<Vec<CodeBasis>, CodesError> {
    let k = code.dim();
    if k > MAX_FAMILY_DIM {
        return Err(CodesError::TooLarge {
            what: "code dimension",
            value: k,
            max: MAX_FAMILY_DIM,
        });
    }
    let words: Vec<BitVector> = code
        .code()
        .codewords()
        .into_iter()
        .filter(|w| !w.is_zero())
        .collect();
    let mut out = Vec::new();
    let mut pick: Vec<usize> = Vec::with_capacity(k);
    fn rec(
        words: &[BitVector],
        k: usize,
        start: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<Vec<BitVector>>,
    ) {
        if pick.len() == k {
            out.push(pick.iter().map(|&i| words[i]).collect());
            return;
        }
        for i in start..words.len() {
            pick.push(i);
            let chosen: Vec<BitVector> = pick.iter().map(|&t| words[t]).collect();
            if check_rank(&chosen, chosen.len()) {
                rec(words, k, i + 1, pick, out);
            }
            pick.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&words, k, 0, &mut pick, &mut raw);
    for vectors in raw {
        out.push(CodeBasis::new(code.clone(), vectors)?);
    }
    Ok(out)
}

/// `d(A, Iₙ) = (n+5)/2` and `rank(A + Iₙ) = (n+1)/2`.
pub fn sd_membership(a: &Vertex) -> Result<bool, CodesError> {
    let n = a.n();
    check_odd_n(n)?;
    let rank = (a.mat() + &SymMatrix::identity(n)).rank();
    if rank != (n + 1) / 2 {
        return Ok(false);
    }
    Ok(distance_closed(a, &Vertex::identity(n))? == (n as u32 + 5) / 2)
}

/// Membership through `d(A, Iₙ)` and the ambient distance only.
pub fn sd_membership_distances(a: &Vertex) -> Result<bool, CodesError> {
    let n = a.n();
    check_odd_n(n)?;
    let i = Vertex::identity(n);
    if distance_closed(a, &i)? != (n as u32 + 5) / 2 {
        return Ok(false);
    }
    let k = (n as u32 + 1) / 2;
    let ambient = distance_ambient(a.mat(), i.mat())?;
    Ok(if k % 2 == 1 {
        ambient == k
    } else {
        ambient == k || ambient == k + 1
    })
}

fn code_from_decomposition(n: usize, d: &Decomposition) -> Result<SelfDualCode, CodesError> {
    let barred: Vec<BitVector> = d.xs.iter().map(bar).collect();
    SelfDualCode::from_generators(n + 1, &barred)
}

/// The self-dual code spanned by the barred decomposition vectors of `A + Iₙ`.
pub fn code_from_matrix(a: &Vertex) -> Result<SelfDualCode, CodesError> {
    if !sd_membership(a)? {
        return Err(CodesError::NotInSD);
    }
    let n = a.n();
    let d = decompose_symmetric(&(a.mat() + &SymMatrix::identity(n)))?;
    code_from_decomposition(n, &d)
}

/// As [`code_from_matrix`], from a randomly chosen decomposition.
pub fn code_from_matrix_randomized<R: Rng + ?Sized>(
    a: &Vertex,
    rng: &mut R,
) -> Result<SelfDualCode, CodesError> {
    if !sd_membership(a)? {
        return Err(CodesError::NotInSD);
    }
    let n = a.n();
    let d = decompose_symmetric_randomized(&(a.mat() + &SymMatrix::identity(n)), rng)?;
    code_from_decomposition(n, &d)
}

/// The family of a self-dual code, members sorted by upper-triangle bits.
#[derive(Debug, Clone)]
pub struct CodeFamily {
    pub code: SelfDualCode,
    pub members: Vec<Vertex>,
}

impl CodeFamily {
    pub fn keys(&self) -> BTreeSet<u64> {
        self.members.iter().map(|m| m.mat().upper_bits()).collect()
    }
}

/// All `A′` over bases of parity class 2, plus all `A″` when `(n+1)/2` is even.
///
/// Checks along the way that `A′` is invertible exactly for class-2 bases, that
/// `A″` is always invertible and, for odd `(n+1)/2`, never in SDₙ; then that
/// every member is in SDₙ and maps back to `code`.
pub fn family_from_code(code: &SelfDualCode) -> Result<CodeFamily, CodesError> {
    let n = code.n();
    check_odd_n(n)?;
    let k = code.dim();
    let mut members: BTreeMap<u64, Vertex> = BTreeMap::new();
    for basis in all_bases(code)? {
        let a1 = basis.a_prime();
        if a1.det() != (basis.parity_class == 2) {
            return Err(CodesError::InvariantViolated(format!(
                "A′ invertibility disagrees with parity class {} for basis {:?}",
                basis.parity_class, basis.vectors
            )));
        }
        if basis.parity_class == 2 {
            members
                .entry(a1.upper_bits())
                .or_insert_with(|| Vertex::new(a1).expect("determinant checked"));
        }
        let a2 = basis.a_double_prime();
        let v2 =
            Vertex::new(a2).map_err(|_| CodesError::InvariantViolated("A″ is singular".into()))?;
        if k % 2 == 0 {
            members.entry(v2.mat().upper_bits()).or_insert(v2);
        } else if sd_membership(&v2)? {
            return Err(CodesError::InvariantViolated(
                "A″ is in SDₙ for odd (n+1)/2".into(),
            ));
        }
    }
    for m in members.values() {
        if !sd_membership(m)? || code_from_matrix(m)? != *code {
            return Err(CodesError::InvariantViolated(format!(
                "family member {} does not map back",
                m.mat().to_compact()
            )));
        }
    }
    Ok(CodeFamily {
        code: code.clone(),
        members: members.into_values().collect(),
    })
}

/// `{A⁻¹ : A ∈ ℱ_C} = ℱ_C`.
pub fn family_inverse_closed(code: &SelfDualCode) -> Result<bool, CodesError> {
    let family = family_from_code(code)?;
    let inverses: BTreeSet<u64> = family
        .members
        .iter()
        .map(|m| m.inv().upper_bits())
        .collect();
    Ok(inverses == family.keys())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub n: usize,
    pub codes: usize,
    pub family_sizes: Vec<usize>,
    pub union_size: usize,
    pub disjoint: bool,
    /// Size of SDₙ by filtering every vertex, when that is within the enumeration cap.
    pub exhaustive_size: Option<usize>,
    /// Whether the union of the families equals the filtered SDₙ.
    pub covers: Option<bool>,
}

impl PartitionReport {
    pub fn passed(&self) -> bool {
        self.disjoint && self.covers != Some(false)
    }
}

/// Builds every family for length `n + 1` and checks they partition SDₙ.
pub fn verify_partition(n: usize, config: &GraphConfig) -> Result<PartitionReport, CodesError> {
    check_odd_n(n)?;
    let codes = enumerate_selfdual_codes(n + 1)?;
    let families: Vec<CodeFamily> = config.install(|| {
        codes
            .par_iter()
            .map(family_from_code)
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut owner: HashMap<u64, usize> = HashMap::new();
    let mut disjoint = true;
    for (i, f) in families.iter().enumerate() {
        for key in f.keys() {
            if owner.insert(key, i).is_some() {
                disjoint = false;
            }
        }
    }
    let (exhaustive_size, covers) = if config.check(n).is_ok() {
        let filtered = config.install(|| {
            enumerate_packed(n, config).map(|all| {
                all.par_iter()
                    .filter_map(|&(m, inv)| {
                        let v = packed::unpack_vertex(n, m, inv);
                        match sd_membership(&v) {
                            Ok(true) => Some(Ok(v.mat().upper_bits())),
                            Ok(false) => None,
                            Err(e) => Some(Err(e)),
                        }
                    })
                    .collect::<Result<BTreeSet<u64>, _>>()
            })
        })??;
        let union: BTreeSet<u64> = owner.keys().copied().collect();
        (Some(filtered.len()), Some(filtered == union))
    } else {
        (None, None)
    };
    Ok(PartitionReport {
        n,
        codes: codes.len(),
        family_sizes: families.iter().map(|f| f.members.len()).collect(),
        union_size: owner.len(),
        disjoint,
        exhaustive_size,
        covers,
    })
}
