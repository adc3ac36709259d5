//! Seeded, self-checking suites comparing every closed form with an independent oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::codes::{
    bar, enumerate_selfdual_codes, family_inverse_closed, orthogonal_witness, sd_membership,
    sd_membership_distances, underline, verify_partition, CodesError, LinearCode, SelfDualCode,
};
use crate::gamma::{
    all_distances_from, are_adjacent, diameter_closed, distance_ambient, distance_bfs,
    distance_closed, eccentricity_bfs, enumerate_packed, enumerate_vertices, geodesic, packed,
    witnesses, GammaError, GraphConfig, Vertex,
};
use crate::gf2::{
    are_independent, decompose_symmetric, det_update, inverse_update, is_alternate, is_r1tr0,
    random_matrix, random_symmetric, random_vector, random_vertex, rank_of, schur_det, BitMatrix,
    BitVector, DecompKind, Gf2Error, SymMatrix,
};

/// Failure messages kept per suite.
const MAX_MESSAGES: usize = 10;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Codes(#[from] CodesError),
    #[error("unknown suite {0:?}; expected one of gamma, identities, diameter, codes, geodesics, witnesses")]
    UnknownSuite(String),
    #[error("suite {suite} does not accept n = {n}")]
    BadDimension { suite: Suite, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Gamma,
    Identities,
    Diameter,
    Codes,
    Geodesics,
    Witnesses,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Gamma,
        Suite::Identities,
        Suite::Diameter,
        Suite::Codes,
        Suite::Geodesics,
        Suite::Witnesses,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Gamma => "gamma",
            Suite::Identities => "identities",
            Suite::Diameter => "diameter",
            Suite::Codes => "codes",
            Suite::Geodesics => "geodesics",
            Suite::Witnesses => "witnesses",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Dimension for the suites that take one; each suite has its own default.
    pub n: Option<usize>,
    /// Instance count for randomized suites; each suite has its own default.
    pub iters: Option<usize>,
    pub seed: u64,
    pub config: GraphConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            n: None,
            iters: None,
            seed: 0x5eed,
            config: GraphConfig::new(),
        }
    }
}

/// Pass counts for one named check within a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckCount {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: Option<usize>,
    pub counts: Vec<CheckCount>,
    pub messages: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn checks(&self) -> u64 {
        self.counts.iter().map(|c| c.checks).sum()
    }

    pub fn failures(&self) -> u64 {
        self.counts.iter().map(|c| c.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

/// Accumulates named checks and the first few failure messages.
#[derive(Debug, Default)]
struct Tally {
    counts: Vec<CheckCount>,
    messages: Vec<String>,
}

impl Tally {
    fn record(&mut self, name: &str, ok: bool, msg: impl FnOnce() -> String) {
        let idx = match self.counts.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.counts.push(CheckCount {
                    name: name.to_string(),
                    checks: 0,
                    failures: 0,
                });
                self.counts.len() - 1
            }
        };
        let c = &mut self.counts[idx];
        c.checks += 1;
        if !ok {
            c.failures += 1;
            if self.messages.len() < MAX_MESSAGES {
                self.messages.push(format!("{name}: {}", msg()));
            }
        }
    }

    fn min_checks(&self) -> u64 {
        self.counts.iter().map(|c| c.checks).min().unwrap_or(0)
    }

    fn finish(self, suite: Suite, n: Option<usize>, start: Instant) -> SuiteReport {
        SuiteReport {
            suite,
            n,
            counts: self.counts,
            messages: self.messages,
            elapsed: start.elapsed(),
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    let start = Instant::now();
    let mut t = Tally::default();
    let n = match suite {
        Suite::Gamma => {
            let n = opts.n.unwrap_or(3);
            gamma_suite(n, opts, &mut t)?;
            Some(n)
        }
        Suite::Identities => {
            identities_suite(opts, &mut t)?;
            None
        }
        Suite::Diameter => {
            diameter_suite(opts, &mut t)?;
            None
        }
        Suite::Codes => {
            let n = opts.n.unwrap_or(5);
            if n < 3 || n % 2 == 0 || n > 7 {
                return Err(VerifyError::BadDimension { suite, n });
            }
            codes_suite(n, opts, &mut t)?;
            Some(n)
        }
        Suite::Geodesics => {
            let n = opts.n.unwrap_or(4);
            if n < 2 {
                return Err(VerifyError::BadDimension { suite, n });
            }
            geodesics_suite(n, opts, &mut t)?;
            Some(n)
        }
        Suite::Witnesses => {
            let n = opts.n.unwrap_or(6);
            witnesses_suite(n, &mut t);
            Some(n)
        }
    };
    Ok(t.finish(suite, n, start))
}

/// Partner index and the distances closed(a, b), bfs(a, b), closed(b, a), ambient(a, b).
type PairDistances = (usize, [u32; 4]);

/// Closed-form distance against BFS: every pair of distinct vertices when `n ≤ 4`, sampled pairs otherwise.
fn gamma_suite(n: usize, opts: &VerifyOptions, t: &mut Tally) -> Result<(), VerifyError> {
    let cfg = &opts.config;
    cfg.check(n)?;
    let verts = enumerate_vertices(n, cfg)?;
    if n <= 4 {
        let rows: Vec<Result<Vec<PairDistances>, GammaError>> = cfg.install(|| {
            verts
                .par_iter()
                .enumerate()
                .map(|(i, a)| {
                    let bfs = all_distances_from(a, cfg)?;
                    (i + 1..verts.len())
                        .map(|j| {
                            let b = &verts[j];
                            let oracle = bfs.get(b).unwrap_or(u32::MAX);
                            Ok((
                                j,
                                [
                                    distance_closed(a, b)?,
                                    oracle,
                                    distance_closed(b, a)?,
                                    distance_ambient(a.mat(), b.mat())?,
                                ],
                            ))
                        })
                        .collect()
                })
                .collect()
        });
        for (i, row) in rows.into_iter().enumerate() {
            for (j, [closed, oracle, back, ambient]) in row? {
                let msg = || {
                    format!(
                        "{} -> {}: closed {closed}, bfs {oracle}",
                        verts[i].mat().to_compact(),
                        verts[j].mat().to_compact()
                    )
                };
                t.record("closed = bfs", closed == oracle, msg);
                t.record("symmetry", closed == back, msg);
                t.record("ambient ≤ closed", ambient <= closed, msg);
            }
        }
    } else {
        let iters = opts.iters.unwrap_or(1000);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let pairs: Vec<(usize, usize)> = (0..iters)
            .map(|_| (rng.gen_range(0..verts.len()), rng.gen_range(0..verts.len())))
            .collect();
        let results: Vec<Result<(u32, u32, u32, u32), GammaError>> = cfg.install(|| {
            pairs
                .par_iter()
                .map(|&(i, j)| {
                    let (a, b) = (&verts[i], &verts[j]);
                    Ok((
                        distance_closed(a, b)?,
                        distance_bfs(a, b, cfg)?,
                        distance_closed(b, a)?,
                        distance_ambient(a.mat(), b.mat())?,
                    ))
                })
                .collect()
        });
        for (r, &(i, j)) in results.into_iter().zip(&pairs) {
            let (closed, oracle, back, ambient) = r?;
            let msg = || format!("pair ({i}, {j}): closed {closed}, bfs {oracle}");
            t.record("closed = bfs", closed == oracle, msg);
            t.record("symmetry", closed == back, msg);
            t.record("ambient ≤ closed", ambient <= closed, msg);
        }
    }
    Ok(())
}

fn diameter_suite(opts: &VerifyOptions, t: &mut Tally) -> Result<(), VerifyError> {
    let cfg = &opts.config;
    for n in 2..=6 {
        let d = diameter_closed(n)?;
        // Independent of the closed form: the formula stated for each parity.
        let stated = match n {
            2 => 2,
            3 => 4,
            _ if n % 2 == 0 => n as u32 + 1,
            _ => n as u32,
        };
        t.record("stated values", d == stated, || {
            format!("n = {n}: {d} vs {stated}")
        });
        if cfg.check(n).is_ok() {
            let ecc = eccentricity_bfs(&Vertex::identity(n), cfg)?;
            t.record("eccentricity of I", ecc == d, || {
                format!("n = {n}: bfs {ecc}, closed {d}")
            });
        }
    }
    for n in [0, 1] {
        t.record("rejects n < 2", diameter_closed(n).is_err(), || {
            format!("n = {n} accepted")
        });
    }
    Ok(())
}

fn geodesics_suite(n: usize, opts: &VerifyOptions, t: &mut Tally) -> Result<(), VerifyError> {
    let iters = opts.iters.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ n as u64);
    let pairs: Vec<(Vertex, Vertex)> = (0..iters)
        .map(|_| (random_vertex(n, &mut rng), random_vertex(n, &mut rng)))
        .collect();
    let results: Vec<Result<(bool, bool, String), GammaError>> = opts.config.install(|| {
        pairs
            .par_iter()
            .map(|(a, b)| {
                let d = distance_closed(a, b)?;
                let msg = format!("{} -> {}", a.mat().to_compact(), b.mat().to_compact());
                match geodesic(a, b) {
                    Ok(path) => {
                        let edges = path.windows(2).all(|w| are_adjacent(&w[0], &w[1]));
                        let ends = path.first() == Some(a) && path.last() == Some(b);
                        Ok((edges && ends, path.len() as u32 == d + 1, msg))
                    }
                    Err(GammaError::NoDescent { step, distance }) => Ok((
                        false,
                        false,
                        format!("{msg}: no descent at step {step} (distance {distance})"),
                    )),
                    Err(e) => Err(e),
                }
            })
            .collect()
    });
    for r in results {
        let (edges, length, msg) = r?;
        t.record("edge chain", edges, || msg.clone());
        t.record("length = closed distance", length, || msg);
    }
    Ok(())
}

fn witnesses_suite(max_n: usize, t: &mut Tally) {
    for n in 2..=max_n {
        for w in witnesses::all_witnesses(n) {
            let c = w.check();
            t.record(&format!("case {}", w.case), c.passed(), || {
                format!("n = {n}, r = {}: {c:?}", w.r)
            });
        }
    }
}

fn codes_suite(n: usize, opts: &VerifyOptions, t: &mut Tally) -> Result<(), VerifyError> {
    let cfg = &opts.config;
    let report = verify_partition(n, cfg)?;
    t.record("families disjoint", report.disjoint, || {
        format!("{report:?}")
    });
    if let Some(covers) = report.covers {
        t.record("families cover SD", covers, || {
            format!(
                "union {} vs filtered {}",
                report.union_size,
                report.exhaustive_size.unwrap_or(0)
            )
        });
    }
    let codes = enumerate_selfdual_codes(n + 1)?;
    let closed: Vec<Result<bool, CodesError>> =
        cfg.install(|| codes.par_iter().map(family_inverse_closed).collect());
    for (c, r) in codes.iter().zip(closed) {
        t.record("inverse closure", r?, || format!("code {c:?}"));
    }

    // All ordered pairs up to n = 5; pairs through the first code at n = 7.
    let pairs: Vec<(usize, usize)> = if n <= 5 {
        (0..codes.len())
            .flat_map(|i| (0..codes.len()).map(move |j| (i, j)))
            .collect()
    } else {
        (0..codes.len()).flat_map(|j| [(0, j), (j, 0)]).collect()
    };
    let found: Vec<(usize, usize, Result<BitMatrix, CodesError>)> = cfg.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| (i, j, orthogonal_witness(&codes[i], &codes[j])))
            .collect()
    });
    for (i, j, r) in found {
        let ok = match &r {
            Ok(p) => {
                let ext = crate::codes::extend_by_one(p);
                &p.transpose() * p == BitMatrix::identity(n)
                    && codes[i].code().map(&ext)? == *codes[j].code()
            }
            Err(_) => false,
        };
        t.record("orthogonal witness", ok, || {
            format!("codes {i} -> {j}: {r:?}")
        });
    }

    if cfg.check(n).is_ok() {
        let all = enumerate_packed(n, cfg)?;
        let agree: Vec<Result<(bool, String), CodesError>> = cfg.install(|| {
            all.par_iter()
                .map(|&(m, inv)| {
                    let v = packed::unpack_vertex(n, m, inv);
                    Ok((
                        sd_membership(&v)? == sd_membership_distances(&v)?,
                        v.mat().to_compact(),
                    ))
                })
                .collect()
        });
        for r in agree {
            let (ok, m) = r?;
            t.record("membership by distances", ok, || m);
        }
    }
    Ok(())
}

fn identities_suite(opts: &VerifyOptions, t: &mut Tally) -> Result<(), VerifyError> {
    let iters = opts.iters.unwrap_or(10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let codes = [
        enumerate_selfdual_codes(4)?,
        enumerate_selfdual_codes(6)?,
        enumerate_selfdual_codes(8)?,
    ];
    // Some identities only apply to part of the random instances; keep going
    // until each has at least `iters` checks.
    let mut rounds = 0;
    while rounds < iters || t.min_checks() < iters as u64 {
        update_identities(&mut rng, t)?;
        schur_identity(&mut rng, t)?;
        r1tr0_identity(&mut rng, t)?;
        decomposition_identity(&mut rng, t)?;
        substitution_identities(&mut rng, t);
        shift_identity(&mut rng, t);
        diagonal_identities(&mut rng, t)?;
        orthocode_identity(&codes, &mut rng, t);
        rounds += 1;
        if rounds >= 100 * iters.max(1) {
            break;
        }
    }
    Ok(())
}

/// `Σ vᵢ²`.
fn squares(n: usize, vs: &[BitVector]) -> SymMatrix {
    SymMatrix::sum_of_squares(n, vs)
}

fn gram(c: &SymMatrix, vs: &[BitVector]) -> SymMatrix {
    crate::gamma::gram_matrix(c, vs)
}

fn update_identities(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<(), VerifyError> {
    let n = rng.gen_range(1..=8);
    let r = rng.gen_range(1..=n);
    let a = random_vertex(n, rng);
    let x = random_matrix(n, r, rng);
    let y = random_matrix(n, r, rng);
    let direct = a.mat().as_matrix() + &(&x * &y.transpose());
    let det = det_update(&a, &x, &y)?;
    t.record("determinant update", det == direct.det()?, || {
        format!("A = {}", a.mat().to_compact())
    });
    if det {
        let inv = inverse_update(&a, &x, &y)?;
        t.record("inverse update", inv == direct.inverse()?, || {
            format!("A = {}", a.mat().to_compact())
        });
    }
    Ok(())
}

fn schur_identity(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<(), VerifyError> {
    let n = rng.gen_range(2..=8);
    let m = rng.gen_range(1..n);
    loop {
        let a = random_matrix(n, n, rng);
        let a22 = a.block(m..n, m..n);
        if a22.rank() < n - m {
            continue;
        }
        let s = schur_det(
            &a.block(0..m, 0..m),
            &a.block(0..m, m..n),
            &a.block(m..n, 0..m),
            &a22,
        )?;
        t.record("schur determinant", s == a.det()?, || {
            format!("A = {}", a.to_compact())
        });
        return Ok(());
    }
}

fn r1tr0_identity(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<(), VerifyError> {
    let n = rng.gen_range(2..=8);
    // Rank one and trace zero means vvᵀ with v of even weight.
    let v = loop {
        let v = random_vector(n, rng);
        if !v.is_zero() && !v.self_dot() {
            break v;
        }
    };
    let m = SymMatrix::square(&v);
    let i = SymMatrix::identity(n);
    match is_r1tr0(&m) {
        Some(form) => {
            let ipm = (&i + &m).into_matrix();
            t.record(
                "R1Tr0 involution",
                &ipm * &ipm == BitMatrix::identity(n),
                || m.to_compact(),
            );
            let q = form.permutation_matrix();
            let canon = SymMatrix::ones(form.k).direct_sum(&SymMatrix::zeros(n - form.k));
            t.record("R1Tr0 canonical form", canon.congruent(&q)? == m, || {
                m.to_compact()
            });
        }
        None => t.record("R1Tr0 recognition", false, || m.to_compact()),
    }
    let s = random_symmetric(n, rng);
    t.record(
        "R1Tr0 recognition",
        is_r1tr0(&s).is_some() == (s.rank() == 1 && !s.trace()),
        || s.to_compact(),
    );
    Ok(())
}

fn decomposition_identity(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<(), VerifyError> {
    let n = rng.gen_range(2..=8);
    let mut m = random_symmetric(n, rng);
    if rng.gen() {
        let mut inner = m.into_matrix();
        for k in 0..n {
            inner.set(k, k, false);
        }
        m = SymMatrix::new(inner)?;
    }
    if m.is_zero() {
        return Ok(());
    }
    let d = decompose_symmetric(&m)?;
    let alt = is_alternate(&m);
    let kind_ok = (d.kind == DecompKind::Alternate) == alt;
    let ok = kind_ok
        && d.reconstruct() == m
        && are_independent(&d.xs)
        && d.rank() == m.rank()
        && (!alt || d.rank() % 2 == 0);
    let name = if alt {
        "alternate decomposition"
    } else {
        "nonalternate decomposition"
    };
    t.record(name, ok, || m.to_compact());
    Ok(())
}

/// The two substitutions that trade `(Σ_S xᵢ)²` for new vectors, odd and even `s`.
fn substitution_identities(rng: &mut ChaCha8Rng, t: &mut Tally) {
    let n = rng.gen_range(4..=8);
    let c = random_symmetric(n, rng);
    for odd in [true, false] {
        let r = if odd {
            rng.gen_range(2..=n)
        } else {
            2 * rng.gen_range(2..=n / 2)
        };
        let s = if odd {
            2 * rng.gen_range(0..(r - 1).div_ceil(2)) + 1
        } else {
            2 * rng.gen_range(1..r / 2)
        };
        let xs: Vec<BitVector> = (0..r).map(|_| random_vector(n, rng)).collect();
        let mut idx: Vec<usize> = (0..r).collect();
        idx.shuffle(rng);
        let (chosen, rest) = idx.split_at(s);
        let rest_sum = BitVector::sum(n, rest.iter().map(|&i| &xs[i]));
        let mut ws = Vec::with_capacity(r);
        if odd {
            ws.extend(chosen.iter().map(|&i| xs[i] + rest_sum));
            ws.extend(rest.iter().map(|&i| xs[i]));
        } else {
            ws.extend(chosen[..s - 1].iter().map(|&i| xs[i] + rest_sum));
            let last = xs[chosen[s - 1]];
            ws.push(last);
            ws.extend(rest.iter().map(|&i| xs[i] + last));
        }
        let total = BitVector::sum(n, &xs);
        let sub = BitVector::sum(n, chosen.iter().map(|&i| &xs[i]));
        let lhs = &(&squares(n, &xs) + &SymMatrix::square(&total)) + &SymMatrix::square(&sub);
        let name = if odd {
            "odd substitution"
        } else {
            "even substitution"
        };
        t.record(&format!("{name}: squares"), lhs == squares(n, &ws), || {
            format!("r = {r}, s = {s}")
        });
        let (gw, gx) = (gram(&c, &ws), gram(&c, &xs));
        t.record(
            &format!("{name}: Gram rank"),
            gw.rank() == gx.rank(),
            || format!("r = {r}, s = {s}"),
        );
        let trace = chosen.iter().fold(false, |acc, &i| acc ^ c.quad(&xs[i]));
        t.record(&format!("{name}: trace"), gw.trace() == trace, || {
            format!("r = {r}, s = {s}")
        });
    }
}

fn shift_identity(rng: &mut ChaCha8Rng, t: &mut Tally) {
    let n = rng.gen_range(2..=8);
    let r = 2 * rng.gen_range(1..=4);
    let xs: Vec<BitVector> = (0..r).map(|_| random_vector(n, rng)).collect();
    let v = random_vector(n, rng);
    let total = BitVector::sum(n, &xs);
    let lhs = &(&squares(n, &xs) + &SymMatrix::square(&total)) + &SymMatrix::square(&v);
    let shifted: Vec<BitVector> = xs.iter().map(|&x| x + v).collect();
    let rhs = &SymMatrix::square(&(total + v)) + &squares(n, &shifted);
    t.record("shift by v, even r", lhs == rhs, || format!("r = {r}"));
}

/// Diagonal criteria for `A` and `B = A + Σxᵢ²` both invertible.
fn diagonal_identities(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<(), VerifyError> {
    let n = rng.gen_range(2..=8);
    let a = random_vertex(n, rng);
    for _ in 0..64 {
        let r = rng.gen_range(1..=n);
        let xs: Vec<BitVector> = (0..r).map(|_| random_vector(n, rng)).collect();
        let b = a.mat() + &squares(n, &xs);
        let Ok(b) = Vertex::new(b) else { continue };
        let all_a = xs.iter().all(|x| a.inv().quad(x));
        let all_b = xs.iter().all(|x| b.inv().quad(x));
        t.record("diagonal ones preserved", all_a == all_b, || {
            format!("A = {}", a.mat().to_compact())
        });
        if r % 2 == 1 {
            t.record("odd r has a zero diagonal", !all_a, || {
                format!("A = {}", a.mat().to_compact())
            });
        }
        return Ok(());
    }
    Ok(())
}

/// Gram rank at most one makes the barred span self-orthogonal, of the same dimension.
/// Instances come from underlined codewords of self-dual codes, whose Gram is `ℓℓᵀ`.
fn orthocode_identity(codes: &[Vec<SelfDualCode>], rng: &mut ChaCha8Rng, t: &mut Tally) {
    let code = codes
        .choose(rng)
        .and_then(|cs| cs.choose(rng))
        .expect("code lists are non-empty")
        .code();
    let length = code.length();
    let n = length - 1;
    let r = rng.gen_range(1..=code.dim());
    let xs: Vec<BitVector> = code
        .codewords()
        .choose_multiple(rng, r)
        .map(underline)
        .collect();
    let g = gram(&SymMatrix::identity(n), &xs);
    if g.rank() > 1 {
        t.record("Gram rank at most one", false, || format!("code {code:?}"));
        return;
    }
    let barred: Vec<BitVector> = xs.iter().map(bar).collect();
    let span = LinearCode::span(length, &barred).expect("barred vectors have the code length");
    t.record(
        "barred span self-orthogonal",
        span.is_self_orthogonal(),
        || format!("{xs:?}"),
    );
    t.record(
        "barred span dimension",
        rank_of(&barred) == rank_of(&xs),
        || format!("{xs:?}"),
    );
    if are_independent(&xs) {
        t.record("independent count bound", xs.len() <= (n + 1) / 2, || {
            format!("{xs:?}")
        });
    }
}

/// Upper-triangle keys of SDₙ by filtering every vertex.
pub fn sd_members(n: usize, config: &GraphConfig) -> Result<BTreeSet<u64>, VerifyError> {
    config.check(n)?;
    let mut out = BTreeSet::new();
    for (m, inv) in enumerate_packed(n, config)? {
        let v = packed::unpack_vertex(n, m, inv);
        if sd_membership(&v)? {
            out.insert(v.mat().upper_bits());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suite: Suite, n: Option<usize>, iters: Option<usize>) -> SuiteReport {
        let opts = VerifyOptions {
            n,
            iters,
            ..VerifyOptions::default()
        };
        let r = run_suite(suite, &opts).unwrap();
        assert!(r.passed(), "{suite}: {:?}", r.messages);
        assert!(r.checks() > 0);
        r
    }

    #[test]
    fn small_runs_pass() {
        let g = quick(Suite::Gamma, Some(3), None);
        assert_eq!(g.counts[0].checks, 378);
        quick(Suite::Identities, None, Some(200));
        quick(Suite::Diameter, None, None);
        quick(Suite::Geodesics, Some(3), Some(50));
        quick(Suite::Witnesses, Some(5), None);
        quick(Suite::Codes, Some(3), None);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn sd3_has_six_members() {
        assert_eq!(sd_members(3, &GraphConfig::new()).unwrap().len(), 6);
    }
}
