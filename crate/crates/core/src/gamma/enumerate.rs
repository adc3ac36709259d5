use std::collections::HashMap;
use std::io::Write;

use rayon::prelude::*;

use super::{packed, GammaError, GraphConfig, Vertex};

const CHUNK: u64 = 1 << 12;

/// Every vertex of Γₙ as packed `(matrix, inverse)`, in ascending order of the
/// upper-triangle bit pattern.
pub fn enumerate_packed(n: usize, config: &GraphConfig) -> Result<Vec<(u64, u64)>, GammaError> {
    config.check(n)?;
    let total: u64 = 1 << (n * (n + 1) / 2);
    let chunks = total.div_ceil(CHUNK);
    Ok(config.install(|| {
        (0..chunks)
            .into_par_iter()
            .flat_map_iter(|c| {
                (c * CHUNK..((c + 1) * CHUNK).min(total)).filter_map(move |bits| {
                    let m = packed::from_upper_bits(n, bits);
                    packed::inverse(n, m).map(|inv| (m, inv))
                })
            })
            .collect()
    }))
}

pub fn enumerate_vertices(n: usize, config: &GraphConfig) -> Result<Vec<Vertex>, GammaError> {
    Ok(enumerate_packed(n, config)?
        .into_iter()
        .map(|(m, i)| packed::unpack_vertex(n, m, i))
        .collect())
}

pub fn count_vertices(n: usize, config: &GraphConfig) -> Result<u64, GammaError> {
    Ok(enumerate_packed(n, config)?.len() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExportSummary {
    pub vertices: usize,
    pub edges: usize,
}

/// Writes the edge-list format: a header, `v <idx> <rows/joined>` lines, then `e <i> <j>` lines with `i < j`.
pub fn export_graph(
    n: usize,
    config: &GraphConfig,
    sink: &mut dyn Write,
) -> Result<ExportSummary, GammaError> {
    let verts = enumerate_packed(n, config)?;
    let index: HashMap<u64, usize> = verts
        .iter()
        .enumerate()
        .map(|(i, &(m, _))| (m, i))
        .collect();
    let edges: Vec<(usize, usize)> = config.install(|| {
        verts
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, &(m, inv))| {
                let mut js: Vec<usize> = packed::neighbors(n, m, inv)
                    .map(|(nb, _)| index[&nb])
                    .filter(|&j| j > i)
                    .collect();
                js.sort_unstable();
                js.into_iter().map(move |j| (i, j))
            })
            .collect()
    });
    writeln!(
        sink,
        "gamma-graph n={n} vertices={} edges={}",
        verts.len(),
        edges.len()
    )?;
    for (i, &(m, _)) in verts.iter().enumerate() {
        writeln!(sink, "v {i} {}", packed::unpack(n, m).to_compact())?;
    }
    for (i, j) in &edges {
        writeln!(sink, "e {i} {j}")?;
    }
    sink.flush()?;
    Ok(ExportSummary {
        vertices: verts.len(),
        edges: edges.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::SymMatrix;

    /// Brute force with the generic matrix code.
    fn count_by_rank(n: usize) -> u64 {
        (0u64..1 << (n * (n + 1) / 2))
            .filter(|&b| SymMatrix::from_upper_bits(n, b).det())
            .count() as u64
    }

    #[test]
    fn counts_match_brute_force() {
        let cfg = GraphConfig::new();
        for n in 1..=5 {
            assert_eq!(
                count_vertices(n, &cfg).unwrap(),
                count_by_rank(n),
                "n = {n}"
            );
        }
        assert_eq!(count_vertices(2, &cfg).unwrap(), 4);
        assert_eq!(count_vertices(3, &cfg).unwrap(), 28);
        assert_eq!(count_vertices(4, &cfg).unwrap(), 448);
        assert_eq!(count_vertices(5, &cfg).unwrap(), 13888);
    }

    #[test]
    fn order_is_ascending_upper_bits_and_parallel_is_deterministic() {
        let serial = enumerate_packed(4, &GraphConfig::new().with_workers(1)).unwrap();
        let parallel = enumerate_packed(4, &GraphConfig::new().with_workers(4)).unwrap();
        assert_eq!(serial, parallel);
        let bits: Vec<u64> = serial
            .iter()
            .map(|&(m, _)| packed::unpack(4, m).upper_bits())
            .collect();
        assert!(bits.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn export_small_graphs() {
        let cfg = GraphConfig::new();
        let mut out = Vec::new();
        let s = export_graph(2, &cfg, &mut out).unwrap();
        // I₂ and the other nonalternate vertices have degree 1; the alternate one has degree 3.
        assert_eq!(
            s,
            ExportSummary {
                vertices: 4,
                edges: 3
            }
        );

        let mut out = Vec::new();
        let s = export_graph(3, &cfg, &mut out).unwrap();
        assert_eq!(
            s,
            ExportSummary {
                vertices: 28,
                edges: 42
            }
        );
        let text = String::from_utf8(out.clone()).unwrap();
        assert!(text.starts_with("gamma-graph n=3 vertices=28 edges=42\nv 0 "));
        assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 42);

        let mut again = Vec::new();
        export_graph(3, &cfg, &mut again).unwrap();
        assert_eq!(out, again);
    }
}
