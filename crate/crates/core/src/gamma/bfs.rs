use std::collections::HashMap;

use super::{check_same_n, packed, GammaError, GraphConfig, Vertex};

/// BFS distances from one source, keyed by packed matrix.
#[derive(Debug, Clone)]
pub struct DistanceMap {
    n: usize,
    dist: HashMap<u64, u32>,
}

impl DistanceMap {
    pub fn get(&self, v: &Vertex) -> Option<u32> {
        if v.n() != self.n {
            return None;
        }
        self.dist.get(&packed::pack(v.mat())).copied()
    }

    pub fn get_packed(&self, key: u64) -> Option<u32> {
        self.dist.get(&key).copied()
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Largest distance reached: the eccentricity of the source.
    pub fn max(&self) -> u32 {
        self.dist.values().copied().max().unwrap_or(0)
    }
}

/// Level-synchronous BFS from `source`, stopping early once `target` is labeled.
fn bfs(n: usize, source: &Vertex, target: Option<u64>) -> HashMap<u64, u32> {
    let start = (packed::pack(source.mat()), packed::pack(source.inv()));
    let mut dist = HashMap::with_capacity(1024);
    dist.insert(start.0, 0u32);
    if target == Some(start.0) {
        return dist;
    }
    let mut frontier = vec![start];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &(mat, inv) in &frontier {
            for (m, i) in packed::neighbors(n, mat, inv) {
                if dist.contains_key(&m) {
                    continue;
                }
                dist.insert(m, level);
                if target == Some(m) {
                    return dist;
                }
                next.push((m, i));
            }
        }
        frontier = next;
    }
    dist
}

/// Shortest-path length by breadth-first search over the implicit neighbor oracle.
pub fn distance_bfs(a: &Vertex, b: &Vertex, config: &GraphConfig) -> Result<u32, GammaError> {
    check_same_n(a, b)?;
    config.check(a.n())?;
    let target = packed::pack(b.mat());
    let dist = bfs(a.n(), a, Some(target));
    dist.get(&target).copied().ok_or(GammaError::NotVertex)
}

pub fn all_distances_from(a: &Vertex, config: &GraphConfig) -> Result<DistanceMap, GammaError> {
    config.check(a.n())?;
    Ok(DistanceMap {
        n: a.n(),
        dist: bfs(a.n(), a, None),
    })
}

pub fn eccentricity_bfs(a: &Vertex, config: &GraphConfig) -> Result<u32, GammaError> {
    Ok(all_distances_from(a, config)?.max())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::count_vertices;

    #[test]
    fn trivial_and_coxeter_distances() {
        let cfg = GraphConfig::new();
        let i3 = Vertex::identity(3);
        assert_eq!(distance_bfs(&i3, &i3, &cfg).unwrap(), 0);
        let far = Vertex::from_strs(&["011", "101", "111"]).unwrap();
        assert_eq!(distance_bfs(&i3, &far, &cfg).unwrap(), 4);
        let all = all_distances_from(&i3, &cfg).unwrap();
        assert_eq!(all.len() as u64, count_vertices(3, &cfg).unwrap());
        assert_eq!(all.max(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let i6 = Vertex::identity(6);
        assert!(matches!(
            eccentricity_bfs(&i6, &GraphConfig::new()),
            Err(GammaError::TooLarge { n: 6, max: 5 })
        ));
    }
}
