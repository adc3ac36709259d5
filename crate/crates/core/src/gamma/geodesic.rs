use super::{check_same_n, distance_closed, neighbors, GammaError, Vertex};

/// A shortest path from `a` to `b` by greedy descent on the closed-form distance.
///
/// Each step moves to the neighbor with the smallest update vector that is one
/// closer to `b`.
pub fn geodesic(a: &Vertex, b: &Vertex) -> Result<Vec<Vertex>, GammaError> {
    check_same_n(a, b)?;
    let mut path = vec![a.clone()];
    let mut d = distance_closed(a, b)?;
    while d > 0 {
        let cur = path.last().expect("path starts non-empty");
        let mut next = None;
        for nb in neighbors(cur) {
            if distance_closed(&nb, b)? + 1 == d {
                next = Some(nb);
                break;
            }
        }
        let Some(nb) = next else {
            return Err(GammaError::NoDescent {
                step: path.len() - 1,
                distance: d,
            });
        };
        path.push(nb);
        d -= 1;
    }
    Ok(path)
}
