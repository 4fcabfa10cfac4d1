//! Brute-force oracles that share no code with the main algorithms:
//! matching size by exhaustive edge-subset search, and `|A|` as the
//! principal square root of `A²` by coupled Newton–Schulz iteration.

use thiserror::Error;

use crate::graph::Graph;
use crate::spectral::{Matrix, SymmetricMatrix};

pub const MAX_ORACLE_EDGES: usize = 24;
pub const MAX_ORACLE_ORDER: usize = 16;
const MAX_ITERATIONS: usize = 100;
const RESIDUAL_BOUND: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("matching oracle supports at most {MAX_ORACLE_EDGES} edges, got {0}")]
    TooManyEdges(usize),
    #[error("matrix-abs oracle supports at most {MAX_ORACLE_ORDER} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("Newton-Schulz iteration diverged (residual {0:e})")]
    Diverged(f64),
}

/// Maximum matching size by enumerating edge subsets, pruned by
/// endpoint conflicts and a remaining-edges bound.
pub fn oracle_matching(g: &Graph) -> Result<usize, OracleError> {
    let edges = g.edges();
    if edges.len() > MAX_ORACLE_EDGES {
        return Err(OracleError::TooManyEdges(edges.len()));
    }
    let mut used = vec![false; g.order()];
    let mut best = 0;
    extend(edges, 0, 0, &mut used, &mut best);
    Ok(best)
}

fn extend(edges: &[(usize, usize)], next: usize, size: usize, used: &mut [bool], best: &mut usize) {
    *best = (*best).max(size);
    let free = used.iter().filter(|&&u| !u).count();
    if size + (edges.len() - next).min(free / 2) <= *best {
        return;
    }
    for k in next..edges.len() {
        let (u, v) = edges[k];
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        extend(edges, k + 1, size + 1, used, best);
        used[u] = false;
        used[v] = false;
    }
}

type Dense = Vec<Vec<f64>>;

fn product(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn max_diff(a: &Dense, b: &Dense) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// `(A²)^{1/2}` by the coupled Newton–Schulz iteration
/// `T = (3I − ZY)/2, Y ← YT, Z ← TZ` on `A²/c`, with `c` the maximum row
/// sum of `A²`.
pub fn oracle_matrix_abs(g: &Graph) -> Result<SymmetricMatrix, OracleError> {
    let n = g.order();
    if n > MAX_ORACLE_ORDER {
        return Err(OracleError::TooManyVertices(n));
    }
    let mut a = vec![vec![0.0; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    let square = product(&a, &a);
    let scale = square
        .iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let root = if scale == 0.0 {
        vec![vec![0.0; n]; n]
    } else {
        let target: Dense = square
            .iter()
            .map(|row| row.iter().map(|x| x / scale).collect())
            .collect();
        let y = newton_schulz(&target)?;
        let factor = scale.sqrt();
        (0..n)
            .map(|i| (0..n).map(|j| 0.5 * (y[i][j] + y[j][i]) * factor).collect())
            .collect()
    };
    let residual = max_diff(&product(&root, &root), &square);
    if residual > RESIDUAL_BOUND {
        return Err(OracleError::Diverged(residual));
    }
    let data = root.into_iter().flatten().collect();
    let matrix = Matrix::from_row_major(n, data).expect("square by construction");
    Ok(SymmetricMatrix::new(matrix).expect("symmetrized by construction"))
}

fn newton_schulz(target: &Dense) -> Result<Dense, OracleError> {
    let n = target.len();
    let identity: Dense = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut y = target.clone();
    let mut z = identity.clone();
    let mut previous = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let zy = product(&z, &y);
        let t: Dense = (0..n)
            .map(|i| (0..n).map(|j| 0.5 * (3.0 * identity[i][j] - zy[i][j])).collect())
            .collect();
        let next_y = product(&y, &t);
        let next_z = product(&t, &z);
        let step = max_diff(&next_y, &y);
        if !step.is_finite() || step > 1e6 {
            return Err(OracleError::Diverged(step));
        }
        // Null-space components of A² grow by 3/2 per step once the rest
        // has converged, so stop at the floor or as soon as steps stop shrinking.
        if step > previous && step < 1e-8 {
            break;
        }
        y = next_y;
        z = next_z;
        if step <= 1e-15 {
            break;
        }
        previous = step;
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_examples() {
        assert_eq!(oracle_matching(&Graph::complete(3)).unwrap(), 1);
        assert_eq!(oracle_matching(&Graph::cycle(6)).unwrap(), 3);
        assert_eq!(oracle_matching(&Graph::complete(4)).unwrap(), 2);
        assert_eq!(oracle_matching(&Graph::petersen()).unwrap(), 5);
        assert_eq!(oracle_matching(&Graph::empty(3)).unwrap(), 0);
        assert_eq!(
            oracle_matching(&Graph::complete(8)),
            Err(OracleError::TooManyEdges(28))
        );
    }

    #[test]
    fn matrix_abs_examples() {
        let k2 = oracle_matrix_abs(&Graph::complete(2)).unwrap();
        assert!(k2.matrix().max_abs_diff(&Matrix::identity(2)) < 1e-12);

        let zero = oracle_matrix_abs(&Graph::empty(4)).unwrap();
        assert_eq!(zero.matrix().max_abs_diff(&Matrix::zeros(4)), 0.0);

        let p3 = oracle_matrix_abs(&Graph::path(3)).unwrap();
        let h = 0.5f64.sqrt();
        for (i, expected) in [h, 2f64.sqrt(), h].into_iter().enumerate() {
            assert!((p3.get(i, i) - expected).abs() < 1e-8);
        }
        assert!(matches!(
            oracle_matrix_abs(&Graph::empty(17)),
            Err(OracleError::TooManyVertices(17))
        ));
    }

    #[test]
    fn matrix_abs_handles_larger_singular_graphs() {
        for g in [Graph::petersen(), Graph::path(16), Graph::complete_bipartite(7, 9)] {
            oracle_matrix_abs(&g).unwrap();
        }
    }
}
