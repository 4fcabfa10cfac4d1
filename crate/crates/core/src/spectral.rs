//! Dense symmetric eigendecomposition by cyclic Jacobi rotations, and the
//! matrix absolute value `|A| = U diag(|λ|) Uᵀ`.

use thiserror::Error;

use crate::graph::Graph;

/// Convergence threshold on the off-diagonal Frobenius norm, relative to
/// `‖A‖_F`.
pub const RELATIVE_TOLERANCE: f64 = 1e-12;
/// Maximum number of full cyclic sweeps.
pub const MAX_SWEEPS: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NonConvergence { sweeps: usize, residual: f64 },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("expected {expected} entries for order {order}, found {found}")]
    Shape {
        order: usize,
        expected: usize,
        found: usize,
    },
}

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    order: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(order: usize) -> Self {
        Matrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.data[i * order + i] = 1.0;
        }
        m
    }

    pub fn from_row_major(order: usize, data: Vec<f64>) -> Result<Self, SpectralError> {
        if data.len() != order * order {
            return Err(SpectralError::Shape {
                order,
                expected: order * order,
                found: data.len(),
            });
        }
        Ok(Matrix { order, data })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.order + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.order + col] = value;
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.order..(row + 1) * self.order]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.order;
        let mut t = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.data[i * n + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let src = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.order, other.order, "order mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// A square matrix whose entries are exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix(Matrix);

impl SymmetricMatrix {
    pub fn new(matrix: Matrix) -> Result<Self, SpectralError> {
        let n = matrix.order();
        for row in 0..n {
            for col in row + 1..n {
                if matrix.get(row, col) != matrix.get(col, row) {
                    return Err(SpectralError::NotSymmetric { row, col });
                }
            }
        }
        Ok(SymmetricMatrix(matrix))
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0.get(row, col)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    let mut m = Matrix::zeros(g.order());
    for &(u, v) in g.edges() {
        m.set(u, v, 1.0);
        m.set(v, u, 1.0);
    }
    SymmetricMatrix(m)
}

/// `A = U diag(λ) Uᵀ` with eigenvalues in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    eigenvalues: Vec<f64>,
    vectors: Matrix,
    weights: Matrix,
    /// `‖A‖_F` of the source matrix.
    source_norm: f64,
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    /// λ_1 ≥ ... ≥ λ_n.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `U`; column `j` is the unit eigenvector of `λ_j`.
    pub fn vectors(&self) -> &Matrix {
        &self.vectors
    }

    /// `p_ij = u_ij²`.
    pub fn weights(&self) -> &Matrix {
        &self.weights
    }

    /// Eigenvalues below this magnitude count as zero when taking signs.
    pub fn zero_threshold(&self) -> f64 {
        1e-12 * self.source_norm.max(1.0)
    }

    /// `U diag(λ) Uᵀ`.
    pub fn reconstruct(&self) -> Matrix {
        self.weighted_outer(|l| l)
    }

    fn weighted_outer(&self, f: impl Fn(f64) -> f64) -> Matrix {
        let n = self.order();
        let scale: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            let ui = self.vectors.row(i);
            for j in i..n {
                let uj = self.vectors.row(j);
                let s: f64 = (0..n).map(|k| ui[k] * scale[k] * uj[k]).sum();
                out.set(i, j, s);
                out.set(j, i, s);
            }
        }
        out
    }
}

/// Cyclic Jacobi eigendecomposition (row-major pivot order).
///
/// Each eigenvector is normalized so that its largest-magnitude entry is
/// positive; entries within `1e-12` of the maximum count as ties and the
/// lowest index wins. Degenerate eigenvalues keep their sweep-order
/// relative positions.
pub fn eigendecompose(m: &SymmetricMatrix) -> Result<EigenDecomposition, SpectralError> {
    let n = m.order();
    let mut a = m.matrix().clone();
    let mut v = Matrix::identity(n);
    let source_norm = a.frobenius_norm();
    let tolerance = RELATIVE_TOLERANCE * source_norm;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= tolerance {
            converged = true;
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let residual = off_diagonal_norm(&a);
    if !converged && residual > tolerance {
        return Err(SpectralError::NonConvergence {
            sweeps: MAX_SWEEPS,
            residual,
        });
    }

    let diagonal: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diagonal[j].total_cmp(&diagonal[i]));

    let eigenvalues = order.iter().map(|&k| diagonal[k]).collect();
    let mut vectors = Matrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        let max = (0..n).map(|r| v.get(r, src).abs()).fold(0.0, f64::max);
        let pivot = (0..n)
            .find(|&r| v.get(r, src).abs() >= max - 1e-12)
            .unwrap_or(0);
        let sign = if v.get(pivot, src) < 0.0 { -1.0 } else { 1.0 };
        for r in 0..n {
            vectors.set(r, col, sign * v.get(r, src));
        }
    }
    let weights = Matrix {
        order: n,
        data: vectors.data.iter().map(|u| u * u).collect(),
    };
    Ok(EigenDecomposition {
        eigenvalues,
        vectors,
        weights,
        source_norm,
    })
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.order();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a.get(i, j) * a.get(i, j);
        }
    }
    (2.0 * sum).sqrt()
}

/// Applies the rotation in the (p, q) plane that annihilates `a[p][q]`,
/// accumulating it into `v`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let n = a.order();
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a.set(k, p, new_kp);
        a.set(p, k, new_kp);
        a.set(k, q, new_kq);
        a.set(q, k, new_kq);
    }
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, c * vkp - s * vkq);
        v.set(k, q, s * vkp + c * vkq);
    }
}

/// `|A| = U diag(|λ|) Uᵀ`, exactly symmetric.
pub fn matrix_abs(d: &EigenDecomposition) -> SymmetricMatrix {
    SymmetricMatrix(d.weighted_outer(f64::abs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn decompose(g: &Graph) -> EigenDecomposition {
        eigendecompose(&adjacency_matrix(g)).unwrap()
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() <= tol, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn adjacency_examples() {
        let k2 = adjacency_matrix(&Graph::complete(2));
        assert_eq!(k2.matrix().as_slice(), &[0.0, 1.0, 1.0, 0.0]);
        assert!(adjacency_matrix(&Graph::empty(2))
            .matrix()
            .as_slice()
            .iter()
            .all(|&x| x == 0.0));
        let p3 = adjacency_matrix(&Graph::path(3));
        assert_eq!(
            p3.matrix().as_slice(),
            &[0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]
        );
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = Matrix::from_row_major(2, vec![0.0, 1.0, 0.5, 0.0]).unwrap();
        assert_eq!(
            SymmetricMatrix::new(m),
            Err(SpectralError::NotSymmetric { row: 0, col: 1 })
        );
        assert!(Matrix::from_row_major(2, vec![0.0; 3]).is_err());
    }

    #[test]
    fn spectra_examples() {
        assert_close(decompose(&Graph::complete(2)).eigenvalues(), &[1.0, -1.0], 1e-15);
        let s2 = 2f64.sqrt();
        assert_close(decompose(&Graph::path(3)).eigenvalues(), &[s2, 0.0, -s2], 1e-14);
        for r in 1..=5 {
            let mut expected = vec![0.0; 2 * r];
            expected[0] = r as f64;
            expected[2 * r - 1] = -(r as f64);
            let d = decompose(&Graph::complete_bipartite(r, r));
            assert_close(d.eigenvalues(), &expected, 1e-12);
        }
    }

    #[test]
    fn sign_convention() {
        let d = decompose(&Graph::path(3));
        // Perron vector (1/2, 1/√2, 1/2): largest entry is the center.
        let u = d.vectors();
        assert!(u.get(1, 0) > 0.0);
        assert!((u.get(1, 0) - 0.5f64.sqrt()).abs() < 1e-12);
        // Null vector (1/√2, 0, -1/√2): tie broken towards index 0.
        assert!(u.get(0, 1) > 0.0);
    }

    #[test]
    fn matrix_abs_examples() {
        let k2 = matrix_abs(&decompose(&Graph::complete(2)));
        assert!(k2.matrix().max_abs_diff(&Matrix::identity(2)) < 1e-15);

        let zero = matrix_abs(&decompose(&Graph::empty(3)));
        assert!(zero.matrix().max_abs_diff(&Matrix::zeros(3)) == 0.0);

        // |A(P_3)| = √2 [[1/2,0,1/2],[0,1,0],[1/2,0,1/2]].
        let h = 0.5f64.sqrt();
        let expected =
            Matrix::from_row_major(3, vec![h, 0.0, h, 0.0, 2f64.sqrt(), 0.0, h, 0.0, h]).unwrap();
        let p3 = matrix_abs(&decompose(&Graph::path(3)));
        assert!(p3.matrix().max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn empty_matrix() {
        let d = decompose(&Graph::empty(0));
        assert!(d.eigenvalues().is_empty());
        assert_eq!(matrix_abs(&d).order(), 0);
    }

    #[test]
    fn general_symmetric_input() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1.
        let m = SymmetricMatrix::new(Matrix::from_row_major(2, vec![2.0, 1.0, 1.0, 2.0]).unwrap())
            .unwrap();
        let d = eigendecompose(&m).unwrap();
        assert_close(d.eigenvalues(), &[3.0, 1.0], 1e-14);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn decomposition_invariants(g in arb_graph(12)) {
            let a = adjacency_matrix(&g);
            let d = eigendecompose(&a).unwrap();
            let n = g.order();
            let u = d.vectors();
            let gram = u.transpose().mul(u);
            prop_assert!(gram.max_abs_diff(&Matrix::identity(n)) <= 1e-10);
            prop_assert!(d.reconstruct().max_abs_diff(a.matrix()) <= 1e-10);
            for i in 0..n {
                let row: f64 = d.weights().row(i).iter().sum();
                prop_assert!((row - 1.0).abs() <= 1e-10);
                prop_assert!(d.weights().row(i).iter().all(|&p| (0.0..=1.0 + 1e-12).contains(&p)));
            }
            prop_assert!(d.eigenvalues().windows(2).all(|w| w[0] >= w[1]));
            let trace: f64 = d.eigenvalues().iter().sum();
            prop_assert!(trace.abs() <= 1e-9);
            let squares: f64 = d.eigenvalues().iter().map(|l| l * l).sum();
            prop_assert!((squares - 2.0 * g.size() as f64).abs() <= 1e-8);

            let x = matrix_abs(&d);
            let a2 = a.matrix().mul(a.matrix());
            prop_assert!(x.matrix().mul(x.matrix()).max_abs_diff(&a2) <= 1e-8);

            let again = eigendecompose(&a).unwrap();
            prop_assert_eq!(
                d.eigenvalues().iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
                again.eigenvalues().iter().map(|x| x.to_bits()).collect::<Vec<_>>()
            );
            prop_assert_eq!(
                d.vectors().as_slice().iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
                again.vectors().as_slice().iter().map(|x| x.to_bits()).collect::<Vec<_>>()
            );
        }
    }
}
