//! Graph energy, vertex and edge energies, the Randić index, and the
//! Cauchy–Schwarz witness for adjacent vertex energies.
//!
//! Vertex energies have two independent routes: the spectral-weight sum
//! `Σ_j u_ij² |λ_j|` ([`vertex_energies_spectral`]) and the diagonal of the
//! matrix absolute value ([`vertex_energies_abs`]). The first is the default
//! everywhere else in the crate.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::spectral::{adjacency_matrix, eigendecompose, matrix_abs, EigenDecomposition, SpectralError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DescriptorError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("witness needs two distinct vertices, got ({0}, {0})")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexEnergyProfile {
    pub per_vertex: Vec<f64>,
    pub total: f64,
}

impl VertexEnergyProfile {
    fn from_values(per_vertex: Vec<f64>) -> Self {
        let total = per_vertex.iter().sum();
        VertexEnergyProfile { per_vertex, total }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeEnergyProfile {
    pub per_edge: BTreeMap<(usize, usize), f64>,
    pub total: f64,
}

/// `⟨v, w⟩`, `‖v‖²` and `‖w‖²` for the witness vectors of a vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessPair {
    pub inner: f64,
    pub norm_sq_v: f64,
    pub norm_sq_w: f64,
}

pub fn decompose(g: &Graph) -> Result<EigenDecomposition, DescriptorError> {
    Ok(eigendecompose(&adjacency_matrix(g))?)
}

/// `E(v_i) = Σ_j p_ij |λ_j|`.
pub fn vertex_energies_spectral(g: &Graph) -> Result<VertexEnergyProfile, DescriptorError> {
    Ok(vertex_energies_from(&decompose(g)?))
}

pub fn vertex_energies_from(d: &EigenDecomposition) -> VertexEnergyProfile {
    let abs: Vec<f64> = d.eigenvalues().iter().map(|l| l.abs()).collect();
    let per_vertex = (0..d.order())
        .map(|i| d.weights().row(i).iter().zip(&abs).map(|(p, l)| p * l).sum())
        .collect();
    VertexEnergyProfile::from_values(per_vertex)
}

/// `E(v_i) = |A|_ii`.
pub fn vertex_energies_abs(g: &Graph) -> Result<VertexEnergyProfile, DescriptorError> {
    let abs = matrix_abs(&decompose(g)?);
    let per_vertex = (0..g.order()).map(|i| abs.get(i, i)).collect();
    Ok(VertexEnergyProfile::from_values(per_vertex))
}

/// `Σ_j |λ_j|`.
pub fn graph_energy(g: &Graph) -> Result<f64, DescriptorError> {
    Ok(energy_from(&decompose(g)?))
}

pub fn energy_from(d: &EigenDecomposition) -> f64 {
    d.eigenvalues().iter().map(|l| l.abs()).sum()
}

/// Sum over edges of `1/√(deg(u)·deg(v))`; zero for edgeless graphs.
pub fn randic_index(g: &Graph) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

/// `E(e) = E(u)/deg(u) + E(v)/deg(v)` for every edge.
pub fn edge_energies(g: &Graph) -> Result<EdgeEnergyProfile, DescriptorError> {
    Ok(edge_energies_from(g, &vertex_energies_spectral(g)?))
}

pub fn edge_energies_from(g: &Graph, vertex: &VertexEnergyProfile) -> EdgeEnergyProfile {
    let e = &vertex.per_vertex;
    let per_edge: BTreeMap<_, _> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let value = e[u] / g.degree(u) as f64 + e[v] / g.degree(v) as f64;
            ((u, v), value)
        })
        .collect();
    let total = per_edge.values().sum();
    EdgeEnergyProfile { per_edge, total }
}

/// Builds `v_k = u_ik √|λ_k|` and `w_k = u_jk sign(λ_k) √|λ_k|`, so that
/// `⟨v, w⟩ = A_ij`, `‖v‖² = E(v_i)` and `‖w‖² = E(v_j)`.
pub fn cs_witness(g: &Graph, i: usize, j: usize) -> Result<WitnessPair, DescriptorError> {
    let n = g.order();
    for vertex in [i, j] {
        if vertex >= n {
            return Err(DescriptorError::VertexOutOfRange { vertex, n });
        }
    }
    if i == j {
        return Err(DescriptorError::SameVertex(i));
    }
    Ok(witness_from(&decompose(g)?, i, j))
}

pub fn witness_from(d: &EigenDecomposition, i: usize, j: usize) -> WitnessPair {
    let zero = d.zero_threshold();
    let u = d.vectors();
    let mut pair = WitnessPair {
        inner: 0.0,
        norm_sq_v: 0.0,
        norm_sq_w: 0.0,
    };
    for (k, &lambda) in d.eigenvalues().iter().enumerate() {
        // sign(0) = +1; the coordinate vanishes anyway.
        let sign = if lambda < -zero { -1.0 } else { 1.0 };
        let root = lambda.abs().sqrt();
        let vk = u.get(i, k) * root;
        let wk = u.get(j, k) * sign * root;
        pair.inner += vk * wk;
        pair.norm_sq_v += vk * vk;
        pair.norm_sq_w += wk * wk;
    }
    pair
}
