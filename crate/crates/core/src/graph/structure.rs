use serde::Serialize;

use super::Graph;

/// Connected components with ids ordered by smallest member vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub assignment: Vec<usize>,
    pub component_count: usize,
}

impl ComponentPartition {
    /// Member vertices of each component, ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

pub fn connected_components(g: &Graph) -> ComponentPartition {
    let n = g.order();
    let mut assignment = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    // Scanning roots in ascending order gives ids ordered by smallest member.
    for root in 0..n {
        if assignment[root] != usize::MAX {
            continue;
        }
        assignment[root] = count;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if assignment[w] == usize::MAX {
                    assignment[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    ComponentPartition {
        assignment,
        component_count: count,
    }
}

/// Degree structure of a whole graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum StructureKind {
    Regular(usize),
    /// Side 1 is the degree class containing vertex 0; `sides[v]` is 1 or 2.
    BipartiteSemiRegular {
        n1: usize,
        n2: usize,
        d1: usize,
        d2: usize,
        sides: Vec<u8>,
    },
    Irregular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralClass {
    pub kind: StructureKind,
    /// `Some((a, b))` with `a <= b` when the component is `K_{a,b}`.
    pub certificates: Vec<Option<(usize, usize)>>,
}

impl StructuralClass {
    /// Compact label, e.g. `Regular(2)` or `BipartiteSemiRegular(1,3,3,1)`.
    pub fn label(&self) -> String {
        match &self.kind {
            StructureKind::Regular(d) => format!("Regular({d})"),
            StructureKind::BipartiteSemiRegular { n1, n2, d1, d2, .. } => {
                format!("BipartiteSemiRegular({n1},{n2},{d1},{d2})")
            }
            StructureKind::Irregular => "Irregular".to_string(),
        }
    }
}

pub fn classify_structure(g: &Graph) -> StructuralClass {
    let partition = connected_components(g);
    let certificates = partition
        .members()
        .iter()
        .map(|members| complete_bipartite_certificate(&g.induced_subgraph(members)))
        .collect();
    StructuralClass {
        kind: degree_structure(g),
        certificates,
    }
}

fn degree_structure(g: &Graph) -> StructureKind {
    let degrees = g.degrees();
    let Some(&first) = degrees.first() else {
        return StructureKind::Regular(0);
    };
    if degrees.iter().all(|&d| d == first) {
        return StructureKind::Regular(first);
    }
    // With two distinct degrees and every edge joining them, the degree
    // classes are the only admissible sides.
    let Some(&other) = degrees.iter().find(|&&d| d != first) else {
        unreachable!("non-regular graph has a second degree");
    };
    if degrees.iter().any(|&d| d != first && d != other) {
        return StructureKind::Irregular;
    }
    if g.edges().iter().any(|&(u, v)| degrees[u] == degrees[v]) {
        return StructureKind::Irregular;
    }
    let sides: Vec<u8> = degrees.iter().map(|&d| if d == first { 1 } else { 2 }).collect();
    let n1 = sides.iter().filter(|&&s| s == 1).count();
    StructureKind::BipartiteSemiRegular {
        n1,
        n2: g.order() - n1,
        d1: first,
        d2: other,
        sides,
    }
}

/// `Some((a, b))`, `a <= b`, when `g` is exactly `K_{a,b}` with `a >= 1`.
pub fn complete_bipartite_certificate(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 2 || connected_components(g).component_count != 1 {
        return None;
    }
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if color[w] == u8::MAX {
                color[w] = 1 - color[v];
                stack.push(w);
            } else if color[w] == color[v] {
                return None;
            }
        }
    }
    let a = color.iter().filter(|&&c| c == 0).count();
    let b = n - a;
    // A bipartite graph with sides a, b has at most a*b edges, all crossing.
    (g.size() == a * b).then_some((a.min(b), a.max(b)))
}

/// True when every component with at least two vertices is complete
/// bipartite. Isolated vertices are accepted.
pub fn is_union_complete_bipartite(g: &Graph) -> bool {
    connected_components(g)
        .members()
        .iter()
        .all(|m| m.len() == 1 || complete_bipartite_certificate(&g.induced_subgraph(m)).is_some())
}
