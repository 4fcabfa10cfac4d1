//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, breadth-first augmenting-path search with blossom contraction).

use std::collections::VecDeque;

use super::Graph;

const NONE: usize = usize::MAX;

/// Returns a maximum matching as sorted edges `(u, v)`, `u < v`.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut search = Search::new(g);
    for root in 0..g.order() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    let mut out: Vec<(usize, usize)> = search
        .mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != NONE && v < m)
        .map(|(v, &m)| (v, m))
        .collect();
    out.sort_unstable();
    out
}

/// True when every pair is an edge of `g` and no two pairs share a vertex.
pub fn is_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.order()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) || used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Search {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract the blossom onto its base.
                    let current = self.lowest_common_base(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, current, to);
                    self.mark_path(to, current, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = current;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, base: usize, mut child: usize) {
        while self.base[v] != base {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(g: &Graph) -> usize {
        let m = maximum_matching(g);
        assert!(is_matching(g, &m));
        m.len()
    }

    #[test]
    fn examples() {
        assert_eq!(nu(&Graph::path(4)), 2);
        assert_eq!(nu(&Graph::complete(3)), 1);
        assert_eq!(nu(&Graph::petersen()), 5);
        assert_eq!(nu(&Graph::empty(4)), 0);
        assert_eq!(nu(&Graph::empty(0)), 0);
    }

    #[test]
    fn needs_blossom_contraction() {
        // Triangle 0-1-2 with pendant paths 2-3 and 0-4-5: a greedy or
        // bipartite search that ignores the odd cycle can stop at 2.
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(nu(&g), 3);
        assert_eq!(nu(&Graph::cycle(5)), 2);
        assert_eq!(nu(&Graph::cycle(7)), 3);
        assert_eq!(nu(&Graph::complete(7)), 3);
    }

    #[test]
    fn is_matching_rejects_shared_vertex_and_non_edges() {
        let g = Graph::path(3);
        assert!(!is_matching(&g, &[(0, 1), (1, 2)]));
        assert!(!is_matching(&g, &[(0, 2)]));
        assert!(is_matching(&g, &[(1, 2)]));
    }
}
