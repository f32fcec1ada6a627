//! Plain graphs on `0..n`, connectivity and decomposition primitives.

use alloc::vec;
use alloc::vec::Vec;

/// Disjoint-set union with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSet {
    pub fn new(n: usize) -> DisjointSet {
        DisjointSet { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let gp = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }

    pub fn set_size(&mut self, x: u32) -> u32 {
        let r = self.find(x);
        self.size[r as usize]
    }
}

/// Undirected simple graph stored as a bit adjacency matrix.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        let words = (n + 63) / 64;
        Graph { n, words, adj: vec![0; n * words] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> u64 {
        let total: u64 = (0..self.n).map(|u| self.degree(u) as u64).sum();
        total / 2
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        (0..self.words).flat_map(move |w| {
            let mut word = row[w];
            core::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    /// Induced subgraph on `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each a sorted vertex list.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut dsu = DisjointSet::new(self.n);
        for u in 0..self.n {
            for v in self.neighbours(u) {
                if v > u {
                    dsu.union(u as u32, v as u32);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            groups[dsu.find(v as u32) as usize].push(v);
        }
        groups.retain(|g| !g.is_empty());
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Vertex sets of the biconnected blocks (maximal 2-connected subgraphs
    /// and bridges), via Hopcroft-Tarjan.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        struct State<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            timer: usize,
            edge_stack: Vec<(usize, usize)>,
            blocks: Vec<Vec<usize>>,
        }

        fn dfs(st: &mut State, u: usize, parent: usize) {
            st.disc[u] = st.timer;
            st.low[u] = st.timer;
            st.timer += 1;
            let nbrs: Vec<usize> = st.g.neighbours(u).collect();
            for v in nbrs {
                if v == parent {
                    continue;
                }
                if st.disc[v] == usize::MAX {
                    st.edge_stack.push((u, v));
                    dfs(st, v, u);
                    st.low[u] = st.low[u].min(st.low[v]);
                    if st.low[v] >= st.disc[u] {
                        let mut verts: Vec<usize> = Vec::new();
                        while let Some((a, b)) = st.edge_stack.pop() {
                            push_unique(&mut verts, a);
                            push_unique(&mut verts, b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        st.blocks.push(verts);
                    }
                } else if st.disc[v] < st.disc[u] {
                    st.edge_stack.push((u, v));
                    st.low[u] = st.low[u].min(st.disc[v]);
                }
            }
        }

        let mut st = State {
            g: self,
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            timer: 0,
            edge_stack: Vec::new(),
            blocks: Vec::new(),
        };
        for root in 0..self.n {
            if st.disc[root] == usize::MAX {
                dfs(&mut st, root, usize::MAX);
            }
        }
        // isolated vertices form their own trivial blocks
        for v in 0..self.n {
            if self.degree(v) == 0 {
                st.blocks.push(vec![v]);
            }
        }
        st.blocks
    }

    /// Largest block by vertex count (ties: lexicographically smallest set).
    pub fn largest_block(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for b in self.blocks() {
            match &best {
                None => best = Some(b),
                Some(cur) => {
                    if b.len() > cur.len() || (b.len() == cur.len() && b < *cur) {
                        best = Some(b);
                    }
                }
            }
        }
        best
    }

    /// Whole-graph k-connectivity.
    ///
    /// Conventions: k=0 means nonempty with no isolated vertex (a single
    /// vertex counts as isolated); k=1 means connected, with `K_1`
    /// connected; k>=2 requires `n > k` and no vertex cut of size `< k`.
    pub fn is_k_connected(&self, k: u32) -> bool {
        match k {
            0 => self.n >= 1 && (0..self.n).all(|v| self.degree(v) > 0),
            1 => self.n >= 1 && self.is_connected(),
            _ => {
                if self.n <= k as usize {
                    return false;
                }
                if !self.is_connected() {
                    return false;
                }
                !self.has_vertex_cut_smaller_than(k as usize)
            }
        }
    }

    /// True iff some vertex cut of size `< k` disconnects the graph.
    ///
    /// Even-Tarjan reduction: minimum vertex cut between non-adjacent pairs
    /// via unit-capacity max-flow on the split-vertex network, flow capped
    /// at `k` since only the comparison matters.
    pub fn has_vertex_cut_smaller_than(&self, k: usize) -> bool {
        if k == 0 {
            return false;
        }
        if self.n < 2 {
            return false;
        }
        for s in 0..self.n {
            for t in s + 1..self.n {
                if self.has_edge(s, t) {
                    continue;
                }
                if self.max_vertex_flow(s, t, k) < k {
                    return true;
                }
            }
        }
        false
    }

    /// Max number of internally vertex-disjoint `s`-`t` paths, capped at `cap`.
    fn max_vertex_flow(&self, s: usize, t: usize, cap: usize) -> usize {
        // split network: node v -> (v_in = 2v, v_out = 2v+1)
        let nn = 2 * self.n;
        let mut capm = vec![0u32; nn * nn];
        for v in 0..self.n {
            capm[(2 * v) * nn + 2 * v + 1] = 1;
        }
        capm[(2 * s) * nn + 2 * s + 1] = u32::MAX / 2;
        capm[(2 * t) * nn + 2 * t + 1] = u32::MAX / 2;
        for u in 0..self.n {
            for v in self.neighbours(u) {
                capm[(2 * u + 1) * nn + 2 * v] = u32::MAX / 2;
            }
        }
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0usize;
        let mut parent = vec![usize::MAX; nn];
        while flow < cap {
            for p in parent.iter_mut() {
                *p = usize::MAX;
            }
            let mut queue = vec![src];
            parent[src] = src;
            let mut qi = 0;
            while qi < queue.len() && parent[dst] == usize::MAX {
                let u = queue[qi];
                qi += 1;
                for v in 0..nn {
                    if parent[v] == usize::MAX && capm[u * nn + v] > 0 {
                        parent[v] = u;
                        queue.push(v);
                    }
                }
            }
            if parent[dst] == usize::MAX {
                break;
            }
            let mut v = dst;
            while v != src {
                let u = parent[v];
                capm[u * nn + v] -= 1;
                capm[v * nn + u] += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }

    /// Exact largest vertex set inducing a k-connected subgraph, for graphs
    /// with at most 16 vertices. Ties: lexicographically smallest set.
    pub fn largest_k_connected_subset(&self, k: u32) -> Option<Vec<usize>> {
        assert!(self.n <= 16, "exact search is limited to 16 vertices");
        let verts: Vec<u32> = (0..self.n as u32).collect();
        for size in (1..=self.n).rev() {
            for mask in crate::bits::combinations_lex(&verts, size) {
                let subset: Vec<usize> =
                    crate::bits::iter_bits(mask).map(|b| b as usize).collect();
                if self.induced(&subset).is_k_connected(k) {
                    return Some(subset);
                }
            }
        }
        None
    }
}

fn push_unique(v: &mut Vec<usize>, x: usize) {
    if !v.contains(&x) {
        v.push(x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n - 1 {
            g.add_edge(i, i + 1);
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        g.add_edge(n - 1, 0);
        g
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    #[test]
    fn components_and_dsu() {
        let mut g = Graph::new(6);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
    }

    #[test]
    fn k_connectivity_basics() {
        assert!(complete(4).is_k_connected(3));
        assert!(!complete(4).is_k_connected(4));
        assert!(cycle(5).is_k_connected(2));
        assert!(!cycle(5).is_k_connected(3));
        assert!(path(4).is_k_connected(1));
        assert!(!path(4).is_k_connected(2));
        // K_1 is connected but has an isolated vertex
        let single = Graph::new(1);
        assert!(single.is_k_connected(1));
        assert!(!single.is_k_connected(0));
        assert!(!single.is_k_connected(2));
    }

    #[test]
    fn blocks_of_two_triangles_sharing_a_vertex() {
        let mut g = Graph::new(5);
        for &(a, b) in &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)] {
            g.add_edge(a, b);
        }
        let mut blocks = g.blocks();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn largest_k_connected_subset_exact() {
        // triangle plus pendant: largest 2-connected subset is the triangle
        let mut g = Graph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g.add_edge(2, 3);
        assert_eq!(g.largest_k_connected_subset(2), Some(vec![0, 1, 2]));
        assert_eq!(g.largest_k_connected_subset(3), None);
    }
}
