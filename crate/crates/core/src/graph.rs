//! Undirected simple graphs and the elementary matrices and traversals built on them.
//!
//! Vertices are `0..n` inside the library. File formats and the command line
//! speak 1-based labels; conversion happens at those boundaries.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph kept both as a dense adjacency matrix and as sorted
/// neighbour lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            nbrs: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from 1-based unordered pairs. Repeated pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { u, v });
            }
            g.insert_edge(u - 1, v - 1);
        }
        g.finish();
        Ok(g)
    }

    /// Builds a graph from 0-based pairs. Panics on invalid pairs; intended
    /// for internally generated edge sets.
    pub fn from_zero_based(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            assert!(
                u < n && v < n && u != v,
                "invalid edge ({u}, {v}) for n = {n}"
            );
            g.insert_edge(u, v);
        }
        g.finish();
        g
    }

    /// Builds a graph from a symmetric 0/1 predicate evaluated on `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if f(i, j) {
                    g.insert_edge(i, j);
                }
            }
        }
        g.finish();
        g
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        if !self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
            self.nbrs[u].push(v);
            self.nbrs[v].push(u);
            self.edge_count += 1;
        }
    }

    fn finish(&mut self) {
        for list in &mut self.nbrs {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| i64::from(self.has_edge(i, j)))
    }

    /// `L = D - A`.
    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                self.degree(i) as i64
            } else {
                -i64::from(self.has_edge(i, j))
            }
        })
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        Graph::from_zero_based(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Induced subgraph on `vertices`; local vertex `k` is `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |a, b| {
            self.has_edge(vertices[a], vertices[b])
        })
    }

    /// Graph whose edges are the nonzero off-diagonal entries of `m`.
    pub fn from_nonzero_pattern(m: &IntMatrix) -> Graph {
        assert_eq!(m.rows(), m.cols());
        Graph::from_fn(m.rows(), |i, j| m.get(i, j) != 0 || m.get(j, i) != 0)
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &v in &self.nbrs[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceTable {
        let mut d = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            d.extend(self.bfs_distances(s));
        }
        DistanceTable { n: self.n, d }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut block = vec![start];
            let mut head = 0;
            while head < block.len() {
                let u = block[head];
                head += 1;
                for &v in &self.nbrs[u] {
                    if !seen[v] {
                        seen[v] = true;
                        block.push(v);
                    }
                }
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `perm` maps the edge set onto itself.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        self.maps_onto(perm, self)
    }

    /// Whether `perm` is an adjacency-preserving bijection from `self` onto `other`.
    pub fn maps_onto(&self, perm: &[usize], other: &Graph) -> bool {
        if perm.len() != self.n || other.n != self.n || self.edge_count != other.edge_count {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return false;
            }
            hit[p] = true;
        }
        self.edges().all(|(u, v)| other.has_edge(perm[u], perm[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Dense row-major matrix of signed integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn count_nonzero(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    /// Plain cubic product.
    pub fn matmul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    /// Whitespace-separated rows, one per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Hop distances between all vertex pairs; `None` marks unreachable pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceTable {
    n: usize,
    d: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.d[i * self.n + j]
    }

    /// Largest finite distance. For a disconnected graph this is the largest
    /// component diameter.
    pub fn max_finite(&self) -> usize {
        self.d.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Diameter of a connected graph; `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        if self.d.iter().any(Option::is_none) {
            None
        } else {
            Some(self.max_finite())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 4)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::from_edge_list(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = p4();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        let k = k3();
        assert_eq!(k.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::from_edge_list(3, &[(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edge_list(2, &[(1, 1)]),
            Err(Error::SelfLoop { u: 1, v: 1 })
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(1, 3)]),
            Err(Error::VertexOutOfRange { u: 1, v: 3, n: 2 })
        );
        assert!(Graph::from_edge_list(2, &[(0, 1)]).is_err());
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(
            k3().laplacian().to_rows(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        assert_eq!(Graph::empty(1).laplacian().to_rows(), vec![vec![0]]);
        let l = p4().laplacian();
        assert_eq!(
            l.to_rows(),
            vec![
                vec![1, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 1]
            ]
        );
        for i in 0..4 {
            assert_eq!(l.row(i).iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn distances() {
        let d = p4().all_pairs_distances();
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.diameter(), Some(3));
        let d = k3().all_pairs_distances();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, j), Some(usize::from(i != j)));
            }
        }
        assert_eq!(d.diameter(), Some(1));
        let two = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        let d = two.all_pairs_distances();
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.diameter(), None);
        assert_eq!(d.max_finite(), 1);
    }

    #[test]
    fn component_blocks() {
        assert_eq!(p4().components(), vec![vec![0, 1, 2, 3]]);
        let two = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(
            Graph::empty(3).components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let mixed = Graph::from_edge_list(5, &[(2, 5), (1, 4)]).unwrap();
        assert_eq!(mixed.components(), vec![vec![0, 3], vec![1, 4], vec![2]]);
    }

    #[test]
    fn relabel_and_maps_onto() {
        let g = p4();
        let perm = [3, 2, 1, 0];
        assert_eq!(g.relabel(&perm), g);
        assert!(g.is_automorphism(&perm));
        assert!(!g.is_automorphism(&[1, 0, 2, 3]));
        let h = g.relabel(&[2, 0, 3, 1]);
        assert!(g.maps_onto(&[2, 0, 3, 1], &h));
        assert!(!g.maps_onto(&[0, 0, 1, 2], &h));
    }

    #[test]
    fn matmul_small() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]);
        assert_eq!(a.matmul(&b).to_rows(), vec![vec![-2, 1], vec![-4, 3]]);
        assert_eq!(a.dump(), "1 2\n3 4\n");
    }
}
