//! Simple undirected graphs on vertices `0..n`.
//!
//! Vertex sets are handled as `u64` bitmasks, so graphs are limited to 64
//! vertices; the interesting instances here have at most a dozen.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// An edge `{i, j}` stored with `i < j`.
pub type Edge = [usize; 2];

/// A triangle `{i, j, k}` stored with `i < j < k`.
pub type Triangle = [usize; 3];

/// Simple graph with edges sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Duplicate pairs are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > 64 {
            return Err(Error::TooManyVertices(n));
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            list.push([a.min(b), a.max(b)]);
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![0u64; n];
        for &[i, j] in &list {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    /// Position of `{a, b}` in the canonical edge order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = [a.min(b), a.max(b)];
        self.edges.binary_search(&key).ok()
    }

    /// All triangles, sorted.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for &[i, j] in &self.edges {
            let common = self.adj[i] & self.adj[j] & above(j);
            for k in bits(common) {
                out.push([i, j, k]);
            }
        }
        out.sort_unstable();
        out
    }

    /// Triangles containing the edge `{a, b}`.
    pub fn triangles_on(&self, edge: Edge) -> Vec<Triangle> {
        let [a, b] = edge;
        bits(self.adj[a] & self.adj[b])
            .map(|c| sorted3(a, b, c))
            .collect()
    }

    /// Every vertex set of size at least two inducing a complete graph, as
    /// bitmasks in increasing numeric order.
    pub fn cliques(&self) -> Vec<u64> {
        let mut out = Vec::new();
        // Extend each clique only by vertices larger than its maximum, so every
        // clique is produced exactly once.
        fn grow(g: &Graph, clique: u64, candidates: u64, out: &mut Vec<u64>) {
            for v in bits(candidates) {
                let next = clique | 1 << v;
                if next.count_ones() >= 2 {
                    out.push(next);
                }
                grow(g, next, candidates & g.adj[v] & above(v), out);
            }
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        grow(self, 0, all, &mut out);
        out.sort_unstable();
        out
    }

    /// Number of cliques of size at least two.
    pub fn clique_count(&self) -> usize {
        self.cliques().len()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&[i, j]| self.adj[i] & self.adj[j] == 0)
    }

    pub fn is_k4_free(&self) -> bool {
        for &[i, j] in &self.edges {
            let common = self.adj[i] & self.adj[j];
            for k in bits(common) {
                if common & self.adj[k] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn clique_number(&self) -> usize {
        self.cliques()
            .iter()
            .map(|c| c.count_ones() as usize)
            .max()
            .unwrap_or(if self.n > 0 { 1 } else { 0 })
    }

    /// Contracts every block of `p` to a single vertex.
    pub fn contract(&self, p: &VertexPartition) -> Result<Graph> {
        Ok(self.contraction(p)?.graph)
    }

    /// Contraction together with the vertex map. Blocks of the completed
    /// partition are numbered by increasing minimum vertex.
    pub fn contraction(&self, p: &VertexPartition) -> Result<Contraction> {
        let block_of = p.block_map(self.n)?;
        let blocks = block_of.iter().copied().max().map_or(0, |m| m + 1);
        let graph = Graph::new(
            blocks,
            self.edges
                .iter()
                .map(|&[i, j]| (block_of[i], block_of[j]))
                .filter(|(a, b)| a != b),
        )?;
        Ok(Contraction { graph, block_of })
    }

    /// Keeps the vertex set and only the edges lying inside a block of `p`.
    pub fn restrict(&self, p: &VertexPartition) -> Result<Graph> {
        let block_of = p.block_map(self.n)?;
        Graph::new(
            self.n,
            self.edges
                .iter()
                .filter(|&&[i, j]| block_of[i] == block_of[j])
                .map(|&[i, j]| (i, j)),
        )
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    // Generators.

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, core::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Generator(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    /// Two triangles `{0,1,2}` and `{1,2,3}` glued along the edge `{1,2}`.
    pub fn bi_triangle() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("valid")
    }

    /// Graph of the 3-dimensional cyclic polytope on `n` vertices: the path
    /// `1..n-2`, the edge `{0, n-1}`, and both apices `0` and `n-1` joined to
    /// every path vertex.
    pub fn cyc3(n: usize) -> Result<Graph> {
        if n < 4 {
            return Err(Error::Generator(format!("cyc3 needs n >= 4, got {n}")));
        }
        let last = n - 1;
        let mut edges = vec![(0, last)];
        for i in 1..last {
            edges.push((0, i));
            edges.push((i, last));
            if i + 1 < last {
                edges.push((i, i + 1));
            }
        }
        Graph::new(n, edges)
    }

    /// `n - 3` copies of `K4` glued along the common triangle `{0, 1, 2}`.
    pub fn wedge_k4(n: usize) -> Result<Graph> {
        if n < 4 {
            return Err(Error::Generator(format!("wedge_k4 needs n >= 4, got {n}")));
        }
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        for k in 3..n {
            edges.extend([(0, k), (1, k), (2, k)]);
        }
        Graph::new(n, edges)
    }
}

/// Result of [`Graph::contraction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// Block index of each original vertex.
    pub block_of: Vec<usize>,
}

/// Disjoint vertex blocks, implicitly completed by singletons.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        VertexPartition { blocks }
    }

    /// The partition with a single nontrivial block.
    pub fn single(block: &[usize]) -> Self {
        VertexPartition {
            blocks: vec![block.to_vec()],
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block index of every vertex of `0..n` in the completed partition,
    /// blocks numbered by increasing minimum.
    pub fn block_map(&self, n: usize) -> Result<Vec<usize>> {
        const NONE: usize = usize::MAX;
        // Label each vertex by the minimum of its block first.
        let mut rep = vec![NONE; n];
        for block in &self.blocks {
            let min = *block.iter().min().ok_or(Error::EmptyBlock)?;
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if rep[v] != NONE {
                    return Err(Error::OverlappingBlocks(v));
                }
                rep[v] = min;
            }
        }
        for (v, r) in rep.iter_mut().enumerate() {
            if *r == NONE {
                *r = v;
            }
        }
        let mut index = vec![NONE; n];
        let mut next = 0;
        for v in 0..n {
            if rep[v] == v {
                index[v] = next;
                next += 1;
            }
        }
        Ok(rep.iter().map(|&r| index[r]).collect())
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let b = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(b)
    })
}

/// Vertices strictly greater than `v`.
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !((2u64 << v) - 1)
    }
}

pub(crate) fn sorted3(a: usize, b: usize, c: usize) -> Triangle {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_clique_count(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|s| s.count_ones() >= 2)
            .filter(|&s| {
                bits(s).all(|i| bits(s).all(|j| i == j || g.has_edge(i, j)))
            })
            .count()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        let g = Graph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[[0, 1], [1, 2]]);
    }

    #[test]
    fn triangles_of_small_graphs() {
        assert_eq!(Graph::complete(3).unwrap().triangles(), vec![[0, 1, 2]]);
        assert!(Graph::path(3).unwrap().triangles().is_empty());
        assert_eq!(Graph::bi_triangle().triangles(), vec![[0, 1, 2], [1, 2, 3]]);
    }

    #[test]
    fn clique_counts() {
        assert_eq!(Graph::complete(3).unwrap().clique_count(), 4);
        assert_eq!(Graph::bi_triangle().clique_count(), 7);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(brute_clique_count(&k4), 11);
        assert_eq!(k4.clique_count(), 11);
        for n in 0..=6 {
            let kn = Graph::complete(n).unwrap();
            assert_eq!(kn.clique_count(), (1 << n) - n - 1);
        }
        for g in [Graph::cyc3(5).unwrap(), Graph::wedge_k4(6).unwrap()] {
            assert_eq!(g.clique_count(), brute_clique_count(&g));
        }
    }

    #[test]
    fn clique_freeness() {
        assert!(!Graph::complete(4).unwrap().is_k4_free());
        let bt = Graph::bi_triangle();
        assert!(bt.is_k4_free());
        assert!(!bt.is_triangle_free());
        let c5 = Graph::cyc3(5).unwrap();
        assert!(!c5.is_k4_free());
        assert!(c5.cliques().contains(&0b10111));
        assert!(Graph::cycle(4).unwrap().is_triangle_free());
    }

    #[test]
    fn contraction_examples() {
        let k3 = Graph::complete(3).unwrap();
        let c = k3.contract(&VertexPartition::single(&[0, 1])).unwrap();
        assert_eq!((c.n(), c.edges()), (2, &[[0, 1]][..]));

        let bt = Graph::bi_triangle();
        let c = bt.contract(&VertexPartition::single(&[0, 1, 2])).unwrap();
        assert_eq!((c.n(), c.edges()), (2, &[[0, 1]][..]));

        let p4 = Graph::path(4).unwrap();
        let c = p4.contract(&VertexPartition::single(&[1, 2])).unwrap();
        assert_eq!(c, Graph::path(3).unwrap());

        assert_eq!(
            k3.contract(&VertexPartition::single(&[0, 5])),
            Err(Error::VertexOutOfRange { vertex: 5, n: 3 })
        );
        assert_eq!(
            k3.contract(&VertexPartition::new(vec![vec![0, 1], vec![1, 2]])),
            Err(Error::OverlappingBlocks(1))
        );
    }

    #[test]
    fn contracting_an_edge_drops_one_vertex() {
        for g in [
            Graph::cyc3(6).unwrap(),
            Graph::wedge_k4(5).unwrap(),
            Graph::cycle(5).unwrap(),
        ] {
            for &[i, j] in g.edges() {
                let c = g.contract(&VertexPartition::single(&[i, j])).unwrap();
                assert_eq!(c.n(), g.n() - 1);
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let k4 = Graph::complete(4).unwrap();
        let r = k4.restrict(&VertexPartition::single(&[0, 1, 2])).unwrap();
        assert_eq!(r.n(), 4);
        assert_eq!(r.edges(), Graph::complete(3).unwrap().edges());

        let bt = Graph::bi_triangle();
        let r = bt
            .restrict(&VertexPartition::new(vec![vec![0, 1], vec![2, 3]]))
            .unwrap();
        assert_eq!(r.edges(), &[[0, 1], [2, 3]]);

        let r = bt.restrict(&VertexPartition::default()).unwrap();
        assert_eq!(r.edge_count(), 0);
    }

    #[test]
    fn components() {
        assert_eq!(Graph::path(2).unwrap().connected_components().len(), 1);
        assert_eq!(Graph::empty(3).unwrap().connected_components().len(), 3);
        assert_eq!(Graph::bi_triangle().connected_components().len(), 1);
        let g = Graph::new(5, [(0, 3), (1, 4)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 3], vec![1, 4], vec![2]]
        );
    }

    #[test]
    fn generators() {
        assert_eq!(Graph::cyc3(4).unwrap(), Graph::complete(4).unwrap());
        let w = Graph::wedge_k4(5).unwrap();
        assert_eq!(w.edge_count(), 9);
        assert_eq!(
            w.cliques()
                .iter()
                .filter(|c| c.count_ones() == 4)
                .collect::<Vec<_>>(),
            vec![&0b01111, &0b10111]
        );
        assert_eq!(Graph::path(3).unwrap().edges(), &[[0, 1], [1, 2]]);
        assert_eq!(Graph::cyc3(5).unwrap(), Graph::cyc3(5).unwrap());
        for n in 4..=8 {
            let g = Graph::cyc3(n).unwrap();
            assert_eq!(g.edge_count(), 3 * (n - 2));
            assert_eq!(2 * g.triangles().len(), 6 * n - 16);
            assert_eq!(g.clique_number(), 4);
        }
        assert!(Graph::cyc3(3).is_err());
        assert!(Graph::wedge_k4(3).is_err());
    }

    #[test]
    fn triangles_are_cliques() {
        let g = Graph::cyc3(6).unwrap();
        let cliques = g.cliques();
        for t in g.triangles() {
            let mask = t.iter().fold(0u64, |m, &v| m | 1 << v);
            assert!(cliques.contains(&mask));
        }
        assert_eq!(
            g.triangles().len(),
            cliques.iter().filter(|c| c.count_ones() == 3).count()
        );
    }
}
