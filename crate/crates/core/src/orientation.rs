//! Acyclic orientations, flips, and the vertices of `Z_G` they label.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bits, Graph};
use crate::{Error, Result};

/// Edge directions in canonical edge order: bit `k` clear means the stored
/// pair `{i, j}` (with `i < j`) is oriented `i -> j`, set means `j -> i`.
///
/// The value does not carry its graph; every function taking one also takes
/// the [`Graph`] it orients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AcyclicOrientation(u64);

impl AcyclicOrientation {
    pub const fn from_bits(bits: u64) -> Self {
        AcyclicOrientation(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Whether edge `k` runs from its larger to its smaller endpoint.
    pub fn is_reversed(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    /// `(tail, head)` of edge `k`.
    pub fn arc(self, g: &Graph, k: usize) -> (usize, usize) {
        let [i, j] = g.edges()[k];
        if self.is_reversed(k) {
            (j, i)
        } else {
            (i, j)
        }
    }

    pub fn flipped(self, k: usize) -> Self {
        AcyclicOrientation(self.0 ^ 1 << k)
    }

    /// Orientation with edge `k` pointing at `head`.
    pub fn with_head(self, g: &Graph, k: usize, head: usize) -> Self {
        let [_, j] = g.edges()[k];
        let reversed = head != j;
        AcyclicOrientation(self.0 & !(1 << k) | u64::from(reversed) << k)
    }

    /// The directions as a `0`/`1` string in edge order.
    pub fn bit_string(self, edge_count: usize) -> String {
        (0..edge_count)
            .map(|k| if self.is_reversed(k) { '1' } else { '0' })
            .collect()
    }

    pub fn from_bit_string(s: &str) -> Option<Self> {
        if s.len() > 64 {
            return None;
        }
        let mut bits = 0u64;
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << k,
                _ => return None,
            }
        }
        Some(AcyclicOrientation(bits))
    }
}

fn out_masks(g: &Graph, o: AcyclicOrientation) -> Vec<u64> {
    let mut out = vec![0u64; g.n()];
    for k in 0..g.edge_count() {
        let (t, h) = o.arc(g, k);
        out[t] |= 1 << h;
    }
    out
}

/// Whether the directed graph has no directed cycle.
pub fn is_acyclic(g: &Graph, o: AcyclicOrientation) -> bool {
    let out = out_masks(g, o);
    let mut indeg = vec![0u32; g.n()];
    for m in &out {
        for h in bits(*m) {
            indeg[h] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        removed += 1;
        for h in bits(out[v]) {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                stack.push(h);
            }
        }
    }
    removed == g.n()
}

fn reaches(out: &[u64], from: usize, to: usize) -> bool {
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 {
        if frontier >> to & 1 == 1 {
            return true;
        }
        let mut next = 0;
        for v in bits(frontier) {
            next |= out[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    false
}

/// Every acyclic orientation of `g`, lexicographic in the direction sequence
/// `(d_0, d_1, ...)` with `i -> j` before `j -> i`.
///
/// Fails with [`Error::OrientationCap`] once more than `cap` are found.
pub fn enumerate_acyclic(g: &Graph, cap: usize) -> Result<Vec<AcyclicOrientation>> {
    if g.edge_count() > 64 {
        return Err(Error::TooManyEdges(g.edge_count()));
    }
    let mut out = vec![0u64; g.n()];
    let mut result = Vec::new();
    descend(g, 0, 0, &mut out, &mut result, cap)?;
    Ok(result)
}

fn descend(
    g: &Graph,
    k: usize,
    bits_so_far: u64,
    out: &mut [u64],
    result: &mut Vec<AcyclicOrientation>,
    cap: usize,
) -> Result<()> {
    if k == g.edge_count() {
        if result.len() == cap {
            return Err(Error::OrientationCap { cap });
        }
        result.push(AcyclicOrientation(bits_so_far));
        return Ok(());
    }
    let [i, j] = g.edges()[k];
    for (reversed, t, h) in [(0u64, i, j), (1, j, i)] {
        // Adding t -> h closes a cycle exactly when h already reaches t.
        if reaches(out, h, t) {
            continue;
        }
        out[t] |= 1 << h;
        let r = descend(g, k + 1, bits_so_far | reversed << k, out, result, cap);
        out[t] &= !(1 << h);
        r?;
    }
    Ok(())
}

/// All acyclic orientations reachable from `o` by reversing one edge, with
/// the index of the reversed edge.
pub fn flip_neighbors(g: &Graph, o: AcyclicOrientation) -> Vec<(usize, AcyclicOrientation)> {
    let mut out = out_masks(g, o);
    let mut result = Vec::new();
    for k in 0..g.edge_count() {
        let (t, h) = o.arc(g, k);
        // Reversal is acyclic iff h does not reach t without the arc itself.
        out[t] &= !(1 << h);
        if !reaches(&out, t, h) {
            result.push((k, o.flipped(k)));
        }
        out[t] |= 1 << h;
    }
    result
}

/// The vertex of `Z_G` labelled by `o`: coordinate `v` is the in-degree of
/// `v`. It is the point of `Z_G` maximizing any `c` with `c_u < c_v` whenever
/// `u -> v`.
pub fn vertex_point(g: &Graph, o: AcyclicOrientation) -> Vec<i64> {
    let mut p = vec![0i64; g.n()];
    for k in 0..g.edge_count() {
        p[o.arc(g, k).1] += 1;
    }
    p
}

/// A topological order of the vertices (ties broken by smallest index).
pub fn topological_order(g: &Graph, o: AcyclicOrientation) -> Result<Vec<usize>> {
    let out = out_masks(g, o);
    let mut indeg = vec![0u32; g.n()];
    for m in &out {
        for h in bits(*m) {
            indeg[h] += 1;
        }
    }
    let mut order = Vec::with_capacity(g.n());
    let mut ready: u64 = (0..g.n()).filter(|&v| indeg[v] == 0).fold(0, |m, v| m | 1 << v);
    while ready != 0 {
        let v = ready.trailing_zeros() as usize;
        ready &= ready - 1;
        order.push(v);
        for h in bits(out[v]) {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                ready |= 1 << h;
            }
        }
    }
    if order.len() == g.n() {
        Ok(order)
    } else {
        Err(Error::Cyclic)
    }
}
