//! Deformed zonotopes rebuilt from edge lengths.
//!
//! Vertices of `Z_G` are acyclic orientations and its Edges are flips. Given
//! a length vector, walking the flip graph from a base orientation places
//! every vertex of the deformation `Q_l`: flipping edge `{i, j}` from `i -> j`
//! to `j -> i` across an Edge of length `l` moves by `l * (e_i - e_j)`. With
//! all lengths equal to one this reproduces the in-degree vertices of `Z_G`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::defcone::{DefCone, LengthVector};
use crate::faces::{Side, ZonotopeEdges};
use crate::graph::{sorted3, Edge, Graph, Triangle};
use crate::linalg::{self, Rational, RationalMatrix};
use crate::orientation::{enumerate_acyclic, flip_neighbors, AcyclicOrientation};
use crate::{Error, Result};

/// Vertices and Edges of `Z_G`: acyclic orientations joined by flips, each
/// flip tagged with the Edge label it crosses.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    graph: Graph,
    orientations: Vec<AcyclicOrientation>,
    index: BTreeMap<u64, usize>,
    /// `(graph edge, neighbour, Edge label)` per orientation.
    adjacency: Vec<Vec<(usize, usize, usize)>>,
}

impl FlipGraph {
    pub fn new(edges: &ZonotopeEdges, max_orientations: usize) -> Result<FlipGraph> {
        let g = edges.graph();
        let orientations = enumerate_acyclic(g, max_orientations)?;
        let index: BTreeMap<u64, usize> = orientations
            .iter()
            .enumerate()
            .map(|(i, o)| (o.bits(), i))
            .collect();
        let adjacency = orientations
            .iter()
            .map(|&o| {
                flip_neighbors(g, o)
                    .into_iter()
                    .map(|(k, next)| Ok((k, index[&next.bits()], edges.label_of_flip(o, k)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(FlipGraph {
            graph: g.clone(),
            orientations,
            index,
            adjacency,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// All acyclic orientations, in enumeration order (the first one is the
    /// least).
    pub fn orientations(&self) -> &[AcyclicOrientation] {
        &self.orientations
    }

    pub fn index_of(&self, o: AcyclicOrientation) -> Option<usize> {
        self.index.get(&o.bits()).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[(usize, usize, usize)] {
        &self.adjacency[i]
    }
}

/// A deformation of `Z_G`, with the position of every vertex of `Z_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedPolytope {
    graph: Graph,
    orientations: Vec<AcyclicOrientation>,
    positions: Vec<Vec<Rational>>,
    vertex_set: Vec<Vec<Rational>>,
}

impl DeformedPolytope {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Position of the vertex labelled by `o`.
    pub fn position(&self, o: AcyclicOrientation) -> Option<&[Rational]> {
        let i = self.orientations.iter().position(|x| *x == o)?;
        Some(&self.positions[i])
    }

    /// Positions in the order of [`FlipGraph::orientations`].
    pub fn positions(&self) -> &[Vec<Rational>] {
        &self.positions
    }

    /// Distinct vertex positions, sorted.
    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertex_set
    }

    pub fn dim(&self) -> usize {
        polytope_dim(self)
    }
}

/// Builds `Q_l` with the least orientation at the origin.
pub fn build_polytope(flips: &FlipGraph, l: &LengthVector) -> Result<DeformedPolytope> {
    build_polytope_from(flips, l, 0)
}

/// Builds `Q_l` with orientation number `base` at the origin.
pub fn build_polytope_from(flips: &FlipGraph, l: &LengthVector, base: usize) -> Result<DeformedPolytope> {
    let g = &flips.graph;
    let n = g.n();
    let count = flips.orientations.len();
    let mut positions: Vec<Option<Vec<Rational>>> = vec![None; count];
    if count == 0 {
        return Err(Error::Internal("graph without orientations".into()));
    }
    positions[base] = Some(vec![Rational::zero(); n]);
    let mut queue = VecDeque::from([base]);
    while let Some(cur) = queue.pop_front() {
        let here = positions[cur].clone().expect("queued vertices are placed");
        let o = flips.orientations[cur];
        for &(k, next, label) in &flips.adjacency[cur] {
            let len = l.values().get(label).ok_or(Error::LengthMismatch {
                expected: label + 1,
                got: l.len(),
            })?;
            let (tail, head) = o.arc(g, k);
            let mut there = here.clone();
            there[tail] += len;
            there[head] -= len;
            match &positions[next] {
                Some(p) if *p != there => {
                    return Err(Error::NotDeformation(format!(
                        "edge lengths do not close up around the flip of edge {k}"
                    )))
                }
                Some(_) => {}
                None => {
                    positions[next] = Some(there);
                    queue.push_back(next);
                }
            }
        }
    }
    let positions: Vec<Vec<Rational>> = positions
        .into_iter()
        .map(|p| p.ok_or_else(|| Error::Internal("flip graph is disconnected".into())))
        .collect::<Result<_>>()?;
    let mut vertex_set = positions.clone();
    vertex_set.sort();
    vertex_set.dedup();
    Ok(DeformedPolytope {
        graph: g.clone(),
        orientations: flips.orientations.clone(),
        positions,
        vertex_set,
    })
}

/// Affine dimension of the vertex set.
pub fn polytope_dim(p: &DeformedPolytope) -> usize {
    let Some((first, rest)) = p.vertex_set.split_first() else {
        return 0;
    };
    let rows = rest
        .iter()
        .map(|v| v.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&RationalMatrix::from_dense(p.graph.n(), rows))
}

/// Affine dimension of `Q_l` read off the lengths alone: the edge directions
/// `e_i - e_j` of graph edges carrying some positive length span the affine
/// hull, so the dimension is `n` minus the number of connected components of
/// that subgraph.
pub fn support_dim(edges: &ZonotopeEdges, l: &LengthVector) -> usize {
    let g = edges.graph();
    let support = (0..g.edge_count())
        .filter(|&k| edges.range(k).any(|i| !l[i].is_zero()))
        .map(|k| {
            let [i, j] = g.edges()[k];
            (i, j)
        });
    let sub = Graph::new(g.n(), support).expect("subgraph of a valid graph");
    g.n() - sub.connected_components().len()
}

/// The named Minkowski summands of `Z_G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    /// The segment `[e_i, e_j]` of a graph edge.
    Segment(Edge),
    /// The triangle `conv(e_i, e_j, e_k)` of a graph triangle.
    PlusTriangle(Triangle),
    /// The reflected triangle `-conv(e_i, e_j, e_k)`.
    MinusTriangle(Triangle),
    /// The whole zonotope.
    Zonotope,
}

/// Edge lengths of a summand as a deformation of `Z_G`.
///
/// A segment has length one on every Edge parallel to it. The triangle has
/// length one on the Edges `(a, rho)` with `a` one of its sides and the
/// contracted remaining side pointing at `a`; its reflection uses the Edges
/// where it points away.
pub fn summand_lengths(edges: &ZonotopeEdges, kind: Summand) -> Result<LengthVector> {
    let g = edges.graph();
    let mut l = LengthVector::zeros(edges.len()).into_values();
    match kind {
        Summand::Zonotope => l.iter_mut().for_each(|v| *v = Rational::one()),
        Summand::Segment([i, j]) => {
            let k = g
                .edge_index(i, j)
                .ok_or_else(|| Error::UnknownEdge(format!("({i}, {j})")))?;
            edges.range(k).for_each(|x| l[x] = Rational::one());
        }
        Summand::PlusTriangle(t) | Summand::MinusTriangle(t) => {
            let t = checked_triangle(g, t)?;
            let want = if matches!(kind, Summand::PlusTriangle(_)) {
                Side::Toward
            } else {
                Side::Away
            };
            for (x, v) in l.iter_mut().enumerate() {
                if edges.triangle_side(x, t) == Some(want) {
                    *v = Rational::one();
                }
            }
        }
    }
    Ok(LengthVector::new(l))
}

pub(crate) fn checked_triangle(g: &Graph, t: Triangle) -> Result<Triangle> {
    let [a, b, c] = t;
    let t = sorted3(a, b, c);
    let ok = t[0] != t[1] && t[1] != t[2] && g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2]);
    if ok {
        Ok(t)
    } else {
        Err(Error::UnknownTriangle(format!("({a}, {b}, {c})")))
    }
}

/// Membership in the deformation cone: nonnegative and every polygon
/// equation satisfied.
pub fn is_deformation(dc: &DefCone, l: &LengthVector) -> Result<bool> {
    dc.contains(l)
}
