//! Edges and 2-faces of the graphical zonotope as ordered-partition labels.
//!
//! An Edge of `Z_G` is a pair `(e, rho)` with `e` an edge of `G` and `rho` an
//! acyclic orientation of `G/e`. A 2-face is a pair `(F, rho)` with `F` a
//! rank-2 flat (a triangle, or two edges not sharing a triangle) and `rho` an
//! acyclic orientation of `G/F`. Triangles give hexagons, pairs give
//! parallelograms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::graph::{Contraction, Edge, Graph, Triangle, VertexPartition};
use crate::orientation::{enumerate_acyclic, AcyclicOrientation};
use crate::{Error, Result};

/// An Edge of `Z_G`: graph edge index and orientation of the contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel {
    pub edge: usize,
    pub rho: AcyclicOrientation,
}

/// Position of a label relative to a triangle containing its edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The contracted remaining edge of the triangle points at the edge.
    Toward,
    /// It points away from the edge.
    Away,
}

struct PerEdge {
    contraction: Contraction,
    orientations: Vec<AcyclicOrientation>,
    offset: usize,
}

/// The Edges of `Z_G` in canonical order: by graph edge, then by the
/// enumeration order of the orientations of the contraction.
pub struct ZonotopeEdges {
    graph: Graph,
    identity: Contraction,
    per_edge: Vec<PerEdge>,
    labels: Vec<EdgeLabel>,
    index: BTreeMap<(usize, u64), usize>,
}

impl ZonotopeEdges {
    pub fn new(g: &Graph, max_orientations: usize) -> Result<Self> {
        let mut per_edge = Vec::with_capacity(g.edge_count());
        let mut labels = Vec::new();
        let mut index = BTreeMap::new();
        for (k, &[i, j]) in g.edges().iter().enumerate() {
            let contraction = g.contraction(&VertexPartition::single(&[i, j]))?;
            let orientations = enumerate_acyclic(&contraction.graph, max_orientations)?;
            let offset = labels.len();
            for &rho in &orientations {
                index.insert((k, rho.bits()), labels.len());
                labels.push(EdgeLabel { edge: k, rho });
            }
            per_edge.push(PerEdge {
                contraction,
                orientations,
                offset,
            });
        }
        Ok(ZonotopeEdges {
            graph: g.clone(),
            identity: g.contraction(&VertexPartition::default())?,
            per_edge,
            labels,
            index,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, edge: usize, rho: AcyclicOrientation) -> Option<usize> {
        self.index.get(&(edge, rho.bits())).copied()
    }

    /// Label indices belonging to graph edge `edge`.
    pub fn range(&self, edge: usize) -> Range<usize> {
        let p = &self.per_edge[edge];
        p.offset..p.offset + p.orientations.len()
    }

    /// The contraction `G/e` for graph edge index `edge`.
    pub fn contraction(&self, edge: usize) -> &Contraction {
        &self.per_edge[edge].contraction
    }

    /// The two vertices of `Z_G` joined by an Edge: the acyclic orientations
    /// of `G` extending `rho`, with `e` oriented `i -> j` first, then `j -> i`.
    pub fn endpoints(&self, label: usize) -> (AcyclicOrientation, AcyclicOrientation) {
        let EdgeLabel { edge, rho } = self.labels[label];
        let coarse = &self.per_edge[edge].contraction;
        let [i, j] = self.graph.edges()[edge];
        let forward = lift(&self.graph, coarse, rho, &self.identity, |_, _| i);
        let backward = lift(&self.graph, coarse, rho, &self.identity, |_, _| j);
        (forward, backward)
    }

    /// Index of the Edge joining `o` and `o` with edge `k` reversed.
    pub fn label_of_flip(&self, o: AcyclicOrientation, k: usize) -> Result<usize> {
        let rho = project(&self.graph, o, &self.per_edge[k].contraction);
        self.index_of(k, rho)
            .ok_or_else(|| Error::Internal(format!("no Edge for flip of edge {k}")))
    }

    /// Whether label `label` is a toward or away label of triangle `t`, or
    /// `None` if its edge is not in `t`.
    pub fn triangle_side(&self, label: usize, t: Triangle) -> Option<Side> {
        let EdgeLabel { edge, rho } = self.labels[label];
        let [x, y] = self.graph.edges()[edge];
        if !t.contains(&x) || !t.contains(&y) {
            return None;
        }
        let z = t.iter().copied().find(|&v| v != x && v != y)?;
        let c = &self.per_edge[edge].contraction;
        let (a, zb) = (c.block_of[x], c.block_of[z]);
        let k = c.graph.edge_index(a, zb)?;
        let (_, head) = rho.arc(&c.graph, k);
        Some(if head == a { Side::Toward } else { Side::Away })
    }
}

/// Orientation of the contraction `target` induced by an orientation `o` of
/// `g`. Only meaningful when all edges collapsing together agree.
pub(crate) fn project(g: &Graph, o: AcyclicOrientation, target: &Contraction) -> AcyclicOrientation {
    let mut bits = AcyclicOrientation::default();
    for k in 0..g.edge_count() {
        let (t, h) = o.arc(g, k);
        let (bt, bh) = (target.block_of[t], target.block_of[h]);
        if bt != bh {
            let kk = target.graph.edge_index(bt, bh).expect("contracted edge");
            bits = bits.with_head(&target.graph, kk, bh);
        }
    }
    bits
}

/// Orientation of the contraction `target` that agrees with `rho` on edges
/// crossing blocks of the coarser contraction `coarse`, and orients the
/// remaining ones from `inner_tail(u, v)`.
fn lift(
    g: &Graph,
    coarse: &Contraction,
    rho: AcyclicOrientation,
    target: &Contraction,
    inner_tail: impl Fn(usize, usize) -> usize,
) -> AcyclicOrientation {
    let mut bits = AcyclicOrientation::default();
    for &[u, v] in g.edges() {
        let (tu, tv) = (target.block_of[u], target.block_of[v]);
        if tu == tv {
            continue;
        }
        let (cu, cv) = (coarse.block_of[u], coarse.block_of[v]);
        let tail = if cu != cv {
            let kc = coarse.graph.edge_index(cu, cv).expect("coarse edge");
            let (ct, _) = rho.arc(&coarse.graph, kc);
            if ct == cu {
                u
            } else {
                v
            }
        } else {
            inner_tail(u, v)
        };
        let head = if tail == u { tv } else { tu };
        let kt = target.graph.edge_index(tu, tv).expect("target edge");
        bits = bits.with_head(&target.graph, kt, head);
    }
    bits
}

/// A rank-2 flat of the graphic matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flat {
    Triangle(Triangle),
    /// Two edge indices `e < f` not contained in a common triangle.
    Pair(usize, usize),
}

impl Flat {
    pub fn partition(&self, g: &Graph) -> VertexPartition {
        match *self {
            Flat::Triangle(t) => VertexPartition::single(&t),
            Flat::Pair(e, f) => {
                let [a, b] = g.edges()[e];
                let [c, d] = g.edges()[f];
                if [a, b].iter().any(|v| *v == c || *v == d) {
                    let mut block = vec![a, b, c, d];
                    block.sort_unstable();
                    block.dedup();
                    VertexPartition::single(&block)
                } else {
                    VertexPartition::new(vec![vec![a, b], vec![c, d]])
                }
            }
        }
    }
}

/// A 2-face of `Z_G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoFaceLabel {
    pub flat: Flat,
    pub rho: AcyclicOrientation,
}

impl TwoFaceLabel {
    pub fn is_hexagon(&self) -> bool {
        matches!(self.flat, Flat::Triangle(_))
    }
}

/// Rank-2 flats: all triangles, then all non-co-triangular edge pairs.
pub fn rank_two_flats(g: &Graph) -> Vec<Flat> {
    let mut flats: Vec<Flat> = g.triangles().into_iter().map(Flat::Triangle).collect();
    let m = g.edge_count();
    for e in 0..m {
        for f in e + 1..m {
            if !co_triangular(g, g.edges()[e], g.edges()[f]) {
                flats.push(Flat::Pair(e, f));
            }
        }
    }
    flats
}

fn co_triangular(g: &Graph, e: Edge, f: Edge) -> bool {
    let shared = e.iter().find(|v| f.contains(v));
    match shared {
        Some(&s) => {
            let a = if e[0] == s { e[1] } else { e[0] };
            let b = if f[0] == s { f[1] } else { f[0] };
            g.has_edge(a, b)
        }
        None => false,
    }
}

/// Every 2-face: hexagons first (by triangle), then parallelograms (by edge
/// pair), each followed by the orientations of the contracted flat.
pub fn two_faces(g: &Graph, max_orientations: usize) -> Result<Vec<TwoFaceLabel>> {
    let mut out = Vec::new();
    for flat in rank_two_flats(g) {
        let c = g.contract(&flat.partition(g))?;
        for rho in enumerate_acyclic(&c, max_orientations)? {
            out.push(TwoFaceLabel { flat, rho });
        }
    }
    Ok(out)
}

/// Opposite sides of a parallelogram face: `[[e-sides], [f-sides]]`, each
/// pair ordered with the other edge oriented from its smaller endpoint first.
pub fn parallelogram_sides(edges: &ZonotopeEdges, face: &TwoFaceLabel) -> Result<[[usize; 2]; 2]> {
    let Flat::Pair(e, f) = face.flat else {
        return Err(Error::WrongFaceKind {
            expected: "parallelogram",
        });
    };
    let g = edges.graph();
    let coarse = g.contraction(&face.flat.partition(g))?;
    let mut out = [[0; 2]; 2];
    for (slot, (this, other)) in [(e, f), (f, e)].into_iter().enumerate() {
        let [lo, hi] = g.edges()[other];
        for (side, tail) in [lo, hi].into_iter().enumerate() {
            let rho = lift(g, &coarse, face.rho, edges.contraction(this), |_, _| tail);
            out[slot][side] = edges
                .index_of(this, rho)
                .ok_or_else(|| Error::Internal(format!("missing parallelogram side {rho:?}")))?;
        }
    }
    Ok(out)
}

/// The two Edges of a hexagon parallel to one edge of its triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HexSide {
    pub edge: usize,
    /// Label whose contracted remaining edge points at `edge`.
    pub toward: usize,
    /// Label whose contracted remaining edge points away from `edge`.
    pub away: usize,
}

/// Sides of a hexagonal face, one entry per triangle edge in edge order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HexSides {
    pub triangle: Triangle,
    pub sides: [HexSide; 3],
}

pub fn hexagon_sides(edges: &ZonotopeEdges, face: &TwoFaceLabel) -> Result<HexSides> {
    let Flat::Triangle(t) = face.flat else {
        return Err(Error::WrongFaceKind { expected: "hexagon" });
    };
    let g = edges.graph();
    let coarse = g.contraction(&face.flat.partition(g))?;
    let [x, y, z] = t;
    let mut sides = [HexSide {
        edge: 0,
        toward: 0,
        away: 0,
    }; 3];
    for (slot, (a, b, third)) in [(x, y, z), (x, z, y), (y, z, x)].into_iter().enumerate() {
        let edge = g.edge_index(a, b).expect("triangle edge");
        let target = edges.contraction(edge);
        let find = |rho| {
            edges
                .index_of(edge, rho)
                .ok_or_else(|| Error::Internal(format!("missing hexagon side {rho:?}")))
        };
        let toward = lift(g, &coarse, face.rho, target, |_, _| third);
        let away = lift(g, &coarse, face.rho, target, |u, v| if u == third { v } else { u });
        sides[slot] = HexSide {
            edge,
            toward: find(toward)?,
            away: find(away)?,
        };
    }
    Ok(HexSides { triangle: t, sides })
}
