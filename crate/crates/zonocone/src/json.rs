//! JSON exports. Rationals are written as strings (`"3"`, `"-1/2"`) so no
//! precision is lost; maps have sorted keys.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use zonocone_core::decompose::Decomposition;
use zonocone_core::{AcyclicOrientation, ConeH, DefCone, DeformedPolytope, EdgeLabel, Graph, Rational, RationalMatrix};

use crate::error::{AppError, AppResult};
use crate::input::parse_rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn new(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().to_vec(),
        }
    }

    pub fn to_graph(&self) -> AppResult<Graph> {
        Ok(Graph::new(self.n, self.edges.iter().map(|&[i, j]| (i, j)))?)
    }
}

/// The deformation cone: graph, coordinate labels `[[i, j], bits]` (bits of
/// the orientation of the contraction, one character per contracted edge)
/// and dense equality rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeJson {
    pub graph: GraphJson,
    pub labels: Vec<([usize; 2], String)>,
    pub equalities: Vec<Vec<String>>,
}

pub fn export_cone(dc: &DefCone) -> ConeJson {
    let g = dc.graph();
    let labels = dc
        .labels()
        .iter()
        .map(|l| {
            let m = dc.edges().contraction(l.edge).graph.edge_count();
            (g.edges()[l.edge], l.rho.bit_string(m))
        })
        .collect();
    let eqs = &dc.cone().equalities;
    let equalities = (0..eqs.nrows())
        .map(|r| eqs.dense_row(r).iter().map(ToString::to_string).collect())
        .collect();
    ConeJson {
        graph: GraphJson::new(g),
        labels,
        equalities,
    }
}

/// Graph, labels and cone read back from [`ConeJson`].
pub fn import_cone(json: &ConeJson) -> AppResult<(Graph, Vec<EdgeLabel>, ConeH)> {
    let g = json.graph.to_graph()?;
    let labels = json
        .labels
        .iter()
        .map(|([i, j], bits)| {
            let edge = g
                .edge_index(*i, *j)
                .ok_or_else(|| AppError::input(format!("label edge ({i}, {j}) is not in the graph")))?;
            let rho = AcyclicOrientation::from_bit_string(bits)
                .ok_or_else(|| AppError::input(format!("bad orientation bits {bits:?}")))?;
            Ok(EdgeLabel { edge, rho })
        })
        .collect::<AppResult<Vec<_>>>()?;
    let cols = labels.len();
    let rows = json
        .equalities
        .iter()
        .map(|row| {
            if row.len() != cols {
                return Err(AppError::input(format!("equality row has {} entries, expected {cols}", row.len())));
            }
            row.iter().map(|s| parse_rational(s)).collect()
        })
        .collect::<AppResult<Vec<Vec<Rational>>>>()?;
    Ok((g, labels, ConeH::new(cols, RationalMatrix::from_dense(cols, rows))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub vertices: Vec<Vec<String>>,
    pub dim: usize,
}

pub fn export_polytope(p: &DeformedPolytope) -> PolytopeJson {
    PolytopeJson {
        vertices: p
            .vertices()
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect(),
        dim: p.dim(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub omega_edge: BTreeMap<String, String>,
    pub omega_tri: BTreeMap<String, String>,
    pub epsilon: BTreeMap<String, i8>,
    pub verified: bool,
}

fn key(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn export_decomposition(d: &Decomposition, verified: bool) -> DecompositionJson {
    DecompositionJson {
        omega_edge: d.omega_edge.iter().map(|(e, w)| (key(e), w.to_string())).collect(),
        omega_tri: d.omega_tri.iter().map(|(t, w)| (key(t), w.to_string())).collect(),
        epsilon: d.epsilon().into_iter().map(|(t, s)| (key(&t), s)).collect(),
        verified,
    }
}
