//! The edge-length deformation cone of a graphical zonotope.
//!
//! Coordinates are the Edges of `Z_G` in the canonical order of
//! [`ZonotopeEdges`]. The cone is the nonnegative orthant cut by the polygon
//! equations of the 2-faces: opposite sides of a parallelogram are equal, and
//! the three toward-minus-away differences of a hexagon coincide.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::cone::{ConeH, ConeSolution, RayList};
use crate::faces::{hexagon_sides, parallelogram_sides, two_faces, EdgeLabel, TwoFaceLabel, ZonotopeEdges};
use crate::graph::Graph;
use crate::linalg::{self, primitive, Rational, RationalMatrix};
use crate::{Error, Limits, Result};

/// A length for every Edge of `Z_G`, in canonical label order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LengthVector {
    values: Vec<Rational>,
}

impl LengthVector {
    pub fn new(values: Vec<Rational>) -> Self {
        LengthVector { values }
    }

    pub fn zeros(len: usize) -> Self {
        LengthVector {
            values: vec![Rational::zero(); len],
        }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| linalg::rat(v)).collect())
    }

    pub fn from_integers(values: &[BigInt]) -> Self {
        Self::new(values.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        linalg::is_nonnegative(&self.values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.values.iter().map(|v| v * c).collect())
    }

    /// The primitive integer vector on the same ray.
    pub fn primitive(&self) -> Vec<BigInt> {
        primitive(&self.values)
    }
}

impl Index<usize> for LengthVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.values[i]
    }
}

impl Add for &LengthVector {
    type Output = LengthVector;

    fn add(self, rhs: &LengthVector) -> LengthVector {
        assert_eq!(self.len(), rhs.len(), "length vectors of different graphs");
        LengthVector::new(self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect())
    }
}

/// The deformation cone of `Z_G` with the labels indexing its coordinates.
pub struct DefCone {
    edges: ZonotopeEdges,
    faces: Vec<TwoFaceLabel>,
    cone: ConeH,
}

pub fn build_defcone(g: &Graph, limits: &Limits) -> Result<DefCone> {
    DefCone::new(g, limits)
}

impl DefCone {
    pub fn new(g: &Graph, limits: &Limits) -> Result<DefCone> {
        let edges = ZonotopeEdges::new(g, limits.max_orientations)?;
        let faces = two_faces(g, limits.max_orientations)?;
        let mut eqs = RationalMatrix::new(edges.len());
        let one = Rational::one;
        let diff = |a: usize, b: usize| vec![(a, one()), (b, -one())];
        for face in &faces {
            if face.is_hexagon() {
                let [a, b, c] = hexagon_sides(&edges, face)?.sides;
                // (ta - aa) - (tb - ab) = 0, and the same for b, c.
                for (x, y) in [(a, b), (b, c)] {
                    eqs.push_sparse(vec![
                        (x.toward, one()),
                        (x.away, -one()),
                        (y.toward, -one()),
                        (y.away, one()),
                    ]);
                }
            } else {
                for [a, b] in parallelogram_sides(&edges, face)? {
                    eqs.push_sparse(diff(a, b));
                }
            }
        }
        let cone = ConeH::new(edges.len(), eqs);
        Ok(DefCone { edges, faces, cone })
    }

    pub fn graph(&self) -> &Graph {
        self.edges.graph()
    }

    pub fn edges(&self) -> &ZonotopeEdges {
        &self.edges
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        self.edges.labels()
    }

    pub fn two_faces(&self) -> &[TwoFaceLabel] {
        &self.faces
    }

    pub fn cone(&self) -> &ConeH {
        &self.cone
    }

    pub fn ambient_dim(&self) -> usize {
        self.cone.ambient_dim
    }

    pub fn check_len(&self, l: &LengthVector) -> Result<()> {
        if l.len() == self.ambient_dim() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.ambient_dim(),
                got: l.len(),
            })
        }
    }

    /// Whether `l` is nonnegative and satisfies every polygon equation.
    pub fn contains(&self, l: &LengthVector) -> Result<bool> {
        self.check_len(l)?;
        Ok(self.cone.contains(l.values()))
    }

    pub fn solve(&self, limits: &Limits) -> Result<ConeSolution> {
        ConeSolution::solve(&self.cone, limits)
    }
}

/// Ω(G), the number of cliques with at least two vertices.
pub fn expected_dimension(g: &Graph) -> usize {
    g.clique_count()
}

/// `sum over edges e of 2^(number of triangles containing e)`.
pub fn expected_facets(g: &Graph) -> usize {
    g.edges().iter().map(|&e| 1usize << g.triangles_on(e).len()).sum()
}

/// Computed and predicted dimension and facet count of a deformation cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub ambient_dim: usize,
    pub dim: usize,
    pub expected_dim: usize,
    pub facets: usize,
    pub expected_facets: usize,
    pub rays: usize,
}

impl FormulaReport {
    pub fn dim_ok(&self) -> bool {
        self.dim == self.expected_dim
    }

    pub fn facets_ok(&self) -> bool {
        self.facets == self.expected_facets
    }

    pub fn ok(&self) -> bool {
        self.dim_ok() && self.facets_ok()
    }
}

pub fn formula_report(dc: &DefCone, solution: &ConeSolution) -> FormulaReport {
    let g = dc.graph();
    FormulaReport {
        ambient_dim: dc.ambient_dim(),
        dim: solution.dimension(),
        expected_dim: expected_dimension(g),
        facets: solution.facet_count(),
        expected_facets: expected_facets(g),
        rays: solution.rays().len(),
    }
}

pub fn validate_formulas(g: &Graph, limits: &Limits) -> Result<FormulaReport> {
    let dc = DefCone::new(g, limits)?;
    let solution = dc.solve(limits)?;
    Ok(formula_report(&dc, &solution))
}

pub fn defcone_rays(g: &Graph, limits: &Limits) -> Result<RayList> {
    Ok(DefCone::new(g, limits)?.solve(limits)?.into_rays())
}

/// Number of 2-dimensional faces of the cone, from the face lattice, next to
/// the value `C(|E| + 2|T|, 2) - |T|` predicted for graphs without `K4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoFaceCount {
    pub computed: usize,
    pub formula: usize,
}

pub fn two_face_count(g: &Graph, limits: &Limits) -> Result<TwoFaceCount> {
    if !g.is_k4_free() {
        return Err(Error::NotK4Free);
    }
    let solution = DefCone::new(g, limits)?.solve(limits)?;
    let f = solution.f_vector(limits.max_fvector_rays)?;
    let t = g.triangles().len();
    let formula = binomial(g.edge_count() + 2 * t, 2) - t;
    Ok(TwoFaceCount {
        computed: f.get(1).copied().unwrap_or(0),
        formula,
    })
}
