//! Minkowski decomposition of deformations of `Z_G` for graphs without `K4`.
//!
//! For such graphs every deformation is uniquely
//! `sum_e w(e) Seg_e + sum_t |w(t)| (+-Tri_t)` with `w(e) >= 0`, where the sign
//! of `w(t)` picks the triangle or its reflection. The coefficients are read
//! off the lengths directly:
//!
//! - `w(e)` is the least length among the Edges parallel to `e`;
//! - `w(t)` is `l(toward) - l(away)` on any side of any hexagon of `t`.
//!
//! The second difference is the same on every side of every hexagon of `t`.
//! When it is negative, the reflected triangle is present and the minimising
//! Edges of each side are the toward ones (and vice versa), which is the
//! usual two-case description folded into one signed formula.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::cone::ConeSolution;
use crate::defcone::{DefCone, LengthVector};
use crate::deformation::{checked_triangle, summand_lengths, Summand};
use crate::faces::{hexagon_sides, Flat, Side};
use crate::graph::{Edge, Graph, Triangle};
use crate::linalg::{self, primitive, Rational, RationalMatrix};
use crate::{Error, Limits, Result};

/// Coefficients of a deformation in the segments and signed triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `w(e) >= 0` per graph edge, in edge order.
    pub omega_edge: Vec<(Edge, Rational)>,
    /// Signed `w(t)` per triangle, in triangle order.
    pub omega_tri: Vec<(Triangle, Rational)>,
}

impl Decomposition {
    /// Sign of `w(t)` per triangle; zero on a wall between two cells.
    pub fn epsilon(&self) -> Vec<(Triangle, i8)> {
        self.omega_tri.iter().map(|(t, w)| (*t, sign(w))).collect()
    }

    /// The lengths `w(e) + sum over agreeing triangles of |w(t)|` on every
    /// Edge.
    pub fn lengths(&self, dc: &DefCone) -> LengthVector {
        let edges = dc.edges();
        let values = (0..edges.len())
            .map(|x| {
                let k = edges.labels()[x].edge;
                let mut v = self.omega_edge[k].1.clone();
                for (t, w) in &self.omega_tri {
                    let agrees = match edges.triangle_side(x, *t) {
                        Some(Side::Toward) => w.is_positive(),
                        Some(Side::Away) => w.is_negative(),
                        None => false,
                    };
                    if agrees {
                        v += w.abs();
                    }
                }
                v
            })
            .collect();
        LengthVector::new(values)
    }
}

fn sign(w: &Rational) -> i8 {
    if w.is_positive() {
        1
    } else if w.is_negative() {
        -1
    } else {
        0
    }
}

fn require_k4_free(g: &Graph) -> Result<()> {
    if g.is_k4_free() {
        Ok(())
    } else {
        Err(Error::NotK4Free)
    }
}

fn require_deformation(dc: &DefCone, l: &LengthVector) -> Result<()> {
    if dc.contains(l)? {
        Ok(())
    } else {
        Err(Error::NotDeformation("lengths violate a polygon equation or are negative".into()))
    }
}

/// Signed step `l(toward) - l(away)` of triangle `t`, checked to agree on
/// every side of every hexagon of `t`.
pub fn signed_step(dc: &DefCone, l: &LengthVector, t: Triangle) -> Result<Rational> {
    require_k4_free(dc.graph())?;
    dc.check_len(l)?;
    let t = checked_triangle(dc.graph(), t)?;
    let mut step: Option<Rational> = None;
    for face in dc.two_faces().iter().filter(|f| f.flat == Flat::Triangle(t)) {
        for side in hexagon_sides(dc.edges(), face)?.sides {
            let d = &l[side.toward] - &l[side.away];
            match &step {
                None => step = Some(d),
                Some(s) if *s != d => {
                    return Err(Error::NotDeformation(format!(
                        "hexagon steps of triangle {t:?} differ: {s} and {d}"
                    )))
                }
                Some(_) => {}
            }
        }
    }
    step.ok_or_else(|| Error::Internal(format!("triangle {t:?} has no hexagon")))
}

/// The step `|l(toward) - l(away)|` of triangle `t`.
pub fn step_delta(dc: &DefCone, l: &LengthVector, t: Triangle) -> Result<Rational> {
    Ok(signed_step(dc, l, t)?.abs())
}

pub fn decompose(dc: &DefCone, l: &LengthVector) -> Result<Decomposition> {
    let g = dc.graph();
    require_k4_free(g)?;
    require_deformation(dc, l)?;
    let edges = dc.edges();
    let omega_edge = g
        .edges()
        .iter()
        .enumerate()
        .map(|(k, &e)| {
            let w = edges
                .range(k)
                .map(|x| &l[x])
                .min()
                .cloned()
                .unwrap_or_else(Rational::zero);
            (e, w)
        })
        .collect();
    let omega_tri = g
        .triangles()
        .into_iter()
        .map(|t| Ok((t, signed_step(dc, l, t)?)))
        .collect::<Result<_>>()?;
    let d = Decomposition { omega_edge, omega_tri };
    if d.lengths(dc) != *l {
        return Err(Error::Internal("decomposition does not reproduce the lengths".into()));
    }
    Ok(d)
}

/// The simplicial cell of the triangulation containing `l`, as a sign per
/// triangle (zero on walls).
pub fn locate_simplex(dc: &DefCone, l: &LengthVector) -> Result<Vec<(Triangle, i8)>> {
    Ok(decompose(dc, l)?.epsilon())
}

/// Coefficients of `l` in the generators of the cell with the given signs:
/// the segments in edge order, then one triangle (or its reflection) per
/// sign. `None` when `l` is not in the span of that cell.
pub fn cell_coordinates(dc: &DefCone, l: &LengthVector, signs: &[(Triangle, i8)]) -> Result<Option<Vec<Rational>>> {
    dc.check_len(l)?;
    let g = dc.graph();
    let mut generators = Vec::new();
    for &e in g.edges() {
        generators.push(summand_lengths(dc.edges(), Summand::Segment(e))?);
    }
    for &(t, s) in signs {
        let kind = match s {
            1 => Summand::PlusTriangle(t),
            -1 => Summand::MinusTriangle(t),
            _ => return Err(Error::Internal(format!("cell sign {s} for {t:?}"))),
        };
        generators.push(summand_lengths(dc.edges(), kind)?);
    }
    let m = RationalMatrix::from_dense(
        generators.len(),
        (0..dc.ambient_dim())
            .map(|x| generators.iter().map(|v| v[x].clone()).collect())
            .collect(),
    );
    Ok(linalg::solve(&m, l.values()))
}

/// Comparison of the extreme rays with the segments and signed triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationReport {
    pub rays: usize,
    pub expected_rays: usize,
    pub dim: usize,
    pub expected_dim: usize,
    /// The ray set equals the set of summand length vectors.
    pub rays_match: bool,
    /// Every ray decomposes into exactly its own summand.
    pub rays_decompose: bool,
}

impl TriangulationReport {
    pub fn ok(&self) -> bool {
        self.rays == self.expected_rays && self.dim == self.expected_dim && self.rays_match && self.rays_decompose
    }
}

pub fn verify_triangulation(g: &Graph, limits: &Limits) -> Result<TriangulationReport> {
    require_k4_free(g)?;
    let dc = DefCone::new(g, limits)?;
    let solution = dc.solve(limits)?;
    verify_with(&dc, &solution)
}

pub fn verify_with(dc: &DefCone, solution: &ConeSolution) -> Result<TriangulationReport> {
    let g = dc.graph();
    require_k4_free(g)?;
    let triangles = g.triangles();
    let mut expected: Vec<_> = summands(g)
        .into_iter()
        .map(|s| Ok(summand_lengths(dc.edges(), s)?.primitive()))
        .collect::<Result<_>>()?;
    expected.sort();
    let rays = &solution.rays().rays;
    let mut rays_decompose = true;
    for r in rays {
        let d = decompose(dc, &LengthVector::from_integers(r))?;
        let nonzero = d.omega_edge.iter().filter(|(_, w)| !w.is_zero()).count()
            + d.omega_tri.iter().filter(|(_, w)| !w.is_zero()).count();
        rays_decompose &= nonzero == 1;
    }
    Ok(TriangulationReport {
        rays: rays.len(),
        expected_rays: g.edge_count() + 2 * triangles.len(),
        dim: solution.dimension(),
        expected_dim: g.edge_count() + triangles.len(),
        rays_match: *rays == expected,
        rays_decompose,
    })
}

/// Segments, then plus and minus triangles.
pub fn summands(g: &Graph) -> Vec<Summand> {
    let mut out: Vec<Summand> = g.edges().iter().map(|&e| Summand::Segment(e)).collect();
    for t in g.triangles() {
        out.push(Summand::PlusTriangle(t));
        out.push(Summand::MinusTriangle(t));
    }
    out
}

/// Names the summand whose length vector spans the same ray as `ray`.
pub fn identify_ray(dc: &DefCone, ray: &[num_bigint::BigInt]) -> Result<Option<Summand>> {
    let target = primitive(&LengthVector::from_integers(ray).into_values());
    for s in summands(dc.graph()) {
        if summand_lengths(dc.edges(), s)?.primitive() == target {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
