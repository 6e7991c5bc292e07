//! Ray-dimension censuses: how many extreme rays of the deformation cone
//! give polytopes of each dimension.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::defcone::{DefCone, LengthVector};
use crate::deformation::{build_polytope, polytope_dim, FlipGraph};
use crate::graph::Graph;
use crate::{Limits, Result};

/// Number of rays per polytope dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub counts: BTreeMap<usize, usize>,
}

impl Census {
    pub fn from_dims<I: IntoIterator<Item = usize>>(dims: I) -> Census {
        let mut counts = BTreeMap::new();
        for d in dims {
            *counts.entry(d).or_insert(0) += 1;
        }
        Census { counts }
    }

    pub fn get(&self, dim: usize) -> usize {
        self.counts.get(&dim).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Largest dimension with a ray, or zero for an empty census.
    pub fn max_dim(&self) -> usize {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }
}

/// `dim:count` pairs separated by spaces.
impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for (d, c) in &self.counts {
            write!(f, "{sep}{d}:{c}")?;
            sep = " ";
        }
        Ok(())
    }
}

/// Dimension of the polytope with edge lengths `ray`.
pub fn ray_dimension(flips: &FlipGraph, ray: &[BigInt]) -> Result<usize> {
    let p = build_polytope(flips, &LengthVector::from_integers(ray))?;
    Ok(polytope_dim(&p))
}

/// Rays of the deformation cone together with the flip graph needed to turn
/// them into polytopes. Split out so the per-ray work can be scheduled by the
/// caller.
pub struct CensusInput {
    pub flips: FlipGraph,
    pub rays: Vec<Vec<BigInt>>,
}

pub fn census_input(g: &Graph, limits: &Limits) -> Result<CensusInput> {
    let dc = DefCone::new(g, limits)?;
    let flips = FlipGraph::new(dc.edges(), limits.max_orientations)?;
    let rays = dc.solve(limits)?.into_rays().rays;
    Ok(CensusInput { flips, rays })
}

pub fn ray_dimension_census(g: &Graph, limits: &Limits) -> Result<Census> {
    let input = census_input(g, limits)?;
    let dims = input
        .rays
        .iter()
        .map(|r| ray_dimension(&input.flips, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(Census::from_dims(dims))
}

/// Largest dimension of a polytope on an extreme ray.
pub fn minkowski_dimension(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(ray_dimension_census(g, limits)?.max_dim())
}

/// Conjectured counts of rays of dimension 1, 2, 3 for `cyc3(n)`:
/// `3(n - 2)`, `6n - 16` and `23(n - 3)`.
pub fn cyc3_low_dims(n: usize) -> [usize; 3] {
    [3 * (n - 2), 6 * n - 16, 23 * (n - 3)]
}

/// A `cyc3(n)` census compared with [`cyc3_low_dims`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusCheck {
    pub n: usize,
    pub census: Census,
    pub expected: [usize; 3],
}

impl CensusCheck {
    pub fn new(n: usize, census: Census) -> Self {
        CensusCheck {
            n,
            census,
            expected: cyc3_low_dims(n),
        }
    }

    pub fn ok(&self) -> bool {
        (1..=3).all(|d| self.census.get(d) == self.expected[d - 1])
    }
}

pub fn census_formula_check<I: IntoIterator<Item = usize>>(ns: I, limits: &Limits) -> Result<Vec<CensusCheck>> {
    ns.into_iter()
        .map(|n| Ok(CensusCheck::new(n, ray_dimension_census(&Graph::cyc3(n)?, limits)?)))
        .collect()
}

/// Tab-separated table with one row per census and one column per
/// dimension up to the largest one seen.
pub fn census_table(rows: &[(usize, Census)]) -> String {
    use core::fmt::Write;
    let width = rows.iter().map(|(_, c)| c.max_dim()).max().unwrap_or(0);
    let mut out = String::from("n");
    for d in 1..=width {
        let _ = write!(out, "\td={d}");
    }
    out.push('\n');
    for (n, c) in rows {
        let _ = write!(out, "{n}");
        for d in 1..=width {
            let _ = write!(out, "\t{}", c.get(d));
        }
        out.push('\n');
    }
    out
}
