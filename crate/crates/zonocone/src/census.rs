use rayon::prelude::*;
use zonocone_core::experiments::{census_input, ray_dimension};
use zonocone_core::{Census, Graph, Limits, Result};

/// [`zonocone_core::experiments::ray_dimension_census`] with the per-ray
/// polytope builds spread over the current rayon pool.
pub fn par_census(g: &Graph, limits: &Limits) -> Result<Census> {
    let input = census_input(g, limits)?;
    let dims = input
        .rays
        .par_iter()
        .map(|r| ray_dimension(&input.flips, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(Census::from_dims(dims))
}
