//! Polyhedral cones `{x in R^N : A x = 0, x >= 0}`.
//!
//! The equality system is brought to reduced row echelon form; its free
//! columns parameterize the kernel, and the cone becomes the pointed cone
//! `{lambda : H lambda >= 0}` where `H` stacks the identity (free coordinates)
//! and the negated pivot rows (pivot coordinates). Duplicate rows of `H` are
//! merged, which matters here: most Edge lengths of a zonotope are forced
//! equal by parallelogram faces.
//!
//! Extreme rays of the reduced cone come from the double description method
//! with exact integer arithmetic. Rays are kept primitive, so entries stay
//! small; an intermediate product that does not fit a machine integer is
//! reported as [`Error::Overflow`] rather than rounded.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::bitset::BitSet;
use crate::linalg::{self, int_rank, primitive, Rational, RationalMatrix, Rref};
use crate::{Error, Limits, Result};

/// H-representation: the nonnegative orthant of `R^ambient_dim` cut by
/// linear equalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeH {
    pub ambient_dim: usize,
    pub equalities: RationalMatrix,
}

impl ConeH {
    pub fn new(ambient_dim: usize, equalities: RationalMatrix) -> Self {
        assert_eq!(equalities.cols(), ambient_dim, "equality width");
        ConeH {
            ambient_dim,
            equalities,
        }
    }

    /// Whether `x` is nonnegative and satisfies every equality.
    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.ambient_dim
            && linalg::is_nonnegative(x)
            && (0..self.equalities.nrows()).all(|r| self.equalities.row_dot(r, x).is_zero())
    }
}

/// Extreme rays as primitive integer vectors, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RayList {
    pub ambient_dim: usize,
    pub rays: Vec<Vec<BigInt>>,
}

impl RayList {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn as_rationals(&self, i: usize) -> Vec<Rational> {
        self.rays[i]
            .iter()
            .map(|v| Rational::from_integer(v.clone()))
            .collect()
    }
}

/// Order in which the double description processes inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InsertionOrder {
    /// Next inequality is the one violated by the fewest current rays.
    #[default]
    FewestViolators,
    /// Input order.
    Given,
    /// Reverse input order.
    Reversed,
}

/// Extreme rays of the pointed cone `{y in R^dim : row . y >= 0 for all rows}`.
///
/// Output rays are primitive and sorted. Fails with [`Error::NotPointed`] if
/// the rows do not have full rank.
pub fn double_description(
    rows: &[Vec<i64>],
    dim: usize,
    order: InsertionOrder,
    max_rays: usize,
) -> Result<Vec<Vec<i64>>> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let m = rows.len();

    // Start from a simplicial cone on `dim` independent rows.
    let mut basis = Rref::new(&RationalMatrix::new(dim));
    let mut chosen = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let sparse = row
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(c, &v)| (c, linalg::rat(v)))
            .collect();
        if basis.insert(&sparse) {
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        }
    }
    if chosen.len() < dim {
        return Err(Error::NotPointed);
    }
    // Rays of {B y >= 0} are the columns of B^-1: column k solves B y = e_k.
    let b = RationalMatrix::from_i64(dim, &chosen.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>());
    let mut rays = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[k] = linalg::rat(1);
        let y = linalg::solve(&b, &e).ok_or_else(|| Error::Internal("singular start".into()))?;
        let v = linalg::to_i64(&primitive(&y)).ok_or(Error::Overflow)?;
        rays.push(Ray::new(v, rows)?);
    }
    let mut processed = BitSet::new(m);
    for &i in &chosen {
        processed.insert(i);
    }
    for r in rays.iter_mut() {
        r.refresh_zeros(&processed);
    }

    let mut remaining: Vec<usize> = (0..m).filter(|i| !processed.contains(*i)).collect();
    if order == InsertionOrder::Reversed {
        remaining.reverse();
    }
    while !remaining.is_empty() {
        let pick = match order {
            InsertionOrder::FewestViolators => {
                let mut best = (usize::MAX, 0);
                for (slot, &h) in remaining.iter().enumerate() {
                    let bad = rays.iter().filter(|r| r.slack[h] < 0).count();
                    if bad < best.0 {
                        best = (bad, slot);
                    }
                }
                best.1
            }
            InsertionOrder::Given | InsertionOrder::Reversed => 0,
        };
        let h = remaining.remove(pick);
        rays = insert_inequality(rays, h, &processed, dim, max_rays)?;
        processed.insert(h);
    }

    let mut out: Vec<Vec<i64>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

struct Ray {
    v: Vec<i64>,
    /// Value of every row on `v`.
    slack: Vec<i64>,
    /// Processed rows tight at `v`.
    zeros: BitSet,
}

impl Ray {
    fn new(v: Vec<i64>, rows: &[Vec<i64>]) -> Result<Ray> {
        let slack = rows
            .iter()
            .map(|row| {
                let s: i128 = row
                    .iter()
                    .zip(&v)
                    .map(|(a, b)| i128::from(*a) * i128::from(*b))
                    .sum();
                s.to_i64().ok_or(Error::Overflow)
            })
            .collect::<Result<_>>()?;
        Ok(Ray {
            v,
            slack,
            zeros: BitSet::new(rows.len()),
        })
    }

    fn refresh_zeros(&mut self, processed: &BitSet) {
        self.zeros = BitSet::new(self.slack.len());
        for i in processed.iter() {
            if self.slack[i] == 0 {
                self.zeros.insert(i);
            }
        }
    }
}

/// `a * x - b * y`, divided by the gcd of the combined ray coordinates.
fn combine(pos: &Ray, neg: &Ray, h: usize) -> Result<Ray> {
    let a = i128::from(pos.slack[h]);
    let b = i128::from(neg.slack[h]);
    // a > 0 > b, so a * neg - b * pos is a positive combination with slack 0.
    let lin = |x: &[i64], y: &[i64]| -> Vec<i128> {
        x.iter()
            .zip(y)
            .map(|(p, n)| a * i128::from(*n) - b * i128::from(*p))
            .collect()
    };
    let v = lin(&pos.v, &neg.v);
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g == 0 {
        return Err(Error::Internal("degenerate combination".into()));
    }
    let narrow = |w: Vec<i128>| -> Result<Vec<i64>> {
        w.into_iter()
            .map(|x| (x / g).to_i64().ok_or(Error::Overflow))
            .collect()
    };
    let slack = narrow(lin(&pos.slack, &neg.slack))?;
    Ok(Ray {
        v: narrow(v)?,
        slack,
        zeros: BitSet::new(pos.zeros_capacity()),
    })
}

impl Ray {
    fn zeros_capacity(&self) -> usize {
        self.slack.len()
    }
}

fn insert_inequality(
    rays: Vec<Ray>,
    h: usize,
    processed: &BitSet,
    dim: usize,
    max_rays: usize,
) -> Result<Vec<Ray>> {
    let (mut pos, mut zero, mut neg) = (Vec::new(), Vec::new(), Vec::new());
    for (i, r) in rays.iter().enumerate() {
        match r.slack[h].signum() {
            1 => pos.push(i),
            0 => zero.push(i),
            _ => neg.push(i),
        }
    }
    let mut fresh = Vec::new();
    if !neg.is_empty() {
        let need = dim.saturating_sub(2);
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersection(&rays[n].zeros);
                if common.len() < need {
                    continue;
                }
                // Adjacent iff no third ray lies on every common tight row.
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != n && r.zeros.is_superset(&common));
                if blocked {
                    continue;
                }
                let mut r = combine(&rays[p], &rays[n], h)?;
                r.zeros = common;
                r.zeros.insert(h);
                fresh.push(r);
                if pos.len() + zero.len() + fresh.len() > max_rays {
                    return Err(Error::RayCap { cap: max_rays });
                }
            }
        }
    }
    let mut keep = vec![false; rays.len()];
    for &i in pos.iter().chain(&zero) {
        keep[i] = true;
    }
    let mut out: Vec<Ray> = rays
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(mut r, _)| {
            if r.slack[h] == 0 {
                r.zeros.insert(h);
            }
            r
        })
        .collect();
    out.extend(fresh);
    if out.len() > max_rays {
        return Err(Error::RayCap { cap: max_rays });
    }
    let _ = processed;
    Ok(out)
}

/// A solved cone: rays plus incidence data for dimension and face queries.
#[derive(Clone, Debug)]
pub struct ConeSolution {
    rays: RayList,
    /// Rays in the reduced (free-column) coordinates, same order as `rays`.
    reduced: Vec<Vec<i64>>,
    /// Distinct reduced inequality rows.
    inequalities: Vec<Vec<i64>>,
    /// For each ambient coordinate, its reduced inequality (`None` when the
    /// coordinate vanishes on the whole kernel).
    coordinate_row: Vec<Option<usize>>,
    /// Rays tight at each inequality.
    incidence: Vec<BitSet>,
    dim: usize,
}

impl ConeSolution {
    pub fn solve(cone: &ConeH, limits: &Limits) -> Result<ConeSolution> {
        Self::solve_with_order(cone, limits, InsertionOrder::default())
    }

    pub fn solve_with_order(cone: &ConeH, limits: &Limits, order: InsertionOrder) -> Result<ConeSolution> {
        let n = cone.ambient_dim;
        let rref = Rref::new(&cone.equalities);
        let free = rref.free_columns();
        let d = free.len();
        if d > limits.max_dim {
            return Err(Error::DimensionCap {
                dim: d,
                cap: limits.max_dim,
            });
        }
        let mut slot = vec![usize::MAX; n];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }

        // Coordinate rows in reduced space: x_f = y_k, x_p = -(row_p . y).
        let mut coord_rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
        for c in 0..n {
            let mut row = vec![Rational::zero(); d];
            if slot[c] != usize::MAX {
                row[slot[c]] = linalg::rat(1);
            } else {
                let prow = rref.pivot_row(c).expect("pivot column");
                for (col, v) in prow {
                    if *col != c {
                        row[slot[*col]] = -v.clone();
                    }
                }
            }
            coord_rows.push(row);
        }
        let mut inequalities: Vec<Vec<i64>> = Vec::new();
        let mut seen: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let mut coordinate_row = Vec::with_capacity(n);
        for row in &coord_rows {
            let ints = linalg::to_i64(&primitive(row)).ok_or(Error::Overflow)?;
            if ints.iter().all(|&v| v == 0) {
                coordinate_row.push(None);
                continue;
            }
            let idx = *seen.entry(ints.clone()).or_insert_with(|| {
                inequalities.push(ints);
                inequalities.len() - 1
            });
            coordinate_row.push(Some(idx));
        }

        let reduced_rays = double_description(&inequalities, d, order, limits.max_rays)?;

        // Back to ambient coordinates, canonical order.
        let mut pairs: Vec<(Vec<BigInt>, Vec<i64>)> = reduced_rays
            .into_iter()
            .map(|y| {
                let yr: Vec<Rational> = y.iter().map(|&v| linalg::rat(v)).collect();
                let x: Vec<Rational> = coord_rows
                    .iter()
                    .map(|row| row.iter().zip(&yr).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                    .collect();
                (primitive(&x), y)
            })
            .collect();
        pairs.sort();
        let (rays, reduced): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();

        let incidence = inequalities
            .iter()
            .map(|row| {
                let mut s = BitSet::new(reduced.len());
                for (r, y) in reduced.iter().enumerate() {
                    let v: i128 = row.iter().zip(y).map(|(a, b)| i128::from(*a) * i128::from(*b)).sum();
                    if v == 0 {
                        s.insert(r);
                    }
                }
                s
            })
            .collect();
        let dim = int_rank(&reduced);
        Ok(ConeSolution {
            rays: RayList { ambient_dim: n, rays },
            reduced,
            inequalities,
            coordinate_row,
            incidence,
            dim,
        })
    }

    pub fn rays(&self) -> &RayList {
        &self.rays
    }

    pub fn into_rays(self) -> RayList {
        self.rays
    }

    /// Dimension of the linear span of the cone.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Number of distinct inequalities left after merging equal coordinate
    /// rows.
    pub fn distinct_inequalities(&self) -> usize {
        self.inequalities.len()
    }

    /// Reduced inequality of ambient coordinate `c`.
    pub fn coordinate_row(&self, c: usize) -> Option<usize> {
        self.coordinate_row[c]
    }

    /// Rays tight at each facet, one set per facet, sorted.
    pub fn facets(&self) -> Vec<BitSet> {
        let total = self.reduced.len();
        let mut out = BTreeSet::new();
        for tight in &self.incidence {
            if tight.len() == total {
                continue;
            }
            if self.rank_of(tight) + 1 == self.dim {
                out.insert(tight.clone());
            }
        }
        out.into_iter().collect()
    }

    pub fn facet_count(&self) -> usize {
        self.facets().len()
    }

    fn rank_of(&self, set: &BitSet) -> usize {
        let rows: Vec<Vec<i64>> = set.iter().map(|r| self.reduced[r].clone()).collect();
        int_rank(&rows)
    }

    /// Ray sets of every nonzero face, grouped by dimension `1..=dim`.
    pub fn faces(&self, max_rays: usize) -> Result<Vec<Vec<BitSet>>> {
        let total = self.reduced.len();
        if total > max_rays {
            return Err(Error::FVectorCap {
                rays: total,
                cap: max_rays,
            });
        }
        let facets = self.facets();
        let mut seen: BTreeSet<BitSet> = BTreeSet::new();
        let mut stack = Vec::new();
        if total > 0 {
            let full = BitSet::full(total);
            seen.insert(full.clone());
            stack.push(full);
        }
        while let Some(face) = stack.pop() {
            for f in &facets {
                let sub = face.intersection(f);
                if !sub.is_empty() && !seen.contains(&sub) {
                    seen.insert(sub.clone());
                    stack.push(sub);
                }
            }
        }
        let mut by_dim = vec![Vec::new(); self.dim];
        for face in seen {
            let d = self.rank_of(&face);
            by_dim[d - 1].push(face);
        }
        Ok(by_dim)
    }

    /// Number of faces of each dimension `1..=dim` (rays first, the cone
    /// itself last).
    pub fn f_vector(&self, max_rays: usize) -> Result<Vec<usize>> {
        Ok(self.faces(max_rays)?.iter().map(Vec::len).collect())
    }
}

pub fn extreme_rays(cone: &ConeH, limits: &Limits) -> Result<RayList> {
    Ok(ConeSolution::solve(cone, limits)?.into_rays())
}

pub fn cone_dimension(cone: &ConeH, limits: &Limits) -> Result<usize> {
    Ok(ConeSolution::solve(cone, limits)?.dimension())
}

pub fn facet_count(cone: &ConeH, limits: &Limits) -> Result<usize> {
    Ok(ConeSolution::solve(cone, limits)?.facet_count())
}

pub fn f_vector(cone: &ConeH, limits: &Limits) -> Result<Vec<usize>> {
    ConeSolution::solve(cone, limits)?.f_vector(limits.max_fvector_rays)
}

/// Whether every entry of every ray is nonnegative.
pub fn all_nonnegative(rays: &RayList) -> bool {
    rays.rays.iter().flatten().all(|v| !v.is_negative())
}
