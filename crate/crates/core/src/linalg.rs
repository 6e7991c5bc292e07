//! Exact rational linear algebra on sparse row matrices.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// Sparse row: `(column, value)` pairs sorted by column, no stored zeros.
pub type SparseRow = Vec<(usize, Rational)>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Matrix of exact rationals stored by sparse rows.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl RationalMatrix {
    pub fn new(cols: usize) -> Self {
        RationalMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_dense(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let mut m = RationalMatrix::new(cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length");
            m.push_sparse(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        m
    }

    pub fn from_i64(cols: usize, rows: &[Vec<i64>]) -> Self {
        RationalMatrix::from_dense(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    /// Appends a sparse row; entries are sorted and zeros dropped.
    pub fn push_sparse(&mut self, mut row: SparseRow) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|(c, _)| *c);
        assert!(row.last().is_none_or(|(c, _)| *c < self.cols), "column out of range");
        self.rows.push(row);
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.rows[r].binary_search_by_key(&c, |(k, _)| *k) {
            Ok(i) => self.rows[r][i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn dense_row(&self, r: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.cols];
        for (c, v) in &self.rows[r] {
            out[*c] = v.clone();
        }
        out
    }

    /// Row `r` applied to `x`.
    pub fn row_dot(&self, r: usize, x: &[Rational]) -> Rational {
        self.rows[r]
            .iter()
            .fold(Rational::zero(), |acc, (c, v)| acc + v * &x[*c])
    }
}

/// `a + factor * b` on sparse rows.
fn axpy(a: &SparseRow, factor: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, factor * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + factor * &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn coeff(row: &SparseRow, c: usize) -> Option<&Rational> {
    row.binary_search_by_key(&c, |(k, _)| *k)
        .ok()
        .map(|i| &row[i].1)
}

/// Reduced row echelon form: every row has a `1` at its pivot column and a
/// zero at every other pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    cols: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Rref {
    pub fn new(m: &RationalMatrix) -> Rref {
        let mut r = Rref {
            cols: m.cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; m.cols],
        };
        for row in &m.rows {
            r.insert(row);
        }
        r
    }

    /// Adds a row to the span, keeping the form reduced. Returns whether the
    /// rank grew.
    pub fn insert(&mut self, row: &SparseRow) -> bool {
        let mut reduced = row.clone();
        for (c, v) in row {
            if let Some(p) = self.pivot_row[*c] {
                reduced = axpy(&reduced, &-v.clone(), &self.rows[p]);
            }
        }
        let Some((pc, pv)) = reduced.first().cloned() else {
            return false;
        };
        let inv = pv.recip();
        for e in reduced.iter_mut() {
            e.1 = &e.1 * &inv;
        }
        for other in self.rows.iter_mut() {
            if let Some(v) = coeff(other, pc).cloned() {
                *other = axpy(other, &-v, &reduced);
            }
        }
        self.pivot_row[pc] = Some(self.rows.len());
        self.rows.push(reduced);
        self.pivots.push(pc);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c].is_some()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Row of pivot column `c`.
    pub fn pivot_row(&self, c: usize) -> Option<&SparseRow> {
        self.pivot_row[c].map(|r| &self.rows[r])
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    Rref::new(m).rank()
}

/// Basis of `{x : m x = 0}`, one row per free column `f` (with `x_f = 1` and
/// zero on the other free columns).
pub fn kernel_basis(m: &RationalMatrix) -> RationalMatrix {
    let r = Rref::new(m);
    let free = r.free_columns();
    let mut out = RationalMatrix::new(m.cols);
    for &f in &free {
        let mut row: SparseRow = vec![(f, Rational::one())];
        for (&p, prow) in r.pivots.iter().zip(&r.rows) {
            if let Some(v) = coeff(prow, f) {
                row.push((p, -v.clone()));
            }
        }
        out.push_sparse(row);
    }
    out
}

/// A solution of `m x = rhs`, if one exists.
pub fn solve(m: &RationalMatrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(rhs.len(), m.nrows());
    let cols = m.cols;
    let mut aug = RationalMatrix::new(cols + 1);
    for (row, b) in m.rows.iter().zip(rhs) {
        let mut r = row.clone();
        if !b.is_zero() {
            r.push((cols, b.clone()));
        }
        aug.push_sparse(r);
    }
    let r = Rref::new(&aug);
    if r.is_pivot(cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (&p, prow) in r.pivots.iter().zip(&r.rows) {
        if let Some(v) = coeff(prow, cols) {
            x[p] = v.clone();
        }
    }
    Some(x)
}

/// Rank of integer vectors. Uses fraction-free elimination in `i128` and
/// falls back to rationals if an intermediate value would overflow.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    match int_rank_i128(rows) {
        Some(r) => r,
        None => {
            let cols = rows.first().map_or(0, Vec::len);
            rank(&RationalMatrix::from_i64(cols, rows))
        }
    }
}

fn int_rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for row in rows {
        let mut v: Vec<i128> = row.iter().map(|&x| i128::from(x)).collect();
        for (pc, b) in &basis {
            let vc = v[*pc];
            if vc == 0 {
                continue;
            }
            let bc = b[*pc];
            let g = vc.gcd(&bc);
            let (fa, fb) = (bc / g, vc / g);
            let mut common = 0i128;
            for (x, y) in v.iter_mut().zip(b) {
                *x = x.checked_mul(fa)?.checked_sub(y.checked_mul(fb)?)?;
                common = common.gcd(x);
            }
            if common > 1 {
                v.iter_mut().for_each(|x| *x /= common);
            }
        }
        if let Some(pc) = v.iter().position(|&x| x != 0) {
            basis.push((pc, v));
        }
    }
    Some(basis.len())
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Primitive form of an integer vector.
pub fn primitive_i64(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

pub fn to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(ToPrimitive::to_i64).collect()
}

pub fn is_nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}
