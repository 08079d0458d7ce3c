//! Exact Gaussian elimination over big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{Ring, Scalar};

pub fn to_big(c: &Scalar) -> BigRational {
    BigRational::new(BigInt::from(*c.numer()), BigInt::from(*c.denom()))
}

/// `None` when the value does not fit a 64-bit rational.
pub fn from_big(c: &BigRational) -> Option<Scalar> {
    Some(Scalar::new(c.numer().to_i64()?, c.denom().to_i64()?))
}

/// Row echelon reduction in place; returns pivot columns.
fn reduce(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(a: &[Vec<Scalar>]) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> = a.iter().map(|r| r.iter().map(to_big).collect()).collect();
    reduce(&mut m, cols).len()
}

/// A solution of `a·x = b` with free variables set to zero, or `None` if the
/// system is inconsistent. Also reports whether the solution is unique.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<(Vec<BigRational>, bool)> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| r.iter().chain(std::iter::once(v)).map(to_big).collect())
        .collect();
    let pivots = reduce(&mut m, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][cols].clone();
    }
    Some((x, pivots.len() == cols))
}

/// Exact inverse of a square matrix.
pub fn inverse(a: &[Vec<Scalar>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().map(to_big).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    let pivots = reduce(&mut m, n);
    if pivots.len() < n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A finite-rank algebra given by structure constants on a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    /// `table[i][j]` = coordinates of `b_i·b_j`.
    pub table: Vec<Vec<Vec<Scalar>>>,
    pub one: Vec<Scalar>,
    pub ring: Ring,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o += c * t;
                }
            }
        }
        out
    }

    /// Solves `x·y = 1` and `y·x = 1`; returns `y` when both solutions are
    /// unique, agree, and lie in the coefficient ring.
    pub fn inverse(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let d = self.dim();
        let unit = |j: usize| -> Vec<Scalar> {
            (0..d).map(|i| if i == j { Scalar::one() } else { Scalar::zero() }).collect()
        };
        let left: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(x, &unit(j))).collect();
        let right: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(&unit(j), x)).collect();
        let rows = |cols: &[Vec<Scalar>]| -> Vec<Vec<Scalar>> {
            (0..d).map(|r| cols.iter().map(|c| c[r]).collect()).collect()
        };
        let (yl, ul) = solve(&rows(&left), &self.one)?;
        let (yr, ur) = solve(&rows(&right), &self.one)?;
        if !ul || !ur || yl != yr {
            return None;
        }
        if self.ring == Ring::Integers && !is_integral(&yl) {
            return None;
        }
        yl.iter().map(from_big).collect()
    }
}

pub fn is_integral(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn max_abs_big(v: &[BigRational]) -> BigRational {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero)
}
