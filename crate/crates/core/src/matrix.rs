//! Matroids realized by rational matrices: the bases are the column
//! d-subsets with nonzero determinant, computed in exact arithmetic.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::matrix_rank;
use crate::matroid::Matroid;
use crate::subsets::codec;

pub type Rat = BigRational;

/// Column matroid of a full-row-rank d x n matrix over the rationals.
pub fn matroid_from_matrix(a: &[Vec<Rat>]) -> Result<Matroid> {
    let d = a.len();
    if d == 0 {
        return Err(Error::InvalidParams("matrix has no rows".into()));
    }
    let n = a[0].len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParams("ragged matrix".into()));
    }
    if matrix_rank(a.to_vec()) < d {
        return Err(Error::RankDeficient);
    }
    let c = codec(n, d);
    let mut bases = Vec::new();
    for &s in c.subsets() {
        let cols: Vec<usize> = s.elems().map(|e| e - 1).collect();
        let minor: Vec<Vec<Rat>> = (0..d).map(|r| cols.iter().map(|&c| a[r][c].clone()).collect()).collect();
        if !determinant(minor).is_zero() {
            bases.push(s);
        }
    }
    Matroid::from_bases(n, d, bases)
}

/// Convenience constructor from integer entries.
pub fn matroid_from_int_matrix(a: &[Vec<i64>]) -> Result<Matroid> {
    let rows: Vec<Vec<Rat>> =
        a.iter().map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect()).collect();
    matroid_from_matrix(&rows)
}

fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        let inv = m[c][c].recip();
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] * &inv;
            for k in c..n {
                let delta = &f * &m[c][k];
                m[r][k] = &m[r][k] - &delta;
            }
        }
    }
    det
}
