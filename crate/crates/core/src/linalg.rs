//! Dense exact linear algebra over the rationals: row reduction, rank,
//! nullspaces and small solves. Everything here is O(rows * cols * rank)
//! Gaussian elimination, which is plenty at desk scale.

use num_rational::BigRational;
use num_traits::Zero;

pub type Rat = BigRational;

/// Reduced row echelon form in place; returns the pivot column per row.
pub fn row_reduce(mat: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &mat[r][j];
                    mat[i][j] = &mat[i][j] - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn matrix_rank(mut mat: Vec<Vec<Rat>>) -> usize {
    row_reduce(&mut mat).len()
}

/// Basis of the right nullspace of the matrix with `cols` columns.
pub fn nullspace_basis(mat: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    let pivots = row_reduce(&mut m);
    let mut basis = Vec::new();
    let mut pivot_of_col = vec![None; cols];
    for (row, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = Some(row);
    }
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::from_integer(1.into());
        for (c, slot) in pivot_of_col.iter().enumerate() {
            if let Some(row) = slot {
                v[c] = -m[*row][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// One solution of `A x = b`, or None when inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut m);
    // inconsistent iff a pivot lands in the rhs column
    if pivots.last().is_some_and(|&c| c == cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][cols].clone();
    }
    Some(x)
}

/// Exact dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Scale a rational vector to a primitive integer vector (gcd 1), keeping
/// direction. Zero vectors come back unchanged.
pub fn normalize_direction(v: &mut [Rat]) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for x in v.iter() {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut gcd = BigInt::zero();
    for x in v.iter_mut() {
        *x = &*x * &Rat::from_integer(lcm.clone());
        gcd = gcd.gcd(x.numer());
    }
    if !gcd.is_zero() {
        let g = Rat::from_integer(gcd);
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}
