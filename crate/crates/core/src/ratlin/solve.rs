//! Exact elimination: affine solution spaces, inversion and inertia.

use num_traits::{Signed, Zero};

use super::matrix::Matrix;
use super::rational::{zero, Rational};
use crate::error::{Error, Result};

/// Complete solution set of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolutionSpace {
    pub consistent: bool,
    /// Present iff `consistent`; free variables set to zero.
    pub particular: Option<Vec<Rational>>,
    pub nullspace_basis: Vec<Vec<Rational>>,
}

impl AffineSolutionSpace {
    pub fn dimension(&self) -> Option<usize> {
        self.consistent.then_some(self.nullspace_basis.len())
    }

    /// The solution, when there is exactly one.
    pub fn unique(&self) -> Option<&[Rational]> {
        match (&self.particular, self.nullspace_basis.is_empty()) {
            (Some(x), true) => Some(x),
            _ => None,
        }
    }

    /// True when some solution has a nonzero entry at one of `coords`.
    pub fn admits_nonzero_on(&self, coords: &[usize]) -> bool {
        let Some(p) = &self.particular else {
            return false;
        };
        coords.iter().any(|&c| !p[c].is_zero())
            || self
                .nullspace_basis
                .iter()
                .any(|v| coords.iter().any(|&c| !v[c].is_zero()))
    }
}

/// Reduced row echelon form in place; returns pivot columns.
///
/// Pivots are taken as the first nonzero entry scanning each column top-down,
/// which keeps the output deterministic.
fn rref(m: &mut Matrix, pivot_cols_limit: usize) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols_limit.min(cols) {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = tmp;
            }
        }
        let inv = m[(r, c)].recip();
        for j in c..cols {
            m[(r, j)] = &m[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..cols {
                let d = &f * &m[(r, j)];
                m[(i, j)] -= d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A x = b` exactly, returning a particular solution and a nullspace basis.
pub fn solve_affine(a: &Matrix, b: &[Rational]) -> AffineSolutionSpace {
    assert_eq!(a.rows(), b.len(), "row count of A must match length of b");
    let n = a.cols();
    let mut aug = Matrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(&mut aug, n + 1);
    let consistent = pivots.last() != Some(&n);
    let pivots: Vec<usize> = pivots.into_iter().filter(|&c| c < n).collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();

    let nullspace_basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![zero(); n];
            v[f] = Rational::from_integer(1.into());
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -aug[(r, f)].clone();
            }
            v
        })
        .collect();

    let particular = consistent.then(|| {
        let mut x = vec![zero(); n];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(r, n)].clone();
        }
        x
    });

    AffineSolutionSpace {
        consistent,
        particular,
        nullspace_basis,
    }
}

pub fn nullspace(a: &Matrix) -> Vec<Vec<Rational>> {
    solve_affine(a, &vec![zero(); a.rows()]).nullspace_basis
}

pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    rref(&mut m, a.cols()).len()
}

/// Inverse of a square matrix by Gauss–Jordan elimination.
pub fn invert(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "cannot invert a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            Rational::from_integer(1.into())
        } else {
            zero()
        }
    });
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return Err(Error::SingularMetric);
    }
    Ok(Matrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
}

/// Inverse of a symmetric matrix. The result is symmetric.
pub fn invert_symmetric(m: &Matrix) -> Result<Matrix> {
    if !m.is_symmetric() {
        return Err(Error::Validation("matrix is not symmetric".into()));
    }
    invert(m)
}

/// Inertia of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.plus, self.minus, self.zero)
    }
}

/// Sylvester inertia by symmetric congruence elimination.
///
/// When every remaining diagonal entry vanishes but some off-diagonal `a_ij`
/// does not, adding row/column `j` to row/column `i` produces the pivot
/// `2 a_ij` (the 2x2 hyperbolic block case).
pub fn signature(m: &Matrix) -> Signature {
    assert!(m.is_square(), "signature needs a square matrix");
    let n = m.rows();
    let mut a = m.clone();
    let mut sig = Signature {
        plus: 0,
        minus: 0,
        zero: 0,
    };
    for k in 0..n {
        let diag = (k..n).find(|&i| !a[(i, i)].is_zero());
        let pivot = match diag {
            Some(i) => Some(i),
            None => {
                let off = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_zero());
                off.map(|(i, j)| {
                    for c in 0..n {
                        let v = a[(j, c)].clone();
                        a[(i, c)] += v;
                    }
                    for r in 0..n {
                        let v = a[(r, j)].clone();
                        a[(r, i)] += v;
                    }
                    i
                })
            }
        };
        let Some(p) = pivot else {
            sig.zero = n - k;
            break;
        };
        if p != k {
            for c in 0..n {
                let tmp = a[(p, c)].clone();
                a[(p, c)] = a[(k, c)].clone();
                a[(k, c)] = tmp;
            }
            for r in 0..n {
                let tmp = a[(r, p)].clone();
                a[(r, p)] = a[(r, k)].clone();
                a[(r, k)] = tmp;
            }
        }
        let d = a[(k, k)].clone();
        if d.is_positive() {
            sig.plus += 1;
        } else {
            sig.minus += 1;
        }
        for j in k + 1..n {
            if a[(j, k)].is_zero() {
                continue;
            }
            let f = &a[(j, k)] / &d;
            for c in k..n {
                let v = &f * &a[(k, c)];
                a[(j, c)] -= v;
            }
            for r in k..n {
                let v = &f * &a[(r, k)];
                a[(r, j)] -= v;
            }
        }
    }
    sig
}

pub fn determinant(m: &Matrix) -> Rational {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut det = Rational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return zero();
        };
        if p != c {
            for j in 0..n {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(c, j)].clone();
                a[(c, j)] = tmp;
            }
            det = -det;
        }
        let piv = a[(c, c)].clone();
        det *= &piv;
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = &a[(i, c)] / &piv;
            for j in c..n {
                let v = &f * &a[(c, j)];
                a[(i, j)] -= v;
            }
        }
    }
    det
}
