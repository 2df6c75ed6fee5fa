use num_traits::Zero;

use super::connection::ConnectionCoefficients;
use crate::ratlin::{zero, DenseTensor, Matrix, Rational, Slot};

/// Covariant derivative of a left-invariant tensor of any variance.
///
/// The result has one extra leading lower slot for the direction:
/// `(∇T)[i, ...] = (∇_{e_i} T)[...]`. Component functions are constant, so only
/// the connection terms survive.
pub fn covariant_derivative(t: &DenseTensor, conn: &ConnectionCoefficients) -> DenseTensor {
    let n = t.dim();
    assert_eq!(n, conn.dim(), "tensor and connection dimensions differ");
    let mut variance = vec![Slot::Lower];
    variance.extend_from_slice(t.variance());
    let slots = t.variance().to_vec();
    let mut scratch = vec![0usize; slots.len()];
    DenseTensor::from_fn(n, &variance, |ix| {
        let i = ix[0];
        let rest = &ix[1..];
        let mut acc = zero();
        for (s, slot) in slots.iter().enumerate() {
            scratch.copy_from_slice(rest);
            for m in 0..n {
                scratch[s] = m;
                let tv = &t[&scratch[..]];
                if tv.is_zero() {
                    continue;
                }
                match slot {
                    Slot::Upper => acc += conn.gamma(rest[s], i, m) * tv,
                    Slot::Lower => acc -= conn.gamma(m, i, rest[s]) * tv,
                }
            }
        }
        acc
    })
}

/// `(∇_{e_i} T)(e_j, e_k)` for a `(0,2)` tensor given as a matrix.
pub fn covariant_derivative_02(t: &Matrix, conn: &ConnectionCoefficients) -> DenseTensor {
    covariant_derivative(&DenseTensor::from_matrix(t, [Slot::Lower, Slot::Lower]), conn)
}

/// `(L_v g)(x, y) = g(∇_x v, y) + g(x, ∇_y v)` for a constant-coefficient `v`.
pub fn lie_derivative_metric(v: &[Rational], g: &Matrix, conn: &ConnectionCoefficients) -> Matrix {
    let n = g.rows();
    let nabla_v: Vec<Vec<Rational>> = (0..n).map(|i| conn.nabla(i, v)).collect();
    let lowered: Vec<Vec<Rational>> = nabla_v.iter().map(|w| g.vec_mul(w)).collect();
    Matrix::from_fn(n, n, |i, j| &lowered[i][j] + &lowered[j][i])
}
