//! Riemann and Ricci data of a left-invariant metric.
//!
//! Conventions: `R(x,y)z = ∇_x∇_y z − ∇_y∇_x z − ∇_{[x,y]} z`,
//! `R_{ijkl} = g(R(e_i,e_j)e_k, e_l)`, `ρ(y,z) = tr(x ↦ R(x,y)z)`.

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::connection::{levi_civita, ConnectionCoefficients};
use super::metric::MetricTensor;
use crate::error::Result;
use crate::ratlin::{zero, DenseTensor, Matrix, Rational, Slot};

/// Riemann tensor in both variances: `riemann_13` indexed `[l, i, j, k]` with
/// `R(e_i,e_j)e_k = R^l_{ijk} e_l`, and `riemann_04` indexed `[i, j, k, l]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Riemann {
    pub riemann_13: DenseTensor,
    pub riemann_04: DenseTensor,
}

/// Full curvature record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureData {
    pub riemann: Riemann,
    /// `ρ_{ij}`.
    pub ricci: Matrix,
    /// `Q^i_j` with `g(Qx, y) = ρ(x, y)`.
    pub ricci_operator: Matrix,
    pub tau: Rational,
    pub tau_star: Rational,
    /// Scalar curvature of the associated metric, from its own Levi-Civita connection.
    pub tau_tilde: Rational,
}

pub fn curvature(algebra: &LieAlgebra, g: &MetricTensor, conn: &ConnectionCoefficients) -> Riemann {
    let n = algebra.dim();
    let r13 = DenseTensor::from_fn(
        n,
        &[Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower],
        |ix| {
            let (l, i, j, k) = (ix[0], ix[1], ix[2], ix[3]);
            let mut s = zero();
            for m in 0..n {
                s += conn.gamma(m, j, k) * conn.gamma(l, i, m);
                s -= conn.gamma(m, i, k) * conn.gamma(l, j, m);
                let c = algebra.c(m, i, j);
                if !c.is_zero() {
                    s -= c * conn.gamma(l, m, k);
                }
            }
            s
        },
    );
    let gm = g.components();
    let r04 = DenseTensor::from_fn(
        n,
        &[Slot::Lower, Slot::Lower, Slot::Lower, Slot::Lower],
        |ix| {
            let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
            (0..n).fold(zero(), |acc, a| acc + &gm[(l, a)] * &r13[&[a, i, j, k]])
        },
    );
    Riemann {
        riemann_13: r13,
        riemann_04: r04,
    }
}

impl Riemann {
    pub fn dim(&self) -> usize {
        self.riemann_04.dim()
    }

    /// `R(x,y)z` for constant-coefficient fields.
    pub fn apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    if z[k].is_zero() {
                        continue;
                    }
                    let w = &x[i] * &y[j] * &z[k];
                    for (l, o) in out.iter_mut().enumerate() {
                        *o += &w * &self.riemann_13[&[l, i, j, k]];
                    }
                }
            }
        }
        out
    }

    /// `ρ_{jk} = R^i_{ijk}`.
    pub fn ricci(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |j, k| {
            (0..n).fold(zero(), |acc, i| acc + &self.riemann_13[&[i, i, j, k]])
        })
    }

    /// First failing algebraic identity of `R_{ijkl}`, if any: antisymmetry in
    /// each pair, pair symmetry, first Bianchi.
    pub fn symmetry_violation(&self) -> Option<(&'static str, [usize; 4])> {
        let r = &self.riemann_04;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = &r[&[i, j, k, l]];
                        if *v != -r[&[j, i, k, l]].clone() {
                            return Some(("R_ijkl = -R_jikl", [i, j, k, l]));
                        }
                        if *v != -r[&[i, j, l, k]].clone() {
                            return Some(("R_ijkl = -R_ijlk", [i, j, k, l]));
                        }
                        if *v != r[&[k, l, i, j]] {
                            return Some(("R_ijkl = R_klij", [i, j, k, l]));
                        }
                        if !(v + &r[&[j, k, i, l]] + &r[&[k, i, j, l]]).is_zero() {
                            return Some(("first Bianchi", [i, j, k, l]));
                        }
                    }
                }
            }
        }
        None
    }
}

/// `τ = g^{ij} ρ_{ij}`.
pub fn scalar_from_ricci(ricci: &Matrix, g: &MetricTensor) -> Rational {
    let gi = g.inverse();
    gi.iter()
        .filter(|(_, v)| !v.is_zero())
        .fold(zero(), |acc, ((i, j), v)| acc + v * &ricci[(i, j)])
}

/// Scalar curvature of `(algebra, g)` by the full connection → curvature → Ricci pipeline.
pub fn scalar_curvature(algebra: &LieAlgebra, g: &MetricTensor) -> Rational {
    let conn = levi_civita(algebra, g);
    let riem = curvature(algebra, g, &conn);
    scalar_from_ricci(&riem.ricci(), g)
}

/// Fills Ricci tensor, Ricci operator and the scalars `τ`, `τ* = g^{ij} ρ(e_i, φ e_j)`
/// and `τ̃` (recomputed from scratch with `g_tilde` as the metric).
pub fn ricci_data(
    algebra: &LieAlgebra,
    riemann: Riemann,
    g: &MetricTensor,
    phi: &Matrix,
    g_tilde: &Matrix,
) -> Result<CurvatureData> {
    let ricci = riemann.ricci();
    let gi = g.inverse();
    let ricci_operator = gi * &ricci;
    let tau = scalar_from_ricci(&ricci, g);
    let rho_phi = &ricci * phi;
    let tau_star = gi
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .fold(zero(), |acc, ((i, j), v)| acc + v * &rho_phi[(i, j)]);
    let g_tilde = MetricTensor::new(g_tilde.clone())?;
    let tau_tilde = scalar_curvature(algebra, &g_tilde);
    Ok(CurvatureData {
        riemann,
        ricci,
        ricci_operator,
        tau,
        tau_star,
        tau_tilde,
    })
}
