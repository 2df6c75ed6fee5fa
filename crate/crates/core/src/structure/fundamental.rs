use num_traits::Zero;

use super::AlmostContactBMetricStructure;
use crate::lie::{covariant_derivative, ConnectionCoefficients};
use crate::ratlin::{zero, DenseTensor, Rational, Slot};
use crate::verdict::{first_failure, Check};

/// `F(x,y,z) = g((∇_x φ)y, z)` together with the Lee forms
/// `θ(z) = g^{ij}F(e_i,e_j,z)`, `θ*(z) = g^{ij}F(e_i,φe_j,z)`, `ω(z) = F(ξ,ξ,z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalTensor {
    /// Indexed `[i, j, k]` = `F(e_i, e_j, e_k)`.
    pub f: DenseTensor,
    pub theta: Vec<Rational>,
    pub theta_star: Vec<Rational>,
    pub omega: Vec<Rational>,
}

/// `∇φ` indexed `[i, l, j]` = `((∇_{e_i} φ) e_j)^l`.
pub fn nabla_phi(s: &AlmostContactBMetricStructure, conn: &ConnectionCoefficients) -> DenseTensor {
    let phi = DenseTensor::from_matrix(&s.phi, [Slot::Upper, Slot::Lower]);
    covariant_derivative(&phi, conn)
}

pub fn fundamental_tensor(
    s: &AlmostContactBMetricStructure,
    conn: &ConnectionCoefficients,
) -> FundamentalTensor {
    let n = s.dim();
    let gm = s.gm();
    let dphi = nabla_phi(s, conn);
    let f = DenseTensor::from_fn(n, &[Slot::Lower, Slot::Lower, Slot::Lower], |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        (0..n).fold(zero(), |acc, l| acc + &dphi[&[i, l, j]] * &gm[(l, k)])
    });
    let gi = s.g.inverse();
    let theta = (0..n)
        .map(|k| {
            gi.iter()
                .filter(|(_, v)| !v.is_zero())
                .fold(zero(), |acc, ((i, j), v)| acc + v * &f[&[i, j, k]])
        })
        .collect();
    let theta_star = (0..n)
        .map(|k| {
            let mut acc = zero();
            for ((i, j), v) in gi.iter().filter(|(_, v)| !v.is_zero()) {
                for m in 0..n {
                    acc += v * &s.phi[(m, j)] * &f[&[i, m, k]];
                }
            }
            acc
        })
        .collect();
    let omega = (0..n)
        .map(|k| {
            let mut acc = zero();
            for a in 0..n {
                for b in 0..n {
                    acc += &s.xi[a] * &s.xi[b] * &f[&[a, b, k]];
                }
            }
            acc
        })
        .collect();
    FundamentalTensor {
        f,
        theta,
        theta_star,
        omega,
    }
}

impl FundamentalTensor {
    /// `F(x, y, z)` for constant-coefficient fields.
    pub fn eval(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Rational {
        let n = self.f.dim();
        let mut acc = zero();
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                for k in (0..n).filter(|&k| !z[k].is_zero()) {
                    acc += &x[i] * &y[j] * &z[k] * &self.f[&[i, j, k]];
                }
            }
        }
        acc
    }

    /// The algebraic identities every `F` of a valid structure satisfies.
    pub fn invariant_checks(
        &self,
        s: &AlmostContactBMetricStructure,
        conn: &ConnectionCoefficients,
    ) -> Vec<Check> {
        let n = s.dim();
        let e = |i: usize| s.basis(i);
        let mut checks = Vec::new();

        checks.push(Check::from_witness(
            "F_symmetric_yz",
            first_failure(n, 3, |ix| self.f[&[ix[0], ix[1], ix[2]]] == self.f[&[ix[0], ix[2], ix[1]]]),
        ));

        checks.push(Check::from_witness(
            "F_decomposition",
            first_failure(n, 3, |ix| {
                let (x, y, z) = (e(ix[0]), e(ix[1]), e(ix[2]));
                let rhs = self.eval(&x, &s.phi_of(&y), &s.phi_of(&z))
                    + s.eta_of(&y) * self.eval(&x, &s.xi, &z)
                    + s.eta_of(&z) * self.eval(&x, &y, &s.xi);
                self.f[&[ix[0], ix[1], ix[2]]] == rhs
            }),
        ));

        checks.push(Check::from_witness(
            "F_nabla_xi",
            first_failure(n, 2, |ix| {
                let (x, y) = (e(ix[0]), e(ix[1]));
                self.eval(&x, &s.phi_of(&y), &s.xi) == s.g(&conn.nabla(ix[0], &s.xi), &y)
            }),
        ));

        checks.push(Check::from_bool(
            "omega_xi_zero",
            crate::ratlin::dot(&self.omega, &s.xi).is_zero(),
        ));

        let theta_star_phi = s.phi.vec_mul(&self.theta_star);
        let phi2 = &s.phi * &s.phi;
        let theta_phi2 = phi2.vec_mul(&self.theta);
        checks.push(Check::from_witness(
            "lee_forms_phi_relation",
            (0..n)
                .find(|&k| !(&theta_star_phi[k] + &theta_phi2[k]).is_zero())
                .map(|k| vec![k]),
        ));
        checks
    }
}

/// Membership in the class `F₀` (`F ≡ 0`).
pub fn is_cosymplectic(ft: &FundamentalTensor) -> bool {
    ft.f.is_zero()
}
