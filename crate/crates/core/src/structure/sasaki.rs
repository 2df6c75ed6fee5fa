use num_traits::Zero;

use super::fundamental::{fundamental_tensor, nabla_phi, FundamentalTensor};
use super::{associated_metric, AlmostContactBMetricStructure};
use crate::error::Result;
use crate::lie::{covariant_derivative, curvature, ricci_data, ConnectionCoefficients, CurvatureData};
use crate::ratlin::{DenseTensor, Rational, Slot};
use crate::verdict::{first_failure, Check};

/// Outcome of testing `(∇_x φ)y = −g(x,y)ξ − η(y)x + 2η(x)η(y)ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SasakiVerdict {
    pub holds: bool,
    /// First `(i, j, l)` where the `e_l`-component of `(∇_{e_i}φ)e_j` disagrees.
    pub violation: Option<[usize; 3]>,
    /// Consequence identities, evaluated only when `holds`.
    pub consequences: Vec<Check>,
}

/// Right-hand side of the defining identity, as a vector, for `x = e_i`, `y = e_j`.
fn sasaki_rhs(s: &AlmostContactBMetricStructure, i: usize, j: usize) -> Vec<Rational> {
    let gm = s.gm();
    let two_eta = &s.eta[i] * &s.eta[j] * Rational::from_integer(2.into());
    (0..s.dim())
        .map(|l| {
            let mut v = -&gm[(i, j)] * &s.xi[l] + &two_eta * &s.xi[l];
            if l == i {
                v -= &s.eta[j];
            }
            v
        })
        .collect()
}

/// First `(i, j, l)` where the defining identity fails, if any.
pub fn sasaki_violation(
    s: &AlmostContactBMetricStructure,
    conn: &ConnectionCoefficients,
) -> Option<[usize; 3]> {
    let n = s.dim();
    let dphi = nabla_phi(s, conn);
    for i in 0..n {
        for j in 0..n {
            let rhs = sasaki_rhs(s, i, j);
            for (l, r) in rhs.iter().enumerate() {
                if dphi[&[i, l, j]] != *r {
                    return Some([i, j, l]);
                }
            }
        }
    }
    None
}

/// Decides the Sasaki-like condition from its definition, then checks the
/// consequence identities (which must hold whenever the definition does).
pub fn is_sasaki_like(
    s: &AlmostContactBMetricStructure,
    conn: &ConnectionCoefficients,
) -> Result<SasakiVerdict> {
    let violation = sasaki_violation(s, conn);
    let holds = violation.is_none();
    let consequences = if holds {
        let riem = curvature(&s.algebra, &s.g, conn);
        let gt = associated_metric(s)?;
        let curv = ricci_data(&s.algebra, riem, &s.g, &s.phi, gt.components())?;
        let ft = fundamental_tensor(s, conn);
        sasaki_consequences(s, conn, &curv, &ft)
    } else {
        Vec::new()
    };
    Ok(SasakiVerdict {
        holds,
        violation,
        consequences,
    })
}

/// Identities implied by the Sasaki-like condition.
pub fn sasaki_consequences(
    s: &AlmostContactBMetricStructure,
    conn: &ConnectionCoefficients,
    curv: &CurvatureData,
    ft: &FundamentalTensor,
) -> Vec<Check> {
    let n = s.dim();
    let two_n = s.two_n();
    let e = |i: usize| s.basis(i);
    let riem = &curv.riemann;
    let rho = &curv.ricci;
    let gm = s.gm();
    let mut checks = Vec::new();

    checks.push(Check::from_witness(
        "nabla_xi_eq_minus_phi",
        first_failure(n, 1, |ix| {
            let lhs = conn.nabla(ix[0], &s.xi);
            let rhs: Vec<Rational> = s.phi_of(&e(ix[0])).into_iter().map(|v| -v).collect();
            lhs == rhs
        }),
    ));

    let eta_t = DenseTensor::from_fn(n, &[Slot::Lower], |ix| s.eta[ix[0]].clone());
    let d_eta = covariant_derivative(&eta_t, conn);
    let gp = s.g_phi();
    checks.push(Check::from_witness(
        "nabla_eta",
        first_failure(n, 2, |ix| d_eta[&[ix[0], ix[1]]] == -gp[(ix[0], ix[1])].clone()),
    ));

    checks.push(Check::from_witness(
        "R_xy_xi",
        first_failure(n, 2, |ix| {
            let (x, y) = (e(ix[0]), e(ix[1]));
            let lhs = riem.apply(&x, &y, &s.xi);
            let rhs: Vec<Rational> = (0..n)
                .map(|l| s.eta_of(&y) * &x[l] - s.eta_of(&x) * &y[l])
                .collect();
            lhs == rhs
        }),
    ));

    let rho_xi = rho.mul_vec(&s.xi);
    checks.push(Check::from_witness(
        "rho_x_xi",
        (0..n).find(|&k| rho_xi[k] != &two_n * &s.eta[k]).map(|k| vec![k]),
    ));

    checks.push(Check::from_witness(
        "R_xi_y_z",
        first_failure(n, 2, |ix| {
            let (y, z) = (e(ix[0]), e(ix[1]));
            let lhs = riem.apply(&s.xi, &y, &z);
            let gyz = gm[(ix[0], ix[1])].clone();
            let rhs: Vec<Rational> = (0..n)
                .map(|l| &gyz * &s.xi[l] - s.eta_of(&z) * &y[l])
                .collect();
            lhs == rhs
        }),
    ));

    checks.push(Check::from_bool(
        "rho_xi_xi",
        rho.bilinear(&s.xi, &s.xi) == two_n,
    ));

    let theta_ok = (0..n).all(|k| ft.theta[k] == -&two_n * &s.eta[k]);
    checks.push(Check::from_bool("theta_eq_minus_2n_eta", theta_ok));
    checks.push(Check::from_bool(
        "theta_star_omega_zero",
        ft.theta_star.iter().chain(&ft.omega).all(Zero::is_zero),
    ));

    checks.push(
        Check::from_bool("tau_tilde_eq_minus_tau_star_plus_2n", curv.tau_tilde == -&curv.tau_star + &two_n)
            .with_detail(format!(
                "tau_tilde = {}, tau_star = {}",
                curv.tau_tilde, curv.tau_star
            )),
    );
    checks
}
