//! Almost contact B-metric structures `(φ, ξ, η, g)` on a Lie algebra.

mod fundamental;
mod sasaki;

pub use fundamental::{fundamental_tensor, is_cosymplectic, nabla_phi, FundamentalTensor};
pub use sasaki::{is_sasaki_like, sasaki_consequences, sasaki_violation, SasakiVerdict};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{levi_civita, LieAlgebra, MetricTensor};
use crate::ratlin::{dot, invert, one, zero, Matrix, Rational, Signature};
use crate::verdict::{all_passed, first_failure, Check};

/// The quadruple `(φ, ξ, η, g)` over a Lie algebra.
///
/// `phi` acts on column vectors: `φ e_j = Σ_i phi[(i, j)] e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostContactBMetricStructure {
    pub algebra: LieAlgebra,
    pub g: MetricTensor,
    pub phi: Matrix,
    pub xi: Vec<Rational>,
    pub eta: Vec<Rational>,
}

/// Per-axiom outcome of [`validate_structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureVerdict {
    pub checks: Vec<Check>,
}

impl StructureVerdict {
    pub fn is_valid(&self) -> bool {
        all_passed(&self.checks)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl AlmostContactBMetricStructure {
    pub fn new(
        algebra: LieAlgebra,
        g: Matrix,
        phi: Matrix,
        xi: Vec<Rational>,
        eta: Vec<Rational>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "metric is {}x{}, algebra has dimension {n}",
                g.rows(),
                g.cols()
            )));
        }
        if phi.rows() != n || phi.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "phi is {}x{}, algebra has dimension {n}",
                phi.rows(),
                phi.cols()
            )));
        }
        if xi.len() != n || eta.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "xi/eta have lengths {}/{}, algebra has dimension {n}",
                xi.len(),
                eta.len()
            )));
        }
        Ok(Self {
            algebra,
            g: MetricTensor::new(g)?,
            phi,
            xi,
            eta,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `n` with `dim = 2n + 1`.
    pub fn n(&self) -> usize {
        (self.dim() - 1) / 2
    }

    /// `2n` as a rational.
    pub fn two_n(&self) -> Rational {
        Rational::from_integer((2 * self.n()).into())
    }

    pub fn gm(&self) -> &Matrix {
        self.g.components()
    }

    pub fn g(&self, u: &[Rational], v: &[Rational]) -> Rational {
        self.gm().bilinear(u, v)
    }

    pub fn phi_of(&self, v: &[Rational]) -> Vec<Rational> {
        self.phi.mul_vec(v)
    }

    pub fn eta_of(&self, v: &[Rational]) -> Rational {
        dot(&self.eta, v)
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        unit(self.dim(), i)
    }

    /// `η ⊗ η`.
    pub fn eta_eta(&self) -> Matrix {
        Matrix::outer(&self.eta, &self.eta)
    }

    /// `g̃_{ij} = g(e_i, φ e_j) + η_i η_j`.
    pub fn g_tilde_matrix(&self) -> Matrix {
        &(self.gm() * &self.phi) + &self.eta_eta()
    }

    /// `g(φx, φy)` as a matrix.
    pub fn g_phi_phi(&self) -> Matrix {
        self.gm().congruence(&self.phi)
    }

    /// `g(x, φy)` as a matrix.
    pub fn g_phi(&self) -> Matrix {
        self.gm() * &self.phi
    }

    /// Basis of `ker η`.
    pub fn contact_basis(&self) -> Vec<Vec<Rational>> {
        crate::ratlin::nullspace(&Matrix::from_rows(vec![self.eta.clone()]))
    }

    /// The same structure expressed in the basis `e'_a = S^i_a e_i`.
    pub fn change_basis(&self, s: &Matrix) -> Result<Self> {
        let s_inv = invert(s)?;
        Self::new(
            self.algebra.change_basis(s)?,
            self.gm().congruence(s),
            &(&s_inv * &self.phi) * s,
            s_inv.mul_vec(&self.xi),
            s.vec_mul(&self.eta),
        )
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|k| if k == i { one() } else { zero() }).collect()
}

/// Checks every structure axiom and reports all failures.
pub fn validate_structure(s: &AlmostContactBMetricStructure) -> StructureVerdict {
    let n = s.dim();
    let gm = s.gm();
    let phi = &s.phi;
    let mut checks = Vec::new();

    checks.push(Check::from_bool("odd_dimension", n % 2 == 1 && n >= 3).with_detail(format!("dim = {n}")));
    let jac = s.algebra.check_jacobi();
    checks.push(Check::from_witness(
        "jacobi",
        jac.violations.first().map(|t| t.to_vec()),
    ));

    let phi_xi = s.phi_of(&s.xi);
    checks.push(Check::from_witness(
        "phi_xi_zero",
        phi_xi.iter().position(|v| !v.is_zero()).map(|k| vec![k]),
    ));

    let phi2 = phi * phi;
    checks.push(Check::from_witness(
        "phi_squared",
        first_failure(n, 2, |ix| {
            let (i, j) = (ix[0], ix[1]);
            let id = if i == j { one() } else { zero() };
            phi2[(i, j)] == -id + &s.xi[i] * &s.eta[j]
        }),
    ));

    let eta_phi = phi.vec_mul(&s.eta);
    checks.push(Check::from_witness(
        "eta_phi_zero",
        eta_phi.iter().position(|v| !v.is_zero()).map(|k| vec![k]),
    ));

    checks.push(Check::from_bool("eta_xi_one", s.eta_of(&s.xi).is_one()));

    let gpp = s.g_phi_phi();
    checks.push(Check::from_witness(
        "b_metric",
        first_failure(n, 2, |ix| {
            let (i, j) = (ix[0], ix[1]);
            gpp[(i, j)] == -gm[(i, j)].clone() + &s.eta[i] * &s.eta[j]
        }),
    ));

    let expected = Signature {
        plus: s.n() + 1,
        minus: s.n(),
        zero: 0,
    };
    let sig = s.g.signature();
    checks.push(
        Check::from_bool("signature", n % 2 == 1 && sig == expected)
            .with_detail(format!("signature {sig}, expected {expected}")),
    );

    let gp = s.g_phi();
    checks.push(Check::from_witness(
        "phi_g_symmetric",
        first_failure(n, 2, |ix| gp[(ix[0], ix[1])] == gp[(ix[1], ix[0])]),
    ));

    let g_xi = gm.mul_vec(&s.xi);
    checks.push(Check::from_witness(
        "g_xi_eta",
        (0..n).find(|&k| g_xi[k] != s.eta[k]).map(|k| vec![k]),
    ));

    checks.push(Check::from_bool("g_xi_xi_one", s.g(&s.xi, &s.xi).is_one()));

    let conn = levi_civita(&s.algebra, &s.g);
    checks.push(Check::from_witness(
        "eta_nabla_xi_zero",
        (0..n)
            .find(|&i| !s.eta_of(&conn.nabla(i, &s.xi)).is_zero())
            .map(|i| vec![i]),
    ));

    StructureVerdict { checks }
}

/// The associated B-metric `g̃(x,y) = g(x, φy) + η(x)η(y)`.
pub fn associated_metric(s: &AlmostContactBMetricStructure) -> Result<MetricTensor> {
    MetricTensor::new(s.g_tilde_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::sasaki5;
    use crate::ratlin::{int, rat};

    fn five() -> AlmostContactBMetricStructure {
        sasaki5(&rat(1, 2), &int(-3)).to_structure().unwrap()
    }

    #[test]
    fn example_structure_is_valid() {
        let v = validate_structure(&five());
        assert!(v.is_valid(), "{:?}", v.failures().collect::<Vec<_>>());
    }

    #[test]
    fn scaled_eta_breaks_normalisation() {
        let mut s = five();
        s.eta = s.eta.iter().map(|v| v * int(2)).collect();
        let v = validate_structure(&s);
        let failed: Vec<_> = v.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"eta_xi_one"));
    }

    #[test]
    fn negated_metric_breaks_signature() {
        let s = five();
        let neg = AlmostContactBMetricStructure::new(
            s.algebra.clone(),
            -s.gm(),
            s.phi.clone(),
            s.xi.clone(),
            s.eta.clone(),
        )
        .unwrap();
        let v = validate_structure(&neg);
        let failed: Vec<_> = v.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"signature"));
    }

    #[test]
    fn associated_metric_of_example() {
        let s = five();
        let gt = associated_metric(&s).unwrap();
        // Direct evaluation of g(e_i, φ e_j) + η_i η_j on the φ table.
        let mut expected = Matrix::zeros(5, 5);
        expected[(0, 0)] = int(1);
        for (a, b) in [(1, 3), (2, 4)] {
            expected[(a, b)] = int(-1);
            expected[(b, a)] = int(-1);
        }
        assert_eq!(gt.components(), &expected);
        assert_eq!(
            gt.signature(),
            Signature {
                plus: 3,
                minus: 2,
                zero: 0
            }
        );
        assert!(s.g_tilde_matrix().bilinear(&s.xi, &s.xi).is_one());
    }

    #[test]
    fn associated_metric_is_b_metric() {
        let s = five();
        let gt = s.g_tilde_matrix();
        let lhs = gt.congruence(&s.phi);
        let rhs = &(-&gt) + &s.eta_eta();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let s = five();
        let err = AlmostContactBMetricStructure::new(
            s.algebra.clone(),
            Matrix::identity(3),
            s.phi.clone(),
            s.xi.clone(),
            s.eta.clone(),
        );
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
    }
}
