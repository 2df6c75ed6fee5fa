use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::metric::MetricTensor;
use crate::ratlin::{rat, zero, DenseTensor, Rational, Slot};

/// Christoffel symbols of a left-invariant connection: `∇_{e_i} e_j = Γ^k_{ij} e_k`,
/// stored as a tensor indexed `[k, i, j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionCoefficients {
    gamma: DenseTensor,
}

impl ConnectionCoefficients {
    pub fn from_tensor(gamma: DenseTensor) -> Self {
        assert_eq!(gamma.variance(), [Slot::Upper, Slot::Lower, Slot::Lower]);
        Self { gamma }
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn tensor(&self) -> &DenseTensor {
        &self.gamma
    }

    /// `Γ^k_{ij}`.
    pub fn gamma(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.gamma[&[k, i, j]]
    }

    /// `∇_{e_i} v` for a constant-coefficient field `v`.
    pub fn nabla(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        (0..n)
            .map(|k| {
                (0..n)
                    .filter(|&j| !v[j].is_zero())
                    .fold(zero(), |acc, j| acc + self.gamma(k, i, j) * &v[j])
            })
            .collect()
    }

    /// `∇_u v` for constant-coefficient fields.
    pub fn nabla_along(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.nabla(i, v)) {
                *o += ui * c;
            }
        }
        out
    }

    /// First `(k, i, j)` with `Γ^k_{ij} - Γ^k_{ji} != C^k_{ij}`.
    pub fn torsion_violation(&self, algebra: &LieAlgebra) -> Option<[usize; 3]> {
        let n = self.dim();
        for k in 0..n {
            for i in 0..n {
                for j in i + 1..n {
                    if self.gamma(k, i, j) - self.gamma(k, j, i) != *algebra.c(k, i, j) {
                        return Some([k, i, j]);
                    }
                }
            }
        }
        None
    }
}

/// Levi-Civita connection of a left-invariant metric via the Koszul formula
/// `2g(∇_x y, z) = g([x,y],z) - g([x,z],y) - g([y,z],x)`.
pub fn levi_civita(algebra: &LieAlgebra, g: &MetricTensor) -> ConnectionCoefficients {
    let n = algebra.dim();
    assert_eq!(n, g.dim(), "algebra and metric dimensions differ");
    let gm = g.components();
    let half = rat(1, 2);

    // Lowered symbols L_{ijl} = g(∇_{e_i} e_j, e_l).
    let lowered = DenseTensor::from_fn(n, &[Slot::Lower, Slot::Lower, Slot::Lower], |ix| {
        let (i, j, l) = (ix[0], ix[1], ix[2]);
        let mut s = zero();
        for a in 0..n {
            s += algebra.c(a, i, j) * &gm[(a, l)];
            s -= algebra.c(a, i, l) * &gm[(a, j)];
            s -= algebra.c(a, j, l) * &gm[(a, i)];
        }
        s * &half
    });
    let gi = g.inverse();
    let gamma = DenseTensor::from_fn(n, &[Slot::Upper, Slot::Lower, Slot::Lower], |ix| {
        let (k, i, j) = (ix[0], ix[1], ix[2]);
        (0..n).fold(zero(), |acc, l| acc + &gi[(k, l)] * &lowered[&[i, j, l]])
    });
    ConnectionCoefficients { gamma }
}
