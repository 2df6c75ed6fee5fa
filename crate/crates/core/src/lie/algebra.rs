use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratlin::{invert, zero, DenseTensor, Matrix, Rational, Slot};

/// Real Lie algebra in a fixed basis: `[e_i, e_j] = C^k_{ij} e_k`.
///
/// Structure constants are stored as a `(1,2)` tensor indexed `[k, i, j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    structure_constants: DenseTensor,
}

/// Index triples `i < j < k` on which the Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiVerdict {
    pub violations: Vec<[usize; 3]>,
}

impl JacobiVerdict {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl LieAlgebra {
    /// Wraps structure constants after checking shape and antisymmetry.
    pub fn new(structure_constants: DenseTensor) -> Result<Self> {
        if structure_constants.variance() != [Slot::Upper, Slot::Lower, Slot::Lower] {
            return Err(Error::DimensionMismatch(
                "structure constants must be a (1,2) tensor".into(),
            ));
        }
        let n = structure_constants.dim();
        for k in 0..n {
            for i in 0..n {
                for j in i..n {
                    if structure_constants[&[k, i, j]] != -structure_constants[&[k, j, i]].clone() {
                        return Err(Error::Validation(format!(
                            "structure constants not antisymmetric at C^{k}_{{{i}{j}}}"
                        )));
                    }
                }
            }
        }
        Ok(Self {
            structure_constants,
        })
    }

    /// Builds the algebra from entries `(i, j, k, c)` meaning the `e_k`-coefficient
    /// of `[e_i, e_j]` is `c`. The `(j, i)` entries are filled by antisymmetry.
    pub fn from_brackets(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut c = DenseTensor::zeros(dim, &[Slot::Upper, Slot::Lower, Slot::Lower]);
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::Validation(format!("[e_{i}, e_{i}] must vanish")));
                }
                continue;
            }
            c[&[k, i, j]] += v;
            c[&[k, j, i]] -= v;
        }
        Self::new(c)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            structure_constants: DenseTensor::zeros(dim, &[Slot::Upper, Slot::Lower, Slot::Lower]),
        }
    }

    pub fn dim(&self) -> usize {
        self.structure_constants.dim()
    }

    pub fn structure_constants(&self) -> &DenseTensor {
        &self.structure_constants
    }

    /// `C^k_{ij}`.
    pub fn c(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.structure_constants[&[k, i, j]]
    }

    /// Components of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim()).map(|k| self.c(k, i, j).clone()).collect()
    }

    /// `[u, v]` for constant-coefficient fields.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &uv * self.c(k, i, j);
                }
            }
        }
        out
    }

    /// Checks `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` on all triples.
    pub fn check_jacobi(&self) -> JacobiVerdict {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let violated = (0..n).any(|m| {
                        let mut s = zero();
                        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                            for l in 0..n {
                                s += self.c(l, a, b) * self.c(m, l, c);
                            }
                        }
                        !s.is_zero()
                    });
                    if violated {
                        violations.push([i, j, k]);
                    }
                }
            }
        }
        JacobiVerdict { violations }
    }

    /// Structure constants in the basis `e'_a = S^i_a e_i` (columns of `s`).
    pub fn change_basis(&self, s: &Matrix) -> Result<Self> {
        let n = self.dim();
        let s_inv = invert(s)?;
        let c = DenseTensor::from_fn(n, &[Slot::Upper, Slot::Lower, Slot::Lower], |ix| {
            let (cc, a, b) = (ix[0], ix[1], ix[2]);
            let u = s.column(a);
            let v = s.column(b);
            let w = self.bracket(&u, &v);
            (0..n).fold(zero(), |acc, k| acc + &s_inv[(cc, k)] * &w[k])
        });
        Ok(Self {
            structure_constants: c,
        })
    }
}
