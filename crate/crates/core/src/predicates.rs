//! Exact decision procedures for curvature conditions on the Ricci tensor,
//! the Ricci operator and the curvature tensor.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{covariant_derivative, ConnectionCoefficients, Riemann};
use crate::ratlin::{int, solve_affine, zero, AffineSolutionSpace, DenseTensor, Matrix, Rational, Slot};
use crate::structure::AlmostContactBMetricStructure;
use crate::verdict::{first_failure, Check};

/// Data attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A violating index tuple. For predicates quantified over `ker η` the
    /// indices refer to [`AlmostContactBMetricStructure::contact_basis`].
    Indices(Vec<usize>),
    Forms(FormSolution),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// What the Einstein equivalence predicts for this predicate, when it applies.
    pub einstein_equivalent: Option<bool>,
    pub auxiliary: Vec<Check>,
}

impl PredicateVerdict {
    fn from_indices(name: &str, violation: Option<Vec<usize>>) -> Self {
        Self {
            name: name.to_owned(),
            holds: violation.is_none(),
            witness: violation.map(Witness::Indices),
            einstein_equivalent: None,
            auxiliary: Vec::new(),
        }
    }

    pub fn predicting(mut self, expected: bool) -> Self {
        self.einstein_equivalent = Some(expected);
        self
    }

    /// The value that the Einstein equivalence should be compared with.
    pub fn decisive_value(&self) -> bool {
        match &self.witness {
            Some(Witness::Forms(f)) => f.solvable(),
            _ => self.holds,
        }
    }

    pub fn violation(&self) -> Option<&[usize]> {
        match &self.witness {
            Some(Witness::Indices(ix)) => Some(ix),
            _ => None,
        }
    }
}

impl fmt::Display for PredicateVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.holds)?;
        if let Some(ix) = self.violation() {
            write!(f, " at {ix:?}")?;
        }
        Ok(())
    }
}

/// Verdicts for the first-order conditions on `∇ρ`: locally symmetric,
/// η-parallel, parallel along `ξ`, cyclic parallel and Codazzi type.
pub fn ricci_parallelism_report(nabla_rho: &DenseTensor, s: &AlmostContactBMetricStructure) -> Vec<PredicateVerdict> {
    let n = s.dim();
    let t = |x: usize, y: usize, z: usize| &nabla_rho[&[x, y, z]];
    let h = s.contact_basis();
    let on_contact = |a: usize, b: usize, c: usize| -> Rational {
        let mut acc = zero();
        for (x, hx) in h[a].iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (y, hy) in h[b].iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (z, hz) in h[c].iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    acc += hx * hy * hz * t(x, y, z);
                }
            }
        }
        acc
    };
    vec![
        PredicateVerdict::from_indices("locally_symmetric", nabla_rho.first_nonzero()),
        PredicateVerdict::from_indices(
            "eta_parallel",
            first_failure(h.len(), 3, |ix| on_contact(ix[0], ix[1], ix[2]).is_zero()),
        ),
        PredicateVerdict::from_indices(
            "parallel_along_xi",
            first_failure(n, 2, |ix| {
                (0..n)
                    .map(|i| &s.xi[i] * t(i, ix[0], ix[1]))
                    .sum::<Rational>()
                    .is_zero()
            }),
        ),
        PredicateVerdict::from_indices(
            "cyclic_parallel",
            first_failure(n, 3, |ix| {
                let (x, y, z) = (ix[0], ix[1], ix[2]);
                (t(x, y, z) + t(y, z, x) + t(z, x, y)).is_zero()
            }),
        ),
        PredicateVerdict::from_indices(
            "codazzi",
            first_failure(n, 3, |ix| t(ix[0], ix[1], ix[2]) == t(ix[1], ix[0], ix[2])),
        ),
    ]
}

/// `ρ(R(ξ,x)y, z) + ρ(y, R(ξ,x)z)` as a `(0,3)` tensor in `(x, y, z)`.
pub fn r_xi_rho_tensor(riemann: &Riemann, rho: &Matrix, s: &AlmostContactBMetricStructure) -> DenseTensor {
    let n = s.dim();
    let r13 = &riemann.riemann_13;
    // (R(ξ,e_x)e_y)^l
    let rxi = |l: usize, x: usize, y: usize| -> Rational { (0..n).map(|i| &s.xi[i] * &r13[&[l, i, x, y]]).sum() };
    DenseTensor::from_fn(n, &[Slot::Lower; 3], |ix| {
        let (x, y, z) = (ix[0], ix[1], ix[2]);
        (0..n)
            .map(|l| rxi(l, x, y) * &rho[(l, z)] + &rho[(y, l)] * rxi(l, x, z))
            .sum()
    })
}

pub fn r_xi_action_on_rho(riemann: &Riemann, rho: &Matrix, s: &AlmostContactBMetricStructure) -> PredicateVerdict {
    let t = r_xi_rho_tensor(riemann, rho, s);
    PredicateVerdict::from_indices("r_xi_action", t.first_nonzero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// `x, y` range over `ker η`.
    Local,
    Global,
}

/// `(∇_i Q)^k_j`, indexed `[i, k, j]`.
pub fn nabla_ricci_operator(q: &Matrix, conn: &ConnectionCoefficients) -> DenseTensor {
    covariant_derivative(&DenseTensor::from_matrix(q, [Slot::Upper, Slot::Lower]), conn)
}

/// Decides `φ²(∇_x Q)y = 0`. The witness is `[x, y, component]`.
pub fn ricci_phi_symmetry(nabla_q: &DenseTensor, s: &AlmostContactBMetricStructure, scope: Scope) -> PredicateVerdict {
    let n = s.dim();
    let phi2 = &s.phi * &s.phi;
    let vectors: Vec<Vec<Rational>> = match scope {
        Scope::Global => (0..n).map(|i| s.basis(i)).collect(),
        Scope::Local => s.contact_basis(),
    };
    let apply = |u: &[Rational], w: &[Rational]| -> Vec<Rational> {
        let v: Vec<Rational> = (0..n)
            .map(|k| {
                let mut acc = zero();
                for i in (0..n).filter(|&i| !u[i].is_zero()) {
                    for j in (0..n).filter(|&j| !w[j].is_zero()) {
                        acc += &u[i] * &w[j] * &nabla_q[&[i, k, j]];
                    }
                }
                acc
            })
            .collect();
        phi2.mul_vec(&v)
    };
    let m = vectors.len();
    let mut violation = None;
    'outer: for a in 0..m {
        for b in 0..m {
            if let Some(c) = apply(&vectors[a], &vectors[b]).iter().position(|x| !x.is_zero()) {
                violation = Some(vec![a, b, c]);
                break 'outer;
            }
        }
    }
    let name = match scope {
        Scope::Local => "phi_symmetric_local",
        Scope::Global => "phi_symmetric_global",
    };
    PredicateVerdict::from_indices(name, violation)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceKind {
    /// `(∇_xρ)(y,z) = {α(x)+β(x)}ρ(y,z) + α(y)ρ(x,z) + α(z)ρ(x,y)`
    Pseudo,
    /// `(∇_xρ)(y,z) = 2α(x)ρ(y,z) + α(y)ρ(x,z) + α(z)ρ(x,y)`
    SpecialWeakly,
}

/// Solution set of the 1-form system; unknowns are `α` then (for the pseudo
/// kind) `β`, each as `dim` basis components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSolution {
    pub kind: RecurrenceKind,
    pub dim: usize,
    pub space: AffineSolutionSpace,
}

impl FormSolution {
    pub fn solvable(&self) -> bool {
        self.space.consistent
    }

    /// Some solution has every required form non-vanishing. The solutions on
    /// which one form vanishes are an affine subspace, and finitely many proper
    /// subspaces cannot cover the whole space, so it suffices to test each form.
    pub fn admits_non_vanishing(&self) -> bool {
        let alpha: Vec<usize> = (0..self.dim).collect();
        let beta: Vec<usize> = (self.dim..2 * self.dim).collect();
        match self.kind {
            RecurrenceKind::Pseudo => self.space.admits_nonzero_on(&alpha) && self.space.admits_nonzero_on(&beta),
            RecurrenceKind::SpecialWeakly => self.space.admits_nonzero_on(&alpha),
        }
    }
}

pub fn recurrent_forms_solve(nabla_rho: &DenseTensor, rho: &Matrix, kind: RecurrenceKind) -> Result<PredicateVerdict> {
    if rho.is_zero() {
        return Err(Error::NotApplicable("the Ricci tensor vanishes".into()));
    }
    let n = rho.rows();
    let unknowns = match kind {
        RecurrenceKind::Pseudo => 2 * n,
        RecurrenceKind::SpecialWeakly => n,
    };
    let mut rows = Vec::with_capacity(n * n * n);
    let mut rhs = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut row = vec![zero(); unknowns];
                match kind {
                    RecurrenceKind::Pseudo => {
                        row[x] += &rho[(y, z)];
                        row[n + x] += &rho[(y, z)];
                    }
                    RecurrenceKind::SpecialWeakly => row[x] += int(2) * &rho[(y, z)],
                }
                row[y] += &rho[(x, z)];
                row[z] += &rho[(x, y)];
                rows.push(row);
                rhs.push(nabla_rho[&[x, y, z]].clone());
            }
        }
    }
    let forms = FormSolution {
        kind,
        dim: n,
        space: solve_affine(&Matrix::from_rows(rows), &rhs),
    };
    let name = match kind {
        RecurrenceKind::Pseudo => "almost_pseudo_ricci_symmetric",
        RecurrenceKind::SpecialWeakly => "special_weakly_ricci_symmetric",
    };
    Ok(PredicateVerdict {
        name: name.to_owned(),
        holds: forms.admits_non_vanishing(),
        auxiliary: vec![Check::from_bool(format!("{name}_solvable"), forms.solvable())],
        witness: Some(Witness::Forms(forms)),
        einstein_equivalent: None,
    })
}

/// `R(x,y,z,Qw) − R(Qx,y,z,w) − R(x,Qy,z,w) − R(x,y,Qz,w)` indexed `[x,y,z,w]`.
pub fn q_dot_r_tensor(riemann: &Riemann, q: &Matrix) -> DenseTensor {
    let n = riemann.dim();
    let r = &riemann.riemann_04;
    DenseTensor::from_fn(n, &[Slot::Lower; 4], |ix| {
        let (x, y, z, w) = (ix[0], ix[1], ix[2], ix[3]);
        (0..n)
            .map(|a| {
                &q[(a, w)] * &r[&[x, y, z, a]]
                    - &q[(a, x)] * &r[&[a, y, z, w]]
                    - &q[(a, y)] * &r[&[x, a, z, w]]
                    - &q[(a, z)] * &r[&[x, y, a, w]]
            })
            .sum()
    })
}

/// Decides `Q·R = 0`. The auxiliary check records whether the trace
/// `ρ(Qy,z) + ρ(y,Qz)` vanishes.
pub fn q_dot_r_zero(riemann: &Riemann, q: &Matrix, rho: &Matrix) -> PredicateVerdict {
    let t = q_dot_r_tensor(riemann, q);
    let trace = &(&q.transpose() * rho) + &(rho * q);
    let mut v = PredicateVerdict::from_indices("q_dot_r_zero", t.first_nonzero());
    v.auxiliary.push(Check::from_witness(
        "q_dot_r_trace_residual_zero",
        trace.first_nonzero().map(|(i, j)| vec![i, j]),
    ));
    v
}
