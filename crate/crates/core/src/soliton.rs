//! Einstein-like fits, Ricci-like solitons and the parallel-tensor analysis on
//! Sasaki-like structures.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{covariant_derivative_02, lie_derivative_metric, ConnectionCoefficients};
use crate::ratlin::{int, nullspace, one, rat, solve_affine, zero, AffineSolutionSpace, DenseTensor, Matrix, Rational, Slot};
use crate::structure::{sasaki_violation, AlmostContactBMetricStructure};
use crate::verdict::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EinsteinClass {
    /// `b = c = 0`
    Einstein,
    /// `b = 0`
    EtaEinstein,
    EinsteinLike,
    None,
}

impl EinsteinClass {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Einstein => "Einstein",
            Self::EtaEinstein => "eta-Einstein",
            Self::EinsteinLike => "Einstein-like",
            Self::None => "none",
        }
    }
}

/// Exact solution set of `ρ = a g + b g̃ + c η⊗η`, unknowns ordered `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EinsteinLikeFit {
    pub space: AffineSolutionSpace,
    pub classification: EinsteinClass,
}

impl EinsteinLikeFit {
    pub fn consistent(&self) -> bool {
        self.space.consistent
    }

    /// `(a, b, c)` when the fit is unique.
    pub fn constants(&self) -> Option<[Rational; 3]> {
        self.space
            .unique()
            .map(|x| [x[0].clone(), x[1].clone(), x[2].clone()])
    }
}

/// Exact solution set of `½ L_v g + ρ + λ g + μ g̃ + ν η⊗η = 0`, unknowns `(λ, μ, ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonFit {
    pub potential: Vec<Rational>,
    pub space: AffineSolutionSpace,
}

impl SolitonFit {
    pub fn consistent(&self) -> bool {
        self.space.consistent
    }

    /// `(λ, μ, ν)` when the fit is unique.
    pub fn constants(&self) -> Option<[Rational; 3]> {
        self.space
            .unique()
            .map(|x| [x[0].clone(), x[1].clone(), x[2].clone()])
    }
}

/// Potential `v = k ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalPotential {
    pub k: Rational,
}

impl VerticalPotential {
    pub fn vector(&self, s: &AlmostContactBMetricStructure) -> Vec<Rational> {
        s.xi.iter().map(|x| x * &self.k).collect()
    }
}

/// Solves `Σ_c coeff_c · basis_c = target` over the independent symmetric components.
fn fit_symmetric(basis: &[&Matrix], target: &Matrix) -> AffineSolutionSpace {
    let n = target.rows();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in i..n {
            rows.push(basis.iter().map(|b| b[(i, j)].clone()).collect());
            rhs.push(target[(i, j)].clone());
        }
    }
    solve_affine(&Matrix::from_rows(rows), &rhs)
}

/// Whether some solution in `space` has the listed coordinates equal to zero.
fn reachable_with_zeros(space: &AffineSolutionSpace, coords: &[usize]) -> bool {
    let Some(p) = &space.particular else {
        return false;
    };
    let k = space.nullspace_basis.len();
    let a = Matrix::from_fn(coords.len(), k, |r, c| space.nullspace_basis[c][coords[r]].clone());
    let b: Vec<Rational> = coords.iter().map(|&c| -p[c].clone()).collect();
    solve_affine(&a, &b).consistent
}

pub fn einstein_like_fit(rho: &Matrix, g: &Matrix, g_tilde: &Matrix, eta: &[Rational]) -> EinsteinLikeFit {
    let ee = Matrix::outer(eta, eta);
    let space = fit_symmetric(&[g, g_tilde, &ee], rho);
    let classification = if !space.consistent {
        EinsteinClass::None
    } else if reachable_with_zeros(&space, &[1, 2]) {
        EinsteinClass::Einstein
    } else if reachable_with_zeros(&space, &[1]) {
        EinsteinClass::EtaEinstein
    } else {
        EinsteinClass::EinsteinLike
    };
    EinsteinLikeFit {
        space,
        classification,
    }
}

/// `a + b + c = 2n`, `τ = 2n(a+1)`, `τ̃ = 2n(b+1)` for a unique fit on a Sasaki-like structure.
pub fn einstein_sasaki_checks(fit: &EinsteinLikeFit, tau: &Rational, tau_tilde: &Rational, n: usize) -> Vec<Check> {
    let Some([a, b, c]) = fit.constants() else {
        return Vec::new();
    };
    let two_n = int(2 * n as i64);
    vec![
        Check::from_bool("einstein_a_plus_b_plus_c_eq_2n", &a + &b + &c == two_n),
        Check::from_bool("einstein_tau_eq_2n_a_plus_1", *tau == &two_n * (&a + one())),
        Check::from_bool("einstein_tau_tilde_eq_2n_b_plus_1", *tau_tilde == &two_n * (&b + one())),
    ]
}

pub fn soliton_fit(
    v: &[Rational],
    s: &AlmostContactBMetricStructure,
    conn: &ConnectionCoefficients,
    rho: &Matrix,
) -> SolitonFit {
    let half_lie = lie_derivative_metric(v, s.gm(), conn).scale(&rat(1, 2));
    let target = -&(&half_lie + rho);
    let gt = s.g_tilde_matrix();
    let ee = s.eta_eta();
    SolitonFit {
        potential: v.to_vec(),
        space: fit_symmetric(&[s.gm(), &gt, &ee], &target),
    }
}

/// For `v = kξ` on a Sasaki-like structure: `λ + μ + ν = −2n` and, against the
/// Einstein-like fit, `a + λ = 0`, `b + μ − k = 0`, `c + ν + k = 0`
/// (for `k = 1` these are the relations between the two triples).
pub fn soliton_sasaki_checks(
    fit: &SolitonFit,
    einstein: &EinsteinLikeFit,
    k: &Rational,
    n: usize,
) -> Vec<Check> {
    let Some([l, m, nu]) = fit.constants() else {
        return Vec::new();
    };
    let two_n = int(2 * n as i64);
    let mut checks = vec![Check::from_bool(
        "soliton_lambda_plus_mu_plus_nu_eq_minus_2n",
        &l + &m + &nu == -two_n,
    )];
    match einstein.constants() {
        Some([a, b, c]) => {
            checks.push(Check::from_bool("soliton_a_plus_lambda_zero", (&a + &l).is_zero()));
            checks.push(Check::from_bool("soliton_b_plus_mu_minus_k_zero", (&b + &m - k).is_zero()));
            checks.push(Check::from_bool("soliton_c_plus_nu_plus_k_zero", (&c + &nu + k).is_zero()));
        }
        None => checks.push(Check::fail("soliton_einstein_fit_available", None)),
    }
    checks
}

/// The scalar expressions of `(λ,μ,ν)` and `(a,b,c)` in terms of `τ`, `τ̃` for a
/// Sasaki-like structure with a `ξ`-potential soliton. When no Einstein-like fit
/// is supplied, `(a,b,c) = (−λ, 1−μ, −1−ν)`.
pub fn corollary_scalar_relations(
    fit: &SolitonFit,
    tau: &Rational,
    tau_tilde: &Rational,
    n: usize,
    einstein: Option<&EinsteinLikeFit>,
) -> Result<Vec<Check>> {
    let [l, m, nu] = fit
        .constants()
        .ok_or_else(|| Error::NotApplicable("soliton fit is not a unique solution".into()))?;
    let [a, b, c] = match einstein.map(EinsteinLikeFit::constants) {
        Some(Some(abc)) => abc,
        Some(None) => {
            return Err(Error::NotApplicable(
                "Einstein-like fit is not a unique solution".into(),
            ))
        }
        None => [-l.clone(), one() - &m, -one() - &nu],
    };
    let two_n = int(2 * n as i64);
    let t = tau / &two_n;
    let tt = tau_tilde / &two_n;
    Ok(vec![
        Check::from_bool("corollary_lambda", l == one() - &t),
        Check::from_bool("corollary_mu", m == int(2) - &tt),
        Check::from_bool("corollary_nu", nu == &t + &tt - &two_n - int(3)),
        Check::from_bool("corollary_a", a == &t - one()),
        Check::from_bool("corollary_b", b == &tt - one()),
        Check::from_bool("corollary_c", c == &two_n + int(2) - &t - &tt),
    ])
}

/// `(∇_xρ)(y,z) = (1−μ){g(φx,φy)η(z) + g(φx,φz)η(y)} + (μ+ν){g(x,φy)η(z) + g(x,φz)η(y)}`.
pub fn nabla_rho_closed_form(fit: &SolitonFit, s: &AlmostContactBMetricStructure) -> Result<DenseTensor> {
    let [_, m, nu] = fit
        .constants()
        .ok_or_else(|| Error::NotApplicable("soliton fit is not a unique solution".into()))?;
    let gpp = s.g_phi_phi();
    let gp = s.g_phi();
    let one_minus_mu = one() - &m;
    let mu_plus_nu = &m + &nu;
    let eta = &s.eta;
    Ok(DenseTensor::from_fn(s.dim(), &[Slot::Lower; 3], |ix| {
        let (x, y, z) = (ix[0], ix[1], ix[2]);
        &one_minus_mu * (&gpp[(x, y)] * &eta[z] + &gpp[(x, z)] * &eta[y])
            + &mu_plus_nu * (&gp[(x, y)] * &eta[z] + &gp[(x, z)] * &eta[y])
    }))
}

/// Coefficients `(c1, c2)` with
/// `(∇_xρ)(y,z) = c1{ρ(x,φy)η(z) + ρ(x,φz)η(y)} + c2{ρ(φx,φy)η(z) + ρ(φx,φz)η(y)}`.
///
/// `c1 = ((1−μ)² + λ(λ+2n)) / (λ² + (1−μ)²)` and `c2 = 2n(1−μ) / (λ² + (1−μ)²)`.
/// The second coefficient comes from inverting
/// `ρ(x,φy) = −λ g(x,φy) + (1−μ) g(φx,φy)`, `ρ(φx,φy) = −λ g(φx,φy) − (1−μ) g(x,φy)`
/// and substituting into the closed form of `∇ρ`.
pub fn recurrence_coefficients(lambda: &Rational, mu: &Rational, n: usize) -> Result<(Rational, Rational)> {
    let m = one() - mu;
    let denom = lambda * lambda + &m * &m;
    if denom.is_zero() {
        return Err(Error::DegenerateCase(
            "(lambda, mu) = (0, 1): the recurrence denominator vanishes".into(),
        ));
    }
    let two_n = int(2 * n as i64);
    let c1 = (&m * &m + lambda * (lambda + &two_n)) / &denom;
    let c2 = &two_n * &m / &denom;
    Ok((c1, c2))
}

/// Right-hand side of the recurrence for given coefficients and Ricci tensor.
pub fn assemble_recurrence(
    c1: &Rational,
    c2: &Rational,
    rho: &Matrix,
    s: &AlmostContactBMetricStructure,
) -> DenseTensor {
    let rp = rho * &s.phi;
    let rpp = rho.congruence(&s.phi);
    let eta = &s.eta;
    DenseTensor::from_fn(s.dim(), &[Slot::Lower; 3], |ix| {
        let (x, y, z) = (ix[0], ix[1], ix[2]);
        c1 * (&rp[(x, y)] * &eta[z] + &rp[(x, z)] * &eta[y])
            + c2 * (&rpp[(x, y)] * &eta[z] + &rpp[(x, z)] * &eta[y])
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalPotentialReport {
    pub k: Rational,
    pub fit: SolitonFit,
    pub einstein: EinsteinLikeFit,
    pub checks: Vec<Check>,
}

/// Solves the soliton equation for `v = kξ` and checks the conclusions that
/// must follow when it is solvable: `μ = k`, `λ + ν = −k − 2n`,
/// `λ + μ + ν = −2n`, `(a,b,c) = (−λ, 0, λ+2n)` and `ρ = −λ g + (λ+2n) η⊗η`.
pub fn vertical_potential_analysis(
    k: &Rational,
    s: &AlmostContactBMetricStructure,
    conn: &ConnectionCoefficients,
    rho: &Matrix,
) -> Result<VerticalPotentialReport> {
    if sasaki_violation(s, conn).is_some() {
        return Err(Error::NotApplicable("structure is not Sasaki-like".into()));
    }
    let pot = VerticalPotential { k: k.clone() };
    let fit = soliton_fit(&pot.vector(s), s, conn, rho);
    let gt = s.g_tilde_matrix();
    let einstein = einstein_like_fit(rho, s.gm(), &gt, &s.eta);
    let two_n = s.two_n();
    let mut checks = Vec::new();
    if let Some([l, m, nu]) = fit.constants() {
        checks.push(Check::from_bool("vertical_mu_eq_k", m == *k));
        checks.push(Check::from_bool(
            "vertical_lambda_plus_nu_eq_minus_k_minus_2n",
            &l + &nu == -k - &two_n,
        ));
        checks.push(Check::from_bool(
            "vertical_lambda_plus_mu_plus_nu_eq_minus_2n",
            &l + &m + &nu == -two_n.clone(),
        ));
        checks.push(Check::from_bool(
            "vertical_eta_einstein_constants",
            einstein.constants() == Some([-l.clone(), zero(), &l + &two_n]),
        ));
        let expected = &s.gm().scale(&-l.clone()) + &s.eta_eta().scale(&(&l + &two_n));
        checks.push(Check::from_bool("vertical_rho_form", *rho == expected));
    }
    Ok(VerticalPotentialReport {
        k: k.clone(),
        fit,
        einstein,
        checks,
    })
}

/// Basis of `{h symmetric : ∇h = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelTensorSpace {
    pub basis: Vec<Matrix>,
}

impl ParallelTensorSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// True when the space is exactly `span{g}`.
    pub fn is_span_of(&self, g: &Matrix) -> bool {
        let [h] = self.basis.as_slice() else {
            return false;
        };
        let Some((i, j)) = g.first_nonzero() else {
            return false;
        };
        let ratio = &h[(i, j)] / &g[(i, j)];
        !ratio.is_zero() && *h == g.scale(&ratio)
    }
}

pub fn parallel_symmetric_space(conn: &ConnectionCoefficients, g: &Matrix) -> ParallelTensorSpace {
    let n = g.rows();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let var = |a: usize, b: usize| {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).expect("pair exists")
    };
    // (∇_i h)_{jk} = −Γ^l_{ij} h_{lk} − Γ^l_{ik} h_{jl}
    let mut rows = Vec::new();
    for i in 0..n {
        for &(j, k) in &pairs {
            let mut row = vec![zero(); pairs.len()];
            for l in 0..n {
                row[var(l, k)] -= conn.gamma(l, i, j);
                row[var(j, l)] -= conn.gamma(l, i, k);
            }
            rows.push(row);
        }
    }
    let basis = nullspace(&Matrix::from_rows(rows))
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |a, b| v[var(a, b)].clone()))
        .collect();
    ParallelTensorSpace { basis }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonTensor {
    /// `h = ½ L_ξ g + ρ + μ g̃ + ν η⊗η`.
    pub h: Matrix,
    pub parallel: bool,
    /// `−h(ξ, ξ)`; the soliton constant when `parallel`.
    pub lambda: Rational,
    pub checks: Vec<Check>,
}

/// Builds `h` and decides whether it is parallel; when it is, checks
/// `h = h(ξ,ξ) g`, `h(ξ,ξ) = 2n + μ + ν` and that `(−h(ξ,ξ), μ, ν)` solves the
/// `ξ`-soliton equation.
pub fn soliton_tensor_h(
    s: &AlmostContactBMetricStructure,
    conn: &ConnectionCoefficients,
    rho: &Matrix,
    mu: &Rational,
    nu: &Rational,
) -> Result<SolitonTensor> {
    if sasaki_violation(s, conn).is_some() {
        return Err(Error::NotApplicable("structure is not Sasaki-like".into()));
    }
    let gt = s.g_tilde_matrix();
    let ee = s.eta_eta();
    let half_lie = lie_derivative_metric(&s.xi, s.gm(), conn).scale(&rat(1, 2));
    let h = &(&(&half_lie + rho) + &gt.scale(mu)) + &ee.scale(nu);
    let reduced = &(rho + &gt.scale(&(mu - one()))) + &ee.scale(&(nu + one()));
    let parallel = covariant_derivative_02(&h, conn).is_zero();
    let h_xi_xi = h.bilinear(&s.xi, &s.xi);
    let lambda = -h_xi_xi.clone();
    let mut checks = vec![Check::from_bool("h_reduced_form", h == reduced)];
    if parallel {
        checks.push(Check::from_bool("h_eq_h_xi_xi_g", h == s.gm().scale(&h_xi_xi)));
        checks.push(Check::from_bool(
            "h_xi_xi_eq_2n_plus_mu_plus_nu",
            h_xi_xi == s.two_n() + mu + nu,
        ));
        let fit = soliton_fit(&s.xi, s, conn, rho);
        checks.push(Check::from_bool(
            "h_parallel_gives_soliton",
            fit.constants() == Some([lambda.clone(), mu.clone(), nu.clone()]),
        ));
    }
    Ok(SolitonTensor {
        h,
        parallel,
        lambda,
        checks,
    })
}
