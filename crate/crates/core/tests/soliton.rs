mod common;

use bmetric::error::Error;
use bmetric::examples::abelian_cosymplectic;
use bmetric::lie::{covariant_derivative_02, levi_civita, lie_derivative_metric, scalar_from_ricci, MetricTensor};
use bmetric::ratlin::{int, rank, rat, Matrix, Rational};
use bmetric::soliton::*;
use bmetric::structure::AlmostContactBMetricStructure;
use common::{einstein_witness, five, grid, pipeline};

/// `½ L_v g + ρ + λ g + μ g̃ + ν η⊗η`, evaluated directly.
fn soliton_residual(
    s: &AlmostContactBMetricStructure,
    conn: &bmetric::lie::ConnectionCoefficients,
    v: &[Rational],
    rho: &Matrix,
    [l, m, nu]: [Rational; 3],
) -> Matrix {
    let lie = lie_derivative_metric(v, s.gm(), conn).scale(&rat(1, 2));
    &(&(&(&lie + rho) + &s.gm().scale(&l)) + &s.g_tilde_matrix().scale(&m)) + &s.eta_eta().scale(&nu)
}

/// `g`, `g̃`, `η⊗η` are linearly independent as symmetric tensors, so a
/// triple with zero residual is the unique solution.
fn basis_independent(s: &AlmostContactBMetricStructure) -> bool {
    let n = s.dim();
    let gt = s.g_tilde_matrix();
    let ee = s.eta_eta();
    let rows = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| vec![s.gm()[(i, j)].clone(), gt[(i, j)].clone(), ee[(i, j)].clone()])
        .collect();
    rank(&Matrix::from_rows(rows)) == 3
}

#[test]
fn vertical_potential_constants_solve_the_soliton_equation() {
    for (p, q) in grid() {
        let pl = pipeline(five(p, q));
        assert!(basis_independent(&pl.s));
        for k in [int(0), int(1), int(2), int(-3), rat(2, 5)] {
            let v: Vec<Rational> = pl.s.xi.iter().map(|x| x * &k).collect();
            let fit = soliton_fit(&v, &pl.s, &pl.conn, &pl.curv.ricci);
            // Oracle: ρ = 4η⊗η and ½L_{kξ}g = k(η⊗η − g̃) give (0, k, −k−4).
            let expected = [int(0), k.clone(), -&k - int(4)];
            assert!(soliton_residual(&pl.s, &pl.conn, &v, &pl.curv.ricci, expected.clone()).is_zero());
            assert_eq!(fit.constants(), Some(expected));
        }
    }
}

#[test]
fn vertical_analysis_checks_hold_on_the_example() {
    let pl = pipeline(five(int(1), int(-2)));
    for k in [int(0), int(1), int(2), rat(-7, 3)] {
        let rep = vertical_potential_analysis(&k, &pl.s, &pl.conn, &pl.curv.ricci).unwrap();
        assert_eq!(rep.checks.len(), 5);
        assert!(rep.checks.iter().all(|c| c.passed), "{:?}", rep.checks);
        assert_eq!(rep.einstein.classification, EinsteinClass::EtaEinstein);
        assert_eq!(rep.einstein.constants(), Some([int(0), int(0), int(4)]));
    }
}

#[test]
fn vertical_analysis_needs_sasaki_like() {
    let s = abelian_cosymplectic(2).to_structure().unwrap();
    let conn = levi_civita(&s.algebra, &s.g);
    let rho = Matrix::zeros(5, 5);
    assert!(matches!(
        vertical_potential_analysis(&int(1), &s, &conn, &rho),
        Err(Error::NotApplicable(_))
    ));
    assert!(matches!(
        soliton_tensor_h(&s, &conn, &rho, &int(1), &int(-1)),
        Err(Error::NotApplicable(_))
    ));
}

#[test]
fn einstein_like_classification() {
    let pl = pipeline(five(int(0), int(0)));
    let gm = pl.s.gm().clone();
    let gt = pl.s.g_tilde_matrix();
    let ee = pl.s.eta_eta();
    let fit = |rho: &Matrix| einstein_like_fit(rho, &gm, &gt, &pl.s.eta);

    let e = fit(&gm.scale(&int(3)));
    assert_eq!(e.classification, EinsteinClass::Einstein);
    assert_eq!(e.constants(), Some([int(3), int(0), int(0)]));

    let e = fit(&pl.curv.ricci);
    assert_eq!(e.classification, EinsteinClass::EtaEinstein);

    let e = fit(&(&gt + &ee.scale(&int(2))));
    assert_eq!(e.classification, EinsteinClass::EinsteinLike);
    assert_eq!(e.constants(), Some([int(0), int(1), int(2)]));

    let mut odd = Matrix::zeros(5, 5);
    odd[(1, 1)] = int(1);
    let e = fit(&odd);
    assert!(!e.consistent());
    assert_eq!(e.classification, EinsteinClass::None);
    assert_eq!(e.constants(), None);
}

#[test]
fn einstein_sasaki_relations() {
    let pl = pipeline(five(int(2), int(-3)));
    let e = einstein_like_fit(&pl.curv.ricci, pl.s.gm(), &pl.s.g_tilde_matrix(), &pl.s.eta);
    let checks = einstein_sasaki_checks(&e, &pl.curv.tau, &pl.curv.tau_tilde, 2);
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|c| c.passed));
}

#[test]
fn xi_soliton_relations_and_scalar_expressions() {
    for (p, q) in grid() {
        let pl = pipeline(five(p, q));
        let fit = soliton_fit(&pl.s.xi, &pl.s, &pl.conn, &pl.curv.ricci);
        assert_eq!(fit.constants(), Some([int(0), int(1), int(-5)]));
        let e = einstein_like_fit(&pl.curv.ricci, pl.s.gm(), &pl.s.g_tilde_matrix(), &pl.s.eta);
        let checks = soliton_sasaki_checks(&fit, &e, &int(1), 2);
        assert_eq!(checks.len(), 4);
        assert!(checks.iter().all(|c| c.passed));
        for with in [None, Some(&e)] {
            let cor = corollary_scalar_relations(&fit, &pl.curv.tau, &pl.curv.tau_tilde, 2, with).unwrap();
            assert!(cor.iter().all(|c| c.passed), "{cor:?}");
        }
    }
}

#[test]
fn einstein_witness_soliton() {
    let (pl, rho) = einstein_witness(rat(1, 3), int(2));
    let gt = MetricTensor::new(pl.s.g_tilde_matrix()).unwrap();
    let tau = scalar_from_ricci(&rho, &pl.s.g);
    let tau_tilde = scalar_from_ricci(&rho, &gt);
    assert_eq!(tau, int(20));
    assert_eq!(tau_tilde, int(4));
    let e = einstein_like_fit(&rho, pl.s.gm(), gt.components(), &pl.s.eta);
    assert_eq!(e.classification, EinsteinClass::Einstein);
    let fit = soliton_fit(&pl.s.xi, &pl.s, &pl.conn, &rho);
    let expected = [int(-4), int(1), int(-1)];
    assert!(soliton_residual(&pl.s, &pl.conn, &pl.s.xi, &rho, expected.clone()).is_zero());
    assert_eq!(fit.constants(), Some(expected));
    assert!(soliton_sasaki_checks(&fit, &e, &int(1), 2).iter().all(|c| c.passed));
    let cor = corollary_scalar_relations(&fit, &tau, &tau_tilde, 2, Some(&e)).unwrap();
    assert!(cor.iter().all(|c| c.passed));
}

#[test]
fn corollary_needs_a_unique_fit() {
    let pl = pipeline(five(int(0), int(0)));
    let mut rho = pl.curv.ricci.clone();
    rho[(1, 1)] = int(7);
    let fit = soliton_fit(&pl.s.xi, &pl.s, &pl.conn, &rho);
    assert!(!fit.consistent());
    assert!(matches!(
        corollary_scalar_relations(&fit, &int(0), &int(0), 2, None),
        Err(Error::NotApplicable(_))
    ));
    assert!(matches!(nabla_rho_closed_form(&fit, &pl.s), Err(Error::NotApplicable(_))));
}

/// `ρ = −λg + (1−μ)g̃ − (1+ν)η⊗η` with `λ + μ + ν = −2n`: the Ricci tensor a
/// `ξ`-soliton with constants `(λ, μ, ν)` would have.
fn soliton_rho(s: &AlmostContactBMetricStructure, l: &Rational, m: &Rational) -> (Matrix, Rational) {
    let nu = -s.two_n() - l - m;
    let rho = &(&s.gm().scale(&-l.clone()) + &s.g_tilde_matrix().scale(&(int(1) - m)))
        + &s.eta_eta().scale(&-(int(1) + &nu));
    (rho, nu)
}

fn lm_grid() -> Vec<(Rational, Rational)> {
    vec![
        (int(1), int(0)),
        (int(0), int(0)),
        (int(0), int(2)),
        (int(-4), int(1)),
        (rat(3, 2), rat(-1, 3)),
        (int(2), int(5)),
    ]
}

#[test]
fn closed_form_of_nabla_rho() {
    for (p, q) in grid() {
        let pl = pipeline(five(p, q));
        for (l, m) in lm_grid() {
            let (rho, nu) = soliton_rho(&pl.s, &l, &m);
            let fit = soliton_fit(&pl.s.xi, &pl.s, &pl.conn, &rho);
            assert_eq!(fit.constants(), Some([l.clone(), m.clone(), nu]));
            let direct = covariant_derivative_02(&rho, &pl.conn);
            assert_eq!(nabla_rho_closed_form(&fit, &pl.s).unwrap(), direct);
        }
    }
}

#[test]
fn recurrence_reproduces_nabla_rho() {
    for (p, q) in grid() {
        let pl = pipeline(five(p, q));
        for (l, m) in lm_grid() {
            let (rho, _) = soliton_rho(&pl.s, &l, &m);
            let (c1, c2) = recurrence_coefficients(&l, &m, 2).unwrap();
            let direct = covariant_derivative_02(&rho, &pl.conn);
            assert_eq!(assemble_recurrence(&c1, &c2, &rho, &pl.s), direct, "λ={l} μ={m}");
        }
    }
}

#[test]
fn recurrence_coefficient_values() {
    assert_eq!(recurrence_coefficients(&int(1), &int(0), 2).unwrap(), (int(3), int(2)));
    assert_eq!(recurrence_coefficients(&int(0), &int(0), 2).unwrap(), (int(1), int(4)));
    assert_eq!(recurrence_coefficients(&int(0), &int(2), 1).unwrap(), (int(1), int(-2)));
    assert!(matches!(
        recurrence_coefficients(&int(0), &int(1), 2),
        Err(Error::DegenerateCase(_))
    ));
}

#[test]
fn opposite_sign_second_coefficient_fails_to_reproduce() {
    let pl = pipeline(five(int(0), int(0)));
    let (l, m) = (int(1), int(0));
    let (rho, _) = soliton_rho(&pl.s, &l, &m);
    let direct = covariant_derivative_02(&rho, &pl.conn);
    let d = &l * &l + (int(1) - &m) * (int(1) - &m);
    let (c1, _) = recurrence_coefficients(&l, &m, 2).unwrap();
    let alt = -int(2) * (&l + int(2)) * (int(1) - &m) / d;
    assert_eq!(alt, int(-3));
    assert_ne!(assemble_recurrence(&c1, &alt, &rho, &pl.s), direct);
}

#[test]
fn parallel_symmetric_tensors() {
    for (p, q) in grid() {
        let pl = pipeline(five(p, q));
        let space = parallel_symmetric_space(&pl.conn, pl.s.gm());
        assert_eq!(space.dimension(), 1);
        assert!(space.is_span_of(pl.s.gm()));
        assert!(covariant_derivative_02(&space.basis[0], &pl.conn).is_zero());
    }
    let s = abelian_cosymplectic(1).to_structure().unwrap();
    let conn = levi_civita(&s.algebra, &s.g);
    let space = parallel_symmetric_space(&conn, s.gm());
    assert_eq!(space.dimension(), 6);
    assert!(!space.is_span_of(s.gm()));
}

#[test]
fn soliton_tensor_on_example_and_witness() {
    let pl = pipeline(five(int(1), int(1)));
    let t = soliton_tensor_h(&pl.s, &pl.conn, &pl.curv.ricci, &int(1), &int(-4)).unwrap();
    assert_eq!(t.h, pl.s.eta_eta());
    assert!(!t.parallel);
    assert!(t.checks.iter().all(|c| c.passed));

    let (pl, rho) = einstein_witness(int(0), int(1));
    let t = soliton_tensor_h(&pl.s, &pl.conn, &rho, &int(1), &int(-1)).unwrap();
    assert!(t.parallel);
    assert_eq!(t.h, pl.s.gm().scale(&int(4)));
    assert_eq!(t.lambda, int(-4));
    assert_eq!(t.checks.len(), 4);
    assert!(t.checks.iter().all(|c| c.passed));

    let t = soliton_tensor_h(&pl.s, &pl.conn, &rho, &int(2), &int(-1)).unwrap();
    assert!(!t.parallel);
}

#[test]
fn einstein_constants_give_zero_recurrence() {
    for n in 1..4 {
        let two_n = int(2 * n as i64);
        assert_eq!(recurrence_coefficients(&-two_n, &int(1), n).unwrap(), (int(0), int(0)));
    }
}

#[test]
fn closed_form_vanishing_patterns() {
    let pl = pipeline(five(int(2), int(-3)));
    let (rho, _) = soliton_rho(&pl.s, &int(-4), &int(1));
    let fit = soliton_fit(&pl.s.xi, &pl.s, &pl.conn, &rho);
    assert_eq!(fit.constants(), Some([int(-4), int(1), int(-1)]));
    assert!(nabla_rho_closed_form(&fit, &pl.s).unwrap().is_zero());

    let fit = soliton_fit(&pl.s.xi, &pl.s, &pl.conn, &pl.curv.ricci);
    let t = nabla_rho_closed_form(&fit, &pl.s).unwrap();
    assert_eq!(t[&[1, 3, 0]], int(4));
    let phi_cols: Vec<Vec<Rational>> = (0..5).map(|j| pl.s.phi.column(j)).collect();
    for x in 0..5 {
        for y in 0..5 {
            for z in 0..5 {
                let mut along_phi = int(0);
                for (a, pa) in phi_cols[y].iter().enumerate() {
                    for (b, pb) in phi_cols[z].iter().enumerate() {
                        along_phi += pa * pb * &t[&[x, a, b]];
                    }
                }
                assert_eq!(along_phi, int(0));
                let along_xi: Rational = (0..5).map(|i| &pl.s.xi[i] * &t[&[i, y, z]]).sum();
                assert_eq!(along_xi, int(0));
            }
        }
    }
}

#[test]
fn corollary_detects_mismatched_scalars() {
    let pl = pipeline(five(int(0), int(1)));
    let fit = soliton_fit(&pl.s.xi, &pl.s, &pl.conn, &pl.curv.ricci);
    let cor = corollary_scalar_relations(&fit, &int(5), &pl.curv.tau_tilde, 2, None).unwrap();
    assert!(!cor.iter().all(|c| c.passed));
}

#[test]
fn zero_potential_is_a_plain_affine_solve() {
    let pl = pipeline(five(int(0), int(0)));
    let rep = vertical_potential_analysis(&int(0), &pl.s, &pl.conn, &pl.curv.ricci).unwrap();
    assert_eq!(rep.fit.constants(), Some([int(0), int(0), int(-4)]));
    assert!(rep.checks.iter().all(|c| c.passed));
    let (pl, rho) = einstein_witness(int(0), int(0));
    let rep = vertical_potential_analysis(&int(1), &pl.s, &pl.conn, &rho).unwrap();
    assert_eq!(rep.fit.constants(), Some([int(-4), int(1), int(-1)]));
    assert!(rep.checks.iter().all(|c| c.passed));
}
