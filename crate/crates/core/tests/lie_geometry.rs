mod common;

use bmetric::examples::{abelian_cosymplectic, sasaki_family};
use bmetric::lie::{
    covariant_derivative, covariant_derivative_02, curvature, levi_civita, lie_derivative_metric,
    MetricTensor,
};
use bmetric::ratlin::{int, rat, zero, DenseTensor, Matrix, Rational, Slot};
use common::*;
use num_traits::Zero;

#[test]
fn jacobi_holds_across_the_family() {
    for (p, q) in grid() {
        assert!(five(p, q).algebra.check_jacobi().holds());
    }
}

#[test]
fn connection_matches_reference_table() {
    for (p, q) in grid() {
        let s = five(p.clone(), q.clone());
        let conn = levi_civita(&s.algebra, &s.g);
        let table = reference_nabla(&p, &q);
        for i in 0..5 {
            for j in 0..5 {
                let expected = table
                    .iter()
                    .find(|(ij, _)| *ij == (i, j))
                    .map(|(_, v)| v.clone())
                    .unwrap_or_else(|| vec![zero(); 5]);
                assert_eq!(conn.nabla(i, &s.basis(j)), expected, "∇_e{i} e{j} at p={p} q={q}");
            }
        }
        assert_eq!(conn.torsion_violation(&s.algebra), None);
    }
}

#[test]
fn nabla_e0_row_vanishes_when_p_and_q_do() {
    let s = five(int(0), int(0));
    let conn = levi_civita(&s.algebra, &s.g);
    for i in 0..5 {
        assert!(conn.nabla(0, &s.basis(i)).iter().all(Zero::is_zero));
    }
    assert_eq!(conn.nabla(1, &s.basis(0)), vecn(5, &[(3, int(-1))]));
}

#[test]
fn abelian_connection_and_curvature_vanish() {
    let s = abelian_cosymplectic(2).to_structure().unwrap();
    let conn = levi_civita(&s.algebra, &s.g);
    assert!(conn.tensor().is_zero());
    assert!(curvature(&s.algebra, &s.g, &conn).riemann_04.is_zero());
}

#[test]
fn curvature_matches_reference_components() {
    for (p, q) in grid() {
        let pl = pipeline(five(p, q));
        let r = &pl.curv.riemann.riemann_04;
        let reference = reference_riemann();
        for (idx, v) in r.indexed() {
            let expected = reference
                .iter()
                .find(|(i, _)| i[..] == idx[..])
                .map(|(_, v)| v.clone())
                .unwrap_or_else(zero);
            assert_eq!(*v, expected, "R{idx:?}");
        }
        assert_eq!(pl.curv.riemann.symmetry_violation(), None);
    }
}

#[test]
fn curvature_on_reeb_field() {
    let pl = pipeline(five(rat(1, 2), int(-3)));
    let s = &pl.s;
    for i in 0..5 {
        for j in 0..5 {
            let (x, y) = (s.basis(i), s.basis(j));
            let lhs = pl.curv.riemann.apply(&x, &y, &s.xi);
            let rhs: Vec<Rational> = (0..5)
                .map(|l| s.eta_of(&y) * &x[l] - s.eta_of(&x) * &y[l])
                .collect();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn ricci_and_scalars() {
    for (p, q) in grid() {
        let pl = pipeline(five(p, q));
        let mut rho = Matrix::zeros(5, 5);
        rho[(0, 0)] = int(4);
        assert_eq!(pl.curv.ricci, rho);
        assert_eq!(pl.curv.tau, int(4));
        assert_eq!(pl.curv.tau_tilde, int(4));
        assert_eq!(pl.curv.tau_star, int(0));
        // g(Qx, y) = ρ(x, y)
        let gq = pl.s.gm() * &pl.curv.ricci_operator;
        assert_eq!(gq.transpose(), pl.curv.ricci);
    }
}

#[test]
fn nabla_rho_components() {
    let pl = pipeline(five(int(2), int(-3)));
    let d = covariant_derivative_02(&pl.curv.ricci, &pl.conn);
    let mut expected = DenseTensor::zeros(5, &[Slot::Lower; 3]);
    for (i, j) in [(1, 3), (2, 4), (3, 1), (4, 2)] {
        expected[&[i, j, 0]] = int(4);
        expected[&[i, 0, j]] = int(4);
    }
    assert_eq!(d, expected);
}

#[test]
fn nabla_metric_vanishes() {
    for desc in [sasaki_family(1, &vec![]), sasaki_family(3, &vec![(0, 2, int(1), rat(1, 2))])] {
        let s = desc.to_structure().unwrap();
        let conn = levi_civita(&s.algebra, &s.g);
        assert!(covariant_derivative_02(s.gm(), &conn).is_zero());
    }
}

#[test]
fn nabla_eta_eta_by_direct_expansion() {
    // Oracle: (∇_i(η⊗η))_{jk} = (∇_iη)_j η_k + η_j (∇_iη)_k, with
    // (∇_iη)_j = −η(∇_{e_i} e_j) expanded from the reference ∇ table.
    let (p, q) = (rat(1, 2), rat(5, 7));
    let s = five(p.clone(), q.clone());
    let conn = levi_civita(&s.algebra, &s.g);
    let table = reference_nabla(&p, &q);
    let nabla_eta = |i: usize, j: usize| -> Rational {
        table
            .iter()
            .find(|(ij, _)| *ij == (i, j))
            .map(|(_, v)| -v[0].clone())
            .unwrap_or_else(zero)
    };
    let eta = &s.eta;
    let oracle = DenseTensor::from_fn(5, &[Slot::Lower; 3], |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        nabla_eta(i, j) * &eta[k] + &eta[j] * nabla_eta(i, k)
    });
    let ee = DenseTensor::from_matrix(&s.eta_eta(), [Slot::Lower, Slot::Lower]);
    let d = covariant_derivative(&ee, &conn);
    assert_eq!(d, oracle);
    assert_eq!(d[&[1, 3, 0]], int(1));
}

#[test]
fn lie_derivative_along_reeb() {
    let s = five(int(1), int(0));
    let conn = levi_civita(&s.algebra, &s.g);
    let l = lie_derivative_metric(&s.xi, s.gm(), &conn);
    let mut expected = Matrix::zeros(5, 5);
    for (i, j) in [(1, 3), (2, 4), (3, 1), (4, 2)] {
        expected[(i, j)] = int(2);
    }
    assert_eq!(l, expected);
    assert!(lie_derivative_metric(&vec![zero(); 5], s.gm(), &conn).is_zero());
    let two_xi: Vec<Rational> = s.xi.iter().map(|v| v * int(2)).collect();
    assert_eq!(
        lie_derivative_metric(&two_xi, s.gm(), &conn),
        expected.scale(&int(2))
    );
}

#[test]
fn singular_metric_is_rejected() {
    assert!(MetricTensor::new(Matrix::diagonal(&[int(1), int(0), int(1)])).is_err());
}
