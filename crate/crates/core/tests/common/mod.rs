#![allow(dead_code)]

use bmetric::examples::sasaki5;
use bmetric::lie::{
    curvature, levi_civita, ricci_data, ConnectionCoefficients, CurvatureData,
};
use bmetric::ratlin::{int, rat, zero, Rational};
use bmetric::structure::{associated_metric, AlmostContactBMetricStructure};

pub fn five(p: Rational, q: Rational) -> AlmostContactBMetricStructure {
    sasaki5(&p, &q).to_structure().unwrap()
}

pub fn grid() -> Vec<(Rational, Rational)> {
    vec![
        (int(0), int(0)),
        (int(1), int(0)),
        (int(0), int(1)),
        (int(2), int(-3)),
        (rat(1, 2), rat(5, 7)),
    ]
}

pub struct Pipeline {
    pub s: AlmostContactBMetricStructure,
    pub conn: ConnectionCoefficients,
    pub curv: CurvatureData,
}

pub fn pipeline(s: AlmostContactBMetricStructure) -> Pipeline {
    let conn = levi_civita(&s.algebra, &s.g);
    let riem = curvature(&s.algebra, &s.g, &conn);
    let gt = associated_metric(&s).unwrap();
    let curv = ricci_data(&s.algebra, riem, &s.g, &s.phi, gt.components()).unwrap();
    Pipeline { s, conn, curv }
}

/// Vector from sparse `(index, value)` pairs.
pub fn vecn(n: usize, entries: &[(usize, Rational)]) -> Vec<Rational> {
    let mut v = vec![zero(); n];
    for (i, x) in entries {
        v[*i] = x.clone();
    }
    v
}

/// The nonzero ∇_{e_i} e_j of the five-dimensional example, written out by
/// hand rather than computed.
pub fn reference_nabla(p: &Rational, q: &Rational) -> Vec<((usize, usize), Vec<Rational>)> {
    let o = || int(1);
    let m = || int(-1);
    let v = |e: &[(usize, Rational)]| vecn(5, e);
    vec![
        ((0, 1), v(&[(2, p.clone()), (4, q.clone())])),
        ((0, 2), v(&[(1, -p), (3, -q)])),
        ((0, 3), v(&[(2, -q), (4, p.clone())])),
        ((0, 4), v(&[(1, q.clone()), (3, -p)])),
        ((1, 0), v(&[(3, m())])),
        ((2, 0), v(&[(4, m())])),
        ((3, 0), v(&[(1, o())])),
        ((4, 0), v(&[(2, o())])),
        ((1, 3), v(&[(0, m())])),
        ((2, 4), v(&[(0, m())])),
        ((3, 1), v(&[(0, m())])),
        ((4, 2), v(&[(0, m())])),
    ]
}

/// Reference nonzero `R_{ijkl}` generators; the full list follows from the
/// antisymmetries `R_{ijkl} = −R_{jikl} = −R_{ijlk}`.
pub fn reference_riemann() -> Vec<([usize; 4], Rational)> {
    let gens: Vec<([usize; 4], i64)> = vec![
        ([0, 1, 1, 0], 1),
        ([0, 2, 2, 0], 1),
        ([1, 2, 3, 4], 1),
        ([1, 4, 3, 2], 1),
        ([2, 3, 4, 1], 1),
        ([3, 4, 1, 2], 1),
        ([1, 3, 3, 1], 1),
        ([2, 4, 4, 2], 1),
        ([0, 3, 3, 0], -1),
        ([0, 4, 4, 0], -1),
    ];
    let mut out: Vec<([usize; 4], Rational)> = Vec::new();
    for ([i, j, k, l], v) in gens {
        for (idx, s) in [
            ([i, j, k, l], v),
            ([j, i, k, l], -v),
            ([i, j, l, k], -v),
            ([j, i, l, k], v),
        ] {
            if let Some(existing) = out.iter().find(|(x, _)| *x == idx) {
                assert_eq!(existing.1, int(s), "inconsistent reference entry");
            } else {
                out.push((idx, int(s)));
            }
        }
    }
    out
}

/// A tensor-level Einstein witness: the five-dimensional example's structure and
/// connection with `ρ` replaced by `2n·g`. It is parallel, so every
/// Ricci-symmetry predicate holds, and it lets the Einstein branches of the
/// soliton and predicate code run on a genuinely Sasaki-like connection.
pub fn einstein_witness(p: Rational, q: Rational) -> (Pipeline, bmetric::ratlin::Matrix) {
    let pl = pipeline(five(p, q));
    let rho = pl.s.gm().scale(&pl.s.two_n());
    (pl, rho)
}
