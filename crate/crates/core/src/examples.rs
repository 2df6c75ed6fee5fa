//! Built-in manifold descriptions.

use crate::description::ManifoldDescription;
use crate::ratlin::{format_rational, int, one, zero, Matrix, Rational};

/// Metric `diag(1, 1,…,1, −1,…,−1)`, `φ e_k = e_{k+n}`, `φ e_{k+n} = −e_k`,
/// `ξ = e_0`, `η = e^0` on a `(2n+1)`-dimensional space.
fn standard_structure(n: usize) -> (Matrix, Matrix, Vec<Rational>, Vec<Rational>) {
    let dim = 2 * n + 1;
    let mut diag = vec![one(); dim];
    for d in diag.iter_mut().skip(n + 1) {
        *d = int(-1);
    }
    let metric = Matrix::diagonal(&diag);
    let mut phi = Matrix::zeros(dim, dim);
    for k in 1..=n {
        phi[(k + n, k)] = one();
        phi[(k, k + n)] = int(-1);
    }
    let mut xi = vec![zero(); dim];
    xi[0] = one();
    (metric, phi, xi.clone(), xi)
}

/// The five-dimensional Lie group with
/// `[e0,e1] = p e2 + e3 + q e4`, `[e0,e2] = −p e1 − q e3 + e4`,
/// `[e0,e3] = −e1 − q e2 + p e4`, `[e0,e4] = q e1 − e2 − p e3`,
/// metric `diag(1,1,1,−1,−1)`, `ξ = e0`, `φe1 = e3`, `φe2 = e4`, `φe3 = −e1`, `φe4 = −e2`.
pub fn sasaki5(p: &Rational, q: &Rational) -> ManifoldDescription {
    let o = one;
    let brackets = vec![
        (0, 1, 2, p.clone()),
        (0, 1, 3, o()),
        (0, 1, 4, q.clone()),
        (0, 2, 1, -p),
        (0, 2, 3, -q),
        (0, 2, 4, o()),
        (0, 3, 1, -o()),
        (0, 3, 2, -q),
        (0, 3, 4, p.clone()),
        (0, 4, 1, q.clone()),
        (0, 4, 2, -o()),
        (0, 4, 3, -p),
    ];
    let (metric, phi, xi, eta) = standard_structure(2);
    ManifoldDescription::new(
        format!("sasaki5 p={} q={}", format_rational(p), format_rational(q)),
        5,
        brackets,
        metric,
        phi,
        xi,
        eta,
    )
    .expect("built-in example is well formed")
}

/// Complex skew-symmetric `n×n` matrix, given by its strictly upper entries
/// `(k, l, re, im)` with `k < l` (zero-based within `1..=n`, i.e. `k, l < n`).
pub type ComplexSkew = Vec<(usize, usize, Rational, Rational)>;

/// Sasaki-like family on `R ⋉ R^{2n}`: `ad_{e_0} = φ + A` on `ker η`, where `A`
/// is the real form of a complex skew matrix (so `A` commutes with `φ` and is
/// `g`-skew). Brackets inside `ker η` vanish.
pub fn sasaki_family(n: usize, skew: &ComplexSkew) -> ManifoldDescription {
    let dim = 2 * n + 1;
    let (metric, phi, xi, eta) = standard_structure(n);
    // Complex matrix entries M[k][l] on the "real" basis e_1..e_n.
    let mut re = vec![vec![zero(); n]; n];
    let mut im = vec![vec![zero(); n]; n];
    for (k, l, r, i) in skew {
        assert!(k < l && *l < n, "skew entries need k < l < n");
        re[*k][*l] = r.clone();
        im[*k][*l] = i.clone();
        re[*l][*k] = -r;
        im[*l][*k] = -i;
    }
    // ad_{e0} as a matrix on the full basis.
    let mut ad = Matrix::zeros(dim, dim);
    for l in 0..n {
        let (el, fl) = (l + 1, l + 1 + n);
        // φ part
        ad[(fl, el)] += one();
        ad[(el, fl)] -= one();
        for k in 0..n {
            let (ek, fk) = (k + 1, k + 1 + n);
            // A e_l = Σ_k re_kl e_k + im_kl φe_k;  A φe_l = φ A e_l
            ad[(ek, el)] += &re[k][l];
            ad[(fk, el)] += &im[k][l];
            ad[(fk, fl)] += &re[k][l];
            ad[(ek, fl)] -= &im[k][l];
        }
    }
    let mut brackets = Vec::new();
    for m in 1..dim {
        for k in 0..dim {
            brackets.push((0, m, k, ad[(k, m)].clone()));
        }
    }
    ManifoldDescription::new(
        format!("sasaki family n={n}"),
        dim,
        brackets,
        metric,
        phi,
        xi,
        eta,
    )
    .expect("built-in family is well formed")
}

/// Abelian algebra with the standard structure: flat and cosymplectic.
pub fn abelian_cosymplectic(n: usize) -> ManifoldDescription {
    let (metric, phi, xi, eta) = standard_structure(n);
    ManifoldDescription::new(
        format!("abelian n={n}"),
        2 * n + 1,
        Vec::new(),
        metric,
        phi,
        xi,
        eta,
    )
    .expect("built-in example is well formed")
}
