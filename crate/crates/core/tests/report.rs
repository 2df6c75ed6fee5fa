mod common;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use bmetric::description::parse_manifold;
use bmetric::examples::{abelian_cosymplectic, sasaki5, sasaki_family};
use bmetric::ratlin::{int, parse_rational, rat, Rational};
use bmetric::report::{run_analysis, AnalysisOptions, Potential};
use common::grid;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against the stored file; `UPDATE_GOLDEN=1` rewrites it.
fn assert_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn parse_machine(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .map(|l| {
            let (k, v) = l.split_once('=').expect("key=value");
            (k.to_owned(), v.to_owned())
        })
        .collect()
}

fn r(m: &BTreeMap<String, String>, key: &str) -> Rational {
    parse_rational(m.get(key).unwrap_or_else(|| panic!("missing {key}"))).unwrap()
}

#[test]
fn example_report_values() {
    for (p, q) in grid() {
        let rep = run_analysis(&sasaki5(&p, &q), &AnalysisOptions::default()).unwrap();
        assert!(rep.all_checks_passed());
        let m = rep.machine_map();
        assert_eq!(m["sasaki_like"], "true");
        assert_eq!(m["cosymplectic"], "false");
        assert_eq!(m["einstein.class"], "eta-Einstein");
        assert_eq!((r(&m, "einstein.a"), r(&m, "einstein.b"), r(&m, "einstein.c")), (int(0), int(0), int(4)));
        assert_eq!(
            (r(&m, "soliton.0.lambda"), r(&m, "soliton.0.mu"), r(&m, "soliton.0.nu")),
            (int(0), int(1), int(-5))
        );
        assert_eq!(m["predicate.eta_parallel"], "true");
        assert_eq!(m["predicate.parallel_along_xi"], "true");
        assert_eq!(m["recurrence"], "degenerate");
        assert_eq!(m["summary.failed"], "0");
    }
}

#[test]
fn printed_values_rederive_the_asserted_identities() {
    let desc = sasaki5(&rat(1, 2), &int(-3));
    let opts = AnalysisOptions {
        potentials: vec![Potential::Vertical(int(1)), Potential::Vertical(rat(3, 2))],
    };
    let m = parse_machine(&run_analysis(&desc, &opts).unwrap().machine());
    let two_n = int(4);
    let (a, b, c) = (r(&m, "einstein.a"), r(&m, "einstein.b"), r(&m, "einstein.c"));
    let (tau, tt) = (r(&m, "curvature.tau"), r(&m, "curvature.tau_tilde"));
    assert_eq!(&a + &b + &c, two_n);
    assert_eq!(tau, &two_n * (&a + int(1)));
    assert_eq!(tt, &two_n * (&b + int(1)));
    for idx in 0..2 {
        let k = r(&m, &format!("soliton.{idx}.k"));
        let l = r(&m, &format!("soliton.{idx}.lambda"));
        let mu = r(&m, &format!("soliton.{idx}.mu"));
        let nu = r(&m, &format!("soliton.{idx}.nu"));
        assert_eq!(&l + &mu + &nu, -two_n.clone());
        assert_eq!(mu, k);
        assert_eq!(&a + &l, int(0));
        assert_eq!(&b + &mu - &k, int(0));
        assert_eq!(&c + &nu + &k, int(0));
        assert_eq!(m[&format!("soliton.{idx}.check.soliton_a_plus_lambda_zero")], "pass");
    }
    assert_eq!(r(&m, "curvature.tau_star"), int(0));
    assert_eq!(m["check.tau_tilde_eq_minus_tau_star_plus_2n"], "pass");
    assert_eq!(r(&m, "nabla_rho.1.3.0"), int(4));
}

#[test]
fn abelian_report() {
    let rep = run_analysis(&abelian_cosymplectic(2), &AnalysisOptions::default()).unwrap();
    assert!(rep.all_checks_passed());
    let a = rep.analysis.as_ref().unwrap();
    assert!(a.cosymplectic);
    assert!(!a.sasaki.holds);
    assert_eq!(a.not_applicable.len(), 2);
    let m = rep.machine_map();
    assert_eq!(m["einstein.class"], "Einstein");
    assert_eq!(m["soliton.0.check.killing_potential_reduces_to_einstein_fit"], "pass");
    assert_eq!(m["predicate.almost_pseudo_ricci_symmetric"], "not_applicable");
    assert_eq!(m["predicate.q_dot_r_zero"], "true");
    assert_eq!(m["parallel_tensors.dimension"], "15");
    for key in ["soliton.0.lambda", "soliton.0.mu", "soliton.0.nu"] {
        assert_eq!(r(&m, key), int(0));
    }
}

#[test]
fn corrupted_phi_skips_downstream() {
    let mut desc = sasaki5(&int(1), &int(1));
    desc.phi[(3, 1)] = int(0);
    desc.phi[(4, 1)] = int(1);
    let rep = run_analysis(&desc, &AnalysisOptions::default()).unwrap();
    assert!(rep.analysis.is_none());
    assert!(!rep.all_checks_passed());
    let failed: Vec<&str> = rep.structure.failures().map(|c| c.name.as_str()).collect();
    assert!(failed.contains(&"phi_squared"), "{failed:?}");
    let m = rep.machine_map();
    assert_eq!(m["analysis"], "skipped");
    assert!(!m.contains_key("sasaki_like"));
    assert!(rep.text().contains("skipped"));
}

#[test]
fn non_vertical_potential_is_flagged() {
    let opts = AnalysisOptions {
        potentials: vec![
            Potential::Vector(vec![int(1), int(0), int(0), int(1), int(0)]),
            Potential::Vector(vec![int(3), int(0), int(0), int(0), int(0)]),
        ],
    };
    let rep = run_analysis(&sasaki5(&int(0), &int(0)), &opts).unwrap();
    let m = rep.machine_map();
    assert_eq!(m["soliton.0.vertical"], "false");
    assert!(!m.contains_key("soliton.0.k"));
    assert!(!m.keys().any(|k| k.starts_with("soliton.0.check.")));
    assert_eq!(m["soliton.1.vertical"], "true");
    assert_eq!(r(&m, "soliton.1.k"), int(3));
    let bad = AnalysisOptions {
        potentials: vec![Potential::Vector(vec![int(1)])],
    };
    assert!(run_analysis(&sasaki5(&int(0), &int(0)), &bad).is_err());
}

#[test]
fn family_members_in_dimensions_three_and_seven() {
    let d3 = sasaki_family(1, &Vec::new());
    let d7 = sasaki_family(3, &vec![(0, 1, int(1), int(2)), (1, 2, rat(-1, 2), int(0))]);
    for desc in [d3, d7] {
        let rep = run_analysis(&desc, &AnalysisOptions::default()).unwrap();
        assert!(rep.all_checks_passed(), "{}", rep.text());
        let m = rep.machine_map();
        assert_eq!(m["sasaki_like"], "true");
        assert_eq!(m["einstein.class"], "eta-Einstein");
    }
}

#[test]
fn machine_output_is_deterministic() {
    let desc = sasaki5(&rat(1, 2), &rat(5, 7));
    let opts = AnalysisOptions {
        potentials: vec![Potential::Vertical(int(2)), Potential::Vertical(int(-1))],
    };
    let a = run_analysis(&desc, &opts).unwrap().machine();
    let b = run_analysis(&desc.clone(), &opts.clone()).unwrap().machine();
    assert_eq!(a, b);
    let keys: Vec<&str> = a.lines().map(|l| l.split_once('=').unwrap().0).collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted);
}

#[test]
fn golden_machine_reports() {
    for (desc_file, out_file) in [
        ("sasaki5_half_minus3.desc", "sasaki5_half_minus3.machine"),
        ("abelian3.desc", "abelian3.machine"),
    ] {
        let text = fs::read_to_string(golden(desc_file)).unwrap();
        let desc = parse_manifold(&text).unwrap();
        let rep = run_analysis(&desc, &AnalysisOptions::default()).unwrap();
        assert_golden(out_file, &rep.machine());
    }
}
