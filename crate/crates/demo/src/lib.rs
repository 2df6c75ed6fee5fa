//! WebAssembly bindings for the static page in `www/`.
//!
//! Each exported function has a plain Rust counterpart returning
//! `Result<String, String>` so the logic is testable natively.

use wasm_bindgen::prelude::*;

use bmetric::description::parse_manifold;
use bmetric::examples::sasaki5;
use bmetric::ratlin::{format_rational, parse_rational, Rational};
use bmetric::report::{run_analysis, AnalysisOptions, Potential};

fn rational(field: &str, s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).map_err(|e| format!("{field}: {e}"))
}

/// Vertical potentials from a comma- or space-separated list of `k` values;
/// empty input means `k = 1`.
fn potentials(list: &str) -> Result<AnalysisOptions, String> {
    let ks: Vec<Potential> = list
        .split([',', ' '])
        .filter(|t| !t.trim().is_empty())
        .map(|t| rational("k", t).map(Potential::Vertical))
        .collect::<Result<_, _>>()?;
    Ok(if ks.is_empty() {
        AnalysisOptions::default()
    } else {
        AnalysisOptions { potentials: ks }
    })
}

pub fn sasaki5_report(p: &str, q: &str, ks: &str, machine: bool) -> Result<String, String> {
    let desc = sasaki5(&rational("p", p)?, &rational("q", q)?);
    let rep = run_analysis(&desc, &potentials(ks)?).map_err(|e| e.to_string())?;
    Ok(if machine { rep.machine() } else { rep.text() })
}

pub fn description_report(text: &str, ks: &str) -> Result<String, String> {
    let desc = parse_manifold(text).map_err(|e| e.to_string())?;
    let rep = run_analysis(&desc, &potentials(ks)?).map_err(|e| e.to_string())?;
    Ok(rep.text())
}

/// One line per potential: `k λ μ ν`, or `k none` when no soliton exists.
pub fn soliton_table(p: &str, q: &str, ks: &str) -> Result<String, String> {
    let desc = sasaki5(&rational("p", p)?, &rational("q", q)?);
    let rep = run_analysis(&desc, &potentials(ks)?).map_err(|e| e.to_string())?;
    let analysis = rep.analysis.ok_or("structure invalid")?;
    let mut out = String::new();
    for sec in &analysis.solitons {
        let k = sec.vertical_k.as_ref().map_or("-".to_owned(), format_rational);
        let row = match sec.fit.constants() {
            Some([l, m, n]) => format!("{k} {} {} {}", format_rational(&l), format_rational(&m), format_rational(&n)),
            None => format!("{k} none"),
        };
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

#[wasm_bindgen(js_name = analyzeSasaki5)]
pub fn analyze_sasaki5(p: &str, q: &str, ks: &str, machine: bool) -> Result<String, JsValue> {
    sasaki5_report(p, q, ks, machine).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = analyzeDescription)]
pub fn analyze_description(text: &str, ks: &str) -> Result<String, JsValue> {
    description_report(text, ks).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = solitonTable)]
pub fn soliton_table_js(p: &str, q: &str, ks: &str) -> Result<String, JsValue> {
    soliton_table(p, q, ks).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_for_the_example() {
        let text = sasaki5_report("1/2", "-3", "", false).unwrap();
        assert!(text.contains("(lambda, mu, nu) = (0, 1, -5)"));
        let machine = sasaki5_report("0", "0", "2", true).unwrap();
        assert!(machine.lines().any(|l| l == "soliton.0.mu=2"));
    }

    #[test]
    fn soliton_rows() {
        assert_eq!(soliton_table("1", "1", "1, 2 -1").unwrap(), "1 0 1 -5\n2 0 2 -6\n-1 0 -1 -3\n");
    }

    #[test]
    fn bad_input_is_reported() {
        assert!(sasaki5_report("1/0", "0", "", false).unwrap_err().starts_with("p:"));
        assert!(description_report("DIM\n4\n", "").is_err());
        assert!(soliton_table("0", "0", "x").is_err());
    }

    #[test]
    fn pasted_description() {
        let text = sasaki5(&Rational::from_integer(2.into()), &Rational::from_integer(0.into())).serialize();
        assert!(description_report(&text, "").unwrap().contains("Sasaki-like: true"));
    }
}
