//! The full analysis pipeline for one manifold description, with text and
//! flat key/value renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::description::ManifoldDescription;
use crate::error::{Error, Result};
use crate::lie::{covariant_derivative_02, curvature, levi_civita, lie_derivative_metric, ricci_data, CurvatureData};
use crate::predicates::{
    nabla_ricci_operator, q_dot_r_zero, r_xi_action_on_rho, recurrent_forms_solve, ricci_parallelism_report,
    ricci_phi_symmetry, PredicateVerdict, RecurrenceKind, Scope, Witness,
};
use crate::ratlin::{format_rational, one, DenseTensor, Rational};
use crate::soliton::{
    assemble_recurrence, corollary_scalar_relations, einstein_like_fit, einstein_sasaki_checks, nabla_rho_closed_form,
    parallel_symmetric_space, recurrence_coefficients, soliton_fit, soliton_sasaki_checks, soliton_tensor_h,
    vertical_potential_analysis, EinsteinClass, EinsteinLikeFit, ParallelTensorSpace, SolitonFit,
};
use crate::structure::{
    associated_metric, fundamental_tensor, is_cosymplectic, is_sasaki_like, validate_structure,
    AlmostContactBMetricStructure, FundamentalTensor, SasakiVerdict, StructureVerdict,
};
use crate::verdict::Check;

pub const PREDICATE_NAMES: [&str; 11] = [
    "locally_symmetric",
    "eta_parallel",
    "parallel_along_xi",
    "cyclic_parallel",
    "codazzi",
    "r_xi_action",
    "phi_symmetric_local",
    "phi_symmetric_global",
    "almost_pseudo_ricci_symmetric",
    "special_weakly_ricci_symmetric",
    "q_dot_r_zero",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Potential {
    /// `v = kξ`
    Vertical(Rational),
    /// Components in the basis `e_0, …, e_{2n}`.
    Vector(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub potentials: Vec<Potential>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            potentials: vec![Potential::Vertical(one())],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonSection {
    pub potential: Potential,
    pub vector: Vec<Rational>,
    /// `Some(k)` when `v = kξ`.
    pub vertical_k: Option<Rational>,
    pub fit: SolitonFit,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecurrenceOutcome {
    Coefficients(Rational, Rational),
    Degenerate,
    NotComputed,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub sasaki: SasakiVerdict,
    pub fundamental: FundamentalTensor,
    pub cosymplectic: bool,
    pub curvature: CurvatureData,
    pub nabla_rho: DenseTensor,
    pub einstein: EinsteinLikeFit,
    pub xi_fit: SolitonFit,
    pub solitons: Vec<SolitonSection>,
    pub predicates: Vec<PredicateVerdict>,
    pub not_applicable: Vec<String>,
    pub parallel_space: ParallelTensorSpace,
    pub recurrence: RecurrenceOutcome,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub label: String,
    pub dim: usize,
    pub structure: StructureVerdict,
    /// `None` when the structure is invalid and downstream sections were skipped.
    pub analysis: Option<Analysis>,
}

fn vertical_multiple(s: &AlmostContactBMetricStructure, v: &[Rational]) -> Option<Rational> {
    let k = s.eta_of(v);
    s.xi.iter().zip(v).all(|(x, c)| x * &k == *c).then_some(k)
}

pub fn run_analysis(desc: &ManifoldDescription, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let s = desc.to_structure()?;
    let structure = validate_structure(&s);
    let analysis = if structure.is_valid() {
        Some(analyze_structure(&s, options)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        label: desc.label.clone(),
        dim: desc.dim,
        structure,
        analysis,
    })
}

fn analyze_structure(s: &AlmostContactBMetricStructure, options: &AnalysisOptions) -> Result<Analysis> {
    let n = s.dim();
    let two_n = s.two_n();
    let conn = levi_civita(&s.algebra, &s.g);
    let gt = associated_metric(s)?;
    let riemann = curvature(&s.algebra, &s.g, &conn);
    let mut checks = vec![
        Check::from_witness("torsion_free", conn.torsion_violation(&s.algebra).map(|w| w.to_vec())),
        Check::from_witness("metric_compatible", covariant_derivative_02(s.gm(), &conn).first_nonzero()),
        Check::from_witness(
            "curvature_symmetries",
            riemann.symmetry_violation().map(|(_, w)| w.to_vec()),
        ),
    ];
    let curv = ricci_data(&s.algebra, riemann, &s.g, &s.phi, gt.components())?;
    let rho = &curv.ricci;
    checks.push(Check::from_bool(
        "ricci_operator_lowers_to_ricci",
        s.gm() * &curv.ricci_operator == *rho,
    ));

    let fundamental = fundamental_tensor(s, &conn);
    checks.extend(fundamental.invariant_checks(s, &conn));
    let cosymplectic = is_cosymplectic(&fundamental);
    let sasaki = is_sasaki_like(s, &conn)?;
    checks.extend(sasaki.consequences.iter().cloned());

    let nabla_rho = covariant_derivative_02(rho, &conn);
    let einstein = einstein_like_fit(rho, s.gm(), gt.components(), &s.eta);
    let is_einstein = einstein.classification == EinsteinClass::Einstein;
    let xi_fit = soliton_fit(&s.xi, s, &conn, rho);

    // predicates
    let mut predicates = ricci_parallelism_report(&nabla_rho, s);
    predicates.push(r_xi_action_on_rho(&curv.riemann, rho, s));
    let nabla_q = nabla_ricci_operator(&curv.ricci_operator, &conn);
    predicates.push(ricci_phi_symmetry(&nabla_q, s, Scope::Local));
    predicates.push(ricci_phi_symmetry(&nabla_q, s, Scope::Global));
    let mut not_applicable = Vec::new();
    for kind in [RecurrenceKind::Pseudo, RecurrenceKind::SpecialWeakly] {
        match recurrent_forms_solve(&nabla_rho, rho, kind) {
            Ok(v) => predicates.push(v),
            Err(Error::NotApplicable(_)) => not_applicable.push(
                match kind {
                    RecurrenceKind::Pseudo => "almost_pseudo_ricci_symmetric",
                    RecurrenceKind::SpecialWeakly => "special_weakly_ricci_symmetric",
                }
                .to_owned(),
            ),
            Err(e) => return Err(e),
        }
    }
    predicates.push(q_dot_r_zero(&curv.riemann, &curv.ricci_operator, rho));

    let parallel_space = parallel_symmetric_space(&conn, s.gm());
    let mut recurrence = RecurrenceOutcome::NotComputed;

    if sasaki.holds {
        checks.extend(einstein_sasaki_checks(&einstein, &curv.tau, &curv.tau_tilde, s.n()));
        checks.push(Check::from_bool("parallel_tensors_span_g", parallel_space.is_span_of(s.gm())));
        let qr = predicates.iter().find(|p| p.name == "q_dot_r_zero").expect("present");
        checks.push(Check::from_bool(
            "q_dot_r_excludes_vertical_soliton",
            !(qr.holds && xi_fit.consistent()),
        ));

        if let Some([l, m, nu]) = xi_fit.constants() {
            checks.extend(corollary_scalar_relations(&xi_fit, &curv.tau, &curv.tau_tilde, s.n(), Some(&einstein)).unwrap_or_default());
            checks.push(Check::from_bool(
                "nabla_rho_closed_form",
                nabla_rho_closed_form(&xi_fit, s)? == nabla_rho,
            ));
            let locally = nabla_rho.is_zero();
            checks.push(Check::from_bool(
                "locally_symmetric_iff_constants_minus_2n_1_minus_1",
                locally == (l == -two_n.clone() && m == one() && nu == -one()),
            ));
            recurrence = match recurrence_coefficients(&l, &m, s.n()) {
                Ok((c1, c2)) => {
                    checks.push(Check::from_bool(
                        "recurrence_reproduces_nabla_rho",
                        assemble_recurrence(&c1, &c2, rho, s) == nabla_rho,
                    ));
                    RecurrenceOutcome::Coefficients(c1, c2)
                }
                Err(Error::DegenerateCase(_)) => RecurrenceOutcome::Degenerate,
                Err(e) => return Err(e),
            };
            let h = soliton_tensor_h(s, &conn, rho, &m, &nu)?;
            checks.push(Check::from_bool("soliton_tensor_h_parallel", h.parallel));
            checks.push(Check::from_bool("soliton_tensor_h_lambda", h.lambda == l));
            checks.extend(h.checks);
        }

        if xi_fit.consistent() {
            for p in &mut predicates {
                let expected = match p.name.as_str() {
                    "eta_parallel" | "parallel_along_xi" | "phi_symmetric_local" => Some(true),
                    "locally_symmetric" | "cyclic_parallel" | "codazzi" | "r_xi_action" | "phi_symmetric_global"
                    | "almost_pseudo_ricci_symmetric" | "special_weakly_ricci_symmetric" => Some(is_einstein),
                    _ => None,
                };
                if let Some(e) = expected {
                    *p = p.clone().predicting(e);
                    checks.push(Check::from_bool(
                        format!("predicate_{}_consistent", p.name),
                        p.decisive_value() == e,
                    ));
                }
            }
        }
    }

    let mut solitons = Vec::new();
    for potential in &options.potentials {
        let vector = match potential {
            Potential::Vertical(k) => s.xi.iter().map(|x| x * k).collect(),
            Potential::Vector(v) => {
                if v.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "potential has {} components, expected {n}",
                        v.len()
                    )));
                }
                v.clone()
            }
        };
        let vertical_k = vertical_multiple(s, &vector);
        let fit = soliton_fit(&vector, s, &conn, rho);
        let mut sc = Vec::new();
        if lie_derivative_metric(&vector, s.gm(), &conn).is_zero() {
            let reduced = match (fit.constants(), einstein.constants()) {
                (Some(f), Some(e)) => f.iter().zip(&e).all(|(x, y)| *x == -y.clone()),
                (f, e) => f.is_none() && e.is_none() && fit.consistent() == einstein.consistent(),
            };
            sc.push(Check::from_bool("killing_potential_reduces_to_einstein_fit", reduced));
        }
        if let (true, Some(k)) = (sasaki.holds, &vertical_k) {
            sc.extend(soliton_sasaki_checks(&fit, &einstein, k, s.n()));
            sc.extend(vertical_potential_analysis(k, s, &conn, rho)?.checks);
        }
        solitons.push(SolitonSection {
            potential: potential.clone(),
            vector,
            vertical_k,
            fit,
            checks: sc,
        });
    }

    Ok(Analysis {
        sasaki,
        fundamental,
        cosymplectic,
        curvature: curv,
        nabla_rho,
        einstein,
        xi_fit,
        solitons,
        predicates,
        not_applicable,
        parallel_space,
        recurrence,
        checks,
    })
}

fn fmt_vec(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn fmt_ix(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn dotted(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

impl AnalysisReport {
    /// Every check the report asserts, structure axioms included.
    pub fn all_checks(&self) -> Vec<&Check> {
        let mut out: Vec<&Check> = self.structure.checks.iter().collect();
        if let Some(a) = &self.analysis {
            out.extend(a.checks.iter());
            out.extend(a.solitons.iter().flat_map(|s| s.checks.iter()));
        }
        out
    }

    pub fn all_checks_passed(&self) -> bool {
        self.all_checks().iter().all(|c| c.passed)
    }

    pub fn predicate(&self, name: &str) -> Option<&PredicateVerdict> {
        self.analysis.as_ref()?.predicates.iter().find(|p| p.name == name)
    }

    /// Flat key/value view; keys are unique and the map is ordered.
    pub fn machine_map(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let mut put = |k: String, v: String| {
            m.insert(k, v);
        };
        put("label".into(), self.label.clone());
        put("dim".into(), self.dim.to_string());
        put("structure.valid".into(), self.structure.is_valid().to_string());
        for c in &self.structure.checks {
            put(format!("structure.{}", c.name), pass(c.passed).into());
            if let Some(w) = &c.witness {
                put(format!("structure.{}.witness", c.name), fmt_ix(w));
            }
        }
        let Some(a) = &self.analysis else {
            put("analysis".into(), "skipped".into());
            put("summary.failed".into(), self.all_checks().iter().filter(|c| !c.passed).count().to_string());
            return m;
        };
        put("analysis".into(), "complete".into());
        put("sasaki_like".into(), a.sasaki.holds.to_string());
        if let Some(v) = a.sasaki.violation {
            put("sasaki_like.violation".into(), fmt_ix(&v));
        }
        put("cosymplectic".into(), a.cosymplectic.to_string());
        put("lee.theta".into(), fmt_vec(&a.fundamental.theta));
        put("lee.theta_star".into(), fmt_vec(&a.fundamental.theta_star));
        put("lee.omega".into(), fmt_vec(&a.fundamental.omega));

        let c = &a.curvature;
        put("curvature.tau".into(), format_rational(&c.tau));
        put("curvature.tau_star".into(), format_rational(&c.tau_star));
        put("curvature.tau_tilde".into(), format_rational(&c.tau_tilde));
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let v = &c.ricci[(i, j)];
                if !v.is_zero() {
                    put(format!("curvature.ricci.{i}.{j}"), format_rational(v));
                }
            }
        }
        for (ix, v) in c.riemann.riemann_04.nonzero() {
            if ix[0] < ix[1] && ix[2] < ix[3] {
                put(format!("curvature.riemann.{}", dotted(&ix)), format_rational(&v));
            }
        }
        for (ix, v) in a.nabla_rho.nonzero() {
            put(format!("nabla_rho.{}", dotted(&ix)), format_rational(&v));
        }

        put("einstein.consistent".into(), a.einstein.consistent().to_string());
        put("einstein.class".into(), a.einstein.classification.as_str().into());
        if let Some(d) = a.einstein.space.dimension() {
            put("einstein.nullity".into(), d.to_string());
        }
        if let Some([x, y, z]) = a.einstein.constants() {
            put("einstein.a".into(), format_rational(&x));
            put("einstein.b".into(), format_rational(&y));
            put("einstein.c".into(), format_rational(&z));
        }

        for (idx, sec) in a.solitons.iter().enumerate() {
            let p = format!("soliton.{idx}");
            put(format!("{p}.potential"), fmt_vec(&sec.vector));
            put(format!("{p}.vertical"), sec.vertical_k.is_some().to_string());
            if let Some(k) = &sec.vertical_k {
                put(format!("{p}.k"), format_rational(k));
            }
            put(format!("{p}.consistent"), sec.fit.consistent().to_string());
            if let Some(d) = sec.fit.space.dimension() {
                put(format!("{p}.nullity"), d.to_string());
            }
            if let Some([l, mu, nu]) = sec.fit.constants() {
                put(format!("{p}.lambda"), format_rational(&l));
                put(format!("{p}.mu"), format_rational(&mu));
                put(format!("{p}.nu"), format_rational(&nu));
            }
            for c in &sec.checks {
                put(format!("{p}.check.{}", c.name), pass(c.passed).into());
            }
        }

        for v in &a.predicates {
            let p = format!("predicate.{}", v.name);
            put(p.clone(), v.holds.to_string());
            match &v.witness {
                Some(Witness::Indices(ix)) => put(format!("{p}.witness"), fmt_ix(ix)),
                Some(Witness::Forms(f)) => {
                    put(format!("{p}.solvable"), f.solvable().to_string());
                    if let Some(d) = f.space.dimension() {
                        put(format!("{p}.solution_dimension"), d.to_string());
                    }
                }
                None => {}
            }
            if let Some(e) = v.einstein_equivalent {
                put(format!("{p}.expected"), e.to_string());
            }
        }
        for name in &a.not_applicable {
            put(format!("predicate.{name}"), "not_applicable".into());
        }

        put("parallel_tensors.dimension".into(), a.parallel_space.dimension().to_string());
        put(
            "recurrence".into(),
            match &a.recurrence {
                RecurrenceOutcome::Coefficients(c1, c2) => format!("{},{}", format_rational(c1), format_rational(c2)),
                RecurrenceOutcome::Degenerate => "degenerate".into(),
                RecurrenceOutcome::NotComputed => "not_computed".into(),
            },
        );
        for c in &a.checks {
            put(format!("check.{}", c.name), pass(c.passed).into());
        }
        put("summary.failed".into(), self.all_checks().iter().filter(|c| !c.passed).count().to_string());
        m
    }

    pub fn machine(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.machine_map() {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    pub fn text(&self) -> String {
        let mut o = String::new();
        let title = if self.label.is_empty() { "(unlabelled)" } else { &self.label };
        let _ = writeln!(o, "Manifold: {title}  (dimension {})", self.dim);
        let _ = writeln!(o, "\nStructure axioms");
        for c in &self.structure.checks {
            let _ = write!(o, "  [{}] {}", pass(c.passed).to_uppercase(), c.name);
            if let Some(w) = &c.witness {
                let _ = write!(o, " at ({})", fmt_ix(w));
            }
            let _ = writeln!(o);
        }
        let Some(a) = &self.analysis else {
            let _ = writeln!(o, "\nStructure invalid: connection, curvature, fits and predicates skipped.");
            return o;
        };
        let c = &a.curvature;
        let _ = writeln!(o, "\nClassification");
        let _ = writeln!(o, "  Sasaki-like: {}", a.sasaki.holds);
        let _ = writeln!(o, "  cosymplectic: {}", a.cosymplectic);
        let _ = writeln!(o, "  theta = ({})", fmt_vec(&a.fundamental.theta));
        let _ = writeln!(o, "  theta* = ({})", fmt_vec(&a.fundamental.theta_star));
        let _ = writeln!(o, "  omega = ({})", fmt_vec(&a.fundamental.omega));
        let _ = writeln!(o, "\nCurvature");
        let _ = writeln!(
            o,
            "  tau = {}, tau* = {}, tau~ = {}",
            format_rational(&c.tau),
            format_rational(&c.tau_star),
            format_rational(&c.tau_tilde)
        );
        let ricci: Vec<String> = (0..self.dim)
            .flat_map(|i| (i..self.dim).map(move |j| (i, j)))
            .filter(|&(i, j)| !c.ricci[(i, j)].is_zero())
            .map(|(i, j)| format!("rho_{i}{j} = {}", format_rational(&c.ricci[(i, j)])))
            .collect();
        let _ = writeln!(o, "  nonzero Ricci: {}", if ricci.is_empty() { "none".into() } else { ricci.join(", ") });
        let _ = writeln!(o, "\nEinstein-like fit rho = a g + b g~ + c eta(x)eta");
        match a.einstein.constants() {
            Some([x, y, z]) => {
                let _ = writeln!(
                    o,
                    "  (a, b, c) = ({}, {}, {})  [{}]",
                    format_rational(&x),
                    format_rational(&y),
                    format_rational(&z),
                    a.einstein.classification.as_str()
                );
            }
            None if a.einstein.consistent() => {
                let _ = writeln!(o, "  non-unique, solution space of dimension {:?}", a.einstein.space.dimension());
            }
            None => {
                let _ = writeln!(o, "  no solution");
            }
        }
        let _ = writeln!(o, "\nRicci-like solitons");
        for sec in &a.solitons {
            let what = match &sec.vertical_k {
                Some(k) => format!("v = {} xi", format_rational(k)),
                None => format!("v = ({}), not vertical", fmt_vec(&sec.vector)),
            };
            match sec.fit.constants() {
                Some([l, m, nu]) => {
                    let _ = writeln!(
                        o,
                        "  {what}: (lambda, mu, nu) = ({}, {}, {})",
                        format_rational(&l),
                        format_rational(&m),
                        format_rational(&nu)
                    );
                }
                None if sec.fit.consistent() => {
                    let _ = writeln!(o, "  {what}: non-unique solution");
                }
                None => {
                    let _ = writeln!(o, "  {what}: no soliton");
                }
            }
            for ch in &sec.checks {
                let _ = writeln!(o, "    [{}] {}", pass(ch.passed).to_uppercase(), ch.name);
            }
        }
        let _ = writeln!(o, "\nRecurrence of the Ricci tensor");
        let _ = writeln!(
            o,
            "  {}",
            match &a.recurrence {
                RecurrenceOutcome::Coefficients(c1, c2) =>
                    format!("c1 = {}, c2 = {}", format_rational(c1), format_rational(c2)),
                RecurrenceOutcome::Degenerate => "degenerate constants (lambda, mu) = (0, 1)".into(),
                RecurrenceOutcome::NotComputed => "not computed".into(),
            }
        );
        let _ = writeln!(o, "\nParallel symmetric (0,2)-tensors: dimension {}", a.parallel_space.dimension());
        let _ = writeln!(o, "\nPredicates");
        for v in &a.predicates {
            let _ = write!(o, "  {:<32} {}", v.name, v.holds);
            if let Some(ix) = v.violation() {
                let _ = write!(o, "  (witness {})", fmt_ix(ix));
            }
            if let Some(Witness::Forms(f)) = &v.witness {
                let _ = write!(o, "  (system solvable: {})", f.solvable());
            }
            let _ = writeln!(o);
        }
        for name in &a.not_applicable {
            let _ = writeln!(o, "  {name:<32} not applicable");
        }
        let _ = writeln!(o, "\nConsistency checks");
        for ch in &a.checks {
            let _ = write!(o, "  [{}] {}", pass(ch.passed).to_uppercase(), ch.name);
            if let Some(w) = &ch.witness {
                let _ = write!(o, " at ({})", fmt_ix(w));
            }
            let _ = writeln!(o);
        }
        let failed = self.all_checks().iter().filter(|c| !c.passed).count();
        let _ = writeln!(o, "\n{} checks, {failed} failed", self.all_checks().len());
        o
    }
}
