//! Batch commands: each one delegates to the library and assembles a report.

use std::time::Instant;

use num_complex::Complex;
use num_traits::One;

use super::corpus::{generate, render, CorpusConfig};
use super::parse::parse_polynomial;
use super::report::*;
use crate::algebra::{gcd, AlgNum, Var};
use crate::error::{Error, Result};
use crate::maps::{
    invert, is_monic_in_y, jacobian, monicize, parametric_resultant, sakkalis_check, Inversion,
    NormalizationCertificate, PolyMap2, ResultantData,
};
use crate::puiseux::{
    classify_resultant, complex_roots, expand_at_infinity, kraus_probe, CriticalClassification,
    ProbeEntry, PuiseuxBranch,
};
use crate::resultants::{kronecker_irreducible, power_structure, DEFAULT_DEGREE_BOUND};
use crate::{QPoly, Rat, Scalar};

/// Largest truncation order the probe escalates to on its own.
const ORDER_CEILING: u32 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandName {
    Analyze,
    Invert,
    Puiseux,
    Probe,
    Classify,
    Corpus,
}

impl CommandName {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandName::Analyze => "analyze",
            CommandName::Invert => "invert",
            CommandName::Puiseux => "puiseux",
            CommandName::Probe => "probe",
            CommandName::Classify => "classify",
            CommandName::Corpus => "corpus",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub order: u32,
    pub kronecker_bound: u32,
    pub fibers: Vec<Rat>,
    /// Decimal digits of numeric roots.
    pub precision: u32,
    pub timing: bool,
    pub corpus: CorpusConfig,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order: 16,
            kronecker_bound: DEFAULT_DEGREE_BOUND,
            fibers: Vec::new(),
            precision: 12,
            timing: false,
            corpus: CorpusConfig::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum CommandOutput {
    Report(Box<AnalysisReport>),
    /// Corpus file contents.
    Corpus(String),
}

impl CommandOutput {
    pub fn report(&self) -> Option<&AnalysisReport> {
        match self {
            CommandOutput::Report(r) => Some(r),
            CommandOutput::Corpus(_) => None,
        }
    }
}

/// A rational constant written in the polynomial grammar, e.g. `-3/4`.
pub fn parse_rational(text: &str) -> Result<Rat> {
    parse_polynomial(text)?
        .constant_value()
        .ok_or_else(|| Error::InvalidArgument(format!("'{}' is not a rational constant", text)))
}

pub fn parse_map_spec(spec: &MapSpecText) -> Result<PolyMap2<Rat>> {
    PolyMap2::new(parse_polynomial(&spec.p)?, parse_polynomial(&spec.q)?)
}

pub fn run_command(
    name: CommandName,
    map: Option<&MapSpecText>,
    cfg: &Config,
) -> Result<CommandOutput> {
    if name == CommandName::Corpus {
        return Ok(CommandOutput::Corpus(render(&generate(&cfg.corpus))));
    }
    let spec = map.ok_or_else(|| Error::InvalidArgument("a map (p, q) is required".into()))?;
    let needs_fibers = matches!(
        name,
        CommandName::Puiseux | CommandName::Probe | CommandName::Classify
    );
    if needs_fibers && cfg.fibers.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "{} needs at least one fiber value c",
            name.as_str()
        )));
    }
    if cfg.order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let start = Instant::now();
    let f = parse_map_spec(spec)?;
    let mut report = analyze_map(name, &f, cfg)?;
    if cfg.timing {
        report.timing = Some(Timing {
            total_ms: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    Ok(CommandOutput::Report(Box::new(report)))
}

/// The input map together with the monic map all resultant and fiber data
/// refer to. Maps whose first component is already monic in `y` are used
/// unchanged.
struct Normalized {
    g: PolyMap2<Rat>,
    cert: NormalizationCertificate<Rat>,
}

fn normalize(f: &PolyMap2<Rat>) -> Result<Normalized> {
    if f.p().is_constant() || f.q().is_constant() {
        return Err(Error::DegenerateMap);
    }
    if is_monic_in_y(f.p()) {
        return Ok(Normalized {
            g: f.clone(),
            cert: NormalizationCertificate {
                shear: 0,
                target_scale: (Rat::one(), Rat::one()),
            },
        });
    }
    let (g, cert) = monicize(f)?;
    Ok(Normalized { g, cert })
}

impl Normalized {
    /// A polynomial in the normalized target coordinates rewritten in the
    /// input ones (`u' = s0 u`, `v' = s1 v`).
    fn to_input_target(&self, r: &QPoly) -> QPoly {
        let (s0, s1) = &self.cert.target_scale;
        if s0.is_one() && s1.is_one() {
            return r.clone();
        }
        r.substitute(&[
            (Var::U, QPoly::var(Var::U).scale(s0)),
            (Var::V, QPoly::var(Var::V).scale(s1)),
        ])
    }

    fn section(&self) -> NormalizationSection {
        NormalizationSection {
            shear: self.cert.shear,
            target_scale: [
                self.cert.target_scale.0.to_string(),
                self.cert.target_scale.1.to_string(),
            ],
            p: self.g.p().to_string(),
            q: self.g.q().to_string(),
        }
    }
}

fn analyze_map(name: CommandName, f: &PolyMap2<Rat>, cfg: &Config) -> Result<AnalysisReport> {
    let norm = normalize(f)?;
    let jac = jacobian(f);
    let global = matches!(name, CommandName::Analyze | CommandName::Invert);
    let wants_data = name != CommandName::Puiseux;
    let data = if wants_data {
        Some(parametric_resultant(&norm.g)?)
    } else {
        None
    };
    let mut report = AnalysisReport {
        schema: SCHEMA_ID,
        toolkit_version: env!("CARGO_PKG_VERSION"),
        command: name.as_str().to_string(),
        map: MapSpecText {
            p: f.p().to_string(),
            q: f.q().to_string(),
        },
        jacobian: JacobianSection {
            jac: jac.jac.to_string(),
            is_keller: jac.is_keller,
        },
        normalization: norm.section(),
        resultant: None,
        nonproper_set: None,
        invertibility: None,
        fibers: Vec::new(),
        timing: None,
    };
    if global {
        let data = data.as_ref().expect("computed for global commands");
        report.resultant = Some(resultant_section(data, cfg.kronecker_bound));
        report.nonproper_set = Some(norm.to_input_target(&data.r_top).to_string());
    }
    if name == CommandName::Invert {
        report.invertibility = Some(invertibility_section(&invert(f)?));
    }
    for c in &cfg.fibers {
        report
            .fibers
            .push(fiber_section(name, &norm, data.as_ref(), c, cfg));
    }
    Ok(report)
}

fn resultant_section(data: &ResultantData<Rat>, bound: u32) -> ResultantSection {
    ResultantSection {
        n: data.n,
        r_top: data.r_top.to_string(),
        r_zero: data.r_zero.to_string(),
        sakkalis: sakkalis_check(data),
        geometric_degree: data.n,
        irreducibility: irreducibility(&data.r, bound).to_string(),
        power_exponent: power_structure(&data.r).ok().map(|ps| ps.exponent),
    }
}

/// Cheap sufficient test first: degree one in some variable with coprime
/// coefficients. Otherwise the bounded Kronecker test where it applies.
pub fn irreducibility(r: &QPoly, bound: u32) -> &'static str {
    if r.is_constant() {
        return "constant";
    }
    let vars = r.vars();
    for &w in &vars {
        if r.degree_in(w) == Some(1) && gcd(&r.coeff_of(w, 1), &r.coeff_of(w, 0)).is_constant() {
            return "irreducible";
        }
    }
    if vars.len() <= 2 {
        match kronecker_irreducible(r, bound) {
            Ok(true) => return "irreducible",
            Ok(false) => return "reducible",
            Err(_) => {}
        }
    }
    "unverified"
}

fn invertibility_section(inv: &Inversion<Rat>) -> InvertibilitySection {
    match inv {
        Inversion::Invertible(c) => InvertibilitySection::Invertible {
            g1: c.g1.to_string(),
            g2: c.g2.to_string(),
            lambda1: c.lambda1.to_string(),
            lambda2: c.lambda2.to_string(),
        },
        Inversion::NotInvertible(ni) => InvertibilitySection::NotInvertible {
            n: ni.n,
            r_top: ni.r_top.to_string(),
            failed: ni.failed.iter().map(|s| s.to_string()).collect(),
        },
    }
}

fn fiber_section(
    name: CommandName,
    norm: &Normalized,
    data: Option<&ResultantData<Rat>>,
    c: &Rat,
    cfg: &Config,
) -> FiberSection {
    let normalized_c = c.clone() * &norm.cert.target_scale.0;
    let mut section = FiberSection {
        c: c.to_string(),
        normalized_c: normalized_c.to_string(),
        classification: None,
        branches: None,
        bounded_branches: None,
        order_used: None,
        notes: Vec::new(),
    };
    let classification = data.map(|d| classify_resultant(&d.r, &normalized_c));
    if let Some(Ok(cl)) = &classification {
        if cl.degenerate_flag {
            section.notes.push(format!(
                "degenerate resultant: r_top vanishes identically on u = {}",
                c
            ));
        }
    }
    if matches!(
        name,
        CommandName::Classify | CommandName::Analyze | CommandName::Invert
    ) {
        section.classification = classification.map(|r| {
            Fallible::from_result(r.map(|cl| classification_section(norm, &cl, cfg.precision)))
        });
    }
    match name {
        CommandName::Puiseux => {
            let branches = expand_at_infinity(norm.g.p(), &normalized_c, cfg.order);
            section.order_used = Some(cfg.order);
            section.branches = Some(Fallible::from_result(
                branches.map(|bs| bs.iter().map(branch_section).collect()),
            ));
        }
        CommandName::Probe | CommandName::Analyze | CommandName::Invert => {
            let (order, hits) = probe_escalating(&norm.g, &normalized_c, cfg.order);
            section.order_used = Some(order);
            let s1 = &norm.cert.target_scale.1;
            section.bounded_branches =
                Some(Fallible::from_result(hits.map(|hs| {
                    hs.iter().map(|h| bounded_section(h, s1)).collect()
                })));
        }
        _ => {}
    }
    section
}

/// Runs the probe, raising the truncation order whenever a branch image
/// needs more terms, up to a fixed ceiling.
pub fn probe_escalating(g: &PolyMap2<Rat>, c: &Rat, order: u32) -> (u32, Result<Vec<ProbeEntry>>) {
    let mut order = order;
    loop {
        match kraus_probe(g, c, order) {
            Err(Error::InsufficientOrder { needed }) if order < ORDER_CEILING => {
                order = (needed as u32).max(order + 1).min(ORDER_CEILING);
            }
            other => return (order, other),
        }
    }
}

fn classification_section(
    norm: &Normalized,
    cl: &CriticalClassification,
    precision: u32,
) -> ClassificationSection {
    // v' = s1 v
    let to_input = |p: &QPoly| {
        let s1 = &norm.cert.target_scale.1;
        if s1.is_one() {
            p.clone()
        } else {
            p.substitute(&[(Var::V, QPoly::var(Var::V).scale(s1))])
        }
    };
    let first = to_input(&cl.first_kind_poly);
    let second = to_input(&cl.second_kind_poly);
    ClassificationSection {
        n: cl.n,
        first_kind_poly: first.to_string(),
        second_kind_poly: second.to_string(),
        degenerate_flag: cl.degenerate_flag,
        first_kind_roots: numeric_roots(&first, precision),
        second_kind_roots: numeric_roots(&second, precision),
    }
}

fn format_float(x: f64, precision: u32) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{:.*e}", precision.saturating_sub(1) as usize, x)
}

/// Roots of a nonzero univariate polynomial, tagged as approximations.
pub fn numeric_roots(p: &QPoly, precision: u32) -> Vec<NumericRoot> {
    if p.is_zero() || p.is_constant() {
        return Vec::new();
    }
    let Ok(roots) = complex_roots(p, precision) else {
        return Vec::new();
    };
    let tiny = 10f64.powi(-(precision as i32));
    roots
        .into_iter()
        .map(|z: Complex<f64>| {
            let clean = |a: f64| {
                if a.abs() < tiny * (1.0 + z.norm()) {
                    0.0
                } else {
                    a
                }
            };
            NumericRoot {
                kind: "numeric",
                precision,
                re: format_float(clean(z.re), precision),
                im: format_float(clean(z.im), precision),
            }
        })
        .collect()
}

fn branch_section(b: &PuiseuxBranch) -> BranchSection {
    BranchSection {
        m: b.m,
        x_scale: b.x_scale.to_string(),
        field: b.field.as_ref().map(|m| m.to_string()),
        ramification: b.ramification,
        exact: b.exact,
        resolved: b.resolved,
        order: b.order,
        y: b.coeffs
            .iter()
            .map(|(e, c)| TermText {
                exp: *e,
                coeff: c.to_string(),
            })
            .collect(),
    }
}

fn bounded_section(h: &ProbeEntry, s1: &Rat) -> BoundedBranchSection {
    let back = AlgNum::rational(s1.inv().expect("nonzero scale"));
    let status = h.gap_status();
    BoundedBranchSection {
        branch: branch_section(&h.branch),
        b0: (h.b0().clone() * &back).to_string(),
        b1: (h.b1().clone() * &back).to_string(),
        gap_status: status.to_string(),
        note: status.describe().to_string(),
    }
}
