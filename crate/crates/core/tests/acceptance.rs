//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Set `UPDATE_GOLDEN=1` to rewrite the golden reports.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::random;
use common::*;
use planemap::cli::commands::{parse_map_spec, CommandName, CommandOutput, Config};
use planemap::cli::corpus::{generate, render, CorpusConfig};
use planemap::cli::report::AnalysisReport;
use planemap::cli::{parse_polynomial, run_command, MapSpecText};
use planemap::maps::{
    compose, invert, monicize, nonproper_set, parametric_resultant, Inversion, PolyMap2,
};
use planemap::puiseux::{
    classify_critical_values, expand_at_infinity, kraus_probe, proper_on_fiber,
};
use planemap::resultants::{kronecker_irreducible, power_structure, resultant, sylvester_matrix};
use planemap::{AlgNum, QPoly, Rat, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const CORPUS_BUDGET: Duration = Duration::from_secs(300);

fn corpus() -> Vec<PolyMap2<Rat>> {
    generate(&CorpusConfig::default())
}

fn spec(p: &str, q: &str) -> MapSpecText {
    MapSpecText {
        p: p.into(),
        q: q.into(),
    }
}

fn map(p: &str, q: &str) -> PolyMap2<Rat> {
    parse_map_spec(&spec(p, q)).unwrap()
}

fn report(name: CommandName, p: &str, q: &str, fibers: &[Rat]) -> AnalysisReport {
    let cfg = Config {
        fibers: fibers.to_vec(),
        ..Config::default()
    };
    match run_command(name, Some(&spec(p, q)), &cfg).unwrap() {
        CommandOutput::Report(r) => *r,
        CommandOutput::Corpus(_) => unreachable!("map command"),
    }
}

fn automorphism_corpus() -> Outcome {
    let maps = corpus();
    ensure!(maps.len() == 100, "corpus has {} maps", maps.len());
    let max_degree = maps.iter().map(|f| f.degree()).max().unwrap_or(0);
    let start = Instant::now();
    for (i, f) in maps.iter().enumerate() {
        let inv = invert(f).map_err(|e| format!("map {} {}: {}", i, f, e))?;
        let Some(c) = inv.certificate() else {
            return Err(format!("map {} {} reported not invertible", i, f));
        };
        let g = c.as_map();
        ensure!(compose(f, &g).is_identity(), "map {}: F(G) != id", i);
        ensure!(compose(&g, f).is_identity(), "map {}: G(F) != id", i);
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < CORPUS_BUDGET, "took {:?}", elapsed);
    Ok(format!(
        "100 maps, max degree {}, {:.1?}",
        max_degree, elapsed
    ))
}

fn converse_examples() -> Outcome {
    // geometric degree of each map, counted by hand from its generic fiber
    let cases = [
        ("y^2", "x", 2),
        ("y", "x*y + x", 1),
        ("x^2", "y", 2),
        ("x", "y^2", 2),
        ("x^3 + y", "y", 3),
        ("x + y^2", "y^3", 3),
        ("x*y", "x + y", 2),
        // squares x + iy and x - iy independently
        ("x^2 - y^2", "2*x*y", 4),
        ("x", "x*y", 1),
        ("x + y", "x^3 + y^3", 2),
    ];
    for (p, q, n) in cases {
        match invert(&map(p, q)).map_err(|e| format!("({}, {}): {}", p, q, e))? {
            Inversion::NotInvertible(ni) => {
                ensure!(ni.n == n, "({}, {}): n = {}, expected {}", p, q, ni.n, n);
                ensure!(!ni.failed.is_empty(), "({}, {}): no failing side", p, q);
            }
            Inversion::Invertible(_) => return Err(format!("({}, {}) certified invertible", p, q)),
        }
    }
    Ok(format!("{} maps rejected with the expected n", cases.len()))
}

fn resultant_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..200 {
        let df = rng.gen_range(1..=4);
        let dg = rng.gen_range(1..=8 - df).min(4);
        let f = random::poly_in_y(&mut rng, df, 2, false);
        let g = random::poly_in_y(&mut rng, dg, 2, false);
        // leading coefficients in x as well, some of the time
        let g = if rng.gen_bool(0.5) {
            &g + &(&x() * &y().pow(dg))
        } else {
            g
        };
        let prs = resultant(&f, &g, Var::Y).map_err(|e| e.to_string())?;
        let det = sylvester_matrix(&f, &g, Var::Y)
            .map_err(|e| e.to_string())?
            .determinant_cofactor();
        ensure!(
            prs == det,
            "pair {}: Res_y({}, {}) = {} but det = {}",
            i,
            f,
            g,
            prs,
            det
        );
    }
    Ok("200 pairs agree exactly".into())
}

fn curve_resultants() -> Outcome {
    let cases = [
        (
            &t().pow(2) - &u(),
            &t().pow(3) - &v(),
            &v().pow(2) - &u().pow(3),
            1,
        ),
        (
            &t().pow(2) - &u(),
            &t().pow(4) - &v(),
            (&v() - &u().pow(2)).pow(2),
            2,
        ),
    ];
    for (f, g, expected, l) in cases {
        let r = resultant(&f, &g, Var::T).map_err(|e| e.to_string())?;
        ensure!(r == expected, "Res_t({}, {}) = {}", f, g, r);
        let ps = power_structure(&r).map_err(|e| e.to_string())?;
        ensure!(ps.exponent == l, "exponent {} for {}", ps.exponent, r);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let f = random::univariate(&mut rng, Var::T, m, false);
        let g = random::univariate(&mut rng, Var::T, n, false);
        let r = resultant(&(&f - &u()), &(&g - &v()), Var::T).map_err(|e| e.to_string())?;
        let ps = power_structure(&r).map_err(|e| format!("{} for ({}, {})", e, f, g))?;
        ensure!(ps.expand() == r, "power structure does not expand back");
        ensure!(
            num_integer::gcd(m, n) % ps.exponent == 0,
            "l = {} does not divide gcd({}, {})",
            ps.exponent,
            m,
            n
        );
    }
    Ok("both exact instances and 50 random pairs".into())
}

fn minimal_polynomials() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    let mut exponents = Vec::new();
    while done < 20 {
        let d = rng.gen_range(1..=4);
        let f = random::univariate(&mut rng, Var::T, d, true);
        if !kronecker_irreducible(&f, 8).map_err(|e| e.to_string())? {
            continue;
        }
        let dg = rng.gen_range(1..=4);
        let g = random::univariate(&mut rng, Var::T, dg, false);
        let r = resultant(&f, &(&g - &v()), Var::T).map_err(|e| e.to_string())?;
        let ps = power_structure(&r).map_err(|e| format!("{} for f = {}, g = {}", e, f, g))?;
        ensure!(
            kronecker_irreducible(&ps.base, 8).map_err(|e| e.to_string())?,
            "base {} of Res_t({}, {} - v) is reducible",
            ps.base,
            f,
            g
        );
        exponents.push(ps.exponent);
        done += 1;
    }
    Ok(format!("20 fields, exponents {:?}", exponents))
}

fn specialization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..50 {
        let (dp, dq) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let p = random::poly_in_y(&mut rng, dp, dp, true);
        let q = random::poly_in_y(&mut rng, dq, dq, true);
        let c = random::rat(&mut rng);
        let f = PolyMap2::new(p.clone(), q.clone()).map_err(|e| e.to_string())?;
        let data = parametric_resultant(&f).map_err(|e| e.to_string())?;
        let specialized = data.r.evaluate(&[(Var::U, c.clone())]);
        let direct = resultant(&(&p - &QPoly::constant(c.clone())), &(&q - &v()), Var::Y)
            .map_err(|e| e.to_string())?;
        ensure!(
            specialized == direct,
            "pair {}: ({}, {}) at u = {}",
            i,
            p,
            q,
            c
        );
    }
    Ok("50 pairs".into())
}

fn formanek() -> Outcome {
    for (i, f) in corpus().iter().enumerate() {
        let (g, _) = monicize(f).map_err(|e| e.to_string())?;
        let data = parametric_resultant(&g).map_err(|e| e.to_string())?;
        let ps = power_structure(&data.r).map_err(|e| format!("map {}: {}", i, e))?;
        ensure!(ps.exponent == 1, "map {}: l = {}", i, ps.exponent);
    }
    Ok("l = 1 on all 100 corpus maps".into())
}

fn puiseux_residuals() -> Outcome {
    const ORDER: u32 = 12;
    let (sheared, _) = monicize(&map("x^2*y + x", "y")).map_err(|e| e.to_string())?;
    let (flipped, _) = monicize(&map("x^2 - y^3 + x", "x")).map_err(|e| e.to_string())?;
    let curves = [
        parse_polynomial("y^2 - x").unwrap(),
        parse_polynomial("y^2 - x - 1").unwrap(),
        parse_polynomial("y^3 - x^2").unwrap(),
        sheared.p().clone(),
        flipped.p().clone(),
    ];
    let mut count = 0;
    for p in &curves {
        let d = p.total_degree().unwrap();
        for c in [int(0), int(1)] {
            let branches = expand_at_infinity(p, &c, ORDER).map_err(|e| e.to_string())?;
            let total: u32 = branches.iter().map(|b| b.ramification).sum();
            ensure!(total == d, "{} = {}: ramification {} != {}", p, c, total, d);
            for b in &branches {
                let r = b.residual(p, &c);
                let bound = b.residual_threshold(d);
                ensure!(
                    r.terms().all(|(e, _)| e <= bound),
                    "{} = {}: residual {} exceeds t^{}",
                    p,
                    c,
                    r,
                    bound
                );
                count += 1;
            }
        }
    }
    // y^2 = x + 1 with x = t^2: y = t (1 + t^-2)^(1/2)
    let b = &expand_at_infinity(&curves[1], &int(0), ORDER).map_err(|e| e.to_string())?[0];
    let mut binom = int(1);
    let mut expected = Vec::new();
    for k in 0..6i64 {
        expected.push((1 - 2 * k, binom.clone()));
        binom = binom * (frac(1, 2) - int(k)) / int(k + 1);
    }
    for (e, want) in &expected {
        let got = b
            .coeffs
            .iter()
            .find(|(x, _)| x == e)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| AlgNum::rational(int(0)));
        ensure!(
            got == AlgNum::rational(want.clone()),
            "t^{}: {} != {}",
            e,
            got,
            want
        );
    }
    Ok(format!(
        "{} branches vanish to order {}; binomial coefficients 1, 1/2, -1/8, 1/16, ... match",
        count, ORDER
    ))
}

fn jelonek() -> Outcome {
    let f = map("y", "x*y + x");
    let np = nonproper_set(&f).map_err(|e| e.to_string())?;
    ensure!(np == &u() + &QPoly::one(), "nonproper set {}", np);
    let hits = kraus_probe(&f, &int(-1), 16).map_err(|e| e.to_string())?;
    ensure!(!hits.is_empty(), "no bounded branch at c = -1");
    let cl = classify_critical_values(&f, &int(-1)).map_err(|e| e.to_string())?;
    ensure!(
        cl.degenerate_flag,
        "resultant not flagged degenerate at c = -1"
    );
    let none = kraus_probe(&f, &int(0), 16).map_err(|e| e.to_string())?;
    ensure!(none.is_empty(), "bounded branch at c = 0");
    ensure!(
        !classify_critical_values(&f, &int(0))
            .map_err(|e| e.to_string())?
            .degenerate_flag,
        "c = 0 flagged degenerate"
    );
    ensure!(
        !proper_on_fiber(&f, &int(-1), 16).map_err(|e| e.to_string())?,
        "proper at -1"
    );
    ensure!(
        proper_on_fiber(&f, &int(0), 16).map_err(|e| e.to_string())?,
        "improper at 0"
    );
    let r = report(CommandName::Probe, "y", "x*y + x", &[int(-1)]);
    ensure!(
        r.fibers[0]
            .notes
            .iter()
            .any(|n| n.contains("degenerate resultant")),
        "probe report lacks the degenerate-resultant note"
    );
    Ok(format!(
        "nonproper set {}; {} bounded branch at c = -1",
        np,
        hits.len()
    ))
}

fn probe_reports() -> Outcome {
    let maps = corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut fibers_checked = 0;
    for (i, f) in maps.iter().enumerate() {
        let fibers: Vec<Rat> = (0..5).map(|_| random::rat(&mut rng)).collect();
        let cfg = Config {
            fibers,
            ..Config::default()
        };
        let s = spec(&f.p().to_string(), &f.q().to_string());
        let out = run_command(CommandName::Probe, Some(&s), &cfg)
            .map_err(|e| format!("map {}: {}", i, e))?;
        let r = out.report().expect("probe report");
        for fiber in &r.fibers {
            let hits = fiber
                .bounded_branches
                .as_ref()
                .and_then(|b| b.ok())
                .ok_or_else(|| format!("map {} fiber {}: probe failed", i, fiber.c))?;
            ensure!(
                hits.is_empty(),
                "map {} fiber {}: {} bounded branches",
                i,
                fiber.c,
                hits.len()
            );
            fibers_checked += 1;
        }
    }
    // reporting of bounded branches: b1 = 0 is a gap, never a proof
    let mut gap = 0;
    let mut regular = 0;
    for (p, q, c) in [
        ("y", "x*y + x", -1),
        ("y^2 - x^2", "x + y", 1),
        ("y^2 - x^2", "x + y", 0),
    ] {
        let r = report(CommandName::Probe, p, q, &[int(c)]);
        let text = r.to_text();
        for h in r.fibers[0]
            .bounded_branches
            .as_ref()
            .and_then(|b| b.ok())
            .into_iter()
            .flatten()
        {
            if h.b1 == "0" {
                ensure!(
                    h.gap_status == "gap open",
                    "b1 = 0 reported as {}",
                    h.gap_status
                );
                ensure!(
                    h.note.contains("gap open") && h.note.contains("nothing is concluded"),
                    "note: {}",
                    h.note
                );
                ensure!(text.contains("gap open"), "text report lacks 'gap open'");
                gap += 1;
            } else {
                ensure!(
                    h.gap_status == "regular",
                    "b1 = {} reported as {}",
                    h.b1,
                    h.gap_status
                );
                regular += 1;
            }
        }
    }
    ensure!(
        gap >= 1 && regular >= 1,
        "examples exercised {} gap / {} regular branches",
        gap,
        regular
    );
    Ok(format!(
        "{} corpus fibers proper; {} gap-open and {} regular bounded branches reported",
        fibers_checked, gap, regular
    ))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

fn golden_cases() -> Vec<(
    &'static str,
    CommandName,
    &'static str,
    &'static str,
    Vec<Rat>,
)> {
    vec![
        (
            "invert_swap_parabola",
            CommandName::Invert,
            "y",
            "x + y^2",
            vec![],
        ),
        ("invert_fold", CommandName::Invert, "y^2", "x", vec![]),
        (
            "analyze_sheared",
            CommandName::Analyze,
            "x^2*y + x",
            "y",
            vec![int(0)],
        ),
        (
            "probe_jelonek",
            CommandName::Probe,
            "y",
            "x*y + x",
            vec![int(-1), int(0)],
        ),
        (
            "puiseux_parabola",
            CommandName::Puiseux,
            "y^2 - x",
            "y",
            vec![int(0), int(1)],
        ),
        (
            "classify_jelonek",
            CommandName::Classify,
            "y",
            "x*y + x",
            vec![int(1), int(-1)],
        ),
        (
            "classify_fold",
            CommandName::Classify,
            "x^2 + y^2",
            "y^2 + x",
            vec![frac(1, 2)],
        ),
    ]
}

fn cli_stability() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..200 {
        let p = random::poly4(&mut rng, 6);
        let text = p.to_string();
        let back = parse_polynomial(&text).map_err(|e| format!("case {} '{}': {}", i, text, e))?;
        ensure!(back == p, "case {}: '{}' reparsed as {}", i, text, back);
        ensure!(back.to_string() == text, "case {}: printing not stable", i);
    }
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let cases = golden_cases();
    for (name, cmd, p, q, fibers) in &cases {
        let first = report(*cmd, p, q, fibers).to_json();
        let second = report(*cmd, p, q, fibers).to_json();
        ensure!(first == second, "{}: two runs differ", name);
        let path = golden_dir().join(format!("{}.json", name));
        if update {
            std::fs::create_dir_all(golden_dir()).map_err(|e| e.to_string())?;
            std::fs::write(&path, &first).map_err(|e| e.to_string())?;
        }
        let stored =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {}", path.display(), e))?;
        ensure!(stored == first, "{}: differs from golden file", name);
    }
    let cfg = Config {
        corpus: CorpusConfig {
            seed: 42,
            ..CorpusConfig::default()
        },
        ..Config::default()
    };
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for k in 0..2 {
        let CommandOutput::Corpus(text) =
            run_command(CommandName::Corpus, None, &cfg).map_err(|e| e.to_string())?
        else {
            return Err("corpus command produced a report".into());
        };
        let path = dir.path().join(format!("corpus{}.txt", k));
        std::fs::write(&path, text).map_err(|e| e.to_string())?;
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure!(files[0] == files[1], "corpus files differ");
    ensure!(
        files[0] == render(&generate(&cfg.corpus)).into_bytes(),
        "corpus command differs from the generator"
    );
    Ok(format!(
        "200 round trips, {} golden reports, corpus reproducible",
        cases.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("automorphism corpus soundness", automorphism_corpus),
        ("non-invertible maps rejected", converse_examples),
        (
            "remainder sequence vs Sylvester determinant",
            resultant_oracle,
        ),
        ("curve resultants are powers", curve_resultants),
        ("resultants over simple fields", minimal_polynomials),
        ("specialization of the parametric resultant", specialization),
        ("corpus resultants have exponent one", formanek),
        ("Puiseux residuals", puiseux_residuals),
        ("Jelonek map consistency", jelonek),
        ("probe reporting", probe_reports),
        ("CLI round trip and stability", cli_stability),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {:>2} {}: {} [{:.1}s]",
                i + 1,
                name,
                detail,
                secs
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL criterion {:>2} {}: {} [{:.1}s]",
                    i + 1,
                    name,
                    why,
                    secs
                );
            }
        }
    }
    if failed > 0 {
        println!("{} of {} criteria failed", failed, criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
