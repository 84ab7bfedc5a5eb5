//! Acceptance criteria, run as a plain binary so criteria execute one at a
//! time (the timing criterion must not share the CPU with the others).
//! Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use acsm::ingest::{gen_planted_pair, gen_random};
use acsm::measures::{compute, compute_with, dissimilarity_exact, oracle_acsm, Strategy};
use acsm::{
    acsm_similarity, approx_acsm, eacsm, DistanceMetric, Error, MatcherSpec, MeasureParams, Scope, SimilarityReport,
    SymbolMatrix,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {{
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    }};
}

/// One pair of the randomized corpus shared by several criteria.
struct Case {
    seed: u64,
    a: SymbolMatrix,
    b: SymbolMatrix,
    alpha: u64,
}

const CORPUS_SEED: u64 = 0x5eed_ac5e;
const CORPUS_SIZE: usize = 240;

fn random_square<R: Rng>(rng: &mut R, n: usize, alphabet: u32) -> SymbolMatrix {
    let symbols = (0..n * n).map(|_| rng.random_range(0..alphabet)).collect();
    SymbolMatrix::new(n, n, alphabet, symbols).unwrap()
}

fn corpus() -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..CORPUS_SIZE as u64)
        .map(|seed| {
            let n = rng.random_range(1..=12);
            let m = rng.random_range(1..=12);
            let alphabet = [2, 4, 8][rng.random_range(0..3)];
            let alpha = [1, 4][rng.random_range(0..2)];
            Case {
                seed,
                a: random_square(&mut rng, n, alphabet),
                b: random_square(&mut rng, m, alphabet),
                alpha,
            }
        })
        .collect()
}

fn scopes() -> Vec<Scope> {
    vec![
        Scope::Global,
        Scope::neighborhood(1).unwrap(),
        Scope::neighborhood(3).unwrap(),
        Scope::neighborhood(5).unwrap(),
    ]
}

fn matchers() -> Vec<MatcherSpec> {
    let mut out = vec![
        MatcherSpec::Exact,
        MatcherSpec::Interval(1),
        MatcherSpec::Interval(2),
        MatcherSpec::Interval(3),
    ];
    for metric in [DistanceMetric::HammingFraction, DistanceMetric::MeanAbsDiff] {
        for tau in [0.1, 0.3] {
            out.push(MatcherSpec::distance(metric, tau).unwrap());
        }
    }
    out
}

fn closed_form_self(n: usize) -> u64 {
    (1..=n as u64)
        .flat_map(|i| (1..=n as u64).map(move |j| i.min(j).pow(2)))
        .sum()
}

fn same_core(x: &SimilarityReport, y: &SimilarityReport) -> bool {
    x.s_numerator == y.s_numerator
        && x.s_denominator == y.s_denominator
        && x.p1 == y.p1
        && x.p2 == y.p2
        && x.w_map == y.w_map
}

fn admits_nothing(case: &Case) -> bool {
    let side = case.a.rows().min(case.b.rows()) as u64;
    side * side < case.alpha
}

// 1. every measure configuration equals the brute-force oracle exactly
fn oracle_equivalence(corpus: &[Case]) -> Outcome {
    let started = Instant::now();
    let mut checks = 0usize;
    for case in corpus {
        for scope in scopes() {
            for matcher in matchers() {
                let params = MeasureParams::new(case.alpha, scope, matcher, 0.0).unwrap();
                let oracle = oracle_acsm(&case.a, &case.b, case.alpha, scope, matcher);
                for strategy in [Strategy::Auto, Strategy::Direct, Strategy::OffsetTables] {
                    let got = compute_with(&case.a, &case.b, &params, strategy);
                    match (&oracle, &got) {
                        (Ok(o), Ok(g)) => ensure!(
                            same_core(o, g) && o.same_outcome(g),
                            "seed {} {scope:?} {matcher:?} {strategy:?}: S {}/{} vs oracle {}/{}",
                            case.seed,
                            g.s_numerator,
                            g.s_denominator,
                            o.s_numerator,
                            o.s_denominator
                        ),
                        (Err(Error::NoAdmissibleSubmatrix), Err(Error::NoAdmissibleSubmatrix)) => {
                            ensure!(admits_nothing(case), "seed {}: spurious admissibility error", case.seed)
                        }
                        _ => return Err(format!("seed {} {scope:?} {matcher:?}: result kinds differ", case.seed)),
                    }
                    checks += 1;
                }
            }
        }
        if admits_nothing(case) {
            continue;
        }
        // the named entry points
        let named = [
            (
                acsm_similarity(&case.a, &case.b, case.alpha).unwrap(),
                oracle_acsm(&case.a, &case.b, case.alpha, Scope::Global, MatcherSpec::Exact).unwrap(),
            ),
            (
                approx_acsm(&case.a, &case.b, case.alpha, 2).unwrap(),
                oracle_acsm(&case.a, &case.b, case.alpha, Scope::Global, MatcherSpec::Interval(2)).unwrap(),
            ),
            (
                eacsm(&case.a, &case.b, case.alpha, 3, DistanceMetric::MeanAbsDiff, 0.3, 0.0).unwrap(),
                oracle_acsm(
                    &case.a,
                    &case.b,
                    case.alpha,
                    Scope::neighborhood(3).unwrap(),
                    MatcherSpec::distance(DistanceMetric::MeanAbsDiff, 0.3).unwrap(),
                )
                .unwrap(),
            ),
        ];
        for (got, want) in &named {
            ensure!(
                same_core(got, want),
                "seed {}: named measure differs from oracle",
                case.seed
            );
            checks += 1;
        }
    }
    let elapsed = started.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?} (limit 60 s)");
    Ok(format!(
        "{} pairs, {checks} comparisons, all exact, {:.1} s",
        corpus.len(),
        elapsed.as_secs_f64()
    ))
}

// 2. S(A, A) = Σ min(i,j)² for acsm and eacsm
fn closed_form_self_similarity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for t in 0..50 {
        let n = rng.random_range(1..=16);
        let a = random_square(&mut rng, n, [2, 4, 8][t % 3]);
        let want = closed_form_self(n);
        let acsm = acsm_similarity(&a, &a, 1).unwrap();
        ensure!(acsm.s_numerator == want, "acsm n={n}: {} ≠ {want}", acsm.s_numerator);
        for epsilon in [1, 3] {
            for metric in [DistanceMetric::HammingFraction, DistanceMetric::MeanAbsDiff] {
                let e = eacsm(&a, &a, 1, epsilon, metric, 0.5, 0.0).unwrap();
                ensure!(
                    e.s_numerator == want,
                    "eacsm n={n} ε={epsilon}: {} ≠ {want}",
                    e.s_numerator
                );
            }
        }
    }
    Ok("50 matrices, acsm and eacsm (ε ∈ {1,3}) equal the closed form".into())
}

// 3. approx(I=1) and wide-ε near-exact eacsm reduce to acsm
fn reductions(corpus: &[Case]) -> Outcome {
    let mut checked = 0;
    for case in corpus.iter().filter(|c| !admits_nothing(c)) {
        let (n, m) = (case.a.rows(), case.b.rows());
        let exact = acsm_similarity(&case.a, &case.b, case.alpha).unwrap();
        let approx = approx_acsm(&case.a, &case.b, case.alpha, 1).unwrap();
        ensure!(exact.same_outcome(&approx), "seed {}: approx(I=1) differs", case.seed);
        let side = n.min(m);
        let tau = 1.0 / (2.0 * (side * side) as f64);
        let wide = eacsm(
            &case.a,
            &case.b,
            case.alpha,
            2 * n.max(m) + 1,
            DistanceMetric::HammingFraction,
            tau,
            0.0,
        )
        .unwrap();
        ensure!(exact.same_outcome(&wide), "seed {}: wide eacsm differs", case.seed);
        checked += 1;
    }
    Ok(format!("{checked} pairs, both reductions exact"))
}

// 4. S is monotone in alpha, tau and epsilon
fn monotonicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut violations = Vec::new();
    let mut checks = 0;
    for t in 0..20 {
        let n = rng.random_range(3..=12);
        let m = rng.random_range(3..=12);
        let alphabet = [2, 3, 4][t % 3];
        let a = random_square(&mut rng, n, alphabet);
        let b = random_square(&mut rng, m, alphabet);

        let numer = |alpha: u64, scope: Scope, matcher: MatcherSpec| {
            compute(&a, &b, &MeasureParams::new(alpha, scope, matcher, 0.0).unwrap())
                .unwrap()
                .s_numerator
        };
        let series = |label: String, values: Vec<u64>, increasing: bool, out: &mut Vec<String>| {
            let ok = values
                .windows(2)
                .all(|w| if increasing { w[0] <= w[1] } else { w[0] >= w[1] });
            if !ok {
                out.push(format!("{label}: {values:?}"));
            }
        };
        for (scope, matcher) in [
            (Scope::Global, MatcherSpec::Exact),
            (
                Scope::neighborhood(3).unwrap(),
                MatcherSpec::distance(DistanceMetric::MeanAbsDiff, 0.3).unwrap(),
            ),
        ] {
            let values = [1, 2, 4, 9].iter().map(|&alpha| numer(alpha, scope, matcher)).collect();
            series(format!("pair {t} alpha {scope:?}"), values, false, &mut violations);
            checks += 1;
        }
        for metric in [DistanceMetric::HammingFraction, DistanceMetric::MeanAbsDiff] {
            let values = [0.05, 0.1, 0.2, 0.4]
                .iter()
                .map(|&tau| {
                    numer(
                        1,
                        Scope::neighborhood(3).unwrap(),
                        MatcherSpec::distance(metric, tau).unwrap(),
                    )
                })
                .collect();
            series(format!("pair {t} tau {metric}"), values, true, &mut violations);
            checks += 1;
        }
        for matcher in [
            MatcherSpec::Exact,
            MatcherSpec::distance(DistanceMetric::HammingFraction, 0.2).unwrap(),
        ] {
            let values = [1, 3, 5, 9]
                .iter()
                .map(|&eps| numer(1, Scope::neighborhood(eps).unwrap(), matcher))
                .collect();
            series(format!("pair {t} epsilon {matcher:?}"), values, true, &mut violations);
            checks += 1;
        }
    }
    ensure!(
        violations.is_empty(),
        "{} violations: {}",
        violations.len(),
        violations.join("; ")
    );
    Ok(format!("20 pairs, {checks} sweeps, 0 violations"))
}

// 5. constant A against a B sharing one cell is gated
fn gate_reproduction() -> Outcome {
    for n in 2..=8usize {
        let a = SymbolMatrix::new(n, n, 7, vec![5; n * n]).unwrap();
        let mut cells = vec![6; n * n];
        cells[0] = 5;
        let b = SymbolMatrix::new(n, n, 7, cells).unwrap();
        let total = (n * n) as f64;
        let epsilon = 2 * n + 1;
        for p0 in [1.0 / total + 1e-9, 0.5, 1.0] {
            let r = eacsm(&a, &b, 1, epsilon, DistanceMetric::HammingFraction, 0.1, p0).unwrap();
            ensure!(r.p1 == 1.0, "n={n}: p1 = {}", r.p1);
            ensure!(
                r.distinct_anchors == 1 && r.p2 == 1.0 / total,
                "n={n}: p2 = {} (expected 1/{})",
                r.p2,
                n * n
            );
            ensure!(r.gated, "n={n} p0={p0}: not gated");
            ensure!(r.dissimilarity == 1.0, "n={n}: D = {}", r.dissimilarity);
        }
        // strict inequality: p0 = 1/n² does not gate
        let r = eacsm(&a, &b, 1, epsilon, DistanceMetric::HammingFraction, 0.1, 1.0 / total).unwrap();
        ensure!(!r.gated, "n={n}: gated at p0 = 1/n²");
    }
    Ok("n = 2..8: p1 = 1, p2 = 1/n², gated for p0 > 1/n², D = 1".into())
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

// 6. neighbourhood restriction: ε² cost scaling and speedup over global ACSM
fn complexity_trend() -> Outcome {
    let started = Instant::now();
    let a = gen_random(128, 8, 61).unwrap();
    let b = gen_random(128, 8, 62).unwrap();
    let time = |run: &dyn Fn() -> SimilarityReport| {
        let mut samples = Vec::new();
        for _ in 0..5 {
            let t = Instant::now();
            std::hint::black_box(run());
            samples.push(t.elapsed());
        }
        median(samples)
    };
    let eacsm_at = |epsilon: usize| {
        let (a, b) = (&a, &b);
        time(&move || eacsm(a, b, 1, epsilon, DistanceMetric::HammingFraction, 0.25, 0.0).unwrap())
    };
    // warm-up
    eacsm(&a, &b, 1, 5, DistanceMetric::HammingFraction, 0.25, 0.0).unwrap();
    let e5 = eacsm_at(5);
    let e9 = eacsm_at(9);
    let e17 = eacsm_at(17);
    let global = time(&|| acsm_similarity(&a, &b, 1).unwrap());
    let speedup = global.as_secs_f64() / e9.as_secs_f64();
    let scaling = e17.as_secs_f64() / e5.as_secs_f64();
    let elapsed = started.elapsed();
    let summary = format!(
        "medians: acsm {:.2} s, eacsm ε=5 {:.3} s, ε=9 {:.3} s, ε=17 {:.3} s; speedup(ε=9) {speedup:.1}×, t(17)/t(5) {scaling:.2}, {:.0} s total",
        global.as_secs_f64(),
        e5.as_secs_f64(),
        e9.as_secs_f64(),
        e17.as_secs_f64(),
        elapsed.as_secs_f64()
    );
    ensure!(speedup >= 10.0, "speedup below 10×; {summary}");
    ensure!((4.0..=16.0).contains(&scaling), "ε² scaling outside [4, 16]; {summary}");
    ensure!(
        elapsed < Duration::from_secs(300),
        "over the 5 minute budget; {summary}"
    );
    Ok(summary)
}

// 7. D(A,A) = 0, exact symmetry, range, and the worked value 4/7
fn dissimilarity_contract(corpus: &[Case]) -> Outcome {
    let mut checked = 0;
    for case in corpus.iter().filter(|c| !admits_nothing(c)) {
        for params in [
            MeasureParams::new(case.alpha, Scope::Global, MatcherSpec::Exact, 0.0).unwrap(),
            MeasureParams::new(case.alpha, Scope::Global, MatcherSpec::Interval(2), 0.0).unwrap(),
            MeasureParams::new(
                case.alpha,
                Scope::neighborhood(3).unwrap(),
                MatcherSpec::distance(DistanceMetric::MeanAbsDiff, 0.3).unwrap(),
                0.0,
            )
            .unwrap(),
        ] {
            let ab = compute(&case.a, &case.b, &params).unwrap();
            let ba = compute(&case.b, &case.a, &params).unwrap();
            ensure!(
                ab.dissimilarity_exact == ba.dissimilarity_exact,
                "seed {}: D(a,b) = {} ≠ D(b,a) = {}",
                case.seed,
                ab.dissimilarity_exact,
                ba.dissimilarity_exact
            );
            ensure!(
                (0.0..=1.0).contains(&ab.dissimilarity),
                "seed {}: D = {}",
                case.seed,
                ab.dissimilarity
            );
            for x in [&case.a, &case.b] {
                let own = compute(x, x, &params).unwrap();
                ensure!(
                    own.dissimilarity_exact == Ratio::from_integer(0),
                    "seed {}: D(x,x) ≠ 0",
                    case.seed
                );
            }
            checked += 1;
        }
    }
    let a = SymbolMatrix::from_rows(6, &[[1, 2], [3, 4]]).unwrap();
    let b = SymbolMatrix::from_rows(6, &[[1, 2], [3, 5]]).unwrap();
    let r = acsm_similarity(&a, &b, 1).unwrap();
    ensure!(
        (r.dissimilarity - 4.0 / 7.0).abs() <= 1e-12,
        "worked pair D = {}",
        r.dissimilarity
    );
    let d = dissimilarity_exact(Ratio::new(3, 4), Ratio::new(3, 4), 2, 2, 1).unwrap();
    ensure!(d == Ratio::new(4, 7), "exact worked D = {d}");
    Ok(format!(
        "{checked} configurations symmetric and in [0,1]; worked pair D = {:.12}",
        r.dissimilarity
    ))
}

// 8. a planted block guarantees a lower bound on W at its anchor
fn planted_block_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for t in 0..30u64 {
        let k = [2, 3, 4][(t % 3) as usize];
        let n = rng.random_range(k..=12);
        let m = rng.random_range(k..=12);
        let pair = gen_planted_pair(n, m, [2, 4, 8][rng.random_range(0..3)], k, 800 + t).unwrap();
        let (i, j) = pair.block_anchor;
        let bound = k.min(i).min(j).min(m).pow(2) as u64;
        for scope in [
            Scope::neighborhood(1).unwrap(),
            Scope::neighborhood(2 * n.max(m) + 1).unwrap(),
            Scope::Global,
        ] {
            let params = MeasureParams::new(1, scope, MatcherSpec::Exact, 0.0).unwrap();
            let r = compute(&pair.a, &pair.b, &params).unwrap();
            let w = r.w_map.get(i, j).w;
            ensure!(w >= bound, "pair {t} {scope:?}: w({i},{j}) = {w} < {bound}");
        }
    }
    Ok("30 planted pairs, 0 violations".into())
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_acsm"))
        .args(args)
        .output()
        .expect("spawn acsm");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

// 9. CLI exit codes, JSON schema and tie ordering
fn cli_black_box() -> Outcome {
    let a = fixture("a.csv");
    let b = fixture("b.csv");
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());

    let (code, stdout, stderr) = run_cli(&["compare", a, b, "--measure", "acsm", "--alpha", "1"]);
    ensure!(code == 0, "compare exit {code}: {stderr}");
    let doc: serde_json::Value = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    let mut keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    let mut want = vec![
        "measure",
        "params",
        "n",
        "m",
        "s_numerator",
        "s_denominator",
        "s_normalized",
        "dissimilarity",
        "p1",
        "p2",
        "gated",
        "elapsed_ms",
    ];
    want.sort();
    ensure!(keys == want, "field set {keys:?}");
    ensure!(
        doc["s_numerator"] == 3 && doc["s_denominator"] == 4,
        "S = {}/{}",
        doc["s_numerator"],
        doc["s_denominator"]
    );
    let d = doc["dissimilarity"].as_f64().unwrap();
    ensure!((d - 4.0 / 7.0).abs() < 1e-12, "D = {d}");

    let (code, stdout, _) = run_cli(&["compare", b, a, "--measure", "acsm"]);
    let rev: serde_json::Value = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    ensure!(
        code == 0 && rev["dissimilarity"].as_f64() == Some(d),
        "compare(b,a) D differs"
    );

    let (code, stdout, _) = run_cli(&[
        "compare",
        a,
        a,
        "--measure",
        "eacsm",
        "--alpha",
        "1",
        "--epsilon",
        "3",
        "--metric",
        "mad",
        "--tau",
        "0.5",
        "--p0",
        "0",
        "--dump-w",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    ensure!(
        code == 0 && doc["dissimilarity"] == 0.0 && doc["gated"] == false,
        "self eacsm: {stdout}"
    );
    ensure!(
        doc["w_map"].as_array().map(Vec::len) == Some(2),
        "w_map missing with --dump-w"
    );

    let (code, _, stderr) = run_cli(&["compare", a, fixture("b3x2.csv").to_str().unwrap()]);
    ensure!(
        code == 2 && stderr.contains("matrix must be square"),
        "non-square: exit {code}, {stderr}"
    );
    let (code, _, _) = run_cli(&["compare", a, b, "--measure", "acsm", "--tau", "0.5"]);
    ensure!(code == 2, "irrelevant flag accepted (exit {code})");
    let (code, _, _) = run_cli(&["compare", a, "/nonexistent/x.csv"]);
    ensure!(code == 2, "missing file exit {code}");

    let gated = run_cli(&[
        "compare",
        fixture("const.pgm").to_str().unwrap(),
        fixture("lone.pgm").to_str().unwrap(),
        "--measure",
        "eacsm",
        "--epsilon",
        "5",
        "--metric",
        "hamming",
        "--tau",
        "0.1",
        "--p0",
        "0.5",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&gated.1).map_err(|e| e.to_string())?;
    ensure!(
        gated.0 == 0 && doc["gated"] == true && doc["dissimilarity"] == 1.0,
        "gated compare: {}",
        gated.1
    );

    let corpus = fixture("corpus");
    let (code, stdout, stderr) = run_cli(&[
        "retrieve",
        fixture("query.csv").to_str().unwrap(),
        corpus.to_str().unwrap(),
        "--k",
        "3",
    ]);
    ensure!(code == 0, "retrieve exit {code}: {stderr}");
    let doc: serde_json::Value = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    let paths: Vec<String> = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["path"].as_str().unwrap().to_string())
        .collect();
    ensure!(paths.len() == 3, "k=3 returned {}", paths.len());
    ensure!(
        paths[0].ends_with("digits/copy_a.csv") && paths[1].ends_with("letters/copy_b.csv"),
        "tie order {paths:?}"
    );
    ensure!(doc["results"][0]["dissimilarity"] == 0.0, "exact copy not at D = 0");
    ensure!(doc["skipped"] == 1, "skipped = {}", doc["skipped"]);

    let (code, stdout, _) = run_cli(&[
        "retrieve",
        fixture("query.csv").to_str().unwrap(),
        corpus.to_str().unwrap(),
        "--k",
        "50",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout).map_err(|e| e.to_string())?;
    ensure!(
        code == 0 && doc["results"].as_array().map(Vec::len) == Some(5),
        "k clamping: {stdout}"
    );

    Ok("exit codes 0/2, exact JSON field set, symmetric D, gating exit 0, retrieval ties by path".into())
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 oracle equivalence", Box::new(|| oracle_equivalence(&corpus))),
        ("2 closed-form self-similarity", Box::new(closed_form_self_similarity)),
        ("3 reductions", Box::new(|| reductions(&corpus))),
        ("4 monotonicity sweeps", Box::new(monotonicity)),
        ("5 gate reproduction", Box::new(gate_reproduction)),
        ("6 complexity trend", Box::new(complexity_trend)),
        ("7 dissimilarity contract", Box::new(|| dissimilarity_contract(&corpus))),
        ("8 planted-block bound", Box::new(planted_block_bound)),
        ("9 CLI black-box", Box::new(cli_black_box)),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
