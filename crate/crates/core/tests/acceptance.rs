//! Acceptance criteria, one pass/fail line each, with their time limits.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use kladder::cli::GraphDocument;
use kladder::corr::check_generating_system;
use kladder::corr::fiber::check_factorization;
use kladder::iterate::census::census_report;
use kladder::iterate::representation::{check_iota_phi, check_representation, check_veq};
use kladder::iterate::suites::{check_hexagon, check_mlem1, check_mlem2, check_module};
use kladder::kgraph::KGraph;
use kladder::kpalg::fuzz::check_kp;
use kladder::report::VerificationReport;

struct Entry {
    name: String,
    graph: KGraph,
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn documents(dir: &Path) -> Vec<(String, GraphDocument)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .expect("corpus directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, GraphDocument::load(&p).expect("corpus file parses"))
        })
        .collect()
}

fn corpus() -> Vec<Entry> {
    let mut docs = documents(&corpus_dir().join("valid"));
    docs.extend(documents(&corpus_dir().join("fuzz")));
    docs.into_iter()
        .map(|(name, doc)| Entry {
            graph: doc.build().unwrap_or_else(|e| panic!("{name}: {e}")),
            name,
        })
        .collect()
}

type Verdict = Result<String, String>;

/// Runs every report and fails on the first failing one.
fn all_pass(runs: impl IntoIterator<Item = (String, VerificationReport)>) -> Verdict {
    let mut suites = 0;
    let mut cases = 0;
    for (name, r) in runs {
        if !r.passed() {
            let f = r.failures.first();
            return Err(format!(
                "{name}/{}: {}",
                r.suite,
                f.map(|f| format!("{} | {} vs {}", f.input, f.lhs, f.rhs))
                    .unwrap_or_default()
            ));
        }
        suites += 1;
        cases += r.cases;
    }
    Ok(format!("{suites} reports, {cases} cases"))
}

fn criterion(n: u32, title: &str, limit: Duration, body: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let verdict = body();
    let took = start.elapsed();
    let (ok, detail) = match verdict {
        Ok(d) if took <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the {}s limit", limit.as_secs())),
        Err(e) => (false, e),
    };
    println!(
        "criterion {n:>2} {title:<32} {} ({:.2}s) {detail}",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64()
    );
    ok
}

fn validation(corpus: &[Entry]) -> Verdict {
    let expected = [
        ("ambiguous_square", "AmbiguousSquare"),
        ("cube_failure", "CubeFailure"),
        ("missing_square", "MissingSquare"),
        ("not_bijective", "NotBijective"),
        ("source_violation", "SourceViolation"),
    ];
    let docs = documents(&corpus_dir().join("invalid"));
    if docs.len() != expected.len() {
        return Err(format!("{} corrupted variants on disk", docs.len()));
    }
    for ((name, doc), (want_name, want_kind)) in docs.iter().zip(expected) {
        match doc.build() {
            Ok(_) => return Err(format!("{name} was accepted")),
            Err(e) if name == want_name && e.kind() == want_kind => {}
            Err(e) => return Err(format!("{name}: {} instead of {want_kind}", e.kind())),
        }
    }
    Ok(format!(
        "{} accepted, {} rejected",
        corpus.len(),
        docs.len()
    ))
}

fn named<'a>(corpus: &'a [Entry], names: &[&str]) -> Vec<&'a Entry> {
    corpus
        .iter()
        .filter(|e| names.contains(&e.name.as_str()))
        .collect()
}

fn json_run(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_kladder"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    Ok(out.stdout)
}

fn determinism() -> Verdict {
    let g3 = corpus_dir().join("valid/g3.json");
    let runs: [&[&str]; 2] = [
        &["--json", "verify", g3.to_str().unwrap(), "--suite", "all"],
        &["--json", "fuzz", "--seed", "7"],
    ];
    for args in runs {
        let first = json_run(args)?;
        if first != json_run(args)? {
            return Err(format!("{args:?} differs between runs"));
        }
    }
    Ok("verify and fuzz output byte-identical".into())
}

fn main() {
    let secs = Duration::from_secs;
    let mut results = Vec::new();
    let start = Instant::now();
    let corpus = corpus();
    let load = start.elapsed();

    results.push(criterion(
        1,
        "k-graph validation",
        secs(1).saturating_sub(load),
        || validation(&corpus),
    ));
    results.push(criterion(2, "factorization bijection", secs(30), || {
        all_pass(
            corpus
                .iter()
                .map(|e| (e.name.clone(), check_factorization(&e.graph, 6, false))),
        )
    }));
    results.push(criterion(3, "generating-system axioms", secs(30), || {
        all_pass(
            corpus
                .iter()
                .map(|e| (e.name.clone(), check_generating_system(&e.graph, false))),
        )
    }));
    results.push(criterion(4, "Kumjian-Pask algebra laws", secs(120), || {
        all_pass(
            corpus
                .iter()
                .map(|e| (e.name.clone(), check_kp(&e.graph, 200, 7, false))),
        )
    }));
    results.push(criterion(
        5,
        "representation and covariance",
        secs(120),
        || {
            all_pass(
                corpus
                    .iter()
                    .map(|e| (e.name.clone(), check_representation(&e.graph, 2, false))),
            )
        },
    ));
    results.push(criterion(6, "module flips and hexagon", secs(120), || {
        all_pass(corpus.iter().flat_map(|e| {
            let mut runs = vec![(e.name.clone(), check_hexagon(&e.graph, 1, false))];
            if e.graph.k() >= 3 {
                runs.push((e.name.clone(), check_module(&e.graph, 2, false)));
            }
            runs
        }))
    }));
    results.push(criterion(
        7,
        "merge and split identities",
        secs(120),
        || {
            all_pass(corpus.iter().flat_map(|e| {
                [
                    (e.name.clone(), check_mlem1(&e.graph, 1, false)),
                    (e.name.clone(), check_mlem2(&e.graph, 1, false)),
                ]
            }))
        },
    ));
    results.push(criterion(8, "stage identities", secs(120), || {
        all_pass(
            named(&corpus, &["g2", "g3", "g4"])
                .into_iter()
                .flat_map(|e| {
                    [
                        (e.name.clone(), check_veq(&e.graph, false)),
                        (e.name.clone(), check_iota_phi(&e.graph, 1, false)),
                    ]
                }),
        )
    }));
    results.push(criterion(9, "ladder census", secs(180), || {
        let mut runs: Vec<(String, VerificationReport)> = corpus
            .iter()
            .filter(|e| e.graph.k() == 2)
            .map(|e| (e.name.clone(), census_report(&e.graph, &[1], 2, false)))
            .collect();
        for e in named(&corpus, &["g3"]) {
            runs.push((e.name.clone(), census_report(&e.graph, &[1, 2], 1, false)));
        }
        all_pass(runs)
    }));
    results.push(criterion(10, "deterministic JSON", secs(120), determinism));

    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
