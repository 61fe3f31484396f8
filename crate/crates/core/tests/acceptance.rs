//! Acceptance run: one pass/fail line per criterion, each backed by a full suite run.

use std::process::ExitCode;
use std::time::Instant;

use klr_core::suites::{run_suite, thread_pool, Report, Status, SuiteContext, SuiteParams};

struct Criterion {
    number: u32,
    title: &'static str,
    suite: &'static str,
    params: SuiteParams,
    /// Extra condition on the report beyond `passed()`, with its description.
    extra: Option<(&'static str, fn(&Report) -> bool)>,
}

fn keje_example(r: &Report) -> bool {
    r.instances.iter().any(|i| {
        i.lambda == "9|9 e=3"
            && i.expected == "(9,6,3,6,4,2,3,2,1)"
            && i.computed == i.expected
            && i.status == Status::Pass
    })
}

fn criteria() -> Vec<Criterion> {
    let plain = |number, title, suite| Criterion {
        number,
        title,
        suite,
        params: SuiteParams::default(),
        extra: None,
    };
    vec![
        plain(1, "relation axioms, n ≤ 8, chars 0/2/3, e = 2/3", "relations"),
        plain(2, "oracle equivalence, n ≤ 8", "oracle"),
        plain(3, "basis and brick weight-space grading", "basis"),
        plain(4, "small-bihook classification, e = 3/4", "small-bihooks"),
        plain(5, "switch scalar φ(v_t), e = 3/4", "smallphivt"),
        plain(6, "cancellation identities, e = 2/3", "cancellation"),
        Criterion {
            extra: Some(("((9),(9)) coefficients (9,6,3,6,4,2,3,2,1)", keje_example)),
            ..plain(7, "explicit endomorphism of ((ke),(je))", "keje")
        },
        Criterion {
            params: SuiteParams {
                e: Some(3),
                char: Some(0),
                ..SuiteParams::default()
            },
            ..plain(8, "eigenvalues and eigenvectors, e = 3 over ℚ", "keje-eigen")
        },
        plain(9, "((3),(3k)) decomposable iff char ∤ k+1", "kee"),
        plain(10, "e = 2 sign pinning: exactly one convention", "e2-pin"),
        plain(11, "conjecture scans, e = 3 n ≤ 12 and e = 2 n ≤ 10", "conjecture-scan"),
        plain(12, "conjugation, regularity and κ1 ≠ κ2 cross-checks", "consistency"),
    ]
}

fn counts(r: &Report) -> String {
    r.summary
        .counts
        .iter()
        .map(|(s, n)| format!("{} {n}", s.as_str()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> ExitCode {
    let pool = thread_pool(None);
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let ctx = SuiteContext::new(c.params.clone());
        let outcome = pool.install(|| run_suite(c.suite, &ctx));
        let secs = start.elapsed().as_secs_f64();
        let (ok, detail) = match outcome {
            Err(err) => (false, format!("error: {err}")),
            Ok(report) => {
                let mut ok = report.passed();
                let mut detail = format!("{} instances ({})", report.summary.total, counts(&report));
                if let Some((what, check)) = c.extra {
                    let held = check(&report);
                    ok &= held;
                    detail.push_str(&format!("; {what}: {}", if held { "yes" } else { "no" }));
                }
                if let Some(first) = report.failures().next() {
                    detail.push_str(&format!(
                        "; first failure: {} expected {}, computed {}",
                        first.lambda, first.expected, first.computed
                    ));
                }
                (ok, detail)
            }
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{}] {}: {} [{}, {secs:.1}s]",
            c.number,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            detail,
            c.suite
        );
    }
    println!("{} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
