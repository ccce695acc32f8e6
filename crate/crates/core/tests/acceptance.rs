//! Runs the ten acceptance criteria and prints one line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use a2spider::report::Report;
use a2spider::suites;
use a2spider::Result;

type Criterion = (&'static str, fn() -> Result<Report>);

fn criteria() -> Vec<Criterion> {
    vec![
        ("relation sanity", suites::relation_sanity),
        ("clasp suite, k+l <= 4", || suites::clasp_suite(4)),
        ("ladder expansion, k <= 5", || suites::ladder_suite(5)),
        ("turnback vanishing, k <= 4", || suites::x_vanish_suite(4)),
        ("double clasp recursion", suites::recursion_suite),
        ("closure trace, k+l <= 4", || suites::trace_suite(4)),
        ("split sum witnesses", suites::witness_suite),
        ("chebyshev layer, k+l <= 8", || Ok(suites::chebyshev_suite(8))),
        ("braiding", suites::braiding_suite),
        ("confluence fuzz, 100 x 5", || Ok(suites::confluence_suite(7))),
    ]
}

fn main() -> ExitCode {
    let list = criteria();
    let results: Vec<(Result<Report>, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = list
            .iter()
            .map(|(_, f)| {
                let f = *f;
                std::thread::Builder::new()
                    .stack_size(64 << 20)
                    .spawn_scoped(s, move || {
                        let t = Instant::now();
                        let r = f();
                        (r, t.elapsed())
                    })
                    .unwrap()
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut all = true;
    for (n, ((name, _), (res, took))) in list.iter().zip(results).enumerate() {
        let (ok, note) = match &res {
            Ok(r) => (r.passed(), format!("{} checks", r.checks.len())),
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        println!("criterion {:>2} {}: {} ({note}, {:.1}s)", n + 1, if ok { "PASS" } else { "FAIL" }, name, took.as_secs_f64());
        if let Ok(r) = &res {
            for c in r.failures() {
                println!("    failed: {}{}", c.name, c.detail.as_ref().map(|d| format!(" ({d})")).unwrap_or_default());
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
