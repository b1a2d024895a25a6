//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use compshuffle::dyck::qt_catalan_paths;
use compshuffle::macdonald::nabla_pair;
use compshuffle::verify::{run_check, CheckReport, Status, PRINTED_C4, PRINTED_C4_ERRATA};
use compshuffle::Sym;

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

/// Runs the checks at `n_max` and demands a pass with the expected instance
/// counts (`None` skips the count).
fn checks(ids: &[(&str, u32, Option<usize>)]) -> Result<String, String> {
    let mut notes = Vec::new();
    for &(id, n_max, expected) in ids {
        let report: CheckReport = run_check(id, n_max).map_err(|e| e.to_string())?;
        if report.status != Status::Pass {
            let w = report.witnesses.first().map(|w| format!("{}: {} != {}", w.instance, w.lhs, w.rhs)).unwrap_or_default();
            return Err(format!("{id} {} ({} witnesses; first {w})", report.status, report.witnesses.len()));
        }
        if let Some(want) = expected {
            if report.instances != want {
                return Err(format!("{id} checked {} instances, expected {want}", report.instances));
            }
        }
        notes.push(format!("{id} {} [{}]", report.instances, report.range));
    }
    Ok(notes.join(", "))
}

fn catalan() -> Result<String, String> {
    for n in 1..=6 {
        let e = Sym::e(n);
        let algebraic = nabla_pair(&e, &e);
        let paths = qt_catalan_paths(n as u32);
        if algebraic != paths {
            return Err(format!("n={n}: {algebraic} != {paths}"));
        }
    }
    let c3 = nabla_pair(&Sym::e(3), &Sym::e(3)).to_string();
    if c3 != "q^3 + q^2*t + q*t + q*t^2 + t^3" {
        return Err(format!("n=3 renders as {c3}"));
    }
    Ok(format!("n=1..6 equal to path sums; C_3 = {c3}"))
}

fn tables() -> Result<String, String> {
    let note = checks(&[("paper_tables", 4, None)])?;
    let fixed: Vec<String> = PRINTED_C4_ERRATA
        .iter()
        .map(|(row, col, was, now)| format!("C{row:?} col {col}: printed {was}, computed {now}"))
        .collect();
    Ok(format!("{note}; {} of {} printed C rows carry a corrected entry ({})", fixed.len(), PRINTED_C4.len(), fixed.join("; ")))
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "q,t-Catalan", budget: Duration::from_secs(120), run: catalan },
    Criterion { number: 2, title: "n = 4 B/C tables", budget: Duration::from_secs(5), run: tables },
    Criterion {
        number: 3,
        title: "scalar conjectures",
        budget: Duration::from_secs(300),
        run: || checks(&[("conj_B_scalar", 6, Some(63)), ("conj_C_scalar", 6, Some(63))]),
    },
    Criterion {
        number: 4,
        title: "monomial conjectures",
        budget: Duration::from_secs(600),
        run: || checks(&[("conj_B_monomial", 5, Some(31)), ("conj_C_monomial", 5, Some(31))]),
    },
    Criterion {
        number: 5,
        title: "structure theorems",
        budget: Duration::from_secs(300),
        run: || {
            checks(&[
                ("en_sum_C", 6, Some(6)),
                ("hook_schur", 6, Some(21)),
                ("enk_partition_form", 6, None),
                ("enk_composition_form", 6, None),
                ("B_to_C", 6, Some(63)),
                ("C_to_B", 6, Some(63)),
                ("doff_inversion", 6, None),
            ])
        },
    },
    Criterion { number: 6, title: "E_nk recurrence", budget: Duration::from_secs(120), run: || checks(&[("enk_recurrence", 6, Some(21))]) },
    Criterion {
        number: 7,
        title: "operator grid",
        budget: Duration::from_secs(120),
        run: || checks(&[("op_commutations", 4, None), ("S_expansion", 4, None), ("BC_relation", 6, None)]),
    },
    Criterion {
        number: 8,
        title: "Macdonald layer",
        budget: Duration::from_secs(180),
        run: || checks(&[("macd_characterization", 6, Some(6)), ("nabla_eigen", 6, Some(29)), ("HL_specialization", 6, None)]),
    },
    Criterion {
        number: 9,
        title: "q = 1 proposition",
        budget: Duration::from_secs(120),
        run: || checks(&[("q1_B", 6, None), ("q1_C", 6, None)]),
    },
    Criterion { number: 10, title: "touch counts", budget: Duration::from_secs(30), run: || checks(&[("touch_counts", 7, None)]) },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "acceptance {:>2} {:<22} {} in {:.2}s (budget {}s): {detail}",
            c.number,
            c.title,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
