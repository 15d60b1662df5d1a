// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use periodic_circuits::bundled::{bundled_circuit, Database};
use periodic_circuits::search::{
    certify_lower_bound, classify_type, conjecture_scan, linear_period_scan, SearchBudget,
    SearchOutcome,
};
use periodic_circuits::spectral::{dft, postselect_input_state, verify_periodicity};
use periodic_circuits::synthesis::{synth_pow2_minus1, synth_pow2_plus1};
use periodic_circuits::{classify, synth, text, CostReport};
use proptest::test_runner::{Config, TestRunner};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn table_reproduction() -> Check {
    let start = Instant::now();
    let blocks = common::reference_tables();
    ensure(blocks.len() == 15, || {
        format!("{} tables in fixture", blocks.len())
    })?;
    for b in &blocks {
        let c = bundled_circuit(b.p).map_err(|e| e.to_string())?;
        let t = c.truth_table().map_err(|e| e.to_string())?;
        let want: Vec<u64> = b.rows.iter().map(|r| r.1).collect();
        ensure(t.values() == want.as_slice(), || {
            format!("S{} table differs", b.p)
        })?;
        let cost = c.cost();
        ensure(cost == common::expected_cost(b.p), || {
            format!("S{} cost {cost}", b.p)
        })?;
    }
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!("15 tables and costs exact ({t:.2?})"))
}

fn monoperiodicity_sweep() -> Check {
    let mut checked = 0;
    for p in (2..=31).chain((32..=62).step_by(2)) {
        let c = synth(p).map_err(|e| format!("p={p}: {e}"))?;
        let r = classify(&c.truth_table().map_err(|e| e.to_string())?);
        ensure(
            r.fundamental_period == p && r.injective_within_period && r.monoperiodic,
            || format!("p={p}: {r:?}"),
        )?;
        checked += 1;
    }
    Ok(format!("{checked} periods in [2, 31] and even lifts to 62"))
}

fn pattern_cost_laws() -> Check {
    for k in 1..=5u32 {
        let c = synth_pow2_plus1(k).map_err(|e| e.to_string())?.cost();
        let want = CostReport::new(k as usize, k as usize + 1);
        ensure(c == want, || format!("2^{k}+1: {c}"))?;
    }
    for k in 2..=5u32 {
        let c = synth_pow2_minus1(k).map_err(|e| e.to_string())?.cost();
        let want = CostReport::new(k as usize - 1, k as usize + 1);
        ensure(c == want, || format!("2^{k}-1: {c}"))?;
    }
    Ok("(k, k+1) for k=1..5 and (k-1, k+1) for k=2..5".into())
}

fn conjecture_consistency() -> Check {
    let db = Database::embedded();
    for (p, c) in db.iter() {
        let class = classify_type(p).map_err(|e| e.to_string())?;
        let actual = c.cost().n_toffoli;
        ensure(class.predicted_toffoli == actual, || {
            format!(
                "p={p}: predicted {} actual {actual}",
                class.predicted_toffoli
            )
        })?;
    }
    let report = conjecture_scan(5).map_err(|e| e.to_string())?;
    for row in &report.census {
        ensure(row.type_b == row.n as u64 - 1, || {
            format!("n={}: {} type B", row.n, row.type_b)
        })?;
    }
    ensure(report.census.len() == 4, || "census rows".into())?;
    Ok("15 predictions match, type-B census n-1 for n=2..5".into())
}

fn minimality_certificates() -> Check {
    let start = Instant::now();
    for (n, matrices) in [(2, 16), (3, 512), (4, 65536)] {
        let r = linear_period_scan(n).map_err(|e| e.to_string())?;
        ensure(r.matrices == matrices, || {
            format!("n={n}: {} matrices", r.matrices)
        })?;
        ensure(r.odd_monoperiodic.is_empty(), || {
            format!("n={n}: odd-period linear maps {:?}", r.odd_monoperiodic)
        })?;
    }
    let linear = within(Duration::from_secs(10), start)?;

    let start = Instant::now();
    let budget = SearchBudget::default();
    for (p, below) in [(3, 0), (5, 1), (7, 1)] {
        let outcome = certify_lower_bound(p, below, &budget).map_err(|e| e.to_string())?;
        ensure(matches!(outcome, SearchOutcome::Exhausted { .. }), || {
            format!("p={p} N_T<={below}: {}", outcome.certificate())
        })?;
    }
    let search = within(Duration::from_secs(300), start)?;
    Ok(format!(
        "no odd linear maps for n=2..4 ({linear:.2?}); N_T lower bounds for 3, 5, 7 ({search:.2?})"
    ))
}

fn spectral_validation() -> Check {
    let start = Instant::now();
    let db = Database::embedded();
    for (p, c) in db.iter() {
        let v = verify_periodicity(c, p, 0.405).map_err(|e| e.to_string())?;
        ensure(v.passed, || {
            format!("S{p} fails its own period: {:?}", v.min_mass())
        })?;
        for y in c.truth_table().map_err(|e| e.to_string())?.image() {
            let total = dft(&postselect_input_state(c, y).map_err(|e| e.to_string())?).total();
            ensure((total - 1.0).abs() < 1e-9, || {
                format!("S{p} y={y}: total {total}")
            })?;
        }
    }
    let s3 = db.circuit(3).map_err(|e| e.to_string())?;
    for q in [5, 7] {
        let v = verify_periodicity(s3, q, 0.405).map_err(|e| e.to_string())?;
        ensure(!v.passed, || format!("S3 passes q={q}"))?;
    }
    let spectrum = dft(&postselect_input_state(s3, 0).map_err(|e| e.to_string())?);
    // uniform over {0, 3}: |1 + i^(3k)|^2 / 8
    let anchor = [0.5, 0.25, 0.0, 0.25];
    for (k, (&got, want)) in spectrum.probabilities().iter().zip(anchor).enumerate() {
        ensure((got - want).abs() < 1e-12, || {
            format!("S3 y=0 bin {k}: {got}")
        })?;
    }
    let t = within(Duration::from_secs(5), start)?;
    Ok(format!(
        "15 circuits pass, S3 rejects q=5,7, anchor exact ({t:.2?})"
    ))
}

fn format_round_trip() -> Check {
    let db = Database::embedded();
    let mut files = 0;
    for (p, c) in db.iter() {
        let parsed =
            text::parse(db.source(p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(&parsed == c, || format!("S{p} source parse"))?;
        let again = text::parse(&text::render(c)).map_err(|e| e.to_string())?;
        ensure(&again == c, || format!("S{p} round trip"))?;
        files += 1;
    }
    let mut runner = TestRunner::new(Config {
        failure_persistence: None,
        ..Config::with_cases(100)
    });
    runner
        .run(&common::arb_circuit(), |c| {
            let back = text::parse(&text::render(&c)).expect("rendered circuit parses");
            proptest::prop_assert_eq!(back, c);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!("{files} bundled files and 100 random circuits"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 table reproduction", table_reproduction),
        ("2 monoperiodicity sweep", monoperiodicity_sweep),
        ("3 pattern cost laws", pattern_cost_laws),
        ("4 conjecture consistency", conjecture_consistency),
        ("5 minimality certificates", minimality_certificates),
        ("6 spectral validation", spectral_validation),
        ("7 format round-trip", format_round_trip),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} of 7 criteria passed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
