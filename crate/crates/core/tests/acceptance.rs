//! Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::test_runner::{Config, TestRunner};

use wordrep::census::{corpus, sweep, Source, SweepReport};
use wordrep::graph::{decompose, gen_cartesian_kn_k2};
use wordrep::{
    construct_word, find_ordering, representation_number, Letter, RepresentationNumber,
    SearchLimits, SimpleGraph, Word,
};

use common::props;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn micro_examples() -> Outcome {
    let start = Instant::now();
    let w = Word::from_digits("6345123215");
    ensure(
        w.initial_permutation() == Word::from_digits("634512"),
        "initial permutation",
    )?;
    ensure(
        w.final_permutation() == Word::from_digits("643215"),
        "final permutation",
    )?;
    let keep: BTreeSet<Letter> = [Letter(6), Letter(5)].into();
    ensure(
        w.restrict(&keep) == Word::from_digits("655"),
        "restriction to {6, 5}",
    )?;
    let factors: BTreeSet<Vec<Letter>> = ["2", "1", "3", "21", "13", "31", "213", "131", "2131"]
        .iter()
        .map(|s| Word::from_digits(s).letters().to_vec())
        .collect();
    ensure(
        Word::from_digits("2131").factors() == factors,
        "factors of 2131",
    )?;
    let host = Word::from_digits("421231423");
    ensure(host.is_factor(&Word::from_digits("123")), "123 is a factor")?;
    ensure(host.is_factor(&Word::from_digits("42")), "42 is a factor")?;
    let took = start.elapsed();
    ensure(took < Duration::from_millis(1), format!("took {took:?}"))?;
    Ok(format!("all exact in {took:?}"))
}

fn run_sweep() -> Result<(SweepReport, Duration), String> {
    let start = Instant::now();
    let instances = corpus(8, 200, 10, 1).map_err(|e| e.to_string())?;
    let report = sweep(&instances, &SearchLimits::default()).map_err(|e| e.to_string())?;
    Ok((report, start.elapsed()))
}

fn oracle_equivalence(r: &SweepReport, took: Duration) -> Outcome {
    let bad: Vec<usize> = r
        .instances
        .iter()
        .filter(|i| !i.agrees())
        .map(|i| i.id)
        .collect();
    ensure(
        bad.is_empty(),
        format!("disagreements on instances {bad:?}"),
    )?;
    ensure(took < Duration::from_secs(600), format!("took {took:?}"))?;
    Ok(format!(
        "{} instances ({} word-representable), 0 disagreements, {} partition-dependent, \
         {} disagreements under the literal condition 6, {took:.2?}",
        r.total, r.representable, r.partition_dependent, r.literal_disagreements
    ))
}

fn construction_validity(r: &SweepReport) -> Outcome {
    let recognised: Vec<_> = r.instances.iter().filter(|i| i.recognized).collect();
    let failed: Vec<usize> = recognised
        .iter()
        .filter(|i| i.word_verified != Some(true))
        .map(|i| i.id)
        .collect();
    ensure(
        failed.is_empty(),
        format!("construction failed on {failed:?}"),
    )?;
    Ok(format!(
        "{} of {} recognised instances give verified 3-uniform words",
        recognised.len(),
        recognised.len()
    ))
}

fn prism_numbers() -> Outcome {
    let start = Instant::now();
    let lim = SearchLimits::default();
    let mut got = Vec::new();
    for n in 2..=5 {
        let rn = representation_number(gen_cartesian_kn_k2(n).graph(), &lim)
            .map_err(|e| e.to_string())?;
        let want = if n == 2 {
            RepresentationNumber::Two
        } else {
            RepresentationNumber::Three
        };
        ensure(rn == want, format!("n = {n}: got {rn:?}"))?;
        got.push(format!("n={n}:{}", rn.value().unwrap()));
    }
    let prism = gen_cartesian_kn_k2(3);
    ensure(
        common::find_uniform_word(prism.graph(), 2).is_none(),
        "2-uniform word found for n = 3",
    )?;
    ensure(
        common::find_uniform_word(gen_cartesian_kn_k2(2).graph(), 2).is_some(),
        "2-uniform search misses the square",
    )?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), format!("took {took:?}"))?;
    Ok(format!(
        "{}; no 2-uniform word for n=3; {took:.2?}",
        got.join(" ")
    ))
}

fn complete_graphs() -> Outcome {
    let lim = SearchLimits::default();
    for k in 1..=8 {
        let g = SimpleGraph::complete(k);
        let rn = representation_number(&g, &lim).map_err(|e| e.to_string())?;
        ensure(rn == RepresentationNumber::One, format!("K{k}: {rn:?}"))?;
        let cb = decompose(&g).into_iter().next().ok_or("no partition")?;
        let cert = find_ordering(&cb, &lim)
            .map_err(|e| e.to_string())?
            .ok_or("no certificate")?;
        let w = construct_word(&cb, &cert).map_err(|e| e.to_string())?;
        ensure(
            w.uniformity() == Ok(Some(3)) && w.represents(&g) == Ok(true),
            format!("K{k} word"),
        )?;
    }
    Ok("K1..K8 have number 1 and verified 3-uniform words".into())
}

fn property_suites() -> Outcome {
    let cases = 1000;
    let config = || Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let run = |name: &str, res: Result<(), String>| res.map_err(|e| format!("{name}: {e}"));
    run(
        "cyclic shift",
        TestRunner::new(config())
            .run(&props::uniform_word(), props::cyclic_shift)
            .map_err(|e| e.to_string()),
    )?;
    run(
        "initial permutation prefix",
        TestRunner::new(config())
            .run(&props::any_word(), props::initial_permutation_prefix)
            .map_err(|e| e.to_string()),
    )?;
    run(
        "candidate superset",
        TestRunner::new(config())
            .run(&props::word_and_letter(), props::candidates_superset)
            .map_err(|e| e.to_string()),
    )?;
    run(
        "normalize",
        TestRunner::new(config())
            .run(&props::certificate_parts(), props::normalize_b_to_a_props)
            .map_err(|e| e.to_string()),
    )?;
    Ok(format!("4 suites x {cases} cases, 0 failures"))
}

fn negative_witness(r: &SweepReport) -> Outcome {
    let mut non: Vec<_> = r.non_representable().collect();
    ensure(
        !non.is_empty(),
        "no non-representable instance in the corpus",
    )?;
    non.sort_by_key(|i| (!matches!(i.source, Source::Random { .. }), i.m + i.n, i.id));
    let w = non[0];
    ensure(
        w.oracle_nodes > 0 && !w.recognized,
        "witness lacks an exhaustion record",
    )?;
    let origin = match &w.source {
        Source::Random { seed, p } => format!("random seed {seed}, p {p}"),
        Source::Exhaustive => "exhaustive enumeration".to_string(),
    };
    let smallest = r.non_representable().map(|i| i.m + i.n).min().unwrap();
    Ok(format!(
        "{} non-representable; e.g. instance {} ({origin}) rows {:?}, oracle exhausted after {} nodes; smallest has {smallest} vertices",
        non.len(),
        w.id,
        w.rows,
        w.oracle_nodes
    ))
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(msg)
    })
}

fn main() {
    let sweep = run_sweep();
    let from_sweep = |f: fn(&SweepReport, Duration) -> Outcome| -> Outcome {
        match &sweep {
            Ok((r, took)) => guarded(|| f(r, *took)),
            Err(e) => Err(format!("sweep failed: {e}")),
        }
    };
    let results: Vec<(u8, &str, Outcome)> = vec![
        (1, "micro examples", guarded(micro_examples)),
        (
            2,
            "oracle equivalence sweep",
            from_sweep(oracle_equivalence),
        ),
        (
            3,
            "construction validity",
            from_sweep(|r, _| construction_validity(r)),
        ),
        (4, "prism representation numbers", guarded(prism_numbers)),
        (5, "complete graphs", guarded(complete_graphs)),
        (6, "property suites", guarded(property_suites)),
        (
            7,
            "negative witness",
            from_sweep(|r, _| negative_witness(r)),
        ),
    ];
    let mut failed = 0;
    for (i, name, res) in &results {
        match res {
            Ok(detail) => println!("criterion {i} PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {i} FAIL {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
