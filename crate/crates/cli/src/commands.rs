use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::json;

use wordrep::census::{corpus, sweep, Source};
use wordrep::graph::{decompose, gen_cartesian_kn_k2, gen_complete_cobip, gen_random_cobip};
use wordrep::io::{
    parse_graph, parse_orientation, parse_word, write_cobipartite_json, write_edge_list, GraphInput,
};
use wordrep::orient::{find_transitive, search_semi_transitive};
use wordrep::{
    construct_word, find_ordering, recognize, representation_number, CoBipartite, Error,
    OrderingCertificate, SearchLimits, SimpleGraph,
};

use crate::report::{Partition, RunReport, Verdict};
use crate::{Cli, Command, GenKind};

pub const VERDICT_TRUE: u8 = 0;
pub const VERDICT_FALSE: u8 = 1;
pub const FAILURE: u8 = 2;

fn read_source(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graph(path: &Path) -> Result<GraphInput> {
    let text = read_source(path)?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(cli: &Cli, value: serde_json::Value, text: impl FnOnce() -> String) {
    if cli.json {
        println!("{value}");
    } else {
        print!("{}", text());
    }
}

pub fn run(cli: &Cli) -> Result<u8> {
    let limits = cli.limits();
    match &cli.command {
        Command::Recognize(input) => cmd_recognize(cli, &input.input, &limits),
        Command::Word(input) => cmd_word(cli, &input.input, &limits),
        Command::Repnum(input) => cmd_repnum(cli, &input.input, &limits),
        Command::Oracle { input, orientation } => {
            cmd_oracle(cli, &input.input, orientation.as_deref(), &limits)
        }
        Command::Verify {
            input,
            word,
            word_file,
        } => {
            let text = match (word, word_file) {
                (Some(w), _) => w.clone(),
                (None, Some(p)) => read_source(p)?,
                (None, None) => bail!("give the word with --word or --word-file"),
            };
            cmd_verify(cli, &input.input, &text)
        }
        Command::Gen { kind } => cmd_gen(cli, kind),
        Command::Sweep {
            max_vertices,
            random,
            max_random_vertices,
            seed,
        } => cmd_sweep(
            cli,
            *max_vertices,
            *random,
            *max_random_vertices,
            *seed,
            &limits,
        ),
    }
}

// Certificate for the input, trying a supplied partition before the others.
fn certify(
    input: &GraphInput,
    limits: &SearchLimits,
) -> wordrep::Result<Option<(CoBipartite, OrderingCertificate)>> {
    if let GraphInput::CoBipartite(cb) = input {
        if let Some(cert) = find_ordering(cb, limits)? {
            return Ok(Some((cb.clone(), cert)));
        }
    }
    Ok(recognize(input.graph(), limits)?.map(|r| (r.partition, r.certificate)))
}

fn cap_or<T>(r: wordrep::Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e @ Error::CapExceeded { .. }) => Ok(Err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn build_report(path: &Path, limits: &SearchLimits) -> Result<RunReport> {
    let input = load_graph(path)?;
    let g = input.graph().clone();
    let mut report = RunReport::new(path.display().to_string(), g.n(), g.edge_count());
    if report.timed("decompose", || decompose(&g)).is_empty() {
        return Err(Error::NotCoBipartite.into());
    }
    let found = match cap_or(report.timed("recognize", || certify(&input, limits)))? {
        Ok(found) => found,
        Err(msg) => {
            report.verdict = Verdict::CapExceeded;
            report.note = Some(msg);
            return Ok(report);
        }
    };
    match found {
        Some((cb, cert)) => {
            let word = report.timed("construct", || construct_word(&cb, &cert))?;
            report.verdict = Verdict::Representable;
            report.word = Some(word.to_string());
            report.partition = Some(Partition {
                x: cb.x().to_vec(),
                y: cb.y().to_vec(),
            });
            report.certificate = Some(cert);
            let rn = if g.is_complete() {
                Ok(Some(1))
            } else {
                cap_or(report.timed("comparability", || find_transitive(&g, limits)))?
                    .map(|t| Some(if t.is_some() { 2 } else { 3 }))
            };
            match rn {
                Ok(k) => report.representation_number = k,
                Err(msg) => report.note = Some(format!("representation number unknown: {msg}")),
            }
        }
        None => match cap_or(report.timed("oracle", || search_semi_transitive(&g, limits)))? {
            Ok(outcome) => {
                if outcome.orientation.is_some() {
                    bail!("recognition and oracle disagree on {}", path.display());
                }
                report.oracle_nodes = Some(outcome.nodes);
                report.note = Some(format!(
                    "no certificate under any clique partition; oracle exhausted after {} nodes",
                    outcome.nodes
                ));
            }
            Err(msg) => {
                report.note = Some(format!(
                    "no certificate under any clique partition; oracle not run: {msg}"
                ))
            }
        },
    }
    Ok(report)
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Representable => VERDICT_TRUE,
        Verdict::NotRepresentable => VERDICT_FALSE,
        Verdict::CapExceeded => FAILURE,
    }
}

fn cmd_recognize(cli: &Cli, path: &Path, limits: &SearchLimits) -> Result<u8> {
    let report = build_report(path, limits)?;
    emit(cli, serde_json::to_value(&report)?, || report.text());
    Ok(verdict_code(report.verdict))
}

fn cmd_word(cli: &Cli, path: &Path, limits: &SearchLimits) -> Result<u8> {
    let input = load_graph(path)?;
    let Some((cb, cert)) = certify(&input, limits)? else {
        emit(
            cli,
            json!({ "word": null, "uniform_k": null, "verified": false }),
            || "not representable\n".to_string(),
        );
        return Ok(VERDICT_FALSE);
    };
    let w = construct_word(&cb, &cert)?;
    emit(
        cli,
        json!({ "word": w.to_string(), "uniform_k": 3, "verified": true }),
        || format!("{w}\n"),
    );
    Ok(VERDICT_TRUE)
}

fn cmd_repnum(cli: &Cli, path: &Path, limits: &SearchLimits) -> Result<u8> {
    let input = load_graph(path)?;
    let rn = representation_number(input.graph(), limits)?;
    let k = rn.value();
    emit(
        cli,
        json!({ "representation_number": k, "representable": k.is_some() }),
        || match k {
            Some(k) => format!("{k}\n"),
            None => "not representable\n".to_string(),
        },
    );
    Ok(if k.is_some() {
        VERDICT_TRUE
    } else {
        VERDICT_FALSE
    })
}

fn cmd_oracle(
    cli: &Cli,
    path: &Path,
    orientation: Option<&Path>,
    limits: &SearchLimits,
) -> Result<u8> {
    let g: SimpleGraph = load_graph(path)?.graph().clone();
    if let Some(opath) = orientation {
        let o = parse_orientation(g, &read_source(opath)?)
            .with_context(|| format!("parsing {}", opath.display()))?;
        let witness = o.find_shortcut()?;
        let ok = witness.is_none();
        emit(
            cli,
            json!({ "semi_transitive": ok, "witness": witness }),
            || match &witness {
                None => "semi-transitive\n".to_string(),
                Some(w) => format!("{}\n", serde_json::to_string(w).expect("plain data")),
            },
        );
        return Ok(if ok { VERDICT_TRUE } else { VERDICT_FALSE });
    }
    let outcome = search_semi_transitive(&g, limits)?;
    let arcs = outcome.orientation.as_ref().map(|o| o.arcs());
    emit(
        cli,
        json!({
            "representable": arcs.is_some(),
            "nodes": outcome.nodes,
            "arcs": arcs,
        }),
        || match &outcome.orientation {
            Some(o) => o.to_text(),
            None => format!(
                "no semi-transitive orientation; search exhausted after {} nodes\n",
                outcome.nodes
            ),
        },
    );
    Ok(if outcome.orientation.is_some() {
        VERDICT_TRUE
    } else {
        VERDICT_FALSE
    })
}

fn cmd_verify(cli: &Cli, path: &Path, word_text: &str) -> Result<u8> {
    let g: SimpleGraph = load_graph(path)?.graph().clone();
    let (w, table) = parse_word(word_text)?;
    let mismatch = w.first_mismatch(&g)?;
    let names = mismatch.map(|(a, b)| {
        let name = |l: u32| {
            table
                .name(wordrep::Letter(l))
                .map(str::to_string)
                .unwrap_or_else(|| l.to_string())
        };
        (name(a), name(b))
    });
    emit(
        cli,
        json!({ "represents": mismatch.is_none(), "mismatch": names }),
        || match &names {
            None => "verified\n".to_string(),
            Some((a, b)) => format!("mismatch on pair ({a}, {b})\n"),
        },
    );
    Ok(if mismatch.is_none() {
        VERDICT_TRUE
    } else {
        VERDICT_FALSE
    })
}

fn cmd_gen(cli: &Cli, kind: &GenKind) -> Result<u8> {
    let cb = match *kind {
        GenKind::Cartesian { n } => gen_cartesian_kn_k2(n),
        GenKind::Complete { m, n } => gen_complete_cobip(m, n),
        GenKind::Random { m, n, p, seed } => gen_random_cobip(m, n, p, seed)?,
    };
    if cli.json {
        println!("{}", write_cobipartite_json(&cb));
    } else {
        print!("{}", write_edge_list(cb.graph()));
    }
    Ok(VERDICT_TRUE)
}

fn cmd_sweep(
    cli: &Cli,
    max_vertices: usize,
    random: usize,
    max_random: usize,
    seed: u64,
    limits: &SearchLimits,
) -> Result<u8> {
    let instances = corpus(max_vertices, random, max_random, seed)?;
    let report = sweep(&instances, limits)?;
    let clean = report.disagreements == 0 && report.construction_failures == 0;
    emit(cli, serde_json::to_value(&report)?, || {
        let mut out = format!(
            "instances: {}\nrepresentable: {}\ndisagreements: {}\nconstruction failures: {}\n\
             partition-dependent: {}\nliteral condition 6 disagreements: {}\n",
            report.total,
            report.representable,
            report.disagreements,
            report.construction_failures,
            report.partition_dependent,
            report.literal_disagreements,
        );
        for r in report.instances.iter().filter(|r| !r.agrees()) {
            out += &format!("DISAGREEMENT instance {} rows {:?}\n", r.id, r.rows);
        }
        for r in report.non_representable() {
            let origin = match &r.source {
                Source::Exhaustive => "exhaustive".to_string(),
                Source::Random { seed, p } => format!("random seed {seed} p {p}"),
            };
            out += &format!(
                "not representable: instance {} ({origin}) {}x{} rows {:?}, oracle nodes {}\n",
                r.id, r.m, r.n, r.rows, r.oracle_nodes
            );
        }
        out
    });
    Ok(if clean { VERDICT_TRUE } else { VERDICT_FALSE })
}
