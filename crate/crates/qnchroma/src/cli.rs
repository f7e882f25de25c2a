//! Command-line dispatch.
//!
//! Exit codes: 0 — success, all assertions passed; 1 — an assertion was
//! violated (a counterexample or report is written); 2 — usage or
//! environment error. Every run is reproducible from its flag set: all
//! randomness flows from `--seed` through the documented split function,
//! and reductions merge in deterministic order regardless of `--threads`.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::averages::rational_str;
use crate::bounds::{hypergeom_moments, master_bound, s_bound, VarianceMode};
use crate::colouring::Colouring;
use crate::cube::{CubeDim, Vertex};
use crate::error::Error;
use crate::geodesic::{
    antipodal_profile, min_geodesic_cc, min_path_cc, min_path_cc_with_witness, witness_geodesic,
    CostMode, FcTable, Scope,
};
use crate::hamilton::{
    gray_code_cc, hamilton_min_cc, hamming_component_bound, mono_components,
    random_spanning_tree,
};
use crate::report::{
    certificates_json, json_string, lemma_report_csv, lemma_report_json, write_text,
    ProfileSummary,
};
use crate::rng::split_seed;
use crate::search::{adversary_climb, conjecture_scan, sampled_scan, ClimbObjective};
use crate::verify::{
    verify_all, verify_corollary_chain, verify_step1, verify_step1_exhaustive, verify_step2,
    verify_step3, verify_step3_exhaustive, Certificate,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const USAGE: &str = "\
usage: qnchroma <subcommand> [flags]

subcommands:
  gen       --layered|--hamming|--direction|--random|--antipodal-random
            --n N [--r R] [--seed S] [--x0 V] --out PATH
  cost      --in PATH (--x V --y V [--witness] | --profile)
            [--mode geodesic|path] [--format csv|json] [--out PATH]
  verify    --step1|--step2|--step3|--chain|--all
            (--in PATH | --n N --seeds K [--r R])
            [--k K] [--u V|all] [--v V] [--format csv|json] [--out PATH]
  bound     --n N [--mode exact|paper] [--k K] [--out PATH]
  scan      --n N [--mode geodesic|path] [--exhaustive [--symmetry]]
            [--samples C --seed S] [--results-dir DIR] [--out PATH]
  climb     --n N [--objective mean-path|mean-geodesic] [--budget B]
            [--seed S] [--start layered|random|PATH] [--out PATH]
  hamilton  --mode exact|gray|tree-components|hamming-bound
            (--in PATH | --n N) [--trees T] [--trials T] [--seed S] [--out PATH]
  moments   --n N --k K --r R [--out PATH]

global flags: --threads T (or QNCHROMA_THREADS), --dump-config
";

const BOOL_FLAGS: &[&str] = &[
    "layered",
    "hamming",
    "direction",
    "random",
    "antipodal-random",
    "profile",
    "witness",
    "exhaustive",
    "symmetry",
    "step1",
    "step2",
    "step3",
    "chain",
    "all",
    "dump-config",
];

/// A parsed invocation. Serialising this is enough to replay the run.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub subcommand: String,
    pub values: BTreeMap<String, String>,
    pub switches: BTreeSet<String>,
    pub threads: Option<usize>,
}

impl RunConfig {
    fn parse(args: &[String]) -> Result<Self, String> {
        let subcommand = args
            .first()
            .ok_or_else(|| "missing subcommand".to_string())?
            .clone();
        let mut values = BTreeMap::new();
        let mut switches = BTreeSet::new();
        let mut i = 1;
        while i < args.len() {
            let tok = &args[i];
            let name = tok
                .strip_prefix("--")
                .ok_or_else(|| format!("unexpected argument {tok:?}"))?;
            if BOOL_FLAGS.contains(&name) {
                switches.insert(name.to_string());
                i += 1;
            } else {
                let value = args
                    .get(i + 1)
                    .ok_or_else(|| format!("flag --{name} needs a value"))?;
                values.insert(name.to_string(), value.clone());
                i += 2;
            }
        }
        let threads = match values.get("threads") {
            Some(t) => Some(t.parse().map_err(|_| format!("bad --threads {t:?}"))?),
            None => match std::env::var("QNCHROMA_THREADS") {
                Ok(t) if !t.is_empty() => {
                    Some(t.parse().map_err(|_| format!("bad QNCHROMA_THREADS {t:?}"))?)
                }
                _ => None,
            },
        };
        Ok(RunConfig {
            subcommand,
            values,
            switches,
            threads,
        })
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    fn has(&self, name: &str) -> bool {
        self.switches.contains(name)
    }

    fn required(&self, name: &str) -> Result<&str, Error> {
        self.value(name)
            .ok_or_else(|| usage_error(format!("missing required flag --{name}")))
    }

    fn parse_num<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>, Error> {
        match self.value(name) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|_| usage_error(format!("bad value for --{name}: {raw:?}"))),
        }
    }

    fn num_or<T: std::str::FromStr + Copy>(&self, name: &str, default: T) -> Result<T, Error> {
        Ok(self.parse_num(name)?.unwrap_or(default))
    }
}

fn usage_error(msg: String) -> Error {
    Error::Usage(msg)
}

/// Entry point: parse, set up the thread pool, dispatch.
pub fn run(args: &[String]) -> i32 {
    let config = match RunConfig::parse(args) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprint!("{USAGE}");
            return EXIT_USAGE;
        }
    };
    if config.has("dump-config") {
        println!(
            "{}",
            serde_json::to_string_pretty(&config).expect("config serialises")
        );
    }
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(t) = config.threads {
            builder = builder.num_threads(t);
        }
        match builder.build() {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    };
    let outcome = pool.install(|| dispatch(&config));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            eprint!("{USAGE}");
            EXIT_USAGE
        }
    }
}

fn dispatch(config: &RunConfig) -> Result<i32, Error> {
    match config.subcommand.as_str() {
        "gen" => cmd_gen(config),
        "cost" => cmd_cost(config),
        "verify" => cmd_verify(config),
        "bound" => cmd_bound(config),
        "scan" => cmd_scan(config),
        "climb" => cmd_climb(config),
        "hamilton" => cmd_hamilton(config),
        "moments" => cmd_moments(config),
        other => Err(usage_error(format!("unknown subcommand {other:?}"))),
    }
}

fn parse_vertex(raw: &str) -> Result<Vertex, Error> {
    let parsed = if let Some(bin) = raw.strip_prefix("0b") {
        u32::from_str_radix(bin, 2)
    } else if let Some(hex) = raw.strip_prefix("0x") {
        u32::from_str_radix(hex, 16)
    } else {
        raw.parse()
    };
    parsed.map_err(|_| usage_error(format!("bad vertex {raw:?}")))
}

fn dim_flag(config: &RunConfig) -> Result<CubeDim, Error> {
    let n: u32 = config
        .required("n")?
        .parse()
        .map_err(|_| usage_error("bad value for --n".into()))?;
    CubeDim::new(n)
}

fn mode_flag(config: &RunConfig, default: CostMode) -> Result<CostMode, Error> {
    match config.value("mode") {
        None => Ok(default),
        Some("geodesic") => Ok(CostMode::Geodesic),
        Some("path") => Ok(CostMode::Path),
        Some(other) => Err(usage_error(format!("bad --mode {other:?}"))),
    }
}

fn out_path(config: &RunConfig) -> Option<PathBuf> {
    config.value("out").map(PathBuf::from)
}

fn cmd_gen(config: &RunConfig) -> Result<i32, Error> {
    let dim = dim_flag(config)?;
    let r: u8 = config.num_or("r", 2u8)?;
    let seed: u64 = config.num_or("seed", 0u64)?;
    let x0 = match config.value("x0") {
        Some(raw) => parse_vertex(raw)?,
        None => 0,
    };
    let out = PathBuf::from(config.required("out")?);

    let kinds: Vec<&str> = ["layered", "hamming", "direction", "random", "antipodal-random"]
        .into_iter()
        .filter(|k| config.has(k))
        .collect();
    if kinds.len() != 1 {
        return Err(usage_error(
            "gen needs exactly one of --layered --hamming --direction --random --antipodal-random"
                .into(),
        ));
    }
    let (colouring, comments): (Colouring, Vec<String>) = match kinds[0] {
        "layered" => (
            Colouring::layered(dim, x0)?,
            vec![format!(
                "layered colouring: colour = parity of d(x0, nearer endpoint), x0 = {x0}"
            )],
        ),
        "hamming" => {
            let (c, code) = Colouring::hamming(dim)?;
            (
                c,
                vec![format!(
                    "perfect-code colouring: red iff incident to one of {} codewords",
                    code.len()
                )],
            )
        }
        "direction" => (
            Colouring::direction(dim, r)?,
            vec!["direction colouring: colour = dimension mod r".into()],
        ),
        "random" => (
            Colouring::random(dim, r, seed)?,
            vec![format!("uniform random colouring, seed = {seed}")],
        ),
        "antipodal-random" => (
            Colouring::antipodal_random(dim, seed)?,
            vec![format!(
                "random colouring with antipodal edges opposite, seed = {seed}"
            )],
        ),
        _ => unreachable!(),
    };
    let comment_refs: Vec<&str> = comments.iter().map(String::as_str).collect();
    colouring.save_with_comments(&out, &comment_refs)?;
    println!(
        "wrote {} (n={}, r={}, {} edges)",
        out.display(),
        colouring.dim().n(),
        colouring.colours(),
        colouring.dim().edge_count()
    );
    Ok(EXIT_OK)
}

fn cmd_cost(config: &RunConfig) -> Result<i32, Error> {
    let colouring = Colouring::load(config.required("in")?)?;
    let mode = mode_flag(config, CostMode::Geodesic)?;
    let out = out_path(config);
    let format = config.value("format").unwrap_or("json");

    if config.has("profile") {
        let profile = antipodal_profile(&colouring, mode)?;
        let summary = ProfileSummary::from_profile(colouring.dim().n(), mode, &profile);
        println!(
            "antipodal profile (n={}, {:?}): mean = {} ({:.6})",
            summary.n,
            mode,
            rational_str(&summary.mean),
            summary.mean_f64()
        );
        for (cost, count) in &summary.histogram {
            println!("  cost {cost}: {count} vertices");
        }
        match format {
            "csv" => write_report(out.as_deref(), &summary.to_csv())?,
            "json" => write_report(out.as_deref(), &json_string(&summary.to_json()))?,
            other => return Err(usage_error(format!("bad --format {other:?}"))),
        }
        return Ok(EXIT_OK);
    }

    let x = parse_vertex(config.required("x")?)?;
    let y = parse_vertex(config.required("y")?)?;
    colouring.dim().check_vertex(x)?;
    colouring.dim().check_vertex(y)?;
    let (cost, witness) = match (mode, config.has("witness")) {
        (CostMode::Geodesic, false) => (min_geodesic_cc(&colouring, x, y).cost, None),
        (CostMode::Geodesic, true) => {
            let table = FcTable::build(&colouring, x, Scope::Interval(y));
            let edges = witness_geodesic(&colouring, &table, y)?;
            (u32::from(table.min_value(y)), Some(edges))
        }
        (CostMode::Path, false) => (min_path_cc(&colouring, x, y).cost, None),
        (CostMode::Path, true) => {
            let pc = min_path_cc_with_witness(&colouring, x, y);
            (pc.cost, pc.witness)
        }
    };
    println!("cost({x} -> {y}, {mode:?}) = {cost}");
    if let Some(edges) = &witness {
        let mut v = x;
        let mut chain = vec![v];
        for &e in edges {
            let (lo, i) = colouring.dim().edge_from_id(e)?;
            v = if v == lo { lo | (1 << i) } else { lo };
            chain.push(v);
        }
        println!(
            "witness: {}",
            chain
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(" -> ")
        );
    }
    if out.is_some() {
        let value = serde_json::json!({
            "x": x, "y": y, "mode": mode, "cost": cost,
            "witness_edges": witness,
        });
        write_report(out.as_deref(), &json_string(&value))?;
    }
    Ok(EXIT_OK)
}

/// The colourings a `verify` run covers, with labels for reporting.
fn verify_batch(config: &RunConfig) -> Result<Vec<(String, Colouring)>, Error> {
    if let Some(path) = config.value("in") {
        return Ok(vec![(path.to_string(), Colouring::load(path)?)]);
    }
    let dim = dim_flag(config)?;
    let r: u8 = config.num_or("r", 2u8)?;
    let seeds: u64 = config.num_or("seeds", 1u64)?;
    (0..seeds)
        .map(|seed| Ok((format!("seed {seed}"), Colouring::random(dim, r, seed)?)))
        .collect()
}

fn cmd_verify(config: &RunConfig) -> Result<i32, Error> {
    let batch = verify_batch(config)?;
    let k: Option<u32> = config.parse_num("k")?;
    let u_flag = config.value("u").map(str::to_string);
    let v_flag = match config.value("v") {
        Some(raw) => Some(parse_vertex(raw)?),
        None => None,
    };
    let run_all = config.has("all");

    let mut all_hold = true;
    let mut outputs = Vec::new();
    for (label, colouring) in &batch {
        let mut certs: Vec<Certificate> = Vec::new();
        let mut chain_json = None;
        let mut chain_csv = None;

        if run_all {
            let (cs, report) = verify_all(colouring)?;
            certs.extend(cs);
            all_hold &= report.holds;
            println!(
                "[{label}] chain over k=1..{}: {}",
                report.n - 1,
                if report.holds { "ok" } else { "FAILED" }
            );
            if !report.holds {
                eprintln!("[{label}] chain FAILED: {:?}", report.violations);
            }
            chain_csv = Some(lemma_report_csv(&report));
            chain_json = Some(lemma_report_json(&report));
        } else {
            if config.has("step1") {
                certs.push(match (k, u_flag.as_deref()) {
                    (Some(_), Some("all")) | (None, _) => verify_step1_exhaustive(colouring)?,
                    (Some(k), Some(raw)) => verify_step1(colouring, k, Some(parse_vertex(raw)?))?,
                    (Some(k), None) => verify_step1(colouring, k, None)?,
                });
            }
            if config.has("step2") {
                certs.push(verify_step2(colouring)?);
            }
            if config.has("step3") {
                certs.push(match k {
                    Some(k) => verify_step3(colouring, k, v_flag)?,
                    None => verify_step3_exhaustive(colouring)?,
                });
            }
            if config.has("chain") {
                let report = verify_corollary_chain(colouring)?;
                all_hold &= report.holds;
                for line in &report.violations {
                    eprintln!("[{label}] chain: {line}");
                }
                println!(
                    "[{label}] chain over k=1..{}: {}",
                    report.n - 1,
                    if report.holds { "ok" } else { "FAILED" }
                );
                chain_csv = Some(lemma_report_csv(&report));
                chain_json = Some(lemma_report_json(&report));
            }
            if certs.is_empty() && chain_json.is_none() {
                return Err(usage_error(
                    "verify needs one of --step1 --step2 --step3 --chain --all".into(),
                ));
            }
        }

        for cert in &certs {
            all_hold &= cert.holds;
            println!(
                "[{label}] {}: {}",
                cert.claim,
                if cert.holds { "ok" } else { "FAILED" }
            );
            if let Some(ce) = &cert.counterexample {
                eprintln!("[{label}] counterexample: {ce}");
            }
        }
        outputs.push((label.clone(), certs, chain_json, chain_csv));
    }

    if let Some(out) = out_path(config) {
        if config.value("format") == Some("csv") {
            // CSV output: the chain table of the first colouring.
            let csv = outputs
                .iter()
                .find_map(|(_, _, _, csv)| csv.clone())
                .ok_or_else(|| usage_error("--format csv needs --chain or --all".into()))?;
            write_text(Some(&out), &csv)?;
        } else {
            let value = serde_json::Value::Array(
                outputs
                    .iter()
                    .map(|(label, certs, chain, _)| {
                        serde_json::json!({
                            "colouring": label,
                            "certificates": certificates_json(certs),
                            "chain": chain,
                        })
                    })
                    .collect(),
            );
            write_text(Some(&out), &json_string(&value))?;
        }
    }
    Ok(if all_hold { EXIT_OK } else { EXIT_VIOLATION })
}

fn variance_mode(config: &RunConfig) -> Result<VarianceMode, Error> {
    match config.value("mode") {
        None | Some("exact") => Ok(VarianceMode::Exact),
        Some("paper") => Ok(VarianceMode::Paper),
        Some(other) => Err(usage_error(format!("bad --mode {other:?}"))),
    }
}

fn cmd_bound(config: &RunConfig) -> Result<i32, Error> {
    let n: u64 = config
        .required("n")?
        .parse()
        .map_err(|_| usage_error("bad value for --n".into()))?;
    let mode = variance_mode(config)?;
    if let Some(k) = config.parse_num::<u64>("k")? {
        let b = s_bound(n, k, mode)?;
        println!("s_bound(n={n}, k={k}, {mode:?}) = {b}");
        return Ok(EXIT_OK);
    }
    let total = master_bound(n, mode)?;
    let scaled = total / (n as f64).sqrt();
    println!(
        "B({n}) = {total} ({mode:?} mode); B/sqrt(n) = {scaled}; pi/2 = {}",
        std::f64::consts::FRAC_PI_2
    );
    if let Some(out) = out_path(config) {
        let mut csv = String::from("k,bound,cumulative_bound\n");
        let mut cumulative = 0.0;
        for k in 1..n {
            let b = s_bound(n, k, mode)?;
            cumulative += b;
            csv.push_str(&format!("{k},{b},{cumulative}\n"));
        }
        write_text(Some(&out), &csv)?;
    }
    Ok(EXIT_OK)
}

fn cmd_scan(config: &RunConfig) -> Result<i32, Error> {
    let n = dim_flag(config)?.n();
    let mode = mode_flag(config, CostMode::Path)?;
    let result = if config.has("exhaustive") || (n <= 3 && config.value("samples").is_none()) {
        conjecture_scan(n, mode, config.has("symmetry"))?
    } else {
        let samples: u64 = config
            .parse_num("samples")?
            .ok_or_else(|| usage_error("scan above n=3 needs --samples".into()))?;
        let seed: u64 = config.num_or("seed", 0u64)?;
        sampled_scan(n, samples, seed, mode)?
    };
    println!(
        "scan n={n} {:?}: worst min antipodal cost = {} over {:?}",
        mode, result.worst_min_cost, result.universe
    );
    if !result.refuting.is_empty() {
        let dir = config
            .value("results-dir")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("."));
        std::fs::create_dir_all(&dir)?;
        for (i, payload) in result.refuting.iter().enumerate() {
            let path = dir.join(format!("refuting-{i:04}.qncol"));
            std::fs::write(&path, payload)?;
            eprintln!("refuting candidate written to {}", path.display());
        }
    }
    if let Some(out) = out_path(config) {
        write_text(
            Some(&out),
            &json_string(&serde_json::to_value(&result).expect("scan serialises")),
        )?;
    }
    Ok(if result.refuting.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_climb(config: &RunConfig) -> Result<i32, Error> {
    let dim = dim_flag(config)?;
    let seed: u64 = config.num_or("seed", 0u64)?;
    let budget: u64 = config.num_or("budget", 1000u64)?;
    let objective = match config.value("objective") {
        None | Some("mean-path") => ClimbObjective::MeanPathCost,
        Some("mean-geodesic") => ClimbObjective::MeanGeodesicCost,
        Some(other) => return Err(usage_error(format!("bad --objective {other:?}"))),
    };
    let start = match config.value("start") {
        None | Some("layered") => Colouring::layered(dim, 0)?,
        Some("random") => Colouring::random(dim, 2, split_seed(seed, 777))?,
        Some(path) => Colouring::load(path)?,
    };
    let outcome = adversary_climb(objective, budget, seed, &start)?;
    println!(
        "climb n={} {:?}: start {} -> best {} after {} evaluations",
        dim.n(),
        objective,
        outcome.start_objective,
        outcome.objective,
        outcome.evaluations
    );
    if let Some(out) = out_path(config) {
        outcome.best.save_with_comments(
            &out,
            &[&format!(
                "hill-climb result: objective {:?} = {}, seed = {seed}, budget = {budget}",
                objective, outcome.objective
            )],
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_hamilton(config: &RunConfig) -> Result<i32, Error> {
    match config.value("mode") {
        Some("exact") => {
            let colouring = Colouring::load(config.required("in")?)?;
            let (cost, path) = hamilton_min_cc(&colouring)?;
            println!("minimum Hamilton-path colour changes: {cost}");
            println!(
                "witness: {}",
                path.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" -> ")
            );
            if let Some(out) = out_path(config) {
                let value = serde_json::json!({ "cost": cost, "path": path });
                write_text(Some(&out), &json_string(&value))?;
            }
            Ok(EXIT_OK)
        }
        Some("gray") => {
            let colouring = Colouring::load(config.required("in")?)?;
            let cost = gray_code_cc(&colouring)?;
            println!("Gray-code walk colour changes: {cost}");
            Ok(EXIT_OK)
        }
        Some("components") | Some("tree-components") => {
            let colouring = Colouring::load(config.required("in")?)?;
            let trees: u64 = config.num_or("trees", 10u64)?;
            let seed: u64 = config.num_or("seed", 0u64)?;
            let mut counts = Vec::new();
            for trial in 0..trees {
                let tree = random_spanning_tree(colouring.dim(), split_seed(seed, trial))?;
                counts.push(mono_components(&colouring, &tree)?);
            }
            let min = counts.iter().min().copied().unwrap_or(0);
            let max = counts.iter().max().copied().unwrap_or(0);
            println!(
                "monochromatic components over {trees} random spanning trees: min {min}, max {max}"
            );
            if let Some(out) = out_path(config) {
                let value = serde_json::json!({
                    "n": colouring.dim().n(), "trees": trees, "seed": seed,
                    "min": min, "max": max, "counts": counts,
                });
                write_text(Some(&out), &json_string(&value))?;
            }
            Ok(EXIT_OK)
        }
        Some("hamming-bound") => {
            let n = dim_flag(config)?.n();
            let trials: u64 = config.num_or("trials", 25u64)?;
            let seed: u64 = config.num_or("seed", 0u64)?;
            let report = hamming_component_bound(n, trials, seed)?;
            println!(
                "perfect-code bound n={n}: min components {} vs bound {} over {} trees",
                report.min_components, report.bound, report.trials
            );
            for line in &report.violations {
                eprintln!("violation: {line}");
            }
            if let Some(out) = out_path(config) {
                write_text(
                    Some(&out),
                    &json_string(&serde_json::to_value(&report).expect("report serialises")),
                )?;
            }
            Ok(if report.violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        other => Err(usage_error(format!(
            "hamilton needs --mode exact|gray|tree-components|hamming-bound, got {other:?}"
        ))),
    }
}

fn cmd_moments(config: &RunConfig) -> Result<i32, Error> {
    let n: u64 = config
        .required("n")?
        .parse()
        .map_err(|_| usage_error("bad value for --n".into()))?;
    let k: u64 = config
        .required("k")?
        .parse()
        .map_err(|_| usage_error("bad value for --k".into()))?;
    let r: u64 = config
        .required("r")?
        .parse()
        .map_err(|_| usage_error("bad value for --r".into()))?;
    let (mean, var_exact) = hypergeom_moments(n, k, r, VarianceMode::Exact)?;
    println!("mean = {}", rational_str(&mean));
    println!("variance (exact) = {}", rational_str(&var_exact));
    let paper = if n >= 3 {
        let (_, var_paper) = hypergeom_moments(n, k, r, VarianceMode::Paper)?;
        println!("variance (paper mode) = {}", rational_str(&var_paper));
        Some(var_paper)
    } else {
        None
    };
    if let Some(out) = out_path(config) {
        let value = serde_json::json!({
            "n": n, "k": k, "r": r,
            "mean": rational_str(&mean),
            "variance_exact": rational_str(&var_exact),
            "variance_paper": paper.as_ref().map(rational_str),
        });
        write_text(Some(&out), &json_string(&value))?;
    }
    Ok(EXIT_OK)
}

fn write_report(path: Option<&Path>, content: &str) -> Result<(), Error> {
    if path.is_some() {
        write_text(path, content)?;
    }
    Ok(())
}
