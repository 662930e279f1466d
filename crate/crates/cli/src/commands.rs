use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::{self, BufRead, Write};

use ivgraph::bounds::{bounds_table, double_factorial, sandwich, BoundReport};
use ivgraph::canon::colored_canonical_form_with_limit;
use ivgraph::construction::{check_family, enumerate_family, family_size, ConstructionParams};
use ivgraph::enumeration::{count_interval_graphs, enumerate_interval_graphs, SweepConfig};
use ivgraph::graph6::{emit_graph6, parse_graph6};
use ivgraph::{recognize, Error};
use serde::Serialize;
use serde_json::json;

use crate::args::*;

pub const SCHEMA: u32 = 1;

#[derive(Debug)]
pub enum Failure {
    Domain(Error),
    Io(io::Error),
    Other { code: &'static str, detail: String },
}

impl Failure {
    pub fn code(&self) -> &'static str {
        match self {
            Failure::Domain(e) => e.code(),
            Failure::Io(_) => "io",
            Failure::Other { code, .. } => code,
        }
    }

    pub fn detail(&self) -> String {
        match self {
            Failure::Domain(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
            Failure::Other { detail, .. } => detail.clone(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

pub type Outcome = Result<(), Failure>;

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let sweep = SweepConfig { cap: cli.cap, workers: cli.workers as usize };
    match &cli.command {
        Command::Recognize(a) => recognize_cmd(a, out, err),
        Command::Count(a) => count_cmd(a, &sweep, out),
        Command::Enumerate(a) => enumerate_cmd(a, &sweep, out),
        Command::Construct(a) => construct_cmd(a, out, err),
        Command::Bounds(a) => bounds_cmd(a, &sweep, out),
        Command::Table(a) => table_cmd(a, &sweep, out),
    }
}

fn read_lines(args: &RecognizeArgs) -> Result<Vec<String>, Failure> {
    if !args.graphs.is_empty() {
        return Ok(args.graphs.clone());
    }
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut lines = Vec::new();
            for line in io::stdin().lock().lines() {
                lines.push(line?);
            }
            lines.join("\n")
        }
    };
    Ok(text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect())
}

fn recognize_cmd(args: &RecognizeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut first_failure = None;
    for (lineno, line) in read_lines(args)?.iter().enumerate() {
        match parse_graph6(line) {
            Ok(g) => {
                let r = recognize(&g);
                let mut obj = json!({ "schema": SCHEMA, "graph6": line, "is_interval": r.is_interval });
                if let Some(real) = &r.realization {
                    obj["realization"] = serde_json::to_value(real)?;
                }
                if let Some(reason) = r.reason {
                    obj["reason"] = json!(reason.as_str());
                }
                writeln!(out, "{obj}")?;
            }
            Err(e) => {
                writeln!(err, "error: {}: line {}: {e}", e.code(), lineno + 1)?;
                first_failure.get_or_insert(Failure::Domain(e));
            }
        }
    }
    first_failure.map_or(Ok(()), Err)
}

fn count_cmd(args: &CountArgs, sweep: &SweepConfig, out: &mut dyn Write) -> Outcome {
    writeln!(out, "n,i_n,matchings,elapsed_ms")?;
    for n in args.size.sizes() {
        let r = count_interval_graphs(n, sweep)?;
        let elapsed = if args.timing { r.elapsed.as_millis().to_string() } else { String::new() };
        writeln!(out, "{},{},{},{}", r.n, r.i_n, r.matchings_visited, elapsed)?;
        out.flush()?;
    }
    Ok(())
}

fn enumerate_cmd(args: &EnumerateArgs, sweep: &SweepConfig, out: &mut dyn Write) -> Outcome {
    for code in enumerate_interval_graphs(args.n, sweep)? {
        match args.format {
            EnumerateFormat::Graph6 => writeln!(out, "{}", emit_graph6(&code.to_graph()?))?,
            EnumerateFormat::Hex => writeln!(out, "{code}")?,
        }
    }
    Ok(())
}

fn construct_cmd(args: &ConstructArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let p = ConstructionParams::new(args.n, args.k, args.epsilon)?;
    if let Some(format) = args.emit {
        for member in enumerate_family(&p) {
            let g6 = emit_graph6(member.graph());
            match format {
                EmitFormat::Graph6 => writeln!(out, "{g6}")?,
                EmitFormat::Json => {
                    let colors: String = member.colored().colors().iter().map(|c| c.letter()).collect();
                    let whites: Vec<[u32; 2]> = member.whites().iter().map(|w| [w.a, w.b]).collect();
                    let code = colored_canonical_form_with_limit(member.colored(), 64)?;
                    let obj = json!({
                        "schema": SCHEMA,
                        "n": p.n(),
                        "k": p.k(),
                        "whites": whites,
                        "graph6": g6,
                        "colors": colors,
                        "colored_code": code.to_hex(),
                    });
                    writeln!(out, "{obj}")?;
                }
            }
        }
    }
    // With --emit the data stream holds the members; summaries go to stderr.
    let summary: &mut dyn Write = if args.emit.is_some() { err } else { out };
    if args.verify {
        let c = check_family(&p)?;
        let ok = |b: bool| if b { "ok" } else { "FAILED" };
        writeln!(
            summary,
            "n={} k={} epsilon={} families={} expected={} distinct_codes={} round_trip={} geometric={} recognized={}",
            c.n,
            c.k,
            args.epsilon,
            c.families,
            c.expected,
            c.distinct_codes,
            ok(c.round_trip),
            ok(c.geometric_agrees),
            c.recognized,
        )?;
        if !c.passed() {
            return Err(Failure::Other { code: "verification-failed", detail: format!("{c:?}") });
        }
    } else if args.emit.is_none() {
        writeln!(
            summary,
            "n={} k={} epsilon={} families={}",
            p.n(),
            p.k(),
            args.epsilon,
            family_size(p.n() as u64, p.k() as u64)
        )?;
    }
    Ok(())
}

fn parse_range(spec: &str) -> Result<Vec<u64>, Failure> {
    let bad = || Failure::Other { code: "usage", detail: format!("bad --n-range {spec:?}, expected start:end[:step]") };
    let parts: Vec<u64> = spec
        .split(':')
        .map(|s| s.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let (start, end, step) = match parts[..] {
        [s, e] => (s, e, 1),
        [s, e, st] if st > 0 => (s, e, st),
        _ => return Err(bad()),
    };
    if start > end {
        return Err(bad());
    }
    Ok((start..=end).step_by(step as usize).collect())
}

fn exact_counts(ns: &[u64], max: u64, sweep: &SweepConfig) -> Result<BTreeMap<u64, u64>, Failure> {
    let mut counts = BTreeMap::new();
    for &n in ns {
        if n >= 1 && n <= max && (n as usize) <= sweep.cap && !counts.contains_key(&n) {
            counts.insert(n, count_interval_graphs(n as usize, sweep)?.i_n);
        }
    }
    Ok(counts)
}

fn opt<T: Display>(v: Option<T>) -> String {
    v.map_or(String::new(), |x| x.to_string())
}

pub const BOUNDS_HEADER: &str =
    "n,k,log_family,theorem1_lower,yp_lower,matchings_upper,exact_log_in,ratio,L1,L2,L3";

fn bounds_csv_row(r: &BoundReport) -> String {
    [
        r.n.to_string(),
        opt(r.k_used),
        opt(r.log_family),
        opt(r.theorem1_lower),
        opt(r.yp_lower),
        r.matchings_upper.to_string(),
        opt(r.exact_log_in),
        opt(r.ratio),
        opt(r.l1),
        opt(r.l2),
        opt(r.l3),
    ]
    .join(",")
}

fn bounds_cmd(args: &BoundsArgs, sweep: &SweepConfig, out: &mut dyn Write) -> Outcome {
    let s = &args.sizes;
    let ns: Vec<u64> = match (&s.n, &s.n_list, &s.n_range) {
        (Some(n), _, _) => vec![*n],
        (_, Some(list), _) => list.clone(),
        (_, _, Some(range)) => parse_range(range)?,
        _ => Vec::new(),
    };
    let counts = exact_counts(&ns, args.exact_max, sweep)?;
    let rows = bounds_table(&ns, args.k, &counts);
    match args.format {
        TableFormat::Csv => {
            writeln!(out, "{BOUNDS_HEADER}")?;
            for r in &rows {
                writeln!(out, "{}", bounds_csv_row(r))?;
            }
        }
        TableFormat::Json => write_json(out, &rows)?,
    }
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Outcome {
    let doc = json!({ "schema": SCHEMA, "rows": rows });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    i_n: u64,
    matchings: String,
    #[serde(flatten)]
    bounds: ivgraph::bounds::Sandwich,
}

fn table_cmd(args: &TableArgs, sweep: &SweepConfig, out: &mut dyn Write) -> Outcome {
    let mut rows = Vec::new();
    for n in 1..=args.max_n {
        let i_n = count_interval_graphs(n, sweep)?.i_n;
        let bounds = sandwich(n as u64, i_n)?;
        rows.push(TableRow { n, i_n, matchings: double_factorial(n as u64).to_string(), bounds });
    }
    match args.format {
        TableFormat::Csv => {
            writeln!(out, "n,i_n,matchings,ln_i_n,best_k,best_theorem1_lower,yp_lower,lower,matchings_upper,holds")?;
            for r in &rows {
                let b = &r.bounds;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.i_n,
                    r.matchings,
                    b.ln_i_n,
                    opt(b.best_k),
                    opt(b.best_theorem1_lower),
                    opt(b.yp_lower),
                    opt(b.lower),
                    b.matchings_upper,
                    b.holds
                )?;
            }
        }
        TableFormat::Json => write_json(out, &rows)?,
    }
    if let Some(bad) = rows.iter().find(|r| !r.bounds.holds) {
        return Err(Failure::Other { code: "bound-violated", detail: format!("n = {}", bad.n) });
    }
    Ok(())
}
