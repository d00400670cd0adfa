//! `asc` command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 graph6 parse error.

use std::io::{BufRead, Write};

use asc_core::classify::{self, Classification};
use asc_core::constructors::{self, FamilyId};
use asc_core::enumeration::{self, Filter, GenSpec, Objective, Statistic, DEFAULT_CERT_CAP};
use asc_core::metrics;
use asc_core::verify::{self, CheckId, CheckOptions, CheckReport, Params, Status};
use asc_core::{Error, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "asc",
    version,
    about = "Almost self-centered and almost peripheral graphs: constructions, invariants, enumeration and checks",
    after_help = "Graphs are read as graph6 strings (short form, order 1..=62). Pass `-` to read them from standard input.\n\
                  Exit status: 0 ok, 1 check failed, 2 usage error, 3 graph6 parse error."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Dot,
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a named family. Families and parameters:
    /// cycle n (n>=3), path n (n>=1), complete n (n>=1), star n (n>=2), kn-minus-edge n (n>=3),
    /// theta a b c (a>=1, b>=2), cycle-pendant n (odd n>=7), girth-extremal n (even n>=12),
    /// z n r (r>=2, n>=2r+1), regular-asc k (k>=4), ap-max-size n (n>=3),
    /// ap-degree n max_degree (n>=7, max_degree in 3..=n-4 or n-1), ap-top-extremal n (n>=8)
    Construct {
        family: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Classify connected graphs (ASC, AP, self-centered, unicyclic, theta, binocle)
    Classify {
        graph: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Distance and combinatorial invariants of graphs
    Metrics {
        graph: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// List one canonical graph6 line per isomorphism class of connected graphs
    Enumerate {
        #[command(flatten)]
        spec: SpecArgs,
        /// Keep only graphs accepted by this filter
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Exhaustive extremal scan of a statistic over filtered graphs
    Scan {
        #[command(flatten)]
        spec: SpecArgs,
        /// Filter: all, connected, asc, ap, self-centered, unicyclic, theta, binocle
        #[arg(long, default_value = "all")]
        filter: String,
        /// Statistic: girth, independence, size, max-degree, min-degree, top-vertices, radius, diameter
        #[arg(long)]
        stat: String,
        /// max or min
        #[arg(long, default_value = "max")]
        objective: String,
        #[arg(long, default_value_t = DEFAULT_CERT_CAP)]
        cert_cap: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run one check. Checks and parameters:
    /// lemma1 --order n (n>=6), lemma2 --order n (n>=4), lemma3 --a-max m (m>=2), lemma4 --order n (n>=4),
    /// thm5 --order n (5..=16), thm6 --order n --radius r (r>=2, n>=2r+1), cor7 --order n (n>=5),
    /// thm8 --degree k (k>=3), thm9 --order n (n>=3), thm10 --order n (n>=7), thm11 --order n (n>=8),
    /// invariant-sweep --order n. Full enumeration is limited to order 9 (10 with --full-order-10).
    Verify {
        check: String,
        #[arg(long, visible_alias = "n")]
        order: Option<usize>,
        #[arg(long, visible_alias = "r")]
        radius: Option<usize>,
        #[arg(long, visible_alias = "k")]
        degree: Option<usize>,
        #[arg(long)]
        a_max: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run every check at every parameter within an order budget (7..=16)
    Suite {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Filter graph6 lines from standard input, preserving order
    Filter {
        /// Filter: all, connected, asc, ap, self-centered, unicyclic, theta, binocle
        #[arg(long)]
        filter: String,
    },
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Order of the generated graphs (1..=16; above 10 a restricting constraint is required)
    #[arg(long)]
    order: usize,
    /// Exact regular degree
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long)]
    min_size: Option<usize>,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    min_girth: Option<usize>,
}

impl SpecArgs {
    fn spec(&self) -> GenSpec {
        let mut s = GenSpec::connected(self.order);
        s.regular = self.degree;
        s.min_size = self.min_size;
        s.max_size = self.max_size;
        s.min_degree = self.min_degree;
        s.max_degree = self.max_degree;
        s.min_girth = self.min_girth;
        s
    }
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_CERT_CAP)]
    cert_cap: usize,
    /// Allow full connected enumeration at order 10 (minutes)
    #[arg(long)]
    full_order_10: bool,
    /// Write 0 in elapsed_ms so output is byte-stable
    #[arg(long)]
    no_timing: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

impl RunArgs {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            jobs: self.jobs,
            cert_cap: self.cert_cap,
            full_order_10: self.full_order_10,
            ..CheckOptions::default()
        }
    }
}

enum Failure {
    Usage(String),
    Parse(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Graph6 { .. } => Failure::Parse(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PARSE
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Construct { family, params, format } => construct(&family, &params, format, out),
        Command::Classify { graph, format } => {
            for g in read_graphs(&graph, stdin)? {
                classify_one(&g, format, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Metrics { graph, format } => {
            for g in read_graphs(&graph, stdin)? {
                metrics_one(&g, format, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { spec, filter, jobs } => {
            let filter: Filter = filter.parse()?;
            let stream = enumeration::enumerate_jobs(&spec.spec(), jobs)?;
            for (line, g) in stream.graph6().iter().zip(stream.iter()) {
                if filter.accepts(&g) {
                    writeln!(out, "{line}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Scan {
            spec,
            filter,
            stat,
            objective,
            cert_cap,
            jobs,
            format,
        } => {
            let filter: Filter = filter.parse()?;
            let stat: Statistic = stat.parse()?;
            let objective: Objective = objective.parse()?;
            let r = enumeration::scan_named(&spec.spec(), filter, stat, objective, cert_cap, jobs)?;
            match format {
                Format::Table => {
                    writeln!(out, "statistic     {}", r.statistic)?;
                    writeln!(out, "objective     {}", json!(r.objective).as_str().unwrap_or_default())?;
                    match r.value {
                        Some(v) => writeln!(out, "value         {v}")?,
                        None => writeln!(out, "value         none (no graph passed the filter)")?,
                    }
                    writeln!(out, "count         {}", r.count)?;
                    writeln!(out, "matched       {}", r.matched)?;
                    writeln!(out, "visited       {}", r.visited)?;
                    writeln!(out, "truncated     {}", r.truncated)?;
                    for c in &r.certificates {
                        writeln!(out, "certificate   {c}")?;
                    }
                }
                _ => writeln!(out, "{}", serde_json::to_string(&r).expect("scan result serializes"))?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            check,
            order,
            radius,
            degree,
            a_max,
            run,
        } => {
            let id: CheckId = check.parse()?;
            let mut params = Params::new();
            for (name, value) in [("n", order), ("r", radius), ("k", degree), ("a_max", a_max)] {
                if let Some(v) = value {
                    params.insert(name.to_string(), v);
                }
            }
            let report = verify::run_check(id, &params, &run.options())?;
            let report = if run.no_timing { report.without_timing() } else { report };
            write_report(&report, run.format, out)?;
            Ok(if report.failed() { EXIT_CHECK_FAILED } else { EXIT_OK })
        }
        Command::Suite { max_n, run } => {
            let reports = verify::run_suite(max_n, &run.options())?;
            let mut failed = 0;
            let mut passed = 0;
            let mut skipped = 0;
            for r in &reports {
                let r = if run.no_timing { r.without_timing() } else { r.clone() };
                match run.format {
                    Format::Json => writeln!(out, "{}", r.to_json())?,
                    _ => writeln!(
                        out,
                        "{:<16} {:<14} {}",
                        r.check_id.name(),
                        params_text(&r.params),
                        r.status
                    )?,
                }
                match r.status {
                    Status::Pass => passed += 1,
                    Status::Fail => failed += 1,
                    Status::Skipped => skipped += 1,
                }
            }
            writeln!(err, "{passed} passed, {failed} failed, {skipped} skipped")?;
            Ok(if failed > 0 { EXIT_CHECK_FAILED } else { EXIT_OK })
        }
        Command::Filter { filter } => stream_filter(&filter, stdin, out, err),
    }
}

fn construct(family: &str, params: &[usize], format: Format, out: &mut dyn Write) -> Outcome {
    let id: FamilyId = family.parse()?;
    let g = constructors::build(id, params)?;
    match format {
        Format::Graph6 => writeln!(out, "{}", g.to_graph6()?)?,
        Format::Dot => out.write_all(g.to_dot().as_bytes())?,
        Format::Json => {
            let v = json!({
                "family": id.name(),
                "params": params,
                "order": g.order(),
                "size": g.size(),
                "graph6": g.to_graph6()?,
            });
            writeln!(out, "{v}")?;
        }
        Format::Table => {
            writeln!(out, "family  {}", id.name())?;
            writeln!(out, "order   {}", g.order())?;
            writeln!(out, "size    {}", g.size())?;
            writeln!(out, "graph6  {}", g.to_graph6()?)?;
            for (u, v) in g.edges() {
                writeln!(out, "edge    {u} {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn read_graphs(arg: &str, stdin: &mut dyn BufRead) -> std::result::Result<Vec<Graph>, Failure> {
    if arg != "-" {
        return Ok(vec![Graph::from_graph6(arg.trim())?]);
    }
    let mut graphs = Vec::new();
    for (i, line) in stdin.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = Graph::from_graph6(text).map_err(|e| Failure::Parse(format!("line {}: {e}", i + 1)))?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn set_text(set: asc_core::VertexSet) -> String {
    let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn classification_json(g: &Graph, c: &Classification) -> serde_json::Value {
    json!({
        "graph6": g.to_graph6().ok(),
        "order": c.order,
        "size": c.size,
        "radius": c.radius,
        "diameter": c.diameter,
        "self_centered": c.self_centered,
        "almost_self_centered": c.almost_self_centered,
        "almost_peripheral": c.almost_peripheral,
        "unicyclic": c.unicyclic,
        "theta": c.theta.map(|t| [t.a, t.b, t.c]),
        "binocle": c.binocle.as_ref().map(|b| json!({
            "first": b.first,
            "second": b.second,
            "path": b.path,
        })),
        "central": c.central_count,
        "peripheral": c.peripheral_count,
        "top": c.top_count,
    })
}

fn classify_one(g: &Graph, format: Format, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let c = classify::classify(g)?;
    match format {
        Format::Json => writeln!(out, "{}", classification_json(g, &c))?,
        _ => {
            let mut classes = Vec::new();
            if c.self_centered {
                classes.push("self-centered");
            }
            if c.almost_self_centered {
                classes.push("asc");
            }
            if c.almost_peripheral {
                classes.push("ap");
            }
            if c.unicyclic {
                classes.push("unicyclic");
            }
            if c.theta.is_some() {
                classes.push("theta");
            }
            if c.binocle.is_some() {
                classes.push("binocle");
            }
            writeln!(out, "graph6       {}", g.to_graph6()?)?;
            writeln!(out, "order        {}", c.order)?;
            writeln!(out, "size         {}", c.size)?;
            writeln!(out, "radius       {}", c.radius)?;
            writeln!(out, "diameter     {}", c.diameter)?;
            writeln!(
                out,
                "classes      {}",
                if classes.is_empty() {
                    "-".to_string()
                } else {
                    classes.join(" ")
                }
            )?;
            writeln!(out, "asc          {}", c.almost_self_centered)?;
            writeln!(out, "ap           {}", c.almost_peripheral)?;
            if let Some(t) = c.theta {
                writeln!(out, "theta        {} {} {}", t.a, t.b, t.c)?;
            }
            if let Some(b) = &c.binocle {
                writeln!(out, "binocle      {:?} {:?} path {:?}", b.first, b.second, b.path)?;
            }
            writeln!(out, "central      {}", c.central_count)?;
            writeln!(out, "peripheral   {}", c.peripheral_count)?;
            writeln!(out, "top          {}", c.top_count)?;
        }
    }
    Ok(())
}

fn metrics_one(g: &Graph, format: Format, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let profile = metrics::ecc_profile(g).ok();
    let stats = metrics::degree_stats(g);
    let girth = metrics::girth(g);
    let mis = metrics::maximum_independent_set(g);
    match format {
        Format::Json => {
            let v = json!({
                "graph6": g.to_graph6()?,
                "order": g.order(),
                "size": g.size(),
                "connected": profile.is_some(),
                "eccentricities": profile.as_ref().map(|p| p.ecc.clone()),
                "radius": profile.as_ref().map(|p| p.radius),
                "diameter": profile.as_ref().map(|p| p.diameter),
                "center": profile.as_ref().map(|p| p.center.to_vec()),
                "periphery": profile.as_ref().map(|p| p.periphery.to_vec()),
                "girth": girth,
                "independence_number": mis.len(),
                "independent_set": mis.to_vec(),
                "degree_sequence": stats.sequence,
                "min_degree": stats.min,
                "max_degree": stats.max,
                "top_vertices": stats.top,
            });
            writeln!(out, "{v}")?;
        }
        _ => {
            writeln!(out, "graph6        {}", g.to_graph6()?)?;
            writeln!(out, "order         {}", g.order())?;
            writeln!(out, "size          {}", g.size())?;
            writeln!(out, "connected     {}", profile.is_some())?;
            if let Some(p) = &profile {
                let ecc: Vec<String> = p.ecc.iter().map(|e| e.to_string()).collect();
                writeln!(out, "eccentricity  {}", ecc.join(" "))?;
                writeln!(out, "radius        {}", p.radius)?;
                writeln!(out, "diameter      {}", p.diameter)?;
                writeln!(out, "center        {} (size {})", set_text(p.center), p.center.len())?;
                writeln!(
                    out,
                    "periphery     {} (size {})",
                    set_text(p.periphery),
                    p.periphery.len()
                )?;
            }
            match girth {
                Some(x) => writeln!(out, "girth         {x}")?,
                None => writeln!(out, "girth         acyclic")?,
            }
            writeln!(out, "independence  {} {}", mis.len(), set_text(mis))?;
            let seq: Vec<String> = stats.sequence.iter().map(|d| d.to_string()).collect();
            writeln!(out, "degree seq    {}", seq.join(" "))?;
            writeln!(out, "min degree    {}", stats.min)?;
            writeln!(out, "max degree    {} (top vertices {})", stats.max, stats.top.len())?;
        }
    }
    Ok(())
}

fn params_text(p: &Params) -> String {
    let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(" ")
}

fn write_report(r: &CheckReport, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", r.to_json()),
        _ => {
            writeln!(out, "check         {}", r.check_id)?;
            writeln!(out, "params        {}", params_text(&r.params))?;
            writeln!(out, "claimed       {}", r.claimed)?;
            writeln!(out, "computed      {}", r.computed)?;
            writeln!(out, "status        {}", r.status)?;
            for note in &r.assumed_reductions {
                writeln!(out, "note          {note}")?;
            }
            for c in &r.certificates {
                writeln!(out, "certificate   {c}")?;
            }
            Ok(())
        }
    }
}

fn stream_filter(name: &str, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let filter: Filter = name.parse()?;
    let mut read = 0usize;
    let mut kept = 0usize;
    for (i, line) in stdin.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = Graph::from_graph6(text).map_err(|e| Failure::Parse(format!("line {}: {e}", i + 1)))?;
        read += 1;
        if filter.accepts(&g) {
            kept += 1;
            writeln!(out, "{text}")?;
        }
    }
    writeln!(err, "{kept} of {read} graphs passed {filter}")?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_flags_map_onto_the_generator() {
        let cli =
            Cli::try_parse_from(["asc", "enumerate", "--order", "12", "--degree", "3", "--min-girth", "4"]).unwrap();
        let Command::Enumerate { spec, .. } = cli.command else {
            panic!("wrong subcommand");
        };
        let s = spec.spec();
        assert_eq!((s.order, s.regular, s.min_girth), (12, Some(3), Some(4)));
    }

    #[test]
    fn stdin_lines_are_numbered_from_one() {
        let mut input: &[u8] = b"Ch\n\nxx\n";
        match read_graphs("-", &mut input) {
            Err(Failure::Parse(msg)) => assert!(msg.starts_with("line 3")),
            _ => panic!("expected a parse failure"),
        }
        let mut ok: &[u8] = b"Ch\nC~\n";
        assert_eq!(read_graphs("-", &mut ok).ok().map(|v| v.len()), Some(2));
    }

    #[test]
    fn params_render_in_key_order() {
        let p = verify::params(&[("r", 3), ("n", 9)]);
        assert_eq!(params_text(&p), "n=9 r=3");
        assert_eq!(set_text([0, 3].into_iter().collect()), "{0,3}");
    }
}
