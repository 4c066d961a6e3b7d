use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hilbstrata::betti::{count_resolutions, enumerate_betti, render_resolution, Glyphs};
use hilbstrata::castelnuovo::{self, CastelnuovoPoly};
use hilbstrata::hilbert::numerator_of;
use hilbstrata::strata::{build_poset, ext_dimension};
use hilbstrata::tables::{appendix_table, emit};
use hilbstrata::witness::run_witness;
use hilbstrata::{checks, Error, Format, Support};

#[derive(Parser)]
#[command(name = "hilbstrata", version, about = "Hilbert series strata of rank one modules on projective planes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// text, json or csv
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Use -> and + instead of → and ⊕.
    #[arg(long)]
    ascii: bool,
}

impl Output {
    fn glyphs(&self) -> Glyphs {
        if self.ascii {
            Glyphs::Ascii
        } else {
            Glyphs::Unicode
        }
    }
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum SupportArg {
    Full,
    Diag,
}

#[derive(Subcommand)]
enum Command {
    /// Castelnuovo polynomials of a weight, with their diagrams.
    Enumerate {
        #[arg(long)]
        weight: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Strata of every weight up to a bound.
    Table {
        #[arg(long)]
        max_weight: u64,
        #[command(flatten)]
        out: Output,
    },
    /// All legal minimal resolutions for a Castelnuovo polynomial.
    Betti {
        /// Comma separated coefficients s_0,s_1,...; "" is weight 0.
        #[arg(long = "s", allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        out: Output,
    },
    /// Stratum dimension `1 + n + c`.
    Dim {
        #[arg(long = "s", allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        out: Output,
    },
    /// Comparability poset of the strata of one weight.
    Poset {
        #[arg(long)]
        weight: u64,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Sample ladder-supported matrices over F_p and check their cokernels.
    Witness {
        #[arg(long = "s", allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value_t = 101)]
        prime: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "full")]
        support: SupportArg,
        #[command(flatten)]
        out: Output,
    },
    /// Run the identity suite and print a pass/fail summary.
    Check {
        #[arg(long)]
        max_weight: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

/// Returns the stdout text and whether the command succeeded.
fn run(command: Command) -> hilbstrata::Result<(String, bool)> {
    let text = match command {
        Command::Enumerate { weight, out } => enumerate_cmd(weight, &out),
        Command::Table { max_weight, out } => emit(&appendix_table(max_weight), out.format, out.glyphs())?,
        Command::Betti { s, out } => betti_cmd(&CastelnuovoPoly::parse(&s)?, &out)?,
        Command::Dim { s, out } => {
            let s = CastelnuovoPoly::parse(&s)?;
            let d = ext_dimension(&s);
            match out.format {
                Format::Json => pretty(&json!({ "s": s.values(), "n": s.weight(), "c": d.c, "dim": d.dim })),
                Format::Csv => format!("s,n,c,dim\r\n\"{}\",{},{},{}\r\n", s, s.weight(), d.c, d.dim),
                Format::Text => format!("s = {s}\nn = {}\nc = {}\ndim = {}\n", s.weight(), d.c, d.dim),
            }
        }
        Command::Poset { weight, dot, out } => poset_cmd(weight, dot, &out),
        Command::Witness { s, prime, trials, max_degree, seed, support, out } => {
            let support = match support {
                SupportArg::Full => Support::FullLadder,
                SupportArg::Diag => Support::TwoDiagonal,
            };
            let s = CastelnuovoPoly::parse(&s)?;
            let run = run_witness(&s, trials.max(1), prime, max_degree, seed, support)?;
            match out.format {
                Format::Json => pretty(&serde_json::to_value(&run).expect("witness run serializes")),
                _ => {
                    let mut t = format!(
                        "s = {s}, p = {prime}, trials = {}, degrees 0..={max_degree}, seed = {seed}\n",
                        run.trials
                    );
                    for p in &run.pairs {
                        let _ =
                            writeln!(t, "{}/{}  {}", p.successes, run.trials, render_resolution(&p.pair, out.glyphs()));
                        for r in p.reports.iter().filter(|r| !r.success) {
                            let bad: Vec<_> = r.mismatches().map(|d| d.degree.to_string()).collect();
                            let _ = writeln!(t, "    seed {} failed in degrees {}", r.spec.seed, bad.join(","));
                        }
                    }
                    let _ = writeln!(t, "verdict: {}", if run.all_succeeded() { "success" } else { "partial" });
                    t
                }
            }
        }
        Command::Check { max_weight } => {
            let outcomes = checks::run_all(max_weight);
            let mut t = String::new();
            for o in &outcomes {
                let _ = write!(t, "{} {}", if o.passed { "PASS" } else { "FAIL" }, o.name);
                if let Some(d) = &o.detail {
                    let _ = write!(t, " ({d})");
                }
                t.push('\n');
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let _ = writeln!(t, "{passed}/{} checks passed up to weight {max_weight}", outcomes.len());
            return Ok((t, passed == outcomes.len()));
        }
    };
    Ok((text, true))
}

fn enumerate_cmd(weight: u64, out: &Output) -> String {
    let all = castelnuovo::enumerate(weight);
    match out.format {
        Format::Json => {
            let items: Vec<_> = all
                .iter()
                .map(|s| {
                    json!({
                        "s": s.values(),
                        "s_poly": s.to_string(),
                        "weight": s.weight(),
                        "sigma": s.sigma(),
                        "partition": s.to_distinct_partition(),
                        "diagram": s.render_diagram(),
                    })
                })
                .collect();
            pretty(&json!({ "weight": weight, "count": all.len(), "polynomials": items }))
        }
        Format::Csv => {
            let mut t = String::from("s,sigma,partition\r\n");
            for s in &all {
                let parts: Vec<_> = s.to_distinct_partition().iter().map(u64::to_string).collect();
                let _ = write!(t, "\"{}\",{},\"{}\"\r\n", s, s.sigma(), parts.join("+"));
            }
            t
        }
        Format::Text => {
            let mut t = format!("weight {weight}: {} Castelnuovo polynomials\n", all.len());
            for s in &all {
                let parts: Vec<_> = s.to_distinct_partition().iter().map(u64::to_string).collect();
                let _ = writeln!(t, "\ns = {s}  (sigma {}, rows {})", s.sigma(), parts.join("+"));
                for line in s.render_diagram().lines() {
                    let _ = writeln!(t, "  {line}");
                }
            }
            t
        }
    }
}

fn betti_cmd(s: &CastelnuovoPoly, out: &Output) -> hilbstrata::Result<String> {
    let q = numerator_of(s);
    let pairs = enumerate_betti(&q)?;
    let count = count_resolutions(s);
    Ok(match out.format {
        Format::Json => {
            let items: Vec<_> = pairs
                .iter()
                .map(|p| {
                    json!({
                        "a": p.a(),
                        "b": p.b(),
                        "minimal": p.is_minimal(),
                        "text": render_resolution(p, out.glyphs()),
                    })
                })
                .collect();
            pretty(&json!({
                "s": s.values(),
                "q": q.to_string(),
                "count": pairs.len(),
                "closed_form_count": count.to_string(),
                "resolutions": items,
            }))
        }
        Format::Csv => {
            let mut t = String::from("minimal,resolution\r\n");
            for p in &pairs {
                let _ = write!(t, "{},\"{}\"\r\n", p.is_minimal(), render_resolution(p, out.glyphs()));
            }
            t
        }
        Format::Text => {
            let mut t = format!("s = {s}\nq = {q}\nresolutions: {} (closed form {count})\n", pairs.len());
            for p in &pairs {
                let mark = if p.is_minimal() { "  [minimal Betti numbers]" } else { "" };
                let _ = writeln!(t, "  {}{mark}", render_resolution(p, out.glyphs()));
            }
            t
        }
    })
}

fn poset_cmd(weight: u64, dot: bool, out: &Output) -> String {
    let poset = build_poset(weight);
    if dot {
        return poset.to_dot();
    }
    match out.format {
        Format::Json => {
            let nodes: Vec<_> = poset
                .nodes
                .iter()
                .map(|r| json!({ "s": r.s.values(), "dim": r.dim, "is_hmin": r.is_hmin, "is_hmax": r.is_hmax }))
                .collect();
            pretty(&json!({
                "weight": weight,
                "relation": "potential degenerations",
                "nodes": nodes,
                "covers": poset.edges,
                "incomparable": poset.incomparable_pairs(),
            }))
        }
        Format::Csv => {
            let mut t = String::from("lower,upper\r\n");
            for (lo, hi) in &poset.edges {
                let _ = write!(t, "\"{}\",\"{}\"\r\n", poset.nodes[*lo].s, poset.nodes[*hi].s);
            }
            t
        }
        Format::Text => {
            let mut t = format!("weight {weight}: {} strata (potential degenerations)\n", poset.nodes.len());
            for (i, r) in poset.nodes.iter().enumerate() {
                let _ = writeln!(t, "  [{i}] s = {}  dim {}", r.s, r.dim);
            }
            for (lo, hi) in &poset.edges {
                let _ = writeln!(t, "  [{lo}] < [{hi}]");
            }
            let inc = poset.incomparable_pairs();
            if inc.is_empty() {
                t.push_str("  chain\n");
            }
            for (i, j) in inc {
                let _ = writeln!(t, "  [{i}] and [{j}] incomparable");
            }
            t
        }
    }
}
