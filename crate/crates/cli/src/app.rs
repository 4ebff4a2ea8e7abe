//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wopow_core::{
    clamp_structure_check, compare_powers_detailed, enumerate_covers, enumerate_strong_covers,
    irreducible_decomposition, phi_commutation_check, symbolic_power_grouped,
    symbolic_power_localized, theorem_predicate, Limits, Status, TheoremTag,
};

use crate::input::{parse_list, GraphArgs};
use crate::report::{
    names, ClampReport, CompareReport, ComponentReport, CoversReport, DecompositionReport,
    EdgeIdealReport, PhiReport, SymbolicReport, VerdictReport,
};
use crate::sweep::{run_sweep, SweepFamily, SweepReport, SweepSpec};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "wopow", version, about = "Edge ideals of weighted oriented graphs and their powers")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Largest vertex count for cover enumeration
    #[arg(long, global = true, default_value_t = 24)]
    pub max_vertices: usize,
    /// Largest power s
    #[arg(long, global = true, default_value_t = 6)]
    pub max_power: u32,
    /// Largest generator count of any intermediate ideal
    #[arg(long, global = true, default_value_t = 200_000)]
    pub max_generators: usize,
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "WOPOW_THREADS")]
    pub threads: Option<usize>,
}

impl GlobalOpts {
    fn limits(&self) -> Limits {
        Limits {
            max_vertices: self.max_vertices,
            max_power: self.max_power,
            max_generators: self.max_generators,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Grouped,
    Localized,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the edge ideal
    EdgeIdeal(GraphArgs),
    /// List strong vertex covers with their L-partitions
    Covers {
        /// Include covers that are not strong
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Irreducible decomposition over strong covers
    Decompose(GraphArgs),
    /// Generators of the s-th symbolic power
    Symbolic {
        #[arg(short, long)]
        s: u32,
        #[arg(long, value_enum, default_value = "grouped")]
        method: Method,
        /// Omit elapsed_ms so output is reproducible
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Compare the s-th ordinary and symbolic powers
    Compare {
        #[arg(short, long)]
        s: u32,
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Check that the sink-weight reset commutes with both powers
    PhiCheck {
        #[arg(short, long)]
        s: u32,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Check the structure shared with the weights-clamped-to-two graph
    ClampCheck {
        #[arg(short, long)]
        s: u32,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Print a graph as JSON, or evaluate a theorem on it
    Family {
        /// Theorem to evaluate
        #[arg(long)]
        theorem: Option<TheoremTag>,
        #[arg(long, default_value_t = 3)]
        s_max: u32,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Run a theorem sweep or the random oracle suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub sweep: SweepFamily,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub s_max: u32,
    /// Largest size parameter (family-specific default)
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Seeded samples per size (family-specific default)
    #[arg(long)]
    pub samples: Option<usize>,
    /// Multipartite part sizes, e.g. "1,1,1;2,1,1"
    #[arg(long)]
    pub parts: Option<String>,
}

/// A rendered command result and its exit status.
struct Outcome {
    json: String,
    text: String,
    code: i32,
}

fn outcome<T: Serialize>(value: &T, text: String, code: i32) -> Result<Outcome, CliError> {
    let json = serde_json::to_string_pretty(value).expect("reports serialize");
    Ok(Outcome { json, text, code })
}

/// Parses `args` and runs the command, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let format = cli.global.format;
    match execute(&cli) {
        Ok(o) => {
            let body = match format {
                Format::Json => o.json,
                Format::Text => o.text,
            };
            let _ = writeln!(out, "{}", body.trim_end());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn elapsed_ms(start: Instant, no_timing: bool) -> Option<u64> {
    (!no_timing).then(|| start.elapsed().as_millis() as u64)
}

fn with_pool<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, CliError> {
    match threads {
        Some(t) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {t} threads: {e}")))?
            .install(f)),
        None => Ok(f()),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let limits = cli.global.limits();
    let threads = cli.global.threads;
    match &cli.command {
        Command::EdgeIdeal(args) => {
            let g = args.load()?;
            let r = EdgeIdealReport::new(&g);
            let mut text = format!("I(D) = {}\n", r.ideal);
            if !r.normalized_sources.is_empty() {
                text += &format!("sources set to weight 1: {}\n", r.normalized_sources.join(", "));
            }
            outcome(&r, text, 0)
        }
        Command::Covers { all, graph } => {
            let g = graph.load()?;
            let census = enumerate_strong_covers(&g, limits.max_vertices)?;
            let shown = if *all {
                enumerate_covers(&g, limits.max_vertices)?
            } else {
                census.strong_covers.clone()
            };
            let r = CoversReport::new(&g, &census, &shown);
            let mut text = String::new();
            for c in &r.covers {
                text += &format!(
                    "{{{}}} L1={{{}}} L2={{{}}} L3={{{}}}{}{} I_C={}\n",
                    c.cover.join(","),
                    c.l1.join(","),
                    c.l2.join(","),
                    c.l3.join(","),
                    if c.minimal { " minimal" } else { "" },
                    if c.strong { " strong" } else { "" },
                    c.ideal
                );
            }
            outcome(&r, text, 0)
        }
        Command::Decompose(args) => {
            let g = args.load()?;
            let parts = irreducible_decomposition(&g, limits.max_vertices)?;
            let r = DecompositionReport {
                edge_ideal: g.edge_ideal().to_text(),
                components: parts
                    .iter()
                    .map(|(p, ideal)| ComponentReport {
                        cover: names(&g, p.cover),
                        ideal: ideal.to_text(),
                    })
                    .collect(),
                verified: true,
            };
            let body: Vec<&str> = r.components.iter().map(|c| c.ideal.as_str()).collect();
            let text = format!("{} = {}\n", r.edge_ideal, body.join(" ∩ "));
            outcome(&r, text, 0)
        }
        Command::Symbolic {
            s,
            method,
            no_timing,
            graph,
        } => {
            let g = graph.load()?;
            let start = Instant::now();
            let (ideal, agree) = with_pool(threads, || -> Result<_, CliError> {
                Ok(match method {
                    Method::Grouped => (symbolic_power_grouped(&g, *s, &limits)?, None),
                    Method::Localized => (symbolic_power_localized(&g, *s, &limits)?, None),
                    Method::Both => {
                        let a = symbolic_power_grouped(&g, *s, &limits)?;
                        let b = symbolic_power_localized(&g, *s, &limits)?;
                        let same = a.ideal_equals(&b)?;
                        (a, Some(same))
                    }
                })
            })??;
            let name = match method {
                Method::Grouped => "grouped",
                Method::Localized => "localized",
                Method::Both => "both",
            };
            let mut r = SymbolicReport::new(*s, name, &ideal);
            r.methods_agree = agree;
            r.elapsed_ms = elapsed_ms(start, *no_timing);
            let text = format!("I^({s}) = {}\n", ideal.to_text());
            let code = if agree == Some(false) { 1 } else { 0 };
            outcome(&r, text, code)
        }
        Command::Compare {
            s,
            no_timing,
            graph,
        } => {
            let g = graph.load()?;
            let start = Instant::now();
            let cmp = with_pool(threads, || compare_powers_detailed(&g, *s, &limits))??;
            let mut r = CompareReport::new(&g, &cmp.report);
            r.elapsed_ms = elapsed_ms(start, *no_timing);
            let mut text = format!(
                "s={s}: {} ({} ordinary, {} symbolic generators)\n",
                if r.equal { "equal" } else { "unequal" },
                r.ordinary_gens,
                r.symbolic_gens
            );
            if let Some(w) = &r.witness {
                text += &format!("witness: {w}\n");
            }
            if !r.methods_agree {
                text += "grouped and localized symbolic powers disagree\n";
            }
            let code = if r.methods_agree { 0 } else { 1 };
            outcome(&r, text, code)
        }
        Command::PhiCheck { s, graph } => {
            let g = graph.load()?;
            let c = with_pool(threads, || phi_commutation_check(&g, *s, &limits))??;
            let r = PhiReport::new(&g, *s, &c);
            let text = format!(
                "s={s}: reset {{{}}}; symbolic {}, ordinary {}\n",
                r.reset.join(","),
                if r.symbolic_commutes { "commutes" } else { "does not commute" },
                if r.ordinary_commutes { "commutes" } else { "does not commute" },
            );
            outcome(&r, text, if r.holds { 0 } else { 1 })
        }
        Command::ClampCheck { s, graph } => {
            let g = graph.load()?;
            let c = with_pool(threads, || clamp_structure_check(&g, *s, &limits))??;
            let r = ClampReport::new(&g, *s, &c);
            let text = format!(
                "s={s}: strong covers {}, components {}, methods agree {}/{}\n",
                if r.strong_covers_match { "match" } else { "differ" },
                if r.components_correspond { "correspond" } else { "differ" },
                r.original_methods_agree,
                r.clamped_methods_agree
            );
            outcome(&r, text, if r.holds { 0 } else { 1 })
        }
        Command::Family {
            theorem,
            s_max,
            graph,
        } => {
            let g = graph.load()?;
            match theorem {
                None => {
                    let json = g.to_json();
                    let text = format!("I(D) = {}\n", g.edge_ideal().to_text());
                    outcome(&json, text, 0)
                }
                Some(tag) => {
                    let v = with_pool(threads, || theorem_predicate(&g, *tag, *s_max, &limits))??;
                    let r = VerdictReport::new(&g, &v);
                    let mut text = format!(
                        "{}: {} (hypothesis {}, equality at s={:?}: {})\n",
                        r.theorem, r.status, r.hypothesis, r.tested_powers, r.conclusion
                    );
                    if let Some(w) = &r.witness_check {
                        text += &format!(
                            "witness {} at s={}: in symbolic {}, in ordinary {}\n",
                            w.monomial, w.s, w.in_symbolic, w.in_ordinary
                        );
                    }
                    let code = if v.status == Status::Violated { 1 } else { 0 };
                    outcome(&r, text, code)
                }
            }
        }
        Command::Verify(args) => {
            let mut spec = SweepSpec::new(args.sweep);
            spec.seed = args.seed;
            spec.s_max = args.s_max;
            spec.threads = threads;
            spec.limits = limits;
            if let Some(n) = args.n_max {
                spec.n_max = n;
            }
            if let Some(k) = args.samples {
                spec.samples = k;
            }
            if let Some(p) = &args.parts {
                spec.parts = p
                    .split(';')
                    .map(|shape| parse_list(shape, "part size"))
                    .collect::<Result<_, _>>()?;
            }
            let r = run_sweep(&spec)?;
            let text = sweep_text(&r);
            outcome(&r, text, if r.passed() { 0 } else { 1 })
        }
    }
}

fn sweep_text(r: &SweepReport) -> String {
    let mut text = String::new();
    for inst in &r.instances {
        text += &format!("{:>4} {:<13} {}", inst.index, inst.status, inst.label);
        if let Some(reason) = &inst.reason {
            text += &format!(" ({reason})");
        }
        text.push('\n');
    }
    let c = &r.counts;
    text += &format!(
        "{}: {} instances, {} satisfied, {} violated, {} inconclusive, {} skipped\n",
        r.sweep, c.total, c.satisfied, c.violated, c.inconclusive, c.skipped
    );
    text
}
