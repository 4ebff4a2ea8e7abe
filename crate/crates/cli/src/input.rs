//! Graph ingestion: JSON files and inline family constructors.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, ValueEnum};
use wopow_core::{
    make_clique_sum, make_complete_multipartite, make_cycle, make_path, make_star, GraphJson,
    Orientation, WeightedOrientedGraph,
};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cycle,
    Path,
    Star,
    CliqueSum,
    Multipartite,
}

/// Where a command reads its graph from: a JSON file or a family constructor.
#[derive(Args, Clone, Debug, Default)]
pub struct GraphArgs {
    /// Graph JSON file; vertex order fixes the variable order
    #[arg(value_name = "GRAPH", conflicts_with = "family")]
    pub file: Option<PathBuf>,

    /// Build the graph from a named family instead of a file
    #[arg(long, value_enum)]
    pub family: Option<Family>,

    /// Family size: cycle length, path length, star leaves, or the first
    /// clique-sum half-length
    #[arg(long)]
    pub n: Option<usize>,

    /// Second clique-sum half-length
    #[arg(long)]
    pub m: Option<usize>,

    /// Multipartite part sizes, e.g. "2,1,1"
    #[arg(long)]
    pub parts: Option<String>,

    /// Comma-separated vertex weights in family order (default all 1)
    #[arg(long)]
    pub weights: Option<String>,

    /// natural, seeded:<seed>, or explicit:<bits> with one 0/1 per edge
    #[arg(long, default_value = "natural")]
    pub orient: OrientArg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientArg(pub Orientation);

impl Default for OrientArg {
    fn default() -> Self {
        OrientArg(Orientation::Natural)
    }
}

impl FromStr for OrientArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "natural" {
            return Ok(OrientArg(Orientation::Natural));
        }
        if let Some(seed) = s.strip_prefix("seeded:") {
            let seed = seed
                .parse()
                .map_err(|_| format!("bad seed `{seed}` in orientation"))?;
            return Ok(OrientArg(Orientation::Seeded(seed)));
        }
        if let Some(bits) = s.strip_prefix("explicit:") {
            let flags = bits
                .chars()
                .filter(|c| !matches!(c, ',' | ' '))
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(format!("orientation bits must be 0 or 1, got `{c}`")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(OrientArg(Orientation::Explicit(flags)));
        }
        Err(format!(
            "unknown orientation `{s}` (expected natural, seeded:<seed> or explicit:<bits>)"
        ))
    }
}

pub fn parse_list<T: FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad {what} entry `{t}`")))
        })
        .collect()
}

pub fn read_graph_file(path: &Path) -> Result<WeightedOrientedGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_graph_text(&text, &path.display().to_string())
}

pub fn parse_graph_text(text: &str, origin: &str) -> Result<WeightedOrientedGraph, CliError> {
    let json: GraphJson = serde_json::from_str(text).map_err(|e| {
        CliError::Input(format!(
            "{origin}:{}:{}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    WeightedOrientedGraph::from_json(&json).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

impl GraphArgs {
    pub fn load(&self) -> Result<WeightedOrientedGraph, CliError> {
        match (&self.file, self.family) {
            (Some(path), None) => read_graph_file(path),
            (None, Some(family)) => self.build(family),
            (None, None) => Err(CliError::Usage(
                "expected a graph file or --family".into(),
            )),
            (Some(_), Some(_)) => Err(CliError::Usage(
                "a graph file and --family are mutually exclusive".into(),
            )),
        }
    }

    fn build(&self, family: Family) -> Result<WeightedOrientedGraph, CliError> {
        let need_n = || {
            self.n
                .ok_or_else(|| CliError::Usage(format!("--family {family:?} needs --n").to_lowercase()))
        };
        let parts: Vec<usize> = match (&self.parts, family) {
            (Some(p), Family::Multipartite) => parse_list(p, "part size")?,
            (None, Family::Multipartite) => {
                return Err(CliError::Usage("--family multipartite needs --parts".into()))
            }
            _ => Vec::new(),
        };
        let count = match family {
            Family::Cycle => need_n()?,
            Family::Path | Family::Star => need_n()? + 1,
            Family::CliqueSum => 2 * need_n()? + 1 + 2 * self.m.unwrap_or(self.n.unwrap_or(1)),
            Family::Multipartite => parts.iter().sum(),
        };
        let weights = match &self.weights {
            Some(w) => parse_list(w, "weight")?,
            None => vec![1; count],
        };
        let o = &self.orient.0;
        let built = match family {
            Family::Cycle => make_cycle(need_n()?, &weights, o),
            Family::Path => make_path(need_n()?, &weights, o),
            Family::Star => make_star(need_n()?, &weights, o),
            Family::CliqueSum => {
                let n = need_n()?;
                make_clique_sum(n, self.m.unwrap_or(n), &weights, o)
            }
            Family::Multipartite => make_complete_multipartite(&parts, &weights, o),
        };
        built.map_err(|e| CliError::Usage(e.to_string()))
    }
}
