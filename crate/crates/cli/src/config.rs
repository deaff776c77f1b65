use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use crate::verify::Check;

/// Inclusive integer range, written `a..b`, `a..=b` or a single `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    pub fn contains(self, x: usize) -> bool {
        (self.lo..=self.hi).contains(&x)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for Span {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
            None => (s, s),
        };
        let lo: usize = lo.trim().parse().with_context(|| format!("bad range start in {s:?}"))?;
        let hi: usize = hi.trim().parse().with_context(|| format!("bad range end in {s:?}"))?;
        if lo > hi {
            bail!("empty range {s:?}");
        }
        Ok(Span { lo, hi })
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SpanInput {
    Text(String),
    Single(usize),
    Pair([usize; 2]),
}

impl SpanInput {
    fn resolve(self) -> Result<Span> {
        match self {
            SpanInput::Text(s) => s.parse(),
            SpanInput::Single(x) => Ok(Span { lo: x, hi: x }),
            SpanInput::Pair([lo, hi]) if lo <= hi => Ok(Span { lo, hi }),
            SpanInput::Pair(p) => bail!("empty range {p:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SweepFormat {
    Json,
    Csv,
}

/// Everything `verify` needs; built from flags, optionally layered over a
/// config file.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub k_range: Span,
    pub size_range: Span,
    pub n_range: Span,
    pub checks: Vec<Check>,
    pub budget: u64,
    pub output: Option<PathBuf>,
    pub format: SweepFormat,
    pub self_test: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            k_range: Span { lo: 2, hi: 3 },
            size_range: Span { lo: 1, hi: 6 },
            n_range: Span { lo: 1, hi: 6 },
            checks: Check::ALL.to_vec(),
            budget: kschur::tableaux::DEFAULT_BUDGET,
            output: None,
            format: SweepFormat::Json,
            self_test: false,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    k_range: Option<SpanInput>,
    size_range: Option<SpanInput>,
    n_range: Option<SpanInput>,
    checks: Option<Vec<String>>,
    budget: Option<u64>,
    output: Option<PathBuf>,
    format: Option<SweepFormat>,
    self_test: Option<bool>,
}

impl SweepConfig {
    /// Reads a flat TOML document with the same field names.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let raw: RawConfig = toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let mut cfg = SweepConfig::default();
        if let Some(r) = raw.k_range {
            cfg.k_range = r.resolve()?;
        }
        if let Some(r) = raw.size_range {
            cfg.size_range = r.resolve()?;
        }
        if let Some(r) = raw.n_range {
            cfg.n_range = r.resolve()?;
        }
        if let Some(names) = raw.checks {
            cfg.checks = names.iter().map(|n| n.parse()).collect::<Result<_>>()?;
        }
        if let Some(b) = raw.budget {
            cfg.budget = b;
        }
        cfg.output = raw.output;
        if let Some(f) = raw.format {
            cfg.format = f;
        }
        cfg.self_test = raw.self_test.unwrap_or(false);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 {
            bail!("budget must be at least 1");
        }
        if self.k_range.lo == 0 {
            bail!("k must be positive");
        }
        if self.checks.is_empty() {
            bail!("no checks selected");
        }
        Ok(())
    }
}
