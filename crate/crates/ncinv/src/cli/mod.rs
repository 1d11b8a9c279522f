//! The `ncinv` command line. [`run`] does all the work and returns the text
//! to print plus an exit code, so the binary stays a thin wrapper.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

pub mod cache;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::action::{default_witnesses, is_invariant, GroupElement};
use crate::bracket::{to_noncrossing, BracketExpression};
use crate::error::{Error, Result};
use crate::free_prob::{moments_from_cumulants, psi_mixed_moment, CumulantSequence};
use crate::hilbert::{
    compare_methods, dims_by_chebyshev, dims_by_enumeration, dims_by_quadrature, DEFAULT_NODES,
};
use crate::partition::count_m_partite_nc_pairings;
use crate::symbolic::noncrossing_basis;

use cache::{Cache, CacheKey};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ncinv",
    version,
    about = "Noncommutative SL(2) invariants of binary forms"
)]
pub struct Cli {
    /// Bypass the result cache entirely.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Cache directory (default: $NCINV_CACHE_DIR, then a temp directory).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Enumeration,
    Chebyshev,
    Quadrature,
    All,
}

#[derive(Debug, Args)]
pub struct Shape {
    /// Degree of the binary forms.
    #[arg(long)]
    pub d: usize,
    /// Number of tensor factors.
    #[arg(long)]
    pub m: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of the invariant m-linear forms.
    Dim(Shape),
    /// The noncrossing basis, one polynomial per line.
    Basis {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hilbert series coefficients dims[0..=max-m].
    Hilbert {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_m: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        /// Quadrature panels.
        #[arg(long, default_value_t = DEFAULT_NODES)]
        nodes: usize,
        /// Output format; defaults to csv for `all`, text otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Decimal places for quadrature values.
        #[arg(long, default_value_t = 12)]
        precision: usize,
    },
    /// Rewrite a bracket expression (JSON file) into noncrossing form.
    Rewrite {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check invariance of every basis element.
    Verify {
        #[command(flatten)]
        shape: Shape,
        /// Number of pseudorandom witnesses besides the fixed ones.
        #[arg(long, default_value_t = 5)]
        witnesses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra witness matrix as four rationals a b c e.
        #[arg(long, num_args = 4, value_names = ["A", "B", "C", "E"], allow_hyphen_values = true)]
        matrix: Vec<String>,
    },
    /// Moments m_0..m_n from a cumulant rule.
    Moments {
        /// semicircle | free-poisson | table:[c1,c2,...]
        #[arg(long)]
        rule: String,
        #[arg(long)]
        n: usize,
    },
    /// Mixed moment φ(ψ_{k1} ⋯ ψ_{km}) for a cumulant rule.
    Psi {
        #[arg(long)]
        rule: String,
        /// Comma-separated orders k1,k2,...
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cache = if cli.no_cache {
        Cache::disabled()
    } else {
        Cache::resolve(cli.cache_dir.as_deref())
    };
    match &cli.command {
        Command::Dim(Shape { d, m }) => {
            let key = CacheKey {
                operation: "dim".into(),
                params: json!({ "d": d, "m": m }),
            };
            let out = cache.get_or_compute(key, || {
                Ok(format!("{}\n", count_m_partite_nc_pairings(*m, *d)))
            })?;
            Ok(Outcome::ok(out))
        }
        Command::Basis { shape, format } => {
            let (d, m) = (shape.d, shape.m);
            let key = CacheKey {
                operation: "basis".into(),
                params: json!({ "d": d, "m": m, "format": format!("{format:?}") }),
            };
            let out = cache.get_or_compute(key, || {
                let basis = noncrossing_basis(m, d);
                Ok(match format {
                    Format::Json => {
                        let items: Vec<serde_json::Value> = basis
                            .iter()
                            .map(|p| serde_json::from_str(&p.to_json()).expect("valid json"))
                            .collect();
                        format!("{}\n", serde_json::to_string(&items)?)
                    }
                    _ => basis.iter().map(|p| format!("{p}\n")).collect(),
                })
            })?;
            Ok(Outcome::ok(out))
        }
        Command::Hilbert {
            d,
            max_m,
            method,
            nodes,
            format,
            precision,
        } => {
            if *nodes < 2 {
                return Err(Error::Parse("--nodes must be at least 2".into()));
            }
            let format = format.unwrap_or(match method {
                MethodArg::All => Format::Csv,
                _ => Format::Text,
            });
            let key = CacheKey {
                operation: "hilbert".into(),
                params: json!({
                    "d": d, "max_m": max_m, "method": format!("{method:?}"),
                    "nodes": nodes, "format": format!("{format:?}"), "precision": precision,
                }),
            };
            let out = cache.get_or_compute(key, || {
                hilbert_output(*d, *max_m, *method, *nodes, format, *precision)
            })?;
            Ok(Outcome::ok(out))
        }
        Command::Rewrite { file, format } => {
            let text = std::fs::read_to_string(file)?;
            let expr = BracketExpression::from_json(&text)?;
            let normal = to_noncrossing(&expr);
            let out = match format {
                Format::Json => format!("{}\n", normal.to_json()),
                _ => normal
                    .terms()
                    .map(|(chords, c)| format!("{c} {}\n", serde_json::to_string(chords).unwrap()))
                    .collect(),
            };
            Ok(Outcome::ok(out))
        }
        Command::Verify {
            shape,
            witnesses,
            seed,
            matrix,
        } => {
            let mut ws = default_witnesses(*witnesses, *seed);
            for chunk in matrix.chunks(4) {
                let refs: Vec<&str> = chunk.iter().map(String::as_str).collect();
                ws.push(GroupElement::parse(&refs)?);
            }
            let mut out = String::new();
            let mut failed = false;
            for p in noncrossing_basis(shape.m, shape.d) {
                let ok = is_invariant(&p, &ws)?;
                failed |= !ok;
                out.push_str(&format!("{} {p}\n", if ok { "PASS" } else { "FAIL" }));
            }
            Ok(Outcome {
                stdout: out,
                code: if failed { EXIT_VERIFY_FAILED } else { EXIT_OK },
            })
        }
        Command::Moments { rule, n } => {
            let c: CumulantSequence = rule.parse()?;
            let m = moments_from_cumulants(&c, *n);
            Ok(Outcome::ok(format!("{}\n", join(m.values()))))
        }
        Command::Psi { rule, k } => {
            let c: CumulantSequence = rule.parse()?;
            Ok(Outcome::ok(format!("{}\n", psi_mixed_moment(k, &c))))
        }
    }
}

fn hilbert_output(
    d: usize,
    max_m: usize,
    method: MethodArg,
    nodes: usize,
    format: Format,
    precision: usize,
) -> Result<String> {
    let exact = |series: crate::hilbert::DimensionSeries| -> Result<String> {
        Ok(match format {
            Format::Json => format!("{}\n", serde_json::to_string(&series)?),
            _ => format!("{}\n", join(&series.dims)),
        })
    };
    match method {
        MethodArg::Enumeration => exact(dims_by_enumeration(d, max_m)),
        MethodArg::Chebyshev => exact(dims_by_chebyshev(d, max_m)),
        MethodArg::Quadrature => {
            let q = dims_by_quadrature(d, max_m, nodes);
            Ok(match format {
                Format::Json => format!("{}\n", serde_json::to_string(&q)?),
                _ => {
                    let vals: Vec<String> = q
                        .values
                        .iter()
                        .map(|v| format!("{v:.precision$}"))
                        .collect();
                    format!("{}\n", vals.join(","))
                }
            })
        }
        MethodArg::All => {
            let report = compare_methods(d, max_m, nodes);
            Ok(match format {
                Format::Json => format!("{}\n", serde_json::to_string(&report)?),
                _ => report.to_csv(precision),
            })
        }
    }
}
