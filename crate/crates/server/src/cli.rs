//! The `statescope` command line.

use std::fs;
use std::io::Write;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use statescope::analysis::{collect_patterns, pca_project, LabeledRange};
use statescope::dataset::{
    discover_configs, import_text_matrix, load_dataset, save_dataset, save_state_matrix, validate_dataset, Severity,
};
use statescope::engine::{run_match, MatchParams, MinOverlap, SelectionSpec, DEFAULT_TOP_K};
use statescope::synth::paren_dataset;
use statescope::Dataset;

use crate::api;
use crate::catalog::Catalog;

#[derive(Debug, Parser)]
#[command(name = "statescope", version, about = "Explore hidden state patterns in sequence models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert a whitespace-separated text matrix to the native format.
    Ingest {
        input: PathBuf,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check dataset configs, or every config under a directory.
    Validate {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Write a synthetic parenthesis dataset.
    GenParen {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        length: usize,
        #[arg(long, default_value_t = 20)]
        dims: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rank matches for a selection and print them as TSV.
    Match(MatchArgs),
    /// Project the patterns of labelled ranges and print CSV.
    Pca {
        config: PathBuf,
        /// Source id; defaults to the first source.
        #[arg(long)]
        source: Option<String>,
        /// Lines of `label start end`; `#` starts a comment.
        #[arg(long)]
        ranges: PathBuf,
        #[arg(long)]
        threshold: f32,
        #[arg(long, default_value_t = 2)]
        components: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Serve the HTTP API over a data root.
    Serve {
        #[arg(long, env = "STATESCOPE_ROOT")]
        root: PathBuf,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Debug, Args)]
pub struct MatchArgs {
    config: PathBuf,
    /// Source id; defaults to the first source.
    #[arg(long)]
    source: Option<String>,
    #[arg(long)]
    start: usize,
    #[arg(long)]
    end: usize,
    #[arg(long)]
    threshold: f32,
    #[arg(long)]
    left_limit: bool,
    #[arg(long)]
    right_limit: bool,
    /// A count (`3`) or a fraction of the selection (`0.5`).
    #[arg(long, value_parser = parse_min_overlap)]
    min_overlap: Option<MinOverlap>,
    #[arg(long, default_value_t = DEFAULT_TOP_K)]
    top_k: usize,
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long)]
    include_query: bool,
}

fn parse_min_overlap(s: &str) -> Result<MinOverlap, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(MinOverlap::Count(n));
    }
    s.parse::<f64>()
        .map(MinOverlap::Fraction)
        .map_err(|_| format!("{s:?} is neither a count nor a fraction"))
}

fn source_id(ds: &Dataset, requested: Option<String>) -> Result<String> {
    match requested {
        Some(id) if ds.source(&id).is_some() => Ok(id),
        Some(id) => bail!("dataset {:?} has no source {id:?}", ds.name()),
        None => Ok(ds.sources()[0].source_id().to_string()),
    }
}

fn parse_ranges(path: &Path) -> Result<Vec<LabeledRange>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut ranges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [label, start, end] = fields[..] else {
            bail!("{}:{}: expected `label start end`", path.display(), i + 1);
        };
        let parse = |v: &str| v.parse::<usize>().with_context(|| format!("{}:{}: bad index {v:?}", path.display(), i + 1));
        let (start, end) = (parse(start)?, parse(end)?);
        if start > end {
            bail!("{}:{}: start {start} exceeds end {end}", path.display(), i + 1);
        }
        ranges.push(LabeledRange::new(start, end, label));
    }
    Ok(ranges)
}

fn validate(paths: &[PathBuf], out: &mut dyn Write) -> Result<()> {
    let mut configs = Vec::new();
    for p in paths {
        if p.is_dir() {
            configs.extend(discover_configs(p)?);
        } else {
            configs.push(p.clone());
        }
    }
    let mut invalid = 0;
    for cfg in &configs {
        let report = validate_dataset(cfg);
        let status = if report.is_valid() { "ok" } else { "invalid" };
        writeln!(out, "{}: {status}", cfg.display())?;
        for e in &report.entries {
            let tag = match e.severity {
                Severity::Error => "error",
                Severity::Warning => "warning",
            };
            writeln!(out, "  {tag} {}: {}", e.kind, e.message)?;
        }
        invalid += usize::from(!report.is_valid());
    }
    if invalid > 0 {
        bail!("{invalid} of {} configs are invalid", configs.len());
    }
    Ok(())
}

fn match_tsv(args: MatchArgs, out: &mut dyn Write) -> Result<()> {
    let ds = load_dataset(&args.config)?;
    let source = source_id(&ds, args.source)?;
    let states = ds.source(&source).expect("checked above");
    let spec = SelectionSpec::new(source.clone(), args.start, args.end, args.threshold)
        .with_limits(args.left_limit, args.right_limit);
    let params = MatchParams {
        min_overlap: args.min_overlap,
        top_k: args.top_k,
        max_len: args.max_len,
        include_query: args.include_query,
    };
    let outcome = run_match(states, &spec, &params)?;
    let p = outcome.params;
    writeln!(
        out,
        "# dataset={} source={source} start={} end={} threshold={} left_limit={} right_limit={} min_overlap={} top_k={} max_len={} include_query={} s1={}",
        ds.name(), spec.start, spec.end, spec.threshold, spec.left_limit, spec.right_limit,
        p.min_overlap, p.top_k, p.max_len, p.include_query, outcome.s1
    )?;
    writeln!(out, "rank\tstart\tend\tlength\toverlap\tunion\ttokens")?;
    for (i, r) in outcome.results.iter().enumerate() {
        let tokens = ds.tokens().window(r.range.start, r.range.end).join(" ");
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{tokens}",
            i + 1,
            r.range.start,
            r.range.end,
            r.length(),
            r.overlap,
            r.union
        )?;
    }
    Ok(())
}

async fn serve(root: PathBuf, addr: SocketAddr) -> Result<()> {
    let catalog = Catalog::load(&root);
    match &catalog {
        Ok(c) => tracing::info!(
            "loaded {} datasets ({} invalid) from {}",
            c.datasets().len(),
            c.invalid().len(),
            root.display()
        ),
        Err(e) => tracing::error!("{e}"),
    }
    let listener = tokio::net::TcpListener::bind(addr).await.with_context(|| format!("binding {addr}"))?;
    tracing::info!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, api::router(catalog)).await?;
    Ok(())
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Ingest { input, rows, cols, out: dest } => {
            let m = import_text_matrix(&input, rows, cols).with_context(|| format!("ingesting {}", input.display()))?;
            save_state_matrix(&m, &dest)?;
            writeln!(out, "wrote {rows}x{cols} matrix to {}", dest.display())?;
        }
        Command::Validate { paths } => validate(&paths, out)?,
        Command::GenParen { seed, length, dims, out: dir } => {
            let ds = paren_dataset(seed, length, dims)?;
            let cfg = save_dataset(&ds, &dir)?;
            writeln!(out, "{}", cfg.display())?;
        }
        Command::Match(args) => match_tsv(args, out)?,
        Command::Pca { config, source, ranges, threshold, components, out: dest } => {
            let ds = load_dataset(&config)?;
            let source = source_id(&ds, source)?;
            let ranges = parse_ranges(&ranges)?;
            let patterns = collect_patterns(ds.source(&source).expect("checked above"), &ranges, threshold)?;
            let csv = pca_project(&patterns, components)?.to_csv();
            match dest {
                Some(path) => fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(csv.as_bytes())?,
            }
        }
        Command::Serve { root, host, port } => {
            tokio::runtime::Runtime::new()?.block_on(serve(root, SocketAddr::new(host, port)))?;
        }
    }
    Ok(())
}
