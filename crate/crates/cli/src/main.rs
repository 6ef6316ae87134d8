//! splitmat: classify matroids, reproduce census statistics, build lifts,
//! subdivide hypersimplices and verify Dressian rays.
//!
//! Exit codes: 0 success, 2 validation error, 3 size guard, 4 internal
//! certificate failure.

mod literal;

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use splitmat::census::{self, SubsetOrder};
use splitmat::lift::LiftVector;
use splitmat::lp::Rat;
use splitmat::{
    classify, corank_vector, export_subdivision, knuth_stable_set, nested_matroid_nf,
    parallel_cofree_lift, regular_subdivision_with_limit, secondary_cone_dimension,
    series_free_lift, verify_ray_with_limit, ClassificationReport, Error, Flat, Matroid, Result,
    Subset, DEFAULT_MAX_VERTICES,
};

#[derive(Parser)]
#[command(name = "splitmat", version, about = "Split matroid toolkit: classification, census, lifts, subdivisions and ray checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Abort on invalid corpus lines (default)
    #[arg(long, global = true)]
    strict: bool,
    /// Skip invalid corpus lines, reporting them on stderr
    #[arg(long, global = true, conflicts_with = "strict")]
    lenient: bool,
    /// Vertex guard for the subdivision engine
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: u64,
    /// Ground-set guard for isomorphism-based operations
    #[arg(long, global = true, default_value_t = splitmat::DEFAULT_ISO_LIMIT)]
    max_n: usize,
    /// Worker threads for corpus processing
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Subset ordering of corpus file lines
    #[arg(long, global = true, value_enum, default_value_t = Ordering::Lex)]
    ordering: Ordering,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ordering {
    Lex,
    RevLex,
    Colex,
}

impl From<Ordering> for SubsetOrder {
    fn from(o: Ordering) -> SubsetOrder {
        match o {
            Ordering::Lex => SubsetOrder::Lex,
            Ordering::RevLex => SubsetOrder::ReversedLex,
            Ordering::Colex => SubsetOrder::Colex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify matroids: connectivity, flacets, split flacets and the
    /// split/paving/sparse-paving/nested flags
    Classify {
        /// Corpus file to classify
        #[arg(long)]
        input: Option<PathBuf>,
        /// Inline literal, e.g. "d=2 n=6 nonbases=12,34,56"
        #[arg(long)]
        matroid: Option<String>,
    },
    /// Census statistics for all (d,n)-matroids up to isomorphism
    Census {
        d: usize,
        n: usize,
        /// Enumerate by brute force (desk scale)
        #[arg(long)]
        enumerate: bool,
        /// Ingest an external corpus file instead
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Corank vectors and the series-free / parallel-cofree / nested lifts
    Lift {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        matroid: Option<String>,
        /// One of: corank:K, series-free, parallel-cofree, nested:F
        #[arg(long)]
        kind: String,
    },
    /// Verify that the corank vector of the series-free lift spans a ray
    RayCheck {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        matroid: Option<String>,
    },
    /// Regular subdivision of the (k,n)-hypersimplex under a lift
    Subdivide {
        k: usize,
        n: usize,
        /// Comma-separated rational heights in lexicographic subset order
        lift: String,
    },
    /// Knuth stable set in the Johnson graph J(d,n)
    Knuth { d: usize, n: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn out_writer(cli: &Cli) -> Result<Box<dyn Write>> {
    Ok(match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

/// Loads the inputs of matroid-consuming commands: one inline literal or a
/// whole corpus file.
fn load_matroids(
    cli: &Cli,
    input: &Option<PathBuf>,
    matroid: &Option<String>,
) -> Result<Vec<Matroid>> {
    match (input, matroid) {
        (Some(path), None) => {
            let reader = BufReader::new(File::open(path)?);
            let parsed = census::parse_corpus(reader, !cli.lenient, cli.ordering.into())?;
            for (line, err) in &parsed.flagged {
                eprintln!("line {line} skipped: {err}");
            }
            Ok(parsed.matroids)
        }
        (None, Some(text)) => Ok(vec![literal::parse_matroid_literal(text)?]),
        _ => Err(Error::InvalidParams("give exactly one of --input or --matroid".into())),
    }
}

fn run(cli: &Cli) -> Result<()> {
    let mut out = out_writer(cli)?;
    match &cli.command {
        Command::Classify { input, matroid } => {
            let matroids = load_matroids(cli, input, matroid)?;
            let reports: Vec<ClassificationReport> =
                matroids.par_iter().map(classify).collect();
            match cli.format {
                Format::Json => emit_json(&mut out, json!({ "schema": "splitmat/1", "reports": reports }))?,
                _ => {
                    for (i, rep) in reports.iter().enumerate() {
                        render_report(&mut out, i, rep, 0)?;
                    }
                }
            }
        }
        Command::Census { d, n, enumerate, input } => {
            let matroids = match (enumerate, input) {
                (true, None) => {
                    if *n > cli.max_n {
                        return Err(Error::LimitExceeded(format!(
                            "census enumeration over n = {n} exceeds --max-n {}",
                            cli.max_n
                        )));
                    }
                    census::enumerate_matroids(*d, *n)?
                }
                (false, Some(path)) => {
                    let reader = BufReader::new(File::open(path)?);
                    let parsed = census::parse_corpus(reader, !cli.lenient, cli.ordering.into())?;
                    for (line, err) in &parsed.flagged {
                        eprintln!("line {line} skipped: {err}");
                    }
                    if parsed.d != *d || parsed.n != *n {
                        return Err(Error::InvalidParams(format!(
                            "file holds ({},{})-matroids, requested ({d},{n})",
                            parsed.d, parsed.n
                        )));
                    }
                    parsed.matroids
                }
                _ => {
                    return Err(Error::InvalidParams(
                        "give exactly one of --enumerate or --input".into(),
                    ))
                }
            };
            let rec = census::census_stats(&matroids)?;
            match cli.format {
                Format::Csv => {
                    writeln!(out, "{}", census::CensusRecord::CSV_HEADER)?;
                    writeln!(out, "{}", rec.csv_row())?;
                }
                Format::Json => emit_json(&mut out, json!({ "schema": "splitmat/1", "census": rec }))?,
                Format::Text => {
                    writeln!(
                        out,
                        "({},{}): total {} | connected {} | paving {} ({}%) | sparse paving {} | split {} ({}%) | nested {}",
                        rec.d, rec.n, rec.total, rec.connected, rec.paving, rec.paving_pct,
                        rec.sparse_paving, rec.split, rec.split_pct, rec.nested
                    )?;
                }
            }
        }
        Command::Lift { input, matroid, kind } => {
            let matroids = load_matroids(cli, input, matroid)?;
            for (i, m) in matroids.iter().enumerate() {
                emit_lift(&mut out, cli, i, m, kind)?;
            }
        }
        Command::RayCheck { input, matroid } => {
            let matroids = load_matroids(cli, input, matroid)?;
            let mut reports = Vec::new();
            for (i, m) in matroids.iter().enumerate() {
                let report = verify_ray_with_limit(m, cli.max_vertices)?;
                match cli.format {
                    Format::Json => reports.push(report),
                    _ => {
                        let verdict = if report.passed() { "PASS" } else { "FAIL" };
                        writeln!(
                            out,
                            "matroid {i}: {verdict} (cells {}/{}, cone dimension {})",
                            report.actual_cell_count, report.expected_cell_count, report.cone_dim
                        )?;
                        for cell in &report.missing_cells {
                            writeln!(out, "  missing cell: {}", subsets_line(cell))?;
                        }
                        for cell in &report.extra_cells {
                            writeln!(out, "  unexpected cell: {}", subsets_line(cell))?;
                        }
                    }
                }
            }
            if cli.format == Format::Json {
                emit_json(&mut out, json!({ "schema": "splitmat/1", "reports": reports }))?;
            }
        }
        Command::Subdivide { k, n, lift } => {
            let heights: Vec<Rat> = lift
                .split(',')
                .map(|tok| {
                    Rat::from_str(tok.trim())
                        .map_err(|_| Error::InvalidParams(format!("bad height `{tok}`")))
                })
                .collect::<Result<_>>()?;
            let lv = LiftVector::new(*k, *n, heights)?;
            let sub = regular_subdivision_with_limit(*k, *n, &lv, cli.max_vertices)?;
            match cli.format {
                Format::Json => {
                    let cone = secondary_cone_dimension(&sub)?;
                    let c = splitmat::codec(*n, *k);
                    let cells: Vec<Vec<Subset>> = sub
                        .cells
                        .iter()
                        .map(|cell| cell.iter().map(|&i| c.subset(i)).collect())
                        .collect();
                    emit_json(
                        &mut out,
                        json!({
                            "schema": "splitmat/1",
                            "k": k, "n": n,
                            "cells": cells,
                            "dual_edges": sub.dual_edges,
                            "is_matroid_subdivision": splitmat::is_matroid_subdivision(&sub),
                            "tropical_linear_space": splitmat::tropical_linear_space(&sub),
                            "secondary_cone": cone,
                        }),
                    )?;
                }
                _ => write!(out, "{}", export_subdivision(&sub))?,
            }
        }
        Command::Knuth { d, n } => {
            let set = knuth_stable_set(*d, *n)?;
            let (lo, _) = splitmat::dressian_dim_bounds(*d, *n)?;
            let bound = lo + Rat::from_integer(1.into()); // C(n,d)/n
            match cli.format {
                Format::Json => emit_json(
                    &mut out,
                    json!({
                        "schema": "splitmat/1",
                        "d": d, "n": n,
                        "size": set.len(),
                        "lower_bound": bound.to_string(),
                        "stable_set": set,
                    }),
                )?,
                _ => {
                    writeln!(out, "stable set in J({d},{n}): size {} >= bound {}", set.len(), bound)?;
                    writeln!(out, "{}", subsets_line(&set))?;
                }
            }
        }
    }
    Ok(())
}

fn subsets_line(subsets: &[Subset]) -> String {
    subsets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit_json<W: Write>(out: &mut W, value: serde_json::Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))?;
    Ok(())
}

fn render_report<W: Write>(
    out: &mut W,
    index: usize,
    rep: &ClassificationReport,
    depth: usize,
) -> Result<()> {
    let pad = "  ".repeat(depth);
    if depth == 0 {
        writeln!(out, "{pad}matroid {index}: (d={}, n={}), {} bases", rep.rank, rep.n, rep.num_bases)?;
    } else {
        writeln!(out, "{pad}component {index}: (d={}, n={}), {} bases", rep.rank, rep.n, rep.num_bases)?;
    }
    writeln!(out, "{pad}  connected: {}", rep.connected)?;
    if rep.connected {
        let fl: Vec<Subset> = rep.flacets.iter().map(|f| f.elements).collect();
        let sp: Vec<Subset> = rep.split_flacets.iter().map(|f| f.elements).collect();
        writeln!(out, "{pad}  flacets: {}", subsets_line(&fl))?;
        writeln!(out, "{pad}  split flacets: {}", subsets_line(&sp))?;
    }
    writeln!(
        out,
        "{pad}  split: {} | paving: {} | sparse paving: {} | nested: {}",
        rep.is_split, rep.is_paving, rep.is_sparse_paving, rep.is_nested
    )?;
    for (i, comp) in rep.component_summaries.iter().enumerate() {
        writeln!(out, "{pad}  component elements: {}", comp.elements)?;
        render_report(out, i, &comp.report, depth + 1)?;
    }
    Ok(())
}

fn emit_lift<W: Write>(out: &mut W, cli: &Cli, index: usize, m: &Matroid, kind: &str) -> Result<()> {
    if let Some(k) = kind.strip_prefix("corank:") {
        let k: usize =
            k.parse().map_err(|_| Error::InvalidParams(format!("bad corank cardinality `{k}`")))?;
        let lv = corank_vector(m, k)?;
        match cli.format {
            Format::Json => emit_json(out, json!({ "schema": "splitmat/1", "lift": lv }))?,
            _ => {
                let hs: Vec<String> = lv.heights.iter().map(|h| h.to_string()).collect();
                writeln!(out, "corank vector on ({}, {}): {}", lv.k, lv.n, hs.join(","))?;
            }
        }
        return Ok(());
    }
    let lifted = match kind {
        "series-free" => series_free_lift(m)?,
        "parallel-cofree" => parallel_cofree_lift(m)?,
        _ => {
            if let Some(f) = kind.strip_prefix("nested:") {
                let elements = literal::parse_subset_token(f)?;
                let flat = Flat { elements, rank: m.rank_of(elements) };
                nested_matroid_nf(m, &flat)?
            } else {
                return Err(Error::InvalidParams(format!(
                    "unknown lift kind `{kind}`; use corank:K, series-free, parallel-cofree or nested:F"
                )));
            }
        }
    };
    match cli.format {
        Format::Json => {
            let bases: Vec<Subset> = lifted.bases().collect();
            emit_json(
                out,
                json!({
                    "schema": "splitmat/1",
                    "d": lifted.rank(), "n": lifted.n(),
                    "bases": bases,
                }),
            )?;
        }
        _ => {
            writeln!(out, "matroid {index} -> (d={}, n={}), {} bases", lifted.rank(), lifted.n(), lifted.num_bases())?;
            let bases: Vec<Subset> = lifted.bases().collect();
            writeln!(out, "bases: {}", subsets_line(&bases))?;
        }
    }
    Ok(())
}
