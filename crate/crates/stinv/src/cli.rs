//! The `stinv` command line: parse, normalize, filter, fold and query
//! `.stinv` model files.
//!
//! Every subcommand reads a model from `--in PATH` (standard input when the
//! path is `-`) and writes its result to standard output; diagnostics go to
//! standard error. Exit codes are scriptable: 0 ok, 2 parse/read error,
//! 3 model shape or fragment error, 4 invalid parameters.

use std::fs;
use std::io::Read;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::ast::Invariant;
use crate::filter::{filter_time, InvalidWindow, TimeWindow};
use crate::fold::{
    add_area_occupied, count_owner_points, fold_space, fold_time, IterationError, IterationPath,
    TimeIteration,
};
use crate::geometry::{self, GridBox, ModelShapeError, ANONYMOUS_OWNER};
use crate::io::{load_model, serialize_invariant, Mode, ParseError};
use crate::normalize::{normalize_owner_occupied, normalize_std, MergeShapeError};

#[derive(Parser)]
#[command(
    name = "stinv",
    version,
    about = "Spatio-temporal invariant engine",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a model and print its canonical serialization.
    Normalize {
        /// Model file, or - for standard input.
        #[arg(long = "in", value_name = "PATH")]
        input: String,
        /// Normalization pipeline to apply.
        #[arg(long, value_enum, default_value_t = PipelineArg::Std)]
        pipeline: PipelineArg,
        /// Output layout.
        #[arg(long, value_enum, default_value_t = ModeArg::Compact)]
        mode: ModeArg,
    },
    /// Keep the sub-invariant relevant to a time window [start, stop).
    FilterTime {
        #[arg(long = "in", value_name = "PATH")]
        input: String,
        /// Window start (inclusive).
        #[arg(long)]
        start: i64,
        /// Window stop (exclusive).
        #[arg(long)]
        stop: i64,
        /// Replacement polarity for out-of-window time points: true rewrites
        /// them to FALSE (conjunctive models), false to TRUE.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        miss: bool,
        #[arg(long, value_enum, default_value_t = ModeArg::Compact)]
        mode: ModeArg,
    },
    /// Fold a model over time steps and print the aggregate.
    FoldTime {
        #[arg(long = "in", value_name = "PATH")]
        input: String,
        /// First visited time.
        #[arg(long)]
        start: i64,
        /// Last visited time (inclusive).
        #[arg(long)]
        stop: i64,
        /// Time increment per step (positive).
        #[arg(long)]
        step: i64,
        /// Aggregation function; `area` sums occupied box areas.
        #[arg(long, default_value = "area")]
        agg: String,
    },
    /// Fold a model over a spatial iteration path and print the aggregate.
    FoldSpace {
        #[arg(long = "in", value_name = "PATH")]
        input: String,
        /// First iteration box, as x1,y1,x2,y2.
        #[arg(long = "start-box", value_name = "X1,Y1,X2,Y2", value_parser = parse_box_arg)]
        start_box: GridBox,
        /// Last iteration box (inclusive), as x1,y1,x2,y2.
        #[arg(long = "stop-box", value_name = "X1,Y1,X2,Y2", value_parser = parse_box_arg)]
        stop_box: GridBox,
        /// Per-step translation, as dx,dy.
        #[arg(long = "step", value_name = "DX,DY", value_parser = parse_translation_arg)]
        step: (i64, i64),
        /// Aggregation function; `owner-points:LABEL` counts grid points
        /// attributed to LABEL.
        #[arg(long)]
        agg: String,
    },
    /// Print per-owner occupied point counts at a time, clipped to a grid.
    Query {
        #[arg(long = "in", value_name = "PATH")]
        input: String,
        /// Time to evaluate the model at.
        #[arg(long)]
        time: i64,
        /// Grid window, as x1,y1,x2,y2.
        #[arg(long, value_name = "X1,Y1,X2,Y2", value_parser = parse_box_arg)]
        grid: GridBox,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineArg {
    /// simplify, deduplicate, order, flatten.
    Std,
    /// The standard pipeline followed by owner merging.
    Owner,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Compact,
    Pretty,
}

impl From<ModeArg> for Mode {
    fn from(mode: ModeArg) -> Mode {
        match mode {
            ModeArg::Compact => Mode::Compact,
            ModeArg::Pretty => Mode::Pretty,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Shape(#[from] ModelShapeError),
    #[error(transparent)]
    Merge(#[from] MergeShapeError),
    #[error(transparent)]
    Window(#[from] InvalidWindow),
    #[error(transparent)]
    Iteration(#[from] IterationError),
    #[error("{0}")]
    Params(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Parse(_) => 2,
            CliError::Shape(_) | CliError::Merge(_) => 3,
            CliError::Window(_) | CliError::Iteration(_) | CliError::Params(_) => 4,
        }
    }
}

fn parse_box_arg(s: &str) -> Result<GridBox, String> {
    let parts = parse_csv_ints(s, 4)?;
    Ok(GridBox::new(parts[0], parts[1], parts[2], parts[3]))
}

fn parse_translation_arg(s: &str) -> Result<(i64, i64), String> {
    let parts = parse_csv_ints(s, 2)?;
    Ok((parts[0], parts[1]))
}

fn parse_csv_ints(s: &str, expected: usize) -> Result<Vec<i64>, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != expected {
        return Err(format!(
            "expected {expected} comma-separated integers, got {s:?}"
        ));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid integer {p:?} in {s:?}"))
        })
        .collect()
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Read {
                path: path.to_string(),
                message: e.to_string(),
            })?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Read {
            path: path.to_string(),
            message: e.to_string(),
        })
    }
}

fn load(path: &str) -> Result<Invariant, CliError> {
    Ok(load_model(&read_input(path)?)?)
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Normalize {
            input,
            pipeline,
            mode,
        } => {
            let model = load(&input)?;
            let normalized = match pipeline {
                PipelineArg::Std => normalize_std(model),
                PipelineArg::Owner => normalize_owner_occupied(model)?,
            };
            println!("{}", serialize_invariant(&normalized, mode.into()));
            Ok(())
        }
        Command::FilterTime {
            input,
            start,
            stop,
            miss,
            mode,
        } => {
            let model = load(&input)?;
            let window = TimeWindow::new(start, stop)?;
            let filtered = filter_time(model, window, miss);
            println!("{}", serialize_invariant(&filtered, mode.into()));
            Ok(())
        }
        Command::FoldTime {
            input,
            start,
            stop,
            step,
            agg,
        } => {
            if agg != "area" {
                return Err(CliError::Params(format!(
                    "unknown aggregator {agg:?}; fold-time supports `area`"
                )));
            }
            let model = load(&input)?;
            let iter = TimeIteration::new(start, stop, step)?;
            let total = fold_time(&model, 0i64, &iter, add_area_occupied);
            println!("{total}");
            Ok(())
        }
        Command::FoldSpace {
            input,
            start_box,
            stop_box,
            step,
            agg,
        } => {
            let Some(label) = agg.strip_prefix("owner-points:") else {
                return Err(CliError::Params(format!(
                    "unknown aggregator {agg:?}; fold-space supports `owner-points:LABEL`"
                )));
            };
            let model = load(&input)?;
            let path = IterationPath::new(start_box, stop_box, step)?;
            let normalized = normalize_owner_occupied(model)?;
            let total = fold_space(&normalized, 0i64, &path, |acc, sub| {
                count_owner_points(label, acc, sub)
            })?;
            println!("{total}");
            Ok(())
        }
        Command::Query { input, time, grid } => {
            let model = load(&input)?;
            let model = if geometry::is_guarded_normal_form(&model) {
                model
            } else {
                normalize_owner_occupied(model)?
            };
            let semantics = geometry::point_semantics(&model, time)?;
            for (owner, points) in semantics.iter() {
                let label = if owner == ANONYMOUS_OWNER {
                    "<anonymous>"
                } else {
                    owner
                };
                let count = points.iter().filter(|p| grid.contains(**p)).count();
                println!("{label}\t{count}");
            }
            Ok(())
        }
    }
}

/// Entry point of the `stinv` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let is_help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if is_help { 0 } else { 4 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
