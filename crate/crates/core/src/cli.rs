//! Command-line interface.
//!
//! ```text
//! powersub analyze <SPEC> [--json|--csv]
//! powersub verify [--max-order N]
//! powersub spectrum [--max-order N] [--k-max K] [--json]
//! powersub search --k K [--max-order N]
//! ```
//!
//! Exit codes: 0 on success (and when every check passes), 1 when `verify`
//! finds a failing check, 2 on usage, parse or parameter errors. The
//! environment variable `POWERSUB_ORDER_CAP` overrides the default group
//! order cap.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::catalog::{build_catalog, search, spectrum, Family};
use crate::checks::{run_on_analyses, RunOptions};
use crate::power::GroupAnalysis;
use crate::spec::parse_group_spec;
use crate::{report, set_order_cap};

/// Name of the environment variable overriding the order cap.
pub const ORDER_CAP_ENV: &str = "POWERSUB_ORDER_CAP";

#[derive(Parser)]
#[command(
    name = "powersub",
    version,
    about = "Power subgroups G^m, non-power subgroup counts, and structural checks for finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group: subgroup lattice, power subgroups, k
    Analyze {
        /// Group specification, e.g. "Q8", "C2xC2", "E2_3xC5", "D4xS3"
        spec: String,
        /// Emit the analysis as a JSON object
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit one CSV row per subgroup
        #[arg(long)]
        csv: bool,
    },
    /// Run every structural check over a generated catalog
    Verify {
        /// Largest group order in the catalog
        #[arg(long, default_value_t = 32)]
        max_order: usize,
        /// Corrupt one classification before checking, to prove that
        /// failures are caught and reported
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Bucket catalog groups by their non-power subgroup count k
    Spectrum {
        /// Largest group order in the catalog
        #[arg(long, default_value_t = 32)]
        max_order: usize,
        /// Largest k reported row by row
        #[arg(long, default_value_t = 12)]
        k_max: usize,
        /// Emit the spectrum as a JSON object
        #[arg(long)]
        json: bool,
    },
    /// List catalog groups with exactly k non-power subgroups
    Search {
        /// The non-power subgroup count to look for
        #[arg(long)]
        k: usize,
        /// Largest group order in the catalog
        #[arg(long, default_value_t = 32)]
        max_order: usize,
    },
}

/// Entry point for the binary: parse `std::env::args`, run, return the
/// process exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Run with explicit arguments (the first is the program name).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    if let Ok(value) = std::env::var(ORDER_CAP_ENV) {
        match value.parse::<usize>() {
            Ok(cap) if cap >= 1 => set_order_cap(cap),
            _ => {
                eprintln!("error: {ORDER_CAP_ENV}={value} is not a positive integer");
                return 2;
            }
        }
    }
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Analyze { spec, json, csv } => cmd_analyze(&spec, json, csv),
        Command::Verify {
            max_order,
            inject_fault,
        } => cmd_verify(max_order, inject_fault),
        Command::Spectrum {
            max_order,
            k_max,
            json,
        } => cmd_spectrum(max_order, k_max, json),
        Command::Search { k, max_order } => cmd_search(k, max_order),
    }
}

fn cmd_analyze(spec_text: &str, json: bool, csv: bool) -> i32 {
    let spec = match parse_group_spec(spec_text) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let analysis = match spec.build().and_then(GroupAnalysis::new) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if json {
        println!("{}", report::analysis_json(&analysis.report()));
    } else if csv {
        print!("{}", report::analysis_csv(&analysis));
    } else {
        print!("{}", report::analysis_text(&analysis.report()));
    }
    0
}

fn cmd_verify(max_order: usize, inject_fault: bool) -> i32 {
    let entries = match build_catalog(max_order, &Family::ALL) {
        Ok(entries) => entries,
        Err(e) => {
            eprintln!("error: {e} (raise {ORDER_CAP_ENV} to go higher)");
            return 2;
        }
    };
    let analyses: Result<Vec<GroupAnalysis>, _> = entries
        .into_iter()
        .map(|e| GroupAnalysis::new(e.table))
        .collect();
    let analyses = match analyses {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let results = match run_on_analyses(&analyses, &RunOptions { inject_fault }) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    print!("{}", report::check_report_text(&results));
    if results.iter().all(|r| r.passed) {
        0
    } else {
        1
    }
}

fn cmd_spectrum(max_order: usize, k_max: usize, json: bool) -> i32 {
    let entries = match build_catalog(max_order, &Family::ALL) {
        Ok(entries) => entries,
        Err(e) => {
            eprintln!("error: {e} (raise {ORDER_CAP_ENV} to go higher)");
            return 2;
        }
    };
    match spectrum(&entries, max_order, k_max) {
        Ok(r) => {
            if json {
                println!("{}", report::spectrum_json(&r));
            } else {
                print!("{}", report::spectrum_text(&r));
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn cmd_search(k: usize, max_order: usize) -> i32 {
    let entries = match build_catalog(max_order, &Family::ALL) {
        Ok(entries) => entries,
        Err(e) => {
            eprintln!("error: {e} (raise {ORDER_CAP_ENV} to go higher)");
            return 2;
        }
    };
    match search(&entries, k) {
        Ok(hits) => {
            print!("{}", report::search_text(k, &hits));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
