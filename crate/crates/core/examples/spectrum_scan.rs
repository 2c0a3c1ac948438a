//! Scan a family catalog for the k-spectrum: which non-power subgroup
//! counts actually occur? k=0 is exactly the cyclic groups and k=1,2 never
//! appear; beyond that the scan collects witnesses per k and leaves gaps
//! as open questions at the chosen order bound.
//!
//! Run with: cargo run --example spectrum_scan

use powersub::catalog::{build_catalog, search, spectrum, Family};
use powersub::report::spectrum_text;

fn main() -> Result<(), powersub::Error> {
    let max_order = 32;
    let entries = build_catalog(max_order, &Family::ALL)?;
    let report = spectrum(&entries, max_order, 10)?;
    print!("{}", spectrum_text(&report));

    // drill into one k value
    let k = 7;
    let witnesses = search(&entries, k)?;
    println!(
        "\nfirst witnesses for k={k}: {:?}",
        &witnesses[..witnesses.len().min(5)]
    );

    // parse-anything interface: the same machinery behind the CLI
    let spec = powersub::parse_group_spec("E2_2 x C9").expect("valid spec");
    let g = spec.build()?;
    let a = powersub::power::GroupAnalysis::new(g)?;
    println!("k({}) = {}", spec.canonical_text(), a.k());
    Ok(())
}
