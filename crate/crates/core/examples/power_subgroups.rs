//! Compute power subgroups G^m, watch them collapse along gcds, and
//! classify whole subgroup lattices into power and non-power parts.
//!
//! Run with: cargo run --example power_subgroups

use powersub::power::{all_power_subgroups, count_non_power, power_subgroup, reduced_exponent};
use powersub::{analyze, Error, GroupTable};

fn main() -> Result<(), Error> {
    let q8 = GroupTable::generalized_quaternion(8)?;

    // G^m for increasing m: only gcd(m, exponent) matters
    println!(
        "power subgroups of {} (exponent {}):",
        q8.name(),
        q8.exponent()
    );
    for m in 0..=8 {
        let p = power_subgroup(&q8, m)?;
        println!(
            "  G^{m} = {:?} (order {}, same as G^{})",
            p,
            p.len(),
            reduced_exponent(&q8, m)
        );
    }

    // the distinct family, each with its least exponent
    let family = all_power_subgroups(&q8)?;
    println!("\ndistinct power subgroups of {}:", q8.name());
    for p in &family {
        println!("  exponent {} order {}", p.exponent, p.set.len());
    }

    // k = number of subgroups that are not of the form G^m
    println!();
    for g in [
        GroupTable::cyclic(12)?,
        GroupTable::elementary_abelian(2, 2)?,
        GroupTable::symmetric(3)?,
        GroupTable::dihedral(4)?,
        GroupTable::generalized_quaternion(8)?,
    ] {
        println!("k({}) = {}", g.name(), count_non_power(&g)?);
    }

    // the full report for one group
    let report = analyze(&GroupTable::symmetric(4)?)?;
    println!("\n{}", powersub::report::analysis_text(&report));
    Ok(())
}
