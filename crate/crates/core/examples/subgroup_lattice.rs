//! Enumerate the full subgroup lattice of the dihedral group D4 and show
//! closures, conjugation and normality.
//!
//! Run with: cargo run --example subgroup_lattice

use powersub::subgroup::{all_subgroups, closure, conjugate, is_normal};
use powersub::{ElementSet, Error, GroupTable};

fn main() -> Result<(), Error> {
    let d4 = GroupTable::dihedral(4)?;

    let subs = all_subgroups(&d4)?;
    println!("{} has {} subgroups:", d4.name(), subs.len());
    for s in &subs {
        println!(
            "  order {} {} {:?}",
            s.len(),
            if is_normal(&d4, s)? {
                "normal    "
            } else {
                "non-normal"
            },
            s
        );
    }

    // the two reflections 4 and 6 generate a Klein four-subgroup
    let gens = ElementSet::from_indices(d4.order(), [4, 6]);
    let generated = closure(&d4, &gens)?;
    println!("\n<4, 6> = {generated:?} (order {})", generated.len());

    // conjugating a non-normal subgroup moves it to a sibling
    let refl = closure(&d4, &ElementSet::from_indices(d4.order(), [4]))?;
    let moved = conjugate(&d4, &refl, 1)?;
    println!("{refl:?} conjugated by r = {moved:?}");

    // lattice sizes for a few other groups
    for g in [
        GroupTable::cyclic(12)?,
        GroupTable::generalized_quaternion(8)?,
        GroupTable::symmetric(4)?,
        GroupTable::elementary_abelian(2, 4)?,
    ] {
        println!("{:<6} {:>4} subgroups", g.name(), all_subgroups(&g)?.len());
    }
    Ok(())
}
