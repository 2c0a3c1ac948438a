//! Form quotient groups, move subgroups between a group and its quotients,
//! and see how power subgroups project onto quotient power subgroups.
//!
//! Run with: cargo run --example quotients

use powersub::power::power_subgroup;
use powersub::subgroup::{all_subgroups, lift_subgroup, project_subgroup, quotient};
use powersub::{Error, GroupTable};

fn main() -> Result<(), Error> {
    let q8 = GroupTable::generalized_quaternion(8)?;

    // Q8 modulo its center {1, -1} is the Klein four-group
    let center = power_subgroup(&q8, 2)?;
    let q = quotient(&q8, &center)?;
    println!(
        "{} / {:?} has order {}, exponent {}, cyclic={}",
        q8.name(),
        center,
        q.table.order(),
        q.table.exponent(),
        q.table.is_cyclic()
    );

    // every element knows its coset; cosets are named by smallest member
    println!("coset map: {:?}", q.coset_of);
    println!("coset representatives: {:?}", q.reps);

    // lifting the three order-2 quotient subgroups recovers <i>, <j>, <k>
    for s in all_subgroups(&q.table)? {
        if s.len() == 2 {
            let lifted = lift_subgroup(&q, &s)?;
            println!("lift of {s:?} = {lifted:?}");
        }
    }

    // projection and lifting are mutually inverse above the kernel
    let whole = power_subgroup(&q8, 1)?;
    let projected = project_subgroup(&q, &whole)?;
    assert_eq!(lift_subgroup(&q, &projected)?, whole);

    // power subgroups project onto power subgroups with the same exponent:
    // the image of G^2 in the quotient equals (G/N)^2
    let g2_image = project_subgroup(&q, &power_subgroup(&q8, 2)?)?;
    let quotient_squares = power_subgroup(&q.table, 2)?;
    assert_eq!(g2_image, quotient_squares);
    println!("image of G^2 = (G/N)^2 = {quotient_squares:?}");
    Ok(())
}
