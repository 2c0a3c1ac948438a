//! Oracles shared by the integration suites: independent re-computations
//! of the quantities under test, implemented with different algorithms
//! than the library uses.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use powersub::subgroup::{self, ElementSet};
use powersub::GroupTable;

/// Exhaustive subgroup enumeration: test every subset containing the
/// identity. Exponential, usable only for |G| ≤ 16.
pub fn brute_force_subgroups(g: &GroupTable) -> Vec<ElementSet> {
    let n = g.order();
    assert!(n <= 16, "brute-force oracle is exponential in |G|");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << g.identity()) == 0 {
            continue;
        }
        let set = ElementSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        if is_subgroup_by_scan(g, &set) {
            out.push(set);
        }
    }
    out.sort();
    out
}

// product-closure test written against the raw table, no library helpers
fn is_subgroup_by_scan(g: &GroupTable, set: &ElementSet) -> bool {
    let members: Vec<usize> = set.iter().collect();
    if !set.contains(g.identity()) {
        return false;
    }
    members
        .iter()
        .all(|&a| members.iter().all(|&b| set.contains(g.mul(a, b))))
}

/// Alternative lattice enumeration for mid-size groups: close every subset
/// of at most two generators, then join all pairs of found subgroups to a
/// fixpoint. Unlike the library algorithm this joins arbitrary pairs.
pub fn two_generator_join_subgroups(g: &GroupTable) -> Vec<ElementSet> {
    let n = g.order();
    let mut found = std::collections::BTreeSet::new();
    for a in 0..n {
        found.insert(subgroup::closure(g, &ElementSet::from_indices(n, [a])).unwrap());
        for b in a + 1..n {
            found.insert(subgroup::closure(g, &ElementSet::from_indices(n, [a, b])).unwrap());
        }
    }
    loop {
        let snapshot: Vec<ElementSet> = found.iter().cloned().collect();
        let before = found.len();
        for (i, s) in snapshot.iter().enumerate() {
            for t in &snapshot[i + 1..] {
                found.insert(subgroup::closure(g, &s.union(t)).unwrap());
            }
        }
        if found.len() == before {
            break;
        }
    }
    found.into_iter().collect()
}

/// Exponent recomputed by iterating raw products, ignoring the stored
/// element orders.
pub fn scan_exponent(g: &GroupTable) -> usize {
    let mut e: usize = 1;
    for a in 0..g.order() {
        let mut t = 1usize;
        let mut acc = a;
        while acc != g.identity() {
            acc = g.mul(acc, a);
            t += 1;
        }
        e = e / gcd(e, t) * t;
    }
    e
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Power subgroup computed from the definition alone: collect `a^m` by
/// repeated multiplication, then close under products by repeated sweeps.
pub fn naive_power_subgroup(g: &GroupTable, m: usize) -> ElementSet {
    let n = g.order();
    let mut set = ElementSet::empty(n);
    for a in 0..n {
        let mut acc = g.identity();
        for _ in 0..m {
            acc = g.mul(acc, a);
        }
        set.insert(acc);
    }
    set.insert(g.identity());
    loop {
        let members: Vec<usize> = set.iter().collect();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                grew |= set.insert(g.mul(a, b));
            }
        }
        if !grew {
            return set;
        }
    }
}
