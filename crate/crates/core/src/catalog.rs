//! Family-generated group catalogs and k-spectrum scans.
//!
//! A catalog is the deterministic list of every family group with order up
//! to a bound, plus all pairwise direct products that stay under the bound.
//! Entries are deduplicated by specification text, not by isomorphism type,
//! so the same abstract group may appear several times under different
//! texts (`D1`, `C2` and `E2_1` all denote the order-2 group); duplicates
//! are harmless for verification and spectrum evidence.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::group::{is_prime, GroupTable};
use crate::power::GroupAnalysis;
use crate::spec::{FamilyTerm, GroupSpec};
use crate::{order_cap, Error};

/// The six generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Dihedral,
    GeneralizedQuaternion,
    Symmetric,
    Alternating,
    ElementaryAbelian,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Cyclic,
        Family::Dihedral,
        Family::GeneralizedQuaternion,
        Family::Symmetric,
        Family::Alternating,
        Family::ElementaryAbelian,
    ];

    /// All terms of this family with order ≤ `max_order`, ascending.
    fn terms_up_to(&self, max_order: usize) -> Vec<FamilyTerm> {
        let fits = |t: &FamilyTerm| t.order() <= max_order as u128;
        match self {
            Family::Cyclic => (1..=max_order).map(FamilyTerm::Cyclic).collect(),
            Family::Dihedral => (1..=max_order / 2).map(FamilyTerm::Dihedral).collect(),
            Family::GeneralizedQuaternion => (8..=max_order)
                .step_by(4)
                .map(FamilyTerm::GeneralizedQuaternion)
                .collect(),
            Family::Symmetric => (1..).map(FamilyTerm::Symmetric).take_while(fits).collect(),
            Family::Alternating => (1..)
                .map(FamilyTerm::Alternating)
                .take_while(fits)
                .collect(),
            Family::ElementaryAbelian => {
                let mut terms = Vec::new();
                for p in 2..=max_order {
                    if !is_prime(p) {
                        continue;
                    }
                    terms.extend(
                        (1..)
                            .map(|k| FamilyTerm::ElementaryAbelian(p, k))
                            .take_while(fits),
                    );
                }
                terms
            }
        }
    }
}

/// One catalog member: the spec text, its parse, and the built group.
pub struct CatalogEntry {
    /// Canonical specification text; re-parses and re-builds to `table`.
    pub text: String,
    /// The family constructors and parameters behind `table`.
    pub spec: GroupSpec,
    pub table: GroupTable,
}

/// Build the catalog of all selected-family groups of order ≤ `max_order`,
/// plus all pairwise direct products (including self-products) that fit.
/// Deterministic order: single terms family by family, then products; a
/// product lists its larger-order factor first.
pub fn build_catalog(max_order: usize, families: &[Family]) -> Result<Vec<CatalogEntry>, Error> {
    let cap = order_cap();
    if max_order > cap {
        return Err(Error::OrderCapExceeded {
            requested: max_order as u128,
            cap,
        });
    }
    let bases: Vec<FamilyTerm> = families
        .iter()
        .flat_map(|f| f.terms_up_to(max_order))
        .collect();
    let mut specs: Vec<GroupSpec> = bases
        .iter()
        .map(|&t| GroupSpec { terms: vec![t] })
        .collect();
    for (i, &a) in bases.iter().enumerate() {
        for &b in &bases[i..] {
            if a.order() * b.order() > max_order as u128 {
                continue;
            }
            let terms = if b.order() > a.order() {
                vec![b, a]
            } else {
                vec![a, b]
            };
            specs.push(GroupSpec { terms });
        }
    }
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for spec in specs {
        let text = spec.canonical_text();
        if !seen.insert(text.clone()) {
            continue;
        }
        let table = spec.build()?;
        entries.push(CatalogEntry { text, spec, table });
    }
    Ok(entries)
}

/// Distribution of the non-power-subgroup count k over a catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub max_order: usize,
    pub k_max: usize,
    pub groups_scanned: usize,
    /// Witness spec texts per k, for every k in `0..=k_max` (a key with an
    /// empty list means no witness was found — at this order bound only,
    /// never a nonexistence claim).
    pub by_k: BTreeMap<usize, Vec<String>>,
    /// How many scanned groups landed above `k_max`.
    pub above_k_max: usize,
}

/// Scan a catalog and bucket every entry by its k value.
pub fn spectrum(
    entries: &[CatalogEntry],
    max_order: usize,
    k_max: usize,
) -> Result<SpectrumReport, Error> {
    let mut by_k: BTreeMap<usize, Vec<String>> = (0..=k_max).map(|k| (k, Vec::new())).collect();
    let mut above = 0usize;
    for entry in entries {
        let k = GroupAnalysis::new(entry.table.clone())?.k();
        match by_k.get_mut(&k) {
            Some(bucket) => bucket.push(entry.text.clone()),
            None => above += 1,
        }
    }
    Ok(SpectrumReport {
        max_order,
        k_max,
        groups_scanned: entries.len(),
        by_k,
        above_k_max: above,
    })
}

/// All entries with exactly `k` non-power subgroups, in catalog order.
pub fn search(entries: &[CatalogEntry], k: usize) -> Result<Vec<String>, Error> {
    let mut hits = Vec::new();
    for entry in entries {
        if GroupAnalysis::new(entry.table.clone())?.k() == k {
            hits.push(entry.text.clone());
        }
    }
    Ok(hits)
}
