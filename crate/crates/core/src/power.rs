//! Power subgroups `G^m = ⟨g^m | g ∈ G⟩` and the power/non-power
//! classification of a group's subgroup lattice.

use serde::Serialize;

use crate::group::{gcd, GroupTable};
use crate::subgroup::{self, ElementSet};
use crate::Error;

/// One member of the power-subgroup family of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSubgroup {
    /// Least `m` with this subgroup equal to `G^m`. By convention `G^0` is
    /// the trivial subgroup (every `g^0` is the identity), so exponent 0
    /// names `{1}` and exponent 1 names the whole group.
    pub exponent: usize,
    pub set: ElementSet,
}

/// Subgroup `G^m` generated by the `m`-th powers of all elements.
pub fn power_subgroup(g: &GroupTable, m: usize) -> Result<ElementSet, Error> {
    let mut powers = ElementSet::empty(g.order());
    for a in g.elements() {
        powers.insert(g.pow(a, m));
    }
    subgroup::closure(g, &powers)
}

/// The full power-subgroup family, one entry per distinct subgroup, sorted
/// by ascending least exponent.
///
/// `G^m` depends only on `gcd(m, exponent(G))`: `g^m` generates the same
/// cyclic subgroup as `g^gcd(m, ord(g))`, and `gcd(m, e)` is a Z-linear
/// combination of `m` and `e`. So it suffices to compute `G^d` for the
/// divisors `d` of the exponent, plus `G^0 = {1}`.
pub fn all_power_subgroups(g: &GroupTable) -> Result<Vec<PowerSubgroup>, Error> {
    let e = g.exponent();
    let mut divisors: Vec<usize> = (1..=e).filter(|d| e.is_multiple_of(*d)).collect();
    divisors.sort_unstable();
    let mut family: Vec<PowerSubgroup> = vec![PowerSubgroup {
        exponent: 0,
        set: ElementSet::from_indices(g.order(), [g.identity()]),
    }];
    for d in divisors {
        let set = power_subgroup(g, d)?;
        // ascending scan: an earlier (smaller) exponent wins the name
        if !family.iter().any(|p| p.set == set) {
            family.push(PowerSubgroup { exponent: d, set });
        }
    }
    family.sort_by_key(|p| p.exponent);
    Ok(family)
}

/// Least `m` with `set = G^m`, or `None` if the subgroup is not a power
/// subgroup. Exponent 0 names the trivial subgroup, 1 the whole group.
pub fn power_exponent_of(g: &GroupTable, set: &ElementSet) -> Result<Option<usize>, Error> {
    Ok(all_power_subgroups(g)?
        .into_iter()
        .find(|p| &p.set == set)
        .map(|p| p.exponent))
}

/// A classified subgroup: membership, order, normality and (when the
/// subgroup is a power subgroup) its least exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupRecord {
    pub set: ElementSet,
    pub order: usize,
    pub normal: bool,
    /// `Some(m)` iff the subgroup equals `G^m` with `m` least.
    pub power_exponent: Option<usize>,
}

impl SubgroupRecord {
    pub fn is_power(&self) -> bool {
        self.power_exponent.is_some()
    }
}

/// Classify every subgroup of `g` as power / non-power. Records come back
/// in the canonical lattice order.
pub fn classify_subgroups(g: &GroupTable) -> Result<Vec<SubgroupRecord>, Error> {
    let powers = all_power_subgroups(g)?;
    let subs = subgroup::all_subgroups(g)?;
    subs.into_iter()
        .map(|set| {
            let power_exponent = powers.iter().find(|p| p.set == set).map(|p| p.exponent);
            Ok(SubgroupRecord {
                order: set.len(),
                normal: subgroup::is_normal(g, &set)?,
                power_exponent,
                set,
            })
        })
        .collect()
}

/// Number of subgroups of `g` that are not power subgroups.
pub fn count_non_power(g: &GroupTable) -> Result<usize, Error> {
    Ok(classify_subgroups(g)?
        .iter()
        .filter(|r| !r.is_power())
        .count())
}

/// Everything the crate can say about one group, computed once and shared
/// by the check suite, the catalog scans and the report renderers.
pub struct GroupAnalysis {
    pub group: GroupTable,
    pub powers: Vec<PowerSubgroup>,
    pub records: Vec<SubgroupRecord>,
}

impl GroupAnalysis {
    pub fn new(group: GroupTable) -> Result<Self, Error> {
        let powers = all_power_subgroups(&group)?;
        let records = classify_subgroups(&group)?;
        Ok(GroupAnalysis {
            group,
            powers,
            records,
        })
    }

    pub fn k(&self) -> usize {
        self.records.iter().filter(|r| !r.is_power()).count()
    }

    pub fn non_power_records(&self) -> impl Iterator<Item = &SubgroupRecord> {
        self.records.iter().filter(|r| !r.is_power())
    }

    /// Serializable summary in the report schema.
    pub fn report(&self) -> AnalysisReport {
        let mut non_power_orders: Vec<usize> = self.non_power_records().map(|r| r.order).collect();
        non_power_orders.sort_unstable();
        AnalysisReport {
            group: self.group.name().to_string(),
            order: self.group.order(),
            exponent: self.group.exponent(),
            cyclic: self.group.is_cyclic(),
            subgroups: self.records.len(),
            power_subgroups: self
                .powers
                .iter()
                .map(|p| PowerSubgroupSummary {
                    exponent: p.exponent,
                    order: p.set.len(),
                })
                .collect(),
            k: self.k(),
            non_power_orders,
        }
    }
}

/// Flat, serializable analysis summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: usize,
    pub exponent: usize,
    pub cyclic: bool,
    /// Total number of subgroups.
    pub subgroups: usize,
    /// The distinct power subgroups, by ascending least exponent.
    pub power_subgroups: Vec<PowerSubgroupSummary>,
    /// Number of non-power subgroups.
    pub k: usize,
    /// Orders of the non-power subgroups, ascending, with multiplicity.
    pub non_power_orders: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSubgroupSummary {
    pub exponent: usize,
    pub order: usize,
}

/// Analyze a group end to end: lattice, power family, classification.
pub fn analyze(g: &GroupTable) -> Result<AnalysisReport, Error> {
    Ok(GroupAnalysis::new(g.clone())?.report())
}

/// `G^m = G^{gcd(m, exponent(G))}` for every `m ≥ 0`, with `gcd(0, e) = e`
/// (both `G^0` and `G^e` are the trivial subgroup). Exposed for the check
/// suite.
pub fn reduced_exponent(g: &GroupTable, m: usize) -> usize {
    gcd(m, g.exponent())
}
