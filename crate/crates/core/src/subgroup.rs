//! Element sets, subgroup generation, lattice enumeration and quotients.

use std::collections::BTreeSet;
use std::fmt;

use crate::group::GroupTable;
use crate::Error;

/// A set of element indices of a fixed group, stored as a bit vector.
///
/// Sets over the same universe order themselves like the integers their
/// bitmasks encode, which gives a stable canonical ordering for lattice
/// output and deduplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            blocks: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            assert!(i < universe, "index {i} outside universe {universe}");
            s.insert(i);
        }
        s
    }

    /// Size of the underlying universe (the group order, in practice).
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let (block, bit) = (i / 64, 1u64 << (i % 64));
        let fresh = self.blocks[block] & bit == 0;
        self.blocks[block] |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        ElementSet {
            universe: self.universe,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        ElementSet {
            universe: self.universe,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Ascending iterator over the member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            (0..64)
                .filter(move |b| block >> b & 1 == 1)
                .map(move |b| bi * 64 + b)
        })
    }

    /// Smallest member, if any.
    pub fn min_element(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_universe(&self, g: &GroupTable) -> Result<(), Error> {
        if self.universe != g.order() {
            Err(Error::UniverseMismatch {
                set: self.universe,
                order: g.order(),
            })
        } else {
            Ok(())
        }
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.blocks.iter().rev().cmp(other.blocks.iter().rev()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Subgroup generated by a set: the closure of `seed ∪ {identity}` under
/// products. Worklist algorithm; every popped element is multiplied on both
/// sides against the members accumulated so far.
pub fn closure(g: &GroupTable, seed: &ElementSet) -> Result<ElementSet, Error> {
    seed.check_universe(g)?;
    let mut set = seed.clone();
    set.insert(g.identity());
    let mut members: Vec<usize> = set.iter().collect();
    let mut queue: Vec<usize> = members.clone();
    while let Some(x) = queue.pop() {
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            for p in [g.mul(x, y), g.mul(y, x)] {
                if set.insert(p) {
                    members.push(p);
                    queue.push(p);
                }
            }
            i += 1;
        }
    }
    Ok(set)
}

/// Cyclic subgroup `⟨a⟩`.
pub fn cyclic_subgroup(g: &GroupTable, a: usize) -> Result<ElementSet, Error> {
    if a >= g.order() {
        return Err(Error::IndexOutOfRange {
            index: a,
            order: g.order(),
        });
    }
    let mut set = ElementSet::empty(g.order());
    let mut acc = g.identity();
    loop {
        set.insert(acc);
        acc = g.mul(acc, a);
        if acc == g.identity() {
            break;
        }
    }
    Ok(set)
}

/// True iff `set` is non-empty and closed under products (finite, so
/// closure under products implies closure under inverses).
pub fn is_subgroup(g: &GroupTable, set: &ElementSet) -> Result<bool, Error> {
    set.check_universe(g)?;
    if !set.contains(g.identity()) {
        return Ok(false);
    }
    let members: Vec<usize> = set.iter().collect();
    for &a in &members {
        for &b in &members {
            if !set.contains(g.mul(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every subgroup of `g`, sorted canonically.
///
/// Strategy: start from the cyclic subgroups `⟨a⟩` (the lattice atoms live
/// among these) and close the collection under joins. Since every subgroup
/// is a join of cyclic subgroups, it suffices to join existing subgroups
/// with the cyclic generators only, which keeps the fixpoint loop near-linear
/// in the output size rather than quadratic.
pub fn all_subgroups(g: &GroupTable) -> Result<Vec<ElementSet>, Error> {
    let n = g.order();
    let mut found: BTreeSet<ElementSet> = BTreeSet::new();
    let mut cyclics: Vec<ElementSet> = Vec::new();
    for a in 0..n {
        let c = cyclic_subgroup(g, a)?;
        if found.insert(c.clone()) {
            cyclics.push(c);
        }
    }
    let mut frontier: Vec<ElementSet> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclics {
                if c.is_subset_of(h) {
                    continue;
                }
                let join = closure(g, &h.union(c))?;
                if found.insert(join.clone()) {
                    next.push(join);
                }
            }
        }
        frontier = next;
    }
    Ok(found.into_iter().collect())
}

/// Conjugate `x · set · x⁻¹`.
pub fn conjugate(g: &GroupTable, set: &ElementSet, x: usize) -> Result<ElementSet, Error> {
    set.check_universe(g)?;
    if x >= g.order() {
        return Err(Error::IndexOutOfRange {
            index: x,
            order: g.order(),
        });
    }
    let xinv = g.inverse(x);
    let mut out = ElementSet::empty(g.order());
    for h in set.iter() {
        out.insert(g.mul(g.mul(x, h), xinv));
    }
    Ok(out)
}

/// True iff the subgroup is invariant under conjugation by every element.
pub fn is_normal(g: &GroupTable, set: &ElementSet) -> Result<bool, Error> {
    set.check_universe(g)?;
    for x in g.elements() {
        if &conjugate(g, set, x)? != set {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A quotient group `G/N` together with the projection data needed to move
/// subgroups back and forth.
pub struct Quotient {
    /// The quotient as a group in its own right; element `i` is the coset
    /// whose smallest member is `reps[i]`.
    pub table: GroupTable,
    /// For each element of the parent, the index of its coset.
    pub coset_of: Vec<usize>,
    /// Minimal representative of each coset, ascending.
    pub reps: Vec<usize>,
}

/// Quotient by a normal subgroup. Cosets are numbered by ascending minimal
/// representative, so the identity coset is always element 0.
pub fn quotient(g: &GroupTable, n: &ElementSet) -> Result<Quotient, Error> {
    n.check_universe(g)?;
    if !is_subgroup(g, n)? {
        return Err(Error::NotASubgroup);
    }
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for a in 0..order {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        for h in n.iter() {
            coset_of[g.mul(a, h)] = idx;
        }
        reps.push(a);
    }
    let q = reps.len();
    let mut table = vec![0usize; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[g.mul(a, b)];
        }
    }
    let rows: Vec<Vec<usize>> = (0..q).map(|i| table[i * q..(i + 1) * q].to_vec()).collect();
    let name = format!("{}/N{}", g.name(), n.len());
    let table = GroupTable::from_table(name, rows)
        .map_err(|v| Error::InvalidParameter(format!("quotient construction bug: {v}")))?;
    Ok(Quotient {
        table,
        coset_of,
        reps,
    })
}

/// Pull a subgroup of the quotient back to the parent: the union of the
/// member cosets. The result always contains the kernel.
pub fn lift_subgroup(q: &Quotient, s: &ElementSet) -> Result<ElementSet, Error> {
    if s.universe() != q.table.order() {
        return Err(Error::UniverseMismatch {
            set: s.universe(),
            order: q.table.order(),
        });
    }
    let parent = q.coset_of.len();
    let mut out = ElementSet::empty(parent);
    for a in 0..parent {
        if s.contains(q.coset_of[a]) {
            out.insert(a);
        }
    }
    Ok(out)
}

/// Push a subgroup of the parent forward along the projection.
pub fn project_subgroup(q: &Quotient, s: &ElementSet) -> Result<ElementSet, Error> {
    if s.universe() != q.coset_of.len() {
        return Err(Error::UniverseMismatch {
            set: s.universe(),
            order: q.coset_of.len(),
        });
    }
    let mut out = ElementSet::empty(q.table.order());
    for a in s.iter() {
        out.insert(q.coset_of[a]);
    }
    Ok(out)
}

/// Realize a subgroup as a standalone group. Returns the group together
/// with the list mapping its element indices back to parent indices.
pub fn induced_group(g: &GroupTable, set: &ElementSet) -> Result<(GroupTable, Vec<usize>), Error> {
    set.check_universe(g)?;
    if !is_subgroup(g, set)? {
        return Err(Error::NotASubgroup);
    }
    let members: Vec<usize> = set.iter().collect();
    let index_of = |x: usize| members.binary_search(&x).expect("closed under products");
    let m = members.len();
    let rows: Vec<Vec<usize>> = members
        .iter()
        .map(|&a| members.iter().map(|&b| index_of(g.mul(a, b))).collect())
        .collect();
    let name = format!("{}[{m}]", g.name());
    let sub = GroupTable::from_table(name, rows)
        .map_err(|v| Error::InvalidParameter(format!("induced subgroup bug: {v}")))?;
    Ok((sub, members))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Test-side oracle: enumerate subgroups by trying all 2^(n-1) subsets
    /// containing the identity. Only usable for tiny groups.
    fn brute_force_subgroups(g: &GroupTable) -> Vec<ElementSet> {
        let n = g.order();
        assert!(n <= 16, "oracle is exponential");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & (1 << g.identity()) == 0 {
                continue;
            }
            let set = ElementSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            if is_subgroup(g, &set).unwrap() {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn element_set_basics() {
        let mut s = ElementSet::empty(70);
        assert!(s.is_empty());
        assert!(s.insert(0));
        assert!(s.insert(69));
        assert!(!s.insert(69));
        assert_eq!(s.len(), 2);
        assert!(s.contains(69));
        assert!(!s.contains(68));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 69]);
        assert_eq!(s.min_element(), Some(0));

        let t = ElementSet::from_indices(70, [69]);
        assert!(t.is_subset_of(&s));
        assert!(!s.is_subset_of(&t));
        assert_eq!(s.intersection(&t), t);
        assert_eq!(s.union(&t), s);
    }

    #[test]
    fn element_set_ordering_is_by_mask_value() {
        // {0} < {1} < {0,1} < {2} as binary numbers 1 < 2 < 3 < 4
        let a = ElementSet::from_indices(130, [0]);
        let b = ElementSet::from_indices(130, [1]);
        let c = ElementSet::from_indices(130, [0, 1]);
        let d = ElementSet::from_indices(130, [2]);
        let e = ElementSet::from_indices(130, [129]);
        let mut v = vec![e.clone(), d.clone(), c.clone(), b.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![a, b, c, d, e]);
    }

    #[test]
    fn closure_of_generator_is_cyclic_subgroup() {
        let c12 = GroupTable::cyclic(12).unwrap();
        for a in c12.elements() {
            let seed = ElementSet::from_indices(12, [a]);
            assert_eq!(
                closure(&c12, &seed).unwrap(),
                cyclic_subgroup(&c12, a).unwrap()
            );
        }
    }

    #[test]
    fn closure_of_two_reflections_in_s3() {
        let d3 = GroupTable::dihedral(3).unwrap();
        // two distinct reflections generate the whole group
        let seed = ElementSet::from_indices(6, [3, 4]);
        assert_eq!(closure(&d3, &seed).unwrap().len(), 6);
    }

    #[test]
    fn closure_universe_mismatch() {
        let c6 = GroupTable::cyclic(6).unwrap();
        let wrong = ElementSet::empty(7);
        assert!(matches!(
            closure(&c6, &wrong),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn lattice_matches_brute_force_oracle() {
        let cases = vec![
            GroupTable::cyclic(1).unwrap(),
            GroupTable::cyclic(12).unwrap(),
            GroupTable::dihedral(4).unwrap(),
            GroupTable::dihedral(6).unwrap(),
            GroupTable::generalized_quaternion(8).unwrap(),
            GroupTable::generalized_quaternion(12).unwrap(),
            GroupTable::elementary_abelian(2, 3).unwrap(),
            GroupTable::alternating(4).unwrap(),
            GroupTable::symmetric(3).unwrap(),
        ];
        for g in &cases {
            assert_eq!(
                all_subgroups(g).unwrap(),
                brute_force_subgroups(g),
                "{}",
                g.name()
            );
        }
    }

    #[test]
    fn lattice_counts_for_known_groups() {
        let count = |g: &GroupTable| all_subgroups(g).unwrap().len();
        assert_eq!(count(&GroupTable::cyclic(12).unwrap()), 6);
        assert_eq!(count(&GroupTable::generalized_quaternion(8).unwrap()), 6);
        assert_eq!(count(&GroupTable::elementary_abelian(2, 2).unwrap()), 5);
        assert_eq!(count(&GroupTable::dihedral(4).unwrap()), 10);
        assert_eq!(count(&GroupTable::symmetric(4).unwrap()), 30);
        assert_eq!(count(&GroupTable::alternating(5).unwrap()), 59);
    }

    #[test]
    fn lattice_is_sorted_and_bounded() {
        let g = GroupTable::symmetric(4).unwrap();
        let subs = all_subgroups(&g).unwrap();
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(subs.first().unwrap().len(), 1); // trivial subgroup sorts first
        assert_eq!(subs.last().unwrap().len(), 24); // full group sorts last
        for s in &subs {
            assert_eq!(g.order() % s.len(), 0, "Lagrange");
        }
    }

    #[test]
    fn conjugation_and_normality() {
        let d4 = GroupTable::dihedral(4).unwrap();
        // ⟨s⟩ = {e, s} is not normal in D4; the rotation subgroup is
        let refl = cyclic_subgroup(&d4, 4).unwrap();
        let rot = cyclic_subgroup(&d4, 1).unwrap();
        assert!(!is_normal(&d4, &refl).unwrap());
        assert!(is_normal(&d4, &rot).unwrap());
        // conjugating twice by the same element is the identity map
        let once = conjugate(&d4, &refl, 1).unwrap();
        assert_ne!(once, refl);
        let back = conjugate(&d4, &once, d4.inverse(1)).unwrap();
        assert_eq!(back, refl);
    }

    #[test]
    fn all_subgroups_of_q8_are_normal() {
        let q8 = GroupTable::generalized_quaternion(8).unwrap();
        for s in all_subgroups(&q8).unwrap() {
            assert!(is_normal(&q8, &s).unwrap());
        }
    }

    #[test]
    fn quotient_of_d4_by_center_is_klein() {
        let d4 = GroupTable::dihedral(4).unwrap();
        let center = ElementSet::from_indices(8, [0, 2]);
        let q = quotient(&d4, &center).unwrap();
        assert_eq!(q.table.order(), 4);
        assert!(!q.table.is_cyclic());
        assert_eq!(q.table.exponent(), 2);
        q.table.verify_axioms().unwrap();
    }

    #[test]
    fn quotient_rejects_non_normal_and_non_subgroup() {
        let d4 = GroupTable::dihedral(4).unwrap();
        let refl = cyclic_subgroup(&d4, 4).unwrap();
        assert!(matches!(quotient(&d4, &refl), Err(Error::NotNormal)));
        let not_closed = ElementSet::from_indices(8, [0, 1]);
        assert!(matches!(
            quotient(&d4, &not_closed),
            Err(Error::NotASubgroup)
        ));
    }

    #[test]
    fn quotient_projection_is_a_homomorphism() {
        let s4 = GroupTable::symmetric(4).unwrap();
        // V4 = {e, (12)(34), (13)(24), (14)(23)} is normal in S4; find it as
        // the unique normal subgroup of order 4
        let v4 = all_subgroups(&s4)
            .unwrap()
            .into_iter()
            .find(|s| s.len() == 4 && is_normal(&s4, s).unwrap())
            .unwrap();
        let q = quotient(&s4, &v4).unwrap();
        assert_eq!(q.table.order(), 6);
        assert!(!q.table.is_abelian()); // S4/V4 ≅ S3
        for a in s4.elements() {
            for b in s4.elements() {
                assert_eq!(
                    q.coset_of[s4.mul(a, b)],
                    q.table.mul(q.coset_of[a], q.coset_of[b])
                );
            }
        }
    }

    #[test]
    fn lift_and_project_are_inverse_on_saturated_subgroups() {
        let d6 = GroupTable::dihedral(6).unwrap();
        let center = ElementSet::from_indices(12, [0, 3]);
        let q = quotient(&d6, &center).unwrap();
        for s in all_subgroups(&q.table).unwrap() {
            let lifted = lift_subgroup(&q, &s).unwrap();
            assert!(is_subgroup(&d6, &lifted).unwrap());
            assert!(center.is_subset_of(&lifted));
            assert_eq!(project_subgroup(&q, &lifted).unwrap(), s);
            assert_eq!(lifted.len(), s.len() * center.len());
        }
    }

    #[test]
    fn induced_group_of_rotations() {
        let d5 = GroupTable::dihedral(5).unwrap();
        let rot = cyclic_subgroup(&d5, 1).unwrap();
        let (sub, members) = induced_group(&d5, &rot).unwrap();
        assert_eq!(sub.order(), 5);
        assert!(sub.is_cyclic());
        assert_eq!(members, vec![0, 1, 2, 3, 4]);
        // the embedding respects multiplication
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(members[sub.mul(a, b)], d5.mul(members[a], members[b]));
            }
        }
    }
}
