//! Concrete finite groups as dense multiplication tables.
//!
//! A [`GroupTable`] stores the full Cayley table of a group over element
//! indices `0..n-1`, together with the identity, per-element inverses and
//! per-element orders. Constructors are provided for the supported families
//! (cyclic, dihedral, generalized quaternion, symmetric, alternating,
//! elementary abelian) and for direct products; arbitrary tables can be
//! imported through [`GroupTable::from_table`], which validates the group
//! axioms exhaustively.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::Error;

/// Default bound on group orders accepted by constructors and by the
/// lattice enumeration. Full subgroup enumeration is the binding cost, and
/// it stays comfortable at this scale.
pub const DEFAULT_ORDER_CAP: usize = 256;

static ORDER_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ORDER_CAP);

/// Current order cap. Constructors refuse to build groups larger than this.
pub fn order_cap() -> usize {
    ORDER_CAP.load(Ordering::Relaxed)
}

/// Override the order cap process-wide. Values below 1 are clamped to 1.
pub fn set_order_cap(cap: usize) {
    ORDER_CAP.store(cap.max(1), Ordering::Relaxed);
}

fn check_cap(requested: u128) -> Result<(), Error> {
    let cap = order_cap();
    if requested > cap as u128 {
        Err(Error::OrderCapExceeded { requested, cap })
    } else {
        Ok(())
    }
}

/// A specific way a multiplication table fails to be a group table.
///
/// Reported by [`GroupTable::verify_axioms`] and [`GroupTable::from_table`];
/// the first violation in checking order (shape, rows, columns, identity,
/// inverses, associativity, element orders) wins.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomViolation {
    #[error("table is not a square {order}x{order} array of indices below {order}")]
    MalformedTable { order: usize },
    #[error("row {row} of the table is not a permutation of 0..{order}")]
    RowNotPermutation { row: usize, order: usize },
    #[error("column {col} of the table is not a permutation of 0..{order}")]
    ColumnNotPermutation { col: usize, order: usize },
    #[error("no two-sided identity element exists")]
    NoIdentity,
    #[error("element {elem} violates the identity law for identity {identity}")]
    IdentityFailure { identity: usize, elem: usize },
    #[error("element {elem} has no two-sided inverse")]
    InverseFailure { elem: usize },
    #[error("associativity fails at the triple ({a}, {b}, {c})")]
    AssociativityFailure { a: usize, b: usize, c: usize },
    #[error("stored order {stored} of element {elem} differs from recomputed order {computed}")]
    ElementOrderMismatch {
        elem: usize,
        stored: usize,
        computed: usize,
    },
    #[error("order {elem_order} of element {elem} does not divide the group order {order}")]
    ElementOrderNotDivisor {
        elem: usize,
        elem_order: usize,
        order: usize,
    },
}

/// A finite group as a dense multiplication table over indices `0..n-1`.
///
/// `table[a*n + b]` is the index of the product `a·b`. Tables are immutable
/// after construction; every operation is a pure read, so a `GroupTable`
/// can be shared freely across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    elem_orders: Vec<usize>,
}

impl GroupTable {
    /// Cyclic group of order `n`, written additively: `a·b = (a+b) mod n`.
    pub fn cyclic(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "cyclic group order must be at least 1".into(),
            ));
        }
        check_cap(n as u128)?;
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b) % n;
            }
        }
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        let elem_orders = (0..n).map(|a| n / gcd(a, n)).collect();
        Ok(GroupTable {
            name: format!("C{n}"),
            order: n,
            table,
            identity: 0,
            inverse,
            elem_orders,
        })
    }

    /// Dihedral group of order `2n`: rotations `r^i` at indices `0..n`,
    /// reflections `r^i s` at indices `n..2n`, with `s r s = r^{-1}`.
    pub fn dihedral(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "dihedral parameter must be at least 1".into(),
            ));
        }
        check_cap(2 * n as u128)?;
        let order = 2 * n;
        let mut table = vec![0usize; order * order];
        let rot = |i: isize| -> usize { i.rem_euclid(n as isize) as usize };
        for a in 0..order {
            for b in 0..order {
                let (i, a_flip) = if a < n { (a, false) } else { (a - n, true) };
                let (j, b_flip) = if b < n { (b, false) } else { (b - n, true) };
                // r^i s · r^j = r^{i-j} s, otherwise exponents add.
                let k = if a_flip {
                    rot(i as isize - j as isize)
                } else {
                    rot(i as isize + j as isize)
                };
                table[a * order + b] = if a_flip ^ b_flip { k + n } else { k };
            }
        }
        Self::from_parts(format!("D{n}"), order, table)
    }

    /// Generalized quaternion (dicyclic) group of order `m`, for `m >= 8`
    /// divisible by 4: `⟨a, b | a^{m/2} = 1, b^2 = a^{m/4}, b^{-1}ab = a^{-1}⟩`.
    /// Indices `0..m/2` are `a^i`, indices `m/2..m` are `a^i b`.
    pub fn generalized_quaternion(m: usize) -> Result<Self, Error> {
        if m < 8 || !m.is_multiple_of(4) {
            return Err(Error::InvalidParameter(format!(
                "generalized quaternion order must be a multiple of 4 and at least 8, got {m}"
            )));
        }
        check_cap(m as u128)?;
        let h = m / 2;
        let mut table = vec![0usize; m * m];
        let rot = |i: isize| -> usize { i.rem_euclid(h as isize) as usize };
        for a in 0..m {
            for b in 0..m {
                let (i, a_flip) = if a < h { (a, false) } else { (a - h, true) };
                let (j, b_flip) = if b < h { (b, false) } else { (b - h, true) };
                // b a^j = a^{-j} b and b^2 = a^{h/2}.
                let mut k = if a_flip {
                    rot(i as isize - j as isize)
                } else {
                    rot(i as isize + j as isize)
                };
                if a_flip && b_flip {
                    k = rot(k as isize + (h / 2) as isize);
                }
                table[a * m + b] = if a_flip ^ b_flip { k + h } else { k };
            }
        }
        Self::from_parts(format!("Q{m}"), m, table)
    }

    /// Symmetric group on `n` letters; elements are the permutations of
    /// `0..n` indexed by lexicographic rank, product is composition.
    pub fn symmetric(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "symmetric group degree must be at least 1".into(),
            ));
        }
        let order = checked_factorial(n).ok_or(Error::OrderCapExceeded {
            requested: u128::MAX,
            cap: order_cap(),
        })?;
        check_cap(order)?;
        let perms = all_permutations(n);
        Self::from_permutations(format!("S{n}"), perms)
    }

    /// Alternating group on `n` letters: the even permutations, indexed by
    /// lexicographic rank among themselves.
    pub fn alternating(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "alternating group degree must be at least 1".into(),
            ));
        }
        let order = checked_factorial(n)
            .map(|f| if n >= 2 { f / 2 } else { f })
            .ok_or(Error::OrderCapExceeded {
                requested: u128::MAX,
                cap: order_cap(),
            })?;
        check_cap(order)?;
        let perms: Vec<Vec<usize>> = all_permutations(n)
            .into_iter()
            .filter(|p| permutation_is_even(p))
            .collect();
        Self::from_permutations(format!("A{n}"), perms)
    }

    /// Elementary abelian group of order `p^k`: `k`-tuples over `Z_p` under
    /// componentwise addition. Element `i` has digits `(i / p^j) % p`.
    pub fn elementary_abelian(p: usize, k: usize) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!(
                "elementary abelian base {p} is not prime"
            )));
        }
        if k == 0 {
            return Err(Error::InvalidParameter(
                "elementary abelian rank must be at least 1".into(),
            ));
        }
        let order = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        check_cap(order)?;
        let n = order as usize;
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let (mut x, mut y, mut pw, mut sum) = (a, b, 1usize, 0usize);
                for _ in 0..k {
                    sum += ((x + y) % p) * pw;
                    x /= p;
                    y /= p;
                    pw *= p;
                }
                table[a * n + b] = sum;
            }
        }
        let inverse = (0..n)
            .map(|a| {
                let (mut x, mut pw, mut inv) = (a, 1usize, 0usize);
                for _ in 0..k {
                    inv += ((p - x % p) % p) * pw;
                    x /= p;
                    pw *= p;
                }
                inv
            })
            .collect();
        let elem_orders = (0..n).map(|a| if a == 0 { 1 } else { p }).collect();
        Ok(GroupTable {
            name: format!("E{p}_{k}"),
            order: n,
            table,
            identity: 0,
            inverse,
            elem_orders,
        })
    }

    /// Direct product; element `(x, y)` of `A x B` gets index `x·|B| + y`.
    pub fn direct_product(&self, other: &GroupTable) -> Result<Self, Error> {
        let (na, nb) = (self.order, other.order);
        check_cap(na as u128 * nb as u128)?;
        let n = na * nb;
        let mut table = vec![0usize; n * n];
        for x1 in 0..na {
            for y1 in 0..nb {
                let a = x1 * nb + y1;
                for x2 in 0..na {
                    for y2 in 0..nb {
                        table[a * n + x2 * nb + y2] = self.mul(x1, x2) * nb + other.mul(y1, y2);
                    }
                }
            }
        }
        let identity = self.identity * nb + other.identity;
        let inverse = (0..n)
            .map(|a| self.inverse(a / nb) * nb + other.inverse(a % nb))
            .collect();
        let elem_orders = (0..n)
            .map(|a| lcm(self.elem_orders[a / nb], other.elem_orders[a % nb]))
            .collect();
        Ok(GroupTable {
            name: format!("{}x{}", self.name, other.name),
            order: n,
            table,
            identity,
            inverse,
            elem_orders,
        })
    }

    /// Build a group from an explicit table, validating every axiom.
    /// `rows[a][b]` is the index of `a·b`. Identity, inverses and element
    /// orders are derived, not supplied.
    pub fn from_table(
        name: impl Into<String>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, AxiomViolation> {
        let n = rows.len();
        if n == 0
            || rows
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&e| e >= n))
        {
            return Err(AxiomViolation::MalformedTable { order: n });
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        Self::derive_and_verify(name.into(), n, table)
    }

    // Shared by family constructors that compute a raw table: derives
    // identity/inverses/orders and re-validates the axioms, so a bug in a
    // construction formula surfaces at the constructor call.
    fn from_parts(name: String, order: usize, table: Vec<usize>) -> Result<Self, Error> {
        Self::derive_and_verify(name, order, table)
            .map_err(|v| Error::InvalidParameter(format!("internal construction bug: {v}")))
    }

    fn derive_and_verify(
        name: String,
        n: usize,
        table: Vec<usize>,
    ) -> Result<Self, AxiomViolation> {
        // structural checks first, so a corrupted table is reported as the
        // malformed row/column rather than as a missing identity or inverse
        Self::check_latin(&table, n)?;
        let at = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(AxiomViolation::NoIdentity)?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&x| at(a, x) == identity && at(x, a) == identity)
                    .ok_or(AxiomViolation::InverseFailure { elem: a })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let elem_orders = (0..n)
            .map(|a| {
                // terminates: right-multiplication by `a` is a permutation
                // (Latin column) whose cycle through `a` passes the identity
                let (mut t, mut acc) = (1usize, a);
                while acc != identity {
                    acc = at(acc, a);
                    t += 1;
                    debug_assert!(t <= n);
                }
                t
            })
            .collect();
        let g = GroupTable {
            name,
            order: n,
            table,
            identity,
            inverse,
            elem_orders,
        };
        g.verify_axioms()?;
        Ok(g)
    }

    fn from_permutations(name: String, perms: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = perms.len();
        // perms are sorted lexicographically by construction; rank by search
        let rank = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let mut table = vec![0usize; n * n];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let composed: Vec<usize> = pb.iter().map(|&i| pa[i]).collect();
                table[a * n + b] = rank(&composed);
            }
        }
        Self::from_parts(name, n, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Product of two elements by table lookup.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        self.table[a * self.order + b]
    }

    /// Inverse of an element.
    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a^m` by binary exponentiation; `a^0` is the identity.
    pub fn pow(&self, a: usize, m: usize) -> usize {
        let mut result = self.identity;
        let mut base = a;
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Order of element `a`: the least `t >= 1` with `a^t` the identity.
    pub fn element_order(&self, a: usize) -> Result<usize, Error> {
        if a >= self.order {
            return Err(Error::IndexOutOfRange {
                index: a,
                order: self.order,
            });
        }
        Ok(self.elem_orders[a])
    }

    /// All element orders, indexed by element.
    pub fn element_orders(&self) -> &[usize] {
        &self.elem_orders
    }

    /// Exponent of the group: the least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elem_orders.iter().copied().fold(1, lcm)
    }

    /// True iff some element has order `|G|`.
    pub fn is_cyclic(&self) -> bool {
        self.elem_orders.contains(&self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Iterator over all element indices.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    // Shape, rows and columns: the Latin-square part of the axioms.
    fn check_latin(table: &[usize], n: usize) -> Result<(), AxiomViolation> {
        if n == 0 || table.len() != n * n || table.iter().any(|&e| e >= n) {
            return Err(AxiomViolation::MalformedTable { order: n });
        }
        let mut seen = vec![false; n];
        for row in 0..n {
            seen.fill(false);
            for b in 0..n {
                seen[table[row * n + b]] = true;
            }
            if !seen.iter().all(|&s| s) {
                return Err(AxiomViolation::RowNotPermutation { row, order: n });
            }
        }
        for col in 0..n {
            seen.fill(false);
            for a in 0..n {
                seen[table[a * n + col]] = true;
            }
            if !seen.iter().all(|&s| s) {
                return Err(AxiomViolation::ColumnNotPermutation { col, order: n });
            }
        }
        Ok(())
    }

    /// Exhaustively re-check every table invariant, returning the first
    /// violation found: table shape, Latin-square rows and columns, the
    /// identity and inverse laws, associativity over all triples, and the
    /// stored element orders.
    pub fn verify_axioms(&self) -> Result<(), AxiomViolation> {
        let n = self.order;
        Self::check_latin(&self.table, n)?;
        if self.inverse.len() != n || self.elem_orders.len() != n || self.identity >= n {
            return Err(AxiomViolation::MalformedTable { order: n });
        }
        let e = self.identity;
        for a in 0..n {
            if self.mul(e, a) != a || self.mul(a, e) != a {
                return Err(AxiomViolation::IdentityFailure {
                    identity: e,
                    elem: a,
                });
            }
        }
        for a in 0..n {
            let inv = self.inverse[a];
            if self.mul(a, inv) != e || self.mul(inv, a) != e {
                return Err(AxiomViolation::InverseFailure { elem: a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(AxiomViolation::AssociativityFailure { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            let mut t = 1;
            let mut acc = a;
            while acc != e {
                acc = self.mul(acc, a);
                t += 1;
            }
            if t != self.elem_orders[a] {
                return Err(AxiomViolation::ElementOrderMismatch {
                    elem: a,
                    stored: self.elem_orders[a],
                    computed: t,
                });
            }
            if !n.is_multiple_of(t) {
                return Err(AxiomViolation::ElementOrderNotDivisor {
                    elem: a,
                    elem_order: t,
                    order: n,
                });
            }
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub(crate) fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_factorial(n: usize) -> Option<u128> {
    let mut f: u128 = 1;
    for i in 2..=n as u128 {
        f = f.checked_mul(i)?;
    }
    Some(f)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    // lexicographic order via the standard next-permutation loop
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn permutation_is_even(p: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions.is_multiple_of(2)
}
