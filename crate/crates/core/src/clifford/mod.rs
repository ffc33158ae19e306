//! Finite Clifford semigroups.
//!
//! A [`CliffordSemigroup`] is a Cayley table that has passed
//! [`CliffordSemigroup::verify`]: associative, every element has a unique
//! inverse, `a·a⁻¹ = a⁻¹·a`, and idempotents are central. Inverses and
//! idempotent parts are computed once at verification time.

mod homomorphism;
mod semilattice;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

pub use homomorphism::{enumerate_homomorphisms, HomKind, SemigroupMap};
pub use semilattice::{
    build_strong_semilattice, decompose_to_strong_semilattice, Decomposition, Link,
    SemilatticeError, StrongSemilatticeSpec,
};
pub(crate) use semilattice::{glue_table, Frame};

use crate::subset::{self, SubsetError};
use crate::{Elem, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("carrier must have at least one element")]
    Empty,
    #[error(
        "table has {rows} rows of which row {bad_row} has the wrong length (expected {order})"
    )]
    Ragged {
        order: usize,
        rows: usize,
        bad_row: usize,
    },
    #[error("table entry {a}·{b} = {value} is out of range")]
    EntryOutOfRange { a: Elem, b: Elem, value: Elem },
    #[error("not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("element {0} has no inverse")]
    NoInverse(Elem),
    #[error("element {0} has more than one inverse")]
    NonUniqueInverse(Elem),
    #[error("element {0} does not commute with its inverse")]
    NotClifford(Elem),
    #[error("idempotent {0} does not commute with {1}")]
    IdempotentNotCentral(Elem, Elem),
}

/// A verified finite Clifford semigroup on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordSemigroup {
    order: usize,
    table: Vec<Elem>,
    inv: Vec<Elem>,
    idem: Vec<Elem>,
    idempotents: Vec<Elem>,
}

impl CliffordSemigroup {
    /// Verifies a row-major table (`table[a * order + b] = a·b`).
    pub fn verify(order: usize, table: Vec<Elem>) -> Result<Self, CliffordError> {
        if order == 0 {
            return Err(CliffordError::Empty);
        }
        if table.len() != order * order {
            return Err(CliffordError::Ragged {
                order,
                rows: table.len() / order,
                bad_row: table.len() / order,
            });
        }
        for a in 0..order {
            for b in 0..order {
                let value = table[a * order + b];
                if value >= order {
                    return Err(CliffordError::EntryOutOfRange { a, b, value });
                }
            }
        }
        let op = |a: Elem, b: Elem| table[a * order + b];
        for a in 0..order {
            for b in 0..order {
                let ab = op(a, b);
                for c in 0..order {
                    if op(ab, c) != op(a, op(b, c)) {
                        return Err(CliffordError::NotAssociative(a, b, c));
                    }
                }
            }
        }

        let mut inv = vec![0; order];
        for (a, slot) in inv.iter_mut().enumerate() {
            let mut found = None;
            for x in 0..order {
                if op(op(a, x), a) == a && op(op(x, a), x) == x {
                    if found.is_some() {
                        return Err(CliffordError::NonUniqueInverse(a));
                    }
                    found = Some(x);
                }
            }
            *slot = found.ok_or(CliffordError::NoInverse(a))?;
        }
        for (a, &ia) in inv.iter().enumerate() {
            if op(a, ia) != op(ia, a) {
                return Err(CliffordError::NotClifford(a));
            }
        }
        let idempotents: Vec<Elem> = (0..order).filter(|&e| op(e, e) == e).collect();
        for &e in &idempotents {
            for a in 0..order {
                if op(e, a) != op(a, e) {
                    return Err(CliffordError::IdempotentNotCentral(e, a));
                }
            }
        }
        let idem = (0..order).map(|a| op(a, inv[a])).collect();
        Ok(Self {
            order,
            table,
            inv,
            idem,
            idempotents,
        })
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self, CliffordError> {
        let order = rows.len();
        if order == 0 {
            return Err(CliffordError::Empty);
        }
        if let Some(bad_row) = rows.iter().position(|r| r.len() != order) {
            return Err(CliffordError::Ragged {
                order,
                rows: order,
                bad_row,
            });
        }
        Self::verify(order, rows.concat())
    }

    /// Builds the table from an operation closure and verifies it.
    pub fn from_fn(order: usize, f: impl Fn(Elem, Elem) -> Elem) -> Result<Self, CliffordError> {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(f(a, b));
            }
        }
        Self::verify(order, table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    /// `a·b·c`
    #[inline]
    pub fn op3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.op(self.op(a, b), c)
    }

    /// Left-to-right product of a nonempty sequence.
    pub fn product(&self, items: &[Elem]) -> Elem {
        let (&first, rest) = items.split_first().expect("empty product");
        rest.iter().fold(first, |acc, &x| self.op(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// The idempotent part `a⁰ = a·a⁻¹`.
    #[inline]
    pub fn idem(&self, a: Elem) -> Elem {
        self.idem[a]
    }

    pub fn inverses_and_idempotents(&self) -> (&[Elem], &[Elem]) {
        (&self.inv, &self.idem)
    }

    /// Sorted list of idempotents, `E(S)`.
    pub fn idempotents(&self) -> &[Elem] {
        &self.idempotents
    }

    #[inline]
    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.idem[a] == a
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.table
            .chunks(self.order)
            .map(<[Elem]>::to_vec)
            .collect()
    }

    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// The two-sided identity, when the semigroup is a monoid.
    pub fn identity(&self) -> Option<Elem> {
        self.idempotents
            .iter()
            .copied()
            .find(|&e| (0..self.order).all(|a| self.op(e, a) == a))
    }

    /// The semigroup with the operation reversed, `a ·ᵒᵖ b = b·a`.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.op(b, a);
            }
        }
        Self {
            order: n,
            table,
            inv: self.inv.clone(),
            idem: self.idem.clone(),
            idempotents: self.idempotents.clone(),
        }
    }

    /// Elements sharing the idempotent part `e`, i.e. the maximal subgroup at `e`.
    pub fn group_component(&self, e: Elem) -> Vec<Elem> {
        (0..self.order).filter(|&a| self.idem[a] == e).collect()
    }

    /// Idempotents first (ascending), then the remaining elements grouped by
    /// their idempotent part. Returned as the list of old indices in new order.
    pub fn canonical_order(&self) -> Vec<Elem> {
        let mut out = self.idempotents.clone();
        for &e in &self.idempotents {
            out.extend((0..self.order).filter(|&a| a != e && self.idem[a] == e));
        }
        out
    }

    /// Whether `members` is closed under the operation and under inverses.
    pub fn is_clifford_subsemigroup(&self, members: &[Elem]) -> Result<bool, SubsetError> {
        let m = subset::mask(self.order, members)?;
        Ok(!members.is_empty() && closed(self, &m))
    }

    /// All nonempty subsets closed under the operation and inverses, each
    /// sorted, the list sorted by (size, members).
    pub fn clifford_subsemigroups(&self) -> Vec<Vec<Elem>> {
        let n = self.order;
        let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
        let mut frontier: Vec<Vec<bool>> = Vec::new();
        for a in 0..n {
            let mut m = vec![false; n];
            m[a] = true;
            let c = close(self, m);
            if seen.insert(c.clone()) {
                frontier.push(c);
            }
        }
        while let Some(cur) = frontier.pop() {
            for a in 0..n {
                if cur[a] {
                    continue;
                }
                let mut m = cur.clone();
                m[a] = true;
                let c = close(self, m);
                if seen.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        let mut out: Vec<Vec<Elem>> = seen.iter().map(|m| subset::members(m)).collect();
        out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        out
    }

    /// Checks the four normal-subset conditions.
    pub fn is_normal_subset(
        &self,
        members: &[Elem],
    ) -> Result<Verdict<NormalViolation>, SubsetError> {
        let m = subset::mask(self.order, members)?;
        Ok(self
            .normal_violation(&m)
            .map_or(Verdict::Holds, Verdict::Fails))
    }

    pub(crate) fn normal_violation(&self, m: &[bool]) -> Option<NormalViolation> {
        let n = self.order;
        if let Some(&e) = self.idempotents.iter().find(|&&e| !m[e]) {
            return Some(NormalViolation::MissingIdempotent(e));
        }
        if let Some(a) = (0..n).find(|&a| m[a] && !m[self.inv[a]]) {
            return Some(NormalViolation::NotInverseClosed(a));
        }
        for a in (0..n).filter(|&a| m[a]) {
            for b in 0..n {
                if m[self.op(self.idem[a], b)] && !m[self.op(a, b)] {
                    return Some(NormalViolation::NotClosed(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if m[self.op(a, b)] && !m[self.op(b, a)] {
                    return Some(NormalViolation::NotSelfConjugate(a, b));
                }
            }
        }
        None
    }
}

/// Which of the four normal-subset conditions failed, with witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalViolation {
    /// Condition 1: an idempotent is missing.
    MissingIdempotent(Elem),
    /// Condition 2: `a ∈ N` but `a⁻¹ ∉ N`.
    NotInverseClosed(Elem),
    /// Condition 3: `a, a⁰b ∈ N` but `ab ∉ N`.
    NotClosed(Elem, Elem),
    /// Condition 4: `ab ∈ N` but `ba ∉ N`.
    NotSelfConjugate(Elem, Elem),
}

impl NormalViolation {
    pub fn condition(&self) -> u8 {
        match self {
            NormalViolation::MissingIdempotent(_) => 1,
            NormalViolation::NotInverseClosed(_) => 2,
            NormalViolation::NotClosed(..) => 3,
            NormalViolation::NotSelfConjugate(..) => 4,
        }
    }
}

fn closed(s: &CliffordSemigroup, m: &[bool]) -> bool {
    let n = s.order();
    (0..n)
        .filter(|&a| m[a])
        .all(|a| m[s.inv(a)] && (0..n).filter(|&b| m[b]).all(|b| m[s.op(a, b)]))
}

fn close(s: &CliffordSemigroup, mut m: Vec<bool>) -> Vec<bool> {
    let n = s.order();
    loop {
        let mut changed = false;
        for a in 0..n {
            if !m[a] {
                continue;
            }
            let ia = s.inv(a);
            if !m[ia] {
                m[ia] = true;
                changed = true;
            }
            for b in 0..n {
                if m[b] {
                    let ab = s.op(a, b);
                    if !m[ab] {
                        m[ab] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return m;
        }
    }
}
