//! Ideals, socle and quotients of dual weak braces.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{BraceError, DualWeakBrace};
use crate::clifford::NormalViolation;
use crate::subset::{self, SubsetError};
use crate::{Elem, Verdict};

/// Default largest brace handed to [`enumerate_ideals`].
pub const IDEAL_CAP: usize = 10;

/// An element subset together with the three ideal conditions as checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    pub members: Vec<Elem>,
    pub normal_in_add: bool,
    pub lambda_invariant: bool,
    pub normal_in_circ: bool,
}

impl Ideal {
    /// Evaluates all three conditions on a sorted, deduplicated copy of `members`.
    pub fn assess(b: &DualWeakBrace, members: &[Elem]) -> Result<Self, SubsetError> {
        let m = subset::mask(b.order(), members)?;
        Ok(Self {
            members: subset::members(&m),
            normal_in_add: b.additive().normal_violation(&m).is_none(),
            lambda_invariant: lambda_violation(b, &m).is_none(),
            normal_in_circ: b.multiplicative().normal_violation(&m).is_none(),
        })
    }

    pub fn is_ideal(&self) -> bool {
        self.normal_in_add && self.lambda_invariant && self.normal_in_circ
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealViolation {
    NotNormalInAdd(NormalViolation),
    /// `x ∈ I` but `λ_a(x) ∉ I`, as `(a, x)`.
    NotLambdaInvariant(Elem, Elem),
    NotNormalInCirc(NormalViolation),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    First,
    Second,
}

fn lambda_violation(b: &DualWeakBrace, m: &[bool]) -> Option<(Elem, Elem)> {
    let n = b.order();
    (0..n)
        .flat_map(|a| (0..n).map(move |x| (a, x)))
        .find(|&(a, x)| m[x] && !m[b.lambda(a, x)])
}

fn violation(b: &DualWeakBrace, m: &[bool]) -> Option<IdealViolation> {
    if let Some(v) = b.additive().normal_violation(m) {
        return Some(IdealViolation::NotNormalInAdd(v));
    }
    if let Some((a, x)) = lambda_violation(b, m) {
        return Some(IdealViolation::NotLambdaInvariant(a, x));
    }
    b.multiplicative()
        .normal_violation(m)
        .map(IdealViolation::NotNormalInCirc)
}

/// Normal in `(S, +)`, `λ`-invariant, normal in `(S, ∘)`; checked in that order.
pub fn is_ideal(
    b: &DualWeakBrace,
    members: &[Elem],
) -> Result<Verdict<IdealViolation>, SubsetError> {
    let m = subset::mask(b.order(), members)?;
    Ok(violation(b, &m).map_or(Verdict::Holds, Verdict::Fails))
}

/// `Soc(S) = {a : a + b = a∘b and a + b = b + a for all b}`.
pub fn socle(b: &DualWeakBrace) -> Ideal {
    let n = b.order();
    let members: Vec<Elem> = (0..n)
        .filter(|&a| (0..n).all(|x| b.add(a, x) == b.circ(a, x) && b.add(a, x) == b.add(x, a)))
        .collect();
    Ideal::assess(b, &members).expect("in range")
}

/// Every ideal, sorted by size then members.
///
/// Ideals contain `E(S)` and are closed under `−`, so the search runs over
/// unions of `{a, −a}` blocks of non-idempotent elements added to `E(S)`.
pub fn enumerate_ideals(b: &DualWeakBrace, cap: usize) -> Result<Vec<Ideal>, BraceError> {
    let n = b.order();
    if n > cap {
        return Err(BraceError::CarrierTooLarge { order: n, cap });
    }
    let mut blocks: Vec<Vec<Elem>> = Vec::new();
    let mut seen = vec![false; n];
    for a in (0..n).filter(|&a| !b.additive().is_idempotent(a)) {
        if seen[a] {
            continue;
        }
        let na = b.neg(a);
        seen[a] = true;
        seen[na] = true;
        blocks.push(if na == a { vec![a] } else { vec![a, na] });
    }
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << blocks.len()) {
        let mut m = vec![false; n];
        for &e in b.idempotents() {
            m[e] = true;
        }
        for (i, block) in blocks.iter().enumerate() {
            if choice >> i & 1 == 1 {
                block.iter().for_each(|&x| m[x] = true);
            }
        }
        if violation(b, &m).is_none() {
            out.push(Ideal {
                members: subset::members(&m),
                normal_in_add: true,
                lambda_invariant: true,
                normal_in_circ: true,
            });
        }
    }
    out.sort_by(|x, y| {
        x.len()
            .cmp(&y.len())
            .then_with(|| x.members.cmp(&y.members))
    });
    Ok(out)
}

/// `(I + J, I∘J)` as assessed subsets.
pub fn ideal_sum_and_product(
    b: &DualWeakBrace,
    i: &[Elem],
    j: &[Elem],
) -> Result<(Ideal, Ideal), BraceError> {
    if let Verdict::Fails(v) = is_ideal(b, i)? {
        return Err(BraceError::NotAnIdeal(Which::First, v));
    }
    if let Verdict::Fails(v) = is_ideal(b, j)? {
        return Err(BraceError::NotAnIdeal(Which::Second, v));
    }
    let mut sum = BTreeSet::new();
    let mut prod = BTreeSet::new();
    for &x in i {
        for &y in j {
            sum.insert(b.add(x, y));
            prod.insert(b.circ(x, y));
        }
    }
    let sum: Vec<Elem> = sum.into_iter().collect();
    let prod: Vec<Elem> = prod.into_iter().collect();
    Ok((Ideal::assess(b, &sum)?, Ideal::assess(b, &prod)?))
}

/// The two descriptions of `∼_I`: `−a + b ∈ I` or `a⁻∘b ∈ I`, both with `a⁰ = b⁰`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceRoute {
    Additive,
    Multiplicative,
}

/// Class labels of `∼_I`: `labels[a]` is the smallest element related to `a`.
pub fn congruence_classes(
    b: &DualWeakBrace,
    members: &[Elem],
    route: CongruenceRoute,
) -> Result<Vec<Elem>, SubsetError> {
    let m = subset::mask(b.order(), members)?;
    let related = |x: Elem, y: Elem| {
        b.idem(x) == b.idem(y)
            && match route {
                CongruenceRoute::Additive => m[b.add(b.neg(x), y)],
                CongruenceRoute::Multiplicative => m[b.circ(b.circ_inv(x), y)],
            }
    };
    Ok((0..b.order())
        .map(|y| {
            (0..b.order())
                .find(|&x| related(x, y))
                .expect("relation is reflexive")
        })
        .collect())
}

/// A quotient brace with its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub brace: DualWeakBrace,
    /// `projection[a]` is the class index of `a` in `brace`.
    pub projection: Vec<Elem>,
    /// Smallest element of each class, ascending; class `k` is represented by `representatives[k]`.
    pub representatives: Vec<Elem>,
}

impl Quotient {
    /// Whether `e ↦ [e]` maps `E(S)` isomorphically onto the quotient's idempotents.
    pub fn idempotents_isomorphic(&self, b: &DualWeakBrace) -> bool {
        let image: Vec<Elem> = b
            .idempotents()
            .iter()
            .map(|&e| self.projection[e])
            .collect();
        let distinct: BTreeSet<Elem> = image.iter().copied().collect();
        let target: BTreeSet<Elem> = self.brace.idempotents().iter().copied().collect();
        distinct.len() == image.len()
            && distinct == target
            && b.idempotents().iter().all(|&e| {
                b.idempotents().iter().all(|&f| {
                    self.projection[b.add(e, f)]
                        == self.brace.add(self.projection[e], self.projection[f])
                })
            })
    }
}

/// `S/∼_I`, on class representatives.
pub fn quotient_brace(b: &DualWeakBrace, members: &[Elem]) -> Result<Quotient, BraceError> {
    if let Verdict::Fails(v) = is_ideal(b, members)? {
        return Err(BraceError::NotAnIdeal(Which::First, v));
    }
    let labels = congruence_classes(b, members, CongruenceRoute::Additive)?;
    let representatives: Vec<Elem> = labels
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let projection: Vec<Elem> = labels
        .iter()
        .map(|l| representatives.binary_search(l).unwrap())
        .collect();
    let k = representatives.len();
    let n = b.order();
    let mut add = vec![usize::MAX; k * k];
    let mut circ = vec![usize::MAX; k * k];
    for x in 0..n {
        for y in 0..n {
            let slot = projection[x] * k + projection[y];
            for (table, value) in [
                (&mut add, projection[b.add(x, y)]),
                (&mut circ, projection[b.circ(x, y)]),
            ] {
                if table[slot] == usize::MAX {
                    table[slot] = value;
                } else if table[slot] != value {
                    return Err(BraceError::NotACongruence(x, y));
                }
            }
        }
    }
    let brace = DualWeakBrace::verify(k, add, circ)?;
    Ok(Quotient {
        brace,
        projection,
        representatives,
    })
}
