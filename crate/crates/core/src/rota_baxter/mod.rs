//! Rota–Baxter operators on finite Clifford semigroups `(S, +)`.
//!
//! A map `R: S → S` is a Rota–Baxter operator when
//!
//! * `R(a) + R(b) = R(a + R(a) + b − R(a))` for all `a, b` (RB1), and
//! * `a + R(a)⁰ = a` for all `a` (RB2).
//!
//! The carrier is written additively here even when it is not commutative:
//! `+` is [`CliffordSemigroup::op`] and `−a` is [`CliffordSemigroup::inv`].

mod constructions;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

pub use constructions::{
    commutative_rb_endomorphisms, find_exact_factorizations, glue_components,
    idempotent_rb_endomorphisms, rb_from_exact_factorization, strong_operator_from_components,
    FactorizationPair, FACTORIZATION_CAP,
};

use crate::clifford::{enumerate_homomorphisms, CliffordSemigroup, HomKind, SemigroupMap};
use crate::{Elem, Verdict};

/// Default largest carrier handed to [`enumerate_rota_baxter`].
pub const ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum RbViolation {
    #[error("map has {got} images, carrier has {expected} elements")]
    Length { expected: usize, got: usize },
    #[error("image {value} of {a} is out of range")]
    OutOfRange { a: Elem, value: Elem },
    #[error("R(a) + R(b) ≠ R(a + R(a) + b − R(a)) at a = {a}, b = {b}")]
    Rb1 { a: Elem, b: Elem },
    #[error("a + R(a)⁰ ≠ a at a = {a}")]
    Rb2 { a: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RbError {
    #[error("carrier of order {order} exceeds the cap {cap}")]
    CarrierTooLarge { order: usize, cap: usize },
    #[error("carrier is not a group")]
    NotAGroup,
    #[error("carrier is not a monoid")]
    NotAMonoid,
    #[error("expected {expected} component operators, got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("component operator at vertex {alpha} is not Rota–Baxter: {violation}")]
    ComponentNotRotaBaxter {
        alpha: usize,
        violation: RbViolation,
    },
    #[error("R_β φ(a) ≠ φ R_α(a) for α = {alpha}, β = {beta}, a = {a}")]
    ConditionViolated { alpha: usize, beta: usize, a: Elem },
    #[error("not a Rota–Baxter operator: {0}")]
    NotRotaBaxter(#[from] RbViolation),
}

/// A map verified against RB1 and RB2 on the carrier it was built for.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotaBaxterOperator {
    images: Vec<Elem>,
}

impl RotaBaxterOperator {
    pub fn new(s: &CliffordSemigroup, images: Vec<Elem>) -> Result<Self, RbViolation> {
        match is_rota_baxter(s, &images) {
            Verdict::Holds => Ok(Self { images }),
            Verdict::Fails(v) => Err(v),
        }
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.images[a]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn into_images(self) -> Vec<Elem> {
        self.images
    }

    /// Sorted image set, `im R`.
    pub fn image_set(&self) -> Vec<Elem> {
        let set: BTreeSet<Elem> = self.images.iter().copied().collect();
        set.into_iter().collect()
    }
}

/// Checks RB2 for every element, then RB1 for every pair in row-major order.
pub fn is_rota_baxter(s: &CliffordSemigroup, images: &[Elem]) -> Verdict<RbViolation> {
    let n = s.order();
    if images.len() != n {
        return Verdict::Fails(RbViolation::Length {
            expected: n,
            got: images.len(),
        });
    }
    if let Some(a) = images.iter().position(|&x| x >= n) {
        return Verdict::Fails(RbViolation::OutOfRange {
            a,
            value: images[a],
        });
    }
    for (a, &ra) in images.iter().enumerate() {
        if s.op(a, s.idem(ra)) != a {
            return Verdict::Fails(RbViolation::Rb2 { a });
        }
    }
    for a in 0..n {
        let ra = images[a];
        let left = s.op(a, ra);
        let nra = s.inv(ra);
        for b in 0..n {
            let arg = s.op(s.op(left, b), nra);
            if s.op(ra, images[b]) != images[arg] {
                return Verdict::Fails(RbViolation::Rb1 { a, b });
            }
        }
    }
    Verdict::Holds
}

/// Exhaustive, duplicate-free list of Rota–Baxter operators, sorted by images.
pub fn enumerate_rota_baxter(
    s: &CliffordSemigroup,
    cap: usize,
) -> Result<Vec<RotaBaxterOperator>, RbError> {
    let search = RbSearch::new(s, cap)?;
    let mut out = Vec::new();
    for first in search.branches() {
        out.extend(search.run_branch(first));
    }
    out.sort();
    Ok(out)
}

/// Backtracking search for Rota–Baxter operators, split by the image of the
/// first element in assignment order so callers can spread branches across
/// workers and merge.
///
/// Idempotents are assigned first, each to an idempotent `f` with `e + f = e`.
/// A non-idempotent `a` then only tries images `r` with `r⁰ = R(a⁰)` and
/// `a + r⁰ = a`. RB1 is checked on every pair whose three participants
/// `a`, `b`, `a + R(a) + b − R(a)` already have images.
#[derive(Debug, Clone)]
pub struct RbSearch<'s> {
    s: &'s CliffordSemigroup,
    order: Vec<Elem>,
}

impl<'s> RbSearch<'s> {
    pub fn new(s: &'s CliffordSemigroup, cap: usize) -> Result<Self, RbError> {
        if s.order() > cap {
            return Err(RbError::CarrierTooLarge {
                order: s.order(),
                cap,
            });
        }
        Ok(Self {
            s,
            order: s.canonical_order(),
        })
    }

    /// Candidate images of the first element in assignment order.
    pub fn branches(&self) -> Vec<Elem> {
        let images = vec![usize::MAX; self.s.order()];
        self.candidates(self.order[0], &images)
    }

    /// All operators whose first assigned image is `first`, sorted.
    pub fn run_branch(&self, first: Elem) -> Vec<RotaBaxterOperator> {
        let n = self.s.order();
        let mut images = vec![usize::MAX; n];
        let mut out = Vec::new();
        images[self.order[0]] = first;
        if self.consistent(&images, self.order[0]) {
            self.extend(1, &mut images, &mut out);
        }
        out.sort();
        out
    }

    fn candidates(&self, a: Elem, images: &[Elem]) -> Vec<Elem> {
        let s = self.s;
        if s.is_idempotent(a) {
            s.idempotents()
                .iter()
                .copied()
                .filter(|&f| s.op(a, f) == a)
                .collect()
        } else {
            let target = images[s.idem(a)];
            (0..s.order())
                .filter(|&r| s.idem(r) == target && s.op(a, s.idem(r)) == a)
                .collect()
        }
    }

    fn extend(&self, pos: usize, images: &mut Vec<Elem>, out: &mut Vec<RotaBaxterOperator>) {
        if pos == self.order.len() {
            out.push(RotaBaxterOperator {
                images: images.clone(),
            });
            return;
        }
        let a = self.order[pos];
        for r in self.candidates(a, images) {
            images[a] = r;
            if self.consistent(images, a) {
                self.extend(pos + 1, images, out);
            }
        }
        images[a] = usize::MAX;
    }

    fn consistent(&self, images: &[Elem], fresh: Elem) -> bool {
        let s = self.s;
        let n = s.order();
        let set = |x: Elem| images[x] != usize::MAX;
        for a in (0..n).filter(|&a| set(a)) {
            let ra = images[a];
            let left = s.op(a, ra);
            let nra = s.inv(ra);
            for b in (0..n).filter(|&b| set(b)) {
                let arg = s.op(s.op(left, b), nra);
                if set(arg)
                    && (a == fresh || b == fresh || arg == fresh)
                    && s.op(ra, images[b]) != images[arg]
                {
                    return false;
                }
            }
        }
        true
    }
}

/// `𝔈(a) = a⁰` and `𝔒(a) = −a`.
pub fn elementary_operators(s: &CliffordSemigroup) -> (RotaBaxterOperator, RotaBaxterOperator) {
    let e = (0..s.order()).map(|a| s.idem(a)).collect();
    let o = (0..s.order()).map(|a| s.inv(a)).collect();
    (
        RotaBaxterOperator { images: e },
        RotaBaxterOperator { images: o },
    )
}

/// `Rᵒᵖ(a) = −a + R(−a)`, re-verified.
pub fn opposite_operator(
    s: &CliffordSemigroup,
    r: &RotaBaxterOperator,
) -> Result<RotaBaxterOperator, RbViolation> {
    RotaBaxterOperator::new(s, opposite_images(s, r.images()))
}

fn opposite_images(s: &CliffordSemigroup, images: &[Elem]) -> Vec<Elem> {
    (0..s.order())
        .map(|a| s.op(s.inv(a), images[s.inv(a)]))
        .collect()
}

/// Evaluates both written forms of the opposite operator:
/// `a ↦ −a + R(−a)` and `a ↦ −a + R(a)`. Returns whether each is Rota–Baxter.
pub fn opposite_variants(s: &CliffordSemigroup, r: &RotaBaxterOperator) -> (bool, bool) {
    let standard = opposite_images(s, r.images());
    let variant: Vec<Elem> = (0..s.order()).map(|a| s.op(s.inv(a), r.apply(a))).collect();
    (
        is_rota_baxter(s, &standard).holds(),
        is_rota_baxter(s, &variant).holds(),
    )
}

/// An isomorphism `φ: S → T` with `φ∘R = T∘φ`, if one exists.
pub fn equivalent_operators(
    s: &CliffordSemigroup,
    r: &RotaBaxterOperator,
    t_carrier: &CliffordSemigroup,
    t: &RotaBaxterOperator,
) -> Option<SemigroupMap> {
    enumerate_homomorphisms(s, t_carrier, HomKind::Isomorphisms)
        .into_iter()
        .find(|phi| (0..s.order()).all(|a| phi.apply(r.apply(a)) == t.apply(phi.apply(a))))
}

/// Orbits of `ops` under conjugation by `Aut(S)`, as sorted index lists into
/// `ops`, ordered by smallest member. Operators not in `ops` are ignored.
pub fn operator_orbits(s: &CliffordSemigroup, ops: &[RotaBaxterOperator]) -> Vec<Vec<usize>> {
    let autos = enumerate_homomorphisms(s, s, HomKind::Isomorphisms);
    let mut class = vec![usize::MAX; ops.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..ops.len() {
        if class[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![i];
        class[i] = id;
        for j in i + 1..ops.len() {
            if class[j] == usize::MAX
                && autos.iter().any(|phi| {
                    (0..s.order()).all(|a| phi.apply(ops[i].apply(a)) == ops[j].apply(phi.apply(a)))
                })
            {
                class[j] = id;
                members.push(j);
            }
        }
        orbits.push(members);
    }
    orbits
}

pub fn is_endomorphism(s: &CliffordSemigroup, images: &[Elem]) -> bool {
    (0..s.order()).all(|a| (0..s.order()).all(|b| images[s.op(a, b)] == s.op(images[a], images[b])))
}

pub fn has_commutative_image(s: &CliffordSemigroup, images: &[Elem]) -> bool {
    images
        .iter()
        .all(|&x| images.iter().all(|&y| s.op(x, y) == s.op(y, x)))
}

pub fn is_idempotent_map(images: &[Elem]) -> bool {
    images.iter().all(|&x| images[x] == x)
}
