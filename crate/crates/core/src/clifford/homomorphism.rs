use alloc::vec;
use alloc::vec::Vec;

use super::CliffordSemigroup;
use crate::Elem;

/// A total map between two finite carriers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemigroupMap {
    pub source_order: usize,
    pub target_order: usize,
    pub images: Vec<Elem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    All,
    Isomorphisms,
}

impl SemigroupMap {
    pub fn new(target_order: usize, images: Vec<Elem>) -> Option<Self> {
        images.iter().all(|&x| x < target_order).then_some(Self {
            source_order: images.len(),
            target_order,
            images,
        })
    }

    pub fn identity(order: usize) -> Self {
        Self {
            source_order: order,
            target_order: order,
            images: (0..order).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.images[a]
    }

    pub fn is_bijective(&self) -> bool {
        if self.source_order != self.target_order {
            return false;
        }
        let mut hit = vec![false; self.target_order];
        self.images
            .iter()
            .all(|&x| !core::mem::replace(&mut hit[x], true))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_bijective() {
            return None;
        }
        let mut images = vec![0; self.source_order];
        for (a, &x) in self.images.iter().enumerate() {
            images[x] = a;
        }
        Some(Self {
            source_order: self.target_order,
            target_order: self.source_order,
            images,
        })
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &SemigroupMap) -> Self {
        assert_eq!(inner.target_order, self.source_order);
        Self {
            source_order: inner.source_order,
            target_order: self.target_order,
            images: inner.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_homomorphism(&self, s: &CliffordSemigroup, t: &CliffordSemigroup) -> bool {
        self.source_order == s.order()
            && self.target_order == t.order()
            && (0..s.order()).all(|a| {
                (0..s.order())
                    .all(|b| self.images[s.op(a, b)] == t.op(self.images[a], self.images[b]))
            })
    }
}

/// Every homomorphism `S → T` (or every isomorphism), sorted by images.
///
/// Backtracks over images in element order and checks `f(ab) = f(a)f(b)` as
/// soon as `a`, `b` and `ab` all have images.
pub fn enumerate_homomorphisms(
    s: &CliffordSemigroup,
    t: &CliffordSemigroup,
    kind: HomKind,
) -> Vec<SemigroupMap> {
    let n = s.order();
    let m = t.order();
    if kind == HomKind::Isomorphisms && n != m {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut images = vec![0; n];
    let mut used = vec![false; m];
    search(s, t, kind, 0, &mut images, &mut used, &mut out);
    out
}

fn search(
    s: &CliffordSemigroup,
    t: &CliffordSemigroup,
    kind: HomKind,
    k: usize,
    images: &mut Vec<Elem>,
    used: &mut Vec<bool>,
    out: &mut Vec<SemigroupMap>,
) {
    let n = s.order();
    if k == n {
        out.push(SemigroupMap {
            source_order: n,
            target_order: t.order(),
            images: images.clone(),
        });
        return;
    }
    for x in 0..t.order() {
        if kind == HomKind::Isomorphisms && used[x] {
            continue;
        }
        images[k] = x;
        if consistent_at(s, t, images, k) {
            used[x] = true;
            search(s, t, kind, k + 1, images, used, out);
            used[x] = false;
        }
    }
}

fn consistent_at(s: &CliffordSemigroup, t: &CliffordSemigroup, images: &[Elem], k: usize) -> bool {
    for a in 0..=k {
        for b in 0..=k {
            let ab = s.op(a, b);
            if ab <= k && (a == k || b == k || ab == k) && images[ab] != t.op(images[a], images[b])
            {
                return false;
            }
        }
    }
    true
}
