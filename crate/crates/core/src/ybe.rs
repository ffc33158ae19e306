//! Set-theoretic Yang–Baxter solutions on finite sets.
//!
//! A map `r: S × S → S × S` is stored as a dense table of pairs with
//! `r(a, b) = table[a * n + b]`. The braid relation
//! `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` is checked triple by triple.

use alloc::vec;
use alloc::vec::Vec;

use crate::clifford::CliffordSemigroup;
use crate::rota_baxter::RotaBaxterOperator;
use crate::weak_brace::{opposite_brace, DualWeakBrace};
use crate::{Elem, Verdict};

/// A total map on pairs with its braid and non-degeneracy verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionMap {
    order: usize,
    table: Vec<(Elem, Elem)>,
    braid: Verdict<(Elem, Elem, Elem)>,
    left_nondegenerate: bool,
    right_nondegenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolutionShapeError {
    #[error("expected {expected} pairs, got {got}")]
    Length { expected: usize, got: usize },
    #[error("pair at ({a}, {b}) leaves 0..{order}")]
    OutOfRange { a: Elem, b: Elem, order: usize },
}

impl SolutionMap {
    /// Any total map; the braid verdict is computed, not required.
    pub fn from_table(order: usize, table: Vec<(Elem, Elem)>) -> Result<Self, SolutionShapeError> {
        if table.len() != order * order {
            return Err(SolutionShapeError::Length {
                expected: order * order,
                got: table.len(),
            });
        }
        if let Some(i) = table.iter().position(|&(x, y)| x >= order || y >= order) {
            return Err(SolutionShapeError::OutOfRange {
                a: i / order,
                b: i % order,
                order,
            });
        }
        Ok(Self::from_checked(order, table))
    }

    pub fn from_fn(
        order: usize,
        f: impl Fn(Elem, Elem) -> (Elem, Elem),
    ) -> Result<Self, SolutionShapeError> {
        let table = (0..order)
            .flat_map(|a| (0..order).map(move |b| (a, b)))
            .map(|(a, b)| f(a, b))
            .collect();
        Self::from_table(order, table)
    }

    fn from_checked(order: usize, table: Vec<(Elem, Elem)>) -> Self {
        let mut s = Self {
            order,
            table,
            braid: Verdict::Holds,
            left_nondegenerate: false,
            right_nondegenerate: false,
        };
        s.braid = braid_violation(&s).map_or(Verdict::Holds, Verdict::Fails);
        s.left_nondegenerate =
            (0..order).all(|a| is_permutation((0..order).map(|b| s.apply(a, b).0), order));
        s.right_nondegenerate =
            (0..order).all(|b| is_permutation((0..order).map(|a| s.apply(a, b).1), order));
        s
    }

    pub fn flip(order: usize) -> Self {
        Self::from_fn(order, |a, b| (b, a)).unwrap()
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |a, b| (a, b)).unwrap()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn apply(&self, a: Elem, b: Elem) -> (Elem, Elem) {
        self.table[a * self.order + b]
    }

    pub fn table(&self) -> &[(Elem, Elem)] {
        &self.table
    }

    /// `table()` as rows: `rows()[a][b] = r(a, b)`.
    pub fn rows(&self) -> Vec<Vec<(Elem, Elem)>> {
        self.table
            .chunks(self.order.max(1))
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn braid(&self) -> &Verdict<(Elem, Elem, Elem)> {
        &self.braid
    }

    pub fn is_solution(&self) -> bool {
        self.braid.holds()
    }

    /// Every first component `b ↦ r(a, b).0` is a bijection.
    pub fn is_left_nondegenerate(&self) -> bool {
        self.left_nondegenerate
    }

    /// Every second component `a ↦ r(a, b).1` is a bijection.
    pub fn is_right_nondegenerate(&self) -> bool {
        self.right_nondegenerate
    }

    /// `self ∘ inner`, applying `inner` first.
    pub fn compose(&self, inner: &SolutionMap) -> SolutionMap {
        assert_eq!(self.order, inner.order, "orders differ");
        let table = inner.table.iter().map(|&(x, y)| self.apply(x, y)).collect();
        Self::from_checked(self.order, table)
    }

    pub fn is_identity(&self) -> bool {
        let n = self.order;
        self.table
            .iter()
            .enumerate()
            .all(|(i, &p)| p == (i / n, i % n))
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.order;
        is_permutation(self.table.iter().map(|&(x, y)| x * n + y), n * n)
    }
}

fn is_permutation(images: impl Iterator<Item = Elem>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for x in images {
        if core::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

fn braid_violation(r: &SolutionMap) -> Option<(Elem, Elem, Elem)> {
    let n = r.order;
    for x in 0..n {
        for y in 0..n {
            let (x1, y1) = r.apply(x, y);
            for z in 0..n {
                // (r×id)(id×r)(r×id)
                let (y2, z2) = r.apply(y1, z);
                let (x3, y3) = r.apply(x1, y2);
                let left = (x3, y3, z2);
                // (id×r)(r×id)(id×r)
                let (u1, v1) = r.apply(y, z);
                let (w2, u2) = r.apply(x, u1);
                let (u3, v3) = r.apply(u2, v1);
                if left != (w2, u3, v3) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Braid relation over all `n³` triples; the witness is the first failing triple.
pub fn check_braid(r: &SolutionMap) -> Verdict<(Elem, Elem, Elem)> {
    braid_violation(r).map_or(Verdict::Holds, Verdict::Fails)
}

/// `r(a, b) = (λ_a(b), ρ_b(a))`.
pub fn solution_from_brace(b: &DualWeakBrace) -> SolutionMap {
    let sol = SolutionMap::from_fn(b.order(), |x, y| (b.lambda(x, y), b.rho(y, x))).unwrap();
    assert!(
        sol.is_solution(),
        "a dual weak brace produced a non-solution"
    );
    sol
}

/// `ρ_b(a) = −Rλ − λ + a + λ + Rλ` with `λ = λ_a(b)`, for a brace built from `R` on `s`.
pub fn operator_rho(
    s: &CliffordSemigroup,
    r: &RotaBaxterOperator,
    b: &DualWeakBrace,
    x: Elem,
    y: Elem,
) -> Elem {
    let l = b.lambda(x, y);
    let rl = r.apply(l);
    s.product(&[s.inv(rl), s.inv(l), x, l, rl])
}

/// Compares [`operator_rho`] with the brace's `ρ` at every pair; the witness is `(a, b)`.
pub fn check_operator_rho(
    s: &CliffordSemigroup,
    r: &RotaBaxterOperator,
    b: &DualWeakBrace,
) -> Verdict<(Elem, Elem)> {
    let n = b.order();
    for x in 0..n {
        for y in 0..n {
            if operator_rho(s, r, b, x, y) != b.rho(y, x) {
                return Verdict::Fails((x, y));
            }
        }
    }
    Verdict::Holds
}

/// Regularity and degeneracy properties of the solution of a brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    /// `r r^op r = r`
    pub r_rop_r: bool,
    /// `r^op r r^op = r^op`
    pub rop_r_rop: bool,
    /// `r r^op = r^op r`
    pub commute: bool,
    /// `λ_a λ_{a⁻} λ_a = λ_a`, `λ_{a⁻} λ_a λ_{a⁻} = λ_{a⁻}`, `λ_a λ_{a⁻} = λ_{a⁻} λ_a` for all `a`.
    pub lambda_regular: [bool; 3],
    /// The same three identities for `ρ_b`.
    pub rho_regular: [bool; 3],
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub bijective: bool,
    pub single_idempotent: bool,
    /// `r r^op = id`
    pub inverse_is_opposite: bool,
}

impl RegularityReport {
    pub fn completely_regular(&self) -> bool {
        self.r_rop_r && self.rop_r_rop && self.commute
    }

    pub fn actions_regular(&self) -> bool {
        self.lambda_regular
            .iter()
            .chain(&self.rho_regular)
            .all(|&x| x)
    }
}

fn compose_maps(f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    g.iter().map(|&x| f[x]).collect()
}

fn regular_triple(f: &[Elem], g: &[Elem]) -> [bool; 3] {
    let fg = compose_maps(f, g);
    let gf = compose_maps(g, f);
    [
        compose_maps(&fg, f) == f,
        compose_maps(&gf, g) == g,
        fg == gf,
    ]
}

/// Builds `r` and `r^op` (from the opposite brace) and evaluates every identity.
pub fn regularity_report(b: &DualWeakBrace) -> RegularityReport {
    let n = b.order();
    let r = solution_from_brace(b);
    let rop = solution_from_brace(&opposite_brace(b).expect("opposite of a dual weak brace"));
    let r_rop = r.compose(&rop);
    let rop_r = rop.compose(&r);
    let mut lambda_regular = [true; 3];
    let mut rho_regular = [true; 3];
    for a in 0..n {
        let ia = b.circ_inv(a);
        let l = regular_triple(b.lambda_map(a), b.lambda_map(ia));
        let p = regular_triple(b.rho_map(a), b.rho_map(ia));
        for i in 0..3 {
            lambda_regular[i] &= l[i];
            rho_regular[i] &= p[i];
        }
    }
    RegularityReport {
        r_rop_r: r_rop.compose(&r) == r,
        rop_r_rop: rop_r.compose(&rop) == rop,
        commute: r_rop == rop_r,
        lambda_regular,
        rho_regular,
        left_nondegenerate: r.is_left_nondegenerate(),
        right_nondegenerate: r.is_right_nondegenerate(),
        bijective: r.is_bijective(),
        single_idempotent: b.idempotents().len() == 1,
        inverse_is_opposite: r_rop.is_identity() && rop_r.is_identity(),
    }
}

/// `(f × f) r = s (f × f)`.
pub fn is_equivalence_witness(r: &SolutionMap, s: &SolutionMap, f: &[Elem]) -> bool {
    let n = r.order;
    s.order == n
        && f.len() == n
        && is_permutation(f.iter().copied(), n)
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let (x, y) = r.apply(a, b);
                s.apply(f[a], f[b]) == (f[x], f[y])
            })
        })
}

// Per-element data preserved by any equivalence.
fn invariants(r: &SolutionMap) -> Vec<[usize; 5]> {
    let n = r.order;
    (0..n)
        .map(|a| {
            let mut left = vec![false; n];
            let mut right = vec![false; n];
            let mut left_fixed = 0;
            let mut right_fixed = 0;
            for b in 0..n {
                let (x, _) = r.apply(a, b);
                let (_, y) = r.apply(b, a);
                left[x] = true;
                right[y] = true;
                left_fixed += usize::from(x == b);
                right_fixed += usize::from(y == b);
            }
            [
                left.iter().filter(|&&v| v).count(),
                right.iter().filter(|&&v| v).count(),
                left_fixed,
                right_fixed,
                usize::from(r.apply(a, a) == (a, a)),
            ]
        })
        .collect()
}

/// A bijection `f` with `(f × f) r = s (f × f)`, if any; the search is
/// exhaustive, pruned by per-element invariants and forced images.
pub fn solutions_equivalent(r: &SolutionMap, s: &SolutionMap) -> Option<Vec<Elem>> {
    let n = r.order;
    if s.order != n {
        return None;
    }
    let (ri, si) = (invariants(r), invariants(s));
    let mut rs = ri.clone();
    let mut ss = si.clone();
    rs.sort_unstable();
    ss.sort_unstable();
    if rs != ss {
        return None;
    }
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(r, s, &ri, &si, &mut f, &mut used).then_some(f)
}

fn search(
    r: &SolutionMap,
    s: &SolutionMap,
    ri: &[[usize; 5]],
    si: &[[usize; 5]],
    f: &mut Vec<Elem>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(a) = f.iter().position(|&x| x == usize::MAX) else {
        return is_equivalence_witness(r, s, f);
    };
    for t in 0..r.order {
        if used[t] || ri[a] != si[t] {
            continue;
        }
        let (saved_f, saved_used) = (f.clone(), used.clone());
        if assign(r, s, ri, si, f, used, a, t) && search(r, s, ri, si, f, used) {
            return true;
        }
        *f = saved_f;
        *used = saved_used;
    }
    false
}

// Sets f(a) = t and propagates every image forced by pairs of assigned elements.
#[allow(clippy::too_many_arguments)]
fn assign(
    r: &SolutionMap,
    s: &SolutionMap,
    ri: &[[usize; 5]],
    si: &[[usize; 5]],
    f: &mut [Elem],
    used: &mut [bool],
    a: Elem,
    t: Elem,
) -> bool {
    let mut queue = vec![(a, t)];
    let mut assigned: Vec<Elem> = (0..r.order).filter(|&x| f[x] != usize::MAX).collect();
    while let Some((x, y)) = queue.pop() {
        if f[x] != usize::MAX {
            if f[x] != y {
                return false;
            }
            continue;
        }
        if used[y] || ri[x] != si[y] {
            return false;
        }
        f[x] = y;
        used[y] = true;
        assigned.push(x);
        for &u in &assigned {
            for (p, q) in [(x, u), (u, x)] {
                let (c, d) = r.apply(p, q);
                let (fc, fd) = s.apply(f[p], f[q]);
                queue.push((c, fc));
                queue.push((d, fd));
            }
        }
    }
    true
}
