//! Constructions of Rota–Baxter operators: gluing along a strong
//! semilattice, exact factorizations, commutative endomorphisms on
//! semilattices of groups and idempotent endomorphisms of groups.

use alloc::vec;
use alloc::vec::Vec;

use super::{is_rota_baxter, RbError, RbViolation, RotaBaxterOperator};
use crate::clifford::{
    build_strong_semilattice, enumerate_homomorphisms, CliffordSemigroup, HomKind, SemigroupMap,
    StrongSemilatticeSpec,
};
use crate::{Elem, Verdict};

/// Largest carrier searched for exact factorizations.
pub const FACTORIZATION_CAP: usize = 12;

/// `R(a) = R_α(a)` for `a ∈ G_α`, as images on the glued carrier. No checks.
pub fn glue_components(spec: &StrongSemilatticeSpec, components: &[Vec<Elem>]) -> Vec<Elem> {
    (0..spec.order())
        .map(|x| {
            let (alpha, a) = spec.locate(x);
            spec.global(alpha, components[alpha][a])
        })
        .collect()
}

/// Glues per-vertex group operators into an operator on
/// `build_strong_semilattice(spec)`, provided `R_β φ_{α,β} = φ_{α,β} R_α`
/// for every `α ≥ β`.
pub fn strong_operator_from_components(
    spec: &StrongSemilatticeSpec,
    components: &[Vec<Elem>],
) -> Result<RotaBaxterOperator, RbError> {
    let k = spec.vertex_count();
    if components.len() != k {
        return Err(RbError::ComponentCount {
            expected: k,
            got: components.len(),
        });
    }
    for (alpha, r) in components.iter().enumerate() {
        if let Verdict::Fails(violation) = is_rota_baxter(spec.group(alpha), r) {
            return Err(RbError::ComponentNotRotaBaxter { alpha, violation });
        }
    }
    for alpha in 0..k {
        for beta in (0..k).filter(|&b| spec.geq(alpha, b)) {
            let phi = spec.link(alpha, beta);
            for a in 0..spec.group(alpha).order() {
                if components[beta][phi[a]] != phi[components[alpha][a]] {
                    return Err(RbError::ConditionViolated { alpha, beta, a });
                }
            }
        }
    }
    let s = build_strong_semilattice(spec).expect("validated spec builds");
    Ok(RotaBaxterOperator::new(
        &s,
        glue_components(spec, components),
    )?)
}

/// An exact factorization `(U, V)`: every `a` is uniquely `u_a + v_a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorizationPair {
    pub u: Vec<Elem>,
    pub v: Vec<Elem>,
    /// `decomposition[a] = (u_a, v_a)`
    pub decomposition: Vec<(Elem, Elem)>,
}

/// All pairs of Clifford subsemigroups `(U, V)` giving a unique
/// decomposition of every element, sorted by `(U, V)`.
pub fn find_exact_factorizations(s: &CliffordSemigroup) -> Result<Vec<FactorizationPair>, RbError> {
    let n = s.order();
    if n > FACTORIZATION_CAP {
        return Err(RbError::CarrierTooLarge {
            order: n,
            cap: FACTORIZATION_CAP,
        });
    }
    if s.identity().is_none() {
        return Err(RbError::NotAMonoid);
    }
    let subs = s.clifford_subsemigroups();
    let mut out = Vec::new();
    for u in &subs {
        for v in subs.iter().filter(|v| v.len() * u.len() == n) {
            let mut decomposition = vec![(usize::MAX, usize::MAX); n];
            let unique = u.iter().all(|&x| {
                v.iter().all(|&y| {
                    let slot = &mut decomposition[s.op(x, y)];
                    if slot.0 != usize::MAX {
                        return false;
                    }
                    *slot = (x, y);
                    true
                })
            });
            if unique {
                out.push(FactorizationPair {
                    u: u.clone(),
                    v: v.clone(),
                    decomposition,
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `R(a) = −v_a` and `T(a) = u_a⁰ − v_a`.
pub fn rb_from_exact_factorization(
    s: &CliffordSemigroup,
    pair: &FactorizationPair,
) -> Result<(RotaBaxterOperator, RotaBaxterOperator), RbViolation> {
    let r = pair.decomposition.iter().map(|&(_, v)| s.inv(v)).collect();
    let t = pair
        .decomposition
        .iter()
        .map(|&(u, v)| s.op(s.idem(u), s.inv(v)))
        .collect();
    Ok((
        RotaBaxterOperator::new(s, r)?,
        RotaBaxterOperator::new(s, t)?,
    ))
}

/// Every commutative Rota–Baxter endomorphism of `build_strong_semilattice(spec)`.
///
/// Runs over semilattice endomorphisms `h` with `α ≤ h(α)` and families of
/// homomorphisms `f_α: G_α → G_{h(α)}` with commutative image satisfying
/// `f_β φ_{α,β} = φ_{h(α),h(β)} f_α`, and glues `R(a) = f_α(a)`.
pub fn commutative_rb_endomorphisms(spec: &StrongSemilatticeSpec) -> Vec<RotaBaxterOperator> {
    let s = build_strong_semilattice(spec).expect("validated spec builds");
    let k = spec.vertex_count();
    let mut out = Vec::new();
    for h in semilattice_maps(spec) {
        let homs: Vec<Vec<SemigroupMap>> = (0..k)
            .map(|alpha| {
                let target = spec.group(h[alpha]);
                enumerate_homomorphisms(spec.group(alpha), target, HomKind::All)
                    .into_iter()
                    .filter(|f| abelian_image(target, &f.images))
                    .collect()
            })
            .collect();
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        families(spec, &h, &homs, &mut chosen, &mut |choice| {
            let images = (0..s.order())
                .map(|x| {
                    let (alpha, a) = spec.locate(x);
                    spec.global(h[alpha], homs[alpha][choice[alpha]].apply(a))
                })
                .collect();
            let r = RotaBaxterOperator::new(&s, images)
                .expect("glued commutative endomorphism is Rota–Baxter");
            out.push(r);
        });
    }
    out.sort();
    out.dedup();
    out
}

fn abelian_image(g: &CliffordSemigroup, images: &[Elem]) -> bool {
    images
        .iter()
        .all(|&x| images.iter().all(|&y| g.op(x, y) == g.op(y, x)))
}

/// Semilattice endomorphisms `h` with `h(α) ≥ α`.
fn semilattice_maps(spec: &StrongSemilatticeSpec) -> Vec<Vec<usize>> {
    let k = spec.vertex_count();
    let mut out = Vec::new();
    let mut h = vec![0; k];
    loop {
        let ok = (0..k).all(|a| spec.geq(h[a], a))
            && (0..k).all(|a| (0..k).all(|b| h[spec.meet(a, b)] == spec.meet(h[a], h[b])));
        if ok {
            out.push(h.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            h[i] += 1;
            if h[i] < k {
                break;
            }
            h[i] = 0;
        }
    }
}

fn families(
    spec: &StrongSemilatticeSpec,
    h: &[usize],
    homs: &[Vec<SemigroupMap>],
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let k = spec.vertex_count();
    let next = chosen.len();
    if next == k {
        emit(chosen);
        return;
    }
    for i in 0..homs[next].len() {
        chosen.push(i);
        let compatible = (0..=next).all(|other| {
            let pairs = [(next, other), (other, next)];
            pairs.iter().all(|&(alpha, beta)| {
                if !spec.geq(alpha, beta) {
                    return true;
                }
                let fa = &homs[alpha][chosen[alpha]];
                let fb = &homs[beta][chosen[beta]];
                let phi = spec.link(alpha, beta);
                let phi_h = spec.link(h[alpha], h[beta]);
                (0..spec.group(alpha).order()).all(|x| fb.apply(phi[x]) == phi_h[fa.apply(x)])
            })
        });
        if compatible {
            families(spec, h, homs, chosen, emit);
        }
        chosen.pop();
    }
}

/// Every idempotent Rota–Baxter endomorphism of a group `G`.
///
/// For each normal `N` with `G/N` abelian and each subgroup `𝒮` that is a
/// transversal of `G/N`, `R(g)` is the unique element of `𝒮 ∩ (N + g)`.
pub fn idempotent_rb_endomorphisms(
    g: &CliffordSemigroup,
) -> Result<Vec<RotaBaxterOperator>, RbError> {
    if !g.is_group() {
        return Err(RbError::NotAGroup);
    }
    let n = g.order();
    let subgroups = g.clifford_subsemigroups();
    let mut out = Vec::new();
    for normal in &subgroups {
        let mut in_n = vec![false; n];
        normal.iter().for_each(|&x| in_n[x] = true);
        if !g.is_normal_subset(normal).expect("in range").holds() {
            continue;
        }
        let abelian_quotient =
            (0..n).all(|a| (0..n).all(|b| in_n[g.product(&[a, b, g.inv(a), g.inv(b)])]));
        if !abelian_quotient {
            continue;
        }
        for transversal in subgroups.iter().filter(|t| t.len() * normal.len() == n) {
            if transversal.iter().filter(|&&x| in_n[x]).count() != 1 {
                continue;
            }
            let images: Vec<Elem> = (0..n)
                .map(|x| {
                    *transversal
                        .iter()
                        .find(|&&t| in_n[g.op(t, g.inv(x))])
                        .expect("transversal meets every coset")
                })
                .collect();
            let r = RotaBaxterOperator::new(g, images)
                .expect("projection along an abelian quotient is Rota–Baxter");
            out.push(r);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
