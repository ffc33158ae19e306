//! Strong semilattices `[Y; G_α; φ_{α,β}]` and the gluing used for both
//! groups and braces.
//!
//! The semilattice is stored as a meet table. `α ≥ β` iff `α∧β = β`.
//! Elements of the glued carrier are indexed vertex-major, then by the local
//! index inside each component.

use alloc::vec;
use alloc::vec::Vec;

use super::{CliffordError, CliffordSemigroup};
use crate::Elem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemilatticeError {
    #[error("semilattice has no vertices")]
    Empty,
    #[error("meet table is not square or has out-of-range entries")]
    MeetShape,
    #[error("meet is not commutative at ({0}, {1})")]
    MeetNotCommutative(usize, usize),
    #[error("meet is not idempotent at {0}")]
    MeetNotIdempotent(usize),
    #[error("meet is not associative at ({0}, {1}, {2})")]
    MeetNotAssociative(usize, usize, usize),
    #[error("expected {expected} components, got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("component {0} is not a group")]
    NotAGroup(usize),
    #[error("link {from} → {to} does not go down the semilattice")]
    LinkNotComparable { from: usize, to: usize },
    #[error("link {from} → {to} is given twice")]
    DuplicateLink { from: usize, to: usize },
    #[error("link {from} → {to} has the wrong length or out-of-range images")]
    LinkShape { from: usize, to: usize },
    #[error("no link given for {from} ≥ {to}")]
    MissingLink { from: usize, to: usize },
    #[error("link {0} → {0} is not the identity")]
    LinkNotIdentity(usize),
    #[error("link {from} → {to} is not a homomorphism at ({a}, {b})")]
    LinkNotHomomorphism {
        from: usize,
        to: usize,
        a: Elem,
        b: Elem,
    },
    #[error("links {alpha} → {beta} → {gamma} do not compose to {alpha} → {gamma} at {a}")]
    LinksDoNotCompose {
        alpha: usize,
        beta: usize,
        gamma: usize,
        a: Elem,
    },
    #[error("glued table failed verification: {0}")]
    Glued(#[from] CliffordError),
}

/// A linking map `φ_{from,to}` given by its images on local indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Link {
    pub from: usize,
    pub to: usize,
    pub images: Vec<Elem>,
}

/// Semilattice, component sizes and validated links; no component operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Frame {
    k: usize,
    meet: Vec<usize>,
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    // links[α * k + β] is Some for α ≥ β
    links: Vec<Option<Vec<Elem>>>,
}

impl Frame {
    pub(crate) fn new(
        meet: &[Vec<usize>],
        sizes: Vec<usize>,
        links: &[Link],
    ) -> Result<Self, SemilatticeError> {
        let k = meet.len();
        if k == 0 {
            return Err(SemilatticeError::Empty);
        }
        if meet
            .iter()
            .any(|r| r.len() != k || r.iter().any(|&x| x >= k))
        {
            return Err(SemilatticeError::MeetShape);
        }
        if sizes.len() != k {
            return Err(SemilatticeError::ComponentCount {
                expected: k,
                got: sizes.len(),
            });
        }
        let m = |a: usize, b: usize| meet[a][b];
        for a in 0..k {
            if m(a, a) != a {
                return Err(SemilatticeError::MeetNotIdempotent(a));
            }
            for b in 0..k {
                if m(a, b) != m(b, a) {
                    return Err(SemilatticeError::MeetNotCommutative(a, b));
                }
                for c in 0..k {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(SemilatticeError::MeetNotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut table: Vec<Option<Vec<Elem>>> = vec![None; k * k];
        for l in links {
            let (from, to) = (l.from, l.to);
            if from >= k || to >= k || m(from, to) != to {
                return Err(SemilatticeError::LinkNotComparable { from, to });
            }
            if l.images.len() != sizes[from] || l.images.iter().any(|&x| x >= sizes[to]) {
                return Err(SemilatticeError::LinkShape { from, to });
            }
            let slot = &mut table[from * k + to];
            if slot.is_some() {
                return Err(SemilatticeError::DuplicateLink { from, to });
            }
            *slot = Some(l.images.clone());
        }
        for a in 0..k {
            let slot = &mut table[a * k + a];
            match slot {
                None => *slot = Some((0..sizes[a]).collect()),
                Some(images) => {
                    if images.iter().enumerate().any(|(i, &x)| i != x) {
                        return Err(SemilatticeError::LinkNotIdentity(a));
                    }
                }
            }
            for b in 0..k {
                if m(a, b) == b && table[a * k + b].is_none() {
                    return Err(SemilatticeError::MissingLink { from: a, to: b });
                }
            }
        }
        for a in 0..k {
            for b in (0..k).filter(|&b| m(a, b) == b) {
                for c in (0..k).filter(|&c| m(b, c) == c) {
                    let ab = table[a * k + b].as_ref().unwrap();
                    let bc = table[b * k + c].as_ref().unwrap();
                    let ac = table[a * k + c].as_ref().unwrap();
                    if let Some(x) = (0..sizes[a]).find(|&x| bc[ab[x]] != ac[x]) {
                        return Err(SemilatticeError::LinksDoNotCompose {
                            alpha: a,
                            beta: b,
                            gamma: c,
                            a: x,
                        });
                    }
                }
            }
        }
        let mut offsets = Vec::with_capacity(k + 1);
        let mut acc = 0;
        for &s in &sizes {
            offsets.push(acc);
            acc += s;
        }
        offsets.push(acc);
        Ok(Self {
            k,
            meet: meet.concat(),
            sizes,
            offsets,
            links: table,
        })
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.k
    }

    pub(crate) fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.k + b]
    }

    pub(crate) fn geq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == b
    }

    pub(crate) fn order(&self) -> usize {
        self.offsets[self.k]
    }

    pub(crate) fn link(&self, from: usize, to: usize) -> &[Elem] {
        self.links[from * self.k + to]
            .as_deref()
            .expect("link requested for incomparable vertices")
    }

    pub(crate) fn global(&self, vertex: usize, local: Elem) -> Elem {
        self.offsets[vertex] + local
    }

    pub(crate) fn locate(&self, global: Elem) -> (usize, Elem) {
        let v = self.offsets.partition_point(|&o| o <= global) - 1;
        (v, global - self.offsets[v])
    }

    pub(crate) fn meet_rows(&self) -> Vec<Vec<usize>> {
        self.meet.chunks(self.k).map(<[usize]>::to_vec).collect()
    }

    /// Non-identity links, ordered by (from, to).
    pub(crate) fn link_list(&self) -> Vec<Link> {
        let mut out = Vec::new();
        for a in 0..self.k {
            for b in (0..self.k).filter(|&b| b != a && self.geq(a, b)) {
                out.push(Link {
                    from: a,
                    to: b,
                    images: self.link(a, b).to_vec(),
                });
            }
        }
        out
    }

    /// Checks that every link is a homomorphism for the given component operation.
    pub(crate) fn check_links_preserve(
        &self,
        op: impl Fn(usize, Elem, Elem) -> Elem,
    ) -> Result<(), SemilatticeError> {
        for from in 0..self.k {
            for to in (0..self.k).filter(|&to| self.geq(from, to)) {
                let phi = self.link(from, to);
                for a in 0..self.sizes[from] {
                    for b in 0..self.sizes[from] {
                        if phi[op(from, a, b)] != op(to, phi[a], phi[b]) {
                            return Err(SemilatticeError::LinkNotHomomorphism { from, to, a, b });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `a·b := φ_{α,αβ}(a) · φ_{β,αβ}(b)` over all components.
pub(crate) fn glue_table(frame: &Frame, op: impl Fn(usize, Elem, Elem) -> Elem) -> Vec<Elem> {
    let n = frame.order();
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (a, xl) = frame.locate(x);
        for y in 0..n {
            let (b, yl) = frame.locate(y);
            let g = frame.meet(a, b);
            let local = op(g, frame.link(a, g)[xl], frame.link(b, g)[yl]);
            table[x * n + y] = frame.global(g, local);
        }
    }
    table
}

/// A validated strong semilattice of groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrongSemilatticeSpec {
    frame: Frame,
    groups: Vec<CliffordSemigroup>,
}

impl StrongSemilatticeSpec {
    /// Validates the meet table, the groups and the links. Identity links
    /// `φ_{α,α}` may be omitted; every other comparable pair needs a link.
    pub fn new(
        meet: Vec<Vec<usize>>,
        groups: Vec<CliffordSemigroup>,
        links: Vec<Link>,
    ) -> Result<Self, SemilatticeError> {
        if groups.len() != meet.len() {
            return Err(SemilatticeError::ComponentCount {
                expected: meet.len(),
                got: groups.len(),
            });
        }
        if let Some(a) = groups.iter().position(|g| !g.is_group()) {
            return Err(SemilatticeError::NotAGroup(a));
        }
        let frame = Frame::new(
            &meet,
            groups.iter().map(CliffordSemigroup::order).collect(),
            &links,
        )?;
        frame.check_links_preserve(|v, a, b| groups[v].op(a, b))?;
        Ok(Self { frame, groups })
    }

    pub fn vertex_count(&self) -> usize {
        self.frame.vertex_count()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.frame.meet(a, b)
    }

    /// `α ≥ β` in the semilattice order.
    pub fn geq(&self, alpha: usize, beta: usize) -> bool {
        self.frame.geq(alpha, beta)
    }

    pub fn group(&self, alpha: usize) -> &CliffordSemigroup {
        &self.groups[alpha]
    }

    pub fn groups(&self) -> &[CliffordSemigroup] {
        &self.groups
    }

    /// `φ_{α,β}` on local indices; panics unless `α ≥ β`.
    pub fn link(&self, alpha: usize, beta: usize) -> &[Elem] {
        self.frame.link(alpha, beta)
    }

    pub fn links(&self) -> Vec<Link> {
        self.frame.link_list()
    }

    pub fn meet_rows(&self) -> Vec<Vec<usize>> {
        self.frame.meet_rows()
    }

    pub fn order(&self) -> usize {
        self.frame.order()
    }

    /// Index in the glued carrier of local element `local` of `G_α`.
    pub fn global(&self, alpha: usize, local: Elem) -> Elem {
        self.frame.global(alpha, local)
    }

    /// `(α, local)` for a glued-carrier index.
    pub fn locate(&self, global: Elem) -> (usize, Elem) {
        self.frame.locate(global)
    }
}

pub fn build_strong_semilattice(
    spec: &StrongSemilatticeSpec,
) -> Result<CliffordSemigroup, SemilatticeError> {
    let table = glue_table(&spec.frame, |v, a, b| spec.groups[v].op(a, b));
    Ok(CliffordSemigroup::verify(spec.order(), table)?)
}

/// A strong-semilattice description of a Clifford semigroup, together with
/// `embedding[i]`: the original element at index `i` of the rebuilt carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub spec: StrongSemilatticeSpec,
    pub embedding: Vec<Elem>,
}

/// Vertices are the idempotents (ascending), `G_e = {a : a⁰ = e}` with `e`
/// listed first, and `φ_{e,f}(a) = a·f`.
pub fn decompose_to_strong_semilattice(s: &CliffordSemigroup) -> Decomposition {
    let idem = s.idempotents();
    let k = idem.len();
    let vertex_of = |e: Elem| idem.binary_search(&e).expect("not an idempotent");
    let meet: Vec<Vec<usize>> = idem
        .iter()
        .map(|&e| idem.iter().map(|&f| vertex_of(s.op(e, f))).collect())
        .collect();
    let components: Vec<Vec<Elem>> = idem
        .iter()
        .map(|&e| {
            let mut c = vec![e];
            c.extend((0..s.order()).filter(|&a| a != e && s.idem(a) == e));
            c
        })
        .collect();
    let local = |v: usize, a: Elem| components[v].iter().position(|&x| x == a).unwrap();
    let groups: Vec<CliffordSemigroup> = components
        .iter()
        .enumerate()
        .map(|(v, c)| {
            CliffordSemigroup::from_fn(c.len(), |i, j| local(v, s.op(c[i], c[j])))
                .expect("maximal subgroup of a Clifford semigroup is a group")
        })
        .collect();
    let mut links = Vec::new();
    for a in 0..k {
        for b in (0..k).filter(|&b| b != a && meet[a][b] == b) {
            let f = idem[b];
            links.push(Link {
                from: a,
                to: b,
                images: components[a]
                    .iter()
                    .map(|&x| local(b, s.op(x, f)))
                    .collect(),
            });
        }
    }
    let spec = StrongSemilatticeSpec::new(meet, groups, links)
        .expect("decomposition of a verified Clifford semigroup is a valid spec");
    let embedding = components.concat();
    Decomposition { spec, embedding }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carriers;

    #[test]
    fn single_vertex_is_the_group() {
        let spec =
            StrongSemilatticeSpec::new(vec![vec![0]], vec![carriers::cyclic(3)], vec![]).unwrap();
        assert_eq!(
            build_strong_semilattice(&spec).unwrap(),
            carriers::cyclic(3)
        );
    }

    #[test]
    fn two_chain_with_constant_link_is_cs3() {
        let built = build_strong_semilattice(&carriers::cs3_spec()).unwrap();
        assert_eq!(built, carriers::cs3());
    }

    #[test]
    fn two_chain_of_trivial_groups_is_the_semilattice() {
        let t = carriers::cyclic(1);
        let spec = StrongSemilatticeSpec::new(
            vec![vec![0, 1], vec![1, 1]],
            vec![t.clone(), t],
            vec![Link {
                from: 0,
                to: 1,
                images: vec![0],
            }],
        )
        .unwrap();
        assert_eq!(
            build_strong_semilattice(&spec).unwrap(),
            carriers::semilattice2()
        );
    }

    #[test]
    fn decompose_cs3() {
        let d = decompose_to_strong_semilattice(&carriers::cs3());
        assert_eq!(d.spec.vertex_count(), 2);
        assert_eq!(d.spec.group(0).order(), 2);
        assert_eq!(d.spec.group(1).order(), 1);
        assert_eq!(d.spec.link(0, 1), &[0, 0]);
        assert!(d.spec.geq(0, 1) && !d.spec.geq(1, 0));
        assert_eq!(d.embedding, vec![0, 1, 2]);
    }

    #[test]
    fn decompose_group_and_semilattice() {
        let d = decompose_to_strong_semilattice(&carriers::symmetric3());
        assert_eq!(d.spec.vertex_count(), 1);
        assert_eq!(d.spec.order(), 6);
        let d = decompose_to_strong_semilattice(&carriers::semilattice2());
        assert_eq!(d.spec.vertex_count(), 2);
        assert!(d.spec.groups().iter().all(|g| g.order() == 1));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let z2 = carriers::cyclic(2);
        let chain = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(
            StrongSemilatticeSpec::new(chain.clone(), vec![z2.clone(), z2.clone()], vec![]),
            Err(SemilatticeError::MissingLink { from: 0, to: 1 })
        );
        assert!(matches!(
            StrongSemilatticeSpec::new(
                chain.clone(),
                vec![z2.clone(), z2.clone()],
                vec![Link {
                    from: 0,
                    to: 1,
                    images: vec![1, 1]
                }]
            ),
            Err(SemilatticeError::LinkNotHomomorphism { .. })
        ));
        assert!(matches!(
            StrongSemilatticeSpec::new(
                chain.clone(),
                vec![z2.clone(), z2.clone()],
                vec![Link {
                    from: 1,
                    to: 0,
                    images: vec![0, 1]
                }]
            ),
            Err(SemilatticeError::LinkNotComparable { from: 1, to: 0 })
        ));
        assert!(matches!(
            StrongSemilatticeSpec::new(
                vec![vec![0, 0], vec![1, 1]],
                vec![z2.clone(), z2.clone()],
                vec![]
            ),
            Err(SemilatticeError::MeetNotCommutative(0, 1))
        ));
        assert!(matches!(
            StrongSemilatticeSpec::new(chain, vec![carriers::cs3(), z2], vec![]),
            Err(SemilatticeError::NotAGroup(0))
        ));
    }

    #[test]
    fn links_must_compose() {
        // 3-chain 0 > 1 > 2 of Z/2 with φ01 = id, φ12 = id but φ02 = 0.
        let z2 = carriers::cyclic(2);
        let meet = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]];
        let r = StrongSemilatticeSpec::new(
            meet,
            vec![z2.clone(), z2.clone(), z2],
            vec![
                Link {
                    from: 0,
                    to: 1,
                    images: vec![0, 1],
                },
                Link {
                    from: 1,
                    to: 2,
                    images: vec![0, 1],
                },
                Link {
                    from: 0,
                    to: 2,
                    images: vec![0, 0],
                },
            ],
        );
        assert!(matches!(
            r,
            Err(SemilatticeError::LinksDoNotCompose {
                alpha: 0,
                beta: 1,
                gamma: 2,
                a: 1
            })
        ));
    }
}
