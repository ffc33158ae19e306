//! Dual weak braces `(S, +, ∘)`.
//!
//! Both `(S, +)` and `(S, ∘)` are Clifford semigroups and
//!
//! * `a∘(b + c) = a∘b − a + a∘c`,
//! * `a∘a⁻ = −a + a`,
//!
//! where `−a` is the additive inverse and `a⁻` the multiplicative one.
//! Verification also derives the action tables `λ_a(b) = −a + a∘b` and
//! `ρ_b(a) = λ_a(b)⁻∘a∘b`.

mod ideal;

use alloc::vec;
use alloc::vec::Vec;

pub use ideal::{
    congruence_classes, enumerate_ideals, ideal_sum_and_product, is_ideal, quotient_brace, socle,
    CongruenceRoute, Ideal, IdealViolation, Quotient, Which, IDEAL_CAP,
};

use crate::clifford::{
    glue_table, CliffordError, CliffordSemigroup, Frame, Link, SemilatticeError,
};
use crate::rota_baxter::RotaBaxterOperator;
use crate::subset::SubsetError;
use crate::{Elem, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraceError {
    #[error("tables have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("(S, +) is not Clifford: {0}")]
    AddNotClifford(CliffordError),
    #[error("(S, ∘) is not Clifford: {0}")]
    CircNotClifford(CliffordError),
    #[error("a∘(b + c) ≠ a∘b − a + a∘c at ({0}, {1}, {2})")]
    DistributivityFailed(Elem, Elem, Elem),
    #[error("a∘a⁻ ≠ −a + a at {0}")]
    InverseLawFailed(Elem),
    #[error("E(S, +) and E(S, ∘) differ at {0}")]
    IdempotentsDiffer(Elem),
    #[error("+ and ∘ differ on idempotents {0}, {1}")]
    OperationsDifferOnIdempotents(Elem, Elem),
    #[error("a∘b ≠ a + λ_a(b) at ({0}, {1})")]
    CircPlusFailed(Elem, Elem),
    #[error("a + b ≠ a∘λ_a⁻(b) at ({0}, {1})")]
    PlusCircFailed(Elem, Elem),
    #[error("carrier of order {order} exceeds the cap {cap}")]
    CarrierTooLarge { order: usize, cap: usize },
    #[error("{0:?} subset is not an ideal: {1:?}")]
    NotAnIdeal(Which, IdealViolation),
    #[error(transparent)]
    Subset(#[from] SubsetError),
    #[error("relation is not compatible with the operations at ({0}, {1})")]
    NotACongruence(Elem, Elem),
    #[error(transparent)]
    Semilattice(#[from] SemilatticeError),
}

/// A verified dual weak brace with its `λ` and `ρ` tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualWeakBrace {
    add: CliffordSemigroup,
    circ: CliffordSemigroup,
    // lambda[a * n + b] = λ_a(b)
    lambda: Vec<Elem>,
    // rho[b * n + a] = ρ_b(a)
    rho: Vec<Elem>,
}

impl DualWeakBrace {
    /// Verifies two row-major tables on `0..order`.
    pub fn verify(
        order: usize,
        add_table: Vec<Elem>,
        circ_table: Vec<Elem>,
    ) -> Result<Self, BraceError> {
        let add =
            CliffordSemigroup::verify(order, add_table).map_err(BraceError::AddNotClifford)?;
        let circ =
            CliffordSemigroup::verify(order, circ_table).map_err(BraceError::CircNotClifford)?;
        Self::from_semigroups(add, circ)
    }

    pub fn from_rows(add: &[Vec<Elem>], circ: &[Vec<Elem>]) -> Result<Self, BraceError> {
        if add.len() != circ.len() {
            return Err(BraceError::OrderMismatch(add.len(), circ.len()));
        }
        let add = CliffordSemigroup::from_rows(add).map_err(BraceError::AddNotClifford)?;
        let circ = CliffordSemigroup::from_rows(circ).map_err(BraceError::CircNotClifford)?;
        Self::from_semigroups(add, circ)
    }

    pub fn from_semigroups(
        add: CliffordSemigroup,
        circ: CliffordSemigroup,
    ) -> Result<Self, BraceError> {
        let n = add.order();
        if circ.order() != n {
            return Err(BraceError::OrderMismatch(n, circ.order()));
        }
        for a in 0..n {
            let na = add.inv(a);
            for b in 0..n {
                let ab = circ.op(a, b);
                for c in 0..n {
                    let lhs = circ.op(a, add.op(b, c));
                    let rhs = add.op3(ab, na, circ.op(a, c));
                    if lhs != rhs {
                        return Err(BraceError::DistributivityFailed(a, b, c));
                    }
                }
            }
        }
        for a in 0..n {
            if circ.op(a, circ.inv(a)) != add.op(add.inv(a), a) {
                return Err(BraceError::InverseLawFailed(a));
            }
        }
        if let Some(a) = (0..n).find(|&a| add.is_idempotent(a) != circ.is_idempotent(a)) {
            return Err(BraceError::IdempotentsDiffer(a));
        }
        for &e in add.idempotents() {
            for &f in add.idempotents() {
                if add.op(e, f) != circ.op(e, f) {
                    return Err(BraceError::OperationsDifferOnIdempotents(e, f));
                }
            }
        }
        let mut lambda = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                lambda[a * n + b] = add.op(add.inv(a), circ.op(a, b));
            }
        }
        let mut rho = vec![0; n * n];
        for b in 0..n {
            for a in 0..n {
                let l = lambda[a * n + b];
                rho[b * n + a] = circ.op3(circ.inv(l), a, b);
            }
        }
        for a in 0..n {
            let ia = circ.inv(a);
            for b in 0..n {
                if circ.op(a, b) != add.op(a, lambda[a * n + b]) {
                    return Err(BraceError::CircPlusFailed(a, b));
                }
                if add.op(a, b) != circ.op(a, lambda[ia * n + b]) {
                    return Err(BraceError::PlusCircFailed(a, b));
                }
            }
        }
        Ok(Self {
            add,
            circ,
            lambda,
            rho,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add.op(a, b)
    }

    #[inline]
    pub fn circ(&self, a: Elem, b: Elem) -> Elem {
        self.circ.op(a, b)
    }

    /// `−a`
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.add.inv(a)
    }

    /// `a⁻`
    #[inline]
    pub fn circ_inv(&self, a: Elem) -> Elem {
        self.circ.inv(a)
    }

    #[inline]
    pub fn idem(&self, a: Elem) -> Elem {
        self.add.idem(a)
    }

    /// `λ_a(b)`
    #[inline]
    pub fn lambda(&self, a: Elem, b: Elem) -> Elem {
        self.lambda[a * self.order() + b]
    }

    /// `ρ_b(a)`
    #[inline]
    pub fn rho(&self, b: Elem, a: Elem) -> Elem {
        self.rho[b * self.order() + a]
    }

    /// `λ_a` as an image array.
    pub fn lambda_map(&self, a: Elem) -> &[Elem] {
        let n = self.order();
        &self.lambda[a * n..(a + 1) * n]
    }

    /// `ρ_b` as an image array.
    pub fn rho_map(&self, b: Elem) -> &[Elem] {
        let n = self.order();
        &self.rho[b * n..(b + 1) * n]
    }

    pub fn additive(&self) -> &CliffordSemigroup {
        &self.add
    }

    pub fn multiplicative(&self) -> &CliffordSemigroup {
        &self.circ
    }

    pub fn idempotents(&self) -> &[Elem] {
        self.add.idempotents()
    }

    /// `∘ = +`
    pub fn is_trivial(&self) -> bool {
        self.add.table() == self.circ.table()
    }

    /// `a∘b = b + a`
    pub fn is_almost_trivial(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.circ(a, b) == self.add(b, a)))
    }

    /// Both operations are groups.
    pub fn is_skew_brace(&self) -> bool {
        self.add.is_group()
    }
}

/// `a∘b = a + R(a) + b − R(a)`.
pub fn brace_from_operator(
    s: &CliffordSemigroup,
    r: &RotaBaxterOperator,
) -> Result<DualWeakBrace, BraceError> {
    let n = s.order();
    let circ = CliffordSemigroup::from_fn(n, |a, b| {
        let ra = r.apply(a);
        s.product(&[a, ra, b, s.inv(ra)])
    })
    .map_err(BraceError::CircNotClifford)?;
    DualWeakBrace::from_semigroups(s.clone(), circ)
}

/// Which bi-weak-brace identity failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiWeakViolation {
    /// `a + (b∘c) ≠ (a + b)∘a⁻∘(a + c)`
    Distributivity(Elem, Elem, Elem),
    /// `a − a ≠ a⁻∘a`
    InverseLaw(Elem),
}

/// Whether `(S, ∘, +)` is also a weak brace.
pub fn is_bi_weak_brace(b: &DualWeakBrace) -> Verdict<BiWeakViolation> {
    let n = b.order();
    for x in 0..n {
        let ix = b.circ_inv(x);
        for y in 0..n {
            let left = b.circ(b.add(x, y), ix);
            for z in 0..n {
                if b.add(x, b.circ(y, z)) != b.circ(left, b.add(x, z)) {
                    return Verdict::Fails(BiWeakViolation::Distributivity(x, y, z));
                }
            }
        }
    }
    for x in 0..n {
        if b.add(x, b.neg(x)) != b.circ(b.circ_inv(x), x) {
            return Verdict::Fails(BiWeakViolation::InverseLaw(x));
        }
    }
    Verdict::Holds
}

/// `(S, +ᵒᵖ, ∘)` with `a +ᵒᵖ b = b + a`.
pub fn opposite_brace(b: &DualWeakBrace) -> Result<DualWeakBrace, BraceError> {
    DualWeakBrace::from_semigroups(b.add.opposite(), b.circ.clone())
}

/// A validated strong semilattice of dual weak braces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceSemilatticeSpec {
    frame: Frame,
    braces: Vec<DualWeakBrace>,
}

impl BraceSemilatticeSpec {
    /// Links must be homomorphisms for both operations; identity links may
    /// be omitted.
    pub fn new(
        meet: Vec<Vec<usize>>,
        braces: Vec<DualWeakBrace>,
        links: Vec<Link>,
    ) -> Result<Self, BraceError> {
        if braces.len() != meet.len() {
            return Err(SemilatticeError::ComponentCount {
                expected: meet.len(),
                got: braces.len(),
            }
            .into());
        }
        let frame = Frame::new(
            &meet,
            braces.iter().map(DualWeakBrace::order).collect(),
            &links,
        )?;
        frame.check_links_preserve(|v, a, b| braces[v].add(a, b))?;
        frame.check_links_preserve(|v, a, b| braces[v].circ(a, b))?;
        Ok(Self { frame, braces })
    }

    pub fn brace(&self, alpha: usize) -> &DualWeakBrace {
        &self.braces[alpha]
    }
}

/// Glues both operations through the links.
pub fn strong_semilattice_of_braces(
    spec: &BraceSemilatticeSpec,
) -> Result<DualWeakBrace, BraceError> {
    let n = spec.frame.order();
    let add = glue_table(&spec.frame, |v, a, b| spec.braces[v].add(a, b));
    let circ = glue_table(&spec.frame, |v, a, b| spec.braces[v].circ(a, b));
    DualWeakBrace::verify(n, add, circ)
}
