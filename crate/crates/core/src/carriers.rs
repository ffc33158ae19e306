//! Small named carriers.
//!
//! Element numbering is fixed here and relied on by tests:
//!
//! * `Z/n`: residue `k` is element `k`.
//! * `V4`: `Z/2 × Z/2` with `(x, y) ↦ 2x + y`.
//! * `S3`: `0 = e, 1 = (12), 2 = (13), 3 = (23), 4 = (123), 5 = (132)`, with
//!   `σ·τ = σ∘τ` (apply `τ` first). `A3 = {0, 4, 5}`.
//! * `CS3`: `0 = e1, 1 = x, 2 = e0`, the group `{e1, x} ≅ Z/2` above the
//!   absorbing idempotent `e0`.
//! * `SL2`: the two-element chain semilattice, `0 = top`, `1 = bottom`.
//! * `CHAIN-Z2`: `Z/2` over `Z/2` with the identity link, `0, 1` on top.

use alloc::vec;
use alloc::vec::Vec;

use crate::clifford::{build_strong_semilattice, CliffordSemigroup, Link, StrongSemilatticeSpec};

pub fn cyclic(n: usize) -> CliffordSemigroup {
    CliffordSemigroup::from_fn(n, |a, b| (a + b) % n).expect("cyclic group")
}

pub fn klein_four() -> CliffordSemigroup {
    CliffordSemigroup::from_fn(4, |a, b| a ^ b).expect("Klein four-group")
}

const S3_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
];

pub fn symmetric3() -> CliffordSemigroup {
    CliffordSemigroup::from_fn(6, |a, b| {
        let (s, t) = (S3_PERMS[a], S3_PERMS[b]);
        let st = [s[t[0]], s[t[1]], s[t[2]]];
        S3_PERMS.iter().position(|p| *p == st).unwrap()
    })
    .expect("symmetric group")
}

pub fn cs3() -> CliffordSemigroup {
    CliffordSemigroup::from_rows(&[vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]]).expect("CS3")
}

pub fn semilattice2() -> CliffordSemigroup {
    CliffordSemigroup::from_rows(&[vec![0, 1], vec![1, 1]]).expect("two-element chain")
}

/// `Z/2 > {e0}` with the constant link; builds [`cs3`].
pub fn cs3_spec() -> StrongSemilatticeSpec {
    StrongSemilatticeSpec::new(
        vec![vec![0, 1], vec![1, 1]],
        vec![cyclic(2), cyclic(1)],
        vec![Link {
            from: 0,
            to: 1,
            images: vec![0, 0],
        }],
    )
    .expect("CS3 spec")
}

/// `Z/2 > Z/2` with the identity link.
pub fn chain_z2_spec() -> StrongSemilatticeSpec {
    StrongSemilatticeSpec::new(
        vec![vec![0, 1], vec![1, 1]],
        vec![cyclic(2), cyclic(2)],
        vec![Link {
            from: 0,
            to: 1,
            images: vec![0, 1],
        }],
    )
    .expect("Z/2 chain spec")
}

pub fn chain_z2() -> CliffordSemigroup {
    build_strong_semilattice(&chain_z2_spec()).expect("Z/2 chain")
}

/// Component-wise product, `(a, b) ↦ a * |T| + b`.
pub fn direct_product(s: &CliffordSemigroup, t: &CliffordSemigroup) -> CliffordSemigroup {
    let m = t.order();
    CliffordSemigroup::from_fn(s.order() * m, |x, y| {
        s.op(x / m, y / m) * m + t.op(x % m, y % m)
    })
    .expect("product of Clifford semigroups")
}

/// The builtin catalog in its canonical order.
pub fn all() -> Vec<(&'static str, CliffordSemigroup)> {
    vec![
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("V4", klein_four()),
        ("Z6", cyclic(6)),
        ("S3", symmetric3()),
        ("CS3", cs3()),
        ("SL2", semilattice2()),
        ("CHAIN-Z2", chain_z2()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_with_a3() {
        let s3 = symmetric3();
        assert!(!s3.is_commutative());
        assert_eq!(s3.op(4, 4), 5);
        assert_eq!(s3.op(4, 5), 0);
        assert_eq!(s3.op(1, 1), 0);
    }

    #[test]
    fn product_of_z2s_is_v4() {
        assert_eq!(direct_product(&cyclic(2), &cyclic(2)), klein_four());
    }

    #[test]
    fn chain_z2_shape() {
        let c = chain_z2();
        assert_eq!(c.idempotents(), &[0, 2]);
        assert_eq!(c.op(1, 3), 2);
        assert_eq!(c.identity(), Some(0));
    }
}
