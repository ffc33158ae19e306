use alloc::vec;
use alloc::vec::Vec;

use crate::Elem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubsetError {
    #[error("element {element} is outside the carrier of order {order}")]
    OutOfRange { element: Elem, order: usize },
}

/// Membership mask for a subset of `0..order`.
pub(crate) fn mask(order: usize, members: &[Elem]) -> Result<Vec<bool>, SubsetError> {
    let mut m = vec![false; order];
    for &x in members {
        if x >= order {
            return Err(SubsetError::OutOfRange { element: x, order });
        }
        m[x] = true;
    }
    Ok(m)
}

pub(crate) fn members(mask: &[bool]) -> Vec<Elem> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}
