use crate::error::{Error, Result};
use crate::liealg::{SpBasis, UElement};
use crate::polyring::{OpSum, PolyShiftOp};

use super::HFreeModule;

/// Operator of an enveloping-algebra element: each word is composed left to
/// right (the leftmost letter acts last) and the words are summed by shift.
pub fn word_action(m: &HFreeModule, basis: &SpBasis, u: &UElement) -> Result<OpSum> {
    let ops = m.element_ops(basis)?;
    let mut total = OpSum::zero(m.d(), m.n());
    for (c, word) in &u.terms {
        let mut acc = PolyShiftOp::identity(m.d(), m.n());
        for &idx in word {
            let op = ops.get(idx).ok_or_else(|| {
                Error::input(format!("basis index {idx} out of range 0..{}", ops.len()))
            })?;
            acc = acc.compose(op)?;
        }
        total.add_op(&acc, c);
    }
    Ok(total)
}

/// Like [`word_action`] but insists on a single shift.
pub fn word_action_single(m: &HFreeModule, basis: &SpBasis, u: &UElement) -> Result<PolyShiftOp> {
    word_action(m, basis, u)?
        .as_single()
        .ok_or_else(|| Error::input("element has summands of different shifts"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfree::make_m0;
    use crate::liealg::{build_sp2n, Root};
    use crate::polyring::{rat, MultiPoly, ShiftVector};

    #[test]
    fn empty_word_is_identity() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        let op = word_action_single(&m, &b, &UElement::one()).unwrap();
        assert_eq!(op, PolyShiftOp::identity(1, 2));
    }

    #[test]
    fn long_root_pair() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        let up = b.index_of_root(&Root::new(vec![2, 0])).unwrap();
        let down = b.index_of_root(&Root::new(vec![-2, 0])).unwrap();
        let op = word_action_single(&m, &b, &UElement::word(vec![up, down])).unwrap();
        let expected =
            &MultiPoly::var_minus(2, 0, rat(1, 2)) * &MultiPoly::var_minus(2, 0, rat(3, 2));
        assert_eq!(op.shift, ShiftVector::zero(2));
        assert_eq!(op.matrix.get(0, 0), &expected);
    }

    #[test]
    fn mixed_shifts_stay_formal() {
        let b = build_sp2n(2).unwrap();
        let m = make_m0(2).unwrap();
        let mut u = UElement::word(vec![0]);
        u.push(rat(1, 1), vec![b.cartan_index(0)]);
        let sum = word_action(&m, &b, &u).unwrap();
        assert_eq!(sum.shifts().count(), 2);
        assert!(word_action_single(&m, &b, &u).is_err());
    }
}
