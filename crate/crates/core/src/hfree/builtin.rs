use crate::error::{Error, Result};
use crate::liealg::Root;
use crate::polyring::{rat, MultiPoly};

use super::HFreeModule;

/// The rank-one module on `C[h1..hn]` with
///
/// | root          | action polynomial            |
/// |---------------|------------------------------|
/// | `2e_i`        | `(h_i - 1/2)(h_i - 3/2)`     |
/// | `-2e_i`       | `1`                          |
/// | `e_i + e_j`   | `(h_i - 1/2)(h_j - 1/2)`     |
/// | `-e_i - e_j`  | `1`                          |
/// | `e_i - e_j`   | `h_i - 1/2`                  |
///
/// `n = 1` gives the `sp(2) = sl(2)` case, used for cross-checks.
pub fn make_m0(n: usize) -> Result<HFreeModule> {
    if n == 0 {
        return Err(Error::input("make_m0 needs n >= 1"));
    }
    let half = |i: usize| MultiPoly::var_minus(n, i, rat(1, 2));
    let one = MultiPoly::one(n);
    let mut table = Vec::new();
    for i in 0..n {
        table.push((
            Root::pair(n, i, 1, i, 1),
            &half(i) * &MultiPoly::var_minus(n, i, rat(3, 2)),
        ));
        table.push((Root::pair(n, i, -1, i, -1), one.clone()));
        for j in 0..n {
            if j == i {
                continue;
            }
            table.push((Root::pair(n, i, 1, j, -1), half(i)));
            if i < j {
                table.push((Root::pair(n, i, 1, j, 1), &half(i) * &half(j)));
                table.push((Root::pair(n, i, -1, j, -1), one.clone()));
            }
        }
    }
    HFreeModule::rank_one(n, table)
}

/// The `sl(2)` module on `C[h]` with `e . p = h p(h - 1)` and
/// `f . p = -h p(h + 1)`, over [`SpBasis::sl2_fixture`](crate::liealg::SpBasis::sl2_fixture).
pub fn make_sl2_example() -> HFreeModule {
    let h = MultiPoly::var(1, 0);
    HFreeModule::rank_one(
        1,
        [(Root::new(vec![1]), h.clone()), (Root::new(vec![-1]), -&h)],
    )
    .expect("sl2 fixture table is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m0_entries_n2() {
        let m = make_m0(2).unwrap();
        let h1 = MultiPoly::var(2, 0);
        let expected =
            &MultiPoly::var_minus(2, 0, rat(1, 2)) * &MultiPoly::var_minus(2, 0, rat(3, 2));
        assert_eq!(m.scalar_action(&Root::new(vec![2, 0])), Some(&expected));
        assert_eq!(
            m.scalar_action(&Root::new(vec![-1, -1])),
            Some(&MultiPoly::one(2))
        );
        assert_eq!(
            m.scalar_action(&Root::new(vec![1, -1])),
            Some(&(&h1 - &MultiPoly::constant(2, rat(1, 2))))
        );
        assert_eq!(
            m.scalar_action(&Root::new(vec![-1, 1])),
            Some(&MultiPoly::var_minus(2, 1, rat(1, 2)))
        );
        assert_eq!(m.actions().count(), 8);
    }

    #[test]
    fn sl2_fixture_entries() {
        let m = make_sl2_example();
        let h = MultiPoly::var(1, 0);
        assert_eq!(m.scalar_action(&Root::new(vec![1])), Some(&h));
        assert_eq!(m.scalar_action(&Root::new(vec![-1])), Some(&-&h));
    }

    #[test]
    fn json_roundtrip() {
        let m = make_m0(2).unwrap();
        let s = m.to_json_string();
        assert_eq!(HFreeModule::from_json_str(&s).unwrap(), m);
        assert!(HFreeModule::from_json_str("{\"n\": 2}").is_err());
    }
}
