use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::liealg::Root;
use crate::polyring::{format_rational, int, parse_rational, rat, Rational};

/// A weight `lambda`, stored as its values `lambda(h_i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightPoint(Vec<Rational>);

impl WeightPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightPoint(coords)
    }

    /// `lambda_0 = -(e_1 + ... + e_n)/2`.
    pub fn lambda0(n: usize) -> Self {
        WeightPoint(vec![rat(-1, 2); n])
    }

    pub fn zero(n: usize) -> Self {
        WeightPoint(vec![Rational::zero(); n])
    }

    /// Parses comma-separated rationals, e.g. `-1/2,-1/2`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::input("empty weight"));
        }
        Ok(WeightPoint(coords))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add_root(&self, alpha: &Root) -> WeightPoint {
        self.add_offset(alpha.coords())
    }

    pub fn add_offset(&self, k: &[i64]) -> WeightPoint {
        WeightPoint(self.0.iter().zip(k).map(|(x, &a)| x + int(a)).collect())
    }
}

impl fmt::Display for WeightPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for WeightPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(format_rational))
    }
}

/// True iff `mu(h_i)` lies in `1/2 + Z` (`i` is zero-based).
pub fn coset_test(mu: &WeightPoint, i: usize) -> bool {
    mu.0.get(i).is_some_and(|x| (x - rat(1, 2)).is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w = WeightPoint::parse("-1/2, 3").unwrap();
        assert_eq!(w.to_string(), "(-1/2,3)");
        assert!(WeightPoint::parse("1/0").is_err());
        assert!(WeightPoint::parse("x").is_err());
    }

    #[test]
    fn cosets() {
        let l0 = WeightPoint::lambda0(3);
        assert!((0..3).all(|i| coset_test(&l0, i)));
        assert!(!coset_test(&WeightPoint::zero(2), 0));
        let mu = WeightPoint::new(vec![rat(3, 2), rat(0, 1)]);
        assert!(coset_test(&mu, 0));
        assert!(!coset_test(&mu, 1));
        assert!(coset_test(&WeightPoint::new(vec![rat(-7, 2)]), 0));
    }
}
