use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::ShiftVector;

/// A weight written in the epsilon basis, used for roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    /// `a * e_i + b * e_j` (zero-based indices) in rank `n`.
    pub fn pair(n: usize, i: usize, a: i64, j: usize, b: i64) -> Self {
        let mut v = vec![0; n];
        v[i] += a;
        v[j] += b;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// The shift automorphism attached to this root.
    pub fn shift(&self) -> ShiftVector {
        ShiftVector::new(self.0.clone())
    }

    /// Euclidean pairing with `(e_i, e_j) = delta_ij`.
    pub fn inner(&self, other: &Root) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Reflection negating coordinate `k` (zero-based).
    pub fn reflect(&self, k: usize) -> Root {
        let mut v = self.0.clone();
        v[k] = -v[k];
        Root(v)
    }

    /// Parses expressions such as `2e1`, `-e1-e2`, `e2-e1` in rank `n`.
    pub fn parse(s: &str, n: usize) -> Result<Root> {
        let bad = || Error::input(format!("malformed root {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut v = vec![0i64; n];
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let epos = body.find('e').ok_or_else(bad)?;
            let coeff: i64 = if epos == 0 {
                1
            } else {
                body[..epos].parse().map_err(|_| bad())?
            };
            let after = &body[epos + 1..];
            let idx_len = after.find(['+', '-']).unwrap_or(after.len());
            let idx: usize = after[..idx_len].parse().map_err(|_| bad())?;
            if idx == 0 || idx > n {
                return Err(Error::input(format!("index e{idx} out of range in {s:?}")));
            }
            v[idx - 1] += sign * coeff;
            rest = &after[idx_len..];
        }
        Ok(Root(v))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_agree() {
        for (s, v) in [
            ("2e1", vec![2, 0]),
            ("-2e2", vec![0, -2]),
            ("e1+e2", vec![1, 1]),
            ("-e1-e2", vec![-1, -1]),
            ("e1-e2", vec![1, -1]),
            ("-e1+e2", vec![-1, 1]),
        ] {
            let r = Root::parse(s, 2).unwrap();
            assert_eq!(r.coords(), v.as_slice());
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(Root::parse("e2-e1", 2).unwrap(), Root::new(vec![-1, 1]));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Root::parse("e3", 2).is_err());
        assert!(Root::parse("x1", 2).is_err());
        assert!(Root::parse("", 2).is_err());
        assert!(Root::parse("e0", 2).is_err());
    }
}
