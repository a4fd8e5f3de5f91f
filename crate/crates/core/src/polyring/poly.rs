use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar used everywhere in the crate.
pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"` into a normalized rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::input(format!("malformed rational literal {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::input(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `"p/q"`, or `"p"` when it is an integer.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn new(e: Vec<u32>) -> Self {
        Exponents(e)
    }

    pub fn zero(n: usize) -> Self {
        Exponents(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `h1, ..., hn` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Exponents::zero(nvars), c);
        p
    }

    /// The variable `h_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Exponents(e), Rational::one());
        p
    }

    /// The linear factor `h_{i+1} - c`.
    pub fn var_minus(nvars: usize, i: usize, c: Rational) -> Self {
        Self::var(nvars, i) - Self::constant(nvars, c)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::dims("monomial exponents", nvars, e.len()));
            }
            p.add_term(Exponents(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: descending graded-lex.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms
            .get(&Exponents(e.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Exponents::degree)
    }

    /// Degree in the variable with zero-based index `i`, `None` for zero.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.0[i]).max()
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree().is_none_or(|d| d == 0)
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.total_degree() {
            None => Some(Rational::zero()),
            Some(0) => self.terms.values().next().cloned(),
            Some(_) => None,
        }
    }

    /// Leading coefficient in graded-lex order.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::dims("evaluation point", self.nvars, point.len()));
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `h_k -> h_k - t_k` for a rational offset `t`.
    pub fn translate(&self, t: &[Rational]) -> Result<MultiPoly> {
        if t.len() != self.nvars {
            return Err(Error::dims("translation", self.nvars, t.len()));
        }
        if self.is_constant() || t.iter().all(Zero::is_zero) {
            return Ok(self.clone());
        }
        let images: Vec<MultiPoly> = t
            .iter()
            .enumerate()
            .map(|(k, c)| MultiPoly::var_minus(self.nvars, k, c.clone()))
            .collect();
        self.substitute(&images)
    }

    /// Substitutes `images[k]` for `h_{k+1}`; all images must share a variable count.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::dims("substitution", self.nvars, images.len()));
        }
        let target = images.first().map_or(0, MultiPoly::nvars);
        if images.iter().any(|p| p.nvars != target) {
            return Err(Error::input(
                "substitution images have mixed variable counts",
            ));
        }
        // powers[k][j] = images[k]^j, grown on demand
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|_| vec![MultiPoly::one(target)])
            .collect();
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (k, &deg) in e.0.iter().enumerate() {
                while powers[k].len() <= deg as usize {
                    let next = powers[k].last().unwrap() * &images[k];
                    powers[k].push(next);
                }
                if deg > 0 {
                    t = &t * &powers[k][deg as usize];
                }
            }
            out += &t;
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("h{}", i + 1)
                        } else {
                            format!("h{}^{}", i + 1, k)
                        }
                    })
                    .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exponents: Vec<u32>,
    coeff: String,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(e, c)| TermRepr {
                exponents: e.0.clone(),
                coeff: format_rational(c),
            })
            .collect();
        terms.serialize(s)
    }
}

/// Deserialized polynomials carry their variable count implicitly; a bare
/// `[]` (zero) has no exponents to infer it from, so callers that know `n`
/// should pass the value through [`MultiPoly::with_nvars`].
impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms: Vec<TermRepr> = Vec::deserialize(d)?;
        let nvars = terms.first().map_or(0, |t| t.exponents.len());
        let parsed = terms
            .into_iter()
            .map(|t| parse_rational(&t.coeff).map(|c| (t.exponents, c)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        MultiPoly::from_terms(nvars, parsed).map_err(D::Error::custom)
    }
}

impl MultiPoly {
    /// Re-tags a deserialized polynomial with the expected variable count.
    pub fn with_nvars(self, nvars: usize) -> Result<MultiPoly> {
        if self.is_zero() {
            return Ok(MultiPoly::zero(nvars));
        }
        if self.nvars != nvars {
            return Err(Error::dims("polynomial variables", nvars, self.nvars));
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn grlex_order_is_canonical() {
        let n = 2;
        let p = &(&h(n, 0) * &h(n, 0)) + &(&h(n, 1) + &MultiPoly::constant(n, rat(3, 4)));
        let p = &p + &(&h(n, 0) * &h(n, 1));
        assert_eq!(p.to_string(), "h1^2 + h1*h2 + h2 + 3/4");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &h(1, 0) - &h(1, 0);
        assert!(p.is_zero());
        assert_eq!(p.total_degree(), None);
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn eval_known_values() {
        let n = 2;
        let p = &MultiPoly::var_minus(n, 0, rat(1, 2)) * &MultiPoly::var_minus(n, 0, rat(3, 2));
        assert_eq!(p.eval(&[rat(1, 2), int(7)]).unwrap(), int(0));
        // (2 - 1/2)(2 - 3/2) = 3/4
        assert_eq!(p.eval(&[int(2), int(0)]).unwrap(), rat(3, 4));
        assert_eq!(
            MultiPoly::one(n).eval(&[int(5), rat(-1, 3)]).unwrap(),
            int(1)
        );
        assert!(p.eval(&[int(1)]).is_err());
    }

    #[test]
    fn degree_is_additive() {
        let p = &h(3, 0) + &MultiPoly::constant(3, int(1));
        let q = &(&h(3, 1) * &h(3, 2)) - &h(3, 0);
        assert_eq!((&p * &q).total_degree(), Some(3));
        assert_eq!((&p * &q).degree_in(1), Some(1));
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 4 ").unwrap(), int(4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(2)), "2");
    }

    #[test]
    fn json_shape() {
        let p = &MultiPoly::var_minus(2, 1, rat(1, 2)) * &MultiPoly::constant(2, int(2));
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"[{"exponents":[0,1],"coeff":"2"},{"exponents":[0,0],"coeff":"-1"}]"#
        );
        let back: MultiPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        let zero: MultiPoly = serde_json::from_str("[]").unwrap();
        assert_eq!(zero.with_nvars(3).unwrap(), MultiPoly::zero(3));
    }

    #[test]
    fn substitute_composes() {
        // h1 -> h1 + h2, h2 -> 2 applied to h1*h2 gives 2h1 + 2h2
        let n = 2;
        let p = &h(n, 0) * &h(n, 1);
        let q = p
            .substitute(&[&h(n, 0) + &h(n, 1), MultiPoly::constant(n, int(2))])
            .unwrap();
        assert_eq!(q, (&h(n, 0) + &h(n, 1)).scale(&int(2)));
    }
}
