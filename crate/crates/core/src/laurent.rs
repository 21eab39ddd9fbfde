//! Exact multivariate Laurent polynomials with big-integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of `x1^e1 ⋯ xn^en`; entries may be negative.
///
/// Ordering is lexicographic on the exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Sparse Laurent polynomial in `x1..xn`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(n_vars: usize) -> Self {
        LaurentPoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, 1)
    }

    pub fn constant(n_vars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(n_vars, vec![0; n_vars], c)
    }

    /// `c · x^exps`.
    pub fn monomial(n_vars: usize, exps: Vec<i32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), n_vars, "exponent vector length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        LaurentPoly { n_vars, terms }
    }

    /// `x_i^e` with `i` 1-based.
    pub fn var_pow(n_vars: usize, i: usize, e: i32) -> Self {
        assert!(i >= 1 && i <= n_vars, "variable x{i} out of range");
        let mut exps = vec![0; n_vars];
        exps[i - 1] = e;
        Self::monomial(n_vars, exps, 1)
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        Self::var_pow(n_vars, i, 1)
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(n_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        let mut p = Self::zero(n_vars);
        for (e, c) in terms {
            assert_eq!(e.len(), n_vars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_constant() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of the exponent vector.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.n_vars == other.n_vars {
            Ok(())
        } else {
            Err(Error::VarCountMismatch(self.n_vars, other.n_vars))
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.n_vars));
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { n_vars: self.n_vars, terms })
    }

    /// In-place `self += a * b`.
    pub fn add_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        assert!(a.n_vars == self.n_vars && b.n_vars == self.n_vars, "variable count mismatch");
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    /// In-place `self += other * x^shift`.
    pub fn add_shifted(&mut self, other: &LaurentPoly, shift: &[i32]) {
        assert!(other.n_vars == self.n_vars && shift.len() == self.n_vars, "variable count mismatch");
        for (m, c) in &other.terms {
            let e = m.0.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(Monomial(e), c.clone());
        }
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero(self.n_vars);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        LaurentPoly { n_vars: self.n_vars, terms }
    }

    /// Divides every coefficient by `d`, failing unless all divisions are exact.
    pub fn div_exact_int(&self, d: &BigInt) -> Result<LaurentPoly> {
        assert!(!d.is_zero(), "division by zero");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NonExactDivision { coeff: c.to_string(), divisor: d.to_string() });
            }
            terms.insert(m.clone(), q);
        }
        Ok(LaurentPoly { n_vars: self.n_vars, terms })
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.n_vars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes `x_i -> x_i^{-1}` for every variable.
    pub fn bar(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(m.0.iter().map(|e| -e).collect()), c.clone()))
            .collect();
        LaurentPoly { n_vars: self.n_vars, terms }
    }

    /// Substitutes `x_i -> x_i^k` for every variable.
    pub fn dilate(&self, k: i32) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(m.0.iter().map(|e| e * k).collect()), c.clone()))
            .collect();
        LaurentPoly { n_vars: self.n_vars, terms }
    }

    /// Sum of coefficients, i.e. the value at `(1, …, 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact value at a point with nonzero rational coordinates.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.n_vars {
            return Err(Error::PointLength { expected: self.n_vars, got: point.len() });
        }
        if point.iter().any(|p| p.is_zero()) {
            return Err(Error::ZeroCoordinate);
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (x, &e) in point.iter().zip(&m.0) {
                v *= rational_pow(x, e);
            }
            total += v;
        }
        Ok(total)
    }

    /// Parses the canonical text form, e.g. `-2*x1^-1*x2 + 3`.
    pub fn parse(s: &str, n_vars: usize) -> Result<LaurentPoly> {
        let bad = |msg: String| Error::PolyParse(msg);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input".into()));
        }
        // split into signed terms; a sign right after '^' belongs to an exponent
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad(format!("dangling sign in {s:?}")));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad(format!("trailing sign in {s:?}")));
        }
        terms.push((neg, cur));

        let mut out = LaurentPoly::zero(n_vars);
        for (neg, body) in terms {
            let mut coeff = BigInt::one();
            let mut exps = vec![0i32; n_vars];
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, exp) = match rest.split_once('^') {
                        Some((i, e)) => (i, e.parse::<i32>().map_err(|_| bad(format!("bad exponent in {factor:?}")))?),
                        None => (rest, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad(format!("bad variable {factor:?}")))?;
                    if idx == 0 || idx > n_vars {
                        return Err(bad(format!("variable x{idx} out of range for {n_vars} variables")));
                    }
                    exps[idx - 1] += exp;
                } else {
                    let c: BigInt = factor.parse().map_err(|_| bad(format!("bad factor {factor:?}")))?;
                    coeff *= c;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i32) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

/// Canonical text form: terms in descending lexicographic order of exponents.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_constant() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$try(rhs).expect("Laurent polynomial operands must share n_vars")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        LaurentPoly { n_vars: self.n_vars, terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }
    fn xi(i: usize, n: usize) -> LaurentPoly {
        LaurentPoly::var_pow(n, i, -1)
    }

    #[test]
    fn difference_of_squares() {
        let a = x(1, 1) + xi(1, 1);
        let b = x(1, 1) - xi(1, 1);
        assert_eq!(&a * &b, LaurentPoly::var_pow(1, 1, 2) - LaurentPoly::var_pow(1, 1, -2));
        assert_eq!(&a * &LaurentPoly::one(1), a);
        assert_eq!(a.pow(2).to_string(), "x1^2 + 2 + x1^-2");
    }

    #[test]
    fn exact_division() {
        let p = (x(1, 1) + xi(1, 1)).scale(&BigInt::from(2));
        assert_eq!(p.div_exact_int(&BigInt::from(2)).unwrap(), x(1, 1) + xi(1, 1));
        assert_eq!(p.div_exact_int(&BigInt::from(1)).unwrap(), p);
        let q = x(1, 1) + LaurentPoly::one(1);
        assert!(matches!(q.div_exact_int(&BigInt::from(2)), Err(Error::NonExactDivision { .. })));
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(x(1, 1).try_mul(&x(1, 2)), Err(Error::VarCountMismatch(1, 2)));
    }

    #[test]
    fn evaluation() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let p = x(1, 1) + xi(1, 1);
        assert_eq!(p.eval(&[r(2, 1)]).unwrap(), r(5, 2));
        assert_eq!(LaurentPoly::one(2).eval(&[r(7, 3), r(-1, 5)]).unwrap(), r(1, 1));
        let q = &x(1, 2) * &x(2, 2) - &x(2, 2) * &xi(1, 2);
        assert_eq!(q.eval(&[r(2, 1), r(3, 1)]).unwrap(), r(9, 2));
        assert_eq!(p.eval(&[r(0, 1)]), Err(Error::ZeroCoordinate));
    }

    #[test]
    fn bar_examples() {
        let p = LaurentPoly::monomial(2, vec![2, -1], 1);
        assert_eq!(p.bar(), LaurentPoly::monomial(2, vec![-2, 1], 1));
        assert_eq!(LaurentPoly::constant(3, 5).bar(), LaurentPoly::constant(3, 5));
    }

    #[test]
    fn text_form() {
        let p = LaurentPoly::from_terms(2, [(vec![-1, 1], BigInt::from(-2)), (vec![0, 0], BigInt::from(3))]);
        assert_eq!(p.to_string(), "3 - 2*x1^-1*x2");
        assert_eq!(LaurentPoly::parse("-2*x1^-1*x2 + 3", 2).unwrap(), p);
        assert_eq!(LaurentPoly::zero(1).to_string(), "0");
        assert_eq!((x(1, 1) + xi(1, 1)).to_string(), "x1 + x1^-1");
        assert_eq!(LaurentPoly::parse("x1 + x1^-1", 1).unwrap(), x(1, 1) + xi(1, 1));
        assert!(LaurentPoly::parse("x3", 2).is_err());
        assert!(LaurentPoly::parse("x1 +", 1).is_err());
    }
}
