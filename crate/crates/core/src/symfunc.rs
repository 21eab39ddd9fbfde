//! Elementary and complete symmetric functions, Weyl character ratios and the
//! mutually inverse matrix pair `E(N,m,k;t)`, `H(N,m,k;t)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{rational_pow, LaurentPoly};
use crate::matrix::PolyMatrix;
use crate::partition::Partition;

/// The four character families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharacterFamily {
    /// Schur polynomials (general linear group).
    Gl,
    /// Symplectic characters.
    Sp,
    /// Odd orthogonal characters.
    SoOdd,
    /// Even orthogonal characters.
    OEven,
}

impl CharacterFamily {
    pub const ALL: [CharacterFamily; 4] = [Self::Gl, Self::Sp, Self::SoOdd, Self::OEven];
    pub const CLASSICAL: [CharacterFamily; 3] = [Self::Sp, Self::SoOdd, Self::OEven];

    /// Short name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            Self::Gl => "schur",
            Self::Sp => "sp",
            Self::SoOdd => "so",
            Self::OEven => "o",
        }
    }
}

impl fmt::Display for CharacterFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CharacterFamily {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "schur" | "gl" => Ok(Self::Gl),
            "sp" => Ok(Self::Sp),
            "so" => Ok(Self::SoOdd),
            "o" => Ok(Self::OEven),
            _ => Err(format!("unknown family {s:?} (expected schur, sp, so or o)")),
        }
    }
}

/// A finite alphabet of monomial letters in `x1..xn`.
#[derive(Clone, Debug)]
pub struct Alphabet {
    n_vars: usize,
    letters: Vec<LaurentPoly>,
}

impl Alphabet {
    /// `x1, x1^-1, …, xn, xn^-1`.
    pub fn doubled(n: usize) -> Self {
        let letters = (1..=n)
            .flat_map(|i| [LaurentPoly::var(n, i), LaurentPoly::var_pow(n, i, -1)])
            .collect();
        Alphabet { n_vars: n, letters }
    }

    /// `x1, …, xn`.
    pub fn plain(n: usize) -> Self {
        Alphabet { n_vars: n, letters: (1..=n).map(|i| LaurentPoly::var(n, i)).collect() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `e_0, …, e_len` by the recurrence over letters.
    pub fn elementary_all(&self) -> Vec<LaurentPoly> {
        let mut e = vec![LaurentPoly::one(self.n_vars)];
        for (k, x) in self.letters.iter().enumerate() {
            e.push(LaurentPoly::zero(self.n_vars));
            for r in (1..=k + 1).rev() {
                let add = &e[r - 1] * x;
                e[r] = &e[r] + &add;
            }
        }
        e
    }

    /// `h_0, …, h_max` by the recurrence over letters.
    pub fn complete_upto(&self, max: usize) -> Vec<LaurentPoly> {
        let mut h = vec![LaurentPoly::zero(self.n_vars); max + 1];
        h[0] = LaurentPoly::one(self.n_vars);
        if self.letters.is_empty() {
            return h;
        }
        // after processing letter x: h_r <- h_r + x * h_{r-1} (ascending r)
        for x in &self.letters {
            for r in 1..=max {
                let add = &h[r - 1] * x;
                h[r] = &h[r] + &add;
            }
        }
        h
    }
}

/// Cached `e_r` and `h_r` of one alphabet, with out-of-range indices read as 0.
#[derive(Clone, Debug)]
pub struct SymTable {
    n_vars: usize,
    e: Vec<LaurentPoly>,
    h: Vec<LaurentPoly>,
}

impl SymTable {
    pub fn new(alphabet: &Alphabet, h_max: usize) -> Self {
        SymTable { n_vars: alphabet.n_vars, e: alphabet.elementary_all(), h: alphabet.complete_upto(h_max) }
    }

    pub fn doubled(n: usize, h_max: usize) -> Self {
        Self::new(&Alphabet::doubled(n), h_max)
    }

    pub fn plain(n: usize, h_max: usize) -> Self {
        Self::new(&Alphabet::plain(n), h_max)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn e(&self, r: i64) -> LaurentPoly {
        if r < 0 || r as usize >= self.e.len() {
            LaurentPoly::zero(self.n_vars)
        } else {
            self.e[r as usize].clone()
        }
    }

    /// Panics if `r` exceeds the table's `h_max`.
    pub fn h(&self, r: i64) -> LaurentPoly {
        if r < 0 {
            return LaurentPoly::zero(self.n_vars);
        }
        assert!((r as usize) < self.h.len(), "h_{r} beyond table bound {}", self.h.len() - 1);
        self.h[r as usize].clone()
    }
}

/// `e_r(x^±)` on the doubled alphabet of `n` variables.
pub fn elementary_pm(r: i64, n: usize) -> LaurentPoly {
    SymTable::doubled(n, 0).e(r)
}

/// `h_r(x^±)` on the doubled alphabet of `n` variables.
pub fn complete_pm(r: i64, n: usize) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(n);
    }
    SymTable::doubled(n, r as usize).h(r)
}

/// `e_r(x1..xn)`.
pub fn elementary_plain(r: i64, n: usize) -> LaurentPoly {
    SymTable::plain(n, 0).e(r)
}

/// `h_r(x1..xn)`.
pub fn complete_plain(r: i64, n: usize) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(n);
    }
    SymTable::plain(n, r as usize).h(r)
}

/// Exact determinant over the rationals by Gaussian elimination.
pub fn rational_det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let d = a.len();
    let mut det = BigRational::one();
    for col in 0..d {
        let Some(piv) = (col..d).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let pivot_row = a[col].clone();
        for row in a[col + 1..].iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &p;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Value of the non-skew character `family_λ` at `point` via the Weyl ratio.
///
/// For [`CharacterFamily::SoOdd`] the point holds `y_i` with `x_i = y_i^2`,
/// so the result is the character evaluated at `(y_1^2, …, y_n^2)`.
pub fn weyl_eval(family: CharacterFamily, lam: &Partition, point: &[BigRational]) -> Result<BigRational> {
    let n = point.len();
    if lam.len() > n {
        return Err(Error::Precondition(format!("l(λ) <= n fails: {} > {}", lam.len(), n)));
    }
    if point.iter().any(|p| p.is_zero()) {
        return Err(Error::ZeroCoordinate);
    }
    let alternant = |parts: &Partition| -> BigRational {
        let m: Vec<Vec<BigRational>> = point
            .iter()
            .map(|x| {
                (1..=n)
                    .map(|j| {
                        let base = (parts.part(j) + n - j) as i32;
                        match family {
                            CharacterFamily::Gl => rational_pow(x, base),
                            CharacterFamily::Sp => rational_pow(x, base + 1) - rational_pow(x, -(base + 1)),
                            CharacterFamily::SoOdd => rational_pow(x, 2 * base + 1) - rational_pow(x, -(2 * base + 1)),
                            CharacterFamily::OEven => rational_pow(x, base) + rational_pow(x, -base),
                        }
                    })
                    .collect()
            })
            .collect();
        rational_det(m)
    };
    let den = alternant(&Partition::empty());
    if den.is_zero() {
        return Err(Error::DegeneratePoint);
    }
    let mut value = alternant(lam) / den;
    if family == CharacterFamily::OEven && lam.part(n) != 0 {
        value *= BigRational::from_integer(BigInt::from(2));
    }
    Ok(value)
}

fn iverson(b: bool) -> i64 {
    i64::from(b)
}

/// `E(N,m,k;t)_{ij} = e_{i−j} + [j < m+⌈k/2⌉]·t·e_{i+j−2m−k}` over `x^±`.
pub fn build_e_matrix(big_n: usize, m: usize, k: i64, t: i64, n: usize) -> PolyMatrix {
    let sym = SymTable::doubled(n, 0);
    let bound = m as i64 + (k + 1).div_euclid(2);
    PolyMatrix::from_fn(big_n, n, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let corr = sym.e(i + j - 2 * m as i64 - k).scale(&BigInt::from(t * iverson(j < bound)));
        sym.e(i - j) + corr
    })
}

/// `H(N,m,k;t)_{ij} = (−1)^{i−j}(h_{i−j} − [i > m+⌊k/2⌋](−1)^k·t·h_{2m−i−j+k})` over `x^±`.
pub fn build_h_matrix(big_n: usize, m: usize, k: i64, t: i64, n: usize) -> PolyMatrix {
    let h_max = (big_n as i64).max(2 * m as i64 + k).max(0) as usize;
    let sym = SymTable::doubled(n, h_max);
    let bound = m as i64 + k.div_euclid(2);
    let sign_k = if k.rem_euclid(2) == 0 { 1 } else { -1 };
    PolyMatrix::from_fn(big_n, n, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let corr = sym.h(2 * m as i64 - i - j + k).scale(&BigInt::from(sign_k * t * iverson(i > bound)));
        let v = sym.h(i - j) - corr;
        if (i - j).rem_euclid(2) == 0 {
            v
        } else {
            -v
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn small_values() {
        let x = LaurentPoly::var(1, 1);
        let xi = LaurentPoly::var_pow(1, 1, -1);
        assert_eq!(elementary_pm(1, 1), &x + &xi);
        assert!(elementary_pm(2, 1).is_one());
        assert_eq!(complete_pm(1, 1), &x + &xi);
        assert_eq!(complete_pm(2, 1).to_string(), "x1^2 + 1 + x1^-2");
        assert!(complete_pm(0, 3).is_one());
        assert!(elementary_pm(-1, 2).is_zero() && elementary_pm(5, 2).is_zero());
    }

    #[test]
    fn e2_on_two_variables_by_subsets() {
        let letters = Alphabet::doubled(2).letters;
        let mut brute = LaurentPoly::zero(2);
        for a in 0..4 {
            for b in a + 1..4 {
                brute = brute + &letters[a] * &letters[b];
            }
        }
        assert_eq!(elementary_pm(2, 2), brute);
        assert_eq!(brute.to_string(), "x1*x2 + x1*x2^-1 + 2 + x1^-1*x2 + x1^-1*x2^-1");
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_eval(CharacterFamily::Gl, &part(&[1]), &[q(3, 1)]).unwrap(), q(3, 1));
        assert_eq!(weyl_eval(CharacterFamily::Sp, &part(&[1]), &[q(2, 1)]).unwrap(), q(5, 2));
        assert_eq!(weyl_eval(CharacterFamily::OEven, &part(&[1]), &[q(2, 1)]).unwrap(), q(5, 2));
        // so_(1) = x + 1 + 1/x at x = y^2 = 4
        assert_eq!(weyl_eval(CharacterFamily::SoOdd, &part(&[1]), &[q(2, 1)]).unwrap(), q(21, 4));
        assert_eq!(weyl_eval(CharacterFamily::Sp, &part(&[]), &[q(2, 1), q(2, 1)]), Err(Error::DegeneratePoint));
    }

    #[test]
    fn e_matrix_examples() {
        assert!(build_e_matrix(1, 3, 1, 5, 2).get(0, 0).is_one());
        let e = build_e_matrix(2, 0, 2, -1, 1);
        assert_eq!(e.get(1, 0), &elementary_pm(1, 1));
        assert!(build_h_matrix(1, 2, 2, -1, 1).get(0, 0).is_one());
    }
}
