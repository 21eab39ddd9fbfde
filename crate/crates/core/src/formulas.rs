//! Determinantal formulas for skew characters and a dispatcher over methods.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{require, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::partition::{Partition, SkewShape};
use crate::symfunc::{CharacterFamily, SymTable};
use crate::tableaux::{character_by_tableaux, check_shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Tableaux,
    DualJt,
    Jt,
    Giambelli,
    LgvPaths,
}

impl Method {
    pub const ALL: [Method; 5] = [Self::Tableaux, Self::DualJt, Self::Jt, Self::Giambelli, Self::LgvPaths];

    pub fn name(self) -> &'static str {
        match self {
            Self::Tableaux => "tableaux",
            Self::DualJt => "dual-jt",
            Self::Jt => "jt",
            Self::Giambelli => "giambelli",
            Self::LgvPaths => "lgv",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?} (expected tableaux, dual-jt, jt, giambelli or lgv)"))
    }
}

fn shape_of(lam: &Partition, mu: &Partition) -> Result<SkewShape> {
    SkewShape::new(lam.clone(), mu.clone())
}

fn sym_table(family: CharacterFamily, n: usize, h_max: usize) -> SymTable {
    if family == CharacterFamily::Gl {
        SymTable::plain(n, h_max)
    } else {
        SymTable::doubled(n, h_max)
    }
}

/// `N×N` determinant in elementary symmetric functions of conjugate parts.
///
/// Schur uses the plain alphabet `x1..xn` and ignores `m`; the other
/// families use `x^±`. For the even orthogonal family the determinant is
/// halved exactly when `m = l(μ)`.
pub fn dual_jacobi_trudi(
    family: CharacterFamily,
    lam: &Partition,
    mu: &Partition,
    n: usize,
    m: usize,
    big_n: usize,
) -> Result<LaurentPoly> {
    check_shape(family, &shape_of(lam, mu)?, n, m)?;
    require(lam.first_part() <= big_n, || format!("λ1 <= N fails: {} > {big_n}", lam.first_part()))?;
    // the empty determinant is 1, which cannot be halved
    let halve = family == CharacterFamily::OEven && m == mu.len();
    require(!halve || big_n >= 1, || "N >= 1 fails: 0 < 1 (even orthogonal, m = l(μ))".to_string())?;
    let sym = sym_table(family, n, 0);
    let (m, lc, mc) = (m as i64, |i: usize| lam.conj_part(i) as i64, |j: usize| mu.conj_part(j) as i64);
    let mat = PolyMatrix::from_fn(big_n, n, |i0, j0| {
        let (i, j) = (i0 + 1, j0 + 1);
        let (ii, jj) = (i as i64, j as i64);
        let main = sym.e(lc(i) - mc(j) - ii + jj);
        let refl = lc(i) + mc(j) - ii - jj - 2 * m;
        match family {
            CharacterFamily::Gl => main,
            CharacterFamily::Sp => main - sym.e(refl),
            CharacterFamily::SoOdd => main + sym.e(refl + 1),
            CharacterFamily::OEven => main + sym.e(refl + 2),
        }
    });
    let det = mat.determinant();
    if halve {
        det.div_exact_int(&BigInt::from(2))
    } else {
        Ok(det)
    }
}

/// `N×N` determinant in complete symmetric functions of the parts.
pub fn jacobi_trudi(
    family: CharacterFamily,
    lam: &Partition,
    mu: &Partition,
    n: usize,
    m: usize,
    big_n: usize,
) -> Result<LaurentPoly> {
    check_shape(family, &shape_of(lam, mu)?, n, m)?;
    require(lam.len() <= big_n, || format!("l(λ) <= N fails: {} > {big_n}", lam.len()))?;
    let h_max = lam.first_part() + big_n + 2 * m + 2;
    let sym = sym_table(family, n, h_max);
    let (mm, lp, mp) = (m as i64, |i: usize| lam.part(i) as i64, |j: usize| mu.part(j) as i64);
    let mat = PolyMatrix::from_fn(big_n, n, |i0, j0| {
        let (i, j) = (i0 + 1, j0 + 1);
        let (ii, jj) = (i as i64, j as i64);
        let main = sym.h(lp(i) - mp(j) - ii + jj);
        let base = lp(i) - ii - jj + 2 * mm;
        match family {
            CharacterFamily::Gl => main,
            CharacterFamily::Sp if j > m + 1 => main + sym.h(base + 2),
            CharacterFamily::SoOdd if j > m => main + sym.h(base + 1),
            CharacterFamily::OEven if j > m => main - sym.h(base),
            _ => main,
        }
    });
    Ok(mat.determinant())
}

/// How the block entries of the Giambelli determinant are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockSource {
    DualJt,
    Tableaux,
}

/// `(−1)^q` times the `(p+q)×(p+q)` block determinant in hook, single-row
/// and single-column characters.
pub fn giambelli(family: CharacterFamily, lam: &Partition, mu: &Partition, n: usize, m: usize) -> Result<LaurentPoly> {
    giambelli_with(family, lam, mu, n, m, BlockSource::DualJt)
}

pub fn giambelli_with(
    family: CharacterFamily,
    lam: &Partition,
    mu: &Partition,
    n: usize,
    m: usize,
    source: BlockSource,
) -> Result<LaurentPoly> {
    check_shape(family, &shape_of(lam, mu)?, n, m)?;
    let fl = lam.to_frobenius();
    let fm = mu.to_frobenius();
    let (p, q) = (fl.rank(), fm.rank());
    let sub = |outer: Partition, inner: Partition| -> Result<LaurentPoly> {
        if !outer.contains(&inner) {
            return Ok(LaurentPoly::zero(n));
        }
        match source {
            BlockSource::DualJt => {
                let big_n = outer.first_part();
                dual_jacobi_trudi(family, &outer, &inner, n, m, big_n)
            }
            BlockSource::Tableaux => character_by_tableaux(family, &SkewShape::new(outer, inner)?, n, m),
        }
    };
    let hook = |a: usize, b: usize| {
        let mut parts = vec![a + 1];
        parts.extend(std::iter::repeat_n(1, b));
        Partition::new(parts).expect("hook")
    };
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(p + q);
    for i in 0..p {
        let mut row = Vec::with_capacity(p + q);
        for j in 0..p {
            row.push(sub(hook(fl.arms[i], fl.legs[j]), Partition::empty())?);
        }
        for j in 0..q {
            row.push(sub(Partition::single_row(fl.arms[i] + 1), Partition::single_row(fm.arms[j] + 1))?);
        }
        rows.push(row);
    }
    for i in 0..q {
        let mut row = Vec::with_capacity(p + q);
        for j in 0..p {
            row.push(sub(Partition::single_column(fl.legs[j] + 1), Partition::single_column(fm.legs[i] + 1))?);
        }
        row.extend(std::iter::repeat_n(LaurentPoly::zero(n), q));
        rows.push(row);
    }
    let det = PolyMatrix::from_rows(n, rows)?.determinant();
    Ok(if q % 2 == 1 { -det } else { det })
}

/// Smallest admissible `N` for the dual formula: `λ1`, but at least 1 for the
/// even orthogonal family.
pub fn default_dual_n(family: CharacterFamily, lam: &Partition) -> usize {
    if family == CharacterFamily::OEven {
        lam.first_part().max(1)
    } else {
        lam.first_part()
    }
}

/// Computes the skew character by the chosen method with default `N`.
pub fn character(
    family: CharacterFamily,
    lam: &Partition,
    mu: &Partition,
    n: usize,
    m: usize,
    method: Method,
) -> Result<LaurentPoly> {
    character_with_n(family, lam, mu, n, m, method, None)
}

/// As [`character`], with an optional override of the determinant size.
pub fn character_with_n(
    family: CharacterFamily,
    lam: &Partition,
    mu: &Partition,
    n: usize,
    m: usize,
    method: Method,
    big_n: Option<usize>,
) -> Result<LaurentPoly> {
    let shape = shape_of(lam, mu)?;
    match method {
        Method::Tableaux => character_by_tableaux(family, &shape, n, m),
        Method::DualJt => dual_jacobi_trudi(family, lam, mu, n, m, big_n.unwrap_or(default_dual_n(family, lam))),
        Method::Jt => jacobi_trudi(family, lam, mu, n, m, big_n.unwrap_or(lam.len())),
        Method::Giambelli => giambelli(family, lam, mu, n, m),
        Method::LgvPaths => crate::paths::lgv_character(family, &shape, n, m, big_n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;
    use CharacterFamily::*;

    #[test]
    fn one_box_examples() {
        let x = LaurentPoly::parse("x1 + x1^-1", 1).unwrap();
        let e = Partition::empty();
        assert_eq!(dual_jacobi_trudi(Sp, &part(&[1]), &e, 1, 0, 1).unwrap(), x);
        assert_eq!(dual_jacobi_trudi(OEven, &part(&[1]), &e, 1, 0, 1).unwrap(), x);
        assert_eq!(jacobi_trudi(Sp, &part(&[1]), &e, 1, 0, 1).unwrap(), x);
    }

    #[test]
    fn empty_skew_is_one() {
        let l = part(&[2, 1]);
        for f in CharacterFamily::ALL {
            for method in [Method::DualJt, Method::Jt, Method::Giambelli, Method::Tableaux] {
                assert!(character(f, &l, &l, 2, 2, method).unwrap().is_one(), "{f} {method}");
            }
        }
    }
}
