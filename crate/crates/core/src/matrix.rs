//! Square matrices of Laurent polynomials and their exact determinants.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    dim: usize,
    n_vars: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    /// Builds a matrix from a function of 0-based `(row, col)`.
    pub fn from_fn(dim: usize, n_vars: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let e = f(i, j);
                assert_eq!(e.n_vars(), n_vars, "entry ({i},{j}) has the wrong variable count");
                entries.push(e);
            }
        }
        PolyMatrix { dim, n_vars, entries }
    }

    pub fn from_rows(n_vars: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        let entries: Vec<LaurentPoly> = rows.into_iter().flatten().collect();
        if let Some(e) = entries.iter().find(|e| e.n_vars() != n_vars) {
            return Err(Error::VarCountMismatch(n_vars, e.n_vars()));
        }
        Ok(PolyMatrix { dim, n_vars, entries })
    }

    pub fn identity(dim: usize, n_vars: usize) -> Self {
        Self::from_fn(dim, n_vars, |i, j| {
            if i == j {
                LaurentPoly::one(n_vars)
            } else {
                LaurentPoly::zero(n_vars)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.dim {
            self.entries.swap(a * self.dim + j, b * self.dim + j);
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.dim != other.dim {
            return Err(Error::Precondition(format!("dimension mismatch: {} vs {}", self.dim, other.dim)));
        }
        if self.n_vars != other.n_vars {
            return Err(Error::VarCountMismatch(self.n_vars, other.n_vars));
        }
        Ok(Self::from_fn(self.dim, self.n_vars, |i, j| {
            let mut acc = LaurentPoly::zero(self.n_vars);
            for k in 0..self.dim {
                acc.add_product(self.get(i, k), other.get(k, j));
            }
            acc
        }))
    }

    /// Exact determinant by Laplace expansion along rows, memoized over the
    /// set of columns still available (`2^dim` minors).
    pub fn determinant(&self) -> LaurentPoly {
        let d = self.dim;
        assert!(d < 26, "determinant dimension {d} too large for subset memoization");
        let full = (1usize << d) - 1;
        // minor[S] = det of rows d-|S|.. restricted to the columns in S
        let mut minor: Vec<LaurentPoly> = vec![LaurentPoly::zero(self.n_vars); full + 1];
        minor[0] = LaurentPoly::one(self.n_vars);
        for mask in 1..=full {
            let row = d - mask.count_ones() as usize;
            let mut acc = LaurentPoly::zero(self.n_vars);
            let mut sign_neg = false;
            for j in 0..d {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = self.get(row, j);
                let sub = &minor[mask & !(1 << j)];
                if !a.is_zero() && !sub.is_zero() {
                    if sign_neg {
                        acc.add_product(&-a, sub);
                    } else {
                        acc.add_product(a, sub);
                    }
                }
                sign_neg = !sign_neg;
            }
            minor[mask] = acc;
        }
        minor.swap_remove(full)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn leibniz(m: &PolyMatrix) -> LaurentPoly {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut total = LaurentPoly::zero(m.n_vars());
        for p in perms(m.dim()) {
            let inversions = (0..p.len())
                .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut term = LaurentPoly::one(m.n_vars());
            for (i, &j) in p.iter().enumerate() {
                term = &term * m.get(i, j);
            }
            total = if inversions % 2 == 0 { total + term } else { total - term };
        }
        total
    }

    fn random_poly(rng: &mut StdRng, n_vars: usize) -> LaurentPoly {
        let k = rng.gen_range(0..4);
        LaurentPoly::from_terms(
            n_vars,
            (0..k).map(|_| {
                let e = (0..n_vars).map(|_| rng.gen_range(-2..=2)).collect();
                (e, BigInt::from(rng.gen_range(-3..=3)))
            }),
        )
    }

    #[test]
    fn small_examples() {
        assert!(PolyMatrix::identity(0, 1).determinant().is_one());
        assert!(PolyMatrix::identity(5, 2).determinant().is_one());
        let x = LaurentPoly::var(1, 1);
        let xi = LaurentPoly::var_pow(1, 1, -1);
        let one = LaurentPoly::one(1);
        let m = PolyMatrix::from_rows(1, vec![vec![x, one.clone()], vec![one, xi]]).unwrap();
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn matches_leibniz_and_alternates() {
        let mut rng = StdRng::seed_from_u64(7);
        for dim in 0..=4 {
            for _ in 0..10 {
                let m = PolyMatrix::from_fn(dim, 2, |_, _| random_poly(&mut rng, 2));
                let det = m.determinant();
                assert_eq!(det, leibniz(&m));
                if dim >= 2 {
                    let mut s = m.clone();
                    s.swap_rows(0, dim - 1);
                    assert_eq!(s.determinant(), -det);
                }
            }
        }
    }
}
