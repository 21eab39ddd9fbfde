//! Verification sweeps comparing every method against independent oracles.
//!
//! Each suite returns a [`SuiteReport`] with the number of checks and a
//! deterministic list of failures, so callers can print or assert on it.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::error::Error;
use crate::formulas::{character, character_with_n, default_dual_n, dual_jacobi_trudi, Method};
use crate::laurent::LaurentPoly;
use crate::partition::{Partition, SkewShape};
use crate::paths::{
    columnwise_endpoints, find_sites, involution_step, lgv_families, modified_weight, path_gf_by_special_count,
    paths_to_tableau, reflect_initial_segment, LatticePoint, Path, PathModel, Step,
};
use crate::symfunc::{build_e_matrix, build_h_matrix, weyl_eval, CharacterFamily, SymTable};
use crate::tableaux::{check_shape, enumerate_tableaux, tableau_weight};
use crate::PolyMatrix;

/// Outcome of one sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str, checked: usize, failures: Vec<String>) -> Self {
        SuiteReport { name: name.to_string(), checked, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} checks, {} failures", self.name, self.checked, self.failures.len())?;
        for line in self.failures.iter().take(20) {
            write!(f, "\n  {line}")?;
        }
        if self.failures.len() > 20 {
            write!(f, "\n  ... {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}

/// One character to compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub family: CharacterFamily,
    pub shape: SkewShape,
    pub n: usize,
    pub m: usize,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} n={} m={}", self.family, self.shape, self.n, self.m)
    }
}

/// All partitions inside the `rows × cols` box.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    (0..=rows * cols).flat_map(|s| Partition::all_of_size_in_box(s, rows, cols)).collect()
}

/// All partitions of size at most `k`.
pub fn partitions_up_to(k: usize) -> Vec<Partition> {
    (0..=k).flat_map(|s| Partition::all_of_size_in_box(s, s, s)).collect()
}

/// Every admissible `(family, λ/μ, n, m)` with `λ` from `outers`, `μ ⊆ λ`,
/// `l(μ) <= m` and `l(λ) <= n+m`. Schur cases take `m = l(μ)` only.
pub fn cases(
    families: &[CharacterFamily],
    outers: &[Partition],
    ns: RangeInclusive<usize>,
    ms: RangeInclusive<usize>,
) -> Vec<Case> {
    let mut out = Vec::new();
    for &family in families {
        for lam in outers {
            for mu in lam.subpartitions() {
                let shape = SkewShape::new(lam.clone(), mu.clone()).expect("subpartition");
                for n in ns.clone() {
                    for m in ms.clone() {
                        if family == CharacterFamily::Gl && m != mu.len() {
                            continue;
                        }
                        if check_shape(family, &shape, n, m).is_ok() {
                            out.push(Case { family, shape: shape.clone(), n, m });
                        }
                    }
                }
            }
        }
    }
    out
}

fn collect(name: &str, checked: usize, failures: Vec<Option<String>>) -> SuiteReport {
    SuiteReport::new(name, checked, failures.into_iter().flatten().collect())
}

/// Every method in `methods` equals the tableau oracle on every case.
pub fn agreement(name: &str, cases: &[Case], methods: &[Method]) -> SuiteReport {
    let fails: Vec<Option<String>> = cases
        .par_iter()
        .map(|c| {
            let lam = &c.shape.outer;
            let mu = &c.shape.inner;
            let oracle = match character(c.family, lam, mu, c.n, c.m, Method::Tableaux) {
                Ok(v) => v,
                Err(e) => return Some(format!("{c}: oracle failed: {e}")),
            };
            let bad: Vec<String> = methods
                .iter()
                .filter_map(|&meth| match character(c.family, lam, mu, c.n, c.m, meth) {
                    Ok(v) if v == oracle => None,
                    Ok(v) => Some(format!("{meth} gave {v}, oracle {oracle}")),
                    Err(e) => Some(format!("{meth} failed: {e}")),
                })
                .collect();
            (!bad.is_empty()).then(|| format!("{c}: {}", bad.join("; ")))
        })
        .collect();
    collect(name, cases.len() * methods.len(), fails)
}

/// The four-way sweep: tableaux, both Jacobi–Trudi forms and Giambelli for
/// the classical families on all `μ ⊆ λ ⊆ (4,4,4,4)`, `n <= 3`, `m <= 2`.
pub fn four_way() -> SuiteReport {
    let cs = cases(&CharacterFamily::CLASSICAL, &partitions_in_box(4, 4), 1..=3, 0..=2);
    agreement("four-way", &cs, &[Method::DualJt, Method::Jt, Method::Giambelli])
}

/// Brute-force LGV family sums against the oracle for `|λ| <= 6`.
pub fn lgv_route() -> SuiteReport {
    let cs = cases(&CharacterFamily::ALL, &partitions_up_to(6), 1..=2, 0..=2);
    agreement("lgv", &cs, &[Method::LgvPaths])
}

/// Closed forms for single-path generating functions from `(a,b)` to
/// `(c, 2n+a+b−c)` with labelling base `(a+b)/2`, over `|a|,|b|,|c| <= bound`.
pub fn path_closed_forms(bound: i64, ns: RangeInclusive<usize>) -> SuiteReport {
    let mut jobs = Vec::new();
    for n in ns {
        for a in -bound..=bound {
            for b in a..=bound {
                if (a + b) % 2 != 0 {
                    continue;
                }
                for c in -bound..=bound {
                    if 2 * n as i64 + a + b - c >= c {
                        jobs.push((n, a, b, c));
                    }
                }
            }
        }
    }
    let fails: Vec<Vec<String>> = jobs
        .par_iter()
        .map(|&(n, a, b, c)| {
            let sym = SymTable::doubled(n, 0);
            let e = |r: i64| sym.e(r);
            let from = LatticePoint::new(a, b);
            let to = LatticePoint::new(c, 2 * n as i64 + a + b - c);
            let base = (a + b) / 2;
            let at = |v: &[LaurentPoly], k: usize| v.get(k).cloned().unwrap_or_else(|| LaurentPoly::zero(n));
            let total = |v: &[LaurentPoly]| v.iter().fold(LaurentPoly::zero(n), |s, g| s + g);
            let mut bad = Vec::new();
            let mut check = |what: String, got: LaurentPoly, want: LaurentPoly| {
                if got != want {
                    bad.push(format!("{what} (a,b,c,n)=({a},{b},{c},{n}): got {got}, want {want}"));
                }
            };
            let sp = path_gf_by_special_count(&PathModel::columnwise(CharacterFamily::Sp, n, base), from, to);
            check("sp".into(), total(&sp), e(c - a) - e(c - b - 2));

            let so = path_gf_by_special_count(&PathModel::columnwise(CharacterFamily::SoOdd, n, base), from, to);
            check("so".into(), total(&so), e(c - a) + e(c - b - 1));
            for k in 1..=3i64 {
                check(format!("so k={k}"), at(&so, k as usize), e(c - b - k) - e(c - b - k - 2));
            }
            check("so k=0".into(), at(&so, 0), e(c - a) - e(c - b - 2));

            let o = path_gf_by_special_count(&PathModel::columnwise(CharacterFamily::OEven, n, base), from, to);
            let want = if b == a { e(c - a) } else { e(c - a) + e(c - b) };
            check("o".into(), total(&o), want);
            for k in 1..=2i64 {
                let want = if b - a >= 2 {
                    e(c - b - 2 * k + 2) - e(c - b - 2 * k - 2)
                } else {
                    e(c - a - 2 * k) - e(c - b - 2 * k - 2)
                };
                check(format!("o k={k}"), at(&o, k as usize), want);
            }
            check("o k=0".into(), at(&o, 0), e(c - a) - e(c - b - 2));
            bad
        })
        .collect();
    let checked = jobs.len() * 10;
    SuiteReport::new("path-closed-forms", checked, fails.into_iter().flatten().collect())
}

/// All unit right/up paths between two points, with no boundary.
pub fn unit_paths(from: LatticePoint, to: LatticePoint) -> Vec<Path> {
    let (dx, dy) = (to.x - from.x, to.y - from.y);
    if dx < 0 || dy < 0 {
        return Vec::new();
    }
    let len = (dx + dy) as usize;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len);
    fn rec(steps: &mut Vec<Step>, r: i64, u: i64, from: LatticePoint, out: &mut Vec<Path>) {
        if r == 0 && u == 0 {
            out.push(Path::new(from, steps.clone()));
            return;
        }
        for (s, rr, uu) in [(Step::Right, r - 1, u), (Step::Up, r, u - 1)] {
            if rr >= 0 && uu >= 0 {
                steps.push(s);
                rec(steps, rr, uu, from, out);
                steps.pop();
            }
        }
    }
    rec(&mut steps, dx, dy, from, &mut out);
    out
}

fn touches(p: &Path, d: i64) -> bool {
    p.points().iter().any(|v| v.y == v.x + d)
}

/// The modified reflection across `y = x − 2` is a weight-preserving
/// bijection between touching paths from `(0,2)` and from `(4,−2)` to every
/// `(c,f)` with `c + f <= max_sum`.
pub fn reflection(max_sum: i64) -> SuiteReport {
    const D: i64 = -2;
    const N: usize = 4;
    let (p, p_img) = (LatticePoint::new(0, 2), LatticePoint::new(4, -2));
    let mut checked = 0;
    let mut fails = Vec::new();
    for c in 0..=max_sum {
        for f in 2..=max_sum - c {
            let to = LatticePoint::new(c, f);
            let src: Vec<Path> = unit_paths(p, to).into_iter().filter(|q| touches(q, D)).collect();
            let dst: Vec<Path> = unit_paths(p_img, to).into_iter().filter(|q| touches(q, D)).collect();
            if src.is_empty() && dst.is_empty() {
                continue;
            }
            checked += 1;
            let mut images = Vec::with_capacity(src.len());
            let mut ok = true;
            for q in &src {
                match reflect_initial_segment(q, D) {
                    Ok(r) => {
                        let back = reflect_initial_segment(&r, D);
                        if back.as_ref().ok() != Some(q)
                            || r.end() != to
                            || r.start != p_img
                            || modified_weight(&r, N).ok() != modified_weight(q, N).ok()
                        {
                            ok = false;
                        }
                        images.push(r);
                    }
                    Err(_) => ok = false,
                }
            }
            let mut a = images.clone();
            let mut b = dst.clone();
            a.sort_by_key(|q| format!("{:?}", q.steps));
            b.sort_by_key(|q| format!("{:?}", q.steps));
            let weights = |v: &[Path]| {
                let mut w: Vec<Vec<i32>> = v.iter().map(|q| modified_weight(q, N).unwrap_or_default()).collect();
                w.sort();
                w
            };
            if !ok || a != b || weights(&src) != weights(&dst) {
                fails.push(format!("endpoint ({c},{f}): {} source paths, {} target paths", src.len(), dst.len()));
            }
        }
    }
    SuiteReport::new("reflection", checked, fails)
}

/// `E·H = I` for the inverse pair and the convolution identity on `x^±`.
pub fn inverse_pairs() -> SuiteReport {
    let mut jobs = Vec::new();
    for n in 1..=2 {
        for big_n in 1..=6 {
            for m in 0..=3 {
                for k in 0..=2i64 {
                    for t in -1..=2i64 {
                        jobs.push((n, big_n, m, k, t));
                    }
                }
            }
        }
    }
    let mut fails: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(n, big_n, m, k, t)| {
            let prod = build_e_matrix(big_n, m, k, t, n).mul(&build_h_matrix(big_n, m, k, t, n)).ok();
            (prod != Some(PolyMatrix::identity(big_n, n))).then(|| format!("E·H != I at N={big_n} m={m} k={k} t={t} n={n}"))
        })
        .collect();
    let mut checked = jobs.len();
    for n in 1..=3 {
        let sym = SymTable::doubled(n, 2 * n + 2);
        for r in 0..=(2 * n + 2) as i64 {
            checked += 1;
            let mut s = LaurentPoly::zero(n);
            for k in 0..=r {
                let term = sym.e(r - k) * sym.h(k);
                s = if k % 2 == 0 { s + term } else { s - term };
            }
            let want = if r == 0 { LaurentPoly::one(n) } else { LaurentPoly::zero(n) };
            if s != want {
                fails.push(format!("convolution r={r} n={n}: {s}"));
            }
        }
    }
    SuiteReport::new("inverse-pairs", checked, fails)
}

fn random_point(rng: &mut StdRng, n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|_| {
            let num: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den: i64 = rng.gen_range(1..=9);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect()
}

/// Straight characters with `m = 0` against the Weyl ratio at `points`
/// seeded random rational points; odd orthogonal characters are evaluated
/// at `x_i = y_i^2`.
pub fn weyl(max_size: usize, max_n: usize, points: usize, seed: u64) -> SuiteReport {
    let mut jobs = Vec::new();
    for family in CharacterFamily::ALL {
        for n in 1..=max_n {
            for lam in partitions_up_to(max_size) {
                if lam.len() <= n {
                    jobs.push((family, n, lam));
                }
            }
        }
    }
    let fails: Vec<Option<String>> = jobs
        .par_iter()
        .enumerate()
        .map(|(idx, (family, n, lam))| {
            let (family, n) = (*family, *n);
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(idx as u64));
            let poly = match character(family, lam, &Partition::empty(), n, 0, Method::Tableaux) {
                Ok(p) => p,
                Err(e) => return Some(format!("{family} {lam} n={n}: {e}")),
            };
            let mut used = 0;
            while used < points {
                let y = random_point(&mut rng, n);
                let expected = match weyl_eval(family, lam, &y) {
                    Ok(v) => v,
                    Err(Error::DegeneratePoint) => continue,
                    Err(e) => return Some(format!("{family} {lam} n={n}: {e}")),
                };
                used += 1;
                let x: Vec<BigRational> =
                    if family == CharacterFamily::SoOdd { y.iter().map(|v| v * v).collect() } else { y.clone() };
                match poly.eval(&x) {
                    Ok(v) if v == expected => {}
                    Ok(v) => return Some(format!("{family} {lam} n={n} at {y:?}: {v} vs Weyl {expected}")),
                    Err(e) => return Some(format!("{family} {lam} n={n}: {e}")),
                }
            }
            None
        })
        .collect();
    collect("weyl", jobs.len() * points, fails)
}

/// Values at `x = 1` equal tableau counts, every character is invariant
/// under `x_i ↦ x_i^{-1}`, and the determinant size does not matter.
pub fn sanity(cases: &[Case]) -> SuiteReport {
    let fails: Vec<Option<String>> = cases
        .par_iter()
        .map(|c| {
            let (lam, mu) = (&c.shape.outer, &c.shape.inner);
            let run = || -> crate::Result<Option<String>> {
                let count = enumerate_tableaux(c.family, &c.shape, c.n, c.m)?.count();
                let mut values = Vec::new();
                for meth in [Method::Tableaux, Method::DualJt, Method::Jt, Method::Giambelli] {
                    values.push((meth.to_string(), character(c.family, lam, mu, c.n, c.m, meth)?));
                }
                let base = default_dual_n(c.family, lam);
                for extra in 1..=2 {
                    let big_n = base + extra;
                    values.push((
                        format!("dual-jt N={big_n}"),
                        dual_jacobi_trudi(c.family, lam, mu, c.n, c.m, big_n)?,
                    ));
                    let big_n = lam.len() + extra;
                    values.push((
                        format!("jt N={big_n}"),
                        character_with_n(c.family, lam, mu, c.n, c.m, Method::Jt, Some(big_n))?,
                    ));
                }
                let oracle = values[0].1.clone();
                if oracle.coefficient_sum() != BigInt::from(count) {
                    return Ok(Some(format!("value at 1 is {}, {count} tableaux", oracle.coefficient_sum())));
                }
                for (what, v) in &values {
                    if c.family != CharacterFamily::Gl && v.bar() != *v {
                        return Ok(Some(format!("{what} is not bar-invariant")));
                    }
                    if *v != oracle {
                        return Ok(Some(format!("{what} differs from the oracle")));
                    }
                }
                Ok(None)
            };
            match run() {
                Ok(None) => None,
                Ok(Some(msg)) => Some(format!("{c}: {msg}")),
                Err(e) => Some(format!("{c}: {e}")),
            }
        })
        .collect();
    collect("sanity", cases.len(), fails)
}

/// Even orthogonal LGV expansions with `|λ| <= max_size`: dirty families pair
/// off under the involution with opposite signed weights, and the clean ones
/// are exactly the tableaux.
pub fn involution_pairing(max_size: usize, ns: RangeInclusive<usize>) -> SuiteReport {
    let cs = cases(&[CharacterFamily::OEven], &partitions_up_to(max_size), ns, 0..=2);
    let results: Vec<(usize, Option<String>)> = cs
        .par_iter()
        .map(|c| {
            let big_n = c.shape.outer.first_part();
            let ep = match columnwise_endpoints(c.family, &c.shape, c.n, c.m, big_n) {
                Ok(ep) => ep,
                Err(e) => return (0, Some(format!("{c}: {e}"))),
            };
            let fams = lgv_families(&ep.model, &ep.starts, &ep.ends);
            let index: HashMap<_, usize> = fams.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
            let mut clean = Vec::new();
            let mut net = LaurentPoly::zero(c.n);
            let mut problems = Vec::new();
            for fam in &fams {
                if find_sites(fam).is_empty() {
                    match paths_to_tableau(fam) {
                        Ok(_) if fam.sign() == 1 => clean.push(fam.weight_exps().unwrap_or_default()),
                        Ok(_) => problems.push("clean family with negative sign".to_string()),
                        Err(e) => problems.push(format!("clean family is not a tableau: {e}")),
                    }
                    continue;
                }
                net = net + fam.signed_weight().unwrap_or_else(|| LaurentPoly::zero(c.n));
                match involution_step(fam) {
                    Ok(g) => {
                        let paired = index.contains_key(&g)
                            && involution_step(&g).ok().as_ref() == Some(fam)
                            && g.signed_weight().map(|w| -w) == fam.signed_weight();
                        if !paired {
                            problems.push("involution does not pair a dirty family".to_string());
                        }
                    }
                    Err(e) => problems.push(format!("involution failed: {e}")),
                }
            }
            if !net.is_zero() {
                problems.push(format!("dirty families sum to {net}"));
            }
            let mut want: Vec<Vec<i32>> = match enumerate_tableaux(c.family, &c.shape, c.n, c.m) {
                Ok(it) => it
                    .map(|t| tableau_weight(c.family, &t, c.n).terms().next().map(|(e, _)| e.0.clone()).unwrap_or_default())
                    .collect(),
                Err(e) => return (fams.len(), Some(format!("{c}: {e}"))),
            };
            want.sort();
            clean.sort();
            if want != clean {
                problems.push(format!("{} clean families, {} tableaux", clean.len(), want.len()));
            }
            problems.dedup();
            (fams.len(), (!problems.is_empty()).then(|| format!("{c}: {}", problems.join("; "))))
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    SuiteReport::new("involution", checked, results.into_iter().filter_map(|r| r.1).collect())
}
