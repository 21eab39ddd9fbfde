//! Tableaux to path families and back.

use std::collections::HashMap;

use super::{
    columnwise_endpoints, hookwise_endpoints, is_strongly_non_intersecting, Layout, LatticePoint, Path, PathFamily,
    PathModel, Step,
};
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::symfunc::CharacterFamily;
use crate::tableaux::{is_valid_tableau, Decoration, Entry, Tableau};

/// 0-based slot of an entry in the sequence `1̄, 1, 2̄, 2, …` (Schur: `1, 2, …`).
/// Odd orthogonal hats take the barred slot, even orthogonal hats the plain
/// one and circles the barred one.
fn slot(family: CharacterFamily, e: Entry) -> i64 {
    let v = e.value as i64;
    if family == CharacterFamily::Gl {
        return v - 1;
    }
    match e.decoration {
        Decoration::Circ | Decoration::Bar => 2 * v - 2,
        Decoration::Hat if family == CharacterFamily::SoOdd => 2 * v - 2,
        Decoration::Hat | Decoration::Plain => 2 * v - 1,
    }
}

/// Merges the marked horizontal steps into diagonal and o-horizontal steps:
/// an odd orthogonal hat with the up step after it, an even orthogonal circle
/// with the hat after it.
fn merge_specials(family: CharacterFamily, raw: Vec<(Step, Option<Decoration>)>) -> Vec<Step> {
    let mut out = Vec::with_capacity(raw.len());
    let mut i = 0;
    while i < raw.len() {
        let next = raw.get(i + 1).copied();
        match (family, raw[i].1, next) {
            (CharacterFamily::SoOdd, Some(Decoration::Hat), Some((Step::Up, _))) => {
                out.push(Step::Diag);
                i += 2;
            }
            (CharacterFamily::OEven, Some(Decoration::Circ), Some((Step::Right, Some(Decoration::Hat)))) => {
                out.push(Step::OHoriz);
                i += 2;
            }
            _ => {
                out.push(raw[i].0);
                i += 1;
            }
        }
    }
    out
}

/// Column `c` of the tableau becomes the path from `S_c` to `E_c`; the
/// `j`-th step is horizontal iff the `j`-th symbol occurs in the column.
pub fn tableau_to_paths(family: CharacterFamily, t: &Tableau, n: usize, m: usize, big_n: usize) -> Result<PathFamily> {
    let ep = columnwise_endpoints(family, &t.shape, n, m, big_n)?;
    let len = if family == CharacterFamily::Gl { n } else { 2 * n };
    let mut paths = Vec::with_capacity(big_n);
    for c in 1..=big_n {
        let mut by_slot: HashMap<i64, Entry> = HashMap::new();
        for e in t.column(c) {
            by_slot.insert(slot(family, e), e);
        }
        let raw = (0..len as i64)
            .map(|j| match by_slot.get(&j) {
                Some(e) => (Step::Right, Some(e.decoration)),
                None => (Step::Up, None),
            })
            .collect();
        paths.push(Path::new(ep.starts[c - 1], merge_specials(family, raw)));
    }
    Ok(PathFamily { model: ep.model, paths, ends: ep.ends, sigma: (0..big_n).collect() })
}

fn hook_path(
    model: &PathModel,
    start: LatticePoint,
    arm: &[Entry],
    leg: &[Entry],
    end: LatticePoint,
) -> Result<Path> {
    let bad = |what: &str| Error::InvalidFamily(format!("hook from {start} to {end}: {what}"));
    let m2 = 2 * model.m;
    let mut raw = Vec::new();
    let mut p = start;
    let mut push = |p: &mut LatticePoint, s: Step, d: Option<Decoration>| {
        raw.push((s, d));
        *p = p.step(s);
    };
    for &e in arm {
        let y = m2 + slot(model.family, e);
        if p.y < y {
            return Err(bad("arm entries increase"));
        }
        while p.y > y {
            push(&mut p, Step::Down, None);
        }
        push(&mut p, Step::Right, Some(e.decoration));
    }
    for &e in leg {
        let t = slot(model.family, e);
        if p.level() - m2 > t {
            return Err(bad("leg entries decrease"));
        }
        while p.level() - m2 < t {
            push(&mut p, Step::Up, None);
        }
        push(&mut p, Step::Right, Some(e.decoration));
    }
    if p.x != end.x {
        return Err(bad("wrong number of cells"));
    }
    while p.y > end.y {
        push(&mut p, Step::Down, None);
    }
    while p.y < end.y {
        push(&mut p, Step::Up, None);
    }
    Ok(Path::new(start, merge_specials(model.family, raw)))
}

/// Principal-hook reading: the arm of hook `i` is read right to left in
/// `x ≤ 0` (with the diagonal cell, if present), its leg top to bottom in
/// `x ≥ 1`. A hook broken by `μ` gives a path `A_i → C_i` and `D_i → B_i`.
pub fn tableau_to_paths_hookwise(family: CharacterFamily, t: &Tableau, n: usize, m: usize) -> Result<PathFamily> {
    let ep = hookwise_endpoints(family, &t.shape, n, m)?;
    let (lam, mu) = (&t.shape.outer, &t.shape.inner);
    let (p, q) = (lam.durfee(), mu.durfee());
    let mut paths = vec![None; p + q];
    let mut sigma = vec![0; p + q];
    for i in 1..=p {
        let broken = i <= q;
        let arm_lo = if broken { mu.part(i) + 1 } else { i };
        let arm: Vec<Entry> = (arm_lo..=lam.part(i)).rev().map(|c| t.get(i, c).unwrap()).collect();
        let leg_lo = if broken { mu.conj_part(i) + 1 } else { i + 1 };
        let leg: Vec<Entry> = (leg_lo..=lam.conj_part(i)).map(|r| t.get(r, i).unwrap()).collect();
        if broken {
            paths[i - 1] = Some(hook_path(&ep.model, ep.starts[i - 1], &arm, &[], ep.ends[p + i - 1])?);
            sigma[i - 1] = p + i - 1;
            paths[p + i - 1] = Some(hook_path(&ep.model, ep.starts[p + i - 1], &[], &leg, ep.ends[i - 1])?);
            sigma[p + i - 1] = i - 1;
        } else {
            paths[i - 1] = Some(hook_path(&ep.model, ep.starts[i - 1], &arm, &leg, ep.ends[i - 1])?);
            sigma[i - 1] = i - 1;
        }
    }
    Ok(PathFamily { model: ep.model, paths: paths.into_iter().map(Option::unwrap).collect(), ends: ep.ends, sigma })
}

/// Reads a columnwise family back as a tableau.
pub fn paths_to_tableau(pf: &PathFamily) -> Result<Tableau> {
    let bad = |what: String| Err(Error::InvalidFamily(what));
    let model = &pf.model;
    if model.layout != Layout::Columnwise {
        return bad("only columnwise families can be read back".into());
    }
    if pf.sigma.iter().enumerate().any(|(i, &j)| i != j) || pf.ends.len() != pf.paths.len() {
        return bad("paths are not connected in order".into());
    }
    if !is_strongly_non_intersecting(pf) {
        return bad("paths intersect".into());
    }
    let family = model.family;
    let n = model.n;
    let len = if family == CharacterFamily::Gl { n as i64 } else { 2 * n as i64 };
    let height = len + 2 * model.m;
    let mut inner_conj = Vec::new();
    let mut outer_conj = Vec::new();
    let mut columns = Vec::new();
    for (k, path) in pf.paths.iter().enumerate() {
        let c = k as i64 + 1;
        if !path.is_legal(model) {
            return bad(format!("path {c} leaves the model"));
        }
        let (s, e) = (path.start, pf.ends[k]);
        if path.end() != e {
            return bad(format!("path {c} does not reach {e}"));
        }
        let mc = s.x + c - 1;
        let lc = e.x + c - 1;
        if mc < 0 || lc < mc || s.level() != 2 * model.m || e.level() != height {
            return bad(format!("path {c} has misplaced endpoints {s} -> {e}"));
        }
        inner_conj.push(mc as usize);
        outer_conj.push(lc as usize);
        let mut col = Vec::new();
        let mut j = 0i64;
        for &st in &path.steps {
            let v = (j / 2 + 1) as u8;
            match st {
                Step::Right if family == CharacterFamily::Gl => col.push(Entry::plain(j as u8 + 1)),
                Step::Right if j % 2 == 0 => col.push(Entry::bar(v)),
                Step::Right => col.push(Entry::plain(v)),
                Step::Diag => col.push(Entry::hat(v)),
                Step::OHoriz => {
                    col.push(Entry::circ(v));
                    col.push(Entry::hat(v));
                }
                Step::Up | Step::Down => {}
            }
            j += if st.is_special() { 2 } else { 1 };
        }
        columns.push(col);
    }
    let conj = |v: &[usize]| -> Result<Partition> {
        let trimmed: Vec<usize> = v.iter().copied().take_while(|&x| x > 0).collect();
        if v[trimmed.len()..].iter().any(|&x| x > 0) {
            return Err(Error::InvalidFamily("column lengths are not a partition".into()));
        }
        Partition::new(trimmed).map(|p| p.conjugate()).map_err(|_| Error::InvalidFamily("column lengths are not a partition".into()))
    };
    let shape = SkewShape::new(conj(&outer_conj)?, conj(&inner_conj)?)
        .map_err(|e| Error::InvalidFamily(e.to_string()))?;
    let mut cells: HashMap<(usize, usize), Entry> = HashMap::new();
    for (k, col) in columns.iter().enumerate() {
        for (i, &e) in col.iter().enumerate() {
            cells.insert((inner_conj[k] + i + 1, k + 1), e);
        }
    }
    let entries = shape.cells().iter().map(|rc| cells[rc]).collect();
    let t = Tableau::new(shape, entries)?;
    if !is_valid_tableau(family, &t, n, model.m.max(0) as usize) {
        return bad("the filling violates the tableau rules".into());
    }
    Ok(t)
}
