//! Tableau models for the four families and the enumeration oracle.
//!
//! Entries are encoded by a rank `4(v-1) + d` where the decoration `d` is
//! 0 for `v̊`, 1 for `v̂`, 2 for `v̄` and 3 for plain `v`, so that comparing
//! ranks is comparing symbols in the order
//! `1̊ < 1̂ < 1̄ < 1 < 2̊ < ⋯`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{require, Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::{Partition, SkewShape};
use crate::symfunc::CharacterFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Circ,
    Hat,
    Bar,
    Plain,
}

impl Decoration {
    fn code(self) -> u8 {
        match self {
            Decoration::Circ => 0,
            Decoration::Hat => 1,
            Decoration::Bar => 2,
            Decoration::Plain => 3,
        }
    }

    fn from_code(c: u8) -> Self {
        match c {
            0 => Decoration::Circ,
            1 => Decoration::Hat,
            2 => Decoration::Bar,
            _ => Decoration::Plain,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Decoration::Circ => "c",
            Decoration::Hat => "h",
            Decoration::Bar => "b",
            Decoration::Plain => "",
        }
    }
}

/// A decorated entry `v`, `v̄`, `v̂` or `v̊`. Ordering is the family order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub value: u8,
    pub decoration: Decoration,
}

impl Entry {
    pub fn new(value: u8, decoration: Decoration) -> Self {
        assert!(value >= 1, "entries are 1-based");
        Entry { value, decoration }
    }

    pub fn plain(v: u8) -> Self {
        Entry::new(v, Decoration::Plain)
    }

    pub fn bar(v: u8) -> Self {
        Entry::new(v, Decoration::Bar)
    }

    pub fn hat(v: u8) -> Self {
        Entry::new(v, Decoration::Hat)
    }

    pub fn circ(v: u8) -> Self {
        Entry::new(v, Decoration::Circ)
    }

    pub fn rank(self) -> u8 {
        4 * (self.value - 1) + self.decoration.code()
    }

    pub fn from_rank(r: u8) -> Self {
        Entry { value: r / 4 + 1, decoration: Decoration::from_code(r % 4) }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, self.decoration.suffix())
    }
}

impl std::str::FromStr for Entry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("bad tableau entry {s:?}"));
        let (digits, deco) = match s.chars().last() {
            Some('b') => (&s[..s.len() - 1], Decoration::Bar),
            Some('h') => (&s[..s.len() - 1], Decoration::Hat),
            Some('c') => (&s[..s.len() - 1], Decoration::Circ),
            _ => (s, Decoration::Plain),
        };
        let v: u8 = digits.parse().map_err(|_| bad())?;
        if v == 0 || v > 63 {
            return Err(bad());
        }
        Ok(Entry::new(v, deco))
    }
}

/// A filling of a skew shape; `entries` follows [`SkewShape::cells`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub shape: SkewShape,
    entries: Vec<Entry>,
}

impl Tableau {
    pub fn new(shape: SkewShape, entries: Vec<Entry>) -> Result<Self> {
        require(entries.len() == shape.size(), || {
            format!("{} entries for a shape with {} cells", entries.len(), shape.size())
        })?;
        Ok(Tableau { shape, entries })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Entry at 1-based `(row, col)`, if that cell belongs to the shape.
    pub fn get(&self, r: usize, c: usize) -> Option<Entry> {
        if !self.shape.contains_cell(r, c) {
            return None;
        }
        let before: usize = (1..r).map(|i| self.shape.outer.part(i) - self.shape.inner.part(i)).sum();
        Some(self.entries[before + c - self.shape.inner.part(r) - 1])
    }

    /// Entries of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<Entry> {
        (self.shape.inner.conj_part(c) + 1..=self.shape.outer.conj_part(c))
            .map(|r| self.get(r, c).expect("cell in shape"))
            .collect()
    }

    /// Parses the golden text form, e.g. `. 1b 2 / 1b 2b / 1 2 / 2b / 3`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut entries = Vec::new();
        if !s.trim().is_empty() {
            for row in s.split('/') {
                let tokens: Vec<&str> = row.split_whitespace().collect();
                let dots = tokens.iter().take_while(|t| **t == ".").count();
                outer.push(tokens.len());
                inner.push(dots);
                for t in &tokens[dots..] {
                    entries.push(t.parse::<Entry>()?);
                }
            }
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Tableau::new(shape, entries)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.shape.outer.len() {
            if r > 1 {
                write!(f, " / ")?;
            }
            for c in 1..=self.shape.outer.part(r) {
                if c > 1 {
                    write!(f, " ")?;
                }
                match self.get(r, c) {
                    Some(e) => write!(f, "{e}")?,
                    None => write!(f, ".")?,
                }
            }
        }
        Ok(())
    }
}

/// Checks `l(μ) <= m` and `l(λ) <= n+m` (for Schur: `l(λ) <= n`).
pub fn check_shape(family: CharacterFamily, shape: &SkewShape, n: usize, m: usize) -> Result<()> {
    let (lo, li) = (shape.outer.len(), shape.inner.len());
    if family == CharacterFamily::Gl {
        return require(lo <= n, || format!("l(λ) <= n fails: {lo} > {n}"));
    }
    require(li <= m, || format!("l(μ) <= m fails: {li} > {m}"))?;
    require(lo <= n + m, || format!("l(λ) <= n+m fails: {lo} > {}", n + m))
}

/// Everything the local legality test needs to know about a cell's context.
#[derive(Clone, Copy)]
struct Ctx {
    family: CharacterFamily,
    n: usize,
    m: usize,
    /// Length of the first column of the outer shape.
    first_col_len: usize,
}

const CIRC: u8 = 0;
const HAT: u8 = 1;
const BAR: u8 = 2;
const PLAIN: u8 = 3;

fn rank_of(v: usize, d: u8) -> u8 {
    (4 * (v - 1)) as u8 + d
}

impl Ctx {
    fn max_rank(&self) -> u8 {
        (4 * self.n) as u8
    }

    /// Whether `x` may sit at `(r, c)` given its left and upper neighbours
    /// (`None` if outside the skew shape) and the entry already placed in
    /// column 1 of this row (the cell itself when `c == 1`).
    fn legal(&self, r: usize, c: usize, x: u8, left: Option<u8>, above: Option<u8>, first: Option<u8>) -> bool {
        let v = (x / 4 + 1) as usize;
        let d = x % 4;
        if v > self.n || left.is_some_and(|l| x < l) || above.is_some_and(|a| x <= a) {
            return false;
        }
        let i = r.checked_sub(self.m).filter(|&i| i >= 1);
        match self.family {
            CharacterFamily::Gl => d == PLAIN,
            CharacterFamily::Sp => d >= BAR && i.is_none_or(|i| x >= rank_of(i, BAR)),
            CharacterFamily::SoOdd => {
                if d == CIRC || i.is_some_and(|i| x < rank_of(i, HAT)) {
                    return false;
                }
                d != HAT || (c == 1 && i == Some(v))
            }
            CharacterFamily::OEven => {
                if i.is_some_and(|i| x < rank_of(i, HAT)) {
                    return false;
                }
                // a circled entry above forces the matching hat
                if c == 1 {
                    if let (Some(i), Some(a)) = (i, above) {
                        if a == rank_of(i, CIRC) {
                            return x == rank_of(i, HAT);
                        }
                    }
                }
                match d {
                    HAT => false,
                    CIRC => c == 1 && r + 1 == self.m + v && r < self.first_col_len,
                    PLAIN if c > 1 && i == Some(v) && first == Some(rank_of(v, BAR)) => {
                        above == Some(rank_of(v, BAR))
                    }
                    _ => true,
                }
            }
        }
    }
}

/// Validity predicate for a complete tableau.
pub fn is_valid_tableau(family: CharacterFamily, t: &Tableau, n: usize, m: usize) -> bool {
    if check_shape(family, &t.shape, n, m).is_err() {
        return false;
    }
    let ctx = Ctx { family, n, m, first_col_len: t.shape.outer.conj_part(1) };
    for (r, c) in t.shape.cells() {
        let x = t.get(r, c).unwrap();
        if x.value as usize > n {
            return false;
        }
        let rank = |rr, cc| t.get(rr, cc).map(Entry::rank);
        let above = if r > 1 { rank(r - 1, c) } else { None };
        if !ctx.legal(r, c, x.rank(), rank(r, c - 1), above, rank(r, 1)) {
            return false;
        }
        // a circled entry needs its hat directly below
        if x.decoration == Decoration::Circ && t.get(r + 1, 1) != Some(Entry::hat(x.value)) {
            return false;
        }
    }
    true
}

/// `x^T`: plain `v` counts +1, `v̄` counts −1, hats and circles count 0.
pub fn tableau_weight(_family: CharacterFamily, t: &Tableau, n: usize) -> LaurentPoly {
    LaurentPoly::monomial(n, weight_vec(t.entries.iter().map(|e| e.rank()), n), 1)
}

fn weight_vec(ranks: impl Iterator<Item = u8>, n: usize) -> Vec<i32> {
    let mut w = vec![0i32; n];
    for x in ranks {
        let v = (x / 4) as usize;
        match x % 4 {
            PLAIN => w[v] += 1,
            BAR => w[v] -= 1,
            _ => {}
        }
    }
    w
}

/// Streaming enumeration of every valid tableau, cell by cell in row-major
/// order with entries tried in increasing family order.
pub struct TableauIter {
    ctx: Ctx,
    shape: SkewShape,
    cells: Vec<(usize, usize)>,
    /// Index into `cells` of the cell to the left / above, if in the shape.
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    first: Vec<Option<usize>>,
    vals: Vec<u8>,
    k: usize,
    started: bool,
    done: bool,
}

impl TableauIter {
    fn new(family: CharacterFamily, shape: SkewShape, n: usize, m: usize) -> Self {
        let cells = shape.cells();
        let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let look = |r: usize, c: usize| if r == 0 || c == 0 { None } else { index.get(&(r, c)).copied() };
        let left = cells.iter().map(|&(r, c)| look(r, c - 1)).collect();
        let above = cells.iter().map(|&(r, c)| look(r - 1, c)).collect();
        let first = cells.iter().map(|&(r, _)| look(r, 1)).collect();
        let ctx = Ctx { family, n, m, first_col_len: shape.outer.conj_part(1) };
        let total = cells.len();
        TableauIter {
            ctx,
            shape,
            cells,
            left,
            above,
            first,
            vals: vec![0; total],
            k: 0,
            started: false,
            done: false,
        }
    }

    fn next_legal(&self, k: usize, from: u8) -> Option<u8> {
        let (r, c) = self.cells[k];
        let left = self.left[k].map(|i| self.vals[i]);
        let above = self.above[k].map(|i| self.vals[i]);
        let lo = from.max(left.unwrap_or(0)).max(above.map_or(0, |a| a + 1));
        (lo..self.ctx.max_rank()).find(|&x| {
            let first = if c == 1 { Some(x) } else { self.first[k].map(|i| self.vals[i]) };
            self.ctx.legal(r, c, x, left, above, first) && self.circ_closes(k, x)
        })
    }

    /// A circled entry is only useful if the cell below can take the hat.
    fn circ_closes(&self, k: usize, x: u8) -> bool {
        x % 4 != CIRC || {
            let (r, _) = self.cells[k];
            r < self.ctx.first_col_len
        }
    }

    fn descend(&mut self) -> bool {
        while self.k < self.cells.len() {
            match self.next_legal(self.k, 0) {
                Some(x) => {
                    self.vals[self.k] = x;
                    self.k += 1;
                }
                None => {
                    if !self.backtrack() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn backtrack(&mut self) -> bool {
        loop {
            if self.k == 0 {
                return false;
            }
            self.k -= 1;
            let cur = self.vals[self.k];
            if let Some(x) = self.next_legal(self.k, cur + 1) {
                self.vals[self.k] = x;
                self.k += 1;
                return true;
            }
        }
    }
}

impl Iterator for TableauIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.descend()
        } else {
            self.backtrack() && self.descend()
        };
        if !ok {
            self.done = true;
            return None;
        }
        let entries = self.vals.iter().map(|&x| Entry::from_rank(x)).collect();
        Some(Tableau { shape: self.shape.clone(), entries })
    }
}

/// All valid tableaux, each exactly once.
pub fn enumerate_tableaux(family: CharacterFamily, shape: &SkewShape, n: usize, m: usize) -> Result<TableauIter> {
    check_shape(family, shape, n, m)?;
    Ok(TableauIter::new(family, shape.clone(), n, m))
}

/// `Σ_T x^T` by summing over the streaming enumeration directly.
pub fn character_by_streaming(family: CharacterFamily, shape: &SkewShape, n: usize, m: usize) -> Result<LaurentPoly> {
    let mut acc: HashMap<Vec<i32>, u64> = HashMap::new();
    for t in enumerate_tableaux(family, shape, n, m)? {
        *acc.entry(weight_vec(t.entries.iter().map(|e| e.rank()), n)).or_default() += 1;
    }
    Ok(LaurentPoly::from_terms(n, acc.into_iter().map(|(e, c)| (e, c.into()))))
}

/// `Σ_T x^T` over all valid tableaux.
///
/// The sum is taken row by row: every rule is local to a row and the row
/// directly above it, so the total over all completions below a given row
/// filling is memoized on that filling. Same tableaux, same weights as
/// [`character_by_streaming`], without revisiting identical subproblems.
pub fn character_by_tableaux(family: CharacterFamily, shape: &SkewShape, n: usize, m: usize) -> Result<LaurentPoly> {
    check_shape(family, shape, n, m)?;
    let ctx = Ctx { family, n, m, first_col_len: shape.outer.conj_part(1) };
    let mut dp = RowDp { ctx, shape, memo: HashMap::new() };
    let top = first_row(shape);
    Ok(dp.total(top, &[]))
}

fn first_row(shape: &SkewShape) -> usize {
    (1..=shape.outer.len()).find(|&r| shape.outer.part(r) > shape.inner.part(r)).unwrap_or(shape.outer.len() + 1)
}

struct RowDp<'a> {
    ctx: Ctx,
    shape: &'a SkewShape,
    memo: HashMap<(usize, Vec<u8>), LaurentPoly>,
}

impl RowDp<'_> {
    /// Sum over fillings of rows `r..` given the filling `prev` of row `r-1`.
    fn total(&mut self, r: usize, prev: &[u8]) -> LaurentPoly {
        let n = self.ctx.n;
        if r > self.shape.outer.len() {
            return LaurentPoly::one(n);
        }
        let key = (r, prev.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut out = LaurentPoly::zero(n);
        for row in self.rows(r, prev) {
            let below = self.total(r + 1, &row);
            if !below.is_zero() {
                out.add_shifted(&below, &weight_vec(row.iter().copied(), n));
            }
        }
        self.memo.insert(key, out.clone());
        out
    }

    /// All legal fillings of row `r` under `prev`.
    fn rows(&self, r: usize, prev: &[u8]) -> Vec<Vec<u8>> {
        let lo_c = self.shape.inner.part(r) + 1;
        let hi_c = self.shape.outer.part(r);
        let prev_start = self.shape.inner.part(r.saturating_sub(1)) + 1;
        let above = |c: usize| if r > 1 && c >= prev_start { prev.get(c - prev_start).copied() } else { None };
        let mut out = Vec::new();
        let mut cur: Vec<u8> = Vec::with_capacity(hi_c + 1 - lo_c);
        self.fill(r, lo_c, hi_c, &above, &mut cur, &mut out);
        out
    }

    fn fill(
        &self,
        r: usize,
        c: usize,
        hi_c: usize,
        above: &dyn Fn(usize) -> Option<u8>,
        cur: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if c > hi_c {
            out.push(cur.clone());
            return;
        }
        let left = cur.last().copied();
        let a = above(c);
        let lo = left.unwrap_or(0).max(a.map_or(0, |a| a + 1));
        let lo_c = self.shape.inner.part(r) + 1;
        for x in lo..self.ctx.max_rank() {
            let first = if c == 1 { Some(x) } else if lo_c == 1 { cur.first().copied() } else { None };
            if self.ctx.legal(r, c, x, left, a, first) {
                cur.push(x);
                self.fill(r, c + 1, hi_c, above, cur, out);
                cur.pop();
            }
        }
    }
}
