//! Standard, skew, and semistandard tableaux.
//!
//! The eigenvalue multiplicities of the shuffle are products d_λ · d^μ,
//! where d_λ counts standard tableaux of shape λ and d^μ counts
//! *desarrangement* tableaux of shape μ — standard tableaux whose smallest
//! ascent is even. This module supplies everything those counts rest on:
//!
//! * standard-tableau enumeration ([`enumerate_syt`]),
//! * ascents and the desarrangement test ([`smallest_ascent`],
//!   [`is_desarrangement`]),
//! * desarrangement counts d^μ via a strip recursion
//!   ([`desarrangement_count`]),
//! * jeu-de-taquin slides on skew tableaux ([`jdt_slide`]),
//! * the strip bijection sending a standard tableau of shape λ to a
//!   desarrangement tableau of a shape μ with λ/μ a horizontal strip, and
//!   back ([`standard_to_desarrangement`], [`desarrangement_to_standard`]),
//! * Kostka numbers K_{λ,ν} and semistandard enumeration
//!   ([`kostka_number`], [`enumerate_ssyt`]).
//!
//! Cells are addressed as 1-based `(row, column)` pairs throughout.
//!
//! ```
//! use r2r_core::partitions::Partition;
//! use r2r_core::tableaux::{desarrangement_count, is_desarrangement, StandardTableau};
//!
//! let t = StandardTableau::try_new(vec![vec![1, 3], vec![2]]).unwrap();
//! assert!(is_desarrangement(&t).unwrap());
//! // Hook shapes [k,1] admit exactly one desarrangement tableau.
//! assert_eq!(desarrangement_count(&Partition::new([4, 1])), 1u32.into());
//! ```

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::partitions::{horizontal_strip_subshapes, is_horizontal_strip, syt_count, Partition};
use crate::{Error, Result};

/// Cell cap for the brute-force enumerators ([`enumerate_syt`],
/// [`enumerate_ssyt`]); larger shapes must go through [`syt_count`],
/// [`desarrangement_count`], or [`kostka_number`], which scale much further.
pub const ENUMERATION_CAP: usize = 12;

/// A standard Young tableau: the cells of a partition shape filled with
/// 1..n, strictly increasing along rows and down columns.
///
/// Stored row by row; serializes as a JSON array of row arrays, e.g.
/// `[[1,3],[2]]`. The empty tableau (of shape ∅) is a valid value.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<usize>>", try_from = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Builds a tableau from rows, validating shape, entry range, and
    /// row/column monotonicity. Trailing empty rows are stripped.
    pub fn try_new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let shape = Partition::try_new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| Error::InvalidTableau("row lengths must be weakly decreasing".into()))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &v in row {
                if v < 1 || v > n {
                    return Err(Error::InvalidTableau(format!("entry {v} outside 1..={n}")));
                }
                if seen[v] {
                    return Err(Error::InvalidTableau(format!("entry {v} repeated")));
                }
                seen[v] = true;
            }
        }
        check_monotone(&rows, true)?;
        Ok(Self { rows })
    }

    /// The empty tableau of shape ∅.
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    /// True for the empty tableau.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The rows, top to bottom.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The shape λ (row lengths).
    pub fn shape(&self) -> Partition {
        Partition::try_new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau rows always form a partition")
    }

    /// Number of cells n.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// The entry at 1-based `(row, col)`, if that cell exists.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1).and_then(|r| r.get(col - 1)).copied()
    }

    /// The 1-based `(row, col)` holding `value`, if present.
    pub fn position_of(&self, value: usize) -> Option<(usize, usize)> {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&v| v == value) {
                return Some((i + 1, j + 1));
            }
        }
        None
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.rows.iter().map(|r| r.as_slice()))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::try_new(rows)
    }
}

/// A skew standard tableau of shape outer/inner: the cells of `outer` not in
/// `inner`, filled with a contiguous range of distinct integers, strictly
/// increasing along rows and down columns.
///
/// Serializes as `{"inner": [...], "rows": [[...], ...]}` where `rows` holds
/// only the filled cells of each row.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SkewRepr", try_from = "SkewRepr")]
pub struct SkewTableau {
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Clone, Serialize, Deserialize)]
struct SkewRepr {
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Builds a skew tableau from the inner shape and the filled entries of
    /// each row (row `i` occupies columns `inner_i + 1 ..= inner_i + len`).
    /// Trailing rows that are empty and have no inner cells are stripped.
    pub fn try_new(inner: Partition, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.len() > inner.rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() < inner.rows() {
            return Err(Error::InvalidTableau(
                "inner shape extends below the outer shape".into(),
            ));
        }
        let outer_parts: Vec<usize> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| inner.part(i + 1) + r.len())
            .collect();
        let outer = Partition::try_new(outer_parts)
            .map_err(|_| Error::InvalidTableau("row lengths must give a partition shape".into()))?;
        if outer.rows() < rows.len() {
            return Err(Error::InvalidTableau(
                "interior rows may not be empty of both inner and filled cells".into(),
            ));
        }
        let t = Self { inner, rows };
        t.validate_entries()?;
        Ok(t)
    }

    fn validate_entries(&self) -> Result<()> {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        for w in all.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidTableau(format!("entry {} repeated", w[0])));
            }
            if w[1] != w[0] + 1 {
                return Err(Error::InvalidTableau(
                    "entries must form a contiguous range".into(),
                ));
            }
        }
        if all.first().is_some_and(|&v| v == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        // Row monotonicity is within each filled segment; columns need the
        // inner offsets taken into account.
        for row in &self.rows {
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidTableau("rows must strictly increase".into()));
                }
            }
        }
        let outer = self.outer();
        for i in 2..=self.rows.len() {
            let lo = self.inner.part(i).max(self.inner.part(i - 1)) + 1;
            let hi = outer.part(i).min(outer.part(i - 1));
            for j in lo..=hi {
                let above = self.entry(i - 1, j).expect("cell in both rows");
                let here = self.entry(i, j).expect("cell in both rows");
                if above >= here {
                    return Err(Error::InvalidTableau(
                        "columns must strictly increase".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The outer shape.
    pub fn outer(&self) -> Partition {
        Partition::try_new(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| self.inner.part(i + 1) + r.len())
                .collect(),
        )
        .expect("validated at construction")
    }

    /// The inner shape.
    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// The filled entries of each row, without inner padding.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// The entry at 1-based `(row, col)`; `None` for inner or absent cells.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || col == 0 {
            return None;
        }
        let inner = self.inner.part(row);
        if col <= inner {
            return None;
        }
        self.rows
            .get(row - 1)
            .and_then(|r| r.get(col - inner - 1))
            .copied()
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            let pad = self.inner.part(i + 1);
            for j in 0..pad + row.len() {
                if j > 0 {
                    write!(f, ",")?;
                }
                if j < pad {
                    write!(f, "·")?;
                } else {
                    write!(f, "{}", row[j - pad])?;
                }
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<SkewTableau> for SkewRepr {
    fn from(t: SkewTableau) -> Self {
        SkewRepr {
            inner: t.inner.parts().to_vec(),
            rows: t.rows,
        }
    }
}

impl TryFrom<SkewRepr> for SkewTableau {
    type Error = Error;
    fn try_from(r: SkewRepr) -> Result<Self> {
        SkewTableau::try_new(Partition::try_new(r.inner)?, r.rows)
    }
}

/// A semistandard Young tableau: weakly increasing along rows, strictly
/// increasing down columns. Serializes as a JSON array of row arrays.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<usize>>", try_from = "Vec<Vec<usize>>")]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    /// Builds a semistandard tableau, validating shape and monotonicity.
    pub fn try_new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Partition::try_new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| Error::InvalidTableau("row lengths must be weakly decreasing".into()))?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        check_monotone(&rows, false)?;
        Ok(Self { rows })
    }

    /// The rows, top to bottom.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The shape λ (row lengths).
    pub fn shape(&self) -> Partition {
        Partition::try_new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau rows always form a partition")
    }

    /// How many times each value occurs: index `v - 1` counts the value `v`.
    /// For a tableau of evaluation ν this is exactly the parts of ν.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max];
        for &v in self.rows.iter().flatten() {
            counts[v - 1] += 1;
        }
        counts
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.rows.iter().map(|r| r.as_slice()))
    }
}

impl fmt::Debug for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<SemistandardTableau> for Vec<Vec<usize>> {
    fn from(t: SemistandardTableau) -> Self {
        t.rows
    }
}

impl TryFrom<Vec<Vec<usize>>> for SemistandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::try_new(rows)
    }
}

fn write_rows<'a>(
    f: &mut fmt::Formatter<'_>,
    rows: impl Iterator<Item = &'a [usize]>,
) -> fmt::Result {
    write!(f, "[")?;
    for (i, row) in rows.enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "[")?;
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")?;
    }
    write!(f, "]")
}

/// Row monotonicity (strict or weak) plus strict column monotonicity for
/// left-justified rows.
fn check_monotone(rows: &[Vec<usize>], strict_rows: bool) -> Result<()> {
    for row in rows {
        for w in row.windows(2) {
            let ok = if strict_rows {
                w[0] < w[1]
            } else {
                w[0] <= w[1]
            };
            if !ok {
                return Err(Error::InvalidTableau("rows must be increasing".into()));
            }
        }
    }
    for i in 1..rows.len() {
        for (j, &below) in rows[i].iter().enumerate() {
            if rows[i - 1][j] >= below {
                return Err(Error::InvalidTableau(
                    "columns must strictly increase".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Every standard Young tableau of `shape`, in a deterministic order.
///
/// Errors with [`Error::CapExceeded`] beyond [`ENUMERATION_CAP`] cells; use
/// [`syt_count`] for sizes past the cap.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<StandardTableau>> {
    let n = shape.size();
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "enumerate_syt",
            value: n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.rows()];
    let mut out = Vec::new();
    fill_syt(shape, n, 1, &mut rows, &mut out);
    Ok(out)
}

fn fill_syt(
    shape: &Partition,
    n: usize,
    value: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if value > n {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for i in 0..rows.len() {
        let len = rows[i].len();
        if len < shape.part(i + 1) && (i == 0 || rows[i - 1].len() > len) {
            rows[i].push(value);
            fill_syt(shape, n, value + 1, rows, out);
            rows[i].pop();
        }
    }
}

/// The desarrangement tableaux of `shape`: [`enumerate_syt`] filtered to
/// even smallest ascent. By convention the empty shape has exactly one
/// (the empty tableau), so that d^∅ = 1.
pub fn enumerate_desarrangement_tableaux(shape: &Partition) -> Result<Vec<StandardTableau>> {
    if shape.is_empty() {
        return Ok(vec![StandardTableau::empty()]);
    }
    Ok(enumerate_syt(shape)?
        .into_iter()
        .filter(|t| is_desarrangement(t).expect("nonempty tableau"))
        .collect())
}

/// The least ascent of a standard tableau: the least `i` such that `i = n`,
/// or `i < n` and `i + 1` sits weakly north-and-east of `i` — implemented as
/// row(i+1) ≤ row(i). Since `n` always ascends, the result exists.
///
/// Errors with [`Error::EmptyTableau`] on the empty tableau.
pub fn smallest_ascent(t: &StandardTableau) -> Result<usize> {
    let n = t.size();
    if n == 0 {
        return Err(Error::EmptyTableau);
    }
    let mut row_of = vec![0usize; n + 1];
    for (i, row) in t.rows().iter().enumerate() {
        for &v in row {
            row_of[v] = i + 1;
        }
    }
    for i in 1..n {
        if row_of[i + 1] <= row_of[i] {
            return Ok(i);
        }
    }
    Ok(n)
}

/// True when the smallest ascent is even.
///
/// ```
/// use r2r_core::tableaux::{is_desarrangement, StandardTableau};
///
/// let t = StandardTableau::try_new(vec![vec![1, 2]]).unwrap();
/// assert!(!is_desarrangement(&t).unwrap());
/// let t = StandardTableau::try_new(vec![vec![1], vec![2]]).unwrap();
/// assert!(is_desarrangement(&t).unwrap());
/// ```
pub fn is_desarrangement(t: &StandardTableau) -> Result<bool> {
    Ok(smallest_ascent(t)? % 2 == 0)
}

fn desarrangement_memo() -> &'static Mutex<HashMap<Vec<usize>, BigUint>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<usize>, BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// d^μ: the number of desarrangement tableaux of shape μ.
///
/// Computed by the strip recursion d^μ = d_μ − Σ d^ρ over proper subshapes
/// ρ ⊊ μ with μ/ρ a horizontal strip, anchored at d^∅ = 1. The recursion
/// inverts the bijection identity Σ_μ d^μ = d_λ, and a process-wide memo
/// table (guarded by a mutex; inserts are idempotent) keeps repeated
/// spectrum computations cheap.
pub fn desarrangement_count(mu: &Partition) -> BigUint {
    if let Some(hit) = desarrangement_memo().lock().unwrap().get(mu.parts()) {
        return hit.clone();
    }
    let mut count = syt_count(mu);
    for rho in horizontal_strip_subshapes(mu, None) {
        if &rho != mu {
            // Partial sums of d^ρ never exceed d_μ, so this cannot underflow.
            count -= desarrangement_count(&rho);
        }
    }
    desarrangement_memo()
        .lock()
        .unwrap()
        .insert(mu.parts().to_vec(), count.clone());
    count
}

/// Filled cells as an `Option` grid sized to the outer shape; 0-based.
type Grid = Vec<Vec<Option<usize>>>;

fn grid_get(grid: &Grid, r: usize, c: usize) -> Option<usize> {
    grid.get(r).and_then(|row| row.get(c)).copied().flatten()
}

/// Slides a hole that starts on the interior side: the smaller of its east
/// and south neighbors repeatedly moves in, the hole drifts southeast, and
/// the 0-based exit cell is returned. A hole with no filled east or south
/// neighbor exits where it stands.
fn slide_from_interior(grid: &mut Grid, start: (usize, usize)) -> (usize, usize) {
    let (mut r, mut c) = start;
    loop {
        let east = grid_get(grid, r, c + 1);
        let south = grid_get(grid, r + 1, c);
        let (nr, nc) = match (east, south) {
            (Some(e), Some(s)) if e < s => (r, c + 1),
            (Some(_), Some(_)) | (None, Some(_)) => (r + 1, c),
            (Some(_), None) => (r, c + 1),
            (None, None) => return (r, c),
        };
        grid[r][c] = grid[nr][nc].take();
        (r, c) = (nr, nc);
    }
}

/// Slides a hole that starts on the exterior side: the larger of its west
/// and north neighbors repeatedly moves in, the hole drifts northwest, and
/// the 0-based exit cell is returned.
fn slide_from_exterior(grid: &mut Grid, start: (usize, usize)) -> (usize, usize) {
    let (mut r, mut c) = start;
    loop {
        let west = if c > 0 {
            grid_get(grid, r, c - 1)
        } else {
            None
        };
        let north = if r > 0 {
            grid_get(grid, r - 1, c)
        } else {
            None
        };
        let (nr, nc) = match (west, north) {
            (Some(w), Some(n)) if w > n => (r, c - 1),
            (Some(_), Some(_)) | (None, Some(_)) => (r - 1, c),
            (Some(_), None) => (r, c - 1),
            (None, None) => return (r, c),
        };
        grid[r][c] = grid[nr][nc].take();
        (r, c) = (nr, nc);
    }
}

/// A jeu-de-taquin slide into the empty 1-based `cell`.
///
/// The cell must be addable to the skew shape: a removable corner of the
/// inner shape (an interior slide — entries move north/west, the hole exits
/// on the exterior) or an addable corner of the outer shape (an exterior
/// slide — entries move south/east, the hole exits on the interior).
/// Anything else is rejected with [`Error::InvalidSlideCell`].
///
/// ```
/// use r2r_core::partitions::Partition;
/// use r2r_core::tableaux::{jdt_slide, SkewTableau};
///
/// // ·  ·  2  5                · 2 4 5
/// // 1  3  4      --(1,2)-->   1 3
/// let t = SkewTableau::try_new(Partition::new([2]), vec![vec![2, 5], vec![1, 3, 4]]).unwrap();
/// let slid = jdt_slide(&t, (1, 2)).unwrap();
/// assert_eq!(slid.outer(), Partition::new([4, 2]));
/// assert_eq!(slid.inner(), &Partition::new([1]));
/// ```
pub fn jdt_slide(t: &SkewTableau, cell: (usize, usize)) -> Result<SkewTableau> {
    let (row, col) = cell;
    let outer = t.outer();
    let inner = t.inner().clone();
    if row == 0 || col == 0 {
        return Err(Error::InvalidSlideCell(row, col));
    }
    let interior = inner.part(row) == col && inner.part(row + 1) < col;
    let exterior = col == outer.part(row) + 1 && (row == 1 || outer.part(row - 1) >= col);
    if !interior && !exterior {
        return Err(Error::InvalidSlideCell(row, col));
    }

    let mut grid: Grid = (1..=outer.rows())
        .map(|i| (1..=outer.part(i)).map(|j| t.entry(i, j)).collect())
        .collect();
    if exterior {
        if row > grid.len() {
            grid.push(vec![None]);
        } else {
            grid[row - 1].push(None);
        }
    }

    let (new_inner, new_outer);
    if interior {
        let (er, ec) = slide_from_interior(&mut grid, (row - 1, col - 1));
        new_inner = with_part_set(&inner, row, col - 1);
        debug_assert_eq!(outer.part(er + 1), ec + 1);
        new_outer = with_part_set(&outer, er + 1, ec);
    } else {
        let (er, ec) = slide_from_exterior(&mut grid, (row - 1, col - 1));
        new_outer = with_part_set(&outer, row, col);
        debug_assert_eq!(inner.part(er + 1), ec);
        new_inner = with_part_set(&inner, er + 1, ec + 1);
    }

    let rows: Vec<Vec<usize>> = (1..=new_outer.rows())
        .map(|i| {
            (new_inner.part(i) + 1..=new_outer.part(i))
                .map(|j| grid[i - 1][j - 1].expect("slide leaves the skew cells filled"))
                .collect()
        })
        .collect();
    Ok(SkewTableau::try_new(new_inner, rows).expect("slide preserves skew validity"))
}

/// Copies `p` with the 1-based `row` set to `len` (the result must still be
/// a partition; shape edits in slides always are).
fn with_part_set(p: &Partition, row: usize, len: usize) -> Partition {
    let mut parts = p.parts().to_vec();
    if row > parts.len() {
        parts.resize(row, 0);
    }
    parts[row - 1] = len;
    Partition::try_new(parts).expect("slide shape edits preserve partitions")
}

/// The strip bijection, forward direction: carries a desarrangement tableau
/// `q` of shape μ to a standard tableau of shape `lambda`, where λ/μ must be
/// a horizontal strip.
///
/// The strip cells are appended as holes and slid into from the leftmost to
/// the rightmost; that vacates the first s = |λ/μ| cells of row 1, which are
/// filled with 1..s while every other entry is incremented by s.
///
/// The empty tableau is accepted for μ = ∅ (matching d^∅ = 1); any other
/// non-desarrangement `q` is rejected, as is a non-strip (λ, μ) pair.
pub fn desarrangement_to_standard(
    q: &StandardTableau,
    lambda: &Partition,
) -> Result<StandardTableau> {
    let mu = q.shape();
    if !is_horizontal_strip(lambda, &mu) {
        return Err(Error::NotAHorizontalStrip(
            mu.to_string(),
            lambda.to_string(),
        ));
    }
    if !q.is_empty() && !is_desarrangement(q)? {
        return Err(Error::NotADesarrangement);
    }
    let s = lambda.size() - mu.size();

    let mut grid: Grid = (1..=lambda.rows())
        .map(|i| (1..=lambda.part(i)).map(|j| q.entry(i, j)).collect())
        .collect();
    let mut strip: Vec<(usize, usize)> = Vec::with_capacity(s);
    for i in 1..=lambda.rows() {
        for j in mu.part(i) + 1..=lambda.part(i) {
            strip.push((i - 1, j - 1));
        }
    }
    // A horizontal strip has at most one cell per column, so column order is
    // exactly the left-to-right order of the slides.
    strip.sort_unstable_by_key(|&(_, c)| c);
    for cell in strip {
        slide_from_exterior(&mut grid, cell);
    }

    let rows: Vec<Vec<usize>> = grid
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| match e {
                    None => {
                        assert!(
                            i == 0 && j < s,
                            "holes must end in the leading first-row cells"
                        );
                        j + 1
                    }
                    Some(v) => v + s,
                })
                .collect()
        })
        .collect();
    Ok(StandardTableau::try_new(rows).expect("the bijection produces a standard tableau"))
}

/// The strip bijection, inverse direction: recovers from a standard tableau
/// `p` of shape λ the pair (μ, q) with λ/μ a horizontal strip and `q` a
/// desarrangement tableau of shape μ such that
/// [`desarrangement_to_standard`]`(q, λ) = p`.
///
/// With `a` the longest sequential prefix 1..a of row 1 and `b` the longest
/// continuation a+1, …, a+b down column 1, the leading r entries of row 1
/// are removed — r = a−1 when b is odd, r = a when b is even — the holes are
/// slid into from the rightmost to the leftmost, and r is subtracted from
/// the surviving entries.
pub fn standard_to_desarrangement(p: &StandardTableau) -> Result<(Partition, StandardTableau)> {
    let n = p.size();
    if n == 0 {
        return Err(Error::EmptyTableau);
    }
    let row1 = &p.rows()[0];
    let mut a = 0;
    while a < row1.len() && row1[a] == a + 1 {
        a += 1;
    }
    let mut b = 0;
    while p.entry(b + 2, 1) == Some(a + b + 1) {
        b += 1;
    }
    let r = if b % 2 == 1 { a - 1 } else { a };

    let mut grid: Grid = p
        .rows()
        .iter()
        .map(|row| row.iter().map(|&v| Some(v)).collect())
        .collect();
    for cell in grid[0].iter_mut().take(r) {
        *cell = None;
    }
    for j in (0..r).rev() {
        slide_from_interior(&mut grid, (0, j));
    }

    let filled: Vec<usize> = grid
        .iter()
        .map(|row| {
            let k = row.iter().take_while(|e| e.is_some()).count();
            assert!(
                row[k..].iter().all(|e| e.is_none()),
                "slides must leave each row left-justified"
            );
            k
        })
        .collect();
    let qrows: Vec<Vec<usize>> = grid
        .iter()
        .zip(&filled)
        .map(|(row, &k)| row[..k].iter().map(|e| e.unwrap() - r).collect())
        .filter(|row: &Vec<usize>| !row.is_empty())
        .collect();
    let q = StandardTableau::try_new(qrows).expect("the inverse produces a standard tableau");
    let mu = q.shape();
    debug_assert!(is_horizontal_strip(&p.shape(), &mu));
    debug_assert!(q.is_empty() || is_desarrangement(&q).expect("nonempty"));
    Ok((mu, q))
}

/// The Kostka number K_{λ,ν}: semistandard tableaux of shape λ and
/// evaluation ν, counted by peeling horizontal strips of sizes ν_m, …, ν_1
/// off λ (a memoized chain count). Zero exactly when λ does not dominate ν.
///
/// Errors when |λ| ≠ |ν|.
pub fn kostka_number(lambda: &Partition, nu: &Partition) -> Result<BigUint> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(
            "λ".into(),
            lambda.size(),
            "ν".into(),
            nu.size(),
        ));
    }
    let mut memo = HashMap::new();
    Ok(kostka_chains(lambda, nu.parts(), &mut memo))
}

fn kostka_chains(
    shape: &Partition,
    nu: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
) -> BigUint {
    let Some((&last, rest)) = nu.split_last() else {
        return if shape.is_empty() {
            One::one()
        } else {
            Zero::zero()
        };
    };
    if shape.size() < last {
        return Zero::zero();
    }
    let key = (shape.parts().to_vec(), nu.len());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut total = BigUint::zero();
    for rho in horizontal_strip_subshapes(shape, Some(shape.size() - last)) {
        total += kostka_chains(&rho, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Every semistandard tableau of `shape` with evaluation `content`, in a
/// deterministic order. Capped at [`ENUMERATION_CAP`] cells; this is the
/// brute-force oracle behind [`kostka_number`].
pub fn enumerate_ssyt(shape: &Partition, content: &Partition) -> Result<Vec<SemistandardTableau>> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch(
            "λ".into(),
            shape.size(),
            "ν".into(),
            content.size(),
        ));
    }
    if shape.size() > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "enumerate_ssyt",
            value: shape.size(),
            cap: ENUMERATION_CAP,
        });
    }
    let mut chains = Vec::new();
    let mut stack = vec![shape.clone()];
    collect_strip_chains(shape, content.parts(), &mut stack, &mut chains);

    let m = content.rows();
    let mut out = Vec::new();
    for chain in &chains {
        // chain[k] is the shape left after peeling the top k values, so the
        // shape holding values 1..=v is chain[m − v].
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.rows()];
        for v in 1..=m {
            let prev = &chain[m - v + 1];
            let cur = &chain[m - v];
            for i in 1..=cur.rows() {
                for _ in prev.part(i)..cur.part(i) {
                    rows[i - 1].push(v);
                }
            }
        }
        out.push(SemistandardTableau { rows });
    }
    Ok(out)
}

fn collect_strip_chains(
    shape: &Partition,
    nu: &[usize],
    stack: &mut Vec<Partition>,
    out: &mut Vec<Vec<Partition>>,
) {
    let Some((&last, rest)) = nu.split_last() else {
        if shape.is_empty() {
            out.push(stack.clone());
        }
        return;
    };
    if shape.size() < last {
        return;
    }
    for rho in horizontal_strip_subshapes(shape, Some(shape.size() - last)) {
        stack.push(rho.clone());
        collect_strip_chains(&rho, rest, stack, out);
        stack.pop();
    }
}
