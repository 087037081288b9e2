//! Aperiodic, periodic and negaperiodic (odd periodic) correlations, and the
//! perfection, complementarity and array predicates built on them.
//!
//! Products keep the order `a_r · conj(b_{r+t})`; nothing here assumes the
//! entries commute. Shifts for the periodic and negaperiodic forms are
//! arbitrary integers, reduced with floor division.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quaternion::{HurwitzUnit, Quat};
use crate::sequence::{check_same_len, QSeq};

/// Sequences at least this long have their shift loop split across threads.
const PARALLEL_THRESHOLD: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CorrelationKind {
    Aperiodic,
    Periodic,
    Negaperiodic,
}

impl CorrelationKind {
    pub fn name(self) -> &'static str {
        match self {
            CorrelationKind::Aperiodic => "aperiodic",
            CorrelationKind::Periodic => "periodic",
            CorrelationKind::Negaperiodic => "negaperiodic",
        }
    }
}

#[inline]
fn term(a: HurwitzUnit, b: HurwitzUnit) -> Quat {
    (a * b.conj()).value()
}

/// `C_{A,B}(t) = Σ_{r=0}^{n-t-1} a_r conj(b_{r+t})` for `0 ≤ t ≤ n`.
pub fn aperiodic_cross(a: &QSeq, b: &QSeq, t: usize) -> Result<Quat> {
    check_same_len(a, b)?;
    let n = a.len();
    if t > n {
        return Err(Error::ShiftOutOfRange {
            shift: t as i64,
            max: n,
        });
    }
    Ok(aperiodic_unchecked(a, b, t))
}

fn aperiodic_unchecked(a: &QSeq, b: &QSeq, t: usize) -> Quat {
    let (a, b) = (a.entries(), b.entries());
    a.iter().zip(&b[t..]).map(|(&x, &y)| term(x, y)).sum()
}

pub fn aperiodic_auto(a: &QSeq, t: usize) -> Result<Quat> {
    aperiodic_cross(a, a, t)
}

/// `R_{A,B}(t) = Σ_r a_r conj(b_{(r+t) mod n})` for any integer `t`.
pub fn periodic_cross(a: &QSeq, b: &QSeq, t: i64) -> Result<Quat> {
    check_same_len(a, b)?;
    Ok(periodic_unchecked(a, b, t))
}

fn periodic_unchecked(a: &QSeq, b: &QSeq, t: i64) -> Quat {
    let n = a.len();
    let s = t.rem_euclid(n as i64) as usize;
    let (a, b) = (a.entries(), b.entries());
    let head: Quat = a[..n - s]
        .iter()
        .zip(&b[s..])
        .map(|(&x, &y)| term(x, y))
        .sum();
    let tail: Quat = a[n - s..]
        .iter()
        .zip(&b[..s])
        .map(|(&x, &y)| term(x, y))
        .sum();
    head + tail
}

pub fn periodic_auto(a: &QSeq, t: i64) -> Quat {
    periodic_unchecked(a, a, t)
}

/// The two-term form `C_{A,B}(t) + conj(C_{B,A}(n-t))`, `0 ≤ t < n`.
pub fn periodic_cross_definitional(a: &QSeq, b: &QSeq, t: usize) -> Result<Quat> {
    check_same_len(a, b)?;
    let n = a.len();
    if t >= n {
        return Err(Error::ShiftOutOfRange {
            shift: t as i64,
            max: n - 1,
        });
    }
    Ok(aperiodic_unchecked(a, b, t) + aperiodic_unchecked(b, a, n - t).conj())
}

/// `R̂_{A,B}(t) = Σ_r (-1)^{⌊(r+t)/n⌋} a_r conj(b_{(r+t) mod n})` for any
/// integer `t`.
pub fn negaperiodic_cross(a: &QSeq, b: &QSeq, t: i64) -> Result<Quat> {
    check_same_len(a, b)?;
    Ok(negaperiodic_unchecked(a, b, t))
}

fn negaperiodic_unchecked(a: &QSeq, b: &QSeq, t: i64) -> Quat {
    let n = a.len();
    let wraps = t.div_euclid(n as i64);
    let s = t.rem_euclid(n as i64) as usize;
    let (a, b) = (a.entries(), b.entries());
    let head: Quat = a[..n - s]
        .iter()
        .zip(&b[s..])
        .map(|(&x, &y)| term(x, y))
        .sum();
    let tail: Quat = a[n - s..]
        .iter()
        .zip(&b[..s])
        .map(|(&x, &y)| term(x, y))
        .sum();
    let value = head - tail;
    if wraps.rem_euclid(2) == 1 {
        -value
    } else {
        value
    }
}

pub fn negaperiodic_auto(a: &QSeq, t: i64) -> Quat {
    negaperiodic_unchecked(a, a, t)
}

/// The two-term form `C_{A,B}(t) - conj(C_{B,A}(n-t))`, `0 ≤ t < n`.
pub fn negaperiodic_cross_definitional(a: &QSeq, b: &QSeq, t: usize) -> Result<Quat> {
    check_same_len(a, b)?;
    let n = a.len();
    if t >= n {
        return Err(Error::ShiftOutOfRange {
            shift: t as i64,
            max: n - 1,
        });
    }
    Ok(aperiodic_unchecked(a, b, t) - aperiodic_unchecked(b, a, n - t).conj())
}

/// Cross-correlation of `kind` at shift `t`.
pub fn cross(kind: CorrelationKind, a: &QSeq, b: &QSeq, t: i64) -> Result<Quat> {
    match kind {
        CorrelationKind::Aperiodic => {
            let t = usize::try_from(t).map_err(|_| Error::ShiftOutOfRange {
                shift: t,
                max: a.len(),
            })?;
            aperiodic_cross(a, b, t)
        }
        CorrelationKind::Periodic => periodic_cross(a, b, t),
        CorrelationKind::Negaperiodic => negaperiodic_cross(a, b, t),
    }
}

/// Correlation values for shifts `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrelationProfile {
    pub kind: CorrelationKind,
    pub values: Vec<Quat>,
}

impl CorrelationProfile {
    pub fn cross(kind: CorrelationKind, a: &QSeq, b: &QSeq) -> Result<Self> {
        check_same_len(a, b)?;
        let values = (0..a.len() as i64)
            .map(|t| cross(kind, a, b, t))
            .collect::<Result<_>>()?;
        Ok(CorrelationProfile { kind, values })
    }

    pub fn auto(kind: CorrelationKind, a: &QSeq) -> Self {
        Self::cross(kind, a, a).expect("autocorrelation of equal lengths")
    }

    /// The first nonzero value at a shift `t ≥ 1`.
    pub fn first_sidelobe(&self) -> Option<(usize, Quat)> {
        self.values
            .iter()
            .copied()
            .enumerate()
            .skip(1)
            .find(|(_, v)| !v.is_zero())
    }
}

/// Searches `1..n` for the first shift where `value(t)` is nonzero.
fn first_violation(n: usize, value: impl Fn(usize) -> Quat + Sync) -> Option<(usize, Quat)> {
    if n >= PARALLEL_THRESHOLD {
        (1..n)
            .into_par_iter()
            .map(|t| (t, value(t)))
            .find_first(|(_, v)| !v.is_zero())
    } else {
        (1..n).map(|t| (t, value(t))).find(|(_, v)| !v.is_zero())
    }
}

/// First shift `1 ≤ t < n` with `R_A(t) ≠ 0`.
pub fn perfection_violation(a: &QSeq) -> Option<(usize, Quat)> {
    first_violation(a.len(), |t| periodic_auto(a, t as i64))
}

/// First shift `1 ≤ t < n` with `R̂_A(t) ≠ 0`.
pub fn odd_perfection_violation(a: &QSeq) -> Option<(usize, Quat)> {
    first_violation(a.len(), |t| negaperiodic_auto(a, t as i64))
}

pub fn is_perfect(a: &QSeq) -> bool {
    perfection_violation(a).is_none()
}

pub fn is_odd_perfect(a: &QSeq) -> bool {
    odd_perfection_violation(a).is_none()
}

fn check_set(seqs: &[QSeq]) -> Result<usize> {
    let first = seqs.first().ok_or(Error::EmptySet)?;
    for s in &seqs[1..] {
        check_same_len(first, s)?;
    }
    Ok(first.len())
}

/// First shift `1 ≤ t < n` where the summed autocorrelations are nonzero.
pub fn complementarity_violation(
    seqs: &[QSeq],
    kind: CorrelationKind,
) -> Result<Option<(usize, Quat)>> {
    let n = check_set(seqs)?;
    let auto = |s: &QSeq, t: usize| match kind {
        CorrelationKind::Aperiodic => aperiodic_unchecked(s, s, t),
        CorrelationKind::Periodic => periodic_auto(s, t as i64),
        CorrelationKind::Negaperiodic => negaperiodic_auto(s, t as i64),
    };
    Ok(first_violation(n, |t| {
        seqs.iter().map(|s| auto(s, t)).sum()
    }))
}

pub fn is_complementary_set(seqs: &[QSeq], kind: CorrelationKind) -> Result<bool> {
    Ok(complementarity_violation(seqs, kind)?.is_none())
}

/// First pair `(i, j, t)` of distinct members with `R_{S_i,S_j}(t) ≠ 0`.
pub fn correlation_between_violation(seqs: &[QSeq]) -> Result<Option<(usize, usize, usize, Quat)>> {
    let n = check_set(seqs)?;
    for i in 0..seqs.len() {
        for j in 0..seqs.len() {
            if i == j {
                continue;
            }
            for t in 0..n {
                let v = periodic_unchecked(&seqs[i], &seqs[j], t as i64);
                if !v.is_zero() {
                    return Ok(Some((i, j, t, v)));
                }
            }
        }
    }
    Ok(None)
}

/// Every pair of distinct members has `R_{A,B}(t) = 0` for all `t`.
pub fn is_periodically_uncorrelated(seqs: &[QSeq]) -> Result<bool> {
    Ok(correlation_between_violation(seqs)?.is_none())
}

/// A dense `rows × cols` array of units, stored row-major.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<HurwitzUnit>,
}

impl QMatrix {
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<HurwitzUnit>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!("{rows}×{cols} has no entries")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries do not fill a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[QSeq]) -> Result<Self> {
        let cols = check_set(rows)?;
        let entries = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_row_major(rows.len(), cols, entries)
    }

    pub fn from_columns(columns: &[QSeq]) -> Result<Self> {
        let rows = check_set(columns)?;
        let entries = (0..rows)
            .flat_map(|r| columns.iter().map(move |c| c[r]))
            .collect();
        Self::from_row_major(rows, columns.len(), entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> HurwitzUnit {
        self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> QSeq {
        QSeq::new((0..self.rows).map(|r| self.get(r, c)).collect()).expect("rows ≥ 1")
    }

    pub fn columns(&self) -> Vec<QSeq> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row(&self, r: usize) -> QSeq {
        QSeq::new(self.entries[r * self.cols..(r + 1) * self.cols].to_vec()).expect("cols ≥ 1")
    }

    /// The rows concatenated left to right, top to bottom.
    pub fn to_sequence(&self) -> QSeq {
        QSeq::new(self.entries.clone()).expect("nonempty")
    }

    pub fn transpose(&self) -> QMatrix {
        let entries = (0..self.cols)
            .flat_map(|c| (0..self.rows).map(move |r| (r, c)))
            .map(|(r, c)| self.get(r, c))
            .collect();
        QMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }
}

impl std::fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| crate::catalog::format_sequence(&self.row(r)).unwrap_or_else(|_| "?".into()))
            .collect();
        write!(f, "QMatrix[{}]", rows.join(","))
    }
}

/// Why a matrix fails array orthogonality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OrthogonalityViolation {
    /// The columns' summed periodic autocorrelation is nonzero at `shift`.
    NotComplementary { shift: usize, value: Quat },
    /// Columns `left` and `right` correlate at `shift`.
    Correlated {
        left: usize,
        right: usize,
        shift: usize,
        value: Quat,
    },
}

/// Checks that the columns are periodic complementary and pairwise
/// periodically uncorrelated. The row count must be a multiple of the column
/// count.
pub fn array_orthogonality_violation(m: &QMatrix) -> Result<Option<OrthogonalityViolation>> {
    if !m.rows.is_multiple_of(m.cols) {
        return Err(Error::Dimension(format!(
            "column length {} is not a multiple of the column count {}",
            m.rows, m.cols
        )));
    }
    let columns = m.columns();
    if let Some((shift, value)) = complementarity_violation(&columns, CorrelationKind::Periodic)? {
        return Ok(Some(OrthogonalityViolation::NotComplementary {
            shift,
            value,
        }));
    }
    // R_{X,Y}(t) = conj(R_{Y,X}(-t)), so ordered pairs with left < right suffice
    let pairs: Vec<(usize, usize)> = (0..m.cols)
        .flat_map(|i| (i + 1..m.cols).map(move |j| (i, j)))
        .collect();
    let found = pairs.into_par_iter().find_map_first(|(i, j)| {
        (0..m.rows).find_map(|t| {
            let value = periodic_unchecked(&columns[i], &columns[j], t as i64);
            (!value.is_zero()).then_some(OrthogonalityViolation::Correlated {
                left: i,
                right: j,
                shift: t,
                value,
            })
        })
    });
    Ok(found)
}

pub fn has_array_orthogonality(m: &QMatrix) -> Result<bool> {
    Ok(array_orthogonality_violation(m)?.is_none())
}

/// `Σ_r Σ_s a_{r,s} conj(a_{r+t mod n, s+t' mod m})` at the 2-D shift `(t, t')`.
pub fn array_autocorrelation(m: &QMatrix, t: usize, t2: usize) -> Quat {
    let mut sum = Quat::ZERO;
    for r in 0..m.rows {
        let rr = (r + t) % m.rows;
        for s in 0..m.cols {
            sum += term(m.get(r, s), m.get(rr, (s + t2) % m.cols));
        }
    }
    sum
}

/// First nontrivial 2-D shift with a nonzero array autocorrelation. The
/// column shift wraps modulo the column count.
pub fn perfect_array_violation(m: &QMatrix) -> Option<((usize, usize), Quat)> {
    (0..m.rows)
        .flat_map(|t| (0..m.cols).map(move |t2| (t, t2)))
        .skip(1)
        .map(|(t, t2)| ((t, t2), array_autocorrelation(m, t, t2)))
        .find(|(_, v)| !v.is_zero())
}

pub fn is_perfect_array(m: &QMatrix) -> bool {
    perfect_array_violation(m).is_none()
}

/// Integer correlations of `±1` sequences, used on hot paths where the
/// quaternion table would be wasted work.
pub(crate) mod signs {
    pub fn periodic(a: &[i8], b: &[i8], t: usize) -> i64 {
        let n = a.len();
        let s = t % n;
        let mut sum = 0i64;
        for (r, &x) in a.iter().enumerate() {
            let idx = r + s;
            let idx = if idx >= n { idx - n } else { idx };
            sum += (x * b[idx]) as i64;
        }
        sum
    }

    pub fn negaperiodic(a: &[i8], b: &[i8], t: usize) -> i64 {
        let n = a.len();
        let wraps = (t / n) % 2;
        let s = t % n;
        let mut sum = 0i64;
        for (r, &x) in a.iter().enumerate() {
            let idx = r + s;
            sum += if idx >= n {
                -((x * b[idx - n]) as i64)
            } else {
                (x * b[idx]) as i64
            };
        }
        if wraps == 1 {
            -sum
        } else {
            sum
        }
    }

    pub fn aperiodic(a: &[i8], b: &[i8], t: usize) -> i64 {
        a.iter().zip(&b[t..]).map(|(&x, &y)| (x * y) as i64).sum()
    }
}
