//! Exhaustive enumeration at small lengths.
//!
//! Results come out in lexicographic order over the canonical unit order
//! (`+` before `-` for `±1` sequences; quads and pairs compare member by
//! member). Work is split across threads by leading entry and merged in
//! order, so output does not depend on scheduling.
//!
//! Every search is priced in work units before it starts and refused when
//! the price exceeds [`WORK_BUDGET`]:
//!
//! | kind | units |
//! |------|-------|
//! | sequences | `|alphabet|^free` |
//! | pairs | `N²`, `N` = candidate members |
//! | quads | `N³` |
//!
//! `free` is the number of entries not fixed by the symmetry constraint.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::designs::{
    has_q8_property, is_golay_pair, is_nega_williamson, is_williamson, is_williamson_type,
    NegaSymmetry,
};
use crate::error::{Error, Result};
use crate::quaternion::{Alphabet, HurwitzUnit, Quat};
use crate::sequence::{QSeq, Quad};

pub const WORK_BUDGET: u128 = 1 << 24;

/// Longest `±1` member a quad or pair search will consider.
const MAX_MEMBER_LEN: usize = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SearchKind {
    Perfect,
    OddPerfect,
    Golay,
    Williamson,
    WilliamsonType,
    NegaWilliamson,
    PeriodicComplementary,
}

impl SearchKind {
    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Perfect => "perfect",
            SearchKind::OddPerfect => "odd-perfect",
            SearchKind::Golay => "golay",
            SearchKind::Williamson => "williamson",
            SearchKind::WilliamsonType => "williamson-type",
            SearchKind::NegaWilliamson => "nega-williamson",
            SearchKind::PeriodicComplementary => "periodic-complementary",
        }
    }

    fn is_sequence(self) -> bool {
        matches!(self, SearchKind::Perfect | SearchKind::OddPerfect)
    }
}

/// Constraint applied to every sequence (or every member).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Symmetry {
    Any,
    Symmetric,
    Palindromic,
    Antipalindromic,
}

impl Symmetry {
    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Any => "any",
            Symmetry::Symmetric => "symmetric",
            Symmetry::Palindromic => "palindromic",
            Symmetry::Antipalindromic => "antipalindromic",
        }
    }

    /// Positions that are chosen freely; the rest are determined.
    fn free_positions(self, n: usize) -> usize {
        match self {
            Symmetry::Any => n,
            Symmetry::Symmetric => n / 2 + 1,
            Symmetry::Palindromic | Symmetry::Antipalindromic => n.div_ceil(2),
        }
    }

    /// Fills entries `free..n` from the free prefix.
    fn complete(self, v: &mut [HurwitzUnit], free: usize) {
        let n = v.len();
        for r in free..n {
            v[r] = match self {
                Symmetry::Any => unreachable!("no determined entries"),
                Symmetry::Symmetric => v[n - r],
                Symmetry::Palindromic => v[n - 1 - r],
                Symmetry::Antipalindromic => -v[n - 1 - r],
            };
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    pub kind: SearchKind,
    pub length: usize,
    /// Entry alphabet for sequence kinds; pair and quad kinds are `±1`.
    pub alphabet: Alphabet,
    pub symmetry: Symmetry,
    /// Quads only: require the Q8-property.
    pub q8: bool,
    /// Keep at most this many results; the count stays exact.
    pub cap: Option<usize>,
}

impl SearchSpec {
    pub fn sequences(kind: SearchKind, length: usize, alphabet: Alphabet) -> Self {
        SearchSpec {
            kind,
            length,
            alphabet,
            symmetry: Symmetry::Any,
            q8: false,
            cap: None,
        }
    }

    pub fn quads(kind: SearchKind, length: usize) -> Self {
        SearchSpec {
            kind,
            length,
            alphabet: Alphabet::PlusMinus,
            symmetry: if kind == SearchKind::Williamson {
                Symmetry::Symmetric
            } else {
                Symmetry::Any
            },
            q8: false,
            cap: None,
        }
    }

    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn with_q8(mut self, q8: bool) -> Self {
        self.q8 = q8;
        self
    }

    pub fn with_cap(mut self, cap: Option<usize>) -> Self {
        self.cap = cap;
        self
    }

    fn validate(&self) -> Result<()> {
        let refuse = |why: String| Err(Error::SearchBounds(why));
        if self.length == 0 {
            return refuse("length must be positive".into());
        }
        if self.kind.is_sequence() {
            if self.q8 {
                return refuse("the Q8-property applies to quads only".into());
            }
        } else {
            if self.alphabet != Alphabet::PlusMinus {
                return refuse(format!("{} members are ±1 sequences", self.kind.name()));
            }
            if self.kind == SearchKind::Williamson
                && !matches!(self.symmetry, Symmetry::Any | Symmetry::Symmetric)
            {
                return refuse("Williamson members are symmetric".into());
            }
            if self.q8 && self.kind == SearchKind::Golay {
                return refuse("the Q8-property applies to quads only".into());
            }
            if self.length > MAX_MEMBER_LEN {
                return refuse(format!(
                    "member length {} exceeds {MAX_MEMBER_LEN}",
                    self.length
                ));
            }
        }
        let work = self.work();
        if work > WORK_BUDGET {
            return refuse(format!(
                "{} at length {} needs {work} work units, budget is {WORK_BUDGET}",
                self.kind.name(),
                self.length
            ));
        }
        Ok(())
    }

    fn member_symmetry(&self) -> Symmetry {
        if self.kind == SearchKind::Williamson {
            Symmetry::Symmetric
        } else {
            self.symmetry
        }
    }

    /// Price of the search in work units.
    pub fn work(&self) -> u128 {
        let free = self.member_symmetry().free_positions(self.length) as u32;
        let size = self.alphabet.units().len() as u128;
        let members = size.checked_pow(free).unwrap_or(u128::MAX);
        match self.kind {
            SearchKind::Perfect | SearchKind::OddPerfect => members,
            SearchKind::Golay => members.saturating_mul(members),
            _ => members.saturating_mul(members).saturating_mul(members),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SearchItem {
    Sequence(QSeq),
    Pair(QSeq, QSeq),
    Quad(Quad),
}

impl fmt::Display for SearchItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::catalog::{format_quad, format_sequence};
        let seq = |s: &QSeq| format_sequence(s).unwrap_or_else(|_| format!("{s:?}"));
        match self {
            SearchItem::Sequence(s) => f.write_str(&seq(s)),
            SearchItem::Pair(a, b) => write!(f, "{},{}", seq(a), seq(b)),
            SearchItem::Quad(q) => f.write_str(&format_quad(q)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub count: u64,
    pub results: Vec<SearchItem>,
    pub truncated: bool,
}

/// Exhaustive search. Refuses specs whose price exceeds the budget.
pub fn enumerate(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let cap = spec.cap.unwrap_or(usize::MAX);
    let chunks: Vec<(u64, Vec<SearchItem>)> = match spec.kind {
        SearchKind::Perfect | SearchKind::OddPerfect => sequence_search(spec, cap),
        SearchKind::Golay => pair_search(spec, cap),
        _ => quad_search(spec, cap),
    };
    let count = chunks.iter().map(|(c, _)| c).sum();
    let mut results: Vec<SearchItem> = chunks.into_iter().flat_map(|(_, r)| r).collect();
    let truncated = (count as u128) > (results.len().min(cap) as u128);
    results.truncate(cap);
    Ok(SearchOutcome {
        count,
        results,
        truncated,
    })
}

/// Raw number of Williamson quads with the Q8-property at even length `n`.
pub fn count_williamson_q8(n: usize) -> Result<u64> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength(n));
    }
    Ok(enumerate(&SearchSpec::quads(SearchKind::Williamson, n).with_q8(true))?.count)
}

fn autocorrelation_vanishes(v: &[HurwitzUnit], t: usize, nega: bool) -> bool {
    let n = v.len();
    let mut sum = Quat::ZERO;
    for r in 0..n {
        let idx = r + t;
        let term = v[r] * v[if idx >= n { idx - n } else { idx }].conj();
        let term = if nega && idx >= n { -term } else { term };
        sum += term.value();
    }
    sum.is_zero()
}

fn sequence_search(spec: &SearchSpec, cap: usize) -> Vec<(u64, Vec<SearchItem>)> {
    let n = spec.length;
    let symmetry = spec.symmetry;
    let units: Vec<HurwitzUnit> = spec.alphabet.units().to_vec();
    let size = units.len();
    let free = symmetry.free_positions(n);
    let nega = spec.kind == SearchKind::OddPerfect;
    // chunk by the first free entry, or the first two for small alphabets
    let head = if free >= 2 && size < 8 { 2 } else { 1 }.min(free);
    let tail = free - head;
    let tail_count = size.pow(tail as u32);
    (0..size.pow(head as u32))
        .into_par_iter()
        .map(|prefix| {
            let mut v = vec![HurwitzUnit::ONE; n];
            let mut digits = vec![0usize; free];
            let mut p = prefix;
            for d in (0..head).rev() {
                digits[d] = p % size;
                p /= size;
            }
            let mut count = 0u64;
            let mut found = Vec::new();
            for _ in 0..tail_count {
                for (slot, &d) in v.iter_mut().zip(&digits) {
                    *slot = units[d];
                }
                if free < n {
                    symmetry.complete(&mut v, free);
                }
                if (1..n).all(|t| autocorrelation_vanishes(&v, t, nega)) {
                    count += 1;
                    if found.len() < cap {
                        found.push(SearchItem::Sequence(
                            QSeq::new(v.clone()).expect("nonempty"),
                        ));
                    }
                }
                // odometer over the tail digits, last position fastest
                for d in (head..free).rev() {
                    digits[d] += 1;
                    if digits[d] < size {
                        break;
                    }
                    digits[d] = 0;
                }
            }
            (count, found)
        })
        .collect()
}

/// A `±1` member packed as a bit mask (bit `n-1-r` set when entry `r` is
/// `-1`, so ascending masks are lexicographic) with its aperiodic profile.
struct Member {
    mask: u32,
    aperiodic: Vec<i32>,
}

/// `C(t) = (n - t) - 2·popcount` of the disagreements between the sequence
/// and itself shifted by `t`.
fn aperiodic_profile(mask: u32, n: usize) -> Vec<i32> {
    (0..n)
        .map(|t| {
            let low = if n - t >= 32 {
                u32::MAX
            } else {
                (1u32 << (n - t)) - 1
            };
            let diff = ((mask ^ (mask >> t)) & low).count_ones() as i32;
            (n - t) as i32 - 2 * diff
        })
        .collect()
}

fn mask_to_signs(mask: u32, n: usize) -> Vec<i8> {
    (0..n)
        .map(|r| if mask >> (n - 1 - r) & 1 == 1 { -1 } else { 1 })
        .collect()
}

fn mask_to_seq(mask: u32, n: usize) -> QSeq {
    QSeq::from_signs(&mask_to_signs(mask, n)).expect("nonempty ±1")
}

fn members(n: usize, symmetry: Symmetry) -> Vec<Member> {
    let free = symmetry.free_positions(n);
    let mut masks: Vec<u32> = (0..1u32 << free)
        .filter_map(|prefix| {
            let mut signs = vec![1i8; n];
            for (r, s) in signs.iter_mut().enumerate().take(free) {
                *s = if prefix >> (free - 1 - r) & 1 == 1 {
                    -1
                } else {
                    1
                };
            }
            for r in free..n {
                signs[r] = match symmetry {
                    Symmetry::Any => unreachable!("no determined entries"),
                    Symmetry::Symmetric => signs[n - r],
                    Symmetry::Palindromic => signs[n - 1 - r],
                    Symmetry::Antipalindromic => -signs[n - 1 - r],
                };
            }
            let seq = QSeq::from_signs(&signs).expect("nonempty");
            let ok = match symmetry {
                Symmetry::Any => true,
                Symmetry::Symmetric => seq.is_symmetric(),
                Symmetry::Palindromic => seq.is_palindromic(),
                Symmetry::Antipalindromic => seq.is_antipalindromic(),
            };
            ok.then(|| signs.iter().fold(0u32, |m, &s| (m << 1) | u32::from(s < 0)))
        })
        .collect();
    masks.sort_unstable();
    masks.dedup();
    masks
        .into_iter()
        .map(|mask| Member {
            mask,
            aperiodic: aperiodic_profile(mask, n),
        })
        .collect()
}

/// Correlation profile for shifts `1..n` derived from the aperiodic one:
/// periodic `C(t) + C(n-t)`, negaperiodic `C(t) - C(n-t)`, aperiodic `C(t)`.
fn derived_profile(m: &Member, kind: SearchKind) -> Vec<i32> {
    let c = &m.aperiodic;
    let n = c.len();
    (1..n)
        .map(|t| match kind {
            SearchKind::Golay => c[t],
            SearchKind::NegaWilliamson => c[t] - c[n - t],
            _ => c[t] + c[n - t],
        })
        .collect()
}

fn pair_search(spec: &SearchSpec, cap: usize) -> Vec<(u64, Vec<SearchItem>)> {
    let n = spec.length;
    let pool = members(n, spec.symmetry);
    let profiles: Vec<Vec<i32>> = pool.iter().map(|m| derived_profile(m, spec.kind)).collect();
    let mut by_profile: HashMap<&[i32], Vec<usize>> = HashMap::new();
    for (i, p) in profiles.iter().enumerate() {
        by_profile.entry(p.as_slice()).or_default().push(i);
    }
    (0..pool.len())
        .into_par_iter()
        .map(|ai| {
            let want: Vec<i32> = profiles[ai].iter().map(|v| -v).collect();
            let mut count = 0u64;
            let mut found = Vec::new();
            for &bi in by_profile
                .get(want.as_slice())
                .map(Vec::as_slice)
                .unwrap_or(&[])
            {
                let (a, b) = (mask_to_seq(pool[ai].mask, n), mask_to_seq(pool[bi].mask, n));
                debug_assert!(is_golay_pair(&a, &b).unwrap());
                count += 1;
                if found.len() < cap {
                    found.push(SearchItem::Pair(a, b));
                }
            }
            (count, found)
        })
        .collect()
}

fn quad_search(spec: &SearchSpec, cap: usize) -> Vec<(u64, Vec<SearchItem>)> {
    let n = spec.length;
    let kind = spec.kind;
    let pool = members(n, spec.member_symmetry());
    let profiles: Vec<Vec<i32>> = pool.iter().map(|m| derived_profile(m, kind)).collect();
    let mut by_profile: HashMap<&[i32], Vec<usize>> = HashMap::new();
    for (i, p) in profiles.iter().enumerate() {
        by_profile.entry(p.as_slice()).or_default().push(i);
    }
    let by_mask: HashMap<u32, usize> = pool.iter().enumerate().map(|(i, m)| (m.mask, i)).collect();
    let accept = |q: &Quad| -> bool {
        match kind {
            SearchKind::WilliamsonType => is_williamson_type(q),
            SearchKind::Williamson => {
                debug_assert!(is_williamson(q));
                true
            }
            SearchKind::NegaWilliamson => {
                debug_assert!(is_nega_williamson(q, NegaSymmetry::Any));
                true
            }
            _ => true,
        }
    };
    let len = pool.len();
    (0..len)
        .into_par_iter()
        .map(|ai| {
            let mut count = 0u64;
            let mut found = Vec::new();
            let mut want = vec![0i32; n.saturating_sub(1)];
            for bi in 0..len {
                for ci in 0..len {
                    for (t, w) in want.iter_mut().enumerate() {
                        *w = -(profiles[ai][t] + profiles[bi][t] + profiles[ci][t]);
                    }
                    let q8_match: [usize; 1];
                    let candidates: &[usize] = if spec.q8 {
                        // a_r b_r c_r d_r = 1 fixes d
                        let d = pool[ai].mask ^ pool[bi].mask ^ pool[ci].mask;
                        match by_mask.get(&d) {
                            Some(&di) if profiles[di] == want => {
                                q8_match = [di];
                                &q8_match
                            }
                            _ => &[],
                        }
                    } else {
                        by_profile
                            .get(want.as_slice())
                            .map(Vec::as_slice)
                            .unwrap_or(&[])
                    };
                    for &di in candidates {
                        let q = Quad::from_array(
                            [ai, bi, ci, di].map(|i| mask_to_seq(pool[i].mask, n)),
                        )
                        .expect("equal-length ±1 members");
                        if !accept(&q) {
                            continue;
                        }
                        debug_assert!(!spec.q8 || has_q8_property(&q));
                        count += 1;
                        if found.len() < cap {
                            found.push(SearchItem::Quad(q));
                        }
                    }
                }
            }
            (count, found)
        })
        .collect()
}
