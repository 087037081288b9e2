//! Finite quaternion sequences and the structural operations the
//! constructions are built from.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::{Alphabet, HurwitzUnit, Quat};

/// A nonempty, immutable sequence of Hurwitz units. `±1` sequences are the
/// special case where every entry is real.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<HurwitzUnit>", into = "Vec<HurwitzUnit>")]
pub struct QSeq(Vec<HurwitzUnit>);

/// The four symmetry predicates, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymmetryClass {
    pub symmetric: bool,
    pub palindromic: bool,
    pub antipalindromic: bool,
    pub antisymmetric: bool,
}

impl QSeq {
    pub fn new(entries: Vec<HurwitzUnit>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(QSeq(entries))
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        Self::new(signs.iter().map(|&s| HurwitzUnit::from_sign(s)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[HurwitzUnit] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HurwitzUnit> {
        self.0.iter()
    }

    pub fn into_entries(self) -> Vec<HurwitzUnit> {
        self.0
    }

    /// The entries as `±1` integers, or the index of the first non-real entry.
    pub fn signs(&self) -> Result<Vec<i8>> {
        self.0
            .iter()
            .enumerate()
            .map(|(index, u)| u.sign().ok_or(Error::NotPlusMinus { index }))
            .collect()
    }

    pub fn is_plus_minus(&self) -> bool {
        self.0.iter().all(|u| u.sign().is_some())
    }

    pub fn is_over(&self, alphabet: Alphabet) -> bool {
        self.0.iter().all(|&u| alphabet.contains(u))
    }

    /// Index of the first entry outside `alphabet`.
    pub fn first_outside(&self, alphabet: Alphabet) -> Option<usize> {
        self.0.iter().position(|&u| !alphabet.contains(u))
    }

    /// `count` applications of `[a_0, …, a_{n-1}] ↦ [a_{n-1}, a_0, …, a_{n-2}]`.
    pub fn cyclic_shift(&self, count: usize) -> QSeq {
        let mut v = self.0.clone();
        v.rotate_right(count % self.len());
        QSeq(v)
    }

    /// `count` applications of `[a_0, …, a_{n-1}] ↦ [-a_{n-1}, a_0, …, a_{n-2}]`.
    /// The map has period `2n`; `n` applications negate every entry.
    pub fn negacyclic_shift(&self, count: usize) -> QSeq {
        let n = self.len();
        let count = count % (2 * n);
        let (wraps, rest) = (count / n, count % n);
        let mut v = self.0.clone();
        // entries that wrap past the end once more pick up one extra sign
        for u in &mut v[n - rest..] {
            *u = -*u;
        }
        v.rotate_right(rest);
        if wraps == 1 {
            for u in &mut v {
                *u = -*u;
            }
        }
        QSeq(v)
    }

    /// Entry `r` multiplied by `(-1)^r`.
    pub fn alternate_negate(&self) -> QSeq {
        QSeq(
            self.0
                .iter()
                .enumerate()
                .map(|(r, &u)| if r % 2 == 1 { -u } else { u })
                .collect(),
        )
    }

    pub fn negate(&self) -> QSeq {
        QSeq(self.0.iter().map(|&u| -u).collect())
    }

    /// `[X; X]`.
    pub fn doub(&self) -> QSeq {
        let mut v = self.0.clone();
        v.extend_from_slice(&self.0);
        QSeq(v)
    }

    /// `[X; -X]`.
    pub fn negadoub(&self) -> QSeq {
        let mut v = self.0.clone();
        v.extend(self.0.iter().map(|&u| -u));
        QSeq(v)
    }

    /// `[x_0, y_0, x_1, y_1, …]`.
    pub fn interleave(&self, other: &QSeq) -> Result<QSeq> {
        check_same_len(self, other)?;
        Ok(QSeq(
            self.0
                .iter()
                .zip(&other.0)
                .flat_map(|(&x, &y)| [x, y])
                .collect(),
        ))
    }

    /// Splits into the even-indexed and odd-indexed subsequences.
    pub fn deinterleave(&self) -> Result<(QSeq, QSeq)> {
        if !self.len().is_multiple_of(2) {
            return Err(Error::OddLength(self.len()));
        }
        let even = self.0.iter().step_by(2).copied().collect();
        let odd = self.0.iter().skip(1).step_by(2).copied().collect();
        Ok((QSeq(even), QSeq(odd)))
    }

    pub fn reverse(&self) -> QSeq {
        QSeq(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &QSeq) -> QSeq {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        QSeq(v)
    }

    /// Concatenates several blocks in order.
    pub fn concat_all<'a>(blocks: impl IntoIterator<Item = &'a QSeq>) -> Result<QSeq> {
        QSeq::new(
            blocks
                .into_iter()
                .flat_map(|b| b.0.iter().copied())
                .collect(),
        )
    }

    /// Left-multiplies every entry by `u`.
    pub fn scalar_premul(&self, u: HurwitzUnit) -> QSeq {
        QSeq(self.0.iter().map(|&x| u * x).collect())
    }

    pub fn rowsum(&self) -> Quat {
        self.0.iter().map(|u| u.value()).sum()
    }

    /// `a_t = a_{n-t}` for `1 ≤ t < n`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (1..n).all(|t| self.0[t] == self.0[n - t])
    }

    /// `a_t = a_{n-t-1}` for all `t`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.len();
        (0..n).all(|t| self.0[t] == self.0[n - t - 1])
    }

    /// `a_t = -a_{n-t-1}` for `0 ≤ t < (n-1)/2`.
    pub fn is_antipalindromic(&self) -> bool {
        let n = self.len();
        // t < (n-1)/2 over the rationals, i.e. 2t < n-1
        (0..n)
            .take_while(|&t| 2 * t + 1 < n)
            .all(|t| self.0[t] == -self.0[n - t - 1])
    }

    /// `a_t = -a_{n-t}` for `1 ≤ t < n/2`.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.len();
        (1..n)
            .take_while(|&t| 2 * t < n)
            .all(|t| self.0[t] == -self.0[n - t])
    }

    pub fn symmetry(&self) -> SymmetryClass {
        SymmetryClass {
            symmetric: self.is_symmetric(),
            palindromic: self.is_palindromic(),
            antipalindromic: self.is_antipalindromic(),
            antisymmetric: self.is_antisymmetric(),
        }
    }
}

pub(crate) fn check_same_len(a: &QSeq, b: &QSeq) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

impl Index<usize> for QSeq {
    type Output = HurwitzUnit;

    fn index(&self, i: usize) -> &HurwitzUnit {
        &self.0[i]
    }
}

impl<'a> IntoIterator for &'a QSeq {
    type Item = &'a HurwitzUnit;
    type IntoIter = std::slice::Iter<'a, HurwitzUnit>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl TryFrom<Vec<HurwitzUnit>> for QSeq {
    type Error = Error;

    fn try_from(v: Vec<HurwitzUnit>) -> Result<Self> {
        QSeq::new(v)
    }
}

impl From<QSeq> for Vec<HurwitzUnit> {
    fn from(s: QSeq) -> Self {
        s.0
    }
}

impl fmt::Debug for QSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match crate::catalog::format_sequence(self) {
            Ok(text) => write!(f, "QSeq({text})"),
            Err(_) => f.debug_tuple("QSeq").field(&self.0).finish(),
        }
    }
}

/// An ordered quadruple `(A, B, C, D)` of equal-length `±1` sequences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Quad {
    members: [QSeq; 4],
}

impl Quad {
    pub fn new(a: QSeq, b: QSeq, c: QSeq, d: QSeq) -> Result<Self> {
        Self::from_array([a, b, c, d])
    }

    pub fn from_array(members: [QSeq; 4]) -> Result<Self> {
        for m in &members[1..] {
            check_same_len(&members[0], m)?;
        }
        for m in &members {
            m.signs()?;
        }
        Ok(Quad { members })
    }

    pub fn from_signs(members: [&[i8]; 4]) -> Result<Self> {
        let [a, b, c, d] = members;
        Self::new(
            QSeq::from_signs(a)?,
            QSeq::from_signs(b)?,
            QSeq::from_signs(c)?,
            QSeq::from_signs(d)?,
        )
    }

    pub fn len(&self) -> usize {
        self.members[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn members(&self) -> &[QSeq; 4] {
        &self.members
    }

    pub fn a(&self) -> &QSeq {
        &self.members[0]
    }

    pub fn b(&self) -> &QSeq {
        &self.members[1]
    }

    pub fn c(&self) -> &QSeq {
        &self.members[2]
    }

    pub fn d(&self) -> &QSeq {
        &self.members[3]
    }

    /// Applies `f` to each member and rebuilds the quad.
    pub fn map(&self, mut f: impl FnMut(&QSeq) -> QSeq) -> Result<Quad> {
        let [a, b, c, d] = &self.members;
        Quad::new(f(a), f(b), f(c), f(d))
    }

    /// Member entries as `±1` integers.
    pub fn sign_rows(&self) -> [Vec<i8>; 4] {
        self.members
            .clone()
            .map(|m| m.signs().expect("quad members are ±1"))
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad({})", crate::catalog::format_quad(self))
    }
}
