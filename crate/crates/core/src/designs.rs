//! Design predicates on `±1` pairs and quads, and the entrywise bijection
//! between `±1` quads and `Q+` sequences.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::correlation::signs;
use crate::error::{Error, Result};
use crate::quaternion::{Alphabet, HurwitzUnit};
use crate::sequence::{check_same_len, QSeq, Quad};

/// Symmetry class required of every member of a nega-Williamson quad.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NegaSymmetry {
    Any,
    Palindromic,
    Antipalindromic,
}

impl NegaSymmetry {
    pub fn name(self) -> &'static str {
        match self {
            NegaSymmetry::Any => "any",
            NegaSymmetry::Palindromic => "palindromic",
            NegaSymmetry::Antipalindromic => "antipalindromic",
        }
    }

    pub fn admits(self, s: &QSeq) -> bool {
        match self {
            NegaSymmetry::Any => true,
            NegaSymmetry::Palindromic => s.is_palindromic(),
            NegaSymmetry::Antipalindromic => s.is_antipalindromic(),
        }
    }
}

/// The first reason a candidate fails a design predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DesignViolation {
    /// Member `member` lacks the required symmetry.
    Symmetry {
        member: usize,
        required: &'static str,
    },
    /// The summed autocorrelation is `value` at `shift`.
    Complementarity { shift: usize, value: i64 },
    /// `R_{X,Y}(shift) ≠ R_{Y,X}(shift)` for members `left`, `right`.
    Amicability {
        left: usize,
        right: usize,
        shift: usize,
    },
    /// `a_r b_r c_r d_r = -1` at `index`.
    Q8Property { index: usize },
}

impl fmt::Display for DesignViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignViolation::Symmetry { member, required } => {
                write!(f, "member {member} is not {required}")
            }
            DesignViolation::Complementarity { shift, value } => {
                write!(f, "correlation sum at t = {shift} is {value}")
            }
            DesignViolation::Amicability { left, right, shift } => {
                write!(
                    f,
                    "members {left} and {right} are not amicable at t = {shift}"
                )
            }
            DesignViolation::Q8Property { index } => {
                write!(f, "entry product at r = {index} is -1")
            }
        }
    }
}

fn sum_violation(
    rows: &[Vec<i8>],
    kernel: impl Fn(&[i8], &[i8], usize) -> i64,
) -> Option<DesignViolation> {
    let n = rows[0].len();
    (1..n).find_map(|t| {
        let value: i64 = rows.iter().map(|r| kernel(r, r, t)).sum();
        (value != 0).then_some(DesignViolation::Complementarity { shift: t, value })
    })
}

/// First failing shift of `C_A(t) + C_B(t) = 0`.
pub fn golay_violation(a: &QSeq, b: &QSeq) -> Result<Option<DesignViolation>> {
    check_same_len(a, b)?;
    Ok(sum_violation(&[a.signs()?, b.signs()?], signs::aperiodic))
}

pub fn is_golay_pair(a: &QSeq, b: &QSeq) -> Result<bool> {
    Ok(golay_violation(a, b)?.is_none())
}

pub(crate) fn rows_periodic_violation(rows: &[Vec<i8>]) -> Option<DesignViolation> {
    sum_violation(rows, signs::periodic)
}

pub(crate) fn rows_negaperiodic_violation(rows: &[Vec<i8>]) -> Option<DesignViolation> {
    sum_violation(rows, signs::negaperiodic)
}

fn symmetry_violation(
    q: &Quad,
    required: &'static str,
    ok: impl Fn(&QSeq) -> bool,
) -> Option<DesignViolation> {
    q.members()
        .iter()
        .position(|m| !ok(m))
        .map(|member| DesignViolation::Symmetry { member, required })
}

/// Symmetric members, periodic complementary.
pub fn williamson_violation(q: &Quad) -> Option<DesignViolation> {
    symmetry_violation(q, "symmetric", QSeq::is_symmetric)
        .or_else(|| rows_periodic_violation(&q.sign_rows()))
}

pub fn is_williamson(q: &Quad) -> bool {
    williamson_violation(q).is_none()
}

/// Negacomplementary, every member in the `require` class.
pub fn nega_williamson_violation(q: &Quad, require: NegaSymmetry) -> Option<DesignViolation> {
    symmetry_violation(q, require.name(), |m| require.admits(m))
        .or_else(|| rows_negaperiodic_violation(&q.sign_rows()))
}

pub fn is_nega_williamson(q: &Quad, require: NegaSymmetry) -> bool {
    nega_williamson_violation(q, require).is_none()
}

pub fn q8_property_violation(q: &Quad) -> Option<DesignViolation> {
    let [a, b, c, d] = q.sign_rows();
    (0..q.len())
        .find(|&r| a[r] * b[r] * c[r] * d[r] != 1)
        .map(|index| DesignViolation::Q8Property { index })
}

pub fn has_q8_property(q: &Quad) -> bool {
    q8_property_violation(q).is_none()
}

pub(crate) fn rows_amicability_violation(rows: &[Vec<i8>]) -> Option<DesignViolation> {
    let n = rows[0].len();
    for left in 0..rows.len() {
        for right in left + 1..rows.len() {
            for shift in 1..n {
                if signs::periodic(&rows[left], &rows[right], shift)
                    != signs::periodic(&rows[right], &rows[left], shift)
                {
                    return Some(DesignViolation::Amicability { left, right, shift });
                }
            }
        }
    }
    None
}

/// Periodic complementary and pairwise amicable.
pub fn williamson_type_violation(q: &Quad) -> Option<DesignViolation> {
    let rows = q.sign_rows();
    rows_periodic_violation(&rows).or_else(|| rows_amicability_violation(&rows))
}

pub fn is_williamson_type(q: &Quad) -> bool {
    williamson_type_violation(q).is_none()
}

/// Sign patterns of the table columns `1, i, j, k, q, qi, qj, qk`; the other
/// eight columns follow from `(-a, -b, -c, -d) ↦ -s`.
const PATTERNS: [[i8; 4]; 8] = [
    [-1, -1, -1, -1],
    [1, -1, -1, 1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, -1],
    [1, 1, -1, 1],
    [1, 1, 1, -1],
    [1, -1, 1, 1],
];

struct Correspondence {
    /// Indexed by the sign pattern, bit `3 - m` set when member `m` is `-1`.
    encode: [HurwitzUnit; 16],
}

fn pattern_index(signs: [i8; 4]) -> usize {
    signs
        .iter()
        .fold(0, |acc, &s| (acc << 1) | usize::from(s < 0))
}

fn table() -> &'static Correspondence {
    static TABLE: OnceLock<Correspondence> = OnceLock::new();
    TABLE.get_or_init(|| {
        let q = HurwitzUnit::Q;
        let images = [
            HurwitzUnit::ONE,
            HurwitzUnit::I,
            HurwitzUnit::J,
            HurwitzUnit::K,
            q,
            q * HurwitzUnit::I,
            q * HurwitzUnit::J,
            q * HurwitzUnit::K,
        ];
        let mut encode = [HurwitzUnit::ONE; 16];
        let mut seen = [false; 16];
        for (pattern, image) in PATTERNS.iter().zip(images) {
            let neg = pattern.map(|s| -s);
            for (p, u) in [(*pattern, image), (neg, -image)] {
                let idx = pattern_index(p);
                assert!(!seen[idx], "correspondence table repeats a sign pattern");
                seen[idx] = true;
                encode[idx] = u;
            }
        }
        let mut images: Vec<_> = encode.to_vec();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 16, "correspondence table is not injective");
        assert!(
            images.iter().all(|u| u.is_q_plus()),
            "correspondence leaves Q+"
        );
        Correspondence { encode }
    })
}

/// Image of one column `(a_r, b_r, c_r, d_r)`.
pub fn encode_entry(signs: [i8; 4]) -> HurwitzUnit {
    table().encode[pattern_index(signs)]
}

/// Preimage of one `Q+` entry.
pub fn decode_entry(u: HurwitzUnit) -> Option<[i8; 4]> {
    let idx = table().encode.iter().position(|&v| v == u)?;
    Some(std::array::from_fn(|m| {
        if idx & (8 >> m) != 0 {
            -1
        } else {
            1
        }
    }))
}

/// Result of encoding a quad, with the precondition outcome kept separate
/// so the map can be used as a plain bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Encoding {
    pub sequence: QSeq,
    pub williamson_type: bool,
}

/// The entrywise map, without checking any design property.
pub fn encode_entrywise(q: &Quad) -> QSeq {
    let [a, b, c, d] = q.sign_rows();
    let entries = (0..q.len())
        .map(|r| encode_entry([a[r], b[r], c[r], d[r]]))
        .collect();
    QSeq::new(entries).expect("quads are nonempty")
}

pub fn encode_quad(q: &Quad) -> Encoding {
    Encoding {
        sequence: encode_entrywise(q),
        williamson_type: is_williamson_type(q),
    }
}

pub fn decode_quad(s: &QSeq) -> Result<Quad> {
    let mut rows: [Vec<i8>; 4] = Default::default();
    for (index, &u) in s.iter().enumerate() {
        let col = decode_entry(u).ok_or(Error::OutsideAlphabet {
            index,
            alphabet: Alphabet::QPlus.name(),
        })?;
        for (row, v) in rows.iter_mut().zip(col) {
            row.push(v);
        }
    }
    Quad::from_signs([&rows[0], &rows[1], &rows[2], &rows[3]])
}
