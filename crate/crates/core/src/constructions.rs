//! Constructions of perfect, odd perfect, Williamson and nega-Williamson
//! objects. Every function checks its inputs, builds the output, and then
//! re-checks the output against the properties it promises; a failed
//! re-check is returned as [`Error::VerificationFailed`].

use serde::Serialize;

use crate::catalog::{format_quad, format_sequence};
use crate::correlation::{
    array_orthogonality_violation, is_complementary_set, is_odd_perfect, is_perfect,
    CorrelationKind, QMatrix,
};
use crate::designs::{
    encode_entrywise, golay_violation, has_q8_property, is_nega_williamson, is_williamson,
    williamson_violation, NegaSymmetry,
};
use crate::error::{Error, Result};
use crate::quaternion::{Alphabet, HurwitzUnit};
use crate::search::{self, SearchKind, SearchSpec, Symmetry};
use crate::sequence::{QSeq, Quad};

/// An output together with what was checked to produce it.
#[derive(Debug, Clone, Serialize)]
pub struct Receipt<T> {
    pub construction: &'static str,
    pub inputs: Vec<String>,
    /// Output properties that were re-checked and hold.
    pub verified: Vec<String>,
    pub notes: Vec<String>,
    pub output: T,
}

struct Builder {
    construction: &'static str,
    inputs: Vec<String>,
    verified: Vec<String>,
    notes: Vec<String>,
}

impl Builder {
    fn new(construction: &'static str) -> Self {
        Builder {
            construction,
            inputs: Vec::new(),
            verified: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn input(mut self, label: &str, value: impl AsRef<str>) -> Self {
        self.inputs.push(format!("{label} = {}", value.as_ref()));
        self
    }

    fn require(&self, holds: bool, predicate: impl Into<String>) -> Result<()> {
        if holds {
            Ok(())
        } else {
            Err(Error::Precondition {
                construction: self.construction,
                predicate: predicate.into(),
            })
        }
    }

    fn ensure(&mut self, holds: bool, predicate: impl Into<String>) -> Result<()> {
        let predicate = predicate.into();
        if !holds {
            return Err(Error::VerificationFailed {
                construction: self.construction,
                predicate,
            });
        }
        self.verified.push(predicate);
        Ok(())
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn finish<T>(self, output: T) -> Receipt<T> {
        Receipt {
            construction: self.construction,
            inputs: self.inputs,
            verified: self.verified,
            notes: self.notes,
            output,
        }
    }
}

fn text(s: &QSeq) -> String {
    format_sequence(s).unwrap_or_else(|_| format!("<{} entries outside Q+>", s.len()))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_coprime(n: usize, m: usize) -> Result<()> {
    if gcd(n, m) != 1 {
        return Err(Error::NotCoprime { left: n, right: m });
    }
    Ok(())
}

fn is_periodic_complementary(q: &Quad) -> bool {
    is_complementary_set(q.members(), CorrelationKind::Periodic)
        .expect("quad members share a length")
}

fn is_negacomplementary(q: &Quad) -> bool {
    is_complementary_set(q.members(), CorrelationKind::Negaperiodic)
        .expect("quad members share a length")
}

fn all_members(q: &Quad, f: impl Fn(&QSeq) -> bool) -> bool {
    q.members().iter().all(f)
}

/// `(X × Y)_r = x_{r mod n} y_{r mod m}` for coprime `n`, `m`.
pub fn periodic_product(x: &QSeq, y: &QSeq) -> Result<Receipt<QSeq>> {
    let mut b = Builder::new("periodic product")
        .input("x", text(x))
        .input("y", text(y));
    let (n, m) = (x.len(), y.len());
    check_coprime(n, m)?;
    b.require(x.is_over(Alphabet::Q8), "x over Q8")?;
    b.require(y.is_over(Alphabet::QPlus), "y over Q+")?;
    b.require(is_perfect(x), "x perfect")?;
    b.require(is_perfect(y), "y perfect")?;
    let out = QSeq::new((0..n * m).map(|r| x[r % n] * y[r % m]).collect())?;
    b.ensure(out.is_over(Alphabet::QPlus), "over Q+")?;
    b.ensure(is_perfect(&out), "perfect")?;
    if x.is_symmetric() && y.is_symmetric() {
        b.ensure(out.is_symmetric(), "symmetric")?;
    }
    Ok(b.finish(out))
}

/// `(X ×̂ Y)_r = (-1)^{⌊r/n⌋+⌊r/m⌋} x_{r mod n} y_{r mod m}` for coprime
/// `n`, `m`, one of them even.
pub fn odd_product(x: &QSeq, y: &QSeq) -> Result<Receipt<QSeq>> {
    let mut b = Builder::new("odd product")
        .input("x", text(x))
        .input("y", text(y));
    let (n, m) = (x.len(), y.len());
    check_coprime(n, m)?;
    b.require(n % 2 == 0 || m % 2 == 0, "one length even")?;
    b.require(is_odd_perfect(x), "x odd perfect")?;
    b.require(is_odd_perfect(y), "y odd perfect")?;
    let out = QSeq::new(
        (0..n * m)
            .map(|r| {
                let u = x[r % n] * y[r % m];
                if (r / n + r / m) % 2 == 1 {
                    -u
                } else {
                    u
                }
            })
            .collect(),
    )?;
    b.ensure(is_odd_perfect(&out), "odd perfect")?;
    if x.is_palindromic() && y.is_palindromic() {
        b.ensure(out.is_antipalindromic(), "antipalindromic")?;
    }
    Ok(b.finish(out))
}

/// Alternating negation of every member of an odd-length quad. Swaps
/// periodic complementarity and negacomplementarity; an involution.
pub fn alternating_negation_transfer(q: &Quad) -> Result<Receipt<Quad>> {
    let mut b = Builder::new("alternating negation transfer").input("quad", format_quad(q));
    if q.len().is_multiple_of(2) {
        return Err(Error::EvenLength(q.len()));
    }
    let periodic = is_periodic_complementary(q);
    let nega = is_negacomplementary(q);
    b.require(
        periodic || nega,
        "periodic complementary or negacomplementary",
    )?;
    let out = q.map(QSeq::alternate_negate)?;
    if periodic {
        b.ensure(is_negacomplementary(&out), "negacomplementary")?;
    }
    if nega {
        b.ensure(is_periodic_complementary(&out), "periodic complementary")?;
    }
    Ok(b.finish(out))
}

fn quad_from_fn(f: impl Fn(usize) -> Result<QSeq>) -> Result<Quad> {
    Quad::from_array([f(0)?, f(1)?, f(2)?, f(3)?])
}

/// Williamson quad of length `4n` from a Williamson quad `w` and an
/// antipalindromic nega-Williamson quad `nw`, both of even length `n`:
/// member `m` is `doub(W_m) ⨝ negadoub(NW_m)`.
pub fn double_even(w: &Quad, nw: &Quad) -> Result<Receipt<Quad>> {
    let mut b = Builder::new("Williamson doubling, even length")
        .input("williamson", format_quad(w))
        .input("nega", format_quad(nw));
    if !w.len().is_multiple_of(2) {
        return Err(Error::OddLength(w.len()));
    }
    if w.len() != nw.len() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: nw.len(),
        });
    }
    b.require(is_williamson(w), "williamson is Williamson")?;
    b.require(
        is_nega_williamson(nw, NegaSymmetry::Antipalindromic),
        "nega is antipalindromic nega-Williamson",
    )?;
    let out = quad_from_fn(|m| {
        w.members()[m]
            .doub()
            .interleave(&nw.members()[m].negadoub())
    })?;
    b.ensure(is_williamson(&out), "Williamson")?;
    if has_q8_property(w) && has_q8_property(nw) {
        b.ensure(has_q8_property(&out), "Q8-property")?;
    }
    Ok(b.finish(out))
}

/// Williamson quad of length `4n`, `n` odd, from a periodic complementary
/// quad with palindromic members and a negacomplementary quad with
/// antisymmetric members: member `m` is `negadoub(NW_m) ⨝ doub(W_m)`.
pub fn double_odd(w: &Quad, nw: &Quad) -> Result<Receipt<Quad>> {
    let mut b = Builder::new("Williamson doubling, odd length")
        .input("williamson (shifted)", format_quad(w))
        .input("nega (shifted)", format_quad(nw));
    if w.len().is_multiple_of(2) {
        return Err(Error::EvenLength(w.len()));
    }
    if w.len() != nw.len() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: nw.len(),
        });
    }
    b.require(
        is_periodic_complementary(w),
        "williamson periodic complementary",
    )?;
    b.require(
        all_members(w, QSeq::is_palindromic),
        "williamson members palindromic",
    )?;
    b.require(is_negacomplementary(nw), "nega negacomplementary")?;
    b.require(
        all_members(nw, QSeq::is_antisymmetric),
        "nega members antisymmetric",
    )?;
    let out = quad_from_fn(|m| {
        nw.members()[m]
            .negadoub()
            .interleave(&w.members()[m].doub())
    })?;
    b.ensure(is_williamson(&out), "Williamson")?;
    Ok(b.finish(out))
}

/// The shifts that prepare unshifted odd-length designs for [`double_odd`]:
/// `(n-1)/2` cyclic shifts of `w` and `(n+1)/2` negacyclic shifts of `nw`.
pub fn shift_for_odd_doubling(w: &Quad, nw: &Quad) -> Result<(Quad, Quad)> {
    let n = w.len();
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    Ok((
        w.map(|s| s.cyclic_shift((n - 1) / 2))?,
        nw.map(|s| s.negacyclic_shift(n.div_ceil(2)))?,
    ))
}

/// [`double_odd`] from a Williamson quad and a palindromic nega-Williamson
/// quad of the same odd length.
pub fn double_odd_from_designs(w: &Quad, nw: &Quad) -> Result<Receipt<Quad>> {
    let b = Builder::new("Williamson doubling, odd length");
    if w.len().is_multiple_of(2) {
        return Err(Error::EvenLength(w.len()));
    }
    b.require(is_williamson(w), "williamson is Williamson")?;
    b.require(
        is_nega_williamson(nw, NegaSymmetry::Palindromic),
        "nega is palindromic nega-Williamson",
    )?;
    let (ws, nws) = shift_for_odd_doubling(w, nw)?;
    let mut receipt = double_odd(&ws, &nws)?;
    receipt.inputs = vec![
        format!("williamson = {}", format_quad(w)),
        format!("nega = {}", format_quad(nw)),
    ];
    receipt
        .notes
        .push(format!("shifted williamson = {}", format_quad(&ws)));
    receipt
        .notes
        .push(format!("shifted nega = {}", format_quad(&nws)));
    Ok(receipt)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    PalindromicToAntipalindromic,
    AntipalindromicToPalindromic,
}

/// `n/2` negacyclic shifts of every member of an even-length nega-Williamson
/// quad, moving it between the palindromic and antipalindromic classes.
/// Both directions use the same shift count, so a round trip returns the
/// negated quad, which has the same correlations.
pub fn pal_antipal_convert(nw: &Quad, direction: Direction) -> Result<Receipt<Quad>> {
    let mut b =
        Builder::new("palindromic/antipalindromic conversion").input("nega", format_quad(nw));
    let n = nw.len();
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength(n));
    }
    let (source, target) = match direction {
        Direction::PalindromicToAntipalindromic => {
            (NegaSymmetry::Palindromic, NegaSymmetry::Antipalindromic)
        }
        Direction::AntipalindromicToPalindromic => {
            (NegaSymmetry::Antipalindromic, NegaSymmetry::Palindromic)
        }
    };
    b.require(
        is_nega_williamson(nw, source),
        format!("{} nega-Williamson", source.name()),
    )?;
    let out = nw.map(|s| s.negacyclic_shift(n / 2))?;
    b.ensure(
        is_nega_williamson(&out, target),
        format!("{} nega-Williamson", target.name()),
    )?;
    if has_q8_property(nw) {
        b.ensure(has_q8_property(&out), "Q8-property")?;
    }
    Ok(b.finish(out))
}

/// Negadoubles every member of an aperiodic complementary set.
pub fn negadouble_set(seqs: &[QSeq]) -> Result<Receipt<Vec<QSeq>>> {
    let mut b = Builder::new("negadoubling");
    for (i, s) in seqs.iter().enumerate() {
        b = b.input(&format!("s{i}"), text(s));
    }
    b.require(
        is_complementary_set(seqs, CorrelationKind::Aperiodic)?,
        "aperiodic complementary",
    )?;
    let out: Vec<QSeq> = seqs.iter().map(QSeq::negadoub).collect();
    b.ensure(
        is_complementary_set(&out, CorrelationKind::Negaperiodic)?,
        "negacomplementary",
    )?;
    Ok(b.finish(out))
}

/// Which block family builds nega-Williamson quads from a Golay pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NegconSet {
    /// Four blocks per member, length `4n`.
    First,
    /// Eight blocks per member, length `8n`.
    Second,
}

impl NegconSet {
    pub fn factor(self) -> usize {
        match self {
            NegconSet::First => 4,
            NegconSet::Second => 8,
        }
    }
}

fn check_golay(b: &Builder, x: &QSeq, y: &QSeq) -> Result<()> {
    let violation = golay_violation(x, y)?;
    b.require(violation.is_none(), "Golay pair")
}

/// Palindromic nega-Williamson quad with the Q8-property from a Golay pair.
pub fn negcon_from_golay(a: &QSeq, bb: &QSeq, set: NegconSet) -> Result<Receipt<Quad>> {
    let mut b = Builder::new(match set {
        NegconSet::First => "nega-Williamson from a Golay pair, first set",
        NegconSet::Second => "nega-Williamson from a Golay pair, second set",
    })
    .input("a", text(a))
    .input("b", text(bb));
    check_golay(&b, a, bb)?;
    let (ar, br) = (a.reverse(), bb.reverse());
    let (na, nb, nar, nbr) = (a.negate(), bb.negate(), ar.negate(), br.negate());
    let members: [Vec<&QSeq>; 4] = match set {
        NegconSet::First => [
            vec![a, bb, &br, &ar],
            vec![&br, &ar, a, bb],
            vec![&nbr, &ar, a, &nb],
            vec![&na, bb, &br, &nar],
        ],
        NegconSet::Second => [
            vec![a, bb, &br, &ar, a, bb, &br, &ar],
            vec![a, bb, &nbr, &nar, &na, &nb, &br, &ar],
            vec![a, &nb, &br, &nar, &na, bb, &nbr, &ar],
            vec![a, &nb, &nbr, &ar, a, &nb, &nbr, &ar],
        ],
    };
    let out = quad_from_fn(|m| QSeq::concat_all(members[m].iter().copied()))?;
    b.ensure(
        is_nega_williamson(&out, NegaSymmetry::Palindromic),
        "palindromic nega-Williamson",
    )?;
    b.ensure(has_q8_property(&out), "Q8-property")?;
    Ok(b.finish(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OddDirection {
    /// Williamson to palindromic nega-Williamson.
    Forward,
    /// Palindromic nega-Williamson to Williamson.
    Inverse,
}

/// Odd-length correspondence: alternating negation followed by `(n-1)/2`
/// negacyclic shifts, or its exact inverse.
pub fn williamson_nega_convert_odd(q: &Quad, direction: OddDirection) -> Result<Receipt<Quad>> {
    let mut b = Builder::new("odd-length Williamson/nega-Williamson correspondence")
        .input("quad", format_quad(q));
    let n = q.len();
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let k = (n - 1) / 2;
    let out = match direction {
        OddDirection::Forward => {
            b.require(is_williamson(q), "Williamson")?;
            let out = q.map(|s| s.alternate_negate().negacyclic_shift(k))?;
            b.ensure(
                is_nega_williamson(&out, NegaSymmetry::Palindromic),
                "palindromic nega-Williamson",
            )?;
            out
        }
        OddDirection::Inverse => {
            b.require(
                is_nega_williamson(q, NegaSymmetry::Palindromic),
                "palindromic nega-Williamson",
            )?;
            let out = q.map(|s| s.negacyclic_shift(2 * n - k).alternate_negate())?;
            b.ensure(is_williamson(&out), "Williamson")?;
            out
        }
    };
    Ok(b.finish(out))
}

/// `[-A; jB; kB̃; iÃ; iA; kB; jB̃; -Ã]`, a palindromic odd perfect sequence
/// over Q8 of length `8n`.
pub fn odd_perfect_from_golay(a: &QSeq, bb: &QSeq) -> Result<Receipt<QSeq>> {
    let mut b = Builder::new("odd perfect sequence from a Golay pair")
        .input("a", text(a))
        .input("b", text(bb));
    check_golay(&b, a, bb)?;
    let (ar, br) = (a.reverse(), bb.reverse());
    let (i, j, k) = (HurwitzUnit::I, HurwitzUnit::J, HurwitzUnit::K);
    let blocks = [
        a.negate(),
        bb.scalar_premul(j),
        br.scalar_premul(k),
        ar.scalar_premul(i),
        a.scalar_premul(i),
        bb.scalar_premul(k),
        br.scalar_premul(j),
        ar.negate(),
    ];
    let out = QSeq::concat_all(&blocks)?;
    b.ensure(out.is_palindromic(), "palindromic")?;
    b.ensure(out.is_over(Alphabet::Q8), "over Q8")?;
    b.ensure(is_odd_perfect(&out), "odd perfect")?;
    Ok(b.finish(out))
}

/// `(A, B) ↦ (A ⨝ B, A ⨝ -B)`.
pub fn golay_interleave_double(a: &QSeq, bb: &QSeq) -> Result<Receipt<(QSeq, QSeq)>> {
    let mut b = Builder::new("Golay interleaving doubling")
        .input("a", text(a))
        .input("b", text(bb));
    check_golay(&b, a, bb)?;
    let out = (a.interleave(bb)?, a.interleave(&bb.negate())?);
    b.ensure(golay_violation(&out.0, &out.1)?.is_none(), "Golay pair")?;
    Ok(b.finish(out))
}

/// The Golay pair of length `2^s` reached from `(+, +)` by `s` interleaving
/// doublings.
pub fn golay_power_of_two(s: u32) -> Result<(QSeq, QSeq)> {
    let mut pair = (QSeq::from_signs(&[1])?, QSeq::from_signs(&[1])?);
    for _ in 0..s {
        pair = golay_interleave_double(&pair.0, &pair.1)?.output;
    }
    Ok(pair)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerOfTwo {
    pub t: u32,
    pub williamson: Quad,
    pub perfect: QSeq,
}

const MAX_POWER: u32 = 24;

fn base_williamson(t: u32) -> Result<Quad> {
    match t {
        0 => Quad::from_signs([&[1], &[1], &[1], &[1]]),
        1 => Quad::from_signs([&[1, 1], &[1, 1], &[1, -1], &[1, -1]]),
        2 => {
            let a: &[i8] = &[1, 1, -1, 1];
            Quad::from_signs([a, a, a, a])
        }
        _ => unreachable!("base lengths are 1, 2 and 4"),
    }
}

/// Antipalindromic nega-Williamson quad with the Q8-property, length `2^s`.
fn antipal_power_of_two(s: u32, set: NegconSet, trail: &mut Vec<String>) -> Result<Quad> {
    let palindromic = if s == 1 {
        let a: &[i8] = &[1, 1];
        Quad::from_signs([a, a, a, a])?
    } else {
        let set = if s == 2 { NegconSet::First } else { set };
        let golay_exp = s - set.factor().trailing_zeros();
        let (x, y) = golay_power_of_two(golay_exp)?;
        trail.push(format!("Golay pair of length {}", 1usize << golay_exp));
        negcon_from_golay(&x, &y, set)?.output
    };
    let converted =
        pal_antipal_convert(&palindromic, Direction::PalindromicToAntipalindromic)?.output;
    trail.push(format!(
        "antipalindromic nega-Williamson of length {}",
        1usize << s
    ));
    Ok(converted)
}

fn williamson_power_of_two(t: u32, set: NegconSet, trail: &mut Vec<String>) -> Result<Quad> {
    if t <= 2 {
        let w = base_williamson(t)?;
        if let Some(v) = williamson_violation(&w) {
            return Err(Error::VerificationFailed {
                construction: "power-of-two pipeline",
                predicate: format!("base Williamson quad: {v}"),
            });
        }
        trail.push(format!("base Williamson quad of length {}", 1usize << t));
        return Ok(w);
    }
    let w = williamson_power_of_two(t - 2, set, trail)?;
    let nw = antipal_power_of_two(t - 2, set, trail)?;
    let out = double_even(&w, &nw)?.output;
    trail.push(format!(
        "Williamson quad of length {} by even doubling",
        1usize << t
    ));
    Ok(out)
}

/// Symmetric perfect Q8-sequence of length `2^t` and the Williamson quad
/// with the Q8-property it encodes.
pub fn power_of_two(t: u32, set: NegconSet) -> Result<Receipt<PowerOfTwo>> {
    let mut b = Builder::new("power-of-two pipeline")
        .input("t", t.to_string())
        .input(
            "nega-Williamson family",
            match set {
                NegconSet::First => "first set",
                NegconSet::Second => "second set (first set at length 4)",
            },
        );
    if t > MAX_POWER {
        return Err(Error::Dimension(format!("t = {t} exceeds {MAX_POWER}")));
    }
    let mut trail = Vec::new();
    let williamson = williamson_power_of_two(t, set, &mut trail)?;
    b.notes = trail;
    b.ensure(is_williamson(&williamson), "Williamson")?;
    b.ensure(has_q8_property(&williamson), "Q8-property")?;
    let perfect = encode_entrywise(&williamson);
    b.ensure(perfect.is_over(Alphabet::Q8), "over Q8")?;
    b.ensure(perfect.is_symmetric(), "symmetric")?;
    b.ensure(is_perfect(&perfect), "perfect")?;
    Ok(b.finish(PowerOfTwo {
        t,
        williamson,
        perfect,
    }))
}

/// Row-major reshape `M_{i,j} = P_{cols·i + j}`. Array orthogonality is
/// checked and recorded but not required.
pub fn matrix_from_perfect(p: &QSeq, cols: usize) -> Result<Receipt<QMatrix>> {
    let mut b = Builder::new("matrix from a perfect sequence").input("cols", cols.to_string());
    if cols == 0 || !p.len().is_multiple_of(cols) {
        return Err(Error::Dimension(format!(
            "length {} is not a multiple of {cols}",
            p.len()
        )));
    }
    let m = QMatrix::from_row_major(p.len() / cols, cols, p.entries().to_vec())?;
    match array_orthogonality_violation(&m)? {
        None => b.verified.push("array orthogonality".into()),
        Some(v) => b.note(format!("no array orthogonality: {v:?}")),
    }
    Ok(b.finish(m))
}

/// Evidence that antipalindromic nega-Williamson quads of odd length `n > 1`
/// do not exist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonexistenceCertificate {
    pub n: usize,
    /// Exhaustive count, or `None` when `n` is beyond the search bounds.
    pub exhaustive_count: Option<u64>,
    /// Sum of the squared row sums after alternating negation. Each
    /// antipalindromic odd-length `±1` sequence has row sum `±1`.
    pub rowsum_square_total: i64,
    /// Value periodic complementarity forces for that sum, `4n`.
    pub required_total: i64,
}

impl NonexistenceCertificate {
    pub fn rules_out(&self) -> bool {
        self.rowsum_square_total != self.required_total && self.exhaustive_count.unwrap_or(0) == 0
    }
}

pub fn antipal_odd_nonexistence(n: usize) -> Result<NonexistenceCertificate> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let spec =
        SearchSpec::quads(SearchKind::NegaWilliamson, n).with_symmetry(Symmetry::Antipalindromic);
    let exhaustive_count = match search::enumerate(&spec) {
        Ok(outcome) => Some(outcome.count),
        Err(Error::SearchBounds(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(NonexistenceCertificate {
        n,
        exhaustive_count,
        rowsum_square_total: 4,
        required_total: 4 * n as i64,
    })
}
