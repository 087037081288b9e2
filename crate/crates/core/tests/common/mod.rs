//! Randomized identities shared by the property tests and the acceptance
//! suite. Each entry runs a `TestRunner` and returns the failure, if any.

#![allow(dead_code)]

pub mod golden;
pub mod oracles;

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use quatseq::catalog::{format_sequence, parse_sequence, sequence_from_json, sequence_to_json};
use quatseq::correlation::{
    aperiodic_auto, is_complementary_set, negaperiodic_auto, negaperiodic_cross,
    negaperiodic_cross_definitional, periodic_auto, periodic_cross, periodic_cross_definitional,
    CorrelationKind,
};
use quatseq::designs::{decode_quad, encode_entrywise, has_q8_property};
use quatseq::search::{enumerate, SearchItem, SearchKind, SearchSpec};
use quatseq::{Alphabet, HurwitzUnit, QSeq, Quad, Quat};

pub type Property = fn(&mut TestRunner) -> Result<(), String>;

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn unit() -> impl Strategy<Value = HurwitzUnit> {
    (0usize..24).prop_map(|i| HurwitzUnit::from_index(i).unwrap())
}

fn q_plus_unit() -> impl Strategy<Value = HurwitzUnit> {
    let units = Alphabet::QPlus.units();
    (0..units.len()).prop_map(move |i| units[i])
}

fn sign() -> impl Strategy<Value = HurwitzUnit> {
    prop_oneof![Just(HurwitzUnit::ONE), Just(HurwitzUnit::NEG_ONE)]
}

pub fn seq_of(
    entry: impl Strategy<Value = HurwitzUnit>,
    len: impl Into<proptest::collection::SizeRange>,
) -> impl Strategy<Value = QSeq> {
    proptest::collection::vec(entry, len).prop_map(|v| QSeq::new(v).unwrap())
}

pub fn seq(max_len: usize) -> impl Strategy<Value = QSeq> {
    seq_of(unit(), 1..=max_len)
}

/// Two sequences of a common length.
pub fn seq_pair(max_len: usize) -> impl Strategy<Value = (QSeq, QSeq)> {
    (1..=max_len).prop_flat_map(|n| (seq_of(unit(), n), seq_of(unit(), n)))
}

pub fn pm_quad(max_len: usize) -> impl Strategy<Value = Quad> {
    (1..=max_len).prop_flat_map(|n| {
        [
            seq_of(sign(), n),
            seq_of(sign(), n),
            seq_of(sign(), n),
            seq_of(sign(), n),
        ]
        .prop_map(|m| Quad::from_array(m).unwrap())
    })
}

fn symmetric(len: impl Strategy<Value = usize>) -> impl Strategy<Value = QSeq> {
    len.prop_flat_map(|n| {
        proptest::collection::vec(unit(), n / 2 + 1).prop_map(move |free| {
            let v: Vec<_> = (0..n)
                .map(|r| free[if r <= n / 2 { r } else { n - r }])
                .collect();
            QSeq::new(v).unwrap()
        })
    })
}

fn palindromic(n: usize) -> impl Strategy<Value = QSeq> {
    proptest::collection::vec(unit(), n.div_ceil(2)).prop_map(move |free| {
        let v: Vec<_> = (0..n).map(|r| free[r.min(n - 1 - r)]).collect();
        QSeq::new(v).unwrap()
    })
}

fn antipalindromic(n: usize) -> impl Strategy<Value = QSeq> {
    proptest::collection::vec(unit(), n.div_ceil(2)).prop_map(move |free| {
        let v: Vec<_> = (0..n)
            .map(|r| {
                if r < n.div_ceil(2) {
                    free[r]
                } else {
                    -free[n - 1 - r]
                }
            })
            .collect();
        QSeq::new(v).unwrap()
    })
}

fn antisymmetric_odd(n: usize) -> impl Strategy<Value = QSeq> {
    proptest::collection::vec(unit(), n.div_ceil(2)).prop_map(move |free| {
        let v: Vec<_> = (0..n)
            .map(|r| if r <= n / 2 { free[r] } else { -free[n - r] })
            .collect();
        QSeq::new(v).unwrap()
    })
}

fn run<S: Strategy>(
    runner: &mut TestRunner,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn shift_range(n: usize) -> std::ops::RangeInclusive<i64> {
    -(3 * n as i64)..=3 * n as i64
}

const MAX_LEN: usize = 24;

// Doubling, negadoubling and interleaving identities.

pub fn doub_periodic(r: &mut TestRunner) -> Result<(), String> {
    run(r, (seq(MAX_LEN), -100i64..100), |(x, t)| {
        prop_assert_eq!(periodic_auto(&x.doub(), t), periodic_auto(&x, t).scale(2));
        Ok(())
    })
}

pub fn negadoub_periodic(r: &mut TestRunner) -> Result<(), String> {
    run(r, (seq(MAX_LEN), -100i64..100), |(x, t)| {
        prop_assert_eq!(
            periodic_auto(&x.negadoub(), t),
            negaperiodic_auto(&x, t).scale(2)
        );
        Ok(())
    })
}

pub fn doub_negadoub_uncorrelated(r: &mut TestRunner) -> Result<(), String> {
    run(r, (seq_pair(MAX_LEN), -100i64..100), |((x, y), t)| {
        let (d, nd) = (x.doub(), y.negadoub());
        prop_assert!(periodic_cross(&d, &nd, t).unwrap().is_zero());
        prop_assert!(periodic_cross(&nd, &d, t).unwrap().is_zero());
        Ok(())
    })
}

pub fn interleave_even_shifts(r: &mut TestRunner) -> Result<(), String> {
    run(r, (seq_pair(MAX_LEN), -100i64..100), |((x, y), t)| {
        let z = x.interleave(&y).unwrap();
        prop_assert_eq!(
            periodic_auto(&z, 2 * t),
            periodic_auto(&x, t) + periodic_auto(&y, t)
        );
        Ok(())
    })
}

pub fn interleave_odd_shifts(r: &mut TestRunner) -> Result<(), String> {
    run(r, (seq_pair(MAX_LEN), -100i64..100), |((x, y), t)| {
        let z = x.interleave(&y).unwrap();
        prop_assert_eq!(
            periodic_auto(&z, 2 * t + 1),
            periodic_cross(&x, &y, t).unwrap() + periodic_cross(&y, &x, t + 1).unwrap()
        );
        Ok(())
    })
}

pub fn doub_keeps_symmetry(r: &mut TestRunner) -> Result<(), String> {
    run(r, symmetric(1..=MAX_LEN), |x| {
        prop_assert!(x.doub().is_symmetric());
        Ok(())
    })
}

pub fn negadoub_even_antipalindromic(r: &mut TestRunner) -> Result<(), String> {
    run(
        r,
        (1..=MAX_LEN / 2).prop_flat_map(|h| antipalindromic(2 * h)),
        |x| {
            prop_assert!(x.negadoub().is_palindromic());
            Ok(())
        },
    )
}

pub fn interleave_symmetric(r: &mut TestRunner) -> Result<(), String> {
    let s = (1..=MAX_LEN).prop_flat_map(|n| (symmetric(Just(n)), palindromic(n)));
    run(r, s, |(x, y)| {
        prop_assert!(x.interleave(&y).unwrap().is_symmetric());
        Ok(())
    })
}

pub fn negadoub_odd_antisymmetric(r: &mut TestRunner) -> Result<(), String> {
    run(
        r,
        (0..=MAX_LEN / 2).prop_flat_map(|h| antisymmetric_odd(2 * h + 1)),
        |x| {
            prop_assert!(x.is_antisymmetric());
            prop_assert!(x.negadoub().is_symmetric());
            Ok(())
        },
    )
}

pub fn doub_keeps_palindromicity(r: &mut TestRunner) -> Result<(), String> {
    run(r, (1..=MAX_LEN).prop_flat_map(palindromic), |x| {
        prop_assert!(x.doub().is_palindromic());
        Ok(())
    })
}

// Dual correlation formulas: extended form against the two-term form.

pub fn dual_periodic(r: &mut TestRunner) -> Result<(), String> {
    run(
        r,
        (seq_pair(MAX_LEN), any::<prop::sample::Index>()),
        |((a, b), i)| {
            let t = i.index(a.len());
            prop_assert_eq!(
                periodic_cross(&a, &b, t as i64).unwrap(),
                periodic_cross_definitional(&a, &b, t).unwrap()
            );
            Ok(())
        },
    )
}

pub fn dual_negaperiodic(r: &mut TestRunner) -> Result<(), String> {
    run(
        r,
        (seq_pair(MAX_LEN), any::<prop::sample::Index>()),
        |((a, b), i)| {
            let t = i.index(a.len());
            prop_assert_eq!(
                negaperiodic_cross(&a, &b, t as i64).unwrap(),
                negaperiodic_cross_definitional(&a, &b, t).unwrap()
            );
            Ok(())
        },
    )
}

/// The extended forms are `n`-periodic and `n`-antiperiodic respectively.
pub fn extended_periodicity(r: &mut TestRunner) -> Result<(), String> {
    run(r, (seq_pair(MAX_LEN), -100i64..100), |((a, b), t)| {
        let n = a.len() as i64;
        prop_assert_eq!(
            periodic_cross(&a, &b, t + n).unwrap(),
            periodic_cross(&a, &b, t).unwrap()
        );
        prop_assert_eq!(
            negaperiodic_cross(&a, &b, t + n).unwrap(),
            -negaperiodic_cross(&a, &b, t).unwrap()
        );
        Ok(())
    })
}

// Shift invariance of complementarity.

pub fn shift_invariance(r: &mut TestRunner) -> Result<(), String> {
    run(
        r,
        (seq(MAX_LEN), 0usize..100, shift_range(4)),
        |(x, k, t)| {
            prop_assert_eq!(periodic_auto(&x.cyclic_shift(k), t), periodic_auto(&x, t));
            prop_assert_eq!(
                negaperiodic_auto(&x.negacyclic_shift(k), t),
                negaperiodic_auto(&x, t)
            );
            Ok(())
        },
    )
}

fn complementary_quads() -> &'static Vec<Quad> {
    static QUADS: OnceLock<Vec<Quad>> = OnceLock::new();
    QUADS.get_or_init(|| {
        (1..=6)
            .flat_map(|n| {
                enumerate(&SearchSpec::quads(SearchKind::PeriodicComplementary, n))
                    .unwrap()
                    .results
                    .into_iter()
                    .map(|item| match item {
                        SearchItem::Quad(q) => q,
                        _ => unreachable!(),
                    })
            })
            .collect()
    })
}

fn nega_quads() -> &'static Vec<Quad> {
    static QUADS: OnceLock<Vec<Quad>> = OnceLock::new();
    QUADS.get_or_init(|| {
        (1..=6)
            .flat_map(|n| {
                enumerate(&SearchSpec::quads(SearchKind::NegaWilliamson, n))
                    .unwrap()
                    .results
                    .into_iter()
                    .map(|item| match item {
                        SearchItem::Quad(q) => q,
                        _ => unreachable!(),
                    })
            })
            .collect()
    })
}

pub fn complementarity_shift_invariance(r: &mut TestRunner) -> Result<(), String> {
    let (pc, nw) = (complementary_quads(), nega_quads());
    let s = (
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
        [0usize..50, 0usize..50, 0usize..50, 0usize..50],
    );
    run(r, s, |(i, j, shifts)| {
        let q = &pc[i.index(pc.len())];
        let shifted: Vec<QSeq> = q
            .members()
            .iter()
            .zip(shifts)
            .map(|(m, k)| m.cyclic_shift(k))
            .collect();
        prop_assert!(is_complementary_set(&shifted, CorrelationKind::Periodic).unwrap());
        let q = &nw[j.index(nw.len())];
        let shifted: Vec<QSeq> = q
            .members()
            .iter()
            .zip(shifts)
            .map(|(m, k)| m.negacyclic_shift(k))
            .collect();
        prop_assert!(is_complementary_set(&shifted, CorrelationKind::Negaperiodic).unwrap());
        Ok(())
    })
}

/// `Σ rowsum² = 4n` on oracle-found periodic complementary quads.
pub fn rowsum_identity(r: &mut TestRunner) -> Result<(), String> {
    let pc = complementary_quads();
    run(r, any::<prop::sample::Index>(), |i| {
        let q = &pc[i.index(pc.len())];
        let total: i64 = q.members().iter().map(|m| m.rowsum().norm()).sum();
        prop_assert_eq!(total, 4 * q.len() as i64);
        Ok(())
    })
}

/// `R̂_{negadoub(X)}(t) = 2·C_X(t)` for `0 ≤ t ≤ n`.
pub fn negadoub_aperiodic(r: &mut TestRunner) -> Result<(), String> {
    run(r, (seq(MAX_LEN), any::<prop::sample::Index>()), |(x, i)| {
        let t = i.index(x.len() + 1);
        prop_assert_eq!(
            negaperiodic_auto(&x.negadoub(), t as i64),
            aperiodic_auto(&x, t).unwrap().scale(2)
        );
        Ok(())
    })
}

// Encoding and text invariants.

pub fn encode_round_trip(r: &mut TestRunner) -> Result<(), String> {
    run(r, pm_quad(MAX_LEN), |q| {
        let s = encode_entrywise(&q);
        prop_assert_eq!(decode_quad(&s).unwrap(), q.clone());
        prop_assert_eq!(has_q8_property(&q), s.is_over(Alphabet::Q8));
        let all_symmetric = q.members().iter().all(QSeq::is_symmetric);
        prop_assert_eq!(all_symmetric, s.is_symmetric());
        Ok(())
    })
}

pub fn text_round_trip(r: &mut TestRunner) -> Result<(), String> {
    run(
        r,
        (seq_of(q_plus_unit(), 1..=MAX_LEN), seq(MAX_LEN)),
        |(s, h)| {
            prop_assert_eq!(parse_sequence(&format_sequence(&s).unwrap()).unwrap(), s);
            prop_assert_eq!(sequence_from_json(&sequence_to_json(&h)).unwrap(), h);
            Ok(())
        },
    )
}

pub fn quaternion_norm_multiplicative(r: &mut TestRunner) -> Result<(), String> {
    run(r, (unit(), unit(), unit()), |(a, b, c)| {
        let (x, y, z) = (a.value(), b.value(), c.value());
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!((a * b).value(), x * y);
        prop_assert_eq!((x + y).norm() * z.norm(), ((x + y) * z).norm());
        prop_assert_eq!((x * y).conj(), y.conj() * x.conj());
        prop_assert_eq!(x * x.conj(), Quat::ONE);
        Ok(())
    })
}

/// The criterion-6 suite: doubling and interleaving identities, dual formulas, shift
/// invariance, the row-sum identity and the negadoubling identity.
pub const CRITERION_SIX: &[(&str, Property)] = &[
    ("R_doub(X) = 2 R_X", doub_periodic),
    ("R_negadoub(X) = 2 R^_X", negadoub_periodic),
    (
        "doub(X) and negadoub(Y) uncorrelated",
        doub_negadoub_uncorrelated,
    ),
    ("R_{X⨝Y}(2t) = R_X(t) + R_Y(t)", interleave_even_shifts),
    ("R_{X⨝Y}(2t+1) = R_XY(t) + R_YX(t+1)", interleave_odd_shifts),
    ("doub keeps symmetry", doub_keeps_symmetry),
    (
        "negadoub of even antipalindromic is palindromic",
        negadoub_even_antipalindromic,
    ),
    ("symmetric ⨝ palindromic is symmetric", interleave_symmetric),
    (
        "negadoub of odd antisymmetric is symmetric",
        negadoub_odd_antisymmetric,
    ),
    ("doub keeps palindromicity", doub_keeps_palindromicity),
    ("dual periodic formula", dual_periodic),
    ("dual negaperiodic formula", dual_negaperiodic),
    ("shift invariance of correlations", shift_invariance),
    (
        "shift invariance of complementarity",
        complementarity_shift_invariance,
    ),
    ("row-sum identity", rowsum_identity),
    ("R^_negadoub(X)(t) = 2 C_X(t)", negadoub_aperiodic),
];
