//! Construction outputs checked against exhaustive enumeration.

use quatseq::catalog::{parse_quad, parse_sequence};
use quatseq::constructions::{
    alternating_negation_transfer, antipal_odd_nonexistence, double_even, golay_interleave_double,
    negadouble_set, negcon_from_golay, odd_perfect_from_golay, odd_product, pal_antipal_convert,
    periodic_product, power_of_two, williamson_nega_convert_odd, Direction, NegconSet,
    OddDirection,
};
use quatseq::search::{enumerate, SearchItem, SearchKind, SearchSpec, Symmetry};
use quatseq::{Alphabet, QSeq, Quad};

fn s(t: &str) -> QSeq {
    parse_sequence(t).unwrap()
}

fn quad(t: &str) -> Quad {
    parse_quad(t).unwrap()
}

fn results(spec: &SearchSpec) -> Result<Vec<SearchItem>, String> {
    enumerate(spec)
        .map(|o| o.results)
        .map_err(|e| e.to_string())
}

fn found(spec: SearchSpec, item: SearchItem) -> Result<(), String> {
    if results(&spec)?.contains(&item) {
        Ok(())
    } else {
        Err(format!(
            "{item} missing from {} search at length {}",
            spec.kind.name(),
            spec.length
        ))
    }
}

fn q(result: quatseq::Result<quatseq::constructions::Receipt<Quad>>) -> Result<Quad, String> {
    result.map(|r| r.output).map_err(|e| e.to_string())
}

/// Exhaustive counts of antipalindromic nega-Williamson quads at `n = 3, 5, 7`.
pub fn antipalindromic_odd_counts() -> Result<Vec<(usize, u64)>, String> {
    [3, 5, 7]
        .into_iter()
        .map(|n| {
            let c = antipal_odd_nonexistence(n).map_err(|e| e.to_string())?;
            c.exhaustive_count
                .map(|k| (n, k))
                .ok_or(format!("n = {n} beyond search bounds"))
        })
        .collect()
}

/// Every construction output of length at most 8 is found by the search for
/// its defining property.
pub fn constructions_in_enumerations() -> Result<usize, String> {
    let mut checked = 0;
    let mut check = |spec: SearchSpec, item: SearchItem| {
        checked += 1;
        found(spec, item)
    };
    let williamson = |n| SearchSpec::quads(SearchKind::Williamson, n).with_q8(true);
    let nega = |n, sym| SearchSpec::quads(SearchKind::NegaWilliamson, n).with_symmetry(sym);
    let perfect_q8 = |n| {
        SearchSpec::sequences(SearchKind::Perfect, n, Alphabet::Q8)
            .with_symmetry(Symmetry::Symmetric)
    };

    for t in 0..=3 {
        let out = power_of_two(t, NegconSet::First)
            .map_err(|e| e.to_string())?
            .output;
        let n = out.perfect.len();
        check(perfect_q8(n), SearchItem::Sequence(out.perfect))?;
        check(williamson(n), SearchItem::Quad(out.williamson))?;
    }
    let even = q(double_even(&quad("++,++,+-,+-"), &quad("+-,+-,+-,+-")))?;
    check(williamson(8), SearchItem::Quad(even))?;

    for (a, b) in [("+", "+"), ("++", "+-")] {
        let pal = q(negcon_from_golay(&s(a), &s(b), NegconSet::First))?;
        check(
            nega(pal.len(), Symmetry::Palindromic),
            SearchItem::Quad(pal),
        )?;
    }
    let anti = quad("+--++-,+-+-+-,++-+--,+++---");
    check(
        nega(6, Symmetry::Antipalindromic),
        SearchItem::Quad(anti.clone()),
    )?;
    let pal = q(pal_antipal_convert(
        &anti,
        Direction::AntipalindromicToPalindromic,
    ))?;
    check(nega(6, Symmetry::Palindromic), SearchItem::Quad(pal))?;

    let set = negadouble_set(&[s("+++"), s("+--"), s("+-+"), s("++-")])
        .map_err(|e| e.to_string())?
        .output;
    let set = Quad::from_array(set.try_into().unwrap()).map_err(|e| e.to_string())?;
    check(nega(6, Symmetry::Any), SearchItem::Quad(set))?;
    let alt = q(alternating_negation_transfer(&quad("+--,+--,+--,+++")))?;
    check(nega(3, Symmetry::Any), SearchItem::Quad(alt))?;

    let w7 = quad("-++--++,---++--,-+----+,-+----+");
    check(
        SearchSpec::quads(SearchKind::Williamson, 7),
        SearchItem::Quad(w7.clone()),
    )?;
    let nw7 = q(williamson_nega_convert_odd(&w7, OddDirection::Forward))?;
    check(nega(7, Symmetry::Palindromic), SearchItem::Quad(nw7))?;

    let mut pair = (s("+"), s("+"));
    for _ in 0..3 {
        pair = golay_interleave_double(&pair.0, &pair.1)
            .map_err(|e| e.to_string())?
            .output;
        let spec = SearchSpec::sequences(SearchKind::Golay, pair.0.len(), Alphabet::PlusMinus);
        check(spec, SearchItem::Pair(pair.0.clone(), pair.1.clone()))?;
    }

    let odd_perfect = |n, alphabet, sym| {
        SearchSpec::sequences(SearchKind::OddPerfect, n, alphabet).with_symmetry(sym)
    };
    let op = odd_perfect_from_golay(&s("+"), &s("+"))
        .map_err(|e| e.to_string())?
        .output;
    check(
        odd_perfect(8, Alphabet::Q8, Symmetry::Palindromic),
        SearchItem::Sequence(op),
    )?;
    let prod = odd_product(&s("++"), &s("+q+"))
        .map_err(|e| e.to_string())?
        .output;
    check(
        odd_perfect(6, Alphabet::QPlus, Symmetry::Antipalindromic),
        SearchItem::Sequence(prod),
    )?;

    let lp = periodic_product(&s("-"), &s("q-JJ-"))
        .map_err(|e| e.to_string())?
        .output;
    check(
        SearchSpec::sequences(SearchKind::Perfect, 5, Alphabet::QPlus),
        SearchItem::Sequence(lp),
    )?;
    Ok(checked)
}

/// Perfect Q+ sequences and Williamson-type quads are equinumerous.
pub fn bijection_counts() -> Result<Vec<(usize, u64)>, String> {
    (1..=4)
        .map(|n| {
            let perfect = enumerate(&SearchSpec::sequences(
                SearchKind::Perfect,
                n,
                Alphabet::QPlus,
            ))
            .map_err(|e| e.to_string())?
            .count;
            let quads = enumerate(&SearchSpec::quads(SearchKind::WilliamsonType, n))
                .map_err(|e| e.to_string())?
                .count;
            if perfect == quads {
                Ok((n, perfect))
            } else {
                Err(format!(
                    "n = {n}: {perfect} perfect Q+ sequences, {quads} Williamson-type quads"
                ))
            }
        })
        .collect()
}
