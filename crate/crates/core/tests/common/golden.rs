//! Worked examples with exact expected outputs.

use quatseq::catalog::{format_quad, format_sequence, parse_quad, parse_sequence};
use quatseq::constructions::{
    alternating_negation_transfer, double_even, double_odd_from_designs, golay_interleave_double,
    matrix_from_perfect, negadouble_set, negcon_from_golay, odd_perfect_from_golay, odd_product,
    pal_antipal_convert, power_of_two, williamson_nega_convert_odd, Direction, NegconSet,
    OddDirection,
};
use quatseq::correlation::{
    has_array_orthogonality, is_complementary_set, is_odd_perfect, is_perfect, CorrelationKind,
};
use quatseq::designs::{decode_quad, encode_entrywise, is_golay_pair, is_williamson};
use quatseq::{QSeq, Quad};

pub type Check = fn() -> Result<(), String>;

fn s(t: &str) -> QSeq {
    parse_sequence(t).unwrap()
}

fn quad(t: &str) -> Quad {
    parse_quad(t).unwrap()
}

fn ensure(holds: bool, what: &str) -> Result<(), String> {
    if holds {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn same<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, want {want:?}"))
    }
}

fn text(q: &QSeq) -> String {
    format_sequence(q).unwrap()
}

/// Power-of-two outputs for `t = 0..=7` built from the first family.
pub const POWER_OF_TWO: [&str; 8] = [
    "-",
    "-j",
    "--+-",
    "-+j---j+",
    "-+-J+j-----j+J-+",
    "-i++jJ-K-k-jj-+I-I+-jj-k-K-Jj++i",
    concat!(
        "-+++-iJI+kjK-J-J-j-j-kjK+iJI--+-",
        "--+--IJi+Kjk-j-j-J-J-Kjk+IJi-+++"
    ),
    concat!(
        "-iii+i+Ij+J+--K+-Jkj-JjJjk-K+KIK",
        "-kIk+k-Kjjjj-Jkj--K+--J-ji+I+IiI",
        "-IiI+I+ij-J--+K--jkJ-jjjjK-k+kIk",
        "-KIK+K-kjJjJ-jkJ-+K--+J+jI+i+iii",
    ),
];

/// Columns of the four-column reshape; `n = 16` from the first family, the
/// rest from the second.
pub const MATRICES: [(u32, NegconSet, [&str; 4]); 4] = [
    (4, NegconSet::First, ["-+-+", "+j-J", "----", "J-j+"]),
    (
        5,
        NegconSet::Second,
        ["-j-j-j-j", "IJ-kij+K", "+--++--+", "K+jik-JI"],
    ),
    (
        6,
        NegconSet::Second,
        [
            "--+---+---+---+-",
            "IKj+-jKiikJ-+JkI",
            "+Jj--jJ++Jj--jJ+",
            "IkJ+-JkiiKj-+jKI",
        ],
    ),
    (
        7,
        NegconSet::Second,
        [
            "-+j---j+-+j---j+-+j---j+-+j---j+",
            "IIKKJj-+--jjkKIiiikkjJ+-++JJKkiI",
            "IKJ+-jkiikj-+JKIIKJ+-jkiikj-+JKI",
            "IikKJJ++-+JjkkiiiIKkjj--+-jJKKII",
        ],
    ),
];

fn complementary_triples() -> Result<(), String> {
    let periodic = quad("+--,+--,+--,+++");
    ensure(
        is_complementary_set(periodic.members(), CorrelationKind::Periodic).unwrap(),
        "(+--,+--,+--,+++) periodic complementary",
    )?;
    let nega = alternating_negation_transfer(&periodic)
        .map_err(|e| e.to_string())?
        .output;
    same(format_quad(&nega), "++-,++-,++-,+-+".to_string())?;
    ensure(
        is_complementary_set(nega.members(), CorrelationKind::Negaperiodic).unwrap(),
        "(++-,++-,++-,+-+) negacomplementary",
    )
}

fn williamson_doubling_16() -> Result<(), String> {
    let w = quad("++-+,++-+,++-+,++-+");
    let nw = quad("+-+-,+-+-,++--,++--");
    let out = double_even(&w, &nw).map_err(|e| e.to_string())?.output;
    same(
        format_quad(&out).as_str(),
        "+++--++-+-++--++,+++--++-+-++--++,++++--+-+-+--+++,++++--+-+-+--+++",
    )?;
    ensure(is_williamson(&out), "length-16 output is Williamson")
}

fn williamson_doubling_20() -> Result<(), String> {
    let w = quad("++--+,-+--+,-++++,-++++");
    let nw = quad("+---+,++-++,+---+,+++++");
    let out = double_odd_from_designs(&w, &nw)
        .map_err(|e| e.to_string())?
        .output;
    same(
        format_quad(&out).as_str(),
        "+-++-+++-----+++-++-,+--+--+++---+++--+--,++++--++-+-+-++--+++,-+-+--+++++++++--+-+",
    )?;
    ensure(is_williamson(&out), "length-20 output is Williamson")
}

fn negadoubling() -> Result<(), String> {
    let out = negadouble_set(&[s("+++"), s("+--"), s("+-+"), s("++-")])
        .map_err(|e| e.to_string())?
        .output;
    same(
        out,
        vec![s("+++---"), s("+---++"), s("+-+-+-"), s("++---+")],
    )
}

fn negcon_sets() -> Result<(), String> {
    let (a, b) = (s("++"), s("+-"));
    ensure(is_golay_pair(&a, &b).unwrap(), "(++, +-) is a Golay pair")?;
    let first = negcon_from_golay(&a, &b, NegconSet::First)
        .map_err(|e| e.to_string())?
        .output;
    same(
        format_quad(&first).as_str(),
        "+++--+++,-++++++-,+-++++-+,--+--+--",
    )?;
    let second = negcon_from_golay(&a, &b, NegconSet::Second)
        .map_err(|e| e.to_string())?
        .output;
    same(
        format_quad(&second).as_str(),
        "+++--++++++--+++,+++-+------+-+++,++-+-+----+-+-++,++-++-++++-++-++",
    )
}

fn odd_product_example() -> Result<(), String> {
    let out = odd_product(&s("++"), &s("+q+"))
        .map_err(|e| e.to_string())?
        .output;
    same(text(&out).as_str(), "+q-+Q-")?;
    ensure(
        is_odd_perfect(&out) && out.is_antipalindromic(),
        "+q-+Q- odd perfect and antipalindromic",
    )
}

fn odd_perfect_example() -> Result<(), String> {
    let out = odd_perfect_from_golay(&s("++"), &s("+-"))
        .map_err(|e| e.to_string())?
        .output;
    same(text(&out).as_str(), "--jJKkiiiikKJj--")?;
    ensure(
        is_odd_perfect(&out) && out.is_palindromic(),
        "odd perfect and palindromic",
    )
}

fn pal_antipal_example() -> Result<(), String> {
    let anti = quad("+--++-,+-+-+-,++-+--,+++---");
    let pal = pal_antipal_convert(&anti, Direction::AntipalindromicToPalindromic)
        .map_err(|e| e.to_string())?
        .output;
    same(format_quad(&pal).as_str(), "--++--,+-++-+,-++++-,++++++")
}

fn odd_correspondence_example() -> Result<(), String> {
    let w = quad("-++--++,---++--,-+----+,-+----+");
    let nw = williamson_nega_convert_odd(&w, OddDirection::Forward)
        .map_err(|e| e.to_string())?
        .output;
    same(format_quad(&nw).as_str(), "++---++,--+-+--,+-----+,+-----+")
}

fn golay_doubling_example() -> Result<(), String> {
    let (a, b) = golay_interleave_double(&s("+"), &s("+"))
        .map_err(|e| e.to_string())?
        .output;
    same((text(&a), text(&b)), ("++".to_string(), "+-".to_string()))
}

fn correspondence_example() -> Result<(), String> {
    let q = decode_quad(&s("q-JJ-")).map_err(|e| e.to_string())?;
    ensure(is_williamson(&q), "q-JJ- decodes to a Williamson quad")?;
    ensure(is_perfect(&encode_entrywise(&q)), "q-JJ- is perfect")
}

fn power_of_two_strings() -> Result<(), String> {
    for (t, want) in POWER_OF_TWO.iter().enumerate() {
        let r = power_of_two(t as u32, NegconSet::First).map_err(|e| e.to_string())?;
        same(text(&r.output.perfect).as_str(), *want).map_err(|e| format!("t = {t}: {e}"))?;
    }
    Ok(())
}

fn length_eight_quad() -> Result<(), String> {
    let r = power_of_two(3, NegconSet::First).map_err(|e| e.to_string())?;
    same(
        format_quad(&r.output.williamson).as_str(),
        "+-+++++-,+-+++++-,+--+++--,+--+++--",
    )
}

fn matrices() -> Result<(), String> {
    for (t, set, columns) in MATRICES {
        let p = power_of_two(t, set)
            .map_err(|e| e.to_string())?
            .output
            .perfect;
        let m = matrix_from_perfect(&p, 4)
            .map_err(|e| e.to_string())?
            .output;
        let got: Vec<String> = m.columns().iter().map(text).collect();
        same(got, columns.map(String::from).to_vec())
            .map_err(|e| format!("n = {}: {e}", p.len()))?;
        ensure(has_array_orthogonality(&m).unwrap(), "array orthogonality")?;
    }
    Ok(())
}

pub const GOLDEN: &[(&str, Check)] = &[
    (
        "complementary and negacomplementary triples",
        complementary_triples,
    ),
    ("Williamson doubling, length 16", williamson_doubling_16),
    ("Williamson doubling, length 20", williamson_doubling_20),
    ("negadoubling of a complementary set", negadoubling),
    ("nega-Williamson sets from (++, +-)", negcon_sets),
    ("odd product +q-+Q-", odd_product_example),
    ("odd perfect --jJKkiiiikKJj--", odd_perfect_example),
    (
        "palindromic/antipalindromic conversion",
        pal_antipal_example,
    ),
    ("odd-length correspondence", odd_correspondence_example),
    ("Golay interleaving doubling", golay_doubling_example),
    ("correspondence q-JJ-", correspondence_example),
    ("power-of-two strings t = 0..7", power_of_two_strings),
    ("length-8 Williamson quad", length_eight_quad),
    ("four-column matrices n = 16, 32, 64, 128", matrices),
];
