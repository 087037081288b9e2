//! Exact quaternion arithmetic over the Hurwitz order.
//!
//! Every quantity that appears in the sequence theory (entries, correlation
//! values, row sums) lies in the Hurwitz order: quaternions whose coordinates
//! are either all integers or all halves of odd integers. [`Quat`] stores the
//! doubled coordinates `(2w, 2x, 2y, 2z)` as `i64`, so arithmetic is exact and
//! the Hurwitz condition is a parity check.
//!
//! [`HurwitzUnit`] is one of the 24 units of that order, interned by index so
//! that multiplication is a table lookup. The table is built once from
//! [`Quat`] arithmetic and checked for closure as it is built.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `w + xi + yj + zk` of the Hurwitz order, held as doubled
/// integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 4]", into = "[i64; 4]")]
pub struct Quat {
    w2: i64,
    x2: i64,
    y2: i64,
    z2: i64,
}

impl Quat {
    pub const ZERO: Quat = Quat {
        w2: 0,
        x2: 0,
        y2: 0,
        z2: 0,
    };
    pub const ONE: Quat = Quat {
        w2: 2,
        x2: 0,
        y2: 0,
        z2: 0,
    };
    pub const I: Quat = Quat {
        w2: 0,
        x2: 2,
        y2: 0,
        z2: 0,
    };
    pub const J: Quat = Quat {
        w2: 0,
        x2: 0,
        y2: 2,
        z2: 0,
    };
    pub const K: Quat = Quat {
        w2: 0,
        x2: 0,
        y2: 0,
        z2: 2,
    };

    /// Builds a quaternion from doubled coordinates. All four must share a
    /// parity, otherwise the value is not in the Hurwitz order.
    pub fn from_doubled(w2: i64, x2: i64, y2: i64, z2: i64) -> Result<Self> {
        let parity = w2 & 1;
        if (x2 & 1) != parity || (y2 & 1) != parity || (z2 & 1) != parity {
            return Err(Error::NotHurwitz([w2, x2, y2, z2]));
        }
        Ok(Quat { w2, x2, y2, z2 })
    }

    /// Builds the Lipschitz quaternion `w + xi + yj + zk`.
    pub const fn from_integers(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quat {
            w2: 2 * w,
            x2: 2 * x,
            y2: 2 * y,
            z2: 2 * z,
        }
    }

    pub const fn doubled(self) -> [i64; 4] {
        [self.w2, self.x2, self.y2, self.z2]
    }

    pub const fn conj(self) -> Self {
        Quat {
            w2: self.w2,
            x2: -self.x2,
            y2: -self.y2,
            z2: -self.z2,
        }
    }

    /// The reduced norm `w² + x² + y² + z²`, an integer on the Hurwitz order.
    pub const fn norm(self) -> i64 {
        (self.w2 * self.w2 + self.x2 * self.x2 + self.y2 * self.y2 + self.z2 * self.z2) / 4
    }

    pub const fn is_zero(self) -> bool {
        self.w2 == 0 && self.x2 == 0 && self.y2 == 0 && self.z2 == 0
    }

    /// Multiplies by an integer scalar.
    pub const fn scale(self, k: i64) -> Self {
        Quat {
            w2: self.w2 * k,
            x2: self.x2 * k,
            y2: self.y2 * k,
            z2: self.z2 * k,
        }
    }

    /// The real part when the imaginary part vanishes and the value is an
    /// integer.
    pub fn as_integer(self) -> Option<i64> {
        if self.x2 == 0 && self.y2 == 0 && self.z2 == 0 && self.w2 % 2 == 0 {
            Some(self.w2 / 2)
        } else {
            None
        }
    }
}

impl Default for Quat {
    fn default() -> Self {
        Quat::ZERO
    }
}

impl From<Quat> for [i64; 4] {
    fn from(q: Quat) -> Self {
        q.doubled()
    }
}

impl TryFrom<[i64; 4]> for Quat {
    type Error = Error;

    fn try_from(d: [i64; 4]) -> Result<Self> {
        Quat::from_doubled(d[0], d[1], d[2], d[3])
    }
}

impl From<i64> for Quat {
    fn from(w: i64) -> Self {
        Quat::from_integers(w, 0, 0, 0)
    }
}

impl Add for Quat {
    type Output = Quat;

    fn add(self, o: Quat) -> Quat {
        Quat {
            w2: self.w2 + o.w2,
            x2: self.x2 + o.x2,
            y2: self.y2 + o.y2,
            z2: self.z2 + o.z2,
        }
    }
}

impl AddAssign for Quat {
    fn add_assign(&mut self, o: Quat) {
        *self = *self + o;
    }
}

impl Sub for Quat {
    type Output = Quat;

    fn sub(self, o: Quat) -> Quat {
        self + (-o)
    }
}

impl SubAssign for Quat {
    fn sub_assign(&mut self, o: Quat) {
        *self = *self - o;
    }
}

impl Neg for Quat {
    type Output = Quat;

    fn neg(self) -> Quat {
        self.scale(-1)
    }
}

impl Mul for Quat {
    type Output = Quat;

    /// Hamilton product. In doubled coordinates the integer product carries
    /// an extra factor of two, which divides out exactly on the Hurwitz order.
    fn mul(self, o: Quat) -> Quat {
        let (a1, b1, c1, d1) = (self.w2, self.x2, self.y2, self.z2);
        let (a2, b2, c2, d2) = (o.w2, o.x2, o.y2, o.z2);
        let w = a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2;
        let x = a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2;
        let y = a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2;
        let z = a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2;
        debug_assert!(w % 2 == 0 && x % 2 == 0 && y % 2 == 0 && z % 2 == 0);
        Quat {
            w2: w / 2,
            x2: x / 2,
            y2: y / 2,
            z2: z / 2,
        }
    }
}

impl Sum for Quat {
    fn sum<I: Iterator<Item = Quat>>(iter: I) -> Quat {
        iter.fold(Quat::ZERO, Add::add)
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = self.w2 & 1 == 1;
        let coords = if half {
            self.doubled()
        } else {
            [self.w2 / 2, self.x2 / 2, self.y2 / 2, self.z2 / 2]
        };
        let mut out = String::new();
        for (c, basis) in coords.iter().zip(["", "i", "j", "k"]) {
            if *c == 0 {
                continue;
            }
            if *c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.unsigned_abs();
            if mag != 1 || basis.is_empty() {
                out.push_str(&mag.to_string());
            }
            out.push_str(basis);
        }
        if out.is_empty() {
            out.push('0');
        }
        if half {
            write!(f, "({out})/2")
        } else {
            f.write_str(&out)
        }
    }
}

/// Doubled coordinates of the 24 units in canonical order: `1, -1, i, -i, j,
/// -j, k, -k`, then `(±1±i±j±k)/2` with `+` before `-` in each position.
const UNIT_COORDS: [[i64; 4]; 24] = {
    let mut t = [[0i64; 4]; 24];
    t[0] = [2, 0, 0, 0];
    t[1] = [-2, 0, 0, 0];
    t[2] = [0, 2, 0, 0];
    t[3] = [0, -2, 0, 0];
    t[4] = [0, 0, 2, 0];
    t[5] = [0, 0, -2, 0];
    t[6] = [0, 0, 0, 2];
    t[7] = [0, 0, 0, -2];
    let mut s = 0;
    while s < 16 {
        let mut c = 0;
        while c < 4 {
            t[8 + s][c] = if s & (8 >> c) != 0 { -1 } else { 1 };
            c += 1;
        }
        s += 1;
    }
    t
};

struct UnitTables {
    mul: [[u8; 24]; 24],
    conj: [u8; 24],
    neg: [u8; 24],
}

fn tables() -> &'static UnitTables {
    static TABLES: OnceLock<UnitTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let find =
            |q: Quat| -> u8 {
                let d = q.doubled();
                UNIT_COORDS.iter().position(|c| *c == d).unwrap_or_else(|| {
                    panic!("{q} is not a Hurwitz unit; group table is not closed")
                }) as u8
            };
        let mut mul = [[0u8; 24]; 24];
        let mut conj = [0u8; 24];
        let mut neg = [0u8; 24];
        for a in 0..24 {
            let qa = HurwitzUnit(a as u8).value();
            conj[a] = find(qa.conj());
            neg[a] = find(-qa);
            for (b, slot) in mul[a].iter_mut().enumerate() {
                *slot = find(qa * HurwitzUnit(b as u8).value());
            }
        }
        UnitTables { mul, conj, neg }
    })
}

/// One of the 24 unit Hurwitz quaternions (the binary tetrahedral group).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzUnit(u8);

/// Which of the named alphabets contain a unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub in_q8: bool,
    pub in_q_plus: bool,
    pub in_q_coset: bool,
}

impl HurwitzUnit {
    pub const ONE: HurwitzUnit = HurwitzUnit(0);
    pub const NEG_ONE: HurwitzUnit = HurwitzUnit(1);
    pub const I: HurwitzUnit = HurwitzUnit(2);
    pub const NEG_I: HurwitzUnit = HurwitzUnit(3);
    pub const J: HurwitzUnit = HurwitzUnit(4);
    pub const NEG_J: HurwitzUnit = HurwitzUnit(5);
    pub const K: HurwitzUnit = HurwitzUnit(6);
    pub const NEG_K: HurwitzUnit = HurwitzUnit(7);
    /// `q = (1 + i + j + k) / 2`.
    pub const Q: HurwitzUnit = HurwitzUnit(8);
    /// `-q = (-1 - i - j - k) / 2`.
    pub const NEG_Q: HurwitzUnit = HurwitzUnit(23);

    pub const COUNT: usize = 24;

    pub const Q8: [HurwitzUnit; 8] = [
        Self::ONE,
        Self::NEG_ONE,
        Self::I,
        Self::NEG_I,
        Self::J,
        Self::NEG_J,
        Self::K,
        Self::NEG_K,
    ];

    /// All 24 units in canonical order.
    pub fn all() -> impl Iterator<Item = HurwitzUnit> + Clone {
        (0..24u8).map(HurwitzUnit)
    }

    pub fn from_index(index: usize) -> Option<Self> {
        (index < 24).then_some(HurwitzUnit(index as u8))
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn value(self) -> Quat {
        let c = UNIT_COORDS[self.0 as usize];
        Quat {
            w2: c[0],
            x2: c[1],
            y2: c[2],
            z2: c[3],
        }
    }

    pub fn from_quat(q: Quat) -> Option<Self> {
        let d = q.doubled();
        UNIT_COORDS
            .iter()
            .position(|c| *c == d)
            .map(|i| HurwitzUnit(i as u8))
    }

    pub fn from_sign(sign: i8) -> Self {
        if sign < 0 {
            Self::NEG_ONE
        } else {
            Self::ONE
        }
    }

    /// `Some(±1)` for the real units.
    pub const fn sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            1 => Some(-1),
            _ => None,
        }
    }

    pub fn conj(self) -> Self {
        HurwitzUnit(tables().conj[self.index()])
    }

    pub fn is_q8(self) -> bool {
        self.0 < 8
    }

    /// Membership in the coset `qQ8`.
    pub fn is_q_coset(self) -> bool {
        Self::Q8.iter().any(|&u| Self::Q * u == self)
    }

    pub fn is_q_plus(self) -> bool {
        self.is_q8() || self.is_q_coset()
    }

    pub fn membership(self) -> Membership {
        Membership {
            in_q8: self.is_q8(),
            in_q_plus: self.is_q_plus(),
            in_q_coset: self.is_q_coset(),
        }
    }
}

impl Neg for HurwitzUnit {
    type Output = HurwitzUnit;

    fn neg(self) -> HurwitzUnit {
        HurwitzUnit(tables().neg[self.index()])
    }
}

impl Mul for HurwitzUnit {
    type Output = HurwitzUnit;

    fn mul(self, o: HurwitzUnit) -> HurwitzUnit {
        HurwitzUnit(tables().mul[self.index()][o.index()])
    }
}

impl From<HurwitzUnit> for Quat {
    fn from(u: HurwitzUnit) -> Quat {
        u.value()
    }
}

impl fmt::Debug for HurwitzUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HurwitzUnit({})", self.value())
    }
}

impl fmt::Display for HurwitzUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value(), f)
    }
}

impl Serialize for HurwitzUnit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for HurwitzUnit {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let q = Quat::deserialize(d)?;
        HurwitzUnit::from_quat(q)
            .ok_or_else(|| serde::de::Error::custom(format!("{q} is not a Hurwitz unit")))
    }
}

/// The entry alphabets used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    /// `{+1, -1}`
    PlusMinus,
    /// `{±1, ±i, ±j, ±k}`
    Q8,
    /// `Q8 ∪ qQ8`, sixteen elements, not closed under multiplication.
    QPlus,
    /// All 24 Hurwitz units.
    Hurwitz,
}

impl Alphabet {
    pub fn contains(self, u: HurwitzUnit) -> bool {
        match self {
            Alphabet::PlusMinus => u.sign().is_some(),
            Alphabet::Q8 => u.is_q8(),
            Alphabet::QPlus => u.is_q_plus(),
            Alphabet::Hurwitz => true,
        }
    }

    /// Members in canonical unit order.
    pub fn units(self) -> Vec<HurwitzUnit> {
        HurwitzUnit::all().filter(|&u| self.contains(u)).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::PlusMinus => "±1",
            Alphabet::Q8 => "Q8",
            Alphabet::QPlus => "Q+",
            Alphabet::Hurwitz => "Hurwitz",
        }
    }
}
