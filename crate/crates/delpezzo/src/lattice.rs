//! The divisor class lattice of the surface.
//!
//! Classes are written `a·l − Σ bᵢ·eᵢ` where `l` is the pullback of a plane
//! line and `e₁..e₅` are the classes of the exceptional curves. The lattice
//! is `Z⁶` with the pairing `l² = 1`, `eᵢ² = −1`, mixed products `0`, so the
//! Gram matrix of `(l, e₁..e₅)` is `diag(1, −1, −1, −1, −1, −1)`.
//!
//! All arithmetic is exact: coefficients are `i64` and every operation is
//! overflow-checked and panics rather than wrapping.

use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

#[inline]
pub(crate) fn checked_add(x: i64, y: i64) -> i64 {
    x.checked_add(y)
        .expect("integer overflow in lattice arithmetic")
}

#[inline]
pub(crate) fn checked_sub(x: i64, y: i64) -> i64 {
    x.checked_sub(y)
        .expect("integer overflow in lattice arithmetic")
}

#[inline]
pub(crate) fn checked_mul(x: i64, y: i64) -> i64 {
    x.checked_mul(y)
        .expect("integer overflow in lattice arithmetic")
}

/// Exact halving; the lattice formulas that divide by two are integral by
/// parity, so a nonzero remainder means the caller is broken.
#[inline]
fn half(n: i64) -> i64 {
    assert!(n % 2 == 0, "lattice formula produced an odd intermediate");
    n / 2
}

/// A divisor class `a·l − Σ bᵢ·eᵢ` on the surface.
///
/// The coordinate vector `(a; b₁..b₅)` determines the class; equality is
/// coordinatewise and there is no range or effectivity restriction. With
/// this sign convention the exceptional class `eᵢ` itself has `bᵢ = −1`,
/// while an irreducible curve of plane degree `a` with a `bᵢ`-fold point at
/// the i-th blown-up point has all coordinates nonnegative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorClass {
    /// Coefficient of `l`, the pullback of a plane line.
    pub a: i64,
    /// Coefficients of `e₁..e₅`, with `D = a·l − Σ bᵢ·eᵢ`.
    pub b: [i64; 5],
}

impl DivisorClass {
    /// The zero class.
    pub const ZERO: Self = Self::new(0, [0, 0, 0, 0, 0]);

    /// The pullback `l` of a plane line.
    pub const PLANE_LINE: Self = Self::new(1, [0, 0, 0, 0, 0]);

    /// The hyperplane class `h = 3l − Σ eᵢ` of the embedding in four-space.
    pub const HYPERPLANE: Self = Self::new(3, [1, 1, 1, 1, 1]);

    /// The canonical class `K = −h`.
    pub const CANONICAL: Self = Self::new(-3, [-1, -1, -1, -1, -1]);

    pub const fn new(a: i64, b: [i64; 5]) -> Self {
        Self { a, b }
    }

    /// The class `eᵢ` of the i-th exceptional curve, `i ∈ 1..=5`.
    pub fn exceptional(i: usize) -> Self {
        assert!((1..=5).contains(&i), "exceptional index must be in 1..=5");
        let mut b = [0i64; 5];
        b[i - 1] = -1;
        Self::new(0, b)
    }

    /// The class `l − eᵢ − eⱼ` of the strict transform of the plane line
    /// through the i-th and j-th points, `i ≠ j`.
    pub fn secant(i: usize, j: usize) -> Self {
        assert!((1..=5).contains(&i) && (1..=5).contains(&j) && i != j);
        let mut b = [0i64; 5];
        b[i - 1] = 1;
        b[j - 1] = 1;
        Self::new(1, b)
    }

    /// The class `2l − Σ eᵢ` of the strict transform of the conic through
    /// all five points.
    pub const fn conic() -> Self {
        Self::new(2, [1, 1, 1, 1, 1])
    }

    /// The intersection pairing `D₁·D₂ = a₁a₂ − Σ b₁ᵢb₂ᵢ`.
    ///
    /// Bilinear, symmetric, of signature `(1, 5)`.
    pub fn intersect(self, other: Self) -> i64 {
        let mut acc = checked_mul(self.a, other.a);
        for i in 0..5 {
            acc = checked_sub(acc, checked_mul(self.b[i], other.b[i]));
        }
        acc
    }

    /// Degree of the class as a curve in the ambient four-space:
    /// `3a − Σ bᵢ`, which equals `D·h`.
    pub fn degree(self) -> i64 {
        let d = self
            .b
            .iter()
            .fold(checked_mul(3, self.a), |acc, &bi| checked_sub(acc, bi));
        debug_assert_eq!(d, self.intersect(Self::HYPERPLANE));
        d
    }

    /// Self-intersection `D² = a² − Σ bᵢ²`.
    pub fn self_intersection(self) -> i64 {
        self.intersect(self)
    }

    /// Arithmetic genus `p_a(D) = ½(a−1)(a−2) − ½Σ bᵢ(bᵢ−1)`.
    ///
    /// Also computed as `½(D² − deg D) + 1` via adjunction; the two closed
    /// forms are asserted to agree.
    pub fn arithmetic_genus(self) -> i64 {
        let mut g = half(checked_mul(checked_sub(self.a, 1), checked_sub(self.a, 2)));
        for &bi in &self.b {
            g = checked_sub(g, half(checked_mul(bi, checked_sub(bi, 1))));
        }
        let adjunction = checked_add(
            half(checked_sub(self.self_intersection(), self.degree())),
            1,
        );
        assert_eq!(g, adjunction, "genus formulas disagree");
        g
    }

    /// Euler characteristic `χ(D) = ½·D·(D−K) + 1` by Riemann–Roch.
    pub fn euler_characteristic(self) -> i64 {
        checked_add(half(self.intersect(self - Self::CANONICAL)), 1)
    }

    /// Scalar multiple `n·D`.
    pub fn scale(self, n: i64) -> Self {
        Self::new(checked_mul(n, self.a), self.b.map(|bi| checked_mul(n, bi)))
    }
}

/// All multiplicity vectors with every entry in `lo..=hi`, in lexicographic
/// order (`b₁` most significant).
pub(crate) fn multiplicity_box(lo: i64, hi: i64) -> impl Iterator<Item = [i64; 5]> {
    let width = (hi - lo + 1) as u64;
    (0..width.pow(5)).map(move |mut n| {
        let mut b = [0i64; 5];
        for slot in b.iter_mut().rev() {
            *slot = lo + (n % width) as i64;
            n /= width;
        }
        b
    })
}

/// All classes with `|a| ≤ bound` and `|bᵢ| ≤ bound`, in lexicographic
/// coordinate order on `(a, b₁, …, b₅)`.
pub fn coefficient_box(bound: i64) -> impl Iterator<Item = DivisorClass> {
    assert!(bound >= 0);
    (-bound..=bound)
        .flat_map(move |a| multiplicity_box(-bound, bound).map(move |b| DivisorClass::new(a, b)))
}

impl Add for DivisorClass {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(
            checked_add(self.a, rhs.a),
            core::array::from_fn(|i| checked_add(self.b[i], rhs.b[i])),
        )
    }
}

impl Sub for DivisorClass {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1)
    }
}

/// Canonical text form: `a;b1,b2,b3,b4,b5` with signed decimal integers and
/// no spaces, e.g. `3;1,1,1,1,1`.
impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{};{},{},{},{},{}",
            self.a, self.b[0], self.b[1], self.b[2], self.b[3], self.b[4]
        )
    }
}

/// Error parsing the canonical text form of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseClassError {
    /// Byte offset of the offending position in the input.
    pub position: usize,
    pub message: &'static str,
}

impl fmt::Display for ParseClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid class at byte {}: {}",
            self.position, self.message
        )
    }
}

impl core::error::Error for ParseClassError {}

/// Scanner for the canonical integer grammar: optional `-`, then decimal
/// digits with no leading zero (and no `-0`). Rejecting non-canonical
/// spellings keeps parse and print exact inverses of each other.
pub(crate) struct IntScanner<'a> {
    bytes: &'a [u8],
    pub pos: usize,
}

impl<'a> IntScanner<'a> {
    pub fn new(s: &'a str) -> Self {
        Self {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: &'static str) -> Result<T, ParseClassError> {
        Err(ParseClassError {
            position: self.pos,
            message,
        })
    }

    pub fn expect_byte(&mut self, want: u8, message: &'static str) -> Result<(), ParseClassError> {
        if self.bytes.get(self.pos) == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(message)
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseClassError> {
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            self.err("expected end of input")
        }
    }

    pub fn integer(&mut self) -> Result<i64, ParseClassError> {
        let negative = if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(&c) = self.bytes.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as i64))
                .ok_or(ParseClassError {
                    position: start,
                    message: "integer out of range",
                })?;
            self.pos += 1;
        }
        let digits = &self.bytes[start..self.pos];
        if digits.is_empty() {
            return self.err("expected a digit");
        }
        if digits.len() > 1 && digits[0] == b'0' {
            return Err(ParseClassError {
                position: start,
                message: "leading zeros are not allowed",
            });
        }
        if negative && value == 0 {
            return Err(ParseClassError {
                position: start - 1,
                message: "negative zero is not allowed",
            });
        }
        Ok(if negative { -value } else { value })
    }
}

impl FromStr for DivisorClass {
    type Err = ParseClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = IntScanner::new(s);
        let a = sc.integer()?;
        sc.expect_byte(b';', "expected ';'")?;
        let mut b = [0i64; 5];
        for (i, slot) in b.iter_mut().enumerate() {
            if i > 0 {
                sc.expect_byte(b',', "expected ','")?;
            }
            *slot = sc.integer()?;
        }
        sc.expect_end()?;
        Ok(Self::new(a, b))
    }
}
