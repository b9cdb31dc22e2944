//! Very-ampleness and irreducible-curve criteria.
//!
//! On this surface a class is very ample exactly when it is ample, exactly
//! when it pairs strictly positively with every one of the 16 lines. The
//! positive-pairing test is [`is_very_ample`]; an independent sufficient
//! certificate goes through the triangular basis `D₀..D₅` of
//! [`decomposition_basis`], whose nonnegative combinations (with the `h`
//! coefficient strictly positive) are very ample. [`greedy_normalize`]
//! bridges the two: it re-marks the surface so that a class with positive
//! line pairings lands in the certificate's cone.

use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{checked_add, checked_sub, DivisorClass};
use crate::lines::{canonical_lines, classify_line, LineKind};
use crate::weyl::{blowdown_marking, WeylWord};

/// The triangular basis `D₀ = l`, `D₁ = l−e₁`, `D₂ = 2l−e₁−e₂`,
/// `D₃ = 2l−e₁−e₂−e₃`, `D₄ = 2l−e₁−e₂−e₃−e₄`, `D₅ = h`.
///
/// Each member moves in a base-point-free linear system, so any sum with
/// nonnegative coefficients and `D₅` appearing at least once is very ample.
pub fn decomposition_basis() -> [DivisorClass; 6] {
    [
        DivisorClass::PLANE_LINE,
        DivisorClass::new(1, [1, 0, 0, 0, 0]),
        DivisorClass::new(2, [1, 1, 0, 0, 0]),
        DivisorClass::new(2, [1, 1, 1, 0, 0]),
        DivisorClass::new(2, [1, 1, 1, 1, 0]),
        DivisorClass::HYPERPLANE,
    ]
}

/// Coordinates `(c₀..c₅)` of a class in [`decomposition_basis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub coeffs: [i64; 6],
}

impl Decomposition {
    /// `Σ cᵢ·Dᵢ`.
    pub fn reconstruct(&self) -> DivisorClass {
        let basis = decomposition_basis();
        let mut acc = DivisorClass::ZERO;
        for (coeff, base) in self.coeffs.into_iter().zip(basis) {
            acc = acc + base.scale(coeff);
        }
        acc
    }

    /// The cone condition: `c₀..c₄ ≥ 0` and `c₅ > 0`.
    pub fn certifies_very_ample(&self) -> bool {
        self.coeffs[..5].iter().all(|&c| c >= 0) && self.coeffs[5] > 0
    }
}

/// Solve the triangular system for the basis coordinates:
/// `c₅ = b₅`, `cᵢ = bᵢ − bᵢ₊₁` for `i = 1..4`, `c₀ = a − b₁ − b₂ − b₅`.
pub fn decompose(class: DivisorClass) -> Decomposition {
    let [b1, b2, b3, b4, b5] = class.b;
    let coeffs = [
        checked_sub(checked_sub(checked_sub(class.a, b1), b2), b5),
        checked_sub(b1, b2),
        checked_sub(b2, b3),
        checked_sub(b3, b4),
        checked_sub(b4, b5),
        b5,
    ];
    let dec = Decomposition { coeffs };
    debug_assert_eq!(dec.reconstruct(), class);
    dec
}

/// Sufficient very-ampleness certificate: the class lies in the cone of
/// [`decomposition_basis`]. Equivalently `b₁ ≥ b₂ ≥ … ≥ b₅ > 0` and
/// `a ≥ b₁ + b₂ + b₅`; both forms are computed and asserted to agree.
pub fn certifies_very_ample(class: DivisorClass) -> bool {
    let by_cone = decompose(class).certifies_very_ample();
    let [b1, b2, b3, b4, b5] = class.b;
    let by_inequalities = b1 >= b2
        && b2 >= b3
        && b3 >= b4
        && b4 >= b5
        && b5 > 0
        && class.a >= checked_add(checked_add(b1, b2), b5);
    assert_eq!(
        by_cone, by_inequalities,
        "certificate forms disagree for {class}"
    );
    by_cone
}

/// Whether the class is very ample: strictly positive pairing with every
/// one of the 16 lines.
pub fn is_very_ample(class: DivisorClass) -> bool {
    canonical_lines()
        .iter()
        .all(|&line| class.intersect(line) > 0)
}

/// Ampleness coincides with very-ampleness on this surface; kept as a named
/// alias for API clarity.
pub fn is_ample(class: DivisorClass) -> bool {
    is_very_ample(class)
}

/// Re-mark the surface greedily for the given class.
///
/// Picks five mutually skew lines: the slot-5 line minimizes the pairing
/// with the class over all 16 lines, slot 4 over the lines skew to it,
/// slot 3 over the lines skew to both. Of the three lines left, one meets
/// the other two; the skew pair fills slots 1 and 2 with the larger pairing
/// first. Ties are broken by canonical line order. Returns the marking word
/// for that tuple and the transformed class.
///
/// When the class pairs positively with every line, the transformed class
/// satisfies `b₁ ≥ b₂ ≥ … ≥ b₅ > 0` and `a ≥ b₁ + b₂ + b₅`; otherwise the
/// word and class are still returned but no normal form is guaranteed.
pub fn greedy_normalize(class: DivisorClass) -> (WeylWord, DivisorClass) {
    let lines = canonical_lines();
    let pairing: [i64; 16] = core::array::from_fn(|i| class.intersect(lines[i]));
    let skew = |x: usize, y: usize| lines[x].intersect(lines[y]) == 0;

    let pick = |candidates: &mut dyn Iterator<Item = usize>| -> usize {
        candidates
            .min_by_key(|&i| (pairing[i], i))
            .expect("candidate set is never empty")
    };

    let slot5 = pick(&mut (0..16));
    let slot4 = pick(&mut (0..16).filter(|&i| skew(i, slot5)));
    let slot3 = pick(&mut (0..16).filter(|&i| skew(i, slot5) && skew(i, slot4)));

    let rest: Vec<usize> = (0..16)
        .filter(|&i| skew(i, slot5) && skew(i, slot4) && skew(i, slot3))
        .collect();
    assert_eq!(rest.len(), 3, "three lines must avoid the greedy triple");
    let mut skew_pairs = rest
        .iter()
        .enumerate()
        .flat_map(|(s, &x)| rest[s + 1..].iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| skew(x, y));
    let (x, y) = skew_pairs
        .next()
        .expect("one of the three remaining lines meets the other two");
    assert!(
        skew_pairs.next().is_none(),
        "skew pair among the remaining three is unique"
    );
    let (slot1, slot2) = if pairing[y] > pairing[x] {
        (y, x)
    } else {
        (x, y)
    };

    let tuple = [slot1, slot2, slot3, slot4, slot5].map(|i| lines[i]);
    let word = blowdown_marking(tuple).expect("greedy picks are pairwise skew lines");
    let image = word.apply(class);
    (word, image)
}

/// Whether the class is that of a conic: degree 2 and self-intersection 0
/// (its arithmetic genus is then 0, which is asserted).
pub fn is_conic_class(class: DivisorClass) -> bool {
    let conic = class.degree() == 2 && class.self_intersection() == 0;
    if conic {
        assert_eq!(class.arithmetic_genus(), 0);
    }
    conic
}

/// Outcome of the irreducible-curve test, in decision order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibleVerdict {
    /// One of the 16 lines.
    Line(LineKind),
    /// A conic class: degree 2, self-intersection 0.
    Conic,
    /// Nonnegative pairing with every line and positive self-intersection.
    Positive,
    /// Contains no irreducible curve.
    No,
}

impl IrreducibleVerdict {
    /// The bare verdict word used in machine-readable output.
    pub fn word(&self) -> &'static str {
        match self {
            IrreducibleVerdict::Line(_) => "line",
            IrreducibleVerdict::Conic => "conic",
            IrreducibleVerdict::Positive => "positive",
            IrreducibleVerdict::No => "no",
        }
    }

    pub fn kind(&self) -> Option<LineKind> {
        match self {
            IrreducibleVerdict::Line(kind) => Some(*kind),
            _ => None,
        }
    }
}

impl fmt::Display for IrreducibleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleVerdict::Line(kind) => write!(f, "line {kind}"),
            _ => f.write_str(self.word()),
        }
    }
}

/// Decide whether the class contains an irreducible curve: one of the 16
/// lines, or a conic class, or a class with `D² > 0` pairing nonnegatively
/// with every line. The three cases are tested in that order and are
/// mutually exclusive (a line has `D² = −1` and so never reaches the third
/// test).
pub fn contains_irreducible(class: DivisorClass) -> IrreducibleVerdict {
    if let Ok(kind) = classify_line(class) {
        return IrreducibleVerdict::Line(kind);
    }
    if is_conic_class(class) {
        return IrreducibleVerdict::Conic;
    }
    if class.self_intersection() > 0
        && canonical_lines()
            .iter()
            .all(|&line| class.intersect(line) >= 0)
    {
        return IrreducibleVerdict::Positive;
    }
    IrreducibleVerdict::No
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: DivisorClass = DivisorClass::HYPERPLANE;

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(H).coeffs, [0, 0, 0, 0, 0, 1]);
        assert_eq!(
            decompose(DivisorClass::new(2, [1, 1, 0, 0, 0])).coeffs,
            [0, 0, 1, 0, 0, 0]
        );
        assert_eq!(
            decompose(DivisorClass::secant(1, 2)).coeffs,
            [-1, 0, 1, 0, 0, 0]
        );
    }

    #[test]
    fn decompose_basis_vectors() {
        for (n, base) in decomposition_basis().into_iter().enumerate() {
            let mut expected = [0i64; 6];
            expected[n] = 1;
            assert_eq!(decompose(base).coeffs, expected);
        }
    }

    #[test]
    fn reconstruction_is_exact() {
        for class in [
            H,
            DivisorClass::CANONICAL,
            DivisorClass::new(-7, [3, 0, -2, 5, 1]),
        ] {
            assert_eq!(decompose(class).reconstruct(), class);
        }
    }

    #[test]
    fn certificate_examples() {
        assert!(certifies_very_ample(H));
        assert!(!certifies_very_ample(DivisorClass::secant(1, 2)));
        assert!(certifies_very_ample(H.scale(2)));
        assert_eq!(decompose(H.scale(2)).coeffs, [0, 0, 0, 0, 0, 2]);
    }

    #[test]
    fn very_ample_examples() {
        assert!(is_very_ample(H));
        assert!(!is_very_ample(DivisorClass::exceptional(1)));
        assert!(!is_very_ample(DivisorClass::conic()));
    }

    #[test]
    fn ample_examples() {
        assert!(is_ample(H));
        assert!(!is_ample(DivisorClass::CANONICAL));
        assert!(is_ample(H.scale(5)));
    }

    #[test]
    fn greedy_normalize_hyperplane() {
        let (word, image) = greedy_normalize(H);
        assert_eq!(image, H);
        assert!(certifies_very_ample(image));
        assert_eq!(word.apply(H), image);
    }

    #[test]
    fn greedy_normalize_reaches_normal_form() {
        let class = DivisorClass::new(9, [4, 3, 3, 3, 3]);
        assert!(is_very_ample(class));
        let (word, image) = greedy_normalize(class);
        assert_eq!(word.apply(class), image);
        let [b1, b2, b3, b4, b5] = image.b;
        assert!(b1 >= b2 && b2 >= b3 && b3 >= b4 && b4 >= b5 && b5 > 0);
        assert!(image.a >= b1 + b2 + b5);
        assert!(certifies_very_ample(image));
    }

    #[test]
    fn greedy_normalize_without_hypothesis_still_runs() {
        // pairs to zero with E2..E5, so no normal form is promised
        let class = DivisorClass::new(1, [1, 0, 0, 0, 0]);
        let (word, image) = greedy_normalize(class);
        assert_eq!(word.apply(class), image);
    }

    #[test]
    fn conic_examples() {
        assert!(is_conic_class(DivisorClass::new(1, [1, 0, 0, 0, 0])));
        assert!(is_conic_class(DivisorClass::new(2, [1, 1, 1, 1, 0])));
        assert!(!is_conic_class(H));
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(
            contains_irreducible(DivisorClass::secant(3, 4)),
            IrreducibleVerdict::Line(LineKind::Secant(3, 4))
        );
        assert_eq!(
            contains_irreducible(DivisorClass::PLANE_LINE),
            IrreducibleVerdict::Positive
        );
        assert_eq!(
            contains_irreducible(DivisorClass::new(0, [-1, 1, 0, 0, 0])),
            IrreducibleVerdict::No
        );
        assert_eq!(
            contains_irreducible(DivisorClass::ZERO),
            IrreducibleVerdict::No
        );
    }

    #[test]
    fn verdict_rendering() {
        use alloc::string::ToString;
        let verdict = contains_irreducible(DivisorClass::secant(3, 4));
        assert_eq!(verdict.to_string(), "line F34");
        assert_eq!(verdict.word(), "line");
        assert_eq!(verdict.kind(), Some(LineKind::Secant(3, 4)));
        assert_eq!(IrreducibleVerdict::Positive.to_string(), "positive");
        assert_eq!(IrreducibleVerdict::No.kind(), None);
    }
}
