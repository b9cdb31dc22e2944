//! Lattice symmetries of the surface.
//!
//! Two families of generators act on divisor classes: permutations of the
//! five base indices, and the quadratic transformation centered at three of
//! them. On coordinates `(a; b₁..b₅)` the quadratic transformation at
//! `{i, j, k}` sends
//!
//! ```text
//! a  ↦ 2a − bᵢ − bⱼ − bₖ
//! bᵢ ↦  a − bⱼ − bₖ      (and cyclically for j, k)
//! ```
//!
//! leaving the other two coordinates alone. It is an involution, fixes the
//! canonical class and preserves the intersection pairing; together with the
//! permutations it generates a finite group of order 1920 that permutes the
//! 16 lines. [`blowdown_marking`] realizes the constructive half of that
//! story: a word of generators moving any five mutually skew lines into the
//! exceptional position `E₁..E₅`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::lattice::{checked_add, checked_mul, checked_sub, DivisorClass};
use crate::lines::{classify_line, LineKind};

/// A permutation of `{1..5}`, stored as its image list: `i ↦ images[i−1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: [usize; 5],
}

impl Permutation {
    /// Build from an image list, e.g. `[2, 1, 3, 4, 5]` for the swap of 1
    /// and 2. Panics unless the list is a bijection of `{1..5}`.
    pub fn from_images(images: [usize; 5]) -> Self {
        let mut seen = [false; 5];
        for &image in &images {
            assert!(
                (1..=5).contains(&image),
                "permutation images must lie in 1..=5"
            );
            assert!(!seen[image - 1], "permutation images must be distinct");
            seen[image - 1] = true;
        }
        Self { images }
    }

    pub fn identity() -> Self {
        Self {
            images: [1, 2, 3, 4, 5],
        }
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(i: usize, j: usize) -> Self {
        assert!((1..=5).contains(&i) && (1..=5).contains(&j) && i != j);
        let mut images = [1, 2, 3, 4, 5];
        images[i - 1] = j;
        images[j - 1] = i;
        Self { images }
    }

    pub fn image_of(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> [usize; 5] {
        self.images
    }

    /// All 120 permutations, in lexicographic image-list order.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(120);
        let mut images = [0usize; 5];
        fn fill(
            depth: usize,
            used: &mut [bool; 5],
            images: &mut [usize; 5],
            out: &mut Vec<Permutation>,
        ) {
            if depth == 5 {
                out.push(Permutation { images: *images });
                return;
            }
            for value in 1..=5 {
                if !used[value - 1] {
                    used[value - 1] = true;
                    images[depth] = value;
                    fill(depth + 1, used, images, out);
                    used[value - 1] = false;
                }
            }
        }
        fill(0, &mut [false; 5], &mut images, &mut out);
        out
    }
}

/// An unordered triple of distinct indices in `{1..5}`, stored ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    indices: [usize; 3],
}

impl Triple {
    /// Panics unless the three indices are distinct and lie in `1..=5`.
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        let mut indices = [i, j, k];
        indices.sort_unstable();
        assert!(
            indices[0] >= 1
                && indices[2] <= 5
                && indices[0] < indices[1]
                && indices[1] < indices[2],
            "quadratic centers must be three distinct indices in 1..=5"
        );
        Self { indices }
    }

    pub fn indices(&self) -> [usize; 3] {
        self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    /// All ten triples, ascending.
    pub fn all() -> Vec<Triple> {
        let mut out = Vec::with_capacity(10);
        for i in 1..=5 {
            for j in (i + 1)..=5 {
                for k in (j + 1)..=5 {
                    out.push(Triple { indices: [i, j, k] });
                }
            }
        }
        out
    }
}

/// One generator of the symmetry group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeylGenerator {
    /// Relabel the base indices: `a` unchanged, `b` permuted.
    Permute(Permutation),
    /// Quadratic transformation centered at the triple.
    Quadratic(Triple),
}

impl WeylGenerator {
    pub fn permutation(images: [usize; 5]) -> Self {
        Self::Permute(Permutation::from_images(images))
    }

    pub fn quadratic(i: usize, j: usize, k: usize) -> Self {
        Self::Quadratic(Triple::new(i, j, k))
    }

    /// Apply the generator to a class.
    pub fn apply(&self, class: DivisorClass) -> DivisorClass {
        match self {
            WeylGenerator::Permute(p) => {
                let mut b = [0i64; 5];
                for i in 1..=5 {
                    b[p.image_of(i) - 1] = class.b[i - 1];
                }
                DivisorClass::new(class.a, b)
            }
            WeylGenerator::Quadratic(t) => {
                let [i, j, k] = t.indices();
                let sum = checked_add(checked_add(class.b[i - 1], class.b[j - 1]), class.b[k - 1]);
                let mut out = class;
                out.a = checked_sub(checked_mul(2, class.a), sum);
                for idx in [i, j, k] {
                    // a − (sum of the other two centers' multiplicities)
                    out.b[idx - 1] = checked_sub(class.a, checked_sub(sum, class.b[idx - 1]));
                }
                out
            }
        }
    }
}

impl fmt::Display for WeylGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylGenerator::Permute(p) => {
                let [s1, s2, s3, s4, s5] = p.images();
                write!(f, "p({s1},{s2},{s3},{s4},{s5})")
            }
            WeylGenerator::Quadratic(t) => {
                let [i, j, k] = t.indices();
                write!(f, "q({i},{j},{k})")
            }
        }
    }
}

/// A finite sequence of generators, applied left to right. The empty word
/// is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylWord {
    generators: Vec<WeylGenerator>,
}

impl WeylWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(generators: Vec<WeylGenerator>) -> Self {
        Self { generators }
    }

    pub fn generators(&self) -> &[WeylGenerator] {
        &self.generators
    }

    pub fn push(&mut self, generator: WeylGenerator) {
        self.generators.push(generator);
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Apply the word to a class, first generator first.
    pub fn apply(&self, class: DivisorClass) -> DivisorClass {
        self.generators.iter().fold(class, |acc, g| g.apply(acc))
    }
}

impl From<Vec<WeylGenerator>> for WeylWord {
    fn from(generators: Vec<WeylGenerator>) -> Self {
        Self::new(generators)
    }
}

/// Serialized form: generators joined by commas, e.g.
/// `q(1,2,3),p(2,1,3,4,5)`; the empty word prints as the empty string.
impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, g) in self.generators.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Error parsing the serialized form of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseWordError {
    /// Malformed text; the position is a byte offset.
    Syntax {
        position: usize,
        message: &'static str,
    },
    /// A `q(...)` generator whose indices are not three distinct ascending
    /// values.
    InvalidTriple { position: usize },
    /// A `p(...)` generator whose image list is not a permutation of 1..5.
    InvalidPermutation { position: usize },
}

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWordError::Syntax { position, message } => {
                write!(f, "invalid word at byte {position}: {message}")
            }
            ParseWordError::InvalidTriple { position } => {
                write!(
                    f,
                    "invalid word at byte {position}: quadratic centers must be three distinct ascending indices"
                )
            }
            ParseWordError::InvalidPermutation { position } => {
                write!(
                    f,
                    "invalid word at byte {position}: permutation must list each index 1..5 exactly once"
                )
            }
        }
    }
}

impl core::error::Error for ParseWordError {}

impl FromStr for WeylWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut generators = Vec::new();
        if bytes.is_empty() {
            return Ok(Self::identity());
        }
        loop {
            generators.push(parse_generator(bytes, &mut pos)?);
            match bytes.get(pos) {
                None => break,
                Some(b',') => pos += 1,
                Some(_) => {
                    return Err(ParseWordError::Syntax {
                        position: pos,
                        message: "expected ','",
                    })
                }
            }
        }
        Ok(Self::new(generators))
    }
}

fn parse_generator(bytes: &[u8], pos: &mut usize) -> Result<WeylGenerator, ParseWordError> {
    let start = *pos;
    let arity = match bytes.get(*pos) {
        Some(b'p') => 5,
        Some(b'q') => 3,
        _ => {
            return Err(ParseWordError::Syntax {
                position: *pos,
                message: "expected generator 'p' or 'q'",
            })
        }
    };
    *pos += 1;
    expect(bytes, pos, b'(', "expected '('")?;
    let mut indices = [0usize; 5];
    for (n, slot) in indices.iter_mut().enumerate().take(arity) {
        if n > 0 {
            expect(bytes, pos, b',', "expected ','")?;
        }
        *slot = parse_index(bytes, pos)?;
    }
    expect(bytes, pos, b')', "expected ')'")?;
    if arity == 3 {
        let [i, j, k] = [indices[0], indices[1], indices[2]];
        if !(i < j && j < k) {
            return Err(ParseWordError::InvalidTriple { position: start });
        }
        Ok(WeylGenerator::Quadratic(Triple { indices: [i, j, k] }))
    } else {
        let images = [indices[0], indices[1], indices[2], indices[3], indices[4]];
        let mut seen = [false; 5];
        for &image in &images {
            if seen[image - 1] {
                return Err(ParseWordError::InvalidPermutation { position: start });
            }
            seen[image - 1] = true;
        }
        Ok(WeylGenerator::Permute(Permutation { images }))
    }
}

fn expect(
    bytes: &[u8],
    pos: &mut usize,
    want: u8,
    message: &'static str,
) -> Result<(), ParseWordError> {
    if bytes.get(*pos) == Some(&want) {
        *pos += 1;
        Ok(())
    } else {
        Err(ParseWordError::Syntax {
            position: *pos,
            message,
        })
    }
}

fn parse_index(bytes: &[u8], pos: &mut usize) -> Result<usize, ParseWordError> {
    match bytes.get(*pos) {
        Some(&c) if (b'1'..=b'5').contains(&c) => {
            *pos += 1;
            Ok((c - b'0') as usize)
        }
        _ => Err(ParseWordError::Syntax {
            position: *pos,
            message: "expected an index 1..5",
        }),
    }
}

/// Error from [`blowdown_marking`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarkingError {
    /// An input class is not one of the 16 lines.
    NotALine(DivisorClass),
    /// Two of the input lines meet.
    NotSkew(DivisorClass, DivisorClass),
}

impl fmt::Display for MarkingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkingError::NotALine(class) => write!(f, "{class} is not one of the 16 line classes"),
            MarkingError::NotSkew(x, y) => write!(f, "lines {x} and {y} are not skew"),
        }
    }
}

impl core::error::Error for MarkingError {}

/// Produce a word moving an ordered tuple of five mutually skew lines into
/// the exceptional position, i.e. `w(tuple[i]) = E_{i+1}` for each slot.
///
/// The word is built one slot at a time. If the current line's image is
/// already some `E_j` a transposition moves it into place. If it is a secant
/// `F_jk`, one quadratic transformation centered at a triple through
/// `{j, k}` turns it into an exceptional class (ties among admissible
/// triples broken lexicographically), followed by a transposition. If it is
/// the conic `G` (possible only in the first slot, since `G` meets every
/// exceptional curve) a quadratic transformation first turns it into a
/// secant. Later slots only use generators supported on indices not yet
/// placed, so earlier placements stay put. The result is at most 10
/// generators long.
pub fn blowdown_marking(tuple: [DivisorClass; 5]) -> Result<WeylWord, MarkingError> {
    for &class in &tuple {
        if classify_line(class).is_err() {
            return Err(MarkingError::NotALine(class));
        }
    }
    for s in 0..5 {
        for t in (s + 1)..5 {
            if tuple[s].intersect(tuple[t]) != 0 {
                return Err(MarkingError::NotSkew(tuple[s], tuple[t]));
            }
        }
    }

    let mut word = WeylWord::identity();
    let mut current = tuple;
    fn emit(word: &mut WeylWord, current: &mut [DivisorClass; 5], g: WeylGenerator) {
        *current = current.map(|class| g.apply(class));
        word.push(g);
    }

    for slot in 1..=5 {
        loop {
            let kind = classify_line(current[slot - 1]).expect("generators permute the line set");
            match kind {
                LineKind::Exceptional(j) => {
                    debug_assert!(j >= slot, "slot {slot} saw already-placed index {j}");
                    if j != slot {
                        emit(
                            &mut word,
                            &mut current,
                            WeylGenerator::Permute(Permutation::transposition(slot, j)),
                        );
                    }
                    break;
                }
                LineKind::Secant(j, k) => {
                    // skewness with the placed E's forces j, k ≥ slot
                    let center = (slot..=5)
                        .find(|&m| m != j && m != k)
                        .expect("pairwise-skew tuple left no admissible center");
                    emit(
                        &mut word,
                        &mut current,
                        WeylGenerator::Quadratic(Triple::new(center, j, k)),
                    );
                    // the secant's image is E_center; next pass places it
                }
                LineKind::Conic => {
                    debug_assert_eq!(slot, 1, "the conic meets every exceptional class");
                    emit(
                        &mut word,
                        &mut current,
                        WeylGenerator::Quadratic(Triple::new(1, 2, 3)),
                    );
                    // image is now the secant F45
                }
            }
        }
    }
    debug_assert!((1..=5).all(|i| current[i - 1] == DivisorClass::exceptional(i)));
    Ok(word)
}

/// A linear map of the class lattice in coordinate form; column `c` is the
/// image of the c-th coordinate unit vector of `(a, b₁..b₅)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeMap {
    columns: [[i64; 6]; 6],
}

fn coords(class: DivisorClass) -> [i64; 6] {
    [
        class.a, class.b[0], class.b[1], class.b[2], class.b[3], class.b[4],
    ]
}

fn class_from_coords(v: [i64; 6]) -> DivisorClass {
    DivisorClass::new(v[0], [v[1], v[2], v[3], v[4], v[5]])
}

impl LatticeMap {
    pub fn identity() -> Self {
        let mut columns = [[0i64; 6]; 6];
        for (c, column) in columns.iter_mut().enumerate() {
            column[c] = 1;
        }
        Self { columns }
    }

    /// The coordinate matrix of a generator.
    pub fn from_generator(g: &WeylGenerator) -> Self {
        let mut columns = [[0i64; 6]; 6];
        for (c, column) in columns.iter_mut().enumerate() {
            let mut unit = [0i64; 6];
            unit[c] = 1;
            *column = coords(g.apply(class_from_coords(unit)));
        }
        Self { columns }
    }

    fn apply_coords(&self, v: [i64; 6]) -> [i64; 6] {
        let mut out = [0i64; 6];
        for (column, &coeff) in self.columns.iter().zip(&v) {
            for (acc, &entry) in out.iter_mut().zip(column) {
                *acc = checked_add(*acc, checked_mul(entry, coeff));
            }
        }
        out
    }

    pub fn apply(&self, class: DivisorClass) -> DivisorClass {
        class_from_coords(self.apply_coords(coords(class)))
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut columns = [[0i64; 6]; 6];
        for (c, column) in columns.iter_mut().enumerate() {
            *column = self.apply_coords(inner.columns[c]);
        }
        Self { columns }
    }
}

/// Breadth-first closure of the full generator set (all 120 permutations
/// and all 10 quadratic transformations) under composition. Terminates with
/// the whole finite symmetry group, each element as a [`LatticeMap`].
pub fn group_closure() -> BTreeSet<LatticeMap> {
    let mut generators: Vec<LatticeMap> = Vec::with_capacity(130);
    generators.extend(
        Permutation::all()
            .into_iter()
            .map(|p| LatticeMap::from_generator(&WeylGenerator::Permute(p))),
    );
    generators.extend(
        Triple::all()
            .into_iter()
            .map(|t| LatticeMap::from_generator(&WeylGenerator::Quadratic(t))),
    );

    let mut seen = BTreeSet::new();
    seen.insert(LatticeMap::identity());
    let mut frontier = VecDeque::from([LatticeMap::identity()]);
    while let Some(element) = frontier.pop_front() {
        for g in &generators {
            let next = g.compose(&element);
            if seen.insert(next) {
                frontier.push_back(next);
            }
        }
    }
    seen
}
