//! Primitivity in the free group of rank two.
//!
//! [`is_primitive`] is the ground truth: greedy Whitehead descent on cyclic
//! length. By peak reduction, a cyclically reduced word that is not of minimal
//! length in its automorphism orbit can be shortened by a single Whitehead
//! automorphism, and in rank two the only ones that can change cyclic length
//! are the eight multiplier maps `b ↦ b·a^±1`, `b ↦ a^±1·b`. A word is
//! primitive iff the descent bottoms out at length one.
//!
//! The other routes ([`positive_primitive_check`], [`detect_obstruction`])
//! are closed-form criteria that the tests check against the descent.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::PrimitivityError;
use crate::words::{cyclic_core, free_reduce, Alphabet, CyclicWord, Generator, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A Whitehead automorphism of the free group of rank two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WhiteheadMove {
    /// `target ↦ target·by` (right) or `target ↦ by·target` (left); the other
    /// generator is fixed. `by` is a letter of the other generator.
    Multiply { target: Generator, by: Letter, side: Side },
    /// Exchanges the generators.
    Swap,
    /// Inverts one generator.
    Invert(Generator),
}

impl WhiteheadMove {
    /// The eight length-changing moves in the fixed order used by the descent.
    pub fn multipliers() -> [WhiteheadMove; 8] {
        let mut out = [WhiteheadMove::Swap; 8];
        let mut i = 0;
        for target in [Generator::G2, Generator::G1] {
            for inverse in [false, true] {
                for side in [Side::Right, Side::Left] {
                    out[i] = WhiteheadMove::Multiply {
                        target,
                        by: Letter::new(target.other(), inverse),
                        side,
                    };
                    i += 1;
                }
            }
        }
        out
    }

    /// All twelve moves: multipliers, then the swap and the two inversions.
    pub fn all() -> Vec<WhiteheadMove> {
        let mut v = Self::multipliers().to_vec();
        v.extend([
            WhiteheadMove::Swap,
            WhiteheadMove::Invert(Generator::G1),
            WhiteheadMove::Invert(Generator::G2),
        ]);
        v
    }

    fn image_into(self, l: Letter, out: &mut Vec<Letter>) {
        match self {
            WhiteheadMove::Multiply { target, by, side } if l.generator == target => {
                let pair = match (side, l.inverse) {
                    (Side::Right, false) => [l, by],
                    (Side::Left, false) => [by, l],
                    (Side::Right, true) => [by.inv(), l],
                    (Side::Left, true) => [l, by.inv()],
                };
                out.extend(pair);
            }
            WhiteheadMove::Multiply { .. } => out.push(l),
            WhiteheadMove::Swap => out.push(l.swapped()),
            WhiteheadMove::Invert(g) if l.generator == g => out.push(l.inv()),
            WhiteheadMove::Invert(_) => out.push(l),
        }
    }

    fn apply_letters(self, letters: &[Letter]) -> Vec<Letter> {
        let mut image = Vec::with_capacity(letters.len() * 2);
        for &l in letters {
            self.image_into(l, &mut image);
        }
        free_reduce(image)
    }

    pub fn apply(self, w: &Word) -> Word {
        Word::reduce(self.apply_letters(w.letters()), w.alphabet())
    }

    /// Human-readable form such as `y -> yX`.
    pub fn describe(self, alphabet: Alphabet) -> String {
        let sym = |g: Generator| alphabet.symbol(g);
        match self {
            WhiteheadMove::Multiply { target, by, side } => {
                let t = sym(target);
                let b = alphabet.render(by);
                match side {
                    Side::Right => format!("{t} -> {t}{b}"),
                    Side::Left => format!("{t} -> {b}{t}"),
                }
            }
            WhiteheadMove::Swap => format!("{} <-> {}", sym(Generator::G1), sym(Generator::G2)),
            WhiteheadMove::Invert(g) => {
                format!("{} -> {}", sym(g), sym(g).to_ascii_uppercase())
            }
        }
    }
}

/// Runs the greedy descent on a cyclically reduced sequence. `on_step` sees
/// each accepted move and the cyclic core it produced.
fn descend(mut current: Vec<Letter>, mut on_step: impl FnMut(WhiteheadMove, &[Letter])) -> Vec<Letter> {
    let moves = WhiteheadMove::multipliers();
    'outer: loop {
        if current.len() <= 1 {
            return current;
        }
        for mv in moves {
            let image = mv.apply_letters(&current);
            let core = cyclic_core(&image);
            if core.len() < current.len() {
                let core = core.to_vec();
                on_step(mv, &core);
                current = core;
                continue 'outer;
            }
        }
        return current;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Primitive,
    NotPrimitive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Primitive => "Primitive",
            Verdict::NotPrimitive => "NotPrimitive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub automorphism: String,
    pub word: CyclicWord,
    pub length: usize,
}

/// Record of a Whitehead descent. Lengths along `steps` strictly decrease.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiteheadTrace {
    pub start: CyclicWord,
    pub steps: Vec<TraceStep>,
    pub verdict: Verdict,
}

impl WhiteheadTrace {
    pub fn final_length(&self) -> usize {
        self.steps.last().map_or(self.start.len(), |s| s.length)
    }

    /// One line per step.
    pub fn to_log(&self) -> String {
        let mut out = format!("start: {} (length {})\n", self.start, self.start.len());
        for s in &self.steps {
            out.push_str(&format!("{}: {} (length {})\n", s.automorphism, s.word, s.length));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

/// True iff `w` belongs to some basis of the free group. The identity is not
/// primitive.
pub fn is_primitive(w: &Word) -> bool {
    let core = cyclic_core(w.letters()).to_vec();
    if core.is_empty() {
        return false;
    }
    descend(core, |_, _| {}).len() == 1
}

/// [`is_primitive`] with the full descent recorded.
pub fn whitehead_trace(w: &Word) -> WhiteheadTrace {
    let alphabet = w.alphabet();
    let start = w.cyclic_reduce();
    let mut steps = Vec::new();
    let last = descend(start.canonical().letters().to_vec(), |mv, core| {
        steps.push(TraceStep {
            automorphism: mv.describe(alphabet),
            word: CyclicWord::from_cyclically_reduced(core, alphabet),
            length: core.len(),
        });
    });
    let verdict = if last.len() == 1 {
        Verdict::Primitive
    } else {
        Verdict::NotPrimitive
    };
    WhiteheadTrace { start, steps, verdict }
}

/// Returns `(u, k)` when the cyclic class of `w` is `u^k` with `u` primitive,
/// `k >= 1`.
pub fn primitive_root(w: &Word) -> Option<(CyclicWord, usize)> {
    let cyc = w.cyclic_reduce();
    let letters = cyc.canonical().letters();
    let len = letters.len();
    for d in (1..=len).filter(|d| len.is_multiple_of(*d)) {
        let periodic = (d..len).all(|i| letters[i] == letters[i - d]);
        if !periodic {
            continue;
        }
        let root = Word::reduce(letters[..d].iter().copied(), w.alphabet());
        if is_primitive(&root) {
            return Some((root.cyclic_reduce(), len / d));
        }
    }
    None
}

/// The word `w(m, n)`: `g(1) g(1+m) … g(1+(m+n−1)m)` where `g(i) = z` iff
/// `i ≡ 1, …, m (mod m+n)`.
pub fn canonical_primitive(m: u64, n: u64) -> Result<Word, PrimitivityError> {
    if m == 0 || n == 0 || m > n {
        return Err(PrimitivityError::BadCounts { m, n });
    }
    let total = m + n;
    let letters = (0..total).map(|k| {
        // i − 1 = k·m
        let residue = (k * m) % total;
        let generator = if residue < m { Generator::G1 } else { Generator::G2 };
        Letter::pos(generator)
    });
    Ok(Word::reduce(letters, Alphabet::ZY))
}

/// Closed-form primitivity test for positive words: with `m ≤ n` letters of
/// the two generators, primitive iff `gcd(m, n) = 1` and `w` is a cyclic
/// permutation of `w(m, n)`. Roles are exchanged when `m > n`.
pub fn positive_primitive_check(w: &Word) -> Result<bool, PrimitivityError> {
    if !w.is_positive() {
        return Err(PrimitivityError::NotPositive);
    }
    let m = w.count(Generator::G1) as u64;
    let n = w.count(Generator::G2) as u64;
    if m == 0 || n == 0 {
        return Err(PrimitivityError::MissingGenerator);
    }
    let (w, m, n) = if m > n { (w.swap(), n, m) } else { (w.clone(), m, n) };
    if m.gcd(&n) != 1 {
        return Ok(false);
    }
    let reference = canonical_primitive(m, n)?.with_alphabet(w.alphabet());
    Ok(w.cyclic_reduce() == reference.cyclic_reduce())
}

/// Signed exponent sums of the two generators.
pub fn abelianization(w: &Word) -> (i64, i64) {
    w.abelianization()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionKind {
    /// Both `xy` and `xy⁻¹` occur.
    MixedSignPair,
    /// Both `xyⁿx` and `yⁿ⁺²` occur.
    GapPair(usize),
}

/// A cyclic subword occurrence in the canonical cyclic word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub start: usize,
    pub len: usize,
}

/// Orientation re-assignment: which generators were negated before matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignAssignment {
    pub flip_first: bool,
    pub flip_second: bool,
}

impl SignAssignment {
    pub const ALL: [SignAssignment; 4] = [
        SignAssignment {
            flip_first: false,
            flip_second: false,
        },
        SignAssignment {
            flip_first: true,
            flip_second: false,
        },
        SignAssignment {
            flip_first: false,
            flip_second: true,
        },
        SignAssignment {
            flip_first: true,
            flip_second: true,
        },
    ];

    fn apply(self, l: Letter) -> Letter {
        let flip = match l.generator {
            Generator::G1 => self.flip_first,
            Generator::G2 => self.flip_second,
        };
        if flip {
            l.inv()
        } else {
            l
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub witnesses: [Occurrence; 2],
    pub assignment: SignAssignment,
}

const X: Letter = Letter::pos(Generator::G1);
const Y: Letter = Letter::pos(Generator::G2);

fn find_pair(s: &[Letter], a: Letter, b: Letter) -> Option<usize> {
    let n = s.len();
    if n < 2 {
        return None;
    }
    (0..n).find(|&i| s[i] == a && s[(i + 1) % n] == b)
}

fn find_mixed(s: &[Letter]) -> Option<[Occurrence; 2]> {
    let i = find_pair(s, X, Y)?;
    let j = find_pair(s, X, Y.inv())?;
    Some([Occurrence { start: i, len: 2 }, Occurrence { start: j, len: 2 }])
}

fn find_gap(s: &[Letter]) -> Option<(usize, [Occurrence; 2])> {
    let len = s.len();
    let at = |i: usize| s[i % len];
    // first occurrence of x yᵏ x for each k, cyclic, total length ≤ len
    let mut gaps: Vec<(usize, usize)> = Vec::new();
    for i in (0..len).filter(|&i| s[i] == X) {
        let mut k = 0;
        while k + 2 <= len && at(i + 1 + k) == Y {
            k += 1;
        }
        if k + 2 <= len && at(i + 1 + k) == X && !gaps.iter().any(|&(g, _)| g == k) {
            gaps.push((k, i));
        }
    }
    if gaps.is_empty() {
        return None;
    }
    // longest run of y, capped at the cyclic length
    let (mut best_len, mut best_start) = (0usize, 0usize);
    if s.iter().all(|&l| l == Y) {
        best_len = len;
    } else {
        for i in (0..len).filter(|&i| s[i] == Y && at(i + len - 1) != Y) {
            let mut k = 0;
            while k < len && at(i + k) == Y {
                k += 1;
            }
            if k > best_len {
                best_len = k;
                best_start = i;
            }
        }
    }
    gaps.sort_unstable();
    gaps.into_iter().find(|&(k, _)| k + 2 <= best_len).map(|(k, i)| {
        (
            k,
            [
                Occurrence { start: i, len: k + 2 },
                Occurrence {
                    start: best_start,
                    len: k + 2,
                },
            ],
        )
    })
}

/// Scans the canonical cyclic word of `w` under the four orientation
/// re-assignments for a subword pattern that rules out `w` being a positive
/// power of a primitive element. Sound, not complete.
pub fn detect_obstruction(w: &Word) -> Option<Obstruction> {
    let cyc = w.cyclic_reduce();
    let base = cyc.canonical().letters();
    if base.len() < 2 {
        return None;
    }
    for assignment in SignAssignment::ALL {
        let s: Vec<Letter> = base.iter().map(|&l| assignment.apply(l)).collect();
        if let Some(witnesses) = find_mixed(&s) {
            return Some(Obstruction {
                kind: ObstructionKind::MixedSignPair,
                witnesses,
                assignment,
            });
        }
        if let Some((n, witnesses)) = find_gap(&s) {
            return Some(Obstruction {
                kind: ObstructionKind::GapPair(n),
                witnesses,
                assignment,
            });
        }
    }
    None
}
