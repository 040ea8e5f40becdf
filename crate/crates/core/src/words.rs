//! Words in the free group of rank two.
//!
//! A [`Word`] is a freely reduced sequence of signed letters over two
//! generators. The generators are abstract (`G1`, `G2`); the [`Alphabet`] tag
//! only decides how they are printed: `z`/`y` for the generating pair used by
//! sequences, `x`/`y` for boundary words of disks.
//!
//! Text format: lowercase is a positive letter, uppercase its inverse, `1` is
//! the identity. Whitespace is ignored when parsing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::WordError;

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    G1,
    G2,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::G1 => Generator::G2,
            Generator::G2 => Generator::G1,
        }
    }
}

/// A generator together with a sign.
///
/// The derived order is `G1 < G1⁻¹ < G2 < G2⁻¹`, which fixes the canonical
/// rotation of cyclic words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: Generator, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub const fn pos(generator: Generator) -> Self {
        Letter::new(generator, false)
    }

    pub const fn neg(generator: Generator) -> Self {
        Letter::new(generator, true)
    }

    /// +1 or −1.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Letter {
        Letter::new(self.generator, !self.inverse)
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }

    pub fn swapped(self) -> Letter {
        Letter::new(self.generator.other(), self.inverse)
    }
}

/// Display names of the two generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Alphabet {
    /// `z` and `y`.
    #[default]
    ZY,
    /// `x` and `y`.
    XY,
}

impl Alphabet {
    pub fn symbol(self, generator: Generator) -> char {
        match (self, generator) {
            (Alphabet::ZY, Generator::G1) => 'z',
            (Alphabet::XY, Generator::G1) => 'x',
            (_, Generator::G2) => 'y',
        }
    }

    pub fn render(self, letter: Letter) -> char {
        let c = self.symbol(letter.generator);
        if letter.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

/// Cancels adjacent inverse pairs in place.
pub(crate) fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last().is_some_and(|last| last.is_inverse_of(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Strips mutually inverse first/last letters of a freely reduced sequence.
pub(crate) fn cyclic_core(letters: &[Letter]) -> &[Letter] {
    let mut lo = 0;
    let mut hi = letters.len();
    while hi - lo >= 2 && letters[lo].is_inverse_of(letters[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    &letters[lo..hi]
}

/// Start index of the lexicographically least rotation.
pub(crate) fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Alphabet,
}

impl Word {
    /// Freely reduces `letters`.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>, alphabet: Alphabet) -> Word {
        Word {
            letters: free_reduce(letters),
            alphabet,
        }
    }

    pub fn identity(alphabet: Alphabet) -> Word {
        Word {
            letters: Vec::new(),
            alphabet,
        }
    }

    pub fn generator(generator: Generator, alphabet: Alphabet) -> Word {
        Word {
            letters: vec![Letter::pos(generator)],
            alphabet,
        }
    }

    /// Parses with the alphabet inferred from the symbols present: `x` selects
    /// [`Alphabet::XY`], otherwise [`Alphabet::ZY`].
    pub fn parse(text: &str) -> Result<Word, WordError> {
        let mut has_x = false;
        let mut has_z = false;
        for c in text.chars() {
            match c.to_ascii_lowercase() {
                'x' => has_x = true,
                'z' => has_z = true,
                _ => {}
            }
        }
        if has_x && has_z {
            return Err(WordError::MixedAlphabet);
        }
        let alphabet = if has_x { Alphabet::XY } else { Alphabet::ZY };
        Word::parse_in(text, alphabet)
    }

    pub fn parse_in(text: &str, alphabet: Alphabet) -> Result<Word, WordError> {
        let g1 = alphabet.symbol(Generator::G1);
        let mut letters = Vec::new();
        let mut saw_one = false;
        for (pos, c) in text.chars().enumerate() {
            if c.is_whitespace() {
                continue;
            }
            if c == '1' {
                saw_one = true;
                continue;
            }
            let generator = match c.to_ascii_lowercase() {
                l if l == g1 => Generator::G1,
                'y' => Generator::G2,
                _ => {
                    return Err(WordError::BadSymbol {
                        symbol: c,
                        position: pos,
                    })
                }
            };
            letters.push(Letter::new(generator, c.is_ascii_uppercase()));
        }
        if saw_one && !letters.is_empty() {
            return Err(WordError::IdentityMixed);
        }
        Ok(Word::reduce(letters, alphabet))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Word {
        self.alphabet = alphabet;
        self
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// No letter carries sign −1.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| !l.inverse)
    }

    /// Number of positive occurrences of `generator`.
    pub fn count(&self, generator: Generator) -> usize {
        self.letters
            .iter()
            .filter(|l| l.generator == generator && !l.inverse)
            .count()
    }

    /// Product `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.alphabet != other.alphabet {
            return Err(WordError::AlphabetMismatch);
        }
        Ok(Word::reduce(
            self.letters.iter().chain(other.letters.iter()).copied(),
            self.alphabet,
        ))
    }

    pub fn pow(&self, k: u32) -> Word {
        Word::reduce(
            std::iter::repeat_n(self.letters.iter().copied(), k as usize).flatten(),
            self.alphabet,
        )
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
            alphabet: self.alphabet,
        }
    }

    pub fn reverse(&self) -> Word {
        // reversal keeps reduced words reduced
        Word {
            letters: self.letters.iter().rev().copied().collect(),
            alphabet: self.alphabet,
        }
    }

    pub fn swap(&self) -> Word {
        Word {
            letters: self.letters.iter().map(|l| l.swapped()).collect(),
            alphabet: self.alphabet,
        }
    }

    /// The map induced by `z ↦ xy`; the result is tagged [`Alphabet::XY`].
    pub fn substitute_z_to_xy(&self) -> Word {
        let (x, y) = (Generator::G1, Generator::G2);
        let mut image = Vec::with_capacity(2 * self.letters.len());
        for l in &self.letters {
            match (l.generator, l.inverse) {
                (Generator::G1, false) => image.extend([Letter::pos(x), Letter::pos(y)]),
                (Generator::G1, true) => image.extend([Letter::neg(y), Letter::neg(x)]),
                (Generator::G2, _) => image.push(*l),
            }
        }
        Word::reduce(image, Alphabet::XY)
    }

    pub fn cyclic_reduce(&self) -> CyclicWord {
        CyclicWord::from_word(self)
    }

    /// Signed exponent sums of `G1` and `G2`.
    pub fn abelianization(&self) -> (i64, i64) {
        self.letters.iter().fold((0, 0), |(a, b), l| match l.generator {
            Generator::G1 => (a + l.sign(), b),
            Generator::G2 => (a, b + l.sign()),
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let s: String = self.letters.iter().map(|&l| self.alphabet.render(l)).collect();
        f.write_str(&s)
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Conjugacy class of a word, stored as its cyclically reduced least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CyclicWord {
    canonical: Word,
}

impl CyclicWord {
    pub fn from_word(w: &Word) -> CyclicWord {
        let core = cyclic_core(&w.letters);
        CyclicWord::from_cyclically_reduced(core, w.alphabet)
    }

    pub(crate) fn from_cyclically_reduced(core: &[Letter], alphabet: Alphabet) -> CyclicWord {
        let start = least_rotation(core);
        let letters = core[start..].iter().chain(core[..start].iter()).copied().collect();
        CyclicWord {
            canonical: Word { letters, alphabet },
        }
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn into_word(self) -> Word {
        self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("x X").to_string(), "1");
        assert!(w("x X").is_empty());
        assert_eq!(w("z y Y z").to_string(), "zz");
        assert_eq!(w("zyyzyyzy").to_string(), "zyyzyyzy");
        assert_eq!(w("zYyyZ").to_string(), "zyZ");
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(w("Yzy").cyclic_reduce().to_string(), "z");
        assert_eq!(w("zy").cyclic_reduce(), w("yz").cyclic_reduce());
        assert_eq!(w("zyyzyyzy").cyclic_reduce(), w("yzyyzyyz").cyclic_reduce());
        assert_eq!(w("zyZ").cyclic_reduce().to_string(), "y");
        assert_eq!(w("yzyZY").cyclic_reduce().to_string(), "y");
        assert_eq!(w("zyZY").cyclic_reduce().to_string(), "zyZY");
        assert_eq!(w("yz").cyclic_reduce().to_string(), "zy");
    }

    #[test]
    fn canonical_rotation_uses_letter_order() {
        // z < Z < y < Y
        assert_eq!(w("yZ").cyclic_reduce().to_string(), "Zy");
        assert_eq!(w("Yz").cyclic_reduce().to_string(), "zY");
        assert_eq!(w("YYzz").cyclic_reduce().to_string(), "zzYY");
    }

    #[test]
    fn involutions() {
        assert_eq!(w("zy").invert().to_string(), "YZ");
        let w3 = w("zyyzyyzy");
        let image = w3.reverse().swap();
        assert_eq!(image.to_string(), "zyzzyzzy");
        assert_eq!(image.cyclic_reduce(), w("zzyzzyzy").cyclic_reduce());
        assert_eq!(w3.swap().swap(), w3);
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(w("z").substitute_z_to_xy().to_string(), "xy");
        assert_eq!(w("zzzzz").substitute_z_to_xy().to_string(), "xyxyxyxyxy");
        assert_eq!(w("zyyyyzyyyyyy").substitute_z_to_xy().to_string(), "xyyyyyxyyyyyyy");
        // z⁻¹ ↦ y⁻¹x⁻¹
        assert_eq!(w("Z").substitute_z_to_xy().to_string(), "YX");
        assert_eq!(w("zYZ").substitute_z_to_xy().to_string(), "xYX");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Word::parse("z!"),
            Err(WordError::BadSymbol { symbol: '!', .. })
        ));
        assert!(matches!(Word::parse("xz"), Err(WordError::MixedAlphabet)));
        assert!(matches!(Word::parse("1z"), Err(WordError::IdentityMixed)));
        assert!(Word::parse_in("x", Alphabet::ZY).is_err());
        assert_eq!(Word::parse("").unwrap(), Word::identity(Alphabet::ZY));
        assert_eq!(Word::parse("1").unwrap(), Word::identity(Alphabet::ZY));
    }

    #[test]
    fn alphabet_mismatch_on_concat() {
        assert!(matches!(w("xy").concat(&w("zy")), Err(WordError::AlphabetMismatch)));
        assert_eq!(w("zy").concat(&w("Yz")).unwrap().to_string(), "zz");
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(w("zyyzyyzy").abelianization(), (3, 5));
        assert_eq!(w("xyxY").abelianization(), (2, 0));
        assert_eq!(Word::identity(Alphabet::XY).abelianization(), (0, 0));
    }

    #[test]
    fn serde_as_text() {
        let word = w("xyXy");
        let json = serde_json::to_string(&word).unwrap();
        assert_eq!(json, "\"xyXy\"");
        assert_eq!(serde_json::from_str::<Word>(&json).unwrap(), word);
    }
}
