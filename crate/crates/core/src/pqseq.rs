//! Lens space parameters and `(p, q)`-sequences.
//!
//! For `0 <= j <= p`, the word `w_j` has length `p` and carries `z` exactly at
//! the positions `i ≡ 1, 1+q, …, 1+(j−1)q (mod p)`, 1-based. Of the `p + 1`
//! words, `w_j` is primitive iff `j ∈ {1, q', p−q', p−1}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{ParamsError, RecordError};
use crate::primitivity::is_primitive;
use crate::record::{from_record, to_record, SEQUENCE_SCHEMA};
use crate::words::{Alphabet, Generator, Letter, Word};

/// Oracle-check every word of a sequence up to this `p`.
pub const DEFAULT_VERIFY_THRESHOLD: u64 = 64;

/// A coprime pair `(p, q)` with `0 < q < p`.
///
/// `q_norm = min(q, p − q)` and `q_prime` is the unique integer in
/// `[1, p/2]` with `q_norm · q_prime ≡ ±1 (mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct LensParams {
    pub p: u64,
    pub q: u64,
    pub q_norm: u64,
    pub q_prime: u64,
}

#[derive(Deserialize)]
struct RawParams {
    p: u64,
    q: u64,
}

impl TryFrom<RawParams> for LensParams {
    type Error = ParamsError;
    fn try_from(raw: RawParams) -> Result<Self, Self::Error> {
        LensParams::new(raw.p, raw.q)
    }
}

/// Inverse of `a` modulo `p`; `a` and `p` coprime.
pub fn mod_inverse(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i64) as u64
}

impl LensParams {
    pub fn new(p: u64, q: u64) -> Result<LensParams, ParamsError> {
        if p < 2 {
            return Err(ParamsError::PTooSmall(p));
        }
        if q == 0 || q >= p {
            return Err(ParamsError::QOutOfRange { p, q });
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(ParamsError::NotCoprime { p, q, gcd });
        }
        let q_norm = q.min(p - q);
        let inv = mod_inverse(q_norm, p);
        let q_prime = inv.min(p - inv);
        Ok(LensParams { p, q, q_norm, q_prime })
    }

    /// The same lens space presented with `q_norm`.
    pub fn normalized(self) -> LensParams {
        LensParams { q: self.q_norm, ..self }
    }

    /// The homeomorphic presentation with `q = q'`.
    pub fn dual(self) -> LensParams {
        LensParams::new(self.p, self.q_prime).expect("q' is coprime to p")
    }

    /// `{1, q', p − q', p − 1}`.
    pub fn four_primitives(self) -> BTreeSet<u64> {
        let p = self.p;
        [1, self.q_prime, p - self.q_prime, p - 1].into_iter().collect()
    }

    /// `w_j`, built from the raw `q`.
    pub fn word(self, j: u64) -> Result<Word, ParamsError> {
        let p = self.p;
        if j > p {
            return Err(ParamsError::IndexOutOfRange { p, j });
        }
        let mut is_z = vec![false; p as usize];
        for k in 0..j {
            // position 1 + kq, stored 0-based
            is_z[((k * self.q) % p) as usize] = true;
        }
        let letters = is_z
            .into_iter()
            .map(|z| Letter::pos(if z { Generator::G1 } else { Generator::G2 }));
        Ok(Word::reduce(letters, Alphabet::ZY))
    }
}

/// Shorthand for [`LensParams::new`].
pub fn make_params(p: u64, q: u64) -> Result<LensParams, ParamsError> {
    LensParams::new(p, q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceEntry {
    pub index: u64,
    pub word: Word,
    /// Verdict from the closed-form index set.
    pub primitive: bool,
    /// Whitehead verdict, when the sequence was verified.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PqSequence {
    pub params: LensParams,
    pub primitive_indices: BTreeSet<u64>,
    pub words: Vec<SequenceEntry>,
}

impl PqSequence {
    pub fn new(params: LensParams) -> PqSequence {
        Self::with_threshold(params, DEFAULT_VERIFY_THRESHOLD)
    }

    /// Oracle verdicts are attached when `p <= verify_threshold`.
    pub fn with_threshold(params: LensParams, verify_threshold: u64) -> PqSequence {
        let primitive_indices = params.four_primitives();
        let verify = params.p <= verify_threshold;
        let words = (0..=params.p)
            .map(|j| {
                let word = params.word(j).expect("j <= p");
                let oracle = verify.then(|| is_primitive(&word));
                SequenceEntry {
                    index: j,
                    primitive: primitive_indices.contains(&j),
                    word,
                    oracle,
                }
            })
            .collect();
        PqSequence {
            params,
            primitive_indices,
            words,
        }
    }

    pub fn word(&self, j: u64) -> Option<&Word> {
        self.words.get(j as usize).map(|e| &e.word)
    }

    /// Indices the oracle found primitive, if verified.
    pub fn oracle_indices(&self) -> Option<BTreeSet<u64>> {
        self.words
            .iter()
            .map(|e| e.oracle.map(|v| (e.index, v)))
            .collect::<Option<Vec<_>>>()
            .map(|v| v.into_iter().filter(|&(_, p)| p).map(|(j, _)| j).collect())
    }

    /// False only when an oracle verdict contradicts the index formula.
    pub fn is_consistent(&self) -> bool {
        self.words.iter().all(|e| e.oracle.is_none_or(|o| o == e.primitive))
    }

    /// `w_{p−j}` is a cyclic permutation of the reverse of `swap(w_j)`.
    pub fn check_symmetry(&self) -> bool {
        let p = self.params.p as usize;
        (0..=p).all(|j| {
            let left = self.words[p - j].word.cyclic_reduce();
            let right = self.words[j].word.swap().reverse().cyclic_reduce();
            left == right
        })
    }

    pub fn to_table(&self) -> String {
        let LensParams { p, q, q_norm, q_prime } = self.params;
        let idx: Vec<String> = self.primitive_indices.iter().map(u64::to_string).collect();
        let mut out = String::new();
        let _ = writeln!(out, "(p, q) = ({p}, {q})  q_norm = {q_norm}  q' = {q_prime}");
        let _ = writeln!(out, "primitive indices: {{{}}}", idx.join(", "));
        let width = (p as usize).max(3);
        let jw = p.to_string().len();
        let _ = writeln!(out, "{:>jw$}  {:<width$}  primitive  oracle", "j", "w_j");
        for e in &self.words {
            let oracle = match e.oracle {
                None => "-",
                Some(true) => "yes",
                Some(false) => "no",
            };
            let flag = if e.primitive { "yes" } else { "no" };
            let _ = writeln!(
                out,
                "{:>jw$}  {:<width$}  {:<9}  {}",
                e.index,
                e.word.to_string(),
                flag,
                oracle
            );
        }
        out
    }

    pub fn to_record(&self) -> String {
        to_record(SEQUENCE_SCHEMA, self)
    }

    pub fn from_record(text: &str) -> Result<PqSequence, RecordError> {
        from_record(SEQUENCE_SCHEMA, text)
    }
}

/// Shorthand for [`PqSequence::new`].
pub fn make_sequence(params: LensParams) -> PqSequence {
    PqSequence::new(params)
}
