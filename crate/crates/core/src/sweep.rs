//! Batch checks over parameter ranges and seeded word corpora.
//!
//! Each check maps an independent cell (a lens space, a word, a pair of
//! counts) to a verdict. With the `parallel` feature the cells run on the
//! rayon pool; without it, or with [`Execution::Sequential`], they run in
//! order on the calling thread. Results are collected in cell order either
//! way, so summaries are identical across modes.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::ReplacementError;
use crate::pqseq::{LensParams, PqSequence};
use crate::primitivity::{detect_obstruction, is_primitive, positive_primitive_check, primitive_root};
use crate::replacement::{separation_check, witness, WitnessData};
use crate::structure::{classify, homeomorphism_invariance_check};
use crate::words::{Alphabet, Generator, Letter, Word};

pub const DEFAULT_SEED: u64 = 0x5eed_2013;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Execution {
    Sequential,
    /// Falls back to sequential without the `parallel` feature.
    #[default]
    Parallel,
}

/// Order-preserving map over independent cells.
pub fn map_cells<T, R, F>(exec: Execution, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub checked: usize,
    /// Cells where the check had something to confirm (e.g. obstruction hits).
    pub hits: usize,
    pub failures: Vec<String>,
}

impl CheckSummary {
    fn collect(name: &str, results: Vec<(bool, Option<String>)>) -> CheckSummary {
        let checked = results.len();
        let hits = results.iter().filter(|(h, _)| *h).count();
        let failures = results.into_iter().filter_map(|(_, f)| f).collect();
        CheckSummary {
            name: name.to_string(),
            checked,
            hits,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All valid `(p, q)` with `pmin <= p <= pmax`, `0 < q < p`.
pub fn coprime_pairs(pmin: u64, pmax: u64) -> Vec<LensParams> {
    (pmin.max(2)..=pmax)
        .flat_map(|p| (1..p).filter_map(move |q| LensParams::new(p, q).ok()))
        .collect()
}

/// The oracle's primitive indices equal `{1, q', p − q', p − 1}`.
pub fn four_primitives_sweep(pmax: u64, exec: Execution) -> CheckSummary {
    let results = map_cells(exec, coprime_pairs(2, pmax), |params| {
        let seq = PqSequence::with_threshold(params, u64::MAX);
        let oracle = seq.oracle_indices().expect("verified");
        let ok = oracle == seq.primitive_indices;
        let failure = (!ok).then(|| {
            format!(
                "({},{}): oracle {:?} vs formula {:?}",
                params.p, params.q, oracle, seq.primitive_indices
            )
        });
        (true, failure)
    });
    CheckSummary::collect("four-primitives", results)
}

/// `w_{p−j}` is cyclically `reverse(swap(w_j))`, and `w_j` has `j` z's.
pub fn symmetry_sweep(pmax: u64, exec: Execution) -> CheckSummary {
    let results = map_cells(exec, coprime_pairs(2, pmax), |params| {
        let seq = PqSequence::with_threshold(params, 0);
        let counts = seq
            .words
            .iter()
            .all(|e| e.word.len() as u64 == params.p && e.word.count(Generator::G1) as u64 == e.index);
        let ok = counts && seq.check_symmetry();
        (true, (!ok).then(|| format!("({},{})", params.p, params.q)))
    });
    CheckSummary::collect("symmetry", results)
}

pub fn invariance_sweep(pmax: u64, exec: Execution) -> CheckSummary {
    let results = map_cells(exec, (2..=pmax).collect(), |p| {
        (true, (!homeomorphism_invariance_check(p)).then(|| format!("p = {p}")))
    });
    CheckSummary::collect("homeomorphism-invariance", results)
}

/// `classify` is false exactly when a witness can be built.
pub fn contractibility_sweep(pmax: u64, exec: Execution) -> CheckSummary {
    let results = map_cells(exec, coprime_pairs(2, pmax), |params| {
        let contractible = classify(params);
        let has_r = WitnessData::for_params(params).is_some();
        let rejects = matches!(witness(params), Err(ReplacementError::ContractibleInput));
        let ok = contractible != has_r && contractible == rejects;
        (!contractible, (!ok).then(|| format!("({},{})", params.p, params.q)))
    });
    CheckSummary::collect("contractibility", results)
}

/// Endpoint conditions of every witness strip.
pub fn witness_sweep(pmax: u64, exec: Execution) -> CheckSummary {
    let cells: Vec<LensParams> = coprime_pairs(2, pmax).into_iter().filter(|&lp| !classify(lp)).collect();
    let results = map_cells(exec, cells, |params| {
        let fail = |why: &str| (true, Some(format!("({},{}): {why}", params.p, params.q)));
        let strip = match witness(params) {
            Ok(s) => s,
            Err(e) => return fail(&e.to_string()),
        };
        let d = strip.data;
        let last = strip.last();
        if !last.primitive || last.form.n != d.q + 1 {
            return fail("final vertex");
        }
        if last.label != d.target() {
            return fail("final label");
        }
        let d0 = strip.vertex(0).expect("seed");
        let d1 = strip.vertex(1).expect("first child");
        if d0.primitive || d1.primitive {
            return fail("D_0 or D_1 primitive");
        }
        let claim = strip
            .vertices()
            .iter()
            .all(|v| v.label.tail(d.r, d.q) == v.form.n as i64);
        if !claim {
            return fail("tail identity");
        }
        if !separation_check(&strip) {
            return fail("separation");
        }
        (true, None)
    });
    CheckSummary::collect("witness-endpoints", results)
}

/// Positive words with `m` z's and `n` y's for all `1 <= m <= n`,
/// `m + n <= max_total`.
pub fn positive_words(max_total: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for total in 2..=max_total {
        for mask in 0u64..(1u64 << total) {
            let m = mask.count_ones() as usize;
            if m == 0 || m > total - m {
                continue;
            }
            let letters = (0..total).map(|i| {
                Letter::pos(if mask >> i & 1 == 1 {
                    Generator::G1
                } else {
                    Generator::G2
                })
            });
            out.push(Word::reduce(letters, Alphabet::ZY));
        }
    }
    out
}

/// The closed form agrees with the oracle on every positive word.
pub fn positive_equivalence_sweep(max_total: usize, exec: Execution) -> CheckSummary {
    let results = map_cells(exec, positive_words(max_total), |w| {
        let oracle = is_primitive(&w);
        let closed = positive_primitive_check(&w).expect("positive with both generators");
        (oracle, (oracle != closed).then(|| w.to_string()))
    });
    CheckSummary::collect("positive-equivalence", results)
}

/// Freely reduced words of length `1..=max_len`.
pub fn random_words(seed: u64, count: usize, max_len: usize, alphabet: Alphabet) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = [
        Letter::pos(Generator::G1),
        Letter::neg(Generator::G1),
        Letter::pos(Generator::G2),
        Letter::neg(Generator::G2),
    ];
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let mut w: Vec<Letter> = Vec::with_capacity(len);
            while w.len() < len {
                let l = letters[rng.gen_range(0..4)];
                if w.last().is_some_and(|last| last.is_inverse_of(l)) {
                    continue;
                }
                w.push(l);
            }
            Word::reduce(w, alphabet)
        })
        .collect()
}

/// Every obstruction hit is a non-primitive word that is not a power of a
/// primitive.
pub fn obstruction_soundness(seed: u64, count: usize, max_len: usize, exec: Execution) -> CheckSummary {
    let results = map_cells(
        exec,
        random_words(seed, count, max_len, Alphabet::XY),
        |w| match detect_obstruction(&w) {
            None => (false, None),
            Some(obs) => {
                let bad = is_primitive(&w) || primitive_root(&w).is_some();
                (true, bad.then(|| format!("{w}: {:?}", obs.kind)))
            }
        },
    );
    CheckSummary::collect("obstruction-soundness", results)
}

/// `z ↦ xy` preserves primitivity.
pub fn substitution_preservation(seed: u64, count: usize, max_len: usize, exec: Execution) -> CheckSummary {
    let results = map_cells(exec, random_words(seed, count, max_len, Alphabet::ZY), |w| {
        let before = is_primitive(&w);
        let after = is_primitive(&w.substitute_z_to_xy());
        (before, (before != after).then(|| w.to_string()))
    });
    CheckSummary::collect("substitution", results)
}

/// `gcd` of absolute values with `gcd(0, k) = k`.
pub fn abs_gcd(a: i64, b: i64) -> u64 {
    a.unsigned_abs().gcd(&b.unsigned_abs())
}
