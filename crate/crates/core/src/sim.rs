//! Reproducible channel simulation.
//!
//! Trial `i` of a run with seed `S` draws everything from
//! `ChaCha8Rng::seed_from_u64(S + i)`: first the information symbols, then
//! the error positions, then the nonzero error values.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codec::{decode, encode, CodeSpec, Mode};
use crate::galois::{Elt, Field};

/// Uniform symbols, zero included.
pub fn random_symbols(rng: &mut impl Rng, field: &Field, len: usize) -> Vec<Elt> {
    let q = field.order() as i32;
    (0..len).map(|_| Elt::from_log(rng.gen_range(-1..q))).collect()
}

/// `t` distinct positions out of `n`, each with a nonzero value.
pub fn random_errors(rng: &mut impl Rng, field: &Field, n: usize, t: usize) -> Vec<(usize, Elt)> {
    let q = field.order() as i32;
    let mut pos = sample(rng, n, t.min(n)).into_vec();
    pos.sort_unstable();
    pos.into_iter().map(|p| (p, Elt::from_log(rng.gen_range(0..q)))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// The decoder reported `DecodingFailure`.
    Failure,
    /// The decoder returned a codeword other than the one sent.
    Miscorrection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial {
    pub index: u64,
    pub errors: usize,
    pub outcome: Outcome,
    pub voted: bool,
}

pub fn run_trial(spec: &CodeSpec, mode: Mode, t: usize, seed: u64, index: u64) -> Trial {
    let f = spec.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index));
    let info = random_symbols(&mut rng, f, spec.k());
    let sent = encode(spec, mode, &info).expect("valid information length");
    let errs = random_errors(&mut rng, f, spec.n(), t);
    let mut received = sent.clone();
    for &(p, v) in &errs {
        received[p] = f.add(received[p], v);
    }
    let (outcome, voted) = match decode(spec, mode, &received) {
        Ok(d) if d.codeword == sent && d.info == info => (Outcome::Success, d.voted),
        Ok(d) => (Outcome::Miscorrection, d.voted),
        Err(_) => (Outcome::Failure, false),
    };
    Trial { index, errors: errs.len(), outcome, voted }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub trials: usize,
    pub successes: usize,
    pub failures: usize,
    pub miscorrections: usize,
    pub voted: usize,
}

impl Summary {
    pub fn of(trials: &[Trial]) -> Summary {
        let count = |o: Outcome| trials.iter().filter(|t| t.outcome == o).count();
        Summary {
            trials: trials.len(),
            successes: count(Outcome::Success),
            failures: count(Outcome::Failure),
            miscorrections: count(Outcome::Miscorrection),
            voted: trials.iter().filter(|t| t.voted).count(),
        }
    }
}

pub fn simulate(spec: &CodeSpec, mode: Mode, t: usize, trials: u64, seed: u64) -> Vec<Trial> {
    (0..trials).map(|i| run_trial(spec, mode, t, seed, i)).collect()
}
