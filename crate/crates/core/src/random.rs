//! Seeded sampling of normal forms with a prescribed CS-count.

use std::sync::LazyLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{normal_form_automaton, Letter, Viability};
use crate::su4::{GateWord, Token, U4Matrix};
use crate::synthesis::{signed_perm_table, NormalForm};

/// Table words in a fixed order, so sampling is reproducible across runs.
static SORTED_TAIL_WORDS: LazyLock<Vec<Vec<Token>>> = LazyLock::new(|| {
    let mut words: Vec<Vec<Token>> = signed_perm_table().words().map(<[Token]>::to_vec).collect();
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    words
});

/// Uniform over the 92160 Cliffords: a table word and one of eight phases.
pub fn random_clifford_tail<R: Rng>(rng: &mut R) -> (GateWord, u8) {
    let words = &*SORTED_TAIL_WORDS;
    let w = &words[rng.random_range(0..words.len())];
    (GateWord::new(w.clone()), rng.random_range(0..8u8))
}

/// A normal form with `cs_count` syllables; each letter is uniform among those
/// that keep an accepting completion of the right length.
pub fn random_normal_form<R: Rng>(cs_count: usize, rng: &mut R) -> NormalForm {
    let nfa = normal_form_automaton();
    let viability = Viability::new(nfa, cs_count);
    let mut set = nfa.start_set();
    let mut syllables = Vec::with_capacity(cs_count);
    for remaining in (0..cs_count).rev() {
        let options = nfa.viable_letters(set, remaining + 1, &viability);
        let letter = options[rng.random_range(0..options.len())];
        if let Letter::Gen(j) = letter {
            syllables.push(j);
        }
        set = nfa.advance(set, letter);
    }
    let (tail, phase) = random_clifford_tail(rng);
    NormalForm { syllables, tail, phase }
}

/// Evaluation and normal form of a random operator with the given CS-count.
pub fn random_operator(cs_count: usize, seed: u64) -> (U4Matrix, NormalForm) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nf = random_normal_form(cs_count, &mut rng);
    (nf.evaluate(), nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::SymbolicWord;
    use crate::synthesis::synthesize;

    #[test]
    fn reproducible_and_roundtrips() {
        for n in [0, 1, 2, 7] {
            let (u, nf) = random_operator(n, 42);
            assert_eq!(random_operator(n, 42).1, nf);
            assert_eq!(nf.cs_count(), n);
            assert!(normal_form_automaton().accepts(&SymbolicWord::from_syllables(&nf.syllables)));
            assert_eq!(synthesize(&u).unwrap(), nf);
        }
    }
}
