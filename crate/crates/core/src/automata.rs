//! Nondeterministic automata over the alphabet `{G1, …, G15, CLIFF}` describing
//! the normal forms.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::so6::{generator_pattern, pattern_of, SO6Matrix};

/// `CLIFF` stands for any single Clifford letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Gen(u8),
    Cliff,
}

impl Letter {
    pub const ALPHABET: [Letter; 16] = {
        let mut out = [Letter::Cliff; 16];
        let mut j = 0;
        while j < 15 {
            out[j] = Letter::Gen(j as u8 + 1);
            j += 1;
        }
        out
    };
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Gen(j) => write!(f, "G{j}"),
            Letter::Cliff => write!(f, "CLIFF"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "CLIFF" {
            return Ok(Letter::Cliff);
        }
        s.strip_prefix('G')
            .and_then(|j| j.parse::<u8>().ok())
            .filter(|j| (1..=15).contains(j))
            .map(Letter::Gen)
            .ok_or_else(|| Error::UnknownToken(s.to_string()))
    }
}

/// A word over `{G1, …, G15, CLIFF}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolicWord(pub Vec<Letter>);

impl SymbolicWord {
    pub fn from_syllables(syllables: &[u8]) -> SymbolicWord {
        let mut letters: Vec<Letter> = syllables.iter().map(|&j| Letter::Gen(j)).collect();
        letters.push(Letter::Cliff);
        SymbolicWord(letters)
    }

    pub fn syllables(&self) -> Vec<u8> {
        self.0
            .iter()
            .filter_map(|l| match l {
                Letter::Gen(j) => Some(*j),
                Letter::Cliff => None,
            })
            .collect()
    }
}

impl fmt::Display for SymbolicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for SymbolicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>().map(SymbolicWord)
    }
}

/// At most 64 states, so state sets fit in a `u64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    transitions: Vec<Vec<(Option<Letter>, usize)>>,
    initial: u64,
    finals: u64,
}

pub const MAX_STATES: usize = 64;

impl Nfa {
    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial_states(&self) -> u64 {
        self.initial
    }

    pub fn final_states(&self) -> u64 {
        self.finals
    }

    /// Edges `(from, letter, to)`; `None` is ε.
    pub fn edges(&self) -> Vec<(usize, Option<Letter>, usize)> {
        self.transitions
            .iter()
            .enumerate()
            .flat_map(|(q, ts)| ts.iter().map(move |&(l, t)| (q, l, t)))
            .collect()
    }

    fn closure(&self, mut set: u64) -> u64 {
        let mut stack: Vec<usize> = bits(set).collect();
        while let Some(q) = stack.pop() {
            for &(l, t) in &self.transitions[q] {
                if l.is_none() && set >> t & 1 == 0 {
                    set |= 1 << t;
                    stack.push(t);
                }
            }
        }
        set
    }

    fn step(&self, set: u64, letter: Letter) -> u64 {
        let mut next = 0u64;
        for q in bits(set) {
            for &(l, t) in &self.transitions[q] {
                if l == Some(letter) {
                    next |= 1 << t;
                }
            }
        }
        self.closure(next)
    }

    fn start(&self) -> u64 {
        self.closure(self.initial)
    }

    pub fn accepts(&self, word: &SymbolicWord) -> bool {
        let mut set = self.start();
        for &l in &word.0 {
            set = self.step(set, l);
            if set == 0 {
                return false;
            }
        }
        set & self.finals != 0
    }

    /// Number of distinct accepted words with `syllables` generator letters and
    /// exactly one `CLIFF`. Counts words, not paths: the automata are ambiguous.
    pub fn count_words(&self, syllables: usize) -> BigUint {
        let mut layer: HashMap<(u64, bool), BigUint> =
            HashMap::from([((self.start(), false), BigUint::one())]);
        for _ in 0..=syllables {
            let mut next: HashMap<(u64, bool), BigUint> = HashMap::new();
            for ((set, used), count) in layer {
                for l in Letter::ALPHABET {
                    if l == Letter::Cliff && used {
                        continue;
                    }
                    let s = self.step(set, l);
                    if s != 0 {
                        *next.entry((s, used || l == Letter::Cliff)).or_insert_with(BigUint::zero) += &count;
                    }
                }
            }
            layer = next;
        }
        layer.into_iter().filter(|((set, used), _)| *used && set & self.finals != 0).map(|(_, c)| c).sum()
    }

    /// Letters that can follow `set` and still complete to an accepted word with
    /// exactly `remaining` further generator letters then `CLIFF`.
    pub fn viable_letters(&self, set: u64, remaining: usize, table: &Viability) -> Vec<Letter> {
        if remaining == 0 {
            let s = self.step(set, Letter::Cliff);
            return if s & self.finals != 0 { vec![Letter::Cliff] } else { Vec::new() };
        }
        (1..=15u8).map(Letter::Gen).filter(|&l| table.viable(self.step(set, l), remaining - 1)).collect()
    }

    pub fn start_set(&self) -> u64 {
        self.start()
    }

    pub fn advance(&self, set: u64, l: Letter) -> u64 {
        self.step(set, l)
    }
}

/// Which reachable state sets can finish with exactly `r` generators then `CLIFF`,
/// for every `r` up to a bound.
pub struct Viability {
    index: HashMap<u64, usize>,
    levels: Vec<Vec<bool>>,
}

impl Viability {
    pub fn new(nfa: &Nfa, max_remaining: usize) -> Viability {
        let mut sets = vec![nfa.start()];
        let mut index = HashMap::from([(nfa.start(), 0usize)]);
        let mut succ: Vec<Vec<usize>> = Vec::new();
        let mut n = 0;
        while n < sets.len() {
            let mut out = Vec::new();
            for j in 1..=15u8 {
                let s = nfa.step(sets[n], Letter::Gen(j));
                if s == 0 {
                    continue;
                }
                let id = *index.entry(s).or_insert_with(|| {
                    sets.push(s);
                    sets.len() - 1
                });
                out.push(id);
            }
            succ.push(out);
            n += 1;
        }
        let mut levels =
            vec![sets.iter().map(|&s| nfa.step(s, Letter::Cliff) & nfa.finals != 0).collect::<Vec<bool>>()];
        for r in 1..=max_remaining {
            let prev = &levels[r - 1];
            let level = succ.iter().map(|out| out.iter().any(|&t| prev[t])).collect();
            levels.push(level);
        }
        Viability { index, levels }
    }

    /// False for sets never reached from the start or beyond the bound.
    pub fn viable(&self, set: u64, remaining: usize) -> bool {
        match (self.index.get(&set), self.levels.get(remaining)) {
            (Some(&i), Some(level)) => level[i],
            _ => false,
        }
    }
}

fn bits(set: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&q| set >> q & 1 == 1)
}

fn patterns_disjoint(s: u8, t: u8) -> bool {
    let (p, q) = (generator_pattern(s), generator_pattern(t));
    p.blocks().iter().all(|b| !q.blocks().contains(b))
}

/// Accepts exactly the one-letter word `CLIFF`.
pub fn build_c() -> Nfa {
    Nfa { transitions: vec![vec![(Some(Letter::Cliff), 1)], vec![]], initial: 1, finals: 2 }
}

/// States `1..=m` (stored from zero), initial `n..=m`, all final; from `s` the
/// letter `G_s` leads to every `t` whose pattern shares no block with that of `G_s`.
pub fn build_s(n: u8, m: u8) -> Result<Nfa> {
    if !(1 <= n && n <= m && m <= 15) {
        return Err(Error::BadRange(format!("n = {n}, m = {m}")));
    }
    let transitions = (1..=m)
        .map(|s| {
            (1..=m)
                .filter(|&t| patterns_disjoint(s, t))
                .map(|t| (Some(Letter::Gen(s)), t as usize - 1))
                .collect()
        })
        .collect();
    let initial = (n - 1..m).fold(0u64, |acc, q| acc | 1 << q);
    let finals = (0..m).fold(0u64, |acc, q| acc | 1 << q);
    Ok(Nfa { transitions, initial, finals })
}

/// Disjoint union with ε-edges from the finals of `a` to the initials of `b`.
pub fn concatenate(a: &Nfa, b: &Nfa) -> Nfa {
    let offset = a.num_states();
    assert!(offset + b.num_states() <= MAX_STATES, "too many states");
    let mut transitions = a.transitions.clone();
    for q in bits(a.finals) {
        for t in bits(b.initial) {
            transitions[q].push((None, t + offset));
        }
    }
    for ts in &b.transitions {
        transitions.push(ts.iter().map(|&(l, t)| (l, t + offset)).collect());
    }
    Nfa { transitions, initial: a.initial, finals: b.finals << offset }
}

fn chain(parts: &[(u8, u8)]) -> Nfa {
    parts.iter().rev().fold(build_c(), |acc, &(n, m)| concatenate(&build_s(n, m).unwrap(), &acc))
}

static NORMAL_FORM: LazyLock<Nfa> = LazyLock::new(|| chain(&[(1, 3), (4, 9), (10, 15)]));
static ONE_SEGMENT: LazyLock<Nfa> = LazyLock::new(|| chain(&[(1, 15)]));
static TWO_SEGMENT: LazyLock<Nfa> = LazyLock::new(|| chain(&[(1, 9), (10, 15)]));

/// `𝔖₁,₃ ∘ 𝔖₄,₉ ∘ 𝔖₁₀,₁₅ ∘ 𝔠`.
pub fn normal_form_automaton() -> &'static Nfa {
    &NORMAL_FORM
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternClass {
    Clifford,
    P222,
    /// 2×4 pattern whose pair block meets both `{1,2,3}` and `{4,5,6}`.
    P24Cross,
    P24NonCross,
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternClass::Clifford => "CLIFFORD",
            PatternClass::P222 => "P222",
            PatternClass::P24Cross => "P24_CROSS",
            PatternClass::P24NonCross => "P24_NONCROSS",
        };
        write!(f, "{s}")
    }
}

/// Class of a normal form, read off from the nested languages.
pub fn classify_pattern_language(w: &SymbolicWord) -> Result<PatternClass> {
    if build_c().accepts(w) {
        Ok(PatternClass::Clifford)
    } else if ONE_SEGMENT.accepts(w) {
        Ok(PatternClass::P222)
    } else if TWO_SEGMENT.accepts(w) {
        Ok(PatternClass::P24Cross)
    } else if NORMAL_FORM.accepts(w) {
        Ok(PatternClass::P24NonCross)
    } else {
        Err(Error::NotNormalForm)
    }
}

/// Class of an SO(6) matrix, read off from its pattern.
pub fn geometric_class(m: &SO6Matrix) -> PatternClass {
    if m.lde() == 0 {
        return PatternClass::Clifford;
    }
    let p = pattern_of(m);
    if p.is_222() {
        PatternClass::P222
    } else {
        let cross =
            p.blocks().iter().any(|b| b.len() == 2 && b.iter().any(|&x| x <= 3) && b.iter().any(|&x| x >= 4));
        if cross {
            PatternClass::P24Cross
        } else {
            PatternClass::P24NonCross
        }
    }
}
