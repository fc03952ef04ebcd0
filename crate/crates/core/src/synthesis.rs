//! Deterministic CS-optimal synthesis: first-finer-partition generator choice,
//! the lde reduction loop and lifting of the residual Clifford.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::so6::{
    clifford_image, generator_image, generator_pattern, pattern_of, su4_to_so6, Pattern, SO6Matrix,
};
use crate::su4::{evaluate_tokens, generator_matrix, GateWord, Token, U4Matrix, CLIFFORD_GENERATORS};

/// The first-finer-partition association stored as data, one row per generator.
const FFP_ROWS: [&[&str]; 15] = [
    &["{{1,4},{2,3},{5,6}}", "{{1,4},{2,3,5,6}}", "{{2,3},{1,4,5,6}}", "{{5,6},{1,2,3,4}}"],
    &["{{1,3},{2,5},{4,6}}", "{{1,3},{2,4,5,6}}", "{{2,5},{1,3,4,6}}", "{{4,6},{1,2,3,5}}"],
    &["{{1,2},{3,6},{4,5}}", "{{1,2},{3,4,5,6}}", "{{3,6},{1,2,4,5}}", "{{4,5},{1,2,3,6}}"],
    &["{{1,3},{2,6},{4,5}}", "{{2,6},{1,3,4,5}}"],
    &["{{1,2},{3,5},{4,6}}", "{{3,5},{1,2,4,6}}"],
    &["{{1,2},{3,4},{5,6}}", "{{3,4},{1,2,5,6}}"],
    &["{{1,6},{2,3},{4,5}}", "{{1,6},{2,3,4,5}}"],
    &["{{1,5},{2,3},{4,6}}", "{{1,5},{2,3,4,6}}"],
    &["{{1,3},{2,4},{5,6}}", "{{2,4},{1,3,5,6}}"],
    &["{{1,4},{2,5},{3,6}}"],
    &["{{1,4},{2,6},{3,5}}"],
    &["{{1,6},{2,5},{3,4}}"],
    &["{{1,5},{2,4},{3,6}}"],
    &["{{1,5},{2,6},{3,4}}"],
    &["{{1,6},{2,4},{3,5}}"],
];

/// Pattern → generator index, for all 2×2×2 and 2×4 patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfpTable {
    map: HashMap<Pattern, u8>,
}

impl FfpTable {
    /// The table as stored.
    pub fn transcribed() -> FfpTable {
        let mut map = HashMap::new();
        for (n, row) in FFP_ROWS.iter().enumerate() {
            for s in row.iter() {
                map.insert(s.parse().expect("valid pattern"), n as u8 + 1);
            }
        }
        FfpTable { map }
    }

    /// The table regenerated from the lowest-index-finer-generator rule.
    pub fn regenerated() -> FfpTable {
        let map = Pattern::all_222()
            .into_iter()
            .chain(Pattern::all_24())
            .map(|p| {
                let j = (1..=15u8)
                    .find(|&j| generator_pattern(j).finer(&p))
                    .expect("every pattern has a finer generator");
                (p, j)
            })
            .collect();
        FfpTable { map }
    }

    pub fn get(&self, p: &Pattern) -> Option<u8> {
        self.map.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Pattern, u8)> {
        self.map.iter().map(|(p, &j)| (p, j))
    }
}

static FFP: LazyLock<FfpTable> = LazyLock::new(|| {
    let table = FfpTable::transcribed();
    assert_eq!(table, FfpTable::regenerated(), "stored FFP table disagrees with the rule");
    table
});

pub fn ffp_table() -> &'static FfpTable {
    &FFP
}

pub fn ffp_select(p: &Pattern) -> Result<u8> {
    FFP.get(p).ok_or_else(|| Error::NoFinerGenerator(p.to_string()))
}

/// For each generator and each row `r` of `Ḡᵀ`: the two rows of `√2·Ḡ`'s column `r`
/// that combine, with signs.
static REDUCERS: LazyLock<[[[(usize, bool); 2]; 6]; 15]> = LazyLock::new(|| {
    std::array::from_fn(|n| {
        let g = generator_image(n as u8 + 1);
        std::array::from_fn(|r| {
            let mut hits = (0..6).filter(|&s| !g.entries()[s][r].is_zero());
            let mut next = || {
                let s = hits.next().expect("two nonzero entries per column");
                (s, g.entries()[s][r] < BigInt::zero())
            };
            [next(), next()]
        })
    })
});

/// Counters for the big-integer work done by synthesis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SynthesisStats {
    /// Big-integer additions, subtractions, shifts and small-scalar multiplications.
    pub ring_ops: u64,
    pub steps: u64,
}

/// `(j, Ḡ_jᵀ·m)`, removing one factor of `Ḡ_j` on the left.
pub fn reduce_step(m: &SO6Matrix) -> Result<(u8, SO6Matrix)> {
    let mut stats = SynthesisStats::default();
    reduce_step_counted(m, &mut stats)
}

fn reduce_step_counted(m: &SO6Matrix, stats: &mut SynthesisStats) -> Result<(u8, SO6Matrix)> {
    if m.k() == 0 {
        return Err(Error::BadInput("reduce_step needs lde ≥ 1".into()));
    }
    let j = ffp_select(&pattern_of(m))?;
    let reduced = apply_generator_transpose(m, j, stats)?;
    stats.steps += 1;
    Ok((j, reduced))
}

fn apply_generator_transpose(m: &SO6Matrix, j: u8, stats: &mut SynthesisStats) -> Result<SO6Matrix> {
    let rows = &REDUCERS[j as usize - 1];
    let e = m.entries();
    let mut out: [[BigInt; 6]; 6] = Default::default();
    for (r, &[(s1, n1), (s2, n2)]) in rows.iter().enumerate() {
        for c in 0..6 {
            let v = match (n1, n2) {
                (false, false) => &e[s1][c] + &e[s2][c],
                (false, true) => &e[s1][c] - &e[s2][c],
                (true, false) => &e[s2][c] - &e[s1][c],
                (true, true) => -(&e[s1][c] + &e[s2][c]),
            };
            if v.bit(0) {
                return Err(Error::NotInGroup(format!("G{j} does not reduce the denominator exponent")));
            }
            out[r][c] = v >> 1;
        }
    }
    stats.ring_ops += 72;
    Ok(SO6Matrix::canonical(out, m.k() - 1))
}

/// Word over the Clifford generators for each canonical lde-0 image.
pub struct SignedPermTable {
    words: HashMap<[i8; 36], Vec<Token>>,
}

fn perm_key(m: &SO6Matrix) -> Option<[i8; 36]> {
    if m.k() != 0 {
        return None;
    }
    let rows = m.to_i64()?;
    let mut key = [0i8; 36];
    for (n, x) in rows.iter().flatten().enumerate() {
        key[n] = *x as i8;
    }
    Some(key)
}

impl SignedPermTable {
    /// Breadth-first search from the identity, appending generators on the right
    /// in token order; each image keeps the first, hence shortest and
    /// lexicographically least, word that reaches it.
    pub fn build() -> SignedPermTable {
        let mut words: HashMap<[i8; 36], Vec<Token>> = HashMap::new();
        let id = SO6Matrix::identity();
        words.insert(perm_key(&id).unwrap(), Vec::new());
        let mut queue = VecDeque::from([(id, Vec::new())]);
        while let Some((m, word)) = queue.pop_front() {
            for t in CLIFFORD_GENERATORS {
                let next = m.mul(clifford_image(t));
                let key = perm_key(&next).expect("signed permutation");
                if let std::collections::hash_map::Entry::Vacant(slot) = words.entry(key) {
                    let mut w: Vec<Token> = word.clone();
                    w.push(t);
                    slot.insert(w.clone());
                    queue.push_back((next, w));
                }
            }
        }
        SignedPermTable { words }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn lookup(&self, m: &SO6Matrix) -> Result<&[Token]> {
        perm_key(m).and_then(|k| self.words.get(&k)).map(Vec::as_slice).ok_or(Error::KeyMissing)
    }

    pub fn words(&self) -> impl Iterator<Item = &[Token]> {
        self.words.values().map(Vec::as_slice)
    }

    /// Longest stored word.
    pub fn diameter(&self) -> usize {
        self.words.values().map(Vec::len).max().unwrap_or(0)
    }
}

static TABLE: LazyLock<SignedPermTable> = LazyLock::new(SignedPermTable::build);

pub fn signed_perm_table() -> &'static SignedPermTable {
    &TABLE
}

/// A Clifford word whose image is `m`.
pub fn lift_clifford(m: &SO6Matrix) -> Result<GateWord> {
    if m.k() != 0 {
        return Err(Error::BadInput("lift_clifford needs an lde-0 matrix".into()));
    }
    Ok(GateWord::new(TABLE.lookup(m)?.to_vec()))
}

/// `G_{s1} ⋯ G_{sn} · tail · ω^phase`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub syllables: Vec<u8>,
    pub tail: GateWord,
    pub phase: u8,
}

impl NormalForm {
    pub fn cs_count(&self) -> usize {
        self.syllables.len()
    }

    /// The full gate word, syllables as `G` tokens and a trailing phase token.
    pub fn to_word(&self) -> GateWord {
        let mut tokens: Vec<Token> = self.syllables.iter().map(|&j| Token::Syllable(j)).collect();
        tokens.extend_from_slice(&self.tail.tokens);
        if self.phase != 0 {
            tokens.push(Token::Omega(self.phase));
        }
        GateWord::new(tokens)
    }

    /// The same word with every syllable expanded into `CS` conjugated by Cliffords.
    pub fn to_gate_word(&self) -> GateWord {
        let mut tokens = Vec::new();
        for &j in &self.syllables {
            tokens.extend_from_slice(&syllable_expansion(j).tokens);
        }
        tokens.extend_from_slice(&self.tail.tokens);
        let phase =
            (self.phase + self.syllables.iter().map(|&j| syllable_expansion_phase(j)).sum::<u8>()) % 8;
        if phase != 0 {
            tokens.push(Token::Omega(phase));
        }
        GateWord::new(tokens)
    }

    pub fn evaluate(&self) -> U4Matrix {
        self.to_word().evaluate()
    }

    /// Symbolic form: generator letters then `CLIFF`.
    pub fn symbolic(&self) -> String {
        let mut parts: Vec<String> = self.syllables.iter().map(|j| format!("G{j}")).collect();
        parts.push("CLIFF".into());
        parts.join(" ")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in &self.syllables {
            write!(f, "G{j} ")?;
        }
        let mut tail = self.tail.to_string();
        if self.phase != 0 {
            if !tail.is_empty() {
                tail.push(' ');
            }
            tail.push_str(&Token::Omega(self.phase).to_string());
        }
        if tail.is_empty() {
            tail = "identity".into();
        }
        write!(f, "CLIFF({tail})")
    }
}

/// `G_j = C·CS·C†·ω^{-phase}` for a Clifford word `C`: the word and its phase.
static EXPANSIONS: LazyLock<[(GateWord, u8); 15]> = LazyLock::new(|| {
    let cs = Token::CS.matrix();
    let mut found: [Option<(GateWord, u8)>; 15] = Default::default();
    let mut table_words: Vec<&[Token]> = TABLE.words().collect();
    table_words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for w in table_words {
        if found.iter().all(Option::is_some) {
            break;
        }
        let c = evaluate_tokens(w);
        let conj = c.mul(&cs).mul(&c.adjoint());
        for (n, slot) in found.iter_mut().enumerate() {
            if slot.is_none() {
                if let Some(j) = conj.phase_to(generator_matrix(n as u8 + 1)) {
                    let mut tokens = w.to_vec();
                    tokens.push(Token::CS);
                    tokens.extend(GateWord::new(w.to_vec()).inverse().tokens);
                    *slot = Some((GateWord::new(tokens), j));
                }
            }
        }
    }
    found.map(|s| s.expect("every generator is a Clifford conjugate of CS"))
});

/// Clifford+CS word (without phase) for `G_j`, up to the phase of [`syllable_expansion_phase`].
pub fn syllable_expansion(j: u8) -> &'static GateWord {
    &EXPANSIONS[j as usize - 1].0
}

/// `j` such that `ω^j` times the expansion word equals `G_j`.
pub fn syllable_expansion_phase(j: u8) -> u8 {
    EXPANSIONS[j as usize - 1].1
}

pub fn synthesize(u: &U4Matrix) -> Result<NormalForm> {
    synthesize_with_stats(u).map(|(nf, _)| nf)
}

pub fn synthesize_with_stats(u: &U4Matrix) -> Result<(NormalForm, SynthesisStats)> {
    let mut stats = SynthesisStats::default();
    let mut v = su4_to_so6(u)?;
    let mut residual = u.clone();
    let mut syllables = Vec::with_capacity(v.k() as usize);
    while v.k() > 0 {
        let (j, next) = reduce_step_counted(&v, &mut stats)?;
        residual = generator_matrix(j).adjoint().mul(&residual);
        stats.ring_ops += 64 * 4;
        syllables.push(j);
        v = next;
    }
    let tail = lift_clifford(&v)?;
    let phase = tail
        .evaluate()
        .phase_to(&residual)
        .ok_or_else(|| Error::NotInGroup("residual is not the lifted Clifford".into()))?;
    Ok((NormalForm { syllables, tail, phase }, stats))
}
