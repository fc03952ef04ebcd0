//! Exact 4×4 operators over `Z[ω][1/√2]`, the elementary gates, the
//! `R(P, Q)` generators and gate-word evaluation.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::pauli::{Pauli1, Pauli2};
use crate::ring::{CycloElem, DyadicScalar};

/// `entries / √2^k`, with `k` minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct U4Matrix {
    entries: [[CycloElem; 4]; 4],
    k: u32,
}

impl U4Matrix {
    pub fn new(entries: [[CycloElem; 4]; 4], k: u32) -> Self {
        let mut m = Self { entries, k };
        m.reduce();
        m
    }

    pub fn identity() -> Self {
        Self::scalar(CycloElem::one())
    }

    pub fn scalar(x: CycloElem) -> Self {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| if r == c { x.clone() } else { CycloElem::zero() })
        });
        Self::new(entries, 0)
    }

    pub fn diagonal(d: [CycloElem; 4]) -> Self {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| if r == c { d[r].clone() } else { CycloElem::zero() })
        });
        Self::new(entries, 0)
    }

    pub fn entries(&self) -> &[[CycloElem; 4]; 4] {
        &self.entries
    }

    /// Denominator exponent over `Z[ω]`.
    pub fn k(&self) -> u32 {
        self.k
    }

    fn reduce(&mut self) {
        if self.entries.iter().flatten().all(CycloElem::is_zero) {
            self.k = 0;
            return;
        }
        while self.k > 0 && self.entries.iter().flatten().all(CycloElem::is_divisible_by_sqrt2) {
            for x in self.entries.iter_mut().flatten() {
                *x = x.sqrt2_divide().expect("divisible");
            }
            self.k -= 1;
        }
    }

    pub fn mul(&self, rhs: &U4Matrix) -> U4Matrix {
        let mut entries: [[CycloElem; 4]; 4] = Default::default();
        for (i, row) in self.entries.iter().enumerate() {
            for (l, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in rhs.entries[l].iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    entries[i][j] = &entries[i][j] + &(x * y);
                }
            }
        }
        U4Matrix::new(entries, self.k + rhs.k)
    }

    pub fn adjoint(&self) -> U4Matrix {
        let entries = std::array::from_fn(|r| std::array::from_fn(|c| self.entries[c][r].conj()));
        U4Matrix { entries, k: self.k }
    }

    pub fn mul_omega_pow(&self, j: i64) -> U4Matrix {
        let entries = std::array::from_fn(|r| std::array::from_fn(|c| self.entries[r][c].mul_omega_pow(j)));
        U4Matrix { entries, k: self.k }
    }

    pub fn neg(&self) -> U4Matrix {
        self.mul_omega_pow(4)
    }

    /// `A ⊗ B` for 2×2 matrices over `Z[ω]` with denominator exponents.
    pub fn kron(a: &[[CycloElem; 2]; 2], ka: u32, b: &[[CycloElem; 2]; 2], kb: u32) -> U4Matrix {
        let entries = std::array::from_fn(|r| std::array::from_fn(|c| &a[r / 2][c / 2] * &b[r % 2][c % 2]));
        U4Matrix::new(entries, ka + kb)
    }

    /// `M·M† = 2^k·I`.
    pub fn is_unitary(&self) -> bool {
        let prod = self.mul(&self.adjoint());
        prod == U4Matrix::identity()
    }

    /// Returns `j` with `ω^j · self == other`.
    pub fn phase_to(&self, other: &U4Matrix) -> Option<u8> {
        if self.k != other.k {
            return None;
        }
        let (r, c) = (0..16).map(|n| (n / 4, n % 4)).find(|&(r, c)| !self.entries[r][c].is_zero())?;
        let j = (0..8u8).find(|&j| self.entries[r][c].mul_omega_pow(j as i64) == other.entries[r][c])?;
        (self.mul_omega_pow(j as i64) == *other).then_some(j)
    }

    pub fn eq_up_to_phase(&self, other: &U4Matrix) -> bool {
        self.phase_to(other).is_some()
    }

    pub fn determinant(&self) -> DyadicScalar {
        let m = &self.entries;
        let mut total = CycloElem::zero();
        for perm in PERMUTATIONS_4.iter() {
            let mut term = CycloElem::one();
            for (r, &c) in perm.0.iter().enumerate() {
                term = term * &m[r][c];
                if term.is_zero() {
                    break;
                }
            }
            total = if perm.1 { total + term } else { total - term };
        }
        DyadicScalar::new(total, 4 * self.k)
    }

    /// Least `k` with `√2^k · U` entrywise in `Z[i]`, if there is one.
    pub fn lde_gaussian(&self) -> Option<u32> {
        let entries = || self.entries.iter().flatten();
        if entries().all(|x| x.b.is_zero() && x.d.is_zero()) {
            Some(self.k)
        } else if entries().all(|x| x.a.is_zero() && x.c.is_zero()) {
            Some(self.k + 1)
        } else {
            None
        }
    }

    /// Largest coordinate bit length.
    pub fn bits(&self) -> u64 {
        self.entries.iter().flatten().map(CycloElem::bits).max().unwrap_or(0)
    }
}

/// All permutations of four elements with their parity (true = even).
static PERMUTATIONS_4: std::sync::LazyLock<Vec<([usize; 4], bool)>> = std::sync::LazyLock::new(|| {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (0..i).all(|j| p[i] != p[j]));
                    if distinct {
                        let inversions = (0..4)
                            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                            .filter(|&(i, j)| p[i] > p[j])
                            .count();
                        out.push((p, inversions % 2 == 0));
                    }
                }
            }
        }
    }
    out
});

impl fmt::Display for U4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "1/√2^{} ·", self.k)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The closed form `I + (i - 1)·((I - P)/2)·((I - Q)/2)` of `R(P, Q)`.
pub fn r_gate_matrix(p: Pauli2, q: Pauli2) -> Result<U4Matrix> {
    check_r_preconditions(p, q)?;
    let id = U4Matrix::identity();
    let sub = |x: &U4Matrix, y: &U4Matrix| {
        let entries = std::array::from_fn(|r| std::array::from_fn(|c| &x.entries[r][c] - &y.entries[r][c]));
        U4Matrix::new(entries, 0)
    };
    let prod = sub(&id, &p.matrix()).mul(&sub(&id, &q.matrix()));
    // 4I + (i - 1)(I - P)(I - Q), all over 4 = √2^4.
    let i_minus_one = CycloElem::gaussian(-1, 1);
    let entries = std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let diag = if r == c { CycloElem::from_int(4) } else { CycloElem::zero() };
            &diag + &(&i_minus_one * &prod.entries[r][c])
        })
    });
    Ok(U4Matrix::new(entries, 4))
}

pub fn check_r_preconditions(p: Pauli2, q: Pauli2) -> Result<()> {
    let fail = |why: &str| Err(Error::PreconditionViolated(format!("({p}, {q}): {why}")));
    if !p.is_hermitian() || !q.is_hermitian() {
        return fail("both Paulis must be Hermitian");
    }
    if p.is_identity() || q.is_identity() {
        return fail("Paulis must differ from the identity");
    }
    if p == q {
        return fail("Paulis must be distinct");
    }
    if !p.commutes(q) {
        return fail("Paulis must commute");
    }
    Ok(())
}

/// One of the 15 canonical syllables, indexed `1..=15`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RGen {
    pub index: u8,
    pub p: Pauli2,
    pub q: Pauli2,
}

const fn pp(l: Pauli1, r: Pauli1) -> Pauli2 {
    Pauli2::new(l, r)
}

const fn neg(l: Pauli1, r: Pauli1) -> Pauli2 {
    Pauli2::with_phase(2, l, r)
}

use Pauli1::{I, X, Y, Z};

/// Generator pairs in their fixed order; synthesis determinism depends on it.
/// The signs on `G11`, `G12` and `G13` select the representatives whose SO(6)
/// images are the published ones.
pub const GENERATOR_PAIRS: [(Pauli2, Pauli2); 15] = [
    (pp(X, I), pp(I, X)),
    (pp(Y, I), pp(I, Y)),
    (pp(Z, I), pp(I, Z)),
    (pp(Y, I), pp(I, Z)),
    (pp(Z, I), pp(I, Y)),
    (pp(Z, I), pp(I, X)),
    (pp(X, I), pp(I, Z)),
    (pp(X, I), pp(I, Y)),
    (pp(Y, I), pp(I, X)),
    (pp(X, X), pp(Y, Y)),
    (neg(X, X), pp(Z, Y)),
    (pp(Z, X), neg(Y, Y)),
    (pp(Y, X), neg(X, Y)),
    (pp(Z, X), pp(X, Y)),
    (pp(Y, X), pp(Z, Y)),
];

pub fn generators() -> [RGen; 15] {
    std::array::from_fn(|n| RGen { index: n as u8 + 1, p: GENERATOR_PAIRS[n].0, q: GENERATOR_PAIRS[n].1 })
}

static GENERATOR_MATRICES: std::sync::LazyLock<Vec<U4Matrix>> = std::sync::LazyLock::new(|| {
    GENERATOR_PAIRS.iter().map(|&(p, q)| r_gate_matrix(p, q).expect("generator pairs are valid")).collect()
});

/// Matrix of the generator with index `1..=15`.
pub fn generator_matrix(index: u8) -> &'static U4Matrix {
    &GENERATOR_MATRICES[index as usize - 1]
}

/// Gate-word tokens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    CZ,
    CS,
    H1,
    H2,
    S1,
    S2,
    /// Global phase `ω^j`, `j` in `0..8`.
    Omega(u8),
    /// Generator `G1..G15`.
    Syllable(u8),
}

/// The five Clifford generators in lexicographic token order.
pub const CLIFFORD_GENERATORS: [Token; 5] = [Token::CZ, Token::H1, Token::H2, Token::S1, Token::S2];

impl Token {
    pub fn is_clifford(self) -> bool {
        !matches!(self, Token::CS | Token::Syllable(_))
    }

    pub fn matrix(self) -> U4Matrix {
        let z = CycloElem::zero;
        let one = CycloElem::one;
        let id2 = [[one(), z()], [z(), one()]];
        let h = [[one(), one()], [one(), CycloElem::from_int(-1)]];
        let s = [[one(), z()], [z(), CycloElem::i()]];
        match self {
            Token::H1 => U4Matrix::kron(&h, 1, &id2, 0),
            Token::H2 => U4Matrix::kron(&id2, 0, &h, 1),
            Token::S1 => U4Matrix::kron(&s, 0, &id2, 0),
            Token::S2 => U4Matrix::kron(&id2, 0, &s, 0),
            Token::CZ => U4Matrix::diagonal([one(), one(), one(), CycloElem::from_int(-1)]),
            Token::CS => U4Matrix::diagonal([one(), one(), one(), CycloElem::i()]),
            Token::Omega(j) => U4Matrix::scalar(CycloElem::omega_pow(j as i64)),
            Token::Syllable(j) => generator_matrix(j).clone(),
        }
    }

    /// Inverse as a token sequence.
    pub fn inverse(self) -> Vec<Token> {
        match self {
            Token::S1 | Token::S2 => vec![self; 3],
            Token::CS | Token::Syllable(_) => vec![self; 3],
            Token::Omega(j) => vec![Token::Omega((8 - j % 8) % 8)],
            _ => vec![self],
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::CZ => write!(f, "CZ"),
            Token::CS => write!(f, "CS"),
            Token::H1 => write!(f, "H1"),
            Token::H2 => write!(f, "H2"),
            Token::S1 => write!(f, "S1"),
            Token::S2 => write!(f, "S2"),
            Token::Omega(j) => write!(f, "W^{j}"),
            Token::Syllable(j) => write!(f, "G{j}"),
        }
    }
}

impl FromStr for Token {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownToken(s.to_string());
        Ok(match s {
            "CZ" => Token::CZ,
            "CS" => Token::CS,
            "H1" => Token::H1,
            "H2" => Token::H2,
            "S1" => Token::S1,
            "S2" => Token::S2,
            "W" => Token::Omega(1),
            _ => {
                if let Some(exp) = s.strip_prefix("W^") {
                    let j: i64 = exp.parse().map_err(|_| unknown())?;
                    Token::Omega(j.rem_euclid(8) as u8)
                } else if let Some(idx) = s.strip_prefix('G') {
                    let j: u8 = idx.parse().map_err(|_| unknown())?;
                    if !(1..=15).contains(&j) {
                        return Err(unknown());
                    }
                    Token::Syllable(j)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

/// A product of gates, evaluated left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GateWord {
    pub tokens: Vec<Token>,
}

impl GateWord {
    pub fn new(tokens: Vec<Token>) -> Self {
        Self { tokens }
    }

    pub fn evaluate(&self) -> U4Matrix {
        evaluate_tokens(&self.tokens)
    }

    pub fn cs_count(&self) -> usize {
        self.tokens.iter().filter(|t| matches!(t, Token::CS | Token::Syllable(_))).count()
    }

    pub fn concat(&self, other: &GateWord) -> GateWord {
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        GateWord { tokens }
    }

    pub fn inverse(&self) -> GateWord {
        GateWord { tokens: self.tokens.iter().rev().flat_map(|t| t.inverse()).collect() }
    }
}

pub fn evaluate_tokens(tokens: &[Token]) -> U4Matrix {
    let mut phase = 0u8;
    let mut acc = U4Matrix::identity();
    for t in tokens {
        match t {
            Token::Omega(j) => phase = (phase + j) % 8,
            _ => acc = acc.mul(&token_matrix(*t)),
        }
    }
    acc.mul_omega_pow(phase as i64)
}

fn token_matrix(t: Token) -> U4Matrix {
    static CACHE: std::sync::LazyLock<Vec<U4Matrix>> = std::sync::LazyLock::new(|| {
        [Token::CZ, Token::CS, Token::H1, Token::H2, Token::S1, Token::S2]
            .iter()
            .map(|t| t.matrix())
            .collect()
    });
    match t {
        Token::CZ => CACHE[0].clone(),
        Token::CS => CACHE[1].clone(),
        Token::H1 => CACHE[2].clone(),
        Token::H2 => CACHE[3].clone(),
        Token::S1 => CACHE[4].clone(),
        Token::S2 => CACHE[5].clone(),
        other => other.matrix(),
    }
}

impl fmt::Display for GateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for GateWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(GateWord { tokens })
    }
}

/// Clifford generators multiplied by the phase that gives them determinant one:
/// `ω†S ⊗ I`, `I ⊗ ω†S`, `iH ⊗ I`, `I ⊗ iH`, `ω†CZ`.
pub fn determinant_one_clifford(t: Token) -> U4Matrix {
    let j = match t {
        Token::S1 | Token::S2 | Token::CZ => 7,
        Token::H1 | Token::H2 => 2,
        _ => panic!("{t} is not a Clifford generator"),
    };
    t.matrix().mul_omega_pow(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> U4Matrix {
        s.parse::<GateWord>().unwrap().evaluate()
    }

    #[test]
    fn cs_is_r_zi_iz() {
        let cs = r_gate_matrix(pp(Z, I), pp(I, Z)).unwrap();
        assert_eq!(cs, Token::CS.matrix());
        assert_eq!(cs.k(), 0);
        assert_eq!(r_gate_matrix(pp(I, Z), pp(Z, I)).unwrap(), cs);
    }

    #[test]
    fn r_xx_yy_closed_form_matches_projector() {
        // P = XX, Q = YY: the projector is onto the singlet (|01> - |10>)/√2,
        // so R = I + (i - 1)/2 · [[0,0,0,0],[0,1,-1,0],[0,-1,1,0],[0,0,0,0]].
        let r = r_gate_matrix(pp(X, X), pp(Y, Y)).unwrap();
        let half = |re: i64, im: i64| CycloElem::gaussian(re, im);
        let z = CycloElem::zero;
        let expected = U4Matrix::new(
            [
                [half(2, 0), z(), z(), z()],
                [z(), half(1, 1), half(1, -1), z()],
                [z(), half(1, -1), half(1, 1), z()],
                [z(), z(), z(), half(2, 0)],
            ],
            2,
        );
        assert_eq!(r, expected);
        assert!(r.is_unitary());
    }

    #[test]
    fn r_rejects_bad_pairs() {
        assert!(r_gate_matrix(pp(X, I), pp(Z, I)).is_err());
        assert!(r_gate_matrix(pp(X, I), pp(X, I)).is_err());
        assert!(r_gate_matrix(Pauli2::IDENTITY, pp(X, I)).is_err());
        assert!(r_gate_matrix(Pauli2::with_phase(1, X, I), pp(I, X)).is_err());
    }

    #[test]
    fn generators_are_unitary_and_valid() {
        for g in generators() {
            let m = generator_matrix(g.index);
            assert!(m.is_unitary());
            assert_eq!(m.mul(m).mul(m).mul(m), U4Matrix::identity());
            assert!(g.p.commutes(g.q) && g.p.is_hermitian() && g.q.is_hermitian());
        }
    }

    #[test]
    fn hadamard_and_words() {
        let h1 = Token::H1.matrix();
        assert_eq!(h1.k(), 1);
        assert_eq!(h1.entries()[0][0], CycloElem::one());
        assert_eq!(h1.entries()[2][2], CycloElem::from_int(-1));
        assert_eq!(h1.entries()[0][1], CycloElem::zero());
        assert_eq!(word(""), U4Matrix::identity());
        assert_eq!(word("CS CS"), Token::CZ.matrix());
        assert_eq!(word("H1 H1"), U4Matrix::identity());
        assert_eq!(word("W W^7"), U4Matrix::identity());
        assert!(matches!("Q1".parse::<Token>(), Err(Error::UnknownToken(_))));
        assert!("G16".parse::<Token>().is_err());
    }

    #[test]
    fn evaluation_is_a_monoid_homomorphism() {
        let u: GateWord = "H1 S2 CZ G4 W^3 CS".parse().unwrap();
        let v: GateWord = "G11 H2 S1 S1 CZ".parse().unwrap();
        assert_eq!(u.concat(&v).evaluate(), u.evaluate().mul(&v.evaluate()));
        assert_eq!(u.concat(&u.inverse()).evaluate(), U4Matrix::identity());
    }

    #[test]
    fn determinant_one_cliffords() {
        for t in CLIFFORD_GENERATORS {
            let d = determinant_one_clifford(t).determinant();
            assert_eq!(d, DyadicScalar::new(CycloElem::one(), 0), "{t}");
        }
        assert_eq!(Token::CS.matrix().determinant(), DyadicScalar::new(CycloElem::i(), 0));
    }

    #[test]
    fn phase_detection() {
        let u = word("H1 CS S2");
        assert_eq!(u.phase_to(&u.mul_omega_pow(5)), Some(5));
        assert_eq!(u.phase_to(&word("H1 S2")), None);
    }
}
