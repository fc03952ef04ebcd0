//! The SO(6) representation: exterior-square action of SU(4) in the basis `B`,
//! residues and row patterns.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::CycloElem;
use crate::su4::{determinant_one_clifford, generator_matrix, Token, U4Matrix, CLIFFORD_GENERATORS};

/// `entries / √2^k` with integer entries; canonical when `k = 0` or some entry is
/// odd, and when the first nonzero entry of column 1 is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SO6Matrix {
    entries: [[BigInt; 6]; 6],
    k: u32,
}

impl SO6Matrix {
    /// Canonicalizes and checks `MᵀM = 2^k·I`.
    pub fn new(entries: [[BigInt; 6]; 6], k: u32) -> Result<Self> {
        let m = Self::canonical(entries, k);
        if !m.is_orthogonal() {
            return Err(Error::NotInGroup("matrix is not orthogonal".into()));
        }
        Ok(m)
    }

    pub fn from_rows(rows: [[i64; 6]; 6], k: u32) -> Result<Self> {
        Self::new(rows.map(|r| r.map(BigInt::from)), k)
    }

    /// Reduces the exponent and fixes the sign without checking orthogonality.
    pub(crate) fn canonical(mut entries: [[BigInt; 6]; 6], mut k: u32) -> Self {
        while k >= 2 && entries.iter().flatten().all(|x| x.is_even()) {
            for x in entries.iter_mut().flatten() {
                *x >>= 1;
            }
            k -= 2;
        }
        let mut m = Self { entries, k };
        m.fix_sign();
        m
    }

    fn fix_sign(&mut self) {
        let first = (0..6).map(|r| &self.entries[r][0]).find(|x| !x.is_zero());
        if first.is_some_and(|x| x.is_negative()) {
            for x in self.entries.iter_mut().flatten() {
                *x = -&*x;
            }
        }
    }

    pub fn identity() -> Self {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| if r == c { BigInt::one() } else { BigInt::zero() })
        });
        Self { entries, k: 0 }
    }

    pub fn entries(&self) -> &[[BigInt; 6]; 6] {
        &self.entries
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Least denominator exponent.
    pub fn lde(&self) -> u32 {
        self.k
    }

    pub fn transpose(&self) -> Self {
        let entries = std::array::from_fn(|r| std::array::from_fn(|c| self.entries[c][r].clone()));
        Self::canonical(entries, self.k)
    }

    pub fn mul(&self, rhs: &SO6Matrix) -> SO6Matrix {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let mut acc = BigInt::zero();
                for l in 0..6 {
                    let (x, y) = (&self.entries[r][l], &rhs.entries[l][c]);
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                acc
            })
        });
        Self::canonical(entries, self.k + rhs.k)
    }

    pub fn is_orthogonal(&self) -> bool {
        let scale = BigInt::one() << self.k;
        for a in 0..6 {
            for b in a..6 {
                let dot: BigInt = (0..6).map(|r| &self.entries[r][a] * &self.entries[r][b]).sum();
                let expected = if a == b { scale.clone() } else { BigInt::zero() };
                if dot != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Determinant of the integer matrix (Bareiss elimination).
    pub fn integer_determinant(&self) -> BigInt {
        let mut a: Vec<Vec<BigInt>> = self.entries.iter().map(|r| r.to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for i in 0..6 {
            if a[i][i].is_zero() {
                match (i + 1..6).find(|&r| !a[r][i].is_zero()) {
                    Some(r) => {
                        a.swap(i, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for r in i + 1..6 {
                for c in i + 1..6 {
                    let v = &a[r][c] * &a[i][i] - &a[r][i] * &a[i][c];
                    a[r][c] = v / &prev;
                }
            }
            prev = a[i][i].clone();
        }
        sign * &a[5][5]
    }

    /// The sign-canonical form of `-self` equals `self`; this returns the
    /// literal negation, which is generally not canonical.
    pub fn negated_entries(&self) -> [[BigInt; 6]; 6] {
        self.entries.clone().map(|r| r.map(|x| -x))
    }

    /// Entries as `i64`, when they fit.
    pub fn to_i64(&self) -> Option<[[i64; 6]; 6]> {
        let mut out = [[0i64; 6]; 6];
        for r in 0..6 {
            for c in 0..6 {
                out[r][c] = i64::try_from(&self.entries[r][c]).ok()?;
            }
        }
        Some(out)
    }

    pub fn bits(&self) -> u64 {
        self.entries.iter().flatten().map(|x| x.bits()).max().unwrap_or(0)
    }
}

impl fmt::Display for SO6Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "1/√2^{} ·", self.k)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Pair coordinates `e_i ∧ e_j` in the order 12, 13, 14, 23, 24, 34.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// `√2·B_j` as (pair coordinate, ω-exponent of the unit coefficient).
const BASIS: [[(usize, i64); 2]; 6] = [
    [(0, 2), (5, 6)], // i(e12 - e34)
    [(0, 0), (5, 0)], // e12 + e34
    [(3, 2), (2, 6)], // i(e23 - e14)
    [(4, 0), (1, 4)], // e24 + e31
    [(4, 2), (1, 2)], // i(e24 - e31)
    [(3, 0), (2, 0)], // e23 + e14
];

/// Exterior square `Λ²(M)` in the pair coordinates.
fn exterior_square(m: &[[CycloElem; 4]; 4]) -> [[CycloElem; 6]; 6] {
    std::array::from_fn(|r| {
        let (i, j) = PAIRS[r];
        std::array::from_fn(|c| {
            let (a, b) = PAIRS[c];
            &m[i][a] * &m[j][b] - &m[i][b] * &m[j][a]
        })
    })
}

/// The SO(6) image of an exact unitary, defined up to the global phase of `u`.
pub fn su4_to_so6(u: &U4Matrix) -> Result<SO6Matrix> {
    let lam = exterior_square(u.entries());
    let mut n: [[CycloElem; 6]; 6] = Default::default();
    for (j, bj) in BASIS.iter().enumerate() {
        for (l, bl) in BASIS.iter().enumerate() {
            let mut acc = CycloElem::zero();
            for &(p, ep) in bj {
                for &(q, eq) in bl {
                    let x = &lam[p][q];
                    if !x.is_zero() {
                        acc = acc + x.mul_omega_pow(eq - ep);
                    }
                }
            }
            n[j][l] = acc;
        }
    }
    let big_k = 2 * u.k() + 2;
    let pivot = n
        .iter()
        .flatten()
        .find(|x| !x.is_zero())
        .ok_or_else(|| Error::NotInGroup("singular matrix".into()))?;
    let phase = (0..8)
        .find(|&j| pivot.mul_omega_pow(j).is_real())
        .ok_or_else(|| Error::NotInGroup("no phase makes the image real".into()))?;
    let mut ints: [[BigInt; 6]; 6] = Default::default();
    let mut rational = false;
    let mut irrational = false;
    for r in 0..6 {
        for c in 0..6 {
            let x = n[r][c].mul_omega_pow(phase);
            if !x.is_real() {
                return Err(Error::NotInGroup("no phase makes the image real".into()));
            }
            // x = a + b√2 with coordinates (a, b, 0, -b).
            let (a, b) = (x.a, x.b);
            if !a.is_zero() {
                rational = true;
                ints[r][c] = a;
                if !b.is_zero() {
                    return Err(Error::NotInGroup("entry mixes 1 and √2".into()));
                }
            } else if !b.is_zero() {
                irrational = true;
                ints[r][c] = b;
            }
        }
    }
    if rational && irrational {
        return Err(Error::NotInGroup("entries have mixed parity exponents".into()));
    }
    let k = if irrational { big_k - 1 } else { big_k };
    SO6Matrix::new(ints, k)
}

/// Parity matrix of `√2^ell · m`, stored as one column bitmask per row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueMatrix {
    pub rows: [u8; 6],
}

impl ResidueMatrix {
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r] >> c & 1 == 1
    }

    pub fn column(&self, c: usize) -> u8 {
        (0..6).fold(0, |acc, r| acc | ((self.rows[r] >> c & 1) << r))
    }
}

impl fmt::Display for ResidueMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..6 {
            let row: String = (0..6).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// `ell` must be a denominator exponent: at least `lde(m)` and of the same parity.
pub fn residue(m: &SO6Matrix, ell: u32) -> Result<ResidueMatrix> {
    if ell < m.k {
        return Err(Error::InsufficientExponent { ell, lde: m.k });
    }
    if (ell - m.k) % 2 == 1 {
        return Err(Error::BadInput(format!("√2^{ell}·V is not an integer matrix when lde(V) = {}", m.k)));
    }
    let mut rows = [0u8; 6];
    if ell == m.k {
        for (r, row) in m.entries.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                if x.is_odd() {
                    rows[r] |= 1 << c;
                }
            }
        }
    }
    Ok(ResidueMatrix { rows })
}

/// A partition of `{1, …, 6}`, blocks sorted and ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    blocks: Vec<Vec<u8>>,
}

impl Pattern {
    pub fn new(mut blocks: Vec<Vec<u8>>) -> Result<Self> {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        let mut all: Vec<u8> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != [1, 2, 3, 4, 5, 6] || blocks.iter().any(Vec::is_empty) {
            return Err(Error::BadInput(format!("{blocks:?} is not a partition of [6]")));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    /// Pattern of a binary matrix: rows grouped by equality.
    pub fn of_residue(res: &ResidueMatrix) -> Pattern {
        let mut blocks: Vec<Vec<u8>> = Vec::new();
        let mut keys: Vec<u8> = Vec::new();
        for (r, &row) in res.rows.iter().enumerate() {
            match keys.iter().position(|&k| k == row) {
                Some(i) => blocks[i].push(r as u8 + 1),
                None => {
                    keys.push(row);
                    blocks.push(vec![r as u8 + 1]);
                }
            }
        }
        Pattern { blocks }
    }

    /// Block sizes in decreasing order.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn is_222(&self) -> bool {
        self.shape() == [2, 2, 2]
    }

    pub fn is_24(&self) -> bool {
        self.shape() == [4, 2]
    }

    /// True iff every block of `self` lies inside a block of `coarser`.
    pub fn finer(&self, coarser: &Pattern) -> bool {
        self.blocks.iter().all(|b| coarser.blocks.iter().any(|c| b.iter().all(|x| c.contains(x))))
    }

    /// The 15 perfect matchings of `[6]`.
    pub fn all_222() -> Vec<Pattern> {
        let mut out = Vec::new();
        for a in 2..=6u8 {
            let rest: Vec<u8> = (2..=6).filter(|&x| x != a).collect();
            let first = rest[0];
            for &b in &rest[1..] {
                let last: Vec<u8> = rest[1..].iter().copied().filter(|&x| x != b).collect();
                out.push(Pattern::new(vec![vec![1, a], vec![first, b], last]).unwrap());
            }
        }
        out.sort();
        out
    }

    /// The 15 partitions into a pair and a quadruple.
    pub fn all_24() -> Vec<Pattern> {
        let mut out = Vec::new();
        for x in 1..=6u8 {
            for y in x + 1..=6 {
                let rest: Vec<u8> = (1..=6).filter(|&z| z != x && z != y).collect();
                out.push(Pattern::new(vec![vec![x, y], rest]).unwrap());
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(u8::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Parses `{{1,2},{3,4,5,6}}`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad pattern `{s}`"));
        let inner = s.trim().strip_prefix('{').and_then(|t| t.strip_suffix('}')).ok_or_else(bad)?;
        let mut blocks = Vec::new();
        for part in inner.split('}') {
            let part = part.trim_start_matches([',', ' ']).trim();
            if part.is_empty() {
                continue;
            }
            let body = part.strip_prefix('{').ok_or_else(bad)?;
            let block = body
                .split(',')
                .map(|x| x.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
        }
        Pattern::new(blocks)
    }
}

/// Pattern of `m`; for `lde(m) = 0` this is the discrete partition.
pub fn pattern_of(m: &SO6Matrix) -> Pattern {
    Pattern::of_residue(&residue(m, m.k).expect("lde is a denominator exponent"))
}

pub fn finer(p: &Pattern, q: &Pattern) -> bool {
    p.finer(q)
}

#[rustfmt::skip]
const GENERATOR_IMAGE_ROWS: [[[i64; 6]; 6]; 15] = [
    [[1,0,0,-1,0,0],[0,1,-1,0,0,0],[0,1,1,0,0,0],[1,0,0,1,0,0],[0,0,0,0,1,-1],[0,0,0,0,1,1]],
    [[1,0,1,0,0,0],[0,1,0,0,-1,0],[-1,0,1,0,0,0],[0,0,0,1,0,1],[0,1,0,0,1,0],[0,0,0,-1,0,1]],
    [[1,-1,0,0,0,0],[1,1,0,0,0,0],[0,0,1,0,0,-1],[0,0,0,1,-1,0],[0,0,0,1,1,0],[0,0,1,0,0,1]],
    [[1,0,1,0,0,0],[0,1,0,0,0,-1],[-1,0,1,0,0,0],[0,0,0,1,-1,0],[0,0,0,1,1,0],[0,1,0,0,0,1]],
    [[1,-1,0,0,0,0],[1,1,0,0,0,0],[0,0,1,0,-1,0],[0,0,0,1,0,1],[0,0,1,0,1,0],[0,0,0,-1,0,1]],
    [[1,-1,0,0,0,0],[1,1,0,0,0,0],[0,0,1,-1,0,0],[0,0,1,1,0,0],[0,0,0,0,1,-1],[0,0,0,0,1,1]],
    [[1,0,0,0,0,-1],[0,1,-1,0,0,0],[0,1,1,0,0,0],[0,0,0,1,-1,0],[0,0,0,1,1,0],[1,0,0,0,0,1]],
    [[1,0,0,0,-1,0],[0,1,-1,0,0,0],[0,1,1,0,0,0],[0,0,0,1,0,1],[1,0,0,0,1,0],[0,0,0,-1,0,1]],
    [[1,0,1,0,0,0],[0,1,0,-1,0,0],[-1,0,1,0,0,0],[0,1,0,1,0,0],[0,0,0,0,1,-1],[0,0,0,0,1,1]],
    [[1,0,0,1,0,0],[0,1,0,0,1,0],[0,0,1,0,0,1],[-1,0,0,1,0,0],[0,-1,0,0,1,0],[0,0,-1,0,0,1]],
    [[1,0,0,-1,0,0],[0,1,0,0,0,1],[0,0,1,0,1,0],[1,0,0,1,0,0],[0,0,-1,0,1,0],[0,-1,0,0,0,1]],
    [[1,0,0,0,0,1],[0,1,0,0,-1,0],[0,0,1,1,0,0],[0,0,-1,1,0,0],[0,1,0,0,1,0],[-1,0,0,0,0,1]],
    [[1,0,0,0,-1,0],[0,1,0,1,0,0],[0,0,1,0,0,1],[0,-1,0,1,0,0],[1,0,0,0,1,0],[0,0,-1,0,0,1]],
    [[1,0,0,0,1,0],[0,1,0,0,0,1],[0,0,1,1,0,0],[0,0,-1,1,0,0],[-1,0,0,0,1,0],[0,-1,0,0,0,1]],
    [[1,0,0,0,0,1],[0,1,0,1,0,0],[0,0,1,0,1,0],[0,-1,0,1,0,0],[0,0,-1,0,1,0],[-1,0,0,0,0,1]],
];

/// Images of `ω†S⊗I`, `I⊗ω†S`, `iH⊗I`, `I⊗iH`, `ω†CZ`.
#[rustfmt::skip]
const CLIFFORD_IMAGE_ROWS: [(Token, [[i64; 6]; 6]); 5] = [
    (Token::S1, [[0,-1,0,0,0,0],[1,0,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]),
    (Token::S2, [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,0,-1,0],[0,0,0,1,0,0],[0,0,0,0,0,1]]),
    (Token::H1, [[0,0,1,0,0,0],[0,-1,0,0,0,0],[1,0,0,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]),
    (Token::H2, [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,0,0,1],[0,0,0,0,-1,0],[0,0,0,1,0,0]]),
    (Token::CZ, [[0,-1,0,0,0,0],[1,0,0,0,0,0],[0,0,0,0,0,-1],[0,0,0,0,-1,0],[0,0,0,1,0,0],[0,0,1,0,0,0]]),
];

static GENERATOR_IMAGES: LazyLock<[SO6Matrix; 15]> = LazyLock::new(|| {
    std::array::from_fn(|n| {
        let stored = SO6Matrix::from_rows(GENERATOR_IMAGE_ROWS[n], 1).expect("orthogonal");
        let computed = su4_to_so6(generator_matrix(n as u8 + 1)).expect("generator image");
        assert_eq!(stored, computed, "stored image of G{} disagrees with recomputation", n + 1);
        stored
    })
});

static CLIFFORD_IMAGES: LazyLock<[SO6Matrix; 5]> = LazyLock::new(|| {
    std::array::from_fn(|n| {
        let (token, rows) = CLIFFORD_IMAGE_ROWS[n];
        let stored = SO6Matrix::from_rows(rows, 0).expect("orthogonal");
        let computed = su4_to_so6(&determinant_one_clifford(token)).expect("clifford image");
        assert_eq!(stored, computed, "stored image of {token} disagrees with recomputation");
        stored
    })
});

/// Images of `G1..G15`, indexed from zero.
pub fn generator_images() -> &'static [SO6Matrix; 15] {
    &GENERATOR_IMAGES
}

pub fn generator_image(index: u8) -> &'static SO6Matrix {
    &GENERATOR_IMAGES[index as usize - 1]
}

/// Images of the Clifford generators in the order of [`CLIFFORD_GENERATORS`].
pub fn clifford_generator_images() -> [(Token, &'static SO6Matrix); 5] {
    std::array::from_fn(|n| {
        let t = CLIFFORD_GENERATORS[n];
        let pos = CLIFFORD_IMAGE_ROWS.iter().position(|(u, _)| *u == t).unwrap();
        (t, &CLIFFORD_IMAGES[pos])
    })
}

pub fn clifford_image(t: Token) -> &'static SO6Matrix {
    let pos = CLIFFORD_IMAGE_ROWS
        .iter()
        .position(|(u, _)| *u == t)
        .unwrap_or_else(|| panic!("{t} is not a Clifford generator"));
    &CLIFFORD_IMAGES[pos]
}

static GENERATOR_PATTERNS: LazyLock<[Pattern; 15]> =
    LazyLock::new(|| std::array::from_fn(|n| pattern_of(&GENERATOR_IMAGES[n])));

/// Pattern of `G_index`.
pub fn generator_pattern(index: u8) -> &'static Pattern {
    &GENERATOR_PATTERNS[index as usize - 1]
}

/// Clifford membership: the image has least denominator exponent zero.
pub fn is_clifford(u: &U4Matrix) -> Result<bool> {
    Ok(su4_to_so6(u)?.lde() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su4::GateWord;

    fn so6(word: &str) -> SO6Matrix {
        su4_to_so6(&word.parse::<GateWord>().unwrap().evaluate()).unwrap()
    }

    #[test]
    fn identity_and_phase_kernel() {
        assert_eq!(so6(""), SO6Matrix::identity());
        let u = "H1 CS S2 G7".parse::<GateWord>().unwrap().evaluate();
        let base = su4_to_so6(&u).unwrap();
        for j in 0..8 {
            assert_eq!(su4_to_so6(&u.mul_omega_pow(j)).unwrap(), base);
        }
    }

    #[test]
    fn tables_match_recomputation() {
        assert_eq!(generator_images().len(), 15);
        assert_eq!(so6("CS"), *generator_image(3));
        for (t, m) in clifford_generator_images() {
            assert_eq!(m.k(), 0);
            assert_eq!(so6(&t.to_string()), *m);
        }
    }

    #[test]
    fn generator_patterns_match_table() {
        assert_eq!(generator_pattern(6).to_string(), "{{1,2},{3,4},{5,6}}");
        assert_eq!(generator_pattern(1).to_string(), "{{1,4},{2,3},{5,6}}");
        assert_eq!(generator_pattern(3).to_string(), "{{1,2},{3,6},{4,5}}");
        assert_eq!(generator_pattern(15).to_string(), "{{1,6},{2,4},{3,5}}");
    }

    #[test]
    fn residue_of_lde_one() {
        let g6 = generator_image(6);
        assert_eq!(g6.lde(), 1);
        let res = residue(g6, 1).unwrap();
        assert_eq!(res.rows, [0b11, 0b11, 0b1100, 0b1100, 0b110000, 0b110000]);
        assert!(matches!(residue(g6, 0), Err(Error::InsufficientExponent { .. })));
        assert!(residue(g6, 2).is_err());
        assert_eq!(residue(g6, 3).unwrap().rows, [0; 6]);
        let id = residue(&SO6Matrix::identity(), 0).unwrap();
        assert_eq!(id.rows, [1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn finer_examples() {
        let p: Pattern = "{{1,2},{3,4},{5,6}}".parse().unwrap();
        assert!(p.finer(&"{{1,2},{3,4,5,6}}".parse().unwrap()));
        assert!(!p.finer(&"{{1,3},{2,4,5,6}}".parse().unwrap()));
        for q in Pattern::all_222() {
            assert!(q.finer(&q));
        }
        assert_eq!(Pattern::all_222().len(), 15);
        assert_eq!(Pattern::all_24().len(), 15);
    }

    #[test]
    fn determinant_is_power_of_two() {
        let m = so6("G1 G10 H1 G4 S2");
        assert_eq!(m.integer_determinant(), BigInt::one() << (3 * m.k()));
    }

    #[test]
    fn non_unitary_input_is_rejected() {
        let mut e = U4Matrix::identity().entries().clone();
        e[0][1] = CycloElem::one();
        assert!(su4_to_so6(&U4Matrix::new(e, 0)).is_err());
    }
}
