//! The two-qubit Pauli group `{ i^a (P ⊗ Q) }`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::CycloElem;
use crate::su4::U4Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli1 {
    I,
    X,
    Y,
    Z,
}

impl Pauli1 {
    pub const ALL: [Pauli1; 4] = [Pauli1::I, Pauli1::X, Pauli1::Y, Pauli1::Z];

    /// `self · rhs = i^phase · result`.
    pub fn mul(self, rhs: Pauli1) -> (u8, Pauli1) {
        use Pauli1::*;
        match (self, rhs) {
            (I, p) | (p, I) => (0, p),
            (X, X) | (Y, Y) | (Z, Z) => (0, I),
            (X, Y) => (1, Z),
            (Y, X) => (3, Z),
            (Y, Z) => (1, X),
            (Z, Y) => (3, X),
            (Z, X) => (1, Y),
            (X, Z) => (3, Y),
        }
    }

    /// Entries as Gaussian integers `(re, im)`, row-major.
    fn entries(self) -> [[(i64, i64); 2]; 2] {
        match self {
            Pauli1::I => [[(1, 0), (0, 0)], [(0, 0), (1, 0)]],
            Pauli1::X => [[(0, 0), (1, 0)], [(1, 0), (0, 0)]],
            Pauli1::Y => [[(0, 0), (0, -1)], [(0, 1), (0, 0)]],
            Pauli1::Z => [[(1, 0), (0, 0)], [(0, 0), (-1, 0)]],
        }
    }

    fn letter(self) -> char {
        match self {
            Pauli1::I => 'I',
            Pauli1::X => 'X',
            Pauli1::Y => 'Y',
            Pauli1::Z => 'Z',
        }
    }
}

/// `i^phase · (left ⊗ right)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pauli2 {
    pub phase: u8,
    pub left: Pauli1,
    pub right: Pauli1,
}

impl Pauli2 {
    pub const IDENTITY: Pauli2 = Pauli2 { phase: 0, left: Pauli1::I, right: Pauli1::I };

    pub const fn new(left: Pauli1, right: Pauli1) -> Self {
        Self { phase: 0, left, right }
    }

    pub const fn with_phase(phase: u8, left: Pauli1, right: Pauli1) -> Self {
        Self { phase: phase % 4, left, right }
    }

    pub fn mul(self, rhs: Pauli2) -> Pauli2 {
        let (pl, left) = self.left.mul(rhs.left);
        let (pr, right) = self.right.mul(rhs.right);
        Pauli2::with_phase(self.phase + rhs.phase + pl + pr, left, right)
    }

    /// Multiplies by `i^j`.
    pub fn times_i(self, j: u8) -> Pauli2 {
        Pauli2::with_phase(self.phase + j, self.left, self.right)
    }

    pub fn neg(self) -> Pauli2 {
        self.times_i(2)
    }

    pub fn is_hermitian(self) -> bool {
        self.phase.is_multiple_of(2)
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// True for `±I`, `±iI`.
    pub fn is_scalar(self) -> bool {
        self.left == Pauli1::I && self.right == Pauli1::I
    }

    pub fn commutes(self, rhs: Pauli2) -> bool {
        let anti = |p: Pauli1, q: Pauli1| p != Pauli1::I && q != Pauli1::I && p != q;
        (anti(self.left, rhs.left) as u8 + anti(self.right, rhs.right) as u8).is_multiple_of(2)
    }

    pub fn matrix(self) -> U4Matrix {
        let l = self.left.entries();
        let r = self.right.entries();
        let phase = CycloElem::omega_pow(2 * self.phase as i64);
        let entries = std::array::from_fn(|row| {
            std::array::from_fn(|col| {
                let (a, b) = l[row / 2][col / 2];
                let (c, d) = r[row % 2][col % 2];
                let x = CycloElem::gaussian(a * c - b * d, a * d + b * c);
                &x * &phase
            })
        });
        U4Matrix::new(entries, 0)
    }

    /// Every element of the group, 64 in total.
    pub fn all() -> Vec<Pauli2> {
        let mut out = Vec::with_capacity(64);
        for phase in 0..4 {
            for l in Pauli1::ALL {
                for r in Pauli1::ALL {
                    out.push(Pauli2::with_phase(phase, l, r));
                }
            }
        }
        out
    }

    /// Hermitian elements other than the identity (31 of them, `-I` included).
    pub fn hermitian_non_identity() -> Vec<Pauli2> {
        Self::all().into_iter().filter(|p| p.is_hermitian() && !p.is_identity()).collect()
    }

    /// Identifies an exact matrix as a Pauli group element.
    pub fn from_matrix(m: &U4Matrix) -> Option<Pauli2> {
        Self::all().into_iter().find(|p| p.matrix() == *m)
    }
}

impl fmt::Display for Pauli2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["", "i", "-", "-i"][self.phase as usize];
        write!(f, "{prefix}{}{}", self.left.letter(), self.right.letter())
    }
}

impl FromStr for Pauli2 {
    type Err = Error;

    /// Parses strings such as `XZ`, `-YI`, `iZZ`, `-iXY`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (phase, rest) = if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (1, r)
        } else {
            (0, s)
        };
        let letter = |c: char| match c {
            'I' => Ok(Pauli1::I),
            'X' => Ok(Pauli1::X),
            'Y' => Ok(Pauli1::Y),
            'Z' => Ok(Pauli1::Z),
            _ => Err(Error::Parse(format!("bad Pauli string `{s}`"))),
        };
        let chars: Vec<char> = rest.chars().collect();
        if chars.len() != 2 {
            return Err(Error::Parse(format!("bad Pauli string `{s}`")));
        }
        Ok(Pauli2::with_phase(phase, letter(chars[0])?, letter(chars[1])?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pauli2 {
        s.parse().unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(p("XI").mul(p("XI")), p("II"));
        assert_eq!(p("XI").mul(p("YI")), p("iZI"));
        // (Z⊗X)(Y⊗Y) = (ZY)⊗(XY) = (-iX)⊗(iZ) = X⊗Z
        assert_eq!(p("ZX").mul(p("YY")), p("XZ"));
    }

    #[test]
    fn products_agree_with_matrices() {
        for x in Pauli2::all() {
            for y in Pauli2::all().into_iter().step_by(3) {
                assert_eq!(x.mul(y).matrix(), x.matrix().mul(&y.matrix()), "{x} * {y}");
            }
        }
    }

    #[test]
    fn commutation_examples() {
        assert!(p("ZI").commutes(p("IZ")));
        assert!(!p("XI").commutes(p("ZI")));
        assert!(p("XX").commutes(p("YY")));
        let (xx, yy) = (p("XX").matrix(), p("YY").matrix());
        assert_eq!(xx.mul(&yy), yy.mul(&xx));
    }

    #[test]
    fn commutes_matches_matrix_commutator() {
        for x in Pauli2::all().into_iter().take(16) {
            for y in Pauli2::all().into_iter().take(16) {
                let (mx, my) = (x.matrix(), y.matrix());
                assert_eq!(x.commutes(y), mx.mul(&my) == my.mul(&mx));
            }
        }
    }

    #[test]
    fn hermitian_iff_real_phase() {
        for x in Pauli2::all() {
            assert_eq!(x.is_hermitian(), x.matrix() == x.matrix().adjoint());
        }
        assert_eq!(Pauli2::hermitian_non_identity().len(), 31);
    }

    #[test]
    fn parse_display_roundtrip() {
        for x in Pauli2::all() {
            assert_eq!(p(&x.to_string()), x);
        }
        assert!("XQ".parse::<Pauli2>().is_err());
    }
}
