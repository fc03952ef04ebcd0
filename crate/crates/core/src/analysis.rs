//! Operator counts by CS-count, the ε-approximation lower bound and the
//! relation between SU(4) and SO(6) denominator exponents.
//!
//! Counts include the eight global phases `ω^j`. The bound halves the count,
//! since only `±1` among those phases lies in SU(4) up to the determinant.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::pauli::{Pauli1, Pauli2};
use crate::ring::{CycloElem, DyadicScalar};
use crate::so6::su4_to_so6;
use crate::su4::{r_gate_matrix, U4Matrix};

pub const CLIFFORD_GROUP_ORDER: u64 = 92160;

/// Operators of CS-count exactly `n ≥ 1`. For `n = 0` use [`CLIFFORD_GROUP_ORDER`].
pub fn count_exact(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::BadInput("count_exact needs n >= 1; there are 92160 Cliffords".into()));
    }
    let p8 = BigUint::from(8u32).pow(n);
    let p4 = BigUint::from(4u32).pow(n);
    Ok(BigUint::from(86400u32) * (p8 * 3u32 - p4 * 2u32))
}

/// Operators of CS-count at most `n`.
pub fn count_upto(n: u32) -> BigUint {
    let p8 = BigUint::from(8u32).pow(n);
    let p4 = BigUint::from(4u32).pow(n);
    let inner = p8 * 45u32 - p4 * 35u32 + 4u32;
    let num = inner * 46080u32;
    debug_assert!((&num % 7u32).is_zero());
    num / 7u32
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub n: u32,
    pub exact: BigUint,
    pub cumulative: BigUint,
}

pub fn count_report(n: u32) -> CountReport {
    let exact = count_exact(n).unwrap_or_else(|_| BigUint::from(CLIFFORD_GROUP_ORDER));
    CountReport { n, exact, cumulative: count_upto(n) }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundReport {
    pub epsilon: f64,
    /// `5·log₂(1/ε) − 0.67`.
    pub lower_bound: f64,
    /// Real `n` at which the volume inequality becomes an equality.
    pub volume_bound: f64,
    /// Least integer `n` satisfying the volume inequality.
    pub minimal_n: u64,
}

const PRECISION: usize = 192;
const RM: RoundingMode = RoundingMode::ToEven;

struct Real {
    cc: Consts,
}

impl Real {
    fn new() -> Self {
        Real { cc: Consts::new().expect("constants cache") }
    }

    fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, PRECISION)
    }

    fn f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, PRECISION)
    }

    fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(PRECISION, RM, &mut self.cc)
    }

    fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(PRECISION, RM, &mut self.cc)
    }

    fn pi(&mut self) -> BigFloat {
        self.cc.pi(PRECISION, RM)
    }
}

fn to_f64(x: &BigFloat) -> f64 {
    x.to_string().parse().expect("finite value")
}

/// `ln(count_upto(n)/2 · ballVol(ε)) − ln(vol SU(4))` for real `n`.
fn volume_gap(r: &mut Real, n: &BigFloat, ln_eps: &BigFloat) -> BigFloat {
    let ln8 = r.ln(&r.int(8));
    let ln4 = r.ln(&r.int(4));
    let p8 = r.exp(&n.mul(&ln8, PRECISION, RM));
    let p4 = r.exp(&n.mul(&ln4, PRECISION, RM));
    let inner = p8.mul(&r.int(45), PRECISION, RM).sub(&p4.mul(&r.int(35), PRECISION, RM), PRECISION, RM).add(
        &r.int(4),
        PRECISION,
        RM,
    );
    // count_upto / 2 = (23040/7)·inner
    let count_half = inner.mul(&r.int(23040), PRECISION, RM).div(&r.int(7), PRECISION, RM);
    // Ball volume π^{15/2}/Γ(17/2) = 256·π⁷/2027025.
    let pi = r.pi();
    let pi7 = pi.powi(7, PRECISION, RM);
    let ball = pi7.mul(&r.int(256), PRECISION, RM).div(&r.int(2027025), PRECISION, RM);
    // vol SU(4) = √2·π⁹/3.
    let sqrt2 = r.int(2).sqrt(PRECISION, RM);
    let vol = sqrt2.mul(&pi.powi(9, PRECISION, RM), PRECISION, RM).div(&r.int(3), PRECISION, RM);
    let lhs = r.ln(&count_half.mul(&ball, PRECISION, RM));
    let lhs = lhs.add(&ln_eps.mul(&r.int(15), PRECISION, RM), PRECISION, RM);
    lhs.sub(&r.ln(&vol), PRECISION, RM)
}

/// Headline bound together with the bound obtained by solving the volume
/// inequality directly.
pub fn epsilon_lower_bound(epsilon: f64) -> Result<BoundReport> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::BadEpsilon(epsilon));
    }
    let mut r = Real::new();
    let ln_eps = r.ln(&r.f64(epsilon));
    let ln2 = r.ln(&r.int(2));
    let log2_inv = ln_eps.div(&ln2, PRECISION, RM).neg();
    let headline = log2_inv.mul(&r.int(5), PRECISION, RM).sub(&r.f64(0.67), PRECISION, RM);

    let zero = r.int(0);
    let gap_at = |r: &mut Real, n: &BigFloat| volume_gap(r, n, &ln_eps);
    let (volume_bound, minimal_n) = if !gap_at(&mut r, &zero).is_negative() {
        (0.0, 0)
    } else {
        let mut hi = r.int(1);
        while gap_at(&mut r, &hi).is_negative() {
            hi = hi.mul(&r.int(2), PRECISION, RM);
        }
        let mut lo = zero;
        for _ in 0..160 {
            let mid = lo.add(&hi, PRECISION, RM).div(&r.int(2), PRECISION, RM);
            if gap_at(&mut r, &mid).is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let root = to_f64(&hi);
        let mut n = root.floor().max(0.0) as u64;
        loop {
            let at = r.int(n as i64);
            if !gap_at(&mut r, &at).is_negative() {
                break;
            }
            n += 1;
        }
        (root, n)
    };
    Ok(BoundReport { epsilon, lower_bound: to_f64(&headline), volume_bound, minimal_n })
}

/// Phase representative with determinant one: `ω^j·u` for `j ∈ {0, 1}`, or
/// `None` when `det u = ±i` (no eighth-root phase reaches determinant one).
pub fn determinant_one(u: &U4Matrix) -> Option<U4Matrix> {
    let one = DyadicScalar::new(CycloElem::one(), 0);
    let minus_one = DyadicScalar::new(CycloElem::from_int(-1), 0);
    let d = u.determinant();
    if d == one {
        Some(u.clone())
    } else if d == minus_one {
        Some(u.mul_omega_pow(1))
    } else {
        None
    }
}

/// Least denominator exponent over `Z[i]` of the determinant-one representative.
pub fn su4_lde(u: &U4Matrix) -> Option<u32> {
    determinant_one(u)?.lde_gaussian()
}

/// `(k − 3)/2 ≤ k' ≤ 2k + 2` for SU(4) exponent `k` and CS-count `k'`.
pub fn lde_sandwich_holds(k: u32, k_prime: u32) -> bool {
    k <= 2 * k_prime + 3 && k_prime <= 2 * k + 2
}

/// `[R(XI,IZ)·R(XI,IX)·R(ZI,IX)·R(ZI,IZ)]^m`.
pub fn adversarial_operator(m: u32) -> U4Matrix {
    use Pauli1::{I, X, Z};
    let r = |a: Pauli2, b: Pauli2| r_gate_matrix(a, b).expect("valid pair");
    let block = r(Pauli2::new(X, I), Pauli2::new(I, Z))
        .mul(&r(Pauli2::new(X, I), Pauli2::new(I, X)))
        .mul(&r(Pauli2::new(Z, I), Pauli2::new(I, X)))
        .mul(&r(Pauli2::new(Z, I), Pauli2::new(I, Z)));
    (0..m).fold(U4Matrix::identity(), |acc, _| acc.mul(&block))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LdePair {
    /// Least denominator exponent of the determinant-one SU(4) representative.
    pub k: u32,
    /// CS-count, the SO(6) least denominator exponent.
    pub k_prime: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LdeStats {
    pub pairs: Vec<LdePair>,
    pub skipped: usize,
    pub violations: usize,
}

impl LdeStats {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,k_prime\n");
        for p in &self.pairs {
            out.push_str(&format!("{},{}\n", p.k, p.k_prime));
        }
        out
    }
}

/// `(k, k′)` for each operator; inputs without a determinant-one phase
/// representative are counted in `skipped`.
pub fn lde_vs_cscount<'a>(ops: impl IntoIterator<Item = &'a U4Matrix>) -> Result<LdeStats> {
    let mut stats = LdeStats::default();
    for u in ops {
        let k_prime = su4_to_so6(u)?.lde();
        match su4_lde(u) {
            Some(k) => {
                if !lde_sandwich_holds(k, k_prime) {
                    stats.violations += 1;
                }
                stats.pairs.push(LdePair { k, k_prime });
            }
            None => stats.skipped += 1,
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(count_exact(1).unwrap(), BigUint::from(1_382_400u64));
        assert_eq!(count_exact(2).unwrap(), BigUint::from(13_824_000u64));
        assert!(count_exact(0).is_err());
        assert_eq!(count_upto(0), BigUint::from(92160u64));
        assert_eq!(count_upto(1), BigUint::from(1_474_560u64));
        assert_eq!(count_upto(2), BigUint::from(15_298_560u64));
        for n in 1..20 {
            assert_eq!(count_upto(n), count_upto(n - 1) + count_exact(n).unwrap());
        }
    }

    #[test]
    fn headline_bound() {
        let b = epsilon_lower_bound(2f64.powi(-10)).unwrap();
        assert!((b.lower_bound - 49.33).abs() < 1e-9);
        assert!(matches!(epsilon_lower_bound(0.0), Err(Error::BadEpsilon(_))));
        assert!(epsilon_lower_bound(1.5).is_err());
    }

    #[test]
    fn adversarial_ratio() {
        let u = adversarial_operator(1);
        assert_eq!(su4_to_so6(&u).unwrap().lde(), 4);
        let stats = lde_vs_cscount([&u, &U4Matrix::identity()]).unwrap();
        assert_eq!(stats.violations, 0);
        assert_eq!(stats.pairs[1], LdePair { k: 0, k_prime: 0 });
    }

    #[test]
    fn sandwich_predicate() {
        assert!(lde_sandwich_holds(0, 0));
        assert!(lde_sandwich_holds(3, 0));
        assert!(!lde_sandwich_holds(4, 0));
        assert!(!lde_sandwich_holds(0, 3));
    }
}
