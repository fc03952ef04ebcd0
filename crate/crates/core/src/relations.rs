//! The six identities satisfied by the `R(P, Q)` gates, checked exactly.

use crate::error::{Error, Result};
use crate::pauli::Pauli2;
use crate::so6::is_clifford;
use crate::su4::{check_r_preconditions, r_gate_matrix, GateWord, Token, U4Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `C R(P,Q) C† = R(CPC†, CQC†)`
    CliffordConjugation,
    /// `R(P,Q) = R(Q,P)`
    Swap,
    /// `R(P,-PQ) = R(P,Q)`
    Permutable,
    /// `R(P,-Q) ∈ R(P,Q)·𝒞`
    MinusPauli,
    /// `R(P,Q)² ∈ 𝒞`
    Squared,
    /// `R(P,L) R(P,Q) = R(P,Q) R(P,iQL)`
    SharedPauli,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::CliffordConjugation,
        Relation::Swap,
        Relation::Permutable,
        Relation::MinusPauli,
        Relation::Squared,
        Relation::SharedPauli,
    ];
}

fn r(p: Pauli2, q: Pauli2) -> Result<U4Matrix> {
    r_gate_matrix(p, q).map_err(|e| Error::HypothesisViolated(e.to_string()))
}

/// Checks one relation. `l` is required by [`Relation::SharedPauli`], `c` by
/// [`Relation::CliffordConjugation`] (a word over Clifford tokens).
pub fn check_relation(
    rel: Relation,
    p: Pauli2,
    q: Pauli2,
    l: Option<Pauli2>,
    c: Option<&GateWord>,
) -> Result<bool> {
    check_r_preconditions(p, q).map_err(|e| Error::HypothesisViolated(e.to_string()))?;
    let rpq = r(p, q)?;
    match rel {
        Relation::CliffordConjugation => {
            let c = c.ok_or_else(|| Error::HypothesisViolated("missing Clifford".into()))?;
            if !c.tokens.iter().all(|t| t.is_clifford()) {
                return Err(Error::HypothesisViolated(format!("`{c}` is not a Clifford word")));
            }
            let cm = c.evaluate();
            let cd = cm.adjoint();
            let conj = |x: Pauli2| Pauli2::from_matrix(&cm.mul(&x.matrix()).mul(&cd));
            let (cp, cq) = match (conj(p), conj(q)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Ok(false),
            };
            Ok(cm.mul(&rpq).mul(&cd) == r(cp, cq)?)
        }
        Relation::Swap => Ok(rpq == r(q, p)?),
        Relation::Permutable => Ok(r(p, p.mul(q).neg())? == rpq),
        Relation::MinusPauli => {
            let rhs = r(p, q.neg())?;
            is_clifford(&rpq.adjoint().mul(&rhs))
        }
        Relation::Squared => is_clifford(&rpq.mul(&rpq)),
        Relation::SharedPauli => {
            let l = l.ok_or_else(|| Error::HypothesisViolated("missing L".into()))?;
            if !l.is_hermitian() || l.is_identity() || l == p || l == q {
                return Err(Error::HypothesisViolated(format!(
                    "L = {l} must be Hermitian, non-identity and distinct from P and Q"
                )));
            }
            if !p.commutes(l) || q.commutes(l) {
                return Err(Error::HypothesisViolated(format!(
                    "need PL = LP and QL = -LQ for P = {p}, Q = {q}, L = {l}"
                )));
            }
            let iql = q.mul(l).times_i(1);
            Ok(r(p, l)?.mul(&rpq) == rpq.mul(&r(p, iql)?))
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub checked: usize,
    pub held: usize,
    /// Instances where a derived operand (such as `-PQ`) is not a valid `R` argument.
    pub skipped: usize,
}

/// Every valid pair, or triple for [`Relation::SharedPauli`]. Clifford
/// conjugation runs over the five generators for each pair.
pub fn sweep(rel: Relation) -> SweepReport {
    let paulis = Pauli2::hermitian_non_identity();
    let mut report = SweepReport::default();
    let mut record = |res: Result<bool>| match res {
        Ok(true) => {
            report.checked += 1;
            report.held += 1;
        }
        Ok(false) => report.checked += 1,
        Err(_) => report.skipped += 1,
    };
    let cliffords: Vec<GateWord> = [Token::CZ, Token::H1, Token::H2, Token::S1, Token::S2]
        .iter()
        .map(|&t| GateWord::new(vec![t]))
        .collect();
    for &p in &paulis {
        for &q in &paulis {
            if check_r_preconditions(p, q).is_err() {
                continue;
            }
            match rel {
                Relation::SharedPauli => {
                    for &l in &paulis {
                        if l != p && l != q && p.commutes(l) && !q.commutes(l) {
                            record(check_relation(rel, p, q, Some(l), None));
                        }
                    }
                }
                Relation::CliffordConjugation => {
                    for c in &cliffords {
                        record(check_relation(rel, p, q, None, Some(c)));
                    }
                }
                _ => record(check_relation(rel, p, q, None, None)),
            }
        }
    }
    report
}
