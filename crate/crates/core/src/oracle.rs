//! Brute-force CS-count by breadth-first search over right-Clifford cosets,
//! using every `R(P, Q)` gate rather than the synthesis rule.

use std::collections::HashMap;
use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::pauli::Pauli2;
use crate::so6::su4_to_so6;
use crate::su4::{check_r_preconditions, r_gate_matrix, U4Matrix};

pub const ORACLE_MAX_DEPTH: u32 = 4;

/// Small integer SO(6) matrix `m / √2^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Small {
    m: [[i64; 6]; 6],
    k: u32,
}

impl Small {
    fn mul(&self, rhs: &Small) -> Small {
        let mut m = [[0i64; 6]; 6];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = (0..6).map(|l| self.m[r][l] * rhs.m[l][c]).sum();
            }
        }
        let mut k = self.k + rhs.k;
        while k >= 2 && m.iter().flatten().all(|x| x % 2 == 0) {
            m.iter_mut().flatten().for_each(|x| *x /= 2);
            k -= 2;
        }
        Small { m, k }
    }

    /// Invariant of the coset `V·𝒞`: columns up to sign, as a sorted multiset.
    fn coset_key(&self) -> Small {
        let mut cols: Vec<[i64; 6]> = (0..6)
            .map(|c| {
                let mut col: [i64; 6] = std::array::from_fn(|r| self.m[r][c]);
                if col.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    col.iter_mut().for_each(|x| *x = -*x);
                }
                col
            })
            .collect();
        cols.sort_unstable();
        let m = std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r]));
        Small { m, k: self.k }
    }
}

fn small(u: &U4Matrix) -> Result<Small> {
    let v = su4_to_so6(u)?;
    let m = v.to_i64().ok_or_else(|| Error::BadInput("entries too large for the oracle".into()))?;
    Ok(Small { m, k: v.k() })
}

/// Distinct non-Clifford `R(P, Q)` images over all valid Pauli pairs.
fn all_r_images() -> Vec<Small> {
    let paulis = Pauli2::hermitian_non_identity();
    let mut seen = std::collections::HashSet::new();
    for &p in &paulis {
        for &q in &paulis {
            if check_r_preconditions(p, q).is_ok() {
                let img = small(&r_gate_matrix(p, q).expect("valid pair")).expect("in group");
                if img.k > 0 {
                    seen.insert(img);
                }
            }
        }
    }
    let mut out: Vec<Small> = seen.into_iter().collect();
    out.sort_by_key(|s| s.m);
    out
}

struct Levels {
    depth_of: HashMap<Small, u32>,
    sizes: Vec<usize>,
}

static LEVELS: LazyLock<Levels> = LazyLock::new(|| {
    let gens = all_r_images();
    let id = Small { m: std::array::from_fn(|r| std::array::from_fn(|c| (r == c) as i64)), k: 0 };
    let mut depth_of = HashMap::from([(id.coset_key(), 0)]);
    let mut frontier = vec![id];
    let mut sizes = vec![1];
    for d in 1..=ORACLE_MAX_DEPTH {
        let mut next = Vec::new();
        for v in &frontier {
            for g in &gens {
                let w = g.mul(v);
                if let std::collections::hash_map::Entry::Vacant(slot) = depth_of.entry(w.coset_key()) {
                    slot.insert(d);
                    next.push(w);
                }
            }
        }
        sizes.push(next.len());
        frontier = next;
    }
    Levels { depth_of, sizes }
});

/// Number of right-Clifford cosets at each distance `0..=ORACLE_MAX_DEPTH`.
pub fn level_sizes() -> &'static [usize] {
    &LEVELS.sizes
}

/// The least number of `R(P, Q)` factors (hence CS gates) needed for `u`, or
/// `None` when it exceeds `max_depth`.
pub fn optimality_oracle(u: &U4Matrix, max_depth: u32) -> Result<Option<u32>> {
    if max_depth > ORACLE_MAX_DEPTH {
        return Err(Error::BadInput(format!("oracle depth is limited to {ORACLE_MAX_DEPTH}")));
    }
    let v = su4_to_so6(u)?;
    if v.k() > 2 * max_depth + 2 {
        return Ok(None);
    }
    let key = match v.to_i64() {
        Some(m) => Small { m, k: v.k() }.coset_key(),
        None => return Ok(None),
    };
    Ok(LEVELS.depth_of.get(&key).copied().filter(|&d| d <= max_depth))
}
