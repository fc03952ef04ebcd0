//! Exact, CS-count-optimal synthesis of two-qubit Clifford+CS operators.
//!
//! Operators are 4×4 matrices over `Z[ω][1/√2]`. They are mapped to 6×6
//! orthogonal matrices over `Z[1/√2]`, reduced one syllable at a time and
//! finished with a Clifford looked up in a signed-permutation table.

pub mod analysis;
pub mod automata;
pub mod error;
pub mod io;
pub mod oracle;
pub mod pauli;
pub mod random;
pub mod relations;
pub mod ring;
pub mod so6;
pub mod su4;
pub mod synthesis;

pub use analysis::{count_exact, count_upto, epsilon_lower_bound, BoundReport, CountReport};
pub use automata::{normal_form_automaton, Letter, Nfa, SymbolicWord};
pub use error::{Error, Result};
pub use io::MatrixFile;
pub use pauli::{Pauli1, Pauli2};
pub use ring::{CycloElem, DyadicScalar};
pub use so6::{su4_to_so6, Pattern, ResidueMatrix, SO6Matrix};
pub use su4::{GateWord, Token, U4Matrix};
pub use synthesis::{synthesize, NormalForm};
