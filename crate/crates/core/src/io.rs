//! Matrix JSON documents and plain-text circuit files.
//!
//! A matrix document looks like
//!
//! ```json
//! {"format_version": 1, "ring": "zomega", "sde": 1,
//!  "rows": [[["1","0","0","0"], ...], ...]}
//! ```
//!
//! where each entry `[a, b, c, d]` is `a + bω + cω² + dω³` and the whole matrix
//! is divided by `√2^sde`. Coordinates are written as decimal strings; plain
//! JSON integers are accepted on input.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::CycloElem;
use crate::so6::SO6Matrix;
use crate::su4::{GateWord, U4Matrix};

pub const FORMAT_VERSION: u32 = 1;
pub const RING: &str = "zomega";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Coord {
    Str(String),
    Int(i64),
    UInt(u64),
}

impl Coord {
    fn value(&self) -> Result<BigInt> {
        match self {
            Coord::Str(s) => s.trim().parse().map_err(|_| Error::Parse(format!("bad coordinate {s:?}"))),
            Coord::Int(n) => Ok(BigInt::from(*n)),
            Coord::UInt(n) => Ok(BigInt::from(*n)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct MatrixDoc {
    #[serde(default = "default_version")]
    format_version: u32,
    ring: String,
    sde: u32,
    rows: Vec<Vec<[Coord; 4]>>,
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

/// A parsed matrix document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixFile {
    U4(U4Matrix),
    SO6(SO6Matrix),
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: MatrixDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported format_version {}", doc.format_version)));
        }
        if doc.ring != RING {
            return Err(Error::Parse(format!("unsupported ring {:?}", doc.ring)));
        }
        let n = doc.rows.len();
        if !(n == 4 || n == 6) || doc.rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("rows must form a 4x4 or 6x6 array".into()));
        }
        let elems = doc
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        let [a, b, c, d] = e;
                        Ok(CycloElem::new(a.value()?, b.value()?, c.value()?, d.value()?))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if n == 4 {
            let entries = std::array::from_fn(|r| std::array::from_fn(|c| elems[r][c].clone()));
            return Ok(MatrixFile::U4(U4Matrix::new(entries, doc.sde)));
        }
        let mut entries: [[BigInt; 6]; 6] = Default::default();
        for (r, row) in elems.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                let [a, b, cc, d] = x.coords();
                if !(b.is_zero() && cc.is_zero() && d.is_zero()) {
                    return Err(Error::Parse("SO(6) entries must be integers".into()));
                }
                entries[r][c] = a.clone();
            }
        }
        Ok(MatrixFile::SO6(SO6Matrix::new(entries, doc.sde)?))
    }

    /// Parses a document that must hold a 4×4 operator.
    pub fn parse_u4(text: &str) -> Result<U4Matrix> {
        match Self::parse(text)? {
            MatrixFile::U4(u) => Ok(u),
            MatrixFile::SO6(_) => Err(Error::Parse("expected a 4x4 matrix".into())),
        }
    }

    pub fn to_json(&self) -> String {
        let (rows, sde): (Vec<Vec<[Coord; 4]>>, u32) = match self {
            MatrixFile::U4(u) => (
                u.entries()
                    .iter()
                    .map(|row| row.iter().map(|x| x.coords().map(|c| Coord::Str(c.to_string()))).collect())
                    .collect(),
                u.k(),
            ),
            MatrixFile::SO6(m) => (
                m.entries()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| [x.to_string(), "0".into(), "0".into(), "0".into()].map(Coord::Str))
                            .collect()
                    })
                    .collect(),
                m.k(),
            ),
        };
        let doc = MatrixDoc { format_version: FORMAT_VERSION, ring: RING.into(), sde, rows };
        serde_json::to_string(&doc).expect("serializable")
    }
}

/// Parses a circuit file: whitespace-separated tokens, `#` starts a comment line.
pub fn parse_circuit(text: &str) -> Result<GateWord> {
    let body: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.starts_with('#')).collect();
    body.join(" ").parse()
}

/// One token per line.
pub fn format_circuit(word: &GateWord) -> String {
    word.tokens.iter().map(|t| format!("{t}\n")).collect()
}
