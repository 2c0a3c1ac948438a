//! Textual group specifications.
//!
//! Grammar (case- and whitespace-insensitive):
//!
//! ```text
//! spec := term ("x" term)*
//! term := ("C" | "D" | "Q" | "S" | "A") INT
//!       | "E" INT "_" INT
//! ```
//!
//! Semantics: `C n` cyclic of order `n`; `D n` dihedral of order `2n`;
//! `Q m` generalized quaternion of order `m` (`m ≥ 8`, `4 | m`); `S n`
//! symmetric; `A n` alternating; `E p_k` elementary abelian of order `p^k`
//! (`p` prime). Terms combine by direct product, left-associated.

use std::fmt;
use std::str::FromStr;

use crate::group::GroupTable;
use crate::{order_cap, Error};

/// One family constructor with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyTerm {
    Cyclic(usize),
    Dihedral(usize),
    GeneralizedQuaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, usize),
}

impl FamilyTerm {
    /// Order of the group this term denotes (saturating).
    pub fn order(&self) -> u128 {
        fn factorial(n: usize) -> u128 {
            (2..=n as u128)
                .try_fold(1u128, u128::checked_mul)
                .unwrap_or(u128::MAX)
        }
        match *self {
            FamilyTerm::Cyclic(n) => n as u128,
            FamilyTerm::Dihedral(n) => 2 * n as u128,
            FamilyTerm::GeneralizedQuaternion(m) => m as u128,
            FamilyTerm::Symmetric(n) => factorial(n),
            FamilyTerm::Alternating(n) => {
                let f = factorial(n);
                if n >= 2 {
                    f / 2
                } else {
                    f
                }
            }
            FamilyTerm::ElementaryAbelian(p, k) => {
                (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
            }
        }
    }

    pub fn build(&self) -> Result<GroupTable, Error> {
        match *self {
            FamilyTerm::Cyclic(n) => GroupTable::cyclic(n),
            FamilyTerm::Dihedral(n) => GroupTable::dihedral(n),
            FamilyTerm::GeneralizedQuaternion(m) => GroupTable::generalized_quaternion(m),
            FamilyTerm::Symmetric(n) => GroupTable::symmetric(n),
            FamilyTerm::Alternating(n) => GroupTable::alternating(n),
            FamilyTerm::ElementaryAbelian(p, k) => GroupTable::elementary_abelian(p, k),
        }
    }

    // parameter validation shared by the parser and the catalog builder
    fn validate(&self) -> Result<(), String> {
        match *self {
            FamilyTerm::Cyclic(0) => Err("cyclic order must be at least 1".into()),
            FamilyTerm::Dihedral(0) => Err("dihedral parameter must be at least 1".into()),
            FamilyTerm::GeneralizedQuaternion(m) if m < 8 || m % 4 != 0 => Err(format!(
                "generalized quaternion order must be a multiple of 4 and at least 8, got {m}"
            )),
            FamilyTerm::Symmetric(0) | FamilyTerm::Alternating(0) => {
                Err("degree must be at least 1".into())
            }
            FamilyTerm::ElementaryAbelian(p, _) if !crate::group::is_prime(p) => {
                Err(format!("elementary abelian base {p} is not prime"))
            }
            FamilyTerm::ElementaryAbelian(_, 0) => {
                Err("elementary abelian rank must be at least 1".into())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilyTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyTerm::Cyclic(n) => write!(f, "C{n}"),
            FamilyTerm::Dihedral(n) => write!(f, "D{n}"),
            FamilyTerm::GeneralizedQuaternion(m) => write!(f, "Q{m}"),
            FamilyTerm::Symmetric(n) => write!(f, "S{n}"),
            FamilyTerm::Alternating(n) => write!(f, "A{n}"),
            FamilyTerm::ElementaryAbelian(p, k) => write!(f, "E{p}_{k}"),
        }
    }
}

/// A parsed group specification: one or more family terms to be combined
/// by direct product, left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupSpec {
    pub terms: Vec<FamilyTerm>,
}

impl GroupSpec {
    /// Order of the denoted group (saturating).
    pub fn order(&self) -> u128 {
        self.terms
            .iter()
            .map(|t| t.order())
            .try_fold(1u128, u128::checked_mul)
            .unwrap_or(u128::MAX)
    }

    /// Canonical text: uppercase family letters, lowercase `x` separators,
    /// no whitespace. Re-parses to an equal `GroupSpec`.
    pub fn canonical_text(&self) -> String {
        self.terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Construct the denoted group.
    pub fn build(&self) -> Result<GroupTable, Error> {
        let mut iter = self.terms.iter();
        let first = iter.next().expect("specs have at least one term");
        let mut g = first.build()?;
        for t in iter {
            g = g.direct_product(&t.build()?)?;
        }
        Ok(g)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_spec(s)
    }
}

/// How a specification string failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid parameter in term {term}: {msg}")]
    Parameter { term: String, msg: String },
    #[error("specified group order {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: usize },
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {}
            _ => {
                return Err(ParseError::Syntax {
                    pos: self.pos,
                    msg: "expected an integer".to_string(),
                })
            }
        }
        let mut value: u128 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value.saturating_mul(10).saturating_add((b - b'0') as u128);
            self.pos += 1;
        }
        Ok(usize::try_from(value).unwrap_or(usize::MAX))
    }

    fn term(&mut self) -> Result<FamilyTerm, ParseError> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        let letter = self.bump().ok_or(ParseError::Syntax {
            pos,
            msg: "expected a family letter (C, D, Q, S, A or E)".to_string(),
        })?;
        let term = match letter.to_ascii_uppercase() {
            b'C' => FamilyTerm::Cyclic(self.integer()?),
            b'D' => FamilyTerm::Dihedral(self.integer()?),
            b'Q' => FamilyTerm::GeneralizedQuaternion(self.integer()?),
            b'S' => FamilyTerm::Symmetric(self.integer()?),
            b'A' => FamilyTerm::Alternating(self.integer()?),
            b'E' => {
                let p = self.integer()?;
                match self.bump() {
                    Some(b'_') => {}
                    _ => {
                        return Err(ParseError::Syntax {
                            pos: self.pos.saturating_sub(1),
                            msg: "expected '_' between prime and rank".to_string(),
                        })
                    }
                }
                FamilyTerm::ElementaryAbelian(p, self.integer()?)
            }
            other => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!(
                        "unknown family letter '{}'; expected C, D, Q, S, A or E",
                        other as char
                    ),
                })
            }
        };
        term.validate().map_err(|msg| ParseError::Parameter {
            term: term.to_string(),
            msg,
        })?;
        Ok(term)
    }
}

/// Parse a specification string. Parameters are validated and the denoted
/// order is checked against the configured cap.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut scanner = Scanner::new(text);
    let mut terms = vec![scanner.term()?];
    loop {
        match scanner.peek() {
            None => break,
            Some(b'x') | Some(b'X') => {
                scanner.bump();
                terms.push(scanner.term()?);
            }
            Some(other) => {
                return Err(ParseError::Syntax {
                    pos: scanner.pos,
                    msg: format!(
                        "unexpected '{}'; expected 'x' or end of input",
                        other as char
                    ),
                })
            }
        }
    }
    let spec = GroupSpec { terms };
    let requested = spec.order();
    let cap = order_cap();
    if requested > cap as u128 {
        return Err(ParseError::CapExceeded { requested, cap });
    }
    Ok(spec)
}
