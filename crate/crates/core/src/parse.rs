//! Group-spec parser.
//!
//! ```text
//! group := "1" | term (" x " term)*
//! term  := atom ("^" INT)?
//! atom  := ("SU"|"Sp"|"SO") "(" INT ")" | "G2" | "F4" | "E6" | "E7" | "E8" | "T" ("^" INT)?
//! ```
//!
//! Family names are case-insensitive. `×` is accepted as a separator too.

use crate::error::{Error, Result};
use crate::group::{canonicalize, Family, GroupType, RawGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u32),
    LParen,
    RParen,
    Caret,
    Times,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1;
            }
            '^' => {
                out.push((pos, Tok::Caret));
                i += 1;
            }
            '×' | '*' => {
                out.push((pos, Tok::Times));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                let n = digits.parse::<u32>().map_err(|_| Error::Syntax {
                    pos,
                    msg: format!("integer `{digits}` out of range"),
                })?;
                out.push((pos, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().map(|(_, c)| c).collect();
                if word.eq_ignore_ascii_case("x") {
                    out.push((pos, Tok::Times));
                } else {
                    out.push((pos, Tok::Ident(word.to_ascii_uppercase())));
                }
            }
            other => {
                return Err(Error::Syntax { pos, msg: format!("unexpected character `{other}`") })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn expect_int(&mut self) -> Result<u32> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.idx += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.idx += 1;
        let k = self.expect_int()?;
        if k == 0 {
            return self.err("exponent must be positive");
        }
        Ok(k)
    }

    fn atom(&mut self) -> Result<GroupType> {
        let start = self.pos();
        let word = match self.next() {
            Some(Tok::Ident(w)) => w,
            _ => {
                self.idx -= 1;
                return self.err("expected a group name");
            }
        };
        let raw = match word.as_str() {
            "SU" | "SP" | "SO" => {
                if self.next() != Some(Tok::LParen) {
                    self.idx -= 1;
                    return self.err("expected `(`");
                }
                let n = self.expect_int()?;
                if self.next() != Some(Tok::RParen) {
                    self.idx -= 1;
                    return self.err("expected `)`");
                }
                match word.as_str() {
                    "SU" => RawGroup::SU(n),
                    "SP" => RawGroup::Sp(n),
                    _ => RawGroup::SO(n),
                }
            }
            "G2" => RawGroup::Exceptional(Family::G2),
            "F4" => RawGroup::Exceptional(Family::F4),
            "E6" => RawGroup::Exceptional(Family::E6),
            "E7" => RawGroup::Exceptional(Family::E7),
            "E8" => RawGroup::Exceptional(Family::E8),
            "T" => RawGroup::Torus(self.exponent()?),
            other => {
                return Err(Error::Syntax { pos: start, msg: format!("unknown group `{other}`") })
            }
        };
        canonicalize(raw)
    }

    fn term(&mut self) -> Result<GroupType> {
        let atom = self.atom()?;
        let k = self.exponent()?;
        Ok((1..k).fold(atom.clone(), |acc, _| acc.product(&atom)))
    }
}

/// Parse a group spec such as `"SU(5) x Sp(6)"` or `"SO(4)^2 x T^3"` into its
/// canonical type.
pub fn parse_group(text: &str) -> Result<GroupType> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, idx: 0, end: text.len() };
    if p.peek().is_none() {
        return p.err("empty group spec");
    }
    if p.peek() == Some(&Tok::Int(1)) && p.toks.len() == 1 {
        return Ok(GroupType::trivial());
    }
    let mut g = p.term()?;
    while p.peek().is_some() {
        if p.next() != Some(Tok::Times) {
            p.idx -= 1;
            return p.err("expected ` x `");
        }
        g = g.product(&p.term()?);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SimpleType;

    #[test]
    fn parses_examples() {
        let g = parse_group("SU(5) x Sp(6)").unwrap();
        assert_eq!(g, GroupType::new(0, [SimpleType::su(5).unwrap(), SimpleType::sp(6).unwrap()]));

        let g = parse_group("SO(4)^2 x T^3").unwrap();
        assert_eq!(g, GroupType::new(3, [SimpleType::su(2).unwrap(); 4]));

        assert!(parse_group("1").unwrap().is_trivial());
    }

    #[test]
    fn case_insensitive_and_torus() {
        assert_eq!(parse_group("e8").unwrap(), GroupType::simple(SimpleType::E8));
        assert_eq!(parse_group("sp(4) x t").unwrap(), parse_group("Sp(4) x T^1").unwrap());
        assert_eq!(parse_group("T^2^3").unwrap(), GroupType::torus(6));
        assert_eq!(parse_group("SU(3)×G2").unwrap().factors().len(), 2);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_group("SU(5) x Foo") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("{other:?}"),
        }
        match parse_group("SU(5") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_group(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group("SU(2) SU(3)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group("SU(2)^0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn malformed_types_propagate() {
        assert!(matches!(parse_group("Sp(5)"), Err(Error::MalformedType(_))));
        assert!(matches!(parse_group("SO(0)"), Err(Error::MalformedType(_))));
    }
}
