//! Recursive-descent parser for the manifold expression DSL and the abelian
//! group literals used on the command line.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := term ('#' term)*
//! term    := [INT '*'] primary
//! primary := atom | '(' expr ')'
//! atom    := S(n) | SxS(p,q) | TwS(q) | CP(n) | HP(n) | W | M(k) | X(i)
//!          | Surf(g) | Sig0(expr) | Sig1(expr)
//! ```
//!
//! Group literals: `0`, or `+`-separated parts `Z`, `Z^r`, `Z/d`.

use crate::error::{Error, ParseError, Result};
use crate::manifold::{Atom, Field, ManifoldExpr};
use crate::suspension::FramingIndex;
use crate::{FgAb, Int};

const MAX_MULTIPLICITY: u64 = 1_000_000;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn found_here(&self) -> String {
        match self.src.get(self.pos) {
            Some(_) => {
                let rest = &self.src[self.pos..];
                let len = rest.len().min(12);
                format!("{:?}", String::from_utf8_lossy(&rest[..len]))
            }
            None => "end of input".to_string(),
        }
    }

    fn error(&self, expected: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, expected, self.found_here())
    }

    fn expect(&mut self, byte: u8) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("'{}'", byte as char)))
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> std::result::Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| ParseError::new(start, "an integer within range", "overflowing literal"))
    }

    fn ident(&mut self) -> std::result::Result<(usize, String), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("an atom name"));
        }
        Ok((
            start,
            String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(),
        ))
    }
}

fn to_u32(v: u64, at: usize) -> std::result::Result<u32, ParseError> {
    u32::try_from(v).map_err(|_| ParseError::new(at, "a parameter within range", "overflow"))
}

struct ExprParser<'a> {
    cur: Cursor<'a>,
}

impl<'a> ExprParser<'a> {
    fn expr(&mut self) -> std::result::Result<ManifoldExpr, ParseError> {
        let mut acc = self.term()?;
        while self.cur.eat(b'#') {
            self.cur.skip_ws();
            let at = self.cur.pos;
            let rhs = self.term()?;
            if rhs.dim() != acc.dim() {
                return Err(ParseError::new(
                    at,
                    format!("a summand of dimension {}", acc.dim()),
                    format!("dimension mismatch {} vs {}", rhs.dim(), acc.dim()),
                ));
            }
            acc = acc.connected_sum(&rhs).expect("dimensions checked");
        }
        Ok(acc)
    }

    fn term(&mut self) -> std::result::Result<ManifoldExpr, ParseError> {
        if self.cur.peek().is_some_and(|b| b.is_ascii_digit()) {
            let at = self.cur.pos;
            let count = self.cur.integer()?;
            if count == 0 || count > MAX_MULTIPLICITY {
                return Err(ParseError::new(
                    at,
                    format!("a multiplicity in 1..={MAX_MULTIPLICITY}"),
                    count.to_string(),
                ));
            }
            self.cur.expect(b'*')?;
            let base = self.primary()?;
            let mut acc = base.clone();
            for _ in 1..count {
                acc = acc.connected_sum(&base).expect("equal dimensions");
            }
            return Ok(acc);
        }
        self.primary()
    }

    fn primary(&mut self) -> std::result::Result<ManifoldExpr, ParseError> {
        if self.cur.eat(b'(') {
            let inner = self.expr()?;
            self.cur.expect(b')')?;
            return Ok(inner);
        }
        self.atom()
    }

    fn atom(&mut self) -> std::result::Result<ManifoldExpr, ParseError> {
        let (at, name) = self.cur.ident()?;
        let atom = match name.as_str() {
            "S" => Atom::Sphere(self.one_param(at)?),
            "SxS" => {
                self.cur.expect(b'(')?;
                let p = to_u32(self.cur.integer()?, at)?;
                self.cur.expect(b',')?;
                let q = to_u32(self.cur.integer()?, at)?;
                self.cur.expect(b')')?;
                Atom::SphereProduct(p, q)
            }
            "TwS" => Atom::TwistedProduct(self.one_param(at)?),
            "CP" => Atom::Projective(Field::Complex, self.one_param(at)?),
            "HP" => Atom::Projective(Field::Quaternion, self.one_param(at)?),
            "W" => Atom::Wu,
            "M" => {
                self.cur.expect(b'(')?;
                let k = self.cur.integer()?;
                self.cur.expect(b')')?;
                Atom::M(Int::from(k as i64))
            }
            "X" => Atom::X(self.one_param(at)?),
            "Surf" => Atom::Surface(self.one_param(at)?),
            "Sig0" | "Sig1" => {
                let index = if name == "Sig0" {
                    FramingIndex::Zero
                } else {
                    FramingIndex::One
                };
                self.cur.expect(b'(')?;
                let inner = self.expr()?;
                self.cur.expect(b')')?;
                Atom::Suspension(index, inner)
            }
            other => {
                return Err(ParseError::new(
                    at,
                    "an atom name (S, SxS, TwS, CP, HP, W, M, X, Surf, Sig0, Sig1)",
                    format!("{other:?}"),
                ))
            }
        };
        atom.validate().map_err(|e| {
            ParseError::new(at, "valid atom parameters", e.to_string())
        })?;
        Ok(ManifoldExpr::single(atom))
    }

    fn one_param(&mut self, at: usize) -> std::result::Result<u32, ParseError> {
        self.cur.expect(b'(')?;
        let v = to_u32(self.cur.integer()?, at)?;
        self.cur.expect(b')')?;
        Ok(v)
    }
}

/// Parse a manifold expression; errors report byte offsets.
pub fn parse_expr(src: &str) -> Result<ManifoldExpr> {
    let mut p = ExprParser {
        cur: Cursor::new(src),
    };
    let expr = p.expr()?;
    if !p.cur.at_end() {
        return Err(Error::Parse(p.cur.error("'#' or end of input")));
    }
    Ok(expr)
}

/// Parse a finitely generated abelian group literal: `0`, or parts `Z`,
/// `Z^r`, `Z/d` joined by `+`.
pub fn parse_group(src: &str) -> Result<FgAb> {
    let mut cur = Cursor::new(src);
    if cur.peek() == Some(b'0') {
        cur.pos += 1;
        if !cur.at_end() {
            return Err(Error::Parse(cur.error("end of input after '0'")));
        }
        return Ok(FgAb::zero());
    }
    let mut rank: usize = 0;
    let mut torsion: Vec<Int> = Vec::new();
    loop {
        cur.skip_ws();
        if cur.peek() != Some(b'Z') {
            return Err(Error::Parse(cur.error("'Z', 'Z^r' or 'Z/d'")));
        }
        cur.pos += 1;
        match cur.peek() {
            Some(b'^') => {
                cur.pos += 1;
                let at = cur.pos;
                let r = cur.integer()?;
                rank += usize::try_from(r)
                    .map_err(|_| ParseError::new(at, "a rank within range", "overflow"))?;
            }
            Some(b'/') => {
                cur.pos += 1;
                let at = cur.pos;
                let d = cur.integer()?;
                if d < 2 {
                    return Err(Error::Parse(ParseError::new(
                        at,
                        "a torsion order >= 2",
                        d.to_string(),
                    )));
                }
                torsion.push(Int::from(d as i64));
            }
            _ => rank += 1,
        }
        if cur.at_end() {
            break;
        }
        cur.expect(b'+')?;
    }
    Ok(FgAb::new(rank, torsion))
}
