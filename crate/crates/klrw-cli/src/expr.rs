//! Text syntax for algebra elements and chains.
//!
//! ```text
//! chain   := '[' sum ('|' sum)* ']' | sum
//! sum     := ['+' | '-'] product (('+' | '-') product)*
//! product := [rational '*'] factor ('.' factor)*  |  '0'
//! factor  := (atom | '(' sum ')') ('*' 's' '^' int)*
//! atom    := e(i) | p(i) | q(i) | s(i) | a(j,i)
//! ```
//!
//! `x.y` is the composite with `y` acting first, `a(j,i)` is the basis
//! morphism `T_i -> T_j` and `*s^k` adds `k` dots.

use klrw_core::{AlgebraElement, NormalMorphism, Q};
use num_traits::Zero;

use crate::error::{Location, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Ident(char),
    Int(u64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Bar,
    Dot,
    Star,
    Caret,
    Slash,
    Plus,
    Minus,
    End,
}

impl Tok {
    fn describe(self) -> String {
        match self {
            Tok::Ident(c) => format!("'{c}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::End => "end of input".into(),
            other => {
                let c = match other {
                    Tok::LParen => '(',
                    Tok::RParen => ')',
                    Tok::LBracket => '[',
                    Tok::RBracket => ']',
                    Tok::Comma => ',',
                    Tok::Bar => '|',
                    Tok::Dot => '.',
                    Tok::Star => '*',
                    Tok::Caret => '^',
                    Tok::Slash => '/',
                    Tok::Plus => '+',
                    _ => '-',
                };
                format!("'{c}'")
            }
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some((at, c)) = it.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = at + 1;
                while let Some(&(k, d)) = it.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = k + 1;
                    it.next();
                }
                let n = text[at..end].parse().map_err(|_| ParseError::Syntax {
                    at: Location::of(text, at),
                    message: "integer too large".into(),
                })?;
                Tok::Int(n)
            }
            'e' | 'p' | 'q' | 's' | 'a' => Tok::Ident(c),
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '|' => Tok::Bar,
            '.' => Tok::Dot,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            other => {
                return Err(ParseError::Syntax {
                    at: Location::of(text, at),
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((tok, at));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        Ok(Self {
            text,
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> Tok {
        self.toks[self.pos].0
    }

    fn peek2(&self) -> Tok {
        self.toks.get(self.pos + 1).map_or(Tok::End, |t| t.0)
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            at: Location::of(self.text, self.offset()),
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), ParseError> {
        if self.peek() != tok {
            return self.unexpected(wanted);
        }
        self.bump();
        Ok(())
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let at = self.offset();
        let n = self.int()?;
        usize::try_from(n)
            .ok()
            .filter(|n| *n <= 1 << 20)
            .ok_or(ParseError::Syntax {
                at: Location::of(self.text, at),
                message: "index too large".into(),
            })
    }

    fn chain(&mut self) -> Result<Vec<AlgebraElement>, ParseError> {
        let out = if self.peek() == Tok::LBracket {
            self.bump();
            if self.peek() == Tok::RBracket {
                self.bump();
                return self.finish(Vec::new());
            }
            let mut entries = vec![self.sum()?];
            while self.peek() == Tok::Bar {
                self.bump();
                entries.push(self.sum()?);
            }
            self.expect(Tok::RBracket, "'|' or ']'")?;
            entries
        } else {
            vec![self.sum()?]
        };
        self.finish(out)
    }

    fn finish<T>(&self, out: T) -> Result<T, ParseError> {
        if self.peek() != Tok::End {
            return self.unexpected("end of input");
        }
        Ok(out)
    }

    fn sum(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut out = AlgebraElement::zero();
        let mut negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let term = self.product()?;
            if negate {
                out -= &term;
            } else {
                out += &term;
            }
            negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(out),
            };
            self.bump();
        }
    }

    fn rational(&mut self) -> Result<Q, ParseError> {
        let at = self.offset();
        let too_large = || ParseError::Syntax {
            at: Location::of(self.text, at),
            message: "scalar too large".into(),
        };
        let num = i64::try_from(self.int()?).map_err(|_| too_large())?;
        if self.peek() != Tok::Slash {
            return Ok(Q::from_integer(num));
        }
        self.bump();
        let den = i64::try_from(self.int()?).map_err(|_| too_large())?;
        if den == 0 {
            return Err(ParseError::Syntax {
                at: Location::of(self.text, at),
                message: "zero denominator".into(),
            });
        }
        Ok(Q::new(num, den))
    }

    fn product(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut scalar = None;
        if let Tok::Int(_) = self.peek() {
            let c = self.rational()?;
            if self.peek() != Tok::Star {
                if c.is_zero() {
                    return Ok(AlgebraElement::zero());
                }
                return self.unexpected("'*' after a scalar");
            }
            self.bump();
            scalar = Some(c);
        }
        let mut out = self.factor()?;
        while self.peek() == Tok::Dot {
            let at = self.offset();
            self.bump();
            let rhs = self.factor()?;
            out = self.compose(&out, &rhs, at)?;
        }
        Ok(match scalar {
            Some(c) => out.scale(c),
            None => out,
        })
    }

    fn compose(&self, lhs: &AlgebraElement, rhs: &AlgebraElement, at: usize) -> Result<AlgebraElement, ParseError> {
        let ends = |x: &AlgebraElement| {
            x.hom_space().map_err(|_| ParseError::Syntax {
                at: Location::of(self.text, at),
                message: format!("'{x}' mixes endpoints and cannot be composed"),
            })
        };
        if let (Some((ls, _)), Some((_, rt))) = (ends(lhs)?, ends(rhs)?) {
            if ls != rt {
                return Err(ParseError::Endpoints {
                    at: Location::of(self.text, at),
                    left: lhs.to_string(),
                    right: rhs.to_string(),
                });
            }
        }
        Ok(lhs.mul(rhs))
    }

    fn factor(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut out = if self.peek() == Tok::LParen {
            self.bump();
            let inner = self.sum()?;
            self.expect(Tok::RParen, "')'")?;
            inner
        } else {
            AlgebraElement::basis(self.atom()?)
        };
        while self.peek() == Tok::Star && self.peek2() == Tok::Ident('s') {
            self.bump();
            self.bump();
            self.expect(Tok::Caret, "'^'")?;
            let k = self.index()?;
            out = out.with_extra_dots(k);
        }
        if self.peek() == Tok::Star {
            self.bump();
            return self.unexpected("'s^k' after '*'");
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<NormalMorphism, ParseError> {
        let Tok::Ident(name) = self.peek() else {
            return self.unexpected("a generator e, p, q, s or a");
        };
        let at = self.offset();
        self.bump();
        self.expect(Tok::LParen, "'('")?;
        let first = self.index()?;
        let m = match name {
            'a' => {
                self.expect(Tok::Comma, "','")?;
                let source = self.index()?;
                NormalMorphism::new(first, source, 0)
            }
            'e' => NormalMorphism::idempotent(first),
            'p' if first == 0 => {
                return Err(ParseError::Syntax {
                    at: Location::of(self.text, at),
                    message: "p(i) needs i >= 1".into(),
                })
            }
            'p' => NormalMorphism::p(first),
            'q' => NormalMorphism::q(first),
            _ => NormalMorphism::s(first),
        };
        self.expect(Tok::RParen, "')'")?;
        Ok(m)
    }
}

/// Parses a single expression or a bracketed chain `[x_n | ... | x_1]` and
/// reduces every entry to normal form.
pub fn parse_expr(text: &str) -> Result<Vec<AlgebraElement>, ParseError> {
    Parser::new(text)?.chain()
}

/// Parses exactly one expression (no brackets).
pub fn parse_element(text: &str) -> Result<AlgebraElement, ParseError> {
    let mut p = Parser::new(text)?;
    if p.peek() == Tok::LBracket {
        return p.unexpected("an expression");
    }
    let x = p.sum()?;
    if p.peek() != Tok::End {
        return p.unexpected("end of input");
    }
    Ok(x)
}

/// Parses a chain whose entries are single basis morphisms with coefficient
/// one, as used for bar elements and natural transformation inputs.
pub fn parse_basis_chain(text: &str) -> Result<Vec<NormalMorphism>, ParseError> {
    let entries = parse_expr(text)?;
    entries
        .iter()
        .map(|x| {
            let mut terms = x.terms();
            match (terms.next(), terms.next()) {
                (Some((m, c)), None) if *c == Q::from_integer(1) => Ok(*m),
                _ => Err(ParseError::Syntax {
                    at: Location::of(text, 0),
                    message: format!("chain entry '{x}' is not a single basis morphism"),
                }),
            }
        })
        .collect()
}

/// Canonical text of a chain; [`parse_expr`] inverts it.
pub fn print_chain(chain: &[AlgebraElement]) -> String {
    match chain {
        [x] => x.to_string(),
        _ => {
            let parts: Vec<String> = chain.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(" | "))
        }
    }
}

/// Canonical text of a chain of basis morphisms.
pub fn print_basis_chain(chain: &[NormalMorphism]) -> String {
    let parts: Vec<String> = chain.iter().map(|m| m.to_string()).collect();
    format!("[{}]", parts.join(" | "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use klrw_core::{q, qf};

    fn one(text: &str) -> AlgebraElement {
        parse_element(text).unwrap()
    }

    #[test]
    fn reduces_compositions() {
        assert_eq!(one("q(1).p(2)"), AlgebraElement::basis(NormalMorphism::s(1)));
        assert_eq!(one("e(3)"), AlgebraElement::idempotent(3));
        assert_eq!(one("a(2,4)*s^1"), AlgebraElement::basis(NormalMorphism::new(2, 4, 1)));
        assert_eq!(one("p(2).q(1)"), AlgebraElement::basis(NormalMorphism::s(2)));
        assert_eq!(
            one("s(1).s(1)*s^2"),
            AlgebraElement::basis(NormalMorphism::new(1, 1, 4))
        );
    }

    #[test]
    fn scalars_and_sums() {
        let x = one("1/2*a(1,0) - 3*(e(2) + s(2)) + e(2)");
        let mut y = AlgebraElement::term(NormalMorphism::new(1, 0, 0), qf(1, 2));
        y.add_term(NormalMorphism::idempotent(2), q(-2));
        y.add_term(NormalMorphism::s(2), q(-3));
        assert_eq!(x, y);
        assert!(one("0").is_zero());
        assert!(one("e(1) - e(1)").is_zero());
    }

    #[test]
    fn chains() {
        let c = parse_basis_chain("[a(3,0)*s^1 | a(0,4) | a(4,1)*s^2 | a(1,4)*s^1]").unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[2], NormalMorphism::new(4, 1, 2));
        assert_eq!(print_basis_chain(&c), "[a(3,0)*s^1 | a(0,4) | a(4,1)*s^2 | a(1,4)*s^1]");
        assert!(parse_basis_chain("[2*a(1,0)]").is_err());
    }

    #[test]
    fn located_errors() {
        let e = parse_element("q(1).p(3)").unwrap_err();
        assert!(matches!(e, ParseError::Endpoints { .. }));
        assert_eq!(e.location(), Location { line: 1, column: 5 });
        let e = parse_element("e(1) +\n  x(2)").unwrap_err();
        assert_eq!(e.location(), Location { line: 2, column: 3 });
        for bad in [
            "",
            "e(",
            "a(1)",
            "p(0)",
            "e(1)*t",
            "2 e(1)",
            "[e(1) | e(2)",
            "e(1))",
            "1/0*e(1)",
            "e(1)*s^",
        ] {
            assert!(parse_expr(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn round_trip_canonical_forms() {
        for text in ["a(1,0)*s^1 - 1/2*e(2)", "0", "-a(0,3)", "[e(1) | a(2,1)*s^3]"] {
            let x = parse_expr(text).unwrap();
            assert_eq!(print_chain(&x), text);
        }
    }
}
