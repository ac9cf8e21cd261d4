//! Recursive-descent parser for the ASCII game notation.

use adorned::adorn::Adorn;
use adorned::compare;
use adorned::games::{GameId, GameStore, Side};

/// A syntax error with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

/// Parses a game expression and interns it.
pub fn parse_game(text: &str, store: &mut GameStore) -> Result<GameId, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let g = p.game(store)?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(g)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.pos), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.bytes[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.eat(token) {
            Ok(())
        } else {
            self.fail(&format!("expected '{token}'"))
        }
    }

    fn game(&mut self, store: &mut GameStore) -> Result<GameId, ParseError> {
        self.skip_ws();
        if self.eat("<") {
            let left = self.side(store)?;
            self.expect("|")?;
            let right = self.side(store)?;
            self.expect(">")?;
            return store.intern(left, right).map_err(|e| ParseError {
                pos: self.pos,
                message: e.to_string(),
            });
        }
        if self.eat("star") {
            return Ok(store.star());
        }
        if self.eat("s(") {
            let a = self.adorn()?;
            self.expect(")")?;
            return Ok(store.score(a));
        }
        if self.eat("int(") {
            let n = self.integer()?;
            self.expect(")")?;
            return Ok(compare::int_game(store, n));
        }
        self.fail("expected '<', 's(adorn)', 'star', or 'int(n)'")
    }

    fn side(&mut self, store: &mut GameStore) -> Result<Side, ParseError> {
        self.skip_ws();
        if self.eat("e^") {
            return Ok(Side::Atom(self.adorn()?));
        }
        let mut options = vec![self.game(store)?];
        loop {
            self.skip_ws();
            if self.eat(",") {
                options.push(self.game(store)?);
            } else {
                return Ok(Side::Options(options));
            }
        }
    }

    fn adorn(&mut self) -> Result<Adorn, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.digits()?;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii slice");
        text.parse::<Adorn>().map_err(|message| ParseError {
            pos: start,
            message,
        })
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        self.digits()?;
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii slice");
        text.parse::<i64>().map_err(|_| ParseError {
            pos: start,
            message: format!("integer '{text}' out of range"),
        })
    }

    fn digits(&mut self) -> Result<(), ParseError> {
        if !matches!(self.peek(), Some(b'0'..=b'9')) {
            return self.fail("expected a digit");
        }
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        Ok(())
    }
}
