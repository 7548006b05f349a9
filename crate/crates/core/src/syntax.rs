//! Text syntax shared by the CLI, FFI and `FromStr` impls.
//!
//! Partitions are written `[4,2,1]` (empty: `[]`), simple indices as four
//! comma-separated partitions `[1],[],[],[1]`, and quadruples as `l,m,n,p`.
//! Errors carry the offending token and its character offset.

use crate::diagrams::Partition;
use crate::error::{Error, Result};

fn err(token: &str, position: usize, message: &str) -> Error {
    Error::Parse { token: token.to_string(), position, message: message.to_string() }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    offset: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, offset: usize) -> Self {
        Cursor { src, pos: 0, offset }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn at(&self) -> usize {
        self.offset + self.src[..self.pos].chars().count()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn next_token(&self) -> &'a str {
        let rest = self.rest();
        let end = rest
            .char_indices()
            .skip(1)
            .find(|(_, c)| !c.is_ascii_alphanumeric())
            .map_or(rest.len(), |(i, _)| i);
        if rest.is_empty() {
            "<end of input>"
        } else {
            &rest[..end]
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.bump();
            Ok(())
        } else {
            Err(err(self.next_token(), self.at(), &format!("expected `{want}`")))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let at = self.at();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        let digits = &self.src[start..self.pos];
        if digits.is_empty() {
            return Err(err(self.next_token(), at, "expected a non-negative integer"));
        }
        digits.parse().map_err(|_| err(digits, at, "integer out of range"))
    }

    fn partition(&mut self) -> Result<Partition> {
        self.expect('[')?;
        self.skip_ws();
        let start = self.at();
        let mut parts = Vec::new();
        if self.peek() != Some(']') {
            loop {
                let at = self.at();
                let part = self.number()?;
                if part == 0 {
                    return Err(err("0", at, "parts must be positive"));
                }
                parts.push(part);
                self.skip_ws();
                match self.peek() {
                    Some(',') => {
                        self.bump();
                    }
                    Some(']') => break,
                    _ => return Err(err(self.next_token(), self.at(), "expected `,` or `]`")),
                }
            }
        }
        self.expect(']')?;
        let text = format!("{parts:?}");
        Partition::new(parts).map_err(|_| err(&text, start, "parts must be weakly decreasing"))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.peek().is_some() {
            return Err(err(self.next_token(), self.at(), "unexpected trailing input"));
        }
        Ok(())
    }
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    let mut c = Cursor::new(s, 0);
    let p = c.partition()?;
    c.finish()?;
    Ok(p)
}

/// Parses a comma-separated list of exactly `count` partitions.
pub fn parse_partitions(s: &str, count: usize) -> Result<Vec<Partition>> {
    let mut c = Cursor::new(s, 0);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        if i > 0 {
            c.expect(',')?;
        }
        out.push(c.partition()?);
    }
    c.finish()?;
    Ok(out)
}

/// Parses `count` comma-separated non-negative integers.
pub fn parse_integers(s: &str, count: usize) -> Result<Vec<u32>> {
    let mut c = Cursor::new(s, 0);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        if i > 0 {
            c.expect(',')?;
        }
        out.push(c.number()?);
    }
    c.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert_eq!(parse_partition(" [4, 2,1] ").unwrap().parts(), &[4, 2, 1]);
        assert_eq!(parse_partitions("[1],[],[],[1]", 4).unwrap().len(), 4);
    }

    #[test]
    fn errors_name_token_and_position() {
        match parse_partition("[2,x]") {
            Err(Error::Parse { token, position, .. }) => {
                assert_eq!(token, "x");
                assert_eq!(position, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_integers("1,0,,1", 4) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_partition("[1,2]").is_err());
        assert!(parse_partition("[0]").is_err());
        assert!(parse_partitions("[1],[]", 4).is_err());
        assert!(parse_partition("[1] junk").is_err());
    }
}
