//! Certificate trees as s-expressions.
//!
//! Leaves and conjugators are braid words in brackets, `[B3: 1 1]`; inner
//! nodes are `(comm x y)`, `(prod x ...)`, `(inv x)` and `(conj x [g])`,
//! the last standing for `g^{-1} x g`.

use super::CommutatorExpr;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub(super) fn write(e: &CommutatorExpr) -> String {
    let mut out = String::new();
    emit(e, &mut out);
    out
}

fn emit(e: &CommutatorExpr, out: &mut String) {
    match e {
        CommutatorExpr::Leaf(w) => {
            out.push('[');
            out.push_str(&w.to_string());
            out.push(']');
        }
        CommutatorExpr::Commutator(x, y) => {
            out.push_str("(comm ");
            emit(x, out);
            out.push(' ');
            emit(y, out);
            out.push(')');
        }
        CommutatorExpr::Product(xs) => {
            out.push_str("(prod");
            for x in xs {
                out.push(' ');
                emit(x, out);
            }
            out.push(')');
        }
        CommutatorExpr::Inverse(x) => {
            out.push_str("(inv ");
            emit(x, out);
            out.push(')');
        }
        CommutatorExpr::Conjugate(x, g) => {
            out.push_str("(conj ");
            emit(x, out);
            out.push_str(" [");
            out.push_str(&g.to_string());
            out.push_str("])");
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c)))
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("certificate: {} at offset {}", msg, self.pos))
    }

    fn word(&mut self) -> Result<BraidWord> {
        self.expect('[')?;
        let end = self.src[self.pos..]
            .find(']')
            .ok_or_else(|| self.error("unterminated word"))?;
        let w = self.src[self.pos..self.pos + end].parse()?;
        self.pos += end + 1;
        Ok(w)
    }

    fn expr(&mut self) -> Result<CommutatorExpr> {
        match self.peek() {
            Some('[') => Ok(CommutatorExpr::Leaf(self.word()?)),
            Some('(') => {
                self.pos += 1;
                self.skip_ws();
                let len = self.src[self.pos..]
                    .find(|c: char| c.is_whitespace() || c == '(' || c == '[' || c == ')')
                    .unwrap_or(self.src.len() - self.pos);
                let head = &self.src[self.pos..self.pos + len];
                self.pos += len;
                let e = match head {
                    "comm" => {
                        let x = self.expr()?;
                        let y = self.expr()?;
                        CommutatorExpr::commutator(x, y)
                    }
                    "prod" => {
                        let mut xs = Vec::new();
                        while self.peek() != Some(')') {
                            xs.push(self.expr()?);
                        }
                        CommutatorExpr::Product(xs)
                    }
                    "inv" => CommutatorExpr::inverse(self.expr()?),
                    "conj" => {
                        let x = self.expr()?;
                        let g = self.word()?;
                        CommutatorExpr::conjugate(x, g)
                    }
                    other => return Err(self.error(&format!("unknown node `{}`", other))),
                };
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(self.error("expected `[` or `(`")),
        }
    }
}

pub(super) fn parse(s: &str) -> Result<CommutatorExpr> {
    let mut p = Parser { src: s, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested() {
        let s = "(comm [B3: 1 1] (conj (inv [B3: 2 2]) [B3: -1]))";
        let e = parse(s).unwrap();
        assert_eq!(write(&e), s);
        assert_eq!(e.lcs_level(), 2);
    }

    #[test]
    fn empty_product_and_errors() {
        assert_eq!(write(&parse("(prod)").unwrap()), "(prod)");
        assert!(parse("(comm [B3: 1 1])").is_err());
        assert!(parse("(frob [B3:])").is_err());
        assert!(parse("[B3: 1] x").is_err());
    }
}
