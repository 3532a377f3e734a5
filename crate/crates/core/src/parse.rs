//! Element expressions.
//!
//! ```text
//! expr  := term (('*' | whitespace) term)*
//! term  := 'e' | 's' N | 't[' int (',' int)* ']' | 'pi' ('_' N)? ('^' int)?
//!        | 'star(' expr ',' expr ')' | '(' expr ')'
//! ```
//!
//! `t[c1,...,cn]` is a translation in fundamental-coweight coordinates and
//! `pi_j` the length-zero element in the class of `ω_j^∨`; bare `pi` uses the
//! smallest such `j`.

use crate::affine_weyl::{AffineElt, AffineWeylGroup};
use crate::demazure;
use crate::error::{Error, Result};
use crate::finite_weyl::{WeylElt, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Identity,
    Simple { index: usize, pos: usize },
    Transl { coords: Vec<i64>, pos: usize },
    Pi { node: Option<usize>, power: i64, pos: usize },
    Star(Box<Node>, Box<Node>),
    Product(Vec<Node>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            err(self.pos, format!("expected '{}'", c as char))
        }
    }

    fn starts_with(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .or_else(|_| err(start, "number too large"))
    }

    fn signed(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let n = self.number()?;
        let n = i64::try_from(n).or_else(|_| err(start, "number too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn expr(&mut self) -> Result<Node> {
        let mut terms = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') | Some(b',') => break,
                Some(b'*') if !terms.is_empty() => {
                    self.pos += 1;
                    self.skip_ws();
                    if matches!(self.peek(), None | Some(b')') | Some(b',')) {
                        return err(self.pos, "expected a term after '*'");
                    }
                }
                _ => {}
            }
            terms.push(self.term()?);
        }
        if terms.is_empty() {
            return err(self.pos, "expected an element");
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Node::Product(terms)
        })
    }

    fn term(&mut self) -> Result<Node> {
        let start = self.pos;
        if self.starts_with("star") {
            self.pos += 4;
            self.expect(b'(')?;
            let a = self.expr()?;
            self.expect(b',')?;
            let b = self.expr()?;
            self.expect(b')')?;
            return Ok(Node::Star(Box::new(a), Box::new(b)));
        }
        if self.starts_with("pi") {
            self.pos += 2;
            let node = if self.eat(b'_') {
                Some(self.number()? as usize)
            } else {
                None
            };
            let power = if self.eat(b'^') { self.signed()? } else { 1 };
            return Ok(Node::Pi {
                node,
                power,
                pos: start,
            });
        }
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'e') => {
                self.pos += 1;
                Ok(Node::Identity)
            }
            Some(b's') => {
                self.pos += 1;
                let index = self.number()? as usize;
                Ok(Node::Simple { index, pos: start })
            }
            Some(b't') => {
                self.pos += 1;
                self.expect(b'[')?;
                let mut coords = vec![self.signed()?];
                loop {
                    self.skip_ws();
                    if self.eat(b']') {
                        break;
                    }
                    self.expect(b',')?;
                    coords.push(self.signed()?);
                }
                Ok(Node::Transl { coords, pos: start })
            }
            Some(c) => err(start, format!("unexpected character '{}'", c as char)),
            None => err(start, "unexpected end of input"),
        }
    }
}

fn parse_tree(text: &str) -> Result<Node> {
    let mut p = Parser::new(text);
    let node = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return err(p.pos, format!("unexpected '{}'", p.src[p.pos] as char));
    }
    Ok(node)
}

pub fn parse_affine(g: &AffineWeylGroup, text: &str) -> Result<AffineElt> {
    eval_affine(g, &parse_tree(text)?)
}

pub fn parse_finite(w: &WeylGroup, text: &str) -> Result<WeylElt> {
    eval_finite(w, &parse_tree(text)?)
}

fn eval_affine(g: &AffineWeylGroup, node: &Node) -> Result<AffineElt> {
    let n = g.rank();
    match node {
        Node::Identity => Ok(g.identity()),
        Node::Simple { index, pos } => {
            if *index > n {
                return err(*pos, format!("s{index} is out of range for rank {n}"));
            }
            Ok(g.s(*index).clone())
        }
        Node::Transl { coords, .. } => {
            if coords.len() != n {
                return Err(Error::WrongRank {
                    expected: n,
                    got: coords.len(),
                });
            }
            Ok(g.translation(&crate::root_system::Coweight(coords.clone())))
        }
        Node::Pi { node, power, pos } => {
            let j = match node {
                Some(j) => *j,
                None => match g.default_omega_node() {
                    Some(j) => j,
                    None => return err(*pos, "this type has no nontrivial length-zero element"),
                },
            };
            if j == 0 || j > n {
                return err(*pos, format!("pi_{j} is out of range for rank {n}"));
            }
            let tau = g.omega_for_node(j)?;
            Ok(g.pow(tau, *power))
        }
        Node::Star(a, b) => Ok(demazure::star(g, &eval_affine(g, a)?, &eval_affine(g, b)?)),
        Node::Product(terms) => terms.iter().try_fold(g.identity(), |acc, t| {
            Ok(g.mul(&acc, &eval_affine(g, t)?))
        }),
    }
}

fn eval_finite(w: &WeylGroup, node: &Node) -> Result<WeylElt> {
    let n = w.rank();
    match node {
        Node::Identity => Ok(w.identity()),
        Node::Simple { index, pos } => {
            if *index == 0 || *index > n {
                return err(*pos, format!("s{index} is not a finite simple reflection for rank {n}"));
            }
            Ok(w.s(*index).clone())
        }
        Node::Transl { pos, .. } | Node::Pi { pos, .. } => {
            err(*pos, "translations are not finite Weyl group elements")
        }
        Node::Star(a, b) => Ok(w.star(&eval_finite(w, a)?, &eval_finite(w, b)?)),
        Node::Product(terms) => terms
            .iter()
            .try_fold(w.identity(), |acc, t| Ok(acc.mul(&eval_finite(w, t)?))),
    }
}
