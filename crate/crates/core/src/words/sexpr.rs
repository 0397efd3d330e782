//! S-expression text form of words.
//!
//! ```text
//! letter := (x ROOT C) | (z ROOT C C) | (inv letter) | (conj word word)
//! word   := letter | (w letter*)
//! ```
//! A one-letter word is written as the bare letter, so writing is canonical
//! and `parse(write(w)) == w`.

use thiserror::Error;

use super::{Letter, Word};
use crate::ring::Ring;
use crate::rootsystem::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("word syntax error: {0}")]
pub struct SexprError(pub String);

pub(super) fn write_letter(l: &Letter) -> String {
    match l {
        Letter::X(a, c) => format!("(x {a} {c})"),
        Letter::Z(a, c, e) => format!("(z {a} {c} {e})"),
        Letter::Inv(l) => format!("(inv {})", write_letter(l)),
        Letter::Conj(b, by) => format!("(conj {} {})", write_word(b), write_word(by)),
    }
}

pub(super) fn write_word(w: &Word) -> String {
    if w.letters.len() == 1 {
        return write_letter(&w.letters[0]);
    }
    let mut out = String::from("(w");
    for l in &w.letters {
        out.push(' ');
        out.push_str(&write_letter(l));
    }
    out.push(')');
    out
}

#[derive(Debug)]
enum Sexpr {
    Atom(String),
    List(Vec<Sexpr>),
}

fn read(text: &str) -> Result<Sexpr, SexprError> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        if ch == '(' || ch == ')' || ch.is_whitespace() {
            if !cur.is_empty() {
                tokens.push(std::mem::take(&mut cur));
            }
            if !ch.is_whitespace() {
                tokens.push(ch.to_string());
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    let mut pos = 0;
    let expr = read_expr(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(SexprError("trailing input".into()));
    }
    Ok(expr)
}

fn read_expr(tokens: &[String], pos: &mut usize) -> Result<Sexpr, SexprError> {
    let tok = tokens.get(*pos).ok_or_else(|| SexprError("unexpected end".into()))?;
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos).map(String::as_str) {
                    Some(")") => {
                        *pos += 1;
                        return Ok(Sexpr::List(items));
                    }
                    Some(_) => items.push(read_expr(tokens, pos)?),
                    None => return Err(SexprError("missing ')'".into())),
                }
            }
        }
        ")" => Err(SexprError("unexpected ')'".into())),
        atom => Ok(Sexpr::Atom(atom.to_string())),
    }
}

struct Ctx<'a> {
    rs: &'a RootSystem,
    ring: &'a Ring,
}

impl Ctx<'_> {
    fn atom<'s>(&self, e: &'s Sexpr) -> Result<&'s str, SexprError> {
        match e {
            Sexpr::Atom(s) => Ok(s),
            Sexpr::List(_) => Err(SexprError("expected an atom".into())),
        }
    }

    fn coeff(&self, e: &Sexpr) -> Result<crate::ring::RingElement, SexprError> {
        self.ring
            .parse_element(self.atom(e)?)
            .map_err(|err| SexprError(err.to_string()))
    }

    fn root(&self, e: &Sexpr) -> Result<crate::rootsystem::Root, SexprError> {
        self.rs
            .parse_root(self.atom(e)?)
            .map_err(|err| SexprError(err.to_string()))
    }

    fn letter(&self, e: &Sexpr) -> Result<Letter, SexprError> {
        let items = match e {
            Sexpr::List(items) if !items.is_empty() => items,
            _ => return Err(SexprError("expected a letter".into())),
        };
        let head = self.atom(&items[0])?;
        match (head, items.len()) {
            ("x", 3) => Ok(Letter::X(self.root(&items[1])?, self.coeff(&items[2])?)),
            ("z", 4) => Ok(Letter::Z(
                self.root(&items[1])?,
                self.coeff(&items[2])?,
                self.coeff(&items[3])?,
            )),
            ("inv", 2) => Ok(Letter::Inv(Box::new(self.letter(&items[1])?))),
            ("conj", 3) => Ok(Letter::Conj(self.word(&items[1])?, self.word(&items[2])?)),
            _ => Err(SexprError(format!("malformed '{head}' form"))),
        }
    }

    fn word(&self, e: &Sexpr) -> Result<Word, SexprError> {
        if let Sexpr::List(items) = e {
            if let Some(Sexpr::Atom(h)) = items.first() {
                if h == "w" {
                    let letters = items[1..]
                        .iter()
                        .map(|l| self.letter(l))
                        .collect::<Result<_, _>>()?;
                    return Ok(Word { letters });
                }
            }
        }
        Ok(Word { letters: vec![self.letter(e)?] })
    }
}

pub(super) fn parse_word(text: &str, rs: &RootSystem, ring: &Ring) -> Result<Word, SexprError> {
    Ctx { rs, ring }.word(&read(text)?)
}
