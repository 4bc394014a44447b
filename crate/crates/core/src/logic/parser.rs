//! Recursive-descent parser for formulas.
//!
//! ```text
//! formula := disj ( "->" formula )?
//! disj    := conj ( "|" conj )*
//! conj    := neg ( "&" neg )*
//! neg     := "!" neg | "I" "(" term "," term "," term ")" | "(" formula ")"
//! term    := iterm ( "+" iterm )*
//! iterm   := cterm ( "*" cterm )*
//! cterm   := "~" cterm | "empty" | IDENT | "(" term ")"
//! IDENT   := letter ( letter | digit )*
//! ```
//!
//! Error positions are 1-based character columns; running off the end of
//! the input reports one past the last character.

use super::ast::{Atom, Formula, Term};
use super::clause::{clause_of_formula, Clause};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Arrow,
    Pipe,
    Amp,
    Bang,
    Plus,
    Star,
    Tilde,
    Ident(String),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Tilde => "`~`".into(),
        }
    }
}

fn lex(text: &str) -> Result<(Vec<(usize, Tok)>, usize)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '|' => Tok::Pipe,
            '&' => Tok::Amp,
            '!' => Tok::Bang,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '~' => Tok::Tilde,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_alphanumeric() {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => return Err(Error::Syntax { offset: pos, message: format!("unexpected character {other:?}") }),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok((out, chars.len() + 1))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, expected: &str) -> Result<T> {
        let found = self.peek().map_or("end of input".to_string(), Tok::describe);
        Err(Error::Syntax { offset: self.pos(), message: format!("expected {expected}, found {found}") })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.error(&tok.describe())
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.disj()?;
        if self.eat(&Tok::Arrow) {
            Ok(Formula::implies(lhs, self.formula()?))
        } else {
            Ok(lhs)
        }
    }

    fn disj(&mut self) -> Result<Formula> {
        let mut f = self.conj()?;
        while self.eat(&Tok::Pipe) {
            f = Formula::or(f, self.conj()?);
        }
        Ok(f)
    }

    fn conj(&mut self) -> Result<Formula> {
        let mut f = self.neg()?;
        while self.eat(&Tok::Amp) {
            f = Formula::and(f, self.neg()?);
        }
        Ok(f)
    }

    fn neg(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.at += 1;
                Ok(Formula::not(self.neg()?))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Some(Tok::Ident(name)) if name == "I" => {
                self.at += 1;
                self.expect(Tok::LParen)?;
                let t1 = self.term()?;
                self.expect(Tok::Comma)?;
                let t2 = self.term()?;
                self.expect(Tok::Comma)?;
                let t3 = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(Formula::Atom(Atom(t1, t2, t3)))
            }
            _ => self.error("`I(`, `!` or `(`"),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = self.iterm()?;
        while self.eat(&Tok::Plus) {
            t = Term::union(t, self.iterm()?);
        }
        Ok(t)
    }

    fn iterm(&mut self) -> Result<Term> {
        let mut t = self.cterm()?;
        while self.eat(&Tok::Star) {
            t = Term::intersection(t, self.cterm()?);
        }
        Ok(t)
    }

    fn cterm(&mut self) -> Result<Term> {
        match self.peek().cloned() {
            Some(Tok::Tilde) => {
                self.at += 1;
                Ok(Term::complement(self.cterm()?))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                Ok(if name == "empty" { Term::Empty } else { Term::Var(name) })
            }
            _ => self.error("a term"),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    let (toks, end) = lex(text)?;
    let mut p = Parser { toks, at: 0, end };
    let f = p.formula()?;
    if p.peek().is_some() {
        return p.error("end of input");
    }
    Ok(f)
}

/// Parses a formula and requires it to have clause shape.
pub fn parse_clause(text: &str) -> Result<Clause> {
    clause_of_formula(&parse_formula(text)?).ok_or(Error::NotAClause)
}
