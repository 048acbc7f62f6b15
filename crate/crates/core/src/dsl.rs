//! Text syntax for groups, fields, valued-field descriptors and series.
//!
//! ```text
//! group   := "Z" | "Q" | "Z[1/" prime "]" | "dense{" prime ("," prime)* "}"
//!          | "lex(" [group ("," group)*] ")"
//! elem    := rational | "(" rational ("," rational)* ")"
//! field   := "F(" q ")" | "Falg(" p ")" | "ACF0" | "RCF" | "SCF(" p "," imp ")"
//!          | "field{" key "=" value ("," key "=" value)* "}"
//!            keys: char, perfect, imp, noPext, nip
//! vf      := "triv(" field ")" | "hahn(" vf "," group ")" | "Qp(" p "," e "," f ")"
//!          | "cohen(" (field | vf) ")" | "tame(" field "," group "," elem ")"
//!          | "abstract{" key "=" value ("," key "=" value)* "}"
//!            keys: res, group, vp (elem or none), field, hens, dl, sdl, am, sam
//! tri     := "T" | "F" | "?"
//! imp     := integer | "inf" | "?"
//! series  := term (("+" | "-") term)*
//! term    := ["-"] atom ("*" atom)*
//! atom    := rational | "t" ["^" exponent] | "X" ["^" integer] | "(" series ")" ["^" integer]
//! exponent:= ["-"] integer | "(" rational ("," rational)* ")"
//! ```
//!
//! Omitted keys of `field{}` and `abstract{}` default to unknown (`vp` to
//! `none`). Printing a descriptor with `Display` yields text that parses back
//! to the same descriptor.

use crate::fields::{AbstractField, FieldDesc, ImpDegree};
use crate::hahn::{Coeff, CoeffField, HahnError, HahnSeries, Polynomial};
use crate::oag::{ArchSummand, GroupElement, OAGDesc, Rat};
use crate::tri::Tri;
use crate::valfield::{AbstractCore, CoreFlags, Lower, ValuedFieldDesc};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid value at line {line}, column {column}: {message}")]
    Semantic {
        line: usize,
        column: usize,
        message: String,
    },
}

impl DslError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            DslError::Syntax { line, column, .. } | DslError::Semantic { line, column, .. } => {
                (*line, *column)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if "(){}[],=/*+-^?|".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(DslError::Syntax {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        };
        column += i - start;
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

const FIELD_HEADS: &[&str] = &["F", "Falg", "ACF0", "RCF", "SCF", "field"];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, DslError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, at: &Token, message: impl Into<String>) -> Result<T, DslError> {
        Err(DslError::Syntax {
            line: at.line,
            column: at.column,
            message: message.into(),
        })
    }

    fn semantic(at: &Token, message: impl fmt::Display) -> DslError {
        DslError::Semantic {
            line: at.line,
            column: at.column,
            message: message.to_string(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<Token, DslError> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(t)
        } else {
            self.syntax(&t, format!("expected `{c}`, found {}", t.tok))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<(), DslError> {
        let t = self.next();
        if t.tok == Tok::End {
            Ok(())
        } else {
            self.syntax(&t, format!("unexpected {} after the end of the expression", t.tok))
        }
    }

    fn ident(&mut self) -> Result<(String, Token), DslError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t)),
            other => self.syntax(&t, format!("expected a name, found {other}")),
        }
    }

    fn uint(&mut self) -> Result<(u64, Token), DslError> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => match n.to_u64() {
                Some(v) => Ok((v, t)),
                None => Err(Self::semantic(&t, format!("{n} is too large"))),
            },
            other => self.syntax(&t, format!("expected an integer, found {other}")),
        }
    }

    fn u32_arg(&mut self) -> Result<u32, DslError> {
        let (v, t) = self.uint()?;
        u32::try_from(v).map_err(|_| Self::semantic(&t, format!("{v} is too large")))
    }

    fn rational(&mut self) -> Result<Rat, DslError> {
        let neg = self.eat_sym('-');
        let t = self.next();
        let Tok::Int(n) = &t.tok else {
            return self.syntax(&t, format!("expected a number, found {}", t.tok));
        };
        let mut r = Rat::from_integer(n.clone());
        if self.eat_sym('/') {
            let d = self.next();
            let Tok::Int(dn) = &d.tok else {
                return self.syntax(&d, format!("expected a denominator, found {}", d.tok));
            };
            if dn.is_zero() {
                return Err(Self::semantic(&d, "zero denominator"));
            }
            r /= Rat::from_integer(dn.clone());
        }
        Ok(if neg { -r } else { r })
    }

    fn element(&mut self) -> Result<GroupElement, DslError> {
        if self.eat_sym('(') {
            let mut cs = vec![self.rational()?];
            while self.eat_sym(',') {
                cs.push(self.rational()?);
            }
            self.expect_sym(')')?;
            Ok(GroupElement::from_coords(cs))
        } else {
            Ok(GroupElement::from_coords(vec![self.rational()?]))
        }
    }

    fn prime_list(&mut self, close: char) -> Result<(Vec<u64>, Token), DslError> {
        let first = self.peek().clone();
        let mut ps = vec![self.uint()?.0];
        while self.eat_sym(',') {
            ps.push(self.uint()?.0);
        }
        self.expect_sym(close)?;
        Ok((ps, first))
    }

    fn group(&mut self) -> Result<OAGDesc, DslError> {
        let (name, t) = self.ident()?;
        match name.as_str() {
            "Q" => Ok(OAGDesc::rationals()),
            "Z" if self.peek().tok == Tok::Sym('[') => {
                self.next();
                let one = self.uint()?;
                if one.0 != 1 {
                    return self.syntax(&one.1, "expected `1/p` inside `Z[...]`");
                }
                self.expect_sym('/')?;
                let (ps, at) = self.prime_list(']')?;
                let a = ArchSummand::localized(ps).map_err(|e| Self::semantic(&at, e))?;
                Ok(OAGDesc::new(vec![a]))
            }
            "Z" => Ok(OAGDesc::integers()),
            "dense" => {
                self.expect_sym('{')?;
                let (ps, at) = self.prime_list('}')?;
                let a = ArchSummand::localized(ps).map_err(|e| Self::semantic(&at, e))?;
                Ok(OAGDesc::new(vec![a]))
            }
            "lex" => {
                self.expect_sym('(')?;
                let mut parts = Vec::new();
                if !self.eat_sym(')') {
                    parts.push(self.group()?);
                    while self.eat_sym(',') {
                        parts.push(self.group()?);
                    }
                    self.expect_sym(')')?;
                }
                Ok(OAGDesc::lex(&parts))
            }
            _ => self.syntax(&t, format!("expected a group, found `{name}`")),
        }
    }

    fn tri(&mut self) -> Result<Tri, DslError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == "T" => Ok(Tri::True),
            Tok::Ident(s) if s == "F" => Ok(Tri::False),
            Tok::Sym('?') => Ok(Tri::Unknown),
            other => self.syntax(&t, format!("expected T, F or ?, found {other}")),
        }
    }

    fn imp(&mut self) -> Result<Option<ImpDegree>, DslError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Sym('?') => {
                self.next();
                Ok(None)
            }
            Tok::Ident(s) if s == "inf" => {
                self.next();
                Ok(Some(ImpDegree::Infinite))
            }
            Tok::Int(_) => Ok(Some(ImpDegree::Finite(self.u32_arg()?))),
            other => self.syntax(&t, format!("expected an imperfection degree, found {other}")),
        }
    }

    /// `{key=value, ...}` with each key handled by `entry`.
    fn record<F>(&mut self, mut entry: F) -> Result<(), DslError>
    where
        F: FnMut(&mut Self, &str, &Token) -> Result<(), DslError>,
    {
        self.expect_sym('{')?;
        if self.eat_sym('}') {
            return Ok(());
        }
        let mut seen = Vec::new();
        loop {
            let (key, t) = self.ident()?;
            if seen.contains(&key) {
                return Err(Self::semantic(&t, format!("duplicate key `{key}`")));
            }
            self.expect_sym('=')?;
            entry(self, &key, &t)?;
            seen.push(key);
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_sym('}')?;
        Ok(())
    }

    fn field(&mut self) -> Result<FieldDesc, DslError> {
        let (name, t) = self.ident()?;
        let raw = match name.as_str() {
            "F" => {
                self.expect_sym('(')?;
                let (q, at) = self.uint()?;
                self.expect_sym(')')?;
                FieldDesc::finite(q).map_err(|e| Self::semantic(&at, e))?
            }
            "Falg" => {
                self.expect_sym('(')?;
                let (p, _) = self.uint()?;
                self.expect_sym(')')?;
                FieldDesc::AlgClosed { char: p }
            }
            "ACF0" => FieldDesc::acf0(),
            "RCF" => FieldDesc::RealClosed,
            "SCF" => {
                self.expect_sym('(')?;
                let (p, _) = self.uint()?;
                self.expect_sym(',')?;
                let e_at = self.peek().clone();
                let e = self
                    .imp()?
                    .ok_or_else(|| Self::semantic(&e_at, "SCF needs a known imperfection degree"))?;
                self.expect_sym(')')?;
                FieldDesc::SepClosed { p, e }
            }
            "field" => {
                let mut a = AbstractField::unknown(0);
                let mut char_seen = false;
                self.record(|p, key, kt| {
                    match key {
                        "char" => {
                            a.char = p.uint()?.0;
                            char_seen = true;
                        }
                        "perfect" => a.perfect = p.tri()?,
                        "imp" => a.imperfection = p.imp()?,
                        "noPext" => a.no_sep_ext_div_p = p.tri()?,
                        "nip" => a.nip = p.tri()?,
                        _ => return Err(Self::semantic(kt, format!("unknown field key `{key}`"))),
                    }
                    Ok(())
                })?;
                if !char_seen {
                    return Err(Self::semantic(&t, "field{} needs a `char` key"));
                }
                FieldDesc::Abstract(a)
            }
            _ => return self.syntax(&t, format!("expected a field, found `{name}`")),
        };
        raw.validate().map_err(|e| Self::semantic(&t, e))
    }

    fn descriptor(&mut self) -> Result<ValuedFieldDesc, DslError> {
        let (name, t) = self.ident()?;
        let sem = |e: crate::valfield::ValFieldError| Self::semantic(&t, e);
        match name.as_str() {
            "triv" => {
                self.expect_sym('(')?;
                let k = self.field()?;
                self.expect_sym(')')?;
                ValuedFieldDesc::trivial(k).map_err(sem)
            }
            "hahn" => {
                self.expect_sym('(')?;
                let inner = self.descriptor()?;
                self.expect_sym(',')?;
                let g = self.group()?;
                self.expect_sym(')')?;
                Ok(inner.hahn(g))
            }
            "Qp" => {
                self.expect_sym('(')?;
                let (p, _) = self.uint()?;
                self.expect_sym(',')?;
                let e = self.u32_arg()?;
                self.expect_sym(',')?;
                let f = self.u32_arg()?;
                self.expect_sym(')')?;
                ValuedFieldDesc::qp(p, e, f).map_err(sem)
            }
            "cohen" => {
                self.expect_sym('(')?;
                let lower = match self.peek_at(0) {
                    Tok::Ident(h) if FIELD_HEADS.contains(&h.as_str()) => Lower::Plain(self.field()?),
                    _ => Lower::Valued(Box::new(self.descriptor()?)),
                };
                self.expect_sym(')')?;
                ValuedFieldDesc::cohen(lower).map_err(sem)
            }
            "tame" => {
                self.expect_sym('(')?;
                let k = self.field()?;
                self.expect_sym(',')?;
                let g = self.group()?;
                self.expect_sym(',')?;
                let vp = self.element()?;
                self.expect_sym(')')?;
                ValuedFieldDesc::tame(k, g, vp).map_err(sem)
            }
            "abstract" => {
                let mut residue = None;
                let mut group = None;
                let mut vp = None;
                let mut field = None;
                let mut flags = CoreFlags::unknown();
                self.record(|p, key, kt| {
                    match key {
                        "res" => residue = Some(p.field()?),
                        "group" => group = Some(p.group()?),
                        "vp" => {
                            if matches!(p.peek_at(0), Tok::Ident(s) if s == "none") {
                                p.next();
                            } else {
                                vp = Some(p.element()?);
                            }
                        }
                        "field" => field = Some(p.field()?),
                        "hens" => flags.henselian = p.tri()?,
                        "dl" => flags.defectless = p.tri()?,
                        "sdl" => flags.sep_defectless = p.tri()?,
                        "am" => flags.alg_maximal = p.tri()?,
                        "sam" => flags.sep_alg_maximal = p.tri()?,
                        _ => {
                            return Err(Self::semantic(kt, format!("unknown abstract key `{key}`")))
                        }
                    }
                    Ok(())
                })?;
                let residue =
                    residue.ok_or_else(|| Self::semantic(&t, "abstract{} needs a `res` key"))?;
                let group =
                    group.ok_or_else(|| Self::semantic(&t, "abstract{} needs a `group` key"))?;
                ValuedFieldDesc::abstract_core(AbstractCore {
                    residue,
                    group,
                    vp,
                    field,
                    flags,
                })
                .map_err(sem)
            }
            _ => self.syntax(&t, format!("expected a valued field, found `{name}`")),
        }
    }
}

/// A parsed top-level expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Descriptor(ValuedFieldDesc),
    Group(OAGDesc),
    Field(FieldDesc),
}

pub fn parse_descriptor(text: &str) -> Result<ValuedFieldDesc, DslError> {
    let mut p = Parser::new(text)?;
    let d = p.descriptor()?;
    p.expect_end()?;
    Ok(d)
}

pub fn parse_group(text: &str) -> Result<OAGDesc, DslError> {
    let mut p = Parser::new(text)?;
    let g = p.group()?;
    p.expect_end()?;
    Ok(g)
}

pub fn parse_field(text: &str) -> Result<FieldDesc, DslError> {
    let mut p = Parser::new(text)?;
    let k = p.field()?;
    p.expect_end()?;
    Ok(k)
}

pub fn parse_element(text: &str) -> Result<GroupElement, DslError> {
    let mut p = Parser::new(text)?;
    let g = p.element()?;
    p.expect_end()?;
    Ok(g)
}

/// Dispatches on the leading name: descriptor, field or group.
pub fn parse_any(text: &str) -> Result<Parsed, DslError> {
    let p = Parser::new(text)?;
    match p.peek_at(0) {
        Tok::Ident(h) if matches!(h.as_str(), "Z" | "Q" | "dense" | "lex") => {
            parse_group(text).map(Parsed::Group)
        }
        Tok::Ident(h) if FIELD_HEADS.contains(&h.as_str()) => parse_field(text).map(Parsed::Field),
        _ => parse_descriptor(text).map(Parsed::Descriptor),
    }
}

/// Polynomial in `X` with series coefficients, as a dense coefficient list.
struct PolyBuilder<'a> {
    group: &'a OAGDesc,
    field: &'a CoeffField,
}

type Dense = Vec<HahnSeries>;

impl PolyBuilder<'_> {
    fn zero(&self) -> HahnSeries {
        HahnSeries::zero(self.group.clone(), self.field.clone())
    }

    fn constant(&self, c: Coeff) -> Dense {
        vec![HahnSeries::constant(self.group.clone(), self.field.clone(), c)]
    }

    fn add(&self, a: &Dense, b: &Dense) -> Result<Dense, HahnError> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| {
                let z = self.zero();
                a.get(i).unwrap_or(&z).add(b.get(i).unwrap_or(&z))
            })
            .collect()
    }

    fn neg(&self, a: &Dense) -> Dense {
        a.iter().map(HahnSeries::neg).collect()
    }

    fn mul(&self, a: &Dense, b: &Dense) -> Result<Dense, HahnError> {
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y)?)?;
            }
        }
        Ok(out)
    }
}

impl Parser {
    fn hahn_err(at: &Token, e: HahnError) -> DslError {
        Self::semantic(at, e)
    }

    fn series_sum(&mut self, b: &PolyBuilder) -> Result<Dense, DslError> {
        let mut acc = self.series_term(b)?;
        loop {
            let t = self.peek().clone();
            let neg = match t.tok {
                Tok::Sym('+') => false,
                Tok::Sym('-') => true,
                _ => return Ok(acc),
            };
            self.next();
            let mut rhs = self.series_term(b)?;
            if neg {
                rhs = b.neg(&rhs);
            }
            acc = b.add(&acc, &rhs).map_err(|e| Self::hahn_err(&t, e))?;
        }
    }

    fn series_term(&mut self, b: &PolyBuilder) -> Result<Dense, DslError> {
        let neg = self.eat_sym('-');
        let mut acc = self.series_atom(b)?;
        loop {
            let t = self.peek().clone();
            if !self.eat_sym('*') {
                break;
            }
            let rhs = self.series_atom(b)?;
            acc = b.mul(&acc, &rhs).map_err(|e| Self::hahn_err(&t, e))?;
        }
        Ok(if neg { b.neg(&acc) } else { acc })
    }

    fn small_power(&mut self) -> Result<Option<u32>, DslError> {
        if self.eat_sym('^') {
            Ok(Some(self.u32_arg()?))
        } else {
            Ok(None)
        }
    }

    fn series_atom(&mut self, b: &PolyBuilder) -> Result<Dense, DslError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(_) => {
                let r = self.rational()?;
                let c = b.field.from_rat(&r).map_err(|e| Self::hahn_err(&t, e))?;
                Ok(b.constant(c))
            }
            Tok::Ident(s) if s == "t" => {
                self.next();
                let e = if self.eat_sym('^') {
                    if self.peek().tok == Tok::Sym('(') {
                        self.element()?
                    } else {
                        GroupElement::from_coords(vec![self.rational()?])
                    }
                } else {
                    let mut e = vec![Rat::zero(); b.group.rank()];
                    match e.last_mut() {
                        Some(x) => *x = Rat::from_integer(1.into()),
                        None => return Err(Self::semantic(&t, "the trivial group has no `t`")),
                    }
                    GroupElement::from_coords(e)
                };
                let m = HahnSeries::monomial(b.group.clone(), b.field.clone(), b.field.one(), e)
                    .map_err(|e| Self::hahn_err(&t, e))?;
                Ok(vec![m])
            }
            Tok::Ident(s) if s == "X" => {
                self.next();
                let k = self.small_power()?.unwrap_or(1) as usize;
                let mut out = vec![b.zero(); k + 1];
                out[k] = HahnSeries::one(b.group.clone(), b.field.clone());
                Ok(out)
            }
            Tok::Sym('(') => {
                self.next();
                let inner = self.series_sum(b)?;
                self.expect_sym(')')?;
                let k = self.small_power()?.unwrap_or(1);
                let mut acc = b.constant(b.field.one());
                for _ in 0..k {
                    acc = b.mul(&acc, &inner).map_err(|e| Self::hahn_err(&t, e))?;
                }
                Ok(acc)
            }
            other => self.syntax(&t, format!("expected a number, `t`, `X` or `(`, found {other}")),
        }
    }
}

pub fn parse_polynomial(
    text: &str,
    group: &OAGDesc,
    field: &CoeffField,
) -> Result<Polynomial, DslError> {
    let mut p = Parser::new(text)?;
    let start = p.peek().clone();
    let b = PolyBuilder { group, field };
    let dense = p.series_sum(&b)?;
    p.expect_end()?;
    Polynomial::new(dense).map_err(|e| Parser::hahn_err(&start, e))
}

pub fn parse_series(text: &str, group: &OAGDesc, field: &CoeffField) -> Result<HahnSeries, DslError> {
    let f = parse_polynomial(text, group, field)?;
    if f.degree() > 0 {
        return Err(DslError::Semantic {
            line: 1,
            column: 1,
            message: "a series may not contain `X`".into(),
        });
    }
    Ok(f.coeffs()[0].clone())
}
