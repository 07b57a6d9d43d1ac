//! The `.ifss` dataset format.
//!
//! A dataset declares one universe, one parameter set and any number of
//! named IFS-sets over them:
//!
//! ```text
//! # comment until end of line
//! universe: u1 u2 u3 u4
//! parameters: x1 x2 x3 x4 x5 x6
//!
//! set gamma
//!   mode: strict
//!   support: x1 x2
//!   x1: (u1, 0.5, 0.2) (u2, 0.5, 0.2)
//!   x2: (u1, 0.6, 0.4), (u2, 0.9, 0.1)
//! end
//! ```
//!
//! Grammar, one statement per line:
//!
//! ```text
//! document   := header* set*
//! header     := ("universe" | "parameters") ":" ident+
//! set        := "set" ident NL line* "end"
//! line       := "support" ":" ident*
//!             | "mode" ":" ("strict" | "relaxed")
//!             | ident ":" [ tuple { [","] tuple } ]
//! tuple      := "(" ident "," decimal "," decimal ")"
//! ident      := [A-Za-z0-9_.-]+, excluding the keywords support, mode, end, set
//! decimal    := ["-"] digit+ ["." digit{1,6}]
//! ```
//!
//! Grades are read as exact rationals. Unlisted elements of a row and
//! parameters of the support without a row default to `(0, 1)`. `relaxed`
//! drops the `mu + nu <= 1` check but keeps both grades in `[0,1]`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::oracle::Rational;
use crate::types::{ConstraintMode, IfSoftSet, ParameterSet, Universe};

pub const MAX_FRACTION_DIGITS: usize = 6;

const KEYWORDS: [&str; 4] = ["support", "mode", "end", "set"];

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetDocument {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    pub sets: Vec<SetDecl>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetDecl {
    pub name: String,
    pub mode: ConstraintMode,
    pub support: Vec<String>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub parameter: String,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub element: String,
    pub mu: Rational,
    pub nu: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

/// Every problem found while parsing; syntax errors stop the parse,
/// semantic errors are collected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetError {
    pub diagnostics: Vec<Diagnostic>,
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.diagnostics.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for DatasetError {}

impl DatasetDocument {
    pub fn frame(&self) -> Result<(Universe, ParameterSet), Error> {
        Ok((
            Universe::new(self.universe.iter().cloned())?,
            ParameterSet::new(self.parameters.iter().cloned())?,
        ))
    }

    pub fn set(&self, name: &str) -> Option<&SetDecl> {
        self.sets.iter().find(|s| s.name == name)
    }

    /// Builds the named set with exact grades, labelled with its name.
    pub fn exact_set(&self, name: &str) -> Result<IfSoftSet<Rational>, Error> {
        let decl = self
            .set(name)
            .ok_or_else(|| Error::UnknownSet(name.to_string()))?;
        let (universe, parameters) = self.frame()?;
        decl.build(&universe, &parameters)
    }

    /// Builds the named set with `f64` grades, converted once from the exact
    /// decimal values.
    pub fn float_set(&self, name: &str) -> Result<IfSoftSet, Error> {
        Ok(self.exact_set(name)?.to_f64())
    }
}

impl SetDecl {
    pub fn build(
        &self,
        universe: &Universe,
        parameters: &ParameterSet,
    ) -> Result<IfSoftSet<Rational>, Error> {
        let mut builder = IfSoftSet::builder(universe, parameters)
            .support(self.support.iter().cloned())
            .mode(self.mode)
            .label(self.name.clone());
        for row in &self.rows {
            for e in &row.entries {
                builder = builder.assign(
                    row.parameter.clone(),
                    e.element.clone(),
                    e.mu.clone(),
                    e.nu.clone(),
                );
            }
        }
        builder.build()
    }
}

/// Reads a decimal literal with at most six fractional digits as an exact
/// rational.
pub fn parse_decimal(text: &str) -> Result<Rational, String> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (whole, fraction) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(whole) || (body.contains('.') && !digits(fraction)) {
        return Err(format!("malformed number `{text}`"));
    }
    if fraction.len() > MAX_FRACTION_DIGITS {
        return Err(format!(
            "`{text}` has more than {MAX_FRACTION_DIGITS} fractional digits"
        ));
    }
    let numer: BigInt = format!("{whole}{fraction}")
        .parse()
        .map_err(|_| format!("malformed number `{text}`"))?;
    let denom = BigInt::from(10u32).pow(fraction.len() as u32);
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Shortest decimal spelling of `value`, or `None` when it needs more than
/// six fractional digits.
pub fn format_decimal(value: &Rational) -> Option<String> {
    let scale = BigInt::from(10u32).pow(MAX_FRACTION_DIGITS as u32);
    let scaled = value * Rational::from_integer(scale.clone());
    if !scaled.is_integer() {
        return None;
    }
    let scaled = scaled.to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let (whole, fraction) = scaled.abs().div_rem(&scale);
    if fraction.is_zero() {
        return Some(format!("{sign}{whole}"));
    }
    let digits = format!("{:0>width$}", fraction.to_string(), width = MAX_FRACTION_DIGITS);
    Some(format!("{sign}{whole}.{}", digits.trim_end_matches('0')))
}

/// Canonical text for a document. Parsing the result yields `doc` again.
pub fn serialize_dataset(doc: &DatasetDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("universe: {}\n", doc.universe.join(" ")));
    out.push_str(&format!("parameters: {}\n", doc.parameters.join(" ")));
    for set in &doc.sets {
        out.push_str(&format!("\nset {}\n", set.name));
        if set.mode == ConstraintMode::Relaxed {
            out.push_str("  mode: relaxed\n");
        }
        if set.support.is_empty() {
            out.push_str("  support:\n");
        } else {
            out.push_str(&format!("  support: {}\n", set.support.join(" ")));
        }
        for row in &set.rows {
            out.push_str(&format!("  {}:", row.parameter));
            for e in &row.entries {
                // grades come from parse_decimal, so six digits always suffice
                let mu = format_decimal(&e.mu).unwrap_or_else(|| e.mu.to_string());
                let nu = format_decimal(&e.nu).unwrap_or_else(|| e.nu.to_string());
                out.push_str(&format!(" ({}, {mu}, {nu})", e.element));
            }
            out.push('\n');
        }
        out.push_str("end\n");
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Colon,
    Open,
    Close,
    Comma,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-')
}

fn tokenize(line: &str, line_no: usize) -> Result<Vec<Token>, Diagnostic> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let column = k + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => k += 1,
            ':' | '(' | ')' | ',' => {
                let tok = match c {
                    ':' => Tok::Colon,
                    '(' => Tok::Open,
                    ')' => Tok::Close,
                    _ => Tok::Comma,
                };
                tokens.push(Token { tok, column });
                k += 1;
            }
            c if is_word_char(c) => {
                let start = k;
                while k < chars.len() && is_word_char(chars[k]) {
                    k += 1;
                }
                tokens.push(Token {
                    tok: Tok::Word(chars[start..k].iter().collect()),
                    column,
                });
            }
            other => {
                return Err(Diagnostic {
                    line: line_no,
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    end_column: usize,
}

impl<'a> Cursor<'a> {
    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column)
    }

    fn error(&self, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), Diagnostic> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, usize), Diagnostic> {
        match self.tokens.get(self.pos) {
            Some(Token {
                tok: Tok::Word(w),
                column,
            }) => {
                self.pos += 1;
                Ok((w.clone(), *column))
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn finish(&self) -> Result<(), Diagnostic> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

struct Located<T> {
    value: T,
    line: usize,
    column: usize,
}

struct RawEntry {
    element: Located<String>,
    mu: Located<Rational>,
    nu: Located<Rational>,
}

struct RawRow {
    parameter: Located<String>,
    entries: Vec<RawEntry>,
}

struct RawSet {
    name: Located<String>,
    mode: Option<Located<ConstraintMode>>,
    support: Option<Vec<Located<String>>>,
    rows: Vec<RawRow>,
}

fn name_list(cursor: &mut Cursor<'_>, what: &str) -> Result<Vec<Located<String>>, Diagnostic> {
    let mut names = Vec::new();
    while !cursor.at_end() {
        let (value, column) = cursor.word(what)?;
        names.push(Located {
            value,
            line: cursor.line,
            column,
        });
    }
    Ok(names)
}

fn decimal(cursor: &mut Cursor<'_>) -> Result<Located<Rational>, Diagnostic> {
    let (text, column) = cursor.word("a number")?;
    let value = parse_decimal(&text).map_err(|message| Diagnostic {
        line: cursor.line,
        column,
        message,
    })?;
    Ok(Located {
        value,
        line: cursor.line,
        column,
    })
}

fn tuple(cursor: &mut Cursor<'_>) -> Result<RawEntry, Diagnostic> {
    cursor.expect(Tok::Open, "`(`")?;
    let (element, column) = cursor.word("an element name")?;
    cursor.expect(Tok::Comma, "`,`")?;
    let mu = decimal(cursor)?;
    cursor.expect(Tok::Comma, "`,`")?;
    let nu = decimal(cursor)?;
    cursor.expect(Tok::Close, "`)`")?;
    Ok(RawEntry {
        element: Located {
            value: element,
            line: cursor.line,
            column,
        },
        mu,
        nu,
    })
}

struct Checker {
    diagnostics: Vec<Diagnostic>,
}

impl Checker {
    fn report<T>(&mut self, at: &Located<T>, message: String) {
        self.diagnostics.push(Diagnostic {
            line: at.line,
            column: at.column,
            message,
        });
    }

    fn names(&mut self, kind: &str, names: &[Located<String>]) -> Vec<String> {
        let mut seen = HashSet::new();
        for n in names {
            if KEYWORDS.contains(&n.value.as_str()) {
                self.report(n, format!("`{}` is reserved and cannot name a {kind}", n.value));
            }
            if !seen.insert(n.value.as_str()) {
                self.report(n, format!("duplicate {kind} `{}`", n.value));
            }
        }
        names.iter().map(|n| n.value.clone()).collect()
    }

    fn set(&mut self, raw: RawSet, universe: &[String], parameters: &[String]) -> SetDecl {
        let set = raw.name.value.clone();
        let mode = raw.mode.as_ref().map_or(ConstraintMode::Strict, |m| m.value);
        let mut support = Vec::new();
        let mut in_support = HashSet::new();
        for p in raw.support.unwrap_or_default() {
            if !parameters.contains(&p.value) {
                self.report(&p, format!("set `{set}`: unknown parameter `{}` in support", p.value));
            } else if !in_support.insert(p.value.clone()) {
                self.report(&p, format!("set `{set}`: duplicate parameter `{}` in support", p.value));
            }
            support.push(p.value);
        }
        let mut rows = Vec::new();
        let mut seen_rows = HashSet::new();
        for row in raw.rows {
            let x = row.parameter.value.clone();
            if !parameters.contains(&x) {
                self.report(&row.parameter, format!("set `{set}`: unknown parameter `{x}`"));
            } else if !in_support.contains(&x) {
                self.report(
                    &row.parameter,
                    format!("set `{set}`: parameter `{x}` has values but is not in the support"),
                );
            }
            if !seen_rows.insert(x.clone()) {
                self.report(&row.parameter, format!("set `{set}`: duplicate row for `{x}`"));
            }
            let mut seen_elements = HashSet::new();
            let mut entries = Vec::new();
            for e in row.entries {
                let u = e.element.value.clone();
                let at = format!("set `{set}`, ({x}, {u})");
                if !universe.contains(&u) {
                    self.report(&e.element, format!("{at}: unknown element `{u}`"));
                }
                if !seen_elements.insert(u.clone()) {
                    self.report(&e.element, format!("{at}: duplicate element"));
                }
                let unit = |v: &Rational| !v.is_negative() && *v <= Rational::one();
                let show = |v: &Rational| format_decimal(v).unwrap_or_else(|| v.to_string());
                let (mu, nu) = (&e.mu.value, &e.nu.value);
                if !unit(mu) {
                    self.report(&e.mu, format!("{at}: mu={} outside [0,1]", show(mu)));
                } else if !unit(nu) {
                    self.report(&e.nu, format!("{at}: nu={} outside [0,1]", show(nu)));
                } else if mode == ConstraintMode::Strict && mu + nu > Rational::one() {
                    self.report(&e.mu, format!("{at}: mu+nu>1 ({} + {})", show(mu), show(nu)));
                }
                entries.push(Entry {
                    element: u,
                    mu: e.mu.value,
                    nu: e.nu.value,
                });
            }
            rows.push(Row {
                parameter: x,
                entries,
            });
        }
        SetDecl {
            name: set,
            mode,
            support,
            rows,
        }
    }
}

/// Parses a dataset, checking every name reference and value constraint.
pub fn parse_dataset(text: &str) -> Result<DatasetDocument, DatasetError> {
    let syntax = |d: Diagnostic| DatasetError {
        diagnostics: vec![d],
    };
    let mut universe: Option<Vec<Located<String>>> = None;
    let mut parameters: Option<Vec<Located<String>>> = None;
    let mut sets: Vec<RawSet> = Vec::new();
    let mut open: Option<RawSet> = None;
    let mut last_line = 0;

    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        last_line = line_no;
        let tokens = tokenize(line, line_no).map_err(syntax)?;
        if tokens.is_empty() {
            continue;
        }
        let mut cursor = Cursor {
            tokens: &tokens,
            pos: 0,
            line: line_no,
            end_column: line.chars().count() + 1,
        };
        let (head, head_column) = cursor.word("a keyword or parameter name").map_err(syntax)?;
        let located = |value| Located {
            value,
            line: line_no,
            column: head_column,
        };

        if let Some(set) = open.as_mut() {
            match head.as_str() {
                "end" => {
                    cursor.finish().map_err(syntax)?;
                    sets.extend(open.take());
                }
                "support" => {
                    cursor.expect(Tok::Colon, "`:`").map_err(syntax)?;
                    if set.support.is_some() {
                        return Err(syntax(cursor.error("support declared twice")));
                    }
                    set.support = Some(name_list(&mut cursor, "a parameter name").map_err(syntax)?);
                }
                "mode" => {
                    cursor.expect(Tok::Colon, "`:`").map_err(syntax)?;
                    if set.mode.is_some() {
                        return Err(syntax(cursor.error("mode declared twice")));
                    }
                    let (word, column) = cursor.word("`strict` or `relaxed`").map_err(syntax)?;
                    let value = match word.as_str() {
                        "strict" => ConstraintMode::Strict,
                        "relaxed" => ConstraintMode::Relaxed,
                        _ => {
                            return Err(syntax(Diagnostic {
                                line: line_no,
                                column,
                                message: format!("unknown mode `{word}` (expected strict|relaxed)"),
                            }))
                        }
                    };
                    cursor.finish().map_err(syntax)?;
                    set.mode = Some(Located {
                        value,
                        line: line_no,
                        column,
                    });
                }
                "set" => return Err(syntax(cursor.error("`set` inside a set; missing `end`?"))),
                _ => {
                    cursor.expect(Tok::Colon, "`:`").map_err(syntax)?;
                    let mut entries = Vec::new();
                    while !cursor.at_end() {
                        if !entries.is_empty() && cursor.peek() == Some(&Tok::Comma) {
                            cursor.pos += 1;
                        }
                        entries.push(tuple(&mut cursor).map_err(syntax)?);
                    }
                    set.rows.push(RawRow {
                        parameter: located(head),
                        entries,
                    });
                }
            }
            continue;
        }

        match head.as_str() {
            "universe" | "parameters" => {
                if !sets.is_empty() {
                    return Err(syntax(cursor.error(format!("`{head}` must precede every set"))));
                }
                cursor.expect(Tok::Colon, "`:`").map_err(syntax)?;
                let names = name_list(&mut cursor, "a name").map_err(syntax)?;
                if names.is_empty() {
                    return Err(syntax(cursor.error(format!("`{head}` needs at least one name"))));
                }
                let slot = if head == "universe" {
                    &mut universe
                } else {
                    &mut parameters
                };
                if slot.is_some() {
                    return Err(syntax(Diagnostic {
                        line: line_no,
                        column: head_column,
                        message: format!("`{head}` declared twice"),
                    }));
                }
                *slot = Some(names);
            }
            "set" => {
                if universe.is_none() || parameters.is_none() {
                    return Err(syntax(Diagnostic {
                        line: line_no,
                        column: head_column,
                        message: "`universe` and `parameters` must be declared before any set".into(),
                    }));
                }
                let (name, column) = cursor.word("a set name").map_err(syntax)?;
                cursor.finish().map_err(syntax)?;
                open = Some(RawSet {
                    name: Located {
                        value: name,
                        line: line_no,
                        column,
                    },
                    mode: None,
                    support: None,
                    rows: Vec::new(),
                });
            }
            other => {
                return Err(syntax(Diagnostic {
                    line: line_no,
                    column: head_column,
                    message: format!("unexpected `{other}` outside a set"),
                }))
            }
        }
    }

    if let Some(set) = open {
        return Err(syntax(Diagnostic {
            line: last_line + 1,
            column: 1,
            message: format!("set `{}` is missing `end`", set.name.value),
        }));
    }
    let missing = |what: &str| {
        syntax(Diagnostic {
            line: last_line.max(1),
            column: 1,
            message: format!("missing `{what}` declaration"),
        })
    };
    let universe = universe.ok_or_else(|| missing("universe"))?;
    let parameters = parameters.ok_or_else(|| missing("parameters"))?;

    let mut checker = Checker {
        diagnostics: Vec::new(),
    };
    let universe = checker.names("element", &universe);
    let parameters = checker.names("parameter", &parameters);
    let mut set_names = HashSet::new();
    let mut decls = Vec::new();
    for raw in sets {
        if !set_names.insert(raw.name.value.clone()) {
            checker.report(&raw.name, format!("duplicate set `{}`", raw.name.value));
        }
        decls.push(checker.set(raw, &universe, &parameters));
    }
    if !checker.diagnostics.is_empty() {
        return Err(DatasetError {
            diagnostics: checker.diagnostics,
        });
    }
    Ok(DatasetDocument {
        universe,
        parameters,
        sets: decls,
    })
}
