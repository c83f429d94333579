//! Plain-text algebra files.
//!
//! ```text
//! algebra z2
//! size 2
//! op add 2
//! 0 1
//! 1 0
//! const zero 0
//! top 0
//! end
//! ```
//!
//! Tables are row-major with the leftmost argument slowest and may be split
//! across lines freely. `#` starts a comment that runs to the end of the line.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::algebra::{FiniteAlgebra, Signature, DEFAULT_CARRIER_LIMIT};
use crate::error::Error;
use crate::set::ElementSet;

/// Largest operation table the parser accepts.
pub const TABLE_LIMIT: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: value {value} in `{symbol}` is outside the carrier of size {size}")]
    ValueOutOfRange {
        line: usize,
        column: usize,
        symbol: String,
        value: usize,
        size: usize,
    },
    #[error(transparent)]
    Algebra(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: FiniteAlgebra,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for word in line.split_whitespace() {
            let start = offset + line[offset..].find(word).expect("word is in line");
            offset = start + word.len();
            out.push(Token {
                text: word,
                line: idx + 1,
                column: line[..start].chars().count() + 1,
            });
        }
    }
    out
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    /// Position reported for a premature end of input.
    eof: (usize, usize),
}

impl<'a> Parser<'a> {
    fn syntax<T>(&self, at: Option<Token<'_>>, message: impl Into<String>) -> Result<T, FormatError> {
        let (line, column) = at.map_or(self.eof, |t| (t.line, t.column));
        Err(FormatError::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn next(&mut self, what: &str) -> Result<Token<'a>, FormatError> {
        match self.tokens.get(self.pos).copied() {
            Some(t) => {
                self.pos += 1;
                Ok(t)
            }
            None => self.syntax(None, format!("unexpected end of input, expected {what}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), FormatError> {
        let t = self.next(&format!("`{kw}`"))?;
        if t.text != kw {
            return self.syntax(Some(t), format!("expected `{kw}`, found `{}`", t.text));
        }
        Ok(())
    }

    fn name(&mut self, what: &str) -> Result<Token<'a>, FormatError> {
        let t = self.next(what)?;
        let mut chars = t.text.chars();
        let ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && chars.all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'));
        if !ok {
            return self.syntax(Some(t), format!("`{}` is not a valid {what}", t.text));
        }
        Ok(t)
    }

    fn int(&mut self, what: &str) -> Result<(usize, Token<'a>), FormatError> {
        let t = self.next(what)?;
        match t.text.parse::<usize>() {
            Ok(v) if t.text.bytes().all(|b| b.is_ascii_digit()) => Ok((v, t)),
            _ => self.syntax(Some(t), format!("expected {what}, found `{}`", t.text)),
        }
    }
}

fn element(symbol: &str, value: usize, t: Token<'_>, size: usize) -> Result<usize, FormatError> {
    if value >= size {
        return Err(FormatError::ValueOutOfRange {
            line: t.line,
            column: t.column,
            symbol: symbol.to_string(),
            value,
            size,
        });
    }
    Ok(value)
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile, FormatError> {
    let line_count = text.lines().count().max(1);
    let last_len = text.lines().last().map_or(0, |l| l.chars().count());
    let mut p = Parser {
        tokens: tokenize(text),
        pos: 0,
        eof: (line_count, last_len + 1),
    };
    p.keyword("algebra")?;
    let name = p.name("algebra name")?.text.to_string();
    p.keyword("size")?;
    let (size, size_tok) = p.int("carrier size")?;
    if size == 0 || size > DEFAULT_CARRIER_LIMIT {
        return p.syntax(
            Some(size_tok),
            format!("size must be between 1 and {DEFAULT_CARRIER_LIMIT}"),
        );
    }

    let mut sig = Signature::default();
    let mut tables = Vec::new();
    let mut top = None;
    loop {
        let t = p.next("`op`, `const`, `top` or `end`")?;
        match t.text {
            "end" => break,
            "op" | "const" => {
                let name_tok = p.name("operation name")?;
                let symbol = name_tok.text;
                let (arity, table) = if t.text == "const" {
                    let (v, vt) = p.int("constant value")?;
                    (0, vec![element(symbol, v, vt, size)?])
                } else {
                    let (arity, arity_tok) = p.int("arity")?;
                    let len = (0..arity).try_fold(1usize, |acc, _| acc.checked_mul(size).filter(|&l| l <= TABLE_LIMIT));
                    let Some(len) = len else {
                        return p.syntax(
                            Some(arity_tok),
                            format!("table for `{symbol}` would exceed {TABLE_LIMIT} entries"),
                        );
                    };
                    let mut table = Vec::with_capacity(len);
                    for _ in 0..len {
                        let (v, vt) = p.int(&format!("table entry for `{symbol}`"))?;
                        table.push(element(symbol, v, vt, size)?);
                    }
                    (arity, table)
                };
                if sig.lookup(symbol).is_ok() {
                    return p.syntax(Some(name_tok), format!("duplicate operation symbol `{symbol}`"));
                }
                sig.push(symbol, arity)?;
                tables.push(table);
            }
            "top" => {
                if top.is_some() {
                    return p.syntax(Some(t), "`top` given twice");
                }
                let (v, vt) = p.int("top element")?;
                top = Some(element("top", v, vt, size)?);
            }
            other => {
                return p.syntax(
                    Some(t),
                    format!("expected `op`, `const`, `top` or `end`, found `{other}`"),
                )
            }
        }
    }
    if let Some(extra) = p.tokens.get(p.pos).copied() {
        return p.syntax(Some(extra), format!("unexpected `{}` after `end`", extra.text));
    }
    Ok(AlgebraFile {
        name,
        algebra: FiniteAlgebra::new(sig, size, tables, top)?,
    })
}

/// Canonical text: one table row per line (the last argument varies along a row),
/// `const` for nullary symbols, `top` last.
pub fn render_algebra(name: &str, a: &FiniteAlgebra) -> String {
    let mut out = String::new();
    let n = a.size();
    writeln!(out, "algebra {name}").unwrap();
    writeln!(out, "size {n}").unwrap();
    for (sym, table) in a.signature().symbols().iter().zip(a.tables()) {
        if sym.arity == 0 {
            writeln!(out, "const {} {}", sym.name, table[0]).unwrap();
            continue;
        }
        writeln!(out, "op {} {}", sym.name, sym.arity).unwrap();
        for row in table.chunks(n) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
    }
    if let Some(t) = a.top() {
        writeln!(out, "top {t}").unwrap();
    }
    out.push_str("end\n");
    out
}

/// Error from [`parse_set_list`] and [`parse_index_list`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("`{0}` is not a non-negative integer")]
    NotAnInteger(String),
    #[error(transparent)]
    Algebra(#[from] Error),
}

/// Comma-separated integers; `-` or an empty string is the empty list.
pub fn parse_index_list(text: &str) -> Result<Vec<u64>, ListError> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<u64>()
                .map_err(|_| ListError::NotAnInteger(item.to_string()))
        })
        .collect()
}

/// A comma-separated set of elements of a carrier of size `n`; `-` is the empty set.
pub fn parse_set_list(text: &str, n: usize) -> Result<ElementSet, ListError> {
    let items = parse_index_list(text)?;
    let elements = items.into_iter().map(|x| usize::try_from(x).unwrap_or(usize::MAX));
    Ok(ElementSet::from_elements(n, elements)?)
}

/// Relation dump: one `a b` line per related pair, sorted.
pub fn render_relation(r: &crate::relation::BinRel) -> String {
    r.to_string()
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_algebra(&self.name, &self.algebra))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Z2: &str = "algebra z2\nsize 2\nop add 2\n0 1 1 0\nconst zero 0\ntop 0\nend";

    #[test]
    fn parses_z2() {
        let f = parse_algebra(Z2).unwrap();
        assert_eq!(f.name, "z2");
        let a = &f.algebra;
        assert_eq!(a.size(), 2);
        assert_eq!(a.top(), Some(0));
        let add = a.signature().lookup("add").unwrap();
        assert_eq!(a.apply_op(add, &[1, 1]), 0);
        assert_eq!(a.apply_op(add, &[0, 1]), 1);
        assert_eq!(a.constants().collect::<Vec<_>>(), [0]);
    }

    #[test]
    fn missing_end() {
        let err = parse_algebra("algebra z2\nsize 2\nop add 2\n0 1 1 0\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { .. }), "{err}");
        assert!(err.to_string().contains("unexpected end of input"));
    }

    #[test]
    fn value_out_of_range_has_position() {
        let err = parse_algebra("algebra z2\nsize 2\nop add 2\n0 1\n1 2\nend").unwrap_err();
        assert_eq!(
            err,
            FormatError::ValueOutOfRange {
                line: 5,
                column: 3,
                symbol: "add".into(),
                value: 2,
                size: 2
            }
        );
    }

    #[test]
    fn comments_and_free_layout() {
        let text = "# header\nalgebra m  # name\nsize 3\nop f 1 2\n1 # split\n0\ntop 2\nend\n# trailing\n";
        let a = parse_algebra(text).unwrap().algebra;
        assert_eq!(a.table(a.signature().lookup("f").unwrap()), &[2, 1, 0]);
    }

    #[test]
    fn syntax_errors() {
        for (text, line, column) in [
            ("algebr z2", 1, 1),
            ("algebra z2\nsize x", 2, 6),
            ("algebra z2\nsize 0\nend", 2, 6),
            ("algebra z2\nsize 1\nop f 1 0\nop f 1 0\nend", 4, 4),
            ("algebra z2\nsize 1\nfoo\nend", 3, 1),
            ("algebra z2\nsize 1\nend\nop", 4, 1),
            ("algebra z2\nsize 1\ntop 0\ntop 0\nend", 4, 1),
        ] {
            match parse_algebra(text) {
                Err(FormatError::Syntax { line: l, column: c, .. }) => assert_eq!((l, c), (line, column), "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_rendering() {
        let f = parse_algebra(Z2).unwrap();
        assert_eq!(
            render_algebra(&f.name, &f.algebra),
            "algebra z2\nsize 2\nop add 2\n0 1\n1 0\nconst zero 0\ntop 0\nend\n"
        );
    }

    #[test]
    fn set_lists() {
        assert_eq!(parse_set_list("2,0", 4).unwrap().to_string(), "{0,2}");
        assert_eq!(parse_set_list("-", 4).unwrap().to_string(), "{}");
        assert_eq!(parse_set_list(" 1 , 3 ", 4).unwrap().to_string(), "{1,3}");
        assert_eq!(parse_set_list("x", 4).unwrap_err(), ListError::NotAnInteger("x".into()));
        assert!(matches!(
            parse_set_list("4", 4),
            Err(ListError::Algebra(Error::ElementOutOfRange { .. }))
        ));
    }

    fn arb_algebra() -> impl Strategy<Value = FiniteAlgebra> {
        (1usize..=4, proptest::collection::vec(0usize..=3, 0..4)).prop_flat_map(|(n, arities)| {
            let tables: Vec<_> = arities
                .iter()
                .map(|&k| proptest::collection::vec(0..n, n.pow(k as u32)))
                .collect();
            (Just(n), Just(arities), tables, proptest::option::of(0..n)).prop_map(|(n, arities, tables, top)| {
                let sig = Signature::new(arities.iter().enumerate().map(|(i, &k)| (format!("f{i}"), k))).unwrap();
                FiniteAlgebra::new(sig, n, tables, top).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(a in arb_algebra()) {
            let text = render_algebra("x", &a);
            let back = parse_algebra(&text).unwrap();
            prop_assert_eq!(&back.algebra, &a);
            prop_assert_eq!(render_algebra("x", &back.algebra), text);
        }
    }
}
