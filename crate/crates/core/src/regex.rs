//! The input regex dialect: `+` for union, juxtaposition for concatenation,
//! postfix `*` for iteration, parentheses for grouping. Whitespace is ignored.
//! There is no ε literal and no Kleene-plus token (write `ww*`).
//!
//! Grammar:
//! ```text
//! expr   := term ('+' term)*
//! term   := factor+
//! factor := atom '*'*
//! atom   := symbol | '(' expr ')'
//! ```

use std::fmt;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegexAst {
    /// The empty language ∅. Not writable in the input dialect.
    Empty,
    /// The language {ε}. Not writable in the input dialect.
    Epsilon,
    Symbol(char),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn union(l: RegexAst, r: RegexAst) -> RegexAst {
        match (l, r) {
            (RegexAst::Empty, r) => r,
            (l, RegexAst::Empty) => l,
            (l, r) => RegexAst::Union(Box::new(l), Box::new(r)),
        }
    }

    pub fn concat(l: RegexAst, r: RegexAst) -> RegexAst {
        match (l, r) {
            (RegexAst::Empty, _) | (_, RegexAst::Empty) => RegexAst::Empty,
            (RegexAst::Epsilon, r) => r,
            (l, RegexAst::Epsilon) => l,
            (l, r) => RegexAst::Concat(Box::new(l), Box::new(r)),
        }
    }

    pub fn star(e: RegexAst) -> RegexAst {
        match e {
            RegexAst::Empty | RegexAst::Epsilon => RegexAst::Epsilon,
            RegexAst::Star(inner) => RegexAst::Star(inner),
            e => RegexAst::Star(Box::new(e)),
        }
    }
}

/// Parses `text` against the dialect grammar over the given alphabet.
pub fn parse_regex(text: &str, alphabet: &Arc<Alphabet>) -> Result<RegexAst> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser { chars: &chars, pos: 0, alphabet };
    let ast = p.expr()?;
    if p.pos < p.chars.len() {
        let (at, c) = p.chars[p.pos];
        return Err(Error::Syntax { pos: at, msg: format!("unexpected '{c}'") });
    }
    Ok(ast)
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    alphabet: &'a Arc<Alphabet>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn here(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(at, _)| at)
            .unwrap_or_else(|| self.chars.last().map(|&(at, c)| at + c.len_utf8()).unwrap_or(0))
    }

    fn expr(&mut self) -> Result<RegexAst> {
        let mut ast = self.term()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            ast = RegexAst::union(ast, self.term()?);
        }
        Ok(ast)
    }

    fn term(&mut self) -> Result<RegexAst> {
        let mut ast = self.factor()?;
        while matches!(self.peek(), Some(c) if c != '+' && c != ')') {
            ast = RegexAst::concat(ast, self.factor()?);
        }
        Ok(ast)
    }

    fn factor(&mut self) -> Result<RegexAst> {
        let mut ast = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            ast = RegexAst::star(ast);
        }
        Ok(ast)
    }

    fn atom(&mut self) -> Result<RegexAst> {
        match self.peek() {
            None => Err(Error::Syntax { pos: self.here(), msg: "expected a symbol or '('".into() }),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Syntax { pos: self.here(), msg: "expected ')'".into() });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c @ (')' | '+' | '*')) => {
                Err(Error::Syntax { pos: self.here(), msg: format!("unexpected '{c}'") })
            }
            Some(c) => {
                if self.alphabet.index_of(c).is_none() {
                    return Err(Error::UnknownSymbol { symbol: c });
                }
                self.pos += 1;
                Ok(RegexAst::Symbol(c))
            }
        }
    }
}

/// Renders an AST back into the dialect. `Empty` and `Epsilon` have no
/// written form; rendering is only defined for ASTs free of them (as
/// produced by [`crate::language::Language::render`]).
pub fn render(ast: &RegexAst) -> String {
    let mut out = String::new();
    write_ast(ast, 0, &mut out);
    out
}

// prec: 0 = union context, 1 = concat context, 2 = star operand
fn write_ast(ast: &RegexAst, prec: u8, out: &mut String) {
    match ast {
        RegexAst::Empty | RegexAst::Epsilon => {
            debug_assert!(false, "Empty/Epsilon have no written form");
            out.push_str("()");
        }
        RegexAst::Symbol(c) => out.push(*c),
        RegexAst::Union(l, r) => {
            let need = prec > 0;
            if need {
                out.push('(');
            }
            write_ast(l, 0, out);
            out.push('+');
            write_ast(r, 0, out);
            if need {
                out.push(')');
            }
        }
        RegexAst::Concat(l, r) => {
            let need = prec > 1;
            if need {
                out.push('(');
            }
            write_ast(l, 1, out);
            write_ast(r, 1, out);
            if need {
                out.push(')');
            }
        }
        RegexAst::Star(e) => {
            write_ast(e, 2, out);
            out.push('*');
        }
    }
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<Alphabet> {
        Alphabet::from_str_symbols("ab").unwrap()
    }

    #[test]
    fn parses_paper_shapes() {
        let ast = parse_regex("(aa)*b", &ab()).unwrap();
        assert_eq!(
            ast,
            RegexAst::concat(
                RegexAst::star(RegexAst::concat(RegexAst::Symbol('a'), RegexAst::Symbol('a'))),
                RegexAst::Symbol('b'),
            )
        );
        assert_eq!(parse_regex("a", &ab()).unwrap(), RegexAst::Symbol('a'));
        // union binds loosest, star tightest
        let ast = parse_regex("b+ab*a", &ab()).unwrap();
        assert_eq!(
            ast,
            RegexAst::union(
                RegexAst::Symbol('b'),
                RegexAst::concat(
                    RegexAst::concat(RegexAst::Symbol('a'), RegexAst::star(RegexAst::Symbol('b'))),
                    RegexAst::Symbol('a'),
                ),
            )
        );
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse_regex(" a a + b ", &ab()).unwrap(), parse_regex("aa+b", &ab()).unwrap());
    }

    #[test]
    fn reports_errors_with_positions() {
        match parse_regex("a+)", &ab()) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(parse_regex("(ab", &ab()), Err(Error::Syntax { .. })));
        assert!(matches!(parse_regex("", &ab()), Err(Error::Syntax { .. })));
        assert!(matches!(parse_regex("*a", &ab()), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_regex("ac", &ab()),
            Err(Error::UnknownSymbol { symbol: 'c' })
        ));
    }

    #[test]
    fn render_round_trips_through_parse() {
        for src in ["(aa)*b", "b+ab*a", "a+b+c(a+b)*c", "ba+bb+ab*a(a+b)"] {
            let abc = Alphabet::from_str_symbols("abc").unwrap();
            let ast = parse_regex(src, &abc).unwrap();
            let printed = render(&ast);
            assert_eq!(parse_regex(&printed, &abc).unwrap(), ast, "src {src} printed {printed}");
        }
    }
}
