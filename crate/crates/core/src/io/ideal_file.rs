//! The `.ideal` text format.
//!
//! ```text
//! # comment
//! ring x1 x2 x3
//! gens x1*x2, x2^2*x3
//! gens x1*x3
//! ```
//!
//! Exactly one `ring` line, before any `gens` line, declares the ordered
//! variables. Each `gens` line holds one or more comma-separated monomials;
//! a monomial is `*`-separated factors `name` or `name^exp`, and repeated
//! factors multiply. The grammar is in `docs/formats.md`.

use crate::error::{Error, ParseError, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.text[..self.pos].chars().count() + 1, msg)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == ' ' || c == '\t' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> std::result::Result<&'a str, ParseError> {
        let start = self.pos;
        let mut chars = self.text[start..].char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            Some((_, c)) => return Err(self.err(format!("expected a variable name, found '{c}'"))),
            None => return Err(self.err("expected a variable name, found end of line")),
        }
        let len = chars
            .find(|(_, c)| !(c.is_ascii_alphanumeric() || *c == '_'))
            .map_or(self.text.len() - start, |(i, _)| i);
        self.pos = start + len;
        Ok(&self.text[start..start + len])
    }

    fn uint(&mut self) -> std::result::Result<u64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a nonnegative integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(self.line, start + 1, "integer out of range"))
    }
}

/// Parses an ideal document; redundant generators are dropped with a warning.
pub fn parse_ideal(doc: &str) -> Result<ParsedIdeal> {
    let mut names: Option<Vec<String>> = None;
    let mut gens: Vec<Monomial> = Vec::new();
    for (idx, raw) in doc.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor {
            line: idx + 1,
            text: content,
            pos: 0,
        };
        cur.skip_ws();
        if cur.at_end() {
            continue;
        }
        let keyword_at = cur.pos;
        let keyword = cur.ident()?;
        match keyword {
            "ring" => {
                if names.is_some() {
                    return Err(ParseError::new(cur.line, keyword_at + 1, "duplicate ring line").into());
                }
                names = Some(parse_ring(&mut cur)?);
            }
            "gens" => {
                let Some(vars) = names.as_ref() else {
                    return Err(ParseError::new(cur.line, keyword_at + 1, "gens line before ring line").into());
                };
                parse_gens(&mut cur, vars, &mut gens)?;
            }
            other => {
                return Err(ParseError::new(
                    cur.line,
                    keyword_at + 1,
                    format!("unknown directive '{other}' (expected 'ring' or 'gens')"),
                )
                .into())
            }
        }
    }
    let Some(names) = names else {
        return Err(ParseError::new(1, 1, "missing ring line").into());
    };
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let given = gens.len();
    let ideal = MonomialIdeal::with_names(gens, names)?;
    let mut warnings = Vec::new();
    if ideal.generator_count() < given {
        warnings.push(format!(
            "{} redundant generator(s) removed; {} minimal generator(s) remain",
            given - ideal.generator_count(),
            ideal.generator_count()
        ));
    }
    Ok(ParsedIdeal { ideal, warnings })
}

fn parse_ring(cur: &mut Cursor<'_>) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    loop {
        cur.skip_ws();
        cur.eat(',');
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
        let at = cur.pos;
        let name = cur.ident()?;
        if names.iter().any(|n| n == name) {
            return Err(ParseError::new(cur.line, at + 1, format!("variable '{name}' declared twice")).into());
        }
        names.push(name.to_string());
    }
    if names.is_empty() {
        return Err(cur.err("ring line declares no variables").into());
    }
    if names.len() > 64 {
        return Err(cur.err("at most 64 variables are supported").into());
    }
    Ok(names)
}

fn parse_gens(cur: &mut Cursor<'_>, vars: &[String], out: &mut Vec<Monomial>) -> Result<()> {
    loop {
        cur.skip_ws();
        out.push(parse_monomial(cur, vars)?);
        cur.skip_ws();
        if cur.at_end() {
            return Ok(());
        }
        if !cur.eat(',') {
            return Err(cur.err("expected ',' or '*' between factors").into());
        }
    }
}

fn parse_monomial(cur: &mut Cursor<'_>, vars: &[String]) -> Result<Monomial> {
    let start = cur.pos;
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let v = cur.uint()?;
        return Err(if v == 1 {
            ParseError::new(cur.line, start + 1, "unit ideal: generator '1'").into()
        } else {
            ParseError::new(cur.line, start + 1, "coefficients are not allowed in monomials").into()
        });
    }
    let mut exps = vec![0u16; vars.len()];
    loop {
        cur.skip_ws();
        let at = cur.pos;
        let name = cur.ident()?;
        let Some(v) = vars.iter().position(|n| n == name) else {
            return Err(ParseError::new(cur.line, at + 1, format!("undeclared variable '{name}'")).into());
        };
        cur.skip_ws();
        let e = if cur.eat('^') {
            cur.skip_ws();
            cur.uint()?
        } else {
            1
        };
        exps[v] = u64::from(exps[v])
            .checked_add(e)
            .and_then(|x| u16::try_from(x).ok())
            .ok_or_else(|| ParseError::new(cur.line, at + 1, "exponent overflow"))?;
        cur.skip_ws();
        if !cur.eat('*') {
            break;
        }
    }
    Ok(Monomial::new(exps))
}

/// Serializes an ideal as a document accepted by [`parse_ideal`].
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let names = ideal.var_names();
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| g.display_with(names).to_string())
        .collect();
    format!("ring {}\ngens {}\n", names.join(" "), gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    const FIVE_CUBICS: &str = "\
# five cubics in nine variables
ring x1 x2 x3 x4 x5 x6 x7 x8 x9
gens x3*x4*x5, x1*x6*x7, x3*x6*x8
gens x1*x5*x9,   x2 * x8 * x9   # trailing comment
";

    #[test]
    fn five_cubics_document() {
        let p = parse_ideal(FIVE_CUBICS).unwrap();
        assert_eq!(p.ideal, examples::five_cubics());
        assert_eq!(p.ideal.equigenerated_degree().unwrap(), 3);
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn redundancy_warning() {
        let p = parse_ideal("ring x y\ngens x*y, x*x*y\n").unwrap();
        assert_eq!(p.ideal.generator_count(), 1);
        assert_eq!(p.warnings.len(), 1);
        let q = parse_ideal("ring x y\ngens x^2*y, x*y^3\n").unwrap();
        assert_eq!(q.ideal.generators()[0].exponents(), &[2, 1]);
    }

    #[test]
    fn errors_carry_positions() {
        let Err(Error::Parse(e)) = parse_ideal("ring x y\ngens x*z\n") else {
            panic!("expected a parse error");
        };
        assert_eq!((e.line, e.column), (2, 8));
        assert!(e.message.contains("'z'"));

        let Err(Error::Parse(e)) = parse_ideal("ring x y\ngens x*, y\n") else {
            panic!("expected a parse error");
        };
        assert_eq!(e.line, 2);

        let Err(Error::Parse(e)) = parse_ideal("ring x y\ngens 1\n") else {
            panic!("expected a parse error");
        };
        assert!(e.message.contains("unit"));

        assert!(matches!(parse_ideal("gens x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("ring x x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("ring x\nring y\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("ring x\nfoo x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("ring x\ngens x^70000\n"), Err(Error::Parse(_))));
        assert_eq!(parse_ideal("ring x y\n").unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn write_then_parse() {
        for ideal in [examples::five_cubics(), examples::sturmfels(), examples::maximal(3)] {
            let doc = write_ideal(&ideal.power(2).unwrap());
            assert_eq!(parse_ideal(&doc).unwrap().ideal, ideal.power(2).unwrap());
        }
    }
}
