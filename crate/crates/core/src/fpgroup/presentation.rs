//! Finitely presented groups and the word parser.

use crate::error::FpError;

/// A letter is `2*g` for generator `g` and `2*g + 1` for its inverse.
pub type Letter = u32;

#[inline]
pub fn inverse_letter(x: Letter) -> Letter {
    x ^ 1
}

pub fn invert_word(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&x| inverse_letter(x)).collect()
}

pub fn free_reduce(w: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&inverse_letter(x)) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn cyclic_reduce(w: &[Letter]) -> Vec<Letter> {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == inverse_letter(w[w.len() - 1]) {
        w.pop();
        w.remove(0);
    }
    w
}

/// Converts a letter word into `(generator, ±1)` pairs.
pub fn word_pairs(w: &[Letter]) -> Vec<(usize, i64)> {
    w.iter()
        .map(|&x| ((x / 2) as usize, if x % 2 == 0 { 1 } else { -1 }))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPresentation {
    names: Vec<String>,
    relators: Vec<Vec<Letter>>,
    reduced: Vec<Vec<Letter>>,
}

impl FpPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Vec<Letter>>) -> Result<Self, FpError> {
        let count = names.len() as u32;
        if relators.iter().flatten().any(|&x| x / 2 >= count) {
            return Err(FpError::Parse("relator uses an undeclared generator".into()));
        }
        let relators: Vec<Vec<Letter>> = relators
            .iter()
            .map(|r| free_reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        let reduced = relators.iter().map(|r| cyclic_reduce(r)).collect();
        Ok(FpPresentation {
            names,
            relators,
            reduced,
        })
    }

    /// Parses `gens a b c` followed by one relator per line (or `;`-separated).
    pub fn parse(text: &str) -> Result<Self, FpError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| FpError::Parse("empty presentation".into()))?;
        let names: Vec<String> = match header.strip_prefix("gens") {
            Some(rest) => rest
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(String::from)
                .collect(),
            None => return Err(FpError::Parse("presentation must start with `gens`".into())),
        };
        let mut relators = Vec::new();
        for line in lines {
            for part in split_top_level(line, ';') {
                let part = part.trim();
                if !part.is_empty() {
                    relators.push(parse_relation(part, &names)?);
                }
            }
        }
        FpPresentation::new(names, relators)
    }

    /// Builds a presentation from generator names and relator strings.
    pub fn from_strings(names: &[&str], relators: &[&str]) -> Result<Self, FpError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| parse_relation(r, &names))
            .collect::<Result<Vec<_>, _>>()?;
        FpPresentation::new(names, rels)
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn relators(&self) -> &[Vec<Letter>] {
        &self.relators
    }

    pub fn cyclically_reduced_relators(&self) -> &[Vec<Letter>] {
        &self.reduced
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<Letter>, FpError> {
        parse_relation(text, &self.names)
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&x| {
                let n = &self.names[(x / 2) as usize];
                if x % 2 == 0 {
                    n.clone()
                } else {
                    format!("{n}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Parses `lhs` or `lhs = rhs` (as `lhs * rhs^-1`).
fn parse_relation(text: &str, names: &[String]) -> Result<Vec<Letter>, FpError> {
    let parts = split_top_level(text, '=');
    match parts.as_slice() {
        [w] => parse_word(w, names),
        [l, r] => {
            let mut w = parse_word(l, names)?;
            w.extend(invert_word(&parse_word(r, names)?));
            Ok(free_reduce(&w))
        }
        _ => Err(FpError::Parse(format!("too many '=' in {text:?}"))),
    }
}

pub(crate) fn parse_word(text: &str, names: &[String]) -> Result<Vec<Letter>, FpError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        names,
    };
    let w = p.word()?;
    if p.pos != p.tokens.len() {
        return Err(FpError::Parse(format!("trailing input in {text:?}")));
    }
    Ok(free_reduce(&w))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, FpError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[s..i].iter().collect()));
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let v: String = chars[s..i].iter().collect();
            out.push(Tok::Int(v.parse().map_err(|_| FpError::Parse(format!("bad integer {v}")))?));
        } else if "*^()[],-".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(FpError::Parse(format!("unexpected character {c:?} in {text:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), FpError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(FpError::Parse(format!("expected {c:?}")))
        }
    }

    fn word(&mut self) -> Result<Vec<Letter>, FpError> {
        let mut w = self.term()?;
        loop {
            if self.eat('*') {
                w.extend(self.term()?);
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Sym('(')) | Some(Tok::Sym('['))) {
                // Juxtaposition also multiplies.
                w.extend(self.term()?);
            } else {
                return Ok(w);
            }
        }
    }

    fn term(&mut self) -> Result<Vec<Letter>, FpError> {
        let mut w = self.factor()?;
        while self.eat('^') {
            let neg = self.eat('-');
            match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    let k = if neg { -k } else { k };
                    w = power(&w, k);
                }
                Some(Tok::Ident(_)) | Some(Tok::Sym('(')) | Some(Tok::Sym('[')) if !neg => {
                    let s = self.factor()?;
                    let mut c = invert_word(&s);
                    c.extend(w);
                    c.extend(s);
                    w = c;
                }
                _ => return Err(FpError::Parse("bad exponent".into())),
            }
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Vec<Letter>, FpError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let g = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or(FpError::UnknownGenerator(name))?;
                Ok(vec![2 * g as u32])
            }
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(vec![])
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let a = self.word()?;
                if self.eat(',') {
                    let b = self.word()?;
                    self.expect(')')?;
                    Ok(commutator(&a, &b))
                } else {
                    self.expect(')')?;
                    Ok(a)
                }
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                Ok(commutator(&a, &b))
            }
            other => Err(FpError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// `[a, b] = a^-1 b^-1 a b`.
fn commutator(a: &[Letter], b: &[Letter]) -> Vec<Letter> {
    let mut w = invert_word(a);
    w.extend(invert_word(b));
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    w
}

fn power(w: &[Letter], k: i64) -> Vec<Letter> {
    let base = if k < 0 { invert_word(w) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_powers_and_commutators() {
        let n = names(&["a", "b", "c"]);
        assert_eq!(parse_word("a^2", &n).unwrap(), vec![0, 0]);
        assert_eq!(parse_word("(a*b)^2", &n).unwrap(), vec![0, 2, 0, 2]);
        assert_eq!(parse_word("[a,b]", &n).unwrap(), vec![1, 3, 0, 2]);
        assert_eq!(parse_word("(a,b)", &n).unwrap(), vec![1, 3, 0, 2]);
        assert_eq!(parse_word("[a,b]*c^-1", &n).unwrap(), vec![1, 3, 0, 2, 5]);
        assert_eq!(parse_word("a^b", &n).unwrap(), vec![3, 0, 2]);
        assert_eq!(parse_word("a*a^-1", &n).unwrap(), Vec::<u32>::new());
    }

    #[test]
    fn relation_with_equals() {
        let n = names(&["x", "y", "s"]);
        assert_eq!(parse_relation("x^s = y", &n).unwrap(), vec![5, 0, 4, 3]);
        assert!(matches!(parse_word("z", &n), Err(FpError::UnknownGenerator(_))));
    }

    #[test]
    fn presentation_file() {
        let p = FpPresentation::parse("gens a b\na^2\nb^3\n(a*b)^5\n").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.format_word(&[0, 3]), "a*b^-1");
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(cyclic_reduce(&[3, 0, 2]), vec![0]);
    }
}
