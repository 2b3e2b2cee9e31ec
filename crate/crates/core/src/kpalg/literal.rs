//! Text and JSON forms of algebra elements.
//!
//! Text form: terms such as `3/2 * s[a,f] s[b]*` or `p[v]`, joined by ` + `
//! and ` - `; the zero element is `0`. A term may be any product of the
//! factors `p[v]`, `s[word]` and `s[word]*`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::algebra::KpAlgebra;
use super::element::{KpElement, Monomial};
use super::scalar::{self, Scalar};
use super::KpError;
use crate::kgraph::{KGraph, Path};

fn word(g: &KGraph, p: &Path) -> String {
    p.edges()
        .iter()
        .map(|&e| g.edge_name(e))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render_monomial(g: &KGraph, m: &Monomial) -> String {
    if m.is_vertex() {
        return format!("p[{}]", g.vertex_name(m.mu().range()));
    }
    let mut parts = Vec::new();
    if !m.mu().is_vertex() {
        parts.push(format!("s[{}]", word(g, m.mu())));
    }
    if !m.nu().is_vertex() {
        parts.push(format!("s[{}]*", word(g, m.nu())));
    }
    parts.join(" ")
}

/// Renders `c * body` as a signed term; `first` controls the leading sign.
pub fn render_term(c: &Scalar, body: &str, first: bool) -> String {
    let magnitude = c.abs();
    let sign = match (first, c.is_negative()) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => " + ",
        (false, true) => " - ",
    };
    if magnitude.is_one() {
        format!("{sign}{body}")
    } else {
        format!("{sign}{magnitude} * {body}")
    }
}

pub fn render(g: &KGraph, t: &KpElement) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in t.terms().iter().enumerate() {
        out.push_str(&render_term(c, &render_monomial(g, m), i == 0));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(String),
    Plus,
    Minus,
    Times,
    Factor {
        vertex: bool,
        names: Vec<String>,
        starred: bool,
    },
}

fn tokenize(text: &str) -> Result<Vec<Token>, KpError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let err = |msg: &str, at: usize| KpError::Parse(format!("{msg} at offset {at} in `{text}`"));
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Times);
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            'p' | 's' if chars.get(i + 1) == Some(&'[') => {
                let start = i;
                let close = chars[i + 2..]
                    .iter()
                    .position(|&c| c == ']')
                    .ok_or_else(|| err("unclosed bracket", start))?
                    + i
                    + 2;
                let inner: String = chars[i + 2..close].iter().collect();
                let names: Vec<String> = inner
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect();
                if names.is_empty() {
                    return Err(err("empty brackets", start));
                }
                i = close + 1;
                // a star directly after `]` is the adjoint
                let starred = ch == 's' && chars.get(i) == Some(&'*');
                if starred {
                    i += 1;
                }
                out.push(Token::Factor {
                    vertex: ch == 'p',
                    names,
                    starred,
                });
            }
            _ => return Err(err("unexpected character", i)),
        }
    }
    Ok(out)
}

/// Parses the text form into an element of `alg`.
pub fn parse(alg: &KpAlgebra, text: &str) -> Result<KpElement, KpError> {
    let tokens = tokenize(text)?;
    if tokens == [Token::Number("0".into())] {
        return Ok(alg.zero());
    }
    let g = alg.graph();
    let mut total = alg.zero();
    let mut pos = 0;
    let mut first = true;
    while pos < tokens.len() {
        let mut sign = Scalar::one();
        match tokens[pos] {
            Token::Plus if !first => pos += 1,
            Token::Minus => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(KpError::Parse(format!("expected + or - in `{text}`"))),
        }
        first = false;
        let mut coeff = sign;
        if let Some(Token::Number(n)) = tokens.get(pos) {
            let c =
                scalar::parse(n).ok_or_else(|| KpError::Parse(format!("bad coefficient `{n}`")))?;
            coeff *= c;
            pos += 1;
            if tokens.get(pos) != Some(&Token::Times) {
                return Err(KpError::Parse(format!("expected `*` after `{n}`")));
            }
            pos += 1;
        }
        let mut factors = Vec::new();
        while let Some(Token::Factor {
            vertex,
            names,
            starred,
        }) = tokens.get(pos)
        {
            let f = if *vertex {
                if names.len() != 1 {
                    return Err(KpError::Parse("p[...] takes one vertex".into()));
                }
                alg.vertex(g.vertex_id(&names[0])?)
            } else {
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                let s = alg.path(&g.path_from_names(&refs)?)?;
                if *starred {
                    s.star()
                } else {
                    s
                }
            };
            factors.push(f);
            pos += 1;
        }
        if factors.is_empty() {
            return Err(KpError::Parse(format!(
                "term without generators in `{text}`"
            )));
        }
        let term = alg.product(factors.iter())?;
        total = total.try_add(&term.scale(&coeff))?;
    }
    Ok(total)
}

/// JSON mirror of one term: edge names of `mu` and `nu` plus the common
/// source vertex (which pins down vertex monomials).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub mu: Vec<String>,
    pub nu: Vec<String>,
    pub vertex: String,
}

pub fn to_json(g: &KGraph, t: &KpElement) -> Vec<TermJson> {
    let names = |p: &Path| {
        p.edges()
            .iter()
            .map(|&e| g.edge_name(e).to_string())
            .collect()
    };
    t.terms()
        .iter()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            mu: names(m.mu()),
            nu: names(m.nu()),
            vertex: g.vertex_name(m.mu().source()).to_string(),
        })
        .collect()
}

pub fn from_json(alg: &KpAlgebra, terms: &[TermJson]) -> Result<KpElement, KpError> {
    let g = alg.graph();
    let mut out = alg.zero();
    for t in terms {
        let c = scalar::parse(&t.coeff)
            .ok_or_else(|| KpError::Parse(format!("bad coefficient `{}`", t.coeff)))?;
        let v = g.vertex_id(&t.vertex)?;
        let side = |names: &[String]| -> Result<Path, KpError> {
            if names.is_empty() {
                return Ok(g.vertex_path(v));
            }
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            Ok(g.path_from_names(&refs)?)
        };
        let mono = alg.monomial(side(&t.mu)?, side(&t.nu)?)?;
        if c.is_zero() {
            continue;
        }
        out = out.try_add(&mono.scale(&c))?;
    }
    Ok(out)
}
