//! Text grammar for elements: summands like `q^2 E(2) F 1_{-3}` joined by
//! `+` and `-`, with parenthesised Laurent-polynomial coefficients.

use crate::{BasisLabel, UdotElement};
use qring::LaurentPoly;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    UnbalancedParens,
    BadToken(String),
    BadCoefficient(String),
    BadLabel(String),
    MixedWeights,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty element"),
            ParseError::UnbalancedParens => write!(f, "unbalanced parentheses"),
            ParseError::BadToken(t) => write!(f, "unrecognised token `{t}`"),
            ParseError::BadCoefficient(t) => write!(f, "bad coefficient `{t}`"),
            ParseError::BadLabel(t) => write!(f, "malformed label: {t}"),
            ParseError::MixedWeights => {
                write!(f, "summands live in different weight spaces")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Splits at top-level `+`/`-`, leaving signs attached; `-` directly after
/// `^` or `_` is an exponent or weight sign, not a summand boundary.
fn split_summands(s: &str) -> Result<Vec<(i64, String)>, ParseError> {
    let mut parts = Vec::new();
    let mut cur = String::new();
    let mut sign = 1i64;
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '{' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | '}' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError::UnbalancedParens);
                }
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && prev.map_or(true, |p| p != '^' && p != '_') => {
                if cur.trim().is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    parts.push((sign, std::mem::take(&mut cur)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
            }
            _ => cur.push(ch),
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(ParseError::UnbalancedParens);
    }
    if !cur.trim().is_empty() {
        parts.push((sign, cur));
    }
    if parts.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(parts)
}

/// Whitespace-separated tokens, keeping a parenthesised group intact.
fn tokenize(s: &str) -> Result<Vec<String>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_whitespace() {
            i += 1;
        } else if chars[i] == '(' {
            let mut depth = 1;
            let mut buf = String::new();
            let mut j = i + 1;
            while j < chars.len() && depth > 0 {
                match chars[j] {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                if depth > 0 {
                    buf.push(chars[j]);
                }
                j += 1;
            }
            if depth != 0 {
                return Err(ParseError::UnbalancedParens);
            }
            toks.push(format!("({buf})"));
            i = j;
        } else {
            let mut buf = String::new();
            while i < chars.len() && !chars[i].is_whitespace() {
                buf.push(chars[i]);
                i += 1;
            }
            toks.push(buf);
        }
    }
    Ok(toks)
}

/// Integer with optional braces: `3`, `-3`, or `{-3}`.
fn parse_int(s: &str) -> Option<i64> {
    let body = s
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(s);
    body.parse().ok()
}

/// `E` or `E(a)` (resp. `F`), returning the divided power.
fn parse_power(tok: &str, letter: char) -> Option<u32> {
    let rest = tok.strip_prefix(letter)?;
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('(')?
        .strip_suffix(')')?
        .parse()
        .ok()
        .filter(|&a| a > 0)
}

fn parse_summand(sign: i64, body: &str) -> Result<(LaurentPoly, BasisLabel), ParseError> {
    let mut coeff = LaurentPoly::from_int(sign);
    let mut runs: Vec<(char, u32)> = Vec::new();
    let mut weight: Option<i64> = None;
    for tok in tokenize(body)? {
        if weight.is_some() {
            return Err(ParseError::BadLabel(format!(
                "trailing `{tok}` after the idempotent"
            )));
        }
        if let Some(inner) = tok.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let p = LaurentPoly::from_str(inner)
                .map_err(|_| ParseError::BadCoefficient(tok.clone()))?;
            coeff = &coeff * &p;
        } else if tok == "q" {
            coeff = coeff.shifted(1);
        } else if let Some(rest) = tok.strip_prefix("q^") {
            let s = parse_int(rest).ok_or_else(|| ParseError::BadToken(tok.clone()))?;
            coeff = coeff.shifted(s);
        } else if let Some(a) = parse_power(&tok, 'E') {
            runs.push(('E', a));
        } else if let Some(b) = parse_power(&tok, 'F') {
            runs.push(('F', b));
        } else if let Some(rest) = tok.strip_prefix("1_") {
            weight =
                Some(parse_int(rest).ok_or_else(|| ParseError::BadToken(tok.clone()))?);
        } else if let Ok(k) = tok.parse::<i64>() {
            coeff = coeff.scaled(&k.into());
        } else {
            return Err(ParseError::BadToken(tok));
        }
    }
    let n = weight.ok_or_else(|| {
        ParseError::BadLabel("missing idempotent `1_{n}`".to_string())
    })?;
    let label = match runs.as_slice() {
        [] => BasisLabel::idempotent(n),
        [('E', a)] => BasisLabel::ef(*a, 0, n),
        [('F', b)] => BasisLabel::ef(0, *b, n),
        [('E', a), ('F', b)] => BasisLabel::ef(*a, *b, n),
        [('F', b), ('E', a)] => BasisLabel::fe(*a, *b, n),
        _ => {
            return Err(ParseError::BadLabel(
                "expected at most one E(a) and one F(b) factor".to_string(),
            ))
        }
    };
    Ok((coeff, label))
}

/// Raw signed terms of the grammar, in input order.
pub fn parse_terms(s: &str) -> Result<Vec<(LaurentPoly, BasisLabel)>, ParseError> {
    split_summands(s)?
        .into_iter()
        .map(|(sign, body)| parse_summand(sign, &body))
        .collect()
}

/// A single element; all summands must share one weight space.
pub fn parse_element(s: &str) -> Result<UdotElement, ParseError> {
    let terms = parse_terms(s)?;
    let mut out: Option<UdotElement> = None;
    for (coeff, label) in terms {
        let piece = UdotElement::from_label(label, coeff);
        match &mut out {
            None => out = Some(piece),
            Some(acc) => {
                if (acc.src_weight(), acc.dst_weight())
                    != (piece.src_weight(), piece.dst_weight())
                {
                    return Err(ParseError::MixedWeights);
                }
                *acc += &piece;
            }
        }
    }
    out.ok_or(ParseError::Empty)
}

/// A formal sum of elements, grouped by weight space.
pub fn parse_grouped(s: &str) -> Result<Vec<UdotElement>, ParseError> {
    let mut groups: BTreeMap<(i64, i64), UdotElement> = BTreeMap::new();
    for (coeff, label) in parse_terms(s)? {
        let piece = UdotElement::from_label(label, coeff);
        let key = (piece.src_weight(), piece.dst_weight());
        match groups.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(piece);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &piece;
            }
        }
    }
    Ok(groups.into_values().collect())
}
