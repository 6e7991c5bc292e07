//! Graph and length-vector input.
//!
//! Graphs come from a text file (first line `n`, then one `i j` edge per
//! line, `#` starts a comment) or a generator name such as `cyc3:6`,
//! `wedge_k4:5`, `complete:4`, `path:3`, `cycle:5`, `kbip:2,3`, `empty:3` or
//! `bitriangle`.
//!
//! Length vectors are a JSON array in canonical Edge order (integers or
//! rational strings like `"3/2"`), or a sum of summands such as
//! `2*e(0,1) + 1/2*t(0,1,2) - t(1,2,3) + z`. A negative triangle coefficient
//! selects the reflected triangle; `z` is the whole zonotope.

use std::fs;
use std::path::Path;

use num_traits::{Signed, Zero};
use zonocone_core::deformation::{summand_lengths, Summand};
use zonocone_core::{DefCone, Graph, LengthVector, Rational};

use crate::error::{AppError, AppResult};

pub fn parse_graph_text(text: &str) -> AppResult<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines.next().ok_or_else(|| AppError::input("empty graph file"))?;
    let n: usize = first
        .parse()
        .map_err(|_| AppError::input(format!("line {line}: expected the vertex count, got {first:?}")))?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = parts[..] else {
            return Err(AppError::input(format!("line {line}: expected `i j`, got {l:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| AppError::input(format!("line {line}: bad vertex {s:?}")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Ok(Graph::new(n, edges)?)
}

pub fn parse_generator(spec: &str) -> AppResult<Graph> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let nums = || -> AppResult<Vec<usize>> {
        args.split(',')
            .map(|a| {
                a.trim()
                    .parse()
                    .map_err(|_| AppError::input(format!("bad argument {a:?} in {spec:?}")))
            })
            .collect()
    };
    let one = || -> AppResult<usize> {
        match nums()?[..] {
            [n] => Ok(n),
            _ => Err(AppError::input(format!("{name} takes one argument"))),
        }
    };
    let g = match name {
        "bitriangle" | "bi_triangle" if args.is_empty() => Graph::bi_triangle(),
        "complete" | "k" => Graph::complete(one()?)?,
        "path" => Graph::path(one()?)?,
        "cycle" => Graph::cycle(one()?)?,
        "empty" => Graph::empty(one()?)?,
        "cyc3" => Graph::cyc3(one()?)?,
        "wedge_k4" => Graph::wedge_k4(one()?)?,
        "kbip" => match nums()?[..] {
            [a, b] => Graph::complete_bipartite(a, b)?,
            _ => return Err(AppError::input("kbip takes two arguments, as in kbip:2,3")),
        },
        _ => return Err(AppError::input(format!("unknown graph {spec:?}"))),
    };
    Ok(g)
}

/// A graph file if `spec` names an existing file, a generator otherwise.
pub fn load_graph(spec: &str) -> AppResult<Graph> {
    if Path::new(spec).is_file() {
        parse_graph_text(&read(spec)?)
    } else {
        parse_generator(spec)
    }
}

pub fn read(path: &str) -> AppResult<String> {
    fs::read_to_string(path).map_err(|source| AppError::Io {
        path: path.to_string(),
        source,
    })
}

pub fn parse_rational(s: &str) -> AppResult<Rational> {
    let s = s.trim();
    let bad = || AppError::input(format!("bad number {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Lengths from a file or inline text, as a JSON array or a summand sum.
pub fn load_lengths(dc: &DefCone, arg: &str) -> AppResult<LengthVector> {
    let text = if Path::new(arg).is_file() { read(arg)? } else { arg.to_string() };
    let text = text.trim();
    let l = if text.starts_with('[') {
        parse_length_array(text)?
    } else {
        parse_length_expr(dc, text)?
    };
    dc.check_len(&l)?;
    Ok(l)
}

pub fn parse_length_array(text: &str) -> AppResult<LengthVector> {
    let values: Vec<serde_json::Value> = serde_json::from_str(text)?;
    values
        .iter()
        .map(|v| match v {
            serde_json::Value::String(s) => parse_rational(s),
            serde_json::Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or(0).into())),
            other => Err(AppError::input(format!("length {other} is not an integer or rational string"))),
        })
        .collect::<AppResult<Vec<_>>>()
        .map(LengthVector::new)
}

pub fn parse_length_expr(dc: &DefCone, text: &str) -> AppResult<LengthVector> {
    let mut total = LengthVector::zeros(dc.ambient_dim());
    for (coef, summand) in parse_terms(text)? {
        let (kind, coef) = match summand {
            Term::Zonotope => (Summand::Zonotope, coef),
            Term::Edge(i, j) => (Summand::Segment([i, j]), coef),
            Term::Triangle(a, b, c) if coef.is_negative() => (Summand::MinusTriangle([a, b, c]), -coef),
            Term::Triangle(a, b, c) => (Summand::PlusTriangle([a, b, c]), coef),
        };
        if coef.is_negative() {
            return Err(AppError::input(format!("negative coefficient on {kind:?}")));
        }
        total = &total + &summand_lengths(dc.edges(), kind)?.scaled(&coef);
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Term {
    Zonotope,
    Edge(usize, usize),
    Triangle(usize, usize, usize),
}

fn parse_terms(text: &str) -> AppResult<Vec<(Rational, Term)>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(AppError::input("empty length expression"));
    }
    // Split at top-level signs, keeping the sign with its term.
    let mut terms = Vec::new();
    let mut start = 0;
    let mut depth = 0;
    for (i, c) in compact.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > start => {
                terms.push(&compact[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    terms.push(&compact[start..]);
    terms.into_iter().map(parse_term).collect()
}

fn parse_term(raw: &str) -> AppResult<(Rational, Term)> {
    let bad = || AppError::input(format!("cannot parse term {raw:?}"));
    let (negative, body) = match raw.as_bytes().first() {
        Some(b'-') => (true, &raw[1..]),
        Some(b'+') => (false, &raw[1..]),
        _ => (false, raw),
    };
    let (coef, atom) = match body.split_once('*') {
        Some((c, a)) => (parse_rational(c)?, a),
        None => (Rational::from_integer(1.into()), body),
    };
    let coef = if negative { -coef } else { coef };
    let args = |prefix: &str| -> AppResult<Vec<usize>> {
        let inner = atom
            .strip_prefix(prefix)
            .and_then(|a| a.strip_prefix('('))
            .and_then(|a| a.strip_suffix(')'))
            .ok_or_else(bad)?;
        inner.split(',').map(|v| v.parse().map_err(|_| bad())).collect()
    };
    let term = match atom.chars().next() {
        Some('z') if atom == "z" => Term::Zonotope,
        Some('e') => match args("e")?[..] {
            [i, j] => Term::Edge(i, j),
            _ => return Err(bad()),
        },
        Some('t') => match args("t")?[..] {
            [a, b, c] => Term::Triangle(a, b, c),
            _ => return Err(bad()),
        },
        _ => return Err(bad()),
    };
    Ok((coef, term))
}

/// Expression-syntax name of a summand: `e(0,1)`, `+t(0,1,2)`, `-t(0,1,2)`
/// or `z`.
pub fn summand_name(s: Summand) -> String {
    match s {
        Summand::Segment([i, j]) => format!("e({i},{j})"),
        Summand::PlusTriangle([a, b, c]) => format!("+t({a},{b},{c})"),
        Summand::MinusTriangle([a, b, c]) => format!("-t({a},{b},{c})"),
        Summand::Zonotope => "z".to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zonocone_core::Limits;

    #[test]
    fn graph_text_with_comments() {
        let g = parse_graph_text("# triangle\n3\n0 1\n1 2 # last two\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert!(parse_graph_text("").is_err());
        assert!(parse_graph_text("3\n0 1 2\n").is_err());
        assert!(parse_graph_text("3\n0 3\n").is_err());
    }

    #[test]
    fn generators() {
        assert_eq!(parse_generator("complete:4").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_generator("kbip:2,3").unwrap(), Graph::complete_bipartite(2, 3).unwrap());
        assert_eq!(parse_generator("bitriangle").unwrap(), Graph::bi_triangle());
        assert_eq!(parse_generator("cyc3:5").unwrap(), Graph::cyc3(5).unwrap());
        for bad in ["nope", "complete", "complete:x", "kbip:2", "cycle:2", "cyc3:3"] {
            assert!(parse_generator(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn length_expressions() {
        let dc = DefCone::new(&Graph::complete(3).unwrap(), &Limits::default()).unwrap();
        let plus_minus = parse_length_expr(&dc, "t(0,1,2) + 1*t(0,1,2) - 2*t(2,1,0)").unwrap();
        let z = parse_length_expr(&dc, "2 * z").unwrap();
        assert_eq!(plus_minus, z);
        let seg = parse_length_expr(&dc, "3/2*e(1,0)").unwrap();
        assert_eq!(seg, parse_length_array(r#"["3/2", "3/2", 0, 0, 0, 0]"#).unwrap());
        for bad in ["", "-e(0,1)", "e(0,3)", "t(0,1)", "x", "2*", "1/0*z"] {
            assert!(parse_length_expr(&dc, bad).is_err(), "{bad}");
        }
    }
}
