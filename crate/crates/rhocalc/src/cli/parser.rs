//! Recursive-descent parser for the expression DSL, point literals and
//! domain literals.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := base ('^' rational)?
//! base   := number | 'rho' | 's' | ident | ident '(' expr ')' | '(' expr ')' | '-' base
//! ```
//!
//! `s` and `rho` are synonyms for the scale. A rational exponent is a bare
//! integer or a parenthesized `(p/q)`; `x^1/2` is rejected with a hint to
//! write `x^(1/2)`. Division desugars to multiplication by an integer power
//! `^(-1)`, `sqrt(e)` to `e^(1/2)`, and `delta`/`heaviside` to their kernel
//! expressions.

use crate::asymfunc::{delta_expr, heaviside_expr, Expr};
use crate::asymvec::DomainSpec;
use crate::error::{Error, Result};
use crate::lcfield::{AsymptoticScalar, Exponent, PrimitiveId};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eq,
    End,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut line_start = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i - line_start + 1;
        let single = |t: Tok| Spanned { tok: t, line, col };
        match c {
            '\n' => {
                line += 1;
                i += 1;
                line_start = i;
            }
            ' ' | '\t' | '\r' => i += 1,
            '+' => {
                out.push(single(Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push(single(Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push(single(Tok::Star));
                i += 1;
            }
            '/' => {
                out.push(single(Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push(single(Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push(single(Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push(single(Tok::RParen));
                i += 1;
            }
            ',' => {
                out.push(single(Tok::Comma));
                i += 1;
            }
            '=' => {
                out.push(single(Tok::Eq));
                i += 1;
            }
            _ if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                // exponent part of a float literal
                if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text: String = chars[start..i].iter().collect();
                let value = text.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or(
                    Error::Syntax {
                        line,
                        col,
                        msg: format!("malformed number `{text}`"),
                    },
                )?;
                out.push(Spanned { tok: Tok::Num(value), line, col });
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Spanned { tok: Tok::Ident(text), line, col });
            }
            _ => {
                return Err(Error::Syntax {
                    line,
                    col,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    let col = chars.len() - line_start + 1;
    out.push(Spanned { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        (self.toks[self.pos].line, self.toks[self.pos].col)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Syntax { line, col, msg: msg.into() }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    // source text is preserved verbatim: no zero/one collapsing here, so
    // an input like `0/0` still reaches the evaluator and errors
    fn expr(&mut self) -> Result<Arc<Expr>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Arc::new(Expr::Add(acc, self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = Expr::neg(self.term()?);
                    acc = Arc::new(Expr::Add(acc, rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Arc<Expr>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = Arc::new(Expr::Mul(acc, self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = Arc::new(Expr::Mul(acc, Expr::pow(rhs, Exponent::integer(-1))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Arc<Expr>> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let q = self.rational_exponent()?;
        // collapse powers of the scale to a single node
        if let Expr::RhoPow(p) = base.as_ref() {
            return Ok(Expr::rho_pow(p.checked_mul(&q)?));
        }
        Ok(Expr::pow(base, q))
    }

    fn rational_exponent(&mut self) -> Result<Exponent> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let num = self.bounded_integer()?;
            let den = if *self.peek() == Tok::Slash {
                self.bump();
                self.bounded_integer()?
            } else {
                1
            };
            self.expect(Tok::RParen, "`)` after rational exponent")?;
            return Exponent::new(num, den);
        }
        let num = self.bounded_integer()?;
        if *self.peek() == Tok::Slash {
            return Err(self.error(
                "fractional exponents need parentheses: write ^(p/q)".to_string(),
            ));
        }
        Ok(Exponent::integer(num))
    }

    fn bounded_integer(&mut self) -> Result<i64> {
        let n = self.signed_integer()?;
        if n.abs() > 10_000 {
            return Err(self.error("exponent magnitude is limited to 10000"));
        }
        Ok(n)
    }

    fn signed_integer(&mut self) -> Result<i64> {
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            Tok::Num(v) if v.fract() == 0.0 => {
                let n = v as i64;
                Ok(if negative { -n } else { n })
            }
            _ => Err(self.error("expected an integer")),
        }
    }

    fn base(&mut self) -> Result<Arc<Expr>> {
        match self.bump() {
            Tok::Num(v) => Ok(Expr::real(v)),
            Tok::Minus => Ok(Expr::neg(self.base()?)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => self.ident(name),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.error("expected a number, identifier or `(`"))
            }
        }
    }

    fn ident(&mut self, name: String) -> Result<Arc<Expr>> {
        // variables and the scale never take arguments
        match name.as_str() {
            "s" | "rho" => return Ok(Expr::rho_pow(Exponent::ONE)),
            "x" => return Ok(Expr::var(0)),
            "y" => return Ok(Expr::var(1)),
            "z" => return Ok(Expr::var(2)),
            _ => {}
        }
        if *self.peek() != Tok::LParen {
            return Err(self.error(format!("unknown identifier `{name}`")));
        }
        self.expect(Tok::LParen, &format!("`(` after function `{name}`"))?;
        let arg = self.expr()?;
        self.expect(Tok::RParen, "`)` closing the argument")?;
        match name.as_str() {
            "sqrt" => Ok(Expr::pow(arg, Exponent::new(1, 2).expect("1/2 is valid"))),
            "delta" => Ok(delta_expr(arg)),
            "heaviside" => Ok(heaviside_expr(arg)),
            _ => match PrimitiveId::parse(&name) {
                Some(p) => Ok(Expr::comp(p, arg)),
                None => Err(self.error(format!("unknown function `{name}`"))),
            },
        }
    }
}

/// Parses a DSL expression.
pub fn parse_expr(src: &str) -> Result<Arc<Expr>> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a point literal like `x=0.5+1*s^2, y=0`. Each right-hand side is
/// a variable-free series expression; its exponent-0 coefficient becomes the
/// standard part and the rest the infinitesimal displacement.
pub fn parse_point(src: &str, order: Exponent) -> Result<Vec<(usize, AsymptoticScalar)>> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let mut out = Vec::new();
    loop {
        let name = match p.bump() {
            Tok::Ident(n) => n,
            _ => return Err(p.error("expected a coordinate name")),
        };
        let index = match name.as_str() {
            "x" => 0,
            "y" => 1,
            "z" => 2,
            _ => return Err(p.error(format!("unknown coordinate `{name}`"))),
        };
        p.expect(Tok::Eq, "`=` after the coordinate name")?;
        let expr = p.expr()?;
        if expr.arity() > 0 {
            return Err(p.error("point coordinates must not reference variables"));
        }
        let value = eval_variable_free(&expr, order)?;
        out.push((index, value));
        match p.bump() {
            Tok::Comma => continue,
            Tok::End => break,
            _ => return Err(p.error("expected `,` or end of the point literal")),
        }
    }
    Ok(out)
}

fn eval_variable_free(expr: &Arc<Expr>, order: Exponent) -> Result<AsymptoticScalar> {
    use crate::asymfunc::AsymptoticFunction;
    use crate::asymvec::AsymptoticPoint;
    let dom = DomainSpec::full(1);
    let f = AsymptoticFunction::new(expr.clone(), dom.clone())?;
    let at = AsymptoticPoint::standard(vec![0.0], &dom, order)?;
    let v = f.evaluate(&at)?;
    if !v.is_real() {
        return Err(Error::InvalidArgument("point coordinates must be real".into()));
    }
    Ok(v.re().clone())
}

/// Parses a domain literal: `full(d)`, `box(a,b[;c,d...])`,
/// `ball(c1,..,cd;r)`, `annulus(cx,cy;r1,r2)` or `union(D|D)`.
pub fn parse_domain(src: &str) -> Result<DomainSpec> {
    let src = src.trim();
    let open = src.find('(').ok_or_else(|| bad_domain(src, "missing `(`"))?;
    if !src.ends_with(')') {
        return Err(bad_domain(src, "missing closing `)`"));
    }
    let head = &src[..open];
    let body = &src[open + 1..src.len() - 1];
    match head {
        "full" => {
            let d: usize = body
                .trim()
                .parse()
                .map_err(|_| bad_domain(src, "dimension must be a positive integer"))?;
            if d == 0 || d > 3 {
                return Err(bad_domain(src, "dimension must be between 1 and 3"));
            }
            Ok(DomainSpec::full(d))
        }
        "box" => {
            let mut lo = Vec::new();
            let mut hi = Vec::new();
            for side in body.split(';') {
                let (a, b) = pair(side).ok_or_else(|| bad_domain(src, "box sides are `lo,hi`"))?;
                if a >= b {
                    return Err(bad_domain(src, "box sides must satisfy lo < hi"));
                }
                lo.push(a);
                hi.push(b);
            }
            Ok(DomainSpec::open_box(lo, hi))
        }
        "ball" => {
            let (center, rest) = split_last(body)
                .ok_or_else(|| bad_domain(src, "ball is `c1,..,cd;r`"))?;
            let radius =
                rest.trim().parse().map_err(|_| bad_domain(src, "malformed radius"))?;
            if radius <= 0.0 {
                return Err(bad_domain(src, "radius must be positive"));
            }
            Ok(DomainSpec::open_ball(center, radius))
        }
        "annulus" => {
            let (center, rest) = split_last(body)
                .ok_or_else(|| bad_domain(src, "annulus is `cx,cy;r1,r2`"))?;
            if center.len() != 2 {
                return Err(bad_domain(src, "annulus centers are two-dimensional"));
            }
            let (r1, r2) =
                pair(rest).ok_or_else(|| bad_domain(src, "annulus radii are `r1,r2`"))?;
            if !(0.0 < r1 && r1 < r2) {
                return Err(bad_domain(src, "annulus radii must satisfy 0 < r1 < r2"));
            }
            Ok(DomainSpec::annulus(center, r1, r2))
        }
        "union" => {
            let split = top_level_bar(body)
                .ok_or_else(|| bad_domain(src, "union is `union(D|D)`"))?;
            let a = parse_domain(&body[..split])?;
            let b = parse_domain(&body[split + 1..])?;
            if a.dim() != b.dim() {
                return Err(bad_domain(src, "union parts must share a dimension"));
            }
            Ok(DomainSpec::union(a, b))
        }
        _ => Err(bad_domain(src, "unknown domain kind")),
    }
}

fn bad_domain(src: &str, msg: &str) -> Error {
    Error::InvalidArgument(format!("malformed domain `{src}`: {msg}"))
}

fn pair(s: &str) -> Option<(f64, f64)> {
    let mut it = s.split(',');
    let a = it.next()?.trim().parse().ok()?;
    let b = it.next()?.trim().parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Splits `c1,..,cd;rest` into the coordinate list and the tail.
fn split_last(s: &str) -> Option<(Vec<f64>, &str)> {
    let semi = s.find(';')?;
    let coords: Option<Vec<f64>> =
        s[..semi].split(',').map(|p| p.trim().parse().ok()).collect();
    Some((coords?, &s[semi + 1..]))
}

fn top_level_bar(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '|' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymfunc::{AsymptoticFunction, ExprGen};
    use crate::asymvec::AsymptoticPoint;
    use crate::lcfield::default_order;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;

    #[test]
    fn parses_powers_of_kernels() {
        let e = parse_expr("delta(x)^2").unwrap();
        assert!(matches!(e.as_ref(), Expr::Pow(base, q)
            if *q == Exponent::integer(2) && matches!(base.as_ref(), Expr::Mul(..))));
    }

    #[test]
    fn bare_fractional_exponents_are_rejected() {
        let err = parse_expr("exp(x)+s^1/2").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, col: 11, .. }), "{err:?}");
        assert!(parse_expr("exp(x)+s^(1/2)").is_ok());
    }

    #[test]
    fn trig_sum_has_two_primitive_nodes() {
        let e = parse_expr("sin(x)^2+cos(x)^2").unwrap();
        fn count_comps(e: &Expr) -> usize {
            match e {
                Expr::Comp(_, a) => 1 + count_comps(a),
                Expr::Add(a, b) | Expr::Mul(a, b) => count_comps(a) + count_comps(b),
                Expr::Pow(a, _) => count_comps(a),
                _ => 0,
            }
        }
        assert_eq!(count_comps(&e), 2);
    }

    #[test]
    fn division_desugars_to_inverse_powers() {
        let e = parse_expr("1/(1-s)").unwrap();
        let f = AsymptoticFunction::new(e, DomainSpec::full(1)).unwrap();
        let p = AsymptoticPoint::standard(vec![0.0], &DomainSpec::full(1), default_order())
            .unwrap();
        let v = f.evaluate(&p).unwrap();
        for k in 0..10 {
            assert!((v.re().coeff_at(Exponent::integer(k)) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn negative_scale_powers_parse_both_ways() {
        for src in ["s^-1", "s^(-1)"] {
            let e = parse_expr(src).unwrap();
            assert!(matches!(e.as_ref(), Expr::RhoPow(q) if *q == Exponent::integer(-1)));
        }
    }

    #[test]
    fn rho_and_s_are_synonyms() {
        let a = parse_expr("rho^2").unwrap();
        let b = parse_expr("s^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sqrt_desugars_to_a_half_power() {
        let e = parse_expr("sqrt(1+s)").unwrap();
        assert!(matches!(e.as_ref(), Expr::Pow(_, q) if *q == Exponent::new(1, 2).unwrap()));
    }

    #[test]
    fn point_literals_follow_the_standard_plus_series_shape() {
        let order = default_order();
        let bindings = parse_point("x=0.5+1*s^2, y=0", order).unwrap();
        assert_eq!(bindings.len(), 2);
        assert_eq!(bindings[0].0, 0);
        assert_eq!(bindings[0].1.standard_part(), 0.5);
        assert_eq!(bindings[0].1.coeff_at(Exponent::integer(2)), 1.0);
        assert_eq!(bindings[1].0, 1);
        assert!(bindings[1].1.is_null());
    }

    #[test]
    fn domain_literals() {
        assert_eq!(parse_domain("full(2)").unwrap().dim(), 2);
        let b = parse_domain("box(-2,2;-1,1)").unwrap();
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&[0.0, 0.5]));
        assert!(!b.contains(&[0.0, 1.5]));
        let a = parse_domain("annulus(0,0;1,2)").unwrap();
        assert!(a.contains(&[1.5, 0.0]));
        assert!(!a.contains(&[0.5, 0.0]));
        let u = parse_domain("union(box(0,1)|box(2,3))").unwrap();
        assert!(!u.arcwise_connected());
        assert!(parse_domain("ball(1,1;0.5)").unwrap().contains(&[1.1, 1.2]));
        assert!(parse_domain("box(2,1)").is_err());
        assert!(parse_domain("triangle(1,2,3)").is_err());
    }

    #[test]
    fn printed_trees_reparse_with_identical_values() {
        let dom = DomainSpec::full(1);
        let mut gen = ExprGen::new(1618, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..25 {
            let original = gen.expr();
            let printed = original.to_string();
            let reparsed = parse_expr(&printed)
                .unwrap_or_else(|e| panic!("`{printed}` failed to reparse: {e}"));
            let f = AsymptoticFunction::new(original, dom.clone()).unwrap();
            let g = AsymptoticFunction::new(reparsed, dom.clone()).unwrap();
            for _ in 0..10 {
                let x = rng.gen_range(-2.0..2.0);
                let p = AsymptoticPoint::standard(vec![x], &dom, default_order()).unwrap();
                let a = f.evaluate(&p).unwrap();
                let b = g.evaluate(&p).unwrap();
                assert_eq!(a, b, "diverged at {x} for `{printed}`");
            }
        }
    }
}
