//! A small expression grammar for entering rational forms as text.
//!
//! Accepted syntax: integer literals, the series variable `z`, grading
//! variables `t1, t2, ...` (with `u1, u2, ...` as synonyms for the same
//! variables), parentheses, `+`, `-`, `*`, `/` and `^` with nonnegative
//! integer exponents. Every expression denotes an exact rational form.
//!
//! Division is structural: a divisor must multiply out into scalar
//! constants and factors of the shape `1 - monomial * z^k` with
//! `k >= 1`, possibly raised to powers, since those are the only
//! denominators a rational form carries. Anything else is reported as a
//! parse error with the byte offset of the offending piece.

use crate::error::{Error, Result};
use crate::polyring::{rat_pow, DenomFactor, Rat, RationalForm, TPoly, ZPoly};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn parse_err<T>(msg: impl Into<String>, offset: usize) -> Result<T> {
    Err(Error::Parse {
        msg: msg.into(),
        offset,
    })
}

fn tokenize(input: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, start));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, start));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, start));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, start));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, start));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, start));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, start));
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let value: BigInt = input[i..j].parse().expect("digit run");
                toks.push((Tok::Int(value), start));
                i = j;
            }
            'z' => {
                toks.push((Tok::Z, start));
                i += 1;
            }
            't' | 'u' => {
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == i + 1 {
                    return parse_err(
                        format!("expected a variable index after '{c}'"),
                        start,
                    );
                }
                let index: usize = match input[i + 1..j].parse() {
                    Ok(n) => n,
                    Err(_) => return parse_err("variable index is too large", start),
                };
                if index == 0 {
                    return parse_err("variable indices start at 1", start);
                }
                toks.push((Tok::Var(index - 1), start));
                i = j;
            }
            _ => return parse_err(format!("unexpected character '{c}'"), start),
        }
    }
    Ok(toks)
}

struct Node {
    kind: NodeKind,
    start: usize,
}

enum NodeKind {
    Int(BigInt),
    Var(usize),
    Z,
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, u32),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    let start = lhs.start;
                    lhs = Node {
                        kind: NodeKind::Add(Box::new(lhs), Box::new(rhs)),
                        start,
                    };
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    let start = lhs.start;
                    lhs = Node {
                        kind: NodeKind::Sub(Box::new(lhs), Box::new(rhs)),
                        start,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    let start = lhs.start;
                    lhs = Node {
                        kind: NodeKind::Mul(Box::new(lhs), Box::new(rhs)),
                        start,
                    };
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.unary()?;
                    let start = lhs.start;
                    lhs = Node {
                        kind: NodeKind::Div(Box::new(lhs), Box::new(rhs)),
                        start,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Node> {
        if let Some(Tok::Minus) = self.peek() {
            let (_, start) = self.bump();
            let inner = self.unary()?;
            return Ok(Node {
                kind: NodeKind::Neg(Box::new(inner)),
                start,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let off = self.offset();
            match self.peek() {
                Some(Tok::Int(_)) => {
                    let (tok, _) = self.bump();
                    let Tok::Int(n) = tok else { unreachable!() };
                    let Some(exp) = n.to_u32() else {
                        return parse_err("exponent is too large", off);
                    };
                    let start = base.start;
                    return Ok(Node {
                        kind: NodeKind::Pow(Box::new(base), exp),
                        start,
                    });
                }
                _ => return parse_err("expected a nonnegative integer exponent", off),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node> {
        let off = self.offset();
        match self.peek() {
            Some(Tok::Int(_)) => {
                let (tok, start) = self.bump();
                let Tok::Int(n) = tok else { unreachable!() };
                Ok(Node {
                    kind: NodeKind::Int(n),
                    start,
                })
            }
            Some(Tok::Var(_)) => {
                let (tok, start) = self.bump();
                let Tok::Var(i) = tok else { unreachable!() };
                Ok(Node {
                    kind: NodeKind::Var(i),
                    start,
                })
            }
            Some(Tok::Z) => {
                let (_, start) = self.bump();
                Ok(Node {
                    kind: NodeKind::Z,
                    start,
                })
            }
            Some(Tok::LParen) => {
                let (_, start) = self.bump();
                let mut inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        inner.start = start;
                        Ok(inner)
                    }
                    _ => parse_err("expected ')'", self.offset()),
                }
            }
            Some(_) => parse_err("expected a number, variable, 'z' or '('", off),
            None => parse_err("unexpected end of input", off),
        }
    }
}

struct Eval {
    nvars: usize,
}

/// A divisor atom after multiplying the divisor out: either a nonzero
/// scalar or a single denominator factor.
enum Divisor {
    Scalar(Rat),
    Factor(DenomFactor),
}

impl Eval {
    fn eval(&self, node: &Node) -> Result<RationalForm> {
        match &node.kind {
            NodeKind::Int(n) => Ok(RationalForm::constant(
                self.nvars,
                Rat::from_integer(n.clone()),
            )),
            NodeKind::Var(i) => {
                if *i >= self.nvars {
                    return parse_err(
                        format!(
                            "variable t{} is out of range for {} variable(s)",
                            i + 1,
                            self.nvars
                        ),
                        node.start,
                    );
                }
                Ok(RationalForm::from_zpoly(ZPoly::from_coeffs(
                    self.nvars,
                    vec![TPoly::variable(self.nvars, *i)],
                )))
            }
            NodeKind::Z => Ok(RationalForm::from_zpoly(ZPoly::from_coeffs(
                self.nvars,
                vec![TPoly::zero(self.nvars), TPoly::one(self.nvars)],
            ))),
            NodeKind::Neg(a) => Ok(self.eval(a)?.neg()),
            NodeKind::Add(a, b) => Ok(self.eval(a)?.add(&self.eval(b)?)),
            NodeKind::Sub(a, b) => Ok(self.eval(a)?.sub(&self.eval(b)?)),
            NodeKind::Mul(a, b) => Ok(self.eval(a)?.mul(&self.eval(b)?)),
            NodeKind::Pow(a, e) => Ok(self.eval(a)?.pow(*e)),
            NodeKind::Div(a, b) => {
                let mut out = self.eval(a)?;
                let mut atoms = Vec::new();
                flatten_divisor(b, 1, &mut atoms);
                for (atom, mult) in atoms {
                    if mult == 0 {
                        continue;
                    }
                    match self.classify_divisor(atom, mult)? {
                        Divisor::Scalar(c) => out = out.scale(&c),
                        Divisor::Factor(f) => out = out.divide_by_factor(&f),
                    }
                }
                Ok(out)
            }
        }
    }

    /// Decides what dividing by `atom^mult` means: scalars fold into
    /// the coefficients as `atom^-mult`, factors `1 - monomial * z^k`
    /// join the denominator with multiplicity `mult`.
    fn classify_divisor(&self, atom: &Node, mult: usize) -> Result<Divisor> {
        let shape_err = || {
            parse_err(
                "denominator must multiply out into scalars and factors 1 - monomial*z^k",
                atom.start,
            )
        };
        let value = self.eval(atom)?;
        if value.is_zero() {
            return parse_err("division by zero", atom.start);
        }
        let terms = value.terms();
        if terms.len() != 1 || !terms[0].denominators.is_empty() {
            return shape_err();
        }
        let p = terms[0].numerator.scale(&terms[0].scalar);
        if p.degree() == Some(0) {
            let c = p.coeff(0);
            let terms: Vec<_> = c.terms().collect();
            if terms.len() == 1 && terms[0].0.is_unit() {
                let inv = Rat::one() / terms[0].1.clone();
                return Ok(Divisor::Scalar(rat_pow(&inv, mult as u32)));
            }
            return shape_err();
        }
        if p.coeff(0) != TPoly::one(self.nvars) {
            return shape_err();
        }
        let mut factor = None;
        for (k, c) in p.coeffs().iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            if factor.is_some() {
                return shape_err();
            }
            let terms: Vec<_> = c.terms().collect();
            if terms.len() != 1 || !(-terms[0].1.clone()).is_one() {
                return shape_err();
            }
            factor = Some(DenomFactor::new(terms[0].0.clone(), k, mult));
        }
        match factor {
            Some(f) => Ok(Divisor::Factor(f)),
            None => shape_err(),
        }
    }
}

/// Splits a divisor syntax tree into atoms with multiplicities, seeing
/// through products and integer powers.
fn flatten_divisor<'a>(node: &'a Node, mult: usize, out: &mut Vec<(&'a Node, usize)>) {
    match &node.kind {
        NodeKind::Mul(a, b) => {
            flatten_divisor(a, mult, out);
            flatten_divisor(b, mult, out);
        }
        NodeKind::Pow(a, e) => flatten_divisor(a, mult * *e as usize, out),
        _ => out.push((node, mult)),
    }
}

/// Parses an expression in `nvars` grading variables into a rational
/// form. Pure series expressions use `nvars = 0`.
pub fn parse_form(input: &str, nvars: usize) -> Result<RationalForm> {
    let toks = tokenize(input)?;
    if toks.is_empty() {
        return parse_err("empty expression", 0);
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: input.len(),
    };
    let ast = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parse_err("unexpected trailing input", parser.offset());
    }
    Eval { nvars }.eval(&ast)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, rat_int, Monomial, RationalTerm, VarImage};

    fn coeffs(input: &str, order: usize) -> Vec<Rat> {
        parse_form(input, 0)
            .unwrap()
            .expand(order)
            .scalar_coeffs()
            .unwrap()
    }

    fn ints(values: &[i64]) -> Vec<Rat> {
        values.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn polynomial_arithmetic_and_precedence() {
        assert_eq!(coeffs("1 - 2*z^2 + 2*z^4", 5), ints(&[1, 0, -2, 0, 2, 0]));
        assert_eq!(coeffs("-z^2 + 1", 2), ints(&[1, 0, -1]));
        assert_eq!(coeffs("2^3", 0), ints(&[8]));
        assert_eq!(coeffs("(1 + z)^3", 3), ints(&[1, 3, 3, 1]));
        assert_eq!(coeffs("1 - z - z^2 + 2*z^3", 3), ints(&[1, -1, -1, 2]));
        assert_eq!(coeffs("z^0", 1), ints(&[1, 0]));
    }

    #[test]
    fn geometric_denominators_expand_correctly() {
        assert_eq!(coeffs("1/(1 - z^2)", 6), ints(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(
            coeffs("(1 + z^4)/(1 - z^2)", 6),
            ints(&[1, 0, 1, 0, 2, 0, 2])
        );
        assert_eq!(
            coeffs("(1 - 2*z^2 + 2*z^4)/(1 - z^2)^3", 6),
            ints(&[1, 0, 1, 0, 2, 0, 4])
        );
        assert_eq!(
            coeffs("1/(1 - z) + z^2/((1 - z)^2*(1 - z^2))", 4),
            ints(&[1, 1, 2, 3, 5])
        );
    }

    #[test]
    fn powered_product_divisor_distributes_multiplicity() {
        let a = parse_form("1/((1 - z)*(1 - z^2))^2", 0).unwrap();
        let b = parse_form("1/((1 - z)^2*(1 - z^2)^2)", 0).unwrap();
        assert_eq!(a, b);
        let t = &a.terms()[0];
        assert_eq!(t.denominators.len(), 2);
        assert_eq!(t.denominators[0].mult(), 2);
        assert_eq!(t.denominators[1].mult(), 2);
    }

    #[test]
    fn scalar_division_folds_into_coefficients() {
        assert_eq!(coeffs("3/4", 0), vec![rat(3, 4)]);
        assert_eq!(coeffs("z/2", 1), vec![rat_int(0), rat(1, 2)]);
        assert_eq!(coeffs("1/(2*(1 - z))", 2), vec![rat(1, 2); 3]);
        assert_eq!(coeffs("1/(-2)", 0), vec![rat(-1, 2)]);
        assert_eq!(coeffs("1/2^2", 0), vec![rat(1, 4)]);
    }

    #[test]
    fn grading_variables_enter_monomials() {
        let f = parse_form("t1^2*t2*z^3/(1 - t1*t2*z^2)", 2).unwrap();
        let t = &f.terms()[0];
        assert_eq!(t.denominators.len(), 1);
        assert_eq!(t.denominators[0].monomial(), &Monomial::new(vec![1, 1]));
        assert_eq!(t.denominators[0].zpow(), 2);
        let series = f.expand(5);
        assert_eq!(
            *series.coeff(3),
            TPoly::from_terms(2, [(Monomial::new(vec![2, 1]), rat_int(1))])
        );
        assert_eq!(
            *series.coeff(5),
            TPoly::from_terms(2, [(Monomial::new(vec![3, 2]), rat_int(1))])
        );
    }

    #[test]
    fn u_variables_are_synonyms_for_t_variables() {
        let a = parse_form("u1*u2*z + u2^2", 2).unwrap();
        let b = parse_form("t1*t2*z + t2^2", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn closed_form_matches_hand_built_term() {
        let parsed = parse_form("1/2 + (1 + t1*z)/(2*(1 - t1*z))", 1).unwrap();
        let built = RationalForm::from_terms(
            1,
            vec![
                RationalTerm::new(rat(1, 2), ZPoly::one(1), Vec::new()),
                RationalTerm::new(
                    rat(1, 2),
                    ZPoly::from_coeffs(1, vec![TPoly::one(1), TPoly::variable(1, 0)]),
                    vec![DenomFactor::new(Monomial::new(vec![1]), 1, 1)],
                ),
            ],
        );
        assert_eq!(parsed.expand(6), built.expand(6));
    }

    #[test]
    fn substituted_parse_matches_direct_parse() {
        let two_vars = parse_form("1/((1 - t1*z)*(1 - t2*z))", 2).unwrap();
        let images = vec![
            VarImage::Scalar(rat_int(1)),
            VarImage::Scalar(rat_int(1)),
        ];
        let counted = parse_form("1/(1 - z)^2", 0).unwrap();
        assert_eq!(
            two_vars.expand(6).substitute(&images).unwrap(),
            counted.expand(6)
        );
    }

    fn offset_of(err: Error) -> (String, usize) {
        match err {
            Error::Parse { msg, offset } => (msg, offset),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn error_offsets_point_at_the_problem() {
        let (msg, off) = offset_of(parse_form("1/(1 + z)", 0).unwrap_err());
        assert!(msg.contains("denominator"));
        assert_eq!(off, 2);

        let (msg, off) = offset_of(parse_form("1/0", 0).unwrap_err());
        assert!(msg.contains("zero"));
        assert_eq!(off, 2);

        let (msg, off) = offset_of(parse_form("1 + t3*z", 2).unwrap_err());
        assert!(msg.contains("t3"));
        assert_eq!(off, 4);

        let (_, off) = offset_of(parse_form("1 + q", 0).unwrap_err());
        assert_eq!(off, 4);

        let (msg, _) = offset_of(parse_form("1 +", 0).unwrap_err());
        assert!(msg.contains("end of input"));

        let (msg, off) = offset_of(parse_form("(1 + z", 0).unwrap_err());
        assert!(msg.contains("')'"));
        assert_eq!(off, 6);

        let (msg, _) = offset_of(parse_form("z^", 0).unwrap_err());
        assert!(msg.contains("exponent"));

        let (msg, _) = offset_of(parse_form("z^z", 0).unwrap_err());
        assert!(msg.contains("exponent"));

        let (msg, _) = offset_of(parse_form("1/(t1*z)", 1).unwrap_err());
        assert!(msg.contains("denominator"));

        let (_, off) = offset_of(parse_form("1 2", 0).unwrap_err());
        assert_eq!(off, 2);

        let (msg, _) = offset_of(parse_form("", 0).unwrap_err());
        assert!(msg.contains("empty"));

        let (msg, _) = offset_of(parse_form("t0", 1).unwrap_err());
        assert!(msg.contains("start at 1"));

        let (msg, _) = offset_of(parse_form("t", 1).unwrap_err());
        assert!(msg.contains("variable index"));
    }

    #[test]
    fn nested_division_in_divisor_is_rejected() {
        let (msg, _) = offset_of(parse_form("1/(1/(1 - z))", 0).unwrap_err());
        assert!(msg.contains("denominator"));
    }

    #[test]
    fn divisor_power_zero_divides_by_one() {
        assert_eq!(coeffs("z/(1 - z)^0", 2), ints(&[0, 1, 0]));
    }
}
