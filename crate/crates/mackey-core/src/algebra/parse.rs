//! Expression parser and printer for polynomials.
//!
//! Grammar (EBNF):
//!
//! ```text
//! expr   := '-'? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := uint | var | '(' expr ')'
//! var    := ('x'|'t') uint
//! ```
//!
//! `x1..xr` are the torus-block variables, `t1..tm` the auxiliary-block
//! variables. Printing emits the same grammar with explicit `*`, terms in
//! descending graded-lex order. (Internally generated symbolic coefficients
//! print and parse as `c1..ck`; they never appear in user-facing grammars.)

use num_traits::{One, Signed};

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::{Int, Rat};
use crate::{Error, Result};

/// Naming scheme for the variables of a polynomial ring: `r` torus variables
/// `x1..xr`, `m` auxiliary variables `t1..tm`, then `extra` symbolic
/// coefficients `c1..`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VarLayout {
    pub rank_t: usize,
    pub rank_aux: usize,
    pub extra: usize,
}

impl VarLayout {
    pub fn new(rank_t: usize, rank_aux: usize) -> Self {
        VarLayout {
            rank_t,
            rank_aux,
            extra: 0,
        }
    }

    pub fn with_extra(rank_t: usize, rank_aux: usize, extra: usize) -> Self {
        VarLayout {
            rank_t,
            rank_aux,
            extra,
        }
    }

    pub fn nvars(&self) -> usize {
        self.rank_t + self.rank_aux + self.extra
    }

    pub fn name(&self, idx: usize) -> String {
        if idx < self.rank_t {
            format!("x{}", idx + 1)
        } else if idx < self.rank_t + self.rank_aux {
            format!("t{}", idx - self.rank_t + 1)
        } else {
            format!("c{}", idx - self.rank_t - self.rank_aux + 1)
        }
    }

    fn resolve(&self, kind: char, number: usize) -> Option<usize> {
        let (count, base) = match kind {
            'x' => (self.rank_t, 0),
            't' => (self.rank_aux, self.rank_t),
            'c' => (self.extra, self.rank_t + self.rank_aux),
            _ => return None,
        };
        if number == 0 || number > count {
            return None;
        }
        Some(base + number - 1)
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    layout: VarLayout,
}

/// Parse an expression into a polynomial in canonical sparse form.
pub fn parse_poly(text: &str, layout: &VarLayout) -> Result<Poly> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        layout: *layout,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        self.skip_ws();
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                let n: Int = digits.parse().expect("digits parse as integer");
                Ok(Poly::constant(
                    self.layout.nvars(),
                    Rat::from_integer(n),
                ))
            }
            Some(c @ (b'x' | b't' | b'c')) => {
                let start = self.pos;
                self.pos += 1;
                let number = self.uint().map_err(|_| Error::Parse {
                    position: start,
                    message: "variable needs a numeric index".to_string(),
                })?;
                match self.layout.resolve(c as char, number) {
                    Some(idx) => Ok(Poly::var(self.layout.nvars(), idx)),
                    None => Err(Error::UnknownVariable {
                        position: start,
                        name: format!("{}{}", c as char, number),
                    }),
                }
            }
            _ => Err(self.err("expected integer, variable, or `(`")),
        }
    }

    fn uint(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a non-negative integer"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer literal too large"))
    }
}

fn render_coeff_mono(c: &Rat, mono_parts: &[String], out: &mut String) {
    let coeff_one = c.is_one();
    if mono_parts.is_empty() {
        out.push_str(&render_rat(c));
        return;
    }
    if !coeff_one {
        out.push_str(&render_rat(c));
        out.push('*');
    }
    out.push_str(&mono_parts.join("*"));
}

fn render_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Render a polynomial in the expression grammar, terms in descending
/// graded-lex order.
pub fn render_poly(p: &Poly, layout: &VarLayout) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (k, (m, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 1 {
                parts.push(layout.name(i));
            } else if e > 1 {
                parts.push(format!("{}^{}", layout.name(i), e));
            }
        }
        render_coeff_mono(&c.abs(), &parts, &mut out);
    }
    out
}

/// Render a rational function: numerator, `/`, parenthesized denominator.
pub fn render_ratfunc(f: &RatFunc, layout: &VarLayout) -> String {
    let num = render_poly(f.num(), layout);
    if f.is_polynomial() && f.den().constant_coeff().is_one() {
        return num;
    }
    let den = render_poly(f.den(), layout);
    let num_wrapped = if f.num().num_terms() > 1 {
        format!("({num})")
    } else {
        num
    };
    format!("{num_wrapped}/({den})")
}

impl Poly {
    pub fn render(&self, layout: &VarLayout) -> String {
        render_poly(self, layout)
    }
}

impl RatFunc {
    pub fn render(&self, layout: &VarLayout) -> String {
        render_ratfunc(self, layout)
    }
}
