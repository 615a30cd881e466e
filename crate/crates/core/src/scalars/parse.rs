//! Scalar literals: rational arithmetic expressions in `q` and `z = ζ_m`.
//!
//! Grammar (juxtaposition multiplies):
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/')? unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? digits)?
//! atom  := digits | 'q' | 'z' | '(' expr ')'
//! ```

use super::{CycField, Rat, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            out.push(Tok::Num(super::parse_rat(&txt).ok_or_else(|| parse_err(s, "bad number"))?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '⁻' || c == '−' {
            // tolerate typographic minus signs
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(parse_err(s, &format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

fn parse_err(src: &str, msg: &str) -> Error {
    Error::Parse(format!("{msg} in scalar literal \"{src}\""))
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    field: &'static CycField,
    q: Option<&'a Scalar>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.div(&d).map_err(|_| parse_err(self.src, "division by zero"))?;
            } else if self.starts_atom() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.peek() {
                Some(Tok::Num(r)) if r.is_integer() => {
                    let (n, _) = r.parts();
                    n.parse::<i64>().map_err(|_| parse_err(self.src, "exponent too large"))?
                }
                _ => return Err(parse_err(self.src, "expected integer exponent")),
            };
            self.pos += 1;
            let e = if neg { -e } else { e };
            if e < 0 && base.is_zero() {
                return Err(parse_err(self.src, "negative power of zero"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(self.field.from_rat(r))
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                match id.as_str() {
                    "q" => self
                        .q
                        .cloned()
                        .ok_or_else(|| parse_err(self.src, "'q' used but no q is fixed")),
                    "z" | "zeta" => Ok(self.field.zeta()),
                    _ => Err(parse_err(self.src, &format!("unknown symbol '{id}'"))),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(parse_err(self.src, "missing ')'"));
                }
                Ok(v)
            }
            _ => Err(parse_err(self.src, "expected a number, 'q', 'z' or '('")),
        }
    }
}

/// Parse a literal such as `"3/2"`, `"1 - q^2"` or `"1/(q - q^-1)"`.
pub fn parse_scalar(src: &str, field: &'static CycField, q: Option<&Scalar>) -> Result<Scalar> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(parse_err(src, "empty literal"));
    }
    let mut p = Parser { src, toks, pos: 0, field, q };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_err(src, "trailing input"));
    }
    Ok(v)
}

/// Render a coefficient vector as a polynomial in `var`.
pub(crate) fn render_poly(c: &[Rat], var: &str) -> String {
    let mut out = String::new();
    for (k, a) in c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let abs = if neg { a.neg() } else { a.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders scalars as polynomials in `q` when `q` generates the field,
/// otherwise in `z = ζ_m`.
#[derive(Clone, Debug)]
pub struct ScalarFormat {
    q: Option<Scalar>,
    /// Row-major inverse of the matrix whose columns are `q^j` in the ζ basis.
    to_q: Option<Vec<Vec<Rat>>>,
}

impl ScalarFormat {
    /// Plain rendering in the ζ power basis.
    pub fn plain() -> ScalarFormat {
        ScalarFormat { q: None, to_q: None }
    }

    pub fn new(q: Scalar) -> ScalarFormat {
        let d = q.field().degree();
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(d);
        let mut cur = q.field().one();
        for _ in 0..d {
            let mut col = cur.coeffs().to_vec();
            col.resize(d, Rat::ZERO);
            cols.push(col);
            cur = cur.mul(&q);
        }
        // invert [cols] by Gauss-Jordan; singular means q does not generate
        let mut a: Vec<Vec<Rat>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rat> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.extend((0..d).map(|j| if i == j { Rat::ONE } else { Rat::ZERO }));
                row
            })
            .collect();
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| !a[r][col].is_zero()) else {
                return ScalarFormat { q: Some(q), to_q: None };
            };
            a.swap(col, piv);
            let p = a[col][col].recip();
            for k in 0..2 * d {
                a[col][k] = a[col][k].mul(&p);
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for k in 0..2 * d {
                        let t = a[col][k].mul(&f);
                        a[r][k] = a[r][k].sub(&t);
                    }
                }
            }
        }
        let inv = a.into_iter().map(|r| r[d..].to_vec()).collect();
        ScalarFormat { q: Some(q), to_q: Some(inv) }
    }

    pub fn q(&self) -> Option<&Scalar> {
        self.q.as_ref()
    }

    pub fn render(&self, s: &Scalar) -> String {
        match &self.to_q {
            Some(inv) => {
                let d = inv.len();
                let c = s.coeffs();
                let qc: Vec<Rat> = (0..d)
                    .map(|i| {
                        c.iter()
                            .enumerate()
                            .fold(Rat::ZERO, |acc, (j, x)| acc.add(&inv[i][j].mul(x)))
                    })
                    .collect();
                render_poly(&qc, "q")
            }
            None => render_poly(s.coeffs(), "z"),
        }
    }

    pub fn parse(&self, src: &str, field: &'static CycField) -> Result<Scalar> {
        parse_scalar(src, field, self.q.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::super::field_new;
    use super::*;

    #[test]
    fn literals() {
        let f = field_new(3).unwrap();
        let q = f.zeta();
        let one = f.one();
        assert_eq!(parse_scalar("-7/3", f, None).unwrap(), f.rat(-7, 3));
        let v = parse_scalar("1 - q^2", f, Some(&q)).unwrap();
        assert_eq!(v, one.sub(&q.pow(2)));
        let w = parse_scalar("1/(q - q^-1)", f, Some(&q)).unwrap();
        assert!(w.mul(&q.sub(&q.inv().unwrap())).is_one());
        assert_eq!(parse_scalar("2q(1+q)", f, Some(&q)).unwrap(), q.mul(&one.add(&q)).scale_rat(&Rat::int(2)));
        assert!(parse_scalar("q", f, None).is_err());
        assert!(parse_scalar("1/0", f, None).is_err());
        assert!(parse_scalar("1 +", f, None).is_err());
    }

    #[test]
    fn render_roundtrip() {
        let f = field_new(5).unwrap();
        let q = f.zeta().pow(2);
        let fmt = ScalarFormat::new(q.clone());
        for src in ["0", "1 - q^2", "1/(q - q^-1)", "-3/4*q^3 + q", "q^-4"] {
            let v = fmt.parse(src, f).unwrap();
            let txt = fmt.render(&v);
            assert_eq!(fmt.parse(&txt, f).unwrap(), v, "{src} -> {txt}");
        }
        assert_eq!(fmt.render(&q.pow(2)), "q^2");
    }
}
