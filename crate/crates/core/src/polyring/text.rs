//! Text format for polynomials and ideals over ℚ.
//!
//! ```text
//! vars: x, y
//! x^2 + y^2 - 1
//! 3/5*x - y
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Ideal, PolyError, Polynomial};
use crate::{QPoly, Rational};

pub fn parse_ideal(text: &str) -> Result<Ideal<Rational>, PolyError> {
    let mut vars: Option<Vec<String>> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match &vars {
            None => {
                let rest = line.strip_prefix("vars:").ok_or(PolyError::Parse {
                    line: lineno + 1,
                    col: 1,
                    msg: "expected `vars:` header".into(),
                })?;
                vars = Some(parse_var_list(rest, lineno + 1)?);
            }
            Some(v) => {
                let p = parse_polynomial(line, v).map_err(|e| match e {
                    PolyError::Parse { col, msg, .. } => PolyError::Parse {
                        line: lineno + 1,
                        col,
                        msg,
                    },
                    other => other,
                })?;
                gens.push(p);
            }
        }
    }
    let vars = vars.ok_or(PolyError::Parse {
        line: 1,
        col: 1,
        msg: "missing `vars:` header".into(),
    })?;
    Ideal::new(vars, gens)
}

pub(crate) fn parse_var_list(rest: &str, line: usize) -> Result<Vec<String>, PolyError> {
    let vars: Vec<String> = rest
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    for (i, v) in vars.iter().enumerate() {
        let valid = v
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !valid || vars[..i].contains(v) {
            return Err(PolyError::Parse {
                line,
                col: 1,
                msg: format!("bad or duplicate variable name `{v}`"),
            });
        }
    }
    Ok(vars)
}

/// Parses an infix polynomial with `+ - * / ^` and parentheses. Division is
/// only allowed by nonzero constants; juxtaposition means multiplication.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<QPoly, PolyError> {
    let mut p = ExprParser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let e = p.expr()?;
    p.ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl ExprParser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            line: 1,
            col: self.pos + 1,
            msg: msg.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QPoly, PolyError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QPoly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = &acc * &f;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.unary()?;
                    if !f.is_constant() || f.is_zero() {
                        self.pos = at;
                        return Err(self.err("division only by a nonzero constant"));
                    }
                    acc = acc.scale(&(Rational::one() / f.constant_term()));
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QPoly, PolyError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| {
                    self.pos = start;
                    self.err("expected nonnegative integer exponent")
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = s.parse().map_err(|_| self.err("bad number"))?;
                Ok(QPoly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(Polynomial::var(i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable `{name}`")))
                    }
                }
            }
            _ => Err(self.err("expected number, variable or `(`")),
        }
    }
}

/// Parses a comma-separated list of rationals such as `3/5, -4/5`.
pub fn parse_rationals(text: &str) -> Option<Vec<Rational>> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            let r: Rational = s.parse().ok()?;
            Some(r)
        })
        .collect::<Option<Vec<_>>>()
        .filter(|v| !v.is_empty() || text.trim().is_empty())
        .map(|v| v.into_iter().map(normalize).collect())
}

fn normalize(r: Rational) -> Rational {
    if r.is_zero() {
        Rational::zero()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::MonomialOrder;
    use crate::{q, qq};

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn parses_rational_coefficients() {
        let p = parse_polynomial("3/5*x - y^2/2 + 1", &xy()).unwrap();
        assert_eq!(p.eval(&[q(5), q(2)]), q(2));
        let p = parse_polynomial("2x(y - 1)", &xy()).unwrap();
        assert_eq!(p.to_text(&xy(), &MonomialOrder::Lex), "2*x*y - 2*x");
        assert_eq!(
            parse_polynomial("-(x+1)^2", &xy())
                .unwrap()
                .eval(&[q(1), q(0)]),
            q(-4)
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_polynomial("x + z", &xy()),
            Err(PolyError::Parse { col: 5, .. })
        ));
        assert!(parse_polynomial("x / y", &xy()).is_err());
        assert!(parse_polynomial("x / 0", &xy()).is_err());
        assert!(parse_polynomial("x^-1", &xy()).is_err());
        assert!(parse_polynomial("(x", &xy()).is_err());
        assert!(parse_ideal("x + y").is_err());
        assert!(parse_ideal("vars: x, x\n").is_err());
    }

    #[test]
    fn ideal_text_round_trip() {
        let text = "vars: x, y\n# circle\nx^2 + y^2 - 1\n\n-1/2*x*y + 3\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.generators().len(), 2);
        let out = i.to_text(&MonomialOrder::GrevLex);
        assert_eq!(out, "vars: x, y\nx^2 + y^2 - 1\n-1/2*x*y + 3\n");
        assert_eq!(parse_ideal(&out).unwrap(), i);
    }

    #[test]
    fn rational_lists() {
        assert_eq!(
            parse_rationals("3/5, -4/5"),
            Some(vec![qq(3, 5), qq(-4, 5)])
        );
        assert_eq!(parse_rationals("6/4"), Some(vec![qq(3, 2)]));
        assert_eq!(parse_rationals("x"), None);
    }
}
