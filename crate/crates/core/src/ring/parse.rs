//! Text syntax for rings and ring elements.

use num_bigint::BigInt;

use super::{BaseRing, Ring, RingElement, RingError};

pub(super) fn parse_ring(spec: &str) -> Result<Ring, RingError> {
    let spec = spec.trim();
    let (head, vars) = match spec.find('[') {
        Some(open) => {
            let inner = spec[open + 1..]
                .strip_suffix(']')
                .ok_or_else(|| RingError::Parse(format!("missing ']' in ring '{spec}'")))?;
            let vars: Vec<&str> = inner.split(',').map(str::trim).collect();
            (&spec[..open], Some(vars))
        }
        None => (spec, None),
    };
    let base = match head.trim() {
        "Z" => BaseRing::Integers,
        h => {
            let n = h
                .strip_prefix("Z/")
                .and_then(|n| n.trim().parse::<u64>().ok())
                .ok_or_else(|| RingError::Parse(format!("unknown ring '{spec}'")))?;
            if n < 2 {
                return Err(RingError::InvalidModulus(n));
            }
            BaseRing::IntegersMod(n)
        }
    };
    match (vars, base) {
        (Some(vars), _) => Ring::polynomial(base, vars),
        (None, BaseRing::Integers) => Ok(Ring::integers()),
        (None, BaseRing::IntegersMod(n)) => Ring::integers_mod(n),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>, RingError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Int(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(RingError::Parse(format!("unexpected character '{c}' in '{text}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<RingElement, RingError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RingElement, RingError> {
        let mut acc = self.unary()?;
        while self.peek_op() == Some('*') {
            self.pos += 1;
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RingElement, RingError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RingElement, RingError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Int(e)) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| RingError::Parse(format!("exponent {e} too large")))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(RingError::Parse("expected integer exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingElement, RingError> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Int(c)) => Ok(self.ring.from_bigint(&c)),
            Some(Token::Ident(name)) => self.ring.var(&name),
            Some(Token::Op('(')) => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(RingError::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => Err(RingError::Parse(format!("unexpected token {t:?}"))),
            None => Err(RingError::Parse("unexpected end of expression".into())),
        }
    }
}

pub(super) fn parse_element(ring: &Ring, text: &str) -> Result<RingElement, RingError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(RingError::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, tokens, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(RingError::Parse(format!("trailing input in '{text}'")));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_specs() {
        for s in ["Z", "Z/8", "Z/27", "Z[xi,zeta,eta]", "Z/9[t]"] {
            assert_eq!(Ring::parse(s).unwrap().to_string(), s);
        }
        assert!(matches!(Ring::parse("Z/1"), Err(RingError::InvalidModulus(1))));
        assert!(Ring::parse("Q").is_err());
        assert!(Ring::parse("Z[x,x]").is_err());
    }

    #[test]
    fn element_expressions() {
        let r = Ring::parse("Z[xi,zeta]").unwrap();
        let e = r.parse_element("(xi - 1)*(xi + 1)").unwrap();
        assert_eq!(e.to_string(), "xi^2-1");
        let e = r.parse_element("-2*xi*zeta^2 + 3").unwrap();
        assert_eq!(e.to_string(), "-2*xi*zeta^2+3");
        assert!(r.parse_element("eta").is_err());
        let z9 = Ring::parse("Z/9").unwrap();
        assert_eq!(z9.parse_element("-1").unwrap().residue(), Some(8));
        assert_eq!(z9.parse_element("2^4").unwrap().residue(), Some(7));
    }

    #[test]
    fn render_parse_round_trip() {
        let r = Ring::parse("Z/7[a,b]").unwrap();
        let e = r.parse_element("3*a^2*b - 5*b + 2").unwrap();
        assert_eq!(r.parse_element(&e.to_string()).unwrap(), e);
    }
}
