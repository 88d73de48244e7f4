//! Text form: `c * v1^e1 ... vk^ek` terms joined by `+`/`-`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms = self.graded_terms();
        for (n, (e, c)) in terms.into_iter().rev().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = e
                .iter()
                .zip(self.vars())
                .filter(|(x, _)| **x != 0)
                .map(|(x, v)| format!("{v}^{x}"))
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs} * {}", factors.join(" "))?;
            }
        }
        Ok(())
    }
}

impl LaurentPolynomial {
    /// Parses the text form over the given variables. Accepts an optional
    /// coefficient, `*` or whitespace between factors, and a bare variable for
    /// exponent 1.
    pub fn parse(text: &str, vars: &[String]) -> Result<Self> {
        let err = |m: &str| Error::Parse(format!("{m} in {text:?}"));
        let mut out = LaurentPolynomial::zero(vars);
        let text = text.trim();
        if text.is_empty() {
            return Err(err("empty polynomial"));
        }
        // Split into signed terms at '+'/'-' not following '^'.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev = ' ';
        for ch in text.chars() {
            if (ch == '+' || ch == '-') && prev != '^' {
                if !cur.trim().is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                    neg = false;
                } else if !cur.trim().is_empty() || prev == '*' {
                    return Err(err("misplaced sign"));
                }
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = ch;
            }
        }
        if cur.trim().is_empty() {
            return Err(err("dangling sign"));
        }
        terms.push((neg, cur));

        for (neg, term) in terms {
            let mut coeff = BigInt::one();
            let mut exp = vec![0i64; vars.len()];
            let mut saw_factor = false;
            for tok in term.split(|c: char| c == '*' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                if tok.chars().next().unwrap().is_ascii_digit() {
                    let c: BigInt = tok.parse().map_err(|_| err("bad coefficient"))?;
                    coeff *= c;
                    saw_factor = true;
                    continue;
                }
                let (name, e) = match tok.split_once('^') {
                    Some((name, e)) => (name, e.parse::<i64>().map_err(|_| err("bad exponent"))?),
                    None => (tok, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| err(&format!("unknown variable {name:?}")))?;
                exp[idx] += e;
                saw_factor = true;
            }
            if !saw_factor {
                return Err(err("empty term"));
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn display_is_graded_descending() {
        let v = vars(&["x1", "x2"]);
        let p = LaurentPolynomial::parse("x1^-1 + 1 + 2*x1^3 x2", &v).unwrap();
        assert_eq!(p.to_string(), "2 * x1^3 x2^1 + 1 + 1 * x1^-1");
    }

    #[test]
    fn roundtrip() {
        let v = vars(&["A13", "A14"]);
        for s in [
            "1 * A13^-1 A14^1 + 1 * A13^-1",
            "-3 * A13^2 - 1 + 7 * A14^-4",
            "0",
            "12345678901234567890123 * A13^1",
        ] {
            let p = LaurentPolynomial::parse(s, &v).unwrap();
            let q = LaurentPolynomial::parse(&p.to_string(), &v).unwrap();
            assert_eq!(p, q, "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        let v = vars(&["x"]);
        assert!(LaurentPolynomial::parse("", &v).is_err());
        assert!(LaurentPolynomial::parse("y", &v).is_err());
        assert!(LaurentPolynomial::parse("x^a", &v).is_err());
        assert!(LaurentPolynomial::parse("x +", &v).is_err());
    }
}
