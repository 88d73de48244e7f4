use std::collections::HashMap;
use std::fmt;

use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};

/// A quotient `num / den` of Laurent polynomials in the same variables.
#[derive(Clone)]
pub struct RationalFunction {
    pub num: LaurentPolynomial,
    pub den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.vars() != num.vars() {
            return Err(Error::VariableMismatch);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        let den = LaurentPolynomial::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn vars(&self) -> &[String] {
        self.num.vars()
    }

    /// The Laurent polynomial this equals, if the division is exact.
    pub fn to_laurent(&self) -> Result<LaurentPolynomial> {
        self.num.exact_div(&self.den)
    }

    /// Cross-multiplication equality.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }

    /// Moves a unit-monomial denominator into the numerator.
    fn normalized(&self) -> Self {
        match self.den.as_unit_monomial() {
            Some(_) if !self.den.is_one() => {
                let inv = self.den.powi(-1).expect("unit monomial");
                RationalFunction {
                    num: self.num.mul(&inv).expect("same variables"),
                    den: LaurentPolynomial::one(self.vars()),
                }
            }
            _ => self.clone(),
        }
    }

    /// Substitutes `subs[i]` for variable `i` of `f`, returning an unreduced
    /// fraction with a common denominator.
    ///
    /// With `v_i = P_i / Q_i`, every term `c · Π v_i^{a_i}` is brought over
    /// `D = Π Q_i^{α_i} P_i^{β_i}` where `α_i`/`β_i` are the largest
    /// positive/negative exponents of `v_i` in `f`. Factors that are unit
    /// monomials are inverted directly and contribute nothing to `D`.
    pub fn compose(f: &LaurentPolynomial, subs: &[RationalFunction]) -> Result<RationalFunction> {
        if subs.len() != f.nvars() {
            return Err(Error::DimensionMismatch {
                expected: f.nvars(),
                found: subs.len(),
            });
        }
        let Some(first) = subs.first() else {
            // No variables: f is a constant.
            return Ok(RationalFunction::from_laurent(f.clone()));
        };
        let vars = first.vars().to_vec();
        if subs.iter().any(|s| s.vars() != vars.as_slice()) {
            return Err(Error::VariableMismatch);
        }
        let subs: Vec<RationalFunction> = subs.iter().map(|s| s.normalized()).collect();
        let n = subs.len();
        let num_unit: Vec<bool> = subs.iter().map(|s| s.num.as_unit_monomial().is_some()).collect();
        let den_one: Vec<bool> = subs.iter().map(|s| s.den.is_one()).collect();

        let mut alpha = vec![0i64; n];
        let mut beta = vec![0i64; n];
        for (e, _) in f.terms() {
            for i in 0..n {
                if !den_one[i] {
                    alpha[i] = alpha[i].max(e[i]);
                }
                if !num_unit[i] {
                    beta[i] = beta[i].max(-e[i]);
                }
            }
        }

        let mut cache: HashMap<(usize, bool, i64), LaurentPolynomial> = HashMap::new();
        let mut power = |i: usize, numerator: bool, k: i64| -> Result<LaurentPolynomial> {
            if let Some(p) = cache.get(&(i, numerator, k)) {
                return Ok(p.clone());
            }
            let base = if numerator { &subs[i].num } else { &subs[i].den };
            let p = base.powi(k)?;
            cache.insert((i, numerator, k), p.clone());
            Ok(p)
        };

        let mut num = LaurentPolynomial::zero(&vars);
        for (e, c) in f.terms() {
            let mut term = LaurentPolynomial::constant(&vars, c.clone());
            for i in 0..n {
                let pe = e[i] + beta[i];
                if pe != 0 {
                    term = term.mul(&power(i, true, pe)?)?;
                }
                if !den_one[i] {
                    let qe = alpha[i] - e[i];
                    if qe != 0 {
                        term = term.mul(&power(i, false, qe)?)?;
                    }
                }
            }
            num = num.add(&term)?;
        }
        let mut den = LaurentPolynomial::one(&vars);
        for i in 0..n {
            if alpha[i] > 0 {
                den = den.mul(&power(i, false, alpha[i])?)?;
            }
            if beta[i] > 0 {
                den = den.mul(&power(i, true, beta[i])?)?;
            }
        }
        Ok(RationalFunction { num, den })
    }

    /// `compose` followed by exact division; fails with `NotDivisible` when
    /// the result is not a Laurent polynomial.
    pub fn compose_laurent(f: &LaurentPolynomial, subs: &[RationalFunction]) -> Result<LaurentPolynomial> {
        let r = Self::compose(f, subs)?;
        if r.den.is_one() {
            return Ok(r.num);
        }
        r.to_laurent()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
