use std::collections::BTreeSet;
use std::fmt;

use num_traits::Signed;

use super::laurent::{Exponent, LaurentPolynomial};
use crate::error::{Error, Result};
use crate::number::Number;

/// `max` of homogeneous integer linear forms. Constants are always zero
/// because tropicalization discards coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TropicalFunction {
    vars: Vec<String>,
    forms: BTreeSet<Exponent>,
}

impl TropicalFunction {
    pub fn new(vars: Vec<String>, forms: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        let forms: BTreeSet<Exponent> = forms.into_iter().collect();
        if forms.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(f) = forms.iter().find(|f| f.len() != vars.len()) {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                found: f.len(),
            });
        }
        Ok(TropicalFunction { vars, forms })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn forms(&self) -> impl Iterator<Item = &Exponent> {
        self.forms.iter()
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// A single form is a linear function.
    pub fn is_linear(&self) -> bool {
        self.forms.len() == 1
    }

    pub fn eval<T: Number>(&self, x: &[T]) -> Result<T> {
        if x.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                found: x.len(),
            });
        }
        Ok(self
            .forms
            .iter()
            .map(|f| f.iter().zip(x).map(|(a, v)| T::from_i64(*a) * v.clone()).sum::<T>())
            .max()
            .expect("non-empty"))
    }
}

/// Drops coefficients of a positive Laurent polynomial, keeping one linear
/// form per exponent.
pub fn tropicalize(f: &LaurentPolynomial) -> Result<TropicalFunction> {
    if f.terms().any(|(_, c)| !c.is_positive()) {
        return Err(Error::NotPositive);
    }
    TropicalFunction::new(f.vars().to_vec(), f.terms().map(|(e, _)| e.clone()))
}

impl fmt::Display for TropicalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forms: Vec<String> = self
            .forms
            .iter()
            .rev()
            .map(|e| {
                let mut s = String::new();
                for (a, v) in e.iter().zip(&self.vars) {
                    if *a == 0 {
                        continue;
                    }
                    if *a < 0 {
                        s.push('-');
                    } else if !s.is_empty() {
                        s.push('+');
                    }
                    if a.abs() != 1 {
                        s.push_str(&a.abs().to_string());
                    }
                    s.push_str(v);
                }
                if s.is_empty() {
                    s.push('0');
                }
                s
            })
            .collect();
        write!(f, "max{{{}}}", forms.join(", "))
    }
}

impl fmt::Debug for TropicalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rat;
    use num_rational::BigRational;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn tropicalize_example() {
        let v = vars(&["x1", "x2"]);
        let f = LaurentPolynomial::parse("2 x1^3 x2 + x1^-1 + 1", &v).unwrap();
        let t = tropicalize(&f).unwrap();
        assert_eq!(t.to_string(), "max{3x1+x2, 0, -x1}");
        assert_eq!(t.eval(&[1i64, 1]).unwrap(), 4);
        assert_eq!(t.eval(&[0i64, 0]).unwrap(), 0);
        assert_eq!(t.eval(&[rat(-1, 2), rat(1, 3)]).unwrap(), rat(1, 2));
    }

    #[test]
    fn constants_and_monomials() {
        let v = vars(&["x1", "x2"]);
        let t = tropicalize(&LaurentPolynomial::constant(&v, 5)).unwrap();
        assert_eq!(t.forms().collect::<Vec<_>>(), vec![&vec![0, 0]]);
        let t = tropicalize(&LaurentPolynomial::parse("x1 x2", &v).unwrap()).unwrap();
        assert!(t.is_linear());
        assert_eq!(t.eval(&[-1i64, 0]).unwrap(), -1);
    }

    #[test]
    fn rejects_non_positive() {
        let v = vars(&["x1", "x2"]);
        let f = LaurentPolynomial::parse("x1 - x2", &v).unwrap();
        assert_eq!(tropicalize(&f), Err(Error::NotPositive));
        let t = tropicalize(&LaurentPolynomial::one(&v)).unwrap();
        assert!(matches!(
            t.eval::<BigRational>(&[rat(1, 1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
