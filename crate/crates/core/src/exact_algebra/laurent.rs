use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Exponent = Vec<i64>;

/// A Laurent polynomial with integer coefficients in a fixed ordered list of
/// variables. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    vars: Arc<[String]>,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(vars: &[String]) -> Self {
        LaurentPolynomial {
            vars: vars.into(),
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn zero_like(&self) -> Self {
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, 1)
    }

    pub fn variable(vars: &[String], index: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[index] = 1;
        Self::monomial(vars, e, 1)
    }

    pub fn monomial(vars: &[String], exponent: Exponent, c: impl Into<BigInt>) -> Self {
        assert_eq!(exponent.len(), vars.len(), "exponent length");
        let mut p = Self::zero(vars);
        p.add_term(exponent, c.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(
        vars: &[String],
        terms: impl IntoIterator<Item = (Exponent, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order (total degree, then exponents).
    pub fn graded_terms(&self) -> Vec<(&Exponent, &BigInt)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| {
            let da: i64 = a.0.iter().sum();
            let db: i64 = b.0.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        });
        out
    }

    pub fn coefficient(&self, e: &[i64]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Single-term polynomial with a unit coefficient.
    pub fn as_unit_monomial(&self) -> Option<(&Exponent, &BigInt)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        (c.abs().is_one()).then_some((e, c))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.as_unit_monomial(), Some((e, c)) if c.is_one() && e.iter().all(|x| *x == 0))
    }

    /// Every stored coefficient is strictly positive (true for zero).
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.zero_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by `c · x^e`.
    pub fn mul_monomial(&self, e: &[i64], c: &BigInt) -> Self {
        let mut out = self.zero_like();
        if c.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(x, k)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), k * c))
            .collect();
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same variables");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same variables");
            }
        }
        result
    }

    /// Integer power; negative powers are only defined for unit monomials.
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        let (e, c) = self.as_unit_monomial().ok_or(Error::NotDivisible)?;
        let sign = if c.is_negative() && k % 2 != 0 { -1 } else { 1 };
        Ok(Self::monomial(
            &self.vars,
            e.iter().map(|x| x * k).collect(),
            BigInt::from(sign),
        ))
    }

    fn exponent_bounds(&self) -> (Vec<i64>, Vec<i64>) {
        let n = self.nvars();
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for e in self.terms.keys() {
            for v in 0..n {
                lo[v] = lo[v].min(e[v]);
                hi[v] = hi[v].max(e[v]);
            }
        }
        (lo, hi)
    }

    /// Returns `Q` with `self = Q · divisor`, or `NotDivisible`.
    ///
    /// Long division by the lexicographically leading term. Each quotient term
    /// must lie in the box `[min(F) − min(G), max(F) − max(G)]` per variable,
    /// which both bounds the loop and certifies failure.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.zero_like());
        }
        if divisor.terms.len() == 1 {
            let (e, c) = divisor.terms.iter().next().unwrap();
            let mut out = self.zero_like();
            for (x, k) in &self.terms {
                let (q, r) = k.div_rem(c);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                out.terms
                    .insert(x.iter().zip(e).map(|(a, b)| a - b).collect(), q);
            }
            return Ok(out);
        }
        let (flo, fhi) = self.exponent_bounds();
        let (glo, ghi) = divisor.exponent_bounds();
        let lo: Vec<i64> = flo.iter().zip(&glo).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = fhi.iter().zip(&ghi).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::NotDivisible);
        }
        let (glead, gc) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.terms.clone();
        let mut quotient = self.zero_like();
        while let Some((e, c)) = rem.iter().next_back() {
            let t: Exponent = e.iter().zip(glead).map(|(a, b)| a - b).collect();
            if t.iter().enumerate().any(|(v, x)| *x < lo[v] || *x > hi[v]) {
                return Err(Error::NotDivisible);
            }
            let (q, r) = c.div_rem(gc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (ge, gk) in &divisor.terms {
                let key: Exponent = t.iter().zip(ge).map(|(a, b)| a + b).collect();
                let delta = &q * gk;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quotient.terms.insert(t, q);
        }
        Ok(quotient)
    }

    /// Applies an integer linear map to every exponent, landing in `vars`.
    /// Terms that collide are added.
    pub fn map_exponents(
        &self,
        vars: &[String],
        mut f: impl FnMut(&[i64]) -> Result<Exponent>,
    ) -> Result<Self> {
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let e2 = f(e)?;
            if e2.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: e2.len(),
                });
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Same polynomial with variables renamed (order kept).
    pub fn with_vars(&self, vars: &[String]) -> Result<Self> {
        if vars.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: vars.len(),
            });
        }
        Ok(LaurentPolynomial {
            vars: vars.into(),
            terms: self.terms.clone(),
        })
    }

    /// Reorders variables: new variable `k` is old variable `perm[k]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Self> {
        let vars: Vec<String> = perm.iter().map(|&i| self.vars[i].clone()).collect();
        self.map_exponents(&vars, |e| Ok(perm.iter().map(|&i| e[i]).collect()))
    }

    /// Sum of coefficients, i.e. the value at `(1, ..., 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn poly(v: &[String], terms: &[(&[i64], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(v, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
            .unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = vars(&["x"]);
        let a = poly(&v, &[(&[1], 1), (&[0], 1)]);
        let b = poly(&v, &[(&[1], 1), (&[0], -1)]);
        assert_eq!(a.mul(&b).unwrap(), poly(&v, &[(&[2], 1), (&[0], -1)]));
    }

    #[test]
    fn exact_division_examples() {
        let v = vars(&["x"]);
        let f = poly(&v, &[(&[2], 1), (&[0], -1)]);
        let g = poly(&v, &[(&[1], 1), (&[0], -1)]);
        assert_eq!(f.exact_div(&g).unwrap(), poly(&v, &[(&[1], 1), (&[0], 1)]));
        let f = poly(&v, &[(&[2], 1), (&[0], 1)]);
        let g = poly(&v, &[(&[1], 1), (&[0], 1)]);
        assert_eq!(f.exact_div(&g), Err(Error::NotDivisible));
        assert_eq!(f.exact_div(&LaurentPolynomial::zero(&v)), Err(Error::DivisionByZero));
    }

    #[test]
    fn laurent_division() {
        let v = vars(&["x", "y"]);
        // (x^-1 + y)(x - y^-2) = 1 - x^-1 y^-2 + x y - y^-1
        let a = poly(&v, &[(&[-1, 0], 1), (&[0, 1], 1)]);
        let b = poly(&v, &[(&[1, 0], 1), (&[0, -2], -1)]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        let c = poly(&v, &[(&[1, 0], 1), (&[0, 0], 2)]);
        assert_eq!(p.exact_div(&c), Err(Error::NotDivisible));
    }

    #[test]
    fn monomial_division_checks_coefficients() {
        let v = vars(&["x"]);
        let f = poly(&v, &[(&[2], 3), (&[0], 6)]);
        assert_eq!(f.exact_div(&poly(&v, &[(&[1], 3)])).unwrap(), poly(&v, &[(&[1], 1), (&[-1], 2)]));
        assert_eq!(f.exact_div(&poly(&v, &[(&[1], 2)])), Err(Error::NotDivisible));
    }

    #[test]
    fn powers() {
        let v = vars(&["x"]);
        let a = poly(&v, &[(&[1], 1), (&[0], 1)]);
        let cube = a.pow(3);
        assert_eq!(cube, poly(&v, &[(&[3], 1), (&[2], 3), (&[1], 3), (&[0], 1)]));
        assert!(a.pow(0).is_one());
        let m = poly(&v, &[(&[2], -1)]);
        assert_eq!(m.powi(-3).unwrap(), poly(&v, &[(&[-6], -1)]));
        assert_eq!(a.powi(-1), Err(Error::NotDivisible));
    }

    #[test]
    fn positivity() {
        let v = vars(&["X1", "X2"]);
        assert!(poly(&v, &[(&[1, 1], 1), (&[0, 1], 1)]).is_positive());
        assert!(!poly(&v, &[(&[1, 0], 1), (&[0, 1], -1)]).is_positive());
        assert!(LaurentPolynomial::zero(&v).is_positive());
    }

    #[test]
    fn mismatched_variables() {
        let a = LaurentPolynomial::one(&vars(&["x"]));
        let b = LaurentPolynomial::one(&vars(&["y"]));
        assert_eq!(a.add(&b), Err(Error::VariableMismatch));
    }

    #[test]
    fn permutation() {
        let v = vars(&["x", "y"]);
        let p = poly(&v, &[(&[2, -1], 5)]);
        let q = p.permute_vars(&[1, 0]).unwrap();
        assert_eq!(q.vars(), &vars(&["y", "x"])[..]);
        assert_eq!(q.coefficient(&[-1, 2]), BigInt::from(5));
    }
}
