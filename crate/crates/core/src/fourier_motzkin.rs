//! Exact Fourier–Motzkin elimination for small systems `A x ≤ b`.
//!
//! Rows are kept with integer coefficients divided by their content, so
//! duplicates collapse and the tightest right-hand side wins.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A system of inequalities `Σ a_i x_i ≤ b` in a fixed number of variables.
#[derive(Debug, Clone, Default)]
pub struct System {
    nvars: usize,
    rows: BTreeMap<Vec<BigInt>, BigRational>,
    infeasible: bool,
}

/// Lower and upper bound of one variable over the feasible set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lower: Option<BigRational>,
    pub upper: Option<BigRational>,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        matches!((&self.lower, &self.upper), (Some(l), Some(u)) if l > u)
    }
}

impl System {
    pub fn new(nvars: usize) -> Self {
        System {
            nvars,
            ..Default::default()
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds `Σ a_i x_i ≤ b`.
    pub fn add(&mut self, a: &[BigRational], b: BigRational) {
        assert_eq!(a.len(), self.nvars, "row length");
        // Clear denominators, then divide by the content.
        let lcm = a
            .iter()
            .chain(std::iter::once(&b))
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scaled: Vec<BigInt> = a
            .iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let b = b * BigRational::from_integer(lcm);
        let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            if b.is_negative() {
                self.infeasible = true;
            }
            return;
        }
        let row: Vec<BigInt> = scaled.into_iter().map(|x| x / &g).collect();
        let b = b / BigRational::from_integer(g);
        self.rows
            .entry(row)
            .and_modify(|old| {
                if b < *old {
                    *old = b.clone();
                }
            })
            .or_insert(b);
    }

    pub fn add_int(&mut self, a: &[i64], b: BigRational) {
        let a: Vec<BigRational> = a.iter().map(|x| BigRational::from_integer((*x).into())).collect();
        self.add(&a, b);
    }

    /// Projects out variable `k` (its coefficient becomes zero everywhere).
    pub fn eliminate(&self, k: usize) -> System {
        let mut out = System {
            nvars: self.nvars,
            rows: BTreeMap::new(),
            infeasible: self.infeasible,
        };
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (a, b) in &self.rows {
            match a[k].sign() {
                num_bigint::Sign::Plus => pos.push((a, b)),
                num_bigint::Sign::Minus => neg.push((a, b)),
                num_bigint::Sign::NoSign => {
                    let a: Vec<BigRational> = a.iter().map(|x| BigRational::from_integer(x.clone())).collect();
                    out.add(&a, b.clone());
                }
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let fp = -an[k].clone();
                let fn_ = ap[k].clone();
                let a: Vec<BigRational> = ap
                    .iter()
                    .zip(an.iter())
                    .map(|(x, y)| BigRational::from_integer(x * &fp + y * &fn_))
                    .collect();
                let b = *bp * BigRational::from_integer(fp.clone()) + *bn * BigRational::from_integer(fn_.clone());
                out.add(&a, b);
            }
        }
        out
    }

    /// Whether some real point satisfies every row.
    pub fn is_feasible(&self) -> bool {
        let mut s = self.clone();
        for k in 0..self.nvars {
            s = s.eliminate(k);
            if s.infeasible {
                return false;
            }
        }
        !s.infeasible
    }

    /// Bounds of variable `k` over the feasible set (empty if infeasible).
    pub fn bounds(&self, k: usize) -> Interval {
        let mut s = self.clone();
        for v in 0..self.nvars {
            if v != k {
                s = s.eliminate(v);
            }
        }
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        if s.infeasible {
            return Interval {
                lower: Some(BigRational::one()),
                upper: Some(BigRational::zero()),
            };
        }
        for (a, b) in &s.rows {
            let c = BigRational::from_integer(a[k].clone());
            let v = b / &c;
            if c.is_positive() {
                upper = Some(match upper {
                    Some(u) if u <= v => u,
                    _ => v,
                });
            } else {
                lower = Some(match lower {
                    Some(l) if l >= v => l,
                    _ => v,
                });
            }
        }
        Interval { lower, upper }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rat;

    fn r(x: i64) -> BigRational {
        rat(x, 1)
    }

    #[test]
    fn triangle_bounds() {
        // x ≥ 0, y ≥ 0, 2x + 3y ≤ 6
        let mut s = System::new(2);
        s.add_int(&[-1, 0], r(0));
        s.add_int(&[0, -1], r(0));
        s.add_int(&[2, 3], r(6));
        assert_eq!(s.bounds(0), Interval { lower: Some(r(0)), upper: Some(r(3)) });
        assert_eq!(s.bounds(1), Interval { lower: Some(r(0)), upper: Some(r(2)) });
        assert!(s.is_feasible());
    }

    #[test]
    fn unbounded_direction() {
        let mut s = System::new(2);
        s.add_int(&[1, -1], r(0));
        s.add_int(&[0, 1], r(4));
        let b = s.bounds(0);
        assert_eq!(b.upper, Some(r(4)));
        assert_eq!(b.lower, None);
    }

    #[test]
    fn infeasible_system() {
        let mut s = System::new(2);
        s.add_int(&[1, 1], r(1));
        s.add_int(&[-1, 0], r(-1));
        s.add_int(&[0, -1], r(-1));
        assert!(!s.is_feasible());
        assert!(s.bounds(0).is_empty());
    }

    #[test]
    fn fractional_bounds() {
        let mut s = System::new(1);
        s.add(&[rat(2, 3)], rat(1, 2));
        assert_eq!(s.bounds(0).upper, Some(rat(3, 4)));
    }
}
