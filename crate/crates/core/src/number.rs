use std::fmt;
use std::hash::Hash;
use std::iter::Sum;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact number domains for tropical points: the integers and the rationals.
pub trait Number:
    Signed + Clone + Ord + Hash + fmt::Debug + fmt::Display + Sum + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// `self / 2` if it exists in the domain.
    fn half(&self) -> Option<Self>;

    fn to_rational(&self) -> BigRational;

    /// Largest integer not exceeding `self`.
    fn floor_i64(&self) -> i64;

    /// Text form used in JSON (`"3"`, `"-1/2"`).
    fn to_text(&self) -> String {
        self.to_string()
    }

    fn parse_text(s: &str) -> Option<Self>;

    /// Domain tag used in lamination JSON.
    const DOMAIN: &'static str;
}

impl Number for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn half(&self) -> Option<Self> {
        (self % 2 == 0).then_some(self / 2)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(*self))
    }

    fn floor_i64(&self) -> i64 {
        *self
    }

    fn parse_text(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }

    const DOMAIN: &'static str = "int";
}

impl Number for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn half(&self) -> Option<Self> {
        Some(self / BigRational::from_integer(BigInt::from(2)))
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn floor_i64(&self) -> i64 {
        self.floor().to_integer().to_i64().expect("value fits in i64")
    }

    fn parse_text(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().ok()?;
                let q: BigInt = q.trim().parse().ok()?;
                (!q.is_zero()).then(|| BigRational::new(p, q))
            }
            None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        }
    }

    const DOMAIN: &'static str = "rat";
}

/// Shorthand for building a rational from a numerator and denominator.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
