use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact_algebra::{LaurentPolynomial, RationalFunction};

/// Exchange data `(I, I₀, ε, d)` with `I = {0, .., len-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    epsilon: Vec<Vec<i64>>,
    frozen: BTreeSet<usize>,
    d: Vec<BigRational>,
}

impl Seed {
    pub fn new(epsilon: Vec<Vec<i64>>, frozen: BTreeSet<usize>, d: Vec<BigRational>) -> Result<Self> {
        let n = epsilon.len();
        if let Some(row) = epsilon.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        if d.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: d.len(),
            });
        }
        if let Some(&f) = frozen.iter().find(|&&f| f >= n) {
            return Err(Error::IndexOutOfRange { index: f, size: n });
        }
        if d.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidInput("multipliers d must be positive".into()));
        }
        for i in 0..n {
            for j in 0..n {
                // ε_ij / d_j = −ε_ji / d_i
                let lhs = BigRational::from_integer(epsilon[i][j].into()) / &d[j];
                let rhs = -BigRational::from_integer(epsilon[j][i].into()) / &d[i];
                if lhs != rhs {
                    return Err(Error::InvalidInput(format!(
                        "ε is not skew-symmetrizable by d at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Seed { epsilon, frozen, d })
    }

    /// Skew-symmetric seed without frozen indices.
    pub fn skew_symmetric(epsilon: Vec<Vec<i64>>) -> Result<Self> {
        let n = epsilon.len();
        Self::new(epsilon, BTreeSet::new(), vec![BigRational::one(); n])
    }

    pub fn len(&self) -> usize {
        self.epsilon.len()
    }

    pub fn is_empty(&self) -> bool {
        self.epsilon.is_empty()
    }

    pub fn epsilon(&self) -> &[Vec<i64>] {
        &self.epsilon
    }

    pub fn eps(&self, i: usize, j: usize) -> i64 {
        self.epsilon[i][j]
    }

    pub fn frozen(&self) -> &BTreeSet<usize> {
        &self.frozen
    }

    pub fn is_frozen(&self, i: usize) -> bool {
        self.frozen.contains(&i)
    }

    pub fn d(&self) -> &[BigRational] {
        &self.d
    }

    /// Unfrozen indices in increasing order.
    pub fn unfrozen(&self) -> Vec<usize> {
        (0..self.len()).filter(|i| !self.frozen.contains(i)).collect()
    }

    fn require_mutable(&self, k: usize) -> Result<()> {
        if k >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                size: self.len(),
            });
        }
        if self.frozen.contains(&k) {
            return Err(Error::FrozenDirection(k));
        }
        Ok(())
    }

    /// Seed mutation in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        self.require_mutable(k)?;
        let n = self.len();
        let e = &self.epsilon;
        let mut out = e.clone();
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k || j == k {
                    -e[i][j]
                } else if e[i][k] * e[k][j] > 0 {
                    e[i][j] + e[i][k].abs() * e[k][j]
                } else {
                    e[i][j]
                };
            }
        }
        Ok(Seed {
            epsilon: out,
            frozen: self.frozen.clone(),
            d: self.d.clone(),
        })
    }

    /// Applies a mutation word left to right.
    pub fn mutate_word(&self, word: &[usize]) -> Result<Seed> {
        word.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// The restriction to unfrozen indices.
    pub fn reduced(&self) -> Seed {
        let keep = self.unfrozen();
        Seed {
            epsilon: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.epsilon[i][j]).collect())
                .collect(),
            frozen: BTreeSet::new(),
            d: keep.iter().map(|&i| self.d[i].clone()).collect(),
        }
    }

    /// `X'_i` of `μ_k(self)` as rational functions of this seed's `X`
    /// (variables `X1..`, one per index).
    ///
    /// `X'_k = X_k⁻¹`, and `X'_i = X_i (1 + X_k^{−sgn ε_ik})^{−ε_ik}`.
    pub fn x_substitution(&self, k: usize) -> Result<Vec<RationalFunction>> {
        self.require_mutable(k)?;
        let vars = x_var_names(self.len());
        let x = |i: usize| LaurentPolynomial::variable(&vars, i);
        let mut out = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let e = self.epsilon[i][k];
            let r = if i == k {
                RationalFunction::from_laurent(x(k).powi(-1)?)
            } else if e == 0 {
                RationalFunction::from_laurent(x(i))
            } else {
                let base = LaurentPolynomial::one(&vars).add(&x(k).powi(-e.signum())?)?;
                let factor = base.pow(e.unsigned_abs() as u32);
                if e < 0 {
                    RationalFunction::from_laurent(x(i).mul(&factor)?)
                } else {
                    RationalFunction::new(x(i), factor)?
                }
            };
            out.push(r);
        }
        Ok(out)
    }

    /// `A'_i` of `μ_k(self)` in this seed's `A` (variables `A1..`).
    pub fn a_substitution(&self, k: usize) -> Result<Vec<LaurentPolynomial>> {
        self.require_mutable(k)?;
        let vars = a_var_names(self.len());
        let mut out: Vec<LaurentPolynomial> =
            (0..self.len()).map(|i| LaurentPolynomial::variable(&vars, i)).collect();
        let row = &self.epsilon[k];
        let mut pos = vec![0i64; self.len()];
        let mut neg = vec![0i64; self.len()];
        for (j, &e) in row.iter().enumerate() {
            if e > 0 {
                pos[j] = e;
            } else {
                neg[j] = -e;
            }
        }
        pos[k] -= 1;
        neg[k] -= 1;
        out[k] = LaurentPolynomial::from_terms(
            &vars,
            [(pos, BigInt::one()), (neg, BigInt::one())],
        )?;
        Ok(out)
    }

    /// `p* X_i = Π_j A_j^{ε_ij}`.
    pub fn p_star(&self, i: usize) -> Result<LaurentPolynomial> {
        self.require_mutable(i)?;
        Ok(LaurentPolynomial::monomial(
            &a_var_names(self.len()),
            self.epsilon[i].clone(),
            1,
        ))
    }

    /// Same seed with indices renamed: new index `k` is old index `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Seed> {
        if perm.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: perm.len(),
            });
        }
        let mut inv = vec![usize::MAX; perm.len()];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        Ok(Seed {
            epsilon: perm
                .iter()
                .map(|&i| perm.iter().map(|&j| self.epsilon[i][j]).collect())
                .collect(),
            frozen: self.frozen.iter().map(|&f| inv[f]).collect(),
            d: perm.iter().map(|&i| self.d[i].clone()).collect(),
        })
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.epsilon[i][j] == -self.epsilon[j][i]))
    }
}

/// Type `A_n` seed from the Cartan matrix: off-diagonal `−1` entries stay
/// above the diagonal and flip sign below, so `ε_{i,i+1} = −1` and
/// `ε_{i+1,i} = 1`.
pub fn seed_from_cartan_an(n: usize) -> Result<Seed> {
    if n == 0 {
        return Err(Error::InvalidPolygon(3));
    }
    let mut e = vec![vec![0i64; n]; n];
    for i in 0..n - 1 {
        e[i][i + 1] = -1;
        e[i + 1][i] = 1;
    }
    Seed::skew_symmetric(e)
}

pub fn x_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

pub fn a_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("A{i}")).collect()
}

/// Parses a 1-based mutation word such as `1,2,1` into 0-based indices.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            let k: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad mutation index {t:?}")))?;
            k.checked_sub(1)
                .ok_or_else(|| Error::Parse("mutation indices start at 1".into()))
        })
        .collect()
}
