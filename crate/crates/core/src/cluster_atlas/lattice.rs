use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::seed::Seed;
use crate::error::{Error, Result};

/// The map `τ(b)_j = Σ_i b_i ε_ij` from exponents of unfrozen `X` to
/// exponents of all `A`, with a precomputed rational left inverse.
#[derive(Debug, Clone)]
pub struct MonomialLattice {
    seed: Seed,
    unfrozen: Vec<usize>,
    /// Rows of `τ` (indices into `I`) forming an invertible square block.
    pivots: Vec<usize>,
    /// Inverse of that block; `b = inverse · a[pivots]`.
    inverse: Vec<Vec<BigRational>>,
}

impl MonomialLattice {
    pub fn new(seed: Seed) -> Result<Self> {
        let unfrozen = seed.unfrozen();
        let n = unfrozen.len();
        let row = |j: usize| -> Vec<BigRational> {
            unfrozen
                .iter()
                .map(|&i| BigRational::from_integer(seed.eps(i, j).into()))
                .collect()
        };

        // Greedy row selection with an incrementally reduced basis.
        let mut pivots = Vec::new();
        let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
        for j in 0..seed.len() {
            if pivots.len() == n {
                break;
            }
            let mut v = row(j);
            for (col, b) in &basis {
                if !v[*col].is_zero() {
                    let f = v[*col].clone() / &b[*col];
                    for (x, y) in v.iter_mut().zip(b) {
                        *x -= &f * y;
                    }
                }
            }
            if let Some(col) = v.iter().position(|x| !x.is_zero()) {
                basis.push((col, v));
                pivots.push(j);
            }
        }
        if pivots.len() < n {
            return Err(Error::RankDeficient);
        }

        let block: Vec<Vec<BigRational>> = pivots.iter().map(|&j| row(j)).collect();
        let inverse = invert(block).ok_or(Error::RankDeficient)?;
        Ok(MonomialLattice {
            seed,
            unfrozen,
            pivots,
            inverse,
        })
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    /// Number of `X` exponents (unfrozen indices).
    pub fn rank(&self) -> usize {
        self.unfrozen.len()
    }

    pub fn tau(&self, b: &[i64]) -> Result<Vec<i64>> {
        if b.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: b.len(),
            });
        }
        Ok((0..self.seed.len())
            .map(|j| {
                self.unfrozen
                    .iter()
                    .zip(b)
                    .map(|(&i, bi)| bi * self.seed.eps(i, j))
                    .sum()
            })
            .collect())
    }

    /// The unique `b` with `τ(b) = a`, or `None` when `a` is outside the image.
    pub fn tau_inverse(&self, a: &[i64]) -> Result<Option<Vec<i64>>> {
        if a.len() != self.seed.len() {
            return Err(Error::DimensionMismatch {
                expected: self.seed.len(),
                found: a.len(),
            });
        }
        let mut b = Vec::with_capacity(self.rank());
        for row in &self.inverse {
            let v: BigRational = row
                .iter()
                .zip(&self.pivots)
                .map(|(x, &j)| x * BigRational::from_integer(a[j].into()))
                .sum();
            if !v.is_integer() {
                return Ok(None);
            }
            match v.to_integer().to_i64() {
                Some(x) => b.push(x),
                None => return Ok(None),
            }
        }
        Ok((self.tau(&b)? == a).then_some(b))
    }
}

/// Gauss–Jordan inverse over `ℚ`.
fn invert(mut m: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut().chain(inv[col].iter_mut()) {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src_m, src_inv) = (m[col].clone(), inv[col].clone());
                for (x, y) in m[r].iter_mut().zip(&src_m) {
                    *x -= &f * y;
                }
                for (x, y) in inv[r].iter_mut().zip(&src_inv) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster_atlas::seed::seed_from_cartan_an;

    #[test]
    fn a2_lattice() {
        let l = MonomialLattice::new(seed_from_cartan_an(2).unwrap()).unwrap();
        assert_eq!(l.tau_inverse(&[0, 0]).unwrap(), Some(vec![0, 0]));
        assert_eq!(l.tau(&[1, 0]).unwrap(), vec![0, -1]);
        for b in [[3, -2], [0, 5], [-7, -1]] {
            assert_eq!(l.tau_inverse(&l.tau(&b).unwrap()).unwrap(), Some(b.to_vec()));
        }
    }

    #[test]
    fn odd_rank_is_deficient() {
        assert_eq!(
            MonomialLattice::new(seed_from_cartan_an(3).unwrap()).err(),
            Some(Error::RankDeficient)
        );
    }

    #[test]
    fn image_lattice_membership() {
        // ε = [[0, 2], [-2, 0]]: τ(b) = (−2 b2, 2 b1); odd entries are outside.
        let s = Seed::skew_symmetric(vec![vec![0, 2], vec![-2, 0]]).unwrap();
        let l = MonomialLattice::new(s).unwrap();
        assert_eq!(l.tau_inverse(&[2, 4]).unwrap(), Some(vec![2, -1]));
        assert_eq!(l.tau_inverse(&[1, 0]).unwrap(), None);
    }
}
