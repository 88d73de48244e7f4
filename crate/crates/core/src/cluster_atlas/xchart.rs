use super::seed::{x_var_names, Seed};
use super::triangulated::{flip_word, TriangulationSeed};
use crate::error::{Error, Result};
use crate::exact_algebra::{LaurentPolynomial, RationalFunction};
use crate::polygon::{Segment, Triangulation};

/// Rewrites `f`, a Laurent polynomial in the `X` chart of `seed` (variables
/// `X1..`), in the chart reached by mutating along `word` (0-based, left to
/// right). Positions keep their variable names.
///
/// Each step substitutes the old coordinates in terms of the new ones, which
/// by involutivity is the `X`-substitution of the mutated seed, and then
/// divides exactly. `NotDivisible` means `f` is not regular on that chart.
pub fn expand_in_x_chart(f: &LaurentPolynomial, seed: &Seed, word: &[usize]) -> Result<LaurentPolynomial> {
    let seed = seed.reduced();
    let vars = x_var_names(seed.len());
    if f.vars() != vars.as_slice() {
        return Err(Error::VariableMismatch);
    }
    let mut cur_seed = seed;
    let mut cur = f.clone();
    for &k in word {
        let next = cur_seed.mutate(k)?;
        let back = next.x_substitution(k)?;
        cur = RationalFunction::compose_laurent(&cur, &back)?;
        cur_seed = next;
    }
    Ok(cur)
}

/// Rewrites `f` from the `X` chart of triangulation `from` into the `X` chart
/// of `to`. In both, `Xk` belongs to the k-th diagonal in sorted order.
pub fn change_x_chart(f: &LaurentPolynomial, from: &Triangulation, to: &Triangulation) -> Result<LaurentPolynomial> {
    let seed = TriangulationSeed::new(from)?.seed().reduced();
    let (word, labels) = flip_word(from, to)?;
    let g = expand_in_x_chart(f, &seed, &word)?;
    let sorted: Vec<Segment> = to.diagonals().iter().copied().collect();
    let perm: Vec<usize> = sorted
        .iter()
        .map(|d| labels.iter().position(|l| l == d).expect("same diagonals"))
        .collect();
    g.permute_vars(&perm)?.with_vars(&x_var_names(sorted.len()))
}
