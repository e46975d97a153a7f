//! Per-variable degrees, dyadic weights, block sensitivity, and the
//! restriction-averaging inequality on weights.
//!
//! `deg_i` is the largest monomial containing variable `i`; its weight is
//! `w_i = 2^{-deg_i}`, with `w_i = 0` for irrelevant variables so that the
//! total weight `W = sum_i w_i` is defined over the full index set. Weight
//! comparisons are exact: the inequalities checked here can be tight.

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::maxonomial::max_disjoint_packing;
use crate::poly::mobius_dense;
use crate::table::{full_var_mask, PartialAssignment, TruthTable};

/// Largest arity accepted by [`block_sensitivity`]; the exact algorithm
/// enumerates all `2^n` blocks at each of the `2^n` inputs.
pub const DEFAULT_BS_LIMIT: usize = 16;

/// `deg_i` for every variable at once; `None` marks irrelevant variables.
pub fn per_variable_degrees(tt: &TruthTable) -> Vec<Option<usize>> {
    let n = tt.arity();
    let dense = mobius_dense(tt);
    let mut degs: Vec<Option<usize>> = vec![None; n];
    for (mask, &c) in dense.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let size = (mask as u32).count_ones() as usize;
        let mut m = mask as u32;
        while m != 0 {
            let var = m.trailing_zeros() as usize;
            if degs[var].is_none_or(|d| d < size) {
                degs[var] = Some(size);
            }
            m &= m - 1;
        }
    }
    degs
}

/// Max size of a nonzero monomial containing variable `i` (1-based);
/// `None` if `i` is irrelevant.
pub fn deg_i(tt: &TruthTable, i: usize) -> Result<Option<usize>> {
    if i == 0 || i > tt.arity() {
        return Err(Error::IndexOutOfRange {
            index: i,
            arity: tt.arity(),
        });
    }
    Ok(per_variable_degrees(tt)[i - 1])
}

/// `2^{-deg_i}`, or zero for an irrelevant variable.
pub fn weight_i(tt: &TruthTable, i: usize) -> Result<DyadicRational> {
    Ok(match deg_i(tt, i)? {
        Some(d) => DyadicRational::pow2_neg(d as u32),
        None => DyadicRational::ZERO,
    })
}

/// All per-variable weights plus their exact sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    weights: Vec<DyadicRational>,
    total: DyadicRational,
}

impl WeightProfile {
    /// Weight of variable `i` (1-based).
    pub fn weight_of(&self, i: usize) -> DyadicRational {
        self.weights[i - 1]
    }

    /// Weights indexed by variable order (entry 0 is variable 1).
    pub fn weights(&self) -> &[DyadicRational] {
        &self.weights
    }

    /// `W(f)`, the exact sum of all entries.
    pub fn total(&self) -> DyadicRational {
        self.total
    }
}

pub fn weight_profile(tt: &TruthTable) -> WeightProfile {
    let weights: Vec<DyadicRational> = per_variable_degrees(tt)
        .into_iter()
        .map(|d| match d {
            Some(d) => DyadicRational::pow2_neg(d as u32),
            None => DyadicRational::ZERO,
        })
        .collect();
    let total = weights.iter().copied().sum();
    WeightProfile { weights, total }
}

/// Exact block sensitivity with the default arity limit.
pub fn block_sensitivity(tt: &TruthTable) -> Result<usize> {
    block_sensitivity_with_limit(tt, DEFAULT_BS_LIMIT)
}

/// Exact block sensitivity: the max over inputs `x` of the largest family
/// of pairwise-disjoint blocks `B` with `f(x ^ B) != f(x)`.
///
/// Restricting to minimal sensitive blocks loses nothing: any disjoint
/// sensitive family stays disjoint after shrinking each block to a minimal
/// sensitive subset.
pub fn block_sensitivity_with_limit(tt: &TruthTable, limit: usize) -> Result<usize> {
    let n = tt.arity();
    if n > limit {
        return Err(Error::ArityTooLargeForExact { n, limit });
    }
    let mut best = 0usize;
    let mut minimal: Vec<u32> = Vec::new();
    for x in 0..tt.num_points() as u32 {
        let fx = tt.get(x);
        minimal.clear();
        // Ascending masks visit every subset before its supersets.
        for block in 1..tt.num_points() as u32 {
            if tt.get(x ^ block) != fx
                && !minimal.iter().any(|&m| m & block == m)
            {
                minimal.push(block);
            }
        }
        best = best.max(max_disjoint_packing(&minimal).len());
    }
    Ok(best)
}

/// Both sides of the restriction-averaging inequality
/// `w_i(f) <= 2^{-|J|} sum_{alpha in PA(J)} w_i(f_alpha)`, compared exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub lhs: DyadicRational,
    pub rhs: DyadicRational,
    pub holds: bool,
}

/// Evaluate the inequality for a fixed set `j_mask` and a variable `i` not
/// in it. Restrictions renumber `i` past the fixed variables below it.
pub fn check_claim_wi(tt: &TruthTable, j_mask: u32, i: usize) -> Result<ClaimCheck> {
    let n = tt.arity();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, arity: n });
    }
    assert_eq!(j_mask & !full_var_mask(n), 0, "fixed mask exceeds arity");
    let bit = 1u32 << (i - 1);
    if j_mask & bit != 0 {
        return Err(Error::VariableInRestriction { index: i });
    }
    let lhs = weight_i(tt, i)?;
    let below = (j_mask & (bit - 1)).count_ones() as usize;
    let renumbered = i - below;
    let mut sum = DyadicRational::ZERO;
    for pa in PartialAssignment::all_over(j_mask) {
        sum += weight_i(&tt.restrict(&pa), renumbered)?;
    }
    let rhs = sum.div_pow2(j_mask.count_ones());
    Ok(ClaimCheck {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}
