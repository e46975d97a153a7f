//! Function constructions: the selector combination, an iterated selector
//! chain, the recursive high-junta family `xi`, AND-splitting of a
//! variable, and block composition.
//!
//! Every construction uses a fixed, documented variable layout so emitted
//! tables are stable:
//!
//! * `selector(f, g)`: variable 1 is the new selector `z`, then `f`'s
//!   variables, then `g`'s.
//! * `xi(d)`: variables `(s, t, x-block, y-block)` with the two recursion
//!   blocks laid out in that order.
//! * `and_split(f, i)`: the first replacement variable takes position `i`,
//!   the second is appended as variable `n + 1`.
//! * `compose(f, g)`: inner variable `(i, j)` maps to flat index
//!   `(i - 1) * m + j` (row-major blocks).

use crate::error::{Error, Result};
use crate::table::{full_var_mask, max_arity, TruthTable};

/// `z*f + (1-z)*g` on disjoint variable blocks: computes `f` when the new
/// first variable `z` is 1 and `g` when it is 0.
pub fn selector(f: &TruthTable, g: &TruthTable) -> Result<TruthTable> {
    let nf = f.arity();
    let ng = g.arity();
    let n = 1 + nf + ng;
    if n > max_arity() {
        return Err(Error::ArityTooLarge { n, max: max_arity() });
    }
    let f_mask = full_var_mask(nf);
    let g_mask = full_var_mask(ng);
    TruthTable::from_fn(n, |point| {
        if point & 1 == 1 {
            f.get((point >> 1) & f_mask)
        } else {
            g.get((point >> (1 + nf)) & g_mask)
        }
    })
}

/// Selector applied to two fresh copies of the previous level, `d` levels
/// deep: a read-once decision tree of depth `d` on `2^d - 1` variables.
pub fn iterate_selector(d: usize) -> Result<TruthTable> {
    assert!(d >= 1, "selector chain depth must be at least 1");
    let mut t = TruthTable::variable(1, 1)?;
    for _ in 1..d {
        t = selector(&t, &t)?;
    }
    Ok(t)
}

/// Number of variables of [`xi`] at level `d`: `3 * 2^(d-1) - 2`.
pub fn xi_arity(d: usize) -> usize {
    assert!(d >= 1);
    3 * (1usize << (d - 1)) - 2
}

/// Level-`d` member of the recursive family, wrapped with its level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiFunction {
    level: usize,
    table: TruthTable,
}

impl XiFunction {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn table(&self) -> &TruthTable {
        &self.table
    }

    pub fn into_table(self) -> TruthTable {
        self.table
    }
}

/// The recursive family over the `{-1,1}` domain, converted to `{0,1}`
/// tables with bit `b` standing for `1 - 2b` (bit 0 is +1).
///
/// Level 1 is the identity on one variable. Level `d` on
/// `(s, t, x-block, y-block)` equals `s * xi_{d-1}(x)` when `s = t` and
/// `s * xi_{d-1}(y)` otherwise; a `{-1,1}` product is a bit XOR, so each
/// output bit is `s ^ xi_{d-1}(chosen block)`.
pub fn xi(d: usize) -> Result<XiFunction> {
    assert!(d >= 1, "xi level must be at least 1");
    let n = xi_arity(d);
    if n > max_arity() {
        return Err(Error::ArityTooLarge { n, max: max_arity() });
    }
    let mut table = TruthTable::variable(1, 1)?;
    for level in 2..=d {
        let prev = table;
        let prev_arity = xi_arity(level - 1);
        let block_mask = full_var_mask(prev_arity);
        table = TruthTable::from_fn(xi_arity(level), |point| {
            let s = point & 1;
            let t = (point >> 1) & 1;
            let block = if s == t {
                (point >> 2) & block_mask
            } else {
                (point >> (2 + prev_arity)) & block_mask
            };
            (s == 1) ^ prev.get(block)
        })?;
    }
    Ok(XiFunction { level: d, table })
}

/// Replace variable `i` of `f` by the AND of two fresh variables: the first
/// sits at position `i`, the second is appended last.
pub fn and_split(f: &TruthTable, i: usize) -> Result<TruthTable> {
    let n = f.arity();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, arity: n });
    }
    if f.relevant_vars() & (1 << (i - 1)) == 0 {
        return Err(Error::IrrelevantVariable { index: i });
    }
    if n + 1 > max_arity() {
        return Err(Error::ArityTooLarge {
            n: n + 1,
            max: max_arity(),
        });
    }
    let bit = 1u32 << (i - 1);
    let inner_mask = full_var_mask(n);
    TruthTable::from_fn(n + 1, |point| {
        let y = point & bit != 0;
        let z = point >> n & 1 == 1;
        let inner = (point & inner_mask & !bit) | if y && z { bit } else { 0 };
        f.get(inner)
    })
}

/// `f` applied to `n` block-wise copies of `g`: a function on `n * m`
/// variables where block `i` feeds the `i`-th input of `f`.
pub fn compose(f: &TruthTable, g: &TruthTable) -> Result<TruthTable> {
    let n = f.arity();
    let m = g.arity();
    let total = n * m;
    if total > max_arity() {
        return Err(Error::ArityTooLarge {
            n: total,
            max: max_arity(),
        });
    }
    let block_mask = full_var_mask(m);
    TruthTable::from_fn(total, |point| {
        let mut outer = 0u32;
        for i in 0..n {
            if g.get((point >> (i * m)) & block_mask) {
                outer |= 1 << i;
            }
        }
        f.get(outer)
    })
}
