//! The multilinear representation over the integers.
//!
//! Every 0/1-valued table has a unique multilinear polynomial
//! `sum_S a_S prod_{i in S} x_i` agreeing with it on `{0,1}^n`; the
//! coefficients are integers obtained by the subset Möbius transform
//! `a_S = sum_{T ⊆ S} (-1)^{|S|-|T|} f(T)`. Coefficient maps store only
//! nonzero entries, keyed by the variable mask of the monomial.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::table::TruthTable;

/// Dense Möbius coefficients, indexed by monomial mask.
pub(crate) fn mobius_dense(tt: &TruthTable) -> Vec<i64> {
    let n = tt.arity();
    let len = 1usize << n;
    let mut a: Vec<i64> = (0..len).map(|k| i64::from(tt.get(k as u32))).collect();
    for i in 0..n {
        let step = 1usize << i;
        let mut base = 0;
        while base < len {
            for off in 0..step {
                a[base + step + off] -= a[base + off];
            }
            base += step * 2;
        }
    }
    a
}

/// In-place zeta transform (inverse of the Möbius transform): point values
/// from coefficients.
fn zeta_dense(a: &mut [i64], n: usize) {
    let len = 1usize << n;
    debug_assert_eq!(a.len(), len);
    for i in 0..n {
        let step = 1usize << i;
        let mut base = 0;
        while base < len {
            for off in 0..step {
                a[base + step + off] += a[base + off];
            }
            base += step * 2;
        }
    }
}

/// A multilinear polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearPoly {
    n: usize,
    coeffs: BTreeMap<u32, i64>,
}

impl MultilinearPoly {
    /// Build from a coefficient map; zero entries are dropped.
    pub fn new(n: usize, coeffs: BTreeMap<u32, i64>) -> Result<Self> {
        if n > 32 {
            return Err(Error::ArityTooLarge { n, max: 32 });
        }
        for &mask in coeffs.keys() {
            if n < 32 && mask >> n != 0 {
                let index = 32 - mask.leading_zeros() as usize;
                return Err(Error::IndexOutOfRange { index, arity: n });
            }
        }
        let coeffs = coeffs.into_iter().filter(|&(_, c)| c != 0).collect();
        Ok(MultilinearPoly { n, coeffs })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Nonzero coefficients, keyed by monomial mask.
    pub fn coefficients(&self) -> &BTreeMap<u32, i64> {
        &self.coeffs
    }

    /// Coefficient of the monomial with variable set `mask` (0 if absent).
    pub fn coefficient(&self, mask: u32) -> i64 {
        self.coeffs.get(&mask).copied().unwrap_or(0)
    }

    /// Degree: max monomial size, 0 for constants.
    pub fn degree(&self) -> usize {
        self.coeffs
            .keys()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Union of all monomial masks.
    pub fn support_union(&self) -> u32 {
        self.coeffs.keys().fold(0, |acc, m| acc | m)
    }

    /// Value at a 0/1 point: sum of coefficients of monomials contained in
    /// the point's set of ones.
    pub fn evaluate(&self, point: u32) -> i64 {
        self.coeffs
            .iter()
            .filter(|&(&mask, _)| mask & !point == 0)
            .map(|(_, &c)| c)
            .sum()
    }

    /// True iff every vertex value is 0 or 1.
    pub fn is_boolean(&self) -> bool {
        self.to_table().is_ok()
    }

    /// Inverse transform back to a table.
    ///
    /// Fails with [`Error::NotBooleanValued`] at the first point whose value
    /// is outside `{0,1}`.
    pub fn to_table(&self) -> Result<TruthTable> {
        let len = 1usize << self.n;
        let mut a = vec![0i64; len];
        for (&mask, &c) in &self.coeffs {
            a[mask as usize] = c;
        }
        zeta_dense(&mut a, self.n);
        let mut tt = TruthTable::zeros(self.n)?;
        for (k, &v) in a.iter().enumerate() {
            match v {
                0 => {}
                1 => tt.set(k as u32, true),
                _ => {
                    return Err(Error::NotBooleanValued {
                        point: k as u32,
                        value: v,
                    })
                }
            }
        }
        Ok(tt)
    }
}

impl TruthTable {
    /// The multilinear representation of this table.
    pub fn mobius(&self) -> MultilinearPoly {
        let dense = mobius_dense(self);
        let coeffs = dense
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(mask, &c)| (mask as u32, c))
            .collect();
        MultilinearPoly {
            n: self.arity(),
            coeffs,
        }
    }

    /// Degree of the multilinear representation; 0 for constants.
    pub fn degree(&self) -> usize {
        let dense = mobius_dense(self);
        dense
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(mask, _)| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Mask of variables appearing in some nonzero monomial.
    pub fn relevant_vars(&self) -> u32 {
        let dense = mobius_dense(self);
        dense
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .fold(0u32, |acc, (mask, _)| acc | mask as u32)
    }

    /// Number of relevant variables.
    pub fn relevant_count(&self) -> usize {
        self.relevant_vars().count_ones() as usize
    }
}
