//! Exhaustive search over small arities with canonical-form reduction.
//!
//! Tables are grouped under variable permutation, per-variable input
//! complementation, and output negation; degree, relevant count, weight,
//! and hitting-set size are constant on each class, so it suffices to score
//! canonical representatives. The canonical form is the numerically
//! smallest packed table over the group orbit.
//!
//! The enumeration shards the raw table space across workers. Each worker
//! folds maxima locally and the shards are merged with an associative,
//! commutative max (ties break toward the numerically smallest witness),
//! so the result is identical for any worker count.

use std::cmp::Ordering;

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::maxonomial::min_hitting_set;
use crate::measures::weight_profile;
use crate::table::TruthTable;

/// Orbit minimization enumerates the full group (`n! * 2^n * 2` elements).
pub const MAX_SEARCH_ARITY: usize = 5;

fn check_search_arity(n: usize) -> Result<()> {
    if n > MAX_SEARCH_ARITY {
        return Err(Error::ArityTooLargeForSearch {
            n,
            limit: MAX_SEARCH_ARITY,
        });
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut items: Vec<u8> = (0..n as u8).collect();
    fn heap(k: usize, items: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out.sort_unstable();
    out
}

/// Apply `(perm, compl, negate)`: the image `g` satisfies
/// `g(y) = f(x) ^ negate` with `x_j = y_{perm[j]} ^ compl_j`.
fn transform_word(word: u64, n: usize, perm: &[u8], compl: u32, negate: bool) -> u64 {
    let points = 1u32 << n;
    let mut out = 0u64;
    for y in 0..points {
        let mut x = 0u32;
        for (j, &p) in perm.iter().enumerate() {
            x |= (((y >> p) & 1) ^ ((compl >> j) & 1)) << j;
        }
        if (word >> x) & 1 == 1 {
            out |= 1u64 << y;
        }
    }
    if negate {
        out ^= if n == 6 {
            u64::MAX
        } else {
            (1u64 << points) - 1
        };
    }
    out
}

fn orbit_min(word: u64, n: usize, perms: &[Vec<u8>]) -> u64 {
    let mut best = word;
    for perm in perms {
        for compl in 0..(1u32 << n) {
            for negate in [false, true] {
                let t = transform_word(word, n, perm, compl, negate);
                if t < best {
                    best = t;
                }
            }
        }
    }
    best
}

/// `Some(stabilizer size)` when `word` is its orbit's minimum, else `None`.
/// Exits early on the first strictly smaller image.
fn orbit_scan(word: u64, n: usize, perms: &[Vec<u8>]) -> Option<u64> {
    let mut stabilizer = 0u64;
    for perm in perms {
        for compl in 0..(1u32 << n) {
            for negate in [false, true] {
                let t = transform_word(word, n, perm, compl, negate);
                match t.cmp(&word) {
                    Ordering::Less => return None,
                    Ordering::Equal => stabilizer += 1,
                    Ordering::Greater => {}
                }
            }
        }
    }
    Some(stabilizer)
}

fn group_order(n: usize) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    fact * (1u64 << n) * 2
}

/// The group-minimal representative of a table's equivalence class.
pub fn npn_canonical(tt: &TruthTable) -> Result<TruthTable> {
    let n = tt.arity();
    check_search_arity(n)?;
    let perms = permutations(n);
    let best = orbit_min(tt.word(), n, &perms);
    TruthTable::from_word(n, best)
}

/// One equivalence class: its canonical table and the number of raw tables
/// mapping to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NpnClass {
    pub representative: TruthTable,
    pub size: u64,
}

/// All classes on `n` variables, ascending by representative. Class sizes
/// come from the orbit-stabilizer count, so they sum to `2^(2^n)`.
pub fn enumerate_classes(n: usize) -> Result<Vec<NpnClass>> {
    check_search_arity(n)?;
    let perms = permutations(n);
    let order = group_order(n);
    let total: u64 = 1u64 << (1usize << n);
    let mut out = Vec::new();
    for word in 0..total {
        if let Some(stab) = orbit_scan(word, n, &perms) {
            out.push(NpnClass {
                representative: TruthTable::from_word(n, word)?,
                size: order / stab,
            });
        }
    }
    Ok(out)
}

/// Maxima of the three quantities over all functions of one exact degree,
/// with the numerically smallest witness attaining each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeExtremes {
    pub degree: usize,
    pub max_r: usize,
    pub witness_r: TruthTable,
    pub max_w: DyadicRational,
    pub witness_w: TruthTable,
    pub max_h: usize,
    pub witness_h: TruthTable,
}

/// Per-degree maxima of relevant-variable count, total weight, and hitting
/// set size over all functions on `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub n: usize,
    pub rows: Vec<DegreeExtremes>,
}

impl ExtremalRecord {
    pub fn row(&self, degree: usize) -> &DegreeExtremes {
        &self.rows[degree]
    }

    /// Max total weight over all functions of degree at most `degree`.
    pub fn max_weight_up_to_degree(&self, degree: usize) -> DyadicRational {
        self.rows[..=degree]
            .iter()
            .map(|r| r.max_w)
            .max()
            .unwrap_or(DyadicRational::ZERO)
    }

    /// Max relevant count over all functions of degree at most `degree`.
    pub fn max_r_up_to_degree(&self, degree: usize) -> usize {
        self.rows[..=degree]
            .iter()
            .map(|r| r.max_r)
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone)]
struct RowAcc {
    max_r: (usize, u64),
    max_w: (DyadicRational, u64),
    max_h: (usize, u64),
}

#[derive(Clone)]
struct Fold {
    rows: Vec<Option<RowAcc>>,
}

fn better<T: Ord + Copy>(current: &mut (T, u64), value: T, word: u64) {
    match value.cmp(&current.0) {
        Ordering::Greater => *current = (value, word),
        Ordering::Equal => {
            if word < current.1 {
                current.1 = word;
            }
        }
        Ordering::Less => {}
    }
}

impl Fold {
    fn new(n: usize) -> Self {
        Fold {
            rows: vec![None; n + 1],
        }
    }

    fn add(&mut self, word: u64, degree: usize, r: usize, w: DyadicRational, h: usize) {
        match &mut self.rows[degree] {
            Some(acc) => {
                better(&mut acc.max_r, r, word);
                better(&mut acc.max_w, w, word);
                better(&mut acc.max_h, h, word);
            }
            slot @ None => {
                *slot = Some(RowAcc {
                    max_r: (r, word),
                    max_w: (w, word),
                    max_h: (h, word),
                });
            }
        }
    }

    fn merge(&mut self, other: Fold) {
        for (mine, theirs) in self.rows.iter_mut().zip(other.rows) {
            match (mine.as_mut(), theirs) {
                (Some(a), Some(b)) => {
                    better(&mut a.max_r, b.max_r.0, b.max_r.1);
                    better(&mut a.max_w, b.max_w.0, b.max_w.1);
                    better(&mut a.max_h, b.max_h.0, b.max_h.1);
                }
                (None, Some(b)) => *mine = Some(b),
                _ => {}
            }
        }
    }

    fn into_record(self, n: usize) -> ExtremalRecord {
        let rows = self
            .rows
            .into_iter()
            .enumerate()
            .map(|(degree, acc)| {
                let acc = acc.expect("every degree up to n is realized");
                DegreeExtremes {
                    degree,
                    max_r: acc.max_r.0,
                    witness_r: TruthTable::from_word(n, acc.max_r.1).unwrap(),
                    max_w: acc.max_w.0,
                    witness_w: TruthTable::from_word(n, acc.max_w.1).unwrap(),
                    max_h: acc.max_h.0,
                    witness_h: TruthTable::from_word(n, acc.max_h.1).unwrap(),
                }
            })
            .collect();
        ExtremalRecord { n, rows }
    }
}

fn score_word(word: u64, n: usize, fold: &mut Fold) {
    let tt = TruthTable::from_word(n, word).unwrap();
    let degree = tt.degree();
    let r = tt.relevant_count();
    let w = weight_profile(&tt).total();
    let h = min_hitting_set(&tt).size;
    fold.add(word, degree, r, w, h);
}

fn scan_range(n: usize, range: std::ops::Range<u64>, perms: &[Vec<u8>], reduce: bool) -> Fold {
    let mut fold = Fold::new(n);
    for word in range {
        if reduce && orbit_scan(word, n, perms).is_none() {
            continue;
        }
        score_word(word, n, &mut fold);
    }
    fold
}

fn extremal(n: usize, jobs: usize, reduce: bool) -> Result<ExtremalRecord> {
    check_search_arity(n)?;
    let perms = permutations(n);
    let total: u64 = 1u64 << (1usize << n);
    let jobs = jobs.clamp(1, 64) as u64;
    let fold = if jobs == 1 {
        scan_range(n, 0..total, &perms, reduce)
    } else {
        let chunk = total.div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let start = j * chunk;
                    let end = total.min(start + chunk);
                    let perms = &perms;
                    scope.spawn(move || scan_range(n, start..end, perms, reduce))
                })
                .collect();
            let mut fold = Fold::new(n);
            for handle in handles {
                fold.merge(handle.join().expect("search worker panicked"));
            }
            fold
        })
    };
    Ok(fold.into_record(n))
}

/// Exact per-degree maxima with class reduction, sharded over `jobs`
/// workers. Output is independent of the worker count.
pub fn extremal_table(n: usize, jobs: usize) -> Result<ExtremalRecord> {
    extremal(n, jobs, true)
}

/// Validation path: the same maxima folded over every raw table with no
/// canonicalization.
pub fn extremal_table_brute(n: usize) -> Result<ExtremalRecord> {
    extremal(n, 1, false)
}
