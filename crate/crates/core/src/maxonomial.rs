//! Maxonomials of a function and exact minimum hitting sets over them.
//!
//! A maxonomial is the variable set of a top-degree monomial with nonzero
//! coefficient. `min_hitting_set` solves the covering problem exactly by
//! branch and bound: a greedy cover gives the upper bound, a disjoint
//! packing of maxonomials gives the lower bound, and branching fixes the
//! most frequent variable in or out. Ties always break toward the lowest
//! variable index, so results are reproducible bit for bit.

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::measures::{per_variable_degrees, weight_profile};
use crate::poly::mobius_dense;
use crate::table::{full_var_mask, PartialAssignment, TruthTable};

/// Variable sets of all top-degree monomials, sorted ascending by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxonomialSet {
    degree: usize,
    masks: Vec<u32>,
}

impl MaxonomialSet {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }
}

/// The maxonomials of a non-constant function.
pub fn maxonomials(tt: &TruthTable) -> Result<MaxonomialSet> {
    let dense = mobius_dense(tt);
    let degree = dense
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(mask, _)| (mask as u32).count_ones() as usize)
        .max()
        .unwrap_or(0);
    if degree == 0 {
        return Err(Error::ConstantFunction);
    }
    let masks: Vec<u32> = dense
        .iter()
        .enumerate()
        .filter(|&(mask, &c)| c != 0 && (mask as u32).count_ones() as usize == degree)
        .map(|(mask, _)| mask as u32)
        .collect();
    Ok(MaxonomialSet { degree, masks })
}

/// True iff `h_mask` intersects every maxonomial. Constants have no
/// maxonomials, so any set hits them vacuously.
pub fn verify_hitting_set(tt: &TruthTable, h_mask: u32) -> bool {
    match maxonomials(tt) {
        Err(_) => true,
        Ok(set) => set.masks().iter().all(|&m| m & h_mask != 0),
    }
}

/// Outcome of the exact solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSetResult {
    /// A minimum hitting set.
    pub set: u32,
    /// `h(f)`, its size.
    pub size: usize,
    /// Pairwise-disjoint maxonomials of cardinality `size`, when such a
    /// packing exists; it certifies optimality independently of the solver.
    pub certificate: Option<Vec<u32>>,
}

/// Largest family of pairwise-disjoint masks, found by exhaustive
/// branch and bound over the masks in ascending order.
pub(crate) fn max_disjoint_packing(masks: &[u32]) -> Vec<u32> {
    fn recurse(masks: &[u32], idx: usize, used: u32, current: &mut Vec<u32>, best: &mut Vec<u32>) {
        if current.len() + (masks.len() - idx) <= best.len() {
            return;
        }
        if idx == masks.len() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        let m = masks[idx];
        if m & used == 0 {
            current.push(m);
            recurse(masks, idx + 1, used | m, current, best);
            current.pop();
        }
        recurse(masks, idx + 1, used, current, best);
    }
    let mut sorted = masks.to_vec();
    sorted.sort_unstable();
    let mut best = Vec::new();
    recurse(&sorted, 0, 0, &mut Vec::new(), &mut best);
    best
}

/// Cheap lower bound: size of a greedy disjoint family.
fn greedy_packing_count(masks: &[u32]) -> usize {
    let mut used = 0u32;
    let mut count = 0;
    for &m in masks {
        if m & used == 0 {
            used |= m;
            count += 1;
        }
    }
    count
}

/// Most frequent variable over `masks` restricted to `allowed`, ties to the
/// lowest index. Returns a bit mask, or 0 when nothing is allowed.
fn most_frequent_var(masks: &[u32], allowed: u32) -> u32 {
    let mut best_bit = 0u32;
    let mut best_count = 0usize;
    let mut candidates = allowed;
    while candidates != 0 {
        let bit = candidates & candidates.wrapping_neg();
        let count = masks.iter().filter(|&&m| m & bit != 0).count();
        if count > best_count {
            best_count = count;
            best_bit = bit;
        }
        candidates &= candidates - 1;
    }
    best_bit
}

struct CoverSearch {
    best_size: usize,
    best_set: u32,
}

impl CoverSearch {
    fn branch(&mut self, uncovered: &[u32], allowed: u32, chosen: u32) {
        let chosen_count = chosen.count_ones() as usize;
        if uncovered.is_empty() {
            if chosen_count < self.best_size {
                self.best_size = chosen_count;
                self.best_set = chosen;
            }
            return;
        }
        if uncovered.iter().any(|&m| m & allowed == 0) {
            return;
        }
        if chosen_count + greedy_packing_count(uncovered) >= self.best_size {
            return;
        }
        let bit = most_frequent_var(uncovered, allowed);
        debug_assert_ne!(bit, 0);
        let remaining: Vec<u32> = uncovered.iter().copied().filter(|m| m & bit == 0).collect();
        self.branch(&remaining, allowed & !bit, chosen | bit);
        self.branch(uncovered, allowed & !bit, chosen);
    }
}

/// Exact minimum maxonomial hitting set. Constants get `h = 0` with the
/// empty set: there are no maxonomials to hit.
pub fn min_hitting_set(tt: &TruthTable) -> HittingSetResult {
    let set = match maxonomials(tt) {
        Err(_) => {
            return HittingSetResult {
                set: 0,
                size: 0,
                certificate: Some(Vec::new()),
            }
        }
        Ok(set) => set,
    };
    let masks = set.masks();

    // Greedy cover for the initial upper bound.
    let mut greedy_set = 0u32;
    let mut unhit: Vec<u32> = masks.to_vec();
    let allowed: u32 = masks.iter().fold(0, |acc, m| acc | m);
    while !unhit.is_empty() {
        let bit = most_frequent_var(&unhit, allowed);
        greedy_set |= bit;
        unhit.retain(|m| m & bit == 0);
    }

    let packing = max_disjoint_packing(masks);
    let mut search = CoverSearch {
        best_size: greedy_set.count_ones() as usize,
        best_set: greedy_set,
    };
    if packing.len() < search.best_size {
        search.branch(masks, allowed, 0);
    }
    debug_assert!(packing.len() <= search.best_size);
    let certificate = (packing.len() == search.best_size).then_some(packing);
    HittingSetResult {
        set: search.best_set,
        size: search.best_size,
        certificate,
    }
}

/// The four facts tied to a minimum hitting set `H` of `f` with degree `d`:
/// every `i` in `H` has `deg_i = d`; the total weight splits exactly as
/// `W(f) = 2^{-d}|H| + sum_{i not in H} w_i(f)`; the leftover weight is at
/// most the average total weight of the `2^{|H|}` restrictions fixing `H`;
/// and each such restriction drops the degree below `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Report {
    pub degree: usize,
    pub hitting_set: u32,
    /// (a) `deg_i(f) = d` for every `i` in `H`.
    pub hitting_degrees_full: bool,
    /// `W(f)`.
    pub weight_total: DyadicRational,
    /// `2^{-d}|H| + sum_{i not in H} w_i(f)`.
    pub split_value: DyadicRational,
    /// (b) the split equals `W(f)` exactly.
    pub split_holds: bool,
    /// `sum_{i not in H} w_i(f)`.
    pub offset_weight: DyadicRational,
    /// `2^{-|H|} sum_{alpha in PA(H)} W(f_alpha)`.
    pub restriction_average: DyadicRational,
    /// (c) offset weight bounded by the restriction average.
    pub offset_bound_holds: bool,
    /// (d) `deg(f_alpha) <= d - 1` for every `alpha` fixing `H`
    /// (vacuous for constants).
    pub restrictions_drop_degree: bool,
}

impl Lemma1Report {
    pub fn all_hold(&self) -> bool {
        self.hitting_degrees_full
            && self.split_holds
            && self.offset_bound_holds
            && self.restrictions_drop_degree
    }
}

/// Check the decomposition against a client-supplied minimum hitting set.
pub fn check_lemma1_decomposition(tt: &TruthTable, h_mask: u32) -> Result<Lemma1Report> {
    assert_eq!(
        h_mask & !full_var_mask(tt.arity()),
        0,
        "hitting set exceeds arity"
    );
    if !verify_hitting_set(tt, h_mask) {
        return Err(Error::NotAHittingSet { set: h_mask });
    }
    let minimum = min_hitting_set(tt).size;
    let given = h_mask.count_ones() as usize;
    if given > minimum {
        return Err(Error::NotMinimum { given, minimum });
    }

    let degree = tt.degree();
    let degs = per_variable_degrees(tt);
    let profile = weight_profile(tt);

    let hitting_degrees_full = (0..tt.arity())
        .filter(|i| h_mask & (1 << i) != 0)
        .all(|i| degs[i] == Some(degree));

    let offset_weight: DyadicRational = (0..tt.arity())
        .filter(|i| h_mask & (1 << i) == 0)
        .map(|i| profile.weight_of(i + 1))
        .sum();
    let split_value = offset_weight
        + DyadicRational::pow2_neg(degree as u32).scale(given as i128);
    let split_holds = split_value == profile.total();

    let mut restriction_sum = DyadicRational::ZERO;
    let mut restrictions_drop_degree = true;
    for pa in PartialAssignment::all_over(h_mask) {
        let restricted = tt.restrict(&pa);
        restriction_sum += weight_profile(&restricted).total();
        if degree > 0 && restricted.degree() > degree - 1 {
            restrictions_drop_degree = false;
        }
    }
    let restriction_average = restriction_sum.div_pow2(given as u32);

    Ok(Lemma1Report {
        degree,
        hitting_set: h_mask,
        hitting_degrees_full,
        weight_total: profile.total(),
        split_value,
        split_holds,
        offset_weight,
        restriction_average,
        offset_bound_holds: offset_weight <= restriction_average,
        restrictions_drop_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn mux() -> TruthTable {
        tt("bf:v1:n=3:0xd8")
    }

    #[test]
    fn maxonomials_examples() {
        let and = maxonomials(&tt("bf:v1:n=2:0x8")).unwrap();
        assert_eq!(and.degree(), 2);
        assert_eq!(and.masks(), &[0b11]);

        let m = maxonomials(&mux()).unwrap();
        assert_eq!(m.masks(), &[0b011, 0b101]);

        let xor3 = tt("bf:v1:n=3:0x96");
        let x = maxonomials(&xor3).unwrap();
        assert_eq!(x.masks(), &[0b111]);
        assert_eq!(xor3.mobius().coefficient(0b111), 4);

        assert_eq!(
            maxonomials(&tt("bf:v1:n=2:0xf")),
            Err(Error::ConstantFunction)
        );
    }

    #[test]
    fn verify_examples() {
        assert!(verify_hitting_set(&mux(), 0b001));
        assert!(!verify_hitting_set(&mux(), 0b010));
        assert!(verify_hitting_set(&mux(), 0b111));
        assert!(verify_hitting_set(&tt("bf:v1:n=2:0xf"), 0));
    }

    #[test]
    fn min_hitting_set_examples() {
        let m = min_hitting_set(&mux());
        assert_eq!(m.size, 1);
        assert_eq!(m.set, 0b001);
        assert_eq!(m.certificate.as_deref(), Some(&[0b011u32][..]));

        let and = min_hitting_set(&tt("bf:v1:n=2:0x8"));
        assert_eq!(and.size, 1);

        let zero = min_hitting_set(&tt("bf:v1:n=3:0x0"));
        assert_eq!((zero.set, zero.size), (0, 0));
        assert_eq!(zero.certificate.as_deref(), Some(&[][..]));
    }

    #[test]
    fn packing_never_exceeds_cover() {
        for bits in 0u64..256 {
            let t = TruthTable::from_word(3, bits).unwrap();
            let r = min_hitting_set(&t);
            if let Ok(set) = maxonomials(&t) {
                assert!(max_disjoint_packing(set.masks()).len() <= r.size);
            }
            if let Some(cert) = &r.certificate {
                assert_eq!(cert.len(), r.size);
                let mut used = 0u32;
                for &m in cert {
                    assert_eq!(m & used, 0);
                    used |= m;
                }
            }
            assert!(verify_hitting_set(&t, r.set));
        }
    }

    #[test]
    fn degree_at_most_one_has_h_equal_degree() {
        for n in 0..=3usize {
            for bits in 0u64..(1u64 << (1usize << n)) {
                let t = TruthTable::from_word(n, bits).unwrap();
                let d = t.degree();
                if d <= 1 {
                    assert_eq!(min_hitting_set(&t).size, d);
                }
            }
        }
    }

    #[test]
    fn lemma1_mux() {
        let r = check_lemma1_decomposition(&mux(), 0b001).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.weight_total, DyadicRational::new(3, 2));
        assert_eq!(r.offset_weight, DyadicRational::pow2_neg(1));
        assert_eq!(r.restriction_average, DyadicRational::pow2_neg(1));
    }

    #[test]
    fn lemma1_and2() {
        // 1/2 = 1/4 + 1/4 with H = {1}.
        let r = check_lemma1_decomposition(&tt("bf:v1:n=2:0x8"), 0b01).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.weight_total, DyadicRational::pow2_neg(1));
        assert_eq!(r.offset_weight, DyadicRational::pow2_neg(2));
    }

    #[test]
    fn lemma1_rejects_bad_sets() {
        assert_eq!(
            check_lemma1_decomposition(&mux(), 0b010),
            Err(Error::NotAHittingSet { set: 0b010 })
        );
        assert_eq!(
            check_lemma1_decomposition(&mux(), 0b111),
            Err(Error::NotMinimum { given: 3, minimum: 1 })
        );
    }
}
