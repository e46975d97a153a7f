//! Packed truth tables, partial assignments, and the `bf:v1` text format.
//!
//! A function on `n` variables is stored as a bit vector of length `2^n`
//! packed into `u64` words: bit `k` of the vector is the value at the input
//! point with index `k`, and variable `i` (variables are indexed `1..=n`)
//! reads bit `i - 1` of the point index. Variable sets are `u32` masks under
//! the same convention, so the mask `0b101` denotes `{1, 3}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on arity; override with the `BF_NMAX` environment variable.
pub const DEFAULT_MAX_ARITY: usize = 24;

/// Hard cap: point indices and variable masks are stored in `u32`.
pub const ABSOLUTE_MAX_ARITY: usize = 31;

/// The configured arity cap, read once per process from `BF_NMAX`.
pub fn max_arity() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("BF_NMAX")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
            .map(|n| n.min(ABSOLUTE_MAX_ARITY))
            .unwrap_or(DEFAULT_MAX_ARITY)
    })
}

fn check_arity(n: usize) -> Result<()> {
    if n > max_arity() {
        return Err(Error::ArityTooLarge { n, max: max_arity() });
    }
    Ok(())
}

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    let bits = 1usize << n;
    bits.div_ceil(WORD_BITS)
}

/// Mask of all variables of an `n`-variable function.
pub fn full_var_mask(n: usize) -> u32 {
    debug_assert!(n <= 32);
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Scatter the low bits of `bits` into the set positions of `mask`,
/// lowest position first (software `pdep`).
pub fn deposit_bits(bits: u32, mask: u32) -> u32 {
    let mut out = 0u32;
    let mut src = bits;
    let mut m = mask;
    while m != 0 {
        let pos = m.trailing_zeros();
        out |= (src & 1) << pos;
        src >>= 1;
        m &= m - 1;
    }
    out
}

/// 1-based variable indices of a mask, ascending.
pub fn vars_of_mask(mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

/// Mask for a list of 1-based variable indices.
pub fn mask_of_vars(vars: &[usize]) -> u32 {
    vars.iter().fold(0u32, |m, &v| {
        assert!((1..=32).contains(&v), "variable index out of range");
        m | 1u32 << (v - 1)
    })
}

/// Render a variable mask as `{1,3}`.
pub fn format_var_set(mask: u32) -> String {
    let vars = vars_of_mask(mask);
    let inner: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// A Boolean function on `n` variables as a packed table of `2^n` bits.
///
/// Padding bits beyond `2^n` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

impl TruthTable {
    /// All-zero table on `n` variables.
    pub fn zeros(n: usize) -> Result<Self> {
        check_arity(n)?;
        Ok(TruthTable {
            n,
            words: vec![0u64; words_for(n)],
        })
    }

    /// Constant function.
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        let mut t = Self::zeros(n)?;
        if value {
            for w in &mut t.words {
                *w = u64::MAX;
            }
            t.mask_padding();
        }
        Ok(t)
    }

    /// Projection onto variable `i` (1-based).
    pub fn variable(n: usize, i: usize) -> Result<Self> {
        check_arity(n)?;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, arity: n });
        }
        Self::from_fn(n, |point| (point >> (i - 1)) & 1 == 1)
    }

    /// Build a table by evaluating `f` at every point.
    pub fn from_fn(n: usize, mut f: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut t = Self::zeros(n)?;
        for point in 0..(1u64 << n) as u32 {
            if f(point) {
                t.set(point, true);
            }
        }
        Ok(t)
    }

    /// Build from packed words; padding beyond `2^n` bits must be zero.
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        check_arity(n)?;
        if words.len() != words_for(n) {
            return Err(Error::Parse {
                offset: 0,
                message: format!(
                    "expected {} words for arity {n}, got {}",
                    words_for(n),
                    words.len()
                ),
            });
        }
        let t = TruthTable { n, words };
        let mut masked = t.clone();
        masked.mask_padding();
        if masked.words != t.words {
            return Err(Error::Parse {
                offset: 0,
                message: "nonzero padding beyond 2^n bits".to_string(),
            });
        }
        Ok(t)
    }

    /// Table on `n <= 6` variables from a single packed word.
    pub fn from_word(n: usize, word: u64) -> Result<Self> {
        check_arity(n)?;
        assert!(n <= 6, "from_word requires arity <= 6");
        let mask = if n == 6 {
            u64::MAX
        } else {
            (1u64 << (1usize << n)) - 1
        };
        if word & !mask != 0 {
            return Err(Error::Parse {
                offset: 0,
                message: "nonzero padding beyond 2^n bits".to_string(),
            });
        }
        Ok(TruthTable {
            n,
            words: vec![word],
        })
    }

    /// Packed value of a table on `n <= 6` variables.
    pub fn word(&self) -> u64 {
        assert!(self.n <= 6, "word() requires arity <= 6");
        self.words[0]
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of input points, `2^n`.
    pub fn num_points(&self) -> u64 {
        1u64 << self.n
    }

    /// Value at `point`; panics if out of range.
    #[inline]
    pub fn get(&self, point: u32) -> bool {
        debug_assert!((point as u64) < self.num_points());
        (self.words[point as usize / WORD_BITS] >> (point as usize % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, point: u32, value: bool) {
        let w = point as usize / WORD_BITS;
        let b = point as usize % WORD_BITS;
        if value {
            self.words[w] |= 1u64 << b;
        } else {
            self.words[w] &= !(1u64 << b);
        }
    }

    /// Bounds-checked evaluation.
    pub fn evaluate(&self, point: u32) -> Result<bool> {
        if (point as u64) >= self.num_points() {
            return Err(Error::PointOutOfRange {
                point,
                arity: self.n,
            });
        }
        Ok(self.get(point))
    }

    /// `Some(value)` when the function is constant.
    pub fn constant_value(&self) -> Option<bool> {
        let first = self.get(0);
        for point in 1..self.num_points() as u32 {
            if self.get(point) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Restriction by a partial assignment. Surviving variables are
    /// renumbered densely in increasing original order.
    pub fn restrict(&self, pa: &PartialAssignment) -> TruthTable {
        let full = full_var_mask(self.n);
        assert_eq!(
            pa.fixed_mask() & !full,
            0,
            "fixed mask exceeds table arity"
        );
        let free = full & !pa.fixed_mask();
        let m = free.count_ones() as usize;
        let mut out = TruthTable {
            n: m,
            words: vec![0u64; words_for(m)],
        };
        for y in 0..(1u64 << m) as u32 {
            let point = deposit_bits(y, free) | pa.value_mask();
            if self.get(point) {
                out.set(y, true);
            }
        }
        out
    }

    fn mask_padding(&mut self) {
        let bits = 1usize << self.n;
        let rem = bits % WORD_BITS;
        if rem != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << rem) - 1;
        }
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({self})")
    }
}

/// Numeric order on the packed bit value; arities compare first.
impl Ord for TruthTable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for TruthTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TruthTable {
    /// `bf:v1:n=<arity>:0x<hex>` with minimal hex digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bf:v1:n={}:0x", self.n)?;
        let mut leading = true;
        for &w in self.words.iter().rev() {
            if leading {
                if w != 0 || self.words.len() == 1 {
                    write!(f, "{w:x}")?;
                    leading = false;
                }
            } else {
                write!(f, "{w:016x}")?;
            }
        }
        if leading {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |offset: usize, message: &str| Error::Parse {
            offset,
            message: message.to_string(),
        };
        let expect = |offset: usize, token: &str| -> Result<usize> {
            if s[offset..].starts_with(token) {
                Ok(offset + token.len())
            } else {
                Err(parse_err(offset, &format!("expected `{token}`")))
            }
        };
        let mut pos = expect(0, "bf:v1:n=")?;
        let digits_end = s[pos..]
            .find(|c: char| !c.is_ascii_digit())
            .map(|d| pos + d)
            .unwrap_or(s.len());
        if digits_end == pos {
            return Err(parse_err(pos, "expected arity digits"));
        }
        let n: usize = s[pos..digits_end]
            .parse()
            .map_err(|_| parse_err(pos, "arity out of range"))?;
        check_arity(n)?;
        pos = expect(digits_end, ":0x")?;
        let hex = &s[pos..];
        if hex.is_empty() {
            return Err(parse_err(pos, "expected hex digits"));
        }
        let mut words = vec![0u64; words_for(n)];
        let table_bits = 1usize << n;
        for (idx, c) in hex.char_indices() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| parse_err(pos + idx, "invalid hex digit"))?
                as u64;
            // Hex digit at distance `d` from the end holds bits 4d..4d+3.
            let bit_base = 4 * (hex.len() - 1 - idx);
            if nibble != 0 && bit_base + 4 > table_bits {
                let high = 64 - nibble.leading_zeros() as usize;
                if bit_base + high > table_bits {
                    return Err(parse_err(
                        pos + idx,
                        &format!("table value exceeds 2^{n} bits"),
                    ));
                }
            }
            if bit_base < table_bits {
                words[bit_base / WORD_BITS] |= nibble << (bit_base % WORD_BITS);
            }
        }
        Ok(TruthTable { n, words })
    }
}

/// A mapping of some variables to fixed bits, the rest left free.
///
/// `fixed_mask` marks the fixed variables; `value_mask ⊆ fixed_mask` gives
/// their values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartialAssignment {
    fixed: u32,
    values: u32,
}

impl PartialAssignment {
    pub fn new(fixed: u32, values: u32) -> Result<Self> {
        if values & !fixed != 0 {
            return Err(Error::InvalidAssignment { fixed, values });
        }
        Ok(PartialAssignment { fixed, values })
    }

    /// Fix a single variable `i` (1-based) to `value`.
    pub fn fix_one(i: usize, value: bool) -> Self {
        let bit = 1u32 << (i - 1);
        PartialAssignment {
            fixed: bit,
            values: if value { bit } else { 0 },
        }
    }

    pub fn fixed_mask(&self) -> u32 {
        self.fixed
    }

    pub fn value_mask(&self) -> u32 {
        self.values
    }

    /// All `2^|J|` assignments fixing exactly the variables of `fixed`,
    /// in ascending order of the deposited value pattern.
    pub fn all_over(fixed: u32) -> impl Iterator<Item = PartialAssignment> {
        let k = fixed.count_ones();
        (0..(1u64 << k) as u32).map(move |v| PartialAssignment {
            fixed,
            values: deposit_bits(v, fixed),
        })
    }

    /// Union of two assignments with disjoint fixed sets.
    pub fn merge(&self, other: &PartialAssignment) -> Result<Self> {
        if self.fixed & other.fixed != 0 {
            return Err(Error::InvalidAssignment {
                fixed: self.fixed & other.fixed,
                values: self.values | other.values,
            });
        }
        Ok(PartialAssignment {
            fixed: self.fixed | other.fixed,
            values: self.values | other.values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn and2() -> TruthTable {
        "bf:v1:n=2:0x8".parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let and = and2();
        assert!(and.get(0b11));
        assert!(!and.get(0b01));
        let one3 = TruthTable::constant(3, true).unwrap();
        for p in 0..8 {
            assert!(one3.get(p));
        }
        assert_eq!(one3.to_string(), "bf:v1:n=3:0xff");
    }

    #[test]
    fn evaluate_bounds() {
        let and = and2();
        assert_eq!(
            and.evaluate(4),
            Err(Error::PointOutOfRange { point: 4, arity: 2 })
        );
    }

    #[test]
    fn restrict_and2() {
        let and = and2();
        let fixed1 = and.restrict(&PartialAssignment::fix_one(1, true));
        assert_eq!(fixed1, TruthTable::variable(1, 1).unwrap());
        let fixed0 = and.restrict(&PartialAssignment::fix_one(1, false));
        assert_eq!(fixed0, TruthTable::constant(1, false).unwrap());
    }

    #[test]
    fn restrict_renumbers_densely() {
        // f(x1,x2,x3) = x2; fixing x1 leaves x2 as the new variable 1.
        let f = TruthTable::variable(3, 2).unwrap();
        let g = f.restrict(&PartialAssignment::fix_one(1, true));
        assert_eq!(g, TruthTable::variable(2, 1).unwrap());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["bf:v1:n=2:0x8", "bf:v1:n=0:0x1", "bf:v1:n=3:0xd8"] {
            let t: TruthTable = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        // Leading zeros parse but re-serialize minimally.
        let t: TruthTable = "bf:v1:n=2:0x08".parse().unwrap();
        assert_eq!(t.to_string(), "bf:v1:n=2:0x8");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match "bf:v1:n=2:0xZ8".parse::<TruthTable>() {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 12),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "bf:v2:n=2:0x8".parse::<TruthTable>() {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        // 0x10 has bit 4 set, which exceeds the 4 points of a 2-variable table.
        match "bf:v1:n=2:0x10".parse::<TruthTable>() {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 12),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "bf:v1:n=30:0x0".parse::<TruthTable>() {
            Err(Error::ArityTooLarge { n: 30, .. }) => {}
            other => panic!("expected arity error, got {other:?}"),
        }
    }

    #[test]
    fn assignment_invariant() {
        assert!(PartialAssignment::new(0b101, 0b100).is_ok());
        assert_eq!(
            PartialAssignment::new(0b101, 0b010),
            Err(Error::InvalidAssignment {
                fixed: 0b101,
                values: 0b010
            })
        );
    }

    #[test]
    fn all_over_enumerates_every_pattern() {
        let pas: Vec<_> = PartialAssignment::all_over(0b101).collect();
        assert_eq!(pas.len(), 4);
        let values: Vec<u32> = pas.iter().map(|p| p.value_mask()).collect();
        assert_eq!(values, vec![0b000, 0b001, 0b100, 0b101]);
    }

    #[test]
    fn numeric_ordering() {
        let a: TruthTable = "bf:v1:n=2:0x8".parse().unwrap();
        let b: TruthTable = "bf:v1:n=2:0xe".parse().unwrap();
        assert!(a < b);
    }
}
