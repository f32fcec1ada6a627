//! Small-universe subset utilities on `u128` bitsets.
//!
//! Colour sets and hypergraph edges live on at most 128 ground elements, so
//! a single `u128` word is enough everywhere in this crate.

use alloc::vec::Vec;

/// Iterator over the set bits of a mask, ascending.
pub fn iter_bits(mask: u128) -> BitIter {
    BitIter { rest: mask }
}

pub struct BitIter {
    rest: u128,
}

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.rest == 0 {
            return None;
        }
        let b = self.rest.trailing_zeros();
        self.rest &= self.rest - 1;
        Some(b)
    }
}

/// All `k`-subsets of `{0..r-1}` in ascending bitmask (colex) order.
///
/// Uses the lexicographic bitset successor (Gosper's hack).
pub fn subsets_of_size(r: u32, k: u32) -> SubsetIter {
    assert!(r <= 128);
    let cur = if k == 0 {
        Some(0u128)
    } else if k <= r {
        Some((1u128 << k) - 1)
    } else {
        None
    };
    let limit = if r == 128 { u128::MAX } else { (1u128 << r) - 1 };
    SubsetIter { cur, limit }
}

pub struct SubsetIter {
    cur: Option<u128>,
    limit: u128,
}

impl Iterator for SubsetIter {
    type Item = u128;

    fn next(&mut self) -> Option<u128> {
        let v = self.cur?;
        self.cur = if v == 0 {
            None
        } else {
            let c = v & v.wrapping_neg();
            let h = v.wrapping_add(c);
            if h == 0 || h > self.limit {
                None
            } else {
                Some(h | ((((v ^ h) / c) >> 2) as u128))
            }
        };
        Some(v)
    }
}

/// Number of `k`-subsets of an `n`-set, as `u128`; saturates at `u128::MAX`.
pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = (n - i) as u128;
        match acc.checked_mul(num) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Rank of a set in the colex enumeration of its size class.
///
/// For `{a_1 < a_2 < ... < a_k}` this is `sum_i C(a_i, i)`, which matches
/// the order produced by [`subsets_of_size`].
pub fn colex_rank(set: u128) -> usize {
    let mut rank: u128 = 0;
    for (i, a) in iter_bits(set).enumerate() {
        rank += binom(a as u64, i as u64 + 1);
    }
    rank as usize
}

/// All `k`-subsets of the slice `elems`, each returned as a bitmask over the
/// original universe, in lexicographic order of the ascending element lists.
pub fn combinations_lex(elems: &[u32], k: usize) -> Vec<u128> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > elems.len() {
        return out;
    }
    loop {
        let mut mask = 0u128;
        for &i in &idx {
            mask |= 1u128 << elems[i];
        }
        out.push(mask);
        // advance: rightmost index that can still move right
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + elems.len() - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Compares two sets lexicographically on their ascending element lists.
pub fn lex_cmp(a: u128, b: u128) -> core::cmp::Ordering {
    let mut ia = iter_bits(a);
    let mut ib = iter_bits(b);
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return core::cmp::Ordering::Equal,
            (None, Some(_)) => return core::cmp::Ordering::Less,
            (Some(_), None) => return core::cmp::Ordering::Greater,
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(&y);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts_match_binomials() {
        for r in 0..=10u32 {
            for k in 0..=r {
                let cnt = subsets_of_size(r, k).count();
                assert_eq!(cnt as u128, binom(r as u64, k as u64));
            }
        }
    }

    #[test]
    fn subsets_ascending_and_ranked() {
        let all: Vec<u128> = subsets_of_size(10, 4).collect();
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, &s) in all.iter().enumerate() {
            assert_eq!(colex_rank(s), i);
        }
    }

    #[test]
    fn binom_basics() {
        assert_eq!(binom(7, 3), 35);
        assert_eq!(binom(16, 7), 11440);
        assert_eq!(binom(5, 0), 1);
        assert_eq!(binom(4, 6), 0);
    }

    #[test]
    fn combinations_lex_order() {
        let elems = [0u32, 1, 2, 3];
        let combos = combinations_lex(&elems, 2);
        let expect: Vec<u128> = [
            0b0011u128, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100,
        ]
        .to_vec();
        assert_eq!(combos, expect);
    }

    #[test]
    fn lex_cmp_prefers_small_elements() {
        // {0,5} < {1,2} lexicographically even though its bitmask is larger
        let a = (1u128 << 0) | (1 << 5);
        let b = (1u128 << 1) | (1 << 2);
        assert_eq!(lex_cmp(a, b), core::cmp::Ordering::Less);
    }
}
