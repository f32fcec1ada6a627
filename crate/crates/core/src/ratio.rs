//! Exact rational arithmetic for the guarantee bounds.
//!
//! Every guarantee bound in this crate is a rational with machine-integer
//! numerator and denominator; floors and ceilings are computed exactly so
//! there is never a floating-point tolerance dispute.

use crate::bits::binom;
use num_rational::Ratio;

pub type Rat = Ratio<i128>;

pub fn rat(num: i128, den: i128) -> Rat {
    Ratio::new(num, den)
}

pub fn rat_int(v: i128) -> Rat {
    Ratio::from_integer(v)
}

/// `C(n, k)` as an exact rational.
pub fn binom_rat(n: u64, k: u64) -> Rat {
    rat_int(binom(n, k) as i128)
}

/// Exact ceiling of a rational, as an integer.
pub fn ceil_rat(r: &Rat) -> i128 {
    r.ceil().to_integer()
}

/// Smallest `k` with `2^k >= base^exp`, i.e. `ceil(exp * log2 base)` exact.
///
/// Falls back to a float estimate if `base^exp` overflows `u128`; at that
/// magnitude the threshold is far outside any desk-scale use anyway.
pub fn ceil_log2_pow(base: u64, exp: u32) -> u32 {
    assert!(base >= 1);
    let mut pow: u128 = 1;
    for _ in 0..exp {
        match pow.checked_mul(base as u128) {
            Some(v) => pow = v,
            None => {
                let est = exp as f64 * libm::log2(base as f64);
                return libm::ceil(est) as u32;
            }
        }
    }
    let mut k = 0u32;
    let mut two: u128 = 1;
    while two < pow {
        match two.checked_mul(2) {
            Some(v) => {
                two = v;
                k += 1;
            }
            None => return 128,
        }
    }
    k
}
