//! Integer scalar abstraction.
//!
//! Every computation in this crate is exact. The integer type is a parameter so
//! that callers can pick `BigInt` (the default through the crate-root aliases)
//! or a fixed-width type such as `i64`/`i128` when inputs are known to be small.
//! Fixed-width types overflow like ordinary Rust integers; nothing here widens
//! them behind the caller's back.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as the scalar of every lattice computation.
pub trait Int:
    Integer
    + Signed
    + Roots
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("scalar type cannot represent a small constant")
    }
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Roots
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Exact rational over the scalar `T`.
pub type Q<T> = Ratio<T>;

pub(crate) fn int<T: Int>(v: i64) -> T {
    <T as Int>::from_i64(v)
}

pub(crate) fn ratio<T: Int>(v: T) -> Q<T> {
    Ratio::from_integer(v)
}

/// gcd of a list, ignoring zeros. Returns zero only if every entry is zero.
pub fn gcd_all<'a, T: Int, I: IntoIterator<Item = &'a T>>(values: I) -> T {
    values
        .into_iter()
        .fold(T::zero(), |acc, v| if v.is_zero() { acc } else { acc.gcd(v) })
}

/// Largest integer `r` with `r * r <= v`. `v` must be nonnegative.
pub fn isqrt_floor<T: Int>(v: &T) -> T {
    debug_assert!(!v.is_negative());
    v.sqrt()
}

/// floor of a rational.
pub fn floor_q<T: Int>(q: &Q<T>) -> T {
    q.numer().div_floor(q.denom())
}

/// ceil of a rational.
pub fn ceil_q<T: Int>(q: &Q<T>) -> T {
    q.numer().div_ceil(q.denom())
}

/// Largest integer `r` with `r^2 <= q`, for a nonnegative rational `q`.
pub fn isqrt_floor_q<T: Int>(q: &Q<T>) -> T {
    isqrt_floor(&floor_q(q))
}

/// All integers `x` with `(x - center)^2 <= radius_sq`, as an inclusive range
/// `(lo, hi)`. Returns `None` when the set is empty.
pub fn integer_interval<T: Int>(center: &Q<T>, radius_sq: &Q<T>) -> Option<(T, T)> {
    if radius_sq.is_negative() {
        return None;
    }
    let r = isqrt_floor_q(radius_sq);
    let inside = |x: &T| {
        let diff = ratio(x.clone()) - center;
        &diff * &diff <= *radius_sq
    };
    // floor(center + sqrt(s)) lies in [floor(center) + r, floor(center) + r + 1]
    let mut hi = floor_q(center) + r.clone() + T::one();
    while !inside(&hi) && hi > floor_q(center) - r.clone() - T::one() {
        hi = hi - T::one();
    }
    let mut lo = ceil_q(center) - r.clone() - T::one();
    while !inside(&lo) && lo < hi {
        lo = lo + T::one();
    }
    if inside(&lo) && inside(&hi) {
        Some((lo, hi))
    } else {
        None
    }
}

/// Render a rational as `num/den` with a positive denominator (`n/1` for integers).
pub fn fmt_ratio<T: Int>(q: &Q<T>) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parse `p/q` or a bare integer into a reduced rational.
pub fn parse_ratio<T: Int + std::str::FromStr>(s: &str) -> Option<Q<T>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: T = n.trim().parse().ok()?;
            let d: T = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Ratio::new(n, d))
        }
        None => s.parse().ok().map(ratio),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Q<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn interval_matches_brute_force() {
        for cn in -7..=7 {
            for cd in 1..=4 {
                for rn in 0..=30 {
                    for rd in 1..=3 {
                        let c = q(cn, cd);
                        let r = q(rn, rd);
                        let brute: Vec<i64> = (-40..=40)
                            .filter(|&x| {
                                let t = q(x, 1) - c;
                                t * t <= r
                            })
                            .collect();
                        let got = integer_interval(&c, &r);
                        match got {
                            None => assert!(brute.is_empty()),
                            Some((lo, hi)) => {
                                assert_eq!(brute.first(), Some(&lo));
                                assert_eq!(brute.last(), Some(&hi));
                                assert_eq!(brute.len() as i64, hi - lo + 1);
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(integer_interval(&q(0, 1), &q(-1, 1)), None);
    }

    #[test]
    fn gcd_ignores_zeros() {
        assert_eq!(gcd_all(&[0i64, 6, 0, -4]), 2);
        assert_eq!(gcd_all(&[0i64, 0]), 0);
    }

    #[test]
    fn ratio_text_round_trip() {
        let r: Q<BigInt> = parse_ratio("-8/22").unwrap();
        assert_eq!(fmt_ratio(&r), "-4/11");
        assert_eq!(fmt_ratio(&parse_ratio::<BigInt>("3").unwrap()), "3/1");
        assert!(parse_ratio::<i64>("1/0").is_none());
        assert!(parse_ratio::<i64>("x/2").is_none());
    }
}
