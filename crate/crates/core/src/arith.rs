//! Checked integer helpers shared by every module.

use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(invalid(alloc::format!("{p} is not prime")))
    }
}

/// `q = p^N` for some prime `p` and `N >= 1`; returns `(p, N)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut n = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

pub fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub fn pow(base: u64, exp: u64) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow)?;
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow);
        }
    }
    Ok(acc as u64)
}

/// Base-`p` digits of `n`, least significant first. Zero has no digits.
pub fn digits(mut n: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Least `m >= 0` with `p^m * den >= num`, i.e. the least integer at or above
/// `log_p(num / den)`.
pub fn log_ceil(p: u64, num: u64, den: u64) -> u64 {
    let (num, den) = (u128::from(num), u128::from(den));
    let mut m = 0;
    let mut power = den;
    while power < num {
        power *= u128::from(p);
        m += 1;
    }
    m
}

pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn binomials_match_pascal() {
        for n in 0..30u64 {
            for k in 0..=n + 1 {
                let pascal = if k == 0 {
                    1
                } else if k > n {
                    0
                } else {
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                };
                assert_eq!(binomial(n, k).unwrap(), pascal, "C({n},{k})");
            }
        }
    }

    #[test]
    fn log_ceil_at_exact_powers() {
        assert_eq!(log_ceil(2, 4, 1), 2);
        assert_eq!(log_ceil(2, 5, 1), 3);
        assert_eq!(log_ceil(3, 3, 2), 1);
        assert_eq!(log_ceil(2, 1, 2), 0);
        assert_eq!(log_ceil(5, 0, 1), 0);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(pow(2, 64), Err(Error::Overflow));
        assert_eq!(mul(u64::MAX, 2), Err(Error::Overflow));
    }
}
