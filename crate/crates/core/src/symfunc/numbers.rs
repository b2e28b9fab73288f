use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Unsigned Stirling number of the first kind, `stir(n, k)`.
///
/// `stir(n, k) = stir(n-1, k-1) + (n-1) stir(n-1, k)` with `stir(0,0) = 1`.
/// Out-of-range arguments give 0.
pub fn stirling_first(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let n_us = n as usize;
    let mut row = vec![BigUint::zero(); n_us + 1];
    row[0] = BigUint::one();
    for i in 1..=n_us {
        for j in (1..=i).rev() {
            let carry = &row[j] * BigUint::from(i - 1);
            row[j] = &row[j - 1] + carry;
        }
        row[0] = BigUint::zero();
    }
    row[k as usize].clone()
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Catalan number `C(n) = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigUint {
    let b = binomial(2 * n as i64, n as i64);
    (b / BigInt::from(n + 1)).to_biguint().expect("nonnegative")
}

/// Riordan numbers (OEIS A005043): `R(0) = 1`, `R(1) = 0`,
/// `R(n) = (n-1)(2 R(n-1) + 3 R(n-2)) / (n+1)`.
pub fn riordan(n: u32) -> BigUint {
    let mut prev = BigUint::one();
    if n == 0 {
        return prev;
    }
    let mut cur = BigUint::zero();
    for i in 2..=n {
        let next = BigUint::from(i - 1)
            * (BigUint::from(2u32) * &cur + BigUint::from(3u32) * &prev)
            / BigUint::from(i + 1);
        prev = cur;
        cur = next;
    }
    cur
}
