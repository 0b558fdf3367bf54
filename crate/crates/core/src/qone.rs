//! Integer-only evaluation at `q = 1`. Nothing here touches polynomials, so
//! these values serve as an independent check on `eval_at_one`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::altsum::CyclicParams;
use crate::error::{Error, Result};

pub fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn exact_quotient(num: BigInt, den: BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InvalidParams(format!("{num} is not divisible by {den} at q = 1")));
    }
    Ok(q)
}

fn factorial_ratio(num: &[i64], den: &[i64]) -> Result<BigInt> {
    let top = num.iter().map(|&a| factorial(a)).product::<BigInt>();
    let bottom = den.iter().map(|&b| factorial(b)).product::<BigInt>();
    exact_quotient(top, bottom)
}

pub fn super_catalan_a(m: u32, n: u32) -> Result<BigInt> {
    let (m, n) = (i64::from(m), i64::from(n));
    factorial_ratio(&[2 * m, 2 * n], &[m + n, m, n])
}

pub fn ratio_b(n: u32, m: u32) -> Result<BigInt> {
    if n < m {
        return Err(Error::InvalidRange(format!("B needs n >= m, got n={n}, m={m}")));
    }
    let (n, m) = (i64::from(n), i64::from(m));
    factorial_ratio(&[2 * n, m], &[n, 2 * m, n - m])
}

/// `(2m+1)!(2n)! / ((m+n+1)! m! n!)`.
pub fn odd_super_catalan(m: u32, n: u32) -> Result<BigInt> {
    let (m, n) = (i64::from(m), i64::from(n));
    factorial_ratio(&[2 * m + 1, 2 * n], &[m + n + 1, m, n])
}

/// The alternating sum at `q = 1`:
/// `m_1! n_1! (m_r+n_s+1)! / ((m_1+m_r+1)! (n_1+n_s)!) * sum_k (-1)^k prod binomials`.
pub fn alternating_sum(params: &CyclicParams) -> Result<BigInt> {
    let (m, n) = (&params.m, &params.n);
    let (r, s) = (m.len(), n.len());
    let mut sum = BigInt::zero();
    for k in -n[0]..=n[0] {
        let mut term = BigInt::one();
        for i in 0..r {
            term *= binomial(m[i] + m[(i + 1) % r] + 1, m[i] + k);
        }
        for j in 0..s {
            term *= binomial(n[j] + n[(j + 1) % s], n[j] + k);
        }
        if k.is_odd() {
            sum -= term;
        } else {
            sum += term;
        }
    }
    let top = factorial(m[0]) * factorial(n[0]) * factorial(m[r - 1] + n[s - 1] + 1) * sum;
    let bottom = factorial(m[0] + m[r - 1] + 1) * factorial(n[0] + n[s - 1]);
    exact_quotient(top, bottom)
}
