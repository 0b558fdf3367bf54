//! q-super Catalan numbers `A_{m,n}`, the related ratios `B_{n,m}` and the
//! odd q-super Catalan numbers `C_{m,n}`.
//!
//! `C_{m,n}` is available twice: as a plain factorial ratio, and through the
//! forward/backward recurrences that drive the positivity induction on
//! `m + n`. The two must agree identically.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::check::IdentityCheckResult;
use crate::error::{Error, Result};
use crate::qcombinat::{gauss_binom, q_factorial};
use crate::qpoly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CatalanPair {
    pub m: u32,
    pub n: u32,
}

/// `prod [num_i]! / prod [den_j]!`, required to be a polynomial.
pub fn factorial_ratio(num: &[i64], den: &[i64]) -> Result<IntPoly> {
    let mut top = IntPoly::one();
    for &a in num {
        top = top * q_factorial(a)?;
    }
    let mut bottom = IntPoly::one();
    for &b in den {
        bottom = bottom * q_factorial(b)?;
    }
    top.exact_div(&bottom)
}

/// `A_{m,n} = [2m]![2n]! / ([m+n]![m]![n]!)`.
pub fn super_catalan_a(m: u32, n: u32) -> Result<IntPoly> {
    let (m, n) = (i64::from(m), i64::from(n));
    factorial_ratio(&[2 * m, 2 * n], &[m + n, m, n])
}

/// `B_{n,m} = [2n]![m]! / ([n]![2m]![n-m]!)` for `n >= m`.
pub fn ratio_b(n: u32, m: u32) -> Result<IntPoly> {
    if n < m {
        return Err(Error::InvalidRange(format!("B_{{n,m}} needs n >= m, got n={n}, m={m}")));
    }
    let (n, m) = (i64::from(n), i64::from(m));
    factorial_ratio(&[2 * n, m], &[n, 2 * m, n - m])
}

/// `C_{m,n} = [2m+1]![2n]! / ([m+n+1]![m]![n]!)` by exact division.
pub fn odd_super_catalan_direct(m: u32, n: u32) -> Result<IntPoly> {
    let (m, n) = (i64::from(m), i64::from(n));
    factorial_ratio(&[2 * m + 1, 2 * n], &[m + n + 1, m, n])
}

/// Exponent `k(N+k+1) + j(N+j+1)` shared by all three double sums.
fn pair_exponent(base: u32, k: u32, j: u32) -> usize {
    let (b, k, j) = (base as usize, k as usize, j as usize);
    k * (b + k + 1) + j * (b + j + 1)
}

/// Memoized evaluator of `C_{m,n}` following the induction's case split:
/// the diagonal is a Gaussian coefficient, `m > n` uses the forward
/// recurrence and `n > m` the backward one. Keys are raw `(m, n)`.
///
/// The memo is shared behind a mutex; values are computed outside the lock,
/// so concurrent callers may race on a key but always store the same value.
#[derive(Debug, Default)]
pub struct OddCatalanRecursion {
    memo: Mutex<HashMap<(u32, u32), IntPoly>>,
}

impl OddCatalanRecursion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, m: u32, n: u32) -> Result<IntPoly> {
        if let Some(p) = self.memo.lock().unwrap().get(&(m, n)) {
            return Ok(p.clone());
        }
        let value = match m.cmp(&n) {
            std::cmp::Ordering::Equal => gauss_binom(2 * i64::from(n), i64::from(n)),
            std::cmp::Ordering::Greater => self.forward(n, m - n)?,
            std::cmp::Ordering::Less => self.backward(m, n - m)?,
        };
        self.memo.lock().unwrap().insert((m, n), value.clone());
        Ok(value)
    }

    /// `C_{N+h,N} = q^h A_{N+h,N} + sum_k C_{k,N} sum_j q^{..} [h,2k+1][h-2k-1,j-k]`.
    fn forward(&self, base: u32, h: u32) -> Result<IntPoly> {
        let hh = i64::from(h);
        let mut total = super_catalan_a(base + h, base)?.shift(h as usize);
        for k in 0..=(h.saturating_sub(1) / 2) {
            if 2 * k + 1 > h {
                break;
            }
            let kk = i64::from(k);
            let mut inner = IntPoly::zero();
            for j in k..h - k {
                let term = gauss_binom(hh, 2 * kk + 1) * gauss_binom(hh - 2 * kk - 1, i64::from(j) - kk);
                inner = inner + term.shift(pair_exponent(base, k, j));
            }
            total = total + self.get(k, base)? * inner;
        }
        Ok(total)
    }

    /// `C_{N,N+h} = sum_k C_{N,k} sum_j q^{..} [h-1,2k][h-2k-1,j-k]`.
    fn backward(&self, base: u32, h: u32) -> Result<IntPoly> {
        let hh = i64::from(h);
        let mut total = IntPoly::zero();
        for k in 0..=(h.saturating_sub(1) / 2) {
            if 2 * k + 1 > h {
                break;
            }
            let kk = i64::from(k);
            let mut inner = IntPoly::zero();
            for j in k..h - k {
                let term = gauss_binom(hh - 1, 2 * kk) * gauss_binom(hh - 2 * kk - 1, i64::from(j) - kk);
                inner = inner + term.shift(pair_exponent(base, k, j));
            }
            total = total + self.get(base, k)? * inner;
        }
        Ok(total)
    }
}

/// `C_{m,n}` through the recurrences, with a fresh memo table.
pub fn odd_super_catalan_recursive(m: u32, n: u32) -> Result<IntPoly> {
    OddCatalanRecursion::new().get(m, n)
}

/// Both sides of the double q-Chu-Vandermonde expansion of
/// `[2N+2h, h-1]`; `h >= 1`.
pub fn double_expansion_check(base: u32, h: u32) -> Result<IdentityCheckResult> {
    if h < 1 {
        return Err(Error::InvalidRange(format!("double expansion needs h >= 1, got {h}")));
    }
    let (nn, hh) = (i64::from(base), i64::from(h));
    let lhs = gauss_binom(2 * nn + 2 * hh, hh - 1);
    let mut rhs = IntPoly::zero();
    for k in 0..=(h - 1) / 2 {
        let kk = i64::from(k);
        for j in k..h - k {
            let jj = i64::from(j);
            let term = gauss_binom(nn + hh, jj)
                * gauss_binom(jj, kk)
                * gauss_binom(nn + hh - jj, hh - jj - kk - 1);
            rhs = rhs + term.shift(pair_exponent(base, k, j));
        }
    }
    Ok(IdentityCheckResult::compare(
        "double-expansion",
        format!("N={base}, h={h}"),
        &lhs,
        &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn a_examples() {
        assert_eq!(super_catalan_a(0, 0).unwrap(), p(&[1]));
        assert_eq!(super_catalan_a(1, 1).unwrap(), p(&[1, 1]));
        assert_eq!(super_catalan_a(2, 1).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(super_catalan_a(3, 2).unwrap(), p(&[1, 1, 2, 2, 2, 2, 1, 1]));
    }

    #[test]
    fn b_examples() {
        assert_eq!(ratio_b(0, 0).unwrap(), p(&[1]));
        assert_eq!(ratio_b(1, 0).unwrap(), p(&[1, 1]));
        assert_eq!(ratio_b(2, 1).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert!(matches!(ratio_b(1, 2), Err(Error::InvalidRange(_))));
    }

    #[test]
    fn c_direct_examples() {
        assert_eq!(odd_super_catalan_direct(0, 0).unwrap(), p(&[1]));
        assert_eq!(odd_super_catalan_direct(1, 1).unwrap(), p(&[1, 1]));
        assert_eq!(odd_super_catalan_direct(1, 0).unwrap(), p(&[1, 1, 1]));
        assert_eq!(odd_super_catalan_direct(2, 1).unwrap(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(
            odd_super_catalan_direct(3, 1).unwrap(),
            p(&[1, 1, 1, 2, 2, 2, 2, 1, 1, 1])
        );
        assert_eq!(
            odd_super_catalan_direct(1, 4).unwrap(),
            p(&[1, 1, 1, 1, 2, 2, 2, 1, 1, 1, 1])
        );
        assert_eq!(odd_super_catalan_direct(2, 3).unwrap(), p(&[1, 1, 2, 2, 2, 1, 1]));
    }

    #[test]
    fn c_recursive_examples() {
        assert_eq!(odd_super_catalan_recursive(2, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(
            odd_super_catalan_recursive(3, 1).unwrap(),
            odd_super_catalan_direct(3, 1).unwrap()
        );
        assert_eq!(
            odd_super_catalan_recursive(1, 4).unwrap(),
            odd_super_catalan_direct(1, 4).unwrap()
        );
        assert_eq!(odd_super_catalan_recursive(0, 0).unwrap(), IntPoly::one());
    }

    #[test]
    fn recursion_memo_is_reusable() {
        let rec = OddCatalanRecursion::new();
        let first = rec.get(5, 2).unwrap();
        assert_eq!(rec.get(5, 2).unwrap(), first);
        assert_eq!(first, odd_super_catalan_direct(5, 2).unwrap());
    }

    #[test]
    fn double_expansion_examples() {
        let r = double_expansion_check(0, 1).unwrap();
        assert!(r.passed);
        assert_eq!(gauss_binom(2, 0), IntPoly::one());
        assert!(double_expansion_check(1, 2).unwrap().passed);
        assert!(double_expansion_check(3, 4).unwrap().passed);
        assert!(matches!(double_expansion_check(2, 0), Err(Error::InvalidRange(_))));
    }
}
