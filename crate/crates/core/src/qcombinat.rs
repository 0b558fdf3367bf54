//! q-integers, q-factorials, q-Pochhammer products and Gaussian coefficients.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::qpoly::IntPoly;

/// `[n] = 1 + q + ... + q^(n-1)`, with `[0] = 0`.
pub fn q_int(n: i64) -> Result<IntPoly> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    Ok(IntPoly::new(vec![BigInt::one(); n as usize]))
}

fn factorial_cache() -> &'static RwLock<Vec<IntPoly>> {
    static CACHE: OnceLock<RwLock<Vec<IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![IntPoly::one()]))
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
///
/// Results are memoized in a process-wide table; the observable behavior is
/// that of the plain product.
pub fn q_factorial(n: i64) -> Result<IntPoly> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let n = n as usize;
    if let Some(p) = factorial_cache().read().unwrap().get(n) {
        return Ok(p.clone());
    }
    let mut table = factorial_cache().write().unwrap();
    while table.len() <= n {
        let next = table.len();
        let p = table[next - 1].clone() * q_int(next as i64)?;
        table.push(p);
    }
    Ok(table[n].clone())
}

/// Value of `(q;q)_n`. For negative `n` the reciprocal `1/(q;q)_n` is zero
/// by convention, so any term carrying it in a denominator vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QPoch {
    Poly(IntPoly),
    InverseVanishes,
}

impl QPoch {
    pub fn into_poly(self) -> Option<IntPoly> {
        match self {
            QPoch::Poly(p) => Some(p),
            QPoch::InverseVanishes => None,
        }
    }
}

/// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)`.
pub fn q_poch(n: i64) -> QPoch {
    if n < 0 {
        return QPoch::InverseVanishes;
    }
    let p = (1..=n as usize)
        .map(|i| {
            let mut c = vec![BigInt::default(); i + 1];
            c[0] = BigInt::one();
            c[i] = -BigInt::one();
            IntPoly::new(c)
        })
        .product();
    QPoch::Poly(p)
}

fn gauss_cache() -> &'static RwLock<HashMap<(i64, i64), IntPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<(i64, i64), IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Gaussian coefficient `[N choose K]`: `[N]!/([K]![N-K]!)` for
/// `0 <= K <= N`, zero for every other integer pair.
pub fn gauss_binom(n: i64, k: i64) -> IntPoly {
    if k < 0 || k > n {
        return IntPoly::zero();
    }
    let k = k.min(n - k);
    if let Some(p) = gauss_cache().read().unwrap().get(&(n, k)) {
        return p.clone();
    }
    let num = q_factorial(n).expect("n >= 0");
    let den = q_factorial(k).expect("k >= 0") * q_factorial(n - k).expect("n - k >= 0");
    let p = num
        .exact_div(&den)
        .expect("[K]![N-K]! divides [N]!");
    gauss_cache().write().unwrap().insert((n, k), p.clone());
    p
}

/// `k(k-1)/2` on all integers; nonnegative everywhere and symmetric under
/// `k -> 1 - k`.
pub fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(0).unwrap(), IntPoly::zero());
        assert_eq!(q_int(1).unwrap(), p(&[1]));
        assert_eq!(q_int(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(q_int(-1), Err(Error::NegativeIndex(-1)));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0).unwrap(), p(&[1]));
        assert_eq!(q_factorial(2).unwrap(), p(&[1, 1]));
        assert_eq!(q_factorial(3).unwrap(), p(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(-2), Err(Error::NegativeIndex(-2)));
    }

    #[test]
    fn q_poch_examples() {
        assert_eq!(q_poch(0), QPoch::Poly(p(&[1])));
        assert_eq!(q_poch(2), QPoch::Poly(p(&[1, -1, -1, 1])));
        assert_eq!(q_poch(-1), QPoch::InverseVanishes);
    }

    #[test]
    fn gauss_binom_examples() {
        assert_eq!(gauss_binom(5, 7), IntPoly::zero());
        assert_eq!(gauss_binom(5, -1), IntPoly::zero());
        assert_eq!(gauss_binom(-3, -5), IntPoly::zero());
        for n in 0..6 {
            assert_eq!(gauss_binom(n, 0), IntPoly::one());
        }
        assert_eq!(gauss_binom(4, 2), p(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn choose2_examples() {
        assert_eq!(choose2(0), 0);
        assert_eq!(choose2(1), 0);
        assert_eq!(choose2(-1), 1);
        assert_eq!(choose2(4), 6);
        assert_eq!(choose2(-3), 6);
    }
}
