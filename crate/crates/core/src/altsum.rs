//! The alternating sums `F_{r,s}^{(b)}(m; n; a; q)` over cyclic parameter
//! vectors, the reciprocity exponent `delta`, and executable forms of the
//! reciprocity, product, deletion and cyclic-product identities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::check::IdentityCheckResult;
use crate::error::{Error, Result};
use crate::qcombinat::{choose2, gauss_binom, q_factorial, q_poch, QPoch};
use crate::qpoly::IntPoly;

/// Parameters `(m_1..m_r; n_1..n_s; a; b)` of `F_{r,s}^{(b)}`, indexed
/// cyclically (`m_{r+1} = m_1`, `n_{s+1} = n_1`).
///
/// Always enforced: `r, s >= 2`, every `m_i >= 0`, every `n_j >= 1`,
/// `a >= 0`, `b >= 1`. The theorem range additionally needs `a <= s` and
/// `b <= r`; [`CyclicParams::new_unchecked_range`] skips only that part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CyclicParams {
    pub m: Vec<i64>,
    pub n: Vec<i64>,
    pub a: i64,
    pub b: i64,
}

impl CyclicParams {
    pub fn new(m: Vec<i64>, n: Vec<i64>, a: i64, b: i64) -> Result<Self> {
        let p = Self::new_unchecked_range(m, n, a, b)?;
        if !p.in_theorem_range() {
            return Err(Error::InvalidParams(format!(
                "need 0 <= a <= s = {} and 1 <= b <= r = {}, got a={}, b={}",
                p.s(),
                p.r(),
                p.a,
                p.b
            )));
        }
        Ok(p)
    }

    /// Like [`CyclicParams::new`] but permits `a > s` and `b > r`.
    pub fn new_unchecked_range(m: Vec<i64>, n: Vec<i64>, a: i64, b: i64) -> Result<Self> {
        if m.len() < 2 || n.len() < 2 {
            return Err(Error::InvalidParams(format!(
                "need r, s >= 2, got r={}, s={}",
                m.len(),
                n.len()
            )));
        }
        if let Some(x) = m.iter().find(|&&x| x < 0) {
            return Err(Error::InvalidParams(format!("m entries must be >= 0, got {x}")));
        }
        if let Some(x) = n.iter().find(|&&x| x < 1) {
            return Err(Error::InvalidParams(format!("n entries must be >= 1, got {x}")));
        }
        if a < 0 {
            return Err(Error::InvalidParams(format!("a must be >= 0, got {a}")));
        }
        if b < 1 {
            return Err(Error::InvalidParams(format!("b must be >= 1, got {b}")));
        }
        Ok(CyclicParams { m, n, a, b })
    }

    pub fn r(&self) -> usize {
        self.m.len()
    }

    pub fn s(&self) -> usize {
        self.n.len()
    }

    pub fn in_theorem_range(&self) -> bool {
        self.a <= self.s() as i64 && self.b <= self.r() as i64
    }

    /// Same vectors, different `(a, b)`; unvalidated.
    pub fn with_ab(&self, a: i64, b: i64) -> Self {
        CyclicParams {
            m: self.m.clone(),
            n: self.n.clone(),
            a,
            b,
        }
    }

    /// The `(s - a, r - b + 1)` point paired with this one by reciprocity.
    pub fn dual(&self) -> Self {
        self.with_ab(self.s() as i64 - self.a, self.r() as i64 - self.b + 1)
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for CyclicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={};n={};a={};b={}", join(&self.m), join(&self.n), self.a, self.b)
    }
}

/// `prod_i [m_i + m_{i+1} + 1, m_i + k] * prod_j [n_j + n_{j+1}, n_j + k]`
/// with cyclic indices. A length-one vector pairs its entry with itself.
pub fn cyclic_product(m: &[i64], n: &[i64], k: i64) -> IntPoly {
    assert!(!m.is_empty() && !n.is_empty(), "cyclic vectors must be nonempty");
    let mut out = IntPoly::one();
    for (i, &mi) in m.iter().enumerate() {
        let next = m[(i + 1) % m.len()];
        let g = gauss_binom(mi + next + 1, mi + k);
        if g.is_zero() {
            return IntPoly::zero();
        }
        out = out * g;
    }
    for (j, &nj) in n.iter().enumerate() {
        let next = n[(j + 1) % n.len()];
        let g = gauss_binom(nj + next, nj + k);
        if g.is_zero() {
            return IntPoly::zero();
        }
        out = out * g;
    }
    out
}

/// Exponent `a k^2 + (2b - 1) C(k, 2)` of the `k`th summand.
pub fn summand_exponent(a: i64, b: i64, k: i64) -> i64 {
    a * k * k + (2 * b - 1) * choose2(k)
}

/// The signed sum `sum_{k=-n_1}^{n_1} (-1)^k q^{a k^2 + (2b-1)C(k,2)} C(m; n; k)`
/// before the factorial prefactor is applied.
pub fn alternating_numerator(params: &CyclicParams) -> IntPoly {
    let n1 = params.n[0];
    let mut total = IntPoly::zero();
    for k in -n1..=n1 {
        let prod = cyclic_product(&params.m, &params.n, k);
        if prod.is_zero() {
            continue;
        }
        let e = summand_exponent(params.a, params.b, k);
        assert!(e >= 0, "negative exponent {e} at k={k} for {params}");
        let term = prod.shift(e as usize);
        total = if k.rem_euclid(2) == 0 { total + term } else { total - term };
    }
    total
}

/// `F_{r,s}^{(b)}(m; n; a; q)`. The whole signed sum is formed first and the
/// prefactor `[m_1]![n_1]![m_r+n_s+1]! / ([m_1+m_r+1]![n_1+n_s]!)` is applied
/// with a single exact division, so `NotDivisible` means the instance is not
/// a polynomial.
#[allow(non_snake_case)]
pub fn F(params: &CyclicParams) -> Result<IntPoly> {
    let (m1, mr) = (params.m[0], params.m[params.r() - 1]);
    let (n1, ns) = (params.n[0], params.n[params.s() - 1]);
    let sum = alternating_numerator(params);
    if sum.is_zero() {
        return Ok(sum);
    }
    let num = q_factorial(m1)? * q_factorial(n1)? * q_factorial(mr + ns + 1)? * sum;
    let den = q_factorial(m1 + mr + 1)? * q_factorial(n1 + ns)?;
    num.exact_div(&den)
}

/// Reciprocity exponent for cyclic vectors `m`, `n`.
pub fn delta(m: &[i64], n: &[i64]) -> i64 {
    assert!(!m.is_empty() && !n.is_empty(), "cyclic vectors must be nonempty");
    let (m1, mr) = (m[0], m[m.len() - 1]);
    let (n1, ns) = (n[0], n[n.len() - 1]);
    let head = choose2(m1) + choose2(n1) + choose2(mr + ns + 1) - choose2(m1 + mr + 1) - choose2(n1 + ns);
    let ms: i64 = (0..m.len()).map(|i| m[i] * (m[(i + 1) % m.len()] + 1)).sum();
    let ns_: i64 = (0..n.len()).map(|j| n[j] * n[(j + 1) % n.len()]).sum();
    head + ms + ns_
}

/// Checks `q^delta * F^{(r-b+1)}(s-a; 1/q) = F^{(b)}(a; q)` together with
/// `deg F^{(r-b+1)}(s-a) <= delta`, realizing the substitution `q -> 1/q` as
/// coefficient reversal at degree `delta`.
pub fn reciprocity_check(params: &CyclicParams) -> Result<IdentityCheckResult> {
    if !params.in_theorem_range() {
        return Err(Error::InvalidParams(format!(
            "reciprocity needs 0 <= a <= s and 1 <= b <= r, got {params}"
        )));
    }
    let dual = params.dual();
    let label = format!("{params}; dual a={}, b={}", dual.a, dual.b);
    let p = F(params)?;
    let q = F(&dual)?;
    let d = delta(&params.m, &params.n);
    if d < 0 {
        if p.is_zero() && q.is_zero() {
            return Ok(IdentityCheckResult::compare("reciprocity", label, &p, &q));
        }
        return Ok(IdentityCheckResult::failed(
            "reciprocity",
            label,
            format!("delta = {d} is negative but F is nonzero"),
        ));
    }
    match q.reverse_to_degree(d as usize) {
        Ok(reflected) => Ok(IdentityCheckResult::compare("reciprocity", label, &p, &reflected)
            .with_detail(format!("delta={d}"))),
        Err(e) => Ok(IdentityCheckResult::failed("reciprocity", label, e.to_string())),
    }
}

/// `Some(deg F <= delta)`, or `None` when `F` is the zero polynomial.
pub fn degree_bound_holds(params: &CyclicParams, f: &IntPoly) -> Option<bool> {
    let d = delta(&params.m, &params.n);
    f.degree().map(|deg| (deg as i64) <= d)
}

fn poch_poly(n: i64) -> Option<IntPoly> {
    q_poch(n).into_poly()
}

/// The product identity for `[m1+m2+1, m1+k] [m1+m2+1, m2+k]` as a sum over
/// `t` of q-multinomial quotients; terms with a negative Pochhammer index in
/// the denominator are zero.
pub fn product_identity_check(m1: u32, m2: u32, k: i64) -> IdentityCheckResult {
    let (a, b) = (i64::from(m1), i64::from(m2));
    let label = format!("m1={m1}, m2={m2}, k={k}");
    let lhs = gauss_binom(a + b + 1, a + k) * gauss_binom(a + b + 1, b + k);
    let top = poch_poly(a + b + 1).expect("m1 + m2 + 1 >= 0");

    let mut rhs = IntPoly::zero();
    for t in 0..=(a - k + 1) {
        let factors = [t, t + 2 * k - 1, a - k - t + 1, b - k - t + 1];
        let mut den = IntPoly::one();
        let mut vanishes = false;
        for u in factors {
            match q_poch(u) {
                QPoch::Poly(pp) => den = den * pp,
                QPoch::InverseVanishes => {
                    vanishes = true;
                    break;
                }
            }
        }
        if vanishes {
            continue;
        }
        let quotient = match top.exact_div(&den) {
            Ok(x) => x,
            Err(e) => {
                return IdentityCheckResult::failed("product-identity", label, format!("t={t}: {e}"));
            }
        };
        // t >= 0 and t + 2k - 1 >= 0 here, so the exponent is nonnegative.
        let e = t * t + 2 * k * t - t;
        rhs = rhs + quotient.shift(e as usize);
    }
    IdentityCheckResult::compare("product-identity", label, &lhs, &rhs)
}

/// Deletion recurrence: for `r >= 3`, `2 <= b <= r`,
/// `F^{(b)}(m_1, m_2, m_3, ..) = sum_{l=0}^{m_1} q^{l^2+l} [m_1, l] [m_2+m_3+1, m_2-l] F^{(b-1)}(l, m_3, ..)`.
pub fn deletion_check(params: &CyclicParams) -> Result<IdentityCheckResult> {
    if params.r() < 3 || params.b < 2 {
        return Err(Error::InvalidRange(format!(
            "deletion needs r >= 3 and b >= 2, got r={}, b={}",
            params.r(),
            params.b
        )));
    }
    let (m1, m2, m3) = (params.m[0], params.m[1], params.m[2]);
    let lhs = F(params)?;
    let mut rhs = IntPoly::zero();
    for ell in 0..=m1 {
        let coeff = gauss_binom(m1, ell) * gauss_binom(m2 + m3 + 1, m2 - ell);
        if coeff.is_zero() {
            continue;
        }
        let mut m = Vec::with_capacity(params.r() - 1);
        m.push(ell);
        m.extend_from_slice(&params.m[2..]);
        let smaller = CyclicParams {
            m,
            n: params.n.clone(),
            a: params.a,
            b: params.b - 1,
        };
        rhs = rhs + (coeff * F(&smaller)?).shift((ell * ell + ell) as usize);
    }
    Ok(IdentityCheckResult::compare("deletion", params.to_string(), &lhs, &rhs))
}

fn require_r3(m: &[i64], n: &[i64], what: &str) -> Result<()> {
    if m.len() < 3 || n.is_empty() {
        return Err(Error::InvalidRange(format!(
            "{what} needs r >= 3 and a nonempty n-vector, got r={}, s={}",
            m.len(),
            n.len()
        )));
    }
    Ok(())
}

fn poch_product(indices: &[i64]) -> IntPoly {
    indices
        .iter()
        .map(|&u| poch_poly(u).expect("nonnegative Pochhammer index"))
        .product()
}

/// Separation of the two factors carrying `m_1`, `m_2`, cleared of
/// denominators:
/// `C(m; n; k) (q)_{m1+m2+1} (q)_{mr+m3+1}
///   = (q)_{m2+m3+1} (q)_{mr+m1+1} [m1+m2+1, m1+k] [m1+m2+1, m2+k] C(m3..mr; n; k)`.
pub fn separation_check(m: &[i64], n: &[i64], k: i64) -> Result<IdentityCheckResult> {
    require_r3(m, n, "separation")?;
    let r = m.len();
    let (m1, m2, m3, mr) = (m[0], m[1], m[2], m[r - 1]);
    let label = format!("m={};n={};k={k}", join(m), join(n));
    let lhs = cyclic_product(m, n, k) * poch_product(&[m1 + m2 + 1, mr + m3 + 1]);
    let rhs = poch_product(&[m2 + m3 + 1, mr + m1 + 1])
        * gauss_binom(m1 + m2 + 1, m1 + k)
        * gauss_binom(m1 + m2 + 1, m2 + k)
        * cyclic_product(&m[2..], n, k);
    Ok(IdentityCheckResult::compare("separation", label, &lhs, &rhs))
}

/// Comparison of `C(m3..mr; n; k)` with `C(l, m3..mr; n; k)`, cleared of
/// denominators:
/// `C(m3..mr) (q)_{m3+l+1} (q)_{mr+l+1} = (q)_{l-k+1} (q)_{l+k} (q)_{mr+m3+1} C(l, m3..mr)`.
///
/// The comparison is only used where `l - k + 1 >= 0` and `l + k >= 0`;
/// elsewhere the corresponding summand is already zero and the check is
/// reported as vacuous.
pub fn recombine_check(m: &[i64], n: &[i64], ell: i64, k: i64) -> Result<IdentityCheckResult> {
    require_r3(m, n, "recombine")?;
    if ell < 0 {
        return Err(Error::InvalidRange(format!("ell must be >= 0, got {ell}")));
    }
    let r = m.len();
    let (m3, mr) = (m[2], m[r - 1]);
    let label = format!("m={};n={};ell={ell};k={k}", join(m), join(n));
    if ell - k + 1 < 0 || ell + k < 0 {
        return Ok(IdentityCheckResult::vacuous(
            "recombine",
            label,
            "a Pochhammer index is negative; the summand vanishes",
        ));
    }
    let tail = &m[2..];
    let mut with_ell = Vec::with_capacity(r - 1);
    with_ell.push(ell);
    with_ell.extend_from_slice(tail);

    let lhs = cyclic_product(tail, n, k) * poch_product(&[m3 + ell + 1, mr + ell + 1]);
    let rhs = poch_product(&[ell - k + 1, ell + k, mr + m3 + 1]) * cyclic_product(&with_ell, n, k);
    Ok(IdentityCheckResult::compare("recombine", label, &lhs, &rhs))
}

/// Both sides of the exponent bookkeeping in the deletion recurrence, with
/// `l = t + k - 1`:
/// `t^2 + 2kt - t + a k^2 + (2b-1) C(k,2)` and `l^2 + l + a k^2 + (2b-3) C(k,2)`.
pub fn exponent_separation_sides(t: i64, k: i64, a: i64, b: i64) -> (i64, i64) {
    let ell = t + k - 1;
    let lhs = t * t + 2 * k * t - t + summand_exponent(a, b, k);
    let rhs = ell * ell + ell + a * k * k + (2 * b - 3) * choose2(k);
    (lhs, rhs)
}
