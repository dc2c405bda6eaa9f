//! Exact q-analogs evaluated at q = -1, and the digit rules for the p-adic
//! valuation of the evaluated Gaussian binomial.
//!
//! All polynomials are built by the q-Pascal recursion in exact integer
//! arithmetic; evaluation at -1 is a separate step, so no division or
//! rational arithmetic ever occurs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Integer polynomial, sparse on exponents. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: u32, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_assign_term(&mut self, exp: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_assign_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_assign_term(e, &(-c.clone()));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                out.add_assign_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Multiply by the monomial c·x^exp.
    pub fn mul_term(&self, exp: u32, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (e, k) in self.iter() {
            out.add_assign_term(e + exp, &(k * c));
        }
        out
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        // Horner on the sparse representation.
        let mut acc = BigInt::zero();
        let mut last_exp = None;
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(prev) = last_exp {
                acc *= x.pow(prev - e);
            }
            acc += c;
            last_exp = Some(*e);
        }
        if let Some(e) = last_exp {
            acc *= x.pow(e);
        }
        acc
    }
}

/// Polynomial in the variable t; same representation as [`IntPolynomial`],
/// kept as a distinct alias since t-coefficients and q-coefficients never mix.
pub type TPoly = IntPolynomial;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QAnalogError {
    #[error("index i = {i} out of range 0..={m}")]
    IndexOutOfRange { m: u64, i: u64 },
}

/// Gaussian binomial coefficient `[m choose i]_q` as a polynomial in q,
/// computed by the q-Pascal recursion
/// `[m i]_q = [m-1 i-1]_q + q^i [m-1 i]_q`.
pub fn gauss_binom(m: u64, i: u64) -> Result<IntPolynomial, QAnalogError> {
    if i > m {
        return Err(QAnalogError::IndexOutOfRange { m, i });
    }
    // row-by-row Pascal triangle, exact integers
    let mut row: Vec<IntPolynomial> = vec![IntPolynomial::one()];
    for n in 1..=m {
        let width = (n.min(i) + 1) as usize;
        let mut next: Vec<IntPolynomial> = Vec::with_capacity(width);
        for k in 0..width as u64 {
            if k == 0 {
                next.push(IntPolynomial::one());
                continue;
            }
            let left = &row[(k - 1) as usize];
            let up = if (k as usize) < row.len() {
                row[k as usize].mul_term(k as u32, &BigInt::one())
            } else {
                IntPolynomial::zero()
            };
            next.push(left.add(&up));
        }
        row = next;
    }
    Ok(row[i as usize].clone())
}

/// `[m choose i]_q` evaluated at q = -1.
pub fn binom_minus1(m: u64, i: u64) -> Result<BigInt, QAnalogError> {
    Ok(gauss_binom(m, i)?.eval(&BigInt::from(-1)))
}

/// Outcome of the digit-rule valuation of `[m choose i]_{-1}` at a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    /// The evaluated binomial is zero (m even and i odd).
    Vanishes,
    /// p^h exactly divides the evaluated binomial.
    Exact(u32),
}

/// Carry-count valuation of `[m choose i]_{-1}` at the prime p, computed by
/// the digit rules alone, independently of any factorization.
///
/// For p = 2 the rule counts binary positions set in i or m-i but not in m.
/// For odd p, i and m-i are written in the mixed radix (1, 2p⁰, 2p¹, …) with
/// a parity digit l₀ ∈ {0,1} and base-p digits; h counts positions where the
/// digit of m is smaller than the digit sum. A parity-digit overflow
/// (l₀ + l₀' = 2) happens exactly when the binomial vanishes.
pub fn lemma_valuation(m: u64, i: u64, p: u64) -> Result<Valuation, QAnalogError> {
    if i > m {
        return Err(QAnalogError::IndexOutOfRange { m, i });
    }
    if m % 2 == 0 && i % 2 == 1 {
        return Ok(Valuation::Vanishes);
    }
    let j = m - i;
    if p == 2 {
        let mut h = 0u32;
        let mut bit = 0;
        while (1u64 << bit) <= m.max(1) {
            let mask = 1u64 << bit;
            if ((i & mask) != 0 || (j & mask) != 0) && (m & mask) == 0 {
                h += 1;
            }
            bit += 1;
        }
        return Ok(Valuation::Exact(h));
    }
    // mixed radix: parity digit, then base-p digits of the halved value
    let digits = |mut n: u64| -> Vec<u64> {
        let mut d = vec![n % 2];
        n /= 2;
        while n > 0 {
            d.push(n % p);
            n /= p;
        }
        d
    };
    let di = digits(i);
    let dj = digits(j);
    let dm = digits(m);
    let len = di.len().max(dj.len()).max(dm.len());
    let at = |d: &Vec<u64>, k: usize| d.get(k).copied().unwrap_or(0);
    let mut h = 0u32;
    for k in 0..len {
        if at(&dm, k) < at(&di, k) + at(&dj, k) {
            h += 1;
        }
    }
    Ok(Valuation::Exact(h))
}

/// The primed q,t-binomial specialized at q = -1:
/// `[m i]'_{-1} = [m i]_{-1} · (1+t)^a (1-t)^b` where a and b count the even
/// and odd j in the range i..m.
pub fn primed_binom_minus1(m: u64, i: u64) -> Result<TPoly, QAnalogError> {
    let base = binom_minus1(m, i)?;
    if base.is_zero() {
        return Ok(TPoly::zero());
    }
    let mut out = TPoly::monomial(0, base);
    let one_plus_t = {
        let mut p = TPoly::one();
        p.add_assign_term(1, &BigInt::one());
        p
    };
    let one_minus_t = {
        let mut p = TPoly::one();
        p.add_assign_term(1, &BigInt::from(-1));
        p
    };
    for j in i..m {
        if j % 2 == 0 {
            out = out.mul(&one_plus_t);
        } else {
            out = out.mul(&one_minus_t);
        }
    }
    Ok(out)
}

/// The exact p-adic valuation of a nonzero integer; the factorization side of
/// the dual-route audit against [`lemma_valuation`].
pub fn padic_valuation(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    Some(v)
}
