//! Closed-form coefficient counts: Lucas digit products, powers of
//! `1 + x + ... + x^(p-1)`, `(1+x+x^2)^n` over F_2 and F_3, and the
//! repunit family `1 + x_1 + ... + x_k + x_1 (x_2^2 + ... + x_k^2)`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::arith::{binomial, digits, fibonacci, is_prime};
use crate::error::{Error, Result};

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Base-`p` digits, least significant first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DigitString {
    pub base: u64,
    pub digits: Vec<u64>,
}

impl DigitString {
    pub fn new(n: u64, base: u64) -> Self {
        DigitString { base, digits: digits(n, base) }
    }

    pub fn value(&self) -> u128 {
        self.digits.iter().rev().fold(0u128, |acc, &d| acc * self.base as u128 + d as u128)
    }
}

/// Small binomial C(a, b) mod p with `a, b < p`.
fn small_binomial_mod(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let r = binomial(a, b) % BigInt::from(p);
    u64::try_from(r).expect("residue fits")
}

/// C(n, k) mod p as the product of digitwise binomials.
pub fn lucas_binomial(n: u64, k: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (a, b) = (n % p, k % p);
        acc = acc * small_binomial_mod(a, b, p) % p;
        if acc == 0 {
            return Ok(0);
        }
        n /= p;
        k /= p;
    }
    Ok(acc % p)
}

/// Value census of a row of Pascal's triangle mod p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCensus {
    /// Number of `k` with `C(n, k) = alpha (mod p)`, keyed by `alpha` in `1..p`.
    pub counts: BTreeMap<u64, u128>,
    /// Number of nonzero residues, `prod (1 + a_i)`.
    pub total: u128,
}

/// Census of `C(n, k) mod p` over `0 <= k <= n`, by a digit DP on residues.
pub fn binomial_row_census(n: u64, p: u64) -> Result<RowCensus> {
    check_prime(p)?;
    let mut dist = vec![0u128; p as usize];
    dist[1 % p as usize] = 1;
    for a in digits(n, p) {
        let mut next = vec![0u128; p as usize];
        for b in 0..=a {
            let c = small_binomial_mod(a, b, p);
            for (v, &cnt) in dist.iter().enumerate() {
                if cnt != 0 {
                    next[(v as u64 * c % p) as usize] += cnt;
                }
            }
        }
        dist = next;
    }
    let counts: BTreeMap<u64, u128> = (1..p).filter(|&a| dist[a as usize] != 0).map(|a| (a, dist[a as usize])).collect();
    let total = counts.values().sum();
    Ok(RowCensus { counts, total })
}

fn times_p_minus_one(n: u64, p: u64) -> Result<u64> {
    n.checked_mul(p - 1)
        .ok_or_else(|| Error::InvalidArgument(format!("(p-1)n overflows for n={n}, p={p}")))
}

/// Coefficient of `x^k` in `(1 + x + ... + x^(p-1))^n` over F_p, computed as
/// `(-1)^k C((p-1)n, k) mod p`.
pub fn prop23_coeff(n: u64, k: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    let top = times_p_minus_one(n, p)?;
    if k > top {
        return Err(Error::InvalidArgument(format!("k={k} exceeds the degree {top}")));
    }
    let c = lucas_binomial(top, k, p)?;
    Ok(if k % 2 == 1 { (p - c) % p } else { c })
}

/// Number of nonzero coefficients of `(1 + x + ... + x^(p-1))^n` over F_p.
pub fn prop23_count(n: u64, p: u64) -> Result<u128> {
    check_prime(p)?;
    let top = times_p_minus_one(n, p)?;
    Ok(digits(top, p).iter().map(|&b| 1 + b as u128).product())
}

/// `(N_0, N_1, N_2)` for `(1 + x + x^2)^n` over F_3.
///
/// With `b_i` the ternary digits of `2n`: when no digit equals 1 every
/// nonzero coefficient is 1; otherwise the nonzero coefficients split evenly.
pub fn example24_split(n: u64) -> Result<(u128, u128, u128)> {
    let two_n = n
        .checked_mul(2)
        .ok_or_else(|| Error::InvalidArgument(format!("2n overflows for n={n}")))?;
    let b = digits(two_n, 3);
    let total: u128 = b.iter().map(|&d| 1 + d as u128).product();
    let slots = two_n as u128 + 1;
    let (n1, n2) = if b.contains(&1) { (total / 2, total / 2) } else { (total, 0) };
    Ok((slots - n1 - n2, n1, n2))
}

/// Maximal runs of 1s in the binary expansion: `(start, length)` pairs,
/// lowest run first, so `n = sum 2^start (2^length - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunDecomposition {
    pub runs: Vec<(u32, u32)>,
}

impl RunDecomposition {
    pub fn of(n: u64) -> Self {
        let mut runs = Vec::new();
        let mut i = 0u32;
        while i < 64 {
            if n >> i & 1 == 1 {
                let start = i;
                while i < 64 && n >> i & 1 == 1 {
                    i += 1;
                }
                runs.push((start, i - start));
            } else {
                i += 1;
            }
        }
        RunDecomposition { runs }
    }

    pub fn value(&self) -> u128 {
        self.runs.iter().map(|&(j, k)| ((1u128 << k) - 1) << j).sum()
    }

    pub fn lengths(&self) -> Vec<u32> {
        self.runs.iter().map(|&(_, k)| k).collect()
    }
}

/// `omega(2^k - 1) = (2^(k+2) + (-1)^(k+1)) / 3`.
pub fn omega_run_factor(k: u32) -> BigUint {
    let big = BigUint::one() << (k + 2);
    if k % 2 == 1 {
        (big + 1u32) / 3u32
    } else {
        (big - 1u32) / 3u32
    }
}

/// Number of odd coefficients of `(1 + x + x^2)^n`, as a product over the
/// binary runs of `n`. `omega_runs(0) = 1`.
pub fn omega_runs(n: u64) -> BigUint {
    RunDecomposition::of(n)
        .runs
        .iter()
        .map(|&(_, k)| omega_run_factor(k))
        .product()
}

/// `k (k+1)^n - (k-1) k^n`, the number of odd coefficients of
/// `(1 + x_1 + ... + x_k + x_1 (x_2^2 + ... + x_k^2))^(2^n - 1)`.
pub fn family22_count(k: u64, n: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let k = BigInt::from(k);
    let one = BigInt::one();
    Ok(&k * num_traits::pow(&k + &one, n as usize) - (&k - &one) * num_traits::pow(k.clone(), n as usize))
}

/// The base polynomial of [`family22_count`] over F_2.
pub fn family22_poly(k: usize) -> Result<crate::mpoly::FieldPoly> {
    use crate::mpoly::MultiPoly;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let f2 = crate::ffield::FieldSpec::prime(2)?;
    let one = f2.one();
    let unit = |i: usize, e: u64| {
        let mut v = vec![0u64; k];
        if i > 0 {
            v[i - 1] = e;
        }
        v
    };
    let mut terms = vec![(vec![0u64; k], one)];
    terms.extend((1..=k).map(|i| (unit(i, 1), one)));
    terms.extend((2..=k).map(|i| {
        let mut v = unit(i, 2);
        v[0] = 1;
        (v, one)
    }));
    Ok(MultiPoly::from_terms(&f2, k, terms))
}

/// Both sides of `2^-n sum_{k < 2^n} omega(k) = F(n+2)`.
pub fn averaging_identity(n: u32) -> (BigRational, BigInt) {
    let total: BigUint = (0..1u64 << n).map(omega_runs).sum();
    let lhs = BigRational::new(BigInt::from(total), BigInt::one() << n);
    (lhs, fibonacci(n as u64 + 2))
}

/// Coefficients of `Lambda(z) = sum_m omega(m) z^m` and of `(1+2z) Lambda(z^2)`
/// through `z^order`, with the first index where they differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaCheck {
    pub lhs: Vec<BigUint>,
    pub rhs: Vec<BigUint>,
    pub first_mismatch: Option<usize>,
}

impl LambdaCheck {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn lambda_check(order: usize) -> LambdaCheck {
    let lhs: Vec<BigUint> = (0..=order as u64).map(omega_runs).collect();
    let rhs: Vec<BigUint> = (0..=order)
        .map(|i| {
            if i % 2 == 0 {
                lhs[i / 2].clone()
            } else {
                &lhs[i / 2] * 2u32
            }
        })
        .collect();
    let first_mismatch = (0..=order).find(|&i| lhs[i] != rhs[i]);
    LambdaCheck { lhs, rhs, first_mismatch }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{FieldElem, FieldSpec};
    use crate::mpoly::parse_poly;
    use crate::oracle::brute_power_censuses;
    use crate::Budget;
    use num_traits::Zero;

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binomial(11, 5, 2).unwrap(), 0);
        assert_eq!(lucas_binomial(4, 2, 3).unwrap(), 0);
        assert_eq!(lucas_binomial(17, 0, 5).unwrap(), 1);
        assert!(lucas_binomial(4, 2, 4).is_err());
        for n in 0..40u64 {
            for k in 0..=n {
                let direct = binomial(n, k) % BigInt::from(7);
                assert_eq!(BigInt::from(lucas_binomial(n, k, 7).unwrap()), direct);
            }
        }
    }

    #[test]
    fn row_census_examples() {
        for m in 0..20u32 {
            let c = binomial_row_census((1 << m) - 1, 2).unwrap();
            assert_eq!(c.counts.get(&1).copied(), Some(1u128 << m));
        }
        assert_eq!(binomial_row_census(0, 5).unwrap().counts, BTreeMap::from([(1, 1)]));
        // 1, 4, 6, 4, 1 = 1, 1, 0, 1, 1 mod 3
        assert_eq!(binomial_row_census(4, 3).unwrap().counts, BTreeMap::from([(1, 4)]));
    }

    #[test]
    fn row_census_matches_expansion() {
        for p in [2u64, 3, 5] {
            let f = FieldSpec::prime(p).unwrap();
            let g = parse_poly("1+x", 1, &f).unwrap();
            let all = brute_power_censuses(&g, 200, &Budget::default()).unwrap();
            for (n, census) in all.iter().enumerate() {
                let c = binomial_row_census(n as u64, p).unwrap();
                for a in 1..p {
                    let want = census.get(&FieldElem(a as u32)) as u128;
                    assert_eq!(c.counts.get(&a).copied().unwrap_or(0), want, "n={n} p={p} a={a}");
                }
            }
        }
    }

    #[test]
    fn prop23_examples() {
        assert_eq!(prop23_count(2, 3).unwrap(), 4);
        assert_eq!(prop23_coeff(1, 1, 3).unwrap(), 1);
        assert!(prop23_coeff(1, 3, 3).is_err());
        for n in 0..50u64 {
            assert_eq!(prop23_count(n, 2).unwrap(), 1u128 << n.count_ones());
        }
    }

    #[test]
    fn prop23_coefficients_match_expansion() {
        let f = FieldSpec::prime(5).unwrap();
        let g = parse_poly("1+x+x^2+x^3+x^4", 1, &f).unwrap();
        let mut acc = parse_poly("1", 1, &f).unwrap();
        for n in 1..=12u64 {
            acc = acc.mul(&g).unwrap();
            for k in 0..=4 * n {
                assert_eq!(acc.coeff(&[k]), FieldElem(prop23_coeff(n, k, 5).unwrap() as u32));
            }
        }
    }

    #[test]
    fn example24_examples() {
        assert_eq!(example24_split(0).unwrap(), (0, 1, 0));
        assert_eq!(example24_split(2).unwrap(), (1, 2, 2));
        assert_eq!(example24_split(4).unwrap(), (0, 9, 0));
        let f3 = FieldSpec::prime(3).unwrap();
        let g = parse_poly("1+x+x^2", 1, &f3).unwrap();
        let all = brute_power_censuses(&g, 200, &Budget::default()).unwrap();
        for (n, census) in all.iter().enumerate() {
            let (n0, n1, n2) = example24_split(n as u64).unwrap();
            assert_eq!(n1, census.get(&FieldElem(1)) as u128, "n={n}");
            assert_eq!(n2, census.get(&FieldElem(2)) as u128, "n={n}");
            assert_eq!(n0 + n1 + n2, 2 * n as u128 + 1);
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(RunDecomposition::of(6039).lengths(), vec![3, 1, 4, 1]);
        assert_eq!(omega_runs(6039), BigUint::from(2079u32));
        assert_eq!(omega_runs(1), BigUint::from(3u32));
        assert_eq!(omega_runs(0), BigUint::one());
        for k in (1..20u32).step_by(2) {
            let want = ((BigUint::one() << (k + 2)) + 1u32) / 3u32;
            assert_eq!(omega_runs((1 << k) - 1), want);
        }
        for n in [0u64, 1, 6039, 0b1011_0111, u64::MAX] {
            assert_eq!(RunDecomposition::of(n).value(), n as u128);
        }
    }

    #[test]
    fn family22_examples() {
        assert_eq!(family22_count(2, 1).unwrap(), BigInt::from(4));
        assert_eq!(family22_count(2, 3).unwrap(), BigInt::from(46));
        for k in 1..6 {
            assert_eq!(family22_count(k, 0).unwrap(), BigInt::one());
        }
        assert!(family22_count(0, 1).is_err());
        let b = Budget::default();
        for k in 1..=3usize {
            let a = crate::automaton::DigitAutomaton::build(&family22_poly(k).unwrap(), &b).unwrap();
            let counts = a.repunit_counts(FieldElem(1), 8, 1).unwrap();
            for (n, c) in counts.iter().enumerate() {
                assert_eq!(BigInt::from(c.clone()), family22_count(k as u64, n as u32).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn averaging_examples() {
        for n in 0..=10 {
            let (lhs, rhs) = averaging_identity(n);
            assert_eq!(lhs, BigRational::from_integer(rhs));
        }
    }

    #[test]
    fn lambda_first_coefficients() {
        let c = lambda_check(8);
        assert_eq!(c.lhs[..4], [1u32, 3, 3, 5].map(BigUint::from));
        assert_eq!(c.rhs[..4], [1u32, 2, 3, 6].map(BigUint::from));
        assert_eq!(c.first_mismatch, Some(1));
        assert!(BigUint::zero() < c.lhs[8]);
    }
}
