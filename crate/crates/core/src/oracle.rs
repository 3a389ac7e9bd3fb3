//! Brute-force expansion counts.
//!
//! Everything here multiplies factor by factor with [`MultiPoly::mul`] and never
//! uses Frobenius powering, recurrences or digit automata, so agreement with
//! the fast paths is an independent check.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::mpoly::{Census, CoeffRing, MultiPoly};
use crate::Budget;

/// Number of coefficients of `f^n` equal to `alpha`, by repeated multiplication.
pub fn brute_power_census<R: CoeffRing>(f: &MultiPoly<R>, n: u64, alpha: &R::Elem) -> Result<u64> {
    brute_power_census_with_budget(f, n, alpha, &Budget::default())
}

pub fn brute_power_census_with_budget<R: CoeffRing>(
    f: &MultiPoly<R>,
    n: u64,
    alpha: &R::Elem,
    budget: &Budget,
) -> Result<u64> {
    let mut acc = MultiPoly::one(f.ring(), f.nvars());
    for _ in 0..n {
        acc = acc.mul_with_budget(f, budget)?;
    }
    Ok(acc.coeff_census().get(alpha))
}

/// Censuses of `f^0, f^1, ..., f^{n_max}`, each obtained from the previous one
/// by a single multiplication.
///
/// When every exponent of `f^{n_max}` fits a fixed-width field of one `u64`,
/// monomials are packed into that word; otherwise [`MultiPoly::mul`] is used.
pub fn brute_power_censuses<R: CoeffRing>(
    f: &MultiPoly<R>,
    n_max: u64,
    budget: &Budget,
) -> Result<Vec<Census<R::Elem>>> {
    if let Some(out) = packed_power_censuses(f, n_max, budget) {
        return out;
    }
    let mut acc = MultiPoly::one(f.ring(), f.nvars());
    let mut out = vec![acc.coeff_census()];
    for _ in 0..n_max {
        acc = acc.mul_with_budget(f, budget)?;
        out.push(acc.coeff_census());
    }
    Ok(out)
}

fn packed_power_censuses<R: CoeffRing>(
    f: &MultiPoly<R>,
    n_max: u64,
    budget: &Budget,
) -> Option<Result<Vec<Census<R::Elem>>>> {
    let ring = f.ring();
    let degrees = f.var_degrees().ok()?;
    let mut shifts = Vec::with_capacity(degrees.len());
    let mut used = 0u32;
    for &d in &degrees {
        let top = d.checked_mul(n_max)?;
        shifts.push(used);
        used += u64::BITS - top.leading_zeros();
    }
    if used > u64::BITS {
        return None;
    }
    let pack = |exps: &[u64]| exps.iter().zip(&shifts).fold(0u64, |acc, (&e, &s)| acc | (e << s));
    let terms: Vec<(u64, R::Elem)> = f.terms().map(|(m, c)| (pack(m.exps()), c.clone())).collect();
    let census = |acc: &FxHashMap<u64, R::Elem>| {
        let mut counts = BTreeMap::new();
        for c in acc.values() {
            *counts.entry(c.clone()).or_insert(0u64) += 1;
        }
        Census { counts }
    };
    let mut acc: FxHashMap<u64, R::Elem> = FxHashMap::default();
    acc.insert(0, ring.one());
    let mut out = vec![census(&acc)];
    for _ in 0..n_max {
        let mut next: FxHashMap<u64, R::Elem> = FxHashMap::default();
        next.reserve(acc.len() * 2);
        for (&ka, ca) in &acc {
            for (kb, cb) in &terms {
                let prod = ring.mul(ca, cb);
                next.entry(ka + kb)
                    .and_modify(|c| *c = ring.add(c, &prod))
                    .or_insert(prod);
            }
        }
        next.retain(|_, c| !ring.is_zero(c));
        if next.len() > budget.max_terms {
            return Some(Err(Error::Budget(format!(
                "power has {} terms (limit {})",
                next.len(),
                budget.max_terms
            ))));
        }
        acc = next;
        out.push(census(&acc));
    }
    Some(Ok(out))
}

/// Expands `factors` left to right; returns the number of distinct monomials
/// together with the full coefficient census.
pub fn brute_product_census<R: CoeffRing>(factors: &[MultiPoly<R>]) -> Result<(u64, Census<R::Elem>)> {
    brute_product_census_with_budget(factors, &Budget::default())
}

pub fn brute_product_census_with_budget<R: CoeffRing>(
    factors: &[MultiPoly<R>],
    budget: &Budget,
) -> Result<(u64, Census<R::Elem>)> {
    let prod = brute_product(factors, budget)?;
    let census = prod.coeff_census();
    Ok((census.total(), census))
}

/// Left-to-right product of `factors`; the empty product must be handled by
/// the caller since the ring and arity are unknown.
pub fn brute_product<R: CoeffRing>(factors: &[MultiPoly<R>], budget: &Budget) -> Result<MultiPoly<R>> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| crate::Error::InvalidArgument("empty factor list".into()))?;
    let mut acc = first.clone();
    for f in rest {
        acc = acc.mul_with_budget(f, budget)?;
    }
    Ok(acc)
}

/// Census of the product of `factors` in `nvars` variables; the empty product is 1.
pub fn brute_product_or_one<R: CoeffRing>(
    ring: &R,
    nvars: usize,
    factors: &[MultiPoly<R>],
    budget: &Budget,
) -> Result<Census<R::Elem>> {
    if factors.is_empty() {
        return Ok(MultiPoly::one(ring, nvars).coeff_census());
    }
    Ok(brute_product(factors, budget)?.coeff_census())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{FieldElem, FieldSpec};
    use crate::mpoly::{parse_poly, Integers};
    use num_bigint::BigInt;

    #[test]
    fn power_census_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f = parse_poly("1+x", 1, &f2).unwrap();
        assert_eq!(brute_power_census(&f, 11, &FieldElem(1)).unwrap(), 8);
        assert_eq!(brute_power_census(&f, 0, &FieldElem(1)).unwrap(), 1);
        let g = parse_poly("1+x1+x2+x1*x2^2", 2, &f2).unwrap();
        assert_eq!(brute_power_census(&g, 1, &FieldElem(1)).unwrap(), 4);
        let all = brute_power_censuses(&f, 16, &Budget::default()).unwrap();
        for (n, c) in all.iter().enumerate() {
            assert_eq!(c.total(), 1 << (n as u32).count_ones());
        }
    }

    #[test]
    fn product_census_examples() {
        let z = Integers;
        let k = 3;
        let cat: Vec<_> = (1..=k)
            .map(|i| MultiPoly::linear_sum(&z, k, 1..=i).unwrap())
            .collect();
        assert_eq!(brute_product_census(&cat).unwrap().0, 5);
        assert_eq!(brute_product_census(&cat[2..]).unwrap().0, 3);

        let f2 = FieldSpec::prime(2).unwrap();
        let mut pairs = Vec::new();
        for i in 1..=3 {
            for j in i + 1..=3 {
                pairs.push(MultiPoly::linear_sum(&f2, 3, [i, j]).unwrap());
            }
        }
        assert_eq!(brute_product_census(&pairs).unwrap().0, 6);
    }

    #[test]
    fn vandermonde_signs() {
        let z = Integers;
        for n in 2..=5usize {
            let mut factors = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    let xi = MultiPoly::var(&z, n, i).unwrap();
                    let xj = MultiPoly::var(&z, n, j).unwrap();
                    factors.push(xi.sub(&xj).unwrap());
                }
            }
            let (total, census) = brute_product_census(&factors).unwrap();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(total, fact);
            assert_eq!(census.get(&BigInt::from(1)), fact / 2);
            assert_eq!(census.get(&BigInt::from(-1)), fact / 2);
        }
    }
}
