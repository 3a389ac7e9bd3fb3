//! Counts for `g(x)^{q^m - c}` over F_q and their periodic-plus-exponential
//! law `N_alpha(m) = u(m) q^m + v(m)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::ffield::{FieldElem, FieldSpec};
use crate::mpoly::FieldPoly;
use crate::ratgen::rational_string;
use crate::upoly::UniPoly;
use crate::Budget;

/// Univariate view of a one-variable polynomial.
pub fn to_unipoly(g: &FieldPoly) -> Result<UniPoly> {
    if g.nvars() != 1 {
        return Err(Error::ArityMismatch(1, g.nvars()));
    }
    let deg = g.var_degrees().map(|d| d[0] as usize).unwrap_or(0);
    let mut coeffs = vec![g.ring().zero(); deg + 1];
    for (m, c) in g.terms() {
        coeffs[m.exps()[0] as usize] = *c;
    }
    Ok(UniPoly::new(g.ring(), coeffs))
}

fn check_input(g: &UniPoly) -> Result<()> {
    match g.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::InvalidArgument("g must be nonconstant".into())),
        _ if g.coeff(0).is_zero() => Err(Error::InvalidArgument("g(0) must be nonzero".into())),
        _ => Ok(()),
    }
}

/// Degree over F_q of the field generated by all roots of `g`: the lcm of the
/// degrees of its irreducible factors.
pub fn splitting_degree(g: &UniPoly) -> Result<u64> {
    check_input(g)?;
    let mut d = 1u64;
    for (h, _) in g.squarefree_decomposition()? {
        for (deg, _) in h.distinct_degree_factorization()? {
            d = d.lcm(&(deg as u64));
        }
    }
    Ok(d)
}

/// Largest multiplicity of an irreducible factor of `g`.
pub fn max_multiplicity(g: &UniPoly) -> Result<u32> {
    check_input(g)?;
    Ok(g.squarefree_decomposition()?
        .iter()
        .map(|(_, m)| *m)
        .max()
        .unwrap_or(1))
}

/// Least `l >= 0` with `q^l >= mu * c`.
pub fn threshold(q: u64, mu: u32, c: u64) -> u32 {
    let target = mu as u128 * c as u128;
    let mut l = 0;
    let mut p: u128 = 1;
    while p < target {
        p *= q as u128;
        l += 1;
    }
    l
}

/// Dense univariate polynomial over F_q.
enum Dense {
    /// Bit-packed F_2 coefficients.
    Bits(Vec<u64>),
    /// Element codes.
    Codes(Vec<u32>),
}

/// Counts of every field element among the coefficients of `g^n` from
/// `x^0` to `x^{n deg g}`, indexed by element code.
pub fn power_census(g: &UniPoly, n: u64, budget: &Budget) -> Result<Vec<u64>> {
    let field = g.field().clone();
    let deg = g.degree().ok_or(Error::ZeroPolynomial)? as u128;
    let total = deg * n as u128;
    if total > budget.max_dense_degree as u128 {
        return Err(Error::Budget(format!(
            "power has degree {total}, above the limit {}",
            budget.max_dense_degree
        )));
    }
    let len = total as usize + 1;
    let q = field.q();
    let mut counts = vec![0u64; q as usize];
    match dense_power(g, n)? {
        Dense::Bits(words) => {
            let ones: u64 = words.iter().map(|w| w.count_ones() as u64).sum();
            counts[1] = ones;
            counts[0] = len as u64 - ones;
        }
        Dense::Codes(v) => {
            for &c in &v {
                counts[c as usize] += 1;
            }
            counts[0] += (len - v.len()) as u64;
        }
    }
    Ok(counts)
}

fn dense_power(g: &UniPoly, n: u64) -> Result<Dense> {
    let field = g.field();
    let q = field.q();
    // g^n = prod_i g^{a_i}(x^{q^i}) for n = sum a_i q^i, since h(x)^q = h(x^q) over F_q
    let digits = arith::digits(n, q);
    let mut small = vec![UniPoly::one(field)];
    for i in 1..q as usize {
        let next = small[i - 1].mul(g);
        small.push(next);
    }
    if q == 2 {
        let mut acc = vec![1u64];
        let mut scale = 1u64;
        for &a in &digits {
            if a == 1 {
                let shifts: Vec<u64> = g
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, _)| e as u64 * scale)
                    .collect();
                acc = shift_xor(&acc, &shifts);
            }
            scale = scale.saturating_mul(2);
        }
        return Ok(Dense::Bits(acc));
    }
    let mut acc: Vec<u32> = vec![1];
    let mut scale = 1u64;
    for &a in &digits {
        if a > 0 {
            let sparse: Vec<(usize, FieldElem)> = small[a as usize]
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e * scale as usize, *c))
                .collect();
            acc = sparse_mul(field, &acc, &sparse);
        }
        scale = scale.saturating_mul(q);
    }
    Ok(Dense::Codes(acc))
}

fn shift_xor(acc: &[u64], shifts: &[u64]) -> Vec<u64> {
    let max = *shifts.iter().max().expect("nonzero polynomial") as usize;
    let mut out = vec![0u64; acc.len() + max / 64 + 1];
    for &s in shifts {
        let w = s as usize / 64;
        let b = (s % 64) as u32;
        if b == 0 {
            for (i, &x) in acc.iter().enumerate() {
                out[i + w] ^= x;
            }
        } else {
            for (i, &x) in acc.iter().enumerate() {
                out[i + w] ^= x << b;
                out[i + w + 1] ^= x >> (64 - b);
            }
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn sparse_mul(field: &FieldSpec, acc: &[u32], sparse: &[(usize, FieldElem)]) -> Vec<u32> {
    let max = sparse.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut out = vec![0u32; acc.len() + max];
    if field.r() == 1 {
        let p = field.p() as u32;
        for &(e, c) in sparse {
            let c = c.0;
            for (i, &x) in acc.iter().enumerate() {
                if x != 0 {
                    let slot = &mut out[i + e];
                    *slot = (*slot + c * x) % p;
                }
            }
        }
    } else {
        for &(e, c) in sparse {
            for (i, &x) in acc.iter().enumerate() {
                if x != 0 {
                    let slot = &mut out[i + e];
                    *slot = field.add(FieldElem(*slot), field.mul(c, FieldElem(x))).0;
                }
            }
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Exponent `q^m - c`; errors when negative.
pub fn qpow_exponent(q: u64, m: u32, c: u64) -> Result<u64> {
    let qm = (q as u128)
        .checked_pow(m)
        .filter(|&x| x <= u64::MAX as u128)
        .ok_or_else(|| Error::Budget(format!("q^m overflows for m = {m}")))? as u64;
    if qm < c {
        return Err(Error::InvalidArgument(format!("q^m = {qm} is smaller than c = {c}")));
    }
    Ok(qm - c)
}

/// Number of coefficients of `g^{q^m - c}` equal to `alpha`.
pub fn count_qpow(g: &UniPoly, c: u64, alpha: FieldElem, m: u32, budget: &Budget) -> Result<u64> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    let field = g.field();
    field.elem(alpha.0 as u64)?;
    let n = qpow_exponent(field.q(), m, c)?;
    Ok(power_census(g, n, budget)?[alpha.0 as usize])
}

/// The fitted law `N_alpha(m) = u(m mod d) q^m + v(m mod d)` for `m >= l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPowProfile {
    pub q: u64,
    pub c: u64,
    pub alpha: FieldElem,
    pub d: u64,
    pub mu: u32,
    pub l: u32,
    pub u: Vec<BigRational>,
    pub v: Vec<BigRational>,
    /// `(m, N_alpha(m))` pairs that were computed while fitting.
    pub samples: Vec<(u32, u64)>,
}

impl QPowProfile {
    /// Value predicted by the law at `m`.
    pub fn predict(&self, m: u32) -> BigRational {
        let i = (m as u64 % self.d) as usize;
        let qm = BigRational::from_integer(BigInt::from(self.q).pow(m));
        &self.u[i] * qm + &self.v[i]
    }

    pub fn to_json(&self) -> QPowJson {
        QPowJson {
            q: self.q,
            c: self.c,
            alpha: self.alpha.0,
            d: self.d,
            mu: self.mu,
            l: self.l,
            u: self.u.iter().map(rational_string).collect(),
            v: self.v.iter().map(rational_string).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QPowJson {
    pub q: u64,
    pub c: u64,
    pub alpha: u32,
    pub d: u64,
    pub mu: u32,
    pub l: u32,
    pub u: Vec<String>,
    pub v: Vec<String>,
}

/// Fits `u` and `v` per residue class from two values of `m` and checks a third.
pub fn fit_qpow_profile(g: &UniPoly, c: u64, alpha: FieldElem, budget: &Budget) -> Result<QPowProfile> {
    if c == 0 {
        return Err(Error::InvalidArgument("c must be positive".into()));
    }
    let field = g.field();
    let q = field.q();
    let d = splitting_degree(g)?;
    let mu = max_multiplicity(g)?;
    let l = threshold(q, mu, c);
    let mut u = Vec::with_capacity(d as usize);
    let mut v = Vec::with_capacity(d as usize);
    let mut samples = Vec::new();
    let qr = |m: u32| BigRational::from_integer(BigInt::from(q).pow(m));
    for rho in 0..d {
        let m1 = l + ((rho + d - l as u64 % d) % d) as u32;
        let m2 = m1 + d as u32;
        let m3 = m2 + d as u32;
        let n1 = count_qpow(g, c, alpha, m1, budget)?;
        let n2 = count_qpow(g, c, alpha, m2, budget)?;
        let n3 = count_qpow(g, c, alpha, m3, budget)?;
        samples.extend([(m1, n1), (m2, n2), (m3, n3)]);
        let r = |n: u64| BigRational::from_integer(BigInt::from(n));
        let ur = (r(n2) - r(n1)) / (qr(m2) - qr(m1));
        let vr = r(n1) - &ur * qr(m1);
        if &ur * qr(m3) + &vr != r(n3) {
            return Err(Error::Verification(format!(
                "law fitted at m = {m1}, {m2} fails at m = {m3}"
            )));
        }
        u.push(ur);
        v.push(vr);
    }
    samples.sort_unstable();
    Ok(QPowProfile { q, c, alpha, d, mu, l, u, v, samples })
}

/// `d q^{d-1} / (q^d - 1)` for a primitive `g` of degree `d`.
pub fn primitive_u_check(g: &UniPoly) -> Result<BigRational> {
    check_input(g)?;
    if !g.field().is_primitive(g)? {
        return Err(Error::NotPrimitive);
    }
    let d = g.degree().expect("nonconstant") as u32;
    let q = BigInt::from(g.field().q());
    Ok(BigRational::new(BigInt::from(d) * q.pow(d - 1), q.pow(d) - BigInt::one()))
}

/// Whether two periodic sequences, given by one period each, agree everywhere.
pub fn periodic_eq<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.is_empty() || b.is_empty() {
        return a.is_empty() && b.is_empty();
    }
    let n = a.len().lcm(&b.len());
    (0..n).all(|i| a[i % a.len()] == b[i % b.len()])
}

/// Rationals `num_i / den`.
pub fn ratios(num: &[i64], den: i64) -> Vec<BigRational> {
    num.iter()
        .map(|&x| BigRational::new(BigInt::from(x), BigInt::from(den)))
        .collect()
}

impl QPowProfile {
    /// Smallest period of the `(u, v)` table.
    pub fn minimal_period(&self) -> u64 {
        (1..=self.d)
            .filter(|p| self.d % p == 0)
            .find(|&p| {
                (0..self.d as usize).all(|i| {
                    self.u[i] == self.u[i % p as usize] && self.v[i] == self.v[i % p as usize]
                })
            })
            .unwrap_or(self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: &FieldSpec, c: &[i64]) -> UniPoly {
        UniPoly::from_ints(field, c)
    }

    #[test]
    fn degrees_and_multiplicities() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(splitting_degree(&poly(&f2, &[1, 1, 1, 1, 1])).unwrap(), 4);
        assert_eq!(splitting_degree(&poly(&f2, &[1, 1])).unwrap(), 1);
        let p5 = poly(&f2, &[1, 0, 1, 0, 0, 1]);
        assert_eq!(splitting_degree(&p5.pow(3)).unwrap(), 5);
        assert_eq!(max_multiplicity(&p5.pow(3)).unwrap(), 3);
        assert_eq!(max_multiplicity(&p5).unwrap(), 1);
        let h = poly(&f2, &[1, 1]).pow(2).mul(&poly(&f2, &[1, 1, 1]));
        assert_eq!(max_multiplicity(&h).unwrap(), 2);
        assert_eq!(splitting_degree(&h).unwrap(), 2);
        assert!(splitting_degree(&poly(&f2, &[0, 1, 1])).is_err());
        assert!(splitting_degree(&poly(&f2, &[1])).is_err());
        assert_eq!(threshold(2, 3, 1), 2);
        assert_eq!(threshold(2, 1, 1), 0);
        assert_eq!(threshold(2, 2, 3), 3);
    }

    #[test]
    fn counts() {
        let f2 = FieldSpec::prime(2).unwrap();
        let b = Budget::default();
        let g = poly(&f2, &[1, 1, 1, 1, 1]);
        assert_eq!(count_qpow(&g, 1, FieldElem(1), 1, &b).unwrap(), 5);
        assert_eq!(count_qpow(&g, 1, FieldElem(1), 0, &b).unwrap(), 1);
        let d = poly(&f2, &[1, 0, 1, 0, 0, 1]).pow(3);
        assert_eq!(count_qpow(&d, 1, FieldElem(1), 1, &b).unwrap(), 9);
        assert!(count_qpow(&g, 3, FieldElem(1), 1, &b).is_err());
    }

    #[test]
    fn dense_paths_agree_with_sparse_powering() {
        for (p, coeffs) in [(2u64, vec![1i64, 0, 1, 1]), (3, vec![2, 1, 1]), (5, vec![1, 4, 0, 2])] {
            let field = FieldSpec::prime(p).unwrap();
            let g = poly(&field, &coeffs);
            for n in [0u64, 1, 2, 7, 30, 101] {
                let expect = g.pow(n);
                let census = power_census(&g, n, &Budget::default()).unwrap();
                for code in 1..p as u32 {
                    let direct = expect.coeffs().iter().filter(|c| c.0 == code).count() as u64;
                    assert_eq!(census[code as usize], direct, "p={p} n={n}");
                }
            }
        }
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let g = UniPoly::new(&f4, vec![FieldElem(2), FieldElem(1), FieldElem(3)]);
        for n in [5u64, 17, 40] {
            let expect = g.pow(n);
            let census = power_census(&g, n, &Budget::default()).unwrap();
            for code in 1..4u32 {
                let direct = expect.coeffs().iter().filter(|c| c.0 == code).count() as u64;
                assert_eq!(census[code as usize], direct);
            }
        }
    }

    #[test]
    fn primitive_profile() {
        let f2 = FieldSpec::prime(2).unwrap();
        let g = poly(&f2, &[1, 0, 1, 0, 0, 1]);
        let prof = fit_qpow_profile(&g, 1, FieldElem(1), &Budget::default()).unwrap();
        assert_eq!(prof.d, 5);
        assert!(prof.u.iter().all(|x| *x == ratios(&[80], 31)[0]));
        assert_eq!(prof.v, ratios(&[-49, -67, -41, 11, -9], 31));
        assert_eq!(primitive_u_check(&g).unwrap(), ratios(&[80], 31)[0]);
        assert_eq!(primitive_u_check(&poly(&f2, &[1, 1, 1, 1, 1])).unwrap_err(), Error::NotPrimitive);
    }

    #[test]
    fn periodic_comparison() {
        assert!(periodic_eq(&[1, 2], &[1, 2, 1, 2]));
        assert!(!periodic_eq(&[1, 2], &[1, 2, 1]));
    }
}
