//! Dense univariate polynomials over F_q: Euclidean arithmetic, squarefree
//! decomposition and distinct-degree factorization.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ffield::{FieldElem, FieldSpec};

/// Coefficients are stored constant term first with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let codes: Vec<u32> = self.coeffs.iter().map(|c| c.0).collect();
        write!(f, "UniPoly({:?}, {:?})", self.field, codes)
    }
}

impl UniPoly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    /// From integer coefficients reduced into the prime subfield.
    pub fn from_ints(field: &FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::new(field, vec![field.one()])
    }

    pub fn x(field: &FieldSpec) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem(0))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn lead(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem(0))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: FieldElem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], inv);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let k = top - dd + i;
                rem[k] = f.sub(rem[k], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int((i as u64 % f.p()) as i64), c))
                .collect(),
        )
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(&self.field).rem(modulus).expect("nonzero modulus");
        let base = self.rem(modulus).expect("nonzero modulus");
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus).expect("nonzero modulus");
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus).expect("nonzero modulus");
            }
        }
        acc
    }

    /// Assuming every exponent with a nonzero coefficient is a multiple of p,
    /// returns the p-th root.
    fn pth_root(&self) -> Self {
        let f = &self.field;
        let p = f.p() as usize;
        Self::new(f, self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect())
    }

    /// Squarefree decomposition of the monic associate of `self`: pairs
    /// `(h_i, i)` with `h_i` squarefree, pairwise coprime and nonconstant, such
    /// that `monic(self) = ∏ h_i^i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        sqf_rec(&self.monic(), 1, &mut out);
        out.sort_by_key(|(_, m)| *m);
        // Merge entries with equal multiplicity produced by different recursion levels.
        let mut merged: Vec<(UniPoly, u32)> = Vec::new();
        for (h, m) in out {
            match merged.last_mut() {
                Some((prev, pm)) if *pm == m => *prev = prev.mul(&h),
                _ => merged.push((h, m)),
            }
        }
        Ok(merged)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial: pairs
    /// `(d, g_d)` where `g_d` is the product of all irreducible factors of degree `d`.
    pub fn distinct_degree_factorization(&self) -> Result<Vec<(usize, UniPoly)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = &self.field;
        let q = BigUint::from(f.q());
        let mut rest = self.monic();
        let mut out = Vec::new();
        let mut xq = Self::x(f);
        let mut d = 0usize;
        while let Some(deg) = rest.degree() {
            if deg == 0 {
                break;
            }
            d += 1;
            if 2 * d > deg {
                out.push((deg, rest.clone()));
                break;
            }
            xq = xq.pow_mod(&q, &rest);
            let g = rest.gcd(&xq.sub(&Self::x(f)));
            if !g.is_one() {
                rest = rest.exact_div(&g)?;
                xq = xq.rem(&rest)?;
                out.push((d, g));
            }
        }
        Ok(out)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        let deg = match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Ok(false),
            Some(d) => d,
        };
        let f = &self.field;
        let g = self.monic();
        let q = BigUint::from(f.q());
        let mut xq = Self::x(f);
        for _ in 1..=deg / 2 {
            xq = xq.pow_mod(&q, &g);
            if !g.gcd(&xq.sub(&Self::x(f))).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn sqf_rec(f: &UniPoly, scale: u32, out: &mut Vec<(UniPoly, u32)>) {
    let p = f.field.p() as u32;
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i * scale));
        }
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() && !c.is_zero() {
        sqf_rec(&c.pth_root(), scale * p, out);
    }
}

impl UniPoly {
    /// Evaluate at a field element (Horner).
    pub fn eval(&self, x: FieldElem) -> FieldElem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn const_term_is_zero(&self) -> bool {
        self.coeff(0).is_zero()
    }

    /// Product of the given factors raised to their multiplicities.
    pub fn from_factors(field: &FieldSpec, factors: &[(UniPoly, u32)]) -> Self {
        factors
            .iter()
            .fold(Self::one(field), |acc, (h, m)| acc.mul(&h.pow(*m as u64)))
    }
}

impl UniPoly {
    pub fn big_degree(&self) -> BigUint {
        self.degree().map(BigUint::from).unwrap_or_else(BigUint::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn divrem_reconstructs() {
        let f = FieldSpec::prime(5).unwrap();
        let a = UniPoly::from_ints(&f, &[3, 1, 4, 1, 5, 9, 2, 6]);
        let b = UniPoly::from_ints(&f, &[2, 7, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.divrem(&UniPoly::zero(&f)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        let f = f2();
        let p5 = UniPoly::from_ints(&f, &[1, 0, 1, 0, 0, 1]);
        let cube = p5.pow(3);
        assert_eq!(cube.squarefree_decomposition().unwrap(), vec![(p5.clone(), 3)]);

        let lin = UniPoly::from_ints(&f, &[1, 1]);
        let quad = UniPoly::from_ints(&f, &[1, 1, 1]);
        let g = lin.pow(2).mul(&quad);
        let sqf = g.squarefree_decomposition().unwrap();
        assert_eq!(sqf, vec![(quad.clone(), 1), (lin.clone(), 2)]);

        // multiplicity divisible by p exercises the p-th root branch
        let h = lin.pow(4).mul(&quad.pow(6)).mul(&p5);
        let sqf = h.squarefree_decomposition().unwrap();
        assert_eq!(UniPoly::from_factors(&f, &sqf), h);
        assert_eq!(sqf.iter().map(|(_, m)| *m).collect::<Vec<_>>(), vec![1, 4, 6]);
    }

    #[test]
    fn ddf_over_f3() {
        let f = FieldSpec::prime(3).unwrap();
        // (x+1)(x^2+1)(x^3+2x+1)
        let g = UniPoly::from_ints(&f, &[1, 1])
            .mul(&UniPoly::from_ints(&f, &[1, 0, 1]))
            .mul(&UniPoly::from_ints(&f, &[1, 2, 0, 1]));
        let ddf = g.distinct_degree_factorization().unwrap();
        let degs: Vec<usize> = ddf.iter().map(|(d, _)| *d).collect();
        assert_eq!(degs, vec![1, 2, 3]);
    }

    #[test]
    fn irreducibility() {
        let f = f2();
        assert!(UniPoly::from_ints(&f, &[1, 1, 1, 1, 1]).is_irreducible().unwrap());
        assert!(!UniPoly::from_ints(&f, &[1, 1, 1, 1, 1, 1]).is_irreducible().unwrap());
        assert!(UniPoly::from_ints(&f, &[1, 1, 0, 0, 0, 0, 0, 0, 1]).is_irreducible().is_ok());
        assert!(!UniPoly::from_ints(&f, &[1, 1, 0, 0, 0, 0, 0, 0, 1]).is_irreducible().unwrap());
    }
}
