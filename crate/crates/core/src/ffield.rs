//! Finite fields F_q with q = p^r.
//!
//! Elements are stored as integer codes `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`
//! where `c_0 + c_1 θ + ...` is the polynomial-basis representation with
//! respect to the field modulus. The prime subfield therefore consists of
//! the codes `0..p`, and an integer `a` embeds as the code `a mod p`.
//!
//! Extension fields multiply through exp/log tables built from a generator
//! found at construction time, so construction is O(q) and every product
//! afterwards is two table lookups.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::upoly::UniPoly;

/// Default upper bound on q.
pub const DEFAULT_Q_CAP: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(u64),
}

#[derive(Debug)]
struct Inner {
    p: u64,
    r: u32,
    q: u64,
    modulus: Vec<u64>,
    // Only populated for r > 1.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The field F_{p^r} together with its (monic, irreducible) modulus.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.r == other.inner.r
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.r == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}^{}[{:?}]", self.inner.p, self.inner.r, self.inner.modulus)
        }
    }
}

impl FieldSpec {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self> {
        Self::with_cap(p, 1, None, DEFAULT_Q_CAP)
    }

    /// F_{p^r}; `modulus` (constant term first, monic of degree r) defaults to
    /// [`find_irreducible`].
    pub fn new(p: u64, r: u32, modulus: Option<Vec<u64>>) -> Result<Self> {
        Self::with_cap(p, r, modulus, DEFAULT_Q_CAP)
    }

    pub fn with_cap(p: u64, r: u32, modulus: Option<Vec<u64>>, cap: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let q = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
        if q > cap as u128 {
            return Err(Error::FieldTooLarge { q, cap });
        }
        let q = q as u64;
        if r == 1 {
            return Ok(FieldSpec {
                inner: Arc::new(Inner {
                    p,
                    r,
                    q,
                    modulus: vec![0, 1],
                    exp: Vec::new(),
                    log: Vec::new(),
                }),
            });
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != r as usize + 1 || m[r as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField(format!(
                        "modulus {m:?} is not a monic degree-{r} polynomial over F_{p}"
                    )));
                }
                if !is_irreducible_over_prime(p, &m)? {
                    return Err(Error::InvalidField(format!("modulus {m:?} is reducible over F_{p}")));
                }
                m
            }
            None => find_irreducible(p, r)?,
        };
        let (exp, log) = build_tables(p, r, q, &modulus);
        Ok(FieldSpec {
            inner: Arc::new(Inner { p, r, q, modulus, exp, log }),
        })
    }

    /// Parses `p`, `p^r` or `p^r:c0,c1,...,cr` (modulus constant term first).
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidField(format!("cannot parse field '{text}'"));
        let (head, modulus) = match text.split_once(':') {
            Some((h, m)) => {
                let coeffs = m
                    .split(',')
                    .map(|c| c.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                (h, Some(coeffs))
            }
            None => (text, None),
        };
        let (p, r) = match head.split_once('^') {
            Some((p, r)) => (
                p.trim().parse::<u64>().map_err(|_| bad())?,
                r.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => (head.trim().parse::<u64>().map_err(|_| bad())?, 1),
        };
        Self::new(p, r, modulus)
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn r(&self) -> u32 {
        self.inner.r
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    pub fn elem(&self, code: u64) -> Result<FieldElem> {
        if code >= self.inner.q {
            return Err(Error::InvalidElement(code));
        }
        Ok(FieldElem(code as u32))
    }

    /// Element with polynomial-basis coordinates `coeffs` (constant first).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.inner.r as usize {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates for a degree-{} extension",
                coeffs.len(),
                self.inner.r
            )));
        }
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            code = code * self.inner.p + c % self.inner.p;
        }
        Ok(FieldElem(code as u32))
    }

    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.inner.r as usize);
        let mut c = a.0 as u64;
        for _ in 0..self.inner.r {
            out.push(c % self.inner.p);
            c /= self.inner.p;
        }
        out
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.inner.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.inner.q as u32).map(FieldElem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.inner.q as u32).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.inner.p;
        if self.inner.r == 1 {
            return FieldElem(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        if p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut out, mut scale) = (0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        FieldElem(out as u32)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        let mut x = a.0 as u64;
        let (mut out, mut scale) = (0u64, 1u64);
        while x > 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        FieldElem(out as u32)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        if self.inner.r == 1 {
            return FieldElem(((a.0 as u64 * b.0 as u64) % self.inner.p) as u32);
        }
        let n = self.inner.q - 1;
        let l = (self.inner.log[a.0 as usize] as u64 + self.inner.log[b.0 as usize] as u64) % n;
        FieldElem(self.inner.exp[l as usize])
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem(1);
        }
        if a.0 == 0 {
            return FieldElem(0);
        }
        let n = self.inner.q - 1;
        if self.inner.r > 1 {
            let l = (self.inner.log[a.0 as usize] as u128 * (e % n) as u128) % n as u128;
            return FieldElem(self.inner.exp[l as usize]);
        }
        let (mut base, mut e, mut acc) = (a.0 as u64, e % n, 1u64);
        let p = self.inner.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        FieldElem(acc as u32)
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.inner.q - 2))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The Frobenius map a ↦ a^p.
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.inner.p)
    }

    /// Inverse Frobenius: the unique b with b^p = a.
    pub fn pth_root(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.inner.q / self.inner.p)
    }

    pub fn field_arith(&self, a: FieldElem, b: FieldElem, op: ArithOp) -> Result<FieldElem> {
        for x in [a, b] {
            if x.0 as u64 >= self.inner.q {
                return Err(Error::InvalidElement(x.0 as u64));
            }
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
            ArithOp::Pow(e) => self.pow(a, e),
        })
    }

    /// True iff a root of `g` generates the multiplicative group of F_{q^deg g}.
    ///
    /// Errors with [`Error::Reducible`] when `g` is not irreducible over F_q.
    pub fn is_primitive(&self, g: &UniPoly) -> Result<bool> {
        if g.field() != self {
            return Err(Error::FieldMismatch);
        }
        if !g.is_irreducible()? {
            return Err(Error::Reducible);
        }
        let d = g.degree().unwrap_or(0) as u32;
        if g.coeff(0).is_zero() {
            return Ok(false);
        }
        let order = (self.inner.q as u128)
            .checked_pow(d)
            .filter(|o| *o - 1 <= u64::MAX as u128)
            .ok_or_else(|| Error::Unsupported(format!("q^{d} - 1 does not fit 64 bits")))?
            - 1;
        let order = order as u64;
        let g = g.monic();
        let x = UniPoly::x(self);
        for l in arith::prime_factors(order) {
            let e = BigUint::from(order / l);
            if x.pow_mod(&e, &g).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Lexicographically smallest monic irreducible polynomial of degree `r` over
/// F_p, constant term first. Candidates are ordered by their coefficient
/// vector read from x^{r-1} down to the constant. For `r = 1` this is `x`.
pub fn find_irreducible(p: u64, r: u32) -> Result<Vec<u64>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    let count = (p as u128).pow(r);
    if count > u64::MAX as u128 {
        return Err(Error::Unsupported("search space too large".into()));
    }
    for code in 0..count as u64 {
        let mut m = arith::digits(code, p);
        m.resize(r as usize, 0);
        m.push(1);
        if is_irreducible_over_prime(p, &m)? {
            return Ok(m);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn is_irreducible_over_prime(p: u64, coeffs: &[u64]) -> Result<bool> {
    let fp = FieldSpec::prime(p)?;
    let poly = UniPoly::new(&fp, coeffs.iter().map(|&c| fp.from_int(c as i64)).collect());
    poly.is_irreducible()
}

fn build_tables(p: u64, r: u32, q: u64, modulus: &[u64]) -> (Vec<u32>, Vec<u32>) {
    let slow_mul = |a: u64, b: u64| -> u64 {
        let (da, db) = (digits_fixed(a, p, r), digits_fixed(b, p, r));
        let mut prod = vec![0u64; 2 * r as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for top in (r as usize..prod.len()).rev() {
            let c = prod[top];
            if c != 0 {
                for (i, &m) in modulus.iter().enumerate().take(r as usize) {
                    let k = top - r as usize + i;
                    prod[k] = (prod[k] + (p - c) * m % p) % p;
                }
                prod[top] = 0;
            }
        }
        prod[..r as usize].iter().rev().fold(0, |acc, &c| acc * p + c)
    };
    let slow_pow = |a: u64, mut e: u64| -> u64 {
        let (mut base, mut acc) = (a, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = slow_mul(acc, base);
            }
            base = slow_mul(base, base);
            e >>= 1;
        }
        acc
    };
    let n = q - 1;
    let factors = arith::prime_factors(n);
    let generator = (2..q)
        .find(|&c| factors.iter().all(|&l| slow_pow(c, n / l) != 1))
        .expect("multiplicative group of a field is cyclic");
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur = 1u64;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = cur as u32;
        log[cur as usize] = i as u32;
        cur = slow_mul(cur, generator);
    }
    (exp, log)
}

fn digits_fixed(mut x: u64, p: u64, r: u32) -> Vec<u64> {
    (0..r)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldSpec {
        FieldSpec::new(2, 2, None).unwrap()
    }

    #[test]
    fn small_field_arithmetic() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(f2.add(f2.one(), f2.one()), f2.zero());
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.mul(FieldElem(2), FieldElem(2)), FieldElem(1));
        // x · x = x + 1 in F_4 = F_2[x]/(x^2+x+1)
        let f = f4();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let x = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.coeffs(f.mul(x, x)), vec![1, 1]);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = f4();
        assert_eq!(f.div(f.one(), f.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.field_arith(FieldElem(7), f.one(), ArithOp::Add), Err(Error::InvalidElement(7)));
    }

    #[test]
    fn find_irreducible_examples() {
        assert_eq!(find_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(find_irreducible(2, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn find_irreducible_has_no_roots_and_is_irreducible() {
        for (p, r) in [(2, 3), (2, 4), (2, 8), (3, 3), (5, 2), (7, 3), (3, 5)] {
            let m = find_irreducible(p, r).unwrap();
            for x in 0..p {
                let v = m.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p);
                assert_ne!(v, 0, "root {x} of {m:?} over F_{p}");
            }
            assert!(is_irreducible_over_prime(p, &m).unwrap());
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(FieldSpec::prime(4).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(FieldSpec::new(2, 2, Some(vec![1, 0, 1])), Err(Error::InvalidField(_))));
        assert!(matches!(FieldSpec::new(2, 17, None), Err(Error::FieldTooLarge { .. })));
        assert!(FieldSpec::parse("2^x").is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(FieldSpec::parse("3").unwrap().q(), 3);
        let f = FieldSpec::parse("2^3").unwrap();
        assert_eq!((f.q(), f.modulus()), (8, &[1u64, 1, 0, 1][..]));
        let g = FieldSpec::parse("2^3:1,0,1,1").unwrap();
        assert_eq!(g.modulus(), &[1, 0, 1, 1]);
        assert_ne!(f, g);
    }

    #[test]
    fn inverse_round_trip_and_frobenius_additivity() {
        for f in [
            FieldSpec::prime(5).unwrap(),
            f4(),
            FieldSpec::new(3, 2, None).unwrap(),
            FieldSpec::new(2, 4, None).unwrap(),
            FieldSpec::new(3, 4, None).unwrap(),
        ] {
            for a in f.nonzero_elements() {
                assert_eq!(f.mul(a, f.div(f.one(), a).unwrap()), f.one());
                assert_eq!(f.pth_root(f.frobenius(a)), a);
            }
            for a in f.elements() {
                for b in f.elements() {
                    let lhs = f.frobenius(f.add(a, b));
                    assert_eq!(lhs, f.add(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
        }
    }

    #[test]
    fn primitivity_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let poly = |f: &FieldSpec, c: &[i64]| UniPoly::new(f, c.iter().map(|&x| f.from_int(x)).collect());
        assert!(f2.is_primitive(&poly(&f2, &[1, 0, 1, 0, 0, 1])).unwrap());
        assert!(!f2.is_primitive(&poly(&f2, &[1, 1, 1, 1, 1])).unwrap());
        assert!(f3.is_primitive(&poly(&f3, &[2, 1, 1])).unwrap());
        assert_eq!(f2.is_primitive(&poly(&f2, &[1, 0, 1])), Err(Error::Reducible));
    }
}
