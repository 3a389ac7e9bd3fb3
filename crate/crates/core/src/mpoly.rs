//! Sparse multivariate polynomials over F_q or over the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::ffield::{FieldElem, FieldSpec};
use crate::Budget;

/// A commutative coefficient ring.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Hash + Ord + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Element given by its base-p digit vector (extension-field literal).
    fn from_digits(&self, digits: &[u64]) -> Result<Self::Elem>;
    /// Zero for the integers.
    fn characteristic(&self) -> u64;
    /// The map a -> a^p; only called when the characteristic is a prime p.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem;
    /// Text form accepted back by [`parse_poly`].
    fn render(&self, a: &Self::Elem) -> String {
        a.to_string()
    }
}

/// The ring of integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Integers;

impl CoeffRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn from_digits(&self, _digits: &[u64]) -> Result<BigInt> {
        Err(Error::InvalidArgument("bracketed coefficients need an extension field".into()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn frobenius(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
}

impl CoeffRing for FieldSpec {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        FieldSpec::zero(self)
    }
    fn one(&self) -> FieldElem {
        FieldSpec::one(self)
    }
    fn is_zero(&self, a: &FieldElem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldSpec::add(self, *a, *b)
    }
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldSpec::mul(self, *a, *b)
    }
    fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldSpec::neg(self, *a)
    }
    fn from_bigint(&self, n: &BigInt) -> FieldElem {
        let r = n.mod_floor(&BigInt::from(self.p())).to_i64().expect("residue fits");
        self.from_int(r)
    }
    fn from_digits(&self, digits: &[u64]) -> Result<FieldElem> {
        self.from_coeffs(digits)
    }
    fn characteristic(&self) -> u64 {
        self.p()
    }
    fn frobenius(&self, a: &FieldElem) -> FieldElem {
        FieldSpec::frobenius(self, *a)
    }
    fn render(&self, a: &FieldElem) -> String {
        if (a.0 as u64) < self.p() {
            a.to_string()
        } else {
            let digits: Vec<String> = self.coeffs(*a).iter().map(u64::to_string).collect();
            format!("[{}]", digits.join(","))
        }
    }
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Box<[u64]>);

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn one(k: usize) -> Self {
        Monomial(vec![0; k].into_boxed_slice())
    }

    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    fn scale(&self, s: u64) -> Monomial {
        Monomial(self.0.iter().map(|a| a * s).collect())
    }
}

/// Sparse polynomial in `k` variables; zero coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly<R: CoeffRing> {
    ring: R,
    k: usize,
    terms: FxHashMap<Monomial, R::Elem>,
}

pub type IntPoly = MultiPoly<Integers>;
pub type FieldPoly = MultiPoly<FieldSpec>;

impl<R: CoeffRing> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.k == other.k && self.terms == other.terms
    }
}

impl<R: CoeffRing> MultiPoly<R> {
    pub fn zero(ring: &R, k: usize) -> Self {
        MultiPoly { ring: ring.clone(), k, terms: FxHashMap::default() }
    }

    pub fn constant(ring: &R, k: usize, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, k);
        p.add_term(Monomial::one(k), c);
        p
    }

    pub fn one(ring: &R, k: usize) -> Self {
        Self::constant(ring, k, ring.one())
    }

    /// The variable `x_i` (1-based).
    pub fn var(ring: &R, k: usize, i: usize) -> Result<Self> {
        if i == 0 || i > k {
            return Err(Error::InvalidArgument(format!("variable x{i} outside 1..{k}")));
        }
        let mut e = vec![0; k];
        e[i - 1] = 1;
        Ok(Self::from_terms(ring, k, [(e, ring.one())]))
    }

    pub fn from_terms(ring: &R, k: usize, terms: impl IntoIterator<Item = (Vec<u64>, R::Elem)>) -> Self {
        let mut p = Self::zero(ring, k);
        for (e, c) in terms {
            assert_eq!(e.len(), k, "exponent vector length");
            p.add_term(Monomial::new(e), c);
        }
        p
    }

    /// Sum of the given variables (1-based indices), each with coefficient one.
    pub fn linear_sum(ring: &R, k: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut p = Self::zero(ring, k);
        for i in vars {
            p = p.add(&Self::var(ring, k, i)?)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one(self.k)) == Some(&self.ring.one())
    }

    pub fn coeff(&self, exps: &[u64]) -> R::Elem {
        self.terms
            .get(&Monomial(exps.into()))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &R::Elem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            b.0.total_degree()
                .cmp(&a.0.total_degree())
                .then_with(|| b.0.cmp(a.0))
        });
        v
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::FieldMismatch);
        }
        if self.k != other.k {
            return Err(Error::ArityMismatch(self.k, other.k));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.ring, self.k);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with_budget(other, &Budget::default())
    }

    pub fn mul_with_budget(&self, other: &Self, budget: &Budget) -> Result<Self> {
        self.check_compatible(other)?;
        let projected = self.projected_product_terms(other);
        if projected > budget.max_terms as u128 {
            return Err(Error::Budget(format!(
                "product may have {projected} terms (limit {})",
                budget.max_terms
            )));
        }
        let mut out = Self::zero(&self.ring, self.k);
        out.terms.reserve(projected.min(1 << 20) as usize);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Upper bound on the number of terms of `self * other`.
    fn projected_product_terms(&self, other: &Self) -> u128 {
        let pairs = self.len() as u128 * other.len() as u128;
        if self.is_zero() || other.is_zero() {
            return 0;
        }
        let da = self.var_degrees().expect("nonzero");
        let db = other.var_degrees().expect("nonzero");
        let mut boxed: u128 = 1;
        for (a, b) in da.iter().zip(db.iter()) {
            boxed = boxed.saturating_mul((a + b + 1) as u128);
        }
        pairs.min(boxed)
    }

    /// The map that raises coefficients to the p-th power and scales exponents
    /// by p; in characteristic p this equals `self^p`.
    pub fn frobenius(&self) -> Self {
        let p = self.ring.characteristic();
        assert!(p > 0, "Frobenius needs positive characteristic");
        let mut out = Self::zero(&self.ring, self.k);
        for (m, c) in &self.terms {
            out.terms.insert(m.scale(p), self.ring.frobenius(c));
        }
        out
    }

    pub fn pow(&self, n: u64) -> Result<Self> {
        self.pow_with_budget(n, &Budget::default())
    }

    /// `self^n`. In characteristic p this multiplies together the digit powers
    /// `(f^{p^i})^{a_i}` for `n = Σ a_i p^i`, each `f^{p^i}` obtained by
    /// Frobenius; over the integers it uses square-and-multiply.
    pub fn pow_with_budget(&self, n: u64, budget: &Budget) -> Result<Self> {
        let p = self.ring.characteristic();
        let mut acc = Self::one(&self.ring, self.k);
        if n == 0 {
            return Ok(acc);
        }
        if let Some(d) = self.var_degrees_opt() {
            let deg = d.iter().max().copied().unwrap_or(0) as u128;
            if deg * n as u128 > budget.max_dense_degree as u128 {
                return Err(Error::Budget(format!("degree {} exceeds limit", deg * n as u128)));
            }
        }
        if p == 0 {
            let mut base = self.clone();
            let mut e = n;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc.mul_with_budget(&base, budget)?;
                }
                e >>= 1;
                if e > 0 {
                    base = base.mul_with_budget(&base, budget)?;
                }
            }
            return Ok(acc);
        }
        let mut frob = self.clone();
        let mut e = n;
        while e > 0 {
            let a = e % p;
            for _ in 0..a {
                acc = acc.mul_with_budget(&frob, budget)?;
            }
            e /= p;
            if e > 0 {
                frob = frob.frobenius();
            }
        }
        Ok(acc)
    }

    fn var_degrees_opt(&self) -> Option<Vec<u64>> {
        if self.is_zero() {
            return None;
        }
        let mut d = vec![0; self.k];
        for m in self.terms.keys() {
            for (di, e) in d.iter_mut().zip(m.0.iter()) {
                *di = (*di).max(*e);
            }
        }
        Some(d)
    }

    /// Componentwise maximum of the exponent vectors.
    pub fn var_degrees(&self) -> Result<Vec<u64>> {
        self.var_degrees_opt().ok_or(Error::ZeroPolynomial)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Number of occurrences of each nonzero coefficient value.
    pub fn coeff_census(&self) -> Census<R::Elem> {
        let mut counts = BTreeMap::new();
        for c in self.terms.values() {
            *counts.entry(c.clone()).or_insert(0u64) += 1;
        }
        Census { counts }
    }

    /// Rename variables: variable `i` (0-based) becomes `map[i]` in a ring with
    /// `k` variables.
    pub fn remap_vars(&self, k: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(&self.ring, k);
        for (m, c) in &self.terms {
            let mut e = vec![0; k];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        out
    }
}

/// Coefficient value counts of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census<E: Ord> {
    pub counts: BTreeMap<E, u64>,
}

impl<E: Ord> Census<E> {
    /// Total number of nonzero coefficients.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, e: &E) -> u64 {
        self.counts.get(e).copied().unwrap_or(0)
    }
}

impl<R: CoeffRing> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{:?}, k={}]({})", self.ring, self.k, self)
    }
}

impl<R: CoeffRing> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let univariate = self.k == 1;
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            let cs = self.ring.render(c);
            if cs != "1" || m.total_degree() == 0 {
                factors.push(cs);
            }
            for (i, &e) in m.0.iter().enumerate() {
                let name = if univariate { "x".to_string() } else { format!("x{}", i + 1) };
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Parse a polynomial in `k` variables.
///
/// Grammar: terms joined by `+`/`-`; a term is a `*`-separated product of
/// factors, each an integer, a bracketed base-p digit list `[c0,c1,...]`
/// (extension-field element, constant digit first), or a variable `xI` /
/// `xI^E` with `I` in `1..=k` (plain `x` when `k = 1`). Whitespace is ignored.
pub fn parse_poly<R: CoeffRing>(text: &str, k: usize, ring: &R) -> Result<MultiPoly<R>> {
    let mut parser = Parser { s: text.as_bytes(), pos: 0, k };
    let p = parser.poly(ring)?;
    parser.skip_ws();
    if parser.pos != parser.s.len() {
        return Err(parser.err("unexpected character"));
    }
    Ok(p)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    k: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn small_number(&mut self) -> Result<u64> {
        let at = self.pos;
        self.number()?
            .to_u64()
            .ok_or(Error::Parse { pos: at, msg: "number too large".into() })
    }

    fn poly<R: CoeffRing>(&mut self, ring: &R) -> Result<MultiPoly<R>> {
        let mut acc = MultiPoly::zero(ring, self.k);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                None if first => return Err(self.err("empty polynomial")),
                _ if first => false,
                _ => break,
            };
            first = false;
            let (m, mut c) = self.term(ring)?;
            if negative {
                c = ring.neg(&c);
            }
            acc.add_term(m, c);
            match self.peek() {
                Some(b'+') | Some(b'-') => {}
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<R: CoeffRing>(&mut self, ring: &R) -> Result<(Monomial, R::Elem)> {
        let mut exps = vec![0u64; self.k];
        let mut coeff = ring.one();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let n = self.number()?;
                    coeff = ring.mul(&coeff, &ring.from_bigint(&n));
                }
                Some(b'[') => {
                    let at = self.pos;
                    self.pos += 1;
                    let mut digits = Vec::new();
                    loop {
                        digits.push(self.small_number()?);
                        match self.peek() {
                            Some(b',') => self.pos += 1,
                            Some(b']') => {
                                self.pos += 1;
                                break;
                            }
                            _ => return Err(self.err("expected ',' or ']'")),
                        }
                    }
                    let c = ring
                        .from_digits(&digits)
                        .map_err(|e| Error::Parse { pos: at, msg: e.to_string() })?;
                    coeff = ring.mul(&coeff, &c);
                }
                Some(b'x') => {
                    let at = self.pos;
                    self.pos += 1;
                    let idx = if self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        self.small_number()? as usize
                    } else if self.k == 1 {
                        1
                    } else {
                        return Err(Error::Parse { pos: at, msg: "bare x needs a single variable".into() });
                    };
                    if idx == 0 || idx > self.k {
                        return Err(Error::Parse {
                            pos: at,
                            msg: format!("variable x{idx} outside x1..x{}", self.k),
                        });
                    }
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.small_number()?
                    } else {
                        1
                    };
                    exps[idx - 1] += e;
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }
}

/// Smallest `k` such that every variable index in `text` is at most `k`
/// (1 when only the bare `x` occurs).
pub fn infer_nvars(text: &str) -> usize {
    let b = text.as_bytes();
    let mut k = 1;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let mut j = i + 1;
            let mut n = 0usize;
            while j < b.len() && b[j].is_ascii_digit() {
                n = n.saturating_mul(10).saturating_add((b[j] - b'0') as usize);
                j += 1;
            }
            k = k.max(n);
            i = j;
        } else {
            i += 1;
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn parse_examples() {
        let p = parse_poly("1 + x1 + x2 + x1*x2^2", 2, &f2()).unwrap();
        assert_eq!(p.len(), 4);
        assert!(parse_poly("x1 - x1", 1, &Integers).unwrap().is_zero());
        assert!(parse_poly("2*x1", 1, &f2()).unwrap().is_zero());
        assert!(matches!(parse_poly("x3", 2, &f2()), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("1 + * x", 1, &f2()), Err(Error::Parse { pos: 4, .. })));
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let p = parse_poly("[0,1]*x + 1", 1, &f4).unwrap();
        assert_eq!(p.coeff(&[1]), FieldElem(2));
        assert_eq!(parse_poly("-3*x^2 + 2 - x^2", 1, &Integers).unwrap().coeff(&[2]), BigInt::from(-4));
    }

    #[test]
    fn mul_examples() {
        let ff = f2();
        let a = parse_poly("1+x", 1, &ff).unwrap();
        assert_eq!(a.mul(&a).unwrap(), parse_poly("1+x^2", 1, &ff).unwrap());
        let b = parse_poly("x1", 2, &Integers).unwrap();
        let c = parse_poly("x1+x2", 2, &Integers).unwrap();
        assert_eq!(b.mul(&c).unwrap(), parse_poly("x1^2+x1*x2", 2, &Integers).unwrap());
        let d = parse_poly("1+x1+x2", 3, &ff).unwrap();
        let e = parse_poly("1+x2+x3", 3, &ff).unwrap();
        let de = d.mul(&e).unwrap();
        assert_eq!(de.len(), 7);
        assert_eq!(de.coeff(&[0, 1, 0]), FieldElem(0));
        let other = parse_poly("x1", 1, &ff).unwrap();
        assert_eq!(d.mul(&other).unwrap_err(), Error::ArityMismatch(3, 1));
        let f3 = MultiPoly::one(&FieldSpec::prime(3).unwrap(), 3);
        assert_eq!(d.mul(&f3).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn pow_examples() {
        let ff = f2();
        let a = parse_poly("1+x", 1, &ff).unwrap();
        assert_eq!(a.pow(3).unwrap(), parse_poly("1+x+x^2+x^3", 1, &ff).unwrap());
        assert!(a.pow(0).unwrap().is_one());
        let t = parse_poly("1+x+x^2", 1, &ff).unwrap();
        for k in 0..6 {
            let s = 1u64 << k;
            let expect = MultiPoly::from_terms(&ff, 1, [(vec![0], ff.one()), (vec![s], ff.one()), (vec![2 * s], ff.one())]);
            assert_eq!(t.pow(s).unwrap(), expect);
        }
        let small = Budget { max_dense_degree: 100, ..Budget::default() };
        assert!(matches!(a.pow_with_budget(1000, &small), Err(Error::Budget(_))));
    }

    #[test]
    fn census_and_degrees() {
        let ff = f2();
        let a = parse_poly("1+x", 1, &ff).unwrap();
        let c = a.pow(11).unwrap().coeff_census();
        assert_eq!(c.counts.into_iter().collect::<Vec<_>>(), vec![(FieldElem(1), 8)]);
        assert_eq!(MultiPoly::zero(&ff, 1).coeff_census().total(), 0);
        let f3 = FieldSpec::prime(3).unwrap();
        let c = parse_poly("1+x+x^2", 1, &f3).unwrap().pow(2).unwrap().coeff_census();
        assert_eq!(c.get(&FieldElem(1)), 2);
        assert_eq!(c.get(&FieldElem(2)), 2);
        let p = parse_poly("1+x1+x2+x1*x2^2", 2, &ff).unwrap();
        assert_eq!(p.var_degrees().unwrap(), vec![1, 2]);
        assert_eq!(MultiPoly::one(&ff, 3).var_degrees().unwrap(), vec![0, 0, 0]);
        assert_eq!(a.pow(4).unwrap().var_degrees().unwrap(), vec![4]);
        assert_eq!(MultiPoly::zero(&ff, 2).var_degrees().unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn display_is_graded_lex() {
        let p = parse_poly("1 + x2 + x1 + x1*x2^2 + 3*x1^3", 2, &Integers).unwrap();
        assert_eq!(p.to_string(), "3*x1^3 + x1*x2^2 + x1 + x2 + 1");
        let ff = f2();
        assert_eq!(parse_poly("x^2+1", 1, &ff).unwrap().to_string(), "x^2 + 1");
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let q = parse_poly("[1,1]*x^2 + [0,1]", 1, &f4).unwrap();
        assert_eq!(q.to_string(), "[1,1]*x^2 + [0,1]");
        assert_eq!(parse_poly(&q.to_string(), 1, &f4).unwrap(), q);
    }

    #[test]
    fn infers_variable_count() {
        assert_eq!(infer_nvars("1+x"), 1);
        assert_eq!(infer_nvars("1+x1+x12^3"), 12);
    }
}
