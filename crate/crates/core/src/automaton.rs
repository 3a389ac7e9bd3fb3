//! Digit automaton for coefficient counts of `g(x) f(x)^n` over F_q.
//!
//! A state is a section pattern: a function from the box
//! `S = [0, B_1] x ... x [0, B_k]` to F_q. Reading the base-q digits of `n`
//! from the least significant end, the multiset of sections of
//! `g f^{n mod q^{m+1}}` modulo `q^{m+1}` evolves by one integer matrix per
//! digit, and the number of coefficients equal to `alpha` is a linear
//! functional of that multiset. Only the states reachable from the initial
//! pattern are materialized.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::{FieldElem, FieldSpec};
use crate::mpoly::{FieldPoly, MultiPoly};
use crate::Budget;

type Pattern = Box<[u16]>;

/// The box `S` and its mixed-radix indexing (first variable fastest).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionBox {
    pub bounds: Vec<u64>,
    strides: Vec<usize>,
    size: usize,
}

impl SectionBox {
    pub fn new(bounds: Vec<u64>) -> Self {
        let mut strides = Vec::with_capacity(bounds.len());
        let mut size = 1usize;
        for &b in &bounds {
            strides.push(size);
            size *= b as usize + 1;
        }
        SectionBox { bounds, strides, size }
    }

    /// Number of points of S.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn index(&self, point: &[u64]) -> Option<usize> {
        let mut idx = 0;
        for ((&x, &b), &s) in point.iter().zip(&self.bounds).zip(&self.strides) {
            if x > b {
                return None;
            }
            idx += x as usize * s;
        }
        Some(idx)
    }

    pub fn point(&self, mut idx: usize) -> Vec<u64> {
        self.bounds
            .iter()
            .map(|&b| {
                let r = (idx % (b as usize + 1)) as u64;
                idx /= b as usize + 1;
                r
            })
            .collect()
    }
}

/// Matrices `Phi_a` (sparse, column-major) over the reachable states.
#[derive(Clone, Debug)]
pub struct DigitAutomaton {
    field: FieldSpec,
    f: FieldPoly,
    prefix: FieldPoly,
    section_box: SectionBox,
    states: Vec<Pattern>,
    /// `phi[a][col]` lists `(row, count)` pairs.
    phi: Vec<Vec<Vec<(u32, u32)>>>,
    init: usize,
}

impl DigitAutomaton {
    /// Automaton for `f^n` (initial pattern: the constant 1).
    pub fn build(f: &FieldPoly, budget: &Budget) -> Result<Self> {
        let one = MultiPoly::one(f.ring(), f.nvars());
        Self::build_with_prefix(f, &one, budget)
    }

    /// Automaton for `g f^n`.
    pub fn build_with_prefix(f: &FieldPoly, g: &FieldPoly, budget: &Budget) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.ring() != g.ring() {
            return Err(Error::FieldMismatch);
        }
        if f.nvars() != g.nvars() {
            return Err(Error::ArityMismatch(f.nvars(), g.nvars()));
        }
        let field = f.ring().clone();
        let q = field.q();
        let k = f.nvars();
        let degs = f.var_degrees()?;
        let gdegs = g.var_degrees().unwrap_or_else(|_| vec![0; k]);
        let bounds: Vec<u64> = degs
            .iter()
            .zip(&gdegs)
            .map(|(&d, &e)| ((q - 1) * d).max(e))
            .collect();
        let section_box = SectionBox::new(bounds);

        let (states, phi, init) = {
            let mut builder = Builder::new(&field, f, &section_box, budget.state_cap)?;
            let mut initial = vec![0u16; section_box.len()];
            for (m, c) in g.terms() {
                let idx = section_box.index(m.exps()).expect("prefix fits the box");
                initial[idx] = c.0 as u16;
            }
            let init = builder.intern(initial.into_boxed_slice())?;
            builder.close()?;
            (builder.states, builder.phi, init)
        };

        Ok(DigitAutomaton {
            field,
            f: f.clone(),
            prefix: g.clone(),
            section_box,
            states,
            phi,
            init,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn poly(&self) -> &FieldPoly {
        &self.f
    }

    pub fn prefix(&self) -> &FieldPoly {
        &self.prefix
    }

    pub fn section_box(&self) -> &SectionBox {
        &self.section_box
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Number of states whose pattern is not identically zero.
    pub fn num_nonzero_states(&self) -> usize {
        self.states.iter().filter(|s| s.iter().any(|&v| v != 0)).count()
    }

    pub fn init_state(&self) -> usize {
        self.init
    }

    /// Entry `(Phi_a)_{row, col}`.
    pub fn phi_entry(&self, a: usize, row: usize, col: usize) -> u32 {
        self.phi[a][col]
            .iter()
            .find(|(r, _)| *r as usize == row)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    /// Column sums of every `Phi_a`; each should equal `q^k`.
    pub fn column_sums(&self) -> Vec<Vec<u64>> {
        self.phi
            .iter()
            .map(|cols| cols.iter().map(|col| col.iter().map(|&(_, c)| c as u64).sum()).collect())
            .collect()
    }

    /// The output vector `u_alpha`: number of points of each pattern equal to `alpha`.
    pub fn output_vector(&self, alpha: FieldElem) -> Result<Vec<u64>> {
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        self.field.elem(alpha.0 as u64)?;
        let a = alpha.0 as u16;
        Ok(self
            .states
            .iter()
            .map(|s| s.iter().filter(|&&v| v == a).count() as u64)
            .collect())
    }

    /// The unit vector at the initial state.
    pub fn initial_vector(&self) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.states.len()];
        v[self.init] = BigUint::one();
        v
    }

    /// `Phi_a psi`.
    pub fn apply_digit(&self, a: usize, psi: &[BigUint]) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); psi.len()];
        for (col, entries) in self.phi[a].iter().enumerate() {
            let x = &psi[col];
            if x.is_zero() {
                continue;
            }
            for &(row, c) in entries {
                out[row as usize] += x * c;
            }
        }
        out
    }

    fn dot(u: &[u64], psi: &[BigUint]) -> BigUint {
        u.iter()
            .zip(psi)
            .filter(|(&w, _)| w != 0)
            .map(|(&w, x)| x * w)
            .sum()
    }

    /// Count of coefficients equal to `alpha` after consuming `digits`
    /// (least significant first).
    pub fn count_digits(&self, digits: &[u64], alpha: FieldElem) -> Result<BigUint> {
        let u = self.output_vector(alpha)?;
        let q = self.field.q();
        let mut psi = self.initial_vector();
        for &a in digits {
            if a >= q {
                return Err(Error::InvalidArgument(format!("digit {a} is not below q = {q}")));
            }
            psi = self.apply_digit(a as usize, &psi);
        }
        Ok(Self::dot(&u, &psi))
    }

    /// `N_alpha(n)` for the polynomial `g f^n`.
    pub fn count(&self, n: &BigUint, alpha: FieldElem) -> Result<BigUint> {
        let digits: Vec<u64> = if n.is_zero() {
            Vec::new()
        } else {
            n.to_radix_le(self.field.q() as u32).iter().map(|&d| d as u64).collect()
        };
        self.count_digits(&digits, alpha)
    }

    /// `N_alpha(d + d q + ... + d q^{m-1})` for `m = 0..terms`.
    pub fn repunit_counts(&self, alpha: FieldElem, terms: usize, base_digit: u64) -> Result<Vec<BigUint>> {
        if base_digit == 0 || base_digit >= self.field.q() {
            return Err(Error::InvalidArgument(format!(
                "base digit must lie in 1..{}",
                self.field.q() - 1
            )));
        }
        let u = self.output_vector(alpha)?;
        let mut psi = self.initial_vector();
        let mut out = Vec::with_capacity(terms);
        for m in 0..terms {
            if m > 0 {
                psi = self.apply_digit(base_digit as usize, &psi);
            }
            out.push(Self::dot(&u, &psi));
        }
        Ok(out)
    }

    /// JSON-friendly snapshot of states and matrices.
    pub fn dump(&self) -> AutomatonDump {
        AutomatonDump {
            field: format!("{:?}", self.field),
            poly: self.f.to_string(),
            prefix: self.prefix.to_string(),
            box_bounds: self.section_box.bounds.clone(),
            states: self
                .states
                .iter()
                .map(|s| s.iter().map(|&v| v as u32).collect())
                .collect(),
            init: self.init,
            phi: self
                .phi
                .iter()
                .map(|cols| {
                    let mut trip: Vec<[u64; 3]> = cols
                        .iter()
                        .enumerate()
                        .flat_map(|(c, e)| e.iter().map(move |&(r, v)| [r as u64, c as u64, v as u64]))
                        .collect();
                    trip.sort_unstable();
                    trip
                })
                .collect(),
        }
    }
}

/// Serializable form of a [`DigitAutomaton`]; `phi[a]` holds `[row, col, count]` triples.
#[derive(Clone, Debug, Serialize)]
pub struct AutomatonDump {
    pub field: String,
    pub poly: String,
    pub prefix: String,
    pub box_bounds: Vec<u64>,
    pub states: Vec<Vec<u32>>,
    pub init: usize,
    pub phi: Vec<Vec<[u64; 3]>>,
}

struct Builder<'a> {
    field: &'a FieldSpec,
    q: usize,
    k: usize,
    sbox: &'a SectionBox,
    cap: usize,
    /// Sparse powers `f^i` for digits `i`, as (offset in the extended box, coefficient).
    fpows: Vec<Vec<(usize, FieldElem)>>,
    ext: SectionBox,
    states: Vec<Pattern>,
    index: FxHashMap<Pattern, usize>,
    phi: Vec<Vec<Vec<(u32, u32)>>>,
}

impl<'a> Builder<'a> {
    fn new(field: &'a FieldSpec, f: &FieldPoly, sbox: &'a SectionBox, cap: usize) -> Result<Self> {
        let q = field.q() as usize;
        let k = f.nvars();
        let degs = f.var_degrees()?;
        let ext = SectionBox::new(
            sbox.bounds
                .iter()
                .zip(&degs)
                .map(|(&b, &d)| b + (q as u64 - 1) * d)
                .collect(),
        );
        let mut fpows = Vec::with_capacity(q);
        let mut pow = MultiPoly::one(field, k);
        for i in 0..q {
            if i > 0 {
                pow = pow.mul(f)?;
            }
            let mut terms: Vec<(usize, FieldElem)> = pow
                .terms()
                .map(|(m, c)| (ext.index(m.exps()).expect("power fits the extended box"), *c))
                .collect();
            terms.sort_unstable();
            fpows.push(terms);
        }
        Ok(Builder {
            field,
            q,
            k,
            sbox,
            cap,
            fpows,
            ext,
            states: Vec::new(),
            index: FxHashMap::default(),
            phi: vec![Vec::new(); q],
        })
    }

    fn intern(&mut self, pat: Pattern) -> Result<usize> {
        if let Some(&i) = self.index.get(&pat) {
            return Ok(i);
        }
        if self.states.len() >= self.cap {
            return Err(Error::StateCap(self.cap));
        }
        let i = self.states.len();
        self.states.push(pat.clone());
        self.index.insert(pat, i);
        for cols in &mut self.phi {
            cols.push(Vec::new());
        }
        Ok(i)
    }

    fn close(&mut self) -> Result<()> {
        let mut queue: VecDeque<usize> = (0..self.states.len()).collect();
        let mut buf = vec![FieldElem(0); self.ext.len()];
        let sections = self.q.pow(self.k as u32);
        let slen = self.sbox.len();
        let mut children = vec![0u16; sections * slen];
        while let Some(col) = queue.pop_front() {
            let pat = self.states[col].clone();
            let support: Vec<(usize, FieldElem)> = pat
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| {
                    let pt = self.sbox.point(i);
                    (self.ext.index(&pt).expect("box inside extended box"), FieldElem(v as u32))
                })
                .collect();
            for digit in 0..self.q {
                let mut touched = Vec::new();
                for &(base, gv) in &support {
                    for &(off, fv) in &self.fpows[digit] {
                        let idx = base + off;
                        if buf[idx].is_zero() {
                            touched.push(idx);
                        }
                        buf[idx] = self.field.add(buf[idx], self.field.mul(gv, fv));
                    }
                }
                children.iter_mut().for_each(|c| *c = 0);
                for &idx in &touched {
                    let v = buf[idx];
                    buf[idx] = FieldElem(0);
                    if v.is_zero() {
                        continue;
                    }
                    let eta = self.ext.point(idx);
                    let mut gamma = 0usize;
                    let mut gstride = 1usize;
                    let mut delta = Vec::with_capacity(self.k);
                    for &e in &eta {
                        gamma += (e as usize % self.q) * gstride;
                        gstride *= self.q;
                        delta.push(e / self.q as u64);
                    }
                    let d = self
                        .sbox
                        .index(&delta)
                        .expect("sections stay inside the box");
                    children[gamma * slen + d] = v.0 as u16;
                }
                let mut counts: FxHashMap<usize, u32> = FxHashMap::default();
                for gamma in 0..sections {
                    let child: Pattern = children[gamma * slen..(gamma + 1) * slen].into();
                    let before = self.states.len();
                    let row = self.intern(child)?;
                    if self.states.len() > before {
                        queue.push_back(row);
                    }
                    *counts.entry(row).or_insert(0) += 1;
                }
                let mut entries: Vec<(u32, u32)> = counts.into_iter().map(|(r, c)| (r as u32, c)).collect();
                entries.sort_unstable();
                self.phi[digit][col] = entries;
            }
        }
        Ok(())
    }
}

/// Parses an exponent given either in decimal or as `rep:m`, the base-q
/// repunit `1 + q + ... + q^{m-1}`.
pub fn parse_exponent(text: &str, q: u64) -> Result<BigUint> {
    let t = text.trim();
    if let Some(m) = t.strip_prefix("rep:") {
        let m: u32 = m
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad repunit length '{m}'")))?;
        let qb = BigUint::from(q);
        return Ok((qb.pow(m) - 1u32) / (qb - 1u32));
    }
    t.parse()
        .map_err(|_| Error::InvalidArgument(format!("bad exponent '{t}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse_poly;
    use crate::oracle::brute_power_censuses;

    fn auto(text: &str, k: usize, field: &FieldSpec) -> DigitAutomaton {
        let f = parse_poly(text, k, field).unwrap();
        DigitAutomaton::build(&f, &Budget::default()).unwrap()
    }

    #[test]
    fn worked_example() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = auto("1+x", 1, &f2);
        // only the patterns 10 and 00 are reachable
        assert_eq!(a.num_states(), 2);
        let one = FieldElem(1);
        assert_eq!(a.count(&BigUint::from(11u32), one).unwrap(), BigUint::from(8u32));
        // psi_2 for the digits 1, 1, 0 is [4, 4] on the patterns 00 and 10
        let mut psi = a.initial_vector();
        for d in [1, 1, 0] {
            psi = a.apply_digit(d, &psi);
        }
        let nonzero: Vec<(Vec<u32>, BigUint)> = a
            .dump()
            .states
            .into_iter()
            .zip(psi)
            .filter(|(_, x)| !x.is_zero())
            .collect();
        assert_eq!(
            nonzero,
            vec![(vec![1, 0], BigUint::from(4u32)), (vec![0, 0], BigUint::from(4u32))]
        );
        for sums in a.column_sums() {
            assert!(sums.iter().all(|&s| s == 2));
        }
    }

    #[test]
    fn constant_polynomial() {
        let f3 = FieldSpec::prime(3).unwrap();
        let a = auto("1", 1, &f3);
        assert_eq!(a.num_nonzero_states(), 1);
        for n in [0u32, 1, 5, 1000] {
            assert_eq!(a.count(&BigUint::from(n), FieldElem(1)).unwrap(), BigUint::one());
            assert_eq!(a.count(&BigUint::from(n), FieldElem(2)).unwrap(), BigUint::zero());
        }
    }

    #[test]
    fn repunits() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = auto("1+x", 1, &f2);
        let s = a.repunit_counts(FieldElem(1), 8, 1).unwrap();
        assert_eq!(s, (0..8).map(|m| BigUint::one() << m).collect::<Vec<_>>());
        let b = auto("1+x1+x2+x2^2", 2, &f2);
        let s = b.repunit_counts(FieldElem(1), 5, 1).unwrap();
        assert_eq!(s, [1u32, 4, 12, 40, 128].map(BigUint::from));
        let c = auto("1+x1+x2+x1*x2^2", 2, &f2);
        assert_eq!(c.count(&BigUint::from(7u32), FieldElem(1)).unwrap(), BigUint::from(46u32));
        assert!(c.repunit_counts(FieldElem(1), 3, 2).is_err());
    }

    #[test]
    fn matches_oracle_small() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let f = parse_poly("1 + [0,1]*x1 + x2", 2, &f4).unwrap();
        let a = DigitAutomaton::build(&f, &Budget::default()).unwrap();
        let censuses = brute_power_censuses(&f, 20, &Budget::default()).unwrap();
        for (n, c) in censuses.iter().enumerate() {
            for alpha in f4.nonzero_elements() {
                assert_eq!(a.count(&BigUint::from(n), alpha).unwrap(), BigUint::from(c.get(&alpha)));
            }
        }
    }

    #[test]
    fn prefix_counts() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f = parse_poly("2+x+x^2", 1, &f3).unwrap();
        let g = parse_poly("1+x^5", 1, &f3).unwrap();
        let a = DigitAutomaton::build_with_prefix(&f, &g, &Budget::default()).unwrap();
        for n in 0..30u64 {
            let direct = g.mul(&f.pow(n).unwrap()).unwrap().coeff_census();
            for alpha in [FieldElem(1), FieldElem(2)] {
                assert_eq!(a.count(&BigUint::from(n), alpha).unwrap(), BigUint::from(direct.get(&alpha)));
            }
        }
    }

    #[test]
    fn errors() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = auto("1+x", 1, &f2);
        assert_eq!(a.count(&BigUint::from(3u32), FieldElem(0)).unwrap_err(), Error::ZeroAlpha);
        let f = parse_poly("1+x1+x2+x3+x1*x2^2", 3, &f2).unwrap();
        let tiny = Budget { state_cap: 2, ..Budget::default() };
        assert_eq!(DigitAutomaton::build(&f, &tiny).unwrap_err(), Error::StateCap(2));
        assert_eq!(parse_exponent("rep:4", 3).unwrap(), BigUint::from(40u32));
        assert_eq!(parse_exponent("11", 2).unwrap(), BigUint::from(11u32));
        assert!(parse_exponent("x", 2).is_err());
    }
}
