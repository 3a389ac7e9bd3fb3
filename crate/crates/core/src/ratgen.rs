//! Rational generating functions of integer sequences: exact Berlekamp-Massey
//! over the rationals, series expansion and equality of rational functions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::automaton::DigitAutomaton;
use crate::error::{Error, Result};
use crate::ffield::FieldElem;

/// `a_n = c_1 a_{n-1} + ... + c_d a_{n-d}` for all `n >= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    pub coeffs: Vec<BigRational>,
    pub initial: Vec<BigInt>,
}

impl LinearRecurrence {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Whether the recurrence holds for every term of `seq` past the first `order`.
    pub fn fits(&self, seq: &[BigInt]) -> bool {
        recurrence_holds(&self.coeffs, seq)
    }

    /// Extend the initial terms to `terms` values. Errors if a value is not an integer.
    pub fn extend(&self, terms: usize) -> Result<Vec<BigInt>> {
        let mut out: Vec<BigInt> = self.initial.iter().take(terms).cloned().collect();
        while out.len() < terms {
            let n = out.len();
            let v: BigRational = self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(out[n - 1 - i].clone()))
                .sum();
            if !v.is_integer() {
                return Err(Error::Verification("recurrence produced a non-integer".into()));
            }
            out.push(v.to_integer());
        }
        Ok(out)
    }

    /// Coefficients as `"num/den"` strings (just `"num"` for integers).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_string).collect()
    }
}

pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn recurrence_holds(coeffs: &[BigRational], seq: &[BigInt]) -> bool {
    let d = coeffs.len();
    (d..seq.len()).all(|n| {
        let v: BigRational = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from_integer(seq[n - 1 - i].clone()))
            .sum();
        v == BigRational::from_integer(seq[n].clone())
    })
}

/// Shortest linear recurrence generating all of `seq` (Berlekamp-Massey over Q).
pub fn berlekamp_massey(seq: &[BigInt]) -> Vec<BigRational> {
    let s: Vec<BigRational> = seq.iter().cloned().map(BigRational::from_integer).collect();
    // connection polynomials C(z) = 1 + c_1 z + ... with a_n + Σ c_i a_{n-i} = 0
    let mut c: Vec<BigRational> = vec![BigRational::one()];
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last_disc = BigRational::one();
    for n in 0..s.len() {
        let mut disc = s[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            disc += &c[i] * &s[n - i];
        }
        if disc.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &disc / &last_disc;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] -= &factor * bi;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(l + 1, BigRational::zero());
    c[1..].iter().map(|x| -x).collect()
}

/// Minimal-order recurrence fitting every supplied term.
pub fn fit_recurrence(seq: &[BigInt], max_order: usize) -> Result<LinearRecurrence> {
    let need = 2 * max_order + 1;
    if seq.len() < need {
        return Err(Error::InsufficientTerms { need, got: seq.len() });
    }
    let coeffs = berlekamp_massey(seq);
    if coeffs.len() > max_order {
        return Err(Error::NoRecurrence(max_order));
    }
    debug_assert!(recurrence_holds(&coeffs, seq));
    Ok(LinearRecurrence { initial: seq[..coeffs.len()].to_vec(), coeffs })
}

/// Solves for a recurrence of exactly the given order by Gaussian elimination
/// on all available equations; `None` if the system is inconsistent.
pub fn recurrence_of_order(seq: &[BigInt], d: usize) -> Option<Vec<BigRational>> {
    if d == 0 {
        return seq.iter().all(Zero::is_zero).then(Vec::new);
    }
    let rows: Vec<Vec<BigRational>> = (d..seq.len())
        .map(|n| {
            let mut row: Vec<BigRational> = (1..=d)
                .map(|i| BigRational::from_integer(seq[n - i].clone()))
                .collect();
            row.push(BigRational::from_integer(seq[n].clone()));
            row
        })
        .collect();
    let sol = solve_least(rows, d)?;
    recurrence_holds(&sol, seq).then_some(sol)
}

/// Row-reduces an augmented system with `d` unknowns; returns one solution
/// (free variables set to zero) or `None` if inconsistent.
fn solve_least(mut rows: Vec<Vec<BigRational>>, d: usize) -> Option<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..d {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..=d {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[d].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); d];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = rows[i][d].clone();
    }
    Some(sol)
}

/// `numerator / denominator` with integer coefficients (constant term first),
/// no common content and a positive denominator constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

impl RationalGF {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self> {
        let mut num = trim(numerator);
        let mut den = trim(denominator);
        if den.is_empty() || den[0].is_zero() {
            return Err(Error::NonUnitDenominator);
        }
        let g = num
            .iter()
            .chain(den.iter())
            .fold(BigInt::zero(), |g, x| g.gcd(x));
        let g = if den[0].is_negative() { -g } else { g };
        for x in num.iter_mut().chain(den.iter_mut()) {
            *x = &*x / &g;
        }
        Ok(RationalGF { numerator: num, denominator: den })
    }

    pub fn from_ints(numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        Self::new(
            numerator.iter().map(|&x| BigInt::from(x)).collect(),
            denominator.iter().map(|&x| BigInt::from(x)).collect(),
        )
    }

    /// First `terms` Taylor coefficients; errors when a coefficient is not an integer.
    pub fn expand(&self, terms: usize) -> Result<Vec<BigInt>> {
        let d0 = &self.denominator[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(terms);
        for n in 0..terms {
            let mut v = self.numerator.get(n).cloned().unwrap_or_default();
            for (i, di) in self.denominator.iter().enumerate().skip(1) {
                if i > n {
                    break;
                }
                v -= di * &out[n - i];
            }
            let (quo, rem) = v.div_rem(d0);
            if !rem.is_zero() {
                return Err(Error::NonUnitDenominator);
            }
            out.push(quo);
        }
        Ok(out)
    }

    /// Equality as rational functions (cross-multiplication).
    pub fn same_function(&self, other: &Self) -> bool {
        poly_mul(&self.numerator, &other.denominator) == poly_mul(&other.numerator, &self.denominator)
    }

    pub fn numerator_strings(&self) -> Vec<String> {
        self.numerator.iter().map(BigInt::to_string).collect()
    }

    pub fn denominator_strings(&self) -> Vec<String> {
        self.denominator.iter().map(BigInt::to_string).collect()
    }

    pub fn to_json(&self) -> GenFunJson {
        GenFunJson {
            numerator: self.numerator_strings(),
            denominator: self.denominator_strings(),
            text: self.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenFunJson {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub text: String,
}

fn fmt_poly(c: &[BigInt]) -> String {
    let mut s = String::new();
    for (i, x) in c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let neg = x.is_negative();
        let a = x.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mag = if a.is_one() && i > 0 { String::new() } else { a.to_string() };
        let var = match i {
            0 => String::new(),
            1 => "z".into(),
            _ => format!("z^{i}"),
        };
        if !mag.is_empty() && !var.is_empty() {
            s.push_str(&format!("{mag}*{var}"));
        } else {
            s.push_str(&mag);
            s.push_str(&var);
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", fmt_poly(&self.numerator), fmt_poly(&self.denominator))
    }
}

/// Generating function of a sequence satisfying `rec`.
pub fn seq_to_genfun(seq: &[BigInt], rec: &LinearRecurrence) -> Result<RationalGF> {
    let d = rec.order();
    if seq.len() < d {
        return Err(Error::InsufficientTerms { need: d, got: seq.len() });
    }
    let lcm = rec
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut den = vec![lcm.clone()];
    for c in &rec.coeffs {
        den.push(-(c * BigRational::from_integer(lcm.clone())).to_integer());
    }
    let mut num = vec![BigInt::zero(); d];
    for (n, slot) in num.iter_mut().enumerate() {
        for (i, di) in den.iter().enumerate().take(n + 1) {
            *slot += di * &seq[n - i];
        }
    }
    RationalGF::new(num, den)
}

/// Fits a minimal recurrence of order at most `max_order` and converts it.
pub fn fit_genfun(seq: &[BigInt], max_order: usize) -> Result<(RationalGF, LinearRecurrence)> {
    let rec = fit_recurrence(seq, max_order)?;
    let gf = seq_to_genfun(seq, &rec)?;
    Ok((gf, rec))
}

pub fn genfun_expand(g: &RationalGF, terms: usize) -> Result<Vec<BigInt>> {
    g.expand(terms)
}

/// Whether `a` and `b` are the same rational function; `terms` series
/// coefficients are also compared and must agree with the cross-multiplication
/// verdict.
pub fn genfun_equal_as_series(a: &RationalGF, b: &RationalGF, terms: usize) -> bool {
    let cross = a.same_function(b);
    if let (Ok(x), Ok(y)) = (a.expand(terms), b.expand(terms)) {
        debug_assert!(!cross || x == y);
        if x != y {
            return false;
        }
    }
    cross
}

/// Whether the operator `Σ op_i E^i` (shift `E a_n = a_{n+1}`) annihilates `seq`.
pub fn annihilates(op: &[i64], seq: &[BigInt]) -> bool {
    let d = op.len().saturating_sub(1);
    (0..seq.len().saturating_sub(d)).all(|n| {
        op.iter()
            .enumerate()
            .map(|(i, &c)| BigInt::from(c) * &seq[n + i])
            .sum::<BigInt>()
            .is_zero()
    })
}

/// Result of fitting the repunit sequence of an automaton.
#[derive(Clone, Debug)]
pub struct RepunitFit {
    pub genfun: RationalGF,
    pub recurrence: LinearRecurrence,
    /// Terms used for fitting followed by the held-out check terms.
    pub terms: Vec<BigInt>,
}

/// Extra terms checked beyond the provably sufficient prefix.
pub const HELD_OUT: usize = 10;

/// Rational generating function of `m -> N_alpha(d + d q + ... + d q^{m-1})`.
///
/// The sequence is `u Phi_d^m v`, so its linear complexity is at most the
/// number of states `S`; `2S + 1` terms determine it, and `HELD_OUT` more are
/// checked against the fitted recurrence.
pub fn repunit_genfun(a: &DigitAutomaton, alpha: FieldElem, digit: u64) -> Result<RepunitFit> {
    let s = a.num_states();
    let fit_len = 2 * s + 1;
    let counts = a.repunit_counts(alpha, fit_len + HELD_OUT, digit)?;
    let terms: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    let (genfun, recurrence) = fit_genfun(&terms[..fit_len], s)?;
    if genfun.expand(terms.len())? != terms {
        return Err(Error::Verification("held-out repunit terms disagree with the fitted recurrence".into()));
    }
    Ok(RepunitFit { genfun, recurrence, terms })
}

/// Parses a comma-separated list of integers.
pub fn parse_seq(text: &str) -> Result<Vec<BigInt>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("bad sequence term '{}'", t.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn fits_examples() {
        let fib = ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34]);
        assert_eq!(fit_recurrence(&fib, 4).unwrap().coeffs, rats(&[1, 1]));
        let s = ints(&[1, 3, 8, 21, 55, 144, 377]);
        assert_eq!(fit_recurrence(&s, 3).unwrap().coeffs, rats(&[3, -1]));
        let ones = ints(&[1; 7]);
        assert_eq!(fit_recurrence(&ones, 3).unwrap().coeffs, rats(&[1]));
        assert_eq!(
            fit_recurrence(&ones, 4).unwrap_err(),
            Error::InsufficientTerms { need: 9, got: 7 }
        );
        let pow2 = ints(&[1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2049, 4096]);
        assert_eq!(fit_recurrence(&pow2, 6).unwrap_err(), Error::NoRecurrence(6));
    }

    #[test]
    fn non_integer_recurrence() {
        // a_n = (a_{n-1} + a_{n-2}) / 2
        let seq = ints(&[0, 1024, 512, 768, 640, 704, 672, 688, 680]);
        let rec = fit_recurrence(&seq, 4).unwrap();
        assert_eq!(rec.order(), 2);
        let gf = seq_to_genfun(&seq, &rec).unwrap();
        assert_eq!(gf.denominator, ints(&[2, -1, -1]));
        assert_eq!(gf.expand(9).unwrap(), seq);
    }

    #[test]
    fn genfun_examples() {
        let fib = ints(&[0, 1, 1, 2, 3, 5, 8, 13, 21]);
        let (gf, _) = fit_genfun(&fib, 4).unwrap();
        assert_eq!(gf, RationalGF::from_ints(&[0, 1], &[1, -1, -1]).unwrap());
        assert_eq!(gf.to_string(), "(z)/(1 - z - z^2)");

        let g = RationalGF::from_ints(&[1, 1], &[1, -2, -1]).unwrap();
        assert_eq!(g.expand(5).unwrap(), ints(&[1, 3, 7, 17, 41]));
        let h = RationalGF::from_ints(&[1, 1, 1], &[1, -2, -1, -1]).unwrap();
        assert_eq!(h.expand(4).unwrap(), ints(&[1, 3, 8, 20]));
        let ones = RationalGF::from_ints(&[1], &[1, -1]).unwrap();
        assert_eq!(ones.expand(6).unwrap(), ints(&[1; 6]));
    }

    #[test]
    fn series_equality() {
        let printed = RationalGF::from_ints(&[1, 0, -1], &[1, -3, 1, 1]).unwrap();
        let minimal = RationalGF::from_ints(&[1, 1], &[1, -2, -1]).unwrap();
        assert!(genfun_equal_as_series(&printed, &minimal, 12));
        let a = RationalGF::from_ints(&[1], &[1, -1]).unwrap();
        let b = RationalGF::from_ints(&[1, 1], &[1, 0, -1]).unwrap();
        assert!(genfun_equal_as_series(&a, &b, 10));
        let c = RationalGF::from_ints(&[1], &[1, -2]).unwrap();
        assert!(!genfun_equal_as_series(&a, &c, 10));
    }

    #[test]
    fn minimality_against_linear_algebra() {
        let s = ints(&[1, 4, 12, 40, 128, 416, 1344, 4352, 14080, 45568]);
        let rec = fit_recurrence(&s, 4).unwrap();
        assert_eq!(rec.order(), 2);
        assert!(recurrence_of_order(&s, 1).is_none());
        assert_eq!(recurrence_of_order(&s, 2).unwrap(), rec.coeffs);
    }

    #[test]
    fn operator_annihilation() {
        let s = ints(&[1, 3, 8, 21, 55, 144]);
        assert!(annihilates(&[1, -3, 1], &s));
        assert!(!annihilates(&[1, -2, 1], &s));
        assert_eq!(parse_seq("1, 3,-8").unwrap(), ints(&[1, 3, -8]));
        assert!(parse_seq("1,a").is_err());
    }
}
