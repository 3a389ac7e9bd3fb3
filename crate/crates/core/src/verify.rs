//! Replays the worked examples as acceptance criteria 1 to 9.
//!
//! Every check compares exact values. Checks whose expected value is a known
//! misprint are listed in [`KNOWN_ERRATA`]; they are still run and still
//! reported as failures.

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{catalan, fibonacci};
use crate::automaton::DigitAutomaton;
use crate::closed_forms::{
    averaging_identity, binomial_row_census, lambda_check, omega_runs, prop23_count, RunDecomposition,
};
use crate::error::{Error, Result};
use crate::ffield::{FieldElem, FieldSpec};
use crate::lattice::{
    cor421_bridge, cor422_closed, cor422_direct, enum_draconian, ex433a_formula, ex433a_partition,
    ex433a_polytope, ex433b_formula, ex433b_partition, ex433c_partition, ex433c_polytope_sum, ex433c_r,
    noncrossing_identity, omega_count, ps_lattice_points, shifted_path_count, PathMode, PsMode,
    DEFAULT_DRACONIAN_CAP,
};
use crate::mpoly::{parse_poly, FieldPoly, Integers, MultiPoly};
use crate::oracle::{brute_power_censuses, brute_product, brute_product_or_one};
use crate::qpow::{count_qpow, fit_qpow_profile, periodic_eq, primitive_u_check, ratios};
use crate::ratgen::{annihilates, genfun_equal_as_series, rational_string, repunit_genfun, RationalGF};
use crate::traveling::{
    b1_genfun, b2_genfun, b_factors, charpoly, connectivity_matrix, cor33_count, d0_count, d_factors,
    ex514_template, g_closed, g_factors, h_factors, h_seq, j_count, j_poly, nu_table, sign_census,
    theta_charpoly, traveling_factors, traveling_seq, v_factors, v_genfun,
};
use crate::upoly::UniPoly;
use crate::Budget;

/// Highest exponent compared against direct expansion in criterion 1.
pub const CORPUS_MAX_N: u64 = 64;
/// Randomized leading-zero cases in criterion 9.
pub const LEADING_ZERO_CASES: usize = 50;
const SEED: u64 = 0x5eed_2024;

/// Checks whose expected value is a misprint; `(criterion, check name)`.
pub const KNOWN_ERRATA: &[(u32, &str)] = &[
    (3, "repunit GF of 1+x1^2+x2^2+x1*x2^3 equals (1-2z+4z^2)/(1-6z+12z^2-12z^3)"),
    (4, "c=3, g=1+x+x^2+x^3+x^4: u = 2 - (-1)^m/4"),
    (4, "c=3, g=1+x+x^2+x^3+x^4+x^5: law"),
    (5, "Lambda(z) = (1+2z) Lambda(z^2) through z^128"),
];

pub fn is_known_erratum(criterion: u32, name: &str) -> bool {
    KNOWN_ERRATA.iter().any(|&(c, n)| c == criterion && n == name)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Minimal,
    Full,
}

impl Suite {
    pub fn criteria(self) -> Vec<u32> {
        match self {
            Suite::Minimal => vec![2, 6, 7, 8, 9],
            Suite::Full => (1..=9).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub known_erratum: bool,
    pub detail: String,
}

/// Values computed for a comparison that is reported without an assertion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub name: String,
    pub rows: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub tables: Vec<Table>,
}

impl CriterionReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Failures that are not registered errata.
    pub fn unexpected_failures(&self) -> impl Iterator<Item = &Check> {
        self.failures().filter(|c| !c.known_erratum)
    }

    /// Registered errata that no longer fail.
    pub fn stale_errata(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.passed && c.known_erratum)
    }

    pub fn status_line(&self) -> String {
        let total = self.checks.len();
        let failed = self.failures().count();
        let errata = self.failures().filter(|c| c.known_erratum).count();
        format!(
            "{} criterion {}: {} ({}/{} checks passed, {} known errata)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            total - failed,
            total,
            errata
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

struct Checks {
    id: u32,
    list: Vec<Check>,
    tables: Vec<Table>,
}

impl Checks {
    fn new(id: u32) -> Self {
        Checks { id, list: Vec::new(), tables: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, outcome: Result<(bool, String)>) {
        let name = name.into();
        let (passed, detail) = match outcome {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        let known_erratum = is_known_erratum(self.id, &name);
        self.list.push(Check { name, passed, known_erratum, detail });
    }

    /// Passes when `got == expected`.
    fn equal<T: PartialEq + Debug>(&mut self, name: impl Into<String>, outcome: Result<(T, T)>) {
        self.push(
            name,
            outcome.map(|(got, want)| {
                if got == want {
                    (true, format!("{got:?}"))
                } else {
                    (false, format!("got {got:?}, expected {want:?}"))
                }
            }),
        );
    }

    /// Passes when every case agrees; the detail names the first disagreement.
    fn all<I, T>(&mut self, name: impl Into<String>, cases: I)
    where
        I: IntoIterator<Item = Result<(String, T, T)>>,
        T: PartialEq + Debug,
    {
        let mut count = 0usize;
        let outcome = (|| {
            for case in cases {
                let (label, got, want) = case?;
                count += 1;
                if got != want {
                    return Ok((false, format!("{label}: got {got:?}, expected {want:?}")));
                }
            }
            Ok((true, format!("{count} cases agree")))
        })();
        self.push(name, outcome);
    }

    fn table(&mut self, name: &str, rows: serde_json::Value) {
        self.tables.push(Table { name: name.into(), rows });
    }

    fn finish(self, title: &str) -> CriterionReport {
        let passed = self.list.iter().all(|c| c.passed);
        CriterionReport { id: self.id, title: title.into(), passed, checks: self.list, tables: self.tables }
    }
}

fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    std::thread::scope(|s| {
        let handles: Vec<_> = items.iter().map(|x| s.spawn(|| f(x))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    })
}

fn rat_strings(v: &[BigRational]) -> Vec<String> {
    v.iter().map(rational_string).collect()
}

/// Runs one criterion. Computation errors become failed checks.
pub fn run_criterion(id: u32, budget: &Budget) -> Result<CriterionReport> {
    Ok(match id {
        1 => criterion1(budget),
        2 => criterion2(budget),
        3 => criterion3(budget),
        4 => criterion4(budget),
        5 => criterion5(budget),
        6 => criterion6(budget),
        7 => criterion7(budget),
        8 => criterion8(budget),
        9 => criterion9(budget),
        _ => return Err(Error::InvalidArgument(format!("no criterion {id}; expected 1..=9"))),
    })
}

/// Runs the criteria of `suite` in parallel, in criterion order.
pub fn run_suite(suite: Suite, budget: &Budget) -> SuiteReport {
    let ids = suite.criteria();
    let criteria: Vec<CriterionReport> =
        par_map(&ids, |&id| run_criterion(id, budget).expect("criterion ids come from the suite"));
    let passed = criteria.iter().all(|c| c.passed);
    SuiteReport { suite, passed, criteria }
}

/// A polynomial of the test corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub poly: FieldPoly,
}

fn vandermonde(k: usize, plus_one: bool) -> Result<FieldPoly> {
    let f2 = FieldSpec::prime(2)?;
    let mut acc = MultiPoly::one(&f2, k);
    for i in 1..=k {
        for j in i + 1..=k {
            acc = acc.mul(&MultiPoly::linear_sum(&f2, k, [i, j])?)?;
        }
    }
    if plus_one {
        acc = acc.add(&MultiPoly::one(&f2, k))?;
    }
    Ok(acc)
}

/// Worked-example polynomials over F_2, two over F_3 and two over F_4.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let f2 = FieldSpec::prime(2)?;
    let f3 = FieldSpec::prime(3)?;
    let f4 = FieldSpec::new(2, 2, None)?;
    let texts: [(&FieldSpec, &str); 28] = [
        (&f2, "1+x"),
        (&f2, "1+x+x^2"),
        (&f2, "1+x1+x2+x1*x2^2"),
        (&f2, "1+x1+x2^2+x1*x2"),
        (&f2, "1+x1+x2+x3+x1*x2^2+x1*x3^2"),
        (&f2, "1+x1+x2+x3+x1*x2^2+x2*x3^2"),
        (&f2, "1+x1+x2+x3+x1*x2^2"),
        (&f2, "1+x1+x2+x3+x1*x2+x1*x3^2"),
        (&f2, "1+x1+x2^2+x1*x2^3"),
        (&f2, "1+x1+x2+x1^2*x2^2"),
        (&f2, "1+x1^2+x2^2+x1*x2^3"),
        (&f2, "1+x1+x2+x2^2"),
        (&f2, "1+x1+x2+x2^3"),
        (&f2, "1+x1+x2+x2^4"),
        (&f2, "1+x1+x2+x3+x1*x2^2+x1*x3^2+x2*x3^2"),
        (&f2, "1+x1+x2+x3+x1*x2^2+x2*x1^2"),
        (&f2, "1+x+x^2+x^3+x^4"),
        (&f2, "1+x^2+x^5"),
        (&f2, "1+x+x^3+x^4+x^5"),
        (&f2, "1+x+x^2+x^3+x^4+x^5"),
        (&f2, "1+x^3+x^4"),
        (&f2, "1+x^4+x^5"),
        (&f3, "2+x+x^2"),
        (&f3, "2+x^2+x^3"),
        (&f3, "1+x+x^3"),
        (&f4, "1+[0,1]*x1+x2"),
        (&f4, "[0,1]+x+[1,1]*x^2"),
        (&f2, "x1+x2"),
    ];
    let mut out: Vec<CorpusEntry> = texts
        .iter()
        .map(|&(field, text)| {
            let k = crate::mpoly::infer_nvars(text);
            Ok(CorpusEntry { name: format!("{text} over F_{}", field.q()), poly: parse_poly(text, k, field)? })
        })
        .collect::<Result<_>>()?;
    out.push(CorpusEntry {
        name: "(1+x^2+x^5)^3 over F_2".into(),
        poly: parse_poly("1+x^2+x^5", 1, &f2)?.pow(3)?,
    });
    out.push(CorpusEntry { name: "1+x1+x2 over F_2".into(), poly: vandermonde(2, true)? });
    for k in [3usize, 4] {
        out.push(CorpusEntry { name: format!("V({k}) over F_2"), poly: vandermonde(k, false)? });
        out.push(CorpusEntry { name: format!("1+V({k}) over F_2"), poly: vandermonde(k, true)? });
    }
    Ok(out)
}

fn criterion1(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(1);
    let entries = match corpus() {
        Ok(e) => e,
        Err(e) => {
            checks.push("corpus", Err(e));
            return checks.finish("automaton counts equal direct expansion");
        }
    };
    checks.push("corpus size is at least 12", Ok((entries.len() >= 12, format!("{} polynomials", entries.len()))));
    let results = par_map(&entries, |entry| -> Result<(bool, String)> {
        let a = DigitAutomaton::build(&entry.poly, budget)?;
        let censuses = brute_power_censuses(&entry.poly, CORPUS_MAX_N, budget)?;
        for (n, census) in censuses.iter().enumerate() {
            for alpha in entry.poly.ring().nonzero_elements() {
                let got = a.count(&BigUint::from(n), alpha)?;
                let want = BigUint::from(census.get(&alpha));
                if got != want {
                    return Ok((false, format!("n={n} alpha={}: automaton {got}, expansion {want}", alpha.0)));
                }
            }
        }
        Ok((true, format!("{} states", a.num_states())))
    });
    for (entry, r) in entries.iter().zip(results) {
        checks.push(format!("{}: n <= {CORPUS_MAX_N}, every nonzero alpha", entry.name), r);
    }
    checks.finish("automaton counts equal direct expansion")
}

fn criterion2(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(2);
    let outcome = (|| {
        let f2 = FieldSpec::prime(2)?;
        let a = DigitAutomaton::build(&parse_poly("1+x", 1, &f2)?, budget)?;
        let mut cases = Vec::new();
        for m in 0..=30u32 {
            let digits = vec![1u64; m as usize];
            cases.push((format!("m={m}"), a.count_digits(&digits, f2.one())?, BigUint::one() << m));
        }
        Ok(cases)
    })();
    match outcome {
        Ok(cases) => checks.all("N((1+x)^(2^m-1)) = 2^m for m <= 30", cases.into_iter().map(Ok)),
        Err(e) => checks.push("N((1+x)^(2^m-1)) = 2^m for m <= 30", Err(e)),
    }
    checks.finish("odd binomial coefficients of (1+x)^(2^m-1)")
}

fn repunit_fit(text: &str, budget: &Budget) -> Result<crate::ratgen::RepunitFit> {
    let f2 = FieldSpec::prime(2)?;
    let k = crate::mpoly::infer_nvars(text);
    let a = DigitAutomaton::build(&parse_poly(text, k, &f2)?, budget)?;
    repunit_genfun(&a, f2.one(), 1)
}

fn vandermonde_terms(k: usize, plus_one: bool, terms: usize, budget: &Budget) -> Result<Vec<BigInt>> {
    let f2 = FieldSpec::prime(2)?;
    let a = DigitAutomaton::build(&vandermonde(k, plus_one)?, budget)?;
    Ok(a.repunit_counts(f2.one(), terms, 1)?.into_iter().map(BigInt::from).collect())
}

fn series_terms(a: &RationalGF, b: &RationalGF) -> usize {
    let order = |g: &RationalGF| g.numerator.len().max(g.denominator.len());
    2 * order(a).max(order(b)) + 10
}

fn criterion3(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(3);
    let printed: [(&str, &[i64], &[i64], &str); 11] = [
        ("1+x1+x2+x1*x2^2", &[1, -1], &[1, -5, 6], "2*3^n - 2^n"),
        ("1+x1+x2^2+x1*x2", &[1, -1], &[1, -5, 6], "2*3^n - 2^n"),
        ("1+x1+x2+x3+x1*x2^2+x1*x3^2", &[1, -1], &[1, -7, 12], "3*4^n - 2*3^n"),
        ("1+x1+x2+x3+x1*x2^2+x2*x3^2", &[1, -1], &[1, -7, 10], "(4*5^n - 2^n)/3"),
        ("1+x1^2+x2^2+x1*x2^3", &[1, -2, 4], &[1, -6, 12, -12], "(1-2z+4z^2)/(1-6z+12z^2-12z^3)"),
        ("1+x1+x2+x2^2", &[1, 2], &[1, -2, -4], "(1+2z)/(1-2z-4z^2)"),
        ("1+x1+x2+x2^3", &[1, 1, 0, -2], &[1, -3, -2, 2, 4], "(1+z-2z^3)/(1-3z-2z^2+2z^3+4z^4)"),
        (
            "1+x1+x2+x2^4",
            &[1, 1, 4, 2, -4],
            &[1, -3, 0, -2, -8, 8],
            "(1+z+4z^2+2z^3-4z^4)/(1-3z-2z^3-8z^4+8z^5)",
        ),
        ("1+x1+x2+x3+x1*x2^2+x1*x3^2+x2*x3^2", &[1, -2, 1], &[1, -9, 23, -19], "(1-z)^2/(1-9z+23z^2-19z^3)"),
        (
            "1+x1+x2+x3+x1*x2^2+x2*x1^2",
            &[1, -1, 2, -4],
            &[1, -7, 12, -12, 8],
            "(1-z+2z^2-4z^3)/(1-7z+12z^2-12z^3+8z^4)",
        ),
        ("1+x1+x2^2+x1*x2^3", &[1, -2, 1], &[1, -6, 9, -2], "(c^(n+1) + cbar^(n+1) - 2^n)/3, c = 2+sqrt(3)"),
    ];
    let fits = par_map(&printed, |&(text, ..)| repunit_fit(text, budget));
    for (&(text, num, den, label), fit) in printed.iter().zip(fits) {
        checks.push(
            format!("repunit GF of {text} equals {label}"),
            fit.and_then(|fit| {
                let want = RationalGF::from_ints(num, den)?;
                let terms = series_terms(&fit.genfun, &want);
                let ok = genfun_equal_as_series(&fit.genfun, &want, terms);
                Ok((ok, format!("fitted {} over {terms} terms", fit.genfun)))
            }),
        );
    }

    let operators: [(&str, &[i64], &str); 3] = [
        ("1+x1+x2+x3+x1*x2^2", &[7, -6, 1], "E^2-6E+7"),
        ("1+x1+x2+x3+x1*x2+x1*x3^2", &[8, -7, 1], "E^2-7E+8"),
        ("1+x1+x2+x1^2*x2^2", &[-4, -2, 6, -5, 1], "E^4-5E^3+6E^2-2E-4"),
    ];
    let fits = par_map(&operators, |&(text, ..)| repunit_fit(text, budget));
    for (&(text, op, label), fit) in operators.iter().zip(fits) {
        checks.push(
            format!("{label} annihilates the repunit counts of {text}"),
            fit.and_then(|fit| {
                let terms = 2 * op.len().max(fit.recurrence.order()) + 10;
                let seq = fit.genfun.expand(terms.max(fit.terms.len()))?;
                let exact = seq[..fit.terms.len()] == fit.terms[..];
                Ok((exact && annihilates(op, &seq), format!("fitted order {}, {terms} terms", fit.recurrence.order())))
            }),
        );
    }

    type Closed = fn(usize) -> BigInt;
    let closed: [(usize, bool, &str, Closed); 4] = [
        (2, false, "N(V(2,n)) = 2^n", |n| num_traits::pow(BigInt::from(2), n)),
        (2, true, "N(V'(2,n)) = 3^n", |n| num_traits::pow(BigInt::from(3), n)),
        (3, false, "N(V(3,n)) = 6*4^(n-1) for n >= 1", |n| {
            BigInt::from(6) * num_traits::pow(BigInt::from(4), n - 1)
        }),
        (4, false, "N(V(4,n)) = 5*8^n - 8*2^n for n >= 1", |n| {
            BigInt::from(5) * num_traits::pow(BigInt::from(8), n) - BigInt::from(8) * num_traits::pow(BigInt::from(2), n)
        }),
    ];
    let seqs = par_map(&closed, |&(k, plus, ..)| vandermonde_terms(k, plus, 2 * 4 + 11, budget));
    for (&(k, _, label, f), seq) in closed.iter().zip(seqs) {
        let start = if k >= 3 { 1 } else { 0 };
        match seq {
            Ok(seq) => {
                checks.all(label, (start..seq.len()).map(|n| Ok((format!("n={n}"), seq[n].clone(), f(n)))));
                if start == 1 {
                    checks.equal(format!("N(V({k},0)) = 1"), Ok((seq[0].clone(), BigInt::one())));
                }
            }
            Err(e) => checks.push(label, Err(e)),
        }
    }
    checks.push(
        "rho^2-5rho-2 annihilates N(V'(3,n))",
        vandermonde_terms(3, true, 2 * 2 + 10, budget).map(|seq| {
            let ok = annihilates(&[-2, -5, 1], &seq);
            (ok, format!("first terms {}", seq.iter().take(5).map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        }),
    );
    checks.finish("repunit generating functions and recurrences")
}

/// `u(m mod |u|) q^m + v(m mod |v|)`.
struct Law {
    u: Vec<BigRational>,
    v: Vec<BigRational>,
}

impl Law {
    fn value(&self, q: u64, m: u32) -> BigRational {
        let qm = BigRational::from_integer(num_traits::pow(BigInt::from(q), m as usize));
        &self.u[m as usize % self.u.len()] * qm + &self.v[m as usize % self.v.len()]
    }
}

struct QCase {
    name: String,
    field: u64,
    g: Vec<i64>,
    power: u32,
    c: u64,
    alpha: u32,
    start: u32,
    law: Law,
}

fn qcase(name: &str, field: u64, g: &[i64], c: u64, alpha: u32, start: u32, law: Law) -> QCase {
    QCase { name: name.into(), field, g: g.to_vec(), power: 1, c, alpha, start, law }
}

fn qpoly(case: &QCase) -> Result<UniPoly> {
    let f = FieldSpec::prime(case.field)?;
    Ok(UniPoly::from_ints(&f, &case.g).pow(case.power as u64))
}

/// Fitted profile agrees with the printed law, and the law with direct counts.
fn qcase_outcome(case: &QCase, budget: &Budget) -> Result<(bool, String)> {
    let g = qpoly(case)?;
    let alpha = FieldElem(case.alpha);
    let prof = fit_qpow_profile(&g, case.c, alpha, budget)?;
    let span = (prof.d as usize).max(case.law.u.len()).max(case.law.v.len()) as u32;
    let degree = g.degree().unwrap_or(0) as u128 * case.c as u128;
    let mut top = case.start + 2 * span + 1;
    while top > case.start + span && (case.field as u128).pow(top) * degree > 1 << 24 {
        top -= 1;
    }
    for m in case.start..=top {
        let truth = BigRational::from_integer(BigInt::from(count_qpow(&g, case.c, alpha, m, budget)?));
        let law = case.law.value(case.field, m);
        if truth != law {
            return Ok((
                false,
                format!(
                    "m={m}: direct count {}, law {}; fitted u={:?} v={:?}",
                    rational_string(&truth),
                    rational_string(&law),
                    rat_strings(&prof.u),
                    rat_strings(&prof.v)
                ),
            ));
        }
    }
    let ok = periodic_eq(&prof.u, &case.law.u) && periodic_eq(&prof.v, &case.law.v);
    Ok((
        ok,
        format!(
            "direct counts agree for m={}..={top}; fitted u={:?} v={:?} from m >= {}",
            case.start,
            rat_strings(&prof.u),
            rat_strings(&prof.v),
            prof.l
        ),
    ))
}

fn criterion4(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(4);
    let law = |u: &[i64], ud: i64, v: &[i64], vd: i64| Law { u: ratios(u, ud), v: ratios(v, vd) };
    let mut cases = vec![
        qcase("c=1, g=1+x+x^2+x^3+x^4", 2, &[1, 1, 1, 1, 1], 1, 1, 0, law(&[8, 12], 5, &[-3, 1, 3, -1], 5)),
        qcase("c=1, g=1+x^2+x^5", 2, &[1, 0, 1, 0, 0, 1], 1, 1, 0, law(&[80], 31, &[-49, -67, -41, 11, -9], 31)),
        qcase("c=1, g=1+x+x^3+x^4+x^5", 2, &[1, 1, 0, 1, 1, 1], 1, 1, 0, law(&[80], 31, &[-49, -5, -41, 11, -9], 31)),
        QCase {
            power: 3,
            ..qcase(
                "c=1, g=(1+x^2+x^5)^3, m >= 2",
                2,
                &[1, 0, 1, 0, 0, 1],
                1,
                1,
                2,
                law(&[168], 31, &[297, -243, -393, -507, -177], 31),
            )
        },
        qcase("c=3, g=1+x^2+x^5", 2, &[1, 0, 1, 0, 0, 1], 3, 1, 2, law(&[60], 31, &[33, -27, -147, -201, -123], 31)),
        qcase(
            "c=3, g=1+x+x^2+x^3+x^4+x^5: law",
            2,
            &[1, 1, 1, 1, 1, 1],
            3,
            1,
            2,
            law(&[60], 31, &[-153, 35, -85, -77, -61], 31),
        ),
        qcase(
            "c=3, g=1+x+x^3+x^4+x^5 reproduces the third c=3 law",
            2,
            &[1, 1, 0, 1, 1, 1],
            3,
            1,
            2,
            law(&[60], 31, &[-153, 35, -85, -77, -61], 31),
        ),
        qcase("F_3, g=2+x+x^2, alpha=1", 3, &[2, 1, 1], 1, 1, 0, law(&[3], 4, &[1, 3], 4)),
        qcase("F_3, g=2+x+x^2, alpha=2", 3, &[2, 1, 1], 1, 2, 0, law(&[3], 4, &[-3, -1], 4)),
        qcase("F_3, g=2+x^2+x^3, alpha=1", 3, &[2, 0, 1, 1], 1, 1, 0, law(&[18], 13, &[-5, 11, 7], 13)),
        qcase("F_3, g=2+x^2+x^3, alpha=2", 3, &[2, 0, 1, 1], 1, 2, 0, law(&[9], 13, &[-9, -14, -3], 13)),
    ];
    let outcomes = par_map(&cases, |case| qcase_outcome(case, budget));
    for (case, outcome) in cases.iter().zip(outcomes) {
        checks.push(case.name.clone(), outcome);
    }

    // (d): the law starts at m = 2; the first two values are separate.
    let d = cases.remove(3);
    checks.equal(
        "c=1, g=(1+x^2+x^5)^3: N_1(0) = 1 and N_1(1) = 9",
        qpoly(&d).and_then(|g| {
            let one = FieldElem(1);
            Ok(((count_qpow(&g, 1, one, 0, budget)?, count_qpow(&g, 1, one, 1, budget)?), (1, 9)))
        }),
    );

    // The first c = 3 case is split: its v table is right, its u term is not.
    let first = qcase("", 2, &[1, 1, 1, 1, 1], 3, 1, 2, law(&[7, 9], 4, &[11, 3, -11, -3], 5));
    let fitted = qpoly(&first).and_then(|g| fit_qpow_profile(&g, 3, FieldElem(1), budget));
    match fitted {
        Ok(prof) => {
            let truth_ok = (2..=12u32).try_fold(true, |acc, m| -> Result<bool> {
                let g = qpoly(&first)?;
                let n = count_qpow(&g, 3, FieldElem(1), m, budget)?;
                Ok(acc && BigRational::from_integer(BigInt::from(n)) == prof.predict(m))
            });
            checks.push(
                "c=3, g=1+x+x^2+x^3+x^4: fitted law matches direct counts for m=2..=12",
                truth_ok.map(|ok| (ok, format!("u={:?} v={:?}", rat_strings(&prof.u), rat_strings(&prof.v)))),
            );
            checks.push(
                "c=3, g=1+x+x^2+x^3+x^4: v = [11,3,-11,-3]/5",
                Ok((periodic_eq(&prof.v, &first.law.v), format!("fitted v={:?}", rat_strings(&prof.v)))),
            );
            checks.push(
                "c=3, g=1+x+x^2+x^3+x^4: u = 2 - (-1)^m/4",
                Ok((
                    periodic_eq(&prof.u, &first.law.u),
                    format!("fitted u={:?}, printed {:?}", rat_strings(&prof.u), rat_strings(&first.law.u)),
                )),
            );
        }
        Err(e) => checks.push("c=3, g=1+x+x^2+x^3+x^4", Err(e)),
    }

    let f2 = FieldSpec::prime(2);
    for (text, g) in [("1+x^2+x^5", vec![1, 0, 1, 0, 0, 1]), ("1+x+x^3+x^4+x^5", vec![1, 1, 0, 1, 1, 1])] {
        checks.equal(
            format!("primitive {text}: u = d q^(d-1)/(q^d-1) = 80/31"),
            f2.clone().and_then(|f| primitive_u_check(&UniPoly::from_ints(&f, &g))).map(|u| (rational_string(&u), "80/31".to_string())),
        );
    }

    // (g): g = 1 + x^(k-1) + x^k with u from the closed forms at h = 2.
    let h = 2u32;
    let k4 = 1i64 << h;
    let k5 = k4 + 1;
    let u4 = BigRational::new(BigInt::from(k4 * (3i64.pow(h) - 1)), BigInt::from(k4 * k4 - 1));
    let u5 = BigRational::new(BigInt::from(k5 * (k5 - 2) * (3i64.pow(h) + 1)), BigInt::from((1i64 << (3 * h)) - 1));
    for (k, want) in [(k4, &u4), (k5, &u5)] {
        let outcome = f2.clone().and_then(|f| {
            let mut c = vec![0i64; k as usize + 1];
            c[0] = 1;
            c[k as usize - 1] = 1;
            c[k as usize] = 1;
            let g = UniPoly::from_ints(&f, &c);
            let prof = fit_qpow_profile(&g, 1, FieldElem(1), budget)?;
            let ok = prof.u.iter().all(|u| *u == *want);
            Ok((ok, format!("fitted u={:?}, expected {}", rat_strings(&prof.u), rational_string(&want))))
        });
        checks.push(format!("g=1+x^{}+x^{k}: u = {}", k - 1, rational_string(&want)), outcome);
    }
    checks.finish("q-power profiles")
}

fn criterion5(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(5);
    checks.equal(
        "omega(6039) = 2079 with runs [3,1,4,1]",
        Ok(((omega_runs(6039), RunDecomposition::of(6039).lengths()), (BigUint::from(2079u32), vec![3, 1, 4, 1]))),
    );
    let omega_oracle = (|| {
        let f2 = FieldSpec::prime(2)?;
        let g = parse_poly("1+x+x^2", 1, &f2)?;
        brute_power_censuses(&g, 512, budget)
    })();
    match omega_oracle {
        Ok(cs) => checks.all(
            "omega_runs(n) equals direct expansion for n <= 512",
            cs.iter().enumerate().map(|(n, c)| Ok((format!("n={n}"), omega_runs(n as u64), BigUint::from(c.total())))),
        ),
        Err(e) => checks.push("omega_runs(n) equals direct expansion for n <= 512", Err(e)),
    }
    for p in [2u64, 3, 5] {
        let name = format!("nonzero coefficients of (1+x+...+x^{})^n over F_{p}, n <= 60", p - 1);
        let oracle = (|| {
            let f = FieldSpec::prime(p)?;
            let g = MultiPoly::from_terms(&f, 1, (0..p).map(|e| (vec![e], f.one())));
            brute_power_censuses(&g, 60, budget)
        })();
        match oracle {
            Ok(cs) => checks.all(
                name,
                cs.iter().enumerate().skip(1).map(|(n, c)| {
                    Ok((format!("n={n}"), prop23_count(n as u64, p)?, c.total() as u128))
                }),
            ),
            Err(e) => checks.push(name, Err(e)),
        }
    }
    checks.all(
        "binomial row census mod p from digits equals Pascal rows mod p, p in {2,3,5}, n <= 60",
        [2u64, 3, 5].into_iter().flat_map(|p| {
            (0..=60u64).map(move |n| {
                let census = binomial_row_census(n, p)?;
                let mut row = vec![1u64];
                for _ in 0..n {
                    let mut next = vec![1u64; row.len() + 1];
                    for i in 1..row.len() {
                        next[i] = (row[i - 1] + row[i]) % p;
                    }
                    row = next;
                }
                let mut want = std::collections::BTreeMap::new();
                for c in row.into_iter().filter(|&c| c != 0) {
                    *want.entry(c).or_insert(0u128) += 1;
                }
                Ok((format!("p={p} n={n}"), census.counts, want))
            })
        }),
    );
    checks.all(
        "2^-n sum_{k < 2^n} omega(k) = F(n+2) for n <= 12",
        (0..=12u32).map(|n| {
            let (lhs, rhs) = averaging_identity(n);
            Ok((format!("n={n}"), lhs, BigRational::from_integer(rhs)))
        }),
    );
    let lam = lambda_check(128);
    let detail = match lam.first_mismatch {
        Some(i) => format!("first mismatch at z^{i}: {} vs {}", lam.lhs[i], lam.rhs[i]),
        None => "129 coefficients agree".into(),
    };
    checks.push("Lambda(z) = (1+2z) Lambda(z^2) through z^128", Ok((lam.holds(), detail)));
    checks.finish("closed forms for binomial-type counts")
}

fn criterion6(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(6);
    for p in [2u64, 3, 5] {
        let name = format!("N(prod (1+x_i+x_(i+1))) over F_{p} equals the series, n <= 8");
        let outcome = (|| {
            let field = FieldSpec::prime(p)?;
            let series = h_seq(p, 9)?;
            let mut cases = Vec::new();
            for n in 0..=8usize {
                let c = brute_product_or_one(&field, n + 1, &h_factors(&field, n)?, budget)?;
                cases.push((format!("n={n}"), BigInt::from(c.total()), series[n].clone()));
            }
            Ok(cases)
        })();
        match outcome {
            Ok(cases) => checks.all(name, cases.into_iter().map(Ok)),
            Err(e) => checks.push(name, Err(e)),
        }
    }
    for (p, n_max) in [(3u64, 6u32), (5, 3)] {
        checks.all(
            format!("N((1+x+x^{p})^((p^n-1)/(p-1))) equals the series for p={p}, n <= {n_max}"),
            (0..=n_max).map(|n| {
                let series = h_seq(p, n_max as usize + 1)?;
                Ok((format!("n={n}"), BigInt::from(cor33_count(p, n, budget)?), series[n as usize].clone()))
            }),
        );
    }
    checks.finish("products of consecutive linear forms")
}

fn prefix_product(lambda: &[u64], budget: &Budget) -> Result<BigInt> {
    if lambda.is_empty() {
        return Ok(BigInt::one());
    }
    let k = lambda[0].max(1) as usize;
    let factors = lambda
        .iter()
        .map(|&l| MultiPoly::linear_sum(&Integers, k, 1..=l as usize))
        .collect::<Result<Vec<_>>>()?;
    Ok(BigInt::from(brute_product_or_one(&Integers, k, &factors, budget)?.total()))
}

fn for_each_vector(n: usize, lo: u64, hi: u64, visit: &mut dyn FnMut(&[u64])) {
    fn rec(cur: &mut Vec<u64>, n: usize, lo: u64, hi: u64, visit: &mut dyn FnMut(&[u64])) {
        if cur.len() == n {
            visit(cur);
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            rec(cur, n, lo, hi, visit);
            cur.pop();
        }
    }
    rec(&mut Vec::new(), n, lo, hi, visit);
}

fn vectors(n_max: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for_each_vector(n, lo, hi, &mut |v| out.push(v.to_vec()));
    }
    out
}

fn criterion7(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(7);
    checks.all(
        "|K_n| = C_n for n <= 12",
        (0..=12usize).map(|n| {
            Ok((format!("n={n}"), BigInt::from(enum_draconian(n, DEFAULT_DRACONIAN_CAP)?.len()), catalan(n as u64)))
        }),
    );
    let partitions: Vec<Vec<u64>> = vectors(6, 1, 6).into_iter().filter(|v| v.windows(2).all(|w| w[0] >= w[1])).collect();
    checks.all(
        "monomials of prod (x_1+...+x_lambda_i) equal the draconian sum, n <= 6, lambda_1 <= 6",
        partitions.iter().map(|l| Ok((format!("lambda={l:?}"), omega_count(l)?, prefix_product(l, budget)?))),
    );
    let ts = vectors(5, 0, 3);
    checks.all(
        "lattice points of Pi_n(t): draconian formula equals direct count, n <= 5, t_i <= 3",
        ts.iter().map(|t| {
            Ok((format!("t={t:?}"), ps_lattice_points(t, PsMode::Formula), ps_lattice_points(t, PsMode::Direct)))
        }),
    );
    checks.all(
        "monomial count of prod (x_1+...+x_(t_i+...+t_n)) equals #Pi_n(t_1,...,t_n - 1), n <= 4, 1 <= t_i <= 3",
        vectors(4, 1, 3).iter().map(|t| {
            let (lhs, rhs) = cor421_bridge(t)?;
            Ok((format!("t={t:?}"), lhs, rhs))
        }),
    );
    checks.all(
        "bridge products also equal direct expansion, n <= 3, 1 <= t_i <= 3",
        vectors(3, 1, 3).iter().map(|t| {
            let lambda: Vec<u64> = (0..t.len()).map(|i| t[i..].iter().sum()).collect();
            Ok((format!("t={t:?}"), cor421_bridge(t)?.0, prefix_product(&lambda, budget)?))
        }),
    );
    checks.all(
        "(1/n) C((t+1)n-2, n-1) equals #Pi_(n-1)(t,...,t,t-1), n <= 5, t <= 3",
        (1..=5u64).flat_map(|n| (1..=3u64).map(move |t| (n, t))).map(|(n, t)| {
            Ok((format!("n={n} t={t}"), cor422_closed(n, t)?, cor422_direct(n, t)?))
        }),
    );
    let nst: Vec<(u64, u64, u64)> =
        (1..=5).flat_map(|n| (1..=3).flat_map(move |s| (1..=3).map(move |t| (n, s, t)))).collect();
    checks.all(
        "shifted lattice paths: closed form, L-sum and K-sum agree with the path count, n <= 5, s, t <= 3",
        nst.iter().map(|&(n, s, t)| {
            let paths = shifted_path_count(n, s, t, PathMode::Paths)?;
            let modes = [PathMode::Closed, PathMode::Lsum, PathMode::Ksum]
                .iter()
                .map(|&m| shifted_path_count(n, s, t, m))
                .collect::<Result<Vec<_>>>()?;
            Ok((format!("n={n} s={s} t={t}"), modes, vec![paths.clone(), paths.clone(), paths]))
        }),
    );
    let ms: Vec<Vec<u64>> = vectors(4, 0, 3);
    checks.all(
        "noncrossing identity for every m with n <= 4, 0 <= m_i <= 3",
        ms.iter().map(|m| {
            let signed: Vec<i64> = m.iter().map(|&x| x as i64).collect();
            let c = noncrossing_identity(&signed);
            Ok((format!("m={m:?}"), c.lhs, c.rhs))
        }),
    );
    checks.all(
        "((m+2)/(2n+m)) C(2n+m, n+m+1) equals direct expansion and #Pi_(n-1)(1,...,1,m+1), n <= 5",
        (1..=5u64).flat_map(|n| (0..=n).map(move |m| (n, m))).map(|(n, m)| {
            let formula = ex433a_formula(n, m)?;
            let direct = prefix_product(&ex433a_partition(n, m), budget)?;
            let polytope = if n >= 2 { ex433a_polytope(n, m)? } else { direct.clone() };
            Ok((format!("n={n} m={m}"), (formula.clone(), polytope), (direct, formula)))
        }),
    );
    checks.all(
        "Fuss-Catalan count equals direct expansion of prod (x_0+...+x_j)^k, n <= 5, k <= 3",
        (1..=5u64).flat_map(|n| (1..=3u64).map(move |k| (n, k))).map(|(n, k)| {
            Ok((format!("n={n} k={k}"), ex433b_formula(n, k)?, prefix_product(&ex433b_partition(n, k), budget)?))
        }),
    );
    let mut grid = Vec::new();
    let mut cases = Vec::new();
    for n in 1..=5u64 {
        for k in 0..=2u64 {
            let outcome = (|| -> Result<_> {
                let direct = prefix_product(&ex433c_partition(n, k), budget)?;
                let r = ex433c_r(n, k)?;
                let poly = ex433c_polytope_sum(n, k)?;
                Ok((direct, r, poly))
            })();
            match outcome {
                Ok((direct, r, poly)) => {
                    grid.push(serde_json::json!({
                        "n": n,
                        "k": k,
                        "direct": direct.to_string(),
                        "matrix_cell": rational_string(&r),
                        "polytope_sum": poly.to_string(),
                        "polytope_sum_matches": poly == direct,
                    }));
                    cases.push(Ok((format!("n={n} k={k}"), r, BigRational::from_integer(direct))));
                }
                Err(e) => cases.push(Err(e)),
            }
        }
    }
    checks.all("matrix cell R(n+k, k) equals direct expansion of prod (x_0+...+x_j)^(j+k), n <= 5, k <= 2", cases);
    checks.table("prod (x_0+...+x_j)^(j+k): direct count, matrix cell, polytope sum", serde_json::Value::Array(grid));
    checks.finish("draconian sequences, polytopes and lattice paths")
}

fn count_int(nvars: usize, factors: &[crate::mpoly::IntPoly], budget: &Budget) -> Result<BigInt> {
    Ok(BigInt::from(brute_product_or_one(&Integers, nvars, factors, budget)?.total()))
}

fn criterion8(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(8);
    let jk: Vec<(u64, u64)> = (1..=3).flat_map(|j| (1..=4).map(move |k| (j, k))).collect();
    checks.all(
        "traveling products equal direct expansion, j <= 3, k <= 4, n <= 7",
        jk.iter().flat_map(|&(j, k)| {
            (0..=7usize).map(move |n| {
                let seq = traveling_seq(j, k, 8)?;
                let f = traveling_factors(j as usize, k as usize, n)?;
                let nvars = f.first().map_or(1, |p| p.nvars());
                Ok((format!("j={j} k={k} n={n}"), count_int(nvars, &f, budget)?, seq[n].clone()))
            })
        }),
    );
    checks.all(
        "j=1, k=3 sequence equals F(2n+2) for n <= 20",
        traveling_seq(1, 3, 21)
            .map(|s| s.into_iter().enumerate().map(|(n, v)| Ok((format!("n={n}"), v, fibonacci(2 * n as u64 + 2)))).collect::<Vec<_>>())
            .unwrap_or_else(|e| vec![Err(e)]),
    );
    checks.all(
        "charpoly of the connectivity matrix equals Theta_(k,m), k, m <= 6",
        (0..=6usize).flat_map(|k| (0..=6u64).map(move |m| (k, m))).map(|(k, m)| {
            Ok((format!("k={k} m={m}"), charpoly(&connectivity_matrix(k, m)), theta_charpoly(k, m)))
        }),
    );
    checks.all(
        "V_(n,k,m) series equals direct expansion, k <= 3, 1 <= m <= 2, n <= 5",
        (1..=3usize)
            .flat_map(|k| (1..=2u64).flat_map(move |m| (0..=5usize).map(move |n| (k, m, n))))
            .map(|(k, m, n)| {
                let series = v_genfun(k, m)?.expand(n + 1)?;
                let f = v_factors(n, k, m)?;
                Ok((format!("k={k} m={m} n={n}"), count_int(n + k, &f, budget)?, series[n].clone()))
            }),
    );
    checks.all(
        "closed-form V generating functions for k = 2, 3, 4 match, m <= 4",
        (2..=4usize).flat_map(|k| (1..=4u64).map(move |m| (k, m))).map(|(k, m)| {
            let computed = v_genfun(k, m)?;
            let printed = ex514_template(k, m)?;
            let terms = series_terms(&computed, &printed);
            Ok((format!("k={k} m={m}"), genfun_equal_as_series(&computed, &printed, terms), true))
        }),
    );
    checks.all(
        "1 + (nk + C(n+1,2)) m equals direct expansion, n, k, m <= 3",
        (0..=3u64)
            .flat_map(|n| (0..=3u64).flat_map(move |k| (0..=3u64).map(move |m| (n, k, m))))
            .map(|(n, k, m)| Ok((format!("n={n} k={k} m={m}"), j_count(n, k, m), BigInt::from(j_poly(n, k, m)?.len())))),
    );
    checks.all(
        "G_n closed form equals direct expansion and its GF, n <= 8",
        (0..=8u64).map(|n| {
            let series = crate::traveling::g_genfun()?.expand(9)?;
            let f = g_factors(n as usize)?;
            let direct = count_int(n as usize + 4, &f, budget)?;
            Ok((format!("n={n}"), (g_closed(n), series[n as usize].clone()), (direct.clone(), direct)))
        }),
    );
    checks.all(
        "B_(n,t): #(+1) = #(-1) + 1, no other coefficients, totals match the GFs, t in {1,2}, n <= 8",
        (1..=2usize).flat_map(|t| (1..=8usize).map(move |n| (t, n))).map(|(t, n)| {
            let gf = if t == 1 { b1_genfun()? } else { b2_genfun()? };
            let series = gf.expand(n + 1)?;
            let p = brute_product(&b_factors(n, t), budget)?;
            let (plus, minus, other) = sign_census(&p);
            Ok((
                format!("t={t} n={n}"),
                (plus, other, BigInt::from(plus + minus)),
                (minus + 1, 0, series[n].clone()),
            ))
        }),
    );
    checks.all(
        "N(D_(n+1,0)) equals direct expansion and 2, 6, 22, 90 for n = 1..4",
        (1..=4u64).map(|n| {
            let f = d_factors(n as usize + 1, 0)?;
            let direct = count_int(f[0].nvars(), &f, budget)?;
            let printed = BigInt::from([2, 6, 22, 90][n as usize - 1]);
            Ok((format!("n={n}"), (d0_count(n), direct), (printed.clone(), printed)))
        }),
    );
    match nu_table(10, budget) {
        Ok(rows) => checks.table(
            "gamma_n = N(D_(n-2,2)) against nu_n",
            serde_json::to_value(rows).expect("rows serialize"),
        ),
        Err(e) => checks.push("gamma_n table", Err(e)),
    }
    checks.finish("traveling products and the connectivity matrix")
}

fn criterion9(budget: &Budget) -> CriterionReport {
    let mut checks = Checks::new(9);
    let entries = match corpus() {
        Ok(e) => e,
        Err(e) => {
            checks.push("corpus", Err(e));
            return checks.finish("automaton invariants");
        }
    };
    let automata: Vec<Result<DigitAutomaton>> = par_map(&entries, |e| DigitAutomaton::build(&e.poly, budget));
    for (entry, a) in entries.iter().zip(&automata) {
        let name = format!("{}: every column of every Phi_a sums to q^k", entry.name);
        match a {
            Ok(a) => {
                let want = num_traits::pow(a.field().q(), entry.poly.nvars());
                let ok = a.column_sums().iter().all(|cols| cols.iter().all(|&s| s == want));
                checks.push(name, Ok((ok, format!("q^k = {want}, {} states", a.num_states()))));
            }
            Err(e) => checks.push(name, Err(e.clone())),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases = Vec::with_capacity(LEADING_ZERO_CASES);
    for _ in 0..LEADING_ZERO_CASES {
        let idx = rng.gen_range(0..entries.len());
        let n: u64 = rng.gen_range(0..1u64 << 40);
        let zeros = rng.gen_range(1..=8usize);
        let alpha_code = rng.gen_range(1..entries[idx].poly.ring().q()) as u32;
        cases.push((idx, n, zeros, alpha_code));
    }
    checks.all(
        "appending leading zero digits leaves the count unchanged (50 random cases)",
        cases.iter().map(|&(idx, n, zeros, code)| {
            let a = automata[idx].as_ref().map_err(Clone::clone)?;
            let alpha = FieldElem(code);
            let q = a.field().q();
            let mut digits: Vec<u64> = BigUint::from(n).to_radix_le(q as u32).into_iter().map(u64::from).collect();
            let plain = a.count_digits(&digits, alpha)?;
            digits.extend(std::iter::repeat_n(0, zeros));
            let padded = a.count_digits(&digits, alpha)?;
            Ok((format!("{} n={n} zeros={zeros} alpha={code}", entries[idx].name), padded, plain))
        }),
    );
    checks.finish("automaton invariants")
}
