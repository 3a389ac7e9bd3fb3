//! Monomial counts of products of prefix sums `x_1 + ... + x_m`, draconian
//! sequences, Pitman-Stanley polytope lattice points and the lattice-path
//! counts they encode.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{binomial, catalan, gen_binomial, multichoose};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enum_draconian`].
pub const DEFAULT_DRACONIAN_CAP: usize = 15;

/// Calls `visit` on every `k` in `K_n` (`k_1 + ... + k_i <= i`, total `n`),
/// in reverse lexicographic order.
pub fn for_each_draconian(n: usize, mut visit: impl FnMut(&[u64])) {
    fn rec(i: usize, n: usize, sum: u64, cur: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
        if i == n {
            if sum == n as u64 {
                visit(cur);
            }
            return;
        }
        let hi = if i + 1 == n { n as u64 - sum } else { i as u64 + 1 - sum };
        let lo = if i + 1 == n { hi } else { 0 };
        for k in (lo..=hi).rev() {
            cur.push(k);
            rec(i + 1, n, sum + k, cur, visit);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(n);
    rec(0, n, 0, &mut cur, &mut visit);
}

/// All of `K_n`; `|K_n|` is the Catalan number `C_n`.
pub fn enum_draconian(n: usize, cap: usize) -> Result<Vec<Vec<u64>>> {
    if n > cap {
        return Err(Error::Budget(format!("draconian enumeration n={n} exceeds cap {cap}")));
    }
    let mut out = Vec::new();
    for_each_draconian(n, |k| out.push(k.to_vec()));
    Ok(out)
}

/// `sum over k of prod_i weight(i, k_i)` for `k` of length `n` with
/// `k_1 + ... + k_i <= bound(i)` (1-based `i`) and `sum k = total`.
fn ballot_sum(n: usize, bound: impl Fn(usize) -> u64, total: u64, weight: impl Fn(usize, u64) -> BigInt) -> BigInt {
    let width = total as usize + 1;
    let mut dp = vec![BigInt::zero(); width];
    dp[0] = BigInt::one();
    for i in 1..=n {
        let cap = bound(i).min(total) as usize;
        let mut next = vec![BigInt::zero(); width];
        for s in 0..width {
            if dp[s].is_zero() {
                continue;
            }
            for t in s..=cap {
                let w = weight(i, (t - s) as u64);
                if !w.is_zero() {
                    next[t] += &dp[s] * w;
                }
            }
        }
        dp = next;
    }
    dp.swap_remove(total as usize)
}

/// `sum over k in K_n of prod_i weight(i, k_i)`.
pub fn draconian_sum(n: usize, weight: impl Fn(usize, u64) -> BigInt) -> BigInt {
    ballot_sum(n, |i| i as u64, n as u64, weight)
}

fn check_partition(lambda: &[u64]) -> Result<()> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(format!("{lambda:?} is not weakly decreasing")));
    }
    Ok(())
}

/// Number of distinct monomials of `prod_i (x_1 + ... + x_{lambda_i})`,
/// `sum over K_n of prod multichoose(lambda_i - lambda_{i+1}, k_i)`.
pub fn omega_count(lambda: &[u64]) -> Result<BigInt> {
    check_partition(lambda)?;
    let n = lambda.len();
    let gap = |i: usize| lambda[i - 1] - lambda.get(i).copied().unwrap_or(0);
    Ok(draconian_sum(n, |i, k| multichoose(gap(i), k)))
}

/// Checks the recurrence obtained by raising `lambda_i` (1-based) by one.
pub fn omega_recurrence_check(lambda: &[u64], i: usize) -> Result<bool> {
    check_partition(lambda)?;
    if i == 0 || i > lambda.len() {
        return Err(Error::InvalidArgument(format!("index {i} outside 1..={}", lambda.len())));
    }
    let mut raised = lambda.to_vec();
    raised[i - 1] += 1;
    check_partition(&raised)?;
    let li = lambda[i - 1];
    let mut head: Vec<u64> = lambda[..i - 1].iter().map(|&l| l - li).collect();
    head.push(1);
    let lhs = omega_count(&raised)?;
    let rhs = omega_count(lambda)? + omega_count(&head)? * omega_count(&lambda[i..])?;
    Ok(lhs == rhs)
}

/// `sum_{j >= 1} (-1)^(j+1) C(n+2-j, j) C_{n-j}`; equals `C_n` for `n >= 2`.
pub fn catalan_inversion(n: u64) -> BigInt {
    (1..=n)
        .map(|j| {
            let term = binomial(n + 2 - j, j) * catalan(n - j);
            if j % 2 == 1 {
                term
            } else {
                -term
            }
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PsMode {
    Direct,
    Formula,
}

/// Lattice points `y >= lo` with prefix sums `y_1 + ... + y_i <= bounds[i-1]`
/// (strictly below when `strict`), counted by a DP over prefix sums.
fn count_prefix_bounded(bounds: &[i64], lo: i64, strict: bool) -> BigInt {
    let limit: Vec<i64> = bounds.iter().map(|&b| if strict { b - 1 } else { b }).collect();
    let Some(&top) = limit.iter().max() else {
        return BigInt::one();
    };
    if top < 0 {
        return BigInt::zero();
    }
    let width = top as usize + 1;
    let mut dp = vec![BigInt::zero(); width];
    dp[0] = BigInt::one();
    for &cap in &limit {
        let mut next = vec![BigInt::zero(); width];
        if cap >= 0 {
            for s in 0..width {
                if dp[s].is_zero() {
                    continue;
                }
                let start = s as i64 + lo;
                for t in start.max(0)..=cap {
                    next[t as usize] += &dp[s];
                }
            }
        }
        dp = next;
    }
    dp.into_iter().sum()
}

/// Prefix bounds `t_n, t_n + t_{n-1}, ...` of the polytope `Pi_n(t)`.
fn ps_bounds(t: &[i64]) -> Vec<i64> {
    t.iter()
        .rev()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Lattice points of `Pi_n(t)`, by direct count or by the draconian-sum formula.
pub fn ps_lattice_points(t: &[u64], mode: PsMode) -> BigInt {
    match mode {
        PsMode::Direct => {
            let signed: Vec<i64> = t.iter().map(|&x| x as i64).collect();
            count_prefix_bounded(&ps_bounds(&signed), 0, false)
        }
        PsMode::Formula => {
            let n = t.len();
            draconian_sum(n, |i, k| {
                if i == n {
                    multichoose(t[n - 1] + 1, k)
                } else {
                    multichoose(t[i - 1], k)
                }
            })
        }
    }
}

/// Lattice points of `Pi_n(t)` for possibly negative `t`, counted directly.
pub fn ps_points_signed(t: &[i64]) -> BigInt {
    count_prefix_bounded(&ps_bounds(t), 0, false)
}

/// Interior lattice points of `Pi_n(t)`: `y_i >= 1` and strict prefix bounds.
pub fn ps_interior_points(t: &[u64]) -> BigInt {
    let signed: Vec<i64> = t.iter().map(|&x| x as i64).collect();
    count_prefix_bounded(&ps_bounds(&signed), 1, true)
}

/// Interior points of `Pi_n(m)` against the points of
/// `Pi_n(m_1 - 1, ..., m_{n-1} - 1, m_n - 2)`.
pub fn reciprocity_check(m: &[u64]) -> (BigInt, BigInt) {
    let n = m.len();
    let shifted: Vec<i64> = m
        .iter()
        .enumerate()
        .map(|(i, &x)| x as i64 - if i + 1 == n { 2 } else { 1 })
        .collect();
    (ps_interior_points(m), ps_points_signed(&shifted))
}

/// Both sides of the bridge between `prod (x_1 + ... + x_{lambda_i})` with
/// `lambda_i = t_i + ... + t_n` and `Pi_n(t_1, ..., t_{n-1}, t_n - 1)`.
pub fn cor421_bridge(t: &[u64]) -> Result<(BigInt, BigInt)> {
    let n = t.len();
    if n == 0 || t.contains(&0) {
        return Err(Error::InvalidArgument("t must be a nonempty vector of positive integers".into()));
    }
    let lambda: Vec<u64> = (0..n).map(|i| t[i..].iter().sum()).collect();
    let mut shifted = t.to_vec();
    shifted[n - 1] -= 1;
    Ok((omega_count(&lambda)?, ps_lattice_points(&shifted, PsMode::Direct)))
}

/// `(1/n) C((t+1)n - 2, n - 1)`, the number of lattice points of
/// `Pi_{n-1}(t, ..., t, t - 1)`.
pub fn cor422_closed(n: u64, t: u64) -> Result<BigInt> {
    if n == 0 || t == 0 {
        return Err(Error::InvalidArgument("n and t must be positive".into()));
    }
    Ok(binomial((t + 1) * n - 2, n - 1) / BigInt::from(n))
}

/// Direct count of `Pi_{n-1}(t, ..., t, t - 1)`.
pub fn cor422_direct(n: u64, t: u64) -> Result<BigInt> {
    if n == 0 || t == 0 {
        return Err(Error::InvalidArgument("n and t must be positive".into()));
    }
    let dim = n as usize - 1;
    let mut v = vec![t; dim];
    if let Some(last) = v.last_mut() {
        *last = t - 1;
    }
    Ok(ps_lattice_points(&v, PsMode::Direct))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathMode {
    /// `(1/n) C((s+t)n - 2, sn - 1)`.
    Closed,
    /// Sum over `L_{n,t}` of `prod C(k_i + s - 1, k_i)`.
    Lsum,
    /// Monomial count of the staircase product via the draconian sum.
    Ksum,
    /// Lattice paths counted column by column under the boundary.
    Paths,
}

fn check_nst(n: u64, s: u64, t: u64) -> Result<()> {
    if n == 0 || s == 0 || t == 0 {
        return Err(Error::InvalidArgument("n, s and t must be positive".into()));
    }
    Ok(())
}

/// Partition whose prefix-sum product is `Z_{n,s,t}`: `sn` repeated `t - 1`
/// times, then `s(n-1), ..., s` each repeated `t` times.
pub fn staircase_partition(n: u64, s: u64, t: u64) -> Vec<u64> {
    let mut lambda = vec![s * n; t as usize - 1];
    for j in 1..n {
        lambda.extend(std::iter::repeat_n(s * (n - j), t as usize));
    }
    lambda
}

/// Lattice paths from `(0,0)` to `(sn-1, tn-1)` weakly beneath
/// `U^(t-1) (R^s U^t)^(n-1) R^(s-1)`.
pub fn shifted_path_count(n: u64, s: u64, t: u64, mode: PathMode) -> Result<BigInt> {
    check_nst(n, s, t)?;
    Ok(match mode {
        PathMode::Closed => binomial((s + t) * n - 2, s * n - 1) / BigInt::from(n),
        PathMode::Lsum => ballot_sum(n as usize, |j| t * j as u64 - 1, t * n - 1, |_, k| binomial(k + s - 1, k)),
        PathMode::Ksum => omega_count(&staircase_partition(n, s, t))?,
        PathMode::Paths => {
            let (w, h) = (s * n, t * n);
            let ceiling = |x: u64| (x / s + 1) * t - 1;
            let mut col = vec![BigInt::zero(); h as usize];
            for y in 0..=ceiling(0).min(h - 1) {
                col[y as usize] = BigInt::one();
            }
            for x in 1..w {
                let top = ceiling(x).min(h - 1) as usize;
                let mut next = vec![BigInt::zero(); h as usize];
                let mut run = BigInt::zero();
                for y in 0..=top {
                    run += &col[y];
                    next[y] = run.clone();
                }
                col = next;
            }
            col.swap_remove(h as usize - 1)
        }
    })
}

/// Cardinality of `L_{n,t}`: `k_1 + ... + k_j <= tj - 1`, total `tn - 1`.
pub fn l_set_size(n: u64, t: u64) -> Result<BigInt> {
    check_nst(n, 1, t)?;
    Ok(ballot_sum(n as usize, |j| t * j as u64 - 1, t * n - 1, |_, _| BigInt::one()))
}

/// Sum over partitions of `n - 1` with `l` parts of
/// `C(n, l) * multinomial(l; m_1, m_2, ...) * prod C(i + s - 1, i)^(m_i)`,
/// which equals `C((s+1)n - 2, n - 1)`.
pub fn cor414_partition_sum(n: u64, s: u64) -> Result<BigInt> {
    check_nst(n, s, 1)?;
    let mut total = BigInt::zero();
    let mut parts = Vec::new();
    partitions(n - 1, n - 1, &mut parts, &mut |p| {
        let l = p.len() as u64;
        let mut term = binomial(n, l);
        let mut placed = 0u64;
        let mut i = 0;
        while i < p.len() {
            let mut j = i;
            while j < p.len() && p[j] == p[i] {
                j += 1;
            }
            let mult = (j - i) as u64;
            placed += mult;
            term *= binomial(placed, mult);
            term *= num_traits::pow(binomial(p[i] + s - 1, p[i]), mult as usize);
            i = j;
        }
        total += term;
    });
    Ok(total)
}

fn partitions(rest: u64, max: u64, cur: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
    if rest == 0 {
        visit(cur);
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        cur.push(part);
        partitions(rest - part, part, cur, visit);
        cur.pop();
    }
}

/// Both sides of the noncrossing-matching identity
/// `sum_K C(m_n, k_n) prod_{i<n} C(m_i + 1, k_i) = sum_K prod C(m_i + k_i - 1, k_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn noncrossing_identity(m: &[i64]) -> IdentityCheck {
    let n = m.len();
    let lhs = draconian_sum(n, |i, k| {
        let top = if i == n { m[i - 1] } else { m[i - 1] + 1 };
        gen_binomial(top, k as i64)
    });
    let rhs = draconian_sum(n, |i, k| gen_binomial(m[i - 1] + k as i64 - 1, k as i64));
    IdentityCheck { lhs, rhs }
}

/// `((m+2)/(2n+m)) C(2n+m, n+m+1)` for `prod_{j=1}^{n-1} (x_0 + ... + x_{j+m})`.
pub fn ex433a_formula(n: u64, m: u64) -> Result<BigInt> {
    if n == 0 || m > n {
        return Err(Error::InvalidArgument("requires n >= max(m, 1)".into()));
    }
    Ok(binomial(2 * n + m, n + m + 1) * BigInt::from(m + 2) / BigInt::from(2 * n + m))
}

/// Partition of the product in (a): `lambda_i = n + m + 1 - i`, `i < n`.
pub fn ex433a_partition(n: u64, m: u64) -> Vec<u64> {
    (1..n).map(|j| j + m + 1).rev().collect()
}

/// Lattice points of `Pi_{n-1}(1, ..., 1, m+1)`, the polytope matched to the
/// product in (a) by the bridge with `lambda = (n+m, ..., m+2)`.
pub fn ex433a_polytope(n: u64, m: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidArgument("requires n >= 2".into()));
    }
    let mut t = vec![1u64; n as usize - 1];
    *t.last_mut().expect("nonempty") = m + 1;
    Ok(ps_lattice_points(&t, PsMode::Direct))
}

/// Fuss-Catalan number `(1/(kn+1)) C((k+1)n, n)`.
pub fn ex433b_formula(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("n and k must be positive".into()));
    }
    Ok(binomial((k + 1) * n, n) / BigInt::from(k * n + 1))
}

/// Partition of `prod_{j=1}^{n-1} (x_0 + ... + x_j)^k`.
pub fn ex433b_partition(n: u64, k: u64) -> Vec<u64> {
    (1..n).rev().flat_map(|j| std::iter::repeat_n(j + 1, k as usize)).collect()
}

/// Partition of `prod_{j=1}^{n-1} (x_0 + ... + x_j)^(j+k)`.
pub fn ex433c_partition(n: u64, k: u64) -> Vec<u64> {
    (1..n).rev().flat_map(|j| std::iter::repeat_n(j + 1, (j + k) as usize)).collect()
}

/// Lower-triangular matrices `M`, `N` and `R = M N^{-1}` truncated to `size`.
#[derive(Clone, Debug)]
pub struct Ex433cMatrices {
    pub m: Vec<Vec<BigInt>>,
    pub n: Vec<Vec<BigInt>>,
    pub r: Vec<Vec<BigRational>>,
}

pub fn ex433c_matrices(size: usize) -> Result<Ex433cMatrices> {
    let c2 = |i: i64| i * (i - 1) / 2;
    let entry = |i: usize, j: usize, shift: i64| {
        if j > i {
            return BigInt::zero();
        }
        let (a, b) = (i as i64, j as i64);
        gen_binomial(c2(a) - c2(b) + a - b + shift, a - b)
    };
    let m: Vec<Vec<BigInt>> = (0..size).map(|i| (0..size).map(|j| entry(i, j, 3)).collect()).collect();
    let n: Vec<Vec<BigInt>> = (0..size).map(|i| (0..size).map(|j| entry(i, j, 2)).collect()).collect();
    let mut inv = vec![vec![BigRational::zero(); size]; size];
    for i in 0..size {
        if n[i][i].is_zero() {
            return Err(Error::Verification(format!("N has a zero diagonal entry at {i}")));
        }
        let d = BigRational::from_integer(n[i][i].clone());
        inv[i][i] = d.recip();
        for j in (0..i).rev() {
            let s: BigRational = (j..i)
                .map(|l| BigRational::from_integer(n[i][l].clone()) * &inv[l][j])
                .sum();
            inv[i][j] = -s / &d;
        }
    }
    let r = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    (j..=i)
                        .map(|l| BigRational::from_integer(m[i][l].clone()) * &inv[l][j])
                        .sum()
                })
                .collect()
        })
        .collect();
    Ok(Ex433cMatrices { m, n, r })
}

/// `R(n + k, k)`, the cell of `M N^{-1}` that counts the monomials of
/// `prod_{j=1}^{n-1} (x_0 + ... + x_j)^(j+k)`.
pub fn ex433c_r(n: u64, k: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mats = ex433c_matrices((n + k) as usize + 1)?;
    Ok(mats.r[(n + k) as usize][k as usize].clone())
}

/// `sum over y in Pi_{n-1}(t_1 - 1, t_2, ..., t_{n-1}) of (1 + y_{n-1})`
/// with `t_i = k + n - i`. Agrees with the monomial count of (c) only at a
/// few small cells, so it is reported next to [`ex433c_r`] rather than used
/// as a count.
pub fn ex433c_polytope_sum(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    let dim = n as usize - 1;
    let mut t: Vec<i64> = (1..=dim as i64).map(|i| k as i64 + n as i64 - i).collect();
    t[0] -= 1;
    let bounds = ps_bounds(&t);
    // DP over (prefix sum) carrying both the count and the weighted count.
    let top = bounds[dim - 1].max(0) as usize;
    let mut cnt = vec![BigInt::zero(); top + 1];
    let mut wsum = vec![BigInt::zero(); top + 1];
    cnt[0] = BigInt::one();
    wsum[0] = BigInt::one();
    for (idx, &cap) in bounds.iter().enumerate() {
        let last = idx + 1 == dim;
        let mut nc = vec![BigInt::zero(); top + 1];
        let mut nw = vec![BigInt::zero(); top + 1];
        for s in 0..=top {
            if cnt[s].is_zero() {
                continue;
            }
            for e in s as i64..=cap {
                let e = e as usize;
                nc[e] += &cnt[s];
                if last {
                    nw[e] += &cnt[s] * BigInt::from(1 + e - s);
                } else {
                    nw[e] += &cnt[s];
                }
            }
        }
        cnt = nc;
        wsum = nw;
    }
    Ok(wsum.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{Integers, MultiPoly};
    use crate::oracle::brute_product_census;

    fn prefix_product(lambda: &[u64]) -> u64 {
        let z = Integers;
        let k = lambda.first().copied().unwrap_or(0).max(1) as usize;
        if lambda.is_empty() {
            return 1;
        }
        let factors: Vec<_> = lambda
            .iter()
            .map(|&l| MultiPoly::linear_sum(&z, k, 1..=l as usize).unwrap())
            .collect();
        brute_product_census(&factors).unwrap().0
    }

    #[test]
    fn draconian_examples() {
        assert_eq!(enum_draconian(2, 15).unwrap(), vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(enum_draconian(0, 15).unwrap(), vec![Vec::<u64>::new()]);
        for n in 0..=10 {
            assert_eq!(BigInt::from(enum_draconian(n, 15).unwrap().len()), catalan(n as u64));
            assert_eq!(draconian_sum(n, |_, _| BigInt::one()), catalan(n as u64));
        }
        assert!(enum_draconian(4, 3).is_err());
    }

    #[test]
    fn omega_examples() {
        for n in 1..=7u64 {
            let stair: Vec<u64> = (1..=n).rev().collect();
            assert_eq!(omega_count(&stair).unwrap(), catalan(n));
        }
        for s in 1..5u64 {
            for n in 1..5u64 {
                let flat = vec![s; n as usize];
                assert_eq!(omega_count(&flat).unwrap(), binomial(s + n - 1, n));
            }
        }
        assert_eq!(omega_count(&[3, 2, 1]).unwrap(), BigInt::from(prefix_product(&[3, 2, 1])));
        assert!(omega_count(&[1, 2]).is_err());
    }

    #[test]
    fn omega_recurrence_examples() {
        assert!(omega_recurrence_check(&[2, 1], 1).unwrap());
        assert!(omega_recurrence_check(&[1], 1).unwrap());
        assert!(omega_recurrence_check(&[4, 2, 2, 1], 3).is_err());
        assert!(omega_recurrence_check(&[3, 3, 1], 3).unwrap());
    }

    #[test]
    fn catalan_inversion_range() {
        assert_eq!(catalan_inversion(1), BigInt::from(2));
        assert_eq!(catalan_inversion(3), BigInt::from(5));
        assert_eq!(catalan_inversion(5), BigInt::from(42));
        for n in 2..30 {
            assert_eq!(catalan_inversion(n), catalan(n));
        }
    }

    #[test]
    fn ps_examples() {
        assert_eq!(ps_lattice_points(&[1, 1, 1], PsMode::Direct), BigInt::from(14));
        assert_eq!(ps_lattice_points(&[1, 1, 1], PsMode::Formula), BigInt::from(14));
        assert_eq!(ps_lattice_points(&[0, 0, 0], PsMode::Direct), BigInt::one());
        assert_eq!(ps_lattice_points(&[0, 0, 0], PsMode::Formula), BigInt::one());
        for n in 2..6u64 {
            for t in 1..4u64 {
                assert_eq!(cor422_direct(n, t).unwrap(), cor422_closed(n, t).unwrap());
            }
        }
    }

    #[test]
    fn path_examples() {
        for mode in [PathMode::Closed, PathMode::Lsum, PathMode::Ksum, PathMode::Paths] {
            assert_eq!(shifted_path_count(2, 1, 2, mode).unwrap(), BigInt::from(2), "{mode:?}");
            assert_eq!(shifted_path_count(1, 2, 3, mode).unwrap(), BigInt::from(3), "{mode:?}");
            for n in 1..4u64 {
                for t in 1..4u64 {
                    let want = BigInt::from(t) * catalan(n * t - 1);
                    assert_eq!(shifted_path_count(n, t, t, mode).unwrap(), want, "{mode:?} n={n} t={t}");
                }
            }
        }
        assert_eq!(prefix_product(&staircase_partition(2, 1, 2)), 2);
    }

    #[test]
    fn cor414_examples() {
        for n in 1..7u64 {
            for t in 1..4u64 {
                assert_eq!(l_set_size(n, t).unwrap(), binomial((t + 1) * n - 2, n - 1) / BigInt::from(n));
            }
            for s in 1..4u64 {
                assert_eq!(cor414_partition_sum(n, s).unwrap(), binomial((s + 1) * n - 2, n - 1));
            }
        }
    }

    #[test]
    fn noncrossing_examples() {
        let c = noncrossing_identity(&[1, 1]);
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (BigInt::from(2), BigInt::from(2)));
        let c = noncrossing_identity(&[1, 2]);
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (BigInt::from(5), BigInt::from(5)));
        assert!(noncrossing_identity(&[0, 0, 0]).equal());
        assert!(noncrossing_identity(&[3, 0, 2, 1]).equal());
    }

    #[test]
    fn reciprocity_examples() {
        let (a, b) = reciprocity_check(&[2, 2]);
        assert_eq!(a, b);
        let (a, b) = reciprocity_check(&[1, 3, 4]);
        assert_eq!(a, b);
    }

    #[test]
    fn ex433_examples() {
        assert_eq!(ex433a_formula(2, 0).unwrap(), BigInt::from(2));
        assert_eq!(ex433b_formula(2, 2).unwrap(), BigInt::from(3));
        for n in 1..6 {
            assert_eq!(ex433b_formula(n, 1).unwrap(), catalan(n));
        }
        for n in 2..5u64 {
            for m in 0..=n {
                let want = ex433a_formula(n, m).unwrap();
                assert_eq!(BigInt::from(prefix_product(&ex433a_partition(n, m))), want);
                assert_eq!(ex433a_polytope(n, m).unwrap(), want, "n={n} m={m}");
            }
            for k in 1..4 {
                assert_eq!(
                    BigInt::from(prefix_product(&ex433b_partition(n, k))),
                    ex433b_formula(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn ex433c_grid() {
        let mats = ex433c_matrices(7).unwrap();
        let row: Vec<BigRational> = [795, 170, 30, 5, 1, 1, 0]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        assert_eq!(mats.r[5], row);
        assert_eq!(ex433c_polytope_sum(2, 0).unwrap(), BigInt::one());
        assert_eq!(ex433c_polytope_sum(3, 0).unwrap(), BigInt::from(9));
        assert_eq!(ex433c_polytope_sum(3, 1).unwrap(), BigInt::from(31));
        for n in 1..5u64 {
            for k in 0..3u64 {
                let direct = prefix_product(&ex433c_partition(n, k));
                assert_eq!(ex433c_r(n, k).unwrap(), BigRational::from_integer(BigInt::from(direct)));
            }
        }
    }
}
