//! Integer helpers: primality, factoring of machine-size integers and exact
//! binomial-type numbers used throughout the counting formulas.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(n: u64) -> Vec<u64> {
    fn rec(n: u64, out: &mut Vec<u64>) {
        if n == 1 {
            return;
        }
        if is_prime(n) {
            out.push(n);
            return;
        }
        let d = pollard_rho(n);
        rec(d, out);
        rec(n / d, out);
    }
    let mut out = Vec::new();
    let mut m = n;
    for p in [2u64, 3, 5, 7, 11, 13] {
        while m % p == 0 {
            out.push(p);
            m /= p;
        }
    }
    rec(m, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// Binomial coefficient C(n, k) for `n >= 0`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial a(a-1)...(a-b+1)/b! for any integer `a`; zero for `b < 0`.
pub fn gen_binomial(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient with both arguments allowed negative, using the
/// extension C(n, k) = (-1)^(n-k) C(-k-1, n-k) for k <= n < 0.
pub fn ext_binomial(n: i64, k: i64) -> BigInt {
    if k >= 0 {
        gen_binomial(n, k)
    } else if n < 0 && k <= n {
        let v = gen_binomial(-k - 1, n - k);
        if (n - k) % 2 == 0 {
            v
        } else {
            -v
        }
    } else {
        BigInt::zero()
    }
}

/// Binomial of an arbitrary-size nonnegative top argument.
pub fn binomial_big(n: &BigInt, k: u64) -> BigInt {
    if n.is_negative() {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Number of `b`-element multisets drawn from `a` types, C(a+b-1, b).
/// `multichoose(0, 0) = 1` and `multichoose(0, b) = 0` for `b > 0`.
pub fn multichoose(a: u64, b: u64) -> BigInt {
    if a == 0 {
        return if b == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binomial(a + b - 1, b)
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Fibonacci numbers with F(0) = 0, F(1) = F(2) = 1.
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// Narayana number Y(n, j) = (1/j) C(n, j-1) C(n-1, j-1); Y(0, 0) = 1.
pub fn narayana(n: u64, j: u64) -> BigInt {
    if j == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if n == 0 || j > n {
        return BigInt::zero();
    }
    binomial(n, j - 1) * binomial(n - 1, j - 1) / BigInt::from(j)
}

/// Large Schröder number Σ_j 2^j Y(n, j).
pub fn large_schroeder(n: u64) -> BigInt {
    (0..=n).map(|j| (BigInt::one() << j) * narayana(n, j)).sum()
}

/// Base-`b` digits of `n`, least significant first; empty for zero.
pub fn digits(mut n: u64, base: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % base);
        n /= base;
    }
    out
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime(2_305_843_009_213_693_951));
        assert!(!is_prime(3_215_031_751));
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(15), vec![3, 5]);
        assert_eq!(prime_factors((1 << 32) - 1), vec![3, 5, 17, 257, 65537]);
        assert_eq!(prime_factors(600_851_475_143), vec![71, 839, 1471, 6857]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(11, 5), BigInt::from(462));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(gen_binomial(-1, 3), BigInt::from(-1));
        assert_eq!(gen_binomial(-1, 0), BigInt::one());
        assert_eq!(ext_binomial(-1, -1), BigInt::one());
        assert_eq!(ext_binomial(0, -1), BigInt::zero());
        assert_eq!(ext_binomial(-3, -5), BigInt::from(6)); // (-1)^2 C(4,2)
        assert_eq!(multichoose(0, 0), BigInt::one());
        assert_eq!(multichoose(0, 2), BigInt::zero());
        assert_eq!(multichoose(3, 2), BigInt::from(6));
    }

    #[test]
    fn classic_sequences() {
        let cat: Vec<BigInt> = (0..8).map(catalan).collect();
        assert_eq!(cat, [1, 1, 2, 5, 14, 42, 132, 429].map(BigInt::from));
        let fib: Vec<BigInt> = (0..10).map(fibonacci).collect();
        assert_eq!(fib, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34].map(BigInt::from));
        let sch: Vec<BigInt> = (0..6).map(large_schroeder).collect();
        assert_eq!(sch, [1, 2, 6, 22, 90, 394].map(BigInt::from));
        assert_eq!(narayana(4, 2), BigInt::from(6));
        assert_eq!(digits(0, 3), Vec::<u64>::new());
        assert_eq!(digits(11, 2), vec![1, 1, 0, 1]);
    }
}
