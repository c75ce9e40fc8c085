//! Integers carried together with their full prime factorization.
//!
//! [`FactoredInteger`] is the unit of data every family operation consumes:
//! it knows its factor list (ascending primes, positive exponents) and both
//! prime-factor counts Ω (with multiplicity) and ω (distinct). Construction
//! always validates the invariants, so downstream code can rely on them.
//!
//! `factorize` is total on `1..=u64::MAX`: trial division by small primes,
//! then deterministic Miller–Rabin plus Brent's variant of Pollard's rho for
//! whatever survives. This is plumbing for oracles and single values, not a
//! bulk factorization engine — enumeration and sieves never call it in hot
//! loops.

use crate::error::{ArithError, Result, DIVISOR_CAP};
use crate::primes::is_prime_u64;

/// An integer `value >= 1` with its prime factorization and factor counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    value: u64,
    /// `(prime, exponent)` pairs, primes strictly ascending, exponents >= 1.
    factors: Vec<(u64, u32)>,
    big_omega: u32,
    small_omega: u32,
}

impl FactoredInteger {
    /// The unit, with an empty factor list.
    pub fn one() -> Self {
        Self {
            value: 1,
            factors: Vec::new(),
            big_omega: 0,
            small_omega: 0,
        }
    }

    /// Build from a factor list, validating all structural invariants:
    /// primes strictly ascending and actually prime, exponents >= 1, and the
    /// product reconstructing a nonzero `u64`.
    pub fn from_factors(factors: Vec<(u64, u32)>) -> Result<Self> {
        let mut value: u64 = 1;
        let mut last = 0u64;
        let mut big: u32 = 0;
        for &(p, e) in &factors {
            if p <= last || !is_prime_u64(p) || e == 0 {
                return Err(ArithError::Domain {
                    msg: format!("invalid factor list entry ({p}, {e})"),
                });
            }
            last = p;
            big += e;
            for _ in 0..e {
                value = value.checked_mul(p).ok_or_else(|| ArithError::Domain {
                    msg: "factor product overflows u64".into(),
                })?;
            }
        }
        let small = factors.len() as u32;
        Ok(Self {
            value,
            factors,
            big_omega: big,
            small_omega: small,
        })
    }

    /// The integer itself.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs, ascending by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Ω: number of prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.big_omega
    }

    /// ω: number of distinct prime factors.
    pub fn small_omega(&self) -> u32 {
        self.small_omega
    }

    /// Sum of divisors σ(n), exact in `u128`.
    pub fn sigma(&self) -> u128 {
        let mut s: u128 = 1;
        for &(p, e) in &self.factors {
            let mut term: u128 = 1;
            let mut pk: u128 = 1;
            for _ in 0..e {
                pk *= p as u128;
                term += pk;
            }
            s *= term;
        }
        s
    }

    /// Divisor count τ(n).
    pub fn tau(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// All divisors, strictly ascending. Errors once τ(n) exceeds
    /// [`DIVISOR_CAP`] — the list oracles are not meant for such inputs.
    pub fn divisors_sorted(&self) -> Result<Vec<u64>> {
        let tau = self.tau();
        if tau > DIVISOR_CAP {
            return Err(ArithError::DivisorCapExceeded {
                n: self.value,
                tau,
                cap: DIVISOR_CAP,
            });
        }
        let mut divs: Vec<u64> = vec![1];
        for &(p, e) in &self.factors {
            let prev_len = divs.len();
            let mut pk: u64 = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..prev_len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        Ok(divs)
    }

    /// Largest ratio between consecutive sorted divisors, selected by exact
    /// rational comparison and returned as the floating quotient.
    ///
    /// Undefined for `n = 1` (one divisor, no consecutive pair).
    pub fn max_divisor_ratio(&self) -> Result<f64> {
        if self.value == 1 {
            return Err(ArithError::SingleDivisor);
        }
        let divs = self.divisors_sorted()?;
        // Track the champion ratio as an exact fraction: b/a > d/c iff b*c > d*a.
        let (mut num, mut den) = (divs[1], divs[0]);
        for w in divs.windows(2).skip(1) {
            let (a, b) = (w[0], w[1]);
            if (b as u128) * (den as u128) > (num as u128) * (a as u128) {
                num = b;
                den = a;
            }
        }
        Ok(num as f64 / den as f64)
    }
}

/// Factor an arbitrary integer `n >= 1`.
pub fn factorize(n: u64) -> FactoredInteger {
    if n == 1 {
        return FactoredInteger::one();
    }
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if p * p > rest {
            break;
        }
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    if rest > 1 {
        if rest < 47 * 47 || is_prime_u64(rest) {
            bump(&mut factors, rest);
        } else {
            let mut stack = vec![rest];
            while let Some(m) = stack.pop() {
                if is_prime_u64(m) {
                    bump(&mut factors, m);
                    continue;
                }
                let d = pollard_rho(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
    }
    factors.sort_unstable_by_key(|&(p, _)| p);
    // Merge duplicates produced by repeated rho splits of equal primes.
    let mut merged: Vec<(u64, u32)> = Vec::with_capacity(factors.len());
    for (p, e) in factors {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    FactoredInteger::from_factors(merged).expect("factorize produces a valid factorization")
}

fn bump(factors: &mut Vec<(u64, u32)>, p: u64) {
    factors.push((p, 1));
}

/// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd `n`
/// (not necessarily prime).
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c: u64 = 1;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        let mut count = 0u32;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
            count += 1;
            if count > 1 << 22 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1; // cycle degenerated; retry with a different polynomial
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
