//! Prime generation and primality testing.
//!
//! Two tools cover every need of the crate:
//!
//! 1. a plain sieve of Eratosthenes (odd-only bit array) producing all primes
//!    up to a limit, wrapped in a growable [`PrimeTable`];
//! 2. a deterministic Miller–Rabin test for arbitrary `u64` values, using the
//!    witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which is known
//!    to be exact for all n < 3.3·10^24 (Sorenson–Webster).

/// All primes `<= limit`, ascending.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    // Odd-only sieve: bit i represents 2i + 1 (i >= 1).
    let half = (limit as usize + 1) / 2;
    let mut composite = vec![false; half];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(est_prime_count(limit));
    primes.push(2);
    for i in 1..half {
        if !composite[i] {
            primes.push(2 * i as u64 + 1);
        }
    }
    primes
}

/// Rough overestimate of pi(limit) for preallocation.
fn est_prime_count(limit: u64) -> usize {
    if limit < 17 {
        8
    } else {
        let x = limit as f64;
        (x / (x.ln() - 1.2)) as usize + 16
    }
}

/// A sorted prime list that can grow on demand.
///
/// `ensure` re-sieves from scratch when asked beyond the current limit; the
/// enumeration code computes its worst-case prime bound up front, so regrowth
/// is rare and the simplicity is worth more than incremental sieving.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    primes: Vec<u64>,
    limit: u64,
}

impl PrimeTable {
    /// Table of all primes `<= limit`.
    pub fn new(limit: u64) -> Self {
        Self {
            primes: sieve_primes(limit),
            limit,
        }
    }

    /// Largest value the table is complete up to.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes in the table, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Grow the table (if needed) so it is complete up to `limit`.
    pub fn ensure(&mut self, limit: u64) {
        if limit > self.limit {
            self.primes = sieve_primes(limit);
            self.limit = limit;
        }
    }

    /// Index of the first prime `> value`.
    pub fn first_index_above(&self, value: u64) -> usize {
        self.primes.partition_point(|&p| p <= value)
    }
}

/// Deterministic primality test for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // n is odd and > 37 here; write n - 1 = d * 2^s.
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sieve() {
        assert_eq!(sieve_primes(1), Vec::<u64>::new());
        assert_eq!(sieve_primes(2), vec![2]);
        assert_eq!(sieve_primes(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn sieve_counts() {
        // pi(10^4) = 1229, pi(10^6) = 78498.
        assert_eq!(sieve_primes(10_000).len(), 1229);
        assert_eq!(sieve_primes(1_000_000).len(), 78_498);
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let primes = sieve_primes(20_000);
        let mut idx = 0;
        for n in 0..=20_000u64 {
            let in_sieve = idx < primes.len() && primes[idx] == n;
            if in_sieve {
                idx += 1;
            }
            assert_eq!(is_prime_u64(n), in_sieve, "disagreement at {n}");
        }
    }

    #[test]
    fn miller_rabin_large() {
        assert!(is_prime_u64(2_147_483_647)); // 2^31 - 1
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime_u64(18_446_744_073_709_551_615)); // 2^64 - 1 = 3*5*17*257*641*65537*6700417
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn table_grows() {
        let mut t = PrimeTable::new(10);
        assert_eq!(t.primes().len(), 4);
        t.ensure(30);
        assert_eq!(t.primes().len(), 10);
        assert_eq!(t.first_index_above(7), 4);
        assert_eq!(t.first_index_above(1), 0);
    }
}
