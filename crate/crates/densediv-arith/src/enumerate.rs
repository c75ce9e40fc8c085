//! Depth-first enumeration of every member of a chain family up to `x`.
//!
//! The family tree is rooted at `1`; a node extends by appending a prime
//! strictly larger than any it already contains, provided the rule admits it
//! for the current value, and then by any exponent that keeps the product
//! `<= x`. Because admission only ever compares the candidate prime against
//! a bound depending on the prefix, the prime loop can stop at the first
//! rejection.
//!
//! The walk carries value, divisor sum, factor counts, and the factor list
//! incrementally, so visitors receive a complete [`MemberView`] without any
//! factorization work. Members arrive in DFS order (not sorted); the
//! collectors sort afterwards where order matters.
//!
//! A member can have at most ~9 distinct primes below the enumeration
//! budget (`2·3·5·…·23 > 10^9 / 29`), so recursion depth is trivially safe.

use rayon::prelude::*;

use crate::error::{ArithError, Result, ENUMERATION_BUDGET};
use crate::factored::FactoredInteger;
use crate::primes::PrimeTable;
use crate::theta::{ChainPrefix, ThetaRule};

/// Borrowed snapshot of a member during enumeration. The factor slice is
/// only valid for the duration of the visitor call; use [`Self::to_factored`]
/// to keep it.
#[derive(Debug, Clone, Copy)]
pub struct MemberView<'a> {
    pub value: u64,
    /// `(prime, exponent)` pairs, ascending by prime.
    pub factors: &'a [(u64, u32)],
    pub big_omega: u32,
    pub small_omega: u32,
    pub sigma: u128,
}

impl MemberView<'_> {
    /// Copy this view into an owned [`FactoredInteger`].
    pub fn to_factored(&self) -> FactoredInteger {
        FactoredInteger::from_factors(self.factors.to_vec())
            .expect("enumeration maintains valid factorizations")
    }
}

struct Walker<'a, F> {
    rule: &'a ThetaRule,
    x: u64,
    primes: &'a [u64],
    factors: Vec<(u64, u32)>,
    visit: F,
}

impl<F: FnMut(MemberView<'_>)> Walker<'_, F> {
    /// Visit every strict extension of the current node (the node itself is
    /// the caller's responsibility). `start` is the index of the first prime
    /// allowed to extend — one past the node's largest prime.
    fn extend(&mut self, value: u64, sigma: u128, big_omega: u32, small_omega: u32, start: usize) {
        for i in start..self.primes.len() {
            let p = self.primes[i];
            if value > self.x / p {
                break; // primes ascend, so no later prime fits either
            }
            let prefix = ChainPrefix {
                value,
                sigma,
                factors: &self.factors,
            };
            if !self.rule.allows_next_prime(prefix, p) {
                break; // admission bound is a single threshold on p
            }
            self.factors.push((p, 0));
            let mut child = value;
            let mut pk: u128 = 1; // p^e
            let mut geom: u128 = 1; // 1 + p + ... + p^e
            let mut e: u32 = 0;
            while child <= self.x / p {
                child *= p;
                pk *= p as u128;
                geom += pk;
                e += 1;
                let child_sigma = sigma * geom;
                *self.factors.last_mut().expect("just pushed") = (p, e);
                (self.visit)(MemberView {
                    value: child,
                    factors: &self.factors,
                    big_omega: big_omega + e,
                    small_omega: small_omega + 1,
                    sigma: child_sigma,
                });
                self.extend(child, child_sigma, big_omega + e, small_omega + 1, i + 1);
            }
            self.factors.pop();
        }
    }
}

fn check_budget(x: u64) -> Result<()> {
    if x > ENUMERATION_BUDGET {
        return Err(ArithError::EnumerationBudget {
            x,
            budget: ENUMERATION_BUDGET,
        });
    }
    Ok(())
}

fn prime_table_for(rule: &ThetaRule, x: u64) -> PrimeTable {
    PrimeTable::new(rule.max_prime_bound(x).min(x))
}

/// Call `visit` once for every member of the family `<= x`, in DFS order.
pub fn for_each_member<F: FnMut(MemberView<'_>)>(
    rule: &ThetaRule,
    x: u64,
    mut visit: F,
) -> Result<()> {
    check_budget(x)?;
    if x == 0 {
        return Ok(());
    }
    visit(MemberView {
        value: 1,
        factors: &[],
        big_omega: 0,
        small_omega: 0,
        sigma: 1,
    });
    let table = prime_table_for(rule, x);
    let mut walker = Walker {
        rule,
        x,
        primes: table.primes(),
        factors: Vec::with_capacity(16),
        visit,
    };
    walker.extend(1, 1, 0, 0, 0);
    Ok(())
}

/// All members `<= x`, ascending.
pub fn enumerate_members(rule: &ThetaRule, x: u64) -> Result<Vec<u64>> {
    let mut values = Vec::new();
    for_each_member(rule, x, |m| values.push(m.value))?;
    values.sort_unstable();
    Ok(values)
}

/// Members in `(from_exclusive, x]`, ascending — the resume path for
/// checkpointed enumeration.
pub fn enumerate_members_from(rule: &ThetaRule, x: u64, from_exclusive: u64) -> Result<Vec<u64>> {
    let mut values = Vec::new();
    for_each_member(rule, x, |m| {
        if m.value > from_exclusive {
            values.push(m.value);
        }
    })?;
    values.sort_unstable();
    Ok(values)
}

/// Number of members `<= x`.
pub fn count_members(rule: &ThetaRule, x: u64) -> Result<u64> {
    let mut count = 0u64;
    for_each_member(rule, x, |_| count += 1)?;
    Ok(count)
}

/// Number of `t`-dense integers `<= x`.
pub fn count_dense(x: u64, t: f64) -> Result<u64> {
    count_members(&ThetaRule::dense_t(t)?, x)
}

/// Fold over all members with work split across threads.
///
/// Members with at most one distinct prime are folded on the calling thread;
/// each subtree rooted at a member with exactly two distinct primes becomes
/// one parallel task. `merge` must be associative with `identity` as its
/// unit, and `fold`/`merge` must agree with the sequential fold up to
/// reassociation (exact for counts; floating accumulations may differ by
/// rounding).
pub fn par_members_fold<T, FM, FR>(
    rule: &ThetaRule,
    x: u64,
    identity: T,
    fold: FM,
    merge: FR,
) -> Result<T>
where
    T: Clone + Send + Sync,
    FM: Fn(T, MemberView<'_>) -> T + Send + Sync,
    FR: Fn(T, T) -> T + Send + Sync,
{
    check_budget(x)?;
    if x == 0 {
        return Ok(identity);
    }
    let table = prime_table_for(rule, x);
    let primes = table.primes();

    struct Seed {
        value: u64,
        sigma: u128,
        big_omega: u32,
        factors: [(u64, u32); 2],
        next_prime: usize,
    }

    // Fold the unit and every one-prime member here; bank two-prime subtree
    // roots as parallel seeds. The loops mirror `Walker::extend` restricted
    // to depth two.
    let mut shallow = fold(
        identity.clone(),
        MemberView {
            value: 1,
            factors: &[],
            big_omega: 0,
            small_omega: 0,
            sigma: 1,
        },
    );
    let mut seeds: Vec<Seed> = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        if p > x {
            break;
        }
        if !rule.allows_next_prime(ChainPrefix::unit(), p) {
            break;
        }
        let mut v1 = 1u64;
        let mut pk: u128 = 1;
        let mut geom: u128 = 1;
        let mut e1: u32 = 0;
        while v1 <= x / p {
            v1 *= p;
            pk *= p as u128;
            geom += pk;
            e1 += 1;
            let sigma1 = geom;
            let factors1 = [(p, e1)];
            shallow = fold(
                shallow,
                MemberView {
                    value: v1,
                    factors: &factors1,
                    big_omega: e1,
                    small_omega: 1,
                    sigma: sigma1,
                },
            );
            for (j, &q) in primes.iter().enumerate().skip(i + 1) {
                if v1 > x / q {
                    break;
                }
                let prefix = ChainPrefix {
                    value: v1,
                    sigma: sigma1,
                    factors: &factors1,
                };
                if !rule.allows_next_prime(prefix, q) {
                    break;
                }
                let mut v2 = v1;
                let mut qk: u128 = 1;
                let mut qgeom: u128 = 1;
                let mut e2: u32 = 0;
                while v2 <= x / q {
                    v2 *= q;
                    qk *= q as u128;
                    qgeom += qk;
                    e2 += 1;
                    seeds.push(Seed {
                        value: v2,
                        sigma: sigma1 * qgeom,
                        big_omega: e1 + e2,
                        factors: [(p, e1), (q, e2)],
                        next_prime: j + 1,
                    });
                }
            }
        }
    }

    let parallel = seeds
        .into_par_iter()
        .map(|seed| {
            let mut acc = Some(fold(
                identity.clone(),
                MemberView {
                    value: seed.value,
                    factors: &seed.factors,
                    big_omega: seed.big_omega,
                    small_omega: 2,
                    sigma: seed.sigma,
                },
            ));
            let mut walker = Walker {
                rule,
                x,
                primes,
                factors: seed.factors.to_vec(),
                visit: |m: MemberView<'_>| {
                    let prev = acc.take().expect("accumulator always present");
                    acc = Some(fold(prev, m));
                },
            };
            walker.extend(seed.value, seed.sigma, seed.big_omega, 2, seed.next_prime);
            drop(walker);
            acc.expect("accumulator always present")
        })
        .reduce(|| identity.clone(), &merge);

    Ok(merge(shallow, parallel))
}
