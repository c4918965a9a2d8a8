//! Process-wide memoized factorials and a few exact helpers built on them.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{CountError, Result};

pub const DEFAULT_FACTORIAL_CAP: usize = 40_000;

static CAP: AtomicUsize = AtomicUsize::new(DEFAULT_FACTORIAL_CAP);
static CACHE: OnceLock<RwLock<BTreeMap<usize, Arc<BigUint>>>> = OnceLock::new();

/// Largest `n` for which [`factorial`] will compute `n!`.
pub fn factorial_cap() -> usize {
    CAP.load(Ordering::Relaxed)
}

pub fn set_factorial_cap(cap: usize) {
    CAP.store(cap, Ordering::Relaxed);
}

pub fn check_cap(n: usize) -> Result<()> {
    let cap = factorial_cap();
    if n > cap {
        Err(CountError::FactorialCap { requested: n, cap })
    } else {
        Ok(())
    }
}

/// `n!`, memoized. Values are computed from the nearest smaller cached entry.
pub fn factorial(n: usize) -> Result<Arc<BigUint>> {
    check_cap(n)?;
    let cache = CACHE.get_or_init(|| RwLock::new(BTreeMap::from([(0, Arc::new(BigUint::one()))])));
    let (base, base_value) = {
        let map = cache.read().expect("factorial cache poisoned");
        if let Some(v) = map.get(&n) {
            return Ok(Arc::clone(v));
        }
        let (&m, v) = map.range(..n).next_back().expect("0! is cached");
        (m, Arc::clone(v))
    };
    let value = Arc::new(&*base_value * range_product(base as u64 + 1, n as u64));
    cache
        .write()
        .expect("factorial cache poisoned")
        .insert(n, Arc::clone(&value));
    Ok(value)
}

/// Product of the integers in `lo..=hi`; 1 when the range is empty.
pub fn range_product(lo: u64, hi: u64) -> BigUint {
    if lo > hi {
        return BigUint::one();
    }
    if hi - lo < 16 {
        return (lo..=hi).fold(BigUint::one(), |acc, x| acc * x);
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

/// `a / b`, failing if `b` does not divide `a`.
pub fn exact_div(a: &BigUint, b: &BigUint, what: &'static str) -> Result<BigUint> {
    if b.is_zero() {
        return Err(CountError::NonIntegral(what));
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(CountError::NonIntegral(what))
    }
}

pub fn binomial(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Ok(BigUint::zero());
    }
    let k = k.min(n - k);
    let num = range_product((n - k + 1) as u64, n as u64);
    exact_div(&num, &*factorial(k)?, "binomial")
}
