//! Closed-form counts: phylogenetic trees, one-component networks, star
//! networks (two independent routes), and the sum behind their asymptotics.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::constants::DyadicRational;
use crate::factorial::{binomial, check_cap, exact_div, factorial, range_product};
use crate::series::ratio_sum;
use crate::{domain, CountError, Result};

/// Test-only fault injection used to check that verification notices a
/// broken formula.
#[doc(hidden)]
pub mod fault {
    use std::sync::atomic::{AtomicBool, Ordering};

    static STAR_OFF_BY_ONE: AtomicBool = AtomicBool::new(false);

    /// Makes [`star_count`](super::star_count) use `2^(ℓ-2)` in its prefactor.
    pub fn set_star_count_off_by_one(on: bool) {
        STAR_OFF_BY_ONE.store(on, Ordering::SeqCst);
    }

    pub(crate) fn star_count_off_by_one() -> bool {
        STAR_OFF_BY_ONE.load(Ordering::SeqCst)
    }
}

/// `(2ℓ-3)!!`, the number of rooted binary phylogenetic trees on `ℓ` leaves.
pub fn phylo_tree_count(leaves: usize) -> Result<BigUint> {
    if leaves == 0 {
        return domain("leaves must be >= 1");
    }
    let mut acc = BigUint::one();
    let mut odd = 3u64;
    while odd + 3 <= 2 * leaves as u64 {
        acc *= odd;
        odd += 2;
    }
    Ok(acc)
}

/// `(2ℓ-2)! / (2^(ℓ-1) (ℓ-k-1)!)`: one-component tree-child networks whose
/// reticulation leaves carry the labels `1..k`.
pub fn one_component_count(leaves: usize, reticulations: usize) -> Result<BigUint> {
    if leaves == 0 {
        return domain("leaves must be >= 1");
    }
    if reticulations >= leaves {
        return domain("k must be < leaves");
    }
    check_cap(2 * leaves - 2)?;
    // (2ℓ-2)!/(ℓ-k-1)! as a plain range product
    let top = range_product((leaves - reticulations) as u64, (2 * leaves - 2) as u64);
    let den = BigUint::one() << (leaves - 1);
    exact_div(&top, &den, "one-component count")
}

/// `[z^n] T(z)^k` for `T = 1 - sqrt(1 - 2z)`, which is
/// `(k/n) 2^(k-n) C(2n-k-1, n-k)`.
pub fn tree_power_coeff(n: usize, k: usize) -> Result<DyadicRational> {
    if n == 0 || k == 0 {
        return domain("tree_power_coeff needs n >= 1 and k >= 1");
    }
    if k > n {
        return Ok(DyadicRational::zero());
    }
    let c = binomial(2 * n - k - 1, n - k)?;
    let num = exact_div(&(c * k), &BigUint::from(n), "tree power coefficient")?;
    Ok(DyadicRational::new(BigInt::from(num), (n - k) as i64))
}

/// Networks on `ℓ` leaves whose component graph is the star with `k` leaves.
/// Zero when `ℓ <= k`.
pub fn star_count(leaves: usize, reticulations: usize) -> Result<BigUint> {
    let shift = if fault::star_count_off_by_one() { 1 } else { 0 };
    star_count_with_shift(leaves, reticulations, shift)
}

fn star_count_with_shift(leaves: usize, k: usize, shift: usize) -> Result<BigUint> {
    if k == 0 {
        return domain("k must be >= 1; use phylo_tree_count for trees");
    }
    if leaves <= k {
        return Ok(BigUint::zero());
    }
    let l = leaves;
    check_cap(2 * l)?;
    // Terms A_j = (2j+2k-2)!/(j!(j-1)!) · (2ℓ-2j-k-1)!/((ℓ-j-k)!(ℓ-j)!) for
    // j = 1..ℓ-k; with i = j-1 the ratio A_{i+2}/A_{i+1} is p(i)/q(i).
    let (lu, ku) = (l as u128, k as u128);
    let p = |i: usize| {
        let i = i as u128;
        BigUint::from((2 * i + 2 * ku + 2) * (2 * i + 2 * ku + 1)) * BigUint::from((lu - i - 1 - ku) * (lu - i - 1))
    };
    let q = |i: usize| {
        let i = i as u128;
        BigUint::from((i + 2) * (i + 1)) * BigUint::from((2 * lu - 2 * i - ku - 3) * (2 * lu - 2 * i - ku - 4))
    };
    let (sum, den) = ratio_sum(l - k, &p, &q);
    let num = &*factorial(l)? * &*factorial(2 * k)? * &*factorial(2 * l - k - 3)? * sum;
    let den = (&*factorial(k - 1)? * &*factorial(l - k - 1)? * &*factorial(l - 1)? * den) << (l - 1 - shift);
    exact_div(&num, &den, "star count")
}

/// [`star_count`] by the convolution of one-component counts with the
/// coefficients of `T(z)^k`. Slower; used as an independent check.
pub fn star_count_convolution(leaves: usize, reticulations: usize) -> Result<BigUint> {
    let (l, k) = (leaves, reticulations);
    if k == 0 {
        return domain("k must be >= 1; use phylo_tree_count for trees");
    }
    if l <= k {
        return Ok(BigUint::zero());
    }
    let kf = BigInt::from((*factorial(k)?).clone());
    let mut total = BigRational::zero();
    for j in 1..=l - k {
        let weight = binomial(l, j)? * one_component_count(j + k, k)? * &*factorial(l - j)?;
        let coeff = tree_power_coeff(l - j, k)?.to_rational();
        total += coeff * BigRational::from_integer(BigInt::from(weight));
    }
    total /= BigRational::from_integer(kf);
    if !total.is_integer() {
        return Err(CountError::NonIntegral("star count convolution"));
    }
    Ok(total.to_integer().magnitude().clone())
}

/// Exact `TC_{ℓ,1}`: with one reticulation the star is the only component
/// graph.
pub fn tc_exact_k_one(leaves: usize) -> Result<BigUint> {
    if leaves < 2 {
        return domain("k must be < leaves");
    }
    star_count(leaves, 1)
}

/// `Σ_{j=0}^{ℓ-k-1} (2ℓ-2j-2)!/((ℓ-j-k)!(ℓ-j-k-1)!) · (2j+k-1)!/(j!(j+k)!)`.
///
/// The star count equals `ℓ!/(2^(ℓ-1)(k-1)!)` times this sum.
pub fn sigma_sum(leaves: usize, reticulations: usize) -> Result<BigUint> {
    let (l, k) = (leaves, reticulations);
    if k == 0 {
        return domain("k must be >= 1");
    }
    if l <= k {
        return Ok(BigUint::zero());
    }
    check_cap(2 * l)?;
    let (lu, ku) = (l as u128, k as u128);
    let p = |j: usize| {
        let j = j as u128;
        BigUint::from((lu - j - ku) * (lu - j - ku - 1)) * BigUint::from((2 * j + ku) * (2 * j + ku + 1))
    };
    let q = |j: usize| {
        let j = j as u128;
        BigUint::from((2 * lu - 2 * j - 2) * (2 * lu - 2 * j - 3)) * BigUint::from((j + 1) * (j + ku + 1))
    };
    let (sum, den) = ratio_sum(l - k, &p, &q);
    let num = &*factorial(2 * l - 2)? * sum;
    let den = &*factorial(l - k)? * &*factorial(l - k - 1)? * den * k;
    exact_div(&num, &den, "sigma sum")
}
