//! Exact number types and the constants `d_k` and `c_k`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::factorial::factorial;
use crate::series::ratio_sum;
use crate::{domain, Result};

/// `numerator / 2^exponent`, kept with an odd numerator (or zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    exponent: i64,
}

impl DyadicRational {
    pub fn new(numerator: BigInt, exponent: i64) -> Self {
        if numerator.is_zero() {
            return DyadicRational {
                numerator,
                exponent: 0,
            };
        }
        let tz = numerator.trailing_zeros().unwrap_or(0) as i64;
        DyadicRational {
            numerator: numerator >> tz,
            exponent: exponent - tz,
        }
    }

    pub fn zero() -> Self {
        DyadicRational::new(BigInt::zero(), 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        let two = BigInt::from(2);
        if self.exponent >= 0 {
            BigRational::new(self.numerator.clone(), two.pow(self.exponent as u32))
        } else {
            BigRational::from_integer(&self.numerator * two.pow((-self.exponent) as u32))
        }
    }

    /// Multiplies by an integer, returning an integer if the result is one.
    pub fn mul_integer(&self, factor: &BigUint) -> DyadicRational {
        DyadicRational::new(&self.numerator * BigInt::from(factor.clone()), self.exponent)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        (self.exponent <= 0).then(|| &self.numerator << (-self.exponent) as usize)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent <= 0 {
            write!(f, "{}", &self.numerator << (-self.exponent) as usize)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

/// Exact `q` or `q·√2` for rational `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalConstant {
    pub rational: BigRational,
    pub times_sqrt2: bool,
}

impl RadicalConstant {
    pub fn to_f64(&self) -> f64 {
        let q = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.times_sqrt2 {
            q * std::f64::consts::SQRT_2
        } else {
            q
        }
    }

    pub fn ln(&self) -> f64 {
        let q = ln_rational(&self.rational);
        if self.times_sqrt2 {
            q + 0.5 * std::f64::consts::LN_2
        } else {
            q
        }
    }
}

impl fmt::Display for RadicalConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.rational.numer(), self.rational.denom());
        match (self.times_sqrt2, d.is_one()) {
            (false, _) => write!(f, "{}", self.rational),
            (true, true) if n.is_one() => f.write_str("√2"),
            (true, true) => write!(f, "{n}√2"),
            (true, false) if n.is_one() => write!(f, "√2/{d}"),
            (true, false) => write!(f, "{n}√2/{d}"),
        }
    }
}

fn ln_rational(q: &BigRational) -> f64 {
    crate::asymptotics::ln_biguint(q.numer().magnitude()) - crate::asymptotics::ln_biguint(q.denom().magnitude())
}

/// Non-negative fraction that is never reduced, for values whose gcd would
/// be expensive to compute.
#[derive(Clone, Debug)]
pub struct ExactRatio {
    pub numer: BigUint,
    pub denom: BigUint,
}

impl ExactRatio {
    pub fn new(numer: BigUint, denom: BigUint) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        ExactRatio { numer, denom }
    }

    pub fn to_big_rational(&self) -> BigRational {
        BigRational::new(self.numer.clone().into(), self.denom.clone().into())
    }

    /// Compares against a non-negative rational by cross multiplication.
    pub fn cmp_rational(&self, other: &BigRational) -> Ordering {
        assert!(other.numer().sign() != Sign::Minus, "negative comparand");
        let lhs = &self.numer * other.denom().magnitude();
        let rhs = other.numer().magnitude() * &self.denom;
        lhs.cmp(&rhs)
    }

    pub fn to_f64(&self) -> f64 {
        if self.numer.is_zero() {
            return 0.0;
        }
        // scale so the integer quotient carries about 64 significant bits
        let shift = self.denom.bits() as i64 - self.numer.bits() as i64 + 64;
        let q = if shift >= 0 {
            (&self.numer << shift as usize) / &self.denom
        } else {
            &self.numer / (&self.denom << (-shift) as usize)
        };
        q.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-shift as i32)
    }
}

impl PartialEq for ExactRatio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExactRatio {}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

/// `Σ_{j=0}^{terms_to} (2j+k-1)! / (j! (j+k)!) · 4^{-j}`, exactly.
pub fn d_partial(k: usize, terms_to: usize) -> Result<ExactRatio> {
    if k == 0 {
        return domain("d_partial needs k >= 1");
    }
    // t_0 = 1/k and t_{j+1}/t_j = (2j+k)(2j+k+1) / (4 (j+1)(j+k+1))
    let p = |j: usize| BigUint::from(((2 * j + k) as u128) * ((2 * j + k + 1) as u128));
    let q = |j: usize| BigUint::from(4 * ((j + 1) as u128) * ((j + k + 1) as u128));
    let (num, den) = ratio_sum(terms_to + 1, &p, &q);
    Ok(ExactRatio::new(num, den * k))
}

/// The limit of [`d_partial`]: `2^k / k`.
pub fn d_closed(k: usize) -> Result<RadicalConstant> {
    if k == 0 {
        return domain("d_closed needs k >= 1");
    }
    Ok(RadicalConstant {
        rational: BigRational::new(BigInt::one() << k, BigInt::from(k)),
        times_sqrt2: false,
    })
}

/// The leading constant `2^{k-1} √2 / k!`.
pub fn c_constant(k: usize) -> Result<RadicalConstant> {
    let kf = BigInt::from((*factorial(k)?).clone());
    let rational = if k == 0 {
        BigRational::new(BigInt::one(), BigInt::from(2))
    } else {
        BigRational::new(BigInt::one() << (k - 1), kf)
    };
    Ok(RadicalConstant {
        rational,
        times_sqrt2: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Independent term-by-term evaluation with binomials.
    fn d_naive(k: usize, terms_to: usize) -> BigRational {
        let mut sum = BigRational::zero();
        for j in 0..=terms_to {
            let num = (*factorial(2 * j + k - 1).unwrap()).clone();
            let den = &*factorial(j).unwrap() * &*factorial(j + k).unwrap() * (BigUint::one() << (2 * j));
            sum += BigRational::new(num.into(), den.into());
        }
        sum
    }

    #[test]
    fn d_partial_examples() {
        assert_eq!(d_partial(1, 0).unwrap().to_big_rational(), q(1, 1));
        assert_eq!(d_partial(2, 0).unwrap().to_big_rational(), q(1, 2));
        assert_eq!(d_partial(1, 2).unwrap().to_big_rational(), q(11, 8));
        assert!(d_partial(0, 3).is_err());
    }

    #[test]
    fn d_partial_matches_naive_sum() {
        for k in 1..=6 {
            for j in [0, 1, 5, 17, 40] {
                assert_eq!(d_partial(k, j).unwrap().to_big_rational(), d_naive(k, j), "k={k} J={j}");
            }
        }
    }

    #[test]
    fn d_closed_values() {
        assert_eq!(d_closed(1).unwrap().rational, q(2, 1));
        assert_eq!(d_closed(2).unwrap().rational, q(2, 1));
        assert_eq!(d_closed(3).unwrap().rational, q(8, 3));
        assert!(!d_closed(3).unwrap().times_sqrt2);
    }

    #[test]
    fn c_constant_table() {
        let expect = [(0, q(1, 2)), (1, q(1, 1)), (2, q(1, 1)), (3, q(2, 3))];
        for (k, r) in expect {
            let c = c_constant(k).unwrap();
            assert!(c.times_sqrt2);
            assert_eq!(c.rational, r, "k={k}");
        }
        assert_eq!(c_constant(0).unwrap().to_string(), "√2/2");
        assert_eq!(c_constant(3).unwrap().to_string(), "2√2/3");
    }

    #[test]
    fn dyadic_normalizes() {
        let d = DyadicRational::new(BigInt::from(12), 5);
        assert_eq!((d.numerator().clone(), d.exponent()), (BigInt::from(3), 3));
        assert_eq!(d.to_rational(), q(3, 8));
        assert_eq!(DyadicRational::new(BigInt::from(3), -2).to_integer(), Some(BigInt::from(12)));
        assert_eq!(DyadicRational::new(BigInt::zero(), 7), DyadicRational::zero());
    }

    #[test]
    fn exact_ratio_order_and_float() {
        let a = ExactRatio::new(BigUint::from(2u32), BigUint::from(4u32));
        let b = ExactRatio::new(BigUint::from(1u32), BigUint::from(2u32));
        assert_eq!(a, b);
        assert_eq!(a.cmp_rational(&q(2, 3)), Ordering::Less);
        assert!((ExactRatio::new(BigUint::from(1u32), BigUint::from(3u32)).to_f64() - 1.0 / 3.0).abs() < 1e-16);
    }
}
