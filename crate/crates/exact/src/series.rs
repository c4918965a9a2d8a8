//! Exact partial sums of hypergeometric-type series by binary splitting.

use num_bigint::BigUint;
use num_traits::One;

/// `Σ_{j=0}^{len-1} Π_{i<j} p(i)/q(i)` as an unreduced fraction `(num, den)`.
///
/// `p` and `q` are only evaluated on `0..len-1`, so ratios that would vanish
/// past the last term never enter the denominator.
pub(crate) fn ratio_sum<P, Q>(len: usize, p: &P, q: &Q) -> (BigUint, BigUint)
where
    P: Fn(usize) -> BigUint,
    Q: Fn(usize) -> BigUint,
{
    assert!(len >= 1, "ratio_sum needs at least one term");
    let s = split(0, len, p, q);
    (s.sum, s.den)
}

struct Split {
    // products of p and q over the ratios strictly inside the range
    num: BigUint,
    den: BigUint,
    // the range's partial sum scaled by `den`
    sum: BigUint,
}

fn split<P, Q>(a: usize, b: usize, p: &P, q: &Q) -> Split
where
    P: Fn(usize) -> BigUint,
    Q: Fn(usize) -> BigUint,
{
    if b - a == 1 {
        return Split {
            num: BigUint::one(),
            den: BigUint::one(),
            sum: BigUint::one(),
        };
    }
    let c = a + (b - a) / 2;
    let left = split(a, c, p, q);
    let right = split(c, b, p, q);
    let pc = p(c - 1);
    let qc = q(c - 1);
    let left_num = left.num * &pc;
    let left_den = left.den * &qc;
    Split {
        sum: left.sum * &qc * &right.den + &left_num * &right.sum,
        num: left_num * right.num,
        den: left_den * right.den,
    }
}
