use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `⌈(4·c·r)^(1/eps)⌉`, exactly.
///
/// With `4cr = a/b` and `eps = p/q` this is the least `m` with
/// `m^p · b^q >= a^q`.
pub fn local_ramsey_upper_bound(c_density: Ratio<u64>, eps: Ratio<u64>, r: u64) -> Result<BigUint> {
    if c_density.is_zero() || eps.is_zero() || eps > Ratio::one() || r == 0 {
        return Err(Error::BadParams(format!(
            "need c > 0, 0 < eps <= 1, r >= 1; got c = {c_density}, eps = {eps}, r = {r}"
        )));
    }
    let x = Ratio::new(
        BigUint::from(4u8) * BigUint::from(r) * BigUint::from(*c_density.numer()),
        BigUint::from(*c_density.denom()),
    );
    let (a, b) = (x.numer().clone(), x.denom().clone());
    let (p, q) = (*eps.numer() as u32, *eps.denom() as u32);
    let target = a.pow(q);
    let scale = b.pow(q);
    let reaches = |m: &BigUint| m.pow(p) * &scale >= target;
    // (a/b)^(q/p) <= ceil(a/b)^q since q/p >= 1.
    let mut hi = ((&a + &b - 1u8) / &b).max(BigUint::one()).pow(q);
    let mut lo = BigUint::zero();
    while lo < hi {
        let mid = (&lo + &hi) >> 1;
        if reaches(&mid) {
            hi = mid;
        } else {
            lo = mid + 1u8;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound(c: (u64, u64), eps: (u64, u64), r: u64) -> BigUint {
        local_ramsey_upper_bound(Ratio::new(c.0, c.1), Ratio::new(eps.0, eps.1), r).unwrap()
    }

    #[test]
    fn examples() {
        // c = l/2 with l = 4, eps = 1: the bound is 2·l·r.
        assert_eq!(bound((2, 1), (1, 1), 2), BigUint::from(16u8));
        assert_eq!(bound((1, 1), (1, 1), 1), BigUint::from(4u8));
        assert_eq!(bound((1, 4), (1, 2), 1), BigUint::from(1u8));
        // (4·1·1)^(3/2) = 8
        assert_eq!(bound((1, 1), (2, 3), 1), BigUint::from(8u8));
        // (4·1/3)^2 = 16/9, ceiling 2
        assert_eq!(bound((1, 3), (1, 2), 1), BigUint::from(2u8));
    }

    #[test]
    fn bad_params() {
        assert!(local_ramsey_upper_bound(Ratio::new(0, 1), Ratio::new(1, 1), 1).is_err());
        assert!(local_ramsey_upper_bound(Ratio::new(1, 1), Ratio::new(3, 2), 1).is_err());
        assert!(local_ramsey_upper_bound(Ratio::new(1, 1), Ratio::new(1, 1), 0).is_err());
    }
}
