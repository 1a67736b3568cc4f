//! The Weyl dimension formula for `GL_n`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

/// `∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i)`.
pub fn weyl_dim(lambda: &[i64]) -> u64 {
    let n = lambda.len();
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for i in 0..n {
        for j in i + 1..n {
            num *= lambda[i] - lambda[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    (num / den).to_u64().expect("dimension fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dim(&[0, 0, 0, 0]), 1);
        for n in 1..6 {
            let mut v = vec![0; n];
            v[0] = 1;
            assert_eq!(weyl_dim(&v), n as u64);
        }
        assert_eq!(weyl_dim(&[2, 1, 0]), 8);
        assert_eq!(weyl_dim(&[1, 1, 0, 0]), 6);
    }
}
