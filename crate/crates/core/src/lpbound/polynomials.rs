use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::binomial;

/// Krawtchouk polynomial `K_k(i) = Σ_r (-1)^r C(i,r) C(n-i,k-r)`.
pub fn krawtchouk(n: usize, k: usize, i: usize) -> Result<BigInt> {
    if k > n || i > n {
        return Err(Error::OutOfRange(format!(
            "krawtchouk(n={n}, k={k}, i={i})"
        )));
    }
    let (n, k, i) = (n as i64, k as i64, i as i64);
    let mut s = BigInt::zero();
    for r in 0..=k {
        let term = binomial(i, r) * binomial(n - i, k - r);
        if r % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    Ok(s)
}

/// Eberlein polynomial `E_k(j) = Σ_r (-1)^r C(j,r) C(w-j,k-r) C(n-w-j,k-r)`,
/// with `0 <= k, j <= min(w, n-w)`.
pub fn eberlein(n: usize, w: usize, k: usize, j: usize) -> Result<BigInt> {
    if w > n || w == 0 {
        return Err(Error::OutOfRange(format!(
            "eberlein weight {w} for length {n}"
        )));
    }
    let m = w.min(n - w);
    if k > m || j > m {
        return Err(Error::OutOfRange(format!(
            "eberlein(n={n}, w={w}, k={k}, j={j})"
        )));
    }
    let (n, w, k, j) = (n as i64, w as i64, k as i64, j as i64);
    let mut s = BigInt::zero();
    for r in 0..=k {
        let term = binomial(j, r) * binomial(w - j, k - r) * binomial(n - w - j, k - r);
        if r % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn krawtchouk_edges() {
        for n in 1..10usize {
            for i in 0..=n {
                assert_eq!(krawtchouk(n, 0, i).unwrap(), BigInt::from(1));
                assert_eq!(
                    krawtchouk(n, 1, i).unwrap(),
                    BigInt::from(n as i64 - 2 * i as i64)
                );
            }
            for k in 0..=n {
                assert_eq!(krawtchouk(n, k, 0).unwrap(), binomial(n as i64, k as i64));
            }
        }
        assert!(krawtchouk(4, 5, 0).is_err());
    }

    #[test]
    fn eberlein_edges() {
        let (n, w) = (12usize, 5usize);
        for j in 0..=5 {
            assert_eq!(eberlein(n, w, 0, j).unwrap(), BigInt::from(1));
        }
        for k in 0..=5 {
            assert_eq!(
                eberlein(n, w, k, 0).unwrap(),
                binomial(5, k as i64) * binomial(7, k as i64)
            );
        }
        assert!(eberlein(12, 5, 6, 0).is_err());
        assert!(eberlein(12, 0, 0, 0).is_err());
    }
}
