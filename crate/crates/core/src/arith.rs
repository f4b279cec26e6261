//! Small number-theoretic helpers shared across modules.

use crate::error::{Error, Result};

/// Trial-division primality test; all primes used here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn require_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotAnOddPrime { value: p });
    }
    Ok(())
}

/// True iff n = k(k+1)/2 for some k >= 0, i.e. 8n+1 is a perfect (odd) square.
pub fn is_triangular(n: u64) -> bool {
    let m = 8 * n + 1;
    let r = m.isqrt();
    r * r == m
}

/// True iff n is the square of an odd integer.
pub fn is_odd_square(n: u64) -> bool {
    let r = n.isqrt();
    r % 2 == 1 && r * r == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(require_odd_prime(7).is_ok());
        assert!(require_odd_prime(2).is_err());
        assert!(require_odd_prime(9).is_err());
    }

    #[test]
    fn triangular_numbers() {
        let tri: Vec<u64> = (0..30).filter(|&n| is_triangular(n)).collect();
        assert_eq!(tri, vec![0, 1, 3, 6, 10, 15, 21, 28]);
    }

    #[test]
    fn odd_squares() {
        let sq: Vec<u64> = (0..130).filter(|&n| is_odd_square(n)).collect();
        assert_eq!(sq, vec![1, 9, 25, 49, 81, 121]);
    }
}
