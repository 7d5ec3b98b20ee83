//! Integer polynomials in one variable `t`, used for Poincaré polynomials.

use std::fmt;
use std::ops::Add;

/// Coefficient list over non-negative degrees, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![1])
    }

    pub fn monomial(coeff: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * x + c)
    }

    /// coeff(i) == coeff(deg - i) for all i.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { "-" } else { "+" })?;
            }
            let a = c.abs();
            match (a, d) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{d}")?,
                (_, 1) => write!(f, "{a}t")?,
                (_, _) => write!(f, "{a}t^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_compares_coefficientwise() {
        assert_eq!(
            IntPolynomial::from_coeffs(vec![1, 0, 2, 0, 0]),
            IntPolynomial::from_coeffs(vec![1, 0, 2])
        );
        assert_eq!(IntPolynomial::from_coeffs(vec![0, 0]), IntPolynomial::zero());
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_coeffs(vec![1, 0, 0, 5, 5]).to_string(), "1+5t^3+5t^4");
        assert_eq!(IntPolynomial::one().to_string(), "1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_coeffs(vec![0, 1]).to_string(), "t");
    }

    #[test]
    fn eval_and_palindrome() {
        let p = IntPolynomial::from_coeffs(vec![1, 0, 0, 2, 0, 0, 1]);
        assert_eq!(p.eval(-1), 0);
        assert_eq!(p.eval(1), 4);
        assert!(p.is_palindromic());
        assert!(!IntPolynomial::from_coeffs(vec![1, 2]).is_palindromic());
    }
}
