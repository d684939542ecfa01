//! Dense truncated power series with exact rational coefficients.

use num::{BigInt, BigRational, One, Zero};

/// A power series truncated at a fixed order: `coeffs[i]` is the coefficient
/// of `z^i`, and every operation is exact modulo `z^(order+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn z(order: usize) -> Self {
        Self::monomial(order, 1, BigRational::one())
    }

    pub fn monomial(order: usize, k: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(order: usize, ints: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (i, &v) in ints.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigRational::from_integer(BigInt::from(v));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Restricts or zero-extends to the given order.
    pub fn resize(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Self {
        assert!(!self.coeffs[0].is_zero(), "inverse needs a unit constant term");
        let n = self.order();
        let c0 = self.coeffs[0].recip();
        let mut inv = vec![BigRational::zero(); n + 1];
        inv[0] = c0.clone();
        for i in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[i - j];
                }
            }
            inv[i] = -acc * &c0;
        }
        TruncatedSeries { coeffs: inv }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    /// Composition `self(g)`; requires `g(0) = 0`.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(g.coeffs[0].is_zero(), "composition needs g(0) = 0");
        let n = self.order().min(g.order());
        // Horner: a_0 + g (a_1 + g (a_2 + ...)).
        let mut acc = TruncatedSeries::zero(n);
        let g = g.resize(n);
        for i in (0..=n).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] += &self.coeffs[i];
        }
        acc
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            coeffs: (1..=n)
                .map(|i| &self.coeffs[i] * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        }
    }

    /// Termwise antiderivative with zero constant term; the order rises by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.order() + 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] = c / BigRational::from_integer(BigInt::from(i + 1));
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplication by `z^k` (dropping overflowing terms).
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if i + k <= n {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        TruncatedSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ints: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_ints(ints.len() - 1, ints)
    }

    #[test]
    fn ring_operations() {
        let a = s(&[1, 2, 3]);
        let b = s(&[0, 1, 0]);
        assert_eq!(a.add(&b), s(&[1, 3, 3]));
        assert_eq!(a.mul(&b), s(&[0, 1, 2]));
        assert_eq!(a.mul(&a.inverse()), TruncatedSeries::one(2));
        assert_eq!(a.compose(&b), a);
        assert_eq!(s(&[0, 0, 1]).compose(&s(&[0, 2, 0])), s(&[0, 0, 4]));
    }

    #[test]
    fn calculus() {
        let a = s(&[5, 1, 2, 3]);
        assert_eq!(a.derivative(), s(&[1, 4, 9]));
        assert_eq!(a.derivative().integrate().add(&s(&[5, 0, 0, 0])), a);
        assert_eq!(a.shift(1), s(&[0, 5, 1, 2]));
    }
}
