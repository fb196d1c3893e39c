use std::ops::{Add, Mul, Neg, Sub};

use crate::real::Real;

/// Dense univariate polynomial, coefficients stored low-to-high:
/// `coeffs[i]` multiplies `t^i`. The zero polynomial has an empty
/// coefficient vector and degree −1.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Real> Polynomial<T> {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros so the reported degree is the highest nonzero index.
    pub fn new(coeffs: impl Into<Vec<T>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t`.
    pub fn identity() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with −1 as the zero-polynomial sentinel.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).copied().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * t + c)
    }

    /// Formal derivative; degree drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * T::from_usize(i).unwrap())
            .collect::<Vec<_>>();
        Self::new(coeffs)
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect::<Vec<_>>())
    }

    /// Composition with an affine map: returns `p(a·t + b)`.
    pub fn compose_affine(&self, a: T, b: T) -> Self {
        let mut result = Self::zero();
        for &c in self.coeffs.iter().rev() {
            result = &(&result * &Self::new(vec![b, a])) + &Self::constant(c);
        }
        result
    }

    pub fn max_abs_coeff(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, &c| acc.max(c.abs()))
    }
}

impl<T: Real> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect::<Vec<_>>();
        Polynomial::new(coeffs)
    }
}

impl<T: Real> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect::<Vec<_>>();
        Polynomial::new(coeffs)
    }
}

impl<T: Real> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j] + a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Real> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        self.scale(-T::one())
    }
}
