use crate::elliptic::EllipticInvariants;
use crate::numerics::Polynomial;
use crate::real::{real, Real};

/// Function on the elliptic curve of the form `even(p0) + p1·odd(p0)` with
/// `p0 = ℘(x)`, `p1 = ℘'(x)`. Products reduce through
/// `p1² = Q(p0) = 4p0³ − g2 p0 − g3` and the x-derivative acts as
/// `d/dx (U + p1 V) = (Q'/2·V + Q·V') + p1·U'`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoly<T> {
    pub even: Polynomial<T>,
    pub odd: Polynomial<T>,
    inv: EllipticInvariants<T>,
}

impl<T: Real> CurvePoly<T> {
    pub fn new(even: Polynomial<T>, odd: Polynomial<T>, inv: EllipticInvariants<T>) -> Self {
        Self { even, odd, inv }
    }

    pub fn from_even(even: Polynomial<T>, inv: EllipticInvariants<T>) -> Self {
        Self::new(even, Polynomial::zero(), inv)
    }

    pub fn from_odd(odd: Polynomial<T>, inv: EllipticInvariants<T>) -> Self {
        Self::new(Polynomial::zero(), odd, inv)
    }

    /// `Q(t) = 4t³ − g2·t − g3`.
    pub fn q_poly(inv: &EllipticInvariants<T>) -> Polynomial<T> {
        Polynomial::new(vec![-inv.g3(), -inv.g2(), T::zero(), real(4.0)])
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.even + &other.even, &self.odd + &other.odd, self.inv)
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.even.scale(s), self.odd.scale(s), self.inv)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let q = Self::q_poly(&self.inv);
        let even = &(&self.even * &other.even) + &(&q * &(&self.odd * &other.odd));
        let odd = &(&self.even * &other.odd) + &(&self.odd * &other.even);
        Self::new(even, odd, self.inv)
    }

    /// d/dx along the curve.
    pub fn derivative(&self) -> Self {
        let q = Self::q_poly(&self.inv);
        let half_qp = q.derivative().scale(real(0.5)); // 6t² − g2/2
        let even = &(&half_qp * &self.odd) + &(&q * &self.odd.derivative());
        Self::new(even, self.even.derivative(), self.inv)
    }

    /// Maximum |coefficient| over both parts.
    pub fn max_abs_coeff(&self) -> T {
        self.even.max_abs_coeff().max(self.odd.max_abs_coeff())
    }
}
