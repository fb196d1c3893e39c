use crate::real::{real, Real};

/// Value and derivatives of a scalar function at a point, up to order 4.
/// `len = order + 1` entries are valid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T> {
    vals: [T; 5],
    len: usize,
}

impl<T: Real> Jet<T> {
    pub fn from_slice(vals: &[T]) -> Self {
        assert!(!vals.is_empty() && vals.len() <= 5);
        let mut a = [T::zero(); 5];
        a[..vals.len()].copy_from_slice(vals);
        Self {
            vals: a,
            len: vals.len(),
        }
    }

    pub fn constant(v: T, order: usize) -> Self {
        let mut a = [T::zero(); 5];
        a[0] = v;
        Self {
            vals: a,
            len: order + 1,
        }
    }

    pub fn order(&self) -> usize {
        self.len - 1
    }

    pub fn value(&self) -> T {
        self.vals[0]
    }

    /// k-th derivative; panics past the stored order.
    pub fn d(&self, k: usize) -> T {
        assert!(k < self.len, "jet only carries order {}", self.len - 1);
        self.vals[k]
    }

    pub fn truncated(&self, order: usize) -> Self {
        Self {
            vals: self.vals,
            len: self.len.min(order + 1),
        }
    }

    pub fn scale(&self, s: T) -> Self {
        let mut out = *self;
        for v in &mut out.vals[..self.len] {
            *v = *v * s;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.len.min(other.len);
        let mut vals = [T::zero(); 5];
        for k in 0..len {
            vals[k] = self.vals[k] + other.vals[k];
        }
        Self { vals, len }
    }

    /// Leibniz product rule up to the common order.
    pub fn mul(&self, other: &Self) -> Self {
        const BINOM: [[f64; 5]; 5] = [
            [1.0, 0.0, 0.0, 0.0, 0.0],
            [1.0, 1.0, 0.0, 0.0, 0.0],
            [1.0, 2.0, 1.0, 0.0, 0.0],
            [1.0, 3.0, 3.0, 1.0, 0.0],
            [1.0, 4.0, 6.0, 4.0, 1.0],
        ];
        let len = self.len.min(other.len);
        let mut vals = [T::zero(); 5];
        for k in 0..len {
            let mut acc = T::zero();
            for j in 0..=k {
                acc = acc + real::<T>(BINOM[k][j]) * self.vals[j] * other.vals[k - j];
            }
            vals[k] = acc;
        }
        Self { vals, len }
    }

    /// Jet of `1/f`; caller guarantees `f ≠ 0`.
    pub fn recip(&self) -> Self {
        let z = self.vals[0];
        let mut vals = [T::zero(); 5];
        vals[0] = z.recip();
        if self.len > 1 {
            let z1 = self.vals[1];
            vals[1] = -z1 / (z * z);
            if self.len > 2 {
                let z2 = self.vals[2];
                vals[2] = (real::<T>(2.0) * z1 * z1 - z * z2) / z.powi(3);
                if self.len > 3 {
                    let z3 = self.vals[3];
                    vals[3] = (real::<T>(6.0) * z * z1 * z2
                        - real::<T>(6.0) * z1.powi(3)
                        - z * z * z3)
                        / z.powi(4);
                }
            }
        }
        Self {
            vals,
            len: self.len.min(4),
        }
    }

    /// Jet of `√(s·f)` where `s = ±1` makes the radicand positive.
    pub fn sqrt_signed(&self, s: T) -> Self {
        let u = (s * self.vals[0]).sqrt();
        let mut vals = [T::zero(); 5];
        vals[0] = u;
        if self.len > 1 {
            let z1 = self.vals[1];
            vals[1] = s * z1 / (real::<T>(2.0) * u);
            if self.len > 2 {
                let z2 = self.vals[2];
                vals[2] = s * z2 / (real::<T>(2.0) * u) - z1 * z1 / (real::<T>(4.0) * u.powi(3));
                if self.len > 3 {
                    let z3 = self.vals[3];
                    vals[3] = s * z3 / (real::<T>(2.0) * u)
                        - real::<T>(0.75) * z1 * z2 / u.powi(3)
                        + real::<T>(0.375) * s * z1.powi(3) / u.powi(5);
                }
            }
        }
        Self {
            vals,
            len: self.len.min(4),
        }
    }

    /// Faà di Bruno to order 3: jet of `φ(f)` given `outer = [φ, φ', φ'', φ''']`
    /// evaluated at `f(x)`.
    pub fn compose(&self, outer: [T; 4]) -> Self {
        let mut vals = [T::zero(); 5];
        vals[0] = outer[0];
        if self.len > 1 {
            let v1 = self.vals[1];
            vals[1] = outer[1] * v1;
            if self.len > 2 {
                let v2 = self.vals[2];
                vals[2] = outer[2] * v1 * v1 + outer[1] * v2;
                if self.len > 3 {
                    let v3 = self.vals[3];
                    vals[3] = outer[3] * v1.powi(3)
                        + real::<T>(3.0) * outer[2] * v1 * v2
                        + outer[1] * v3;
                }
            }
        }
        Self {
            vals,
            len: self.len.min(4),
        }
    }
}
