use crate::error::{Error, Result};
use crate::real::{real, Real};

/// Uniform grid on `[x0, x1]` with a value attached to every node.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    x0: T,
    x1: T,
    values: Vec<T>,
}

impl<T: Real> Grid<T> {
    /// Uniform grid with `samples ≥ 2` nodes, values initialized to zero.
    pub fn uniform(x0: T, x1: T, samples: usize) -> Result<Self> {
        if !(x0 < x1) {
            return Err(Error::InvalidInput(format!(
                "grid endpoints must satisfy x0 < x1 (got {x0}, {x1})"
            )));
        }
        if samples < 2 {
            return Err(Error::InvalidInput(format!(
                "grid needs at least 2 samples (got {samples})"
            )));
        }
        Ok(Self {
            x0,
            x1,
            values: vec![T::zero(); samples],
        })
    }

    /// Grid with the given node values (same endpoint/sample rules).
    pub fn from_values(x0: T, x1: T, values: Vec<T>) -> Result<Self> {
        let mut grid = Self::uniform(x0, x1, values.len())?;
        grid.values = values;
        Ok(grid)
    }

    pub fn x0(&self) -> T {
        self.x0
    }

    pub fn x1(&self) -> T {
        self.x1
    }

    pub fn samples(&self) -> usize {
        self.values.len()
    }

    pub fn step(&self) -> T {
        (self.x1 - self.x0) / T::from_usize(self.samples() - 1).unwrap()
    }

    /// x-coordinate of node `i`.
    pub fn node(&self, i: usize) -> T {
        debug_assert!(i < self.samples());
        // exact endpoints, uniform interior
        if i == self.samples() - 1 {
            self.x1
        } else {
            self.x0 + self.step() * T::from_usize(i).unwrap()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.samples()).map(move |i| self.node(i))
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [T] {
        &mut self.values
    }

    /// Index of the node nearest to `x` (clamped to the grid).
    pub fn nearest_node(&self, x: T) -> usize {
        let t = (x - self.x0) / self.step();
        let i = t.round().to_usize().unwrap_or(0);
        i.min(self.samples() - 1)
    }

    /// Fills values from a fallible function of the node coordinate.
    pub fn tabulate(x0: T, x1: T, samples: usize, mut f: impl FnMut(T) -> Result<T>) -> Result<Self> {
        let mut grid = Self::uniform(x0, x1, samples)?;
        for i in 0..samples {
            let x = grid.node(i);
            grid.values[i] = f(x)?;
        }
        Ok(grid)
    }

    /// Composite Simpson integral of the node values over `[x0, x1]`.
    /// Falls back to a trapezoid panel when the panel count is odd.
    pub fn integrate_values(&self) -> T {
        let n = self.samples();
        let h = self.step();
        let half = real::<T>(0.5);
        if n == 2 {
            return (self.values[0] + self.values[1]) * h * half;
        }
        let simpson_end = if (n - 1) % 2 == 0 { n - 1 } else { n - 2 };
        let mut sum = self.values[0] + self.values[simpson_end];
        let four = real::<T>(4.0);
        let two = real::<T>(2.0);
        for i in 1..simpson_end {
            let w = if i % 2 == 1 { four } else { two };
            sum = sum + w * self.values[i];
        }
        let mut total = sum * h / real::<T>(3.0);
        if simpson_end != n - 1 {
            total = total + (self.values[n - 2] + self.values[n - 1]) * h * half;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_endpoints_and_counts() {
        assert!(Grid::uniform(1.0, 1.0, 4).is_err());
        assert!(Grid::uniform(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn nodes_hit_endpoints_exactly() {
        let g = Grid::uniform(0.3f64, 1.7, 11).unwrap();
        assert_eq!(g.node(0), 0.3);
        assert_eq!(g.node(10), 1.7);
        assert!((g.node(5) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn simpson_integrates_cubics_exactly() {
        let g = Grid::tabulate(0.0f64, 2.0, 21, |x| Ok(x * x * x - x)).unwrap();
        assert!((g.integrate_values() - 2.0).abs() < 1e-13);
    }
}
