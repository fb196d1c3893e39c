use crate::error::{Error, Result};
use crate::numerics::Grid;
use crate::real::{real, Real};

const MAX_DEPTH: usize = 45;

/// Adaptive Simpson integral of a fallible integrand over `[a, b]` with
/// relative tolerance `rtol`. Errors with `SingularIntegrand` when the
/// recursion exceeds its depth limit.
pub fn adaptive_integral<T, F>(f: &F, a: T, b: T, rtol: T) -> Result<T>
where
    T: Real,
    F: Fn(T) -> Result<T>,
{
    if a == b {
        return Ok(T::zero());
    }
    let half = real::<T>(0.5);
    let sixth = T::one() / real::<T>(6.0);
    let m = (a + b) * half;
    let fa = f(a)?;
    let fm = f(m)?;
    let fb = f(b)?;
    let whole = (fa + real::<T>(4.0) * fm + fb) * (b - a) * sixth;
    let eps = rtol * (whole.abs() + real::<T>(1e-300));
    simpson_rec(f, a, b, fa, fm, fb, whole, eps, MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<T, F>(
    f: &F,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    eps: T,
    depth: usize,
) -> Result<T>
where
    T: Real,
    F: Fn(T) -> Result<T>,
{
    let half = real::<T>(0.5);
    let sixth = T::one() / real::<T>(6.0);
    let four = real::<T>(4.0);
    let m = (a + b) * half;
    let lm = (a + m) * half;
    let rm = (m + b) * half;
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = (fa + four * flm + fm) * (m - a) * sixth;
    let right = (fm + four * frm + fb) * (b - m) * sixth;
    let delta = left + right - whole;
    if !delta.is_finite() {
        return Err(Error::SingularIntegrand {
            a: a.to_f64().unwrap_or(f64::NAN),
            b: b.to_f64().unwrap_or(f64::NAN),
        });
    }
    if delta.abs() <= real::<T>(15.0) * eps {
        // Richardson extrapolation of the two Simpson estimates
        return Ok(left + right + delta / real::<T>(15.0));
    }
    if depth == 0 {
        return Err(Error::SingularIntegrand {
            a: a.to_f64().unwrap_or(f64::NAN),
            b: b.to_f64().unwrap_or(f64::NAN),
        });
    }
    let eps_half = eps * half;
    let l = simpson_rec(f, a, m, fa, flm, fm, left, eps_half, depth - 1)?;
    let r = simpson_rec(f, m, b, fm, frm, fb, right, eps_half, depth - 1)?;
    Ok(l + r)
}

/// Cumulative integral `F(x) = ∫_{x0}^{x} f dt` evaluated at every node of
/// `grid` by adaptive panel quadrature; `x0` must lie inside the grid
/// interval and `F(x0) = 0`.
pub fn cumulative_quadrature<T, F>(f: &F, x0: T, grid: &Grid<T>, rtol: T) -> Result<Grid<T>>
where
    T: Real,
    F: Fn(T) -> Result<T>,
{
    if x0 < grid.x0() || x0 > grid.x1() {
        return Err(Error::InvalidInput(format!(
            "quadrature base point {x0} outside grid interval [{}, {}]",
            grid.x0(),
            grid.x1()
        )));
    }
    let n = grid.samples();
    let mut out = Grid::uniform(grid.x0(), grid.x1(), n)?;
    // first node at or right of x0
    let mut split = n;
    for i in 0..n {
        if out.node(i) >= x0 {
            split = i;
            break;
        }
    }
    // rightward accumulation
    let mut acc = T::zero();
    let mut prev = x0;
    for i in split..n {
        let x = out.node(i);
        acc = acc + adaptive_integral(f, prev, x, rtol)?;
        out.values_mut()[i] = acc;
        prev = x;
    }
    // leftward accumulation
    acc = T::zero();
    prev = x0;
    for i in (0..split).rev() {
        let x = out.node(i);
        acc = acc + adaptive_integral(f, prev, x, rtol)?;
        out.values_mut()[i] = acc;
        prev = x;
    }
    Ok(out)
}
