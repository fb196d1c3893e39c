use crate::error::{Error, Result};
use crate::real::{real, Real};

/// Scans `f` on `n_scan` uniform nodes over `[lo, hi]`, brackets every sign
/// change and refines each bracket to width `xtol` with a safeguarded
/// secant/bisection hybrid. Roots closer than `10·xtol` are merged.
/// Nodes where `f` is not finite break brackets instead of failing the scan.
pub fn find_roots_scan<T, F>(f: F, lo: T, hi: T, n_scan: usize, xtol: T) -> Result<Vec<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    if !(lo < hi) {
        return Err(Error::InvalidInput(format!(
            "scan interval must satisfy lo < hi (got {lo}, {hi})"
        )));
    }
    if n_scan < 2 {
        return Err(Error::InvalidInput(format!(
            "scan needs at least 2 nodes (got {n_scan})"
        )));
    }
    let step = (hi - lo) / T::from_usize(n_scan - 1).unwrap();
    let mut roots = Vec::new();
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    for i in 1..n_scan {
        let x = if i == n_scan - 1 {
            hi
        } else {
            lo + step * T::from_usize(i).unwrap()
        };
        let fx = f(x);
        if f_prev.is_finite() && fx.is_finite() {
            if f_prev.is_zero() {
                roots.push(x_prev);
            } else if f_prev * fx < T::zero() {
                roots.push(refine_bracket(&f, x_prev, x, f_prev, fx, xtol));
            }
        }
        x_prev = x;
        f_prev = fx;
    }
    if f_prev.is_finite() && f_prev.is_zero() {
        roots.push(x_prev);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() < real::<T>(10.0) * xtol);
    Ok(roots)
}

/// Refines a sign-change bracket `[a, b]` (with `f(a)·f(b) < 0`) by secant
/// steps safeguarded by bisection until the bracket is shorter than `xtol`.
pub fn refine_bracket<T, F>(f: &F, mut a: T, mut b: T, mut fa: T, mut fb: T, xtol: T) -> T
where
    T: Real,
    F: Fn(T) -> T,
{
    debug_assert!(fa * fb <= T::zero());
    let half = real::<T>(0.5);
    for _ in 0..200 {
        if (b - a).abs() < xtol {
            break;
        }
        // secant candidate, clipped away from the bracket edges
        let denom = fb - fa;
        let mut x = if denom.is_zero() {
            (a + b) * half
        } else {
            b - fb * (b - a) / denom
        };
        let margin = (b - a) * real::<T>(1e-3);
        if !x.is_finite() || x <= a + margin || x >= b - margin {
            x = (a + b) * half;
        }
        let fx = f(x);
        if fx.is_zero() || !fx.is_finite() {
            return x;
        }
        if fa * fx < T::zero() {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    (a + b) * half
}
