use crate::elliptic::EllipticInvariants;
use crate::error::{Error, Result};
use crate::lame::{r1_r2_polynomials, LamePotentialSpec, LameSymmetrySpec};
use crate::numerics::Polynomial;
use crate::real::{real, Real};

/// Odd-case family: `w = C(℘) = c1·℘ + c0` with `c1 = −15/4 − n(n+4)` and
/// symmetry ansatz `z = ℘'·B(℘)`, `B = p0^n + b_{n−1} p0^{n−1} + … + b_0`.
/// The recurrence determines `b_j` from `(c0, g2, g3)`; three closing
/// constraints on those parameters remain (see [`gc_residuals`]).
#[derive(Debug, Clone)]
pub struct OddFamily<T> {
    pub n: u32,
    pub c0: T,
    pub inv: EllipticInvariants<T>,
    pub c1: T,
    /// `b_0..b_n` (leading coefficient normalized to 1).
    pub b: Vec<T>,
}

/// Pivot multiplying the newly determined `b_{i−3}` at recurrence step `i`:
/// `16(i−3)(i−4)(i−5) + 144(i−3)(i−4) + (16c1+300)(i−3) + 8(4c1+15)`.
fn pivot<T: Real>(i: u32, c1: T) -> T {
    let j = real::<T>((i - 3) as f64);
    let one = T::one();
    real::<T>(16.0) * j * (j - one) * (j - real(2.0))
        + real::<T>(144.0) * j * (j - one)
        + (real::<T>(16.0) * c1 + real(300.0)) * j
        + real::<T>(8.0) * (real::<T>(4.0) * c1 + real(15.0))
}

fn c1_of<T: Real>(n: u32) -> T {
    let nf = real::<T>(n as f64);
    -real::<T>(15.0 / 4.0) - nf * (nf + real(4.0))
}

fn reduced_r1<T: Real>(fam_b: &[T], c0: T, c1: T, inv: EllipticInvariants<T>) -> Polynomial<T> {
    let pot = LamePotentialSpec {
        c: Polynomial::new(vec![c0, c1]),
        e: Polynomial::zero(),
        inv,
    };
    let sym = LameSymmetrySpec {
        a: Polynomial::zero(),
        b: Polynomial::new(fam_b.to_vec()),
    };
    r1_r2_polynomials(&pot, &sym).0
}

/// Builds the odd family for `n ≥ 0` by forward elimination: step `i` runs
/// from `n+2` down to `3`, and the coefficient of `p0^i` in the reduced Lie
/// equation — linear in the single unknown `b_{i−3}` — is solved at each
/// step. A vanishing pivot is reported as `RecurrenceBreakdown` (it cannot
/// occur for integer steps of this family, but the guard is kept explicit).
pub fn odd_coefficients<T: Real>(
    n: u32,
    c0: T,
    inv: EllipticInvariants<T>,
) -> Result<OddFamily<T>> {
    let c1 = c1_of::<T>(n);
    let nn = n as usize;
    let mut b = vec![T::zero(); nn + 1];
    b[nn] = T::one();
    // i = n+2 down to 3 determines b_{n-1} .. b_0
    for i in (3..=n + 2).rev() {
        let piv = pivot(i, c1);
        if piv.abs() < real::<T>(1e-10) {
            return Err(Error::RecurrenceBreakdown { i: i as i64 });
        }
        // with b_{i-3} still zero, the p0^i coefficient equals the known part
        let r1 = reduced_r1(&b, c0, c1, inv);
        let beta = r1.coeff(i as usize);
        b[(i - 3) as usize] = -beta / piv;
    }
    Ok(OddFamily { n, c0, inv, c1, b })
}

impl<T: Real> OddFamily<T> {
    pub fn potential_spec(&self) -> LamePotentialSpec<T> {
        LamePotentialSpec {
            c: Polynomial::new(vec![self.c0, self.c1]),
            e: Polynomial::zero(),
            inv: self.inv,
        }
    }

    pub fn symmetry_spec(&self) -> LameSymmetrySpec<T> {
        LameSymmetrySpec {
            a: Polynomial::zero(),
            b: Polynomial::new(self.b.clone()),
        }
    }

    /// The full reduced residual polynomial R1 for this family. With the
    /// recurrence coefficients in place only the orders p0^0..p0^2 can be
    /// nonzero.
    pub fn residual_polynomial(&self) -> Polynomial<T> {
        reduced_r1(&self.b, self.c0, self.c1, self.inv)
    }
}

/// The three closing constraints on `(c0, g2, g3)`: the coefficients of
/// `p0^0, p0^1, p0^2` in the reduced Lie equation after the recurrence has
/// fixed all `b_j`. The family is an exact symmetry pair iff all three
/// vanish; the trivial root is `c0 = g2 = g3 = 0`.
pub fn gc_residuals<T: Real>(fam: &OddFamily<T>) -> (T, T, T) {
    let r1 = fam.residual_polynomial();
    (r1.coeff(0), r1.coeff(1), r1.coeff(2))
}

/// A (c0, g2, g3) point driven into the constraint set by Newton iteration.
#[derive(Debug, Clone, Copy)]
pub struct GcRoot<T> {
    pub c0: T,
    pub g2: T,
    pub g3: T,
    pub residuals: (T, T, T),
    pub converged: bool,
}

/// Damped Newton search for roots of [`gc_residuals`], Jacobian by central
/// finite differences, multi-start from a coarse grid in `[−5,5]³`. Found
/// points are reported with their residuals; no completeness is claimed.
pub fn find_gc_roots<T: Real>(n: u32, starts_per_axis: usize, max_iter: usize) -> Vec<GcRoot<T>> {
    let eval = |v: [T; 3]| -> [T; 3] {
        let fam = odd_coefficients(n, v[0], EllipticInvariants::new(v[1], v[2]))
            .expect("pivot is parameter-independent");
        let (r0, r1, r2) = gc_residuals(&fam);
        [r0, r1, r2]
    };
    let norm = |f: &[T; 3]| f[0].abs().max(f[1].abs()).max(f[2].abs());

    let mut roots: Vec<GcRoot<T>> = Vec::new();
    let m = starts_per_axis.max(2);
    let lo = real::<T>(-5.0);
    let step = real::<T>(10.0) / real::<T>((m - 1) as f64);
    let mut starts = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                starts.push([
                    lo + step * real::<T>(i as f64),
                    lo + step * real::<T>(j as f64),
                    lo + step * real::<T>(k as f64),
                ]);
            }
        }
    }

    for start in starts {
        let mut v = start;
        let mut f = eval(v);
        let mut converged = false;
        for _ in 0..max_iter {
            let scale = T::one() + v[0].abs().max(v[1].abs()).max(v[2].abs());
            if norm(&f) <= real::<T>(1e-11) * scale.powi(4) {
                converged = true;
                break;
            }
            // finite-difference Jacobian
            let mut jac = [[T::zero(); 3]; 3];
            for col in 0..3 {
                let h = real::<T>(1e-6) * (T::one() + v[col].abs());
                let mut vp = v;
                vp[col] = vp[col] + h;
                let mut vm = v;
                vm[col] = vm[col] - h;
                let fp = eval(vp);
                let fm = eval(vm);
                for row in 0..3 {
                    jac[row][col] = (fp[row] - fm[row]) / (real::<T>(2.0) * h);
                }
            }
            let Some(delta) = solve3(&jac, &[-f[0], -f[1], -f[2]]) else {
                break;
            };
            // backtracking line search on the residual norm
            let mut t = T::one();
            let mut improved = false;
            for _ in 0..25 {
                let cand = [v[0] + t * delta[0], v[1] + t * delta[1], v[2] + t * delta[2]];
                let fc = eval(cand);
                if norm(&fc) < norm(&f) {
                    v = cand;
                    f = fc;
                    improved = true;
                    break;
                }
                t = t * real::<T>(0.5);
            }
            if !improved {
                break;
            }
        }
        if converged {
            let dup = roots.iter().any(|r| {
                (r.c0 - v[0]).abs().max((r.g2 - v[1]).abs()).max((r.g3 - v[2]).abs())
                    < real::<T>(1e-6)
            });
            if !dup {
                roots.push(GcRoot {
                    c0: v[0],
                    g2: v[1],
                    g3: v[2],
                    residuals: (f[0], f[1], f[2]),
                    converged,
                });
            }
        }
    }
    roots
}

/// 3×3 linear solve with partial pivoting; `None` on (near-)singularity.
fn solve3<T: Real>(a: &[[T; 3]; 3], rhs: &[T; 3]) -> Option<[T; 3]> {
    let mut m = *a;
    let mut b = *rhs;
    for col in 0..3 {
        let mut p = col;
        for row in col + 1..3 {
            if m[row][col].abs() > m[p][col].abs() {
                p = row;
            }
        }
        if m[p][col].abs() < real::<T>(1e-300) {
            return None;
        }
        m.swap(col, p);
        b.swap(col, p);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..3 {
                m[row][k] = m[row][k] - f * m[col][k];
            }
            b[row] = b[row] - f * b[col];
        }
    }
    let mut x = [T::zero(); 3];
    for row in (0..3).rev() {
        let mut s = b[row];
        for k in row + 1..3 {
            s = s - m[row][k] * x[k];
        }
        x[row] = s / m[row][row];
    }
    Some(x)
}
