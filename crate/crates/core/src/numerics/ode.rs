use crate::error::{Error, Result};
use crate::real::{real, Real};

/// Dense-output step: quartic Hermite-type interpolant on `[x, x+h]`.
struct DenseStep<T> {
    x: T,
    h: T,
    // rcont[c] = interpolation coefficients for component c
    rcont: Vec<[T; 5]>,
    err: T,
}

/// Trajectory of a first-order system `u' = F(x, u)` with a continuous
/// interpolant on every accepted step.
pub struct OdeSolution<T> {
    dim: usize,
    x0: T,
    x1: T,
    steps: Vec<DenseStep<T>>,
    y_end: Vec<T>,
    max_abs: Vec<T>,
}

impl<T: Real> OdeSolution<T> {
    pub fn x0(&self) -> T {
        self.x0
    }

    pub fn x1(&self) -> T {
        self.x1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn final_state(&self) -> &[T] {
        &self.y_end
    }

    /// Largest |u_c| seen at step endpoints along the trajectory.
    pub fn max_component_abs(&self, c: usize) -> T {
        self.max_abs[c]
    }

    /// Largest local error estimate over all accepted steps.
    pub fn max_step_error(&self) -> T {
        self.steps
            .iter()
            .fold(T::zero(), |acc, s| acc.max(s.err))
    }

    /// Interpolated state at `x`, which must lie within the integration span.
    pub fn eval(&self, x: T) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim];
        self.eval_into(x, &mut out);
        out
    }

    pub fn eval_into(&self, x: T, out: &mut [T]) {
        if self.steps.is_empty() {
            out.copy_from_slice(&self.y_end);
            return;
        }
        let forward = self.x1 >= self.x0;
        // binary search for the step containing x
        let mut lo = 0usize;
        let mut hi = self.steps.len() - 1;
        while lo < hi {
            let mid = (lo + hi + 1) / 2;
            let starts_before = if forward {
                self.steps[mid].x <= x
            } else {
                self.steps[mid].x >= x
            };
            if starts_before {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let step = &self.steps[lo];
        let theta = (x - step.x) / step.h;
        let one = T::one();
        for (c, rc) in step.rcont.iter().enumerate() {
            out[c] = rc[0]
                + theta
                    * (rc[1] + (one - theta) * (rc[2] + theta * (rc[3] + (one - theta) * rc[4])));
        }
    }
}

// Dormand–Prince 5(4) tableau.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
// b − b̂ (5th-order weights minus embedded 4th-order weights)
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
// dense-output weights (Hairer, Nørsett & Wanner)
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

/// Integrates `u' = F(x, u)` from `(x0, u0)` to `x1` (either direction) with
/// the Dormand–Prince 5(4) pair, local error per component controlled by
/// `atol + rtol·|u|`, and quartic dense output on every accepted step.
pub fn integrate_ode<T, F>(
    f: F,
    x0: T,
    u0: &[T],
    x1: T,
    rtol: T,
    atol: T,
) -> Result<OdeSolution<T>>
where
    T: Real,
    F: Fn(T, &[T], &mut [T]) -> Result<()>,
{
    if !(rtol > T::zero()) || !(atol > T::zero()) {
        return Err(Error::InvalidInput("rtol and atol must be positive".into()));
    }
    let dim = u0.len();
    let mut sol = OdeSolution {
        dim,
        x0,
        x1,
        steps: Vec::new(),
        y_end: u0.to_vec(),
        max_abs: u0.iter().map(|v| v.abs()).collect(),
    };
    if x0 == x1 {
        return Ok(sol);
    }
    let span = (x1 - x0).abs();
    let dir = if x1 > x0 { T::one() } else { -T::one() };
    let h_floor = real::<T>(1e-14) * span;

    let mut x = x0;
    let mut y = u0.to_vec();
    let mut k: Vec<Vec<T>> = (0..7).map(|_| vec![T::zero(); dim]).collect();
    let mut ytmp = vec![T::zero(); dim];
    let mut y1 = vec![T::zero(); dim];

    f(x, &y, &mut k[0])?;
    let mut h = initial_step(&f, x, &y, &k[0].clone(), dir, rtol, atol, span)?;
    let mut first = true;

    loop {
        if (x1 - x) * dir <= T::zero() {
            break;
        }
        if h.abs() < h_floor {
            return Err(Error::StepSizeUnderflow {
                x: x.to_f64().unwrap_or(f64::NAN),
            });
        }
        // do not overshoot
        if ((x + h) - x1) * dir > T::zero() {
            h = x1 - x;
        }

        // FSAL: k[0] holds f(x, y)
        for s in 1..7 {
            for c in 0..dim {
                let mut acc = T::zero();
                for (j, kj) in k.iter().enumerate().take(s) {
                    let a = real::<T>(A[s - 1][j]);
                    if !a.is_zero() {
                        acc = acc + a * kj[c];
                    }
                }
                ytmp[c] = y[c] + h * acc;
            }
            let xs = x + real::<T>(C[s - 1]) * h;
            f(xs, &ytmp, &mut k[s])?;
        }
        // 5th-order solution = stage-7 argument (a7 row equals b)
        for c in 0..dim {
            let mut acc = T::zero();
            for (j, kj) in k.iter().enumerate().take(6) {
                let a = real::<T>(A[5][j]);
                if !a.is_zero() {
                    acc = acc + a * kj[c];
                }
            }
            y1[c] = y[c] + h * acc;
        }

        // scaled error norm
        let mut err_sq = T::zero();
        for c in 0..dim {
            let mut ee = T::zero();
            for (j, kj) in k.iter().enumerate() {
                let e = real::<T>(E[j]);
                if !e.is_zero() {
                    ee = ee + e * kj[c];
                }
            }
            ee = ee * h;
            let sc = atol + rtol * y[c].abs().max(y1[c].abs());
            let r = ee / sc;
            err_sq = err_sq + r * r;
        }
        let err = (err_sq / T::from_usize(dim).unwrap()).sqrt();

        if err <= T::one() {
            // accept: build dense output
            let mut rcont = Vec::with_capacity(dim);
            for c in 0..dim {
                let ydiff = y1[c] - y[c];
                let bspl = h * k[0][c] - ydiff;
                let mut dsum = T::zero();
                for (j, kj) in k.iter().enumerate() {
                    let d = real::<T>(D[j]);
                    if !d.is_zero() {
                        dsum = dsum + d * kj[c];
                    }
                }
                rcont.push([y[c], ydiff, bspl, ydiff - h * k[6][c] - bspl, h * dsum]);
            }
            sol.steps.push(DenseStep {
                x,
                h,
                rcont,
                err,
            });
            x = x + h;
            y.copy_from_slice(&y1);
            k.swap(0, 6); // FSAL
            for c in 0..dim {
                sol.max_abs[c] = sol.max_abs[c].max(y[c].abs());
            }
            first = false;
        }

        // step-size update (limit growth right after a rejection)
        let fac = if err.is_zero() {
            real::<T>(5.0)
        } else {
            let p = real::<T>(-0.2);
            (real::<T>(0.9) * err.powf(p))
                .max(real::<T>(0.2))
                .min(if first { real::<T>(10.0) } else { real::<T>(5.0) })
        };
        let fac = if err > T::one() { fac.min(T::one()) } else { fac };
        h = h * fac;
    }

    sol.y_end = y;
    Ok(sol)
}

/// Crude version of the standard starting-step heuristic.
fn initial_step<T, F>(
    f: &F,
    x0: T,
    y0: &[T],
    f0: &[T],
    dir: T,
    rtol: T,
    atol: T,
    span: T,
) -> Result<T>
where
    T: Real,
    F: Fn(T, &[T], &mut [T]) -> Result<()>,
{
    let dim = y0.len();
    let norm = |v: &[T], w: &[T]| -> T {
        let mut s = T::zero();
        for c in 0..dim {
            let sc = atol + rtol * w[c].abs();
            let r = v[c] / sc;
            s = s + r * r;
        }
        (s / T::from_usize(dim).unwrap()).sqrt()
    };
    let d0 = norm(y0, y0);
    let d1 = norm(f0, y0);
    let tiny = real::<T>(1e-10);
    let mut h0 = if d0 < tiny || d1 < tiny {
        real::<T>(1e-6)
    } else {
        real::<T>(0.01) * d0 / d1
    };
    h0 = h0.min(span) * dir;

    // one explicit Euler probe to estimate the second derivative scale
    let mut y1 = vec![T::zero(); dim];
    for c in 0..dim {
        y1[c] = y0[c] + h0 * f0[c];
    }
    let mut f1 = vec![T::zero(); dim];
    f(x0 + h0, &y1, &mut f1)?;
    for c in 0..dim {
        f1[c] = (f1[c] - f0[c]) / h0;
    }
    let d2 = norm(&f1, y0);
    let d_max = d1.max(d2.abs());
    let h1 = if d_max <= tiny {
        (h0.abs() * real::<T>(1e-3)).max(real::<T>(1e-6))
    } else {
        (real::<T>(0.01) / d_max).powf(real::<T>(0.2))
    };
    Ok((h0.abs() * real::<T>(100.0)).min(h1).min(span) * dir)
}
