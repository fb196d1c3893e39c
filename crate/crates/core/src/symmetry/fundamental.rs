use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::{adaptive_integral, cumulative_quadrature, Grid};
use crate::real::{real, Real};
use crate::symmetry::{CaseKind, Field, Jet, ScalarField, SymmetryPair};
use crate::tol::Tolerances;

/// `Φ(x) = ∫_{x_b}^{x} dt/z(t)`, backed by node values from adaptive
/// quadrature; off-node evaluation integrates from the nearest node.
/// Derivatives come from `Φ' = 1/z`.
pub struct PhiField<T> {
    z: Field<T>,
    table: Grid<T>,
    rtol: T,
}

impl<T: Real> PhiField<T> {
    fn integrand(&self) -> impl Fn(T) -> Result<T> + '_ {
        move |t| Ok(self.z.value(t)?.recip())
    }
}

impl<T: Real> ScalarField<T> for PhiField<T> {
    fn order(&self) -> usize {
        3
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let i = self.table.nearest_node(x);
        let xi = self.table.node(i);
        let base = self.table.values()[i];
        let tail = if x == xi {
            T::zero()
        } else {
            adaptive_integral(&self.integrand(), xi, x, self.rtol)?
        };
        let zj = self.z.jet(x)?;
        let r = zj.recip();
        Ok(Jet::from_slice(&[base + tail, r.value(), r.d(1), r.d(2)]))
    }
}

/// `√(s·z)` with the constant sign `s` chosen so the radicand is positive.
struct SqrtAbsField<T> {
    z: Field<T>,
    sign: T,
}

impl<T: Real> ScalarField<T> for SqrtAbsField<T> {
    fn order(&self) -> usize {
        3
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        Ok(self.z.jet(x)?.sqrt_signed(self.sign))
    }
}

#[derive(Clone, Copy)]
enum WaveKind {
    Sin,
    Cos,
    Sinh,
    Cosh,
}

/// `φ(q·Φ(x))` for a trig/hyperbolic `φ`.
struct WaveField<T> {
    phi: Arc<PhiField<T>>,
    q: T,
    kind: WaveKind,
}

impl<T: Real> ScalarField<T> for WaveField<T> {
    fn order(&self) -> usize {
        3
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let v = self.phi.jet(x)?.scale(self.q);
        let v0 = v.value();
        let outer = match self.kind {
            WaveKind::Sin => [v0.sin(), v0.cos(), -v0.sin(), -v0.cos()],
            WaveKind::Cos => [v0.cos(), -v0.sin(), -v0.cos(), v0.sin()],
            WaveKind::Sinh => [v0.sinh(), v0.cosh(), v0.sinh(), v0.cosh()],
            WaveKind::Cosh => [v0.cosh(), v0.sinh(), v0.cosh(), v0.sinh()],
        };
        Ok(v.compose(outer))
    }
}

/// `Φ(x)^pow` for `pow ∈ {1, 2}` (the parabolic building blocks).
struct PhiPowField<T> {
    phi: Arc<PhiField<T>>,
    square: bool,
}

impl<T: Real> ScalarField<T> for PhiPowField<T> {
    fn order(&self) -> usize {
        3
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let p = self.phi.jet(x)?;
        Ok(if self.square { p.mul(&p) } else { p })
    }
}

struct ProductPair<T> {
    a: Field<T>,
    b: Field<T>,
}

impl<T: Real> ScalarField<T> for ProductPair<T> {
    fn order(&self) -> usize {
        self.a.order().min(self.b.order())
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        Ok(self.a.jet(x)?.mul(&self.b.jet(x)?))
    }
}

/// Verifies z is nonzero with constant sign on the grid; returns the sign.
fn symmetry_sign_on_grid<T: Real>(z: &Field<T>, grid: &Grid<T>) -> Result<T> {
    let mut sign = T::zero();
    for x in grid.nodes() {
        let j = z.jet(x)?;
        let floor = real::<T>(1e-12) * T::one().max(j.d(1).abs()).max(j.d(2).abs());
        let v = j.value();
        if v.abs() < floor {
            return Err(Error::ZeroSymmetry {
                x: x.to_f64().unwrap_or(f64::NAN),
            });
        }
        let s = if v > T::zero() { T::one() } else { -T::one() };
        if sign.is_zero() {
            sign = s;
        } else if s != sign {
            return Err(Error::ZeroSymmetry {
                x: x.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(sign)
}

fn build_phi<T: Real>(
    z: &Field<T>,
    x_b: T,
    grid: &Grid<T>,
    tol: &Tolerances<T>,
) -> Result<(Arc<PhiField<T>>, T)> {
    if x_b < grid.x0() || x_b > grid.x1() {
        return Err(Error::InvalidInput(format!(
            "base point {x_b} outside the construction interval"
        )));
    }
    let sign = symmetry_sign_on_grid(z, grid)?;
    let zc = z.clone();
    let table = cumulative_quadrature(&move |t| Ok(zc.value(t)?.recip()), x_b, grid, tol.rtol)?;
    Ok((
        Arc::new(PhiField {
            z: z.clone(),
            table,
            rtol: tol.rtol,
        }),
        sign,
    ))
}

/// Two independent solutions of `y'' + w y = 0` built from a symmetry pair:
/// `√|z|·sin/cos(q0Φ)` (elliptic), `sinh/cosh` (hyperbolic) or
/// `√|z|·Φ, √|z|` (parabolic), together with the backing `Φ`.
#[derive(Clone)]
pub struct FundamentalPair<T> {
    pub y1: Field<T>,
    pub y2: Field<T>,
    phi: Arc<PhiField<T>>,
    pub case: CaseKind,
    pub q0: T,
    pub x_b: T,
    z_sign: T,
}

impl<T: Real> FundamentalPair<T> {
    /// `Φ(x) = ∫_{x_b}^x dt/z`.
    pub fn phi(&self, x: T) -> Result<T> {
        Ok(self.phi.jet(x)?.value())
    }

    pub fn phi_field(&self) -> Field<T> {
        self.phi.clone()
    }

    pub fn z_sign(&self) -> T {
        self.z_sign
    }

    /// `y1 y2' − y1' y2` at `x` (constant along the interval).
    pub fn wronskian_at(&self, x: T) -> Result<T> {
        let j1 = self.y1.jet(x)?;
        let j2 = self.y2.jet(x)?;
        Ok(j1.value() * j2.d(1) - j1.d(1) * j2.value())
    }

    /// Rescaled copies of `(y1, y2)` with Wronskian exactly −1, the
    /// normalization under which `A = y1², B = y2², C = 2 y1 y2` satisfy
    /// `[A,B] = C`, `[C,A] = −2A`, `[C,B] = 2B`.
    pub fn wronskian_normalized(&self) -> Result<(Field<T>, Field<T>)> {
        let w0 = self.wronskian_at(self.x_b)?;
        let root = w0.abs().sqrt();
        let alpha = root.recip();
        let beta = if w0 > T::zero() { -alpha } else { alpha };
        Ok((
            Arc::new(crate::symmetry::ScaledField {
                inner: self.y1.clone(),
                factor: alpha,
            }),
            Arc::new(crate::symmetry::ScaledField {
                inner: self.y2.clone(),
                factor: beta,
            }),
        ))
    }
}

/// Builds the Theorem-form fundamental pair for `pair` on the grid interval,
/// with `Φ` based at `x_b`.
pub fn fundamental_solutions<T: Real>(
    pair: &SymmetryPair<T>,
    x_b: T,
    grid: &Grid<T>,
    tol: &Tolerances<T>,
) -> Result<FundamentalPair<T>> {
    let (phi, sign) = build_phi(pair.z(), x_b, grid, tol)?;
    let u: Field<T> = Arc::new(SqrtAbsField {
        z: pair.z().clone(),
        sign,
    });
    let q0 = pair.q0();
    let wave = |kind: WaveKind| -> Field<T> {
        Arc::new(WaveField {
            phi: phi.clone(),
            q: q0,
            kind,
        })
    };
    let (y1, y2): (Field<T>, Field<T>) = match pair.case() {
        CaseKind::Elliptic => (
            Arc::new(ProductPair {
                a: u.clone(),
                b: wave(WaveKind::Sin),
            }),
            Arc::new(ProductPair {
                a: u.clone(),
                b: wave(WaveKind::Cos),
            }),
        ),
        CaseKind::Hyperbolic => (
            Arc::new(ProductPair {
                a: u.clone(),
                b: wave(WaveKind::Sinh),
            }),
            Arc::new(ProductPair {
                a: u.clone(),
                b: wave(WaveKind::Cosh),
            }),
        ),
        CaseKind::Parabolic => (
            Arc::new(ProductPair {
                a: u.clone(),
                b: Arc::new(PhiPowField {
                    phi: phi.clone(),
                    square: false,
                }),
            }),
            u.clone(),
        ),
    };
    Ok(FundamentalPair {
        y1,
        y2,
        phi,
        case: pair.case(),
        q0,
        x_b,
        z_sign: sign,
    })
}

/// Basis of the symmetry space built from one nonzero symmetry:
/// `(z, z·sin(2q0Φ), z·cos(2q0Φ))`, hyperbolic analogues, or
/// `(z, z·Φ², z·Φ)` in the parabolic case.
pub struct SymmetryTriple<T> {
    pub z1: Field<T>,
    pub z2: Field<T>,
    pub z3: Field<T>,
}

pub fn symmetry_triple<T: Real>(
    pair: &SymmetryPair<T>,
    x_b: T,
    grid: &Grid<T>,
    tol: &Tolerances<T>,
) -> Result<SymmetryTriple<T>> {
    let (phi, _sign) = build_phi(pair.z(), x_b, grid, tol)?;
    let z = pair.z().clone();
    let two_q0 = pair.q0() * real::<T>(2.0);
    let prod = |b: Field<T>| -> Field<T> {
        Arc::new(ProductPair {
            a: z.clone(),
            b,
        })
    };
    let wave = |kind: WaveKind| -> Field<T> {
        Arc::new(WaveField {
            phi: phi.clone(),
            q: two_q0,
            kind,
        })
    };
    let (z2, z3) = match pair.case() {
        CaseKind::Elliptic => (prod(wave(WaveKind::Sin)), prod(wave(WaveKind::Cos))),
        CaseKind::Hyperbolic => (prod(wave(WaveKind::Sinh)), prod(wave(WaveKind::Cosh))),
        CaseKind::Parabolic => (
            prod(Arc::new(PhiPowField {
                phi: phi.clone(),
                square: true,
            })),
            prod(Arc::new(PhiPowField {
                phi: phi.clone(),
                square: false,
            })),
        ),
    };
    Ok(SymmetryTriple { z1: z, z2, z3 })
}
