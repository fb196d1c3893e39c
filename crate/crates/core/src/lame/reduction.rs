use crate::elliptic::EllipticInvariants;
use crate::lame::CurvePoly;
use crate::numerics::Polynomial;
use crate::real::{real, Real};

/// Potential on the curve: `w(x) = C(p0) + p1·E(p0)`.
#[derive(Debug, Clone)]
pub struct LamePotentialSpec<T> {
    pub c: Polynomial<T>,
    pub e: Polynomial<T>,
    pub inv: EllipticInvariants<T>,
}

/// Symmetry ansatz on the curve: `z(x) = A(p0) + p1·B(p0)`.
#[derive(Debug, Clone)]
pub struct LameSymmetrySpec<T> {
    pub a: Polynomial<T>,
    pub b: Polynomial<T>,
}

/// The Lie equation reduced on the curve reads `R1(p0) + p1·R2(p0) = 0`;
/// this computes `(R1, R2)` from the displayed polynomial expressions. The
/// pair solves the Lie equation iff both vanish identically.
pub fn r1_r2_polynomials<T: Real>(
    pot: &LamePotentialSpec<T>,
    sym: &LameSymmetrySpec<T>,
) -> (Polynomial<T>, Polynomial<T>) {
    let inv = &pot.inv;
    let g2 = inv.g2();
    let g3 = inv.g3();
    let q = CurvePoly::q_poly(inv);
    let qp = q.derivative(); // 12t² − g2

    let a = &sym.a;
    let b = &sym.b;
    let c = &pot.c;
    let e = &pot.e;
    let ap = a.derivative();
    let app = ap.derivative();
    let appp = app.derivative();
    let bp = b.derivative();
    let bpp = bp.derivative();
    let bppp = bpp.derivative();
    let cp = c.derivative();
    let ep = e.derivative();

    let four = real::<T>(4.0);
    let two = real::<T>(2.0);
    let three = real::<T>(3.0);

    // R1 = Q²B''' + 3QQ'B''
    //    + (4QC + 300t⁴ − 66g2t² − 48g3t + (3/4)g2²)B'
    //    + 2B(Q'C + 60t³ − 9g2t − 6g3)
    //    + EA·Q' + 2(2EA' + BC' + AE')Q
    let mut r1 = &(&q * &q) * &bppp;
    r1 = &r1 + &(&(&q * &qp) * &bpp).scale(three);
    let quartic = Polynomial::new(vec![
        real::<T>(0.75) * g2 * g2,
        -real::<T>(48.0) * g3,
        -real::<T>(66.0) * g2,
        T::zero(),
        real::<T>(300.0),
    ]);
    r1 = &r1 + &(&(&(&q * c).scale(four) + &quartic) * &bp);
    let cubic = Polynomial::new(vec![
        -real::<T>(6.0) * g3,
        -real::<T>(9.0) * g2,
        T::zero(),
        real::<T>(60.0),
    ]);
    r1 = &r1 + &(b * &(&(&qp * c) + &cubic)).scale(two);
    r1 = &r1 + &(&(e * a) * &qp);
    let mixed = &(&(e * &ap).scale(two) + &(b * &cp)) + &(a * &ep);
    r1 = &r1 + &(&mixed * &q).scale(two);

    // R2 = QA''' + (18t² − (3/2)g2)A'' + 4(C + 3t)A'
    //    + 2Q(BE' + 2EB') + 2AC' + 3BE·Q'
    let mut r2 = &q * &appp;
    let qq = Polynomial::new(vec![-real::<T>(1.5) * g2, T::zero(), real::<T>(18.0)]);
    r2 = &r2 + &(&qq * &app);
    let lin = c + &Polynomial::new(vec![T::zero(), three]);
    r2 = &r2 + &(&lin * &ap).scale(four);
    let mixed2 = &(b * &ep) + &(e * &bp).scale(two);
    r2 = &r2 + &(&(&q * &mixed2)).scale(two);
    r2 = &r2 + &(a * &cp).scale(two);
    r2 = &r2 + &(&(&(b * e) * &qp)).scale(three);

    (r1, r2)
}

/// Independent route: substitute the ansatz into `z''' + 4wz' + 2w'z`
/// directly and reduce with the curve algebra; returns the even and odd
/// parts, which must equal `(R1, R2)`.
pub fn r1_r2_from_lie_reduction<T: Real>(
    pot: &LamePotentialSpec<T>,
    sym: &LameSymmetrySpec<T>,
) -> (Polynomial<T>, Polynomial<T>) {
    let inv = pot.inv;
    let w = CurvePoly::new(pot.c.clone(), pot.e.clone(), inv);
    let z = CurvePoly::new(sym.a.clone(), sym.b.clone(), inv);
    let z1 = z.derivative();
    let z2 = z1.derivative();
    let z3 = z2.derivative();
    let w1 = w.derivative();
    let res = z3
        .add(&w.mul(&z1).scale(real(4.0)))
        .add(&w1.mul(&z).scale(real(2.0)));
    (res.even, res.odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(g2: f64, g3: f64) -> EllipticInvariants<f64> {
        EllipticInvariants::new(g2, g3)
    }

    #[test]
    fn zero_symmetry_gives_zero_system() {
        let pot = LamePotentialSpec {
            c: Polynomial::new(vec![0.5, -2.0]),
            e: Polynomial::zero(),
            inv: inv(1.0, 2.0),
        };
        let sym = LameSymmetrySpec {
            a: Polynomial::zero(),
            b: Polynomial::zero(),
        };
        let (r1, r2) = r1_r2_polynomials(&pot, &sym);
        assert!(r1.is_zero());
        assert!(r2.is_zero());
    }

    #[test]
    fn classical_n1_family_solves_the_system() {
        // C = −2t + c0, A = t + c0
        let c0 = 0.7;
        let pot = LamePotentialSpec {
            c: Polynomial::new(vec![c0, -2.0]),
            e: Polynomial::zero(),
            inv: inv(1.3, -0.4),
        };
        let sym = LameSymmetrySpec {
            a: Polynomial::new(vec![c0, 1.0]),
            b: Polynomial::zero(),
        };
        let (r1, r2) = r1_r2_polynomials(&pot, &sym);
        assert!(r1.max_abs_coeff() < 1e-12);
        assert!(r2.max_abs_coeff() < 1e-12);
    }

    #[test]
    fn bare_p0_symmetry_fails() {
        // C = E = 0, A = t: R2 = 4·3t·1 = 12t (hand-substituted)
        let pot = LamePotentialSpec {
            c: Polynomial::zero(),
            e: Polynomial::zero(),
            inv: inv(1.0, 1.0),
        };
        let sym = LameSymmetrySpec {
            a: Polynomial::identity(),
            b: Polynomial::zero(),
        };
        let (r1, r2) = r1_r2_polynomials(&pot, &sym);
        assert!(r1.is_zero());
        assert_eq!(r2, Polynomial::new(vec![0.0, 12.0]));
    }

    #[test]
    fn both_routes_agree_on_random_input() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        fn poly(rng: &mut rand_chacha::ChaCha8Rng, deg: usize) -> Polynomial<f64> {
            Polynomial::new(
                (0..=deg)
                    .map(|_| rng.gen_range(-2.0..2.0))
                    .collect::<Vec<f64>>(),
            )
        }
        for _ in 0..50 {
            let curve = inv(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let pot = LamePotentialSpec {
                c: poly(&mut rng, 2),
                e: poly(&mut rng, 1),
                inv: curve,
            };
            let sym = LameSymmetrySpec {
                a: poly(&mut rng, 4),
                b: poly(&mut rng, 3),
            };
            let (r1a, r2a) = r1_r2_polynomials(&pot, &sym);
            let (r1b, r2b) = r1_r2_from_lie_reduction(&pot, &sym);
            let scale = r1a.max_abs_coeff().max(r2a.max_abs_coeff()).max(1.0);
            let d1 = (&r1a - &r1b).max_abs_coeff();
            let d2 = (&r2a - &r2b).max_abs_coeff();
            assert!(d1 <= 1e-11 * scale, "R1 mismatch: {d1:e}");
            assert!(d2 <= 1e-11 * scale, "R2 mismatch: {d2:e}");
        }
    }
}
