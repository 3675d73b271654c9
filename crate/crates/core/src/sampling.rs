//! Seeded random inputs for cross-validation.

use rand::Rng;

use crate::cm::{cm_gcd_d, CmTuple};
use crate::nslattice::{is_ample, NsClass, SurfaceKind};
use crate::scalar::{gcd_all, int, Int};

/// Ample class with coefficients uniform in `[-bound, bound]`, by rejection.
pub fn random_ample<T: Int, R: Rng + ?Sized>(rng: &mut R, kind: SurfaceKind, bound: i64) -> NsClass<T> {
    loop {
        let coeffs: Vec<T> = (0..kind.rank()).map(|_| int(rng.gen_range(-bound..=bound))).collect();
        let l = NsClass::new(kind, coeffs).expect("rank matches");
        if is_ample(&l) {
            return l;
        }
    }
}

/// Primitive tuple with coordinates in `[-bound, bound]`. With `composite` set,
/// the tuple is built as `(γα, γβ)` for a non-rational `γ` so that `D > 1`.
pub fn random_primitive_tuple<T: Int, R: Rng + ?Sized>(
    rng: &mut R,
    kind: SurfaceKind,
    bound: i64,
    composite: bool,
) -> CmTuple<T> {
    loop {
        let t: [i64; 4] = if composite {
            let g = (rng.gen_range(-3..=3), rng.gen_range(1..=3));
            let inner = bound / 3;
            let (a, b, c, d) = (
                rng.gen_range(-inner..=inner),
                rng.gen_range(-inner..=inner),
                rng.gen_range(-inner..=inner),
                rng.gen_range(-inner..=inner),
            );
            let mul = |x: i64, y: i64| match kind {
                SurfaceKind::CmGaussian => (g.0 * x - g.1 * y, g.0 * y + g.1 * x),
                _ => (g.0 * x - g.1 * y, g.0 * y + g.1 * x + g.1 * y),
            };
            let (p, q) = mul(a, b);
            let (r, s) = mul(c, d);
            [p, q, r, s]
        } else {
            [0; 4].map(|_| rng.gen_range(-bound..=bound))
        };
        if t.iter().any(|v| v.abs() > bound) || gcd_all(&t) != 1 {
            continue;
        }
        let t = CmTuple::from_i64(t);
        let dd = cm_gcd_d::<T>(&t, kind).expect("nonzero");
        if !composite || dd > T::one() {
            return t;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_meet_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for kind in [SurfaceKind::NoCm, SurfaceKind::CmGaussian, SurfaceKind::CmEisenstein] {
            for _ in 0..50 {
                let l: NsClass<i64> = random_ample(&mut rng, kind, 8);
                assert!(is_ample(&l) && l.coeffs().iter().all(|c| c.abs() <= 8));
            }
        }
        for kind in [SurfaceKind::CmGaussian, SurfaceKind::CmEisenstein] {
            for composite in [false, true] {
                for _ in 0..50 {
                    let t: CmTuple<i64> = random_primitive_tuple(&mut rng, kind, 20, composite);
                    assert!(t.is_primitive() && t.0.iter().all(|c| c.abs() <= 20));
                    if composite {
                        assert!(cm_gcd_d(&t, kind).unwrap() > 1);
                    }
                }
            }
        }
    }

    #[test]
    fn seeded_streams_repeat() {
        let a: NsClass<i64> = random_ample(&mut ChaCha8Rng::seed_from_u64(3), SurfaceKind::NoCm, 50);
        let b: NsClass<i64> = random_ample(&mut ChaCha8Rng::seed_from_u64(3), SurfaceKind::NoCm, 50);
        assert_eq!(a, b);
    }
}
