//! Néron–Severi lattices of `E × E` for the three surfaces: intersection
//! pairing, ampleness and nefness.
//!
//! Classes are coefficient vectors in the basis `F1, F2, Δ` (no CM) or
//! `F1, F2, Δ, Σ` (CM), where `F1, F2` are the fibres of the projections,
//! `Δ` the diagonal and `Σ` the graph of the extra automorphism.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{int, Int};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceKind {
    /// `E` without complex multiplication; rank 3.
    NoCm,
    /// `E = C/(Z + iZ)`; rank 4 with `Δ·Σ = 2`.
    CmGaussian,
    /// `E = C/(Z + e^{πi/3} Z)`; rank 4 with `Δ·Σ = 1`.
    CmEisenstein,
}

impl SurfaceKind {
    pub fn rank(self) -> usize {
        match self {
            SurfaceKind::NoCm => 3,
            SurfaceKind::CmGaussian | SurfaceKind::CmEisenstein => 4,
        }
    }

    pub fn is_cm(self) -> bool {
        self != SurfaceKind::NoCm
    }

    /// Gram matrix of the generators.
    pub fn intersection_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![1i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 0;
        }
        if self == SurfaceKind::CmGaussian {
            m[2][3] = 2;
            m[3][2] = 2;
        }
        m
    }

    pub fn generator_names(self) -> &'static [&'static str] {
        match self {
            SurfaceKind::NoCm => &["F1", "F2", "Delta"],
            _ => &["F1", "F2", "Delta", "Sigma"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::NoCm => "nocm",
            SurfaceKind::CmGaussian => "cm-i",
            SurfaceKind::CmEisenstein => "cm-rho",
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Numerical divisor class with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NsClass<T: Int> {
    surface: SurfaceKind,
    coeffs: Vec<T>,
}

impl<T: Int> NsClass<T> {
    pub fn new(surface: SurfaceKind, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != surface.rank() {
            return Err(Error::WrongArity { expected: surface.rank(), got: coeffs.len() });
        }
        Ok(NsClass { surface, coeffs })
    }

    pub fn from_i64(surface: SurfaceKind, coeffs: &[i64]) -> Result<Self> {
        Self::new(surface, coeffs.iter().map(|&c| int(c)).collect())
    }

    /// The `i`-th generator (`F1, F2, Δ[, Σ]`).
    pub fn generator(surface: SurfaceKind, i: usize) -> Self {
        let coeffs = (0..surface.rank())
            .map(|j| if i == j { T::one() } else { T::zero() })
            .collect();
        NsClass { surface, coeffs }
    }

    pub fn generators(surface: SurfaceKind) -> Vec<Self> {
        (0..surface.rank()).map(|i| Self::generator(surface, i)).collect()
    }

    pub fn surface(&self) -> SurfaceKind {
        self.surface
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn scaled(&self, k: &T) -> Self {
        NsClass { surface: self.surface, coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch);
        }
        Ok(NsClass {
            surface: self.surface,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    /// Pairings with every generator, in generator order.
    pub fn generator_pairings(&self) -> Vec<T> {
        Self::generators(self.surface)
            .iter()
            .map(|g| intersect(self, g).expect("same surface"))
            .collect()
    }
}

impl<T: Int> fmt::Display for NsClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.surface)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `xᵀ M y` for the surface's intersection matrix `M`.
pub fn intersect<T: Int>(x: &NsClass<T>, y: &NsClass<T>) -> Result<T> {
    if x.surface != y.surface {
        return Err(Error::SurfaceMismatch);
    }
    let m = x.surface.intersection_matrix();
    let mut acc = T::zero();
    for (i, xi) in x.coeffs.iter().enumerate() {
        for (j, yj) in y.coeffs.iter().enumerate() {
            if m[i][j] != 0 {
                acc = acc + xi.clone() * yj.clone() * int::<T>(m[i][j]);
            }
        }
    }
    Ok(acc)
}

pub fn self_intersection<T: Int>(x: &NsClass<T>) -> T {
    intersect(x, x).expect("same surface")
}

/// First positivity condition that fails, or `None` for an ample class.
pub fn ampleness_violation<T: Int>(x: &NsClass<T>) -> Option<String> {
    let l2 = self_intersection(x);
    if !l2.is_positive() {
        return Some(format!("L^2 = {l2} is not positive"));
    }
    let names = x.surface.generator_names();
    for (name, p) in names.iter().zip(x.generator_pairings()) {
        if !p.is_positive() {
            return Some(format!("L.{name} = {p} is not positive"));
        }
    }
    None
}

/// Ample iff `L² > 0` and `L` is positive on every generator.
pub fn is_ample<T: Int>(x: &NsClass<T>) -> bool {
    ampleness_violation(x).is_none()
}

/// Nefness for integral classes: closed versions of the ampleness inequalities.
pub fn is_nef_integral<T: Int>(x: &NsClass<T>) -> bool {
    is_ample(x) || (!self_intersection(x).is_negative() && x.generator_pairings().iter().all(|p| !p.is_negative()))
}

pub(crate) fn require_ample<T: Int>(x: &NsClass<T>) -> Result<()> {
    match ampleness_violation(x) {
        None => Ok(()),
        Some(why) => Err(Error::NotAmple(why)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn c(kind: SurfaceKind, v: &[i64]) -> NsClass<BigInt> {
        NsClass::from_i64(kind, v).unwrap()
    }

    #[test]
    fn intersection_examples() {
        use SurfaceKind::*;
        assert_eq!(intersect(&c(NoCm, &[1, 0, 0]), &c(NoCm, &[0, 1, 0])).unwrap(), 1.into());
        assert_eq!(intersect(&c(CmGaussian, &[0, 0, 1, 0]), &c(CmGaussian, &[0, 0, 0, 1])).unwrap(), 2.into());
        assert_eq!(intersect(&c(CmEisenstein, &[0, 0, 1, 0]), &c(CmEisenstein, &[0, 0, 0, 1])).unwrap(), 1.into());
        assert_eq!(
            intersect(&c(NoCm, &[1, 0, 0]), &c(CmGaussian, &[1, 0, 0, 0])),
            Err(Error::SurfaceMismatch)
        );
    }

    #[test]
    fn matrices() {
        assert_eq!(SurfaceKind::NoCm.intersection_matrix(), vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let g = SurfaceKind::CmGaussian.intersection_matrix();
        assert_eq!(g[2][3], 2);
        assert_eq!(g[0][3], 1);
        let e = SurfaceKind::CmEisenstein.intersection_matrix();
        assert!(e.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == i64::from(i != j))));
    }

    #[test]
    fn self_intersection_examples() {
        use SurfaceKind::*;
        assert_eq!(self_intersection(&c(NoCm, &[3, 2, -1])), 2.into());
        assert_eq!(self_intersection(&c(CmGaussian, &[1, 1, 1, 1])), 14.into());
        assert_eq!(self_intersection(&c(NoCm, &[1, 0, 0])), 0.into());
    }

    #[test]
    fn self_intersection_closed_forms() {
        for v in [[3i64, -2, 5, 1], [7, 6, -3, -4], [0, 1, 2, 3]] {
            let [a1, a2, a3, a4] = v;
            let g = self_intersection(&NsClass::<i64>::from_i64(SurfaceKind::CmGaussian, &v).unwrap());
            assert_eq!(g, 2 * (a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + 2 * a3 * a4));
            let e = self_intersection(&NsClass::<i64>::from_i64(SurfaceKind::CmEisenstein, &v).unwrap());
            assert_eq!(e, 2 * (a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + a3 * a4));
            let n = self_intersection(&NsClass::<i64>::from_i64(SurfaceKind::NoCm, &v[..3]).unwrap());
            assert_eq!(n, 2 * (a1 * a2 + a1 * a3 + a2 * a3));
        }
    }

    #[test]
    fn ampleness_examples() {
        use SurfaceKind::*;
        assert!(is_ample(&c(NoCm, &[7, 6, -3])));
        assert!(!is_ample(&c(NoCm, &[1, 0, 0])));
        assert!(is_ample(&c(CmGaussian, &[-1, 2, 1, 2])));
        // L.Sigma = a1 + a2 + 2 a3 on the Gaussian surface
        assert!(!is_ample(&c(CmGaussian, &[1, 1, -1, 3])));
        assert_eq!(c(CmGaussian, &[1, 1, -1, 3]).generator_pairings()[3], 0.into());
    }

    #[test]
    fn nef_examples() {
        use SurfaceKind::*;
        assert!(is_nef_integral(&c(NoCm, &[1, 0, 0])));
        assert!(!is_nef_integral(&c(NoCm, &[1, 1, -2])));
        assert!(is_nef_integral(&c(NoCm, &[1, 1, 0])));
    }

    #[test]
    fn wrong_arity() {
        assert_eq!(
            NsClass::<i64>::from_i64(SurfaceKind::NoCm, &[1, 2]),
            Err(Error::WrongArity { expected: 3, got: 2 })
        );
    }

    fn kind() -> impl Strategy<Value = SurfaceKind> {
        prop_oneof![Just(SurfaceKind::NoCm), Just(SurfaceKind::CmGaussian), Just(SurfaceKind::CmEisenstein)]
    }

    fn pair() -> impl Strategy<Value = (NsClass<i64>, NsClass<i64>)> {
        (kind(), prop::collection::vec(-30i64..30, 4), prop::collection::vec(-30i64..30, 4)).prop_map(|(k, a, b)| {
            let n = k.rank();
            (NsClass::from_i64(k, &a[..n]).unwrap(), NsClass::from_i64(k, &b[..n]).unwrap())
        })
    }

    proptest! {
        #[test]
        fn pairing_symmetric_and_even((x, y) in pair()) {
            prop_assert_eq!(intersect(&x, &y).unwrap(), intersect(&y, &x).unwrap());
            prop_assert_eq!(self_intersection(&x) % 2, 0);
            let s = x.add(&y).unwrap();
            prop_assert_eq!(
                self_intersection(&s),
                self_intersection(&x) + 2 * intersect(&x, &y).unwrap() + self_intersection(&y)
            );
        }

        #[test]
        fn ample_implies_nef((x, _y) in pair()) {
            if is_ample(&x) {
                prop_assert!(is_nef_integral(&x));
                prop_assert!(self_intersection(&x) >= 2);
            }
        }

        #[test]
        fn nocm_ampleness_permutation_invariant(a in prop::array::uniform3(-20i64..20)) {
            let base = is_ample(&NsClass::<i64>::from_i64(SurfaceKind::NoCm, &a).unwrap());
            for p in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let v = [a[p[0]], a[p[1]], a[p[2]]];
                prop_assert_eq!(is_ample(&NsClass::<i64>::from_i64(SurfaceKind::NoCm, &v).unwrap()), base);
            }
        }

        #[test]
        fn nocm_ampleness_matches_inequality_list(a in prop::array::uniform3(-20i64..20)) {
            let [a1, a2, a3] = a;
            let listed = a1 + a2 > 0 && a2 + a3 > 0 && a3 + a1 > 0 && a1 * a2 + a2 * a3 + a3 * a1 > 0;
            prop_assert_eq!(is_ample(&NsClass::<i64>::from_i64(SurfaceKind::NoCm, &a).unwrap()), listed);
        }
    }
}
