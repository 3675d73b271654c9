//! The surface `E × E` for `E` without complex multiplication.
//!
//! Every elliptic curve is numerically one of `F1, F2, Δ` or
//! `N_{c,d} ≡ c(c+d)F1 + d(c+d)F2 − cdΔ` for coprime `(c, d)`; the generators
//! are the pairs `(1,0)`, `(0,1)`, `(1,−1)`. The Seshadri constant of an ample
//! class is the least degree of such a curve, and only finitely many pairs can
//! attain it once the coefficients are sorted.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::nslattice::{require_ample, self_intersection, NsClass, SurfaceKind};
use crate::scalar::{int, Int};

/// Coprime pair naming the elliptic curve `N_{c,d}`, stored canonically
/// (`c > 0`, or `c = 0` and `d = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurvePair<T: Int> {
    c: T,
    d: T,
}

impl<T: Int> CurvePair<T> {
    /// Canonicalizes the sign; fails for non-coprime pairs and `(0,0)`.
    pub fn new(c: T, d: T) -> Option<Self> {
        if !c.gcd(&d).is_one() {
            return None;
        }
        if c.is_negative() || (c.is_zero() && d.is_negative()) {
            Some(CurvePair { c: -c, d: -d })
        } else {
            Some(CurvePair { c, d })
        }
    }

    pub fn from_i64(c: i64, d: i64) -> Option<Self> {
        Self::new(int(c), int(d))
    }

    pub fn f1() -> Self {
        CurvePair { c: T::one(), d: T::zero() }
    }

    pub fn f2() -> Self {
        CurvePair { c: T::zero(), d: T::one() }
    }

    pub fn delta() -> Self {
        CurvePair { c: T::one(), d: -T::one() }
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    /// 0, 1, 2 for `F1`, `F2`, `Δ`; 3 otherwise.
    pub fn generator_index(&self) -> usize {
        if self.d.is_zero() {
            0
        } else if self.c.is_zero() {
            1
        } else if self.c.is_one() && (-self.d.clone()).is_one() {
            2
        } else {
            3
        }
    }

    pub fn label(&self) -> String {
        match self.generator_index() {
            0 => "F1".into(),
            1 => "F2".into(),
            2 => "Delta".into(),
            _ => format!("N_{{{},{}}}", self.c, self.d),
        }
    }

    /// Inverse of [`curve_class`]: the pair whose class is `x`, if any.
    pub fn from_class(x: &NsClass<T>) -> Option<Self> {
        if x.surface() != SurfaceKind::NoCm {
            return None;
        }
        let [x1, x2, x3] = [&x.coeffs()[0], &x.coeffs()[1], &x.coeffs()[2]];
        // x1 + x3 = c², x2 + x3 = d², x3 = −cd
        let c2 = x1.clone() + x3.clone();
        let d2 = x2.clone() + x3.clone();
        if c2.is_negative() || d2.is_negative() {
            return None;
        }
        let c = c2.sqrt();
        let mut d = d2.sqrt();
        if c.clone() * c.clone() != c2 || d.clone() * d.clone() != d2 {
            return None;
        }
        if c.clone() * d.clone() != -x3.clone() {
            d = -d;
        }
        let p = Self::new(c, d)?;
        (curve_class(&p) == *x).then_some(p)
    }
}

impl<T: Int> Ord for CurvePair<T> {
    /// Generators first (`F1, F2, Δ`), then the remaining pairs lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.generator_index()
            .cmp(&other.generator_index())
            .then_with(|| self.c.cmp(&other.c))
            .then_with(|| self.d.cmp(&other.d))
    }
}

impl<T: Int> PartialOrd for CurvePair<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Int> fmt::Display for CurvePair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonResult<T: Int> {
    pub epsilon: T,
    /// Sorted curves of degree `epsilon`.
    pub witnesses: Vec<CurvePair<T>>,
}

/// `c(c+d)F1 + d(c+d)F2 − cdΔ`.
pub fn curve_class<T: Int>(p: &CurvePair<T>) -> NsClass<T> {
    let (c, d) = (p.c.clone(), p.d.clone());
    let s = c.clone() + d.clone();
    NsClass::new(SurfaceKind::NoCm, vec![c.clone() * s.clone(), d.clone() * s, -(c * d)]).expect("rank 3")
}

/// `L·N_{c,d} = (a2+a3)c² + 2a3·cd + (a1+a3)d²`.
pub fn degree<T: Int>(l: &NsClass<T>, p: &CurvePair<T>) -> Result<T> {
    if l.surface() != SurfaceKind::NoCm {
        return Err(Error::NotNoCm);
    }
    Ok(degree_raw(l.coeffs(), &p.c, &p.d))
}

fn degree_raw<T: Int>(a: &[T], c: &T, d: &T) -> T {
    let (a1, a2, a3) = (&a[0], &a[1], &a[2]);
    (a2.clone() + a3.clone()) * c.clone() * c.clone()
        + int::<T>(2) * a3.clone() * c.clone() * d.clone()
        + (a1.clone() + a3.clone()) * d.clone() * d.clone()
}

/// Coefficients sorted in decreasing order together with the permutation:
/// `sorted[k] = coeffs[perm[k]]`.
struct Sorted<T: Int> {
    a: [T; 3],
    perm: [usize; 3],
}

impl<T: Int> Sorted<T> {
    fn of(l: &NsClass<T>) -> Self {
        let mut perm = [0usize, 1, 2];
        perm.sort_by(|&i, &j| l.coeffs()[j].cmp(&l.coeffs()[i]));
        let a = perm.map(|i| l.coeffs()[i].clone());
        Sorted { a, perm }
    }

    /// A pair given in sorted coordinates, expressed for the original class.
    fn unsort(&self, c: &T, d: &T) -> Option<CurvePair<T>> {
        let sorted = curve_class(&CurvePair::new(c.clone(), d.clone())?);
        let mut coeffs = vec![T::zero(); 3];
        for k in 0..3 {
            coeffs[self.perm[k]] = sorted.coeffs()[k].clone();
        }
        CurvePair::from_class(&NsClass::new(SurfaceKind::NoCm, coeffs).ok()?)
    }

    /// Candidate pairs in sorted coordinates: the generators, the exact-ratio
    /// pair `(a1, a2)/gcd`, and every `c, d ≥ 1` with `2(c+d)² < (a1+a2)²`.
    /// Coprimality is not enforced.
    fn candidates(&self) -> Vec<(T, T)> {
        let [a1, a2, _] = &self.a;
        let one = T::one();
        let mut out = vec![(one.clone(), T::zero()), (T::zero(), one.clone()), (one.clone(), -one.clone())];
        let g = a1.gcd(a2);
        out.push((a1.clone() / g.clone(), a2.clone() / g));
        let sum = a1.clone() + a2.clone();
        let sum_sq = sum.clone() * sum;
        let two = int::<T>(2);
        let mut s = two.clone();
        while two.clone() * s.clone() * s.clone() < sum_sq {
            let mut c = one.clone();
            while c < s {
                out.push((c.clone(), s.clone() - c.clone()));
                c = c + one.clone();
            }
            s = s + one.clone();
        }
        out
    }
}

fn require_nocm_ample<T: Int>(l: &NsClass<T>) -> Result<()> {
    if l.surface() != SurfaceKind::NoCm {
        return Err(Error::NotNoCm);
    }
    require_ample(l)
}

/// Seshadri constant of an ample class and the curves computing it.
pub fn epsilon<T: Int>(l: &NsClass<T>) -> Result<EpsilonResult<T>> {
    require_nocm_ample(l)?;
    let sorted = Sorted::of(l);
    let [a1, a2, a3] = &sorted.a;

    let item1 = a2.clone() + a3.clone();
    let g = a1.gcd(a2);
    let s = a1.clone() + a2.clone();
    let item2 = (a2.clone() * a1.clone() * a1.clone() + a1.clone() * a2.clone() * a2.clone() + a3.clone() * s.clone() * s)
        / (g.clone() * g);

    let cands = sorted.candidates();
    let values: Vec<T> = cands.iter().map(|(c, d)| degree_raw(&sorted.a, c, d)).collect();
    let item3 = values[4..].iter().min().cloned();

    let mut eps = item1.min(item2);
    if let Some(v) = item3 {
        eps = eps.min(v);
    }

    let mut witnesses: Vec<CurvePair<T>> = cands
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == eps)
        .filter_map(|((c, d), _)| sorted.unsort(c, d))
        .collect();
    witnesses.sort();
    witnesses.dedup();
    debug_assert!(witnesses.iter().all(|w| degree(l, w).unwrap() == eps));
    Ok(EpsilonResult { epsilon: eps, witnesses })
}

/// Elliptic curves `N` with `(L·N)² < L²` (`weak = false`) or `≤ L²` (`weak = true`).
pub fn submaximal_curves<T: Int>(l: &NsClass<T>, weak: bool) -> Result<Vec<CurvePair<T>>> {
    require_nocm_ample(l)?;
    let l2 = self_intersection(l);
    let sorted = Sorted::of(l);
    let mut out: Vec<CurvePair<T>> = sorted
        .candidates()
        .iter()
        .filter(|(c, d)| c.gcd(d).is_one())
        .filter(|(c, d)| {
            let v = degree_raw(&sorted.a, c, d);
            let sq = v.clone() * v;
            if weak {
                sq <= l2
            } else {
                sq < l2
            }
        })
        .filter_map(|(c, d)| sorted.unsort(c, d))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Writes nonzero `a, b` with `(a+b) | ab` as `a = m·c(c+d)`, `b = m·d(c+d)`
/// with `gcd(c, d) = 1`. Returns `(m, c, d)`.
pub fn division_decompose<T: Int>(a: &T, b: &T) -> Result<(T, T, T)> {
    let s = a.clone() + b.clone();
    if a.is_zero() || b.is_zero() || s.is_zero() || !(a.clone() * b.clone()).is_multiple_of(&s) {
        return Err(Error::NotDecomposable);
    }
    let l = a.gcd(b);
    let c = a.clone() / l.clone();
    let d = b.clone() / l.clone();
    let cd = c.clone() + d.clone();
    if !l.is_multiple_of(&cd) {
        return Err(Error::NotDecomposable);
    }
    Ok((l / cd, c, d))
}
