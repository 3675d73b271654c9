//! Brute-force reference computations.
//!
//! Nothing here uses the theorems' candidate lists or box bounds. Minima of
//! positive definite forms are found by scanning growing coordinate boxes until
//! the box provably contains every vector at or below the current minimum:
//! `Q(x) ≤ m` forces `x_i² ≤ m·(G⁻¹)_ii`.

use crate::cm::quadratic_form;
use crate::error::{Error, Result};
use crate::form::QuadraticForm;
use crate::nslattice::{require_ample, NsClass, SurfaceKind};
use crate::scalar::{floor_q, int, isqrt_floor, ratio, Int, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellSearchReport<T: Int> {
    pub minimum: Q<T>,
    /// Minimizers up to sign, normalized so the first nonzero entry is positive.
    pub minimizers: Vec<Vec<T>>,
    /// Largest coordinate radius scanned.
    pub radius_searched: T,
    pub certified: bool,
}

/// Certified minimum of a positive definite form over nonzero integer vectors.
pub fn brute_min_quadratic_form<T: Int>(form: &QuadraticForm<T>) -> Result<ShellSearchReport<T>> {
    brute_min_quadratic_form_capped(form, None)
}

/// As [`brute_min_quadratic_form`], giving up with `certified = false` once a
/// radius would exceed `cap`.
pub fn brute_min_quadratic_form_capped<T: Int>(form: &QuadraticForm<T>, cap: Option<&T>) -> Result<ShellSearchReport<T>> {
    if !form.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let inv = form.inverse().ok_or(Error::NotPositiveDefinite)?;
    let n = form.dim();
    let mut radii = vec![T::one(); n];
    loop {
        let (minimum, minimizers) = scan_box(form, &radii);
        let needed: Vec<T> = (0..n).map(|i| isqrt_floor(&floor_q(&(&minimum * &inv[i][i])))).collect();
        let radius_searched = radii.iter().max().cloned().expect("nonempty");
        if needed.iter().zip(&radii).all(|(need, r)| need <= r) {
            return Ok(ShellSearchReport { minimum, minimizers, radius_searched, certified: true });
        }
        let two = int::<T>(2);
        let next: Vec<T> = radii
            .iter()
            .zip(&needed)
            .map(|(r, need)| r.clone().max((two.clone() * r.clone()).min(need.clone())))
            .collect();
        if let Some(cap) = cap {
            if next.iter().any(|r| r > cap) {
                return Ok(ShellSearchReport { minimum, minimizers, radius_searched, certified: false });
            }
        }
        radii = next;
    }
}

fn scan_box<T: Int>(form: &QuadraticForm<T>, radii: &[T]) -> (Q<T>, Vec<Vec<T>>) {
    let n = radii.len();
    let mut x: Vec<T> = radii.iter().map(|r| -r.clone()).collect();
    let mut best: Option<Q<T>> = None;
    let mut found: Vec<Vec<T>> = Vec::new();
    loop {
        let first = x.iter().find(|v| !v.is_zero());
        if first.is_some_and(|v| v.is_positive()) {
            let v = form.eval(&x);
            match &best {
                Some(b) if v > *b => {}
                Some(b) if v == *b => found.push(x.clone()),
                _ => {
                    best = Some(v);
                    found = vec![x.clone()];
                }
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == n {
                found.sort();
                return (best.expect("box contains a nonzero vector"), found);
            }
            if x[k] < radii[k] {
                x[k] = x[k].clone() + T::one();
                break;
            }
            x[k] = -radii[k].clone();
            k += 1;
        }
    }
}

/// `ε(L)` on the no-CM surface as the least value of `(c, d) ↦ L·N_{c,d}`.
pub fn brute_epsilon_nocm<T: Int>(l: &NsClass<T>) -> Result<T> {
    if l.surface() != SurfaceKind::NoCm {
        return Err(Error::NotNoCm);
    }
    require_ample(l)?;
    let a = l.coeffs();
    // L·N_{c,d} = (a2+a3)c² + 2a3·cd + (a1+a3)d²
    let gram = vec![
        vec![a[1].clone() + a[2].clone(), a[2].clone()],
        vec![a[2].clone(), a[0].clone() + a[2].clone()],
    ];
    let report = brute_min_quadratic_form(&QuadraticForm::from_integers(&gram))?;
    let generators = l.generator_pairings().into_iter().min().expect("rank 3");
    Ok(report.minimum.to_integer().min(generators))
}

/// `ε(L)` on a CM surface as the least value of the theorems' quadratic form.
pub fn brute_epsilon_cm<T: Int>(l: &NsClass<T>) -> Result<T> {
    if !l.surface().is_cm() {
        return Err(Error::NotCm);
    }
    require_ample(l)?;
    Ok(brute_min_quadratic_form(&quadratic_form(l)?)?.minimum.to_integer())
}

/// Pairs `(m, n)` modulo `ℓ = a² + b²` with `ℓ | am − bn` and `ℓ | an + bm`.
pub fn count_division_points<T: Int>(a: &T, b: &T) -> Result<T> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroVector);
    }
    let l = a.clone() * a.clone() + b.clone() * b.clone();
    let (a, b, l) = (
        a.to_i64().ok_or(Error::Overflow)?,
        b.to_i64().ok_or(Error::Overflow)?,
        l.to_i64().ok_or(Error::Overflow)?,
    );
    let mut count = 0i64;
    for m in 0..l {
        for n in 0..l {
            if (a * m - b * n) % l == 0 && (a * n + b * m) % l == 0 {
                count += 1;
            }
        }
    }
    Ok(int(count))
}

/// `3·min² ≤ 4·det` for a binary form.
pub fn satisfies_hermite<T: Int>(form: &QuadraticForm<T>, minimum: &Q<T>) -> bool {
    ratio::<T>(int(3)) * minimum * minimum <= ratio::<T>(int(4)) * form.determinant()
}

/// `min⁴ ≤ 4·det` for a quaternary form.
pub fn satisfies_mahler<T: Int>(form: &QuadraticForm<T>, minimum: &Q<T>) -> bool {
    let sq = minimum * minimum;
    &sq * &sq <= ratio::<T>(int(4)) * form.determinant()
}
