//! Cross-sections `μ ↦ ε(F1 + λF2 − μΔ)` of the Seshadri function on the
//! no-CM surface.
//!
//! For fixed `λ` only finitely many elliptic curves can ever be submaximal, so
//! the function is the lower envelope of finitely many affine functions of `μ`,
//! valid up to the nef boundary `μ_max = λ/(1+λ)`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::nocm::CurvePair;
use crate::scalar::{int, ratio, Int, Q};

/// One affine piece `intercept + slope·μ` of an envelope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment<T: Int> {
    pub slope: Q<T>,
    pub intercept: Q<T>,
    pub witness: CurvePair<T>,
}

impl<T: Int> Segment<T> {
    pub fn value_at(&self, mu: &Q<T>) -> Q<T> {
        &self.intercept + &self.slope * mu
    }
}

/// Concave piecewise-linear function on `(−∞, mu_max]`. Segment `i` lives on
/// `[breakpoints[i−1], breakpoints[i]]`, with `−∞` and `mu_max` at the ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinear<T: Int> {
    pub lambda: Q<T>,
    pub mu_max: Q<T>,
    pub breakpoints: Vec<Q<T>>,
    pub segments: Vec<Segment<T>>,
}

impl<T: Int> PiecewiseLinear<T> {
    /// Exact value at `mu`.
    pub fn evaluate(&self, mu: &Q<T>) -> Result<Q<T>> {
        evaluate(self, mu)
    }

    /// The segment governing `mu`; at a breakpoint, the one to its left.
    pub fn segment_at(&self, mu: &Q<T>) -> &Segment<T> {
        let i = self.breakpoints.iter().take_while(|b| *b < mu).count();
        &self.segments[i]
    }
}

/// `L_{λ,μ}·N` as `(slope, intercept)` in `μ`.
pub fn affine_degree<T: Int>(lambda: &Q<T>, p: &CurvePair<T>) -> (Q<T>, Q<T>) {
    match p.generator_index() {
        0 => (-Q::<T>::one(), lambda.clone()),
        1 => (-Q::<T>::one(), Q::<T>::one()),
        2 => (Q::<T>::zero(), Q::<T>::one() + lambda),
        _ => {
            let (c, d) = (ratio(p.c().clone()), ratio(p.d().clone()));
            let s = &c + &d;
            (-(&s * &s), &d * &d + lambda * &c * &c)
        }
    }
}

/// Curves that can compute `ε(L_{λ,μ})` for some `μ`: the generators, every
/// coprime `c, d ≥ 1` with `(1+λ)² ≥ 2(d−λc)²(c+d)²`, and the pair `(q, p)`
/// for `λ = p/q`.
pub fn candidate_curves<T: Int>(lambda: &Q<T>) -> Result<Vec<CurvePair<T>>> {
    if lambda.is_negative() || *lambda > Q::<T>::one() {
        return Err(Error::LambdaOutOfRange);
    }
    let (p, q) = (lambda.numer().clone(), lambda.denom().clone());
    let mut out = vec![CurvePair::f1(), CurvePair::f2(), CurvePair::delta()];
    let lhs = (Q::<T>::one() + lambda) * (Q::<T>::one() + lambda);
    let two = int::<T>(2);
    let pq = p.clone() + q.clone();
    // off the ratio d/c = λ we have |qd − pc| ≥ 1, which forces 2(c+d)² ≤ (p+q)²
    let mut s = two.clone();
    while two.clone() * s.clone() * s.clone() <= pq.clone() * pq.clone() {
        let mut c = T::one();
        while c < s {
            let d = s.clone() - c.clone();
            let gap = ratio(d.clone()) - lambda * ratio(c.clone());
            let rhs = ratio(two.clone() * s.clone() * s.clone()) * &gap * &gap;
            if lhs >= rhs {
                if let Some(pair) = CurvePair::new(c.clone(), d) {
                    out.push(pair);
                }
            }
            c = c + T::one();
        }
        s = s + T::one();
    }
    if p.is_positive() {
        out.push(CurvePair::new(q, p).expect("reduced fraction"));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Exact lower envelope of the candidate curves' degree functions.
pub fn cross_section<T: Int>(lambda: &Q<T>) -> Result<PiecewiseLinear<T>> {
    if !lambda.is_positive() || *lambda > Q::<T>::one() {
        return Err(Error::LambdaOutOfRange);
    }
    let mu_max = lambda / (Q::<T>::one() + lambda);
    let mut lines: Vec<Segment<T>> = candidate_curves(lambda)?
        .into_iter()
        .map(|w| {
            let (slope, intercept) = affine_degree(lambda, &w);
            Segment { slope, intercept, witness: w }
        })
        .collect();
    // Steepest last; among parallel lines the lowest, then canonical order, first.
    lines.sort_by(|x, y| {
        y.slope
            .cmp(&x.slope)
            .then_with(|| x.intercept.cmp(&y.intercept))
            .then_with(|| x.witness.cmp(&y.witness))
    });
    lines.dedup_by(|later, kept| later.slope == kept.slope);

    let meet = |x: &Segment<T>, y: &Segment<T>| (&y.intercept - &x.intercept) / (&x.slope - &y.slope);
    let mut hull: Vec<Segment<T>> = Vec::new();
    for line in lines {
        while hull.len() >= 2 {
            let n = hull.len();
            if meet(&hull[n - 1], &line) <= meet(&hull[n - 2], &hull[n - 1]) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(line);
    }

    let mut breakpoints = Vec::new();
    let mut segments = vec![hull[0].clone()];
    for pair in hull.windows(2) {
        let b = meet(&pair[0], &pair[1]);
        if b >= mu_max {
            break;
        }
        breakpoints.push(b);
        segments.push(pair[1].clone());
    }
    Ok(PiecewiseLinear { lambda: lambda.clone(), mu_max, breakpoints, segments })
}

pub fn evaluate<T: Int>(f: &PiecewiseLinear<T>, mu: &Q<T>) -> Result<Q<T>> {
    if *mu > f.mu_max {
        return Err(Error::OutsideNefRange);
    }
    Ok(f.segment_at(mu).value_at(mu))
}
