//! Self-products of the elliptic curves with complex multiplication by `i`
//! (Gaussian) and by `ρ = e^{πi/3}` (Eisenstein).
//!
//! An elliptic curve on `E × E` is the image `N_{a,b,c,d}` of
//! `x ↦ (ax + bι(x), cx + dι(x))`. Writing `α = a + bι`, `β = c + dι`, its
//! degrees against `F1, F2, Δ, Σ` are the norms of `α, β, α − β` and of a
//! fourth combination, all divided by the degree `D` of the parametrization.
//! Multiplying `(α, β)` by a unit does not change the image.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::form::QuadraticForm;
use crate::nslattice::{require_ample, NsClass, SurfaceKind};
use crate::scalar::{floor_q, gcd_all, int, ratio, Int, Q};

/// Integer tuple `(a, b, c, d)` naming `N_{a,b,c,d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CmTuple<T: Int>(pub [T; 4]);

impl<T: Int> CmTuple<T> {
    pub fn from_i64(t: [i64; 4]) -> Self {
        CmTuple(t.map(int))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_primitive(&self) -> bool {
        gcd_all(&self.0).is_one()
    }

    pub fn label(&self) -> String {
        let [a, b, c, d] = &self.0;
        format!("N_{{{a},{b},{c},{d}}}")
    }
}

impl<T: Int> fmt::Display for CmTuple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Degrees `(N·F1, N·F2, N·Δ, N·Σ)` of a curve; determines its numerical class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CmDegreeVector<T: Int>(pub [T; 4]);

impl<T: Int> CmDegreeVector<T> {
    pub fn from_i64(v: [i64; 4]) -> Self {
        CmDegreeVector(v.map(int))
    }

    /// `L·N = Σ aᵢ (N·Gᵢ)` for `L = Σ aᵢ Gᵢ`.
    pub fn pairing(&self, l: &NsClass<T>) -> T {
        l.coeffs()
            .iter()
            .zip(&self.0)
            .fold(T::zero(), |acc, (a, n)| acc + a.clone() * n.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Fincke–Pohst enumeration below the least generator degree, clipped to the box.
    Pruned,
    /// Every tuple of the box `|xᵢ| ≤ floor(B)`, in machine integers.
    NaiveBox,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmWitness<T: Int> {
    pub degrees: CmDegreeVector<T>,
    /// Canonical representative with `D = 1`.
    pub tuple: CmTuple<T>,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmEpsilonResult<T: Int> {
    pub epsilon: T,
    /// One entry per numerical class, generators first.
    pub witnesses: Vec<CmWitness<T>>,
}

fn require_cm(kind: SurfaceKind) -> Result<()> {
    if kind.is_cm() {
        Ok(())
    } else {
        Err(Error::NotCm)
    }
}

fn gnorm<T: Int>(x: &T, y: &T) -> T {
    x.clone() * x.clone() + y.clone() * y.clone()
}

fn enorm<T: Int>(x: &T, y: &T) -> T {
    x.clone() * x.clone() + x.clone() * y.clone() + y.clone() * y.clone()
}

/// The four quantities whose gcd is `D`: `N(α), N(β)` and the two coordinates
/// of `ᾱβ`.
pub fn norm_invariants<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<[T; 4]> {
    require_cm(kind)?;
    let [a, b, c, d] = t.0.clone();
    Ok(match kind {
        SurfaceKind::CmGaussian => [
            gnorm(&a, &b),
            gnorm(&c, &d),
            a.clone() * c.clone() + b.clone() * d.clone(),
            a * d - b * c,
        ],
        _ => [
            enorm(&a, &b),
            enorm(&c, &d),
            a.clone() * c.clone() + b.clone() * c.clone() + b.clone() * d.clone(),
            a * d - b * c,
        ],
    })
}

pub fn cm_gcd_d<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<T> {
    if t.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(gcd_all(&norm_invariants(t, kind)?))
}

/// `D·(N·F1, N·F2, N·Δ, N·Σ)`, valid for every tuple.
pub fn degree_numerators<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<[T; 4]> {
    require_cm(kind)?;
    let [a, b, c, d] = t.0.clone();
    let (ac, bd) = (a.clone() - c.clone(), b.clone() - d.clone());
    Ok(match kind {
        SurfaceKind::CmGaussian => [
            gnorm(&a, &b),
            gnorm(&c, &d),
            gnorm(&ac, &bd),
            gnorm(&(a.clone() - d.clone()), &(b.clone() + c.clone())),
        ],
        _ => {
            let e = -a.clone() - b.clone() + d.clone();
            let f = b.clone() + c.clone();
            [enorm(&a, &b), enorm(&c, &d), enorm(&ac, &bd), enorm(&e, &f)]
        }
    })
}

pub fn cm_intersections<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<CmDegreeVector<T>> {
    let dd = cm_gcd_d(t, kind)?;
    if !t.is_primitive() {
        return Err(Error::TupleNotPrimitive);
    }
    Ok(CmDegreeVector(degree_numerators(t, kind)?.map(|n| n / dd.clone())))
}

/// `Σ aᵢ·(D·N·Gᵢ)`, the quantity minimized by the theorems; equals `Q(t)`.
pub fn theorem_value<T: Int>(l: &NsClass<T>, t: &CmTuple<T>) -> Result<T> {
    let n = degree_numerators(t, l.surface())?;
    Ok(CmDegreeVector(n).pairing(l))
}

/// Gram matrix of `t ↦ Σ aᵢ·(D·N_t·Gᵢ)`.
pub fn quadratic_form<T: Int>(l: &NsClass<T>) -> Result<QuadraticForm<T>> {
    require_cm(l.surface())?;
    let a: Vec<Q<T>> = l.coeffs().iter().cloned().map(ratio).collect();
    let (a1, a2, a3, a4) = (&a[0], &a[1], &a[2], &a[3]);
    let s = a1 + a3 + a4;
    let t = a2 + a3 + a4;
    let z = Q::<T>::zero();
    let gram = match l.surface() {
        SurfaceKind::CmGaussian => vec![
            vec![s.clone(), z.clone(), -a3.clone(), -a4.clone()],
            vec![z.clone(), s, a4.clone(), -a3.clone()],
            vec![-a3.clone(), a4.clone(), t.clone(), z.clone()],
            vec![-a4.clone(), -a3.clone(), z, t],
        ],
        _ => {
            let h = Q::<T>::new(T::one(), int(2));
            let two = ratio::<T>(int(2));
            let m02 = -(&two * a3 + a4) * &h;
            let m03 = -(a3 + &two * a4) * &h;
            let m12 = (a4 - a3) * &h;
            vec![
                vec![s.clone(), &s * &h, m02.clone(), m03.clone()],
                vec![&s * &h, s, m12.clone(), m02.clone()],
                vec![m02.clone(), m12, t.clone(), &t * &h],
                vec![m03, m02, &t * &h, t],
            ]
        }
    };
    Ok(QuadraticForm::new(gram))
}

/// The box half-width `B` beyond which no tuple can compute `ε(L)`.
pub fn enumeration_bound<T: Int>(l: &NsClass<T>) -> Result<Q<T>> {
    require_cm(l.surface())?;
    require_ample(l)?;
    let a = l.coeffs();
    let (a1, a2, a3, a4) = (a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone());
    let two = int::<T>(2);
    let sq = |x: T| x.clone() * x;
    let pairs = a1.clone() * a2.clone()
        + a1.clone() * a3.clone()
        + a1.clone() * a4.clone()
        + a2.clone() * a3.clone()
        + a2.clone() * a4.clone();
    let (cands, den) = match l.surface() {
        SurfaceKind::CmGaussian => (
            vec![
                sq(a1.clone() + a3.clone() + a4.clone()),
                sq(a3.clone()),
                sq(a4.clone()),
                sq(a2.clone() + a3.clone() + a4.clone()),
            ],
            pairs + two.clone() * a3.clone() * a4.clone(),
        ),
        _ => (
            vec![
                sq(two.clone() * (a1.clone() + a3.clone() + a4.clone())),
                sq(two.clone() * a3.clone() + a4.clone()),
                sq(a3.clone() + two.clone() * a4.clone()),
                sq(a3.clone() - a4.clone()),
                sq(two.clone() * (a2.clone() + a3.clone() + a4.clone())),
            ],
            int::<T>(3) * (pairs + a3.clone() * a4.clone()),
        ),
    };
    let max = cands.into_iter().max().expect("nonempty");
    Ok(Q::<T>::new(int::<T>(8) * max, den))
}

/// Tuples of `F1, F2, Δ, Σ` on either CM surface.
pub fn generator_tuple<T: Int>(i: usize) -> CmTuple<T> {
    CmTuple::from_i64([[0, 0, 1, 0], [1, 0, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]][i])
}

/// `F1`, `F2`, `Delta`, `Sigma` for the generator degree vectors.
pub fn generator_index<T: Int>(v: &CmDegreeVector<T>, kind: SurfaceKind) -> Option<usize> {
    (0..4).find(|&i| cm_intersections(&generator_tuple::<T>(i), kind).ok().as_ref() == Some(v))
}

fn unit_step<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> CmTuple<T> {
    let [a, b, c, d] = t.0.clone();
    match kind {
        SurfaceKind::CmGaussian => CmTuple([-b, a, -d, c]),
        _ => CmTuple([-b.clone(), a + b, -d.clone(), c + d]),
    }
}

/// Lexicographically smallest tuple among the unit multiples of `t`.
pub fn canonical_tuple<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<CmTuple<T>> {
    require_cm(kind)?;
    let mut best = t.clone();
    let mut cur = unit_step(t, kind);
    while cur != *t {
        if cur < best {
            best = cur.clone();
        }
        cur = unit_step(&cur, kind);
    }
    Ok(best)
}

/// Label of the curve through `t`: a generator name or `N_{a,b,c,d}` of the
/// canonical reduced tuple.
pub fn curve_label<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<String> {
    Ok(witness(t, kind)?.label)
}

fn witness<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<CmWitness<T>> {
    let reduced = reduce_tuple(t, kind)?;
    let degrees = cm_intersections(&reduced, kind)?;
    let tuple = canonical_tuple(&reduced, kind)?;
    let label = match generator_index(&degrees, kind) {
        Some(i) => kind.generator_names()[i].to_string(),
        None => tuple.label(),
    };
    Ok(CmWitness { degrees, tuple, label })
}

pub fn epsilon_cm<T: Int>(l: &NsClass<T>) -> Result<CmEpsilonResult<T>> {
    epsilon_cm_with(l, SearchStrategy::Pruned)
}

pub fn epsilon_cm_with<T: Int>(l: &NsClass<T>, strategy: SearchStrategy) -> Result<CmEpsilonResult<T>> {
    let kind = l.surface();
    require_cm(kind)?;
    require_ample(l)?;
    let radius = floor_q(&enumeration_bound(l)?);
    let (epsilon, minimizers) = match strategy {
        SearchStrategy::Pruned => minimize_pruned(l, &radius)?,
        SearchStrategy::NaiveBox => minimize_box(l, &radius)?,
    };
    let mut witnesses: Vec<CmWitness<T>> = Vec::new();
    for t in &minimizers {
        let w = witness(t, kind)?;
        if !witnesses.iter().any(|x| x.degrees == w.degrees) {
            witnesses.push(w);
        }
    }
    witnesses.sort_by(|x, y| {
        let gx = generator_index(&x.degrees, kind).unwrap_or(4);
        let gy = generator_index(&y.degrees, kind).unwrap_or(4);
        gx.cmp(&gy).then_with(|| x.tuple.cmp(&y.tuple))
    });
    Ok(CmEpsilonResult { epsilon, witnesses })
}

fn minimize_pruned<T: Int>(l: &NsClass<T>, radius: &T) -> Result<(T, Vec<CmTuple<T>>)> {
    let form = quadratic_form(l)?;
    let bound = l.generator_pairings().into_iter().min().expect("rank 4");
    let mut best = ratio(bound);
    let mut found: Vec<CmTuple<T>> = Vec::new();
    form.for_each_short_vector(&best.clone(), Some(radius), |x, v| {
        if *v < best {
            best = v.clone();
            found.clear();
        }
        if *v == best {
            found.push(CmTuple([x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()]));
        }
    })?;
    Ok((best.to_integer(), found))
}

fn to_i64<T: Int>(v: &T) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow)
}

fn minimize_box<T: Int>(l: &NsClass<T>, radius: &T) -> Result<(T, Vec<CmTuple<T>>)> {
    let form = quadratic_form(l)?;
    // 2G is integral for both surfaces
    let mut g = [[0i64; 4]; 4];
    for (i, row) in g.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let twice = form.entry(i, j) * ratio::<T>(int(2));
            *e = to_i64(&twice.to_integer())?;
        }
    }
    let r = to_i64(radius)?;
    let gmax = g.iter().flatten().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    let span = 4 * (r.unsigned_abs() + 1);
    if gmax.checked_mul(span * span).is_none_or(|v| v > i64::MAX as u64 / 4) {
        return Err(Error::Overflow);
    }
    let mut best = i64::MAX;
    let mut found: Vec<[i64; 4]> = Vec::new();
    for a in -r..=r {
        let pa = g[0][0] * a * a;
        for b in -r..=r {
            let pb = pa + 2 * g[0][1] * a * b + g[1][1] * b * b;
            let lc = 2 * (g[0][2] * a + g[1][2] * b);
            let ld = 2 * (g[0][3] * a + g[1][3] * b);
            for c in -r..=r {
                let pc = pb + lc * c + g[2][2] * c * c;
                let ldc = ld + 2 * g[2][3] * c;
                for d in -r..=r {
                    let v = pc + ldc * d + g[3][3] * d * d;
                    if v <= best && (a, b, c, d) != (0, 0, 0, 0) {
                        if v < best {
                            best = v;
                            found.clear();
                        }
                        found.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    Ok((int(best / 2), found.into_iter().map(CmTuple::from_i64).collect()))
}

fn small_tuple<T: Int>(t: &CmTuple<T>) -> Result<[i64; 4]> {
    Ok([to_i64(&t.0[0])?, to_i64(&t.0[1])?, to_i64(&t.0[2])?, to_i64(&t.0[3])?])
}

/// `γ·(a + bι)` for `γ = m + nι`, as a coordinate pair.
fn times(m: i64, n: i64, a: i64, b: i64, kind: SurfaceKind) -> (i64, i64) {
    match kind {
        SurfaceKind::CmGaussian => (m * a - n * b, m * b + n * a),
        // ρ² = ρ − 1
        _ => (m * a - n * b, m * b + n * a + n * b),
    }
}

fn kills(m: i64, n: i64, t: &[i64; 4], dd: i64, kind: SurfaceKind) -> bool {
    let (x, y) = times(m, n, t[0], t[1], kind);
    let (z, w) = times(m, n, t[2], t[3], kind);
    x % dd == 0 && y % dd == 0 && z % dd == 0 && w % dd == 0
}

/// Number of `(m, n) mod D` with `(m + nι)·(a + bι) ≡ (m + nι)·(c + dι) ≡ 0 (mod D)`.
/// For the Gaussian kind these are the congruences `am − bn`, `bm + an`,
/// `cm − dn`, `dm + cn ≡ 0`.
pub fn count_congruence_solutions<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<T> {
    require_cm(kind)?;
    let dd = cm_gcd_d(t, kind)?;
    if !t.is_primitive() {
        return Err(Error::TupleNotPrimitive);
    }
    let s = small_tuple(t)?;
    let dd = to_i64(&dd)?;
    let mut count = 0i64;
    for n in 0..dd {
        for m in 0..dd {
            if kills(m, n, &s, dd, kind) {
                count += 1;
            }
        }
    }
    Ok(int(count))
}

/// A tuple with `D = 1` whose norm invariants are those of `t` divided by `D`.
pub fn reduce_tuple<T: Int>(t: &CmTuple<T>, kind: SurfaceKind) -> Result<CmTuple<T>> {
    let d0 = cm_gcd_d(t, kind)?;
    if !t.is_primitive() {
        return Err(Error::TupleNotPrimitive);
    }
    if d0.is_one() {
        return Ok(t.clone());
    }
    let target = norm_invariants(t, kind)?.map(|v| v / d0.clone());
    let meets = |u: &CmTuple<T>| norm_invariants(u, kind).ok() == Some(target.clone());
    let start = small_tuple(t)?;
    if let Some(u) = reduce_by_multiplication(start, kind) {
        let u = CmTuple::from_i64(u);
        if meets(&u) && cm_gcd_d(&u, kind)?.is_one() {
            return Ok(u);
        }
    }
    let target = [to_i64(&target[0])?, to_i64(&target[1])?, to_i64(&target[2])?, to_i64(&target[3])?];
    let bound = start.iter().map(|v| v.abs()).max().unwrap_or(0);
    reduce_by_search(&target, bound, kind).map(CmTuple::from_i64).ok_or(Error::ReductionFailed)
}

fn gcd4(t: &[i64; 4]) -> i64 {
    gcd_all(t)
}

fn d_of(t: &[i64; 4], kind: SurfaceKind) -> i64 {
    cm_gcd_d(&CmTuple(*t), kind).expect("nonzero")
}

/// Repeatedly replaces `(α, β)` by `(γα/D, γβ/D)` for an integral `γ` making
/// both quotients integral. Each step multiplies `D` by `N(γ)/D²`.
fn reduce_by_multiplication(mut t: [i64; 4], kind: SurfaceKind) -> Option<[i64; 4]> {
    for _ in 0..64 {
        let g = gcd4(&t);
        if g > 1 {
            t = t.map(|v| v / g);
        }
        let dd = d_of(&t, kind);
        if dd == 1 {
            return Some(t);
        }
        let (m, n) = match kind {
            SurfaceKind::CmGaussian => gaussian_multiplier(&t, dd)?,
            _ => shortest_multiplier(&t, dd, kind)?,
        };
        let (a, b) = times(m, n, t[0], t[1], kind);
        let (c, d) = times(m, n, t[2], t[3], kind);
        let next = [a / dd, b / dd, c / dd, d / dd];
        if d_of(&next, kind) >= dd * gcd4(&next).pow(2) {
            return None;
        }
        t = next;
    }
    None
}

/// `γ = 1 + yi` with `y` the solution for the prescribed first coordinate,
/// taken in `(−D/2, D/2]`.
fn gaussian_multiplier(t: &[i64; 4], dd: i64) -> Option<(i64, i64)> {
    let y = (0..dd).find(|&y| kills(1, y, t, dd, SurfaceKind::CmGaussian))?;
    Some((1, if 2 * y > dd { y - dd } else { y }))
}

/// Shortest nonzero `γ` in the ideal of multipliers.
fn shortest_multiplier(t: &[i64; 4], dd: i64, kind: SurfaceKind) -> Option<(i64, i64)> {
    // the ideal has index D, so it holds an element of norm ≤ D; norms bound |m|,|n| by √(4N/3)
    let s = ((4 * dd) as f64 / 3.0).sqrt() as i64 + 2;
    let mut best: Option<(i64, (i64, i64))> = None;
    for m in -s..=s {
        for n in -s..=s {
            if (m, n) == (0, 0) || !kills(m, n, t, dd, kind) {
                continue;
            }
            let nm = m * m + m * n + n * n;
            if best.is_none_or(|(b, _)| nm < b) {
                best = Some((nm, (m, n)));
            }
        }
    }
    best.map(|(_, g)| g)
}

/// Box search for a tuple with the given invariants.
fn reduce_by_search(target: &[i64; 4], bound: i64, kind: SurfaceKind) -> Option<[i64; 4]> {
    let with_norm = |v: i64| {
        let mut out = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let n = match kind {
                    SurfaceKind::CmGaussian => x * x + y * y,
                    _ => x * x + x * y + y * y,
                };
                if n == v {
                    out.push((x, y));
                }
            }
        }
        out
    };
    let first = with_norm(target[0]);
    let second = with_norm(target[1]);
    for &(a, b) in &first {
        for &(c, d) in &second {
            let t = [a, b, c, d];
            let inv = norm_invariants(&CmTuple(t), kind).ok()?;
            if inv == *target && d_of(&t, kind) == 1 {
                return Some(t);
            }
        }
    }
    None
}
