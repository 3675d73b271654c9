//! Exact symmetric Gram matrices over the rationals.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{integer_interval, ratio, Int, Q};

/// Quadratic form `x ↦ xᵀ G x` with a symmetric rational Gram matrix `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm<T: Int> {
    gram: Vec<Vec<Q<T>>>,
}

impl<T: Int> QuadraticForm<T> {
    /// Panics if `gram` is not square and symmetric; use [`QuadraticForm::try_new`]
    /// for untrusted input.
    pub fn new(gram: Vec<Vec<Q<T>>>) -> Self {
        Self::try_new(gram).expect("gram matrix must be square and symmetric")
    }

    pub fn try_new(gram: Vec<Vec<Q<T>>>) -> Result<Self> {
        let n = gram.len();
        if n == 0 || gram.iter().any(|row| row.len() != n) {
            return Err(Error::NotPositiveDefinite);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotPositiveDefinite);
                }
            }
        }
        Ok(QuadraticForm { gram })
    }

    pub fn from_integers(gram: &[Vec<T>]) -> Self {
        Self::new(
            gram.iter()
                .map(|row| row.iter().cloned().map(ratio).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Q<T>>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Q<T> {
        &self.gram[i][j]
    }

    pub fn eval(&self, x: &[T]) -> Q<T> {
        assert_eq!(x.len(), self.dim());
        let mut acc = Q::<T>::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = Q::<T>::zero();
            for (j, xj) in x.iter().enumerate() {
                if !xj.is_zero() {
                    row = row + &self.gram[i][j] * ratio(xj.clone());
                }
            }
            acc = acc + row * ratio(xi.clone());
        }
        acc
    }

    /// Leading principal minors `det(G[..k, ..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<Q<T>> {
        (1..=self.dim()).map(|k| det(&self.block(k))).collect()
    }

    pub fn determinant(&self) -> Q<T> {
        det(&self.gram)
    }

    /// Sylvester's criterion, exactly.
    pub fn is_positive_definite(&self) -> bool {
        self.leading_minors().iter().all(|m| m.is_positive())
    }

    pub fn inverse(&self) -> Option<Vec<Vec<Q<T>>>> {
        invert(&self.gram)
    }

    fn block(&self, k: usize) -> Vec<Vec<Q<T>>> {
        self.gram[..k].iter().map(|r| r[..k].to_vec()).collect()
    }

    /// Completing squares: `Q(x) = Σ d[i] (x[i] + Σ_{j>i} m[i][j] x[j])²`.
    /// Requires positive definiteness.
    pub fn square_completion(&self) -> Result<(Vec<Q<T>>, Vec<Vec<Q<T>>>)> {
        let n = self.dim();
        let mut a = self.gram.clone();
        let mut d = Vec::with_capacity(n);
        let mut m = vec![vec![Q::<T>::zero(); n]; n];
        for i in 0..n {
            let pivot = a[i][i].clone();
            if !pivot.is_positive() {
                return Err(Error::NotPositiveDefinite);
            }
            for j in i + 1..n {
                m[i][j] = &a[i][j] / &pivot;
            }
            for j in i + 1..n {
                for k in i + 1..n {
                    let sub = &m[i][j] * &a[i][k];
                    a[j][k] = &a[j][k] - sub;
                }
            }
            d.push(pivot);
        }
        Ok((d, m))
    }

    /// Fincke–Pohst enumeration: calls `visit(x, Q(x))` for every nonzero
    /// integer vector with `Q(x) <= bound` and, when `box_radius` is given,
    /// `|x[i]| <= box_radius` for all `i`.
    pub fn for_each_short_vector<F>(&self, bound: &Q<T>, box_radius: Option<&T>, mut visit: F) -> Result<()>
    where
        F: FnMut(&[T], &Q<T>),
    {
        let (d, m) = self.square_completion()?;
        let n = self.dim();
        let mut x = vec![T::zero(); n];
        let ctx = Enum { d: &d, m: &m, bound, box_radius };
        ctx.descend(n, Q::<T>::zero(), &mut x, &mut visit);
        Ok(())
    }
}

struct Enum<'a, T: Int> {
    d: &'a [Q<T>],
    m: &'a [Vec<Q<T>>],
    bound: &'a Q<T>,
    box_radius: Option<&'a T>,
}

impl<T: Int> Enum<'_, T> {
    // `level` coordinates x[level..] are fixed; `partial` is their contribution.
    fn descend<F: FnMut(&[T], &Q<T>)>(&self, level: usize, partial: Q<T>, x: &mut [T], visit: &mut F) {
        if level == 0 {
            if x.iter().any(|v| !v.is_zero()) {
                visit(x, &partial);
            }
            return;
        }
        let k = level - 1;
        let n = x.len();
        let mut shift = Q::<T>::zero();
        for j in k + 1..n {
            if !x[j].is_zero() {
                shift = shift + &self.m[k][j] * ratio(x[j].clone());
            }
        }
        let center = -shift.clone();
        let slack = (self.bound - &partial) / &self.d[k];
        let Some((mut lo, mut hi)) = integer_interval(&center, &slack) else {
            return;
        };
        if let Some(r) = self.box_radius {
            if lo < -r.clone() {
                lo = -r.clone();
            }
            if hi > *r {
                hi = r.clone();
            }
        }
        let mut v = lo;
        while v <= hi {
            let t = ratio(v.clone()) + &shift;
            let next = &partial + &self.d[k] * &t * &t;
            x[k] = v.clone();
            self.descend(k, next, x, visit);
            v = v + T::one();
        }
        x[k] = T::zero();
    }
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det<T: Int>(m: &[Vec<Q<T>>]) -> Q<T> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = Q::<T>::one();
    let mut acc = Q::<T>::one();
    for i in 0..n {
        let Some(p) = (i..n).find(|&r| !a[r][i].is_zero()) else {
            return Q::<T>::zero();
        };
        if p != i {
            a.swap(p, i);
            sign = -sign;
        }
        let pivot = a[i][i].clone();
        acc = acc * &pivot;
        for r in i + 1..n {
            if a[r][i].is_zero() {
                continue;
            }
            let f = &a[r][i] / &pivot;
            for c in i..n {
                let sub = &f * &a[i][c];
                a[r][c] = &a[r][c] - sub;
            }
        }
    }
    sign * acc
}

/// Gauss–Jordan inverse; `None` for singular input.
pub fn invert<T: Int>(m: &[Vec<Q<T>>]) -> Option<Vec<Vec<Q<T>>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q<T>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::<T>::one() } else { Q::<T>::zero() }));
            r
        })
        .collect();
    for i in 0..n {
        let p = (i..n).find(|&r| !a[r][i].is_zero())?;
        a.swap(p, i);
        let pivot = a[i][i].clone();
        for c in 0..2 * n {
            a[i][c] = &a[i][c] / &pivot;
        }
        for r in 0..n {
            if r == i || a[r][i].is_zero() {
                continue;
            }
            let f = a[r][i].clone();
            for c in 0..2 * n {
                let sub = &f * &a[i][c];
                a[r][c] = &a[r][c] - sub;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn form(rows: &[&[i64]]) -> QuadraticForm<i64> {
        QuadraticForm::from_integers(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn determinant_and_inverse() {
        let f = form(&[&[2, 1], &[1, 2]]);
        assert_eq!(f.determinant(), Ratio::from_integer(3));
        let inv = f.inverse().unwrap();
        assert_eq!(inv[0][0], Ratio::new(2, 3));
        assert_eq!(inv[0][1], Ratio::new(-1, 3));
        assert!(f.is_positive_definite());
        assert!(!form(&[&[1, 2], &[2, 1]]).is_positive_definite());
        assert!(form(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn rejects_asymmetric() {
        let g = vec![
            vec![Ratio::from_integer(1i64), Ratio::from_integer(2)],
            vec![Ratio::from_integer(0), Ratio::from_integer(1)],
        ];
        assert!(QuadraticForm::try_new(g).is_err());
    }

    #[test]
    fn square_completion_reproduces_values() {
        let f = form(&[&[5, 2, -1], &[2, 4, 1], &[-1, 1, 3]]);
        let (d, m) = f.square_completion().unwrap();
        for x in [[1i64, 0, 0], [1, -2, 3], [0, 4, -1], [-3, 2, 2]] {
            let mut total = Ratio::from_integer(0);
            for i in 0..3 {
                let mut t = Ratio::from_integer(x[i]);
                for j in i + 1..3 {
                    t += m[i][j] * Ratio::from_integer(x[j]);
                }
                total += d[i] * t * t;
            }
            assert_eq!(total, f.eval(&x));
        }
    }

    #[test]
    fn short_vectors_match_box_scan() {
        let f = form(&[&[3, 1, 0, -1], &[1, 4, 1, 0], &[0, 1, 2, 1], &[-1, 0, 1, 5]]);
        let bound = Ratio::from_integer(9);
        let mut got = Vec::new();
        f.for_each_short_vector(&bound, None, |x, v| {
            assert_eq!(*v, f.eval(x));
            got.push(x.to_vec());
        })
        .unwrap();
        got.sort();
        let mut want = Vec::new();
        let r = 4;
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    for d in -r..=r {
                        let x = [a, b, c, d];
                        if x != [0; 4] && f.eval(&x) <= bound {
                            want.push(x.to_vec());
                        }
                    }
                }
            }
        }
        want.sort();
        assert_eq!(got, want);

        let mut boxed = 0;
        f.for_each_short_vector(&bound, Some(&1), |x, _| {
            assert!(x.iter().all(|v| v.abs() <= 1));
            boxed += 1;
        })
        .unwrap();
        assert_eq!(boxed, want.iter().filter(|x| x.iter().all(|v| v.abs() <= 1)).count());
    }
}
