//! Dense square matrices over an exact scalar type.
//!
//! Everything in the trusted computation path runs on [`SquareMatrix<T>`]
//! with `T` an exact integer scalar (`i64` for small searches, `BigInt`
//! everywhere coefficients can grow). Floating point never enters here.

use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Ring operations needed by plain matrix arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// Exact integer scalar: ordered, with Euclidean division and signs.
/// Satisfied by `i64` and `num_bigint::BigInt`.
pub trait ExactScalar: Ring + Integer + Signed + FromPrimitive {}

impl<T> ExactScalar for T where T: Ring + Integer + Signed + FromPrimitive {}

/// Row-major dense square matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", &self.data[i * self.n..(i + 1) * self.n])?;
        }
        Ok(())
    }
}

impl<T: Ring> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// All-ones matrix.
    pub fn ones(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![T::one(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SquareMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must form a square");
        SquareMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        SquareMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        SquareMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)].clone();
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        result
    }

    /// Entrywise sign conjugation: `out[i][j] = v[i]*v[j]*m[i][j]`.
    pub fn conjugate_signs(&self, signs: &[T]) -> Self {
        assert_eq!(signs.len(), self.n);
        Self::from_fn(self.n, |i, j| {
            signs[i].clone() * signs[j].clone() * self[(i, j)].clone()
        })
    }
}

impl<T: ExactScalar> SquareMatrix<T> {
    /// Entrywise reduction into `0..m`.
    pub fn mod_reduce(&self, m: &T) -> Self {
        self.map(|x| x.mod_floor(m))
    }

    /// Gershgorin bound: max over rows of the absolute entry sum. Every
    /// eigenvalue of a symmetric matrix lies in `[-bound, bound]`.
    pub fn gershgorin_bound(&self) -> T {
        let mut best = T::zero();
        for i in 0..self.n {
            let s = self
                .row(i)
                .iter()
                .fold(T::zero(), |acc, x| acc + x.abs());
            if s > best {
                best = s;
            }
        }
        best
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut a = self.data.clone();
        let mut prev = T::one();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..n {
            // find pivot
            let pivot = (row..n).find(|&r| !a[r * n + col].is_zero());
            let Some(p) = pivot else { continue };
            if p != row {
                for j in 0..n {
                    a.swap(p * n + j, row * n + j);
                }
            }
            for r in row + 1..n {
                for j in col + 1..n {
                    let num = a[row * n + col].clone() * a[r * n + j].clone()
                        - a[r * n + col].clone() * a[row * n + j].clone();
                    a[r * n + j] = num / prev.clone();
                }
                a[r * n + col] = T::zero();
            }
            prev = a[row * n + col].clone();
            rank += 1;
            row += 1;
            if row == n {
                break;
            }
        }
        rank
    }
}

impl<T> std::ops::Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn matmul_identity() {
        let m = SquareMatrix::<i64>::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let id = SquareMatrix::<i64>::identity(2);
        assert_eq!(m.matmul(&id), m);
        assert_eq!(id.matmul(&m), m);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let m = SquareMatrix::<i64>::from_rows(vec![vec![0, 1, 1], vec![1, 0, -1], vec![1, -1, 0]]);
        let m3 = m.matmul(&m).matmul(&m);
        assert_eq!(m.pow(3), m3);
        assert_eq!(m.pow(0), SquareMatrix::identity(3));
    }

    #[test]
    fn rank_exact() {
        let m = SquareMatrix::<BigInt>::from_fn(4, |i, j| BigInt::from((i + 1) * (j + 2)));
        assert_eq!(m.rank(), 1);
        let id = SquareMatrix::<BigInt>::identity(5);
        assert_eq!(id.rank(), 5);
        let j = SquareMatrix::<BigInt>::ones(4);
        assert_eq!(j.rank(), 1);
        // rank 2: J + diag pattern
        let m = SquareMatrix::<BigInt>::from_rows(vec![
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(3)],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn conjugate_signs_involutive() {
        let m = SquareMatrix::<i64>::from_rows(vec![vec![0, 1, -1], vec![1, 0, 1], vec![-1, 1, 0]]);
        let v = vec![1i64, -1, 1];
        let once = m.conjugate_signs(&v);
        assert_eq!(once.conjugate_signs(&v), m);
    }

    #[test]
    fn gershgorin() {
        let m = SquareMatrix::<i64>::from_rows(vec![vec![0, 1, -1], vec![1, 0, 1], vec![-1, 1, 0]]);
        assert_eq!(m.gershgorin_bound(), 2);
    }
}
