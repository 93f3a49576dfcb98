//! Polynomials with exact integer coefficients.
//!
//! Coefficients are stored in ascending degree order. The characteristic
//! polynomial of an integer matrix is computed by the Faddeev–LeVerrier
//! recursion, whose intermediate divisions are exact over the integers.

use crate::matrix::{ExactScalar, SquareMatrix};
use std::fmt;

/// Polynomial over `T`, coefficients ascending: `coeffs[i]` multiplies `x^i`.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: ExactScalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monic linear polynomial `x - root`.
    pub fn linear(root: T) -> Self {
        Poly {
            coeffs: vec![-root, T::one()],
        }
    }

    /// The monic quadratic `x^2 + p x + q`.
    pub fn quadratic(p: T, q: T) -> Self {
        Poly {
            coeffs: vec![q, p, T::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| c.clone() * x.clone()).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| T::from_usize(i).expect("small index") * c.clone())
                .collect(),
        )
    }

    /// Division with remainder by a monic divisor. Exact over any ring.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree();
        if self.degree() < d || self.is_zero() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            quot[i - d] = c.clone();
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - d + k] = rem[i - d + k].clone() - c.clone() * dc.clone();
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Does the monic `divisor` divide `self` exactly?
    pub fn divisible_by_monic(&self, divisor: &Self) -> bool {
        self.div_rem_monic(divisor).1.is_zero()
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> T {
        let mut g = T::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() / c.clone()).collect())
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) · f  mod  g`.
    fn pseudo_rem(&self, g: &Self) -> Self {
        let mut f = self.clone();
        let dg = g.degree();
        let lc = g.leading();
        while !f.is_zero() && f.degree() >= dg {
            let df = f.degree();
            let fl = f.leading();
            // f <- lc·f - fl·x^(df-dg)·g
            let mut shifted = vec![T::zero(); df - dg];
            shifted.extend(g.coeffs.iter().cloned());
            let shifted = Poly { coeffs: shifted };
            f = f.scale(&lc).sub(&shifted.scale(&fl));
            debug_assert!(f.is_zero() || f.degree() < df);
        }
        f
    }

    /// Primitive polynomial gcd over the integers (primitive PRS).
    /// Result is primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_negative() {
            a = a.scale(&(-T::one()));
        }
        a
    }

    /// Number of distinct complex roots: `deg(f) - deg(gcd(f, f'))`.
    pub fn distinct_root_count(&self) -> usize {
        assert!(!self.is_zero());
        self.degree() - self.gcd(&self.derivative()).degree()
    }

    /// Coefficients reduced mod 2 (0/1), ascending, trailing zeros kept off.
    pub fn mod2(&self) -> Vec<u8> {
        let two = T::from_u8(2).expect("small constant");
        let mut v: Vec<u8> = self
            .coeffs
            .iter()
            .map(|c| if c.mod_floor(&two).is_zero() { 0 } else { 1 })
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
}

/// Exact monic characteristic polynomial `det(xI - M)` by the
/// Faddeev–LeVerrier recursion; every division is exact.
pub fn char_poly<T: ExactScalar>(m: &SquareMatrix<T>) -> Poly<T> {
    let n = m.order();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut aux = SquareMatrix::<T>::zeros(n);
    for k in 1..=n {
        // aux <- M·(aux + c_{n-k+1}·I)
        for i in 0..n {
            aux[(i, i)] = aux[(i, i)].clone() + coeffs[n - k + 1].clone();
        }
        aux = m.matmul(&aux);
        let t = aux.trace();
        let kk = T::from_usize(k).expect("matrix order fits in T");
        debug_assert!((t.clone() % kk.clone()).is_zero());
        coeffs[n - k] = -(t / kk);
    }
    Poly::from_coeffs(coeffs)
}

impl<T: ExactScalar + fmt::Display> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}·x", c)?,
                _ => write!(f, "{}·x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bp(v: &[i64]) -> Poly<BigInt> {
        Poly::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Laplace-expansion determinant of xI - M over polynomial entries.
    /// Exponential; test oracle only.
    fn char_poly_by_laplace(m: &SquareMatrix<BigInt>) -> Poly<BigInt> {
        fn det(rows: &[usize], cols: &[usize], m: &SquareMatrix<BigInt>) -> Poly<BigInt> {
            let entry = |i: usize, j: usize| -> Poly<BigInt> {
                if i == j {
                    Poly::linear(m[(i, j)].clone())
                } else {
                    Poly::constant(-m[(i, j)].clone())
                }
            };
            if rows.len() == 1 {
                return entry(rows[0], cols[0]);
            }
            let mut acc = Poly::zero();
            let sub_rows: Vec<usize> = rows[1..].to_vec();
            for (k, &c) in cols.iter().enumerate() {
                let mut sub_cols = cols.to_vec();
                sub_cols.remove(k);
                let term = entry(rows[0], c).mul(&det(&sub_rows, &sub_cols, m));
                acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        let idx: Vec<usize> = (0..m.order()).collect();
        det(&idx, &idx, m)
    }

    #[test]
    fn char_poly_two_by_two() {
        let m = SquareMatrix::from_rows(vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ]);
        assert_eq!(char_poly(&m), bp(&[-1, 0, 1])); // x^2 - 1
    }

    #[test]
    fn char_poly_j_minus_i_3() {
        // J-I at order 3: (x-2)(x+1)^2 = x^3 - 3x - 2
        let m = SquareMatrix::<BigInt>::from_fn(3, |i, j| {
            if i == j {
                BigInt::from(0)
            } else {
                BigInt::from(1)
            }
        });
        assert_eq!(char_poly(&m), bp(&[-2, -3, 0, 1]));
    }

    #[test]
    fn char_poly_matches_laplace_oracle() {
        // a handful of small symmetric integer matrices
        let cases = vec![
            SquareMatrix::from_rows(vec![
                vec![BigInt::from(2), BigInt::from(-1), BigInt::from(3)],
                vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)],
                vec![BigInt::from(3), BigInt::from(1), BigInt::from(-2)],
            ]),
            SquareMatrix::<BigInt>::from_fn(5, |i, j| {
                if i == j {
                    BigInt::from(0)
                } else if (i + 2 * j) % 3 == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(-1)
                }
            }),
        ];
        for m in cases {
            let sym = SquareMatrix::from_fn(m.order(), |i, j| {
                m[(i.min(j), i.max(j))].clone()
            });
            assert_eq!(char_poly(&sym), char_poly_by_laplace(&sym));
        }
    }

    #[test]
    fn gcd_and_distinct_roots() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let f = bp(&[2, -3, 0, 1]);
        let g = f.gcd(&f.derivative());
        assert_eq!(g, bp(&[-1, 1])); // x - 1
        assert_eq!(f.distinct_root_count(), 2);
    }

    #[test]
    fn div_rem_monic_roundtrip() {
        let f = bp(&[6, 11, 6, 1]); // (x+1)(x+2)(x+3)
        let d = bp(&[2, 1]); // x + 2
        let (q, r) = f.div_rem_monic(&d);
        assert!(r.is_zero());
        assert_eq!(q.mul(&d), f);
        assert_eq!(q, bp(&[3, 4, 1]));
    }

    #[test]
    fn mod2_reduction() {
        let f = bp(&[4, 3, -2, 1]);
        assert_eq!(f.mod2(), vec![0, 1, 0, 1]);
    }
}
