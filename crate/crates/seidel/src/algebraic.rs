//! Exact eigenvalues of degree at most two.
//!
//! A symmetric integer matrix whose characteristic polynomial splits into
//! linear and quadratic factors has eigenvalues that are either integers or
//! conjugate pairs `(-p ± √(p²-4q))/2` of roots of a monic `x² + p x + q`.
//! Comparisons are decided exactly by sign analysis and squaring; no
//! floating point is involved.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// An exact eigenvalue entry: a rational integer, or the conjugate pair of
/// roots of `x² + p x + q` (discriminant positive and not a perfect square).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Eigenvalue {
    Integer(BigInt),
    /// Both roots of `x² + p x + q`, taken jointly.
    QuadraticPair { p: BigInt, q: BigInt },
}

impl fmt::Debug for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Integer(v) => write!(f, "{}", v),
            Eigenvalue::QuadraticPair { p, q } => write!(f, "surd({},{})", p, q),
        }
    }
}

impl Eigenvalue {
    pub fn integer(v: impl Into<BigInt>) -> Self {
        Eigenvalue::Integer(v.into())
    }

    pub fn pair(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        let (p, q) = (p.into(), q.into());
        debug_assert!(
            quadratic_is_real_irrational(&p, &q),
            "x^2 + {p} x + {q} must have a positive non-square discriminant"
        );
        Eigenvalue::QuadraticPair { p, q }
    }

    /// λ + λ̄ for a pair; v itself for an integer (counts once).
    pub fn trace_contribution(&self) -> BigInt {
        match self {
            Eigenvalue::Integer(v) => v.clone(),
            Eigenvalue::QuadraticPair { p, .. } => -p.clone(),
        }
    }

    /// λ² + λ̄² for a pair (= p² - 2q); v² for an integer.
    pub fn square_sum(&self) -> BigInt {
        match self {
            Eigenvalue::Integer(v) => v * v,
            Eigenvalue::QuadraticPair { p, q } => p * p - BigInt::from(2) * q,
        }
    }

    /// λ³ + λ̄³ for a pair (= -p³ + 3pq); v³ for an integer.
    pub fn cube_sum(&self) -> BigInt {
        match self {
            Eigenvalue::Integer(v) => v * v * v,
            Eigenvalue::QuadraticPair { p, q } => -(p * p * p) + BigInt::from(3) * p * q,
        }
    }

    /// How many real numbers this entry stands for (1 or 2).
    pub fn arity(&self) -> usize {
        match self {
            Eigenvalue::Integer(_) => 1,
            Eigenvalue::QuadraticPair { .. } => 2,
        }
    }

    /// The roots this entry represents, as comparable algebraic numbers.
    pub fn roots(&self) -> Vec<QuadRoot> {
        match self {
            Eigenvalue::Integer(v) => vec![QuadRoot::Integer(v.clone())],
            Eigenvalue::QuadraticPair { p, q } => vec![
                QuadRoot::Surd {
                    p: p.clone(),
                    q: q.clone(),
                    plus: false,
                },
                QuadRoot::Surd {
                    p: p.clone(),
                    q: q.clone(),
                    plus: true,
                },
            ],
        }
    }
}

/// True when `x² + p x + q` has two distinct real irrational roots.
pub fn quadratic_is_real_irrational(p: &BigInt, q: &BigInt) -> bool {
    let disc = p * p - BigInt::from(4) * q;
    disc.is_positive() && !is_perfect_square(&disc)
}

pub fn is_perfect_square(v: &BigInt) -> bool {
    if v.is_negative() {
        return false;
    }
    let r = v.sqrt();
    &(&r * &r) == v
}

/// A single real algebraic number of degree ≤ 2: an integer, or
/// `(-p + s·√(p²-4q))/2` with `s = ±1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuadRoot {
    Integer(BigInt),
    Surd { p: BigInt, q: BigInt, plus: bool },
}

impl QuadRoot {
    /// Representation as `(a + b√d)/2` with integer `a`, `b`, `d ≥ 0`.
    fn halves(&self) -> (BigInt, BigInt, BigInt) {
        match self {
            QuadRoot::Integer(v) => (BigInt::from(2) * v, BigInt::zero(), BigInt::zero()),
            QuadRoot::Surd { p, q, plus } => {
                let d = p * p - BigInt::from(4) * q;
                let b = if *plus { BigInt::from(1) } else { BigInt::from(-1) };
                (-p.clone(), b, d)
            }
        }
    }

    pub fn exact_cmp(&self, other: &Self) -> Ordering {
        let (a1, b1, d1) = self.halves();
        let (a2, b2, d2) = other.halves();
        // sign of (a1 - a2) + b1√d1 - b2√d2
        sign_two_radicals(&(a1 - a2), &b1, &d1, &(-b2), &d2)
    }
}

/// Sign of `a + b√d` for integers with `d ≥ 0`.
pub fn sign_one_radical(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    if b.is_zero() || d.is_zero() {
        return a.cmp(&BigInt::zero());
    }
    match (a.is_negative(), b.is_negative()) {
        (false, false) => {
            if a.is_zero() && b.is_zero() {
                Ordering::Equal
            } else {
                Ordering::Greater
            }
        }
        (true, true) => Ordering::Less,
        _ => {
            // exactly one of a, b negative: compare a² with b²·d
            let lhs = a * a;
            let rhs = b * b * d;
            if a.is_negative() {
                // a < 0 < b√d: positive iff b²d > a²
                rhs.cmp(&lhs)
            } else {
                // b√d < 0 ≤ a: positive iff a² > b²d
                lhs.cmp(&rhs)
            }
        }
    }
}

/// Sign of `c + b1√d1 + b2√d2` for integers with `d1, d2 ≥ 0`.
fn sign_two_radicals(c: &BigInt, b1: &BigInt, d1: &BigInt, b2: &BigInt, d2: &BigInt) -> Ordering {
    // compare (c + b1√d1) against -b2√d2
    let lhs = sign_one_radical(c, b1, d1);
    let rhs = sign_one_radical(&BigInt::zero(), &(-b2.clone()), d2);
    match (lhs, rhs) {
        (Ordering::Less, Ordering::Greater | Ordering::Equal) => return Ordering::Less,
        (Ordering::Greater, Ordering::Less | Ordering::Equal) => return Ordering::Greater,
        (Ordering::Equal, Ordering::Equal) => return Ordering::Equal,
        (Ordering::Equal, Ordering::Less) => return Ordering::Greater,
        (Ordering::Equal, Ordering::Greater) => return Ordering::Less,
        _ => {}
    }
    // both sides share a strict sign; square both:
    // (c + b1√d1)² = c² + b1²d1 + 2cb1√d1   vs   b2²d2
    let a = c * c + b1 * b1 * d1 - b2 * b2 * d2;
    let b = BigInt::from(2) * c * b1;
    let cmp_sq = sign_one_radical(&a, &b, d1);
    if lhs == Ordering::Greater {
        cmp_sq
    } else {
        cmp_sq.reverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> QuadRoot {
        QuadRoot::Integer(BigInt::from(v))
    }

    fn surd(p: i64, q: i64, plus: bool) -> QuadRoot {
        QuadRoot::Surd {
            p: BigInt::from(p),
            q: BigInt::from(q),
            plus,
        }
    }

    #[test]
    fn integer_vs_surd() {
        // 2 - √5 ≈ -0.236 vs -3
        let r = surd(-4, -1, false);
        assert_eq!(r.exact_cmp(&int(-3)), Ordering::Greater);
        assert_eq!(int(-3).exact_cmp(&r), Ordering::Less);
        // -√5 ≈ -2.236 vs 0 and -3
        let m = surd(0, -5, false);
        assert_eq!(m.exact_cmp(&int(0)), Ordering::Less);
        assert_eq!(m.exact_cmp(&int(-3)), Ordering::Greater);
        assert_eq!(m.exact_cmp(&int(-2)), Ordering::Less);
    }

    #[test]
    fn surd_vs_surd() {
        // √2 < √3
        let a = surd(0, -2, true);
        let b = surd(0, -3, true);
        assert_eq!(a.exact_cmp(&b), Ordering::Less);
        // 2+√5 ≈ 4.236 > 1+√3 ≈ 2.732
        let c = surd(-4, -1, true);
        let d = surd(-2, -2, true);
        assert_eq!(c.exact_cmp(&d), Ordering::Greater);
        // conjugates of the same pair
        assert_eq!(surd(-4, -1, false).exact_cmp(&c), Ordering::Less);
        assert_eq!(c.exact_cmp(&c), Ordering::Equal);
        // -2-3√5 ≈ -8.708 < -√5
        let e = surd(4, -41, false);
        let f = surd(0, -5, false);
        assert_eq!(e.exact_cmp(&f), Ordering::Less);
    }

    #[test]
    fn power_sums() {
        let pair = Eigenvalue::pair(-4, -1); // 2 ± √5
        assert_eq!(pair.trace_contribution(), BigInt::from(4));
        assert_eq!(pair.square_sum(), BigInt::from(18)); // (2+√5)²+(2-√5)² = 18
        assert_eq!(pair.cube_sum(), BigInt::from(76)); // (38+17√5)+(38-17√5)
    }

    #[test]
    fn cube_sum_formula() {
        // λ+μ = -p, λμ = q; λ³+μ³ = (λ+μ)³ - 3λμ(λ+μ) = -p³ + 3pq
        let pair = Eigenvalue::pair(-1, -1); // golden ratio pair, roots of x²-x-1
        // λ³+μ³ where λ+μ=1, λμ=-1: 1 + 3 = 4
        assert_eq!(pair.cube_sum(), BigInt::from(4));
    }

    #[test]
    fn perfect_square_detection() {
        assert!(is_perfect_square(&BigInt::from(0)));
        assert!(is_perfect_square(&BigInt::from(49)));
        assert!(!is_perfect_square(&BigInt::from(5)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
    }
}
