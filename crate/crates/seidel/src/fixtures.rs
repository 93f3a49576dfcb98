//! Named construction fixtures used throughout the tests and the CLI.

use crate::algebraic::Eigenvalue;
use crate::error::{Error, Result};
use crate::poly::char_poly;
use crate::seidel::{seidel_from_graph, Graph, SeidelMatrix};
use crate::spectra::Spectrum;
use num_bigint::BigInt;

/// The exceptional 10×10 Seidel matrix with spectrum
/// `{[-3]^4, [2+√5]^3, [2-√5]^3}` whose switching class contains no regular
/// graph.
pub fn s10() -> SeidelMatrix {
    const ROWS: [[i8; 10]; 10] = [
        [0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [1, 0, -1, 1, 1, -1, 1, -1, 1, -1],
        [1, -1, 0, 1, 1, -1, -1, 1, -1, 1],
        [1, 1, 1, 0, 1, -1, -1, 1, -1, -1],
        [1, 1, 1, 1, 0, -1, 1, 1, 1, -1],
        [1, -1, -1, -1, -1, 0, 1, 1, 1, 1],
        [1, 1, -1, -1, 1, 1, 0, -1, 1, -1],
        [1, -1, 1, 1, 1, 1, -1, 0, 1, 1],
        [1, 1, -1, -1, 1, 1, 1, 1, 0, 1],
        [1, -1, 1, -1, -1, 1, -1, 1, 1, 0],
    ];
    SeidelMatrix::from_rows(ROWS.iter().map(|r| r.to_vec()).collect())
        .expect("fixture satisfies the Seidel invariants")
}

/// A 6×6 Seidel matrix with spectrum `{[-√5]^3, [√5]^3}`, i.e. characteristic
/// polynomial (x²-5)³. Found once by [`s6_search`] and embedded as data.
pub fn s6() -> SeidelMatrix {
    const ROWS: [[i8; 6]; 6] = [
        [0, 1, 1, -1, -1, 1],
        [1, 0, -1, 1, -1, 1],
        [1, -1, 0, -1, 1, 1],
        [-1, 1, -1, 0, 1, 1],
        [-1, -1, 1, 1, 0, 1],
        [1, 1, 1, 1, 1, 0],
    ];
    SeidelMatrix::from_rows(ROWS.iter().map(|r| r.to_vec()).collect())
        .expect("fixture satisfies the Seidel invariants")
}

/// Exhaustive regeneration of [`s6`]: scans the 2^15 upper triangles in
/// ascending bitmask order (bit k set ⇒ k-th triangle entry is -1) and
/// returns the first matrix whose characteristic polynomial is (x²-5)³.
pub fn s6_search() -> SeidelMatrix {
    let target: Vec<i64> = vec![-125, 0, 75, 0, -15, 0, 1];
    for bits in 0..(1u32 << 15) {
        let upper: Vec<i8> = (0..15)
            .map(|k| if bits >> k & 1 == 1 { -1 } else { 1 })
            .collect();
        let s = SeidelMatrix::from_upper_triangle(6, &upper).expect("valid triangle");
        if char_poly(&s.to_i64()).coeffs() == target {
            return s;
        }
    }
    unreachable!("a 6x6 Seidel matrix with spectrum {{[-√5]^3, [√5]^3}} exists");
}

/// The order-6(2k+1) family `J_{2k+1} ⊗ (S6 - I6) + I`, which has exactly
/// three distinct eigenvalues and no regular graph in its switching class.
pub fn sk_family(k: usize) -> Result<SeidelMatrix> {
    if k < 1 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let base = s6();
    let blocks = 2 * k + 1;
    let n = 6 * blocks;
    let mut rows = vec![vec![0i8; n]; n];
    for a in 0..blocks {
        for b in 0..blocks {
            for i in 0..6 {
                for j in 0..6 {
                    let inner = base.get(i, j) - i8::from(i == j); // S6 - I
                    let v = inner + i8::from(a == b && i == j); // + I on the diagonal
                    rows[a * 6 + i][b * 6 + j] = v;
                }
            }
        }
    }
    SeidelMatrix::from_rows(rows)
}

/// Closed-form spectrum of [`sk_family`]:
/// `{[-√5(2k+1)-2k]^3, [1]^(12k), [√5(2k+1)-2k]^3}`. The conjugate pair has
/// sum -4k and product 4k² - 5(2k+1)².
pub fn sk_spectrum(k: usize) -> Spectrum {
    assert!(k >= 1);
    let kk = BigInt::from(k);
    let p = BigInt::from(4) * &kk;
    let odd = BigInt::from(2) * &kk + 1;
    let q = BigInt::from(4) * &kk * &kk - BigInt::from(5) * &odd * &odd;
    Spectrum::from_entries(vec![
        (Eigenvalue::Integer(BigInt::from(1)), 12 * k),
        (Eigenvalue::QuadraticPair { p, q }, 3),
    ])
    .expect("closed form is a valid spectrum")
}

/// Seidel matrix of the complete graph K4; spectrum `{[-3]^1, [1]^3}`.
pub fn k4_seidel() -> SeidelMatrix {
    seidel_from_graph(&Graph::complete(4))
}

/// The Petersen graph: vertices are the 2-subsets of {0..4}, adjacent when
/// disjoint.
pub fn petersen_graph() -> Graph {
    let mut pairs = vec![];
    for a in 0..5 {
        for b in a + 1..5 {
            pairs.push((a, b));
        }
    }
    let mut edges = vec![];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, &edges).expect("valid Kneser construction")
}

/// Seidel matrix of the Petersen graph; spectrum `{[-3]^5, [3]^5}`.
pub fn petersen_seidel() -> SeidelMatrix {
    seidel_from_graph(&petersen_graph())
}

pub fn pentagon_graph() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).expect("valid cycle")
}

/// Seidel matrix of the 5-cycle; spectrum `{[-√5]^2, [0]^1, [√5]^2}`.
pub fn pentagon_seidel() -> SeidelMatrix {
    seidel_from_graph(&pentagon_graph())
}
