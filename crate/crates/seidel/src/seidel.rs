//! Seidel matrices, underlying graphs and switching.
//!
//! A Seidel matrix is symmetric with zero diagonal and ±1 off-diagonal
//! entries. Conjugating by a diagonal ±1 matrix ("switching") preserves the
//! spectrum; the orbit of a matrix under switching and vertex permutation is
//! its switching class. The underlying graph of `S` has adjacency matrix
//! `(J - I - S)/2`.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use num_bigint::BigInt;

/// Symmetric ±1 matrix with zero diagonal. Entries stored row-major as `i8`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeidelMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SeidelMatrix {
    /// Validates the invariants: zero diagonal, symmetry, ±1 off-diagonal.
    pub fn from_entries(n: usize, entries: Vec<i8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSeidel {
                row: 0,
                col: 0,
                reason: "order must be at least 1".into(),
            });
        }
        if entries.len() != n * n {
            return Err(Error::InvalidSeidel {
                row: 0,
                col: 0,
                reason: format!("expected {} entries, got {}", n * n, entries.len()),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let e = entries[i * n + j];
                if i == j && e != 0 {
                    return Err(Error::InvalidSeidel {
                        row: i,
                        col: j,
                        reason: "diagonal entry must be 0".into(),
                    });
                }
                if i != j && e != 1 && e != -1 {
                    return Err(Error::InvalidSeidel {
                        row: i,
                        col: j,
                        reason: format!("off-diagonal entry must be ±1, got {e}"),
                    });
                }
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::InvalidSeidel {
                        row: i,
                        col: j,
                        reason: "matrix must be symmetric".into(),
                    });
                }
            }
        }
        Ok(SeidelMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidSeidel {
                    row: i,
                    col: 0,
                    reason: format!("row {i} has length {} (expected {n})", r.len()),
                });
            }
        }
        Self::from_entries(n, rows.into_iter().flatten().collect())
    }

    /// Builds from the strict upper triangle in row-major order
    /// ((0,1),(0,2),…,(0,n-1),(1,2),…), mirroring below the diagonal.
    pub fn from_upper_triangle(n: usize, upper: &[i8]) -> Result<Self> {
        if upper.len() != n * (n - 1) / 2 {
            return Err(Error::InvalidSeidel {
                row: 0,
                col: 0,
                reason: "upper triangle length mismatch".into(),
            });
        }
        let mut entries = vec![0i8; n * n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                entries[i * n + j] = upper[k];
                entries[j * n + i] = upper[k];
                k += 1;
            }
        }
        Self::from_entries(n, entries)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn upper_triangle(&self) -> Vec<i8> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(self.get(i, j));
            }
        }
        out
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn to_big(&self) -> SquareMatrix<BigInt> {
        SquareMatrix::from_fn(self.n, |i, j| BigInt::from(self.get(i, j)))
    }

    pub fn to_i64(&self) -> SquareMatrix<i64> {
        SquareMatrix::from_fn(self.n, |i, j| self.get(i, j) as i64)
    }

    /// Principal submatrix obtained by deleting one vertex.
    pub fn delete_vertex(&self, v: usize) -> SeidelMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != v).collect();
        let m = keep.len();
        let mut entries = vec![0i8; m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                entries[a * m + b] = self.get(i, j);
            }
        }
        SeidelMatrix { n: m, entries }
    }

    /// Relabel vertices: entry (i,j) of the result is `self[perm[i]][perm[j]]`.
    pub fn permute(&self, perm: &[usize]) -> SeidelMatrix {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        SeidelMatrix { n, entries }
    }
}

/// Simple graph backed by per-vertex bitsets (`u64` words).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            rows: vec![vec![0u64; words]; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert_ne!(u, v);
        for (a, b) in [(u, v), (v, u)] {
            let word = &mut self.rows[a][b / 64];
            if present {
                *word |= 1 << (b % 64);
            } else {
                *word &= !(1 << (b % 64));
            }
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Every vertex has even degree.
    pub fn is_euler(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) % 2 == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if !seen[v] && self.has_edge(u, v) {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn adjacency_big(&self) -> SquareMatrix<BigInt> {
        SquareMatrix::from_fn(self.n, |i, j| {
            if i != j && self.has_edge(i, j) {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        })
    }
}

/// Diagonal ±1 switching, normalized so the first sign is +1 (conjugation
/// by -I is trivial, so the quotient halves the search space).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SwitchingVector {
    signs: Vec<i8>,
}

impl SwitchingVector {
    pub fn identity(n: usize) -> Self {
        SwitchingVector { signs: vec![1; n] }
    }

    /// Normalizes by the global sign so that `signs[0] = +1`.
    pub fn from_signs(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Precondition("switching signs must be ±1".into()));
        }
        if signs.is_empty() {
            return Err(Error::Precondition("empty switching vector".into()));
        }
        let flip = signs[0] == -1;
        Ok(SwitchingVector {
            signs: signs
                .into_iter()
                .map(|s| if flip { -s } else { s })
                .collect(),
        })
    }

    /// Switching that negates exactly the vertices in `flipped`
    /// (vertex 0 must not be flipped; use the complement instead).
    pub fn from_flipped_set(n: usize, flipped: &[usize]) -> Result<Self> {
        let mut signs = vec![1i8; n];
        for &v in flipped {
            if v >= n {
                return Err(Error::Precondition(format!("vertex {v} out of range")));
            }
            signs[v] = -signs[v];
        }
        Self::from_signs(signs)
    }

    /// Bitmask over vertices 1..n (bit k set ⇒ vertex k+1 negated).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut signs = vec![1i8; n];
        for k in 1..n {
            if mask >> (k - 1) & 1 == 1 {
                signs[k] = -1;
            }
        }
        SwitchingVector { signs }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// Pointwise product; the group operation on switchings.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(self.len(), other.len()));
        }
        Self::from_signs(
            self.signs
                .iter()
                .zip(&other.signs)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    /// Rendered as a ±1 string, e.g. `+-++-`.
    pub fn render(&self) -> String {
        self.signs
            .iter()
            .map(|&s| if s == 1 { '+' } else { '-' })
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let signs: Vec<i8> = text
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::Parse {
                    line: 1,
                    col: 1,
                    msg: format!("switching signs must be + or -, got {other:?}"),
                }),
            })
            .collect::<Result<_>>()?;
        Self::from_signs(signs)
    }
}

impl serde::Serialize for SwitchingVector {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.render())
    }
}

impl<'de> serde::Deserialize<'de> for SwitchingVector {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        SwitchingVector::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// `S = J - I - 2A` from the graph's adjacency matrix.
pub fn seidel_from_graph(g: &Graph) -> SeidelMatrix {
    let n = g.order();
    let mut entries = vec![0i8; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                entries[i * n + j] = if g.has_edge(i, j) { -1 } else { 1 };
            }
        }
    }
    SeidelMatrix { n, entries }
}

/// Conjugation `D S D` by the diagonal matrix of switching signs.
pub fn switch(s: &SeidelMatrix, v: &SwitchingVector) -> Result<SeidelMatrix> {
    if v.len() != s.order() {
        return Err(Error::DimensionMismatch(s.order(), v.len()));
    }
    let n = s.order();
    let mut entries = vec![0i8; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = v.sign(i) * v.sign(j) * s.get(i, j);
        }
    }
    Ok(SeidelMatrix { n, entries })
}

/// Underlying graph of `switch(s, v)`: adjacency `(J - I - DSD)/2`.
pub fn graph_from_seidel(s: &SeidelMatrix, v: &SwitchingVector) -> Result<Graph> {
    if v.len() != s.order() {
        return Err(Error::DimensionMismatch(s.order(), v.len()));
    }
    let n = s.order();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if v.sign(i) * v.sign(j) * s.get(i, j) == -1 {
                g.set_edge(i, j, true);
            }
        }
    }
    Ok(g)
}

/// Finds a switching whose underlying graph has all degrees even, when one
/// exists. Degree parities transform linearly over GF(2), so the question
/// is decided exactly:
/// - odd order: a solution always exists and is unique given the
///   normalization `signs[0] = +1`;
/// - even order: a solution exists iff all current degrees share one
///   parity (identity if all even, a single-vertex flip if all odd).
pub fn euler_switch(s: &SeidelMatrix) -> Option<SwitchingVector> {
    let n = s.order();
    let g = graph_from_seidel(s, &SwitchingVector::identity(n)).expect("orders match");
    let degs = g.degrees();
    if n == 1 {
        return Some(SwitchingVector::identity(1));
    }
    let v = if n % 2 == 1 {
        // flip vertex i iff deg_i + b is odd, where b makes vertex 0 fixed
        let b = degs[0] % 2;
        let signs: Vec<i8> = degs
            .iter()
            .map(|&d| if (d + b) % 2 == 1 { -1 } else { 1 })
            .collect();
        SwitchingVector::from_signs(signs).expect("valid signs")
    } else {
        let all_even = degs.iter().all(|&d| d % 2 == 0);
        let all_odd = degs.iter().all(|&d| d % 2 == 1);
        if all_even {
            SwitchingVector::identity(n)
        } else if all_odd {
            // flipping any single vertex flips every degree parity
            SwitchingVector::from_flipped_set(n, &[1]).expect("vertex in range")
        } else {
            return None;
        }
    };
    debug_assert!(graph_from_seidel(s, &v).expect("orders match").is_euler());
    Some(v)
}
