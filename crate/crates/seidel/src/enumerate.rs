//! Exhaustive enumeration of switching classes at small orders.
//!
//! Two Seidel matrices are equivalent when one arises from the other by a
//! vertex permutation and a diagonal ±1 switching. The canonical form of a
//! class is the lexicographically minimal key over the whole orbit, found
//! by branch-and-bound over vertex orderings: once the first vertex of an
//! ordering is chosen, normalizing its row to all -1 fixes the switching,
//! so only the interior entries vary. Enumeration walks all 2^(n(n-1)/2)
//! upper triangles and buckets them by canonical key.

use crate::error::{Error, Result};
use crate::seidel::SeidelMatrix;
use crate::spectra::{spectrum, Spectrum};
use rayon::prelude::*;
use std::collections::HashMap;

const MAX_CANONICAL_ORDER: usize = 8;

/// A switching class with its canonical representative.
#[derive(Clone, Debug)]
pub struct CanonicalClass {
    pub representative: SeidelMatrix,
    pub spectrum: Spectrum,
    /// Number of labeled Seidel matrices in the class; filled by
    /// enumeration, absent for a standalone canonical form.
    pub labeled_count: Option<u64>,
}

/// Canonical key of the orbit of `s` under permutation and switching.
///
/// The key lists, for each placed vertex t ≥ 2, the normalized entries
/// (1,t), …, (t-1,t); row 0 is always all -1 after normalization and is
/// omitted. Keys are compared entrywise with -1 < +1.
fn canonical_key(s: &SeidelMatrix) -> Vec<i8> {
    let n = s.order();
    if n == 1 {
        return vec![];
    }
    let key_len = (n - 1) * (n - 2) / 2;

    // entry (i,t) of the normalized relabeled matrix for an order prefix:
    // s(π0,πi) · s(π0,πt) · s(πi,πt)
    struct Search<'a> {
        s: &'a SeidelMatrix,
        n: usize,
        best: Vec<i8>,
        order: Vec<usize>,
        used: Vec<bool>,
        current: Vec<i8>,
    }

    impl Search<'_> {
        fn entry(&self, i: usize, t: usize) -> i8 {
            let p0 = self.order[0];
            let (pi, pt) = (self.order[i], self.order[t]);
            self.s.get(p0, pi) * self.s.get(p0, pt) * self.s.get(pi, pt)
        }

        /// depth = number of placed vertices; `tied` = current equals the
        /// best key on the compared prefix.
        fn dfs(&mut self, depth: usize, tied: bool) {
            let n = self.n;
            if depth == n {
                if !tied {
                    self.best = self.current.clone();
                }
                return;
            }
            for v in 0..n {
                if self.used[v] {
                    continue;
                }
                self.used[v] = true;
                self.order.push(v);
                let t = depth;
                let start = self.current.len();
                let mut still_tied = tied;
                let mut pruned = false;
                if t >= 2 {
                    for i in 1..t {
                        let e = self.entry(i, t);
                        self.current.push(e);
                        if still_tied {
                            let idx = self.current.len() - 1;
                            match e.cmp(&self.best[idx]) {
                                std::cmp::Ordering::Less => still_tied = false,
                                std::cmp::Ordering::Greater => {
                                    pruned = true;
                                    break;
                                }
                                std::cmp::Ordering::Equal => {}
                            }
                        }
                    }
                }
                if !pruned {
                    self.dfs(depth + 1, still_tied);
                }
                self.current.truncate(start);
                self.order.pop();
                self.used[v] = false;
            }
        }
    }

    // seed with the identity ordering's key
    let mut seed = Vec::with_capacity(key_len);
    for t in 2..n {
        for i in 1..t {
            seed.push(s.get(0, i) * s.get(0, t) * s.get(i, t));
        }
    }
    let mut search = Search {
        s,
        n,
        best: seed,
        order: vec![],
        used: vec![false; n],
        current: Vec::with_capacity(key_len),
    };
    search.dfs(0, true);
    search.best
}

/// Rebuilds the representative matrix from a canonical key: row 0 is all
/// -1 and the interior entries follow the key.
fn matrix_from_key(n: usize, key: &[i8]) -> SeidelMatrix {
    let mut rows = vec![vec![0i8; n]; n];
    for j in 1..n {
        rows[0][j] = -1;
        rows[j][0] = -1;
    }
    let mut idx = 0;
    for t in 2..n {
        for i in 1..t {
            rows[i][t] = key[idx];
            rows[t][i] = key[idx];
            idx += 1;
        }
    }
    SeidelMatrix::from_rows(rows).expect("key encodes a valid Seidel matrix")
}

/// Canonical form of the switching class of `s` (order at most 8).
pub fn canonical_form(s: &SeidelMatrix) -> Result<CanonicalClass> {
    let n = s.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge {
            op: "canonical_form",
            n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let key = canonical_key(s);
    let representative = matrix_from_key(n, &key);
    Ok(CanonicalClass {
        spectrum: spectrum(&representative),
        representative,
        labeled_count: None,
    })
}

/// All switching classes of order n, by exhausting the 2^(n(n-1)/2) upper
/// triangles. Default limit is n ≤ 6; order 7 runs behind
/// [`enumerate_classes_extended`].
pub fn enumerate_classes(n: usize) -> Result<Vec<CanonicalClass>> {
    if n > 6 {
        return Err(Error::OrderTooLarge {
            op: "enumerate_classes",
            n,
            max: 6,
        });
    }
    enumerate_all(n)
}

/// Enumeration including the long-running order 7.
pub fn enumerate_classes_extended(n: usize) -> Result<Vec<CanonicalClass>> {
    if n > 7 {
        return Err(Error::OrderTooLarge {
            op: "enumerate_classes_extended",
            n,
            max: 7,
        });
    }
    enumerate_all(n)
}

fn enumerate_all(n: usize) -> Result<Vec<CanonicalClass>> {
    if n == 0 {
        return Err(Error::Precondition("order must be positive".into()));
    }
    let tri_len = n * (n - 1) / 2;
    let total: u64 = 1 << tri_len;
    const CHUNK: u64 = 1 << 12;
    let chunk_count = total.div_ceil(CHUNK);
    let maps: Vec<HashMap<Vec<i8>, u64>> = (0..chunk_count)
        .into_par_iter()
        .map(|chunk| {
            let mut local: HashMap<Vec<i8>, u64> = HashMap::new();
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(total);
            for bits in lo..hi {
                let upper: Vec<i8> = (0..tri_len)
                    .map(|k| if bits >> k & 1 == 1 { -1 } else { 1 })
                    .collect();
                let s = SeidelMatrix::from_upper_triangle(n, &upper).expect("valid triangle");
                *local.entry(canonical_key(&s)).or_insert(0) += 1;
            }
            local
        })
        .collect();
    let mut merged: HashMap<Vec<i8>, u64> = HashMap::new();
    for m in maps {
        for (k, v) in m {
            *merged.entry(k).or_insert(0) += v;
        }
    }
    let mut keys: Vec<(Vec<i8>, u64)> = merged.into_iter().collect();
    keys.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keys
        .into_iter()
        .map(|(key, count)| {
            let representative = matrix_from_key(n, &key);
            CanonicalClass {
                spectrum: spectrum(&representative),
                representative,
                labeled_count: Some(count),
            }
        })
        .collect())
}

/// One line of the enumeration results file: the representative in
/// row-major 0/+/- encoding, its spectrum, and the regular-witness count.
pub fn render_class_line(class: &CanonicalClass, witness_count: usize) -> String {
    let s = &class.representative;
    let n = s.order();
    let mut enc = String::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            enc.push(match s.get(i, j) {
                0 => '0',
                1 => '+',
                -1 => '-',
                _ => unreachable!("Seidel entries are 0 or ±1"),
            });
        }
    }
    format!("{enc} {} {witness_count}", class.spectrum.render())
}

/// Independent class count by Burnside's lemma over the permutation action
/// on cosets of the GF(2) cut space: the number of switching classes is
/// (1/n!) Σ_π 2^(m - rank(π+1 mod W) - n + 1), with m = n(n-1)/2 edge
/// coordinates and W the dimension-(n-1) cut space.
pub fn burnside_class_count(n: usize) -> u64 {
    assert!((1..=7).contains(&n), "oracle is for small orders");
    let m = n * (n - 1) / 2;
    let edge_index = |i: usize, j: usize| -> usize {
        let (i, j) = (i.min(j), i.max(j));
        // row-major upper triangle
        i * n - i * (i + 1) / 2 + (j - i - 1)
    };
    // cut-space basis: stars of vertices 0..n-2, echelonized
    let mut cut_basis: Vec<u32> = (0..n - 1)
        .map(|v| {
            let mut mask = 0u32;
            for u in 0..n {
                if u != v {
                    mask |= 1 << edge_index(v, u);
                }
            }
            mask
        })
        .collect();
    echelonize(&mut cut_basis);
    let reduce = |mut x: u32| -> u32 {
        for &b in &cut_basis {
            let pivot = 31 - b.leading_zeros();
            if x >> pivot & 1 == 1 {
                x ^= b;
            }
        }
        x
    };

    let mut total: u64 = 0;
    let mut count_perm = |perm: &[usize]| {
        // images of unit edge vectors under π+1, reduced mod the cut space
        let mut images: Vec<u32> = vec![];
        for i in 0..n {
            for j in i + 1..n {
                let e = edge_index(i, j);
                let pe = edge_index(perm[i], perm[j]);
                let img = reduce((1u32 << e) ^ (1u32 << pe));
                if img != 0 {
                    images.push(img);
                }
            }
        }
        echelonize(&mut images);
        let r = images.len();
        total += 1u64 << (m - r - (n - 1));
    };
    let mut perm: Vec<usize> = (0..n).collect();
    permute_all(&mut perm, 0, &mut count_perm);
    let factorial: u64 = (1..=n as u64).product();
    assert_eq!(total % factorial, 0, "Burnside sum must divide evenly");
    total / factorial
}

fn echelonize(basis: &mut Vec<u32>) {
    let mut out: Vec<u32> = vec![];
    for &x in basis.iter() {
        let mut v = x;
        for &b in &out {
            let pivot = 31 - b.leading_zeros();
            if v >> pivot & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            out.push(v);
            out.sort_by_key(|b| std::cmp::Reverse(31 - b.leading_zeros()));
        }
    }
    *basis = out;
}

fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}
