//! Regular graphs in switching classes.
//!
//! A switching class contains a k-regular graph exactly when some
//! eigenspace of the Seidel matrix contains a ±1 vector ("regular
//! eigenspace"); the eigenvalue is then θ = n-1-2k. Searches run over the
//! 2^(n-1) sign vectors with the first sign fixed, pruned by partial row
//! sums. Together with the spectrum maps this yields both exhaustive
//! certificates at small order and necessary conditions (closed-3-walk
//! counts, parity) that work from the spectrum alone.

use crate::algebraic::Eigenvalue;
use crate::error::{Error, Result};
use crate::seidel::{graph_from_seidel, SeidelMatrix, SwitchingVector};
use crate::spectra::{matrix_spectrum, spectrum, Spectrum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Order cap for exhaustive sign-vector searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_order: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_order: 24 }
    }
}

/// A regular graph found in a switching class.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegularWitness {
    /// Switching producing the regular graph (first sign +1).
    pub switching: SwitchingVector,
    /// Valency of the witness graph.
    pub valency: usize,
    /// The Seidel eigenvalue n-1-2k certified by the witness.
    pub theta: i64,
    /// Spectrum of the witness graph's adjacency matrix.
    pub graph_spectrum: Spectrum,
    /// The eigenvalue map assumes connectivity; disconnected witnesses
    /// are still reported, flagged here.
    pub connected: bool,
}

/// Prune test: with signs fixed for vertices < t, row i still needs
/// θ·x_i - r_i reachable by the remaining ±1 terms (count and parity).
fn rows_feasible(s: &SeidelMatrix, theta: i64, x: &[i64], r: &[i64], t: usize) -> bool {
    let n = s.order();
    for i in 0..n {
        let unknown = if i < t { n - t } else { n - t - 1 } as i64;
        let check = |target: i64| -> bool {
            let gap = (target - r[i]).abs();
            gap <= unknown && (target - r[i] - unknown) % 2 == 0
        };
        let ok = if i < t {
            check(theta * x[i])
        } else {
            check(theta) || check(-theta)
        };
        if !ok {
            return false;
        }
    }
    true
}

fn dfs_sign_eigenvectors(
    s: &SeidelMatrix,
    theta: i64,
    x: &mut Vec<i64>,
    r: &mut Vec<i64>,
    out: &mut Vec<SwitchingVector>,
    first_only: bool,
) {
    let n = s.order();
    let t = x.len();
    if t == n {
        if (0..n).all(|i| r[i] == theta * x[i]) {
            let signs = x.iter().map(|&v| v as i8).collect();
            out.push(SwitchingVector::from_signs(signs).expect("±1 signs"));
        }
        return;
    }
    for cand in [1i64, -1] {
        if first_only && !out.is_empty() {
            return;
        }
        x.push(cand);
        for i in 0..n {
            if i != t {
                r[i] += (s.get(i, t) as i64) * cand;
            }
        }
        if rows_feasible(s, theta, x, r, t + 1) {
            dfs_sign_eigenvectors(s, theta, x, r, out, first_only);
        }
        x.pop();
        for i in 0..n {
            if i != t {
                r[i] -= (s.get(i, t) as i64) * cand;
            }
        }
    }
}

/// All ±1 vectors x (x[0] = +1) with Sx = θx, in lexicographic order
/// ('+' before '-'). Depth-first with partial-sum and parity pruning;
/// larger orders split the prefix space across threads.
fn sign_eigenvectors(s: &SeidelMatrix, theta: i64, first_only: bool) -> Vec<SwitchingVector> {
    let n = s.order();
    // every row sum Σ_{j≠i} ±1 has parity n-1, so θ must match it mod 2
    if (theta - (n as i64 - 1)).rem_euclid(2) != 0 {
        return vec![];
    }

    let root_x = vec![1i64];
    let mut root_r: Vec<i64> = (0..n).map(|i| s.get(i, 0) as i64).collect();
    root_r[0] = 0;
    if !rows_feasible(s, theta, &root_x, &root_r, 1) {
        return vec![];
    }

    const PAR_THRESHOLD: usize = 18;
    const PREFIX_BITS: usize = 8;
    if first_only || n <= PAR_THRESHOLD {
        let mut out = Vec::new();
        let mut x = root_x;
        let mut r = root_r;
        dfs_sign_eigenvectors(s, theta, &mut x, &mut r, &mut out, first_only);
        return out;
    }

    // deterministic parallel split on the first PREFIX_BITS free signs
    let chunks: Vec<Vec<SwitchingVector>> = (0u64..1 << PREFIX_BITS)
        .into_par_iter()
        .map(|mask| {
            let mut x = vec![1i64];
            let mut r: Vec<i64> = (0..n).map(|i| s.get(i, 0) as i64).collect();
            r[0] = 0;
            for b in 0..PREFIX_BITS {
                // bit order chosen so ascending masks give lexicographic output
                let cand = if mask >> (PREFIX_BITS - 1 - b) & 1 == 1 { -1 } else { 1 };
                let t = x.len();
                x.push(cand);
                for i in 0..n {
                    if i != t {
                        r[i] += (s.get(i, t) as i64) * cand;
                    }
                }
                if !rows_feasible(s, theta, &x, &r, t + 1) {
                    return vec![];
                }
            }
            let mut out = Vec::new();
            dfs_sign_eigenvectors(s, theta, &mut x, &mut r, &mut out, false);
            out
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

/// Searches the θ-eigenspace for a ±1 vector. θ must be an integer
/// eigenvalue of `s`; irrational eigenvalues never admit one (the implied
/// valency (n-1-θ)/2 would not be an integer), so the API takes an integer.
pub fn regular_eigenspace_search(
    s: &SeidelMatrix,
    theta: &BigInt,
) -> Result<Option<SwitchingVector>> {
    let spec = spectrum(s);
    if !spec.is_integer_eigenvalue(theta) {
        return Err(Error::Precondition(format!(
            "{theta} is not an integer eigenvalue"
        )));
    }
    let t = theta.to_i64().expect("eigenvalue bounded by order");
    Ok(sign_eigenvectors(s, t, true).into_iter().next())
}

/// Exhaustively finds every switching whose underlying graph is regular.
/// The empty list is an exhaustive certificate (within the budget) that
/// the switching class contains no regular graph.
pub fn find_regular_graphs(s: &SeidelMatrix) -> Result<Vec<RegularWitness>> {
    find_regular_graphs_with_budget(s, SearchBudget::default())
}

pub fn find_regular_graphs_with_budget(
    s: &SeidelMatrix,
    budget: SearchBudget,
) -> Result<Vec<RegularWitness>> {
    let n = s.order();
    if n > budget.max_order {
        return Err(Error::BudgetExceeded {
            order: n,
            limit: budget.max_order,
        });
    }
    let spec = spectrum(s);
    // a k-regular witness forces the integer eigenvalue θ = n-1-2k,
    // so only integer eigenvalues of matching parity can carry witnesses
    let thetas: Vec<i64> = spec
        .integer_entries()
        .map(|(v, _)| v.to_i64().expect("eigenvalue bounded by order"))
        .filter(|t| (t - (n as i64 - 1)).rem_euclid(2) == 0)
        .collect();
    let mut witnesses: Vec<RegularWitness> = thetas
        .iter()
        .flat_map(|&theta| {
            sign_eigenvectors(s, theta, false)
                .into_iter()
                .map(move |v| (theta, v))
        })
        .map(|(theta, v)| {
            let g = graph_from_seidel(s, &v).expect("orders match");
            let k = g
                .is_regular()
                .expect("eigenvector certificate yields a regular graph");
            debug_assert_eq!(n as i64 - 1 - 2 * k as i64, theta);
            let graph_spectrum =
                matrix_spectrum(&g.adjacency_big()).expect("adjacency is symmetric");
            RegularWitness {
                connected: g.is_connected(),
                switching: v,
                valency: k,
                theta,
                graph_spectrum,
            }
        })
        .collect();
    witnesses.sort_by(|a, b| a.switching.render().cmp(&b.switching.render()));
    Ok(witnesses)
}

/// Spectrum map for a connected k-regular graph on n vertices:
/// `{[k]^1, [λᵢ]^mᵢ} ↦ {[n-1-2k]^1, [-1-2λᵢ]^mᵢ}`, merged as a multiset.
pub fn seidel_spectrum_of_regular_graph(
    graph_spectrum: &Spectrum,
    n: usize,
    k: &BigInt,
) -> Result<Spectrum> {
    if graph_spectrum.order() != n {
        return Err(Error::Precondition(format!(
            "spectrum has {} eigenvalues, expected {n}",
            graph_spectrum.order()
        )));
    }
    if !graph_spectrum.weighted_trace().is_zero() {
        return Err(Error::Precondition(
            "graph spectrum must have trace 0".into(),
        ));
    }
    let (largest, _) = graph_spectrum.largest()?;
    if largest != crate::algebraic::QuadRoot::Integer(k.clone()) {
        return Err(Error::Precondition(format!(
            "valency {k} must be the largest eigenvalue"
        )));
    }
    let mut entries = vec![(
        Eigenvalue::Integer(BigInt::from(n) - 1 - BigInt::from(2) * k),
        1usize,
    )];
    for (ev, m) in graph_spectrum.entries() {
        let mut m = *m;
        if *ev == Eigenvalue::Integer(k.clone()) {
            m -= 1; // the Perron eigenvalue maps separately
        }
        if m == 0 {
            continue;
        }
        entries.push((map_eigenvalue_graph_to_seidel(ev), m));
    }
    Spectrum::from_parts(entries, None)
}

/// λ ↦ -1-2λ on a single entry; a pair x²+px+q maps to the pair with
/// root sum 2p-2 and root product 1-2p+4q.
fn map_eigenvalue_graph_to_seidel(ev: &Eigenvalue) -> Eigenvalue {
    match ev {
        Eigenvalue::Integer(v) => Eigenvalue::Integer(BigInt::from(-1) - BigInt::from(2) * v),
        Eigenvalue::QuadraticPair { p, q } => Eigenvalue::QuadraticPair {
            p: BigInt::from(2) - BigInt::from(2) * p,
            q: BigInt::from(1) - BigInt::from(2) * p + BigInt::from(4) * q,
        },
    }
}

/// Inverse direction: a Seidel spectrum with a regular θ₀-eigenspace maps
/// to the witness graph spectrum
/// `{[(n-1-θ₀)/2]^1, [(-1-θ₀)/2]^(m₀-1), [(-1-θᵢ)/2]^mᵢ}`.
pub fn regular_graph_spectrum_from_seidel(
    seidel_spectrum: &Spectrum,
    theta0: &BigInt,
) -> Result<Spectrum> {
    let n = seidel_spectrum.order();
    let m0 = seidel_spectrum.multiplicity_of_integer(theta0);
    if m0 == 0 {
        return Err(Error::Precondition(format!(
            "{theta0} is not an integer eigenvalue of the spectrum"
        )));
    }
    if !parity_conditions(n, theta0) {
        return Err(Error::Precondition(format!(
            "θ₀ = {theta0} violates the regular-eigenspace parity conditions for n = {n}"
        )));
    }
    let two = BigInt::from(2);
    let valency = (BigInt::from(n) - 1 - theta0) / &two;
    let mut entries = vec![(Eigenvalue::Integer(valency), 1usize)];
    for (ev, m) in seidel_spectrum.entries() {
        let mut m = *m;
        if *ev == Eigenvalue::Integer(theta0.clone()) {
            m -= 1;
        }
        if m == 0 {
            continue;
        }
        entries.push((map_eigenvalue_seidel_to_graph(ev)?, m));
    }
    Spectrum::from_parts(entries, None)
}

/// θ ↦ (-1-θ)/2; errors when the image is not an algebraic integer.
fn map_eigenvalue_seidel_to_graph(ev: &Eigenvalue) -> Result<Eigenvalue> {
    let two = BigInt::from(2);
    match ev {
        Eigenvalue::Integer(v) => {
            let num = BigInt::from(-1) - v;
            if !(num.clone() % &two).is_zero() {
                return Err(Error::Precondition(format!("(-1-{v})/2 is not an integer")));
            }
            Ok(Eigenvalue::Integer(num / &two))
        }
        Eigenvalue::QuadraticPair { p, q } => {
            // new root sum = (-2+p)/2, new root product = (1-p+q)/4
            let sum_num = BigInt::from(-2) + p;
            let prod_num = BigInt::from(1) - p + q;
            if !(sum_num.clone() % &two).is_zero()
                || !(prod_num.clone() % BigInt::from(4)).is_zero()
            {
                return Err(Error::Precondition(
                    "mapped quadratic pair is not an algebraic integer pair".into(),
                ));
            }
            Ok(Eigenvalue::QuadraticPair {
                p: -(sum_num / &two),
                q: prod_num / BigInt::from(4),
            })
        }
    }
}

/// Exact symmetric data of a three-eigenvalue spectrum: e₁ = λ+μ+ν and
/// e₃ = λμν over the distinct eigenvalues, plus the integer ones.
#[derive(Clone, Debug)]
pub struct ThreeEigenvalueData {
    pub e1: BigInt,
    pub e3: BigInt,
    pub integer_eigs: Vec<BigInt>,
}

impl ThreeEigenvalueData {
    pub fn from_spectrum(spec: &Spectrum) -> Result<Self> {
        if spec.distinct_count()? != 3 {
            return Err(Error::Precondition(format!(
                "need exactly 3 distinct eigenvalues, got {}",
                spec.distinct_count()?
            )));
        }
        let mut e1 = BigInt::zero();
        let mut e3 = BigInt::from(1);
        let mut integer_eigs = vec![];
        for (ev, _) in spec.entries() {
            match ev {
                Eigenvalue::Integer(v) => {
                    e1 += v;
                    e3 *= v;
                    integer_eigs.push(v.clone());
                }
                Eigenvalue::QuadraticPair { p, q } => {
                    e1 += -p;
                    e3 *= q;
                }
            }
        }
        Ok(ThreeEigenvalueData {
            e1,
            e3,
            integer_eigs,
        })
    }
}

/// One admissible valency for the closed-3-walk count test.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThreeWalkVerdict {
    pub theta: BigInt,
    pub valency: BigInt,
    /// 16 × (number of closed 3-walks from each vertex), before division.
    pub numerator: BigInt,
    /// numerator ≥ 0 and divisible by 16.
    pub feasible: bool,
}

/// For each integer eigenvalue θ ≡ n-1 (mod 2), evaluates the closed-3-walk
/// numerator (n-1)(n-2) - 6k(n-2k) - e₁(n-1) - e₃ with k = (n-1-θ)/2.
/// Some verdict must be feasible for a regular graph to exist in the class.
pub fn three_walk_condition(n: usize, data: &ThreeEigenvalueData) -> Vec<ThreeWalkVerdict> {
    let nn = BigInt::from(n);
    let n1 = &nn - BigInt::from(1);
    let two = BigInt::from(2);
    let mut out = vec![];
    for theta in &data.integer_eigs {
        if !(theta - &n1).mod_floor(&two).is_zero() {
            continue;
        }
        let k = (&n1 - theta) / &two;
        if k.is_negative() || k > n1 {
            continue;
        }
        let numerator = &n1 * (&nn - &two)
            - BigInt::from(6) * &k * (&nn - &two * &k)
            - &data.e1 * &n1
            - &data.e3;
        let feasible =
            !numerator.is_negative() && (numerator.clone() % BigInt::from(16)).is_zero();
        out.push(ThreeWalkVerdict {
            theta: theta.clone(),
            valency: k,
            numerator,
            feasible,
        });
    }
    out
}

/// Necessary parity for an eigenvalue ν with a regular eigenspace:
/// ν ≡ n-1 (mod 2), and additionally ν ≡ n-1 (mod 4) when n is odd.
pub fn parity_conditions(n: usize, nu: &BigInt) -> bool {
    let n1 = BigInt::from(n) - BigInt::from(1);
    let two = BigInt::from(2);
    if !(nu - &n1).mod_floor(&two).is_zero() {
        return false;
    }
    if n % 2 == 1 {
        let four = BigInt::from(4);
        if !(nu - &n1).mod_floor(&four).is_zero() {
            return false;
        }
    }
    true
}

/// For a Seidel spectrum `{λ^a, μ^b, ν^1}` (ν the unique simple integer
/// eigenvalue) returns the strongly-regular-graph spectrum
/// `{[(-1-λ)/2]^a, [(-1-μ)/2]^b, [(n-1-ν)/2]^1}`.
pub fn srg_correspondence(spec: &Spectrum) -> Result<Spectrum> {
    if spec.distinct_count()? != 3 {
        return Err(Error::Precondition(
            "spectrum must have exactly three distinct eigenvalues".into(),
        ));
    }
    let simple: Vec<&BigInt> = spec
        .integer_entries()
        .filter(|(_, m)| *m == 1)
        .map(|(v, _)| v)
        .collect();
    let [nu] = simple.as_slice() else {
        return Err(Error::Precondition(
            "spectrum must have exactly one simple integer eigenvalue".into(),
        ));
    };
    regular_graph_spectrum_from_seidel(spec, nu)
}

/// Outcome of the unique odd-order irrational three-eigenvalue form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrrationalOddForm {
    /// The only admissible spectrum: `{[-√n]^(n-1)/2, [0]^1, [√n]^(n-1)/2}`.
    Spectrum(Spectrum),
    /// n is a perfect square, so ±√n are rational and the form is vacuous.
    RationalCase,
}

pub fn irrational_three_ev_form(n: usize) -> Result<IrrationalOddForm> {
    if n % 2 == 0 {
        return Err(Error::Precondition("order must be odd".into()));
    }
    if crate::algebraic::is_perfect_square(&BigInt::from(n)) {
        return Ok(IrrationalOddForm::RationalCase);
    }
    let spec = Spectrum::from_entries(vec![
        (Eigenvalue::Integer(BigInt::zero()), 1),
        (
            Eigenvalue::QuadraticPair {
                p: BigInt::zero(),
                q: BigInt::from(-(n as i64)),
            },
            (n - 1) / 2,
        ),
    ])?;
    Ok(IrrationalOddForm::Spectrum(spec))
}
