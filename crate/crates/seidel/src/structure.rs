//! Structure of the positive semidefinite matrices M_S(λ,μ).
//!
//! For a Seidel matrix with exactly three distinct eigenvalues λ, μ, ν the
//! matrix M = σ(S-λI)(S-μI), with σ the sign of (ν-λ)(ν-μ), is positive
//! semidefinite with every diagonal entry equal to D = |n-1+λμ| and rank
//! equal to the multiplicity of ν. When λ, μ is a conjugate irrational
//! pair, M is computed as σ(S² - (λ+μ)S + λμI) from the integer symmetric
//! functions, so no irrational arithmetic ever occurs. The structure
//! results for small D (2, 4, 6, scaled primes ≡ 3 mod 4) force the
//! ν-eigenspace to be regular or rule the spectrum out entirely.

use crate::algebraic::Eigenvalue;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::regular::regular_eigenspace_search;
use crate::seidel::SeidelMatrix;
use crate::spectra::{is_psd, spectrum, Spectrum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// An eigenvalue pair (λ,μ) with integer sum and product: two integers, or
/// a conjugate pair of roots of x² + p x + q taken jointly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EigPair {
    Integers(BigInt, BigInt),
    Conjugate { p: BigInt, q: BigInt },
}

impl EigPair {
    /// λ + μ.
    pub fn sum(&self) -> BigInt {
        match self {
            EigPair::Integers(a, b) => a + b,
            EigPair::Conjugate { p, .. } => -p.clone(),
        }
    }

    /// λμ.
    pub fn product(&self) -> BigInt {
        match self {
            EigPair::Integers(a, b) => a * b,
            EigPair::Conjugate { q, .. } => q.clone(),
        }
    }

    /// (x-λ)(x-μ) evaluated at an integer.
    pub fn eval_at(&self, x: &BigInt) -> BigInt {
        x * x - self.sum() * x + self.product()
    }
}

/// The matrix M_S(λ,μ) with its invariant data.
#[derive(Clone, Debug)]
pub struct MPair {
    pub pair: EigPair,
    /// sgn((ν-λ)(ν-μ)); +1 in the degenerate two-eigenvalue case.
    pub sigma: i8,
    pub matrix: SquareMatrix<BigInt>,
    /// |n-1+λμ|; every diagonal entry of `matrix`.
    pub diag_value: BigInt,
    /// Multiplicity of the remaining eigenvalue ν, read off the spectrum.
    pub rank: usize,
    /// λ and μ already exhaust the spectrum, so M vanishes identically.
    pub degenerate: bool,
}

/// Builds M_S(λ,μ) = σ(S² - (λ+μ)S + λμI) and verifies the PSD, constant
/// diagonal, and off-diagonal bound invariants.
pub fn build_m(s: &SeidelMatrix, pair: &EigPair) -> Result<MPair> {
    let n = s.order();
    let spec = spectrum(s);
    let (sigma, rank, degenerate) = sigma_and_rank(&spec, pair)?;

    let big = s.to_big();
    let square = big.pow(2);
    let mut m = square.sub(&big.scale(&pair.sum()));
    let prod = pair.product();
    for i in 0..n {
        m[(i, i)] = m[(i, i)].clone() + prod.clone();
    }
    if sigma < 0 {
        m = m.scale(&BigInt::from(-1));
    }

    let diag_value = (BigInt::from(n) - BigInt::one() + &prod).abs();
    for i in 0..n {
        if m[(i, i)] != diag_value {
            return Err(Error::Precondition(format!(
                "diagonal entry {} at ({i},{i}) differs from |n-1+λμ| = {}",
                m[(i, i)],
                diag_value
            )));
        }
        for j in 0..n {
            if m[(i, j)].abs() > diag_value {
                return Err(Error::Precondition(format!(
                    "off-diagonal entry at ({i},{j}) exceeds the diagonal bound"
                )));
            }
        }
    }
    if !is_psd(&m)? {
        return Err(Error::Precondition(
            "M_S(λ,μ) must be positive semidefinite".into(),
        ));
    }
    Ok(MPair {
        pair: pair.clone(),
        sigma,
        matrix: m,
        diag_value,
        rank,
        degenerate,
    })
}

/// σ and rank of M from the spectrum: ν is the one distinct eigenvalue not
/// covered by the pair. A two-eigenvalue spectrum fully covered by the
/// pair yields the degenerate (vanishing) M.
fn sigma_and_rank(spec: &Spectrum, pair: &EigPair) -> Result<(i8, usize, bool)> {
    let distinct = spec.distinct_count()?;
    let mut remaining: Vec<(Eigenvalue, usize)> = Vec::new();
    let mut matched = 0usize;
    match pair {
        EigPair::Integers(a, b) => {
            if a == b {
                return Err(Error::Precondition("λ and μ must be distinct".into()));
            }
            for (ev, m) in spec.entries() {
                match ev {
                    Eigenvalue::Integer(v) if v == a || v == b => matched += 1,
                    _ => remaining.push((ev.clone(), *m)),
                }
            }
            if matched != 2 {
                return Err(Error::Precondition(
                    "both pair members must be integer eigenvalues".into(),
                ));
            }
        }
        EigPair::Conjugate { p, q } => {
            for (ev, m) in spec.entries() {
                match ev {
                    Eigenvalue::QuadraticPair { p: pp, q: qq } if pp == p && qq == q => {
                        matched += 1
                    }
                    _ => remaining.push((ev.clone(), *m)),
                }
            }
            if matched != 1 {
                return Err(Error::Precondition(
                    "the conjugate pair must appear in the spectrum".into(),
                ));
            }
        }
    }
    if remaining.is_empty() {
        if distinct != 2 {
            return Err(Error::Precondition("unexpected spectrum shape".into()));
        }
        return Ok((1, 0, true));
    }
    if distinct != 3 || remaining.len() != 1 {
        return Err(Error::Precondition(format!(
            "M_S(λ,μ) needs exactly three distinct eigenvalues, got {distinct}"
        )));
    }
    let (nu_entry, c) = &remaining[0];
    let Eigenvalue::Integer(nu) = nu_entry else {
        return Err(Error::Precondition(
            "remaining eigenvalue ν must be rational when λμ is an integer pair".into(),
        ));
    };
    let rho = pair.eval_at(nu);
    let sigma = if rho.is_positive() { 1 } else { -1 };
    Ok((sigma, *c, false))
}

/// All eigenvalue pairs of a spectrum with integer sum and product.
pub fn integer_product_pairs(spec: &Spectrum) -> Vec<EigPair> {
    let ints: Vec<&BigInt> = spec.integer_entries().map(|(v, _)| v).collect();
    let mut out = vec![];
    for i in 0..ints.len() {
        for j in i + 1..ints.len() {
            out.push(EigPair::Integers(ints[i].clone(), ints[j].clone()));
        }
    }
    for (p, q, _) in spec.pair_entries() {
        out.push(EigPair::Conjugate {
            p: p.clone(),
            q: q.clone(),
        });
    }
    out
}

/// Checks M ≡ ±D·J entrywise mod 4 with a rank-1-consistent sign pattern,
/// i.e. some switching of M is ≡ D·J mod 4. Valid for even order; build M
/// from the Euler-switched representative first.
pub fn mod4_m_check(m: &MPair, n: usize) -> Result<bool> {
    if n % 2 == 1 {
        return Err(Error::NotApplicable(
            "odd order: M is switching equivalent to D·J exactly, no mod-4 test needed".into(),
        ));
    }
    let four = BigInt::from(4);
    let d = m.diag_value.mod_floor(&four);
    let neg_d = (-m.diag_value.clone()).mod_floor(&four);
    if d == neg_d {
        // +D and -D agree mod 4: a plain entrywise test
        for i in 0..n {
            for j in 0..n {
                if m.matrix[(i, j)].mod_floor(&four) != d {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    // odd D: each entry picks a sign; the pattern must be rank 1
    let mut signs = vec![0i8; n];
    signs[0] = 1;
    for j in 1..n {
        let e = m.matrix[(0, j)].mod_floor(&four);
        signs[j] = if e == d {
            1
        } else if e == neg_d {
            -1
        } else {
            return Ok(false);
        };
    }
    for i in 0..n {
        for j in 0..n {
            let e = m.matrix[(i, j)].mod_floor(&four);
            let expected = if signs[i] * signs[j] == 1 { &d } else { &neg_d };
            if e != *expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Partition of row indices into classes {j : M_ij = ±d}, with the sign of
/// each row relative to its class representative.
#[derive(Clone, Debug)]
pub struct RowGrouping {
    pub classes: Vec<Vec<usize>>,
    /// `sign[i]` relates row i to its class representative.
    pub signs: Vec<i8>,
}

/// Groups rows of a PSD constant-diagonal matrix by M_ij = ±d and verifies
/// that grouped rows are equal up to sign. A violation proves the input
/// was not positive semidefinite and is reported as an error.
pub fn group_repeated_rows(m: &SquareMatrix<BigInt>) -> Result<RowGrouping> {
    let n = m.order();
    let d = m[(0, 0)].clone();
    if !d.is_positive() {
        return Err(Error::Precondition("diagonal must be positive".into()));
    }
    for i in 0..n {
        if m[(i, i)] != d {
            return Err(Error::Precondition("diagonal must be constant".into()));
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut signs = vec![0i8; n];
    let mut classes: Vec<Vec<usize>> = vec![];
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        class_of[i] = cid;
        signs[i] = 1;
        let mut members = vec![i];
        for j in i + 1..n {
            if class_of[j] != usize::MAX {
                continue;
            }
            let e = m[(i, j)].clone();
            let sign = if e == d {
                1i8
            } else if e == -d.clone() {
                -1i8
            } else {
                continue;
            };
            // the grouped row must equal ±(representative row)
            for t in 0..n {
                let lhs = m[(j, t)].clone();
                let rhs = if sign == 1 {
                    m[(i, t)].clone()
                } else {
                    -m[(i, t)].clone()
                };
                // diagonal positions carry d on both rows instead
                if t == j || t == i {
                    continue;
                }
                if lhs != rhs {
                    return Err(Error::Precondition(format!(
                        "rows {i} and {j} share a ±d entry but differ at column {t}: \
                         the input is not positive semidefinite"
                    )));
                }
            }
            class_of[j] = cid;
            signs[j] = sign;
            members.push(j);
        }
        classes.push(members);
    }
    Ok(RowGrouping { classes, signs })
}

/// Tensor decomposition M ≅ N ⊗ J_k discovered from the row grouping.
#[derive(Clone, Debug)]
pub struct TensorStructure {
    pub q: usize,
    pub k: usize,
    /// Order-q matrix with constant diagonal d and off-diagonal entries of
    /// absolute value strictly less than d.
    pub inner: SquareMatrix<BigInt>,
    /// Signs realizing the decomposition.
    pub switching: Vec<i8>,
    pub classes: Vec<Vec<usize>>,
}

/// Detects M ≅ N ⊗ J_k for a PSD constant-diagonal matrix. Returns None
/// when rows have unequal counts of ±d entries (hypothesis failure).
pub fn tensor_detect(m: &SquareMatrix<BigInt>) -> Result<Option<TensorStructure>> {
    let n = m.order();
    let grouping = group_repeated_rows(m)?;
    let k = grouping.classes[0].len();
    if grouping.classes.iter().any(|c| c.len() != k) {
        return Ok(None);
    }
    let q = n / k;
    debug_assert_eq!(q * k, n);
    let d = m[(0, 0)].clone();
    let reps: Vec<usize> = grouping.classes.iter().map(|c| c[0]).collect();
    let inner = SquareMatrix::from_fn(q, |a, b| {
        if a == b {
            d.clone()
        } else {
            let (i, j) = (reps[a], reps[b]);
            BigInt::from(grouping.signs[i] as i64 * grouping.signs[j] as i64) * m[(i, j)].clone()
        }
    });
    // verify the reconstruction entry by entry
    let mut class_of = vec![0usize; n];
    for (cid, members) in grouping.classes.iter().enumerate() {
        for &i in members {
            class_of[i] = cid;
        }
    }
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j {
                d.clone()
            } else if class_of[i] == class_of[j] {
                BigInt::from(grouping.signs[i] as i64 * grouping.signs[j] as i64) * d.clone()
            } else {
                BigInt::from(grouping.signs[i] as i64 * grouping.signs[j] as i64)
                    * inner[(class_of[i], class_of[j])].clone()
            };
            if m[(i, j)] != expected {
                return Err(Error::Precondition(format!(
                    "tensor reconstruction failed at ({i},{j}); input is not PSD"
                )));
            }
        }
    }
    Ok(Some(TensorStructure {
        q,
        k,
        inner,
        switching: grouping.signs.clone(),
        classes: grouping.classes,
    }))
}

/// For a symmetric {±a,±b}-matrix with exactly two distinct eigenvalues
/// λ, μ: per-row count of entries with square b², by the closed formula
/// ((λ+μ)·M_ii - n·a² - λμ)/(b²-a²), asserted against the direct count.
pub fn two_valued_entry_count(
    m: &SquareMatrix<BigInt>,
    lambda: &BigInt,
    mu: &BigInt,
    a: &BigInt,
    b: &BigInt,
) -> Result<Vec<usize>> {
    let n = m.order();
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let a2 = a * a;
    let b2 = b * b;
    if a2 == b2 {
        return Err(Error::Precondition("need |a| ≠ |b|".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let sq = m[(i, j)].clone() * m[(i, j)].clone();
            if sq != a2 && sq != b2 {
                return Err(Error::Precondition(format!(
                    "entry at ({i},{j}) is not in {{±{a}, ±{b}}}"
                )));
            }
        }
    }
    // hypothesis: M² = (λ+μ)M - λμ·I
    let square = m.pow(2);
    let mut expected = m.scale(&(lambda + mu));
    let prod = lambda * mu;
    for i in 0..n {
        expected[(i, i)] = expected[(i, i)].clone() - prod.clone();
    }
    if square != expected {
        return Err(Error::Precondition(
            "λ, μ are not the two distinct eigenvalues of the matrix".into(),
        ));
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let numer = (lambda + mu) * m[(i, i)].clone() - BigInt::from(n) * &a2 - &prod;
        let denom = &b2 - &a2;
        let (count, rem) = numer.div_rem(&denom);
        if !rem.is_zero() {
            return Err(Error::Precondition(
                "count formula did not divide exactly".into(),
            ));
        }
        let direct = (0..n)
            .filter(|&j| m[(i, j)].clone() * m[(i, j)].clone() == b2)
            .count();
        let count: usize = count
            .to_usize()
            .ok_or_else(|| Error::Precondition("negative row count".into()))?;
        if count != direct {
            return Err(Error::Precondition(format!(
                "formula count {count} disagrees with direct count {direct} on row {i}"
            )));
        }
        out.push(count);
    }
    Ok(out)
}

/// Outcome of the rank-2 prime-diagonal normal form.
#[derive(Clone, Debug)]
pub enum Rank2Form {
    /// A switching under which the matrix has exactly two distinct rows.
    TwoRows {
        switching: Vec<i8>,
        classes: Vec<Vec<usize>>,
    },
    /// Rank below 2; the statement is vacuous.
    Vacuous,
}

fn is_prime_u64(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// For a PSD integer matrix with constant prime diagonal p ≡ 3 (mod 4) and
/// rank 2, produces the switching with exactly two distinct rows: every
/// 3×3 principal submatrix forces a ±p entry, so greedy grouping succeeds.
pub fn rank2_prime_structure(m: &SquareMatrix<BigInt>, p: &BigInt) -> Result<Rank2Form> {
    let n = m.order();
    for i in 0..n {
        if m[(i, i)] != *p {
            return Err(Error::Precondition("diagonal must equal p".into()));
        }
    }
    let pv = p
        .to_u64()
        .ok_or_else(|| Error::Precondition("p out of range".into()))?;
    if !is_prime_u64(pv) || pv % 4 != 3 {
        return Err(Error::Precondition(
            "p must be a prime congruent to 3 mod 4".into(),
        ));
    }
    if !is_psd(m)? {
        return Err(Error::Precondition("matrix must be PSD".into()));
    }
    let rank = m.rank();
    if rank < 2 {
        return Ok(Rank2Form::Vacuous);
    }
    if rank > 2 {
        return Err(Error::Precondition(format!("rank must be 2, got {rank}")));
    }
    let grouping = group_repeated_rows(m)?;
    if grouping.classes.len() != 2 {
        return Err(Error::Precondition(format!(
            "expected two row classes, found {}; input violates the hypotheses",
            grouping.classes.len()
        )));
    }
    Ok(Rank2Form::TwoRows {
        switching: grouping.signs,
        classes: grouping.classes,
    })
}

/// Data extracted when the diagonal value is 6: (q+8)(9-c) = 72.
#[derive(Clone, Debug, Serialize)]
pub struct SixDiagResult {
    pub q: usize,
    pub c: usize,
    /// Whether q divides n.
    pub divides: bool,
    /// The inner order-q Seidel matrix T with M ≅ 2(T+3I) ⊗ J_{n/q},
    /// extracted when an explicit matrix was supplied.
    #[serde(skip)]
    pub inner_seidel: Option<SeidelMatrix>,
}

#[derive(Clone, Debug, Serialize)]
pub enum SixDiagOutcome {
    Feasible(SixDiagResult),
    Infeasible { reason: String },
}

/// Spectral-mode analysis: from the rank c alone, solves (q+8)(9-c) = 72
/// and checks the divisibility q | n. c must lie in {1,3,5,6,7}.
pub fn six_diag_analyze_spectral(n: usize, c: usize) -> SixDiagOutcome {
    let q = match c {
        1 => 1,
        3 => 4,
        5 => 10,
        6 => 16,
        7 => 28,
        _ => {
            return SixDiagOutcome::Infeasible {
                reason: format!("rank c = {c} admits no solution of (q+8)(9-c) = 72"),
            }
        }
    };
    debug_assert_eq!((q + 8) * (9 - c), 72);
    if n % q != 0 {
        return SixDiagOutcome::Infeasible {
            reason: format!("inner order q = {q} does not divide n = {n}"),
        };
    }
    SixDiagOutcome::Feasible(SixDiagResult {
        q,
        c,
        divides: true,
        inner_seidel: None,
    })
}

/// Full analysis of an explicit M with diagonal 6: solves for (q,c),
/// extracts T via tensor detection and verifies T's spectrum
/// `{[-3]^(q-c), [(q-1)/3]^c}`.
pub fn six_diag_analyze(m: &MPair, n: usize) -> Result<SixDiagOutcome> {
    if m.diag_value != BigInt::from(6) {
        return Err(Error::Precondition(format!(
            "diagonal value must be 6, got {}",
            m.diag_value
        )));
    }
    if n % 2 == 1 {
        return Err(Error::Precondition("order must be even".into()));
    }
    let outcome = six_diag_analyze_spectral(n, m.rank);
    let SixDiagOutcome::Feasible(mut result) = outcome else {
        return Ok(outcome);
    };
    let Some(tensor) = tensor_detect(&m.matrix)? else {
        return Ok(SixDiagOutcome::Infeasible {
            reason: "rows have unequal counts of ±6 entries".into(),
        });
    };
    if tensor.q != result.q {
        return Ok(SixDiagOutcome::Infeasible {
            reason: format!(
                "tensor block count {} disagrees with the rank solution q = {}",
                tensor.q, result.q
            ),
        });
    }
    // N = 2(T + 3I): off-diagonal entries ±2, diagonal 6
    let q = result.q;
    let mut rows = vec![vec![0i8; q]; q];
    for i in 0..q {
        for j in 0..q {
            if i == j {
                continue;
            }
            let e = &tensor.inner[(i, j)];
            let t = if *e == BigInt::from(2) {
                1i8
            } else if *e == BigInt::from(-2) {
                -1i8
            } else {
                return Ok(SixDiagOutcome::Infeasible {
                    reason: format!("inner entry {e} is not ±2, so N ≠ 2(T+3I)"),
                });
            };
            rows[i][j] = t;
        }
    }
    let t_matrix = SeidelMatrix::from_rows(rows)?;
    let expected = inner_seidel_spectrum(q, result.c)?;
    let got = spectrum(&t_matrix);
    if got != expected {
        return Ok(SixDiagOutcome::Infeasible {
            reason: format!(
                "inner Seidel spectrum {} differs from the forced {}",
                got.render(),
                expected.render()
            ),
        });
    }
    result.inner_seidel = Some(t_matrix);
    Ok(SixDiagOutcome::Feasible(result))
}

/// The forced spectrum `{[-3]^(q-c), [(q-1)/3]^c}` of the inner matrix T.
pub fn inner_seidel_spectrum(q: usize, c: usize) -> Result<Spectrum> {
    if (q as i64 - 1) % 3 != 0 {
        return Err(Error::Precondition("q-1 must be divisible by 3".into()));
    }
    let theta = BigInt::from((q as i64 - 1) / 3);
    Spectrum::from_entries(vec![
        (Eigenvalue::Integer(BigInt::from(-3)), q - c),
        (Eigenvalue::Integer(theta), c),
    ])
}

/// Which structural rule produced a small-diagonal verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiagRule {
    /// D = 0 forces M = O, impossible with three distinct eigenvalues.
    ZeroDiag,
    /// D odd contradicts λμ odd (mod-2 class of an even-order matrix).
    Mod2Parity,
    /// D = 2: M ≅ 2J, rank 1.
    TwoJ,
    /// D = 4: M ≅ 4·I_c ⊗ J_{n/c}, needs c | n.
    FourTensor,
    /// D = 6: the (q+8)(9-c) = 72 analysis.
    SixDiag,
    /// D/2^r a prime ≡ 3 (mod 4) with rank 2.
    PrimeRank2,
}

#[derive(Clone, Debug, Serialize)]
pub enum SmallDiagClassification {
    RegularForced { rule: DiagRule, detail: String },
    Infeasible { rule: DiagRule, detail: String },
    Unknown,
}

/// Classifies an even-order three-eigenvalue spectrum by D = |n-1+λμ|,
/// where c is the multiplicity of the remaining eigenvalue ν: D ∈ {2,4,6}
/// and the scaled-prime rank-2 rule force the ν-eigenspace regular, or
/// rule the spectrum out.
pub fn small_diag_classify(
    n: usize,
    lambda_mu_product: &BigInt,
    c: usize,
) -> Result<(BigInt, SmallDiagClassification)> {
    if n % 2 == 1 {
        return Err(Error::Precondition(
            "odd order follows the simple-eigenvalue path, not the diagonal classification".into(),
        ));
    }
    let d = (BigInt::from(n) - BigInt::one() + lambda_mu_product).abs();
    let class = classify_by_diag(n, &d, c);
    Ok((d, class))
}

fn classify_by_diag(n: usize, d: &BigInt, c: usize) -> SmallDiagClassification {
    if d.is_zero() {
        return SmallDiagClassification::Infeasible {
            rule: DiagRule::ZeroDiag,
            detail: "D = 0 forces M = O, impossible with three distinct eigenvalues".into(),
        };
    }
    if d.is_odd() {
        return SmallDiagClassification::Infeasible {
            rule: DiagRule::Mod2Parity,
            detail: format!("D = {d} is odd, but λμ must be odd for even order, making D even"),
        };
    }
    if *d == BigInt::from(2) {
        return if c == 1 {
            SmallDiagClassification::RegularForced {
                rule: DiagRule::TwoJ,
                detail: "M ≅ 2J; the ν-eigenspace is regular".into(),
            }
        } else {
            SmallDiagClassification::Infeasible {
                rule: DiagRule::TwoJ,
                detail: format!("M ≅ 2J has rank 1 but the ν-multiplicity is {c}"),
            }
        };
    }
    if *d == BigInt::from(4) {
        return if n % c == 0 {
            SmallDiagClassification::RegularForced {
                rule: DiagRule::FourTensor,
                detail: format!("M ≅ 4·I_{c} ⊗ J_{}; the ν-eigenspace is regular", n / c),
            }
        } else {
            SmallDiagClassification::Infeasible {
                rule: DiagRule::FourTensor,
                detail: format!("M ≅ 4·I_c ⊗ J_(n/c) needs c | n; {c} does not divide {n}"),
            }
        };
    }
    if *d == BigInt::from(6) {
        return match six_diag_analyze_spectral(n, c) {
            SixDiagOutcome::Feasible(r) => SmallDiagClassification::RegularForced {
                rule: DiagRule::SixDiag,
                detail: format!(
                    "M ≅ 2(T+3I) ⊗ J_{} with inner order q = {}; the ν-eigenspace is regular",
                    n / r.q,
                    r.q
                ),
            },
            SixDiagOutcome::Infeasible { reason } => SmallDiagClassification::Infeasible {
                rule: DiagRule::SixDiag,
                detail: reason,
            },
        };
    }
    if c == 2 {
        for r in 0..=2u32 {
            let div = BigInt::from(2u32.pow(r));
            if (d % &div).is_zero() {
                let scaled = d / &div;
                if let Some(v) = scaled.to_u64() {
                    if is_prime_u64(v) && v % 4 == 3 {
                        return SmallDiagClassification::RegularForced {
                            rule: DiagRule::PrimeRank2,
                            detail: format!(
                                "D/{div} = {v} is a prime ≡ 3 (mod 4) and rank(M) = 2; \
                                 the ν-eigenspace is regular"
                            ),
                        };
                    }
                }
            }
        }
    }
    SmallDiagClassification::Unknown
}

/// How a both-eigenspaces-regular check was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UniqueSmallOutcome {
    /// Both eigenspaces were searched on an explicit witness matrix.
    VerifiedByWitness,
    /// Orders 16 and 28: accepted from the literature classification
    /// unless a witness matrix is supplied.
    AcceptedFromLiterature,
}

/// The four two-eigenvalue spectra whose matrices have both eigenspaces
/// regular: `{[-3]^1,[1]^3}`, `{[-3]^5,[3]^5}`, `{[-3]^10,[5]^6}`,
/// `{[-3]^21,[9]^7}`. The first two are verified on built witnesses
/// (K4, Petersen); the larger two verify a supplied witness or are
/// accepted from the literature.
pub fn unique_small_seidel_check(
    spec: &Spectrum,
    witness: Option<&SeidelMatrix>,
) -> Result<UniqueSmallOutcome> {
    let known: [(&str, Option<fn() -> SeidelMatrix>); 4] = [
        ("-3^1,1^3", Some(crate::fixtures::k4_seidel)),
        ("-3^5,3^5", Some(crate::fixtures::petersen_seidel)),
        ("-3^10,5^6", None),
        ("-3^21,9^7", None),
    ];
    let rendered = spec.render();
    let Some((_, builder)) = known.iter().find(|(r, _)| *r == rendered) else {
        return Err(Error::Precondition(format!(
            "spectrum {rendered} is not one of the four covered cases"
        )));
    };
    let candidate: Option<SeidelMatrix> = match witness {
        Some(w) => Some(w.clone()),
        None => builder.map(|b| b()),
    };
    let Some(w) = candidate else {
        return Ok(UniqueSmallOutcome::AcceptedFromLiterature);
    };
    if spectrum(&w) != *spec {
        return Err(Error::Precondition(
            "witness matrix does not have the requested spectrum".into(),
        ));
    }
    for (ev, _) in spec.entries() {
        let Eigenvalue::Integer(theta) = ev else {
            return Err(Error::Precondition("eigenvalues must be integers".into()));
        };
        if regular_eigenspace_search(&w, theta)?.is_none() {
            return Err(Error::Precondition(format!(
                "eigenspace of {theta} contains no ±1 vector"
            )));
        }
    }
    Ok(UniqueSmallOutcome::VerifiedByWitness)
}

/// Verifies rank(M) from the spectrum against fraction-free elimination;
/// test oracle, not part of the trusted path.
pub fn bareiss_rank_matches(m: &MPair) -> bool {
    m.matrix.rank() == m.rank
}
