//! The relative bound and its strengthening via multiplicity gaps.
//!
//! For a Seidel matrix of order n whose smallest eigenvalue λ₀ has
//! multiplicity n-d: when λ₀² ≥ d+2,
//!
//!   n ≤ d(λ₀²-1)/(λ₀²-d),
//!
//! with equality exactly for the two-eigenvalue spectrum
//! `{[λ₀]^(n-d), [-λ₀(n-d)/d]^d}`. Writing n as the bound minus t, the
//! multiplicity m of any integer μ ≠ λ₀ satisfies a lower bound whose
//! right-hand side is always an integer; combining it with the mod-2 cap
//! on even eigenvalue multiplicities pins the whole spectrum at
//! n = ⌊bound⌋ or rules it out. Everything here is exact rational/integer
//! arithmetic.

use crate::algebraic::Eigenvalue;
use crate::error::{Error, Result};
use crate::spectra::Spectrum;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub type BigRat = Ratio<BigInt>;

/// The relative bound for dimension d and integer smallest eigenvalue λ₀.
#[derive(Clone, Debug, Serialize)]
pub struct RelativeBoundResult {
    pub d: usize,
    pub lambda0: BigInt,
    /// d(λ₀²-1)/(λ₀²-d), exact.
    #[serde(serialize_with = "serialize_ratio")]
    pub bound: BigRat,
    pub floor_bound: BigInt,
    /// λ₀² ≥ d+2: the bound is tight with a characterized equality case.
    pub tight_form: bool,
    /// Spectrum forced when n equals the bound exactly (only when the
    /// bound and -λ₀(n-d)/d are integers).
    pub equality_spectrum: Option<Spectrum>,
}

fn serialize_ratio<S: serde::Serializer>(
    r: &BigRat,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&r.to_string())
}

/// n ≤ d(λ₀²-1)/(λ₀²-d). Requires λ₀ < 0 and λ₀² > d.
pub fn relative_bound(d: usize, lambda0: &BigInt) -> Result<RelativeBoundResult> {
    if !lambda0.is_negative() {
        return Err(Error::Precondition("λ₀ must be negative".into()));
    }
    let l2 = lambda0 * lambda0;
    let dd = BigInt::from(d);
    if l2 <= dd {
        return Err(Error::Precondition(format!(
            "the bound is vacuous unless λ₀² > d (λ₀² = {l2}, d = {d})"
        )));
    }
    let bound = BigRat::new(&dd * (&l2 - BigInt::one()), &l2 - &dd);
    let floor_bound = bound.floor().to_integer();
    let tight_form = l2 >= &dd + BigInt::from(2);
    let equality_spectrum = if bound.is_integer() {
        let n = bound.to_integer();
        let n_minus_d = &n - &dd;
        // the second eigenvalue -λ₀(n-d)/d must be integral
        let num = -lambda0 * &n_minus_d;
        (num.clone() % &dd).is_zero().then(|| {
            let other = num / &dd;
            Spectrum::from_entries(vec![
                (
                    Eigenvalue::Integer(lambda0.clone()),
                    n_minus_d.to_usize().expect("small multiplicity"),
                ),
                (Eigenvalue::Integer(other), d),
            ])
            .expect("valid two-eigenvalue spectrum")
        })
    } else {
        None
    };
    Ok(RelativeBoundResult {
        d,
        lambda0: lambda0.clone(),
        bound,
        floor_bound,
        tight_form,
        equality_spectrum,
    })
}

/// The multiplicity gap at a probe eigenvalue μ.
#[derive(Clone, Debug, Serialize)]
pub struct RelativeBoundGap {
    /// bound - n, exact and nonnegative.
    #[serde(serialize_with = "serialize_ratio")]
    pub t: BigRat,
    pub mu: BigInt,
    /// Lower bound on dim ker(S - μI); always an integer.
    pub rhs: BigInt,
    /// Spectrum `{[λ₀]^(n-d), [μ-1]^w, [μ]^m, [μ+1]^(d-m-w)}` forced when
    /// the gap is attained with m = rhs; None when the multiplicities do
    /// not resolve to nonnegative integers.
    pub equality_spectrum: Option<Spectrum>,
    pub w: Option<BigInt>,
}

/// dim ker(S-μI) ≥ (t(t(λ₀²-d) - d(λ₀²-1)) - (dμ+λ₀(n-d))² + d²)/d,
/// evaluated exactly. Requires μ ≠ λ₀, λ₀² ≥ d+2 and n at most the bound.
pub fn multiplicity_lower_bound(
    d: usize,
    lambda0: &BigInt,
    n: usize,
    mu: &BigInt,
) -> Result<RelativeBoundGap> {
    if mu == lambda0 {
        return Err(Error::Precondition("μ must differ from λ₀".into()));
    }
    let dd = BigInt::from(d);
    let l2 = lambda0 * lambda0;
    if l2 < &dd + BigInt::from(2) {
        return Err(Error::Precondition("requires λ₀² ≥ d + 2".into()));
    }
    let rb = relative_bound(d, lambda0)?;
    let nn = BigInt::from(n);
    let t = &rb.bound - BigRat::from_integer(nn.clone());
    if t.is_negative() {
        return Err(Error::Precondition(format!(
            "n = {n} exceeds the relative bound {}",
            rb.bound
        )));
    }
    // t(t(λ₀²-d) - d(λ₀²-1)) simplifies to n²(λ₀²-d) - n·d(λ₀²-1)
    let shifted = (&nn * &nn) * (&l2 - &dd) - &nn * &dd * (&l2 - BigInt::one());
    let probe = &dd * mu + lambda0 * (&nn - &dd);
    let numerator = shifted - &probe * &probe + &dd * &dd;
    let (rhs, rem) = numerator.div_rem(&dd);
    debug_assert!(rem.is_zero(), "the gap right-hand side is an integer");
    if !rem.is_zero() {
        return Err(Error::Precondition(
            "gap numerator did not divide by d".into(),
        ));
    }
    let (equality_spectrum, w) = match equality_spectrum(d, lambda0, n, mu, &rhs) {
        Some((spec, w)) => (Some(spec), Some(w)),
        None => (None, None),
    };
    Ok(RelativeBoundGap {
        t,
        mu: mu.clone(),
        rhs,
        equality_spectrum,
        w,
    })
}

/// `{[λ₀]^(n-d), [μ-1]^w, [μ]^m, [μ+1]^(d-m-w)}` with
/// w = (dμ + λ₀(n-d) + d - m)/2, when all multiplicities resolve.
fn equality_spectrum(
    d: usize,
    lambda0: &BigInt,
    n: usize,
    mu: &BigInt,
    m: &BigInt,
) -> Option<(Spectrum, BigInt)> {
    if m.is_negative() {
        return None;
    }
    let dd = BigInt::from(d);
    let nn = BigInt::from(n);
    let two = BigInt::from(2);
    let w_num = &dd * mu + lambda0 * (&nn - &dd) + &dd - m;
    if !(w_num.clone() % &two).is_zero() {
        return None;
    }
    let w = w_num / &two;
    let rest = &dd - m - &w;
    if w.is_negative() || rest.is_negative() {
        return None;
    }
    if n < d {
        return None;
    }
    let mut entries = vec![(Eigenvalue::Integer(lambda0.clone()), n - d)];
    for (value, mult) in [
        (mu - BigInt::one(), w.clone()),
        (mu.clone(), m.clone()),
        (mu + BigInt::one(), rest),
    ] {
        let mult = mult.to_usize()?;
        if mult > 0 {
            entries.push((Eigenvalue::Integer(value), mult));
        }
    }
    Spectrum::from_entries(entries).ok().map(|s| (s, w))
}

/// Which rule pinned the spectrum at the floor of the relative bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ForcedSource {
    /// Odd order: the gap forces m ≥ 1 while the mod-2 class caps the even
    /// μ at multiplicity 1, so m = 1 exactly.
    EvenMuSimple,
    /// Even order: even integers cannot be eigenvalues, so m = 0 with the
    /// gap attained.
    EvenMuAbsent,
}

/// A spectrum pinned by the even-μ argument at n = ⌊bound⌋.
#[derive(Clone, Debug, Serialize)]
pub struct ForcedSpectrum {
    pub spectrum: Spectrum,
    pub w: BigInt,
    pub source: ForcedSource,
    pub n: usize,
    pub mu: BigInt,
    /// -λ₀(n-d)/d was an odd integer, equidistant from two even integers;
    /// the tie is broken toward zero (the forced multiset is unaffected).
    pub tie_broken: bool,
}

#[derive(Clone, Debug, Serialize)]
pub enum EvenMuOutcome {
    Forced(ForcedSpectrum),
    /// The gap demands more copies of the even μ than the mod-2 class
    /// allows: no Seidel matrix attains the floor of the bound.
    RuledOut {
        n: usize,
        mu: BigInt,
        required_multiplicity: BigInt,
        cap: u32,
        /// The minimal-multiplicity candidate the gap would force,
        /// rendered for reporting; it violates the mod-2 class.
        spectrum: Option<Spectrum>,
    },
    NotForced {
        n: usize,
        mu: BigInt,
        rhs: BigInt,
    },
}

/// Closest even integer to r, ties broken toward zero. Returns the
/// integer and whether a tie occurred.
fn closest_even(r: &BigRat) -> (BigInt, bool) {
    let half = r / BigRat::from_integer(BigInt::from(2));
    let lo = half.floor().to_integer() * BigInt::from(2);
    let hi = &lo + BigInt::from(2);
    let dist_lo = (r - BigRat::from_integer(lo.clone())).abs();
    let dist_hi = (BigRat::from_integer(hi.clone()) - r).abs();
    if dist_lo < dist_hi {
        (lo, false)
    } else if dist_hi < dist_lo {
        (hi, false)
    } else {
        // tie: prefer the candidate closer to zero
        if lo.abs() <= hi.abs() {
            (lo, true)
        } else {
            (hi, true)
        }
    }
}

/// At n = ⌊d(λ₀²-1)/(λ₀²-d)⌋ with μ the closest even integer to
/// -λ₀(n-d)/d: compares the multiplicity gap against the mod-2 cap on
/// even eigenvalues (1 for odd n, 0 for even n) and returns the forced
/// spectrum, a refutation, or NotForced.
pub fn forced_spectrum_even_mu(d: usize, lambda0: &BigInt) -> Result<EvenMuOutcome> {
    let rb = relative_bound(d, lambda0)?;
    if !rb.tight_form {
        // the gap machinery needs λ₀² ≥ d+2
        return Ok(EvenMuOutcome::NotForced {
            n: rb
                .floor_bound
                .to_usize()
                .ok_or_else(|| Error::Precondition("bound out of range".into()))?,
            mu: BigInt::zero(),
            rhs: BigInt::zero(),
        });
    }
    let n = rb
        .floor_bound
        .to_usize()
        .ok_or_else(|| Error::Precondition("bound out of range".into()))?;
    let dd = BigInt::from(d);
    let target = BigRat::new(
        -lambda0 * (BigInt::from(n) - &dd),
        dd.clone(),
    );
    let (mu, tie_broken) = closest_even(&target);
    let gap = multiplicity_lower_bound(d, lambda0, n, &mu)?;
    let cap: u32 = if n % 2 == 0 { 0 } else { 1 };
    let rhs = gap.rhs.clone();
    if rhs > BigInt::from(cap) {
        return Ok(EvenMuOutcome::RuledOut {
            n,
            mu,
            required_multiplicity: rhs.clone(),
            cap,
            spectrum: gap.equality_spectrum,
        });
    }
    if rhs == BigInt::from(cap) {
        let (spectrum, w) = match (gap.equality_spectrum, gap.w) {
            (Some(s), Some(w)) => (s, w),
            _ => {
                return Err(Error::Precondition(
                    "gap attained but the equality multiplicities did not resolve".into(),
                ))
            }
        };
        let source = if cap == 0 {
            ForcedSource::EvenMuAbsent
        } else {
            ForcedSource::EvenMuSimple
        };
        return Ok(EvenMuOutcome::Forced(ForcedSpectrum {
            spectrum,
            w,
            source,
            n,
            mu,
            tie_broken,
        }));
    }
    Ok(EvenMuOutcome::NotForced { n, mu, rhs })
}

/// Monic cubic x³ - c₂x² + c₁x - c₀ in the sign convention of the
/// diagonal bound.
#[derive(Clone, Debug)]
pub struct Cubic {
    pub c2: BigInt,
    pub c1: BigInt,
    pub c0: BigInt,
}

impl Cubic {
    /// (x-r₁)(x-r₂)(x-r₃).
    pub fn from_roots(r1: &BigInt, r2: &BigInt, r3: &BigInt) -> Self {
        Cubic {
            c2: r1 + r2 + r3,
            c1: r1 * r2 + r1 * r3 + r2 * r3,
            c0: r1 * r2 * r3,
        }
    }
}

/// If σ·p(S) is positive semidefinite for p(x) = x³ - c₂x² + c₁x - c₀,
/// then each diagonal entry of σS³ is at least σ((n-1)c₂ + c₀).
pub fn diag_lower_bound(n: usize, p: &Cubic, sigma: i8) -> BigInt {
    let base = (BigInt::from(n) - BigInt::one()) * &p.c2 + &p.c0;
    BigInt::from(sigma as i64) * base
}

/// Result of the trace-of-cube bound for a four-eigenvalue integer
/// spectrum `{[θ₀]^1, [θ₁]^m₁, [θ₂]^m₂, [θ₃]^m₃}` with θ₀ the even simple
/// eigenvalue and n odd.
#[derive(Clone, Debug, Serialize)]
pub struct TraceCubeReport {
    pub theta0: BigInt,
    pub sigma: i8,
    pub lhs: BigInt,
    pub rhs: BigInt,
    /// (n-1)(θ₁+θ₂+θ₃) + θ₁θ₂θ₃; odd whenever the spectrum passes the
    /// mod-2 class, which is what makes the bound strict.
    pub diagonal_term: BigInt,
    /// lhs ≥ rhs; false certifies that no Seidel matrix has the spectrum.
    pub holds: bool,
}

pub fn trace_cube_test(spec: &Spectrum) -> Result<TraceCubeReport> {
    let n = spec.order();
    if n % 2 == 0 {
        return Err(Error::Precondition("order must be odd".into()));
    }
    if spec.distinct_count()? != 4 || spec.pair_entries().next().is_some() {
        return Err(Error::Precondition(
            "need exactly four distinct integer eigenvalues".into(),
        ));
    }
    let evens: Vec<(&BigInt, usize)> = spec
        .integer_entries()
        .filter(|(v, _)| v.is_even())
        .collect();
    let [(theta0, m0)] = evens.as_slice() else {
        return Err(Error::Precondition(
            "need exactly one even eigenvalue".into(),
        ));
    };
    if *m0 != 1 {
        return Err(Error::Precondition(
            "the even eigenvalue must be simple".into(),
        ));
    }
    let theta0 = (*theta0).clone();
    let others: Vec<(BigInt, usize)> = spec
        .integer_entries()
        .filter(|(v, _)| **v != theta0)
        .map(|(v, m)| (v.clone(), m))
        .collect();
    debug_assert_eq!(others.len(), 3);
    let prod_sign: BigInt = others.iter().map(|(v, _)| &theta0 - v).product();
    let sigma: i8 = if prod_sign.is_positive() { 1 } else { -1 };
    let sum: BigInt = others.iter().map(|(v, _)| v.clone()).sum();
    let prod: BigInt = others.iter().map(|(v, _)| v.clone()).product();
    let cube_sum: BigInt = others
        .iter()
        .map(|(v, m)| v * v * v * BigInt::from(*m))
        .sum();
    let nn = BigInt::from(n);
    let sig = BigInt::from(sigma as i64);
    let lhs = &sig * &theta0 * &theta0 * &theta0;
    let rhs = &nn + &sig * (&nn * (&nn - BigInt::one()) * &sum + &nn * &prod - &cube_sum);
    let diagonal_term = (&nn - BigInt::one()) * &sum + &prod;
    Ok(TraceCubeReport {
        theta0,
        sigma,
        holds: lhs >= rhs,
        lhs,
        rhs,
        diagonal_term,
    })
}

/// Known lower/upper bounds for the maximum number of equiangular lines
/// per dimension; literature reference data shipped as a static file.
pub fn known_line_bounds() -> Vec<(usize, usize, usize)> {
    const DATA: &str = include_str!("../data/line_bounds.txt");
    DATA.lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            let d = it.next().and_then(|t| t.parse().ok()).expect("d column");
            let lo = it.next().and_then(|t| t.parse().ok()).expect("lower column");
            let hi = it.next().and_then(|t| t.parse().ok()).expect("upper column");
            (d, lo, hi)
        })
        .collect()
}
