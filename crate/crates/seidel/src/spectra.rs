//! Exact spectra of symmetric integer matrices.
//!
//! Characteristic polynomials are computed with arbitrary-precision
//! integers, then factored into integer roots and irrational monic
//! quadratics. Root searches are capped by the Gershgorin bound, which
//! contains every eigenvalue of a symmetric matrix, so any factor the
//! search misses has degree at least 3 and is carried opaquely in
//! `residual`. Seidel matrices of order n use the sharper bound n-1.

use crate::algebraic::{quadratic_is_real_irrational, Eigenvalue, QuadRoot};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::poly::{char_poly, Poly};
use crate::seidel::{graph_from_seidel, SeidelMatrix, SwitchingVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub type IntPolynomial = Poly<BigInt>;

/// Multiset of exact eigenvalues with multiplicities, plus an optional
/// irreducible-over-the-search residual factor of degree ≥ 3.
#[derive(Clone, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(Eigenvalue, usize)>,
    residual: Option<IntPolynomial>,
    n: usize,
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Spectrum {
    /// Builds from (eigenvalue, multiplicity) terms, merging duplicates and
    /// sorting canonically (integers ascending, then pairs by (p,q)).
    pub fn from_entries(entries: Vec<(Eigenvalue, usize)>) -> Result<Self> {
        Self::from_parts(entries, None)
    }

    pub fn from_parts(
        entries: Vec<(Eigenvalue, usize)>,
        residual: Option<IntPolynomial>,
    ) -> Result<Self> {
        let mut merged: Vec<(Eigenvalue, usize)> = Vec::new();
        for (ev, m) in entries {
            if m == 0 {
                continue;
            }
            if let Eigenvalue::QuadraticPair { p, q } = &ev {
                if !quadratic_is_real_irrational(p, q) {
                    return Err(Error::Precondition(format!(
                        "x^2 + {p} x + {q} is not a real irrational quadratic"
                    )));
                }
            }
            match merged.iter_mut().find(|(e, _)| *e == ev) {
                Some((_, mm)) => *mm += m,
                None => merged.push((ev, m)),
            }
        }
        merged.sort_by(|(a, _), (b, _)| entry_order(a, b));
        let mut n: usize = merged.iter().map(|(e, m)| e.arity() * m).sum();
        if let Some(r) = &residual {
            n += r.degree();
        }
        Ok(Spectrum {
            entries: merged,
            residual,
            n,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(Eigenvalue, usize)] {
        &self.entries
    }

    pub fn residual(&self) -> Option<&IntPolynomial> {
        self.residual.as_ref()
    }

    /// Count of distinct eigenvalues among the extracted entries
    /// (a quadratic pair counts as two). Errors if a residual remains.
    pub fn distinct_count(&self) -> Result<usize> {
        if self.residual.is_some() {
            return Err(Error::NotApplicable(
                "spectrum has an unfactored residual".into(),
            ));
        }
        Ok(self.entries.iter().map(|(e, _)| e.arity()).sum())
    }

    pub fn integer_entries(&self) -> impl Iterator<Item = (&BigInt, usize)> {
        self.entries.iter().filter_map(|(e, m)| match e {
            Eigenvalue::Integer(v) => Some((v, *m)),
            _ => None,
        })
    }

    pub fn pair_entries(&self) -> impl Iterator<Item = (&BigInt, &BigInt, usize)> {
        self.entries.iter().filter_map(|(e, m)| match e {
            Eigenvalue::QuadraticPair { p, q } => Some((p, q, *m)),
            _ => None,
        })
    }

    pub fn multiplicity_of_integer(&self, v: &BigInt) -> usize {
        self.integer_entries()
            .find(|(x, _)| *x == v)
            .map_or(0, |(_, m)| m)
    }

    pub fn is_integer_eigenvalue(&self, v: &BigInt) -> bool {
        self.multiplicity_of_integer(v) > 0
    }

    /// Σ m·θ over all eigenvalues (pairs contribute both conjugates).
    pub fn weighted_trace(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(e, m)| e.trace_contribution() * BigInt::from(*m))
            .sum()
    }

    /// Σ m·θ².
    pub fn weighted_square_sum(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(e, m)| e.square_sum() * BigInt::from(*m))
            .sum()
    }

    /// Σ m·θ³.
    pub fn weighted_cube_sum(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(e, m)| e.cube_sum() * BigInt::from(*m))
            .sum()
    }

    /// Both Seidel trace identities: Σmθ = 0 and Σmθ² = n(n-1).
    /// Only meaningful when no residual is present.
    pub fn satisfies_seidel_trace_identities(&self) -> bool {
        self.residual.is_none()
            && self.weighted_trace().is_zero()
            && self.weighted_square_sum() == BigInt::from(self.n) * BigInt::from(self.n - 1)
    }

    /// Smallest eigenvalue with its multiplicity, compared exactly.
    pub fn smallest(&self) -> Result<(QuadRoot, usize)> {
        self.extreme(Ordering::Less)
    }

    /// Largest eigenvalue with its multiplicity.
    pub fn largest(&self) -> Result<(QuadRoot, usize)> {
        self.extreme(Ordering::Greater)
    }

    fn extreme(&self, want: Ordering) -> Result<(QuadRoot, usize)> {
        if self.residual.is_some() {
            return Err(Error::NotApplicable(
                "spectrum has an unfactored residual".into(),
            ));
        }
        let mut best: Option<(QuadRoot, usize)> = None;
        for (e, m) in &self.entries {
            for root in e.roots() {
                match &best {
                    None => best = Some((root, *m)),
                    Some((b, _)) => {
                        if root.exact_cmp(b) == want {
                            best = Some((root, *m));
                        }
                    }
                }
            }
        }
        best.ok_or_else(|| Error::Precondition("empty spectrum".into()))
    }

    /// Rebuilds the monic polynomial Π(x-θ)^m · residual.
    pub fn to_poly(&self) -> IntPolynomial {
        let mut acc = Poly::constant(BigInt::one());
        for (e, m) in &self.entries {
            let factor = match e {
                Eigenvalue::Integer(v) => Poly::linear(v.clone()),
                Eigenvalue::QuadraticPair { p, q } => Poly::quadratic(p.clone(), q.clone()),
            };
            acc = acc.mul(&factor.pow(*m));
        }
        if let Some(r) = &self.residual {
            acc = acc.mul(r);
        }
        acc
    }

    /// Spectrum grammar: comma-separated `v^m` and `surd(p,q)^m` terms.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = self
            .entries
            .iter()
            .map(|(e, m)| match e {
                Eigenvalue::Integer(v) => format!("{v}^{m}"),
                Eigenvalue::QuadraticPair { p, q } => format!("surd({p},{q})^{m}"),
            })
            .collect();
        if let Some(r) = &self.residual {
            let coeffs: Vec<String> = r.coeffs().iter().map(|c| c.to_string()).collect();
            parts.push(format!("res({})^1", coeffs.join(";")));
        }
        parts.join(",")
    }
}

fn entry_order(a: &Eigenvalue, b: &Eigenvalue) -> Ordering {
    match (a, b) {
        (Eigenvalue::Integer(x), Eigenvalue::Integer(y)) => x.cmp(y),
        (Eigenvalue::Integer(_), Eigenvalue::QuadraticPair { .. }) => Ordering::Less,
        (Eigenvalue::QuadraticPair { .. }, Eigenvalue::Integer(_)) => Ordering::Greater,
        (
            Eigenvalue::QuadraticPair { p: p1, q: q1 },
            Eigenvalue::QuadraticPair { p: p2, q: q2 },
        ) => p1.cmp(p2).then_with(|| q1.cmp(q2)),
    }
}

impl serde::Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.render())
    }
}

impl<'de> serde::Deserialize<'de> for Spectrum {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        parse_spectrum_text(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses the spectrum grammar. Positions in errors are 1-based columns.
pub fn parse_spectrum_text(text: &str) -> Result<Spectrum> {
    let mut entries = Vec::new();
    let mut pos = 0usize;
    let bytes = text.as_bytes();
    let err = |pos: usize, msg: &str| Error::Parse {
        line: 1,
        col: pos + 1,
        msg: msg.to_string(),
    };

    fn parse_int(bytes: &[u8], pos: &mut usize) -> Option<BigInt> {
        let start = *pos;
        if *pos < bytes.len() && (bytes[*pos] == b'-' || bytes[*pos] == b'+') {
            *pos += 1;
        }
        let digits_start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == digits_start {
            *pos = start;
            return None;
        }
        std::str::from_utf8(&bytes[start..*pos])
            .ok()
            .and_then(|s| s.parse().ok())
    }

    loop {
        // one term
        let ev = if bytes[pos..].starts_with(b"surd(") {
            pos += 5;
            let p = parse_int(bytes, &mut pos).ok_or_else(|| err(pos, "expected integer p"))?;
            if pos >= bytes.len() || bytes[pos] != b',' {
                return Err(err(pos, "expected ',' in surd(p,q)"));
            }
            pos += 1;
            let q = parse_int(bytes, &mut pos).ok_or_else(|| err(pos, "expected integer q"))?;
            if pos >= bytes.len() || bytes[pos] != b')' {
                return Err(err(pos, "expected ')'"));
            }
            pos += 1;
            if !quadratic_is_real_irrational(&p, &q) {
                return Err(err(
                    pos,
                    "surd(p,q) must have positive non-square discriminant p^2-4q",
                ));
            }
            Eigenvalue::QuadraticPair { p, q }
        } else {
            let v = parse_int(bytes, &mut pos)
                .ok_or_else(|| err(pos, "expected integer eigenvalue or surd(p,q)"))?;
            Eigenvalue::Integer(v)
        };
        if pos >= bytes.len() || bytes[pos] != b'^' {
            return Err(err(pos, "expected '^' before multiplicity"));
        }
        pos += 1;
        let m = parse_int(bytes, &mut pos).ok_or_else(|| err(pos, "expected multiplicity"))?;
        if !m.is_positive() {
            return Err(err(pos, "multiplicity must be positive"));
        }
        let m: usize = m
            .try_into()
            .map_err(|_| err(pos, "multiplicity too large"))?;
        if entries.iter().any(|(e, _)| *e == ev) {
            return Err(err(pos, "duplicate eigenvalue"));
        }
        entries.push((ev, m));
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b',' {
            return Err(err(pos, "expected ',' between terms"));
        }
        pos += 1;
    }
    Spectrum::from_entries(entries)
}

/// Exact characteristic polynomial of a Seidel matrix.
pub fn seidel_char_poly(s: &SeidelMatrix) -> IntPolynomial {
    char_poly(&s.to_big())
}

/// Factors a monic polynomial whose roots all lie in `[-bound, bound]`
/// into integer roots, irrational quadratics and a residual.
pub fn extract_spectrum(poly: &IntPolynomial, bound: &BigInt) -> Spectrum {
    assert!(poly.is_monic(), "spectrum extraction needs a monic polynomial");
    let n = poly.degree();
    let mut work = poly.clone();
    let mut entries: Vec<(Eigenvalue, usize)> = Vec::new();

    // integer roots: scan [-bound, bound]
    let mut theta = -bound.clone();
    while theta <= *bound && work.degree() > 0 {
        if work.eval(&theta).is_zero() {
            let lin = Poly::linear(theta.clone());
            let mut m = 0usize;
            loop {
                let (q, r) = work.div_rem_monic(&lin);
                if r.is_zero() {
                    work = q;
                    m += 1;
                } else {
                    break;
                }
            }
            entries.push((Eigenvalue::Integer(theta.clone()), m));
        }
        theta += 1;
    }

    // quadratic factors x^2 + p x + q: |p| ≤ 2·bound, |q| ≤ bound², q | c0
    if work.degree() >= 2 {
        let c0 = work.coeff(0);
        debug_assert!(!c0.is_zero(), "zero roots were stripped above");
        let q_bound = bound * bound;
        let p_bound = BigInt::from(2) * bound;
        let mut q = -q_bound.clone();
        while q <= q_bound && work.degree() >= 2 {
            if !q.is_zero() && (c0.clone() % q.clone()).is_zero() {
                let mut p = -p_bound.clone();
                while p <= p_bound && work.degree() >= 2 {
                    if quadratic_is_real_irrational(&p, &q) {
                        let quad = Poly::quadratic(p.clone(), q.clone());
                        let mut m = 0usize;
                        loop {
                            let (qq, r) = work.div_rem_monic(&quad);
                            if r.is_zero() {
                                work = qq;
                                m += 1;
                            } else {
                                break;
                            }
                        }
                        if m > 0 {
                            entries.push((
                                Eigenvalue::QuadraticPair {
                                    p: p.clone(),
                                    q: q.clone(),
                                },
                                m,
                            ));
                        }
                    }
                    p += 1;
                }
            }
            q += 1;
        }
    }

    let residual = if work.degree() >= 1 {
        debug_assert!(work.degree() >= 3, "all roots lie within the bound");
        Some(work)
    } else {
        None
    };
    let spec = Spectrum::from_parts(entries, residual).expect("extracted factors are valid");
    debug_assert_eq!(spec.order(), n);
    spec
}

/// Exact spectrum of a Seidel matrix (root bound n-1).
pub fn spectrum(s: &SeidelMatrix) -> Spectrum {
    let bound = BigInt::from(s.order().saturating_sub(1));
    extract_spectrum(&seidel_char_poly(s), &bound)
}

/// Exact spectrum of any symmetric integer matrix (Gershgorin root bound).
pub fn matrix_spectrum(m: &SquareMatrix<BigInt>) -> Result<Spectrum> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let bound = m.gershgorin_bound();
    Ok(extract_spectrum(&char_poly(m), &bound))
}

/// Number of distinct eigenvalues: deg χ − deg gcd(χ, χ′).
/// Exact even when the spectrum has an unfactored residual.
pub fn distinct_eigenvalue_count(s: &SeidelMatrix) -> usize {
    seidel_char_poly(s).distinct_root_count()
}

/// Exact positive-semidefiniteness of a symmetric integer matrix: with
/// χ(x) = Σ cᵢ xⁱ, all eigenvalues are ≥ 0 iff (-1)^(n-i)·cᵢ ≥ 0 for all i
/// (the elementary symmetric functions of the eigenvalues are nonnegative).
pub fn is_psd(m: &SquareMatrix<BigInt>) -> Result<bool> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let chi = char_poly(m);
    let n = chi.degree();
    Ok((0..=n).all(|i| {
        let c = chi.coeff(i);
        if (n - i) % 2 == 0 {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    }))
}

/// Verifies S^k ≡ J-I (k odd) or nJ-I (k even), entrywise mod 2.
/// Holds for every Seidel matrix; exposed as a checkable verifier.
pub fn mod2_power_check(s: &SeidelMatrix, k: u32) -> bool {
    assert!(k >= 1);
    let n = s.order();
    let two = BigInt::from(2);
    let power = s.to_big().pow(k).mod_reduce(&two);
    let jc = if k % 2 == 1 {
        BigInt::one() // J - I off/diag handled below
    } else {
        BigInt::from(n)
    };
    let target = SquareMatrix::from_fn(n, |i, j| {
        let v = if i == j {
            jc.clone() - BigInt::one()
        } else {
            jc.clone()
        };
        v.mod_floor(&two)
    });
    power == target
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Result of reducing the characteristic polynomial mod 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct Mod2Class {
    pub parity: Parity,
    pub matches: bool,
}

/// Coefficients of (x+1)^e over GF(2), via Lucas: C(e,i) ≡ 1 iff i ⊆ e bitwise.
fn binomial_row_mod2(e: usize) -> Vec<u8> {
    (0..=e).map(|i| u8::from(i & e == i)).collect()
}

/// χ_S mod 2 must equal (x+1)^n for even n and x(x+1)^(n-1) for odd n.
pub fn mod2_charpoly_class(s: &SeidelMatrix) -> Mod2Class {
    let n = s.order();
    let got = seidel_char_poly(s).mod2();
    let expected = mod2_charpoly_target(n);
    Mod2Class {
        parity: if n % 2 == 0 { Parity::Even } else { Parity::Odd },
        matches: got == expected,
    }
}

/// The mod-2 characteristic polynomial forced on every Seidel matrix.
pub fn mod2_charpoly_target(n: usize) -> Vec<u8> {
    if n % 2 == 0 {
        binomial_row_mod2(n)
    } else {
        let mut v = vec![0u8];
        v.extend(binomial_row_mod2(n - 1));
        v
    }
}

/// S² ≡ (n-2)J + I mod 4, valid when the underlying graph (identity
/// switching) is an Euler graph. The violated precondition is an error,
/// distinct from a `false` verdict.
pub fn mod4_square_check(s: &SeidelMatrix) -> Result<bool> {
    let n = s.order();
    let g = graph_from_seidel(s, &SwitchingVector::identity(n))?;
    if !g.is_euler() {
        return Err(Error::Precondition(
            "underlying graph must be an Euler graph (apply euler_switch first)".into(),
        ));
    }
    let four = BigInt::from(4);
    let sq = s.to_big().pow(2).mod_reduce(&four);
    let target = SquareMatrix::from_fn(n, |i, j| {
        let v = if i == j {
            BigInt::from(n) - BigInt::one() // (n-2)·1 + 1
        } else {
            BigInt::from(n) - BigInt::from(2)
        };
        v.mod_floor(&four)
    });
    Ok(sq == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seidel::{seidel_from_graph, Graph};

    fn pentagon() -> SeidelMatrix {
        seidel_from_graph(
            &Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        )
    }

    fn j_minus_i(n: usize) -> SeidelMatrix {
        seidel_from_graph(&Graph::empty(n))
    }

    fn bigpoly(v: &[i64]) -> IntPolynomial {
        Poly::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn pentagon_char_poly_is_x_times_x2_minus_5_squared() {
        // x(x²-5)² = x⁵ - 10x³ + 25x
        assert_eq!(seidel_char_poly(&pentagon()), bigpoly(&[0, 25, 0, -10, 0, 1]));
    }

    #[test]
    fn pentagon_spectrum() {
        let spec = spectrum(&pentagon());
        assert_eq!(
            spec.entries(),
            &[
                (Eigenvalue::integer(0), 1),
                (Eigenvalue::pair(0, -5), 2)
            ]
        );
        assert!(spec.residual().is_none());
        assert_eq!(spec.render(), "0^1,surd(0,-5)^2");
        assert!(spec.satisfies_seidel_trace_identities());
    }

    #[test]
    fn j_minus_i_4_spectrum() {
        let spec = spectrum(&j_minus_i(4));
        assert_eq!(
            spec.entries(),
            &[
                (Eigenvalue::integer(-1), 3),
                (Eigenvalue::integer(3), 1)
            ]
        );
    }

    #[test]
    fn spectrum_reassembles_char_poly() {
        for s in [pentagon(), j_minus_i(4), j_minus_i(5)] {
            assert_eq!(spectrum(&s).to_poly(), seidel_char_poly(&s));
        }
    }

    #[test]
    fn distinct_count_via_gcd() {
        assert_eq!(distinct_eigenvalue_count(&j_minus_i(4)), 2);
        assert_eq!(distinct_eigenvalue_count(&pentagon()), 3);
    }

    #[test]
    fn psd_examples() {
        let j3 = SquareMatrix::<BigInt>::ones(3);
        assert!(is_psd(&j3).unwrap());
        let m = SquareMatrix::from_rows(vec![
            vec![BigInt::from(6), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(6)],
        ]);
        assert!(is_psd(&m).unwrap()); // eigenvalues 8, 4
        let flip = SquareMatrix::from_rows(vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ]);
        assert!(!is_psd(&flip).unwrap()); // eigenvalue -1
        let asym = SquareMatrix::from_rows(vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(2), BigInt::from(0)],
        ]);
        assert_eq!(is_psd(&asym), Err(Error::NotSymmetric));
    }

    #[test]
    fn mod2_powers() {
        assert!(mod2_power_check(&j_minus_i(3), 2));
        for k in 1..=5 {
            assert!(mod2_power_check(&pentagon(), k));
        }
    }

    #[test]
    fn mod2_charpoly_classes() {
        let c = mod2_charpoly_class(&j_minus_i(3));
        assert_eq!(c.parity, Parity::Odd);
        assert!(c.matches);
        // every order-4 Seidel matrix
        for bits in 0..64u32 {
            let upper: Vec<i8> = (0..6).map(|k| if bits >> k & 1 == 1 { -1 } else { 1 }).collect();
            let s = SeidelMatrix::from_upper_triangle(4, &upper).unwrap();
            let c = mod2_charpoly_class(&s);
            assert_eq!(c.parity, Parity::Even);
            assert!(c.matches);
        }
    }

    #[test]
    fn mod4_square_on_euler_representatives() {
        assert_eq!(mod4_square_check(&pentagon()), Ok(true));
        assert_eq!(mod4_square_check(&j_minus_i(5)), Ok(true));
        // a non-Euler underlying graph must be a precondition error
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let s = seidel_from_graph(&g);
        assert!(matches!(mod4_square_check(&s), Err(Error::Precondition(_))));
    }

    #[test]
    fn grammar_parse_and_render() {
        let spec = parse_spectrum_text("-5^24,5^6,9^10").unwrap();
        assert_eq!(spec.order(), 40);
        assert_eq!(spec.render(), "-5^24,5^6,9^10");
        let spec = parse_spectrum_text("-3^4,surd(-4,-1)^3").unwrap();
        assert_eq!(spec.order(), 10);
        assert_eq!(spec.render(), "-3^4,surd(-4,-1)^3");
        assert!(parse_spectrum_text("5^2,5^3").is_err()); // duplicate
        assert!(parse_spectrum_text("surd(0,5)^1").is_err()); // complex pair
        assert!(parse_spectrum_text("surd(2,1)^1").is_err()); // square discriminant
        assert!(parse_spectrum_text("5^0").is_err());
        assert!(parse_spectrum_text("garbage").is_err());
    }

    #[test]
    fn smallest_and_largest() {
        let spec = parse_spectrum_text("-3^4,surd(-4,-1)^3").unwrap();
        let (lo, m) = spec.smallest().unwrap();
        assert_eq!(lo, QuadRoot::Integer(BigInt::from(-3)));
        assert_eq!(m, 4);
        let (hi, m) = spec.largest().unwrap();
        assert!(matches!(hi, QuadRoot::Surd { plus: true, .. }));
        assert_eq!(m, 3);
    }

    #[test]
    fn char_poly_invariant_under_switching() {
        let s = pentagon();
        for mask in 0..16u64 {
            let v = SwitchingVector::from_mask(5, mask);
            let t = crate::seidel::switch(&s, &v).unwrap();
            assert_eq!(seidel_char_poly(&t), seidel_char_poly(&s));
        }
    }
}
