//! Equiangular line-system parameters of a Seidel matrix.
//!
//! A Seidel matrix of order n with smallest eigenvalue λ₀ of multiplicity
//! n-d corresponds to a system of n equiangular lines in dimension d with
//! common angle α = 1/|λ₀|.

use crate::algebraic::QuadRoot;
use crate::error::{Error, Result};
use crate::seidel::SeidelMatrix;
use crate::spectra::{spectrum, Spectrum};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// The reciprocal of the common angle, stored exactly: either the integer
/// |λ₀|, or the minimal polynomial x² + p x + q of λ₀ when λ₀ is a
/// quadratic irrational.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum InvAlpha {
    Integer(BigInt),
    Quadratic { p: BigInt, q: BigInt },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LineSystemParams {
    /// Number of lines.
    pub n: usize,
    /// Ambient dimension: n minus the multiplicity of the smallest eigenvalue.
    pub d: usize,
    /// 1/α where α is the common angle.
    pub inv_alpha: InvAlpha,
}

impl LineSystemParams {
    pub fn describe(&self) -> String {
        match &self.inv_alpha {
            InvAlpha::Integer(v) => format!("n={}, d={}, alpha=1/{}", self.n, self.d, v),
            InvAlpha::Quadratic { p, q } => format!(
                "n={}, d={}, alpha=1/|root of x^2+({})x+({})|",
                self.n, self.d, p, q
            ),
        }
    }
}

/// Line parameters read off a spectrum. Requires at least 2 lines and a
/// fully factored spectrum.
pub fn line_params_of_spectrum(spec: &Spectrum) -> Result<LineSystemParams> {
    let n = spec.order();
    if n < 2 {
        return Err(Error::Precondition(
            "line parameters need order at least 2".into(),
        ));
    }
    let (smallest, mult) = spec.smallest()?;
    let inv_alpha = match smallest {
        QuadRoot::Integer(v) => {
            if !v.is_negative() {
                return Err(Error::Precondition(
                    "smallest eigenvalue of a Seidel matrix of order >= 2 must be negative".into(),
                ));
            }
            InvAlpha::Integer(v.abs())
        }
        QuadRoot::Surd { p, q, .. } => InvAlpha::Quadratic { p, q },
    };
    Ok(LineSystemParams {
        n,
        d: n - mult,
        inv_alpha,
    })
}

pub fn line_params(s: &SeidelMatrix) -> Result<LineSystemParams> {
    line_params_of_spectrum(&spectrum(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::seidel::{seidel_from_graph, Graph};

    #[test]
    fn all_plus_one_order_3() {
        let s = seidel_from_graph(&Graph::empty(3));
        let p = line_params(&s).unwrap();
        assert_eq!((p.n, p.d), (3, 1));
        assert_eq!(p.inv_alpha, InvAlpha::Integer(BigInt::from(1))); // alpha = 1
    }

    #[test]
    fn s10_params() {
        let p = line_params(&fixtures::s10()).unwrap();
        assert_eq!((p.n, p.d), (10, 6));
        assert_eq!(p.inv_alpha, InvAlpha::Integer(BigInt::from(3)));
    }

    #[test]
    fn pentagon_params() {
        let p = line_params(&fixtures::pentagon_seidel()).unwrap();
        assert_eq!((p.n, p.d), (5, 3));
        assert_eq!(
            p.inv_alpha,
            InvAlpha::Quadratic {
                p: BigInt::from(0),
                q: BigInt::from(-5)
            }
        );
    }

    #[test]
    fn order_one_rejected() {
        let s = SeidelMatrix::from_entries(1, vec![0]).unwrap();
        assert!(line_params(&s).is_err());
    }
}
