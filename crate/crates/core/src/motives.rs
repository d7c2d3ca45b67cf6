//! Poincaré polynomial of the indecomposable motive `R_p(G)` and the twist
//! multiset of a generically split variety.
//!
//! For a generically split `X`, `M(X)` is a sum of Tate twists `R_p(G)(i)`.
//! The multiplicity of twist `i` is the degree-`i` coefficient of
//! `P(X, t) / P(R_p(G), t)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jprofile::{JInvariant, JProfile};
use crate::polyring::IntPoly;

/// Upper limit on the candidates `admissible_j` scans.
pub const ADMISSIBLE_SCAN_CAP: u128 = 1_000_000;

/// Shifts `i` with their multiplicities `a_i > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwistMultiset {
    counts: BTreeMap<usize, BigInt>,
}

impl TwistMultiset {
    pub fn counts(&self) -> &BTreeMap<usize, BigInt> {
        &self.counts
    }

    pub fn multiplicity(&self, shift: usize) -> BigInt {
        self.counts.get(&shift).cloned().unwrap_or_default()
    }

    /// Total number of summands.
    pub fn size(&self) -> BigInt {
        self.counts.values().sum()
    }

    /// `sum a_i t^i`.
    pub fn to_poly(&self) -> IntPoly {
        let len = self.counts.keys().next_back().map_or(0, |&k| k + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for (&i, a) in &self.counts {
            coeffs[i] = a.clone();
        }
        IntPoly::from_coeffs(coeffs)
    }

    fn from_poly(quotient: &IntPoly) -> Result<Self> {
        if let Some(degree) = quotient.first_negative() {
            return Err(Error::NegativeMultiplicity {
                quotient: quotient.clone(),
                degree,
            });
        }
        let counts = quotient
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (i, a.clone()))
            .collect();
        Ok(TwistMultiset { counts })
    }
}

/// `P(R_p(G), t) = prod_i (1 - t^{d_i p^{j_i}}) / (1 - t^{d_i})`.
pub fn motive_poincare(j: &JInvariant) -> IntPoly {
    j.profile()
        .truncated_ring_poincare(j.components())
        .expect("components are bounded by the profile")
}

/// Twist multiset of `M(X)` for a generically split `X` with Poincaré
/// polynomial `p_x`.
pub fn decompose(p_x: &IntPoly, j: &JInvariant) -> Result<TwistMultiset> {
    let quotient = p_x.exact_div(&motive_poincare(j))?;
    TwistMultiset::from_poly(&quotient)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSet {
    /// Admissible J-invariants in lexicographic order of components.
    pub invariants: Vec<JInvariant>,
    pub scanned: u128,
    /// Set when the candidate space exceeded the scan cap.
    pub truncated: bool,
}

/// All J-invariants on `profile` for which `decompose(p_x, J)` succeeds.
pub fn admissible_j(p_x: &IntPoly, profile: &JProfile) -> AdmissibleSet {
    admissible_j_capped(p_x, profile, ADMISSIBLE_SCAN_CAP)
}

pub fn admissible_j_capped(p_x: &IntPoly, profile: &JProfile, cap: u128) -> AdmissibleSet {
    let bounds = profile.bounds();
    let total = profile.candidate_count();
    let mut invariants = Vec::new();
    let mut scanned = 0u128;
    let mut tuple = vec![0u32; bounds.len()];
    'scan: while scanned < cap.min(total) {
        scanned += 1;
        let j = profile
            .j_invariant(tuple.clone())
            .expect("odometer stays within bounds");
        if decompose(p_x, &j).is_ok() {
            invariants.push(j);
        }
        // lexicographic successor, last component fastest
        for i in (0..tuple.len()).rev() {
            if tuple[i] < bounds[i] {
                tuple[i] += 1;
                continue 'scan;
            }
            tuple[i] = 0;
        }
        break;
    }
    AdmissibleSet {
        invariants,
        scanned,
        truncated: scanned < total,
    }
}
