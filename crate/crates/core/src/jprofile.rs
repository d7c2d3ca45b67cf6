//! J-invariant profiles: the number of generators, their degrees and the
//! truncation bounds in the presentation
//! `Ch*(G0) = F_p[e_1..e_r] / (e_1^{p^{k_1}}, ..., e_r^{p^{k_r}})`.
//!
//! Profiles are data. The registry ingests a JSON document (see
//! `data/profiles.json` for the bundled default) and hard-validates only the
//! entries of type `D_n` at `p = 2`, whose rank, degrees and first bound are
//! fixed: `r = floor(n/2) + 1`, degrees `1, 1, 3, 5, ...`, `k_1 = v_2(n)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{geom_quotient, IntPoly};
use crate::rootdata::{DynkinType, Series};

pub const DEFAULT_PROFILES: &str = include_str!("../data/profiles.json");

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JProfile {
    ty: Option<DynkinType>,
    p: u32,
    degrees: Vec<u32>,
    bounds: Vec<u32>,
}

impl JProfile {
    /// Checks the invariants every profile must satisfy: prime `p`, equal
    /// lengths, positive nondecreasing degrees coprime to `p`.
    pub fn new(
        ty: Option<DynkinType>,
        p: u32,
        degrees: Vec<u32>,
        bounds: Vec<u32>,
    ) -> Result<Self> {
        let fail = |reason: String| Error::Consistency {
            type_name: ty.map_or_else(|| "profile".to_string(), |t| t.to_string()),
            p,
            reason,
        };
        if !is_prime(p) {
            return Err(fail(format!("{p} is not prime")));
        }
        if degrees.len() != bounds.len() {
            return Err(fail(format!(
                "{} degrees but {} bounds",
                degrees.len(),
                bounds.len()
            )));
        }
        if degrees.iter().any(|&d| d == 0 || d % p == 0) {
            return Err(fail(format!(
                "degrees {degrees:?} must be positive and prime to {p}"
            )));
        }
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(fail(format!("degrees {degrees:?} are not sorted")));
        }
        Ok(JProfile {
            ty,
            p,
            degrees,
            bounds,
        })
    }

    /// Profile not tied to a Dynkin type.
    pub fn synthetic(p: u32, degrees: Vec<u32>, bounds: Vec<u32>) -> Result<Self> {
        JProfile::new(None, p, degrees, bounds)
    }

    pub fn dynkin_type(&self) -> Option<DynkinType> {
        self.ty
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    /// Number of leading components of degree 1.
    pub fn degree_one_count(&self) -> usize {
        self.degrees.iter().take_while(|&&d| d == 1).count()
    }

    /// Codimension of the monomial `e^M`.
    pub fn codim(&self, monomial: &Monomial) -> Result<u64> {
        check_len(self.r(), monomial.0.len())?;
        Ok(self
            .degrees
            .iter()
            .zip(&monomial.0)
            .map(|(&d, &m)| d as u64 * m as u64)
            .sum())
    }

    /// Graded dimension of `F_p[e_1..e_r] / (e_i^{p^{j_i}})`.
    pub fn truncated_ring_poincare(&self, exponents: &[u32]) -> Result<IntPoly> {
        check_len(self.r(), exponents.len())?;
        let factors = self
            .degrees
            .iter()
            .zip(exponents)
            .map(|(&d, &j)| {
                let top = p_power(self.p, j)
                    .and_then(|q| q.checked_mul(d as u64))
                    .and_then(|v| usize::try_from(v).ok())
                    .ok_or_else(|| {
                        Error::InvalidInput(format!("{d}*{}^{j} is too large", self.p))
                    })?;
                geom_quotient(top, d as usize)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::product(&factors))
    }

    /// Compares monomials by codimension first, then at the greatest index
    /// where they differ.
    pub fn monomial_compare(&self, m: &Monomial, n: &Monomial) -> Result<Ordering> {
        check_len(m.0.len(), n.0.len())?;
        let by_codim = self.codim(m)?.cmp(&self.codim(n)?);
        if by_codim != Ordering::Equal {
            return Ok(by_codim);
        }
        Ok(m.0
            .iter()
            .zip(&n.0)
            .rev()
            .find(|(a, b)| a != b)
            .map_or(Ordering::Equal, |(a, b)| a.cmp(b)))
    }

    /// Builds a J-invariant on this profile, checking `0 <= j_i <= k_i`.
    pub fn j_invariant(&self, components: Vec<u32>) -> Result<JInvariant> {
        check_len(self.r(), components.len())?;
        if let Some(i) = components.iter().zip(&self.bounds).position(|(j, k)| j > k) {
            return Err(Error::InvalidInput(format!(
                "component j_{} = {} exceeds its bound {}",
                i + 1,
                components[i],
                self.bounds[i]
            )));
        }
        Ok(JInvariant {
            profile: self.clone(),
            components,
        })
    }

    /// Number of J-invariants on this profile, `prod (k_i + 1)`.
    pub fn candidate_count(&self) -> u128 {
        self.bounds.iter().map(|&k| k as u128 + 1).product()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JInvariant {
    profile: JProfile,
    components: Vec<u32>,
}

impl JInvariant {
    pub fn profile(&self) -> &JProfile {
        &self.profile
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    /// Components attached to generators of degree 1.
    pub fn degree_one(&self) -> &[u32] {
        &self.components[..self.profile.degree_one_count()]
    }

    /// Components attached to generators of degree > 1.
    pub fn higher(&self) -> &[u32] {
        &self.components[self.profile.degree_one_count()..]
    }
}

/// Exponent tuple `(m_1, ..., m_r)` of the monomial `e_1^{m_1} ... e_r^{m_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

fn check_len(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left, right })
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `p^j`, or `None` on overflow.
pub fn p_power(p: u32, j: u32) -> Option<u64> {
    (p as u64).checked_pow(j)
}

/// p-adic valuation of a positive integer.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    assert!(n > 0 && p > 1);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// The one profile entry fully pinned down here: type `D_n`, `p = 2`.
/// Returns `(r, degrees, k_1)`.
pub fn d_series_shape(n: usize) -> (usize, Vec<u32>, u32) {
    let r = n / 2 + 1;
    let degrees = std::iter::once(1)
        .chain((2..=r as u32).map(|i| 2 * i - 3))
        .collect();
    (r, degrees, valuation(n as u64, 2))
}

/// One entry of the profile document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileEntry {
    pub series: String,
    pub rank: usize,
    pub p: u32,
    pub r: usize,
    pub degrees: Vec<u32>,
    /// `null` is accepted only for `k_1` of a `D_n`, `p = 2` entry and is
    /// replaced by `v_2(n)`.
    pub bounds: Vec<Option<u32>>,
}

#[derive(Clone, Debug, Default)]
pub struct ProfileRegistry {
    profiles: BTreeMap<(DynkinType, u32), JProfile>,
}

impl ProfileRegistry {
    pub fn from_json(doc: &str) -> Result<Self> {
        let entries: Vec<ProfileEntry> =
            serde_json::from_str(doc).map_err(|e| Error::Schema(e.to_string()))?;
        let mut registry = ProfileRegistry::default();
        for entry in entries {
            let profile = validate_entry(&entry)?;
            let key = (ty_of(&profile), profile.p);
            if registry.profiles.insert(key, profile).is_some() {
                return Err(Error::Schema(format!(
                    "duplicate entry for {}{} p={}",
                    entry.series, entry.rank, entry.p
                )));
            }
        }
        Ok(registry)
    }

    pub fn bundled() -> Self {
        ProfileRegistry::from_json(DEFAULT_PROFILES).expect("bundled profile table is valid")
    }

    pub fn get(&self, ty: DynkinType, p: u32) -> Option<&JProfile> {
        self.profiles.get(&(ty, p))
    }

    pub fn iter(&self) -> impl Iterator<Item = &JProfile> {
        self.profiles.values()
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }
}

fn validate_entry(entry: &ProfileEntry) -> Result<JProfile> {
    let series = entry
        .series
        .chars()
        .next()
        .filter(|_| entry.series.chars().count() == 1)
        .and_then(Series::from_letter)
        .ok_or_else(|| Error::Schema(format!("unknown series {:?}", entry.series)))?;
    let ty = DynkinType::new(series, entry.rank).map_err(|e| Error::Schema(e.to_string()))?;
    let fail = |reason: String| Error::Consistency {
        type_name: ty.to_string(),
        p: entry.p,
        reason,
    };
    if entry.degrees.len() != entry.r || entry.bounds.len() != entry.r {
        return Err(Error::Schema(format!(
            "{ty}: r = {} but {} degrees and {} bounds",
            entry.r,
            entry.degrees.len(),
            entry.bounds.len()
        )));
    }

    let pinned_d = series == Series::D && entry.p == 2;
    let mut bounds = Vec::with_capacity(entry.r);
    for (i, b) in entry.bounds.iter().enumerate() {
        match (b, i, pinned_d) {
            (Some(k), _, _) => bounds.push(*k),
            (None, 0, true) => bounds.push(valuation(entry.rank as u64, 2)),
            (None, _, _) => {
                return Err(Error::Schema(format!("{ty}: bound k_{} is missing", i + 1)))
            }
        }
    }

    if pinned_d {
        let (r, degrees, k1) = d_series_shape(entry.rank);
        if entry.r != r {
            return Err(fail(format!("r must be {r}, found {}", entry.r)));
        }
        if entry.degrees != degrees {
            return Err(fail(format!(
                "degrees must be {degrees:?}, found {:?}",
                entry.degrees
            )));
        }
        if bounds[0] != k1 {
            return Err(fail(format!(
                "k_1 must be v_2(n) = {k1}, found {}",
                bounds[0]
            )));
        }
    }
    JProfile::new(Some(ty), entry.p, entry.degrees.clone(), bounds)
}

fn ty_of(profile: &JProfile) -> DynkinType {
    profile.ty.expect("registry profiles carry a type")
}
