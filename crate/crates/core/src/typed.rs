//! Type `D_n` at `p = 2`: the group `PGO+(A, sigma)` for a central simple
//! algebra `A` of degree `2n` with orthogonal involution of trivial
//! discriminant, whose Clifford algebra splits as `C+ x C-`.
//!
//! All indices are carried as 2-adic valuations: `ind A = 2^{i_A}`,
//! `ind C+ = 2^{i_+}`, `ind C- = 2^{i_-}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jprofile::{d_series_shape, valuation, JInvariant};
use crate::splitting::{split_transform, SplittingInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvolutionData {
    pub n: u64,
    pub ia: u32,
    pub iplus: u32,
    pub iminus: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SecondComponent {
    Exact {
        value: u32,
    },
    /// Not determined by the index data; only `j_2 <= upper_bound` is known.
    Indeterminate {
        upper_bound: u32,
    },
}

impl InvolutionData {
    pub fn new(n: u64, ia: u32, iplus: u32, iminus: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        Ok(InvolutionData {
            n,
            ia,
            iplus,
            iminus,
        })
    }

    /// `k_1 = v_2(n)`.
    pub fn k1(&self) -> u32 {
        valuation(self.n, 2)
    }

    /// Index-level consequences of the fundamental relations. An empty list
    /// means no violation was found; the check is not exhaustive.
    pub fn validate(&self) -> Vec<String> {
        let mut violations = Vec::new();
        let max_ia = self.k1() + 1;
        if self.ia > max_ia {
            violations.push(format!(
                "i_A = {} exceeds v_2(2n) = {max_ia}: the index cannot exceed the degree",
                self.ia
            ));
        }
        if self.n.is_multiple_of(2) {
            // [A] + [C+] + [C-] = 0
            if self.iplus == 0 && self.iminus == 0 && self.ia != 0 {
                violations.push(format!(
                    "C+ and C- are split, so A must be split, but i_A = {}",
                    self.ia
                ));
            } else if self.iplus == 0 && self.iminus != self.ia {
                violations.push(format!(
                    "C+ is split, so C- is Brauer equivalent to A, but i_- = {} and i_A = {}",
                    self.iminus, self.ia
                ));
            } else if self.iminus == 0 && self.iplus != self.ia {
                violations.push(format!(
                    "C- is split, so C+ is Brauer equivalent to A, but i_+ = {} and i_A = {}",
                    self.iplus, self.ia
                ));
            }
        } else if (self.iplus == 0 || self.iminus == 0) && self.ia != 0 {
            // [A] = 2[C+] = 2[C-]
            violations.push(format!(
                "a split Clifford component forces A to be split, but i_A = {}",
                self.ia
            ));
        }
        violations
    }

    fn checked(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidData(violations))
        }
    }

    /// `j_1 = min{k_1, i_A, max{i_+, i_-}}`.
    pub fn j1(&self) -> Result<u32> {
        self.checked()?;
        Ok(self.k1().min(self.ia).min(self.iplus.max(self.iminus)))
    }

    /// `j_1 = min{k_1, i_A}` when one Clifford component is split.
    pub fn j1_halfspin(&self) -> Result<u32> {
        if self.iplus != 0 && self.iminus != 0 {
            return Err(Error::NotHalfSpin {
                iplus: self.iplus,
                iminus: self.iminus,
            });
        }
        self.checked()?;
        Ok(self.k1().min(self.ia))
    }

    /// `j_2 = min{i_+, i_-}` when that is below `min{k_1, i_A}`.
    pub fn j2(&self) -> SecondComponent {
        let lower = self.iplus.min(self.iminus);
        if lower < self.k1().min(self.ia) {
            SecondComponent::Exact { value: lower }
        } else {
            SecondComponent::Indeterminate { upper_bound: lower }
        }
    }

    /// Valuation of the index of `A` over the function field of `X_+` (or
    /// `X_-`), the components of the variety of maximal isotropic ideals.
    pub fn index_reduction_exponent(&self, component: Component) -> u32 {
        let other = match component {
            Component::Plus => self.iminus,
            Component::Minus => self.iplus,
        };
        self.k1().min(self.ia).min(other)
    }

    /// J-invariant over the function field of `SB(A)`: the first component
    /// becomes 0 and the rest are unchanged.
    pub fn split_over_fa(&self, j: &JInvariant) -> Result<JInvariant> {
        let profile = j.profile();
        let (r, degrees, _) = d_series_shape(self.n as usize);
        let type_matches = profile
            .dynkin_type()
            .is_none_or(|t| t.to_string() == format!("D{}", self.n));
        if profile.p() != 2 || profile.degrees() != degrees.as_slice() || !type_matches {
            return Err(Error::InvalidInput(format!(
                "expected a D{} profile at p = 2 with {r} components",
                self.n
            )));
        }
        let j1 = self.j1()?;
        if j.components()[0] != j1 {
            return Err(Error::InconsistentInput(format!(
                "first component {} differs from j_1 = {j1} computed from the index data",
                j.components()[0]
            )));
        }
        let mut after = j.components().to_vec();
        after[0] = 0;
        let reduced = profile.j_invariant(after)?;

        let input = SplittingInput::with_p_primary_degree(j.clone(), 2 * self.n, j1)?;
        let delegated = split_transform(&input)?;
        assert_eq!(
            delegated.after,
            reduced.components(),
            "generic splitting disagrees with the type D reduction"
        );
        Ok(reduced)
    }
}
