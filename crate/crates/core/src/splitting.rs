//! How the J-invariant changes over the function field of the Severi-Brauer
//! variety of a Tits algebra `A`.
//!
//! Components of degree > 1 are unchanged. The degree-1 components satisfy
//! the multiset identity `J1(G) + {0} = J1(G_{F_A}) + {j_GA}`, and the
//! Poincaré polynomials satisfy
//!
//! ```text
//! (t^j - 1) prod_i (t^{d_i p^{j'_i}} - 1) = (t - 1) prod_i (t^{d_i p^{j_i}} - 1)
//! ```
//!
//! with `j = p^{j_GA}` the smallest positive codimension of a rational power
//! of the hyperplane class on `SB(A)`. Equivalently
//! `(t^n - 1)/(t - 1) = prod_i (t^{d_i p^{j_i}} - 1)/(t^{d_i p^{j'_i}} - 1) * F(t)`
//! with `F(t) = (t^n - 1)/(t^j - 1)`.

use crate::error::{Error, Result};
use crate::jprofile::{p_power, valuation, JInvariant};
use crate::polyring::{geom_quotient, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingInput {
    j: JInvariant,
    n: u64,
    jga: u32,
}

impl SplittingInput {
    /// `n` is the degree of `A` and must be a power of `p`; `p^jga` must
    /// divide `n`.
    pub fn new(j: JInvariant, n: u64, jga: u32) -> Result<Self> {
        let p = j.profile().p();
        check_degree(n, jga, p)?;
        Ok(SplittingInput { j, n, jga })
    }

    /// Replaces `n` by its `p`-primary part first.
    pub fn with_p_primary_degree(j: JInvariant, n: u64, jga: u32) -> Result<Self> {
        let p = j.profile().p();
        SplittingInput::new(j, p_primary_part(n, p)?, jga)
    }

    pub fn j(&self) -> &JInvariant {
        &self.j
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn jga(&self) -> u32 {
        self.jga
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingResult {
    /// Degree-1 components over `F_A`, sorted descending.
    pub degree_one_after: Vec<u32>,
    /// Components of degree > 1, copied from the input.
    pub higher_after: Vec<u32>,
    /// The full tuple `(j'_1, ..., j'_r)` under the indexing convention of
    /// [`split_transform`].
    pub after: Vec<u32>,
    pub f: IntPoly,
}

/// Largest power of `p` dividing `n`.
pub fn p_primary_part(n: u64, p: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "algebra degree must be positive".into(),
        ));
    }
    Ok((p as u64).pow(valuation(n, p as u64)))
}

fn check_degree(n: u64, jga: u32, p: u32) -> Result<()> {
    if n == 0 || p_power(p, valuation(n, p as u64)) != Some(n) {
        return Err(Error::InvalidInput(format!(
            "degree {n} of A is not a power of {p}"
        )));
    }
    match p_power(p, jga) {
        Some(q) if n.is_multiple_of(q) => Ok(()),
        _ => Err(Error::InvalidInput(format!(
            "{p}^{jga} does not divide the degree {n}"
        ))),
    }
}

/// `F(t) = (t^n - 1)/(t^{p^jga} - 1) = 1 + t^j + ... + t^{n-j}`.
pub fn f_polynomial(n: u64, jga: u32, p: u32) -> Result<IntPoly> {
    check_degree(n, jga, p)?;
    let j = p_power(p, jga).expect("checked above");
    geom_quotient(to_usize(n)?, to_usize(j)?)
}

fn to_usize(v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InvalidInput(format!("{v} is too large")))
}

/// Applies the splitting rule. In the indexed output, the first degree-1
/// slot holding `jga` becomes 0 and every other component is unchanged.
pub fn split_transform(input: &SplittingInput) -> Result<SplittingResult> {
    let j = &input.j;
    let p = j.profile().p();
    let jga = input.jga;
    let degree_one = j.degree_one();

    let mut after = j.components().to_vec();
    if jga != 0 {
        let slot = degree_one.iter().position(|&x| x == jga).ok_or_else(|| {
            Error::InconsistentInput(format!(
                "j_GA = {jga} is not among the degree-1 components {degree_one:?} or 0"
            ))
        })?;
        after[slot] = 0;
    }
    let l = degree_one.len();
    let mut degree_one_after = after[..l].to_vec();
    degree_one_after.sort_unstable_by(|a, b| b.cmp(a));
    Ok(SplittingResult {
        degree_one_after,
        higher_after: after[l..].to_vec(),
        after,
        f: f_polynomial(input.n, jga, p)?,
    })
}

/// Both sides of every checked identity, kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// `(t^j - 1) prod (t^{d_i p^{j'_i}} - 1)`
    pub lhs: IntPoly,
    /// `(t - 1) prod (t^{d_i p^{j_i}} - 1)`
    pub rhs: IntPoly,
    /// Cross-multiplied quotient form; `false` if `F` is undefined.
    pub quotient_form_cross: bool,
    /// Quotient form evaluated factor by factor, when every factor divides.
    pub quotient_form_exact: Option<bool>,
}

fn cyclic(d: u32, p: u32, j: u32) -> Result<IntPoly> {
    let e = p_power(p, j)
        .and_then(|q| q.checked_mul(d as u64))
        .ok_or_else(|| Error::InvalidInput(format!("{d}*{p}^{j} is too large")))?;
    Ok(IntPoly::t_pow_minus_one(to_usize(e)?))
}

/// Checks the polynomial identity relating `before` and `after` for an
/// algebra of degree `n` with the given `j_GA`.
pub fn verify_identity(
    before: &JInvariant,
    after: &[u32],
    n: u64,
    jga: u32,
) -> Result<IdentityCheck> {
    let profile = before.profile();
    if after.len() != profile.r() {
        return Err(Error::LengthMismatch {
            left: profile.r(),
            right: after.len(),
        });
    }
    let p = profile.p();
    let degrees = profile.degrees();
    let old: Vec<IntPoly> = degrees
        .iter()
        .zip(before.components())
        .map(|(&d, &j)| cyclic(d, p, j))
        .collect::<Result<_>>()?;
    let new: Vec<IntPoly> = degrees
        .iter()
        .zip(after)
        .map(|(&d, &j)| cyclic(d, p, j))
        .collect::<Result<_>>()?;
    let prod_old = IntPoly::product(&old);
    let prod_new = IntPoly::product(&new);

    let j =
        p_power(p, jga).ok_or_else(|| Error::InvalidInput(format!("{p}^{jga} is too large")))?;
    let lhs = IntPoly::t_pow_minus_one(to_usize(j)?).mul(&prod_new);
    let rhs = IntPoly::t_pow_minus_one(1).mul(&prod_old);
    let displayed = lhs == rhs;

    let projective = geom_quotient(to_usize(n.max(1))?, 1)?;
    let (cross, exact) = match f_polynomial(n, jga, p) {
        Ok(f) => {
            let cross = projective.mul(&prod_new) == prod_old.mul(&f);
            let ratios: Option<Vec<IntPoly>> = old
                .iter()
                .zip(&new)
                .map(|(o, n)| o.exact_div(n).ok())
                .collect();
            let exact = ratios.map(|r| IntPoly::product(&r).mul(&f) == projective);
            (cross, exact)
        }
        Err(_) => (false, None),
    };
    Ok(IdentityCheck {
        holds: displayed && cross && exact.unwrap_or(true),
        lhs,
        rhs,
        quotient_form_cross: cross,
        quotient_form_exact: exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jprofile::JProfile;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn d_like() -> JProfile {
        JProfile::synthetic(2, vec![1, 1, 3, 5], vec![3, 3, 2, 1]).unwrap()
    }

    #[test]
    fn f_polynomial_examples() {
        assert_eq!(f_polynomial(8, 1, 2).unwrap(), p(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(f_polynomial(8, 0, 2).unwrap(), p(&[1; 8]));
        assert_eq!(f_polynomial(4, 2, 2).unwrap(), IntPoly::one());
        assert!(matches!(f_polynomial(4, 3, 2), Err(Error::InvalidInput(_))));
        assert!(matches!(f_polynomial(6, 0, 2), Err(Error::InvalidInput(_))));
        assert_eq!(f_polynomial(9, 1, 3).unwrap(), p(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn split_transform_d_example() {
        let j = d_like().j_invariant(vec![2, 1, 1, 0]).unwrap();
        let input = SplittingInput::new(j.clone(), 8, 2).unwrap();
        let out = split_transform(&input).unwrap();
        assert_eq!(out.after, vec![0, 1, 1, 0]);
        assert_eq!(out.degree_one_after, vec![1, 0]);
        assert_eq!(out.higher_after, vec![1, 0]);
        assert_eq!(out.f, p(&[1, 0, 0, 0, 1]));
        assert!(verify_identity(&j, &out.after, 8, 2).unwrap().holds);
    }

    #[test]
    fn split_transform_trivial_and_inconsistent() {
        let j = d_like().j_invariant(vec![2, 1, 1, 0]).unwrap();
        let out = split_transform(&SplittingInput::new(j.clone(), 4, 0).unwrap()).unwrap();
        assert_eq!(out.after, j.components());

        let prof = JProfile::synthetic(2, vec![1, 1], vec![3, 3]).unwrap();
        let j = prof.j_invariant(vec![1, 0]).unwrap();
        let err = split_transform(&SplittingInput::new(j, 8, 3).unwrap()).unwrap_err();
        assert!(matches!(err, Error::InconsistentInput(_)));
    }

    #[test]
    fn splitting_input_checks_degree() {
        let j = d_like().j_invariant(vec![1, 0, 0, 0]).unwrap();
        assert!(SplittingInput::new(j.clone(), 6, 1).is_err());
        assert!(SplittingInput::new(j.clone(), 2, 2).is_err());
        assert!(SplittingInput::new(j.clone(), 0, 0).is_err());
        let input = SplittingInput::with_p_primary_degree(j, 12, 1).unwrap();
        assert_eq!(input.n(), 4);
    }

    #[test]
    fn verify_identity_examples() {
        let prof = JProfile::synthetic(2, vec![1, 1], vec![2, 2]).unwrap();
        let j = prof.j_invariant(vec![2, 0]).unwrap();
        let ok = verify_identity(&j, &[0, 0], 4, 2).unwrap();
        assert!(ok.holds);
        // (t^4 - 1)(t - 1)(t - 1) on both sides
        let expect = IntPoly::product(&[
            IntPoly::t_pow_minus_one(4),
            IntPoly::t_pow_minus_one(1),
            IntPoly::t_pow_minus_one(1),
        ]);
        assert_eq!(ok.lhs, expect);
        assert_eq!(ok.rhs, expect);
        assert_eq!(ok.quotient_form_exact, Some(true));

        assert!(verify_identity(&j, &[2, 0], 4, 0).unwrap().holds);

        let bad = verify_identity(&j, &[1, 0], 4, 2).unwrap();
        assert!(!bad.holds);
        assert_ne!(bad.lhs, bad.rhs);
        assert!(!bad.quotient_form_cross);

        assert!(verify_identity(&j, &[0], 4, 2).is_err());
    }

    #[test]
    fn identity_holds_for_swapped_degree_one_slots() {
        // quotient form is not factor-wise exact but the identity still holds
        let prof = JProfile::synthetic(2, vec![1, 1], vec![2, 2]).unwrap();
        let j = prof.j_invariant(vec![1, 0]).unwrap();
        let check = verify_identity(&j, &[0, 1], 2, 0).unwrap();
        assert!(check.holds);
        assert_eq!(check.quotient_form_exact, None);
    }

    fn valid_input() -> impl Strategy<Value = SplittingInput> {
        (prop::sample::select(vec![2u32, 3]), 0usize..=3, 0usize..=3)
            .prop_flat_map(|(p, ones, higher)| {
                (
                    Just(p),
                    Just(ones),
                    prop::collection::vec(2u32..=11, higher),
                    0u32..=4,
                )
            })
            .prop_filter_map("profile", |(p, ones, mut hi, s)| {
                hi.retain(|d| d % p != 0);
                hi.sort_unstable();
                let degrees: Vec<u32> = std::iter::repeat_n(1, ones).chain(hi).collect();
                let r = degrees.len();
                let prof = JProfile::synthetic(p, degrees, vec![3; r]).ok()?;
                Some((prof, s))
            })
            .prop_flat_map(|(prof, s)| {
                let r = prof.r();
                (
                    Just(prof),
                    Just(s),
                    prop::collection::vec(0u32..=3, r),
                    any::<prop::sample::Index>(),
                )
            })
            .prop_filter_map("jga", |(prof, s, comps, idx)| {
                let p = prof.p();
                let j = prof.j_invariant(comps).ok()?;
                let mut choices: Vec<u32> =
                    j.degree_one().iter().copied().filter(|&x| x <= s).collect();
                choices.push(0);
                let jga = choices[idx.index(choices.len())];
                SplittingInput::new(j, (p as u64).pow(s), jga).ok()
            })
    }

    proptest! {
        #[test]
        fn round_trip(input in valid_input()) {
            let out = split_transform(&input).unwrap();
            let before = input.j();
            prop_assert!(verify_identity(before, &out.after, input.n(), input.jga()).unwrap().holds);
            prop_assert_eq!(out.higher_after.as_slice(), before.higher());
            prop_assert_eq!(out.degree_one_after.len(), before.degree_one().len());
            let p = before.profile().p() as u64;
            prop_assert_eq!(out.f.eval(1) * p.pow(input.jga()), input.n().into());
            if out.after != before.components() {
                let l = before.degree_one().len();
                prop_assert!((0..l).any(|k| out.after[k] == 0 && before.components()[k] != 0));
            }
        }
    }
}
