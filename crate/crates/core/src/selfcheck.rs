//! Oracle-versus-formula suites run by `jinv selfcheck`.
//!
//! Each suite is deterministic: random cases come from a fixed-seed ChaCha
//! stream, so two runs report identical outcomes.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::jprofile::{p_power, JProfile, ProfileRegistry};
use crate::motives::{decompose, motive_poincare};
use crate::oracle::monomial_count;
use crate::polyring::IntPoly;
use crate::rootdata::{coxeter_length_oracle, flag_poincare, severi_brauer_poincare, types_within};
use crate::rootdata::{Series, DEFAULT_ORACLE_CAP};
use crate::splitting::{split_transform, verify_identity, SplittingInput};
use crate::typed::{Component, InvolutionData, SecondComponent};

const MAX_REPORTED_FAILURES: usize = 10;
const SEED: u64 = 0x4a49_4e56;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    /// The first few failing cases.
    pub examples: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &str) -> Self {
        SuiteOutcome {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_REPORTED_FAILURES {
                self.examples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

/// Sizes of the randomized suites.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub weyl_cap: u64,
    pub ring_profiles: usize,
    pub split_inputs: usize,
    pub d_max_rank: usize,
}

impl Budget {
    pub const FULL: Budget = Budget {
        weyl_cap: DEFAULT_ORACLE_CAP,
        ring_profiles: 64,
        split_inputs: 10_000,
        d_max_rank: 16,
    };

    pub const QUICK: Budget = Budget {
        weyl_cap: 60_000,
        ring_profiles: 16,
        split_inputs: 1_000,
        d_max_rank: 8,
    };
}

pub fn run_all(registry: &ProfileRegistry, budget: Budget) -> Vec<SuiteOutcome> {
    vec![
        weyl_oracle(budget.weyl_cap),
        truncated_ring(budget.ring_profiles),
        split_round_trip(budget.split_inputs),
        type_d_formulas(),
        conjecture_reduction(registry, budget.d_max_rank),
        conic_golden(),
    ]
}

/// Solomon product formula against breadth-first enumeration of W.
pub fn weyl_oracle(cap: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("weyl_oracle");
    for ty in types_within(9, cap) {
        let formula = flag_poincare(ty);
        let expected_order = BigInt::from(ty.weyl_order());
        match coxeter_length_oracle(ty, cap) {
            Ok(bfs) => out.check(bfs == formula && formula.eval(1) == expected_order, || {
                format!("{ty}: oracle {bfs} vs formula {formula}")
            }),
            Err(e) => out.check(false, || format!("{ty}: {e}")),
        }
    }
    out
}

/// Random profile with `prod p^{k_i} <= limit`.
pub fn random_profile<R: Rng>(rng: &mut R, primes: &[u32], limit: u64) -> JProfile {
    loop {
        let p = *primes.choose(rng).expect("nonempty");
        let r = rng.gen_range(1..=4);
        let mut degrees: Vec<u32> = (0..r)
            .map(|_| loop {
                let d = rng.gen_range(1..=9);
                if d % p != 0 {
                    break d;
                }
            })
            .collect();
        degrees.sort_unstable();
        let bounds: Vec<u32> = (0..r).map(|_| rng.gen_range(0..=5)).collect();
        let size = bounds.iter().try_fold(1u64, |acc, &k| {
            p_power(p, k).and_then(|q| acc.checked_mul(q))
        });
        if size.is_some_and(|s| s <= limit) {
            return JProfile::synthetic(p, degrees, bounds).expect("constructed valid");
        }
    }
}

pub fn truncated_ring(profiles: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("truncated_ring_oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..profiles {
        let prof = random_profile(&mut rng, &[2, 3, 5], 100_000);
        let caps: Vec<u64> = prof
            .bounds()
            .iter()
            .map(|&k| p_power(prof.p(), k).expect("bounded"))
            .collect();
        let formula = prof.truncated_ring_poincare(prof.bounds()).expect("valid");
        let brute = monomial_count(prof.degrees(), &caps);
        out.check(formula == brute, || {
            format!("{prof:?}: formula {formula} vs enumeration {brute}")
        });
    }
    out
}

/// Random valid input: `p` in {2, 3}, `n <= p^6`.
pub fn random_splitting_input<R: Rng>(rng: &mut R) -> SplittingInput {
    let p: u32 = *[2u32, 3].choose(rng).expect("nonempty");
    let ones = rng.gen_range(0..=3);
    let mut higher: Vec<u32> = (0..rng.gen_range(0..=3))
        .map(|_| loop {
            let d = rng.gen_range(2..=13);
            if d % p != 0 {
                break d;
            }
        })
        .collect();
    higher.sort_unstable();
    let degrees: Vec<u32> = std::iter::repeat_n(1, ones).chain(higher).collect();
    let bounds: Vec<u32> = degrees.iter().map(|_| rng.gen_range(0..=4)).collect();
    let comps: Vec<u32> = bounds.iter().map(|&k| rng.gen_range(0..=k)).collect();
    let prof = JProfile::synthetic(p, degrees, bounds).expect("constructed valid");
    let j = prof.j_invariant(comps).expect("within bounds");
    let s = rng.gen_range(0..=6u32);
    let mut choices: Vec<u32> = j.degree_one().iter().copied().filter(|&x| x <= s).collect();
    choices.push(0);
    let jga = *choices.choose(rng).expect("contains 0");
    SplittingInput::new(j, (p as u64).pow(s), jga).expect("constructed valid")
}

pub fn split_round_trip(inputs: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("split_round_trip");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for _ in 0..inputs {
        let input = random_splitting_input(&mut rng);
        let before = input.j();
        let p = before.profile().p() as u64;
        let ok = split_transform(&input).is_ok_and(|res| {
            let identity =
                verify_identity(before, &res.after, input.n(), input.jga()).is_ok_and(|c| c.holds);
            identity
                && res.higher_after == before.higher()
                && res.degree_one_after.len() == before.degree_one().len()
                && res.f.eval(1) * p.pow(input.jga()) == BigInt::from(input.n())
        });
        out.check(ok, || format!("{input:?}"));
    }
    out
}

/// Every statement about `j_1` and `j_2` over `n` in 2..=64 and valuations
/// in 0..=6.
pub fn type_d_formulas() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("type_d_formulas");
    for n in 2u64..=64 {
        let k1 = n.trailing_zeros();
        for ia in 0..=6 {
            for ip in 0..=6 {
                for im in 0..=6 {
                    let d = InvolutionData {
                        n,
                        ia,
                        iplus: ip,
                        iminus: im,
                    };
                    if !d.validate().is_empty() {
                        continue;
                    }
                    let Ok(j1) = d.j1() else {
                        out.check(false, || format!("{d:?}: j1 failed after validation"));
                        continue;
                    };
                    let ir_plus = d.index_reduction_exponent(Component::Plus);
                    let ir_minus = d.index_reduction_exponent(Component::Minus);
                    let formula = k1.min(ia).min(ip.max(im));
                    let ok = j1 == formula
                        && j1 <= k1
                        && j1 <= ia
                        && j1 <= ip.max(im)
                        && j1 >= ir_plus
                        && j1 >= ir_minus
                        && j1 == ir_plus.max(ir_minus);
                    out.check(ok, || format!("{d:?}: j1 = {j1}, expected {formula}"));

                    if ip == 0 || im == 0 {
                        let half = d.j1_halfspin().ok();
                        out.check(half == Some(j1), || {
                            format!("{d:?}: half-spin {half:?} vs {j1}")
                        });
                    }
                    let lower = ip.min(im);
                    if lower < k1.min(ia) {
                        let j2 = d.j2();
                        out.check(j2 == SecondComponent::Exact { value: lower }, || {
                            format!("{d:?}: j2 = {j2:?}")
                        });
                    }
                    let swapped = InvolutionData {
                        iplus: im,
                        iminus: ip,
                        ..d
                    };
                    out.check(
                        swapped.j1().ok() == Some(j1) && swapped.j2() == d.j2(),
                        || format!("{d:?}: not symmetric in C+ and C-"),
                    );
                }
            }
        }
    }
    out
}

/// Generic splitting of `A` kills exactly the first component of every
/// `D_n` J-invariant in the registry.
pub fn conjecture_reduction(registry: &ProfileRegistry, max_rank: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("conjecture_reduction");
    let profiles = registry.iter().filter(|prof| {
        prof.dynkin_type()
            .is_some_and(|t| t.series() == Series::D && t.rank() <= max_rank)
            && prof.p() == 2
    });
    for prof in profiles {
        let n = prof.dynkin_type().expect("filtered").rank() as u64;
        let k1 = prof.bounds()[0];
        let data: Vec<InvolutionData> = (0..=k1 + 1)
            .flat_map(|ia| {
                (0..=k1 + 1).flat_map(move |ip| (0..=k1 + 1).map(move |im| (ia, ip, im)))
            })
            .map(|(ia, iplus, iminus)| InvolutionData {
                n,
                ia,
                iplus,
                iminus,
            })
            .filter(|d| d.validate().is_empty())
            .collect();
        for comps in all_tuples(prof.bounds()) {
            let j = prof.j_invariant(comps.clone()).expect("within bounds");
            let mut expected = comps.clone();
            expected[0] = 0;
            let mut identity_checked = false;
            let matching: Vec<&InvolutionData> =
                data.iter().filter(|d| d.j1() == Ok(comps[0])).collect();
            out.check(!matching.is_empty(), || {
                format!("no index data realizes j_1 = {} for {comps:?}", comps[0])
            });
            for d in matching {
                let got = d.split_over_fa(&j);
                let ok = got
                    .as_ref()
                    .is_ok_and(|r| r.components() == expected.as_slice());
                out.check(ok, || format!("{d:?} on {comps:?}: {got:?}"));
                if !identity_checked {
                    identity_checked = true;
                    let degree = 1u64 << (n.trailing_zeros() + 1);
                    let check = verify_identity(&j, &expected, degree, comps[0]);
                    out.check(check.is_ok_and(|c| c.holds), || {
                        format!("identity fails for {comps:?} with n = {degree}")
                    });
                }
            }
        }
    }
    out
}

/// All tuples `0 <= t_i <= bounds[i]` in lexicographic order.
pub fn all_tuples(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &k in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=k).map(move |v| {
                    let mut t = prefix.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Anisotropic conic and a degree-4 Severi-Brauer variety.
pub fn conic_golden() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("conic_golden");
    let prof = JProfile::synthetic(2, vec![1], vec![1]).expect("valid");
    let j = prof.j_invariant(vec![1]).expect("valid");
    let motive = motive_poincare(&j);
    out.check(motive == IntPoly::from_i64s(&[1, 1]), || {
        format!("motive {motive}")
    });
    let conic = severi_brauer_poincare(2).expect("positive");
    let m = decompose(&conic, &j).map(|m| m.to_poly());
    out.check(m == Ok(IntPoly::one()), || format!("conic twists {m:?}"));
    let sb4 = severi_brauer_poincare(4).expect("positive");
    let m = decompose(&sb4, &j).map(|m| m.to_poly());
    out.check(m == Ok(IntPoly::from_i64s(&[1, 0, 1])), || {
        format!("SB(4) twists {m:?}")
    });
    out
}
