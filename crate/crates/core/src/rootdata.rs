//! Dynkin types, Weyl group exponents and Poincaré polynomials of split
//! flag varieties.
//!
//! `flag_poincare` uses the product formula over the exponents of the Weyl
//! group. `coxeter_length_oracle` computes the same polynomial by walking the
//! Cayley graph of the Weyl group, acting on simple-root coordinates through
//! the Cartan matrix. Simple roots are numbered as in Bourbaki.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polyring::{geom_quotient, IntPoly};

/// Default bound on |W| for the brute-force oracle.
pub const DEFAULT_ORACLE_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    series: Series,
    rank: usize,
}

impl DynkinType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { series, rank })
        } else {
            Err(Error::InvalidDynkinType {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Exponents of the Weyl group, in increasing order.
    pub fn exponents(self) -> Vec<usize> {
        let n = self.rank;
        match self.series {
            Series::A => (1..=n).collect(),
            Series::B | Series::C => (1..=n).map(|i| 2 * i - 1).collect(),
            Series::D => {
                let mut e: Vec<usize> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            Series::E => match n {
                6 => vec![1, 4, 5, 7, 8, 11],
                7 => vec![1, 5, 7, 9, 11, 13, 17],
                _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
            },
            Series::F => vec![1, 5, 7, 11],
            Series::G => vec![1, 5],
        }
    }

    /// |W| as the product of (exponent + 1).
    pub fn weyl_order(self) -> u128 {
        self.exponents().iter().map(|&e| e as u128 + 1).product()
    }

    /// Number of positive roots, which is the dimension of G/B.
    pub fn positive_roots(self) -> usize {
        self.exponents().iter().sum()
    }

    /// Cartan matrix with `cartan[i][j] = <alpha_i^vee, alpha_j>`, Bourbaki
    /// numbering (0-based here).
    pub fn cartan_matrix(self) -> Vec<Vec<i8>> {
        let n = self.rank;
        let mut a = vec![vec![0i8; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Series::G => link(0, 1),
        }
        match self.series {
            // alpha_n short
            Series::B => a[n - 1][n - 2] = -2,
            // alpha_n long
            Series::C => a[n - 2][n - 1] = -2,
            // alpha_3, alpha_4 short
            Series::F => a[2][1] = -2,
            // alpha_1 short
            Series::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Parses names such as `D4`, `e8`, `A_2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let bad = || Error::InvalidInput(format!("cannot parse Dynkin type {s:?}"));
        let series = chars.next().and_then(Series::from_letter).ok_or_else(bad)?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest.parse::<usize>().map_err(|_| bad())?;
        DynkinType::new(series, rank)
    }
}

/// Solomon formula: P(G/B, t) = prod over exponents e of (t^{e+1} - 1)/(t - 1).
pub fn flag_poincare(ty: DynkinType) -> IntPoly {
    let factors: Vec<IntPoly> = ty
        .exponents()
        .into_iter()
        .map(|e| geom_quotient(e + 1, 1).expect("1 divides everything"))
        .collect();
    IntPoly::product(&factors)
}

/// P(SB(A), t) = P(P^{n-1}, t) for a central simple algebra of degree n.
pub fn severi_brauer_poincare(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "algebra degree must be positive".into(),
        ));
    }
    geom_quotient(n, 1)
}

/// Splits the sub-diagram on `theta` (1-based simple-root indices) into its
/// connected components and names each one.
pub fn subdiagram_components(ty: DynkinType, theta: &[usize]) -> Result<Vec<DynkinType>> {
    let rank = ty.rank();
    if theta.iter().any(|&i| i == 0 || i > rank) {
        return Err(Error::InvalidSubset {
            indices: theta.to_vec(),
            rank,
        });
    }
    let mut nodes: Vec<usize> = theta.iter().map(|&i| i - 1).collect();
    nodes.sort_unstable();
    nodes.dedup();

    let cartan = ty.cartan_matrix();
    let bond = |i: usize, j: usize| (cartan[i][j] as i32 * cartan[j][i] as i32) as usize;

    let mut seen = vec![false; rank];
    let mut components = Vec::new();
    for &start in &nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for &u in &nodes {
                if !seen[u] && bond(u, v) > 0 {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            k += 1;
        }
        components.push(classify_component(&comp, &bond)?);
    }
    Ok(components)
}

fn classify_component(comp: &[usize], bond: &dyn Fn(usize, usize) -> usize) -> Result<DynkinType> {
    let k = comp.len();
    let neighbours = |v: usize| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&u| u != v && bond(u, v) > 0)
            .collect()
    };
    let mut max_bond = 1;
    let mut multi_edge = None;
    for (a, &u) in comp.iter().enumerate() {
        for &v in &comp[a + 1..] {
            let b = bond(u, v);
            if b > max_bond {
                max_bond = b;
                multi_edge = Some((u, v));
            }
        }
    }
    match max_bond {
        3 => return DynkinType::new(Series::G, 2),
        2 => {
            let (u, v) = multi_edge.expect("recorded with the bond");
            let at_end = neighbours(u).len() == 1 || neighbours(v).len() == 1;
            return if k == 4 && !at_end {
                DynkinType::new(Series::F, 4)
            } else {
                // B and C share a Weyl group
                DynkinType::new(Series::B, k)
            };
        }
        _ => {}
    }
    let Some(branch) = comp.iter().copied().find(|&v| neighbours(v).len() >= 3) else {
        return DynkinType::new(Series::A, k);
    };
    let mut arms: Vec<usize> = neighbours(branch)
        .into_iter()
        .map(|first| {
            let (mut prev, mut cur, mut len) = (branch, first, 1);
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&u| u != prev).collect();
                match next.as_slice() {
                    [n] => {
                        prev = cur;
                        cur = *n;
                        len += 1;
                    }
                    _ => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, c] => DynkinType::new(Series::D, c + 3),
        [1, 2, c @ 2..=4] => DynkinType::new(Series::E, c + 4),
        _ => Err(Error::InvalidInput(format!(
            "sub-diagram with arms {arms:?} is not of finite type"
        ))),
    }
}

/// Poincaré polynomial of G/P_theta, where theta lists the simple roots
/// (1-based) of the Levi subgroup. Empty theta gives G/B.
pub fn parabolic_poincare(ty: DynkinType, theta: &[usize]) -> Result<IntPoly> {
    let components = subdiagram_components(ty, theta)?;
    let levi: Vec<IntPoly> = components.into_iter().map(flag_poincare).collect();
    let quotient = flag_poincare(ty)
        .exact_div(&IntPoly::product(&levi))
        .expect("Weyl polynomial of a Levi factor divides the full one");
    Ok(quotient)
}

fn reflect(cartan: &[Vec<i8>], i: usize, w: &[i8], n: usize) -> Vec<i8> {
    // w holds the images w(alpha_j) as consecutive rows of simple-root coordinates.
    let mut out = w.to_vec();
    for j in 0..n {
        let row = &w[j * n..(j + 1) * n];
        let pairing: i32 = row
            .iter()
            .zip(&cartan[i])
            .map(|(&v, &c)| v as i32 * c as i32)
            .sum();
        out[j * n + i] = (row[i] as i32 - pairing) as i8;
    }
    out
}

/// Length generating function of the Weyl group by breadth-first search of
/// its Cayley graph with respect to the simple reflections.
pub fn coxeter_length_oracle(ty: DynkinType, cap: u64) -> Result<IntPoly> {
    let order = ty.weyl_order();
    if order > cap as u128 {
        return Err(Error::GroupTooLarge {
            type_name: ty.to_string(),
            order,
            cap,
        });
    }
    let n = ty.rank();
    let cartan = ty.cartan_matrix();
    let mut identity = vec![0i8; n * n];
    for i in 0..n {
        identity[i * n + i] = 1;
    }

    // Left multiplication by a simple reflection changes length by exactly
    // one, so each level only needs to be deduplicated against its predecessor.
    let mut counts: Vec<i64> = vec![1];
    let mut previous: HashSet<Vec<i8>> = HashSet::new();
    let mut current: HashSet<Vec<i8>> = HashSet::from([identity]);
    let mut total: u64 = 1;
    loop {
        let mut next = HashSet::new();
        for w in &current {
            for i in 0..n {
                let v = reflect(&cartan, i, w, n);
                if !previous.contains(&v) {
                    next.insert(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len() as u64;
        if total > cap {
            return Err(Error::GroupTooLarge {
                type_name: ty.to_string(),
                order: total as u128,
                cap,
            });
        }
        counts.push(next.len() as i64);
        previous = std::mem::replace(&mut current, next);
    }
    Ok(IntPoly::from_i64s(&counts))
}

/// All Dynkin types with rank at most `max_rank` and |W| at most `cap`.
pub fn types_within(max_rank: usize, cap: u64) -> Vec<DynkinType> {
    let mut out = Vec::new();
    for series in [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ] {
        for rank in 1..=max_rank {
            if let Ok(ty) = DynkinType::new(series, rank) {
                if ty.weyl_order() <= cap as u128 {
                    out.push(ty);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ty(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn rank_constraints() {
        assert!(DynkinType::new(Series::A, 0).is_err());
        assert!(DynkinType::new(Series::B, 1).is_err());
        assert!(DynkinType::new(Series::C, 2).is_err());
        assert!(DynkinType::new(Series::D, 3).is_err());
        assert!(DynkinType::new(Series::E, 5).is_err());
        assert!(DynkinType::new(Series::E, 9).is_err());
        assert!(DynkinType::new(Series::F, 3).is_err());
        assert!(DynkinType::new(Series::G, 3).is_err());
        assert!(DynkinType::new(Series::D, 4).is_ok());
        assert_eq!(ty("e_7").to_string(), "E7");
        assert!("X3".parse::<DynkinType>().is_err());
        assert!("D".parse::<DynkinType>().is_err());
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(ty("A2").weyl_order(), 6);
        assert_eq!(ty("D4").weyl_order(), 192);
        assert_eq!(ty("F4").weyl_order(), 1152);
        assert_eq!(ty("G2").weyl_order(), 12);
        assert_eq!(ty("E6").weyl_order(), 51_840);
        assert_eq!(ty("E7").weyl_order(), 2_903_040);
        assert_eq!(ty("E8").weyl_order(), 696_729_600);
        assert_eq!(ty("E8").positive_roots(), 120);
        assert_eq!(ty("D5").exponents(), vec![1, 3, 4, 5, 7]);
    }

    #[test]
    fn flag_poincare_examples() {
        assert_eq!(flag_poincare(ty("A2")), IntPoly::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(flag_poincare(ty("A1")), IntPoly::from_i64s(&[1, 1]));
        let d4 = flag_poincare(ty("D4"));
        assert_eq!(d4.eval(1), BigInt::from(192));
        let expect = IntPoly::product(&[
            IntPoly::t_pow_minus_one(2),
            IntPoly::t_pow_minus_one(4),
            IntPoly::t_pow_minus_one(4),
            IntPoly::t_pow_minus_one(6),
        ])
        .exact_div(&IntPoly::t_pow_minus_one(1).mul(&IntPoly::t_pow_minus_one(1)))
        .unwrap()
        .exact_div(&IntPoly::t_pow_minus_one(1).mul(&IntPoly::t_pow_minus_one(1)))
        .unwrap();
        assert_eq!(d4, expect);
    }

    #[test]
    fn flag_poincare_is_palindromic_with_top_degree_dim() {
        for t in types_within(8, u64::MAX) {
            let p = flag_poincare(t);
            assert!(p.is_palindromic(), "{t}");
            assert_eq!(p.degree(), Some(t.positive_roots()), "{t}");
            assert_eq!(p.eval(1), BigInt::from(t.weyl_order()), "{t}");
        }
    }

    #[test]
    fn oracle_small_cases() {
        let cap = DEFAULT_ORACLE_CAP;
        assert_eq!(
            coxeter_length_oracle(ty("A2"), cap).unwrap(),
            IntPoly::from_i64s(&[1, 2, 2, 1])
        );
        assert_eq!(
            coxeter_length_oracle(ty("A1"), cap).unwrap(),
            IntPoly::from_i64s(&[1, 1])
        );
        let f4 = coxeter_length_oracle(ty("F4"), cap).unwrap();
        assert_eq!(f4.degree(), Some(24));
        assert_eq!(f4.eval(1), BigInt::from(1152));
        for t in ["G2", "B3", "C3", "D4", "F4"] {
            assert_eq!(
                coxeter_length_oracle(ty(t), cap).unwrap(),
                flag_poincare(ty(t)),
                "{t}"
            );
        }
    }

    #[test]
    fn oracle_respects_cap() {
        let err = coxeter_length_oracle(ty("E7"), DEFAULT_ORACLE_CAP).unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { .. }));
        assert!(coxeter_length_oracle(ty("A3"), 10).is_err());
    }

    #[test]
    fn parabolic_examples() {
        let a2 = ty("A2");
        assert_eq!(parabolic_poincare(a2, &[]).unwrap(), flag_poincare(a2));
        assert_eq!(
            parabolic_poincare(a2, &[1]).unwrap(),
            IntPoly::from_i64s(&[1, 1, 1])
        );
        let d4 = parabolic_poincare(ty("D4"), &[1, 2]).unwrap();
        assert_eq!(d4.eval(1), BigInt::from(32));
        assert!(matches!(
            parabolic_poincare(a2, &[3]),
            Err(Error::InvalidSubset { .. })
        ));
        assert!(parabolic_poincare(a2, &[0]).is_err());
    }

    #[test]
    fn component_classification() {
        let names = |t: &str, theta: &[usize]| -> Vec<String> {
            subdiagram_components(ty(t), theta)
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        assert_eq!(names("D6", &[1, 2, 3, 4]), ["A4"]);
        assert_eq!(names("D6", &[3, 4, 5, 6]), ["D4"]);
        assert_eq!(names("D6", &[1, 2, 3, 4, 5, 6]), ["D6"]);
        assert_eq!(names("D6", &[1, 5, 6]), ["A1", "A1", "A1"]);
        assert_eq!(names("E8", &[1, 2, 3, 4, 5, 6, 7]), ["E7"]);
        assert_eq!(names("E8", &[2, 3, 4, 5, 6, 7, 8]), ["D7"]);
        assert_eq!(names("E7", &[1, 2, 3, 4, 5, 6]), ["E6"]);
        assert_eq!(names("E6", &[1, 2, 3, 4, 5]), ["D5"]);
        assert_eq!(names("F4", &[2, 3]), ["B2"]);
        assert_eq!(names("F4", &[1, 2, 3]), ["B3"]);
        assert_eq!(names("F4", &[1, 2, 3, 4]), ["F4"]);
        assert_eq!(names("C5", &[3, 4, 5]), ["B3"]);
        assert_eq!(names("G2", &[1, 2]), ["G2"]);
        assert_eq!(names("B4", &[1, 2]), ["A2"]);
    }

    #[test]
    fn parabolic_index_identity() {
        // eval(P(G/P), 1) * |W_theta| = |W| on every subset of small types
        for t in ["A4", "B4", "C4", "D5", "F4", "G2", "E6"] {
            let t = ty(t);
            let n = t.rank();
            for mask in 0u32..(1 << n) {
                let theta: Vec<usize> = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| i + 1)
                    .collect();
                let p = parabolic_poincare(t, &theta).unwrap();
                let levi: u128 = subdiagram_components(t, &theta)
                    .unwrap()
                    .iter()
                    .map(|c| c.weyl_order())
                    .product();
                assert_eq!(p.eval(1) * BigInt::from(levi), BigInt::from(t.weyl_order()));
                assert!(p.is_palindromic());
            }
        }
    }

    #[test]
    fn severi_brauer() {
        assert_eq!(
            severi_brauer_poincare(4).unwrap(),
            IntPoly::from_i64s(&[1, 1, 1, 1])
        );
        assert_eq!(severi_brauer_poincare(1).unwrap(), IntPoly::one());
        assert_eq!(
            severi_brauer_poincare(2).unwrap(),
            IntPoly::from_i64s(&[1, 1])
        );
        assert!(severi_brauer_poincare(0).is_err());
    }
}
