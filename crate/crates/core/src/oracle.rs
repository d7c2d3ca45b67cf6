//! Brute-force oracles. These deliberately share no code path with the
//! product formulas they are used to check.

use num_bigint::BigInt;
use num_traits::One;

use crate::polyring::IntPoly;

/// Counts monomials `(m_1, ..., m_r)` with `0 <= m_i < caps[i]` by their
/// codimension `sum d_i m_i`, walking every tuple.
pub fn monomial_count(degrees: &[u32], caps: &[u64]) -> IntPoly {
    assert_eq!(degrees.len(), caps.len());
    if caps.contains(&0) {
        return IntPoly::zero();
    }
    let top: u64 = degrees
        .iter()
        .zip(caps)
        .map(|(&d, &c)| d as u64 * (c - 1))
        .sum();
    let mut counts = vec![BigInt::default(); top as usize + 1];
    let mut tuple = vec![0u64; caps.len()];
    loop {
        let codim: u64 = tuple.iter().zip(degrees).map(|(&m, &d)| m * d as u64).sum();
        counts[codim as usize] += BigInt::one();
        // odometer increment
        let mut i = 0;
        loop {
            if i == tuple.len() {
                return IntPoly::from_coeffs(counts);
            }
            tuple[i] += 1;
            if tuple[i] < caps[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}
