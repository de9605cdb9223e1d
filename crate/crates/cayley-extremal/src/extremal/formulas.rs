//! Closed-form values for degree 2: the largest cyclic order at a given
//! diameter, the Abelian upper bound, its piecewise attainment, and the
//! inverse bound on the diameter for a given order. All arithmetic is
//! exact.

use crate::error::{Error, Result};

fn check_d(d: u64) -> Result<()> {
    if d < 2 {
        Err(Error::OutOfDomain(format!(
            "closed forms are stated for diameter d >= 2, got {d}"
        )))
    } else {
        Ok(())
    }
}

/// Largest order of a cyclic group admitting a 2-element connection set of
/// diameter at most `d`: `floor(d(d+4)/3) + 1`.
pub fn m_cyclic_formula(d: u64) -> Result<u64> {
    check_d(d)?;
    Ok(d * (d + 4) / 3 + 1)
}

/// Upper bound for the Abelian analogue: `floor((d+2)^2 / 3)`.
pub fn m_star_upper_bound(d: u64) -> Result<u64> {
    check_d(d)?;
    Ok((d + 2) * (d + 2) / 3)
}

/// Attained value of the Abelian maximum at degree 2: one more than the
/// cyclic value when `d = 1 (mod 3)`, equal to it otherwise.
pub fn m_star_proposition(d: u64) -> Result<u64> {
    let base = m_cyclic_formula(d)?;
    Ok(if d % 3 == 1 { base + 1 } else { base })
}

/// Minimum diameter of a degree-2 Abelian Cayley digraph on `m` vertices:
/// `ceil(sqrt(3m)) - 2`, computed with an integer square root.
pub fn min_diameter_bound_abelian(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::OutOfDomain(format!(
            "the diameter bound needs at least 2 vertices, got {m}"
        )));
    }
    let t = 3 * m;
    let s = t.isqrt();
    let ceil_sqrt = if s * s == t { s } else { s + 1 };
    Ok(ceil_sqrt - 2)
}

/// `C(d+k, k)`: the number of commutative words of length at most `d` in
/// `k` generators, hence an upper bound on the number of vertices within
/// distance `d`. Saturates at `u64::MAX`.
pub fn ball_bound(d: u64, k: u64) -> u64 {
    let n = d as u128 + k as u128;
    let r = (k as u128).min(d as u128); // C(n, k) = C(n, d); use the smaller
    let mut acc: u128 = 1;
    for i in 1..=r {
        // Each prefix product is the binomial C(n-r+i, i), so the division
        // below is exact.
        acc = match acc.checked_mul(n - r + i) {
            Some(v) => v / i,
            None => return u64::MAX,
        };
    }
    u64::try_from(acc).unwrap_or(u64::MAX)
}
