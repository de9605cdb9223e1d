//! Finite Abelian groups in invariant-factor form.
//!
//! A group is stored as its invariant factors `(m_1, ..., m_r)` with
//! `m_1 | m_2 | ... | m_r`, one `Z_{m_j}` per factor. Elements are residue
//! vectors reduced coordinate-wise. Arbitrary direct products (a
//! [`GroupSpec`]) canonicalize to this form through a CRT isomorphism that
//! also maps elements, so generating sets written against a non-canonical
//! product carry over to the canonical group.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Canonical invariant-factor description of a finite Abelian group.
///
/// The trivial group is the empty moduli sequence (order 1, rank 0).
/// The group is cyclic iff the rank is at most 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
}

/// Residue vector `(x_1, ..., x_r)` with `0 <= x_j < m_j`, one coordinate
/// per invariant factor of the owning group. Always stored reduced, so
/// equality and ordering are plain sequence comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

/// A direct product of cyclic groups as written, before canonicalization.
///
/// Factors may appear in any order and need not form a divisibility chain.
/// A factor of 1 denotes a trivial component and is dropped when
/// canonicalizing; factors of 0 are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    factors: Vec<u64>,
}

impl AbelianGroup {
    /// Builds a group from an already-canonical moduli sequence.
    pub fn from_invariant_factors(moduli: Vec<u64>) -> Result<Self> {
        let mut order: u64 = 1;
        for (i, &m) in moduli.iter().enumerate() {
            if m < 2 {
                return Err(Error::InvalidSpec(format!(
                    "invariant factor {m} must be at least 2"
                )));
            }
            if i > 0 && m % moduli[i - 1] != 0 {
                return Err(Error::InvalidSpec(format!(
                    "moduli {:?} do not form a divisibility chain",
                    moduli
                )));
            }
            order = order.checked_mul(m).ok_or_else(|| {
                Error::InvalidSpec("group order overflows u64".into())
            })?;
        }
        Ok(Self { moduli })
    }

    /// The one-element group.
    pub fn trivial() -> Self {
        Self { moduli: Vec::new() }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    /// Count of invariant factors; 0 for the trivial group.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.moduli.len()],
        }
    }

    pub fn contains(&self, u: &GroupElement) -> bool {
        u.coords.len() == self.moduli.len()
            && u.coords.iter().zip(&self.moduli).all(|(&x, &m)| x < m)
    }

    fn check_member(&self, u: &GroupElement) -> Result<()> {
        if self.contains(u) {
            Ok(())
        } else {
            Err(Error::InvalidElement(format!(
                "element {u} does not belong to {self}"
            )))
        }
    }

    /// Builds an element from signed coordinates, reducing each modulo its
    /// invariant factor. Negative entries denote additive inverses.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.moduli.len() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates for {}, got {}",
                self.moduli.len(),
                self,
                coords.len()
            )));
        }
        let reduced = coords
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| reduce_signed(x, m))
            .collect();
        Ok(GroupElement { coords: reduced })
    }

    pub(crate) fn element_from_reduced(&self, coords: Vec<u64>) -> GroupElement {
        debug_assert!(coords.iter().zip(&self.moduli).all(|(&x, &m)| x < m));
        GroupElement { coords }
    }

    /// Coordinate-wise sum `(u_j + v_j) mod m_j`.
    pub fn add(&self, u: &GroupElement, v: &GroupElement) -> Result<GroupElement> {
        self.check_member(u)?;
        self.check_member(v)?;
        let coords = u
            .coords
            .iter()
            .zip(&v.coords)
            .zip(&self.moduli)
            .map(|((&a, &b), &m)| (a + b) % m)
            .collect();
        Ok(GroupElement { coords })
    }

    /// Additive inverse, `(m_j - u_j) mod m_j` per coordinate.
    pub fn negate(&self, u: &GroupElement) -> Result<GroupElement> {
        self.check_member(u)?;
        let coords = u
            .coords
            .iter()
            .zip(&self.moduli)
            .map(|(&a, &m)| (m - a) % m)
            .collect();
        Ok(GroupElement { coords })
    }

    /// All elements, in mixed-radix index order (first coordinate fastest).
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let order = self.order();
        (0..order).map(move |idx| self.element_from_reduced(decode_mixed_radix(idx, &self.moduli)))
    }

    /// Parses an element literal: `(a,b,...)` or a bare integer for rank 1.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let raw = parse_raw_element(s)?;
        self.element(&raw)
    }

    /// Group literal, e.g. `Z12` or `Z2xZ6`; `Z1` for the trivial group.
    pub fn literal(&self) -> String {
        if self.moduli.is_empty() {
            "Z1".to_string()
        } else {
            self.moduli
                .iter()
                .map(|m| format!("Z{m}"))
                .collect::<Vec<_>>()
                .join("x")
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    /// Element literal: bare integer for rank 1, `(a,b,...)` otherwise.
    pub fn literal(&self) -> String {
        match self.coords.len() {
            1 => self.coords[0].to_string(),
            _ => format!(
                "({})",
                self.coords
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl GroupSpec {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidSpec(
                "group spec factors must be at least 1".into(),
            ));
        }
        let mut order: u64 = 1;
        for &f in &factors {
            order = order
                .checked_mul(f)
                .ok_or_else(|| Error::InvalidSpec("group order overflows u64".into()))?;
        }
        Ok(Self { factors })
    }

    /// Parses a group literal such as `Z12` or `Z6xZ2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty group literal".into()));
        }
        let mut factors = Vec::new();
        for part in s.split('x') {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(|| {
                    Error::Parse(format!("expected cyclic factor like Z12, got {part:?}"))
                })?;
            let n: u64 = digits.parse().map_err(|_| {
                Error::Parse(format!("invalid factor order in group literal: {part:?}"))
            })?;
            factors.push(n);
        }
        Self::new(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Invariant-factor form of the same isomorphism class. Idempotent and
    /// order-preserving.
    pub fn canonicalize(&self) -> AbelianGroup {
        self.canonical_map().into_group()
    }

    /// Canonicalization together with the element-level isomorphism from
    /// this product's coordinates to canonical coordinates.
    pub fn canonical_map(&self) -> CanonicalMap {
        CanonicalMap::new(self)
    }
}

/// CRT isomorphism from a [`GroupSpec`]'s coordinates onto the canonical
/// invariant-factor group.
///
/// Each source factor splits into prime-power components; per prime, the
/// components sort by exponent (largest first) and feed the invariant
/// factors from the largest down. Ties prefer later source factors, which
/// makes the map the identity when the source is already in invariant-factor
/// form.
#[derive(Debug, Clone)]
pub struct CanonicalMap {
    source_factors: Vec<u64>,
    group: AbelianGroup,
    // recipe[j]: (source index, prime power q, CRT coefficient) terms whose
    // sum mod moduli[j] is canonical coordinate j.
    recipe: Vec<Vec<(usize, u64, u64)>>,
}

impl CanonicalMap {
    fn new(spec: &GroupSpec) -> Self {
        // (prime, exponent, source index) for every prime-power component.
        let mut by_prime: Vec<(u64, Vec<(u32, usize)>)> = Vec::new();
        for (i, &f) in spec.factors.iter().enumerate() {
            for (p, e) in factorize(f) {
                match by_prime.binary_search_by_key(&p, |&(q, _)| q) {
                    Ok(pos) => by_prime[pos].1.push((e, i)),
                    Err(pos) => by_prime.insert(pos, (p, vec![(e, i)])),
                }
            }
        }
        for (_, comps) in &mut by_prime {
            comps.sort_by(|a, b| b.cmp(a)); // exponent desc, source index desc
        }

        let slots = by_prime.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
        // Invariant factors from the largest down, with their components.
        let mut factors_desc: Vec<(u64, Vec<(usize, u64)>)> = Vec::new();
        for j in 0..slots {
            let mut modulus: u64 = 1;
            let mut comps = Vec::new();
            for (p, list) in &by_prime {
                if let Some(&(e, src)) = list.get(j) {
                    let q = p.pow(e);
                    modulus *= q;
                    comps.push((src, q));
                }
            }
            factors_desc.push((modulus, comps));
        }
        factors_desc.reverse();

        let moduli: Vec<u64> = factors_desc.iter().map(|&(m, _)| m).collect();
        let recipe = factors_desc
            .iter()
            .map(|(modulus, comps)| {
                comps
                    .iter()
                    .map(|&(src, q)| {
                        let rest = modulus / q;
                        let coeff = if rest == 1 {
                            1 % modulus
                        } else {
                            // rest * inv(rest mod q) is 1 mod q and 0 mod
                            // every other component of this factor.
                            let inv = mod_inverse(rest % q, q);
                            ((rest as u128 * inv as u128) % *modulus as u128) as u64
                        };
                        (src, q, coeff)
                    })
                    .collect()
            })
            .collect();

        Self {
            source_factors: spec.factors.clone(),
            group: AbelianGroup { moduli },
            recipe,
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn into_group(self) -> AbelianGroup {
        self.group
    }

    /// Maps signed coordinates written against the source factors to the
    /// canonical group. Coordinates reduce modulo their source factor first.
    pub fn map_coords(&self, raw: &[i64]) -> Result<GroupElement> {
        if raw.len() != self.source_factors.len() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                self.source_factors.len(),
                raw.len()
            )));
        }
        let reduced: Vec<u64> = raw
            .iter()
            .zip(&self.source_factors)
            .map(|(&x, &f)| reduce_signed(x, f))
            .collect();
        let coords = self
            .recipe
            .iter()
            .zip(self.group.moduli())
            .map(|(terms, &modulus)| {
                let mut acc: u128 = 0;
                for &(src, q, coeff) in terms {
                    acc += (reduced[src] % q) as u128 * coeff as u128;
                }
                (acc % modulus as u128) as u64
            })
            .collect();
        Ok(GroupElement { coords })
    }
}

/// Every isomorphism class of Abelian group of order `m`, each in canonical
/// form, exactly once. Classes are listed with the cyclic group first
/// (descending lexicographic moduli order); the count is the product of
/// integer-partition counts of the prime exponents of `m`.
pub fn enumerate_abelian_groups(m: u64) -> Result<Vec<AbelianGroup>> {
    if m == 0 {
        return Err(Error::InvalidOrder("order must be positive".into()));
    }
    if m == 1 {
        return Ok(vec![AbelianGroup::trivial()]);
    }
    let prime_powers = factorize(m);
    let partition_sets: Vec<Vec<Vec<u32>>> = prime_powers
        .iter()
        .map(|&(_, e)| partitions(e))
        .collect();

    let mut groups = Vec::new();
    let mut choice = vec![0usize; partition_sets.len()];
    loop {
        let slots = choice
            .iter()
            .zip(&partition_sets)
            .map(|(&c, set)| set[c].len())
            .max()
            .unwrap_or(0);
        let mut moduli = Vec::with_capacity(slots);
        for j in 0..slots {
            let mut factor: u64 = 1;
            for (idx, &(p, _)) in prime_powers.iter().enumerate() {
                if let Some(&e) = partition_sets[idx][choice[idx]].get(j) {
                    factor *= p.pow(e);
                }
            }
            moduli.push(factor);
        }
        moduli.reverse();
        groups.push(AbelianGroup { moduli });

        // Odometer over the per-prime partition choices.
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                groups.sort_by(|a, b| b.moduli.cmp(&a.moduli));
                return Ok(groups);
            }
            choice[pos] += 1;
            if choice[pos] < partition_sets[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Prime factorization by trial division, primes ascending.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All partitions of `n` as descending part lists.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn extend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn reduce_signed(x: i64, modulus: u64) -> u64 {
    debug_assert!(modulus >= 1);
    let m = modulus as i128;
    (((x as i128 % m) + m) % m) as u64
}

fn mod_inverse(a: u64, modulus: u64) -> u64 {
    let gcd = (a as i128).extended_gcd(&(modulus as i128));
    debug_assert_eq!(gcd.gcd, 1, "inverse of non-unit {a} mod {modulus}");
    (((gcd.x % modulus as i128) + modulus as i128) % modulus as i128) as u64
}

pub(crate) fn decode_mixed_radix(mut idx: u64, moduli: &[u64]) -> Vec<u64> {
    let mut coords = Vec::with_capacity(moduli.len());
    for &m in moduli {
        coords.push(idx % m);
        idx /= m;
    }
    coords
}

pub(crate) fn encode_mixed_radix(coords: &[u64], moduli: &[u64]) -> u64 {
    let mut idx = 0;
    let mut stride = 1;
    for (&x, &m) in coords.iter().zip(moduli) {
        idx += x * stride;
        stride *= m;
    }
    idx
}

/// Parses one element literal into signed raw coordinates: `(a,b,...)`,
/// or a bare integer treated as a single coordinate.
pub fn parse_raw_element(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let body = if let Some(inner) = s.strip_prefix('(') {
        inner
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?
    } else {
        s
    };
    if body.trim().is_empty() {
        return Err(Error::Parse("empty element literal".into()));
    }
    body.split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("invalid coordinate {:?}", c.trim())))
        })
        .collect()
}

/// Splits a comma-separated list of element literals, respecting
/// parentheses: `1,3` or `(1,0),(-1,1)`.
pub fn parse_raw_element_list(s: &str) -> Result<Vec<Vec<i64>>> {
    let mut chunks = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
            }
            ',' if depth == 0 => {
                chunks.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    chunks.push(&s[start..]);
    chunks.into_iter().map(parse_raw_element).collect()
}
