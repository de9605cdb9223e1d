//! Distance analysis of Cayley digraphs `Cay(G, A)`: arcs `v -> v + a` for
//! each `a` in the connection set `A`.
//!
//! The digraph is vertex-transitive, so a single BFS from the identity
//! yields the diameter, the distance distribution, and the average
//! distance. The visited structure is a dense array indexed by the
//! mixed-radix encoding `x_1 + m_1 x_2 + m_1 m_2 x_3 + ...` of element
//! coordinates.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::group::{decode_mixed_radix, AbelianGroup, GroupElement};

const UNREACHED: u32 = u32::MAX;

/// Orders above this would not fit the dense distance array.
pub(crate) const MAX_DENSE_ORDER: u64 = 1 << 31;

/// A set of `k` distinct non-identity elements, stored sorted by
/// coordinates. The digraph degree is `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingSet {
    elements: Vec<GroupElement>,
}

impl GeneratingSet {
    pub fn new(g: &AbelianGroup, mut elements: Vec<GroupElement>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidInput(
                "connection set must contain at least one element".into(),
            ));
        }
        for e in &elements {
            if !g.contains(e) {
                return Err(Error::InvalidElement(format!(
                    "element {e} does not belong to {g}"
                )));
            }
            if e.is_identity() {
                return Err(Error::InvalidInput(
                    "connection set may not contain the identity".into(),
                ));
            }
        }
        elements.sort();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(
                "connection set elements must be pairwise distinct".into(),
            ));
        }
        Ok(Self { elements })
    }

    /// Convenience constructor from signed raw coordinates.
    pub fn from_raw_coords(g: &AbelianGroup, raw: &[Vec<i64>]) -> Result<Self> {
        let elements = raw
            .iter()
            .map(|coords| g.element(coords))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, elements)
    }

    pub fn degree(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Space-joined element literals, e.g. `"(1,0) (1,5)"` or `"1 3"`.
    pub fn literal(&self) -> String {
        self.elements
            .iter()
            .map(|e| e.literal())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Distances from the identity, with derived metrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    group: AbelianGroup,
    dist: Vec<u32>,
    diameter: Option<u64>,
    total_distance: u64,
    reached: u64,
}

impl DistanceProfile {
    /// Distance of `v` from the identity; `None` when unreachable.
    pub fn dist(&self, v: &GroupElement) -> Option<u64> {
        if !self.group.contains(v) {
            return None;
        }
        let idx = crate::group::encode_mixed_radix(v.coords(), self.group.moduli()) as usize;
        match self.dist[idx] {
            UNREACHED => None,
            d => Some(d as u64),
        }
    }

    /// `None` is the unreachable marker: the set does not generate.
    pub fn diameter(&self) -> Option<u64> {
        self.diameter
    }

    pub fn total_distance(&self) -> u64 {
        self.total_distance
    }

    pub fn reached(&self) -> u64 {
        self.reached
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Mean distance over the `m - 1` non-identity vertices, exact.
    /// Defined only when the set generates and the order is at least 2.
    pub fn avg_distance(&self) -> Option<Ratio<u64>> {
        let m = self.order();
        if self.diameter.is_some() && m >= 2 {
            Some(Ratio::new(self.total_distance, m - 1))
        } else {
            None
        }
    }

    /// Reached elements with their distances, in mixed-radix index order.
    pub fn iter(&self) -> impl Iterator<Item = (GroupElement, u64)> + '_ {
        self.dist
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d != UNREACHED)
            .map(move |(idx, &d)| {
                let coords = decode_mixed_radix(idx as u64, self.group.moduli());
                (self.group.element_from_reduced(coords), d as u64)
            })
    }

    /// Elements at maximum distance, sorted by coordinates. Empty when the
    /// set does not generate.
    pub fn farthest(&self) -> Vec<GroupElement> {
        match self.diameter {
            None => Vec::new(),
            Some(d) => {
                let mut out: Vec<GroupElement> = self
                    .iter()
                    .filter(|&(_, dv)| dv == d)
                    .map(|(v, _)| v)
                    .collect();
                out.sort();
                out
            }
        }
    }
}

/// Non-negative coefficients `(c_1, ..., c_k)`, one per generator, with
/// `sum(c_i * a_i)` equal to the target coordinate-wise modulo each
/// invariant factor and `sum(c_i)` equal to the BFS distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceCertificate {
    coeffs: Vec<u64>,
}

impl DistanceCertificate {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn length(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

fn validate_inputs(g: &AbelianGroup, a: &GeneratingSet) -> Result<()> {
    for e in a.elements() {
        if !g.contains(e) {
            return Err(Error::InvalidInput(format!(
                "generator {e} does not belong to {g}"
            )));
        }
        if e.is_identity() {
            return Err(Error::InvalidInput(
                "connection set may not contain the identity".into(),
            ));
        }
    }
    if g.order() > MAX_DENSE_ORDER {
        return Err(Error::InvalidInput(format!(
            "order {} exceeds the dense BFS limit {MAX_DENSE_ORDER}",
            g.order()
        )));
    }
    Ok(())
}

/// Reusable buffers for the BFS inner loop, so searches do not allocate
/// per candidate set.
pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    queue: Vec<u32>,
}

impl BfsScratch {
    pub(crate) fn new() -> Self {
        Self {
            dist: Vec::new(),
            queue: Vec::new(),
        }
    }
}

pub(crate) struct BfsOutcome {
    pub reached: u64,
    pub max_dist: u32,
    pub total: u64,
    /// Some vertex provably lies beyond the bound (search aborted early).
    pub exceeded: bool,
}

/// BFS from the identity over arcs `v -> v + a`. Aborts as soon as a vertex
/// beyond `bound` is forced.
pub(crate) fn bfs_core(
    moduli: &[u64],
    gens: &[Vec<u64>],
    bound: u32,
    scratch: &mut BfsScratch,
) -> BfsOutcome {
    let m: u64 = moduli.iter().product();
    let m = m as usize;
    let mut strides = Vec::with_capacity(moduli.len());
    let mut stride = 1u64;
    for &md in moduli {
        strides.push(stride);
        stride *= md;
    }

    scratch.dist.clear();
    scratch.dist.resize(m, UNREACHED);
    scratch.queue.clear();
    scratch.dist[0] = 0;
    scratch.queue.push(0);

    let mut head = 0usize;
    let mut reached = 1u64;
    let mut max_dist = 0u32;
    let mut total = 0u64;
    let mut coords = vec![0u64; moduli.len()];

    while head < scratch.queue.len() {
        let v = scratch.queue[head];
        head += 1;
        let dv = scratch.dist[v as usize];

        let mut rem = v as u64;
        for (c, &md) in coords.iter_mut().zip(moduli) {
            *c = rem % md;
            rem /= md;
        }

        for gen in gens {
            let mut w = 0u64;
            for i in 0..moduli.len() {
                let mut x = coords[i] + gen[i];
                if x >= moduli[i] {
                    x -= moduli[i];
                }
                w += x * strides[i];
            }
            let w = w as usize;
            if scratch.dist[w] == UNREACHED {
                if dv >= bound {
                    return BfsOutcome {
                        reached,
                        max_dist,
                        total,
                        exceeded: true,
                    };
                }
                scratch.dist[w] = dv + 1;
                scratch.queue.push(w as u32);
                reached += 1;
                total += (dv + 1) as u64;
                if dv + 1 > max_dist {
                    max_dist = dv + 1;
                }
            }
        }
    }

    BfsOutcome {
        reached,
        max_dist,
        total,
        exceeded: false,
    }
}

/// Exact shortest-path distances from the identity in `Cay(g, a)`.
pub fn bfs_profile(g: &AbelianGroup, a: &GeneratingSet) -> Result<DistanceProfile> {
    validate_inputs(g, a)?;
    let gens: Vec<Vec<u64>> = a.elements().iter().map(|e| e.coords().to_vec()).collect();
    let mut scratch = BfsScratch::new();
    let outcome = bfs_core(g.moduli(), &gens, u32::MAX, &mut scratch);
    let diameter = (outcome.reached == g.order()).then_some(outcome.max_dist as u64);
    Ok(DistanceProfile {
        group: g.clone(),
        dist: scratch.dist,
        diameter,
        total_distance: outcome.total,
        reached: outcome.reached,
    })
}

/// Diameter of `Cay(g, a)`; `None` when `a` does not generate `g`.
pub fn diameter(g: &AbelianGroup, a: &GeneratingSet) -> Result<Option<u64>> {
    Ok(bfs_profile(g, a)?.diameter())
}

/// True iff BFS from the identity reaches all of `g`.
pub fn is_generating(g: &AbelianGroup, a: &GeneratingSet) -> Result<bool> {
    Ok(bfs_profile(g, a)?.reached() == g.order())
}

/// All elements at maximum distance from the identity, sorted.
pub fn farthest_set(g: &AbelianGroup, a: &GeneratingSet) -> Result<Vec<GroupElement>> {
    let profile = bfs_profile(g, a)?;
    if profile.diameter().is_none() {
        return Err(Error::NotStronglyConnected(format!(
            "{} does not generate {g}",
            a.literal()
        )));
    }
    Ok(profile.farthest())
}

/// Mean distance to the `m - 1` non-identity vertices, exact.
pub fn average_distance(g: &AbelianGroup, a: &GeneratingSet) -> Result<Ratio<u64>> {
    if g.order() == 1 {
        return Err(Error::UndefinedAverage(
            "average distance needs at least two elements".into(),
        ));
    }
    let profile = bfs_profile(g, a)?;
    profile.avg_distance().ok_or_else(|| {
        Error::NotStronglyConnected(format!("{} does not generate {g}", a.literal()))
    })
}

/// Minimal-length generator coefficients for `target`, tie-broken to the
/// lexicographically smallest coefficient vector.
pub fn certify_distance(
    g: &AbelianGroup,
    a: &GeneratingSet,
    target: &GroupElement,
) -> Result<DistanceCertificate> {
    validate_inputs(g, a)?;
    if !g.contains(target) {
        return Err(Error::InvalidInput(format!(
            "target {target} does not belong to {g}"
        )));
    }
    let profile = bfs_profile(g, a)?;
    let total_budget = profile.dist(target).ok_or_else(|| {
        Error::NoCertificate(format!("target {target} is unreachable in Cay({g}, ...)"))
    })?;

    let moduli = g.moduli();
    let gens: Vec<&[u64]> = a.elements().iter().map(|e| e.coords()).collect();
    let k = gens.len();

    // feasible(level, t, s): generators[level..] can reach t in exactly s
    // steps. The greedy scan below keeps this true at every level, so the
    // final vector is the lexicographically smallest one of length s.
    struct Solver<'s> {
        moduli: &'s [u64],
        gens: &'s [&'s [u64]],
        memo: HashMap<(usize, u64, u64), bool>,
    }
    impl Solver<'_> {
        fn feasible(&mut self, level: usize, t: u64, s: u64) -> bool {
            if level == self.gens.len() {
                return t == 0 && s == 0;
            }
            if let Some(&hit) = self.memo.get(&(level, t, s)) {
                return hit;
            }
            let mut ok = false;
            for c in 0..=s {
                let next = sub_multiple(t, self.gens[level], c, self.moduli);
                if self.feasible(level + 1, next, s - c) {
                    ok = true;
                    break;
                }
            }
            self.memo.insert((level, t, s), ok);
            ok
        }
    }

    fn sub_multiple(t: u64, gen: &[u64], c: u64, moduli: &[u64]) -> u64 {
        let coords = decode_mixed_radix(t, moduli);
        let mut idx = 0u64;
        let mut stride = 1u64;
        for ((&x, &a), &m) in coords.iter().zip(gen).zip(moduli) {
            let step = (c % m) * (a % m) % m;
            idx += ((x + m - step) % m) * stride;
            stride *= m;
        }
        idx
    }

    let mut solver = Solver {
        moduli,
        gens: &gens,
        memo: HashMap::new(),
    };
    let mut coeffs = Vec::with_capacity(k);
    let mut t = crate::group::encode_mixed_radix(target.coords(), moduli);
    let mut budget = total_budget;
    for (level, gen) in gens.iter().enumerate() {
        let mut chosen = None;
        for c in 0..=budget {
            let next = sub_multiple(t, gen, c, moduli);
            if solver.feasible(level + 1, next, budget - c) {
                chosen = Some((c, next));
                break;
            }
        }
        let (c, next) = chosen.ok_or_else(|| {
            Error::Internal(format!(
                "no exact-length decomposition at level {level} for {target}"
            ))
        })?;
        coeffs.push(c);
        t = next;
        budget -= c;
    }

    Ok(DistanceCertificate { coeffs })
}
