//! Exhaustive searches for the largest order attainable at a given degree
//! and diameter, the smallest diameter attainable at a given order, and
//! the average-distance frontier.
//!
//! Feasibility is tested at every order independently (it is not monotone
//! in the order for cyclic groups). Orders are scanned up to the ball
//! bound `C(d+k, k)` — no digraph of degree `k` and diameter `d` can have
//! more vertices — or an explicit cap, whichever is smaller. Within one
//! order the candidate space is walked in a fixed lexicographic order, so
//! witnesses are reproducible; across orders the scans are independent and
//! run on parallel workers, aggregated by a deterministic fold.

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extremal::formulas::ball_bound;
use crate::group::{enumerate_abelian_groups, AbelianGroup, GroupElement};
use crate::metrics::{bfs_core, bfs_profile, BfsScratch, GeneratingSet, MAX_DENSE_ORDER};

/// Which isomorphism classes a search ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Cyclic groups only.
    Cyclic,
    /// Every finite Abelian group.
    Abelian,
}

impl Scope {
    pub fn literal(self) -> &'static str {
        match self {
            Scope::Cyclic => "cyclic",
            Scope::Abelian => "abelian",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Optional override of the exhaustive scan ceiling; the effective
    /// ceiling is the smaller of this and the ball bound.
    pub cap: Option<u64>,
    /// Skip cyclic candidate sets that are not the lexicographically
    /// smallest in their orbit under multiplication by units. Multiplying
    /// a connection set by a unit is a digraph isomorphism fixing the
    /// identity, so feasibility is orbit-invariant.
    pub unit_pruning: bool,
    /// Worker threads for the per-order partitions; `None` uses the
    /// global default pool.
    pub workers: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            cap: None,
            unit_pruning: true,
            workers: None,
        }
    }
}

/// Result of an exhaustive maximum-order search, with its witness.
#[derive(Debug, Clone)]
pub struct ExtremalRecord {
    pub d: u64,
    pub k: u64,
    /// Largest feasible order found.
    pub value: u64,
    pub witness_group: AbelianGroup,
    pub witness_set: GeneratingSet,
    /// Actual BFS diameter of the witness (at most `d`).
    pub witness_diameter: u64,
    /// Every order in `(value, exhaustive_up_to]` was exhaustively
    /// refuted.
    pub exhaustive_up_to: u64,
    pub scope: Scope,
}

impl ExtremalRecord {
    /// Re-check every claim the record makes, re-running BFS on the
    /// witness from scratch.
    pub fn verify(&self) -> Result<()> {
        if self.witness_group.order() != self.value {
            return Err(Error::CertificationFailure(format!(
                "witness group {} has order {}, record claims {}",
                self.witness_group,
                self.witness_group.order(),
                self.value
            )));
        }
        if self.scope == Scope::Cyclic && !self.witness_group.is_cyclic() {
            return Err(Error::CertificationFailure(format!(
                "cyclic-scope record carries non-cyclic witness {}",
                self.witness_group
            )));
        }
        if self.value > self.exhaustive_up_to {
            return Err(Error::CertificationFailure(format!(
                "value {} exceeds the exhausted range {}",
                self.value, self.exhaustive_up_to
            )));
        }
        let profile = bfs_profile(&self.witness_group, &self.witness_set)?;
        match profile.diameter() {
            Some(diam) if diam == self.witness_diameter && diam <= self.d => Ok(()),
            Some(diam) => Err(Error::CertificationFailure(format!(
                "witness re-verifies with diameter {diam}, record claims {} within {}",
                self.witness_diameter, self.d
            ))),
            None => Err(Error::CertificationFailure(format!(
                "witness set {} does not generate {}",
                self.witness_set.literal(),
                self.witness_group
            ))),
        }
    }
}

/// Outcome of testing every candidate at a single order.
#[derive(Debug, Clone)]
pub struct OrderScan {
    pub m: u64,
    /// Lexicographically first witness at this order, if feasible:
    /// (group, set, BFS diameter).
    pub witness: Option<(AbelianGroup, GeneratingSet, u64)>,
    /// Number of candidate sets whose digraphs were explored by BFS.
    pub candidates_tested: u64,
}

/// Per-order scan results for orders `1..=ceiling`.
#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub d: u64,
    pub k: u64,
    pub scope: Scope,
    pub ceiling: u64,
    pub orders: Vec<OrderScan>,
}

fn cyclic_group(m: u64) -> AbelianGroup {
    if m == 1 {
        AbelianGroup::trivial()
    } else {
        AbelianGroup::from_invariant_factors(vec![m])
            .expect("a single factor >= 2 is a valid invariant chain")
    }
}

fn groups_of_order(m: u64, scope: Scope) -> Vec<AbelianGroup> {
    match scope {
        Scope::Cyclic => vec![cyclic_group(m)],
        Scope::Abelian => {
            let mut groups =
                enumerate_abelian_groups(m).expect("orders scanned here are positive");
            // Ascending lexicographic moduli, the witness tie-break order.
            groups.sort_by(|a, b| a.moduli().cmp(b.moduli()));
            groups
        }
    }
}

/// Walk all `k`-element index combinations of `0..n` in lexicographic
/// order; stop early when the callback returns `false`.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k == 0 || k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        // Advance: rightmost index that can still move, then reset the
        // tail to the tightest ascending run.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Is `vals` the lexicographically smallest sorted set in its orbit under
/// multiplication by units of `Z_m`?
fn is_unit_canonical(m: u64, vals: &[u64]) -> bool {
    let mut mapped = vec![0u64; vals.len()];
    for u in 2..m {
        if u.gcd(&m) != 1 {
            continue;
        }
        for (dst, &v) in mapped.iter_mut().zip(vals) {
            *dst = v * u % m;
        }
        mapped.sort_unstable();
        if mapped.as_slice() < vals {
            return false;
        }
    }
    true
}

/// Test every candidate `k`-set at order `m`; returns the first witness
/// in (group, set) lexicographic order, or the full refutation count.
fn scan_order(m: u64, d: u64, k: u64, scope: Scope, unit_pruning: bool) -> OrderScan {
    let bound = d.min(u32::MAX as u64) as u32;
    let kk = k as usize;
    let mut tested = 0u64;
    let mut witness: Option<(AbelianGroup, GeneratingSet, u64)> = None;

    let mut scratch = BfsScratch::new();
    for g in groups_of_order(m, scope) {
        let mut elems: Vec<GroupElement> =
            g.elements().filter(|e| !e.is_identity()).collect();
        elems.sort();
        if elems.len() < kk {
            continue;
        }
        let moduli = g.moduli().to_vec();
        let mut coords: Vec<Vec<u64>> = vec![Vec::new(); kk];
        for_each_combination(elems.len(), kk, |idx| {
            if scope == Scope::Cyclic && unit_pruning {
                let vals: Vec<u64> = idx.iter().map(|&i| elems[i].coords()[0]).collect();
                if !is_unit_canonical(m, &vals) {
                    return true;
                }
            }
            tested += 1;
            for (dst, &i) in coords.iter_mut().zip(idx) {
                dst.clear();
                dst.extend_from_slice(elems[i].coords());
            }
            let out = bfs_core(&moduli, &coords, bound, &mut scratch);
            if !out.exceeded && out.reached == m {
                let set = GeneratingSet::new(
                    &g,
                    idx.iter().map(|&i| elems[i].clone()).collect(),
                )
                .expect("scanned candidates are valid connection sets");
                witness = Some((g.clone(), set, out.max_dist as u64));
                return false;
            }
            true
        });
        if witness.is_some() {
            break;
        }
    }

    OrderScan {
        m,
        witness,
        candidates_tested: tested,
    }
}

/// Scan every order from 1 to `min(cap, C(d+k, k))`, in parallel across
/// orders.
pub fn scan(d: u64, k: u64, scope: Scope, opts: &SearchOptions) -> Result<ScanOutcome> {
    if d < 1 {
        return Err(Error::OutOfDomain("searches need diameter d >= 1".into()));
    }
    if k < 1 {
        return Err(Error::OutOfDomain("searches need degree k >= 1".into()));
    }
    let ceiling = match opts.cap {
        Some(cap) if cap >= 1 => cap.min(ball_bound(d, k)),
        Some(_) => return Err(Error::InvalidInput("cap must be at least 1".into())),
        None => ball_bound(d, k),
    };
    if ceiling > MAX_DENSE_ORDER {
        return Err(Error::InvalidInput(format!(
            "scan ceiling {ceiling} exceeds the dense BFS limit {MAX_DENSE_ORDER}; set a cap"
        )));
    }

    let pruning = opts.unit_pruning;
    let run = || {
        (1..=ceiling)
            .into_par_iter()
            .map(|m| scan_order(m, d, k, scope, pruning))
            .collect::<Vec<_>>()
    };
    let orders = match opts.workers {
        None => run(),
        Some(0) => return Err(Error::InvalidInput("worker count must be at least 1".into())),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::Internal(format!("worker pool construction failed: {e}")))?
            .install(run),
    };

    Ok(ScanOutcome {
        d,
        k,
        scope,
        ceiling,
        orders,
    })
}

fn fold_record(outcome: &ScanOutcome) -> Result<ExtremalRecord> {
    let mut best: Option<(u64, &AbelianGroup, &GeneratingSet, u64)> = None;
    for s in &outcome.orders {
        if let Some((g, a, diam)) = &s.witness {
            best = Some((s.m, g, a, *diam)); // orders ascend, so the last wins
        }
    }
    let (value, group, set, diam) = best.ok_or_else(|| {
        Error::Internal(format!(
            "no feasible order in 1..={} at d={}, k={}",
            outcome.ceiling, outcome.d, outcome.k
        ))
    })?;
    Ok(ExtremalRecord {
        d: outcome.d,
        k: outcome.k,
        value,
        witness_group: group.clone(),
        witness_set: set.clone(),
        witness_diameter: diam,
        exhaustive_up_to: outcome.ceiling,
        scope: outcome.scope,
    })
}

/// Largest cyclic order admitting a `k`-set of diameter at most `d`.
pub fn search_m_cyclic(d: u64, k: u64, opts: &SearchOptions) -> Result<ExtremalRecord> {
    fold_record(&scan(d, k, Scope::Cyclic, opts)?)
}

/// Largest Abelian order admitting a `k`-set of diameter at most `d`.
pub fn search_m_star(d: u64, k: u64, opts: &SearchOptions) -> Result<ExtremalRecord> {
    fold_record(&scan(d, k, Scope::Abelian, opts)?)
}

/// Witness for the minimum diameter achievable at a fixed order.
#[derive(Debug, Clone)]
pub struct DiameterWitness {
    pub diameter: u64,
    pub group: AbelianGroup,
    pub set: GeneratingSet,
}

/// Minimum diameter over all `k`-element connection sets of groups of
/// order `m` in the scope.
pub fn min_diameter_for_order(m: u64, k: u64, scope: Scope) -> Result<DiameterWitness> {
    if m < 2 {
        return Err(Error::OutOfDomain(
            "minimum diameter needs order m >= 2".into(),
        ));
    }
    if k < 1 {
        return Err(Error::OutOfDomain("degree k must be at least 1".into()));
    }
    if k > m - 1 {
        return Err(Error::NoValidSet(format!(
            "no {k}-element set of nonzero elements exists at order {m}"
        )));
    }
    if m > MAX_DENSE_ORDER {
        return Err(Error::InvalidInput(format!(
            "order {m} exceeds the dense BFS limit {MAX_DENSE_ORDER}"
        )));
    }

    let kk = k as usize;
    let mut best: Option<DiameterWitness> = None;
    let mut scratch = BfsScratch::new();
    for g in groups_of_order(m, scope) {
        let mut elems: Vec<GroupElement> =
            g.elements().filter(|e| !e.is_identity()).collect();
        elems.sort();
        if elems.len() < kk {
            continue;
        }
        let moduli = g.moduli().to_vec();
        let mut coords: Vec<Vec<u64>> = vec![Vec::new(); kk];
        for_each_combination(elems.len(), kk, |idx| {
            // Only strict improvements matter, which keeps the earliest
            // witness in tie-break order at the final minimum.
            let bound = best
                .as_ref()
                .map_or(u32::MAX, |w| (w.diameter as u32).saturating_sub(1));
            for (dst, &i) in coords.iter_mut().zip(idx) {
                dst.clear();
                dst.extend_from_slice(elems[i].coords());
            }
            let out = bfs_core(&moduli, &coords, bound, &mut scratch);
            if !out.exceeded && out.reached == m {
                let set = GeneratingSet::new(
                    &g,
                    idx.iter().map(|&i| elems[i].clone()).collect(),
                )
                .expect("scanned candidates are valid connection sets");
                best = Some(DiameterWitness {
                    diameter: out.max_dist as u64,
                    group: g.clone(),
                    set,
                });
            }
            true
        });
    }

    best.ok_or_else(|| {
        Error::Internal(format!(
            "no generating {k}-set found at order {m}, which cannot happen for k <= m-1"
        ))
    })
}

/// A certified gap between the Abelian and cyclic maxima at diameter `d`,
/// degree 2.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub d: u64,
    pub k: u64,
    pub m_star: u64,
    pub m_cyc: u64,
    pub witness_group: AbelianGroup,
    pub witness_set: GeneratingSet,
    pub witness_diameter: u64,
    /// Candidate sets exhaustively refuted at cyclic orders above
    /// `m_cyc`, proving no cyclic group matches the Abelian witness.
    pub cyclic_refutation_count: u64,
}

/// Certify that at diameter `d` (with `d = 1 (mod 3)`) some non-cyclic
/// Abelian group strictly beats every cyclic group at degree 2. Search
/// results disagreeing with the closed forms surface as errors, never as
/// corrected values.
pub fn certify_counterexample(d: u64, opts: &SearchOptions) -> Result<CounterexampleReport> {
    use crate::extremal::formulas::{m_cyclic_formula, m_star_proposition};

    if d < 2 {
        return Err(Error::OutOfDomain(
            "counterexample certification needs d >= 2".into(),
        ));
    }
    if d % 3 != 1 {
        return Err(Error::NoGapExpected(format!(
            "no gap is predicted at d = {d}; the maxima separate only when d = 1 (mod 3)"
        )));
    }

    let cyc_scan = scan(d, 2, Scope::Cyclic, opts)?;
    let cyc = fold_record(&cyc_scan)?;
    let star = search_m_star(d, 2, opts)?;

    let expect_cyc = m_cyclic_formula(d)?;
    let expect_star = m_star_proposition(d)?;
    if cyc.value != expect_cyc {
        return Err(Error::CertificationFailure(format!(
            "cyclic search found {} at d={d}, closed form gives {expect_cyc}",
            cyc.value
        )));
    }
    if star.value != expect_star {
        return Err(Error::CertificationFailure(format!(
            "Abelian search found {} at d={d}, expected {expect_star}",
            star.value
        )));
    }
    if star.value != cyc.value + 1 {
        return Err(Error::CertificationFailure(format!(
            "expected a gap of exactly 1 at d={d}, got {} vs {}",
            star.value, cyc.value
        )));
    }
    if star.witness_group.rank() < 2 {
        return Err(Error::CertificationFailure(format!(
            "witness {} at the larger order is cyclic; no counterexample",
            star.witness_group
        )));
    }

    let cyclic_refutation_count = cyc_scan
        .orders
        .iter()
        .filter(|s| s.m > cyc.value)
        .map(|s| s.candidates_tested)
        .sum();

    Ok(CounterexampleReport {
        d,
        k: 2,
        m_star: star.value,
        m_cyc: cyc.value,
        witness_group: star.witness_group,
        witness_set: star.witness_set,
        witness_diameter: star.witness_diameter,
        cyclic_refutation_count,
    })
}

/// Best (smallest) exact average distances at order `m`, cyclic versus
/// all-Abelian, with witnesses.
#[derive(Debug, Clone)]
pub struct FrontierRow {
    pub m: u64,
    pub k: u64,
    pub cyclic_set: GeneratingSet,
    pub cyclic_avg: Ratio<u64>,
    pub abelian_group: AbelianGroup,
    pub abelian_set: GeneratingSet,
    pub abelian_avg: Ratio<u64>,
    /// Some non-cyclic group strictly beats the cyclic optimum.
    pub strict_improvement: bool,
}

/// Exhaustive average-distance comparison at order `m`, degree `k`.
pub fn avg_distance_frontier(m: u64, k: u64) -> Result<FrontierRow> {
    if m < 2 {
        return Err(Error::OutOfDomain(
            "average distance needs order m >= 2".into(),
        ));
    }
    if k < 1 {
        return Err(Error::OutOfDomain("degree k must be at least 1".into()));
    }
    if k > m - 1 {
        return Err(Error::NoValidSet(format!(
            "no {k}-element set of nonzero elements exists at order {m}"
        )));
    }
    if m > MAX_DENSE_ORDER {
        return Err(Error::InvalidInput(format!(
            "order {m} exceeds the dense BFS limit {MAX_DENSE_ORDER}"
        )));
    }

    let kk = k as usize;
    let best_over = |groups: &[AbelianGroup]| -> Option<(Ratio<u64>, AbelianGroup, GeneratingSet)> {
        let mut best: Option<(Ratio<u64>, AbelianGroup, GeneratingSet)> = None;
        let mut scratch = BfsScratch::new();
        for g in groups {
            let mut elems: Vec<GroupElement> =
                g.elements().filter(|e| !e.is_identity()).collect();
            elems.sort();
            if elems.len() < kk {
                continue;
            }
            let moduli = g.moduli().to_vec();
            let mut coords: Vec<Vec<u64>> = vec![Vec::new(); kk];
            for_each_combination(elems.len(), kk, |idx| {
                for (dst, &i) in coords.iter_mut().zip(idx) {
                    dst.clear();
                    dst.extend_from_slice(elems[i].coords());
                }
                let out = bfs_core(&moduli, &coords, u32::MAX, &mut scratch);
                if out.reached == m {
                    let avg = Ratio::new(out.total, m - 1);
                    if best.as_ref().is_none_or(|(b, _, _)| avg < *b) {
                        let set = GeneratingSet::new(
                            g,
                            idx.iter().map(|&i| elems[i].clone()).collect(),
                        )
                        .expect("scanned candidates are valid connection sets");
                        best = Some((avg, g.clone(), set));
                    }
                }
                true
            });
        }
        best
    };

    let (cyclic_avg, _, cyclic_set) = best_over(&[cyclic_group(m)]).ok_or_else(|| {
        Error::Internal(format!("no generating {k}-set in the cyclic group of order {m}"))
    })?;
    let (abelian_avg, abelian_group, abelian_set) = best_over(&groups_of_order(m, Scope::Abelian))
        .ok_or_else(|| Error::Internal(format!("no generating {k}-set at order {m}")))?;

    Ok(FrontierRow {
        m,
        k,
        strict_improvement: abelian_avg < cyclic_avg,
        cyclic_set,
        cyclic_avg,
        abelian_group,
        abelian_set,
        abelian_avg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_cyclic_search() {
        let rec = search_m_cyclic(1, 1, &SearchOptions::default()).unwrap();
        assert_eq!(rec.value, 2);
        assert_eq!(rec.witness_group.moduli(), &[2]);
        assert_eq!(rec.witness_set.literal(), "1");
        assert_eq!(rec.witness_diameter, 1);
        assert_eq!(rec.exhaustive_up_to, 2); // C(2,1)
        rec.verify().unwrap();
    }

    #[test]
    fn cyclic_search_at_d4() {
        let rec = search_m_cyclic(4, 2, &SearchOptions::default()).unwrap();
        assert_eq!(rec.value, 11);
        assert_eq!(rec.witness_group.moduli(), &[11]);
        assert_eq!(rec.witness_set.literal(), "1 3");
        assert_eq!(rec.witness_diameter, 4);
        assert_eq!(rec.exhaustive_up_to, 15); // C(6,2)
        rec.verify().unwrap();
    }

    #[test]
    fn abelian_search_at_d2() {
        let rec = search_m_star(2, 2, &SearchOptions::default()).unwrap();
        assert_eq!(rec.value, 5);
        assert_eq!(rec.witness_group.moduli(), &[5]);
        rec.verify().unwrap();
    }

    #[test]
    fn abelian_search_at_d4_finds_the_rank2_witness() {
        let rec = search_m_star(4, 2, &SearchOptions::default()).unwrap();
        assert_eq!(rec.value, 12);
        assert_eq!(rec.witness_group.moduli(), &[2, 6]);
        assert_eq!(rec.witness_diameter, 4);
        rec.verify().unwrap();
    }

    #[test]
    fn caps_truncate_the_scan() {
        let rec = search_m_cyclic(
            4,
            2,
            &SearchOptions {
                cap: Some(5),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(rec.value, 5);
        assert_eq!(rec.exhaustive_up_to, 5);
    }

    #[test]
    fn pruning_does_not_change_the_witness() {
        for d in 2..=5u64 {
            let pruned = search_m_cyclic(d, 2, &SearchOptions::default()).unwrap();
            let full = search_m_cyclic(
                d,
                2,
                &SearchOptions {
                    unit_pruning: false,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(pruned.value, full.value);
            assert_eq!(pruned.witness_group, full.witness_group);
            assert_eq!(pruned.witness_set, full.witness_set);
            assert!(pruned.value <= search_m_star(d, 2, &SearchOptions::default()).unwrap().value);
        }
    }

    #[test]
    fn unit_canonical_representatives() {
        // {1,3} in Z_11: no unit maps it below itself.
        assert!(is_unit_canonical(11, &[1, 3]));
        // {2,6} = 2*{1,3} is not canonical.
        assert!(!is_unit_canonical(11, &[2, 6]));
        // Singletons reduce to the minimal coset representative.
        assert!(is_unit_canonical(12, &[2]));
        assert!(!is_unit_canonical(12, &[10]));
    }

    #[test]
    fn combination_walk_is_lexicographic_and_complete() {
        let mut seen = Vec::new();
        for_each_combination(5, 3, |idx| {
            seen.push(idx.to_vec());
            true
        });
        assert_eq!(seen.len(), 10); // C(5,3)
        assert_eq!(seen.first().unwrap(), &[0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &[2, 3, 4]);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));

        let mut count = 0;
        for_each_combination(4, 0, |_| {
            count += 1;
            true
        });
        for_each_combination(2, 3, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 0);
    }

    #[test]
    fn min_diameter_witnesses() {
        let w = min_diameter_for_order(12, 2, Scope::Abelian).unwrap();
        assert_eq!(w.diameter, 4);
        assert_eq!(w.group.moduli(), &[2, 6]);

        let w = min_diameter_for_order(12, 2, Scope::Cyclic).unwrap();
        assert_eq!(w.diameter, 5);
        assert_eq!(w.group.moduli(), &[12]);

        let w = min_diameter_for_order(2, 1, Scope::Cyclic).unwrap();
        assert_eq!(w.diameter, 1);

        assert!(matches!(
            min_diameter_for_order(5, 5, Scope::Cyclic),
            Err(Error::NoValidSet(_))
        ));
    }

    #[test]
    fn min_diameter_respects_the_floor_bound() {
        use crate::extremal::formulas::min_diameter_bound_abelian;
        for m in 3..=20u64 {
            let w = min_diameter_for_order(m, 2, Scope::Abelian).unwrap();
            assert!(w.diameter >= min_diameter_bound_abelian(m).unwrap());
            crate::metrics::bfs_profile(&w.group, &w.set)
                .map(|p| assert_eq!(p.diameter(), Some(w.diameter)))
                .unwrap();
        }
    }

    #[test]
    fn counterexample_at_d4() {
        let report = certify_counterexample(4, &SearchOptions::default()).unwrap();
        assert_eq!((report.m_star, report.m_cyc), (12, 11));
        assert_eq!(report.witness_group.rank(), 2);
        assert!(report.cyclic_refutation_count > 0);

        assert!(matches!(
            certify_counterexample(5, &SearchOptions::default()),
            Err(Error::NoGapExpected(_))
        ));
        assert!(matches!(
            certify_counterexample(1, &SearchOptions::default()),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn frontier_on_a_prime_order_has_no_improvement() {
        let row = avg_distance_frontier(5, 2).unwrap();
        assert_eq!(row.cyclic_avg, row.abelian_avg);
        assert!(!row.strict_improvement);
        assert_eq!(row.abelian_group.moduli(), &[5]);
    }

    #[test]
    fn frontier_comparisons_are_consistent() {
        for m in [8u64, 12, 16] {
            let row = avg_distance_frontier(m, 2).unwrap();
            assert!(row.abelian_avg <= row.cyclic_avg);
            assert_eq!(row.strict_improvement, row.abelian_avg < row.cyclic_avg);
        }
        assert!(matches!(
            avg_distance_frontier(2, 2),
            Err(Error::NoValidSet(_))
        ));
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let base = search_m_cyclic(5, 2, &SearchOptions::default()).unwrap();
        let wide = search_m_cyclic(
            5,
            2,
            &SearchOptions {
                workers: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(base.value, wide.value);
        assert_eq!(base.witness_set, wide.witness_set);
    }
}
