//! Serialization of analysis artifacts (JSON with fixed field order, CSV
//! tables) and the claim-verification suites. Every emitted witness can be
//! re-parsed and re-verified by an independent BFS run; `reverify` methods
//! implement exactly that round trip.

pub mod suites;

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{search_m_cyclic, search_m_star, avg_distance_frontier, ExtremalRecord, SearchOptions};
use crate::group::{AbelianGroup, GroupElement, GroupSpec};
use crate::metrics::{bfs_profile, average_distance, DistanceProfile, GeneratingSet};

/// Parse a canonical group literal such as `Z11` or `Z2xZ6` back into a
/// group, and coordinate rows back into elements of it.
fn parse_witness(group: &str, coords: &[Vec<u64>]) -> Result<(AbelianGroup, GeneratingSet)> {
    let g = GroupSpec::parse(group)?.canonicalize();
    let elements = coords
        .iter()
        .map(|row| {
            let signed: Vec<i64> = row
                .iter()
                .map(|&c| {
                    i64::try_from(c).map_err(|_| {
                        Error::InvalidInput(format!("coordinate {c} is out of range"))
                    })
                })
                .collect::<Result<_>>()?;
            g.element(&signed)
        })
        .collect::<Result<Vec<_>>>()?;
    let set = GeneratingSet::new(&g, elements)?;
    Ok((g, set))
}

fn coord_rows(elements: &[GroupElement]) -> Vec<Vec<u64>> {
    elements.iter().map(|e| e.coords().to_vec()).collect()
}

/// JSON form of a distance profile. Field order is part of the interface.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProfileJson {
    pub group: String,
    pub gens: Vec<Vec<u64>>,
    pub diameter: Option<u64>,
    pub avg_num: Option<u64>,
    pub avg_den: Option<u64>,
    pub reached: u64,
    pub farthest: Vec<Vec<u64>>,
}

impl ProfileJson {
    pub fn build(g: &AbelianGroup, a: &GeneratingSet, profile: &DistanceProfile) -> Self {
        let avg = profile.avg_distance();
        Self {
            group: g.literal(),
            gens: coord_rows(a.elements()),
            diameter: profile.diameter(),
            avg_num: avg.map(|r| *r.numer()),
            avg_den: avg.map(|r| *r.denom()),
            reached: profile.reached(),
            farthest: coord_rows(&profile.farthest()),
        }
    }

    /// Re-parse the witness and reproduce every recorded metric by a fresh
    /// BFS run.
    pub fn reverify(&self) -> Result<()> {
        let (g, a) = parse_witness(&self.group, &self.gens)?;
        let profile = bfs_profile(&g, &a)?;
        let fresh = ProfileJson::build(&g, &a, &profile);
        if fresh != *self {
            return Err(Error::CertificationFailure(format!(
                "profile for {} {} does not reproduce: recorded diameter {:?}, fresh {:?}",
                self.group,
                a.literal(),
                self.diameter,
                fresh.diameter
            )));
        }
        Ok(())
    }
}

/// JSON form of an extremal search record. Field order is part of the
/// interface.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RecordJson {
    pub d: u64,
    pub k: u64,
    pub scope: String,
    pub value: u64,
    pub witness_group: String,
    pub witness_set: Vec<Vec<u64>>,
    pub witness_diameter: u64,
    pub exhaustive_up_to: u64,
}

impl RecordJson {
    pub fn build(record: &ExtremalRecord) -> Self {
        Self {
            d: record.d,
            k: record.k,
            scope: record.scope.literal().to_string(),
            value: record.value,
            witness_group: record.witness_group.literal(),
            witness_set: coord_rows(record.witness_set.elements()),
            witness_diameter: record.witness_diameter,
            exhaustive_up_to: record.exhaustive_up_to,
        }
    }

    /// Re-parse the witness and check the recorded claims by a fresh BFS.
    pub fn reverify(&self) -> Result<()> {
        let (g, a) = parse_witness(&self.witness_group, &self.witness_set)?;
        if g.order() != self.value {
            return Err(Error::CertificationFailure(format!(
                "witness {} has order {}, record claims {}",
                self.witness_group,
                g.order(),
                self.value
            )));
        }
        match bfs_profile(&g, &a)?.diameter() {
            Some(diam) if diam == self.witness_diameter && diam <= self.d => Ok(()),
            observed => Err(Error::CertificationFailure(format!(
                "witness {} {} re-verifies with diameter {observed:?}, record claims {} within {}",
                self.witness_group,
                a.literal(),
                self.witness_diameter,
                self.d
            ))),
        }
    }
}

/// JSON form of a certified cyclic-versus-Abelian gap.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CounterexampleJson {
    pub d: u64,
    pub k: u64,
    pub m_star: u64,
    pub m_cyc: u64,
    pub witness_group: String,
    pub witness_set: Vec<Vec<u64>>,
    pub witness_diameter: u64,
    pub cyclic_refutation_count: u64,
}

impl CounterexampleJson {
    pub fn build(report: &crate::extremal::CounterexampleReport) -> Self {
        Self {
            d: report.d,
            k: report.k,
            m_star: report.m_star,
            m_cyc: report.m_cyc,
            witness_group: report.witness_group.literal(),
            witness_set: coord_rows(report.witness_set.elements()),
            witness_diameter: report.witness_diameter,
            cyclic_refutation_count: report.cyclic_refutation_count,
        }
    }
}

/// One row of the cyclic-versus-Abelian comparison table. Field names are
/// the CSV header.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtremalTableRow {
    pub d: u64,
    pub k: u64,
    pub m_cyclic: u64,
    pub m_star: u64,
    pub gap: u64,
    pub witness_group: String,
    pub witness_set: String,
}

/// Run both searches for every diameter in `[d_lo, d_hi]`; the witness
/// columns carry the Abelian witness, which exhibits the gap when there
/// is one. Each record re-verifies before emission.
pub fn build_extremal_table(
    d_lo: u64,
    d_hi: u64,
    k: u64,
    opts: &SearchOptions,
) -> Result<Vec<ExtremalTableRow>> {
    if d_lo > d_hi {
        return Err(Error::InvalidInput(format!(
            "empty diameter range {d_lo}..{d_hi}"
        )));
    }
    (d_lo..=d_hi)
        .map(|d| {
            let cyc = search_m_cyclic(d, k, opts)?;
            let star = search_m_star(d, k, opts)?;
            cyc.verify()?;
            star.verify()?;
            Ok(ExtremalTableRow {
                d,
                k,
                m_cyclic: cyc.value,
                m_star: star.value,
                gap: star.value - cyc.value,
                witness_group: star.witness_group.literal(),
                witness_set: star.witness_set.literal(),
            })
        })
        .collect()
}

/// One row of the average-distance comparison table. Field names are the
/// CSV header; averages are exact reduced fractions.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AvgdistTableRow {
    pub m: u64,
    pub k: u64,
    pub cyclic_set: String,
    pub cyclic_avg_num: u64,
    pub cyclic_avg_den: u64,
    pub abelian_group: String,
    pub abelian_set: String,
    pub abelian_avg_num: u64,
    pub abelian_avg_den: u64,
    pub improvement: bool,
}

/// Exhaustive best-average comparison for every order in `[m_lo, m_hi]`.
/// Both optima re-verify by an independent BFS before emission.
pub fn build_avgdist_table(m_lo: u64, m_hi: u64, k: u64) -> Result<Vec<AvgdistTableRow>> {
    if m_lo > m_hi {
        return Err(Error::InvalidInput(format!(
            "empty order range {m_lo}..{m_hi}"
        )));
    }
    (m_lo..=m_hi)
        .map(|m| {
            let row = avg_distance_frontier(m, k)?;
            let cyclic_group = AbelianGroup::from_invariant_factors(vec![m])?;
            if average_distance(&cyclic_group, &row.cyclic_set)? != row.cyclic_avg
                || average_distance(&row.abelian_group, &row.abelian_set)? != row.abelian_avg
            {
                return Err(Error::CertificationFailure(format!(
                    "average-distance optima at order {m} do not reproduce"
                )));
            }
            Ok(AvgdistTableRow {
                m,
                k,
                cyclic_set: row.cyclic_set.literal(),
                cyclic_avg_num: *row.cyclic_avg.numer(),
                cyclic_avg_den: *row.cyclic_avg.denom(),
                abelian_group: row.abelian_group.literal(),
                abelian_set: row.abelian_set.literal(),
                abelian_avg_num: *row.abelian_avg.numer(),
                abelian_avg_den: *row.abelian_avg.denom(),
                improvement: row.strict_improvement,
            })
        })
        .collect()
}

/// Serialize rows as CSV with a header row taken from the field names.
pub fn write_csv<T: Serialize, W: Write>(rows: &[T], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| Error::Internal(format!("CSV serialization failed: {e}")))?;
    }
    writer
        .flush()
        .map_err(|e| Error::Internal(format!("CSV flush failed: {e}")))
}
