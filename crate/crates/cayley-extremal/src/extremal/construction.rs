//! The quadratic witness families: the rank-2 product `Z_{3x} x Z_x` with
//! connection set `{(1,0), (-1,1)}` that attains the Abelian upper bound,
//! and the nine-row family of cyclic generating pairs `{1, b}` covering
//! orders `3x^2` through `3x^2 + 6x + 2`.

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, CanonicalMap, GroupSpec};
use crate::metrics::GeneratingSet;

/// The product construction in canonical (invariant-factor) coordinates.
#[derive(Debug, Clone)]
pub struct StarConstruction {
    pub group: AbelianGroup,
    pub gens: GeneratingSet,
    /// `3x - 2`, the diameter the construction is designed to achieve.
    pub expected_diameter: u64,
    /// Mapping from `Z_{3x} x Z_x` coordinates into `group`, for locating
    /// designated elements (e.g. the farthest vertices) of the source
    /// presentation.
    pub map: CanonicalMap,
}

/// `Z_{3x} x Z_x` with connection set `{(1,0), (-1,1)}`, canonicalized.
/// Order `3x^2`, designed diameter `3x - 2`. At `x = 1` the product
/// degenerates to the cyclic group of order 3 with set `{1, 2}`.
pub fn build_star_construction(x: u64) -> Result<StarConstruction> {
    if x < 1 {
        return Err(Error::OutOfDomain(
            "the product construction needs x >= 1".into(),
        ));
    }
    let spec = GroupSpec::new(vec![3 * x, x])?;
    let map = spec.canonical_map();
    let gens = GeneratingSet::new(
        map.group(),
        vec![map.map_coords(&[1, 0])?, map.map_coords(&[-1, 1])?],
    )?;
    Ok(StarConstruction {
        group: map.group().clone(),
        gens,
        expected_diameter: 3 * x - 2,
        map,
    })
}

/// One row of the cyclic witness family: `Z_m` with connection set
/// `{a, b}` is claimed to have diameter `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    /// 1-based row index within the family.
    pub row: usize,
    pub m: u64,
    pub d: u64,
    pub a: u64,
    /// Reduced modulo `m`.
    pub b: u64,
    /// The reduced generators collide or hit the identity, so the row
    /// carries no testable claim at this `x`.
    pub degenerate: bool,
}

/// All nine rows of the cyclic family at parameter `x`, with generators
/// reduced modulo the row's order. Degenerate rows (possible only at small
/// `x`) are emitted flagged rather than dropped.
pub fn table1_families(x: u64) -> Result<Vec<TableRow>> {
    if x < 1 {
        return Err(Error::OutOfDomain("the cyclic family needs x >= 1".into()));
    }
    let x = x as i64;
    let raw: [(i64, i64, i64); 9] = [
        (3 * x * x, 3 * x - 1, 3 * x - 1),
        (3 * x * x + x, 3 * x - 1, 3 * x),
        (3 * x * x + 2 * x, 3 * x - 1, -3 * x),
        (3 * x * x + 2 * x + 1, 3 * x, 3 * x + 1),
        (3 * x * x + 3 * x + 1, 3 * x, 3 * x + 2),
        (3 * x * x + 4 * x + 1, 3 * x, -3 * x - 2),
        (3 * x * x + 4 * x + 2, 3 * x + 1, 3 * x + 3),
        (3 * x * x + 5 * x + 2, 3 * x + 1, 3 * x + 4),
        (3 * x * x + 6 * x + 2, 3 * x + 1, -3 * x + 4),
    ];
    Ok(raw
        .iter()
        .enumerate()
        .map(|(i, &(m, d, b))| {
            let b = b.rem_euclid(m) as u64;
            TableRow {
                row: i + 1,
                m: m as u64,
                d: d as u64,
                a: 1,
                b,
                degenerate: b == 0 || b == 1,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::formulas::m_star_upper_bound;
    use crate::metrics::bfs_profile;

    #[test]
    fn construction_at_x2() {
        let c = build_star_construction(2).unwrap();
        assert_eq!(c.group.order(), 12);
        assert_eq!(c.group.rank(), 2);
        assert_eq!(c.expected_diameter, 4);
        let profile = bfs_profile(&c.group, &c.gens).unwrap();
        assert_eq!(profile.diameter(), Some(4));
    }

    #[test]
    fn construction_at_x1_degenerates_to_z3() {
        let c = build_star_construction(1).unwrap();
        assert_eq!(c.group.moduli(), &[3]);
        assert_eq!(c.expected_diameter, 1);
        let lits: Vec<String> = c.gens.elements().iter().map(|e| e.literal()).collect();
        assert_eq!(lits, ["1", "2"]);
        let profile = bfs_profile(&c.group, &c.gens).unwrap();
        assert_eq!(profile.diameter(), Some(1));
    }

    #[test]
    fn construction_order_matches_the_upper_bound() {
        for x in 2..=6u64 {
            let c = build_star_construction(x).unwrap();
            assert_eq!(c.group.order(), 3 * x * x);
            assert_eq!(
                c.group.order(),
                m_star_upper_bound(c.expected_diameter).unwrap()
            );
        }
        assert!(matches!(
            build_star_construction(0),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn family_rows_at_x2() {
        let rows = table1_families(2).unwrap();
        assert_eq!(rows.len(), 9);
        let as_tuple = |r: &TableRow| (r.m, r.d, r.a, r.b);
        assert_eq!(as_tuple(&rows[0]), (12, 5, 1, 5));
        assert_eq!(as_tuple(&rows[1]), (14, 5, 1, 6));
        assert_eq!(as_tuple(&rows[2]), (16, 5, 1, 10));
        assert_eq!(as_tuple(&rows[3]), (17, 6, 1, 7));
        assert_eq!(as_tuple(&rows[4]), (19, 6, 1, 8));
        assert_eq!(as_tuple(&rows[5]), (21, 6, 1, 13));
        assert_eq!(as_tuple(&rows[6]), (22, 7, 1, 9));
        assert_eq!(as_tuple(&rows[7]), (24, 7, 1, 10));
        assert_eq!(as_tuple(&rows[8]), (26, 7, 1, 24));
        assert!(rows.iter().all(|r| !r.degenerate));
    }

    #[test]
    fn family_degeneracy_at_x1() {
        let rows = table1_families(1).unwrap();
        // Row 9: m = 11, b = 1 collides with a.
        assert!(rows[8].degenerate);
        assert_eq!(rows[8].b, 1);
        assert_eq!(rows.iter().filter(|r| r.degenerate).count(), 1);
    }

    #[test]
    fn consecutive_families_abut() {
        // Row orders ascend within a family, and the family at x ends one
        // order short of where the family at x+1 begins (3(x+1)^2).
        for x in 1..=5u64 {
            let rows = table1_families(x).unwrap();
            assert!(rows.windows(2).all(|w| w[1].m > w[0].m));
            assert_eq!(rows[0].m, 3 * x * x);
            assert_eq!(rows[8].m + 1, 3 * (x + 1) * (x + 1));
        }
    }
}
