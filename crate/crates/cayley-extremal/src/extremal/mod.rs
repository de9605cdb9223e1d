//! Extremal orders of Abelian Cayley digraphs at fixed degree and
//! diameter: closed forms, the constructions that attain them, exhaustive
//! searches certifying them, and the cyclic-versus-Abelian gap.

mod construction;
mod formulas;
mod search;

pub use construction::{build_star_construction, table1_families, StarConstruction, TableRow};
pub use formulas::{
    ball_bound, m_cyclic_formula, m_star_proposition, m_star_upper_bound,
    min_diameter_bound_abelian,
};
pub use search::{
    avg_distance_frontier, certify_counterexample, min_diameter_for_order, scan, search_m_cyclic,
    search_m_star, CounterexampleReport, DiameterWitness, ExtremalRecord, FrontierRow, OrderScan,
    ScanOutcome, Scope, SearchOptions,
};
