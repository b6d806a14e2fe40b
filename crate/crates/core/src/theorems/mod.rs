//! Executable checks of the extremal results on AG spectral radii of trees
//! and unicyclic graphs, the polynomial identities behind them, and the
//! reference tables.

mod bounds;
mod certificate;
mod extremes;
mod matching;
mod polynomials;
mod properties;
pub mod suite;
mod tables;

pub use bounds::{
    adjacent_hubs_radical, adjacent_hubs_match_double_star, edge_count_bound, t1_root_bracket, verify_g234_positive,
    verify_g_positive, EdgeCountBound, PositivityReport, T1Bracket, Violation,
};
pub use certificate::{perron_certificate, verify_unicyclic_case_split, CaseSplitReport, CaseSplitRow, CertificateReport, SLACK_TOL};
pub use extremes::{
    ag_radius, family_radii, path_radius_with_lower_bound, verify_adjacency_extremes, verify_tree_extremes,
    verify_unicyclic_extremes, ExtremalReport, RadiusEntry,
};
pub use matching::{
    device_values, match_char_poly, match_report, search_devices, DeviceSearch, DeviceValue, PolyTarget,
    DEFAULT_MATCH_TOL, MATCH_GRID_POINTS,
};
pub use polynomials::{path_ag_continuant, sufficient_inequalities, t1_bracket_values, t1_coeffs, ProofPolynomial};
pub use properties::{
    check_monotonicity, check_principal_submatrix, check_spectrum_consistency, random_graph, small_family, DEFAULT_SEED,
};
pub use tables::{display_tolerance, matches_rounded, reference_table, radius_table, reproduce_table, TableMatch, TableReport, REFERENCE_TABLES};

/// Tolerance for equalities and strict inequalities between radii.
pub const EQ_TOL: f64 = 1e-9;
/// Two radii closer than this are treated as a tie for extremal uniqueness.
pub const UNIQUE_MARGIN: f64 = 1e-6;

/// One named assertion and its outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}
