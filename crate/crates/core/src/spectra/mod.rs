//! Eigenvalues, characteristic polynomials, closed forms and root finding
//! for small dense symmetric matrices.

mod charpoly;
mod closed_form;
mod jacobi;
mod power;
mod roots;

pub use charpoly::{char_poly, CharPoly};
pub use closed_form::{double_star_radius, path_charpoly_closed, path_charpoly_recurrence};
pub use jacobi::full_spectrum;
pub use power::{spectral_radius, SpectralResult, DEFAULT_TOL, MAX_ITERATIONS};
pub use roots::{largest_root, largest_root_by, poly_eval};
