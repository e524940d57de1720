//! Exact arithmetic: integer polynomials, truncated multivariate series and
//! the identities built on them.

mod combin;
mod gf;
mod poly;
mod series;

pub use combin::{
    dim_poly, dist_poly, dist_rhs_poly, eulerian_poly, factorial, q_factorial, q_integer,
    q_multinomial, s_poly_fishburn, s_poly_inv, stirling2, v_poly,
};
pub use gf::{
    dyck_touch_enumerated, lemma31_check, motzkin_f, motzkin_stat_enumerated, motzkin_stat_from_f,
    motzkin_stat_series, ndippm_enumerated, ndippm_gf_check, ndpm_enumerated, ndpm_gf_check,
    path_sum_check, telescoping_residual, SeriesCheck,
};
pub use poly::{Poly, PolyJson};
pub use series::{grade_text, Monomial, SeriesError, SeriesJson, TermJson, TruncatedSeries, Var};
