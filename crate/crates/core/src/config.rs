//! Resource ceilings shared by every exhaustive check.

use serde::Serialize;

/// Environment variable overriding [`Ceilings::enumeration`].
pub const CEILING_ENV: &str = "STAR_EIGEN_CEILING";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ceilings {
    /// Largest n for which all of Sym_n is swept. 7! = 5040 vertices.
    pub enumeration: usize,
    /// Largest n for the dense floating eigensolver. 6! = 720 rows; 7 costs
    /// a 5040 x 5040 dense solve (minutes, ~200 MB).
    pub spectrum: usize,
    /// Cap on |R-tail| * |CA_t| and on materialized stabilizers/tabloids.
    pub budget: u128,
}

impl Default for Ceilings {
    fn default() -> Self {
        Ceilings {
            enumeration: 7,
            spectrum: 6,
            budget: 1_000_000,
        }
    }
}

impl Ceilings {
    pub fn from_env() -> Self {
        let mut c = Ceilings::default();
        if let Some(v) = std::env::var(CEILING_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            c.enumeration = v;
        }
        c
    }
}
