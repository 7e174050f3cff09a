/// Resource caps for the combinatorial kernels.
///
/// Exceeding a cap is an error ([`crate::Error::Resource`]), never a silent
/// truncation. Every cap can be overridden on the CLI or through the
/// `MULTCONJ_*` environment variables.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Maximum number of distinct lcm multidegrees enumerated by the Betti
    /// oracle.
    pub max_lcm_lattice: usize,
    /// Maximum row/column count of a single boundary matrix in the homology
    /// rank computation.
    pub max_matrix_dim: usize,
    /// Maximum number of graded components scanned by the componentwise
    /// linearity check.
    pub max_components: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_lcm_lattice: 50_000,
            max_matrix_dim: 4_096,
            max_components: 64,
        }
    }
}
