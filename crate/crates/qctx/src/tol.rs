//! Central tolerance constants. All downstream thresholds derive from these;
//! no module defines its own ad-hoc magic numbers for the same check.

/// Unitarity gate: ||U'U - 1||_F must stay below this.
pub const TOL_UNITARY: f64 = 1e-10;

/// Projector gate: Hermiticity, idempotence and unit-trace deviations.
pub const TOL_PROJECTOR: f64 = 1e-10;

/// Column sums of a stochastic matrix. Looser than the linear-algebra gates
/// because inputs come from user JSON and may carry decimal rounding.
pub const TOL_STOCH: f64 = 1e-9;

/// Unistochasticity certification: max entrywise |witness moduli^2 - p|.
pub const TOL_CERTIFY: f64 = 1e-8;

/// Rule-II spread gate for exactly computed (projector-based) probabilities.
pub const TOL_RULE_II: f64 = 1e-9;

/// Relative SVD reconstruction error: ||A - U S V'|| <= factor * ||A||_F.
pub const SVD_RECONSTRUCT_RTOL: f64 = 1e-12;

/// Gate for the trace constraints of a frame decomposition built by hand
/// (decomposition output itself is tested at 1e-10).
pub const TOL_DECOMP_CONSTRAINT: f64 = 1e-8;

/// Probability treated as certain when extracting extravalence links.
pub const TOL_CERTAINTY: f64 = 1e-10;
