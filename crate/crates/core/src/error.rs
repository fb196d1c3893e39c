/// Errors shared by all modules. Scalar payloads are stored as `f64`
/// regardless of the working precision.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The adaptive integrator needed a step below `1e-14·|x1−x0|`; there is
    /// a singularity on the integration path.
    #[error("step size underflow near x = {x:.6e}: singularity on the integration path")]
    StepSizeUnderflow { x: f64 },

    /// Adaptive quadrature exceeded its refinement depth.
    #[error("singular integrand on [{a:.6e}, {b:.6e}]: refinement depth exceeded")]
    SingularIntegrand { a: f64, b: f64 },

    /// |℘| crossed the pole guard during evaluation.
    #[error("evaluation too close to a pole of ℘ near x = {x:.6e} (|℘| > {guard:.1e})")]
    PoleProximity { x: f64, guard: f64 },

    /// A symmetry function vanishes where the construction needs `z ≠ 0`.
    #[error("symmetry function vanishes near x = {x:.6e}")]
    ZeroSymmetry { x: f64 },

    /// Closed-form `c_w` is only printed for n = 1, 2, 3.
    #[error("no closed-form c_w for n = {n} (available for n = 1, 2, 3)")]
    UnsupportedN { n: u32 },

    /// The pivot multiplying the newly determined coefficient vanished.
    #[error("recurrence breakdown at step i = {i}: pivot coefficient vanishes")]
    RecurrenceBreakdown { i: i64 },

    /// `density_profile` was asked for a λ that is not an eigenvalue.
    #[error("λ = {lambda:.6} is not an eigenvalue: |miss| = {miss:.3e} > {threshold:.1e}")]
    NotAnEigenvalue { lambda: f64, miss: f64, threshold: f64 },

    /// A constructed object failed its own consistency checks.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    /// Malformed arguments (domain ordering, unsupported orders, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
