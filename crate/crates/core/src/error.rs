use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("dilation scale must be positive")]
    NonPositiveScale,
}

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("function is not differentiable at the requested point")]
    NonDifferentiable,
    #[error("map has no usable inverse")]
    InverseUnavailable,
    #[error("Jacobian determinant vanishes on the domain")]
    SingularJacobian,
}

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("map not certified as a filtration-preserving diffeomorphism")]
    NotCertified,
    #[error("induced automorphism fails the strata check (residual {residual})")]
    NotAdmissible { residual: f64 },
    #[error("Jacobian of the map is degenerate at the localization center")]
    DegenerateJacobian,
    #[error("covering extent box is empty")]
    EmptyBox,
}

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("lattice has {size} unknowns, above the dense cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("operator is not positive definite (smallest eigenvalue {min_eig})")]
    NotPositiveDefinite { min_eig: f64 },
    #[error("heat profile reaches the boundary (mass fraction {fraction})")]
    BoundaryContamination { fraction: f64 },
    #[error("shift or dilation is not representable on this grid")]
    NonRepresentableShift,
    #[error("map leaves the grid domain")]
    OutOfDomain,
    #[error("epsilon {eps} exceeds the admissible radius {eps_max} for this field")]
    EpsilonTooLarge { eps: f64, eps_max: f64 },
    #[error("matrix log out of its convergence radius: ‖V−1‖ = {norm}")]
    LogRadius { norm: f64 },
}

#[derive(Debug, Error)]
pub enum SymbolError {
    #[error("element support leaks outside the chart")]
    SupportLeak,
    #[error("partition of unity does not sum to 1 at a sample point (got {value})")]
    PartitionGap { value: f64 },
    #[error("section components are incompatible across charts (residual {residual})")]
    IncompatibleSection { residual: f64 },
}
