from brownian_clausius import __all__

EXPECTED_PARAMS = ["ModelParams", "Regime", "Variation"]

EXPECTED_EXCEPTIONS = [
    "BrownianClausiusError",
    "NumericDomainError",
    "PoleError",
    "ParameterDomainError",
    "CriticalDampingError",
    "UncertaintyViolationError",
    "PureStateError",
    "NonFiniteError",
    "DegenerateStateError",
    "PathCrossingError",
    "ConvergenceError",
    "MatrixOverflowError",
    "ConsistencyError",
    "SelfTestFailure",
]

EXPECTED_SPECFUN = [
    "ComplexScalar",
    "log_gamma",
    "digamma",
    "trigamma",
    "log_abs_gamma",
    "log_gamma_ratio",
    "hermite",
    "hermite_normalized_sequence",
    "legendre",
    "jacobi",
    "jacobi_symmetric_scaled",
    "jacobi_symmetric_scaled_log",
    "legendre_scaled",
    "legendre_scaled_sequence",
    "hyp2f1_terminating",
    "hermite_explicit",
    "legendre_explicit",
    "jacobi_explicit",
]

EXPECTED_DRUDE = [
    "DrudeDecomposition",
    "GaussianMoments",
    "MomentDerivatives",
    "ParameterFlow",
    "decompose",
    "response_roots",
    "lambda_coefficients",
    "lambda_gradients",
    "moments",
    "uncoupled_moments",
    "coth",
    "csch_sq",
    "thermal_factor",
    "thermal_factor_slope",
    "parameter_flow",
    "moment_derivatives",
    "uncoupled_moment_derivatives",
    "dmoments_dgamma",
    "dmoments_dM",
    "dmoments_dk0",
    "spectral_density",
    "susceptibility",
    "susceptibility_direct",
]

EXPECTED_DENSMAT = [
    "DimensionlessSet",
    "ReducedDensityMatrix",
    "FirstMomentReport",
    "position_kernel",
    "dimensionless_quantities",
    "matrix_element",
    "matrix_element_hypergeometric",
    "diagonal_element",
    "diagonal_sequence",
    "occupation",
    "build_truncated",
    "truncation_index",
    "internal_energy",
    "number_basis_energy",
    "first_moment_checks",
]

EXPECTED_EFFECTIVE = [
    "EigenAnsatz",
    "EigenSolution",
    "EffectiveOscillator",
    "GrabertComparison",
    "ZeroTemperatureComparison",
    "eigen_solution",
    "effective_star",
    "entropy_von_neumann",
    "entropy_effective",
    "grabert_comparison",
    "zero_T_comparison",
]

EXPECTED_AUDIT = [
    "VariationReport",
    "WeakCouplingReport",
    "CyclicIntegralReport",
    "weak_coupling_equalities",
    "gamma_variation",
    "local_variation",
    "variation_report",
    "entropy_derivative",
    "cyclic_integral",
]

EXPECTED_ORACLES = [
    "StarBath",
    "NormalModes",
    "FiniteDifferenceResult",
    "matsubara_moments",
    "fdt_quadrature_moments",
    "verify_factorization",
    "star_bath_moments",
    "discretize_drude",
    "normal_modes",
    "thermal_moments",
    "rho_element_quadrature",
    "eigencheck_quadrature",
    "finite_difference",
    "central_difference",
    "default_step",
]

EXPECTED_CLI = [
    "RunConfig",
    "load_run_config",
    "FIGURES",
    "FigureDefinition",
    "figure_data",
    "gamma_column",
    "SelfTestCheck",
    "SELFTEST_CHECKS",
    "run_selftest",
    "format_selftest",
    "raise_on_failure",
    "relative_error",
    "main",
    "run_command",
    "entrypoint",
]


EXPECTED_ALL = (
    EXPECTED_PARAMS
    + EXPECTED_EXCEPTIONS
    + EXPECTED_SPECFUN
    + EXPECTED_DRUDE
    + EXPECTED_DENSMAT
    + EXPECTED_EFFECTIVE
    + EXPECTED_AUDIT
    + EXPECTED_ORACLES
    + EXPECTED_CLI
)


def test_all_imports() -> None:
    assert sorted(EXPECTED_ALL) == sorted(__all__)
