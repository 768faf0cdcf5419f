import math

# ************ PARAMETERS TO CONTROL SPECIAL FUNCTIONS

# Upward recurrence is applied until Re z reaches this value, then the asymptotic series takes over
ASYMPTOTIC_SHIFT_THRESHOLD: float = 10.0

# Number of Bernoulli terms used in the Stirling-type tails
ASYMPTOTIC_SERIES_TERMS: int = 8

EULER_GAMMA: float = 0.57721566490153286061

# ************ PARAMETERS TO CONTROL THE DRUDE MODEL

# Relative half-width of the band around gamma/2 = w0 that is rejected as critical damping
CRITICAL_DAMPING_BAND: float = 1e-9

# Largest tolerated |Im|/|Re| after summing the conjugate pair contributions
REALITY_TOLERANCE: float = 1e-10

# v may round to just below 1/2 in the ground state; anything lower than this is a real violation
UNCERTAINTY_ROUNDING: float = 1e-12

# Newton polish steps applied to the cubic root when inverting (omega0, omega_d, gamma_o)
CHART_INVERSION_NEWTON_STEPS: int = 3

# ************ PARAMETERS TO CONTROL THE ORACLES

MATSUBARA_DEFAULT_TERMS: int = 10_000
MATSUBARA_MIN_TERMS: int = 1000
MATSUBARA_DEFAULT_TAIL_ORDER: int = 3
MATSUBARA_DEFAULT_TOLERANCE: float = 1e-10

# Upper limit of the resolved part of the FDT integrals, in units of max(omega_d, w0)
FDT_OMEGA_MAX_FACTOR: float = 200.0
# The unresolved tail beyond omega_max may carry at most this fraction of the result
FDT_TAIL_TOLERANCE: float = 1e-3
FDT_QUAD_EPSABS: float = 0.0
FDT_QUAD_EPSREL: float = 1e-11
FDT_QUAD_LIMIT: int = 500

STAR_BATH_MIN_MODES: int = 100
STAR_BATH_DEFAULT_MODES: int = 1000

# Extra Gauss-Hermite nodes beyond the exactness requirement for rho_nm double quadrature
RHO_QUADRATURE_EXTRA_NODES: int = 20
RHO_QUADRATURE_TOLERANCE: float = 1e-12
RHO_QUADRATURE_MAX_INDEX: int = 40

EIGENCHECK_MAX_INDEX: int = 20
EIGENCHECK_GRID_POINTS: int = 41
EIGENCHECK_GRID_HALF_WIDTH: float = 4.0  # in units of 1/c_tilde

# Relative step used by central differences, and the absolute step for arguments below the switch
FINITE_DIFFERENCE_RELATIVE_STEP: float = 1e-5
FINITE_DIFFERENCE_ABSOLUTE_STEP: float = 1e-7
FINITE_DIFFERENCE_SWITCH: float = 1e-2

# ************ PARAMETERS TO CONTROL THE DENSITY MATRIX

DEFAULT_TRUNCATION_TOLERANCE: float = 1e-12
MAX_TRUNCATION_TOLERANCE: float = 1e-3

# Matrices larger than this are refused with an advisory truncation index
MAX_MATRIX_DIMENSION: int = 2000

# Rescale threshold for the homogeneous recurrences (keeps intermediate values representable)
RECURRENCE_RESCALE: float = 1e150

# Largest log-magnitude accepted for an assembled element
LOG_OVERFLOW_LIMIT: float = math.log(1e300)

# ************ PARAMETERS TO CONTROL THE EFFECTIVE OSCILLATOR AND AUDITS

# Finite beta standing in for T = 0 (units of 1/(kB w0))
ZERO_TEMPERATURE_BETA: float = 1e3
ZERO_TEMPERATURE_AUDIT_BETA: float = 200.0

# v - 1/2 below this is treated as a pure state by the entropy derivative
PURE_STATE_TOLERANCE: float = 1e-12

# Signed violations are flagged when they exceed this fraction of the compared magnitudes
VIOLATION_TOLERANCE: float = 1e-12

CYCLIC_DEFAULT_STEPS: int = 4
CYCLIC_QUAD_EPSABS: float = 0.0
CYCLIC_QUAD_EPSREL: float = 1e-11
CYCLIC_QUAD_LIMIT: int = 200

# ************ PARAMETERS TO CONTROL THE FIGURE GRID AND CLI OUTPUT

DEFAULT_GAMMA_LIST: tuple[float, ...] = (0.5, 1.5, 4.0, 10.0)
DEFAULT_T_MIN: float = 0.02
DEFAULT_T_MAX: float = 3.0
DEFAULT_N_POINTS: int = 150

CSV_FLOAT_FORMAT = "%.17g"  # round-trips doubles
SELFTEST_TABLE_FORMAT = "grid"  # format from the tabulate library
