"""
Orthogonal polynomials and the terminating Gauss hypergeometric series.

Production paths use three-term recurrences. The ``*_explicit`` functions evaluate the textbook finite sums and
exist as independent references. They run in exact rational arithmetic on the float inputs, so they carry no
cancellation error and are slow for large n.
"""

import functools
import math
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from brownian_clausius.config import RECURRENCE_RESCALE
from brownian_clausius.exceptions import ParameterDomainError


def _check_degree(n: int) -> None:
    if n < 0:
        raise ParameterDomainError(f"Polynomial degree must be non-negative, got {n}")


def hermite(n: int, x: float) -> float:
    """Physicists' Hermite polynomial H_n(x)."""
    _check_degree(n)
    if n == 0:
        return 1.0
    prev, curr = 1.0, 2.0 * x
    for k in range(1, n):
        prev, curr = curr, 2.0 * x * curr - 2.0 * k * prev
    return curr


def legendre(n: int, z: float) -> float:
    """Legendre polynomial P_n(z), valid for any real z."""
    _check_degree(n)
    if n == 0:
        return 1.0
    prev, curr = 1.0, z
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1) * z * curr - k * prev) / (k + 1)
    return curr


def jacobi(n: int, mu: float, nu: float, z: float) -> float:
    """Jacobi polynomial P_n^(mu, nu)(z)."""
    _check_degree(n)
    if mu <= -1 or nu <= -1:
        raise ParameterDomainError(f"Jacobi parameters must exceed -1, got mu={mu}, nu={nu}")
    if n == 0:
        return 1.0

    s = mu + nu
    prev, curr = 1.0, (mu + 1.0) + 0.5 * (s + 2.0) * (z - 1.0)
    for k in range(2, n + 1):
        two_k_s = 2 * k + s
        a = 2 * k * (k + s) * (two_k_s - 2)
        b = (two_k_s - 1) * (two_k_s * (two_k_s - 2) * z + mu * mu - nu * nu)
        c = 2 * (k + mu - 1) * (k + nu - 1) * two_k_s
        prev, curr = curr, (b * curr - c * prev) / a
    return curr


def jacobi_symmetric_scaled_log(n: int, a: float, x: float, r2: float) -> tuple[float, float]:
    """
    Homogeneous symmetric Jacobi value r^n P_n^(a,a)(x/r) with r^2 = r2, as (mantissa, log_scale).

    Only even powers of r survive, so any real r2 is allowed (negative r2 included). The value is
    mantissa * exp(log_scale); the recurrence is rescaled whenever it grows past RECURRENCE_RESCALE.
    """
    _check_degree(n)
    if a <= -1:
        raise ParameterDomainError(f"Jacobi parameter must exceed -1, got {a}")
    if n == 0:
        return 1.0, 0.0

    log_scale = 0.0
    prev, curr = 1.0, (a + 1.0) * x
    for k in range(2, n + 1):
        two = 2 * k + 2 * a
        coeff_a = 2 * k * (k + 2 * a) * (two - 2)
        coeff_b = (two - 1) * two * (two - 2)
        coeff_c = 2 * (k + a - 1) ** 2 * two
        prev, curr = curr, (coeff_b * x * curr - coeff_c * r2 * prev) / coeff_a
        magnitude = max(abs(curr), abs(prev))
        if magnitude > RECURRENCE_RESCALE:
            prev /= magnitude
            curr /= magnitude
            log_scale += math.log(magnitude)
    return curr, log_scale


def jacobi_symmetric_scaled(n: int, a: float, x: float, r2: float) -> float:
    mantissa, log_scale = jacobi_symmetric_scaled_log(n, a, x, r2)
    return mantissa * math.exp(log_scale)


def legendre_scaled_sequence(n_max: int, x: float, r2: float) -> npt.NDArray[np.float64]:
    """r^n P_n(x/r) for n = 0..n_max, with r^2 = r2 (any real)."""
    _check_degree(n_max)
    values = np.empty(n_max + 1)
    values[0] = 1.0
    if n_max >= 1:
        values[1] = x
    for k in range(1, n_max):
        values[k + 1] = ((2 * k + 1) * x * values[k] - k * r2 * values[k - 1]) / (k + 1)
    return values


def legendre_scaled(n: int, x: float, r2: float) -> float:
    return float(legendre_scaled_sequence(n, x, r2)[n])


def hermite_normalized_sequence(n_max: int, x: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """
    H_k(x) / sqrt(2^k k! sqrt(pi)) for k = 0..n_max, shape (n_max + 1, *x.shape).

    Multiplied by exp(-x^2/2) these are the orthonormal oscillator eigenfunctions in units of the length scale.
    """
    _check_degree(n_max)
    points = np.asarray(x, dtype=np.float64)
    values = np.empty((n_max + 1, *points.shape))
    values[0] = np.pi**-0.25
    if n_max >= 1:
        values[1] = math.sqrt(2.0) * points * values[0]
    for k in range(1, n_max):
        values[k + 1] = math.sqrt(2.0 / (k + 1)) * points * values[k] - math.sqrt(k / (k + 1)) * values[k - 1]
    return values


def hyp2f1_terminating(k: int, l: int, c: float, z: float) -> float:  # noqa: E741
    """
    2F1(-k, -l; c; z) as the finite sum over j <= min(k, l), nested from the highest term down.

    >>> hyp2f1_terminating(1, 1, 0.5, 2.0)
    5.0
    """
    if k < 0 or l < 0:
        raise ParameterDomainError(f"Terminating series needs non-negative k, l, got {k}, {l}")
    if c <= 0:
        raise ParameterDomainError(f"Lower parameter must be positive, got {c}")

    acc = 1.0
    for j in reversed(range(min(k, l))):
        ratio = (j - k) * (j - l) * z / ((c + j) * (j + 1))
        acc = 1.0 + ratio * acc
    return acc


def _binomials(top: Fraction, n: int) -> list[Fraction]:
    """Generalized binomial coefficients C(top, k) for k = 0..n, top rational."""
    values = [Fraction(1)]
    for i in range(n):
        values.append(values[-1] * (top - i) / (i + 1))
    return values


@functools.lru_cache(maxsize=256)
def _jacobi_sum_coefficients(n: int, mu: float, nu: float) -> tuple[tuple[int, ...], int]:
    """C(n + mu, k) C(n + nu, n - k) for k = 0..n as integers over one common denominator."""
    binom_mu = _binomials(n + Fraction(mu), n)
    binom_nu = _binomials(n + Fraction(nu), n)
    products = [binom_mu[k] * binom_nu[n - k] for k in range(n + 1)]
    denominator = math.lcm(*(p.denominator for p in products))
    return tuple(p.numerator * (denominator // p.denominator) for p in products), denominator


def hermite_explicit(n: int, x: float) -> float:
    _check_degree(n)
    p, q = float(x).as_integer_ratio()
    total = 0
    for m in range(n // 2 + 1):
        coeff = math.factorial(n) // (math.factorial(m) * math.factorial(n - 2 * m))
        total += (-1) ** m * coeff * (2 * p) ** (n - 2 * m) * q ** (2 * m)
    return float(Fraction(total, q**n))


def legendre_explicit(n: int, z: float) -> float:
    _check_degree(n)
    p, q = float(z).as_integer_ratio()
    total = sum(math.comb(n, k) ** 2 * (p - q) ** (n - k) * (p + q) ** k for k in range(n + 1))
    return float(Fraction(total, (2 * q) ** n))


def jacobi_explicit(n: int, mu: float, nu: float, z: float) -> float:
    _check_degree(n)
    if mu <= -1 or nu <= -1:
        raise ParameterDomainError(f"Jacobi parameters must exceed -1, got mu={mu}, nu={nu}")
    coefficients, denominator = _jacobi_sum_coefficients(n, float(mu), float(nu))
    p, q = float(z).as_integer_ratio()
    total = sum(c * (p - q) ** (n - k) * (p + q) ** k for k, c in enumerate(coefficients))
    return float(Fraction(total, denominator * (2 * q) ** n))


__all__ = [
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
