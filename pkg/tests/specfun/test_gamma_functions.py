import cmath
import math

import mpmath
import pytest

from brownian_clausius.exceptions import PoleError
from brownian_clausius.specfun import digamma, log_abs_gamma, log_gamma, log_gamma_ratio, trigamma

COMPLEX_POINTS = [0.5, 3.7, 1.0 + 2.0j, 0.1 + 5.0j, 25.0 - 3.0j, 0.3 + 0.01j, 80.0 + 40.0j]


def _close(actual: complex, expected: complex, rel: float) -> bool:
    return abs(actual - expected) <= rel * max(1.0, abs(expected))


@pytest.mark.parametrize("z", COMPLEX_POINTS + [-2.5 + 0.5j, -7.3])
def test_digamma_matches_mpmath(z: complex) -> None:
    expected = complex(mpmath.digamma(mpmath.mpmathify(z)))
    assert _close(digamma(z), expected, 1e-13)


@pytest.mark.parametrize("z", COMPLEX_POINTS + [-2.5 + 0.5j, -7.3])
def test_trigamma_matches_mpmath(z: complex) -> None:
    expected = complex(mpmath.psi(1, mpmath.mpmathify(z)))
    assert _close(trigamma(z), expected, 1e-13)


@pytest.mark.parametrize("z", COMPLEX_POINTS)
def test_log_gamma_matches_principal_branch(z: complex) -> None:
    expected = complex(mpmath.loggamma(mpmath.mpmathify(z)))
    assert _close(log_gamma(z), expected, 1e-13)


@pytest.mark.parametrize("z", [0.0, -1.0, -3, -12.0])
def test_poles_raise(z: float) -> None:
    with pytest.raises(PoleError):
        digamma(z)
    with pytest.raises(PoleError):
        trigamma(z)
    with pytest.raises(PoleError):
        log_gamma(z)


def test_digamma_special_values() -> None:
    assert digamma(1.0).real == pytest.approx(-0.57721566490153286, rel=1e-14)
    assert digamma(0.5).real == pytest.approx(-0.57721566490153286 - 2.0 * math.log(2.0), rel=1e-14)
    assert trigamma(1.0).real == pytest.approx(math.pi**2 / 6.0, rel=1e-14)


def test_digamma_conjugate_symmetry() -> None:
    z = 0.7 + 3.1j
    assert digamma(z.conjugate()) == pytest.approx(digamma(z).conjugate(), rel=1e-15)


@pytest.mark.parametrize("z", [0.3, 2.7, 1.5 + 0.5j, 11.0 + 4.0j])
def test_duplication_formula(z: complex) -> None:
    lhs = log_gamma(z) + log_gamma(z + 0.5)
    rhs = (1.0 - 2.0 * z) * math.log(2.0) + 0.5 * math.log(math.pi) + log_gamma(2.0 * z)
    # equal up to a multiple of 2 pi i
    turns = (lhs - rhs).imag / (2.0 * math.pi)
    assert abs(lhs - rhs - 2j * math.pi * round(turns)) < 1e-12


def test_log_abs_gamma_sign_on_the_negative_axis() -> None:
    for x, expected in [(-0.5, -2.0 * math.sqrt(math.pi)), (-1.5, 4.0 * math.sqrt(math.pi) / 3.0), (-2.5, -8.0 * math.sqrt(math.pi) / 15.0)]:
        sign, value = log_abs_gamma(x)
        assert sign * math.exp(value) == pytest.approx(expected, rel=1e-13)


def test_log_gamma_ratio_of_factorials() -> None:
    sign, value = log_gamma_ratio([11.0, 0.5], [6.0, 1.5])
    # 10!/5! * Gamma(1/2)/Gamma(3/2) = 30240 * 2
    assert sign == 1
    assert math.exp(value) == pytest.approx(60480.0, rel=1e-13)


def test_large_argument_stays_finite() -> None:
    value = log_gamma(1e6 + 1e6j)
    assert cmath.isfinite(value)
