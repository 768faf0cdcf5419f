import logging
import math

from brownian_clausius.config import UNCERTAINTY_ROUNDING
from brownian_clausius.densmat.models import DimensionlessSet
from brownian_clausius.drude.models import GaussianMoments
from brownian_clausius.exceptions import DegenerateStateError, UncertaintyViolationError

logger = logging.getLogger(__name__)


def position_kernel(q: float, q_prime: float, moments: GaussianMoments, hbar: float = 1.0) -> float:
    """
    <q|rho_s|q'> = exp(-(q + q')^2 / (8 <q^2>) - <p^2> (q - q')^2 / (2 hbar^2)) / sqrt(2 pi <q^2>).
    """
    q2, p2 = moments.q2, moments.p2
    exponent = -((q + q_prime) ** 2) / (8.0 * q2) - p2 * (q - q_prime) ** 2 / (2.0 * hbar * hbar)
    return math.exp(exponent) / math.sqrt(2.0 * math.pi * q2)


def dimensionless_quantities(moments: GaussianMoments, M: float, omega0: float, hbar: float) -> DimensionlessSet:
    c2 = M * omega0 / hbar
    c4 = c2 * c2
    q2, p2 = moments.q2, moments.p2
    momentum = p2 / (hbar * hbar)

    A = (c2 + 2.0 * momentum) * (c2 + 1.0 / (2.0 * q2)) / (4.0 * c4)
    if not A > 0:
        raise DegenerateStateError(f"A = {A} is not positive; the moments are corrupted")

    Upsilon = (momentum / q2 - c4) / (4.0 * c4 * A)
    Lambda = (momentum - 1.0 / (4.0 * q2)) / (2.0 * c2 * A)
    if Lambda < 0.0:
        # v = 1/2 can land a rounding error below zero
        if Lambda < -UNCERTAINTY_ROUNDING:
            raise UncertaintyViolationError(f"Lambda = {Lambda} < 0 implies v < 1/2")
        Lambda = 0.0

    Delta = (Upsilon / Lambda) ** 2 if Lambda > 0.0 else 0.0
    logger.debug(f"Dimensionless set: A={A!r}, Upsilon={Upsilon!r}, Lambda={Lambda!r}, Delta={Delta!r}")
    return DimensionlessSet(A=A, Upsilon=Upsilon, Lambda=Lambda, Delta=Delta, c=math.sqrt(c2))


__all__ = ["position_kernel", "dimensionless_quantities"]
