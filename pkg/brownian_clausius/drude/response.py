import numpy as np
import numpy.typing as npt

from brownian_clausius.drude.decomposition import response_roots
from brownian_clausius.params import ModelParams


def spectral_density(params: ModelParams, omega: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Drude spectral density J(omega) = M gamma_o omega omega_d^2 / (omega_d^2 + omega^2)."""
    w = np.asarray(omega, dtype=np.float64)
    wd = params.omega_d
    return params.M * params.gamma_o * w * wd**2 / (wd**2 + w**2)


def susceptibility(params: ModelParams, omega: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """
    chi(omega) on the real axis in factorized form (omega_d - i omega) / (M (Omega - i omega)(z1 - i omega)(z2 - i omega)).

    gamma = 0 gives the bare oscillator 1/(M (omega0^2 - omega^2)).
    """
    w = np.asarray(omega, dtype=np.float64)
    if params.is_uncoupled:
        return (1.0 / (params.M * (params.omega0_sq - w**2))).astype(np.complex128)
    z1, z2 = response_roots(params)
    s = -1j * w
    return (params.omega_d + s) / (params.M * (params.Omega + s) * (z1 + s) * (z2 + s))


def susceptibility_direct(params: ModelParams, omega: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """chi(omega) = 1 / (M (omega0^2 - omega^2 - i omega gamma_hat(omega))) with the Drude memory kernel."""
    w = np.asarray(omega, dtype=np.float64)
    wd = params.omega_d
    kernel = params.gamma_o * wd / (wd - 1j * w)
    return 1.0 / (params.M * (params.omega0_sq - w**2 - 1j * w * kernel))


__all__ = ["spectral_density", "susceptibility", "susceptibility_direct"]
