"""Point configurations on the unit circle and their pairwise energies."""
from __future__ import annotations

import math

import numpy as np

from . import specfun
from .errors import DomainError


def roots_of_unity(N: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(N) / N)


def on_circle(angles) -> np.ndarray:
    return np.exp(1j * np.asarray(angles, dtype=float))


def clustered_configuration(N: int) -> np.ndarray:
    """``ceil(N/2)`` points at 1 and the rest at -1."""
    K = (N + 1) // 2
    return np.concatenate([np.ones(K), -np.ones(N - K)]).astype(complex)


def pairwise_energy(points, s) -> float | complex:
    """``sum_{j != k} |z_j - z_k|^-s``; ``s = 0`` gives ``sum log 1/|z_j - z_k|``.

    Coincident points contribute 0 when ``Re s < 0`` (the kernel vanishes
    there) and make the energy infinite when ``Re s > 0``.
    """
    z = np.asarray(points, dtype=complex)
    s = specfun.as_scalar(s)
    n = z.size
    iu = np.triu_indices(n, k=1)
    d = np.abs(z[:, None] - z[None, :])[iu]
    if s == 0:
        if np.any(d == 0):
            return math.inf
        return 2.0 * math.fsum(-np.log(d))
    zero = d == 0
    sr = complex(s).real
    if np.any(zero):
        if sr > 0:
            return math.inf
        if sr == 0:
            raise DomainError("coincident points with Re s = 0 have no defined energy")
        d = d[~zero]
    if isinstance(s, float):
        return 2.0 * math.fsum(d ** (-s))
    t = np.exp(-s * np.log(d))
    return 2.0 * complex(math.fsum(t.real), math.fsum(t.imag))


def clustered_energy(s, N: int) -> float:
    """Energy of :func:`clustered_configuration` for ``Re s < 0``:
    ``2 K (N-K) 2^-s``."""
    s = specfun.as_scalar(s)
    if complex(s).real >= 0:
        raise DomainError("the two-cluster configuration has infinite energy for Re s >= 0")
    K = (N + 1) // 2
    val = 2 * K * (N - K) * (2.0 ** (-s) if isinstance(s, float) else complex(2.0 ** (-s)))
    return val


def perturbed_angles(N: int, scale: float, rng: np.random.Generator) -> np.ndarray:
    """Equally spaced angles moved by independent uniform offsets in ``[-scale, scale]``."""
    base = 2.0 * np.pi * np.arange(N) / N
    return base + rng.uniform(-scale, scale, size=N)
