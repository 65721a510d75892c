"""Expansion coefficients of ``sinc(z)**(-s)`` and of the energy expansion.

``alpha_n(s)`` is the coefficient of ``z**(2n)`` in
``(sin(pi z) / (pi z))**(-s)``. It is ``pi**(2n)`` times a polynomial in
``s`` with rational coefficients, which we build exactly from the
derivative recurrence

    alpha_n'(s) = sum_{m<n} alpha_m(s) zeta(2(n-m)) / (n-m),   alpha_n(0) = 0

using ``zeta(2k) = r_k pi**(2k)`` with rational ``r_k``.
"""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from . import specfun
from .errors import (
    CapacityError,
    ConfigurationError,
    DomainError,
    ExceptionalIndexError,
    PrecisionError,
)

ALPHA_LIMIT = 64
DIVERGENCE_DEFAULT_NMAX = 50
EXTENDED_MIN_DPS = 50


def _exact_real(s) -> Fraction:
    return Fraction(s) if not isinstance(s, Fraction) else s


@dataclass(frozen=True)
class AlphaPolynomial:
    """``alpha_n(s) = pi**(2n) * sum_j coeffs[j] * s**j``."""

    n: int
    coeffs: tuple[Fraction, ...]

    @property
    def pi_power(self) -> int:
        return 2 * self.n

    def rational_at(self, s) -> Fraction:
        """The rational factor ``alpha_n(s) / pi**(2n)`` for rational ``s``."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def _gaussian_rational_at(self, s: complex) -> tuple[Fraction, Fraction]:
        a, b = Fraction(s.real), Fraction(s.imag)
        re, im = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            re, im = re * a - im * b + c, re * b + im * a
        return re, im

    def __call__(self, s, dps: int | None = None):
        if dps:
            return _alpha_mp(self, s)
        s = specfun.as_scalar(s)
        scale = math.pi ** self.pi_power
        if isinstance(s, float):
            return float(self.rational_at(Fraction(s))) * scale
        re, im = self._gaussian_rational_at(s)
        return complex(float(re), float(im)) * scale

    def derivative_coeffs(self) -> tuple[Fraction, ...]:
        return tuple(j * c for j, c in enumerate(self.coeffs))[1:] or (Fraction(0),)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pi_power": self.pi_power,
            "rationals": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }


def _alpha_mp(poly: AlphaPolynomial, s):
    # exact Horner when s is rational, then a single rounding
    if isinstance(s, (int, float, Fraction)) and not isinstance(s, bool):
        r = poly.rational_at(_exact_real(s))
        return mpmath.mpf(r.numerator) / r.denominator * mpmath.pi ** poly.pi_power
    s = mpmath.mpmathify(s)
    acc = mpmath.mpf(0)
    for c in reversed(poly.coeffs):
        acc = acc * s + mpmath.mpf(c.numerator) / c.denominator
    return acc * mpmath.pi ** poly.pi_power


@lru_cache(maxsize=1)
def _full_table() -> tuple[AlphaPolynomial, ...]:
    weights = [None] + [specfun.zeta_even(k)[0] / k for k in range(1, ALPHA_LIMIT + 1)]
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(1, ALPHA_LIMIT + 1):
        deriv = [Fraction(0)] * n
        for m in range(n):
            w = weights[n - m]
            for j, c in enumerate(rows[m]):
                deriv[j] += w * c
        rows.append([Fraction(0)] + [c / (j + 1) for j, c in enumerate(deriv)])
    return tuple(AlphaPolynomial(n, tuple(r)) for n, r in enumerate(rows))


def alpha_table(n_max: int) -> tuple[AlphaPolynomial, ...]:
    """Exact ``alpha_0 .. alpha_{n_max}``."""
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    if n_max > ALPHA_LIMIT:
        raise CapacityError(f"alpha table is limited to n <= {ALPHA_LIMIT}")
    return _full_table()[: n_max + 1]


def alpha(n: int) -> AlphaPolynomial:
    return alpha_table(n)[n]


def alpha_eval(n: int, s, dps: int | None = None):
    """``alpha_n(s)``, exact up to the final rounding for real ``s``."""
    return alpha(n)(s, dps)


def alpha_derivative_at_odd_rational(M: int) -> Fraction:
    """``alpha_M'(2M+1) / pi**(2M)`` as an exact rational."""
    if M < 0:
        raise DomainError("M must be non-negative")
    table = alpha_table(M)
    s = 2 * M + 1
    total = Fraction(0)
    for m in range(M):
        total += table[m].rational_at(s) * specfun.zeta_even(M - m)[0] / (M - m)
    return total


def alpha_derivative_at_odd(M: int, dps: int | None = None):
    """``alpha_M'(2M+1) = sum_{m<M} alpha_m(2M+1) zeta(2(M-m)) / (M-m)``."""
    r = alpha_derivative_at_odd_rational(M)
    if dps:
        with mpmath.workdps(dps):
            return mpmath.mpf(r.numerator) / r.denominator * mpmath.pi ** (2 * M)
    return float(r) * math.pi ** (2 * M)


# --------------------------------------------------------------------------
# generalized Bernoulli cross-check


def generalized_bernoulli_alphas(n_max: int, s) -> list[complex]:
    """``alpha_n(s)`` for ``n <= n_max`` from the power series of
    ``(z/(e^z-1))**s * exp(s z/2)``, computed numerically.

    The coefficient of ``z**(2n)`` there is ``B_{2n}^{(s)}(s/2)/(2n)!`` and
    ``alpha_n(s) = (-1)**n (2 pi)**(2n)`` times it.
    """
    s = complex(specfun.as_scalar(s))
    deg = 2 * n_max
    # w(z) = (e^z - 1)/z,  log w via  k L_k = k w_k - sum_{j<k} j L_j w_{k-j}
    w = [1.0 / math.factorial(k + 1) for k in range(deg + 1)]
    L = [0.0] * (deg + 1)
    for k in range(1, deg + 1):
        acc = k * w[k]
        for j in range(1, k):
            acc -= j * L[j] * w[k - j]
        L[k] = acc / k
    F = [-s * c for c in L]
    if deg >= 1:
        F[1] += s / 2
    E = [complex(1.0)] + [0j] * deg
    for k in range(1, deg + 1):
        acc = 0j
        for j in range(1, k + 1):
            acc += j * F[j] * E[k - j]
        E[k] = acc / k
    out = []
    for n in range(n_max + 1):
        v = (-1) ** n * E[2 * n] * (2 * math.pi) ** (2 * n)
        if not cmath.isfinite(v):
            raise PrecisionError(f"series composition overflowed at n = {n}")
        out.append(v)
    return out


def generalized_bernoulli_check(n_max: int, s) -> float:
    """Largest relative difference between the recurrence table and the
    generalized-Bernoulli series for ``n <= n_max``."""
    if n_max == 0:
        return 0.0
    numeric = generalized_bernoulli_alphas(n_max, s)
    worst = 0.0
    for n in range(n_max + 1):
        exact = complex(alpha_eval(n, s))
        if exact == 0:
            d = abs(numeric[n])
        else:
            d = abs(numeric[n] - exact) / abs(exact)
        worst = max(worst, d)
    return worst


# --------------------------------------------------------------------------
# expansion coefficients c_n(s)


@dataclass(frozen=True)
class ExpansionCoefficient:
    """``c_n(s) = 2 (2 pi)**(-s) alpha_n(s) zeta(s - 2n)``.

    ``sign_hint`` is ``sign(zeta(s - 2n))`` for real ``s > 0`` and None
    otherwise.
    """

    n: int
    value: complex | float
    sign_hint: int | None = None


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def even_coefficient_rational(n: int, M: int) -> Fraction:
    """``c_n(2M)`` exactly. It is rational: the powers of pi cancel."""
    if M < 1:
        raise DomainError("M must be positive")
    if n > M:
        return Fraction(0)
    q = alpha(n).rational_at(2 * M)
    z = specfun.zeta_even(M - n)[0] if n < M else Fraction(-1, 2)
    return 2 * q * z / 2 ** (2 * M)


def c_coefficient(n: int, s, dps: int | None = None) -> ExpansionCoefficient:
    """The coefficient of ``N**(1+s-2n)`` in the energy expansion."""
    if n < 0:
        raise DomainError("n must be non-negative")
    s = specfun.as_scalar(s)
    if s == 2 * n + 1:
        raise ExceptionalIndexError(
            f"s - 2n = 1 for n = {n}: use the odd-integer (log term) expansion"
        )
    k = specfun.real_integer(s)
    sign_hint = None
    if dps:
        with mpmath.workdps(dps):
            if k is not None and k > 0 and k % 2 == 0:
                value = mpmath.mpf(even_coefficient_rational(n, k // 2))
                z = specfun.zeta(s - 2 * n, dps)
            else:
                z = specfun.zeta(s - 2 * n, dps)
                value = 2 * mpmath.power(2 * mpmath.pi, -s) * alpha_eval(n, s, dps) * z
            if isinstance(s, float) and s > 0:
                sign_hint = _sign(z)
            return ExpansionCoefficient(n, value, sign_hint)
    z = specfun.zeta(s - 2 * n)
    if isinstance(s, float) and s > 0:
        sign_hint = _sign(z)
    if k is not None and k > 0 and k % 2 == 0:
        value = float(even_coefficient_rational(n, k // 2))
    elif z == 0:
        value = 0.0 if isinstance(s, float) else 0j
    else:
        a = alpha_eval(n, s)
        if isinstance(s, float):
            value = 2.0 * (2 * math.pi) ** (-s) * a * z
        else:
            value = 2.0 * cmath.exp(-s * math.log(2 * math.pi)) * a * z
    return ExpansionCoefficient(n, value, sign_hint)


def divergence_profile(s, N: int, n_max: int = DIVERGENCE_DEFAULT_NMAX,
                       dps: int | None = None) -> list:
    """``|c_n(s) N**(-2n)|`` for ``n = 0..n_max`` in extended precision.

    Uses ``c_n(s) = (-1)^n (2/pi) sin(pi s/2) alpha_n(s) (2 pi)^(-2n)
    Gamma(2n+1-s) zeta(2n+1-s)`` so that no cancellation occurs. Even
    integer ``s`` is evaluated exactly and terminates.
    """
    if not dps or dps < EXTENDED_MIN_DPS:
        raise ConfigurationError(
            f"divergence_profile needs extended precision (dps >= {EXTENDED_MIN_DPS})"
        )
    s = specfun.as_scalar(s)
    if not isinstance(s, float) or s <= 0:
        raise DomainError("divergence_profile needs real s > 0")
    if n_max > ALPHA_LIMIT:
        raise CapacityError(f"n_max exceeds the alpha table ({ALPHA_LIMIT})")
    if N < 2:
        raise DomainError("N must be at least 2")
    k = specfun.real_integer(s)
    if specfun.odd_positive_index(s) is not None:
        raise DomainError("odd integer s has an exceptional index; no c_n there")
    out = []
    with mpmath.workdps(dps):
        if k is not None and k % 2 == 0:
            for n in range(n_max + 1):
                c = even_coefficient_rational(n, k // 2)
                out.append(abs(mpmath.mpf(c.numerator) / c.denominator) / mpmath.mpf(N) ** (2 * n))
            return out
        sn = mpmath.sin(mpmath.pi * s / 2)
        two_pi = 2 * mpmath.pi
        for n in range(n_max + 1):
            if n == 0:
                c = 2 * mpmath.power(two_pi, -s) * specfun.zeta(s, dps)
            else:
                a = 2 * n + 1 - s
                c = (-1) ** n * 2 / mpmath.pi * sn * alpha_eval(n, s, dps) \
                    * two_pi ** (-2 * n) * mpmath.gamma(a) * mpmath.zeta(a)
            out.append(abs(c) / mpmath.mpf(N) ** (2 * n))
    return out


def table_to_json(table) -> str:
    return json.dumps([p.to_dict() for p in table], indent=2)
