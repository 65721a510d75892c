"""Special functions over complex arguments and exact Bernoulli machinery.

Double precision is the default. Functions that accept ``dps`` switch to
mpmath at that many decimal digits and return mpmath numbers; callers
that continue computing with those numbers should do so inside
``mpmath.workdps(dps)``.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Number

import mpmath
import numpy as np

from .errors import CapacityError, DomainError, PoleError

DEFAULT_TABLE_SIZE = 64
EULER_GAMMA = 0.57721566490153286061

_SQRT_2PI = math.sqrt(2.0 * math.pi)
_LOG_2PI = math.log(2.0 * math.pi)

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


# --------------------------------------------------------------------------
# scalars

_COMPLEX_RE = re.compile(
    r"""^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?
         (?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)?$""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex | float:
    """Parse ``"a"``, ``"a+bi"``, ``"a-bi"`` or ``"bi"`` (no spaces).

    A zero imaginary part collapses to a float, so ``"1+0i"`` is the
    real number 1.
    """
    if not text or text != text.strip() or " " in text:
        raise DomainError(f"cannot parse complex number {text!r}")
    m = _COMPLEX_RE.match(text)
    if m is None or (m.group("re") is None and m.group("im") is None):
        # bare imaginary like "2i" or "-i"
        m2 = re.match(r"^([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i$", text)
        if m2 is None:
            raise DomainError(f"cannot parse complex number {text!r}")
        im = m2.group(1)
        return as_scalar(complex(0.0, _coef(im)))
    re_part = float(m.group("re")) if m.group("re") else 0.0
    im_part = _coef(m.group("im")) if m.group("im") is not None else 0.0
    return as_scalar(complex(re_part, im_part))


def _coef(tok: str) -> float:
    if tok in ("", "+"):
        return 1.0
    if tok == "-":
        return -1.0
    return float(tok)


def as_scalar(s) -> complex | float:
    """Coerce ``s`` to a Python float (if real) or complex; reject NaN/inf."""
    if isinstance(s, str):
        return parse_complex(s)
    if isinstance(s, (mpmath.mpf, mpmath.mpc)):
        s = complex(s)
    elif isinstance(s, Fraction):
        s = float(s)
    elif not isinstance(s, Number) and not isinstance(s, np.generic):
        raise DomainError(f"not a number: {s!r}")
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {s!r}")
    if z.imag == 0.0:
        return float(z.real)
    return z


def is_real(s) -> bool:
    return isinstance(s, float) or (isinstance(s, (int, Fraction)) and not isinstance(s, bool))


def real_integer(s) -> int | None:
    """``int(s)`` if ``s`` is exactly a real integer, else None."""
    if isinstance(s, complex):
        if s.imag != 0.0:
            return None
        s = s.real
    if isinstance(s, (mpmath.mpc,)):
        if s.imag != 0:
            return None
        s = s.real
    if isinstance(s, int):
        return s
    f = float(s)
    if f.is_integer():
        return int(f)
    return None


def odd_positive_index(s) -> int | None:
    """M if ``s == 2M + 1`` exactly for an integer M >= 0, else None."""
    k = real_integer(s)
    if k is not None and k > 0 and k % 2 == 1:
        return (k - 1) // 2
    return None


# --------------------------------------------------------------------------
# Bernoulli numbers and polynomials


@dataclass(frozen=True)
class BernoulliTable:
    """Exact Bernoulli numbers ``B_0..B_size`` and polynomial rows.

    ``polynomials[n][k]`` is the coefficient of ``x**k`` in ``B_n(x)`` for
    ``n <= size + 1``.
    """

    numbers: tuple[Fraction, ...]
    polynomials: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.numbers) - 1

    @property
    def even_numbers(self) -> tuple[Fraction, ...]:
        return self.numbers[::2]


@lru_cache(maxsize=None)
def bernoulli_table(size: int = DEFAULT_TABLE_SIZE) -> BernoulliTable:
    if size < 1:
        raise DomainError("table size must be at least 1")
    nums = [Fraction(1)]
    for m in range(1, size + 2):
        acc = sum(math.comb(m + 1, k) * nums[k] for k in range(m))
        nums.append(-acc / (m + 1))
    polys = tuple(
        tuple(math.comb(n, k) * nums[n - k] for k in range(n + 1))
        for n in range(size + 2)
    )
    return BernoulliTable(tuple(nums[: size + 1]), polys)


def bernoulli_number(k: int, size: int = DEFAULT_TABLE_SIZE) -> Fraction:
    """Exact ``B_k`` with ``B_1 = -1/2``."""
    if k < 0:
        raise DomainError("Bernoulli index must be non-negative")
    if k > size:
        raise CapacityError(f"B_{k} exceeds the table size {size}")
    return bernoulli_table(size).numbers[k]


@lru_cache(maxsize=None)
def _poly_float_coeffs(n: int, size: int) -> np.ndarray:
    # highest degree first, for np.polyval
    return np.array([float(c) for c in reversed(bernoulli_table(size).polynomials[n])])


def bernoulli_poly(n: int, x, size: int = DEFAULT_TABLE_SIZE):
    """``B_n(x)``; exact for int/Fraction ``x``, float (or ndarray) otherwise."""
    if n < 0:
        raise DomainError("Bernoulli index must be non-negative")
    if n > size + 1:
        raise CapacityError(f"B_{n}(x) exceeds the table size {size}")
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        row = bernoulli_table(size).polynomials[n]
        acc = Fraction(0)
        for c in reversed(row):
            acc = acc * x + c
        return acc
    return np.polyval(_poly_float_coeffs(n, size), x) if isinstance(x, np.ndarray) \
        else float(np.polyval(_poly_float_coeffs(n, size), float(x)))


def periodic_bernoulli(n: int, x, size: int = DEFAULT_TABLE_SIZE):
    """``C_n(x) = B_n(x - floor(x))``."""
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return bernoulli_poly(n, x - math.floor(x), size)
    if isinstance(x, np.ndarray):
        return bernoulli_poly(n, x - np.floor(x), size)
    x = float(x)
    return bernoulli_poly(n, x - math.floor(x), size)


# --------------------------------------------------------------------------
# elementary products


def pochhammer(a, m: int):
    """Rising factorial ``a (a+1) ... (a+m-1)``; ``(a)_0 = 1``.

    Works for any type supporting ``+`` and ``*`` (float, complex,
    Fraction, mpmath numbers).
    """
    if m < 0:
        raise DomainError("Pochhammer length must be non-negative")
    out = 1
    for j in range(m):
        out = out * (a + j)
    return out


# --------------------------------------------------------------------------
# gamma family


def _nonpositive_integer(z) -> bool:
    k = real_integer(z)
    return k is not None and k <= 0


def _lanczos_log_gamma(z: complex) -> complex:
    # valid for Re z >= 1/2
    z = z - 1
    x = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        x += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * _LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def _lanczos_gamma(z: complex) -> complex:
    if abs(z) > 140:
        return cmath.exp(_lanczos_log_gamma(z))
    z = z - 1
    x = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        x += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (z + 0.5) * cmath.exp(-t) * x


def gamma(z, dps: int | None = None):
    """Gamma function; reflection is used for ``Re z < 1/2``."""
    if dps:
        with mpmath.workdps(dps):
            if _nonpositive_integer(z):
                raise PoleError(f"gamma has a pole at {z}")
            return mpmath.gamma(z)
    z = as_scalar(z)
    if _nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    if isinstance(z, float):
        return math.gamma(z)
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * _lanczos_gamma(1 - z))
    return _lanczos_gamma(z)


def rgamma(z, dps: int | None = None):
    """``1/Gamma(z)``, which is entire: exactly 0 at the poles of Gamma."""
    if _nonpositive_integer(z):
        return mpmath.mpf(0) if dps else 0.0
    g = gamma(z, dps)
    return 1 / g


def log_gamma(z) -> complex | float:
    """A logarithm of Gamma (not necessarily the principal branch for
    complex ``z``); intended for exponentiation."""
    z = as_scalar(z)
    if _nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    if isinstance(z, float):
        if z > 0:
            return math.lgamma(z)
        z = complex(z)
    if z.real < 0.5:
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - _lanczos_log_gamma(1 - z)
    return _lanczos_log_gamma(z)


def digamma(x, dps: int | None = None):
    """Digamma ``psi(x)`` for real ``x > 0``."""
    if dps:
        with mpmath.workdps(dps):
            if x <= 0:
                raise DomainError("digamma is only provided for x > 0")
            return mpmath.digamma(x)
    x = float(x)
    if not math.isfinite(x) or x <= 0:
        raise DomainError("digamma is only provided for x > 0")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    b = bernoulli_table().numbers
    x2 = 1.0 / (x * x)
    series = 0.0
    xp = x2
    for k in range(1, 9):
        series += float(b[2 * k]) / (2 * k) * xp
        xp *= x2
    return acc + math.log(x) - 0.5 / x - series


# --------------------------------------------------------------------------
# Riemann zeta


def zeta_even(m: int) -> tuple[Fraction, int]:
    """``zeta(2m) = r * pi**(2m)``; returns ``(r, 2m)`` exactly."""
    if m < 1:
        raise DomainError("zeta_even needs m >= 1")
    b = bernoulli_number(2 * m, max(DEFAULT_TABLE_SIZE, 2 * m))
    r = (-1) ** (m + 1) * b * 2 ** (2 * m) / (2 * math.factorial(2 * m))
    return r, 2 * m


def _zeta_em(s: complex, terms: int, corrections: int) -> complex:
    b = bernoulli_table(max(DEFAULT_TABLE_SIZE, 2 * corrections)).numbers
    M = terms
    head = [n ** (-s) for n in range(1, M)]
    acc = complex(math.fsum(h.real for h in head), math.fsum(h.imag for h in head))
    logM = math.log(M)
    Ms = cmath.exp(-s * logM)
    acc += M * Ms / (s - 1) + 0.5 * Ms
    poch = s  # (s)_{2k-1}
    Mp = Ms / M  # M**(-s-2k+1) for k = 1
    for k in range(1, corrections + 1):
        acc += float(b[2 * k]) / math.factorial(2 * k) * poch * Mp
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        Mp /= M * M
    return acc


def zeta(s, dps: int | None = None, terms: int = 32, corrections: int = 16):
    """Riemann zeta for complex ``s != 1``.

    Euler-Maclaurin tail on ``terms`` partial-sum terms with
    ``corrections`` Bernoulli corrections for ``Re s >= -1/2``; the
    functional equation otherwise. Negative even integers give an exact
    zero, positive even integers go through the exact ``B_{2m}`` formula.
    """
    k = real_integer(s)
    if k == 1:
        raise PoleError("zeta has a pole at s = 1")
    if dps:
        with mpmath.workdps(dps):
            if k is not None and k < 0 and k % 2 == 0:
                return mpmath.mpf(0)
            if k is not None and k > 0 and k % 2 == 0:
                r, e = zeta_even(k // 2)
                return mpmath.mpf(r.numerator) / r.denominator * mpmath.pi ** e
            return mpmath.zeta(s)
    s = as_scalar(s)
    if k is not None:
        if k == 0:
            return -0.5
        if k < 0 and k % 2 == 0:
            return 0.0
        if k < 0 and 1 - k <= DEFAULT_TABLE_SIZE:
            return float(-bernoulli_number(1 - k) / (1 - k))
        if k > 0 and k % 2 == 0 and k <= DEFAULT_TABLE_SIZE:
            r, e = zeta_even(k // 2)
            return float(r) * math.pi ** e
    z = complex(s)
    if z.real < -0.5:
        # functional equation: zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
        logf = z * math.log(2.0) + (z - 1) * math.log(math.pi) + log_gamma(1 - z)
        val = cmath.exp(logf) * cmath.sin(math.pi * z / 2) * _zeta_em(1 - z, terms, corrections)
    else:
        val = _zeta_em(z, terms, corrections)
    if isinstance(s, float):
        return val.real
    return val


# --------------------------------------------------------------------------
# Gauss-Legendre rules on [0, 1]


@lru_cache(maxsize=None)
def gauss_legendre_unit(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the ``order``-point Gauss-Legendre rule on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w
