"""Riesz s-energy of the N-th roots of unity.

Three evaluators are provided:

* ``energy_direct``: the finite sine sum ``2^-s N sum_k sin(pi k/N)^-s``;
* ``energy_series``: the exact convergent series in incomplete zeta values;
* ``energy_asymptotic``: the truncated expansion in powers of N, including
  the ``N^2 log N`` form at odd positive integer ``s``.

plus the pieces they share: ``v_s``, ``g_constant``, ``incomplete_zeta`` and
``psi_quantity``. Complex powers follow ``a^-s = exp(-s ln a)`` with real
logarithm for ``a > 0``.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from . import coeffs, specfun
from .errors import CapacityError, DomainError, PoleError, TruncationWarning

NEAR_EXCEPTIONAL = 1e-9
SERIES_NMAX = 48
SERIES_WARN = 1e-13
METHODS = ("auto", "direct", "series", "asymptotic", "log")
QUAD_NODES = 16
QUAD_TOL = 1e-15


def _check_N(N) -> int:
    if isinstance(N, bool) or int(N) != N or N < 2:
        raise DomainError(f"N must be an integer >= 2, got {N!r}")
    return int(N)


def _cpow(base: float, expo):
    """``base**expo`` for real ``base > 0`` and real or complex exponent."""
    if isinstance(expo, complex):
        return cmath.exp(expo * math.log(base))
    return base ** expo


def _realify(value, s):
    if isinstance(s, float) and isinstance(value, complex):
        return value.real
    return value


# --------------------------------------------------------------------------
# direct evaluation


def energy_direct(s, N: int, dps: int | None = None):
    """``L_s(N) = 2^-s N sum_{k=1}^{N-1} sin(pi k/N)^-s`` for ``s != 0``.

    Uses the symmetry ``k <-> N-k`` (the middle term once for even N) and
    correctly rounded summation, so the result does not depend on
    summation order.
    """
    N = _check_N(N)
    s = specfun.as_scalar(s)
    if s == 0:
        raise DomainError("s = 0 is the logarithmic case: use energy_log")
    half = N // 2
    if dps:
        with mpmath.workdps(dps):
            terms = []
            for k in range(1, half + 1):
                w = 1 if 2 * k == N else 2
                terms.append(w * mpmath.power(mpmath.sin(mpmath.pi * k / N), -s))
            return mpmath.power(2, -s) * N * mpmath.fsum(terms)
    k = np.arange(1, half + 1, dtype=float)
    x = np.sin(np.pi * (k / N))
    w = np.full(half, 2.0)
    if N % 2 == 0:
        w[-1] = 1.0
    if isinstance(s, float):
        terms = w * x ** (-s)
        return 2.0 ** (-s) * N * math.fsum(terms)
    terms = w * np.exp(-s * np.log(x))
    total = complex(math.fsum(terms.real), math.fsum(terms.imag))
    return cmath.exp(-s * math.log(2.0)) * N * total


def energy_log(N: int) -> float:
    """Logarithmic energy ``sum_{j!=k} log 1/|z_j - z_k| = -N log N``."""
    N = _check_N(N)
    return -N * math.log(N)


def log_energy_direct(N: int) -> float:
    """``-N sum_k log(2 sin(pi k/N))`` summed numerically."""
    N = _check_N(N)
    k = np.arange(1, N, dtype=float)
    return -N * math.fsum(np.log(2.0 * np.sin(np.pi * (k / N))))


def sine_product(N: int) -> tuple[float, float]:
    """``(prod_{k=1}^{N-1} sin(pi k/N), 2^(1-N) N)``; the two agree."""
    N = _check_N(N)
    k = np.arange(1, N, dtype=float)
    logs = np.log(np.sin(np.pi * (k / N)))
    return math.exp(math.fsum(logs)), math.ldexp(float(N), 1 - N)


# --------------------------------------------------------------------------
# V_s and G_M


def v_s(s, dps: int | None = None):
    """Continuous energy ``2^-s Gamma((1-s)/2) / (sqrt(pi) Gamma(1-s/2))``,
    continued to complex ``s``; poles at ``s = 1, 3, 5, ...``."""
    s = specfun.as_scalar(s)
    if specfun.odd_positive_index(s) is not None:
        raise PoleError(f"V_s has a pole at s = {s}: use the odd-integer expansion")
    k = specfun.real_integer(s)
    if k is not None and k % 2 == 0:
        # V_0 = 1, V_{2M} = 0, V_{-2M} = binomial(2M, M)
        val = 0 if k > 0 else math.comb(-k, -k // 2)
        return mpmath.mpf(val) if dps else float(val)
    if dps:
        with mpmath.workdps(dps):
            return (mpmath.power(2, -s) * mpmath.gamma((1 - s) / 2)
                    * mpmath.rgamma(1 - s / 2) / mpmath.sqrt(mpmath.pi))
    val = _cpow(2.0, -s) * specfun.gamma((1 - s) / 2) * specfun.rgamma(1 - s / 2) \
        / math.sqrt(math.pi)
    return _realify(val, s)


def v_s_alt(s):
    """``2^-s Gamma(s/2) tan(pi s/2) / (sqrt(pi) Gamma((1+s)/2))``."""
    s = specfun.as_scalar(s)
    k = specfun.real_integer(s)
    if k is not None and (k <= 0 and k % 2 == 0 or k > 0 and k % 2 == 1):
        raise DomainError(f"the tangent form is singular at s = {k}")
    val = _cpow(2.0, -s) * specfun.gamma(s / 2) * cmath.tan(math.pi * s / 2) \
        * specfun.rgamma((1 + s) / 2) / math.sqrt(math.pi)
    return _realify(val, s)


def v_s_series(s, n_max: int = 40):
    """``pi^-s sum_{n<=n_max} alpha_n(s) 4^-n / (2n - s + 1)``.

    Terms decay like ``4^-n``; a TruncationWarning is issued when the last
    term is not negligible against the sum.
    """
    s = specfun.as_scalar(s)
    if specfun.odd_positive_index(s) is not None:
        raise PoleError(f"V_s has a pole at s = {s}")
    terms = [coeffs.alpha_eval(n, s) * 0.25 ** n / (2 * n - s + 1) for n in range(n_max + 1)]
    total = complex(math.fsum(complex(t).real for t in terms),
                    math.fsum(complex(t).imag for t in terms))
    val = _cpow(math.pi, -s) * total
    last = abs(_cpow(math.pi, -s) * terms[-1])
    if n_max > 0 and last > 1e-13 * abs(val):
        warnings.warn(TruncationWarning(
            f"V_s series truncated at n = {n_max}, last term {last:.3e}", last))
    return _realify(val, s)


def _half_poch_over_factorial(M: int) -> Fraction:
    return Fraction(math.prod(range(1, 2 * M, 2)), 2 ** M * math.factorial(M))


def log_coefficient(M: int, dps: int | None = None):
    """Coefficient ``(1/pi) (1/2)_M / (4^M M!)`` of ``N^2 log N`` at ``s = 2M+1``."""
    r = _half_poch_over_factorial(M) / 4 ** M
    if dps:
        with mpmath.workdps(dps):
            return mpmath.mpf(r.numerator) / r.denominator / mpmath.pi
    return float(r) / math.pi


def g_constant(M: int, dps: int | None = None):
    """Constant ``G_M`` from digamma values and ``alpha_M'(2M+1)``.

    ``G_M = 4^-M/pi (1/2)_M/M! [alpha_M'(2M+1)/alpha_M(2M+1)
    + psi(M+1)/2 - psi(M+1/2)/2 - log pi]``
    """
    if M < 0:
        raise DomainError("M must be non-negative")
    if M > coeffs.ALPHA_LIMIT:
        raise CapacityError(f"M exceeds the alpha table ({coeffs.ALPHA_LIMIT})")
    h = _half_poch_over_factorial(M)
    # alpha_M(2M+1) = pi^(2M) (1/2)_M / M!, so the pi powers cancel in the ratio
    ratio = coeffs.alpha_derivative_at_odd_rational(M) / coeffs.alpha(M).rational_at(2 * M + 1)
    if dps:
        with mpmath.workdps(dps):
            br = (mpmath.mpf(ratio.numerator) / ratio.denominator
                  + mpmath.digamma(M + 1) / 2 - mpmath.digamma(mpmath.mpf(M) + 0.5) / 2
                  - mpmath.log(mpmath.pi))
            return mpmath.mpf(h.numerator) / h.denominator / 4 ** M / mpmath.pi * br
    br = float(ratio) + 0.5 * specfun.digamma(M + 1) - 0.5 * specfun.digamma(M + 0.5) \
        - math.log(math.pi)
    return float(h) / 4 ** M / math.pi * br


def g_constant_series(M: int, n_max: int = 60) -> float:
    """``G_M`` from its defining series at ``s = 2M+1``:
    ``alpha_M(s) log(1/2) / (2^(s-1) pi^s) + pi^-s sum_{n!=M} alpha_n(s) 4^-n / (2(n-M))``."""
    s = 2 * M + 1
    head = coeffs.alpha_eval(M, s) * math.log(0.5) / (2.0 ** (s - 1) * math.pi ** s)
    terms = [coeffs.alpha_eval(n, s) * 0.25 ** n / (2 * (n - M))
             for n in range(n_max + 1) if n != M]
    return head + math.fsum(terms) / math.pi ** s


# --------------------------------------------------------------------------
# incomplete zeta


@dataclass(frozen=True)
class IncompleteZetaParams:
    y: float
    p: int

    def __post_init__(self):
        if not (math.isfinite(self.y) and self.y >= 1):
            raise DomainError(f"incomplete zeta needs y >= 1, got {self.y}")
        if int(self.p) != self.p or self.p < 0:
            raise DomainError(f"p must be a non-negative integer, got {self.p}")


def _gl_panel_sums(p: int, sigma, ref: float, lo: np.ndarray, width: np.ndarray,
                   order: int) -> np.ndarray:
    # sum over nodes of C_{2p+1}(x) (x/ref)^-sigma x^(-2p-1) on [lo, lo+width]
    t, w = specfun.gauss_legendre_unit(order)
    tt = t[None, :] * width[:, None]
    x = lo[:, None] + tt
    c = specfun.bernoulli_poly(2 * p + 1, tt)  # lo is an integer: frac(x) = tt
    logx = np.log(x)
    f = c * np.exp(-sigma * (logx - math.log(ref)) - (2 * p + 1) * logx)
    return (f * w[None, :]).sum(axis=1) * width


def periodic_bernoulli_integral(p: int, sigma, y: float, ref: float = 1.0,
                                order: int = QUAD_NODES, tol: float = QUAD_TOL):
    """``int_1^y C_{2p+1}(x) (x/ref)^-sigma x^(-2p-1) dx``.

    Integrated panel by panel between consecutive integers (the integrand
    has corners there) with a Gauss-Legendre rule of ``order`` nodes; a
    panel is re-done with ``2*order`` nodes when the two rules disagree by
    more than ``tol`` relative to the panel sum.
    """
    ny = math.floor(y)
    lo = np.arange(1, ny, dtype=float)
    width = np.ones_like(lo)
    if y > ny:
        lo = np.append(lo, float(ny))
        width = np.append(width, y - ny)
    if lo.size == 0:
        return 0.0 if not isinstance(sigma, complex) else 0j
    coarse = _gl_panel_sums(p, sigma, ref, lo, width, order)
    fine = _gl_panel_sums(p, sigma, ref, lo, width, 2 * order)
    scale = np.abs(fine) + 1e-300
    panels = np.where(np.abs(coarse - fine) > tol * scale, fine, coarse)
    if np.iscomplexobj(panels):
        return complex(math.fsum(panels.real), math.fsum(panels.imag))
    return math.fsum(panels)


def _em_head(s, p: int):
    """``1/(s-1) + 1/2 + sum_{k<=p} B_2k/(2k)! (s)_{2k-1}``."""
    b = specfun.bernoulli_table().numbers
    if 2 * p > len(b) - 1:
        raise CapacityError(f"p = {p} exceeds the Bernoulli table")
    acc = 1 / (s - 1) + 0.5
    for k in range(1, p + 1):
        acc += float(b[2 * k]) / math.factorial(2 * k) * specfun.pochhammer(s, 2 * k - 1)
    return acc


def incomplete_zeta(s, y: float, p: int, order: int = QUAD_NODES):
    """``zeta_{y,p}(s)``: the Euler-Maclaurin form of zeta with the
    remainder integral stopped at ``y``.

    ``1/(s-1) + 1/2 + sum_{k=1}^p B_2k/(2k)! (s)_{2k-1}
    - (s)_{2p+1}/(2p+1)! int_1^y C_{2p+1}(x) x^(-s-2p-1) dx``
    """
    params = IncompleteZetaParams(float(y), p)
    s = specfun.as_scalar(s)
    if s == 1:
        raise PoleError("s = 1: use psi_quantity")
    integral = periodic_bernoulli_integral(params.p, s, params.y, 1.0, order)
    val = _em_head(s, params.p) - specfun.pochhammer(s, 2 * params.p + 1) \
        / math.factorial(2 * params.p + 1) * integral
    return _realify(val, s)


def incomplete_zeta_bound(s, y: float, p: int) -> float:
    """Upper bound on ``|zeta_{y,p}(s) - zeta(s)|``, valid for ``Re s + 2p > 0``:
    ``|(s)_{2p+1} B_2p| / ((2p)! (Re s + 2p)) y^(-Re s - 2p)``."""
    s = specfun.as_scalar(s)
    sr = complex(s).real
    if sr + 2 * p <= 0:
        raise DomainError("the tail bound needs Re s + 2p > 0")
    b = specfun.bernoulli_number(2 * p)
    return abs(specfun.pochhammer(s, 2 * p + 1) * float(b)) \
        / (math.factorial(2 * p) * (sr + 2 * p)) * y ** (-sr - 2 * p)


def psi_quantity(y: float, p: int, order: int = QUAD_NODES) -> float:
    """``Psi_{y,p} = 1/2 + sum_{k<=p} B_2k/(2k) - int_1^y C_{2p+1}(x) x^(-2p-2) dx``,
    which tends to Euler's constant as ``y -> oo``."""
    params = IncompleteZetaParams(float(y), p)
    b = specfun.bernoulli_table().numbers
    head = 0.5 + math.fsum(float(b[2 * k]) / (2 * k) for k in range(1, params.p + 1))
    return head - periodic_bernoulli_integral(params.p, 1.0, params.y, 1.0, order)


def _scaled_incomplete_term(sigma, N: int, p: int) -> complex | float:
    """``zeta_{N/2,p}(sigma) * N^(1+sigma)`` without overflow."""
    y = N / 2
    integral = periodic_bernoulli_integral(p, sigma, y, float(N))
    Ns = _cpow(float(N), sigma)
    head = _em_head(sigma, p) * Ns if Ns != 0 else 0.0
    return N * (head - specfun.pochhammer(sigma, 2 * p + 1) / math.factorial(2 * p + 1) * integral)


# --------------------------------------------------------------------------
# exact series


def energy_series(s, N: int, p: int = 3, n_max: int = SERIES_NMAX, tol: float = 1e-17):
    """``L_s(N)`` from the exact series in incomplete zeta values.

    General ``s``: ``V_s N^2 + 2(2pi)^-s sum_n alpha_n(s) zeta_{N/2,p}(s-2n) N^(1+s-2n)``.
    For ``s = 2M+1`` the ``n = M`` term is replaced by
    ``2^(1-s) alpha_M(s) pi^-s N^2 (log N + Psi_{N/2,p}) + G_M N^2``.
    The sum stops once two consecutive terms fall below ``tol`` times the
    partial sum.
    """
    N = _check_N(N)
    s = specfun.as_scalar(s)
    if s == 0:
        raise DomainError("s = 0 is the logarithmic case: use energy_log")
    if n_max > coeffs.ALPHA_LIMIT:
        raise CapacityError(f"n_max exceeds the alpha table ({coeffs.ALPHA_LIMIT})")
    M = specfun.odd_positive_index(s)
    if M is None:
        lead = v_s(s) * N * N
    else:
        lead = (g_constant(M) + log_coefficient(M) * (math.log(N) + psi_quantity(N / 2, p))) * N * N
    pref = 2.0 * _cpow(2 * math.pi, -s)
    # for integer s some terms with small n vanish exactly; no stopping there
    n_min = max(0, math.ceil((complex(s).real + 2 * p) / 2)) + 2
    parts = []
    quiet = 0
    last = 0.0
    for n in range(n_max + 1):
        if n == M:
            continue
        term = pref * coeffs.alpha_eval(n, s) * _scaled_incomplete_term(s - 2 * n, N, p)
        parts.append(complex(term))
        last = abs(term)
        partial = abs(sum(parts) + lead)
        if n >= n_min and last <= tol * partial:
            quiet += 1
            if quiet >= 2:
                break
        else:
            quiet = 0
    total = complex(lead) + complex(math.fsum(t.real for t in parts),
                                    math.fsum(t.imag for t in parts))
    if quiet < 2 and last > SERIES_WARN * abs(total):
        warnings.warn(TruncationWarning(
            f"series for L_s(N) cut at n = {n_max}, last term {last:.3e}", last))
    return _realify(total, s)


# --------------------------------------------------------------------------
# asymptotic expansion


@dataclass(frozen=True)
class ExpansionTerm:
    n: int
    coefficient: object
    exponent: object  # 1 + s - 2n


@dataclass(frozen=True)
class Expansion:
    """Truncated expansion of ``L_s(N)`` in powers of N.

    ``quadratic`` multiplies ``N^2``; ``log_quadratic`` multiplies
    ``N^2 log N`` and is present only for odd positive integer ``s``.
    ``exact`` holds rational coefficients when the expansion terminates
    (even integer ``s``), in which case evaluation at integer N is exact
    up to the final rounding.
    """

    s: object
    p: int
    quadratic: object
    terms: tuple[ExpansionTerm, ...]
    remainder_order: float
    log_quadratic: object = None
    dps: int | None = None
    exact: tuple[tuple[int, Fraction], ...] | None = field(default=None, repr=False)

    @property
    def leading(self):
        if self.log_quadratic is None:
            return None
        return (self.log_quadratic, self.quadratic)

    @property
    def terminating(self) -> bool:
        return self.exact is not None

    def exact_value(self, N: int) -> Fraction:
        if self.exact is None:
            raise DomainError("expansion is not exact for this s")
        return sum((c * Fraction(N) ** e for e, c in self.exact), Fraction(0))

    def evaluate(self, N: int):
        N = _check_N(N)
        if self.exact is not None:
            v = self.exact_value(N)
            if self.dps:
                with mpmath.workdps(self.dps):
                    return mpmath.mpf(v.numerator) / v.denominator
            return float(v)
        if self.dps:
            with mpmath.workdps(self.dps):
                Nm = mpmath.mpf(N)
                total = self.quadratic * Nm ** 2
                if self.log_quadratic is not None:
                    total += self.log_quadratic * Nm ** 2 * mpmath.log(Nm)
                total += mpmath.fsum(t.coefficient * mpmath.power(Nm, t.exponent) for t in self.terms)
                return total
        parts = [complex(self.quadratic) * N * N]
        if self.log_quadratic is not None:
            parts.append(complex(self.log_quadratic) * N * N * math.log(N))
        parts.extend(complex(t.coefficient) * _cpow(float(N), t.exponent) for t in self.terms)
        total = complex(math.fsum(z.real for z in parts), math.fsum(z.imag for z in parts))
        return _realify(total, self.s)

    def contributions(self, N: int) -> list[dict]:
        """Per-term values at N (double precision), largest power first."""
        N = _check_N(N)
        out = []
        if self.log_quadratic is not None:
            lq = complex(self.log_quadratic)
            out.append({"term": "N^2 log N", "n": None, "coefficient": _pair(lq),
                        "exponent": [2.0, 0.0], "log_power": 1,
                        "value": _pair(lq * N * N * math.log(N))})
        q = complex(self.quadratic)
        out.append({"term": "N^2", "n": None, "coefficient": _pair(q), "exponent": [2.0, 0.0],
                    "log_power": 0, "value": _pair(q * N * N)})
        for t in self.terms:
            c = complex(t.coefficient)
            out.append({"term": f"c_{t.n} N^(1+s-{2 * t.n})", "n": t.n, "coefficient": _pair(c),
                        "exponent": _pair(t.exponent), "log_power": 0,
                        "value": _pair(c * _cpow(float(N), complex(t.exponent)))})
        return out

    def to_dict(self) -> dict:
        return {
            "quadratic": _pair(self.quadratic),
            "log_quadratic": None if self.log_quadratic is None else _pair(self.log_quadratic),
            "terms": [{"n": t.n, "coefficient": _pair(t.coefficient), "exponent": _pair(t.exponent)}
                      for t in self.terms],
            "remainder_order": self.remainder_order,
        }


def _mp_fraction(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def asymptotic_expansion(s, p: int, dps: int | None = None) -> Expansion:
    """Coefficients of the expansion truncated after ``n = p``."""
    s = specfun.as_scalar(s)
    if s == 0:
        raise DomainError("s = 0 is the logarithmic case: use energy_log")
    if p < 0:
        raise DomainError("p must be non-negative")
    if p > coeffs.ALPHA_LIMIT:
        raise CapacityError(f"p exceeds the alpha table ({coeffs.ALPHA_LIMIT})")
    remainder = -1 + complex(s).real - 2 * p
    k = specfun.real_integer(s)
    M = specfun.odd_positive_index(s)
    if M is None:
        for m in range(0, max(0, int(abs(complex(s)))) // 2 + 2):
            if 0 < abs(s - (2 * m + 1)) < NEAR_EXCEPTIONAL:
                raise DomainError(
                    f"s = {s} is within {NEAR_EXCEPTIONAL} of the odd integer {2 * m + 1}; "
                    "V_s and c_m blow up there: evaluate at the odd integer instead")
    if k is not None and k % 2 == 0:
        if k < 0:
            exact = ((2, Fraction(math.comb(-k, -k // 2))),)
            terms = tuple(ExpansionTerm(n, 0.0, 1.0 + s - 2 * n) for n in range(p + 1))
            quad = float(exact[0][1])
        else:
            Mh = k // 2
            ex = [(1 + k - 2 * n, coeffs.even_coefficient_rational(n, Mh)) for n in range(min(p, Mh) + 1)]
            exact = tuple(ex) if p >= Mh else None
            terms = tuple(ExpansionTerm(n, float(coeffs.even_coefficient_rational(n, Mh)), 1.0 + s - 2 * n)
                          for n in range(p + 1))
            quad = 0.0
        if dps:
            with mpmath.workdps(dps):
                terms = tuple(ExpansionTerm(t.n, _mp_fraction(coeffs.even_coefficient_rational(t.n, k // 2))
                                            if k > 0 else mpmath.mpf(0), mpmath.mpf(t.exponent))
                              for t in terms)
                quad = mpmath.mpf(quad)
        return Expansion(s, p, quad, terms, remainder, None, dps, exact)

    ctx = mpmath.workdps(dps) if dps else _nullctx()
    with ctx:
        terms = []
        for n in range(p + 1):
            if n == M:
                continue
            c = coeffs.c_coefficient(n, s, dps).value
            expo = (mpmath.mpmathify(s) if dps else s) + 1 - 2 * n
            terms.append(ExpansionTerm(n, c, expo))
        if M is None:
            return Expansion(s, p, v_s(s, dps), tuple(terms), remainder, None, dps)
        lc = log_coefficient(M, dps)
        gam = mpmath.euler if dps else specfun.EULER_GAMMA
        quad = g_constant(M, dps) + lc * gam
        return Expansion(s, p, quad, tuple(terms), remainder, lc, dps)


class _nullctx:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def energy_asymptotic(s, N: int, p: int = 3, dps: int | None = None):
    """Truncated asymptotic value of ``L_s(N)`` and the expansion used.

    Returns ``(value, expansion)``; the error is ``O(N^(-1 + Re s - 2p))``.
    """
    exp = asymptotic_expansion(s, p, dps)
    return exp.evaluate(N), exp


def exact_even_rational(M: int, N: int) -> Fraction:
    """``L_{2M}(N)`` as an exact rational (a polynomial in N)."""
    if M < 1:
        raise DomainError("exact_even needs a positive even s")
    N = _check_N(N)
    return sum((coeffs.even_coefficient_rational(n, M) * Fraction(N) ** (1 + 2 * M - 2 * n)
                for n in range(M + 1)), Fraction(0))


def exact_even(s, N: int) -> float:
    """``L_s(N)`` for ``s = 2, 4, 6, ...`` from the terminating expansion."""
    s = specfun.as_scalar(s)
    k = specfun.real_integer(s)
    if k is None or k <= 0 or k % 2:
        raise DomainError(f"exact_even needs a positive even integer s, got {s}")
    return float(exact_even_rational(k // 2, N))


def riesz_energy(s, N: int, method: str = "auto", p: int = 3, n_max: int = SERIES_NMAX,
                 dps: int | None = None):
    """Dispatch to one of the evaluators.

    ``method="auto"`` uses the log energy at ``s = 0`` and the direct sum
    otherwise; ``"log"`` is only valid at ``s = 0``.
    """
    s = specfun.as_scalar(s)
    if method == "auto":
        method = "log" if s == 0 else "direct"
    if method == "log":
        if s != 0:
            raise DomainError("method 'log' needs s = 0")
        return energy_log(N)
    if method == "direct":
        return energy_direct(s, N, dps)
    if method == "series":
        return energy_series(s, N, p, n_max)
    if method == "asymptotic":
        return energy_asymptotic(s, N, p, dps)[0]
    raise DomainError(f"unknown method {method!r}")
