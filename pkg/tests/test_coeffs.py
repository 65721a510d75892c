import json
import math
from fractions import Fraction

import mpmath
import pytest

from riesz_circle import coeffs
from riesz_circle.errors import CapacityError, ConfigurationError, DomainError, ExceptionalIndexError

PI2 = math.pi ** 2


def test_alpha_low_orders():
    a0, a1, a2 = coeffs.alpha_table(2)
    assert a0.coeffs == (Fraction(1),)
    assert a1.coeffs == (Fraction(0), Fraction(1, 6))
    assert a2.coeffs == (Fraction(0), Fraction(1, 180), Fraction(1, 72))
    assert a2.pi_power == 4


def test_alpha_table_structure():
    for a in coeffs.alpha_table(20)[1:]:
        assert a.coeffs[0] == 0
        assert len(a.coeffs) == a.n + 1
        assert a.coeffs[-1] > 0
        assert all(q >= 0 for q in a.coeffs)


def test_alpha_capacity():
    with pytest.raises(CapacityError):
        coeffs.alpha_table(coeffs.ALPHA_LIMIT + 1)


@pytest.mark.parametrize("n,s,want", [
    (2, 0, 0.0), (2, 4, 11 * math.pi ** 4 / 45), (1, 2, PI2 / 3), (1, 3, PI2 / 2), (0, 1 + 2j, 1.0),
])
def test_alpha_eval(n, s, want):
    assert coeffs.alpha_eval(n, s) == pytest.approx(want, rel=1e-15, abs=0)


def test_alpha_rational_exact():
    assert coeffs.alpha(2).rational_at(4) == Fraction(11, 45)
    for M in range(11):
        half = Fraction(math.prod(range(1, 2 * M, 2)), 2 ** M)
        assert coeffs.alpha(M).rational_at(2 * M + 1) == half / math.factorial(M)


def test_alpha_complex_eval():
    a = coeffs.alpha(3)
    s = 0.5 + 1.3j
    want = sum(float(q) * s ** j for j, q in enumerate(a.coeffs)) * math.pi ** 6
    assert abs(a(s) - want) < 1e-13 * abs(want)


def test_alpha_extended():
    with mpmath.workdps(50):
        v = coeffs.alpha_eval(2, 4, dps=50)
        assert abs(v - 11 * mpmath.pi ** 4 / 45) < mpmath.mpf(10) ** -45


@pytest.mark.parametrize("M,want", [
    (0, 0.0), (1, PI2 / 6), (2, math.pi ** 4 / 180 + 5 * math.pi ** 4 / 36),
])
def test_alpha_derivative_at_odd(M, want):
    assert coeffs.alpha_derivative_at_odd(M) == pytest.approx(want, rel=1e-15, abs=0)


def test_alpha_derivative_rational_matches_poly():
    for M in range(1, 8):
        a = coeffs.alpha(M)
        direct = sum(j * q * Fraction(2 * M + 1) ** (j - 1) for j, q in enumerate(a.coeffs) if j)
        assert coeffs.alpha_derivative_at_odd_rational(M) == direct


@pytest.mark.parametrize("s", [0.5, -1.5, 3.7, 2 + 1j])
def test_generalized_bernoulli_check(s):
    assert coeffs.generalized_bernoulli_check(12, s) < 1e-10


def test_generalized_bernoulli_trivial():
    assert coeffs.generalized_bernoulli_check(0, 2.5) == 0.0


def test_c_coefficient_examples():
    assert coeffs.c_coefficient(1, 2).value == pytest.approx(-1 / 12, rel=1e-15)
    c = coeffs.c_coefficient(2, 3)
    assert c.value < 0 and c.sign_hint == -1
    assert coeffs.c_coefficient(3, 4).value == 0.0
    assert coeffs.c_coefficient(0, 0.5).sign_hint == -1


def test_c_coefficient_exceptional():
    with pytest.raises(ExceptionalIndexError):
        coeffs.c_coefficient(1, 3)
    with pytest.raises(DomainError):
        coeffs.c_coefficient(-1, 0.5)


def test_even_coefficient_rational():
    # L_2(N) = N^3/12 - N/12
    assert coeffs.even_coefficient_rational(0, 1) == Fraction(1, 12)
    assert coeffs.even_coefficient_rational(1, 1) == Fraction(-1, 12)
    # L_4(N) = (N^5 + 10 N^3 - 11 N) / 720
    assert [coeffs.even_coefficient_rational(n, 2) for n in range(4)] == \
        [Fraction(1, 720), Fraction(10, 720), Fraction(-11, 720), 0]


def test_divergence_profile_grows():
    prof = coeffs.divergence_profile(0.5, 2, 50, dps=60)
    assert len(prof) == 51
    assert max(prof[45:]) > 1e3 * max(prof[:6])


def test_divergence_profile_terminates_for_even():
    prof = coeffs.divergence_profile(2.0, 2, 10, dps=50)
    assert all(v == 0 for v in prof[2:])
    assert prof[1] != 0


def test_divergence_profile_single_entry():
    with mpmath.workdps(50):
        prof = coeffs.divergence_profile(0.5, 3, 0, dps=50)
        want = abs(2 * mpmath.power(2 * mpmath.pi, -0.5) * mpmath.zeta(0.5))
        assert len(prof) == 1 and abs(prof[0] - want) < mpmath.mpf(10) ** -45


def test_divergence_profile_preconditions():
    with pytest.raises(ConfigurationError):
        coeffs.divergence_profile(0.5, 2)
    with pytest.raises(ConfigurationError):
        coeffs.divergence_profile(0.5, 2, dps=30)
    with pytest.raises(CapacityError):
        coeffs.divergence_profile(0.5, 2, 100, dps=50)
    with pytest.raises(DomainError):
        coeffs.divergence_profile(-0.5, 2, dps=50)


def test_divergence_profile_matches_direct_formula():
    # the cancellation-free form agrees with 2 (2 pi)^-s alpha_n zeta(s - 2n)
    with mpmath.workdps(60):
        prof = coeffs.divergence_profile(1.5, 3, 8, dps=60)
        for n in range(9):
            c = 2 * mpmath.power(2 * mpmath.pi, -1.5) * coeffs.alpha_eval(n, 1.5, 60) \
                * mpmath.zeta(1.5 - 2 * n)
            assert abs(prof[n] - abs(c) / mpmath.mpf(3) ** (2 * n)) < mpmath.mpf(10) ** -50 * abs(c)


def test_alpha_radius_proxy():
    # the sinc power series converges for |z| < pi
    for s in (0.5, 3.0, -2.5):
        tail = [abs(coeffs.alpha_eval(n, s)) * (0.9) ** (2 * n) / math.pi ** (2 * n) for n in (40, 60)]
        assert tail[1] < tail[0] < 1


def test_table_json_roundtrip():
    data = json.loads(coeffs.table_to_json(coeffs.alpha_table(3)))
    assert data[1] == {"n": 1, "pi_power": 2, "rationals": ["0/1", "1/6"]}
