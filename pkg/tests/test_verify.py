import json

import numpy as np
import pytest

from riesz_circle import configurations, verify
from riesz_circle.errors import ConfigurationError, DomainError


def test_series_cases_cover_regimes():
    assert len(verify.SERIES_CASES) == 30
    real = [s for s, _, _ in verify.SERIES_CASES if isinstance(s, float)]
    checks = [
        any(s < -2 for s in real),
        -2.0 in real,
        any(-2 < s < 0 for s in real),
        any(0 < s < 1 for s in real),
        1.0 in real,
        any(s > 1 and not s.is_integer() for s in real),
        any(s > 0 and s.is_integer() and s % 2 == 0 for s in real),
        any(s >= 3 and s.is_integer() and s % 2 == 1 for s in real),
        any(isinstance(s, complex) for s, _, _ in verify.SERIES_CASES),
    ]
    assert all(checks)


def test_closed_forms_small_grid():
    cases = verify.closed_form_cases(N_max=60)
    assert all(c.passed for c in cases), [c for c in cases if not c.passed]


def test_log_energy_cases():
    assert all(c.passed for c in verify.log_energy_cases(Ns=[2, 3, 50, 2000]))


def test_v_form_cases_deterministic():
    a = verify.v_form_cases(seed=5, count=10)
    b = verify.v_form_cases(seed=5, count=10)
    assert [c.inputs for c in a] == [c.inputs for c in b]
    assert all(c.passed for c in a)


def test_compare_modes():
    assert verify.compare("x", {}, 1.0, 1.0 + 1e-13, 1e-12).passed
    assert not verify.compare("x", {}, 1.0, 1.1, 1e-12).passed
    assert verify.compare("x", {}, 0.0, 1e-15, 1e-14, mode="abs").passed


def test_report_json_is_sorted_and_stable():
    rep = verify.VerificationReport("signs", seed=3)
    rep.cases.append(verify.compare("x", {"s": 0.5 + 1j}, 1.0, 1.0, 1e-12))
    text = rep.to_json()
    assert text == rep.to_json()
    data = json.loads(text)
    assert data["cases"][0]["inputs"]["s"] == [0.5, 1.0]
    assert data["summary"] == {"failed": 0, "passed": 1, "total": 1}


@pytest.mark.parametrize("s,p,expected", [(0.5, 3, -6.5), (1.0, 2, -4.0), (0.5 + 1.3j, 2, -4.5)])
def test_fit_error_order(s, p, expected):
    fit = verify.fit_error_order(s, p)
    assert fit.expected_slope == expected
    assert fit.passed, fit
    assert all(e > 0 for e in fit.errors)


def test_fit_terminating_marked_exact():
    fit = verify.fit_error_order(4.0, 2)
    assert fit.terminating and fit.passed and fit.fitted_slope is None


def test_fit_requires_increasing_grid():
    with pytest.raises(DomainError):
        verify.fit_error_order(0.5, 1, [256, 128])


def test_slope_csv():
    fit = verify.fit_error_order(0.5, 1, [128, 256, 512])
    lines = fit.to_csv().splitlines()
    assert lines[0] == "N,err,predicted_order"
    assert len(lines) == 4 and lines[1].startswith("128,")


def test_audit_signs():
    rep = verify.audit_signs(3.0, 10)
    assert rep.passed
    assert any("exceptional" in n for n in rep.notes)
    n2 = [c for c in rep.cases if c.inputs["n"] == 2][0]
    assert n2.got == -1
    rep = verify.audit_signs(0.5, 10)
    assert rep.passed and rep.cases[0].got == -1


def test_audit_signs_rejects_even():
    with pytest.raises(DomainError):
        verify.audit_signs(6.0, 10)


def test_audit_divergence():
    assert verify.audit_divergence(0.5, 2, 60).passed
    assert verify.audit_divergence(1.5, 3, 60).passed
    rep = verify.audit_divergence(2.0, 2, 60)
    assert rep.passed and "terminating" in rep.cases[0].note
    with pytest.raises(ConfigurationError):
        verify.audit_divergence(0.5, 2)


def test_audit_optimality():
    assert verify.audit_optimality(1.0, 20, 200, 1e-3, seed=1).passed
    assert verify.audit_optimality(-1.0, 20, 200, 1e-3, seed=1).passed
    rep = verify.audit_optimality(-3.0, 4)
    assert rep.passed
    assert rep.cases[0].got == 64.0
    assert rep.cases[0].expected == pytest.approx(54.6274, abs=1e-3)
    rep = verify.audit_optimality(-2.0, 20)
    assert rep.cases == [] and rep.notes


def test_audit_optimality_detects_non_optimal(monkeypatch):
    # a distorted baseline: perturbed equispaced points have lower s = 1
    # energy than it, and the audit has to report that
    bad = np.exp(1j * (2 * np.pi * np.arange(20) / 20 + 0.05 * np.sin(np.arange(20))))
    monkeypatch.setattr(configurations, "roots_of_unity", lambda N: bad)
    rep = verify.audit_optimality(1.0, 20, 200, 1e-2, seed=2)
    assert not rep.passed
    assert rep.cases[0].got > 0


def test_audit_optimality_preconditions():
    with pytest.raises(DomainError):
        verify.audit_optimality(1.0, 2)
    with pytest.raises(DomainError):
        verify.audit_optimality(1.0, 20, scale=0.1)
    with pytest.raises(DomainError):
        verify.audit_optimality(1 + 1j, 20)
