"""
Signs and growth of the expansion coefficients
==============================================

For real s > 0 the sign of c_n(s) is the sign of zeta(s - 2n), because
alpha_n(s) > 0. The coefficients grow factorially, so the expansion is
asymptotic and not convergent; even integer s is the exception.
"""

import mpmath

from riesz_circle import coeffs, verify

for n in range(8):
    c = coeffs.c_coefficient(n, 3.5)
    print(n, f"{c.value: .6e}", "sign of zeta(s-2n):", c.sign_hint)

# |c_n(s) N^-2n| first shrinks, then explodes. 60 digits keep the large
# n values accurate.
profile = coeffs.divergence_profile(0.5, 2, 50, dps=60)
for n in (0, 5, 10, 20, 30, 40, 50):
    print(f"n={n:2d}  {mpmath.nstr(profile[n], 6)}")

print(verify.audit_divergence(0.5, 2, dps=60).to_json())
print(verify.audit_divergence(2.0, 2, dps=60).cases[0].note)
