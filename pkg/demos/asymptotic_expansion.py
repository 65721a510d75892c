"""
The expansion in powers of N and its error
==========================================

Compare the truncated expansion with the direct sum and watch the error
fall like N^(-1 + Re s - 2p). The errors are far below double precision,
so both sides are evaluated with 60 digits.
"""

import mpmath
import numpy as np

from riesz_circle import energy, verify

s, p = 0.5, 2
exp = energy.asymptotic_expansion(s, p, dps=60)
print("V_s =", mpmath.nstr(exp.quadratic, 15))
for t in exp.terms:
    print(f"c_{t.n}(s) = {mpmath.nstr(t.coefficient, 15):>22}   N^{mpmath.nstr(t.exponent, 4)}")

Ns = [2 ** k for k in range(5, 12)]
errs = []
for N in Ns:
    d = energy.energy_direct(s, N, dps=60)
    errs.append(float(abs(d - exp.evaluate(N))))
slope = np.polyfit(np.log(Ns), np.log(errs), 1)[0]
print("fitted exponent", round(slope, 3), "expected", exp.remainder_order)

# At s = 1 the expansion starts with (1/pi) N^2 log N.
value, exp1 = energy.energy_asymptotic(1, 1000, 3)
for part in exp1.contributions(1000):
    print(f"{part['term']:<18} {part['value'][0]: .12e}")
print("direct", energy.energy_direct(1, 1000), "asymptotic", value)

# The same fit, packaged as a report; to_csv() is ready for plotting tools.
print(verify.fit_error_order(0.5 + 1.3j, 2).to_csv())
