"""
Exact energies at even integer s
================================

For s = 2, 4, 6, ... the expansion in powers of N stops after finitely
many terms, so the energy of the N-th roots of unity is a polynomial in N.
For s = -2, -4, ... it is a multiple of N^2 once N exceeds |s|/2.
"""

from fractions import Fraction

from riesz_circle import coeffs, energy

# The coefficients c_n(2M) are rational: the powers of pi in alpha_n and
# zeta(2M - 2n) cancel. Print the polynomials for s = 2, 4, 6.
for M in (1, 2, 3):
    terms = [(1 + 2 * M - 2 * n, coeffs.even_coefficient_rational(n, M)) for n in range(M + 1)]
    poly = " + ".join(f"({c}) N^{e}" for e, c in terms if c)
    print(f"L_{2 * M}(N) = {poly}")

# Check against the sine sum.
for N in (2, 3, 10, 1000):
    exact = energy.exact_even_rational(2, N)
    print(N, exact, energy.energy_direct(4, N), exact == Fraction(N * (N * N - 1) * (N * N + 11), 720))

# Negative even s: L_{-2M}(N) = binom(2M, M) N^2, valid for N > M.
for N in (2, 3, 4, 50):
    print(f"N={N:3d}  L_-4 = {energy.energy_direct(-4, N):10.4f}   6N^2 = {6 * N * N}")

# s = 0 is the logarithmic energy, -N log N.
print(energy.log_energy_direct(12), energy.energy_log(12))
