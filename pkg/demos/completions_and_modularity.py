"""Numeric side: completions, the indefinite-theta route, and the
weight-1/2 transformation law.

The holomorphic components transform modularly only after adding the
Eichler integral of the shadow (scaled by 1/sqrt(60)).  For the order-2
class the same completion also arises as a quotient of an indefinite
theta function by eta(2 tau), giving a genuinely independent route.
"""

import numpy as np

from e8umbral import (CLASSES, completion_value, indefinite_theta,
                      multiplier_matrix, tau1_identity_check,
                      transform_check)
from e8umbral.maass import order2_theta_data

tau = 0.1 + 0.8j

print("completed components at tau =", tau)
for name in ("1A", "2A", "3A"):
    for r in (1, 7):
        v = completion_value(CLASSES[name], r, tau, 1e-9)
        print(f"  H^hat[{name}, r={r}] = {v:.10f}")

print()
print("indefinite-theta route (order-2 class):")
for r in (1, 7):
    data = order2_theta_data(r)
    th = indefinite_theta(data, tau, 1e-10)
    res = tau1_identity_check(tau, r, 1e-8)
    print(f"  r={r}: theta = {th:.8f},  completion-identity residual "
          f"= {res:.2e}")

print()
print("transformation residuals of the completed 2-vector:")
gens = {"1A": (((1, 1), (0, 1)), ((0, -1), (1, 0))),
        "2A": (((1, 1), (0, 1)), ((1, 0), (2, 1))),
        "3A": (((1, 1), (0, 1)), ((1, 0), (3, 1)))}
for name, pair in gens.items():
    for gamma in pair:
        res = transform_check(CLASSES[name], gamma, 0.2 + 1.1j, 1e-8)
        print(f"  {name} under {gamma}: {res:.2e}")

print()
print("multiplier matrix of S (printed sine matrix, unitary):")
print(np.round(multiplier_matrix(((0, -1), (1, 0))), 6))
