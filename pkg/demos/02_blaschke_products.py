"""
Blaschke products and sequence constants
========================================

"""

import numpy as np

from diskinterp import (
    PointSequence,
    analyze,
    blaschke_eval,
    blaschke_eval_excluding,
    weak_interpolation_family,
)

# A finite Blaschke product vanishes exactly on its zero sequence and has
# modulus 1 on the unit circle.
seq = PointSequence((0.5, -0.3 + 0.4j, 0.1j), label="demo")
print("B(0)      =", blaschke_eval(seq, 0.0))
print("B(zeros)  =", np.round(np.abs(blaschke_eval(seq, seq.points)), 15))
print("|B(e^i)|  =", abs(blaschke_eval(seq, np.exp(1j))))

# Deleting the n-th factor gives B_n; its modulus at the n-th point is the
# quantity whose infimum is the Carleson constant.
print("B_0(lam_0) =", blaschke_eval_excluding(seq, 0, seq.points[0]))

# analyze() collects the standard invariants in one report.  The Carleson
# constant never exceeds the pairwise separation constant.
report = analyze(seq)
print("blaschke_sum        =", report.blaschke_sum)
print("separation_constant =", report.separation_constant)
print("carleson_constant   =", report.carleson_constant)
for index, modulus in report.per_point:
    print(f"  |B_{index}(lam_{index})| = {modulus}")

# For a sequence with carleson_constant delta > 0, the functions
# phi_n = B_n / B_n(lam_n) form a dual basis on the sequence with
# sup-norms at most 1/delta: a weak interpolating family.
family = weak_interpolation_family(seq)
values = np.array([member.eval(seq.points) for member in family])
print("phi_n(lam_k) =\n", np.round(values.real, 12))
print("family norms =", [member.norm for member in family])
