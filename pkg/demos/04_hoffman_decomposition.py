"""
Power-law comparable factorizations of a Blaschke product
=========================================================

"""

import numpy as np

from diskinterp import (
    blaschke_log_modulus,
    corresponding_decomposition,
    exclusion_grid,
    generate_radial,
    separation_constant,
)

# A radial geometric sequence marching toward the boundary.
seq = generate_radial(0.5, 6)
delta0 = separation_constant(seq)
print("points     =", np.round(seq.points.real, 6))
print("separation =", delta0)

# Split the zeros into two groups so that, away from small disks around
# the zeros, each factor controls the other through a power law:
#   a |B_0|^b <= |B_1| <= (|B_0| / a)^(1/b).
# The split is searched, with delta = delta0 / 2 defining "away from".
dec = corresponding_decomposition(seq)
print("part0 =", dec.part0, " part1 =", dec.part1)
print("fitted a =", dec.fitted_a)
print("fitted b =", dec.fitted_b)
print("tightest grid point =", dec.worst_point)

# The fit is certified on the exclusion grid: every retained point
# satisfies both inequalities with the returned constants.
grid = exclusion_grid(seq, dec.delta, dec.fit_grid_resolution)
L0 = blaschke_log_modulus(dec.part_sequence(0), grid.points)
L1 = blaschke_log_modulus(dec.part_sequence(1), grid.points)
lower = np.all(dec.fitted_a <= np.exp(L1 - L0 / dec.fitted_b))
upper = np.all(dec.fitted_a <= np.exp(dec.fitted_b * L0 - L1))
print(f"grid: {len(grid)} points, lower holds: {lower}, upper holds: {upper}")
