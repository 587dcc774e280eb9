"""
Zero/one data stays easy while interpolation breaks down
========================================================

"""

from diskinterp import (
    CounterexampleSpec,
    carleson_constant,
    generate_counterexample,
    min_norm,
    separation_constant,
    zero_one_problem,
)

# Two interlaced radial sequences with in-pair pseudohyperbolic distance
# gap: each pair {mu_n, mu_n'} is nearly a double zero.  Splitting whole
# pairs by parity keeps both halves separated internally, so the zero/one
# interpolation data (0 on even pairs, 1 on odd pairs) stays solvable at
# modest norm.  The union, however, has separation <= gap: it cannot be
# an interpolating sequence uniformly in gap.
print(f"{'gap':>8} {'separation':>12} {'carleson':>12} {'zero/one norm':>14}")
for gap in (0.1, 0.01, 0.001):
    spec = CounterexampleSpec(num_pairs=4, gap=gap, base_radial_ratio=0.5)
    seq, dec = generate_counterexample(spec)
    norm = min_norm(zero_one_problem(dec))
    print(f"{gap:>8} {separation_constant(seq):>12.3e} "
          f"{carleson_constant(seq):>12.3e} {norm:>14.6f}")

# The sequence constants collapse with gap while the zero/one norm stays
# bounded: one bounded interpolant exists for the split data even though
# the full sequence is arbitrarily far from satisfying the Carleson
# condition.  This is exactly why the equivalence needs the separation
# hypothesis.
