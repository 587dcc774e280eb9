"""
Pseudohyperbolic geometry of the unit disk
==========================================

"""

import numpy as np

from diskinterp import (
    mobius_transform,
    pseudo_disk_euclidean,
    pseudohyperbolic_distance,
    sample_pseudo_circle,
)

# The normalized Mobius transform b_lam is the disk automorphism sending
# lam to 0, scaled so it degenerates to the identity as lam -> 0.
lam = 0.5
print("b_lam(lam)   =", mobius_transform(lam, lam))
print("b_lam(0)     =", mobius_transform(lam, 0.0))
print("b_lam(-0.5)  =", mobius_transform(lam, -0.5))

# Its modulus on the unit circle is 1: Blaschke factors are inner.
circle = np.exp(2j * np.pi * np.linspace(0.0, 1.0, 8, endpoint=False))
print("boundary moduli:", np.round(np.abs(mobius_transform(lam, circle)), 15))

# The pseudohyperbolic distance rho(z, w) = |b_w(z)| is a Mobius-invariant
# metric, so moving both arguments by any b_mu leaves it unchanged.
z, w = 0.3 + 0.2j, -0.1 + 0.6j
mu = 0.4 - 0.3j
d = pseudohyperbolic_distance(z, w)
d_moved = pseudohyperbolic_distance(
    mobius_transform(mu, z), mobius_transform(mu, w)
)
print("rho(z, w)              =", d)
print("rho(b_mu z, b_mu w)    =", d_moved)

# The pseudohyperbolic disk D(lam, delta) is an ordinary Euclidean disk
# with its center pulled toward the origin.
disk = pseudo_disk_euclidean(0.5, 0.5)
print("D(0.5, 0.5) center =", disk.euclid_center, " radius =", disk.euclid_radius)

# Points sampled on its boundary circle sit at pseudohyperbolic distance
# exactly delta from lam.
samples = sample_pseudo_circle(0.5, 0.5, 4)
print("distances of boundary samples:",
      pseudohyperbolic_distance(samples, 0.5))
