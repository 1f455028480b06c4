"""
Classifying disk maps and locating their boundary contact
=========================================================

A linear-fractional self-map of the unit disk either stays strictly
inside the disk, is an automorphism, or touches the circle at exactly
one point zeta with image eta.  The touching maps are the interesting
ones here: each comes with a companion map (its Krein adjoint) and a
positive scalar s = 1/|phi'(zeta)| that couple the two composition
operators modulo compact perturbations.
"""

import numpy as np

from tcalgebra import (
    MoebiusMap,
    boundary_contact,
    classify,
    parabolic_translation,
    rotation,
)

# The running example: phi(z) = -(1+z)/2 sends the disk onto a disk of
# radius 1/2 around -1/2, touching the circle only at z = 1.
phi = MoebiusMap(-1, -1, 0, 2)
print("phi(z) = -(1+z)/2")
print("classification:", classify(phi).kind.value)

contact = boundary_contact(phi)
print(f"contact point zeta = {contact.zeta:.6g}, image eta = {contact.eta:.6g}")
print(f"phi'(zeta) = {contact.dphi:.6g},  s = 1/|phi'(zeta)| = {contact.s:g}")

# The Krein adjoint sigma(z) = (conj(a) z - conj(c)) / (-conj(b) z + conj(d)).
sigma = phi.krein_adjoint
print("\nsigma coefficients:", sigma.coeffs())
print("sigma touches at", boundary_contact(sigma).zeta, "->", boundary_contact(sigma).eta)

# phi . sigma is always a positive parabolic map: a single boundary fixed
# point, conjugate to a right-half-plane translation by a positive number.
tau = phi.compose(sigma)
print("\ntau = phi . sigma =", tau.coeffs())
print("tau classification:", classify(tau).kind.value, "(parabolic:", classify(tau).parabolic, ")")
print("translation number:", parabolic_translation(tau))
print("translation of tau^2 (doubles):", parabolic_translation(tau.iterate(2)))

# Other outcomes of classification:
print("\nz/2            ->", classify(MoebiusMap(1, 0, 0, 2)).kind.value)
print("rotation by i  ->", classify(rotation(1j)).kind.value)
print("z + 1          ->", classify(MoebiusMap(1, 1, 0, 1)).kind.value)

# Derivative product at the contact pair: phi'(zeta) sigma'(eta) = 1.
prod = phi.derivative(contact.zeta) * sigma.derivative(contact.eta)
print("\nphi'(zeta) * sigma'(eta) =", np.round(prod, 14))
